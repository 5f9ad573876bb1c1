#include "selfcq/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "selfcq/error.hpp"
#include "selfcq/io.hpp"
#include "selfcq/lemmas.hpp"
#include "selfcq/reduction.hpp"
#include "selfcq/witness.hpp"

namespace selfcq {

namespace {

std::string quoted(const std::string& s) {
    std::ostringstream os;
    os << std::quoted(s);
    return os.str();
}

Configuration parse_config_flag(const Atm& atm, const std::string& text) {
    // state:tape:head
    const auto a = text.find(':');
    const auto b = text.rfind(':');
    if (a == std::string::npos || a == b) throw ParseError("--config expects state:tape:head");
    Configuration cfg;
    cfg.state = text.substr(0, a);
    cfg.tape = text.substr(a + 1, b - a - 1);
    try {
        cfg.head = std::stoul(text.substr(b + 1));
    } catch (const std::exception&) {
        throw ParseError("--config head is not a number");
    }
    check_configuration(atm, cfg);
    return cfg;
}

std::pair<NodePath, std::size_t> parse_fault_flag(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw ParseError("--fault expects node,cell");
    const NodePath node = text.substr(0, comma);
    for (char c : node)
        if (c != '0' && c != '1') throw ParseError("--fault node must be a word over 0/1");
    try {
        return {node, std::stoul(text.substr(comma + 1))};
    } catch (const std::exception&) {
        throw ParseError("--fault cell is not a number");
    }
}

struct Options {
    std::string atm, out, out_kb, out_query, format = "dltext", kind, fault, config, interp, kb, query;
    bool tbox_only = false, exists = false;
    int n = 0;
};

int cmd_oracle(const Options& o, std::ostream& out) {
    const bool acc = is_accepting_oracle(parse_atm(read_file(o.atm)));
    out << (acc ? "accepting" : "rejecting") << "\n";
    return acc ? 0 : 1;
}

int cmd_compile(const Options& o, std::ostream& out) {
    const auto bundle = reduce(parse_atm(read_file(o.atm)), o.tbox_only);
    write_file(o.out_kb, emit_kb(bundle.kb, o.format == "owlfs" ? KbFormat::owlfs : KbFormat::dltext));
    write_file(o.out_query, emit_cq(bundle.query));
    out << "fingerprint=" << bundle.fingerprint << "\n";
    for (const auto& [k, v] : bundle.stats) out << k << "=" << v << "\n";
    return 0;
}

int cmd_witness(const Options& o, std::ostream& out) {
    Interpretation result;
    if (o.kind == "unit") {
        int n = o.n;
        if (n == 0) {
            if (o.atm.empty()) throw ParseError("witness --kind unit needs --n or --atm");
            n = parse_atm(read_file(o.atm)).n() + 1;
        }
        result = build_unit(n);
    } else {
        if (o.atm.empty()) throw ParseError("witness --kind " + o.kind + " needs --atm");
        const Atm atm = parse_atm(read_file(o.atm));
        if (o.kind == "conf") {
            result = build_config_tree(atm, o.config.empty() ? initial_configuration(atm) : parse_config_flag(atm, o.config));
        } else if (o.kind == "enr") {
            result = build_enriched_tree(atm, initial_configuration(atm), Origin::init());
        } else {
            auto run = find_accepting_run(atm);
            if (!run) throw PreconditionError("the machine is rejecting; no quasi-computation tree to build");
            if (!o.fault.empty()) {
                const auto [node, cell] = parse_fault_flag(o.fault);
                *run = inject_tape_fault(atm, *run, node, cell);
            }
            result = build_quasi_computation_tree(atm, *run);
            if (o.tbox_only) add_aux_edges(result, qct_element("", ""));
        }
    }
    write_file(o.out, emit_interp(result));
    out << "elements=" << result.size() << "\n";
    return 0;
}

int cmd_check(const Options& o, std::ostream& out) {
    const auto report = check_kb(parse_interp(read_file(o.interp)), parse_kb(read_file(o.kb)));
    std::size_t failing = 0;
    for (const auto& v : report.verdicts) {
        const std::string label = v.label.empty() ? "-" : v.label;
        if (!v.error.empty()) {
            out << "error " << label << " " << quoted(v.error) << "\n";
        } else if (v.holds) {
            out << "ok " << label << "\n";
            continue;
        } else {
            out << "fail " << label << " witness=" << quoted(v.witness.value_or("")) << "\n";
        }
        ++failing;
    }
    out << "axioms=" << report.verdicts.size() << " failing=" << failing << "\n";
    return failing == 0 ? 0 : 1;
}

int cmd_eval(const Options& o, std::ostream& out) {
    const Interpretation interp = parse_interp(read_file(o.interp));
    const Cq q = parse_cq(read_file(o.query));
    if (o.exists) {
        const bool found = exists_match(interp, q);
        out << (found ? "true" : "false") << "\n";
        return found ? 0 : 1;
    }
    const auto answers = find_matches(interp, q);
    for (const auto& tuple : answers) {
        if (tuple.empty()) out << "()";
        for (std::size_t i = 0; i < tuple.size(); ++i) out << (i ? "\t" : "") << quoted(tuple[i]);
        out << "\n";
    }
    return answers.empty() ? 1 : 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    LemmaOptions opt;
    if (o.n != 0) opt.max_unit_depth = o.n;
    if (!o.atm.empty()) opt.atm = parse_atm(read_file(o.atm));
    bool ok = true;
    double total = 0;
    for (const auto& r : verify_all(opt)) {
        out << r.id << "\t" << r.name << "\t" << to_string(r.verdict) << "\t" << r.detail << "\n";
        ok = ok && r.verdict != Verdict::fail;
        total += r.seconds;
    }
    err << "verify-lemmas took " << std::fixed << std::setprecision(2) << total << "s\n";
    return ok ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reduction compiler and lemma checker for ALCself conjunctive query entailment", "selfcq"};
    app.require_subcommand(1);
    Options o;

    auto* oracle = app.add_subcommand("oracle", "decide acceptance of a machine (exit 0 accepting, 1 rejecting)");
    oracle->add_option("--atm", o.atm, "machine file (.atm.json)")->required();

    auto* compile = app.add_subcommand("compile", "write the knowledge base and query of a machine");
    compile->add_option("--atm", o.atm, "machine file")->required();
    compile->add_option("--out-kb", o.out_kb, "knowledge base output")->required();
    compile->add_option("--out-query", o.out_query, "query output")->required();
    compile->add_flag("--tbox-only", o.tbox_only, "replace the ABox by a GCI over the role aux");
    compile->add_option("--format", o.format, "knowledge base format")->check(CLI::IsMember({"dltext", "owlfs"}));

    auto* witness = app.add_subcommand("witness", "write an intended model as an interpretation");
    witness->add_option("--atm", o.atm, "machine file");
    witness->add_option("--kind", o.kind, "unit, conf, enr or qct")
        ->required()
        ->check(CLI::IsMember({"unit", "conf", "enr", "qct"}));
    witness->add_option("--out", o.out, "interpretation output")->required();
    witness->add_option("--fault", o.fault, "qct only: flip cell of run node, as node,cell");
    witness->add_option("--config", o.config, "conf only: state:tape:head (default initial)");
    witness->add_option("--n", o.n, "unit only: depth (default N+1)")->check(CLI::Range(1, 12));
    witness->add_flag("--tbox-only", o.tbox_only, "qct only: add aux edges to the global root");

    auto* check = app.add_subcommand("check", "check an interpretation against a knowledge base");
    check->add_option("--interp", o.interp, "interpretation file")->required();
    check->add_option("--kb", o.kb, "knowledge base file (dltext)")->required();

    auto* eval = app.add_subcommand("eval", "evaluate a query over an interpretation");
    eval->add_option("--interp", o.interp, "interpretation file")->required();
    eval->add_option("--query", o.query, "query file")->required();
    eval->add_flag("--exists", o.exists, "only report whether a match exists");

    auto* verify = app.add_subcommand("verify-lemmas", "run the lemma suites");
    verify->add_option("--n", o.n, "largest unit depth")->check(CLI::Range(1, 6));
    verify->add_option("--atm", o.atm, "machine for the machine-dependent suites");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "selfcq: " << e.what() << "\n";
        return 2;
    }
    if ((o.kind != "qct") && (!o.fault.empty() || o.tbox_only) && witness->parsed()) {
        err << "selfcq: --fault and --tbox-only apply to --kind qct only\n";
        return 2;
    }

    try {
        if (oracle->parsed()) return cmd_oracle(o, out);
        if (compile->parsed()) return cmd_compile(o, out);
        if (witness->parsed()) return cmd_witness(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (eval->parsed()) return cmd_eval(o, out);
        return cmd_verify(o, out, err);
    } catch (const BudgetExceeded& e) {
        err << "selfcq: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "selfcq: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace selfcq
