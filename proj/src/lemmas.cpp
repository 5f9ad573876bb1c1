#include "selfcq/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "selfcq/cq.hpp"
#include "selfcq/error.hpp"
#include "selfcq/io.hpp"
#include "selfcq/random.hpp"
#include "selfcq/reduction.hpp"
#include "selfcq/witness.hpp"

namespace selfcq {

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::skipped: return "skipped";
    }
    return "?";
}

std::vector<std::string> failing_schemas(const std::vector<std::string>& labels) {
    std::set<std::string> out;
    for (const auto& l : labels) out.insert(parse_label(l).schema);
    return {out.begin(), out.end()};
}

std::size_t expected_kb_size(const Atm& atm, int N) {
    const std::size_t n = static_cast<std::size_t>(N) + 1;
    const std::size_t Q = atm.states().size();
    const std::size_t T = atm.delta().size();
    std::size_t E = 0, U = 0;
    for (const auto& s : atm.states()) {
        if (atm.is_final(s)) continue;
        (atm.is_existential(s) ? E : U) += 1;
    }
    const std::size_t NN = static_cast<std::size_t>(N);
    const std::size_t unit = 6 + 3 * n * (n + 1) / 2 + 7 * n;
    const std::size_t conf = 20 + Q * (Q - 1) / 2 + 5 * NN;
    const std::size_t enr = 18 + 2 * T + T * (T - 1) / 2 + 5 * NN;
    const std::size_t machine = 3 * E + 5 * U + 3 + 2 * NN;
    return unit + conf + enr + machine + 1;
}

std::size_t expected_query_atoms(int N) {
    const std::size_t n = static_cast<std::size_t>(N);
    return 12 * n * n + 26 * n + 19;
}

namespace {

using Clock = std::chrono::steady_clock;
using Pairs = std::set<AnswerTuple>;

// Collects failures of one suite; the first few are kept for the report.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (notes_.size() < 3) notes_.push_back(what);
    }

    SuiteResult finish(int id, std::string name, Clock::time_point start, const std::string& summary) const {
        SuiteResult r;
        r.id = id;
        r.name = std::move(name);
        r.verdict = failures_ == 0 ? Verdict::pass : Verdict::fail;
        std::ostringstream os;
        os << checks_ << " checks";
        if (!summary.empty()) os << ", " << summary;
        if (failures_ != 0) {
            os << "; " << failures_ << " failed:";
            for (const auto& n : notes_) os << " [" << n << "]";
        }
        r.detail = os.str();
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return r;
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::vector<std::string> notes_;
};

SuiteResult skipped(int id, std::string name, std::string why) {
    SuiteResult r;
    r.id = id;
    r.name = std::move(name);
    r.verdict = Verdict::skipped;
    r.detail = std::move(why);
    return r;
}

Atm machine_of(const LemmaOptions& opt) { return opt.atm ? *opt.atm : make_m_acc(1); }

std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const auto& s : v) out += (out.empty() ? "" : ",") + s;
    return "{" + out + "}";
}

std::vector<std::string> words(int k) {
    std::vector<std::string> out{""};
    for (int i = 0; i < k; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            next.push_back(w + '0');
            next.push_back(w + '1');
        }
        out = std::move(next);
    }
    return out;
}

std::set<Element> image(const Interpretation& I, const std::set<Element>& from, const std::string& role) {
    std::set<Element> out;
    for (const auto& [a, b] : I.relation(role))
        if (from.count(a)) out.insert(b);
    return out;
}

std::vector<Configuration> all_configurations(const Atm& atm) {
    std::vector<Configuration> out;
    const std::size_t len = atm.tape_length();
    for (const auto& s : atm.states())
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            std::string tape(len, '0');
            for (std::size_t c = 0; c < len; ++c) tape[c] = (bits >> c) & 1 ? '1' : '0';
            for (std::size_t h = 0; h < len; ++h) out.push_back({tape, s, h});
        }
    return out;
}

KnowledgeBase tbox_only(std::vector<Gci> gcis) {
    KnowledgeBase kb;
    kb.tbox = std::move(gcis);
    return kb;
}

std::vector<std::string> failing_schemas_of(const Interpretation& I, const KnowledgeBase& kb) {
    return failing_schemas(check_kb(I, kb).failing());
}

Origin origin_of(const Atm& atm, const RunTree& run, const NodePath& p) {
    if (p.empty()) return Origin::init();
    const RunNode& parent = run.at(p.substr(0, p.size() - 1));
    const Branch b = *run.at(p).tag;
    return Origin::via(atm.delta_at(parent.config.state, parent.config.letter() - '0', b), b);
}

}  // namespace

SuiteResult verify_units(const LemmaOptions& opt) {
    const auto start = Clock::now();
    Tally t;
    for (int n = 1; n <= opt.max_unit_depth; ++n) {
        const Interpretation U = build_unit(n);
        const auto report = check_kb(U, tbox_only(build_kb_unit(n)));
        t.check(report.all_hold(), "unit " + std::to_string(n) + " fails " + join(report.failing()));

        Pairs expected;
        for (const auto& w : words(n)) expected.insert({"", w});
        t.check(find_matches(U, build_query_rl(n)) == expected, "q_rl match set at n=" + std::to_string(n));

        std::set<Element> reach{""};
        for (int i = 1; i <= n; ++i) reach = image(U, image(U, reach, sym::ell(i)), sym::r(i));
        t.check(reach == U.domain() && reach.size() == (std::size_t{2} << n) - 1,
                "composition from the root at n=" + std::to_string(n));
    }
    return t.finish(1, "unit", start, "n=1.." + std::to_string(opt.max_unit_depth));
}

SuiteResult verify_config_trees(const LemmaOptions& opt) {
    const auto start = Clock::now();
    const Atm atm = machine_of(opt);
    const int N = atm.n();
    Tally t;
    const auto kb = tbox_only(build_kb_conf(atm));
    std::size_t trees = 0;
    for (const auto& cfg : all_configurations(atm)) {
        const auto report = check_kb(build_config_tree(atm, cfg), kb);
        t.check(report.all_hold(), "tree for " + cfg.state + "/" + cfg.tape + " fails " + join(report.failing()));
        ++trees;
    }

    // Mutations of the initial configuration tree.
    const Interpretation base = build_config_tree(atm, initial_configuration(atm));
    const std::string head = cell_address(0, N);
    const std::string other = cell_address(1, N);
    struct Mutation {
        std::string what;
        std::function<void(Interpretation&)> apply;
        std::vector<std::string> expected;
    };
    const std::vector<Mutation> mutations{
        {"drop state", [&](Interpretation& I) { I.remove_concept(sym::st(atm.initial()), ""); }, {"StCov"}},
        {"drop letter", [&](Interpretation& I) { I.remove_concept(sym::let(0), other); }, {"LetConCov"}},
        {"drop zz0", [&](Interpretation& I) { I.remove_concept(sym::zz(0), head + "0"); }, {"EncLetZero", "LetCov"}},
        {"drop HdHere", [&](Interpretation& I) { I.remove_concept(sym::hd_here, head); },
         {"HdHereCov", "HdHereEqualAdr"}},
        {"drop HdPos", [&](Interpretation& I) { I.remove_concept(sym::hd_pos(1, 0), head); },
         {"HdPosCov", "PropHdPos"}},
        {"drop HdLet", [&](Interpretation& I) { I.remove_concept(sym::hd_let(0), ""); }, {"HdLetCov", "RetrHdLet"}},
        {"drop leaf loop", [&](Interpretation& I) { I.remove_role(sym::next, head + "0", head + "0"); },
         {"leaves-next-loop"}},
    };
    for (const auto& m : mutations) {
        Interpretation I = base;
        m.apply(I);
        const auto got = failing_schemas_of(I, kb);
        t.check(got == m.expected, m.what + ": expected " + join(m.expected) + ", got " + join(got));
    }
    return t.finish(2, "configuration-tree", start,
                    std::to_string(trees) + " trees, " + std::to_string(mutations.size()) + " mutations");
}

SuiteResult verify_enriched_trees(const LemmaOptions& opt) {
    const auto start = Clock::now();
    const Atm atm = machine_of(opt);
    const auto run = find_accepting_run(atm);
    if (!run) return skipped(3, "enriched-tree", "machine is rejecting, no run to draw trees from");
    const int N = atm.n();
    Tally t;
    const auto kb = tbox_only(build_kb_enr(atm));
    std::size_t trees = 0;
    for (const auto& p : run->paths()) {
        const RunNode& node = run->at(p);
        const Origin origin = origin_of(atm, *run, p);
        const Interpretation E = build_enriched_tree(atm, node.config, origin);
        const auto report = check_kb(E, kb);
        t.check(report.all_hold(), "tree at '" + p + "' fails " + join(report.failing()));
        ++trees;
        if (!origin.transition) continue;

        const Transition& tr = *origin.transition;
        t.check(eval_concept(E, increment_gadget(N, tr.move)).count("") == 1,
                "increment gadget false at the root of '" + p + "'");

        const std::size_t phd = static_cast<std::size_t>(static_cast<long long>(node.config.head) - tr.move);
        const std::size_t off = phd + 1 < atm.tape_length() ? phd + 1 : phd - 1;
        Interpretation bad;
        add_enriched_tree(bad, atm, node.config, tr, off, origin.branch == Branch::first, "");
        const auto got = failing_schemas_of(bad, kb);
        t.check(got == std::vector<std::string>{"TransiCons"}, "off-by-one at '" + p + "' fails " + join(got));
    }
    return t.finish(3, "enriched-tree", start, std::to_string(trees) + " trees");
}

namespace {

// Witness shapes whose homomorphic image is claimed at every root.
enum class Shape { unit, conf, enr };

std::vector<Interpretation> candidate_witnesses(const Atm& atm, const Interpretation& I, const Element& d, int depth,
                                                Shape shape) {
    const bool left = I.in_concept(sym::L, d);
    std::vector<Interpretation> out;
    if (shape == Shape::unit) {
        out.push_back(build_unit(depth, left));
        return out;
    }
    const int N = atm.n();
    std::vector<StateId> states;
    for (const auto& s : atm.states())
        if (I.in_concept(sym::st(s), d)) states.push_back(s);
    auto address_at = [&](auto family) -> std::optional<std::size_t> {
        std::size_t cell = 0;
        for (int i = 1; i <= N; ++i) {
            const bool zero = I.in_concept(family(i, 0), d), one = I.in_concept(family(i, 1), d);
            if (zero == one) return std::nullopt;
            cell = cell * 2 + (one ? 1 : 0);
        }
        return cell;
    };
    const auto head = address_at(sym::hd_pos);
    if (!head) return out;
    std::vector<std::optional<Transition>> origins;
    std::optional<std::size_t> phd;
    if (shape == Shape::enr) {
        phd = address_at(sym::phd_pos);
        if (!phd) return out;
        if (I.in_concept(sym::init, d)) origins.push_back(std::nullopt);
        for (const auto& tr : atm.delta())
            if (I.in_concept(sym::pr_tr(tr), d)) origins.push_back(tr);
    }
    const std::size_t len = atm.tape_length();
    for (const auto& s : states)
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            Configuration cfg{std::string(len, '0'), s, *head};
            for (std::size_t c = 0; c < len; ++c) cfg.tape[c] = (bits >> c) & 1 ? '1' : '0';
            if (shape == Shape::conf) {
                out.push_back(build_config_tree(atm, cfg, left));
                continue;
            }
            for (const auto& o : origins) {
                Interpretation e;
                add_enriched_tree(e, atm, cfg, o, *phd, left, "");
                out.push_back(std::move(e));
            }
        }
    return out;
}

bool some_homomorphism(const std::vector<Interpretation>& witnesses, const Interpretation& I, const Element& d) {
    for (const auto& w : witnesses)
        if (find_homomorphism(w, I, {{"", d}})) return true;
    return false;
}

void pad(Interpretation& I, Rng& rng) {
    std::vector<std::string> concepts, roles;
    for (const auto& [c, ext] : I.concepts()) concepts.push_back(c);
    for (const auto& [r, rel] : I.roles()) roles.push_back(r);
    std::vector<Element> dom(I.domain().begin(), I.domain().end());
    const int junk = std::uniform_int_distribution<int>(1, 3)(rng);
    auto any = [&](const auto& v) { return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)]; };
    for (int k = 0; k < junk; ++k) {
        const Element e = "junk" + std::to_string(k);
        I.add_element(e);
        if (!concepts.empty()) I.add_concept(any(concepts), e);
        if (!roles.empty()) {
            I.add_role(any(roles), e, any(dom));
            I.add_role(any(roles), any(dom), e);
        }
    }
}

}  // namespace

SuiteResult verify_homomorphisms(const LemmaOptions& opt) {
    const auto start = Clock::now();
    const Atm atm = machine_of(opt);
    const int N = atm.n();
    Rng rng(opt.seed);
    Tally t;

    struct Subject {
        std::string name;
        Interpretation I;
        int depth;
        std::vector<Shape> shapes;
    };
    std::vector<Subject> subjects;
    for (int n = 1; n <= opt.max_unit_depth; ++n) subjects.push_back({"unit" + std::to_string(n), build_unit(n), n, {Shape::unit}});
    const Configuration init = initial_configuration(atm);
    subjects.push_back({"conf", build_config_tree(atm, init), N + 1, {Shape::unit, Shape::conf}});
    subjects.push_back({"enr", build_enriched_tree(atm, init, Origin::init()), N + 1,
                        {Shape::unit, Shape::conf, Shape::enr}});
    if (auto run = find_accepting_run(atm))
        subjects.push_back({"qct", build_quasi_computation_tree(atm, *run), N + 1,
                            {Shape::unit, Shape::conf, Shape::enr}});

    std::size_t searches = 0;
    for (const auto& s : subjects) {
        Interpretation padded = s.I;
        pad(padded, rng);
        for (const auto& d : s.I.extension(sym::lvl(0))) {
            for (Shape shape : s.shapes) {
                const auto ws = candidate_witnesses(atm, s.I, d, s.depth, shape);
                const std::string where = s.name + " at '" + d + "' shape " + std::to_string(static_cast<int>(shape));
                t.check(some_homomorphism(ws, s.I, d), "no homomorphism into " + where);
                t.check(some_homomorphism(ws, padded, d), "no homomorphism into padded " + where);
                searches += 2;
            }
            // Without its ell_1 children the root has no image for address 0.
            Interpretation broken = s.I;
            for (const auto& [a, b] : s.I.relation(sym::ell(1)))
                if (a == d && b != d) broken.remove_role(sym::ell(1), a, b);
            t.check(!some_homomorphism(candidate_witnesses(atm, broken, d, s.depth, Shape::unit), broken, d),
                    "homomorphism survived removal of ell_1 successors in " + s.name);
            ++searches;
        }
    }
    return t.finish(4, "homomorphism", start,
                    std::to_string(subjects.size()) + " structures, " + std::to_string(searches) + " searches");
}

namespace {

struct QctLayout {
    std::vector<std::pair<NodePath, NodePath>> edges;  // parent, child
    std::vector<NodePath> nodes;
    std::vector<std::string> leaves;  // leaf addresses
};

QctLayout layout(const RunTree& run, int N) {
    QctLayout out;
    out.nodes = run.paths();
    for (const auto& p : out.nodes)
        if (!p.empty()) out.edges.emplace_back(p.substr(0, p.size() - 1), p);
    out.leaves = words(N + 1);
    return out;
}

Pairs consecutive_leaf_pairs(const QctLayout& L, const std::function<bool(const std::string&, const std::string&)>& keep) {
    Pairs out;
    for (const auto& [p, c] : L.edges)
        for (const auto& u : L.leaves)
            for (const auto& v : L.leaves)
                if (keep(u, v)) out.insert({qct_element(p, u), qct_element(c, v)});
    return out;
}

Pairs compose(const Pairs& a, const Pairs& b) {
    std::multimap<Element, Element> by_first;
    for (const auto& t : b) by_first.emplace(t[0], t[1]);
    Pairs out;
    for (const auto& t : a) {
        auto [lo, hi] = by_first.equal_range(t[1]);
        for (auto it = lo; it != hi; ++it) out.insert({t[0], it->second});
    }
    return out;
}

Pairs intersect(const Pairs& a, const Pairs& b) {
    Pairs out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
    return out;
}

}  // namespace

SuiteResult verify_match_sets(const LemmaOptions& opt) {
    const auto start = Clock::now();
    const Atm atm = machine_of(opt);
    const auto run = find_accepting_run(atm);
    if (!run) return skipped(5, "match-set", "machine is rejecting, no quasi-computation tree");
    const int N = atm.n();
    const Interpretation Q = build_quasi_computation_tree(atm, *run);
    const QctLayout L = layout(*run, N);
    Tally t;

    const Pairs main = find_matches(Q, build_query_main(N));
    const Pairs main_expected = consecutive_leaf_pairs(L, [](auto&, auto&) { return true; });
    t.check(main == main_expected, "q_main");

    Pairs identity;
    for (const auto& p : L.nodes)
        for (const auto& w : L.leaves) identity.insert({qct_element(p, w), qct_element(p, w)});

    for (int i = 1; i <= N + 1; ++i) {
        std::map<int, Pairs> bit;
        for (int b = 0; b < 2; ++b) {
            bit[b] = find_matches(Q, build_query_ith_bit(i, b, N));
            Pairs expected = identity;
            const char c = static_cast<char>('0' + b);
            const auto m2 = consecutive_leaf_pairs(L, [&](const std::string& u, const std::string& v) {
                return u[static_cast<std::size_t>(i - 1)] == c && v[static_cast<std::size_t>(i - 1)] == c;
            });
            expected.insert(m2.begin(), m2.end());
            t.check(bit[b] == expected, "q_" + std::to_string(i) + "^" + std::to_string(b));
        }
        const Pairs addr = find_matches(Q, build_query_addr(i, N));
        const auto addr_expected = consecutive_leaf_pairs(L, [&](const std::string& u, const std::string& v) {
            return u[static_cast<std::size_t>(i - 1)] == v[static_cast<std::size_t>(i - 1)];
        });
        t.check(addr == addr_expected, "q_addr_" + std::to_string(i));
        t.check(addr == intersect(main, compose(bit[0], bit[1])), "relational identity for q_addr_" + std::to_string(i));
    }
    return t.finish(5, "match-set", start, std::to_string(main.size()) + " q_main pairs");
}

SuiteResult verify_dichotomy(const LemmaOptions& opt) {
    const auto start = Clock::now();
    const Atm atm = machine_of(opt);
    const int N = atm.n();
    Tally t;

    // Oracle and run search agree; the reference machines behave as expected.
    const bool accepting = is_accepting_oracle(atm);
    const auto run = find_accepting_run(atm);
    t.check(accepting == run.has_value(), "oracle and run search disagree");
    t.check(is_accepting_oracle(make_m_acc(1)), "M_acc rejected");
    t.check(!is_accepting_oracle(make_m_rej(1)), "M_rej accepted");
    t.check(!find_accepting_run(make_m_rej(1)), "run found for M_rej");
    if (!run) return t.finish(6, "dichotomy", start, "machine rejecting, tree checks not applicable");

    const KnowledgeBase kb = build_kb_machine(atm);
    const KnowledgeBase kb_tbox = build_kb_machine(atm, true);
    const Cq qm = build_query_machine(atm);

    const Interpretation Q = build_quasi_computation_tree(atm, *run);
    t.check(check_kb(Q, kb).all_hold(), "faithful tree fails " + join(check_kb(Q, kb).failing()));
    Interpretation Qaux = Q;
    add_aux_edges(Qaux, qct_element("", ""));
    t.check(check_kb(Qaux, kb_tbox).all_hold(), "faithful tree with aux edges fails the TBox-only KB");
    t.check(!exists_match(Q, qm), "q_M matches the faithful tree");

    const auto sites = fault_sites(*run);
    for (const auto& [path, cell] : sites) {
        const std::string where = "fault ('" + path + "'," + std::to_string(cell) + ")";
        const RunTree faulty = inject_tape_fault(atm, *run, path, cell);
        t.check(is_valid_quasi_run(atm, faulty, false) && !is_valid_run(atm, faulty), where + " run status");
        const Interpretation F = build_quasi_computation_tree(atm, faulty);
        t.check(check_kb(F, kb).all_hold(), where + " fails " + join(check_kb(F, kb).failing()));
        const auto answers = find_matches(F, qm);
        t.check(!answers.empty(), where + " has no q_M match");
        const std::string cell_word = cell_address(cell, N);
        for (const auto& a : answers) {
            const auto hx = a[0].find('#'), hy = a[1].find('#');
            const std::string px = a[0].substr(0, hx), py = a[1].substr(0, hy);
            const std::string wx = a[0].substr(hx + 1), wy = a[1].substr(hy + 1);
            t.check(F.in_concept(sym::no_phd_abv, a[1]), where + " answer y not in NoPHdAbv");
            t.check(F.in_concept(sym::zz(0), a[0]) && F.in_concept(sym::zz(1), a[1]), where + " answer letters");
            t.check(py.size() == px.size() + 1 && py.compare(0, px.size(), px) == 0, where + " not consecutive");
            t.check(wx == wy && wx.size() == static_cast<std::size_t>(N) + 1, where + " addresses differ");
            t.check(wx.compare(0, cell_word.size(), cell_word) == 0, where + " answer away from the faulty cell");
        }
    }
    return t.finish(6, "dichotomy", start, std::to_string(sites.size()) + " fault sites");
}

SuiteResult verify_polynomiality(const LemmaOptions& opt) {
    const auto start = Clock::now();
    const Atm atm = machine_of(opt);
    Tally t;
    std::size_t last_kb = 0, last_q = 0;
    for (int N = 1; N <= opt.max_poly_n; ++N) {
        const Atm m = atm.with_n(N);
        const std::size_t kb = build_kb_machine(m).size();
        const std::size_t q = build_query_machine(m).atom_count();
        const std::string at = " at N=" + std::to_string(N);
        t.check(kb == expected_kb_size(m, N), "KB size " + std::to_string(kb) + at);
        t.check(q == expected_query_atoms(N), "query atoms " + std::to_string(q) + at);
        t.check(kb > last_kb && q > last_q, "not monotone" + at);
        last_kb = kb;
        last_q = q;
    }
    return t.finish(7, "polynomiality", start, "N=1.." + std::to_string(opt.max_poly_n));
}

SuiteResult verify_determinism(const LemmaOptions& opt) {
    const auto start = Clock::now();
    const Atm atm = machine_of(opt);
    Tally t;
    std::set<std::string> outputs;
    for (int k = 0; k < 3; ++k) {
        const auto bundle = reduce(atm);
        outputs.insert(emit_kb(bundle.kb) + "\x1f" + emit_kb(bundle.kb, KbFormat::owlfs) + "\x1f" +
                       emit_cq(bundle.query));
    }
    t.check(outputs.size() == 1, "reduction output differs between runs");

    Rng rng(opt.seed);
    for (int k = 0; k < 100; ++k) {
        const Atm m = random_atm(rng, {1 + k % 2, k % 3});
        const std::string text = emit_atm(m);
        const Atm back = parse_atm(text);
        t.check(back == m && emit_atm(back) == text, "machine round trip " + std::to_string(k));

        const KnowledgeBase kb = random_kb(rng, 1 + k % 6);
        t.check(parse_kb(emit_kb(kb)) == kb, "KB round trip " + std::to_string(k));

        const Cq q = random_cq(rng, 1 + k % 5, 1 + k % 7, k % 3);
        t.check(parse_cq(emit_cq(q)) == q, "query round trip " + std::to_string(k));

        const Interpretation I = random_interpretation(rng, k % 6);
        const std::string it = emit_interp(I);
        t.check(parse_interp(it) == I && emit_interp(parse_interp(it)) == it, "interpretation round trip " + std::to_string(k));
    }
    return t.finish(8, "determinism", start, "3 compilations, 100 random instances per format");
}

std::vector<SuiteResult> verify_all(const LemmaOptions& opt) {
    std::vector<SuiteResult> out;
    for (auto* suite : {verify_units, verify_config_trees, verify_enriched_trees, verify_homomorphisms,
                        verify_match_sets, verify_dichotomy, verify_polynomiality, verify_determinism})
        out.push_back(suite(opt));
    return out;
}

}  // namespace selfcq
