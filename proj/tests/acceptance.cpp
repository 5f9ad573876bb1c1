// Acceptance run: one PASS/FAIL line per criterion. Expected values are
// computed here from first principles (word enumeration, the run's tree
// shape, hand-derived closed forms), never from the library's own suites.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "selfcq/atm.hpp"
#include "selfcq/cq.hpp"
#include "selfcq/dl.hpp"
#include "selfcq/io.hpp"
#include "selfcq/random.hpp"
#include "selfcq/reduction.hpp"
#include "selfcq/witness.hpp"

using namespace selfcq;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;
using Pairs = std::set<AnswerTuple>;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    std::string summary;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        pass = false;
        if (notes.size() < 4) notes.push_back(what);
    }
};

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::vector<std::string> words(int len) {
    std::vector<std::string> out;
    for (unsigned v = 0; v < (1u << len); ++v) {
        std::string w(static_cast<std::size_t>(len), '0');
        for (int i = 0; i < len; ++i) w[static_cast<std::size_t>(i)] = (v >> (len - 1 - i)) & 1 ? '1' : '0';
        out.push_back(w);
    }
    return out;
}

std::set<std::string> schemas(const std::vector<std::string>& labels) {
    std::set<std::string> out;
    for (const auto& l : labels) out.insert(l.substr(0, l.find_first_of("[.")));
    return out;
}

KnowledgeBase tbox(std::vector<Gci> g) {
    KnowledgeBase kb;
    kb.tbox = std::move(g);
    return kb;
}

const Atm& m_acc() {
    static const Atm m = make_m_acc(1);
    return m;
}

const RunTree& acc_run() {
    static const RunTree t = *find_accepting_run(m_acc());
    return t;
}

// Transition that produced run node p from its parent.
std::optional<Transition> producing(const RunTree& t, const NodePath& p) {
    if (p.empty()) return std::nullopt;
    const auto& parent = t.at(p.substr(0, p.size() - 1)).config;
    return m_acc().delta_at(parent.state, parent.letter() - '0', *t.at(p).tag);
}

Outcome criterion_units() {
    Outcome o;
    const auto start = Clock::now();
    for (int n = 1; n <= 3; ++n) {
        const Interpretation U = build_unit(n);
        o.expect(check_kb(U, tbox(build_kb_unit(n))).failing().empty(), "unit " + std::to_string(n) + " not a model");

        Pairs expected;
        for (const auto& w : words(n)) expected.insert({"", w});
        const Pairs got = find_matches(U, build_query_rl(n));
        o.expect(got == expected, "q_rl at n=" + std::to_string(n));
        if (n == 2) o.expect(got.size() == 4, "four root-leaf pairs at n=2");

        // (eps, w) in ell_1 o r_1 o ... o ell_n o r_n for every word w of length <= n.
        std::size_t reached = 0;
        for (int len = 0; len <= n; ++len)
            for (const auto& w : words(len)) {
                std::set<Element> frontier{""};
                for (int i = 1; i <= n; ++i)
                    for (const std::string role : {sym::ell(i), sym::r(i)}) {
                        std::set<Element> next;
                        for (const auto& [a, b] : U.relation(role))
                            if (frontier.count(a)) next.insert(b);
                        frontier = next;
                    }
                reached += frontier.count(w);
            }
        o.expect(reached == (std::size_t{2} << n) - 1, "composition misses words at n=" + std::to_string(n));
    }
    const double s = since(start);
    o.expect(s < 5.0, "runtime " + std::to_string(s) + "s");
    o.summary = "n=1..3, " + std::to_string(s).substr(0, 5) + "s (limit 5s)";
    return o;
}

Outcome criterion_config_trees() {
    Outcome o;
    const auto kb = tbox(build_kb_conf(m_acc()));
    std::size_t trees = 0;
    for (const auto& state : m_acc().states())
        for (const std::string tape : {"00", "01", "10", "11"})
            for (std::size_t head = 0; head < 2; ++head) {
                o.expect(check_kb(build_config_tree(m_acc(), {tape, state, head}), kb).all_hold(),
                         state + "/" + tape + "/" + std::to_string(head));
                ++trees;
            }

    // Decorations of the initial tree (s_init, 00, head on cell "0").
    struct Mutation {
        std::string name;
        std::function<void(Interpretation&)> apply;
        std::set<std::string> expected;
    };
    const std::vector<Mutation> mutations{
        {"St_s_init at root", [](Interpretation& I) { I.remove_concept("St_s_init", ""); }, {"StCov"}},
        {"Let_0 at cell 1", [](Interpretation& I) { I.remove_concept("Let_0", "1"); }, {"LetConCov"}},
        {"zz0 at 00", [](Interpretation& I) { I.remove_concept("zz0", "00"); }, {"LetCov", "EncLetZero"}},
        {"HdHere at 0", [](Interpretation& I) { I.remove_concept("HdHere", "0"); }, {"HdHereCov", "HdHereEqualAdr"}},
        {"HdPos_1^0 at 0", [](Interpretation& I) { I.remove_concept("HdPos_1^0", "0"); }, {"HdPosCov", "PropHdPos"}},
        {"HdLet_0 at root", [](Interpretation& I) { I.remove_concept("HdLet_0", ""); }, {"HdLetCov", "RetrHdLet"}},
        {"next loop at 00", [](Interpretation& I) { I.remove_role("next", "00", "00"); }, {"leaves-next-loop"}},
    };
    const Interpretation base = build_config_tree(m_acc(), initial_configuration(m_acc()));
    for (const auto& m : mutations) {
        Interpretation I = base;
        m.apply(I);
        o.expect(schemas(check_kb(I, kb).failing()) == m.expected, "mutation " + m.name);
    }
    o.summary = std::to_string(trees) + " trees, " + std::to_string(mutations.size()) + " mutations";
    return o;
}

Outcome criterion_enriched_trees() {
    Outcome o;
    const auto kb = tbox(build_kb_enr(m_acc()));
    std::size_t trees = 0;
    for (const auto& p : acc_run().paths()) {
        const auto& cfg = acc_run().at(p).config;
        const auto t = producing(acc_run(), p);
        const Branch b = p.empty() ? Branch::first : *acc_run().at(p).tag;
        const Interpretation E = build_enriched_tree(m_acc(), cfg, t ? Origin::via(*t, b) : Origin::init());
        o.expect(check_kb(E, kb).all_hold(), "tree at '" + p + "'");
        ++trees;
        if (!t) continue;

        // Head and previous head are one bit wide at N=1: phd = head - d.
        const std::size_t phd = cfg.head == 0 ? 1 : 0;
        o.expect(static_cast<long long>(cfg.head) - t->move == static_cast<long long>(phd), "phd arithmetic");
        const std::size_t verdicts_at_root = eval_concept(E, increment_gadget(1, t->move)).count("");
        o.expect(verdicts_at_root == 1, "gadget false at '" + p + "'");

        Interpretation bad;
        add_enriched_tree(bad, m_acc(), cfg, *t, 1 - phd, b == Branch::first, "");
        o.expect(schemas(check_kb(bad, kb).failing()) == std::set<std::string>{"TransiCons"},
                 "off-by-one at '" + p + "'");
    }
    o.summary = std::to_string(trees) + " trees from the run";
    return o;
}

void pad(Interpretation& I, Rng& rng, int junk) {
    std::vector<std::string> concepts, roles;
    for (const auto& [c, e] : I.concepts()) concepts.push_back(c);
    for (const auto& [r, e] : I.roles()) roles.push_back(r);
    const std::vector<Element> dom(I.domain().begin(), I.domain().end());
    auto pick = [&](const auto& v) { return v[rng() % v.size()]; };
    for (int k = 0; k < junk; ++k) {
        const Element e = "pad" + std::to_string(k);
        I.add_element(e);
        I.add_concept(pick(concepts), e);
        I.add_role(pick(roles), e, pick(dom));
        I.add_role(pick(roles), pick(dom), e);
    }
}

Outcome criterion_homomorphisms() {
    Outcome o;
    Rng rng(99);
    std::size_t searches = 0;

    // Each structure comes with the fresh witness intended for each of its roots.
    struct Case {
        std::string name;
        Interpretation I;
        std::map<Element, std::vector<Interpretation>> witnesses;
    };
    std::vector<Case> cases;
    for (int n = 1; n <= 3; ++n) cases.push_back({"unit" + std::to_string(n), build_unit(n), {{"", {build_unit(n)}}}});
    const Configuration init = initial_configuration(m_acc());
    cases.push_back({"conf", build_config_tree(m_acc(), init), {{"", {build_unit(2), build_config_tree(m_acc(), init)}}}});
    const Interpretation init_tree = build_enriched_tree(m_acc(), init, Origin::init());
    cases.push_back({"enr", init_tree, {{"", {build_unit(2), build_config_tree(m_acc(), init), init_tree}}}});
    Case qct{"qct", build_quasi_computation_tree(m_acc(), acc_run()), {}};
    for (const auto& p : acc_run().paths()) {
        const auto& cfg = acc_run().at(p).config;
        const bool left = p.empty() || p.back() == '0';
        const auto t = producing(acc_run(), p);
        qct.witnesses[qct_element(p, "")] = {
            build_unit(2, left), build_config_tree(m_acc(), cfg, left),
            build_enriched_tree(m_acc(), cfg, t ? Origin::via(*t, left ? Branch::first : Branch::second) : Origin::init(),
                                left)};
    }
    cases.push_back(std::move(qct));

    for (const auto& c : cases) {
        o.expect(c.witnesses.size() == c.I.extension("Lvl_0").size(), c.name + " root count");
        for (int junk = 1; junk <= 3; ++junk) {
            Interpretation padded = c.I;
            pad(padded, rng, junk);
            for (const auto& [d, ws] : c.witnesses)
                for (const auto& w : ws) {
                    o.expect(find_homomorphism(w, c.I, {{"", d}}).has_value(), c.name + " at '" + d + "'");
                    o.expect(find_homomorphism(w, padded, {{"", d}}).has_value(), c.name + " padded at '" + d + "'");
                    searches += 2;
                }
        }
        for (const auto& [d, ws] : c.witnesses) {
            Interpretation broken = c.I;
            broken.remove_role("ell_1", d, d + "0");
            o.expect(!find_homomorphism(ws.front(), broken, {{"", d}}).has_value(),
                     c.name + " without ell_1 successor at '" + d + "'");
            ++searches;
        }
    }
    o.summary = std::to_string(cases.size()) + " structures, " + std::to_string(searches) + " searches";
    return o;
}

Outcome criterion_match_sets() {
    Outcome o;
    const auto start = Clock::now();
    const Interpretation Q = build_quasi_computation_tree(m_acc(), acc_run());
    const auto leaves = words(2);
    std::vector<std::pair<std::string, std::string>> consecutive;
    for (const auto& p : acc_run().paths())
        if (!p.empty()) consecutive.emplace_back(p.substr(0, p.size() - 1), p);

    Pairs main;
    for (const auto& [p, c] : consecutive)
        for (const auto& u : leaves)
            for (const auto& v : leaves) main.insert({p + "#" + u, c + "#" + v});
    o.expect(find_matches(Q, build_query_main(1)) == main, "q_main");
    o.expect(main.size() == 64, "64 consecutive leaf pairs");

    for (int i = 1; i <= 2; ++i) {
        const std::size_t k = static_cast<std::size_t>(i - 1);
        for (int b = 0; b < 2; ++b) {
            Pairs expected;
            for (const auto& p : acc_run().paths())
                for (const auto& w : leaves) expected.insert({p + "#" + w, p + "#" + w});
            for (const auto& [p, c] : consecutive)
                for (const auto& u : leaves)
                    for (const auto& v : leaves)
                        if (u[k] - '0' == b && v[k] - '0' == b) expected.insert({p + "#" + u, c + "#" + v});
            o.expect(find_matches(Q, build_query_ith_bit(i, b, 1)) == expected,
                     "q_" + std::to_string(i) + "^" + std::to_string(b));
        }
        Pairs addr;
        for (const auto& t : main) {
            const auto x = t[0].substr(t[0].find('#') + 1);
            const auto y = t[1].substr(t[1].find('#') + 1);
            if (x[k] == y[k]) addr.insert(t);
        }
        o.expect(find_matches(Q, build_query_addr(i, 1)) == addr, "q_addr_" + std::to_string(i));
    }
    const double s = since(start);
    o.expect(s < 60.0, "runtime " + std::to_string(s) + "s");
    o.summary = "q_main, q_i^b and q_addr_i for i in {1,2}, " + std::to_string(s).substr(0, 5) + "s (limit 60s)";
    return o;
}

Outcome criterion_dichotomy() {
    Outcome o;
    const KnowledgeBase kb = build_kb_machine(m_acc());
    const Cq q = build_query_machine(m_acc());
    const Interpretation Q = build_quasi_computation_tree(m_acc(), acc_run());
    o.expect(check_kb(Q, kb).all_hold(), "faithful tree is not a model");
    o.expect(!exists_match(Q, q), "q_M matches the faithful tree");

    // Untouched cells: every cell of a non-root node except the one its parent's head wrote.
    std::size_t faults = 0;
    for (const auto& p : acc_run().paths()) {
        if (p.empty()) continue;
        const std::size_t written = acc_run().at(p.substr(0, p.size() - 1)).config.head;
        for (std::size_t cell = 0; cell < 2; ++cell) {
            if (cell == written) continue;
            ++faults;
            const std::string where = "fault at ('" + p + "'," + std::to_string(cell) + ")";
            const Interpretation F = build_quasi_computation_tree(m_acc(), inject_tape_fault(m_acc(), acc_run(), p, cell));
            o.expect(check_kb(F, kb).all_hold(), where + " not a model");
            const auto answers = find_matches(F, q);
            o.expect(!answers.empty(), where + " no match");
            for (const auto& a : answers) {
                const auto x = a[0], y = a[1];
                const auto tx = x.substr(0, x.find('#')), ty = y.substr(0, y.find('#'));
                o.expect(F.in_concept("NoPHdAbv", y), where + " y outside NoPHdAbv");
                o.expect(F.in_concept("zz0", x) && F.in_concept("zz1", y), where + " letters");
                o.expect(ty.size() == tx.size() + 1 && ty.rfind(tx, 0) == 0, where + " trees not consecutive");
                o.expect(x.substr(x.find('#')) == y.substr(y.find('#')) && x.size() - tx.size() == 3,
                         where + " addresses differ");
            }
        }
    }
    o.expect(faults == 4, "expected 4 fault sites");
    o.expect(is_accepting_oracle(m_acc()), "oracle rejects M_acc");
    o.expect(!is_accepting_oracle(make_m_rej(1)), "oracle accepts M_rej");
    o.expect(!find_accepting_run(make_m_rej(1)).has_value(), "run found for M_rej");
    o.summary = "faithful tree plus " + std::to_string(faults) + " faulty trees";
    return o;
}

Outcome criterion_polynomiality() {
    Outcome o;
    std::size_t last_kb = 0, last_q = 0;
    for (long N = 1; N <= 8; ++N) {
        const Atm m = make_m_acc(1).with_n(static_cast<int>(N));
        const std::size_t kb = build_kb_machine(m).size();
        const std::size_t q = build_query_machine(m).atom_count();
        const long f = 12 * N * N + 26 * N + 19;
        const long g = (3 * N * N + 47 * N + 232) / 2;
        o.expect(static_cast<long>(q) == f, "q_M atoms at N=" + std::to_string(N) + ": " + std::to_string(q));
        o.expect(static_cast<long>(kb) == g, "K_M axioms at N=" + std::to_string(N) + ": " + std::to_string(kb));
        o.expect(kb > last_kb && q > last_q, "not monotone at N=" + std::to_string(N));
        last_kb = kb;
        last_q = q;
    }
    o.summary = "f(N)=12N^2+26N+19 atoms, (3N^2+47N+232)/2 axioms, N=1..8";
    return o;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Outcome criterion_determinism() {
    Outcome o;
    const fs::path dir = fs::temp_directory_path() / "selfcq_acceptance";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::set<std::string> runs;
    for (int k = 0; k < 3; ++k) {
        const fs::path kb = dir / ("k" + std::to_string(k) + ".kb.dl");
        const fs::path owl = dir / ("k" + std::to_string(k) + ".kb.ofn");
        const fs::path q = dir / ("q" + std::to_string(k) + ".cq");
        const fs::path out = dir / ("stdout" + std::to_string(k));
        const std::string atm = std::string(SELFCQ_MACHINES) + "/m_acc.atm.json";
        const std::string base = std::string(SELFCQ_BIN) + " compile --atm " + atm + " --out-query " + q.string();
        const int a = std::system((base + " --out-kb " + kb.string() + " > " + out.string()).c_str());
        const int b = std::system((base + " --format owlfs --out-kb " + owl.string() + " > /dev/null").c_str());
        o.expect(a == 0 && b == 0, "compile exited with an error");
        const std::string bytes = slurp(kb) + '\x1f' + slurp(owl) + '\x1f' + slurp(q) + '\x1f' + slurp(out);
        o.expect(slurp(kb).size() > 1000, "empty KB output");
        runs.insert(bytes);
    }
    o.expect(runs.size() == 1, "compile outputs differ across runs");
    fs::remove_all(dir);

    Rng rng(2024);
    std::size_t trips = 0;
    for (int k = 0; k < 100; ++k) {
        const Atm m = random_atm(rng, {1 + k % 3, k % 3});
        const std::string mt = emit_atm(m);
        o.expect(emit_atm(parse_atm(mt)) == mt && parse_atm(mt) == m, "machine " + std::to_string(k));
        const KnowledgeBase kb = random_kb(rng, 1 + k % 8);
        const std::string kt = emit_kb(kb);
        o.expect(emit_kb(parse_kb(kt)) == kt && parse_kb(kt) == kb, "KB " + std::to_string(k));
        const Cq q = random_cq(rng, 1 + k % 5, 1 + k % 7, k % 3);
        const std::string qt = emit_cq(q);
        o.expect(emit_cq(parse_cq(qt)) == qt && parse_cq(qt) == q, "query " + std::to_string(k));
        const Interpretation I = random_interpretation(rng, k % 7);
        const std::string it = emit_interp(I);
        o.expect(emit_interp(parse_interp(it)) == it && parse_interp(it) == I, "interpretation " + std::to_string(k));
        trips += 4;
    }
    o.summary = "3 CLI compilations byte-identical, " + std::to_string(trips) + " round trips";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"unit lemmas", criterion_units},
        {"configuration trees", criterion_config_trees},
        {"enriched trees", criterion_enriched_trees},
        {"homomorphism lemmas", criterion_homomorphisms},
        {"match-set lemmas", criterion_match_sets},
        {"main-theorem dichotomy", criterion_dichotomy},
        {"polynomiality", criterion_polynomiality},
        {"determinism", criterion_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.notes.push_back(std::string("exception: ") + e.what());
        }
        std::cout << "criterion " << i + 1 << " (" << criteria[i].first << "): " << (o.pass ? "PASS" : "FAIL");
        if (!o.summary.empty()) std::cout << " - " << o.summary;
        for (const auto& n : o.notes) std::cout << " [" << n << "]";
        std::cout << "\n";
        failed += o.pass ? 0 : 1;
    }
    return failed == 0 ? 0 : 1;
}
