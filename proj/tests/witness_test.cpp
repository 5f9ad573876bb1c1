#include <gtest/gtest.h>

#include "selfcq/error.hpp"
#include "selfcq/random.hpp"
#include "selfcq/reduction.hpp"
#include "selfcq/witness.hpp"

using namespace selfcq;

namespace {

KnowledgeBase tbox(std::vector<Gci> g) {
    KnowledgeBase kb;
    kb.tbox = std::move(g);
    return kb;
}

const Atm& m_acc() {
    static const Atm m = make_m_acc(1);
    return m;
}

RunTree acc_run() { return *find_accepting_run(m_acc()); }

std::set<Element> S(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

}  // namespace

TEST(Unit, Shape) {
    const Interpretation U = build_unit(2);
    EXPECT_EQ(U.domain(), S({"", "0", "1", "00", "01", "10", "11"}));
    EXPECT_EQ(U.extension("Lvl_1"), S({"0", "1"}));
    EXPECT_EQ(U.extension("Ad_2^1"), S({"01", "11"}));
    EXPECT_EQ(U.extension("L"), S({"", "0", "00", "10"}));
    EXPECT_EQ(U.relation("next").size(), 4u);
    EXPECT_TRUE(U.has_role("ell_2", "1", "10"));
    EXPECT_TRUE(U.has_role("r_1", "10", "10"));
    EXPECT_FALSE(U.has_role("ell_1", "0", "00"));
    EXPECT_TRUE(build_unit(1, false).in_concept("R", ""));
    EXPECT_THROW(build_unit(0), PreconditionError);
}

TEST(Unit, CellAddress) {
    EXPECT_EQ(cell_address(0, 1), "0");
    EXPECT_EQ(cell_address(2, 2), "10");
    EXPECT_EQ(cell_address(5, 3), "101");
    EXPECT_THROW(cell_address(4, 2), PreconditionError);
}

TEST(ConfigTree, InitialOfMAcc) {
    const Interpretation C = build_config_tree(m_acc(), initial_configuration(m_acc()));
    EXPECT_EQ(C.extension("HdHere"), S({"0"}));
    EXPECT_EQ(C.extension("NoHdHere"), S({"1"}));
    EXPECT_EQ(C.extension("HdLet_0"), S({""}));
    EXPECT_EQ(C.extension("St_s_init"), S({""}));
    EXPECT_EQ(C.extension("zz0"), S({"00", "10"}));
    EXPECT_EQ(C.extension("zz1"), S({"01", "11"}));
    EXPECT_EQ(C.extension("HdPos_1^0"), S({"", "0", "1"}));
    EXPECT_TRUE(check_kb(C, tbox(build_kb_conf(m_acc()))).all_hold());
}

TEST(ConfigTree, LetterOneSwapsChildren) {
    const Interpretation C = build_config_tree(m_acc(), {"10", "e1", 1});
    EXPECT_EQ(C.extension("zz1"), S({"00", "11"}));
    EXPECT_EQ(C.extension("HdLet_0"), S({""}));
    EXPECT_EQ(C.extension("HdHere"), S({"1"}));
}

TEST(ConfigTree, RandomConfigurationsAreModels) {
    Rng rng(31);
    for (int N = 1; N <= 2; ++N) {
        const Atm m = make_m_acc(N);
        const auto kb = tbox(build_kb_conf(m));
        for (int k = 0; k < 12; ++k) {
            Configuration c{std::string(m.tape_length(), '0'), m.states()[rng() % m.states().size()],
                            rng() % m.tape_length()};
            for (auto& ch : c.tape) ch = rng() % 2 ? '1' : '0';
            const Interpretation C = build_config_tree(m, c);
            EXPECT_TRUE(check_kb(C, kb).all_hold());
            EXPECT_EQ(C.extension("HdHere").size(), 1u);
            for (const auto& e : C.extension("Lvl_" + std::to_string(N)))
                EXPECT_NE(C.in_concept("Let_0", e), C.in_concept("Let_1", e));
        }
    }
}

TEST(EnrichedTree, Init) {
    const Interpretation E = build_enriched_tree(m_acc(), initial_configuration(m_acc()), Origin::init());
    EXPECT_EQ(E.extension("Init"), S({""}));
    EXPECT_EQ(E.extension("PHdHere"), S({"0"}));
    EXPECT_EQ(E.extension("PHdLet_0"), S({""}));
    EXPECT_EQ(E.extension("PHdAbv"), S({"00", "01"}));
    EXPECT_EQ(E.extension("NoPHdAbv"), S({"10", "11"}));
    EXPECT_TRUE(check_kb(E, tbox(build_kb_enr(m_acc()))).all_hold());
}

TEST(EnrichedTree, ViaTransition) {
    const Transition t = m_acc().delta_at("s_init", 0, Branch::first);
    const Interpretation E = build_enriched_tree(m_acc(), {"00", "e1", 1}, Origin::via(t, Branch::first));
    EXPECT_EQ(E.extension("HdHere"), S({"1"}));
    EXPECT_EQ(E.extension("PHdHere"), S({"0"}));
    EXPECT_EQ(E.extension("PrTr_{s_init.0.0.e1.+1}"), S({""}));
    EXPECT_TRUE(E.in_concept("L", ""));
    EXPECT_TRUE(check_kb(E, tbox(build_kb_enr(m_acc()))).all_hold());
    EXPECT_EQ(eval_concept(E, increment_gadget(1, 1)).count(""), 1u);

    const Interpretation R = build_enriched_tree(m_acc(), {"10", "e1", 1},
                                                 Origin::via(m_acc().delta_at("s_init", 0, Branch::second), Branch::second));
    EXPECT_TRUE(R.in_concept("R", ""));
}

TEST(EnrichedTree, Preconditions) {
    const Transition t = m_acc().delta_at("s_init", 0, Branch::first);
    EXPECT_THROW(build_enriched_tree(m_acc(), {"00", "s_acc", 1}, Origin::via(t, Branch::first)), PreconditionError);
    EXPECT_THROW(build_enriched_tree(m_acc(), {"00", "e1", 0}, Origin::via(t, Branch::first)), PreconditionError);
    EXPECT_THROW(build_enriched_tree(m_acc(), {"01", "s_init", 0}, Origin::init()), PreconditionError);
    EXPECT_THROW(build_enriched_tree(m_acc(), initial_configuration(m_acc()), Origin::init(), false), PreconditionError);
    EXPECT_THROW(build_enriched_tree(m_acc(), {"00", "e1", 1}, Origin::via({"s_init", 0, 0, "e1", -1}, Branch::first)),
                 PreconditionError);
}

TEST(Qct, MAcc) {
    const RunTree run = acc_run();
    const Interpretation Q = build_quasi_computation_tree(m_acc(), run);
    EXPECT_EQ(Q.size(), 35u);
    EXPECT_EQ(Q.individuals().at("a"), "#");
    EXPECT_TRUE(check_kb(Q, build_kb_machine(m_acc())).all_hold());

    std::set<ElementPair> non_loops;
    for (const auto& [a, b] : Q.relation("next")) {
        if (a == b) {
            EXPECT_TRUE(Q.in_concept("Lvl_2", a)) << a;
        } else {
            non_loops.insert({a, b});
        }
    }
    EXPECT_EQ(non_loops, (std::set<ElementPair>{{"#", "0#"}, {"#", "1#"}, {"0#", "00#"}, {"1#", "10#"}}));
    EXPECT_TRUE(Q.in_concept("R", "1#"));
    EXPECT_TRUE(Q.in_concept("L", "10#"));
    EXPECT_EQ(Q.extension("Init"), S({"#"}));

    Interpretation with_aux = Q;
    add_aux_edges(with_aux, "#");
    EXPECT_TRUE(check_kb(with_aux, build_kb_machine(m_acc(), true)).all_hold());
    EXPECT_FALSE(check_kb(Q, build_kb_machine(m_acc(), true)).all_hold());
}

TEST(Qct, RejectingNodeRefused) {
    RunTree t = acc_run();
    t.at("00").config.state = "s_rej";
    EXPECT_THROW(build_quasi_computation_tree(m_acc(), t), PreconditionError);
}

TEST(Fault, Injection) {
    const RunTree run = acc_run();
    EXPECT_EQ(fault_sites(run).size(), 4u);
    const RunTree f = inject_tape_fault(m_acc(), run, "0", 1);
    EXPECT_EQ(f.at("0").config.tape, "01");
    EXPECT_TRUE(is_valid_quasi_run(m_acc(), f, false));
    EXPECT_FALSE(is_valid_run(m_acc(), f));
    EXPECT_THROW(inject_tape_fault(m_acc(), run, "", 0), PreconditionError);
    try {
        inject_tape_fault(m_acc(), run, "0", 0);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_NE(std::string(e.what()).find("not an untouched cell"), std::string::npos);
    }
}

TEST(Fault, Dichotomy) {
    const RunTree run = acc_run();
    const Cq q = build_query_machine(m_acc());
    const KnowledgeBase kb = build_kb_machine(m_acc());
    std::vector<RunTree> trees{run};
    for (const auto& [p, c] : fault_sites(run)) trees.push_back(inject_tape_fault(m_acc(), run, p, c));
    for (const auto& t : trees) {
        const Interpretation Q = build_quasi_computation_tree(m_acc(), t);
        EXPECT_TRUE(check_kb(Q, kb).all_hold());
        EXPECT_EQ(exists_match(Q, q), !is_valid_run(m_acc(), t));
    }
    const Interpretation F = build_quasi_computation_tree(m_acc(), trees[1]);
    const auto answers = find_matches(F, q);
    EXPECT_EQ(answers, (std::set<AnswerTuple>{{"#10", "0#10"}}));
}
