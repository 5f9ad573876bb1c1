#include "selfcq/reduction.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "selfcq/error.hpp"
#include "selfcq/io.hpp"

namespace selfcq {

namespace sym {

std::string lvl(int i) { return "Lvl_" + std::to_string(i); }
std::string ad(int i, int b) { return "Ad_" + std::to_string(i) + "^" + std::to_string(b); }
std::string ell(int i) { return "ell_" + std::to_string(i); }
std::string r(int i) { return "r_" + std::to_string(i); }
std::string st(const StateId& s) { return "St_" + s; }
std::string hd_pos(int i, int b) { return "HdPos_" + std::to_string(i) + "^" + std::to_string(b); }
std::string hd_let(int a) { return "HdLet_" + std::to_string(a); }
std::string let(int a) { return "Let_" + std::to_string(a); }
std::string zz(int b) { return "zz" + std::to_string(b); }
std::string pr_tr(const Transition& t) { return "PrTr_{" + transition_key(t) + "}"; }
std::string phd_pos(int i, int b) { return "PHdPos_" + std::to_string(i) + "^" + std::to_string(b); }
std::string phd_let(int a) { return "PHdLet_" + std::to_string(a); }

}  // namespace sym

namespace {

Concept A(const std::string& name) { return atomic(name); }

std::string idx(std::initializer_list<std::string> parts) {
    std::string out = "[";
    bool first = true;
    for (const auto& p : parts) {
        if (!first) out += ',';
        out += p;
        first = false;
    }
    return out + "]";
}

std::string num(int i) { return std::to_string(i); }

// ell_1, r_1, ..., ell_k, r_k
std::vector<std::string> down_roles(int k) {
    std::vector<std::string> roles;
    for (int i = 1; i <= k; ++i) {
        roles.push_back(sym::ell(i));
        roles.push_back(sym::r(i));
    }
    return roles;
}

// Lvl_N and the conjunction over i of the disjunction over b of (Ad_i^b and P_i^b).
Concept same_address(int N, const std::function<std::string(int, int)>& pos) {
    std::vector<Concept> bits;
    for (int i = 1; i <= N; ++i)
        bits.push_back(disj(conj(A(sym::ad(i, 0)), A(pos(i, 0))), conj(A(sym::ad(i, 1)), A(pos(i, 1)))));
    return conj(A(sym::lvl(N)), conj_all(bits));
}

Concept different_address(int N, const std::function<std::string(int, int)>& pos) {
    std::vector<Concept> bits;
    for (int i = 1; i <= N; ++i)
        for (int b = 0; b <= 1; ++b) bits.push_back(conj(A(sym::ad(i, b)), A(pos(i, 1 - b))));
    return conj(A(sym::lvl(N)), disj_all(bits));
}

// The head-position family shared by the current and the previous head:
// covering, disjointness, propagation, here/elsewhere, letter retrieval.
void head_family(std::vector<Gci>& out, int N, const std::string& prefix,
                 const std::function<std::string(int, int)>& pos, const std::string& here,
                 const std::string& no_here, const std::function<std::string(int)>& hlet,
                 const std::string& diff_label) {
    const Concept root_or_cells = disj(A(sym::lvl(0)), A(sym::lvl(N)));
    for (int i = 1; i <= N; ++i)
        add_equivalence(out, root_or_cells, disj(A(pos(i, 0)), A(pos(i, 1))), prefix + "PosCov" + idx({num(i)}));
    for (int i = 1; i <= N; ++i)
        out.push_back({conj(A(pos(i, 0)), A(pos(i, 1))), bottom(), prefix + "PosDisj" + idx({num(i)})});
    const auto chain = down_roles(N);
    for (int i = 1; i <= N; ++i)
        for (int b = 0; b <= 1; ++b)
            out.push_back({conj(A(sym::lvl(0)), A(pos(i, b))),
                           forall_chain(chain, implies(A(sym::lvl(N)), A(pos(i, b)))),
                           "Prop" + prefix + "Pos" + idx({num(i), num(b)})});
    add_equivalence(out, disj(A(here), A(no_here)), A(sym::lvl(N)), prefix + "HereCov");
    out.push_back({same_address(N, pos), A(here), prefix + "HereEqualAdr"});
    out.push_back({different_address(N, pos), A(no_here), diff_label});
    add_equivalence(out, disj(A(hlet(0)), A(hlet(1))), A(sym::lvl(0)), prefix + "LetCov");
    for (int a = 0; a <= 1; ++a)
        out.push_back({conj(A(sym::lvl(0)), exists_chain(chain, conj(A(here), A(sym::let(a))))), A(hlet(a)),
                       "Retr" + prefix + "Let" + idx({num(a)})});
    for (int a = 0; a <= 1; ++a)
        out.push_back({conj(A(sym::lvl(0)), A(hlet(a))), forall_chain(chain, implies(A(here), A(sym::let(a)))),
                       prefix + "LetUnique" + idx({num(a)})});
}

}  // namespace

std::vector<Gci> build_kb_unit(int n) {
    if (n < 1) throw PreconditionError("a unit needs at least one level below the root (n >= 1)");
    std::vector<Gci> out;
    {
        std::vector<Concept> levels;
        for (int i = 0; i <= n; ++i) levels.push_back(A(sym::lvl(i)));
        out.push_back({top(), disj_all(levels), "LvlCov"});
    }
    for (int i = 0; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.push_back({conj(A(sym::lvl(i)), A(sym::lvl(j))), bottom(), "LvlDisj" + idx({num(i), num(j)})});
    {
        std::vector<Concept> loops;
        for (int i = 1; i <= n; ++i) {
            loops.push_back(self(sym::ell(i)));
            loops.push_back(self(sym::r(i)));
        }
        out.push_back({top(), conj_all(loops), "all-loops-but-next"});
    }
    add_equivalence(out, A(sym::lvl(n)), self(sym::next), "leaves-next-loop");
    out.push_back({top(), disj(A(sym::L), A(sym::R)), "LRCov"});
    out.push_back({conj(A(sym::L), A(sym::R)), bottom(), "LRDisj"});
    for (int i = 0; i < n; ++i) {
        const Concept below = A(sym::lvl(i + 1));
        out.push_back({A(sym::lvl(i)),
                       conj(exists(sym::ell(i + 1), below), forall(sym::ell(i + 1), implies(below, A(sym::L)))),
                       "LsuccLvl" + idx({num(i)})});
        out.push_back({A(sym::lvl(i)),
                       conj(exists(sym::r(i + 1), below), forall(sym::r(i + 1), implies(below, A(sym::R)))),
                       "RsuccLvl" + idx({num(i)})});
    }
    for (int i = 1; i <= n; ++i)
        out.push_back({conj(A(sym::lvl(i)), A(sym::L)), A(sym::ad(i, 0)), "LBitZero" + idx({num(i)})});
    for (int i = 1; i <= n; ++i)
        out.push_back({conj(A(sym::lvl(i)), A(sym::R)), A(sym::ad(i, 1)), "RBitOne" + idx({num(i)})});
    for (int i = 1; i <= n; ++i)
        out.push_back({conj(A(sym::ad(i, 0)), A(sym::ad(i, 1))), bottom(), "AdDisj" + idx({num(i)})});
    for (int i = 1; i <= n; ++i)
        for (int j = 0; j < i; ++j)
            for (int b = 0; b <= 1; ++b)
                out.push_back({conj(A(sym::ad(i, b)), A(sym::lvl(j))), bottom(),
                               "AdLvlDisj" + idx({num(i), num(j), num(b)})});
    for (int i = 1; i <= n; ++i) {
        for (int b = 0; b <= 1; ++b) {
            std::vector<Concept> keep;
            for (int j = 1; j <= n; ++j)
                keep.push_back(conj(forall(sym::ell(j), A(sym::ad(i, b))), forall(sym::r(j), A(sym::ad(i, b)))));
            out.push_back({A(sym::ad(i, b)), conj_all(keep), "PropBit" + idx({num(i), num(b)})});
        }
    }
    return out;
}

std::vector<Gci> build_kb_conf(const Atm& atm) {
    const int N = atm.n();
    if (atm.states().empty()) throw PreconditionError("empty state set");
    std::vector<Gci> out = build_kb_unit(N + 1);

    std::vector<Concept> states;
    for (const auto& s : atm.states()) states.push_back(A(sym::st(s)));
    add_equivalence(out, A(sym::lvl(0)), disj_all(states), "StCov");
    const auto& qs = atm.states();
    for (std::size_t i = 0; i < qs.size(); ++i)
        for (std::size_t j = i + 1; j < qs.size(); ++j)
            out.push_back({conj(A(sym::st(qs[i])), A(sym::st(qs[j]))), bottom(), "StDisj" + idx({qs[i], qs[j]})});

    const Concept leaf = A(sym::lvl(N + 1));
    out.push_back({conj(A(sym::zz(0)), A(sym::zz(1))), bottom(), "LetDisj"});
    add_equivalence(out, leaf, disj(A(sym::zz(0)), A(sym::zz(1))), "LetCov");
    out.push_back({conj(A(sym::let(0)), A(sym::let(1))), bottom(), "LetConDisj"});
    add_equivalence(out, disj(A(sym::let(0)), A(sym::let(1))), A(sym::lvl(N)), "LetConCov");
    for (int a = 0; a <= 1; ++a)
        out.push_back({A(sym::let(a)),
                       conj(forall(sym::ell(N + 1), implies(leaf, A(sym::zz(a)))),
                            forall(sym::r(N + 1), implies(leaf, A(sym::zz(1 - a))))),
                       a == 0 ? "EncLetZero" : "EncLetOne"});

    head_family(out, N, "Hd", sym::hd_pos, sym::hd_here, sym::no_hd_here, sym::hd_let, "NoHdHereDiffrAdr");
    return out;
}

Concept increment_gadget(int N, int d) {
    auto a = d > 0 ? sym::phd_pos : sym::hd_pos;
    auto b = d > 0 ? sym::hd_pos : sym::phd_pos;
    // B = A + 1: bit i flips 0 -> 1, every less significant bit (index > i)
    // flips 1 -> 0, every more significant bit (index < i) is unchanged.
    std::vector<Concept> cases;
    for (int i = 1; i <= N; ++i) {
        std::vector<Concept> parts{A(a(i, 0)), A(b(i, 1))};
        for (int j = 1; j < i; ++j)
            parts.push_back(disj(conj(A(a(j, 1)), A(b(j, 1))), conj(A(a(j, 0)), A(b(j, 0)))));
        for (int j = i + 1; j <= N; ++j) parts.push_back(conj(A(a(j, 1)), A(b(j, 0))));
        cases.push_back(conj_all(parts));
    }
    return disj_all(cases);
}

std::vector<Gci> build_kb_enr(const Atm& atm) {
    const int N = atm.n();
    std::vector<Gci> out = build_kb_conf(atm);
    const auto& delta = atm.delta();

    std::vector<Concept> origins{A(sym::init)};
    for (const auto& t : delta) origins.push_back(A(sym::pr_tr(t)));
    add_equivalence(out, A(sym::lvl(0)), disj_all(origins), "TrCov");
    for (const auto& t : delta)
        out.push_back({conj(A(sym::init), A(sym::pr_tr(t))), bottom(), "TrInitDisj" + idx({transition_key(t)})});
    for (std::size_t i = 0; i < delta.size(); ++i)
        for (std::size_t j = i + 1; j < delta.size(); ++j)
            out.push_back({conj(A(sym::pr_tr(delta[i])), A(sym::pr_tr(delta[j]))), bottom(),
                           "TrDisj" + idx({transition_key(delta[i]), transition_key(delta[j])})});

    head_family(out, N, "PHd", sym::phd_pos, sym::phd_here, sym::no_phd_here, sym::phd_let, "NoPHdHereDiffAdr");

    const Concept leaf = A(sym::lvl(N + 1));
    add_equivalence(out, disj(A(sym::phd_abv), A(sym::no_phd_abv)), leaf, "PHdAbvCov");
    out.push_back({conj(A(sym::phd_abv), A(sym::no_phd_abv)), bottom(), "PHdAbvDisj"});
    const std::vector<std::string> last{sym::ell(N + 1), sym::r(N + 1)};
    out.push_back({A(sym::phd_here), forall_chain(last, implies(leaf, A(sym::phd_abv))), "PropPHdAbv"});
    out.push_back({A(sym::no_phd_here), forall_chain(last, implies(leaf, A(sym::no_phd_abv))), "PropNoPHdAbv"});

    for (const auto& t : delta)
        out.push_back({A(sym::pr_tr(t)),
                       conj(A(sym::phd_let(t.write)), conj(A(sym::st(t.to)), increment_gadget(N, t.move))),
                       "TransiCons" + idx({transition_key(t)})});

    std::vector<Concept> init_parts{A(sym::lvl(0)), A(sym::L), A(sym::st(atm.initial()))};
    for (int i = 1; i <= N; ++i) init_parts.push_back(conj(A(sym::hd_pos(i, 0)), A(sym::phd_pos(i, 0))));
    init_parts.push_back(forall_chain(down_roles(N), implies(A(sym::lvl(N)), A(sym::let(0)))));
    out.push_back({A(sym::init), conj_all(init_parts), "InitConf"});
    return out;
}

KnowledgeBase build_kb_machine(const Atm& atm, bool tbox_only) {
    const int N = atm.n();
    KnowledgeBase kb;
    kb.tbox = build_kb_enr(atm);
    auto& out = kb.tbox;

    for (const auto& s : atm.states()) {
        if (atm.is_final(s)) continue;
        if (atm.is_existential(s))
            out.push_back({A(sym::st(s)), conj(exists(sym::next, top()), forall(sym::next, A(sym::L))),
                           "EConfSucc" + idx({s})});
        else
            out.push_back({A(sym::st(s)), conj(exists(sym::next, A(sym::L)), exists(sym::next, A(sym::R))),
                           "AConfSucc" + idx({s})});
    }
    for (const auto& s : {atm.accepting(), atm.rejecting()})
        out.push_back({A(sym::st(s)), forall(sym::next, bottom()), "FinConfSucc" + idx({s})});
    for (int i = 1; i <= N; ++i)
        for (int b = 0; b <= 1; ++b)
            out.push_back({conj(A(sym::lvl(0)), A(sym::hd_pos(i, b))), forall(sym::next, A(sym::phd_pos(i, b))),
                           "TransHeadPos" + idx({num(i), num(b)})});
    for (const auto& s : atm.states()) {
        if (atm.is_final(s) || !atm.is_existential(s)) continue;
        for (int a = 0; a <= 1; ++a) {
            std::vector<Concept> choices;
            for (Branch br : {Branch::first, Branch::second})
                choices.push_back(forall(sym::next, A(sym::pr_tr(atm.delta_at(s, a, br)))));
            out.push_back({conj(A(sym::st(s)), A(sym::hd_let(a))), disj_all(choices),
                           "TransiExistState" + idx({s, num(a)})});
        }
    }
    for (const auto& s : atm.states()) {
        if (atm.is_final(s) || atm.is_existential(s)) continue;
        for (int a = 0; a <= 1; ++a) {
            const Concept lhs = conj(A(sym::st(s)), A(sym::hd_let(a)));
            out.push_back({lhs,
                           forall(sym::next, implies(A(sym::L), A(sym::pr_tr(atm.delta_at(s, a, Branch::first))))),
                           "TransiUnivStateL" + idx({s, num(a)})});
            out.push_back({lhs,
                           forall(sym::next, implies(A(sym::R), A(sym::pr_tr(atm.delta_at(s, a, Branch::second))))),
                           "TransiUnivStateR" + idx({s, num(a)})});
        }
    }
    out.push_back({A(sym::st(atm.rejecting())), bottom(), "NoRejectState"});

    if (tbox_only)
        out.push_back({top(), exists(sym::aux, A(sym::init)), "InitAux"});
    else
        kb.abox.push_back(ConceptAssertion{A(sym::init), sym::individual, "InitIndividual"});
    return kb;
}

// ---------------------------------------------------------------------------
// Queries

Cq build_query_rl(int n, const Var& x, const Var& y, const std::string& label) {
    if (n < 1) throw PreconditionError("q_rl needs n >= 1");
    std::vector<std::string> segs{sym::lvl(0) + "?"};
    for (const auto& r : down_roles(n)) segs.push_back(r);
    segs.push_back(sym::lvl(n) + "?");
    return expand_path(segs, x, y, label);
}

Cq build_query_down(int N, const Var& x, const Var& y, const std::string& label,
                    std::optional<std::pair<int, int>> replace) {
    std::vector<std::string> segs;
    for (int i = 1; i <= N + 1; ++i) {
        if (replace && replace->first == i) {
            segs.push_back(replace->second == 0 ? sym::ell(i) : sym::r(i));
        } else {
            segs.push_back(sym::ell(i));
            segs.push_back(sym::r(i));
        }
    }
    return expand_path(segs, x, y, label);
}

Cq build_query_main(int N, const Var& x, const Var& y, const std::string& label) {
    if (N < 1) throw PreconditionError("q_main needs N >= 1");
    const Var xr = label + ".xr", yr = label + ".yr";
    Cq q = build_query_rl(N + 1, xr, x, label + ".rx");
    q.conjoin(build_query_rl(N + 1, yr, y, label + ".ry"));
    q.role_atoms.insert({sym::next, xr, yr});
    q.answer = {x, y};
    return q;
}

Cq build_query_ith_bit(int i, int b, int N, const Var& x, const Var& y, const std::string& label_in) {
    if (N < 1) throw PreconditionError("q_i^b needs N >= 1");
    if (i < 1 || i > N + 1) throw PreconditionError("bit index " + num(i) + " outside [1," + num(N + 1) + "]");
    if (b != 0 && b != 1) throw PreconditionError("bit value must be 0 or 1");
    const std::string label = label_in.empty() ? "bit" + num(i) + "_" + num(b) : label_in;
    const Var xp = label + ".xp", yp = label + ".yp";
    Cq q;
    q.concept_atoms.insert({sym::lvl(N + 1), x});
    q.conjoin(build_query_down(N, xp, x, label + ".dx", std::pair{i, b}));
    q.role_atoms.insert({sym::next, xp, yp});
    q.conjoin(build_query_down(N, yp, y, label + ".dy", std::pair{i, b}));
    q.concept_atoms.insert({sym::lvl(N + 1), y});
    q.answer = {x, y};
    return q;
}

Cq build_query_addr(int i, int N, const Var& x, const Var& y, const std::string& label_in) {
    const std::string label = label_in.empty() ? "addr" + num(i) : label_in;
    const Var z = label + ".z";
    Cq q = build_query_main(N, x, y, label + ".main");
    q.conjoin(build_query_ith_bit(i, 0, N, x, z, label + ".bit0"));
    q.conjoin(build_query_ith_bit(i, 1, N, z, y, label + ".bit1"));
    q.answer = {x, y};
    return q;
}

Cq build_query_machine(const Atm& atm) {
    const int N = atm.n();
    Cq q;
    for (int i = 1; i <= N + 1; ++i) q.conjoin(build_query_addr(i, N, "x", "y"));
    q.concept_atoms.insert({sym::no_phd_abv, "y"});
    q.concept_atoms.insert({sym::zz(0), "x"});
    q.concept_atoms.insert({sym::zz(1), "y"});
    q.answer = {"x", "y"};
    return q;
}

ReductionBundle reduce(const Atm& atm, bool tbox_only) {
    ReductionBundle b;
    b.kb = build_kb_machine(atm, tbox_only);
    b.query = build_query_machine(atm);
    b.fingerprint = atm_fingerprint(atm);
    for (const auto& [schema, count] : count_by_schema(b.kb)) b.stats["schema." + schema] = count;
    b.stats["N"] = static_cast<std::size_t>(atm.n());
    b.stats["kb.abox"] = b.kb.abox.size();
    b.stats["kb.tbox"] = b.kb.tbox.size();
    b.stats["kb.axioms"] = b.kb.size();
    b.stats["query.atoms"] = b.query.atom_count();
    b.stats["query.concept_atoms"] = b.query.concept_atoms.size();
    b.stats["query.role_atoms"] = b.query.role_atoms.size();
    b.stats["query.variables"] = b.query.variables().size();
    return b;
}

// ---------------------------------------------------------------------------
// Labels

LabelInfo parse_label(const std::string& label) {
    LabelInfo info;
    std::size_t pos = 0;
    while (pos < label.size() && label[pos] != '[' && label[pos] != '.') ++pos;
    info.schema = label.substr(0, pos);
    if (info.schema.empty()) throw ParseError("label '" + label + "' has no schema name");
    if (pos < label.size() && label[pos] == '[') {
        auto close = label.find(']', pos);
        if (close == std::string::npos) throw ParseError("label '" + label + "' has an unterminated index list");
        std::string body = label.substr(pos + 1, close - pos - 1);
        std::size_t start = 0;
        while (true) {
            auto comma = body.find(',', start);
            info.indices.push_back(body.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        for (const auto& ix : info.indices)
            if (ix.empty()) throw ParseError("label '" + label + "' has an empty index");
        pos = close + 1;
    }
    if (pos < label.size()) {
        std::string rest = label.substr(pos);
        if (rest != ".fwd" && rest != ".bwd") throw ParseError("label '" + label + "' has trailing '" + rest + "'");
        info.part = rest.substr(1);
    }
    return info;
}

namespace {

// Index kinds: 'i' level or bit position, 'b' bit, 'a' letter, 's' state, 't' transition.
struct SchemaShape {
    std::string kinds;
    bool equivalence = false;
};

const std::map<std::string, SchemaShape>& shapes() {
    static const std::map<std::string, SchemaShape> m = {
        {"LvlCov", {""}},
        {"LvlDisj", {"ii"}},
        {"all-loops-but-next", {""}},
        {"leaves-next-loop", {"", true}},
        {"LRCov", {""}},
        {"LRDisj", {""}},
        {"LsuccLvl", {"i"}},
        {"RsuccLvl", {"i"}},
        {"LBitZero", {"i"}},
        {"RBitOne", {"i"}},
        {"AdDisj", {"i"}},
        {"AdLvlDisj", {"iib"}},
        {"PropBit", {"ib"}},
        {"StCov", {"", true}},
        {"StDisj", {"ss"}},
        {"LetDisj", {""}},
        {"LetCov", {"", true}},
        {"LetConDisj", {""}},
        {"LetConCov", {"", true}},
        {"EncLetZero", {""}},
        {"EncLetOne", {""}},
        {"HdPosCov", {"i", true}},
        {"HdPosDisj", {"i"}},
        {"PropHdPos", {"ib"}},
        {"HdHereCov", {"", true}},
        {"HdHereEqualAdr", {""}},
        {"NoHdHereDiffrAdr", {""}},
        {"HdLetCov", {"", true}},
        {"RetrHdLet", {"a"}},
        {"HdLetUnique", {"a"}},
        {"TrCov", {"", true}},
        {"TrInitDisj", {"t"}},
        {"TrDisj", {"tt"}},
        {"PHdPosCov", {"i", true}},
        {"PHdPosDisj", {"i"}},
        {"PropPHdPos", {"ib"}},
        {"PHdHereCov", {"", true}},
        {"PHdHereEqualAdr", {""}},
        {"NoPHdHereDiffAdr", {""}},
        {"PHdLetCov", {"", true}},
        {"RetrPHdLet", {"a"}},
        {"PHdLetUnique", {"a"}},
        {"PHdAbvCov", {"", true}},
        {"PHdAbvDisj", {""}},
        {"PropPHdAbv", {""}},
        {"PropNoPHdAbv", {""}},
        {"TransiCons", {"t"}},
        {"InitConf", {""}},
        {"EConfSucc", {"s"}},
        {"AConfSucc", {"s"}},
        {"FinConfSucc", {"s"}},
        {"TransHeadPos", {"ib"}},
        {"TransiExistState", {"sa"}},
        {"TransiUnivStateL", {"sa"}},
        {"TransiUnivStateR", {"sa"}},
        {"NoRejectState", {""}},
        {"InitIndividual", {""}},
        {"InitAux", {""}},
    };
    return m;
}

bool is_number(const std::string& s) {
    return !s.empty() && s.size() < 9 && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

const std::map<std::string, std::size_t>& schema_arities() {
    static const std::map<std::string, std::size_t> m = [] {
        std::map<std::string, std::size_t> out;
        for (const auto& [k, v] : shapes()) out.emplace(k, v.kinds.size());
        return out;
    }();
    return m;
}

bool label_is_valid(const LabelInfo& info, const Atm& atm) {
    auto it = shapes().find(info.schema);
    if (it == shapes().end()) return false;
    const auto& shape = it->second;
    if (shape.equivalence != !info.part.empty()) return false;
    if (info.indices.size() != shape.kinds.size()) return false;
    const int limit = atm.n() + 1;
    for (std::size_t k = 0; k < shape.kinds.size(); ++k) {
        const std::string& ix = info.indices[k];
        switch (shape.kinds[k]) {
            case 'i':
                if (!is_number(ix) || std::stoi(ix) > limit) return false;
                break;
            case 'b':
            case 'a':
                if (ix != "0" && ix != "1") return false;
                break;
            case 's':
                if (!atm.has_state(ix)) return false;
                break;
            case 't': {
                bool found = false;
                for (const auto& t : atm.delta()) found = found || transition_key(t) == ix;
                if (!found) return false;
                break;
            }
        }
    }
    return true;
}

std::map<std::string, std::size_t> count_by_schema(const KnowledgeBase& kb) {
    std::map<std::string, std::size_t> out;
    auto bump = [&](const std::string& label) { ++out[parse_label(label).schema]; };
    for (const auto& a : kb.abox) std::visit([&](const auto& x) { bump(x.label); }, a);
    for (const auto& g : kb.tbox) bump(g.label);
    return out;
}

}  // namespace selfcq
