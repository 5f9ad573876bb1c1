#pragma once

// Axiom schemata and queries of the reduction from ATM acceptance to
// non-entailment of a conjunctive query over an ALCself knowledge base.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "selfcq/atm.hpp"
#include "selfcq/cq.hpp"
#include "selfcq/dl.hpp"

namespace selfcq {

// Symbol names. Indexed families are mangled to ASCII: "Lvl_0", "Ad_2^1",
// "PrTr_{s.a.b.s'.d}", letters 𝟘/𝟙 as "zz0"/"zz1".
namespace sym {

std::string lvl(int i);
std::string ad(int i, int b);
inline const std::string L = "L";
inline const std::string R = "R";
std::string ell(int i);
std::string r(int i);
inline const std::string next = "next";

std::string st(const StateId& s);
inline const std::string hd_here = "HdHere";
inline const std::string no_hd_here = "NoHdHere";
std::string hd_pos(int i, int b);
std::string hd_let(int a);
std::string let(int a);
std::string zz(int b);

std::string pr_tr(const Transition& t);
inline const std::string init = "Init";
inline const std::string phd_here = "PHdHere";
inline const std::string no_phd_here = "NoPHdHere";
inline const std::string phd_abv = "PHdAbv";
inline const std::string no_phd_abv = "NoPHdAbv";
std::string phd_pos(int i, int b);
std::string phd_let(int a);

inline const std::string aux = "aux";
inline const std::string individual = "a";

}  // namespace sym

// Knowledge bases. `n` is the depth of a unit; configuration trees use
// units of depth N+1 where N = atm.n().

std::vector<Gci> build_kb_unit(int n);
std::vector<Gci> build_kb_conf(const Atm& atm);
std::vector<Gci> build_kb_enr(const Atm& atm);
KnowledgeBase build_kb_machine(const Atm& atm, bool tbox_only = false);

/// The concept "A + d = B" over an N-bit address with index 1 most significant.
Concept increment_gadget(int N, int d);

// Queries. Local variables are namespaced by `label`.

/// (Lvl_0?; ell_1; r_1; ...; ell_n; r_n; Lvl_n?)(x, y)
Cq build_query_rl(int n, const Var& x = "x", const Var& y = "y", const std::string& label = "rl");

/// (ell_1; r_1; ...; ell_{N+1}; r_{N+1})(x, y); with `replace` = (i, b) the
/// ell_i; r_i block becomes ell_i (b = 0) or r_i (b = 1).
Cq build_query_down(int N, const Var& x, const Var& y, const std::string& label,
                    std::optional<std::pair<int, int>> replace = std::nullopt);

Cq build_query_main(int N, const Var& x = "x", const Var& y = "y", const std::string& label = "main");
Cq build_query_ith_bit(int i, int b, int N, const Var& x = "x", const Var& y = "y", const std::string& label = "");
Cq build_query_addr(int i, int N, const Var& x = "x", const Var& y = "y", const std::string& label = "");
Cq build_query_machine(const Atm& atm);

struct ReductionBundle {
    KnowledgeBase kb;
    Cq query;
    std::map<std::string, std::size_t> stats;
    std::string fingerprint;
};

ReductionBundle reduce(const Atm& atm, bool tbox_only = false);

// Provenance labels, e.g. "LvlDisj[1,3]", "StCov.fwd", "TransiCons[s.0.1.t.+1]".

struct LabelInfo {
    std::string schema;
    std::vector<std::string> indices;
    std::string part;  // "", "fwd" or "bwd"
};

/// Throws ParseError on malformed labels.
LabelInfo parse_label(const std::string& label);

/// Every schema name the generator can emit, with its number of indices.
const std::map<std::string, std::size_t>& schema_arities();

/// True iff the label names a known schema with indices valid for `atm`.
bool label_is_valid(const LabelInfo& info, const Atm& atm);

/// Axiom counts per schema (".fwd"/".bwd" halves counted separately).
std::map<std::string, std::size_t> count_by_schema(const KnowledgeBase& kb);

}  // namespace selfcq
