#pragma once

// Conjunctive queries over finite interpretations.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "selfcq/dl.hpp"

namespace selfcq {

using Var = std::string;

struct ConceptAtom {
    std::string name;
    Var var;

    friend bool operator==(const ConceptAtom&, const ConceptAtom&) = default;
    friend auto operator<=>(const ConceptAtom&, const ConceptAtom&) = default;
};

struct RoleAtom {
    std::string role;
    Var from;
    Var to;

    friend bool operator==(const RoleAtom&, const RoleAtom&) = default;
    friend auto operator<=>(const RoleAtom&, const RoleAtom&) = default;
};

struct Cq {
    std::set<ConceptAtom> concept_atoms;
    std::set<RoleAtom> role_atoms;
    std::vector<Var> answer;  // distinguished variables, in order

    std::set<Var> variables() const;
    std::size_t atom_count() const { return concept_atoms.size() + role_atoms.size(); }

    /// Throws QueryError if the query has no atoms or a distinguished variable
    /// does not occur in any atom.
    void validate() const;

    /// Adds the atoms of `other`; distinguished variables stay as they are.
    void conjoin(const Cq& other);

    /// Applies a variable substitution (variables not in `m` are kept).
    Cq renamed(const std::map<Var, Var>& m) const;

    friend bool operator==(const Cq&, const Cq&) = default;
};

/// Path syntax: each segment is either a guard "A?" or a role name. Produces
/// the conjunction from `from` to `to` with fresh variables "<label>#<k>"
/// (k counts from 1). Distinguished variables are (from, to).
/// Throws QueryError("degenerate path") when no role occurs.
Cq expand_path(const std::vector<std::string>& segments, const Var& from, const Var& to, const std::string& label);

struct MatchBudget {
    /// Upper bound on search nodes visited; exceeded -> BudgetExceeded.
    std::uint64_t max_steps = 200'000'000;
};

using AnswerTuple = std::vector<Element>;

/// All projections of matches onto the distinguished variables, sorted.
std::set<AnswerTuple> find_matches(const Interpretation& interp, const Cq& q, const MatchBudget& budget = {});

bool exists_match(const Interpretation& interp, const Cq& q, const MatchBudget& budget = {});

/// A full match extending `fixed`, or none.
std::optional<std::map<Var, Element>> find_first_match(const Interpretation& interp, const Cq& q,
                                                       const std::map<Var, Element>& fixed = {},
                                                       const MatchBudget& budget = {});

/// Checks that `m` is a match of q in interp (all atoms satisfied).
bool is_match(const Interpretation& interp, const Cq& q, const std::map<Var, Element>& m);

/// The canonical query of `src`: one variable per element ("v:" + id) and one
/// atom per membership.
Cq canonical_query(const Interpretation& src);

using Homomorphism = std::map<Element, Element>;

/// A concept- and role-name preserving map src -> dst extending `anchors`.
/// Throws std::invalid_argument when an anchor leaves either domain.
std::optional<Homomorphism> find_homomorphism(const Interpretation& src, const Interpretation& dst,
                                              const Homomorphism& anchors = {}, const MatchBudget& budget = {});

bool is_homomorphism(const Interpretation& src, const Interpretation& dst, const Homomorphism& h);

}  // namespace selfcq
