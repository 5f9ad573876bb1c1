#pragma once

// ALC with the Self concept: concept syntax, knowledge bases, finite
// interpretations and a model checker.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace selfcq {

enum class ConceptKind : std::uint8_t {
    top,
    bottom,
    name,
    negation,
    conjunction,
    disjunction,
    exists,
    forall,
    implication,
    self,
};

/// Immutable concept expression. Copies share structure.
class Concept {
public:
    Concept();  // top

    ConceptKind kind() const noexcept { return node_->kind; }
    /// Concept name for `name`, role name for `exists`, `forall`, `self`.
    const std::string& name() const noexcept { return node_->name; }
    const std::string& role() const noexcept { return node_->name; }
    /// Operand of negation/exists/forall, left operand of binary nodes.
    const Concept& left() const { return *node_->left; }
    const Concept& right() const { return *node_->right; }
    const Concept& operand() const { return *node_->left; }

    bool is_binary() const noexcept {
        return kind() == ConceptKind::conjunction || kind() == ConceptKind::disjunction ||
               kind() == ConceptKind::implication;
    }

    /// Number of AST nodes.
    std::size_t size() const;

    friend int compare(const Concept& a, const Concept& b);
    friend bool operator==(const Concept& a, const Concept& b) { return compare(a, b) == 0; }
    friend bool operator<(const Concept& a, const Concept& b) { return compare(a, b) < 0; }

    static Concept make(ConceptKind k, std::string name, std::optional<Concept> l = std::nullopt,
                        std::optional<Concept> r = std::nullopt);

private:
    struct Node {
        ConceptKind kind;
        std::string name;
        std::shared_ptr<const Concept> left, right;
    };
    std::shared_ptr<const Node> node_;
};

Concept top();
Concept bottom();
Concept atomic(const std::string& name);
Concept negate(const Concept& c);
Concept conj(const Concept& c, const Concept& d);
Concept disj(const Concept& c, const Concept& d);
Concept exists(const std::string& role, const Concept& c);
Concept forall(const std::string& role, const Concept& c);
Concept implies(const Concept& c, const Concept& d);
Concept self(const std::string& role);

/// Right-nested folds; empty input gives top / bottom.
Concept conj_all(const std::vector<Concept>& cs);
Concept disj_all(const std::vector<Concept>& cs);

/// forall r1. forall r2. ... c
Concept forall_chain(const std::vector<std::string>& roles, const Concept& c);
Concept exists_chain(const std::vector<std::string>& roles, const Concept& c);

/// The dltext surface syntax, e.g. "(and A (exists r top))".
std::string to_dltext(const Concept& c);

void collect_names(const Concept& c, std::set<std::string>& concepts, std::set<std::string>& roles);

struct Gci {
    Concept lhs;
    Concept rhs;
    std::string label;

    friend bool operator==(const Gci&, const Gci&) = default;
};

struct ConceptAssertion {
    Concept expr;
    std::string individual;
    std::string label;

    friend bool operator==(const ConceptAssertion&, const ConceptAssertion&) = default;
};

struct RoleAssertion {
    std::string role;
    std::string subject;
    std::string object;
    std::string label;

    friend bool operator==(const RoleAssertion&, const RoleAssertion&) = default;
};

using Assertion = std::variant<ConceptAssertion, RoleAssertion>;

struct KnowledgeBase {
    std::vector<Assertion> abox;
    std::vector<Gci> tbox;

    std::size_t size() const { return abox.size() + tbox.size(); }
    /// Appends all axioms of `other`, keeping order.
    void append(const KnowledgeBase& other);
    void add(Gci g) { tbox.push_back(std::move(g)); }

    friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

/// Adds C sub D and D sub C labelled "<label>.fwd" / "<label>.bwd".
void add_equivalence(std::vector<Gci>& out, const Concept& c, const Concept& d, const std::string& label);

using Element = std::string;
using ElementPair = std::pair<Element, Element>;

/// Finite interpretation. Names without an entry have the empty extension;
/// empty extensions are never stored, so structural equality is meaningful.
class Interpretation {
public:
    void add_element(const Element& e) { domain_.insert(e); }
    bool has_element(const Element& e) const { return domain_.count(e) != 0; }

    /// The element must already be in the domain (PreconditionError otherwise).
    void add_concept(const std::string& name, const Element& e);
    void remove_concept(const std::string& name, const Element& e);
    bool in_concept(const std::string& name, const Element& e) const;

    void add_role(const std::string& role, const Element& from, const Element& to);
    void remove_role(const std::string& role, const Element& from, const Element& to);
    bool has_role(const std::string& role, const Element& from, const Element& to) const;

    void set_individual(const std::string& name, const Element& e);

    const std::set<Element>& domain() const noexcept { return domain_; }
    const std::map<std::string, std::set<Element>>& concepts() const noexcept { return concepts_; }
    const std::map<std::string, std::set<ElementPair>>& roles() const noexcept { return roles_; }
    const std::map<std::string, Element>& individuals() const noexcept { return individuals_; }

    const std::set<Element>& extension(const std::string& name) const;
    const std::set<ElementPair>& relation(const std::string& role) const;

    /// Union with another interpretation; individuals of `other` win on clashes.
    void merge(const Interpretation& other);

    std::size_t size() const noexcept { return domain_.size(); }

    friend bool operator==(const Interpretation&, const Interpretation&) = default;

private:
    std::set<Element> domain_;
    std::map<std::string, std::set<Element>> concepts_;
    std::map<std::string, std::set<ElementPair>> roles_;
    std::map<std::string, Element> individuals_;
};

std::set<Element> eval_concept(const Interpretation& interp, const Concept& c);

struct GciVerdict {
    bool holds = true;
    std::optional<Element> witness;  // an element of lhs outside rhs
};

GciVerdict check_gci(const Interpretation& interp, const Gci& gci);

struct AxiomVerdict {
    std::string label;
    bool holds = true;
    std::optional<Element> witness;
    std::string error;  // non-empty when the axiom could not be evaluated
};

struct KbReport {
    std::vector<AxiomVerdict> verdicts;  // ABox first, then TBox, in input order

    bool all_hold() const;
    /// Labels of failing axioms, in report order.
    std::vector<std::string> failing() const;
};

KbReport check_kb(const Interpretation& interp, const KnowledgeBase& kb);

}  // namespace selfcq
