#include "selfcq/dl.hpp"

#include <boost/dynamic_bitset.hpp>
#include <unordered_map>

#include "selfcq/error.hpp"

namespace selfcq {

Concept::Concept() {
    static const auto top_node = std::make_shared<const Node>(Node{ConceptKind::top, "", nullptr, nullptr});
    node_ = top_node;
}

Concept Concept::make(ConceptKind k, std::string name, std::optional<Concept> l, std::optional<Concept> r) {
    Concept c;
    c.node_ = std::make_shared<const Node>(Node{k, std::move(name),
                                                l ? std::make_shared<const Concept>(*l) : nullptr,
                                                r ? std::make_shared<const Concept>(*r) : nullptr});
    return c;
}

std::size_t Concept::size() const {
    std::size_t n = 1;
    if (node_->left) n += node_->left->size();
    if (node_->right) n += node_->right->size();
    return n;
}

int compare(const Concept& a, const Concept& b) {
    if (a.node_ == b.node_) return 0;
    if (a.kind() != b.kind()) return a.kind() < b.kind() ? -1 : 1;
    if (int c = a.name().compare(b.name()); c != 0) return c < 0 ? -1 : 1;
    if (a.node_->left) {
        if (int c = compare(*a.node_->left, *b.node_->left); c != 0) return c;
    }
    if (a.node_->right) return compare(*a.node_->right, *b.node_->right);
    return 0;
}

Concept top() { return Concept(); }
Concept bottom() { return Concept::make(ConceptKind::bottom, ""); }

Concept atomic(const std::string& name) {
    if (name.empty()) throw PreconditionError("empty concept name");
    return Concept::make(ConceptKind::name, name);
}

Concept negate(const Concept& c) { return Concept::make(ConceptKind::negation, "", c); }
Concept conj(const Concept& c, const Concept& d) { return Concept::make(ConceptKind::conjunction, "", c, d); }
Concept disj(const Concept& c, const Concept& d) { return Concept::make(ConceptKind::disjunction, "", c, d); }
Concept implies(const Concept& c, const Concept& d) { return Concept::make(ConceptKind::implication, "", c, d); }

Concept exists(const std::string& role, const Concept& c) {
    if (role.empty()) throw PreconditionError("empty role name");
    return Concept::make(ConceptKind::exists, role, c);
}

Concept forall(const std::string& role, const Concept& c) {
    if (role.empty()) throw PreconditionError("empty role name");
    return Concept::make(ConceptKind::forall, role, c);
}

Concept self(const std::string& role) {
    if (role.empty()) throw PreconditionError("empty role name");
    return Concept::make(ConceptKind::self, role);
}

Concept conj_all(const std::vector<Concept>& cs) {
    if (cs.empty()) return top();
    Concept acc = cs.back();
    for (auto it = cs.rbegin() + 1; it != cs.rend(); ++it) acc = conj(*it, acc);
    return acc;
}

Concept disj_all(const std::vector<Concept>& cs) {
    if (cs.empty()) return bottom();
    Concept acc = cs.back();
    for (auto it = cs.rbegin() + 1; it != cs.rend(); ++it) acc = disj(*it, acc);
    return acc;
}

Concept forall_chain(const std::vector<std::string>& roles, const Concept& c) {
    Concept acc = c;
    for (auto it = roles.rbegin(); it != roles.rend(); ++it) acc = forall(*it, acc);
    return acc;
}

Concept exists_chain(const std::vector<std::string>& roles, const Concept& c) {
    Concept acc = c;
    for (auto it = roles.rbegin(); it != roles.rend(); ++it) acc = exists(*it, acc);
    return acc;
}

namespace {

void render(const Concept& c, std::string& out) {
    switch (c.kind()) {
        case ConceptKind::top: out += "top"; return;
        case ConceptKind::bottom: out += "bot"; return;
        case ConceptKind::name: out += c.name(); return;
        case ConceptKind::negation:
            out += "(not ";
            render(c.operand(), out);
            out += ')';
            return;
        case ConceptKind::conjunction:
        case ConceptKind::disjunction:
        case ConceptKind::implication:
            out += c.kind() == ConceptKind::conjunction   ? "(and "
                   : c.kind() == ConceptKind::disjunction ? "(or "
                                                          : "(implies ";
            render(c.left(), out);
            out += ' ';
            render(c.right(), out);
            out += ')';
            return;
        case ConceptKind::exists:
        case ConceptKind::forall:
            out += c.kind() == ConceptKind::exists ? "(exists " : "(forall ";
            out += c.role();
            out += ' ';
            render(c.operand(), out);
            out += ')';
            return;
        case ConceptKind::self:
            out += "(self ";
            out += c.role();
            out += ')';
            return;
    }
}

}  // namespace

std::string to_dltext(const Concept& c) {
    std::string out;
    render(c, out);
    return out;
}

void collect_names(const Concept& c, std::set<std::string>& concepts, std::set<std::string>& roles) {
    switch (c.kind()) {
        case ConceptKind::top:
        case ConceptKind::bottom: return;
        case ConceptKind::name: concepts.insert(c.name()); return;
        case ConceptKind::self: roles.insert(c.role()); return;
        case ConceptKind::exists:
        case ConceptKind::forall: roles.insert(c.role()); [[fallthrough]];
        case ConceptKind::negation: collect_names(c.operand(), concepts, roles); return;
        default:
            collect_names(c.left(), concepts, roles);
            collect_names(c.right(), concepts, roles);
    }
}

void KnowledgeBase::append(const KnowledgeBase& other) {
    abox.insert(abox.end(), other.abox.begin(), other.abox.end());
    tbox.insert(tbox.end(), other.tbox.begin(), other.tbox.end());
}

void add_equivalence(std::vector<Gci>& out, const Concept& c, const Concept& d, const std::string& label) {
    out.push_back({c, d, label + ".fwd"});
    out.push_back({d, c, label + ".bwd"});
}

// ---------------------------------------------------------------------------
// Interpretation

namespace {

const std::set<Element>& empty_set() {
    static const std::set<Element> s;
    return s;
}

const std::set<ElementPair>& empty_relation() {
    static const std::set<ElementPair> s;
    return s;
}

}  // namespace

void Interpretation::add_concept(const std::string& name, const Element& e) {
    if (!has_element(e)) throw PreconditionError("element '" + e + "' of concept " + name + " is not in the domain");
    concepts_[name].insert(e);
}

void Interpretation::remove_concept(const std::string& name, const Element& e) {
    auto it = concepts_.find(name);
    if (it == concepts_.end()) return;
    it->second.erase(e);
    if (it->second.empty()) concepts_.erase(it);
}

bool Interpretation::in_concept(const std::string& name, const Element& e) const {
    return extension(name).count(e) != 0;
}

void Interpretation::add_role(const std::string& role, const Element& from, const Element& to) {
    if (!has_element(from) || !has_element(to))
        throw PreconditionError("pair ('" + from + "','" + to + "') of role " + role + " is not in the domain");
    roles_[role].emplace(from, to);
}

void Interpretation::remove_role(const std::string& role, const Element& from, const Element& to) {
    auto it = roles_.find(role);
    if (it == roles_.end()) return;
    it->second.erase({from, to});
    if (it->second.empty()) roles_.erase(it);
}

bool Interpretation::has_role(const std::string& role, const Element& from, const Element& to) const {
    return relation(role).count({from, to}) != 0;
}

void Interpretation::set_individual(const std::string& name, const Element& e) {
    if (!has_element(e)) throw PreconditionError("individual " + name + " maps outside the domain");
    individuals_[name] = e;
}

const std::set<Element>& Interpretation::extension(const std::string& name) const {
    auto it = concepts_.find(name);
    return it == concepts_.end() ? empty_set() : it->second;
}

const std::set<ElementPair>& Interpretation::relation(const std::string& role) const {
    auto it = roles_.find(role);
    return it == roles_.end() ? empty_relation() : it->second;
}

void Interpretation::merge(const Interpretation& other) {
    domain_.insert(other.domain_.begin(), other.domain_.end());
    for (const auto& [n, ext] : other.concepts_) concepts_[n].insert(ext.begin(), ext.end());
    for (const auto& [r, rel] : other.roles_) roles_[r].insert(rel.begin(), rel.end());
    for (const auto& [a, e] : other.individuals_) individuals_[a] = e;
}

// ---------------------------------------------------------------------------
// Evaluation over an indexed snapshot

namespace {

using Bits = boost::dynamic_bitset<>;

class Evaluator {
public:
    explicit Evaluator(const Interpretation& interp) : interp_(interp) {
        elements_.assign(interp.domain().begin(), interp.domain().end());
        for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
    }

    std::size_t size() const { return elements_.size(); }
    const Element& element(std::size_t i) const { return elements_[i]; }
    std::optional<std::size_t> index(const Element& e) const {
        auto it = index_.find(e);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    Bits eval(const Concept& c) {
        const std::size_t n = size();
        switch (c.kind()) {
            case ConceptKind::top: return Bits(n).set();
            case ConceptKind::bottom: return Bits(n);
            case ConceptKind::name: return concept_bits(c.name());
            case ConceptKind::negation: return ~eval(c.operand());
            case ConceptKind::conjunction: return eval(c.left()) & eval(c.right());
            case ConceptKind::disjunction: return eval(c.left()) | eval(c.right());
            case ConceptKind::implication: return ~eval(c.left()) | eval(c.right());
            case ConceptKind::self: {
                Bits out(n);
                for (const auto& [from, to] : interp_.relation(c.role()))
                    if (from == to) out.set(index_.at(from));
                return out;
            }
            case ConceptKind::exists: {
                Bits inner = eval(c.operand());
                Bits out(n);
                for (const auto& [from, to] : interp_.relation(c.role()))
                    if (inner.test(index_.at(to))) out.set(index_.at(from));
                return out;
            }
            case ConceptKind::forall: {
                Bits inner = eval(c.operand());
                Bits out(n);
                out.set();
                for (const auto& [from, to] : interp_.relation(c.role()))
                    if (!inner.test(index_.at(to))) out.reset(index_.at(from));
                return out;
            }
        }
        return Bits(n);
    }

    std::set<Element> to_set(const Bits& b) const {
        std::set<Element> out;
        for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.insert(elements_[i]);
        return out;
    }

private:
    const Bits& concept_bits(const std::string& name) {
        auto it = cache_.find(name);
        if (it != cache_.end()) return it->second;
        Bits b(size());
        for (const auto& e : interp_.extension(name)) b.set(index_.at(e));
        return cache_.emplace(name, std::move(b)).first->second;
    }

    const Interpretation& interp_;
    std::vector<Element> elements_;
    std::unordered_map<Element, std::size_t> index_;
    std::map<std::string, Bits> cache_;
};

GciVerdict check_with(Evaluator& ev, const Gci& gci) {
    Bits bad = ev.eval(gci.lhs) & ~ev.eval(gci.rhs);
    auto first = bad.find_first();
    if (first == Bits::npos) return {true, std::nullopt};
    return {false, ev.element(first)};
}

}  // namespace

std::set<Element> eval_concept(const Interpretation& interp, const Concept& c) {
    Evaluator ev(interp);
    return ev.to_set(ev.eval(c));
}

GciVerdict check_gci(const Interpretation& interp, const Gci& gci) {
    Evaluator ev(interp);
    return check_with(ev, gci);
}

bool KbReport::all_hold() const {
    for (const auto& v : verdicts)
        if (!v.holds) return false;
    return true;
}

std::vector<std::string> KbReport::failing() const {
    std::vector<std::string> out;
    for (const auto& v : verdicts)
        if (!v.holds) out.push_back(v.label);
    return out;
}

KbReport check_kb(const Interpretation& interp, const KnowledgeBase& kb) {
    Evaluator ev(interp);
    KbReport report;
    auto lookup = [&](const std::string& ind) -> std::optional<Element> {
        auto it = interp.individuals().find(ind);
        if (it == interp.individuals().end()) return std::nullopt;
        return it->second;
    };
    for (const auto& a : kb.abox) {
        AxiomVerdict v;
        if (const auto* ca = std::get_if<ConceptAssertion>(&a)) {
            v.label = ca->label;
            if (auto e = lookup(ca->individual)) {
                v.holds = ev.eval(ca->expr).test(*ev.index(*e));
                if (!v.holds) v.witness = *e;
            } else {
                v.holds = false;
                v.error = "individual " + ca->individual + " is not mapped";
            }
        } else {
            const auto& ra = std::get<RoleAssertion>(a);
            v.label = ra.label;
            auto s = lookup(ra.subject);
            auto o = lookup(ra.object);
            if (s && o) {
                v.holds = interp.has_role(ra.role, *s, *o);
                if (!v.holds) v.witness = *s;
            } else {
                v.holds = false;
                v.error = "individual " + (s ? ra.object : ra.subject) + " is not mapped";
            }
        }
        report.verdicts.push_back(std::move(v));
    }
    for (const auto& g : kb.tbox) {
        GciVerdict gv = check_with(ev, g);
        report.verdicts.push_back({g.label, gv.holds, gv.witness, {}});
    }
    return report;
}

}  // namespace selfcq
