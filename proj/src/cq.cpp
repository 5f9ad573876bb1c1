#include "selfcq/cq.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <stdexcept>
#include <unordered_map>

#include "selfcq/error.hpp"

namespace selfcq {

std::set<Var> Cq::variables() const {
    std::set<Var> out;
    for (const auto& a : concept_atoms) out.insert(a.var);
    for (const auto& a : role_atoms) {
        out.insert(a.from);
        out.insert(a.to);
    }
    return out;
}

void Cq::validate() const {
    if (atom_count() == 0) throw QueryError("degenerate query");
    const auto vars = variables();
    for (const auto& v : answer)
        if (!vars.count(v)) throw QueryError("distinguished variable '" + v + "' does not occur in any atom");
}

void Cq::conjoin(const Cq& other) {
    concept_atoms.insert(other.concept_atoms.begin(), other.concept_atoms.end());
    role_atoms.insert(other.role_atoms.begin(), other.role_atoms.end());
}

Cq Cq::renamed(const std::map<Var, Var>& m) const {
    auto sub = [&](const Var& v) {
        auto it = m.find(v);
        return it == m.end() ? v : it->second;
    };
    Cq out;
    for (const auto& a : concept_atoms) out.concept_atoms.insert({a.name, sub(a.var)});
    for (const auto& a : role_atoms) out.role_atoms.insert({a.role, sub(a.from), sub(a.to)});
    for (const auto& v : answer) out.answer.push_back(sub(v));
    return out;
}

Cq expand_path(const std::vector<std::string>& segments, const Var& from, const Var& to, const std::string& label) {
    std::size_t roles = 0;
    for (const auto& s : segments) {
        if (s.empty() || s == "?") throw QueryError("empty path segment");
        if (s.back() != '?') ++roles;
    }
    if (roles == 0) throw QueryError("degenerate path");

    Cq q;
    q.answer = {from, to};
    Var current = from;
    std::size_t seen = 0;
    int fresh = 0;
    for (const auto& s : segments) {
        if (s.back() == '?') {
            std::string guard = s.substr(0, s.size() - 1);
            if (guard != "top") q.concept_atoms.insert({guard, current});
            continue;
        }
        ++seen;
        Var next = seen == roles ? to : label + "#" + std::to_string(++fresh);
        q.role_atoms.insert({s, current, next});
        current = next;
    }
    return q;
}

// ---------------------------------------------------------------------------
// Backtracking search with candidate sets and arc consistency

namespace {

using Bits = boost::dynamic_bitset<>;

class Matcher {
public:
    Matcher(const Interpretation& interp, const Cq& q, const MatchBudget& budget) : budget_(budget) {
        elements_.assign(interp.domain().begin(), interp.domain().end());
        for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i], i);
        const std::size_t n = elements_.size();

        auto vs = q.variables();
        vars_.assign(vs.begin(), vs.end());
        for (std::size_t i = 0; i < vars_.size(); ++i) var_index_.emplace(vars_[i], i);

        initial_.assign(vars_.size(), Bits(n).set());
        for (const auto& a : q.concept_atoms) {
            Bits ext(n);
            for (const auto& e : interp.extension(a.name)) ext.set(index_.at(e));
            initial_[var_index_.at(a.var)] &= ext;
        }
        for (const auto& a : q.role_atoms) {
            const auto& rel = interp.relation(a.role);
            std::size_t x = var_index_.at(a.from), y = var_index_.at(a.to);
            if (x == y) {
                Bits loops(n);
                for (const auto& [d, e] : rel)
                    if (d == e) loops.set(index_.at(d));
                initial_[x] &= loops;
                continue;
            }
            Edge edge{x, y, {}};
            edge.pairs.reserve(rel.size());
            for (const auto& [d, e] : rel) edge.pairs.emplace_back(index_.at(d), index_.at(e));
            edges_.push_back(std::move(edge));
        }
        for (const auto& v : q.answer) answer_.push_back(var_index_.at(v));
    }

    void fix(const Var& v, const Element& e) {
        auto vi = var_index_.find(v);
        if (vi == var_index_.end()) return;
        auto ei = index_.find(e);
        Bits b(elements_.size());
        if (ei != index_.end()) b.set(ei->second);
        initial_[vi->second] &= b;
    }

    std::set<AnswerTuple> all_answers() {
        std::set<AnswerTuple> out;
        auto dom = initial_;
        if (!propagate(dom)) return out;
        std::vector<bool> assigned(vars_.size(), false);
        collect(dom, assigned, out);
        return out;
    }

    std::optional<std::map<Var, Element>> first() {
        auto dom = initial_;
        if (!propagate(dom)) return std::nullopt;
        std::vector<bool> assigned(vars_.size(), false);
        if (!exists(dom, assigned)) return std::nullopt;
        std::map<Var, Element> out;
        for (std::size_t i = 0; i < vars_.size(); ++i) out.emplace(vars_[i], elements_[witness_[i].find_first()]);
        return out;
    }

private:
    struct Edge {
        std::size_t x, y;
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
    };

    using Domains = std::vector<Bits>;

    void tick() {
        if (++steps_ > budget_.max_steps)
            throw BudgetExceeded("match search exceeded " + std::to_string(budget_.max_steps) + " steps");
    }

    // Arc consistency over all binary atoms until fixpoint.
    bool propagate(Domains& dom) {
        const std::size_t n = elements_.size();
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& e : edges_) {
                tick();
                Bits sx(n), sy(n);
                const Bits& dx = dom[e.x];
                const Bits& dy = dom[e.y];
                for (const auto& [d, f] : e.pairs) {
                    if (dx.test(d) && dy.test(f)) {
                        sx.set(d);
                        sy.set(f);
                    }
                }
                if (sx != dx) {
                    dom[e.x] = sx;
                    changed = true;
                }
                if (sy != dom[e.y]) {
                    dom[e.y] = sy;
                    changed = true;
                }
                if (sx.none() || sy.none()) return false;
            }
        }
        for (const auto& d : dom)
            if (d.none()) return false;
        return true;
    }

    // Smallest candidate set first, ties broken by variable name (vars_ is sorted).
    std::optional<std::size_t> pick(const Domains& dom, const std::vector<bool>& assigned, bool answers_only) const {
        std::optional<std::size_t> best;
        std::size_t best_count = 0;
        auto consider = [&](std::size_t v) {
            if (assigned[v]) return;
            std::size_t c = dom[v].count();
            if (!best || c < best_count || (c == best_count && v < *best)) {
                best = v;
                best_count = c;
            }
        };
        if (answers_only) {
            for (auto v : answer_) consider(v);
        } else {
            for (std::size_t v = 0; v < vars_.size(); ++v) consider(v);
        }
        return best;
    }

    void collect(const Domains& dom, std::vector<bool>& assigned, std::set<AnswerTuple>& out) {
        tick();
        auto v = pick(dom, assigned, true);
        if (!v) {
            if (exists(dom, assigned)) {
                AnswerTuple t;
                for (auto a : answer_) t.push_back(elements_[dom[a].find_first()]);
                out.insert(std::move(t));
            }
            return;
        }
        assigned[*v] = true;
        for (auto c = dom[*v].find_first(); c != Bits::npos; c = dom[*v].find_next(c)) {
            Domains next = dom;
            next[*v].reset();
            next[*v].set(c);
            if (propagate(next)) collect(next, assigned, out);
        }
        assigned[*v] = false;
    }

    bool exists(const Domains& dom, std::vector<bool>& assigned) {
        tick();
        auto v = pick(dom, assigned, false);
        if (!v) {
            witness_ = dom;
            return true;
        }
        assigned[*v] = true;
        bool found = false;
        for (auto c = dom[*v].find_first(); c != Bits::npos && !found; c = dom[*v].find_next(c)) {
            Domains next = dom;
            next[*v].reset();
            next[*v].set(c);
            if (propagate(next)) found = exists(next, assigned);
        }
        assigned[*v] = false;
        return found;
    }

    MatchBudget budget_;
    std::uint64_t steps_ = 0;
    std::vector<Element> elements_;
    std::unordered_map<Element, std::size_t> index_;
    std::vector<Var> vars_;
    std::unordered_map<Var, std::size_t> var_index_;
    Domains initial_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> answer_;
    Domains witness_;
};

}  // namespace

std::set<AnswerTuple> find_matches(const Interpretation& interp, const Cq& q, const MatchBudget& budget) {
    q.validate();
    return Matcher(interp, q, budget).all_answers();
}

bool exists_match(const Interpretation& interp, const Cq& q, const MatchBudget& budget) {
    q.validate();
    return Matcher(interp, q, budget).first().has_value();
}

std::optional<std::map<Var, Element>> find_first_match(const Interpretation& interp, const Cq& q,
                                                       const std::map<Var, Element>& fixed,
                                                       const MatchBudget& budget) {
    Matcher m(interp, q, budget);
    for (const auto& [v, e] : fixed) m.fix(v, e);
    return m.first();
}

bool is_match(const Interpretation& interp, const Cq& q, const std::map<Var, Element>& m) {
    for (const auto& v : q.variables())
        if (!m.count(v)) return false;
    for (const auto& a : q.concept_atoms)
        if (!interp.in_concept(a.name, m.at(a.var))) return false;
    for (const auto& a : q.role_atoms)
        if (!interp.has_role(a.role, m.at(a.from), m.at(a.to))) return false;
    return true;
}

Cq canonical_query(const Interpretation& src) {
    Cq q;
    for (const auto& [name, ext] : src.concepts())
        for (const auto& e : ext) q.concept_atoms.insert({name, "v:" + e});
    for (const auto& [role, rel] : src.roles())
        for (const auto& [d, e] : rel) q.role_atoms.insert({role, "v:" + d, "v:" + e});
    return q;
}

std::optional<Homomorphism> find_homomorphism(const Interpretation& src, const Interpretation& dst,
                                              const Homomorphism& anchors, const MatchBudget& budget) {
    for (const auto& [s, d] : anchors) {
        if (!src.has_element(s)) throw std::invalid_argument("anchor '" + s + "' is not in the source domain");
        if (!dst.has_element(d)) throw std::invalid_argument("anchor target '" + d + "' is not in the target domain");
    }
    if (src.domain().empty()) return Homomorphism{};
    if (dst.domain().empty()) return std::nullopt;

    const Cq q = canonical_query(src);
    std::map<Var, Element> fixed;
    for (const auto& [s, d] : anchors) fixed.emplace("v:" + s, d);
    std::map<Var, Element> match;
    if (q.atom_count() > 0) {
        auto m = find_first_match(dst, q, fixed, budget);
        if (!m) return std::nullopt;
        match = std::move(*m);
    }
    Homomorphism h;
    for (const auto& e : src.domain()) {
        auto it = match.find("v:" + e);
        if (it != match.end()) {
            h.emplace(e, it->second);
        } else if (auto a = anchors.find(e); a != anchors.end()) {
            h.emplace(e, a->second);
        } else {
            h.emplace(e, *dst.domain().begin());  // element without any membership
        }
    }
    return h;
}

bool is_homomorphism(const Interpretation& src, const Interpretation& dst, const Homomorphism& h) {
    for (const auto& e : src.domain()) {
        auto it = h.find(e);
        if (it == h.end() || !dst.has_element(it->second)) return false;
    }
    for (const auto& [name, ext] : src.concepts())
        for (const auto& e : ext)
            if (!dst.in_concept(name, h.at(e))) return false;
    for (const auto& [role, rel] : src.roles())
        for (const auto& [d, e] : rel)
            if (!dst.has_role(role, h.at(d), h.at(e))) return false;
    return true;
}

}  // namespace selfcq
