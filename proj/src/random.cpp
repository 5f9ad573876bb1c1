#include "selfcq/random.hpp"

#include <algorithm>

#include "selfcq/error.hpp"

namespace selfcq {

namespace {

int pick(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

std::string concept_name(int i) { return "A" + std::to_string(i); }
std::string role_name(int i) { return "r" + std::to_string(i); }

}  // namespace

Atm random_atm(Rng& rng, const RandomAtmShape& shape) {
    for (;;) {
        RawAtm raw;
        raw.n = shape.n;
        raw.initial = "s_init";
        raw.accepting = "s_acc";
        raw.rejecting = "s_rej";
        raw.states = {"s_init"};
        for (int i = 0; i < shape.extra_states; ++i) raw.states.push_back("q" + std::to_string(i));
        raw.states.push_back("s_acc");
        raw.states.push_back("s_rej");
        for (const auto& s : raw.states)
            if (s != "s_init" && coin(rng)) raw.existential.push_back(s);
        auto existential = [&](const StateId& s) {
            return std::find(raw.existential.begin(), raw.existential.end(), s) != raw.existential.end();
        };

        bool ok = true;
        for (const auto& s : raw.states) {
            if (s == raw.accepting || s == raw.rejecting) continue;
            std::vector<Transition> options;
            for (const auto& to : raw.states)
                if (existential(to) != existential(s))
                    for (int b = 0; b < 2; ++b)
                        for (int d : {-1, 1}) options.push_back({s, 0, b, to, d});
            if (options.size() < 2) {
                ok = false;
                break;
            }
            for (int a = 0; a < 2; ++a) {
                std::shuffle(options.begin(), options.end(), rng);
                for (int k = 0; k < 2; ++k) {
                    Transition t = options[static_cast<std::size_t>(k)];
                    t.read = a;
                    raw.delta.push_back(t);
                }
            }
        }
        if (!ok) continue;
        try {
            return validate_atm(raw);
        } catch (const AtmValidationError&) {
        }
    }
}

Concept random_concept(Rng& rng, int depth, int names, int roles) {
    if (depth <= 0 || coin(rng, 0.2)) {
        switch (pick(rng, 0, 5)) {
            case 0: return top();
            case 1: return bottom();
            case 2: return self(role_name(pick(rng, 0, roles - 1)));
            default: return atomic(concept_name(pick(rng, 0, names - 1)));
        }
    }
    auto sub = [&] { return random_concept(rng, depth - 1, names, roles); };
    const std::string r = role_name(pick(rng, 0, roles - 1));
    switch (pick(rng, 0, 5)) {
        case 0: return negate(sub());
        case 1: return conj(sub(), sub());
        case 2: return disj(sub(), sub());
        case 3: return implies(sub(), sub());
        case 4: return exists(r, sub());
        default: return forall(r, sub());
    }
}

Interpretation random_interpretation(Rng& rng, int size, double density) {
    Interpretation out;
    std::vector<Element> dom;
    for (int i = 0; i < size; ++i) {
        dom.push_back("e" + std::to_string(i));
        out.add_element(dom.back());
    }
    for (int c = 0; c < 3; ++c)
        for (const auto& e : dom)
            if (coin(rng, density)) out.add_concept(concept_name(c), e);
    for (int r = 0; r < 2; ++r)
        for (const auto& e : dom)
            for (const auto& f : dom)
                if (coin(rng, density)) out.add_role(role_name(r), e, f);
    if (!dom.empty() && coin(rng)) out.set_individual("a", dom[static_cast<std::size_t>(pick(rng, 0, size - 1))]);
    return out;
}

Cq random_cq(Rng& rng, int vars, int atoms, int answer_vars) {
    if (vars < 1 || atoms < 1) throw PreconditionError("random_cq needs at least one variable and one atom");
    auto var = [&] { return "v" + std::to_string(pick(rng, 0, vars - 1)); };
    Cq q;
    for (int k = 0; k < atoms; ++k) {
        if (coin(rng, 0.4))
            q.concept_atoms.insert({concept_name(pick(rng, 0, 2)), var()});
        else
            q.role_atoms.insert({role_name(pick(rng, 0, 1)), var(), var()});
    }
    const auto vars_used = q.variables();
    std::vector<Var> used(vars_used.begin(), vars_used.end());
    std::shuffle(used.begin(), used.end(), rng);
    used.resize(std::min(used.size(), static_cast<std::size_t>(std::max(answer_vars, 0))));
    q.answer = used;
    return q;
}

KnowledgeBase random_kb(Rng& rng, int axioms) {
    KnowledgeBase kb;
    for (int k = 0; k < axioms; ++k) {
        const std::string label = "ax" + std::to_string(k);
        switch (pick(rng, 0, 3)) {
            case 0: kb.abox.push_back(ConceptAssertion{random_concept(rng, 2), "a", label}); break;
            case 1: kb.abox.push_back(RoleAssertion{role_name(pick(rng, 0, 1)), "a", "b", label}); break;
            default: kb.add({random_concept(rng, 3), random_concept(rng, 3), label});
        }
    }
    return kb;
}

}  // namespace selfcq
