#pragma once

// Seeded generators for small random instances (property tests and the
// round-trip check of the lemma suite).

#include <cstdint>
#include <random>

#include "selfcq/atm.hpp"
#include "selfcq/cq.hpp"
#include "selfcq/dl.hpp"

namespace selfcq {

using Rng = std::mt19937_64;

struct RandomAtmShape {
    int n = 1;
    int extra_states = 2;  // besides s_init, s_acc, s_rej
};

/// Always returns a machine that passes validate_atm.
Atm random_atm(Rng& rng, const RandomAtmShape& shape = {});

/// Concept over names A0..A{names-1} and roles r0..r{roles-1}.
Concept random_concept(Rng& rng, int depth, int names = 3, int roles = 2);

/// Domain "e0".."e{size-1}", concept names A0..A2, roles r0..r1, each
/// membership present with probability `density`.
Interpretation random_interpretation(Rng& rng, int size, double density = 0.3);

/// Non-degenerate query over variables v0..v{vars-1} using the names above.
Cq random_cq(Rng& rng, int vars, int atoms, int answer_vars);

KnowledgeBase random_kb(Rng& rng, int axioms);

}  // namespace selfcq
