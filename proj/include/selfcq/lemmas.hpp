#pragma once

// Desk-scale verification of the reduction's correctness lemmas. Each suite
// returns one result line; `verify-lemmas` prints them as a table.

#include <optional>
#include <string>
#include <vector>

#include "selfcq/atm.hpp"

namespace selfcq {

enum class Verdict { pass, fail, skipped };

const char* to_string(Verdict v);

struct SuiteResult {
    int id = 0;
    std::string name;
    Verdict verdict = Verdict::pass;
    std::string detail;
    double seconds = 0;
};

struct LemmaOptions {
    int max_unit_depth = 3;
    /// Machine for suites 2 to 7; M_acc when empty.
    std::optional<Atm> atm;
    /// Largest N for the polynomiality suite.
    int max_poly_n = 8;
    unsigned long long seed = 20240521;
};

SuiteResult verify_units(const LemmaOptions& opt);
SuiteResult verify_config_trees(const LemmaOptions& opt);
SuiteResult verify_enriched_trees(const LemmaOptions& opt);
SuiteResult verify_homomorphisms(const LemmaOptions& opt);
SuiteResult verify_match_sets(const LemmaOptions& opt);
SuiteResult verify_dichotomy(const LemmaOptions& opt);
SuiteResult verify_polynomiality(const LemmaOptions& opt);
SuiteResult verify_determinism(const LemmaOptions& opt);

std::vector<SuiteResult> verify_all(const LemmaOptions& opt);

/// Schema names of the failing axioms (indices and .fwd/.bwd dropped).
std::vector<std::string> failing_schemas(const std::vector<std::string>& labels);

/// Closed forms for M's reduction as functions of N (other machine
/// parameters taken from `atm`).
std::size_t expected_kb_size(const Atm& atm, int N);
std::size_t expected_query_atoms(int N);

}  // namespace selfcq
