#pragma once

// Alternating Turing machines over {0,1} with a tape of 2^n cells.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace selfcq {

using StateId = std::string;

struct Transition {
    StateId from;
    int read = 0;
    int write = 0;
    StateId to;
    int move = 1;  // -1 or +1

    friend bool operator==(const Transition&, const Transition&) = default;
    friend auto operator<=>(const Transition&, const Transition&) = default;
};

/// "s.a.b.s'.d" with d rendered as +1/-1; used in concept names and labels.
std::string transition_key(const Transition& t);

/// Unvalidated machine description as read from a file.
struct RawAtm {
    int n = 1;
    std::vector<StateId> states;
    std::vector<StateId> existential;
    StateId initial;
    StateId accepting;
    StateId rejecting;
    std::vector<Transition> delta;
};

enum class Branch : std::uint8_t { first, second };

const char* to_string(Branch b);

class Atm {
public:
    int n() const noexcept { return n_; }
    std::size_t tape_length() const noexcept { return std::size_t{1} << n_; }

    const std::vector<StateId>& states() const noexcept { return states_; }
    const std::vector<StateId>& existential_states() const noexcept { return existential_; }
    const StateId& initial() const noexcept { return initial_; }
    const StateId& accepting() const noexcept { return accepting_; }
    const StateId& rejecting() const noexcept { return rejecting_; }

    /// All transitions in canonical order: by source state (declaration order),
    /// read letter, then delta_1 before delta_2.
    const std::vector<Transition>& delta() const noexcept { return delta_; }

    bool is_existential(const StateId& s) const;
    bool is_universal(const StateId& s) const { return !is_existential(s); }
    bool is_final(const StateId& s) const { return s == accepting_ || s == rejecting_; }
    bool has_state(const StateId& s) const;
    std::size_t state_index(const StateId& s) const;

    /// delta_1(s,a) / delta_2(s,a); throws PreconditionError for final states.
    const Transition& delta_at(const StateId& s, int a, Branch b) const;

    /// Copy with a different tape exponent; transitions are independent of n.
    Atm with_n(int n) const;

    friend bool operator==(const Atm&, const Atm&) = default;

private:
    friend Atm validate_atm(const RawAtm& raw);

    int n_ = 1;
    std::vector<StateId> states_;
    std::vector<StateId> existential_;
    StateId initial_, accepting_, rejecting_;
    std::vector<Transition> delta_;
};

/// Checks the normal-form assumptions (distinct distinguished states, universal
/// initial state, fan-out two on non-final states, zero on final ones, strict
/// alternation) and orders each delta(s,a) pair by (b, s', d).
/// Throws AtmValidationError listing every violation.
Atm validate_atm(const RawAtm& raw);

RawAtm to_raw(const Atm& atm);

struct Configuration {
    std::string tape;  // '0'/'1', length 2^n
    StateId state;
    std::size_t head = 0;

    char letter() const { return tape[head]; }

    friend bool operator==(const Configuration&, const Configuration&) = default;
    friend auto operator<=>(const Configuration&, const Configuration&) = default;
};

Configuration initial_configuration(const Atm& atm);

/// Throws PreconditionError on wrong tape length, head out of range, unknown state.
void check_configuration(const Atm& atm, const Configuration& cfg);

/// Applies one transition. Throws OffTapeError when the head would leave the tape.
Configuration apply_transition(const Atm& atm, const Configuration& cfg, const Transition& t);

using TaggedConfiguration = std::pair<Branch, Configuration>;

std::array<TaggedConfiguration, 2> successors(const Atm& atm, const Configuration& cfg);

/// Every configuration that agrees with a proper successor on state, head and
/// the written cell; all other cells range freely. Exponential in 2^n.
std::set<TaggedConfiguration> quasi_successors(const Atm& atm, const Configuration& cfg);

/// True iff `child` is a quasi-successor of `parent` via transition t.
bool is_quasi_successor_via(const Atm& atm, const Configuration& parent, const Transition& t,
                            const Configuration& child);

struct RunNode {
    Configuration config;
    std::optional<Branch> tag;  // empty on the root
    std::vector<RunNode> children;

    friend bool operator==(const RunNode&, const RunNode&) = default;
};

/// A node is addressed by its path from the root, one character per step:
/// '0' for children[0], '1' for children[1]. Existential nodes only have a '0' child.
using NodePath = std::string;

struct RunTree {
    RunNode root;

    const RunNode& at(const NodePath& path) const;
    RunNode& at(const NodePath& path);
    std::vector<NodePath> paths() const;  // pre-order
    std::size_t size() const { return paths().size(); }

    friend bool operator==(const RunTree&, const RunTree&) = default;
};

struct OracleBudget {
    /// Maximal number of transitions along any branch; 0 means 2^(2^n).
    std::uint64_t max_depth = 0;
    /// Maximal number of distinct configurations explored.
    std::uint64_t max_configurations = 1u << 22;
};

bool is_accepting_oracle(const Atm& atm, const OracleBudget& budget = {});

std::optional<RunTree> find_accepting_run(const Atm& atm, const OracleBudget& budget = {});

struct RunCheck {
    bool ok = true;
    std::string violation;  // empty when ok
    explicit operator bool() const noexcept { return ok; }
};

/// strict=true checks run conditions (proper successors), strict=false the
/// quasi-run conditions. Acceptance of leaves is not part of this check.
RunCheck is_valid_quasi_run(const Atm& atm, const RunTree& t, bool strict);

inline RunCheck is_valid_run(const Atm& atm, const RunTree& t) {
    return is_valid_quasi_run(atm, t, true);
}

bool all_leaves_accepting(const Atm& atm, const RunTree& t);

/// Reference machines used throughout the tests and the lemma suite.
Atm make_m_acc(int n = 1);
Atm make_m_rej(int n = 1);

}  // namespace selfcq
