#include "selfcq/atm.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <regex>

#include "selfcq/error.hpp"

namespace selfcq {

std::string transition_key(const Transition& t) {
    return t.from + "." + std::to_string(t.read) + "." + std::to_string(t.write) + "." + t.to + "." +
           (t.move > 0 ? "+1" : "-1");
}

const char* to_string(Branch b) { return b == Branch::first ? "first" : "second"; }

bool Atm::is_existential(const StateId& s) const {
    return std::find(existential_.begin(), existential_.end(), s) != existential_.end();
}

bool Atm::has_state(const StateId& s) const {
    return std::find(states_.begin(), states_.end(), s) != states_.end();
}

std::size_t Atm::state_index(const StateId& s) const {
    auto it = std::find(states_.begin(), states_.end(), s);
    if (it == states_.end()) throw PreconditionError("unknown state '" + s + "'");
    return static_cast<std::size_t>(it - states_.begin());
}

const Transition& Atm::delta_at(const StateId& s, int a, Branch b) const {
    if (is_final(s)) throw PreconditionError("final state '" + s + "' has no transitions");
    // delta_ holds the pair for (s,a) contiguously, delta_1 first.
    for (std::size_t i = 0; i + 1 < delta_.size(); ++i) {
        if (delta_[i].from == s && delta_[i].read == a) return delta_[b == Branch::first ? i : i + 1];
    }
    throw PreconditionError("no transitions for (" + s + "," + std::to_string(a) + ")");
}

Atm Atm::with_n(int n) const {
    RawAtm raw = to_raw(*this);
    raw.n = n;
    return validate_atm(raw);
}

namespace {

const std::regex& state_id_pattern() {
    static const std::regex re("[A-Za-z][A-Za-z0-9_]*");
    return re;
}

}  // namespace

Atm validate_atm(const RawAtm& raw) {
    std::vector<std::string> errors;
    auto known = [&](const StateId& s) {
        return std::find(raw.states.begin(), raw.states.end(), s) != raw.states.end();
    };

    if (raw.n < 1 || raw.n > 24) errors.push_back("n must be in [1,24], got " + std::to_string(raw.n));
    if (raw.states.empty()) errors.push_back("empty state set");

    std::set<StateId> seen;
    for (const auto& s : raw.states) {
        if (!std::regex_match(s, state_id_pattern())) errors.push_back("invalid state id '" + s + "'");
        if (!seen.insert(s).second) errors.push_back("duplicate state '" + s + "'");
    }
    std::set<StateId> existential;
    for (const auto& s : raw.existential) {
        if (!known(s)) errors.push_back("existential state '" + s + "' is not declared");
        existential.insert(s);
    }
    for (const auto* which : {&raw.initial, &raw.accepting, &raw.rejecting}) {
        if (!known(*which)) errors.push_back("distinguished state '" + *which + "' is not declared");
    }
    if (raw.initial == raw.accepting || raw.initial == raw.rejecting || raw.accepting == raw.rejecting)
        errors.push_back("initial, accepting and rejecting states must be pairwise distinct");
    if (existential.count(raw.initial)) errors.push_back("initial state must be universal");

    std::set<Transition> unique(raw.delta.begin(), raw.delta.end());
    for (const auto& t : unique) {
        const std::string key = "(" + transition_key(t) + ")";
        if (!known(t.from) || !known(t.to)) errors.push_back("transition " + key + " uses an undeclared state");
        if ((t.read != 0 && t.read != 1) || (t.write != 0 && t.write != 1))
            errors.push_back("transition " + key + " uses a letter outside {0,1}");
        if (t.move != 1 && t.move != -1) errors.push_back("transition " + key + " has a move outside {-1,+1}");
        if (known(t.from) && known(t.to) && existential.count(t.from) == existential.count(t.to))
            errors.push_back("alternation violated by " + key);
    }

    auto is_final = [&](const StateId& s) { return s == raw.accepting || s == raw.rejecting; };
    for (const auto& s : raw.states) {
        for (int a = 0; a <= 1; ++a) {
            auto count = std::count_if(unique.begin(), unique.end(),
                                       [&](const Transition& t) { return t.from == s && t.read == a; });
            std::string at = "(" + s + "," + std::to_string(a) + ")";
            if (is_final(s) && count != 0)
                errors.push_back("final state has transitions at " + at);
            else if (!is_final(s) && count != 2)
                errors.push_back("fan-out != 2 at " + at + ": found " + std::to_string(count));
        }
    }

    if (!errors.empty()) throw AtmValidationError(std::move(errors));

    Atm atm;
    atm.n_ = raw.n;
    atm.states_ = raw.states;
    for (const auto& s : raw.states)
        if (existential.count(s)) atm.existential_.push_back(s);
    atm.initial_ = raw.initial;
    atm.accepting_ = raw.accepting;
    atm.rejecting_ = raw.rejecting;

    auto rank = [&](const StateId& s) {
        return std::find(raw.states.begin(), raw.states.end(), s) - raw.states.begin();
    };
    atm.delta_.assign(unique.begin(), unique.end());
    std::sort(atm.delta_.begin(), atm.delta_.end(), [&](const Transition& x, const Transition& y) {
        return std::tuple(rank(x.from), x.read, x.write, rank(x.to), x.move) <
               std::tuple(rank(y.from), y.read, y.write, rank(y.to), y.move);
    });
    return atm;
}

RawAtm to_raw(const Atm& atm) {
    RawAtm raw;
    raw.n = atm.n();
    raw.states = atm.states();
    raw.existential = atm.existential_states();
    raw.initial = atm.initial();
    raw.accepting = atm.accepting();
    raw.rejecting = atm.rejecting();
    raw.delta = atm.delta();
    return raw;
}

Configuration initial_configuration(const Atm& atm) {
    return Configuration{std::string(atm.tape_length(), '0'), atm.initial(), 0};
}

void check_configuration(const Atm& atm, const Configuration& cfg) {
    if (cfg.tape.size() != atm.tape_length())
        throw PreconditionError("tape length " + std::to_string(cfg.tape.size()) + " differs from 2^n = " +
                                std::to_string(atm.tape_length()));
    if (cfg.tape.find_first_not_of("01") != std::string::npos)
        throw PreconditionError("tape contains a letter outside {0,1}");
    if (cfg.head >= cfg.tape.size()) throw PreconditionError("head position out of range");
    if (!atm.has_state(cfg.state)) throw PreconditionError("unknown state '" + cfg.state + "'");
}

Configuration apply_transition(const Atm& atm, const Configuration& cfg, const Transition& t) {
    if (cfg.head == 0 && t.move < 0) throw OffTapeError("off-tape move: left of cell 0 by " + transition_key(t));
    if (cfg.head + 1 == atm.tape_length() && t.move > 0)
        throw OffTapeError("off-tape move: right of the last cell by " + transition_key(t));
    Configuration next = cfg;
    next.tape[cfg.head] = static_cast<char>('0' + t.write);
    next.state = t.to;
    next.head = t.move > 0 ? cfg.head + 1 : cfg.head - 1;
    return next;
}

std::array<TaggedConfiguration, 2> successors(const Atm& atm, const Configuration& cfg) {
    check_configuration(atm, cfg);
    if (atm.is_final(cfg.state)) throw PreconditionError("configuration is final; it has no successors");
    const int a = cfg.letter() - '0';
    return {TaggedConfiguration{Branch::first, apply_transition(atm, cfg, atm.delta_at(cfg.state, a, Branch::first))},
            TaggedConfiguration{Branch::second,
                                apply_transition(atm, cfg, atm.delta_at(cfg.state, a, Branch::second))}};
}

std::set<TaggedConfiguration> quasi_successors(const Atm& atm, const Configuration& cfg) {
    std::set<TaggedConfiguration> out;
    for (const auto& [tag, succ] : successors(atm, cfg)) {
        std::vector<std::size_t> free_cells;
        for (std::size_t i = 0; i < succ.tape.size(); ++i)
            if (i != cfg.head) free_cells.push_back(i);
        if (free_cells.size() >= 63) throw BudgetExceeded("quasi-successor set too large to enumerate");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_cells.size()); ++mask) {
            Configuration q = succ;
            for (std::size_t k = 0; k < free_cells.size(); ++k)
                q.tape[free_cells[k]] = (mask >> k) & 1 ? '1' : '0';
            out.emplace(tag, std::move(q));
        }
    }
    return out;
}

bool is_quasi_successor_via(const Atm& atm, const Configuration& parent, const Transition& t,
                            const Configuration& child) {
    Configuration proper = apply_transition(atm, parent, t);
    return child.state == proper.state && child.head == proper.head && child.tape.size() == proper.tape.size() &&
           child.tape[parent.head] == proper.tape[parent.head];
}

const RunNode& RunTree::at(const NodePath& path) const {
    const RunNode* node = &root;
    for (char c : path) {
        std::size_t idx = c == '1' ? 1 : 0;
        if ((c != '0' && c != '1') || idx >= node->children.size())
            throw PreconditionError("no run node at path '" + path + "'");
        node = &node->children[idx];
    }
    return *node;
}

RunNode& RunTree::at(const NodePath& path) {
    return const_cast<RunNode&>(static_cast<const RunTree&>(*this).at(path));
}

std::vector<NodePath> RunTree::paths() const {
    std::vector<NodePath> out;
    std::function<void(const RunNode&, const NodePath&)> walk = [&](const RunNode& n, const NodePath& p) {
        out.push_back(p);
        for (std::size_t i = 0; i < n.children.size(); ++i) walk(n.children[i], p + static_cast<char>('0' + i));
    };
    walk(root, "");
    return out;
}

namespace {

class Explorer {
public:
    Explorer(const Atm& atm, const OracleBudget& budget) : atm_(atm), budget_(budget) {
        max_depth_ = budget.max_depth;
        if (max_depth_ == 0) {
            max_depth_ = atm.tape_length() >= 64 ? std::numeric_limits<std::uint64_t>::max()
                                                 : std::uint64_t{1} << atm.tape_length();
        }
    }

    bool accepts(const Configuration& c, std::uint64_t depth) {
        if (auto it = memo_.find(c); it != memo_.end()) return it->second;
        if (depth > max_depth_)
            throw BudgetExceeded("halting assumption violated: no final state within " +
                                 std::to_string(max_depth_) + " steps");
        if (on_stack_.count(c)) throw BudgetExceeded("halting assumption violated: configuration cycle");
        if (memo_.size() >= budget_.max_configurations)
            throw BudgetExceeded("configuration budget of " + std::to_string(budget_.max_configurations) +
                                 " exhausted");

        bool result = false;
        if (c.state == atm_.accepting()) {
            result = true;
        } else if (c.state == atm_.rejecting()) {
            result = false;
        } else {
            on_stack_.insert(c);
            const int a = c.letter() - '0';
            auto child = [&](Branch b) { return apply_transition(atm_, c, atm_.delta_at(c.state, a, b)); };
            if (atm_.is_existential(c.state)) {
                for (Branch b : {Branch::first, Branch::second}) {
                    if (accepts(child(b), depth + 1)) {
                        choice_[c] = b;
                        result = true;
                        break;
                    }
                }
            } else {
                result = accepts(child(Branch::first), depth + 1) && accepts(child(Branch::second), depth + 1);
            }
            on_stack_.erase(c);
        }
        memo_.emplace(c, result);
        return result;
    }

    RunNode build(const Configuration& c, std::optional<Branch> tag) const {
        RunNode node{c, tag, {}};
        if (atm_.is_final(c.state)) return node;
        const int a = c.letter() - '0';
        auto child = [&](Branch b) { return apply_transition(atm_, c, atm_.delta_at(c.state, a, b)); };
        if (atm_.is_existential(c.state)) {
            Branch b = choice_.at(c);
            node.children.push_back(build(child(b), b));
        } else {
            node.children.push_back(build(child(Branch::first), Branch::first));
            node.children.push_back(build(child(Branch::second), Branch::second));
        }
        return node;
    }

private:
    const Atm& atm_;
    OracleBudget budget_;
    std::uint64_t max_depth_ = 0;
    std::map<Configuration, bool> memo_;
    std::map<Configuration, Branch> choice_;
    std::set<Configuration> on_stack_;
};

}  // namespace

bool is_accepting_oracle(const Atm& atm, const OracleBudget& budget) {
    Explorer ex(atm, budget);
    return ex.accepts(initial_configuration(atm), 0);
}

std::optional<RunTree> find_accepting_run(const Atm& atm, const OracleBudget& budget) {
    Explorer ex(atm, budget);
    const Configuration init = initial_configuration(atm);
    if (!ex.accepts(init, 0)) return std::nullopt;
    return RunTree{ex.build(init, std::nullopt)};
}

namespace {

std::string check_node(const Atm& atm, const RunNode& node, const NodePath& path, bool strict) {
    const std::string where = "node '" + path + "'";
    try {
        check_configuration(atm, node.config);
    } catch (const PreconditionError& e) {
        return where + ": " + e.what();
    }
    const auto& c = node.config;
    if (atm.is_final(c.state)) {
        if (!node.children.empty()) return where + ": final configuration has children";
        return {};
    }
    const bool existential = atm.is_existential(c.state);
    const std::size_t want = existential ? 1 : 2;
    if (node.children.size() != want)
        return where + ": fan-out " + std::to_string(node.children.size()) + " but " +
               (existential ? "existential" : "universal") + " node needs " + std::to_string(want);
    const int a = c.letter() - '0';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        const RunNode& ch = node.children[i];
        const NodePath cp = path + static_cast<char>('0' + i);
        if (!ch.tag) return "node '" + cp + "': missing branch tag";
        if (!existential && *ch.tag != (i == 0 ? Branch::first : Branch::second))
            return "node '" + cp + "': universal children must be tagged first, second in order";
        const Transition& t = atm.delta_at(c.state, a, *ch.tag);
        try {
            if (strict) {
                if (apply_transition(atm, c, t) != ch.config)
                    return "node '" + cp + "': not a successor via " + transition_key(t);
            } else if (ch.config.tape.size() != c.tape.size() || !is_quasi_successor_via(atm, c, t, ch.config)) {
                return "node '" + cp + "': not a quasi-successor via " + transition_key(t);
            }
        } catch (const OffTapeError& e) {
            return "node '" + cp + "': " + e.what();
        }
        if (auto v = check_node(atm, ch, cp, strict); !v.empty()) return v;
    }
    return {};
}

}  // namespace

RunCheck is_valid_quasi_run(const Atm& atm, const RunTree& t, bool strict) {
    if (t.root.config != initial_configuration(atm)) return {false, "root is not the initial configuration"};
    std::string v = check_node(atm, t.root, "", strict);
    return {v.empty(), v};
}

bool all_leaves_accepting(const Atm& atm, const RunTree& t) {
    for (const auto& p : t.paths()) {
        const RunNode& n = t.at(p);
        if (n.children.empty() && n.config.state != atm.accepting()) return false;
    }
    return true;
}

namespace {

Atm reference_machine(int n, const StateId& e1_target) {
    RawAtm raw;
    raw.n = n;
    raw.states = {"s_init", "e1", "s_acc", "s_rej"};
    raw.existential = {"e1"};
    raw.initial = "s_init";
    raw.accepting = "s_acc";
    raw.rejecting = "s_rej";
    for (int a = 0; a <= 1; ++a) {
        for (int b = 0; b <= 1; ++b) {
            raw.delta.push_back({"s_init", a, b, "e1", +1});
            raw.delta.push_back({"e1", a, b, e1_target, -1});
        }
    }
    return validate_atm(raw);
}

}  // namespace

Atm make_m_acc(int n) { return reference_machine(n, "s_acc"); }
Atm make_m_rej(int n) { return reference_machine(n, "s_rej"); }

}  // namespace selfcq
