#include "selfcq/witness.hpp"

#include <algorithm>

#include "selfcq/error.hpp"
#include "selfcq/reduction.hpp"

namespace selfcq {

std::string cell_address(std::size_t cell, int N) {
    std::string w(static_cast<std::size_t>(N), '0');
    for (int i = N - 1; i >= 0; --i, cell >>= 1) w[static_cast<std::size_t>(i)] = (cell & 1) ? '1' : '0';
    if (cell != 0) throw PreconditionError("cell index does not fit into " + std::to_string(N) + " bits");
    return w;
}

namespace {

// All words over {0,1} of length exactly k.
std::vector<std::string> words(int k) {
    std::vector<std::string> out{""};
    for (int i = 0; i < k; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out) {
            next.push_back(w + '0');
            next.push_back(w + '1');
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace

void add_unit(Interpretation& out, int n, const std::string& prefix, bool root_left) {
    if (n < 1) throw PreconditionError("a unit needs n >= 1");
    for (int len = 0; len <= n; ++len) {
        for (const auto& w : words(len)) {
            const Element e = prefix + w;
            out.add_element(e);
            out.add_concept(sym::lvl(len), e);
            const bool left = w.empty() ? root_left : w.back() == '0';
            out.add_concept(left ? sym::L : sym::R, e);
            for (int i = 1; i <= len; ++i) out.add_concept(sym::ad(i, w[i - 1] - '0'), e);
        }
    }
    for (int len = 0; len <= n; ++len) {
        for (const auto& w : words(len)) {
            const Element e = prefix + w;
            for (int i = 1; i <= n; ++i) {
                out.add_role(sym::ell(i), e, e);
                out.add_role(sym::r(i), e, e);
            }
            if (len < n) {
                out.add_role(sym::ell(len + 1), e, prefix + w + '0');
                out.add_role(sym::r(len + 1), e, prefix + w + '1');
            } else {
                out.add_role(sym::next, e, e);
            }
        }
    }
}

Interpretation build_unit(int n, bool root_left) {
    Interpretation out;
    add_unit(out, n, "", root_left);
    return out;
}

namespace {

void check_cfg(const Atm& atm, const Configuration& cfg) { check_configuration(atm, cfg); }

void add_config_decor(Interpretation& out, const Atm& atm, const Configuration& cfg, const std::string& prefix) {
    const int N = atm.n();
    const Element root = prefix;
    out.add_concept(sym::st(cfg.state), root);
    const std::string head = cell_address(cfg.head, N);
    for (std::size_t c = 0; c < cfg.tape.size(); ++c) {
        const std::string w = cell_address(c, N);
        const int a = cfg.tape[c] - '0';
        out.add_concept(sym::let(a), prefix + w);
        out.add_concept(sym::zz(a), prefix + w + '0');
        out.add_concept(sym::zz(1 - a), prefix + w + '1');
        out.add_concept(w == head ? sym::hd_here : sym::no_hd_here, prefix + w);
        for (int i = 1; i <= N; ++i) out.add_concept(sym::hd_pos(i, head[i - 1] - '0'), prefix + w);
    }
    for (int i = 1; i <= N; ++i) out.add_concept(sym::hd_pos(i, head[i - 1] - '0'), root);
    out.add_concept(sym::hd_let(cfg.letter() - '0'), root);
}

}  // namespace

Interpretation build_config_tree(const Atm& atm, const Configuration& cfg, bool root_left) {
    check_cfg(atm, cfg);
    Interpretation out;
    add_unit(out, atm.n() + 1, "", root_left);
    add_config_decor(out, atm, cfg, "");
    return out;
}

void add_enriched_tree(Interpretation& out, const Atm& atm, const Configuration& cfg,
                       const std::optional<Transition>& transition, std::size_t phd, bool root_left,
                       const std::string& prefix) {
    const int N = atm.n();
    if (phd >= atm.tape_length()) throw PreconditionError("previous head position is off the tape");
    add_unit(out, N + 1, prefix, root_left);
    add_config_decor(out, atm, cfg, prefix);

    const Element root = prefix;
    out.add_concept(transition ? sym::pr_tr(*transition) : sym::init, root);
    const std::string wphd = cell_address(phd, N);
    for (std::size_t c = 0; c < atm.tape_length(); ++c) {
        const std::string w = cell_address(c, N);
        const bool here = w == wphd;
        out.add_concept(here ? sym::phd_here : sym::no_phd_here, prefix + w);
        out.add_concept(here ? sym::phd_abv : sym::no_phd_abv, prefix + w + '0');
        out.add_concept(here ? sym::phd_abv : sym::no_phd_abv, prefix + w + '1');
        for (int i = 1; i <= N; ++i) out.add_concept(sym::phd_pos(i, wphd[i - 1] - '0'), prefix + w);
    }
    for (int i = 1; i <= N; ++i) out.add_concept(sym::phd_pos(i, wphd[i - 1] - '0'), root);
    out.add_concept(sym::phd_let(cfg.tape[phd] - '0'), root);
}

namespace {

std::size_t previous_head(const Atm& atm, const Configuration& cfg, const Transition& t) {
    const long long phd = static_cast<long long>(cfg.head) - t.move;
    if (phd < 0 || phd >= static_cast<long long>(atm.tape_length()))
        throw PreconditionError("previous head position " + std::to_string(phd) + " is off the tape");
    return static_cast<std::size_t>(phd);
}

}  // namespace

Interpretation build_enriched_tree(const Atm& atm, const Configuration& cfg, const Origin& origin,
                                   std::optional<bool> root_left) {
    check_cfg(atm, cfg);
    Interpretation out;
    if (!origin.transition) {
        if (cfg != initial_configuration(atm))
            throw PreconditionError("an Init tree must encode the initial configuration");
        if (root_left == false) throw PreconditionError("the root of an Init tree is a left node");
        add_enriched_tree(out, atm, cfg, std::nullopt, 0, true, "");
        return out;
    }
    const Transition& t = *origin.transition;
    if (std::find(atm.delta().begin(), atm.delta().end(), t) == atm.delta().end())
        throw PreconditionError("transition (" + transition_key(t) + ") is not part of the machine");
    if (cfg.state != t.to)
        throw PreconditionError("state " + cfg.state + " differs from the target of (" + transition_key(t) + ")");
    const std::size_t phd = previous_head(atm, cfg, t);
    const bool left = root_left.value_or(origin.branch == Branch::first);
    add_enriched_tree(out, atm, cfg, t, phd, left, "");
    return out;
}

Interpretation build_quasi_computation_tree(const Atm& atm, const RunTree& t) {
    if (auto check = is_valid_quasi_run(atm, t, false); !check)
        throw PreconditionError("not a quasi-run: " + check.violation);
    Interpretation out;
    for (const auto& p : t.paths()) {
        const RunNode& node = t.at(p);
        if (node.config.state == atm.rejecting())
            throw PreconditionError("node '" + p + "' is labelled with the rejecting state");
        const bool left = p.empty() || p.back() == '0';
        if (p.empty()) {
            add_enriched_tree(out, atm, node.config, std::nullopt, 0, true, qct_element(p, ""));
            continue;
        }
        const RunNode& parent = t.at(p.substr(0, p.size() - 1));
        const Transition& tr = atm.delta_at(parent.config.state, parent.config.letter() - '0', *node.tag);
        add_enriched_tree(out, atm, node.config, tr, previous_head(atm, node.config, tr), left, qct_element(p, ""));
    }
    for (const auto& p : t.paths())
        if (!p.empty()) out.add_role(sym::next, qct_element(p.substr(0, p.size() - 1), ""), qct_element(p, ""));
    out.set_individual(sym::individual, qct_element("", ""));
    return out;
}

void add_aux_edges(Interpretation& interp, const Element& target) {
    const auto domain = interp.domain();
    for (const auto& e : domain) interp.add_role(sym::aux, e, target);
}

RunTree inject_tape_fault(const Atm& atm, const RunTree& t, const NodePath& path, std::size_t cell) {
    if (path.empty()) throw PreconditionError("the root cannot carry a tape fault");
    RunTree out = t;
    RunNode& node = out.at(path);
    const RunNode& parent = t.at(path.substr(0, path.size() - 1));
    if (cell >= node.config.tape.size()) throw PreconditionError("cell " + std::to_string(cell) + " is off the tape");
    if (cell == parent.config.head)
        throw PreconditionError("not an untouched cell: cell " + std::to_string(cell) + " was written by the parent");
    char& bit = node.config.tape[cell];
    bit = bit == '0' ? '1' : '0';
    if (auto check = is_valid_quasi_run(atm, out, false); !check)
        throw PreconditionError("fault breaks the quasi-run: " + check.violation);
    return out;
}

std::vector<std::pair<NodePath, std::size_t>> fault_sites(const RunTree& t) {
    std::vector<std::pair<NodePath, std::size_t>> out;
    for (const auto& p : t.paths()) {
        if (p.empty()) continue;
        const RunNode& parent = t.at(p.substr(0, p.size() - 1));
        for (std::size_t c = 0; c < t.at(p).config.tape.size(); ++c)
            if (c != parent.config.head) out.emplace_back(p, c);
    }
    return out;
}

}  // namespace selfcq
