#pragma once

// The intended models: configuration units, configuration trees, enriched
// configuration trees and quasi-computation trees.
//
// Element ids are address words over {0,1} ("" is the root). Inside a
// quasi-computation tree every element is "<run path>#<address>", so the
// global root is "#".

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "selfcq/atm.hpp"
#include "selfcq/dl.hpp"

namespace selfcq {

/// N-bit address of a tape cell, most significant bit first.
std::string cell_address(std::size_t cell, int N);

Interpretation build_unit(int n, bool root_left = true);

/// Adds an n-unit whose element ids are `prefix` + address.
void add_unit(Interpretation& out, int n, const std::string& prefix, bool root_left);

Interpretation build_config_tree(const Atm& atm, const Configuration& cfg, bool root_left = true);

/// How an enriched tree came about: Init, or a transition taken along a branch.
struct Origin {
    std::optional<Transition> transition;  // empty for Init
    Branch branch = Branch::first;

    static Origin init() { return {}; }
    static Origin via(Transition t, Branch b) { return {std::move(t), b}; }
};

/// Checks the preconditions (state of cfg matches the transition target, the
/// previous head position is on the tape, Init only on the initial
/// configuration) and builds the tree. The root is L unless the origin is the
/// second branch, or `root_left` says otherwise.
Interpretation build_enriched_tree(const Atm& atm, const Configuration& cfg, const Origin& origin,
                                   std::optional<bool> root_left = std::nullopt);

/// Raw form without precondition checks; `phd` is the previous head cell.
/// Used to build deliberately broken trees.
void add_enriched_tree(Interpretation& out, const Atm& atm, const Configuration& cfg,
                       const std::optional<Transition>& transition, std::size_t phd, bool root_left,
                       const std::string& prefix);

/// Requires a quasi-run (non-strict) without rejecting nodes.
Interpretation build_quasi_computation_tree(const Atm& atm, const RunTree& t);

/// Element id of address `w` inside the tree of run node `path`.
inline std::string qct_element(const NodePath& path, const std::string& w) { return path + "#" + w; }

/// Adds aux edges from every element to `target` (the TBox-only variant).
void add_aux_edges(Interpretation& interp, const Element& target);

/// Flips `cell` in the configuration of run node `path`. The node must not be
/// the root and the cell must not be the one written by the parent's move.
RunTree inject_tape_fault(const Atm& atm, const RunTree& t, const NodePath& path, std::size_t cell);

/// All (node, cell) pairs accepted by inject_tape_fault.
std::vector<std::pair<NodePath, std::size_t>> fault_sites(const RunTree& t);

}  // namespace selfcq
