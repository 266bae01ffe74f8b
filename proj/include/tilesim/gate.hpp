#pragma once

#include <string>
#include <vector>

#include "tilesim/complex_matrix.hpp"

namespace tilesim {

// Largest qubit count a fused matrix may reach. Bounds optimizer memory;
// fusion configs must stay at or below this.
inline constexpr int kFusedQubitCap = 12;

// A k-qubit unitary bound to a strictly increasing list of target qubits.
// `name`/`params` are kept for round-trippable serialization of named gates;
// raw matrix gates have an empty name.
struct Gate {
  GateMatrix matrix;
  std::vector<int> targets;
  std::string name;
  std::vector<double> params;

  int k() const { return static_cast<int>(targets.size()); }
};

// Validating constructor: targets strictly increasing, size matches matrix,
// matrix finite. Throws std::invalid_argument on violation.
Gate make_gate(GateMatrix matrix, std::vector<int> targets,
               std::string name = {}, std::vector<double> params = {});

// Builds a gate from a matrix expressed in argument order (index bit j =
// j-th entry of `arg_qubits`, which need not be sorted) and permutes it into
// the sorted-target convention.
Gate make_gate_arg_order(const GateMatrix& m, const std::vector<int>& arg_qubits,
                         std::string name = {}, std::vector<double> params = {});

// Embeds g into the space spanned by `union_targets` (sorted superset of
// g.targets): acts as g on its targets and as identity elsewhere.
GateMatrix expand_gate(const Gate& g, const std::vector<int>& union_targets);

// Product gate over the union of targets, equal to applying `first` then
// `second`: matrix = expand(second) * expand(first). Throws if the union
// exceeds `hard_cap` qubits.
Gate fuse_matrices(const Gate& first, const Gate& second,
                   int hard_cap = kFusedQubitCap);

// Sorted union of two sorted qubit lists.
std::vector<int> wire_union(const std::vector<int>& a, const std::vector<int>& b);

} // namespace tilesim
