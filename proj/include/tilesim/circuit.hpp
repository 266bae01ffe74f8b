#pragma once

#include <string>
#include <vector>

#include "tilesim/gate.hpp"

namespace tilesim {

// Program order of `gates` is application order and the only ordering
// authority.
struct Circuit {
  int n_qubits = 0;
  std::vector<Gate> gates;
};

// Lowers a named gate to an explicit matrix. `qubits` is in argument order
// (e.g. control first for cx); the returned gate uses sorted targets with a
// correspondingly permuted matrix. Throws std::invalid_argument for unknown
// names or arity/param mismatches.
Gate make_named_gate(const std::string& name, const std::vector<double>& params,
                     const std::vector<int>& qubits);

// Returns 0 if `name` is not a known gate, else its qubit arity.
int named_gate_arity(const std::string& name);
// Number of angle parameters the named gate takes.
int named_gate_param_count(const std::string& name);

// Parses the line-oriented circuit format:
//   qubits <n>
//   <name>[(<p0>,<p1>,...)] <q0> [q1 [q2]]
//   matrix <k> <q0> ... <qk-1>   followed by 2^k lines of 2^k "re,im" entries
//   # comment (whole line or trailing)
// Throws ParseError with line/column info.
Circuit parse_circuit(const std::string& text);

// Inverse of parse_circuit: named gates round-trip bit-exactly (they are
// re-lowered on parse); matrix stanzas are printed with 17 significant
// digits so doubles survive the round trip.
std::string serialize_circuit(const Circuit& c);

Circuit load_circuit_file(const std::string& path);
void save_circuit_file(const Circuit& c, const std::string& path);

} // namespace tilesim
