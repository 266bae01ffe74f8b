#include "tilesim/gate.hpp"

#include <algorithm>
#include <stdexcept>

namespace tilesim {

namespace {

// Positions (within `superset`) of each element of `subset`.
std::vector<int> positions_in(const std::vector<int>& subset,
                              const std::vector<int>& superset) {
  std::vector<int> pos;
  pos.reserve(subset.size());
  for (int q : subset) {
    auto it = std::lower_bound(superset.begin(), superset.end(), q);
    if (it == superset.end() || *it != q)
      throw std::invalid_argument("gate targets not contained in union set");
    pos.push_back(static_cast<int>(it - superset.begin()));
  }
  return pos;
}

// Scatter the low bits of `value` onto the given bit positions.
uint64_t spread_bits(uint64_t value, const std::vector<int>& positions) {
  uint64_t out = 0;
  for (size_t j = 0; j < positions.size(); ++j)
    out |= ((value >> j) & 1u) << positions[j];
  return out;
}

} // namespace

Gate make_gate(GateMatrix matrix, std::vector<int> targets, std::string name,
               std::vector<double> params) {
  if (targets.empty())
    throw std::invalid_argument("gate needs at least one target qubit");
  for (size_t i = 0; i + 1 < targets.size(); ++i) {
    if (targets[i] >= targets[i + 1])
      throw std::invalid_argument("gate targets must be strictly increasing");
  }
  if (targets.front() < 0)
    throw std::invalid_argument("negative target qubit");
  if (matrix.k() != static_cast<int>(targets.size()))
    throw std::invalid_argument("matrix size does not match target count");
  if (!matrix.finite())
    throw std::invalid_argument("gate matrix has non-finite entries");
  return Gate{std::move(matrix), std::move(targets), std::move(name),
              std::move(params)};
}

Gate make_gate_arg_order(const GateMatrix& m, const std::vector<int>& arg_qubits,
                         std::string name, std::vector<double> params) {
  const int k = static_cast<int>(arg_qubits.size());
  if (m.k() != k)
    throw std::invalid_argument("matrix size does not match argument count");

  std::vector<int> sorted = arg_qubits;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("duplicate qubit in gate arguments");

  // rank[j] = bit position of argument j in the sorted-target index.
  std::vector<int> rank(k);
  for (int j = 0; j < k; ++j) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), arg_qubits[j]);
    rank[j] = static_cast<int>(it - sorted.begin());
  }

  bool already_sorted = true;
  for (int j = 0; j < k; ++j)
    already_sorted = already_sorted && rank[j] == j;
  if (already_sorted)
    return make_gate(m, sorted, std::move(name), std::move(params));

  const uint64_t dim = m.dim();
  // map[i] = index with each bit j moved to position rank[j]
  std::vector<uint64_t> map(dim);
  for (uint64_t i = 0; i < dim; ++i) {
    uint64_t out = 0;
    for (int j = 0; j < k; ++j)
      out |= ((i >> j) & 1u) << rank[j];
    map[i] = out;
  }

  GateMatrix permuted(k);
  for (uint64_t r = 0; r < dim; ++r)
    for (uint64_t c = 0; c < dim; ++c)
      permuted.at(map[r], map[c]) = m.at(r, c);

  return make_gate(std::move(permuted), std::move(sorted), std::move(name),
                   std::move(params));
}

GateMatrix expand_gate(const Gate& g, const std::vector<int>& union_targets) {
  const int m = static_cast<int>(union_targets.size());
  const std::vector<int> pos = positions_in(g.targets, union_targets);

  // Bit positions of the union index not owned by g.
  std::vector<int> rest_pos;
  {
    std::vector<bool> owned(m, false);
    for (int p : pos)
      owned[p] = true;
    for (int p = 0; p < m; ++p)
      if (!owned[p])
        rest_pos.push_back(p);
  }

  GateMatrix out(m);
  const uint64_t gate_dim = g.matrix.dim();
  const uint64_t rest_dim = uint64_t{1} << rest_pos.size();
  for (uint64_t rest = 0; rest < rest_dim; ++rest) {
    const uint64_t rest_bits = spread_bits(rest, rest_pos);
    for (uint64_t r = 0; r < gate_dim; ++r) {
      const uint64_t row = rest_bits | spread_bits(r, pos);
      for (uint64_t c = 0; c < gate_dim; ++c)
        out.at(row, rest_bits | spread_bits(c, pos)) = g.matrix.at(r, c);
    }
  }
  return out;
}

std::vector<int> wire_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// The product expand(second) * expand(first) is computed without forming the
// embedded operators. Write F = first, S = second. A union-index bit belongs
// to F only, S only, or both. The (r, c) entry of the product sums over the
// shared bits only:
//
//   out[r][c] = sum_w S[r|S][ j(w, c) ] * F[ j'(w, r) ][ c|F ]
//
// where j fixes S-only bits from c, j' fixes F-only bits from r, and w runs
// over the 2^|shared| assignments of the shared bits. This costs
// 4^m * 2^|shared| instead of the 8^m of a dense product.
Gate fuse_matrices(const Gate& first, const Gate& second, int hard_cap) {
  std::vector<int> wires = wire_union(first.targets, second.targets);
  const int m = static_cast<int>(wires.size());
  if (m > hard_cap)
    throw std::invalid_argument("fused gate would span " + std::to_string(m) +
                                " qubits, above the cap of " +
                                std::to_string(hard_cap));

  const std::vector<int> pos_f = positions_in(first.targets, wires);
  const std::vector<int> pos_s = positions_in(second.targets, wires);

  // For each union bit: its bit index within first/second (or -1).
  std::vector<int> in_f(m, -1), in_s(m, -1);
  for (size_t j = 0; j < pos_f.size(); ++j)
    in_f[pos_f[j]] = static_cast<int>(j);
  for (size_t j = 0; j < pos_s.size(); ++j)
    in_s[pos_s[j]] = static_cast<int>(j);

  std::vector<int> shared_f, shared_s; // shared-bit positions inside F / S
  std::vector<int> only_f_union, only_f_local;
  std::vector<int> only_s_union, only_s_local;
  for (int p = 0; p < m; ++p) {
    if (in_f[p] >= 0 && in_s[p] >= 0) {
      shared_f.push_back(in_f[p]);
      shared_s.push_back(in_s[p]);
    } else if (in_f[p] >= 0) {
      only_f_union.push_back(p);
      only_f_local.push_back(in_f[p]);
    } else {
      only_s_union.push_back(p);
      only_s_local.push_back(in_s[p]);
    }
  }

  const uint64_t dim = uint64_t{1} << m;
  const uint64_t shared_dim = uint64_t{1} << shared_f.size();

  // Precomputed index pieces, all indexed by union row/column.
  std::vector<uint64_t> row_s(dim), row_f_only(dim), col_f(dim), col_s_only(dim);
  for (uint64_t i = 0; i < dim; ++i) {
    uint64_t rs = 0, cf = 0;
    for (int j = 0; j < static_cast<int>(pos_s.size()); ++j)
      rs |= ((i >> pos_s[j]) & 1u) << j;
    for (int j = 0; j < static_cast<int>(pos_f.size()); ++j)
      cf |= ((i >> pos_f[j]) & 1u) << j;
    row_s[i] = rs;
    col_f[i] = cf;
    uint64_t fo = 0, so = 0;
    for (size_t j = 0; j < only_f_union.size(); ++j)
      fo |= ((i >> only_f_union[j]) & 1u) << only_f_local[j];
    for (size_t j = 0; j < only_s_union.size(); ++j)
      so |= ((i >> only_s_union[j]) & 1u) << only_s_local[j];
    row_f_only[i] = fo;
    col_s_only[i] = so;
  }
  std::vector<uint64_t> w_in_f(shared_dim), w_in_s(shared_dim);
  for (uint64_t w = 0; w < shared_dim; ++w) {
    w_in_f[w] = spread_bits(w, shared_f);
    w_in_s[w] = spread_bits(w, shared_s);
  }

  GateMatrix out(m);
  const GateMatrix& fm = first.matrix;
  const GateMatrix& sm = second.matrix;
  for (uint64_t r = 0; r < dim; ++r) {
    const uint64_t sr = row_s[r];
    const uint64_t f_row_fixed = row_f_only[r];
    for (uint64_t c = 0; c < dim; ++c) {
      const uint64_t fc = col_f[c];
      const uint64_t s_col_fixed = col_s_only[c];
      cplx acc{0.0, 0.0};
      for (uint64_t w = 0; w < shared_dim; ++w)
        acc += sm.at(sr, s_col_fixed | w_in_s[w]) *
               fm.at(f_row_fixed | w_in_f[w], fc);
      out.at(r, c) = acc;
    }
  }

  return Gate{std::move(out), std::move(wires), {}, {}};
}

} // namespace tilesim
