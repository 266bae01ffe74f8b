#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "tilesim/prng.hpp"

namespace tilesim {

using cplx = std::complex<double>;

// Classification of one real scalar component of a matrix entry. Zero and
// +/-1 scalars get cheaper treatment in generated kernels: zeros are skipped
// outright and +/-1 multiplies become adds/subtracts.
enum class ScalarKind : uint8_t { Zero = 0, One = 1, MinusOne = 2, General = 3 };

// Precedence: Zero, then One, then MinusOne, then General. The ordering makes
// overlapping tolerance bands deterministic.
inline ScalarKind classify_scalar(double x, double zero_tol, double one_tol) {
  if (std::abs(x) <= zero_tol)
    return ScalarKind::Zero;
  if (std::abs(x - 1.0) <= one_tol)
    return ScalarKind::One;
  if (std::abs(x + 1.0) <= one_tol)
    return ScalarKind::MinusOne;
  return ScalarKind::General;
}

const char* to_string(ScalarKind kind);

// Dense row-major 2^k x 2^k complex matrix for a k-qubit operator.
//
// Index convention (fixed project-wide): bit j of a row/column index
// corresponds to the j-th target qubit of the owning gate, with qubit 0 as
// the least significant bit.
class GateMatrix {
public:
  GateMatrix() = default;
  explicit GateMatrix(int k) : k_(k), entries_(dim() * dim(), cplx{0.0, 0.0}) {}

  static GateMatrix identity(int k) {
    GateMatrix m(k);
    for (uint64_t i = 0; i < m.dim(); ++i)
      m.at(i, i) = 1.0;
    return m;
  }

  int k() const { return k_; }
  uint64_t dim() const { return uint64_t{1} << k_; }

  cplx& at(uint64_t row, uint64_t col) { return entries_[row * dim() + col]; }
  const cplx& at(uint64_t row, uint64_t col) const {
    return entries_[row * dim() + col];
  }

  std::vector<cplx>& entries() { return entries_; }
  const std::vector<cplx>& entries() const { return entries_; }

  bool finite() const;

private:
  int k_ = 0;
  std::vector<cplx> entries_;
};

// Elementwise check of M * M^dagger == I within tol.
bool is_unitary(const GateMatrix& m, double tol);

// Per-scalar classification of a whole matrix plus the derived run-time
// operation count.
struct SparsityProfile {
  struct KindPair {
    ScalarKind re;
    ScalarKind im;
  };

  std::vector<KindPair> kinds; // one pair per entry, row-major
  uint64_t n_general = 0;
  uint64_t n_one = 0;
  uint64_t n_minus_one = 0;
  uint64_t op_count = 0;

  uint64_t nonzero_scalars() const { return n_general + n_one + n_minus_one; }
};

// General scalars cost two fused multiply-add style operations, +/-1 scalars
// cost one add/subtract, zeros cost nothing. A dense k-qubit matrix therefore
// counts 2^(2k+2) (all 2^(2k+1) scalars general).
uint64_t op_count(const SparsityProfile& profile);

SparsityProfile sparsity_profile(const GateMatrix& m, double zero_tol,
                                 double one_tol);

// Unitary drawn by orthonormalizing a Gaussian complex matrix (modified
// Gram-Schmidt on columns).
GateMatrix random_unitary(int k, Prng& rng);

} // namespace tilesim
