#include "tilesim/complex_matrix.hpp"

#include <cmath>

namespace tilesim {

const char* to_string(ScalarKind kind) {
  switch (kind) {
  case ScalarKind::Zero:
    return "zero";
  case ScalarKind::One:
    return "one";
  case ScalarKind::MinusOne:
    return "minus_one";
  case ScalarKind::General:
    return "general";
  }
  return "?";
}

bool GateMatrix::finite() const {
  for (const cplx& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
      return false;
  }
  return true;
}

bool is_unitary(const GateMatrix& m, double tol) {
  if (!m.finite())
    return false;
  const uint64_t dim = m.dim();
  for (uint64_t r = 0; r < dim; ++r) {
    for (uint64_t c = 0; c < dim; ++c) {
      cplx acc{0.0, 0.0};
      for (uint64_t j = 0; j < dim; ++j)
        acc += m.at(r, j) * std::conj(m.at(c, j));
      const cplx expect = (r == c) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
      if (std::abs(acc - expect) > tol)
        return false;
    }
  }
  return true;
}

uint64_t op_count(const SparsityProfile& profile) {
  return 2 * profile.n_general + profile.n_one + profile.n_minus_one;
}

SparsityProfile sparsity_profile(const GateMatrix& m, double zero_tol,
                                 double one_tol) {
  SparsityProfile profile;
  profile.kinds.reserve(m.entries().size());
  for (const cplx& e : m.entries()) {
    const ScalarKind re = classify_scalar(e.real(), zero_tol, one_tol);
    const ScalarKind im = classify_scalar(e.imag(), zero_tol, one_tol);
    profile.kinds.push_back({re, im});
    for (ScalarKind kind : {re, im}) {
      switch (kind) {
      case ScalarKind::General:
        ++profile.n_general;
        break;
      case ScalarKind::One:
        ++profile.n_one;
        break;
      case ScalarKind::MinusOne:
        ++profile.n_minus_one;
        break;
      case ScalarKind::Zero:
        break;
      }
    }
  }
  profile.op_count = op_count(profile);
  return profile;
}

GateMatrix random_unitary(int k, Prng& rng) {
  GateMatrix m(k);
  const uint64_t dim = m.dim();
  for (cplx& e : m.entries())
    e = cplx{rng.normal(), rng.normal()};

  // Modified Gram-Schmidt over columns.
  for (uint64_t c = 0; c < dim; ++c) {
    for (uint64_t prev = 0; prev < c; ++prev) {
      cplx dot{0.0, 0.0};
      for (uint64_t r = 0; r < dim; ++r)
        dot += std::conj(m.at(r, prev)) * m.at(r, c);
      for (uint64_t r = 0; r < dim; ++r)
        m.at(r, c) -= dot * m.at(r, prev);
    }
    double norm_sq = 0.0;
    for (uint64_t r = 0; r < dim; ++r)
      norm_sq += std::norm(m.at(r, c));
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (uint64_t r = 0; r < dim; ++r)
      m.at(r, c) *= inv;
  }
  return m;
}

} // namespace tilesim
