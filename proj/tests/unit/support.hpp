#pragma once

// Shared helpers for the unit tests: seeded random generators and ring builders.

#include <random>
#include <string>
#include <vector>

#include "paperlab/arith.hpp"
#include "paperlab/groups.hpp"
#include "paperlab/polyring.hpp"

namespace paperlab::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eed1234u);
  return engine;
}

inline std::uint32_t uniform(std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng());
}

inline MatrixFp random_matrix(PrimeField f, std::size_t rows, std::size_t cols) {
  MatrixFp m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar{uniform(0, f.characteristic() - 1)};
  }
  return m;
}

inline RingPtr ring_of(std::uint32_t p, std::vector<std::string> names,
                       MonomialOrder order = MonomialOrder::grevlex()) {
  return Ring::make(PrimeField(p), VarSpec::uniform(std::move(names)), order);
}

/// The ambient ring F_p[x1,y1,...,xd,yd].
inline RingPtr block_ring(std::uint32_t p, std::size_t d) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= d; ++i) {
    names.push_back("x" + std::to_string(i));
    names.push_back("y" + std::to_string(i));
  }
  return ring_of(p, std::move(names));
}

/// Random polynomial with up to `terms` terms of total degree <= max_deg.
inline Polynomial random_poly(const RingPtr& ring, std::size_t terms, std::uint32_t max_deg,
                              bool homogeneous = false) {
  std::vector<Term> out;
  const std::uint32_t target = uniform(0, max_deg);
  for (std::size_t t = 0; t < terms; ++t) {
    const std::uint32_t deg = homogeneous ? target : uniform(0, max_deg);
    const auto monos = monomials_of_degree(*ring, deg);
    if (monos.empty()) continue;
    const Monomial& m = monos[uniform(0, static_cast<std::uint32_t>(monos.size() - 1))];
    out.push_back(Term{m, Scalar{uniform(1, ring->field().characteristic() - 1)}});
  }
  return Polynomial::from_terms(ring, std::move(out));
}

/// x_i -> x_i + a_i y_i on each block i (identity where a_i = 0).
inline MatrixFp unipotent(PrimeField f, const std::vector<std::int64_t>& a) {
  MatrixFp m = MatrixFp::identity(f, 2 * a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m(2 * i, 2 * i + 1) = f.from_int(a[i]);
  return m;
}

/// Generated by the single-block maps x_i -> x_i + y_i.
inline MatrixGroup group_g(std::uint32_t p, std::size_t d) {
  const PrimeField f(p);
  std::vector<MatrixFp> gens;
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::int64_t> a(d, 0);
    a[i] = 1;
    gens.push_back(unipotent(f, a));
  }
  return MatrixGroup::closure(f, 2 * d, gens);
}

/// Cyclic, generated by x_i -> x_i + y_i on every block at once.
inline MatrixGroup group_h(std::uint32_t p, std::size_t d) {
  const PrimeField f(p);
  return MatrixGroup::closure(f, 2 * d, {unipotent(f, std::vector<std::int64_t>(d, 1))});
}

inline MatrixGroup trivial(std::uint32_t p, std::size_t n) {
  return MatrixGroup::closure(PrimeField(p), n, {});
}

}  // namespace paperlab::testing
