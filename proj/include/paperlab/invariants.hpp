#pragma once

// Degreewise invariant theory for finite matrix groups acting on a polynomial
// ring by f |-> f(MX). No averaging is used, so everything works in the
// modular case where p divides |G|.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paperlab/groups.hpp"
#include "paperlab/polyring.hpp"

namespace paperlab {

/// Basis of (T_n)^G: the common kernel of (g - id) over the group generators,
/// acting on the monomials of degree n. Monomials are split into classes by
/// their degree in each block of variables the group mixes together; each
/// returned polynomial is homogeneous for that finer grading.
std::vector<Polynomial> invariant_space(const MatrixGroup& g, const RingPtr& ring, std::uint32_t n);

/// dim (T_n)^G for n = 0..max_degree.
std::vector<std::int64_t> invariant_hilbert_function(const MatrixGroup& g, const RingPtr& ring,
                                                     std::uint32_t max_degree);

enum class Certificate {
  kHeuristic,
  kVerifiedUpTo,        // minimal generators in degrees <= bound, nothing more
  kIntegralAndMatching  // plus integrality of T and Hilbert agreement to 2*bound
};

std::string certificate_name(Certificate c);

struct GeneratorEntry {
  Polynomial poly;
  std::uint32_t degree;
};

struct GeneratorSet {
  std::vector<GeneratorEntry> entries;  // discovery order
  std::uint32_t bound = 0;
  Certificate certificate = Certificate::kHeuristic;

  std::vector<Polynomial> polynomials() const;
  /// counts[n] = number of entries of degree n, for n = 0..bound.
  std::vector<std::size_t> count_by_degree() const;
};

/// For n = 1..max_degree, extends a basis of the decomposable invariants of
/// degree n (products of earlier entries) to a basis of (T_n)^G.
GeneratorSet minimal_generators(const MatrixGroup& g, const RingPtr& ring, std::uint32_t max_degree);

/// prod over the G-orbit of x_i of (Z - w); coefficients[k] multiplies Z^k.
struct NormPolynomial {
  std::size_t variable = 0;
  std::vector<Polynomial> coefficients;

  std::size_t degree() const noexcept { return coefficients.size() - 1; }
  /// Substitutes Z := z.
  Polynomial evaluate(const Polynomial& z) const;
};

NormPolynomial norm_polynomial(const MatrixGroup& g, const RingPtr& ring, std::size_t variable);

bool check_invariant(const MatrixGroup& g, const Polynomial& f);

struct OffendingCoefficient {
  std::size_t variable;
  std::size_t power;  // coefficient of Z^power
  Polynomial coefficient;

  std::string describe() const;
};

struct IntegralityResult {
  GeneratorSet generators;  // certificate upgraded when everything passed
  std::vector<OffendingCoefficient> offending;
  bool norms_in_subalgebra = false;
  bool hilbert_matches = false;
  std::uint32_t hilbert_window = 0;
  std::optional<std::uint32_t> first_hilbert_mismatch;
};

/// Checks that every non-leading norm coefficient of every ambient variable
/// lies in the subalgebra generated by the candidate, and that the presented
/// subalgebra's Hilbert function matches the invariant ring's up to degree
/// 2 * bound. Upgrades the certificate only if both hold.
IntegralityResult integrality_certificate(const MatrixGroup& g, const RingPtr& ring,
                                          const GeneratorSet& candidate);

}  // namespace paperlab
