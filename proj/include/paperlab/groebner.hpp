#pragma once

// Groebner bases over F_p: division, Buchberger completion, elimination,
// initial ideals, combinatorial Krull dimension and weighted Hilbert series.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paperlab/polyring.hpp"

namespace paperlab {

struct ReductionResult {
  Polynomial normal_form;
  std::vector<Polynomial> quotients;  // one per basis element
};

/// Full division of f by the list: f = sum q_i b_i + normal_form and no term of
/// the normal form is divisible by a leading monomial of the list. The reducer
/// is always the first basis element (in list order) whose leading monomial
/// divides the current term.
ReductionResult reduce(const Polynomial& f, std::span<const Polynomial> basis);

/// Same normal form as reduce() without tracking quotients.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis);

struct BuchbergerOptions {
  /// When set, S-pairs whose lcm has weighted degree above the bound are
  /// skipped and the result is marked truncated. Only meaningful for
  /// homogeneous input.
  std::optional<std::uint32_t> max_degree;
};

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_pruned = 0;
  std::size_t zero_reductions = 0;
};

struct GroebnerBasis {
  /// Reduced basis sorted by ascending leading monomial. {1} for the unit ideal.
  std::vector<Polynomial> polys;
  bool truncated = false;
  std::optional<std::uint32_t> degree_bound;
  BuchbergerStats stats;
};

/// Reduced Groebner basis of the ideal generated by `gens` in `ring`'s order.
/// Pairs are selected by smallest lcm degree with FIFO tie-break; the
/// coprime-leading-term and chain criteria are applied through the
/// Gebauer-Moeller update.
GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const BuchbergerOptions& options = {});

/// The S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Ideal with a lazily computed, shared reduced Groebner basis.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring_ptr() const noexcept { return ring_; }
  const Ring& ring() const noexcept { return *ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }

  const GroebnerBasis& groebner() const;
  const std::vector<Polynomial>& basis() const { return groebner().polys; }

  bool is_zero_ideal() const;
  bool is_unit() const;

 private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_membership(const Polynomial& f, const Ideal& ideal);

/// Intersection with the polynomial ring on the trailing variables. The
/// ideal's ring must use a block elimination order whose first block is the
/// set of variables to eliminate; the result lives in a ring on the trailing
/// variables (same names and weights) with graded reverse lexicographic order.
Ideal elimination_ideal(const Ideal& ideal);

/// Minimal monomial generators; kept as an antichain under divisibility.
class MonomialIdeal {
 public:
  MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens);

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  bool contains(const Monomial& m) const noexcept;
  bool is_unit() const noexcept;

 private:
  std::size_t num_vars_;
  std::vector<Monomial> gens_;
};

MonomialIdeal initial_ideal(const Ideal& ideal);

struct KrullDimension {
  int dimension = 0;  // -1 for the unit ideal
  bool unit_ideal = false;
};

/// Largest set of variables containing the support of no minimal generator.
KrullDimension combinatorial_dimension(const MonomialIdeal& m);
KrullDimension krull_dimension(const Ideal& ideal);

/// numerator(s) / prod_j (1 - s^{w_j}).
struct HilbertSeries {
  std::vector<std::int64_t> numerator;  // coefficient of s^k at index k
  std::vector<std::uint32_t> weights;

  /// Coefficients of the power series in degrees 0..max_degree.
  std::vector<std::int64_t> expand(std::uint32_t max_degree) const;
  /// Order of the pole at s = 1, i.e. the Krull dimension of the quotient.
  int pole_order() const;
  std::string to_string() const;
};

HilbertSeries hilbert_series(const MonomialIdeal& m, std::span<const std::uint32_t> weights);

}  // namespace paperlab
