#pragma once

// Finite matrix groups over F_p given by generators and enumerated explicitly.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "paperlab/arith.hpp"
#include "paperlab/polyring.hpp"

namespace paperlab {

/// Row-major base-p digit string (two bytes per entry) used for set membership.
std::string canonical_key(const MatrixFp& m);

class MatrixGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  /// Breadth-first product closure of the generators. Throws
  /// Error(kInvalidArgument) for a singular or mis-shaped generator and
  /// Error(kResourceCap) when more than `cap` elements appear.
  static MatrixGroup closure(PrimeField field, std::size_t n, std::vector<MatrixFp> generators,
                             std::size_t cap = kDefaultCap);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return n_; }
  const std::vector<MatrixFp>& generators() const noexcept { return generators_; }
  /// Identity first, then discovery order.
  const std::vector<MatrixFp>& elements() const noexcept { return elements_; }
  std::size_t order() const noexcept { return elements_.size(); }
  bool contains(const MatrixFp& m) const { return keys_.contains(canonical_key(m)); }

 private:
  MatrixGroup(PrimeField field, std::size_t n) : field_(field), n_(n) {}

  PrimeField field_;
  std::size_t n_;
  std::vector<MatrixFp> generators_;
  std::vector<MatrixFp> elements_;
  std::unordered_set<std::string> keys_;
};

/// f |-> f(MX).
Polynomial act(const MatrixFp& element, const Polynomial& f);

/// rank(M - I) <= 2, i.e. the fixed space has codimension at most two.
bool is_bireflection(const MatrixFp& m);

bool generated_by_bireflections(const MatrixGroup& g);

/// Checks that the generators commute pairwise.
bool is_abelian(const MatrixGroup& g);

/// Smallest k >= 1 with m^k = I. Throws Error(kResourceCap) past `cap`.
std::size_t element_order(const MatrixFp& m, std::size_t cap = MatrixGroup::kDefaultCap);

struct QuotientStructure {
  std::vector<std::uint64_t> invariant_factors;

  std::uint64_t order() const noexcept;
};

/// G/H for an elementary abelian p-group G and a subgroup H. Throws
/// Error(kInvalidArgument) when G is not elementary abelian or H is not
/// contained in G.
QuotientStructure elementary_abelian_quotient(const MatrixGroup& g, const MatrixGroup& h);

/// Whether some homomorphism G -> F_p^x is nontrivial. Only defined for
/// abelian G; throws Error(kInvalidArgument) otherwise.
bool has_nontrivial_character(const MatrixGroup& g);

/// Parses a JSON array of integer rows, reducing entries modulo p.
MatrixFp matrix_from_json(std::string_view text, PrimeField field);

}  // namespace paperlab
