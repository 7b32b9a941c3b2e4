#pragma once

// Finitely presented graded algebras K[t]/I: presentation ideals by
// elimination, subalgebra membership, minimal graded free resolutions, depth
// and the Cohen-Macaulay verdict.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "paperlab/groebner.hpp"
#include "paperlab/groups.hpp"

namespace paperlab {

/// K[t_1..t_m]/I with deg t_j = deg g_j, optionally together with the
/// generators g_j in an ambient ring T that it presents.
class PresentedRing {
 public:
  /// Quotient of a weighted polynomial ring by an ideal, with no ambient map.
  static PresentedRing quotient(Ideal ideal);

  const Ideal& ideal() const noexcept { return ideal_; }
  const RingPtr& ring() const noexcept { return ideal_.ring_ptr(); }
  std::size_t num_vars() const noexcept { return ideal_.ring().num_vars(); }

  bool has_ambient() const noexcept { return ambient_ != nullptr; }
  const RingPtr& ambient() const noexcept { return ambient_; }
  /// Generators in presentation-variable order (sorted by degree, then discovery).
  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  /// discovery index of each presentation variable
  const std::vector<std::size_t>& discovery_index() const noexcept { return discovery_; }

  const RingPtr& combined_ring() const noexcept { return combined_; }
  /// Reduced Groebner basis of (t_j - g_j) in K[x, t] under x-block elimination.
  const std::vector<Polynomial>& elimination_basis() const noexcept { return elimination_basis_; }

  /// Evaluates t_j := g_j.
  Polynomial substitute(const Polynomial& in_t) const;

 private:
  friend PresentedRing presentation_ideal(std::span<const Polynomial> gens);
  explicit PresentedRing(Ideal ideal) : ideal_(std::move(ideal)) {}

  Ideal ideal_;
  RingPtr ambient_;
  std::vector<Polynomial> generators_;
  std::vector<std::size_t> discovery_;
  RingPtr combined_;
  std::vector<Polynomial> elimination_basis_;
};

/// Kernel of K[t] -> T, t_j |-> g_j, for nonzero homogeneous g_j.
PresentedRing presentation_ideal(std::span<const Polynomial> gens);

struct MembershipResult {
  bool member = false;
  std::optional<Polynomial> preimage;  // in K[t]; substitutes back to f
};

MembershipResult subalgebra_membership(const Polynomial& f, const PresentedRing& ring);

/// Sparse matrix over the presentation ring, stored by columns.
struct PolyMatrix {
  std::size_t rows = 0;
  std::vector<std::vector<std::pair<std::size_t, Polynomial>>> columns;  // (row, entry), rows ascending

  std::size_t cols() const noexcept { return columns.size(); }
  bool has_unit_entry() const;
};

struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;  // (i, j) -> beta_{i,j}, nonzero only
  int projective_dimension = 0;

  std::size_t at(int i, int j) const;
  std::size_t total(int i) const;
  /// Rows are internal degrees j, columns homological indices i.
  std::string to_string() const;
};

struct ResolutionOptions {
  /// Before resolving, repeatedly pass to K[t]/(I + t_j) for a presentation
  /// variable t_j that is a nonzerodivisor modulo I. Graded Betti numbers and
  /// projective dimension are unchanged; the matrices then live over the
  /// smaller ring.
  bool cut_regular_variables = true;
};

struct FreeResolution {
  /// Ring the differentials are written over.
  RingPtr ring;
  /// Presentation variables divided out as a regular sequence, in order.
  std::vector<std::string> cut_variables;
  /// degrees[i][k]: degree of the k-th basis element of F_i (minimized complex)
  std::vector<std::vector<std::uint32_t>> degrees;
  /// differentials[i-1]: F_i -> F_{i-1} (minimized)
  std::vector<PolyMatrix> differentials;
  BettiTable betti;
  /// ranks of the free modules before pruning
  std::vector<std::size_t> nonminimal_ranks;
};

/// Schreyer resolution of K[t]/I from the reduced Groebner basis, followed by
/// pruning of unit entries.
FreeResolution free_resolution(const PresentedRing& ring, const ResolutionOptions& options = {});

struct RingVerdict {
  int num_vars = 0;
  int projective_dimension = 0;
  int dimension = 0;
  int depth = 0;
  bool is_cohen_macaulay = false;
  int cm_defect = 0;
  bool euler_check = false;  // alternating Betti sum reproduces the Hilbert numerator
};

/// Graded Auslander-Buchsbaum: depth = m - pd. Throws Error(kInvalidArgument)
/// for a unit presentation ideal and Error(kInternal) when a self-check fails.
RingVerdict depth_report(const PresentedRing& ring, const FreeResolution& resolution);
RingVerdict depth_report(const PresentedRing& ring);

struct HilbertComparison {
  bool consistent = false;
  std::optional<std::uint32_t> first_mismatch;
  std::vector<std::int64_t> presented;  // from K[t]/I
  std::vector<std::int64_t> invariant;  // dim (T_n)^G
};

HilbertSeries presented_hilbert_series(const PresentedRing& ring);

HilbertComparison hilbert_consistency(const PresentedRing& ring, const MatrixGroup& g,
                                      std::uint32_t max_degree);

}  // namespace paperlab
