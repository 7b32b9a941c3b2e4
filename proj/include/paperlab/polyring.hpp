#pragma once

// Weighted-graded multivariate polynomial rings over F_p.
//
// Action convention: a matrix M acts on a polynomial by f |-> f(MX), where X
// is the column vector of the ring's variables. This is a right action:
// (f.N).M = f.(NM). Invariant rings do not depend on the choice.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paperlab/arith.hpp"

namespace paperlab {

inline constexpr std::size_t kMaxVars = 64;

/// Exponent vector with a cached weighted degree and support bitmask.
/// Exponents beyond the owning ring's variable count are always zero.
class Monomial {
 public:
  Monomial() = default;

  /// Weighted degree sum(e_i * w_i) is computed from the given weights.
  static Monomial from_exponents(std::span<const std::uint32_t> exps,
                                 std::span<const std::uint32_t> weights);

  std::uint32_t exponent(std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint64_t support() const noexcept { return support_; }
  bool is_one() const noexcept { return support_ == 0; }

  bool divides(const Monomial& other) const noexcept {
    if ((support_ & ~other.support_) != 0) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }
  /// True when the two monomials share no variable.
  bool coprime(const Monomial& other) const noexcept { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const;
  /// Requires other.divides(*this).
  Monomial operator/(const Monomial& other) const;

  std::size_t hash() const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.support_ == b.support_ && a.exps_ == b.exps_;
  }

  /// Setters that keep degree and support in sync.
  void set_exponent(std::size_t i, std::uint32_t e, std::uint32_t weight);

 private:
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint32_t degree_ = 0;
  std::uint64_t support_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

struct VarSpec {
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;

  static VarSpec uniform(std::vector<std::string> names);
  friend bool operator==(const VarSpec&, const VarSpec&) = default;
};

enum class OrderKind { kGRevLex, kLex, kBlockElimination };

/// Block elimination compares the first `first_block` variables by weighted
/// graded reverse lexicographic order, breaking ties on the remaining ones the
/// same way. Any monomial involving the first block is therefore larger than
/// every monomial free of it.
struct MonomialOrder {
  OrderKind kind = OrderKind::kGRevLex;
  std::size_t first_block = 0;

  static MonomialOrder grevlex() { return {OrderKind::kGRevLex, 0}; }
  static MonomialOrder lex() { return {OrderKind::kLex, 0}; }
  static MonomialOrder block(std::size_t first) { return {OrderKind::kBlockElimination, first}; }

  std::string name() const;
  /// Accepts "grevlex", "lex", "block:<k>".
  static MonomialOrder parse(std::string_view text);

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  Ring(PrimeField field, VarSpec vars, MonomialOrder order);

  static RingPtr make(PrimeField field, VarSpec vars,
                      MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const noexcept { return field_; }
  const VarSpec& vars() const noexcept { return vars_; }
  const MonomialOrder& order() const noexcept { return order_; }
  std::size_t num_vars() const noexcept { return vars_.names.size(); }
  std::span<const std::uint32_t> weights() const noexcept { return vars_.weights; }

  /// Index of a variable by name; throws Error(kParse) when unknown.
  std::size_t var_index(std::string_view name) const;
  Monomial variable(std::size_t i, std::uint32_t exp = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  Monomial gcd(const Monomial& a, const Monomial& b) const;

  /// Three-way comparison in this ring's order: negative, zero or positive.
  int compare(const Monomial& a, const Monomial& b) const noexcept;
  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare(a, b) > 0; }

  RingPtr with_order(MonomialOrder order) const;

  /// Same field, variables and order.
  bool same_as(const Ring& other) const noexcept;

  std::string format_monomial(const Monomial& m) const;

 private:
  int compare_grevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                      std::size_t hi) const noexcept;

  PrimeField field_;
  VarSpec vars_;
  MonomialOrder order_;
};

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse polynomial: terms strictly descending in the ring's order, no zero
/// coefficients. The empty term list is the zero polynomial.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, Scalar c);
  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial variable(RingPtr ring, std::size_t i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Scalar c);
  /// Sorts, merges duplicates and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const Ring& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  Scalar lead_coeff() const { return terms_.front().coeff; }

  /// Largest weighted degree of a term; 0 for the zero polynomial.
  std::uint32_t degree() const noexcept;
  bool is_homogeneous() const noexcept;
  std::map<std::uint32_t, Polynomial> homogeneous_components() const;

  /// True when no term involves a variable outside [lo, hi).
  bool only_uses_vars(std::size_t lo, std::size_t hi) const noexcept;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scaled(Scalar c) const;
  Polynomial times_term(const Monomial& m, Scalar c) const;
  /// this - c*m*g in one merge pass.
  Polynomial minus_term_times(const Monomial& m, Scalar c, const Polynomial& g) const;
  Polynomial pow(std::uint32_t e) const;
  Polynomial monic() const;

  /// Re-roots the polynomial in `target`; var_map[i] is the target index of
  /// source variable i. Terms are re-sorted in the target order.
  Polynomial mapped_to(RingPtr target, std::span<const std::size_t> var_map) const;

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  void check_same_ring(const Polynomial& g) const;

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Grammar: sum of signed terms, each a '*'-separated product of integers and
/// variables with optional '^exponent'. Whitespace is insignificant and
/// coefficients are reduced modulo p. Errors report the character offset.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Descending order, coefficients in [1, p), terms joined by " + ".
std::string format_polynomial(const Polynomial& f);

/// f(MX): variable j is replaced by sum_k M(j, k) x_k.
Polynomial substitute_linear(const Polynomial& f, const MatrixFp& m);

/// All monomials of weighted degree n, descending in the ring's order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, std::uint32_t n);

}  // namespace paperlab
