#pragma once

// Exact arithmetic over a prime field F_p and dense linear algebra on top of it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "paperlab/error.hpp"

namespace paperlab {

/// Canonical representative of a residue class, always in [0, p).
struct Scalar {
  std::uint32_t value = 0;

  constexpr bool is_zero() const noexcept { return value == 0; }
  friend constexpr bool operator==(Scalar, Scalar) = default;
  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

/// The prime field F_p for 2 <= p <= 2^15.
class PrimeField {
 public:
  static constexpr std::uint32_t kMaxCharacteristic = 1u << 15;

  /// Throws Error(kInvalidArgument) unless p is a prime in range.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }

  /// Reduces any integer (negative included) to its canonical representative.
  Scalar from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Scalar{static_cast<std::uint32_t>(r)};
  }

  Scalar zero() const noexcept { return Scalar{0}; }
  Scalar one() const noexcept { return Scalar{1}; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint32_t s = a.value + b.value;
    return Scalar{s >= p_ ? s - p_ : s};
  }
  Scalar sub(Scalar a, Scalar b) const noexcept {
    return Scalar{a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  Scalar neg(Scalar a) const noexcept { return Scalar{a.value == 0 ? 0 : p_ - a.value}; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return Scalar{static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a.value) * b.value) % p_)};
  }
  /// Extended Euclid. Throws Error(kArithmetic) for a = 0.
  Scalar inv(Scalar a) const;
  Scalar div(Scalar a, Scalar b) const { return mul(a, inv(b)); }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Dense row-major matrix over F_p.
class MatrixFp {
 public:
  MatrixFp(PrimeField field, std::size_t rows, std::size_t cols);
  /// Entries are reduced modulo p.
  static MatrixFp from_rows(PrimeField field,
                            const std::vector<std::vector<std::int64_t>>& rows);
  static MatrixFp identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::span<Scalar> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  const std::vector<Scalar>& entries() const noexcept { return entries_; }

  MatrixFp operator*(const MatrixFp& other) const;
  MatrixFp operator-(const MatrixFp& other) const;
  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  bool is_identity() const noexcept;

  friend bool operator==(const MatrixFp&, const MatrixFp&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> entries_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  MatrixFp echelon;
};

/// Reduced row echelon form. Pivots are chosen leftmost column first, then
/// topmost available row, so the result is reproducible.
RrefResult rref(const MatrixFp& m);

std::size_t rank(const MatrixFp& m);

/// Basis of the right null space, one vector per free column in ascending
/// order; the free coordinate is 1 and the other free coordinates are 0.
std::vector<std::vector<Scalar>> kernel_basis(const MatrixFp& m);

/// Incrementally maintained echelon basis of a subspace of F_p^n. Used for
/// "is this vector in the span so far" queries without rebuilding matrices.
class EchelonSpan {
 public:
  EchelonSpan(PrimeField field, std::size_t dim);

  std::size_t dimension() const noexcept { return rows_.size(); }
  std::size_t ambient_dimension() const noexcept { return dim_; }

  /// Reduces v against the current basis in place; returns true if v is zero afterwards.
  bool reduce(std::vector<Scalar>& v) const;
  bool contains(std::vector<Scalar> v) const { return reduce(v); }
  /// Adds v to the span; returns false if it was already contained.
  bool insert(std::vector<Scalar> v);

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;  // each row monic at its pivot
  std::vector<std::size_t> pivots_;
};

}  // namespace paperlab
