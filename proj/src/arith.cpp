#include "paperlab/arith.hpp"

#include <string>
#include <utility>

namespace paperlab {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kArithmetic: return "arithmetic";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kRingMismatch: return "ring_mismatch";
    case ErrorCode::kDimension: return "dimension";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kResourceCap: return "resource_cap";
    case ErrorCode::kInternal: return "internal";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument,
                "characteristic " + std::to_string(p) + " is not prime");
  }
  if (p > kMaxCharacteristic) {
    throw Error(ErrorCode::kInvalidArgument,
                "characteristic " + std::to_string(p) + " exceeds 2^15");
  }
}

Scalar PrimeField::inv(Scalar a) const {
  if (a.is_zero()) throw Error(ErrorCode::kArithmetic, "inverse of zero in F_p");
  std::int64_t old_r = a.value, r = p_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return from_int(old_s);
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = one();
  while (e != 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

MatrixFp::MatrixFp(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols) {}

MatrixFp MatrixFp::from_rows(PrimeField field,
                             const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t ncols = rows.empty() ? 0 : rows.front().size();
  MatrixFp m(field, rows.size(), ncols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != ncols) {
      throw Error(ErrorCode::kDimension, "ragged matrix rows");
    }
    for (std::size_t c = 0; c < ncols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

MatrixFp MatrixFp::identity(PrimeField field, std::size_t n) {
  MatrixFp m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

MatrixFp MatrixFp::operator*(const MatrixFp& other) const {
  if (cols_ != other.rows_ || !(field_ == other.field_)) {
    throw Error(ErrorCode::kDimension, "matrix product shape or field mismatch");
  }
  MatrixFp out(field_, rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        out(i, j) = field_.add(out(i, j), field_.mul(a, other(k, j)));
      }
    }
  }
  return out;
}

MatrixFp MatrixFp::operator-(const MatrixFp& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw Error(ErrorCode::kDimension, "matrix difference shape mismatch");
  }
  MatrixFp out(field_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = field_.sub(entries_[i], other.entries_[i]);
  }
  return out;
}

std::vector<Scalar> MatrixFp::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::kDimension, "vector length mismatch");
  std::vector<Scalar> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Scalar acc = field_.zero();
    for (std::size_t j = 0; j < cols_; ++j) acc = field_.add(acc, field_.mul((*this)(i, j), v[j]));
    out[i] = acc;
  }
  return out;
}

bool MatrixFp::is_identity() const noexcept {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j).value != (i == j ? 1u : 0u)) return false;
    }
  }
  return true;
}

RrefResult rref(const MatrixFp& m) {
  const PrimeField& f = m.field();
  MatrixFp e = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < e.cols() && row < e.rows(); ++col) {
    std::size_t sel = row;
    while (sel < e.rows() && e(sel, col).is_zero()) ++sel;
    if (sel == e.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < e.cols(); ++c) std::swap(e(sel, c), e(row, c));
    }
    const Scalar inv = f.inv(e(row, col));
    for (std::size_t c = col; c < e.cols(); ++c) e(row, c) = f.mul(e(row, c), inv);
    for (std::size_t r = 0; r < e.rows(); ++r) {
      if (r == row) continue;
      const Scalar factor = e(r, col);
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < e.cols(); ++c) {
        e(r, c) = f.sub(e(r, c), f.mul(factor, e(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return RrefResult{row, std::move(pivots), std::move(e)};
}

std::size_t rank(const MatrixFp& m) { return rref(m).rank; }

std::vector<std::vector<Scalar>> kernel_basis(const MatrixFp& m) {
  const RrefResult r = rref(m);
  const PrimeField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = f.neg(r.echelon(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

EchelonSpan::EchelonSpan(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

bool EchelonSpan::reduce(std::vector<Scalar>& v) const {
  if (v.size() != dim_) throw Error(ErrorCode::kDimension, "vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar factor = v[pivots_[k]];
    if (factor.is_zero()) continue;
    const auto& row = rows_[k];
    for (std::size_t c = pivots_[k]; c < dim_; ++c) {
      if (!row[c].is_zero()) v[c] = field_.sub(v[c], field_.mul(factor, row[c]));
    }
  }
  for (Scalar s : v) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool EchelonSpan::insert(std::vector<Scalar> v) {
  if (reduce(v)) return false;
  std::size_t pivot = 0;
  while (v[pivot].is_zero()) ++pivot;
  const Scalar inv = field_.inv(v[pivot]);
  for (std::size_t c = pivot; c < dim_; ++c) v[c] = field_.mul(v[c], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  return true;
}

}  // namespace paperlab
