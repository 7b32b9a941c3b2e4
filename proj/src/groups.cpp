#include "paperlab/groups.hpp"

#include <deque>
#include <numeric>

#include <json.hpp>

namespace paperlab {

std::string canonical_key(const MatrixFp& m) {
  std::string key;
  key.reserve(m.entries().size() * 2);
  for (Scalar s : m.entries()) {
    key.push_back(static_cast<char>(s.value & 0xff));
    key.push_back(static_cast<char>(s.value >> 8));
  }
  return key;
}

MatrixGroup MatrixGroup::closure(PrimeField field, std::size_t n, std::vector<MatrixFp> generators,
                                 std::size_t cap) {
  MatrixGroup g(field, n);
  for (const MatrixFp& m : generators) {
    if (!m.is_square() || m.rows() != n || !(m.field() == field)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "group generator must be a " + std::to_string(n) + "x" + std::to_string(n) +
                      " matrix over F_" + std::to_string(field.characteristic()));
    }
    if (rank(m) != n) throw Error(ErrorCode::kInvalidArgument, "group generator is not invertible");
  }
  g.generators_ = std::move(generators);

  const MatrixFp identity = MatrixFp::identity(field, n);
  g.elements_.push_back(identity);
  g.keys_.insert(canonical_key(identity));
  for (std::size_t head = 0; head < g.elements_.size(); ++head) {
    for (const MatrixFp& gen : g.generators_) {
      MatrixFp next = g.elements_[head] * gen;
      if (g.keys_.insert(canonical_key(next)).second) {
        if (g.elements_.size() >= cap) {
          throw Error(ErrorCode::kResourceCap,
                      "group closure exceeded " + std::to_string(cap) + " elements");
        }
        g.elements_.push_back(std::move(next));
      }
    }
  }
  return g;
}

Polynomial act(const MatrixFp& element, const Polynomial& f) { return substitute_linear(f, element); }

bool is_bireflection(const MatrixFp& m) {
  if (!m.is_square()) throw Error(ErrorCode::kDimension, "bireflection test needs a square matrix");
  return rank(m - MatrixFp::identity(m.field(), m.rows())) <= 2;
}

bool generated_by_bireflections(const MatrixGroup& g) {
  std::vector<MatrixFp> bireflections;
  for (const MatrixFp& e : g.elements()) {
    if (!e.is_identity() && is_bireflection(e)) bireflections.push_back(e);
  }
  const MatrixGroup sub = MatrixGroup::closure(g.field(), g.dimension(), std::move(bireflections));
  return sub.order() == g.order();
}

bool is_abelian(const MatrixGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!(gens[i] * gens[j] == gens[j] * gens[i])) return false;
    }
  }
  return true;
}

std::size_t element_order(const MatrixFp& m, std::size_t cap) {
  MatrixFp power = m;
  for (std::size_t k = 1; k <= cap; ++k) {
    if (power.is_identity()) return k;
    power = power * m;
  }
  throw Error(ErrorCode::kResourceCap, "element order exceeds " + std::to_string(cap));
}

std::uint64_t QuotientStructure::order() const noexcept {
  return std::accumulate(invariant_factors.begin(), invariant_factors.end(), std::uint64_t{1},
                         std::multiplies<>());
}

namespace {

// log_p(n) if n is a power of p, otherwise -1.
int exact_log(std::uint64_t n, std::uint64_t p) {
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  return n == 1 ? k : -1;
}

}  // namespace

QuotientStructure elementary_abelian_quotient(const MatrixGroup& g, const MatrixGroup& h) {
  const std::uint32_t p = g.field().characteristic();
  if (!is_abelian(g)) throw Error(ErrorCode::kInvalidArgument, "G is not abelian");
  for (const MatrixFp& e : g.elements()) {
    if (!e.is_identity() && element_order(e) != p) {
      throw Error(ErrorCode::kInvalidArgument, "G has an element whose order is not p");
    }
  }
  for (const MatrixFp& e : h.elements()) {
    if (!g.contains(e)) throw Error(ErrorCode::kInvalidArgument, "H is not contained in G");
  }
  const int dim_g = exact_log(g.order(), p);
  const int dim_h = exact_log(h.order(), p);
  if (dim_g < 0 || dim_h < 0) {
    throw Error(ErrorCode::kInternal, "elementary abelian group order is not a power of p");
  }
  return QuotientStructure{std::vector<std::uint64_t>(static_cast<std::size_t>(dim_g - dim_h), p)};
}

bool has_nontrivial_character(const MatrixGroup& g) {
  if (!is_abelian(g)) {
    throw Error(ErrorCode::kInvalidArgument, "character test is only implemented for abelian groups");
  }
  const std::uint64_t units = g.field().characteristic() - 1;
  for (const MatrixFp& e : g.elements()) {
    if (std::gcd(static_cast<std::uint64_t>(element_order(e)), units) > 1) return true;
  }
  return false;
}

MatrixFp matrix_from_json(std::string_view text, PrimeField field) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("matrix JSON: ") + e.what());
  }
  if (!doc.is_array()) throw Error(ErrorCode::kParse, "matrix JSON must be an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& row : doc) {
    if (!row.is_array()) throw Error(ErrorCode::kParse, "matrix row must be an array");
    auto& out = rows.emplace_back();
    for (const auto& entry : row) {
      if (!entry.is_number_integer()) throw Error(ErrorCode::kParse, "matrix entries must be integers");
      out.push_back(entry.get<std::int64_t>());
    }
  }
  return MatrixFp::from_rows(field, rows);
}

}  // namespace paperlab
