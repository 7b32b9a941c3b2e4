#include "paperlab/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "paperlab/structure.hpp"

namespace paperlab {

namespace {

// f |-> f(MX) on monomials, with the powers of the variable images cached.
class LinearAction {
 public:
  LinearAction(const MatrixFp& m, const RingPtr& ring) : ring_(ring) {
    const std::size_t n = ring->num_vars();
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < n; ++k) {
        if (!m(j, k).is_zero()) terms.push_back(Term{ring->variable(k), m(j, k)});
      }
      powers_.push_back({Polynomial::constant(ring, Scalar{1}),
                         Polynomial::from_terms(ring, std::move(terms))});
    }
  }

  Polynomial image(const Monomial& m) {
    Polynomial out = Polynomial::constant(ring_, Scalar{1});
    for (std::size_t j = 0; j < powers_.size(); ++j) {
      const auto e = m.exponent(j);
      if (e != 0) out = out * power(j, e);
    }
    return out;
  }

 private:
  const Polynomial& power(std::size_t j, std::uint32_t e) {
    auto& cache = powers_[j];
    while (cache.size() <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  }

  RingPtr ring_;
  std::vector<std::vector<Polynomial>> powers_;
};

void check_ring(const MatrixGroup& g, const RingPtr& ring) {
  if (ring->num_vars() != g.dimension() || !(ring->field() == g.field())) {
    throw Error(ErrorCode::kDimension, "group and polynomial ring do not match");
  }
}

// Connected components of the "variable j's image involves variable k" graph.
std::vector<std::size_t> variable_blocks(const MatrixGroup& g) {
  const std::size_t n = g.dimension();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const MatrixFp& m : g.generators()) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (j != k && !m(j, k).is_zero()) parent[find(j)] = find(k);
      }
    }
  }
  std::vector<std::size_t> block(n);
  std::vector<std::size_t> label(n, n);
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t root = find(v);
    if (label[root] == n) label[root] = next++;
    block[v] = label[root];
  }
  return block;
}

// Monomials of degree n split by their degree in each block, classes ordered by
// first appearance in the descending monomial list.
std::vector<std::vector<Monomial>> monomial_classes(const MatrixGroup& g, const Ring& ring,
                                                    std::uint32_t n) {
  const auto block = variable_blocks(g);
  const auto weights = ring.weights();
  std::vector<std::vector<Monomial>> classes;
  std::unordered_map<std::string, std::size_t> index;
  for (const Monomial& m : monomials_of_degree(ring, n)) {
    std::vector<std::uint32_t> deg(ring.num_vars(), 0);
    for (std::size_t v = 0; v < ring.num_vars(); ++v) deg[block[v]] += m.exponent(v) * weights[v];
    std::string key;
    for (std::uint32_t d : deg) key += std::to_string(d) + ",";
    auto [it, inserted] = index.try_emplace(key, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(m);
  }
  return classes;
}

}  // namespace

std::vector<Polynomial> invariant_space(const MatrixGroup& g, const RingPtr& ring, std::uint32_t n) {
  check_ring(g, ring);
  std::vector<LinearAction> actions;
  for (const MatrixFp& m : g.generators()) actions.emplace_back(m, ring);

  std::vector<Polynomial> basis;
  for (const auto& cls : monomial_classes(g, *ring, n)) {
    std::unordered_map<Monomial, std::size_t, MonomialHash> col;
    for (std::size_t i = 0; i < cls.size(); ++i) col.emplace(cls[i], i);
    const std::size_t k = cls.size();
    MatrixFp a(ring->field(), actions.size() * k, k);
    for (std::size_t gi = 0; gi < actions.size(); ++gi) {
      for (std::size_t j = 0; j < k; ++j) {
        const Polynomial moved = actions[gi].image(cls[j]) -
                                 Polynomial::monomial(ring, cls[j], Scalar{1});
        for (const Term& t : moved.terms()) a(gi * k + col.at(t.mono), j) = t.coeff;
      }
    }
    for (const auto& v : kernel_basis(a)) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < k; ++j) {
        if (!v[j].is_zero()) terms.push_back(Term{cls[j], v[j]});
      }
      basis.push_back(Polynomial::from_terms(ring, std::move(terms)));
    }
  }
  return basis;
}

std::vector<std::int64_t> invariant_hilbert_function(const MatrixGroup& g, const RingPtr& ring,
                                                     std::uint32_t max_degree) {
  std::vector<std::int64_t> dims;
  for (std::uint32_t n = 0; n <= max_degree; ++n) {
    dims.push_back(static_cast<std::int64_t>(invariant_space(g, ring, n).size()));
  }
  return dims;
}

std::string certificate_name(Certificate c) {
  switch (c) {
    case Certificate::kHeuristic: return "heuristic";
    case Certificate::kVerifiedUpTo: return "verified-up-to-D";
    case Certificate::kIntegralAndMatching: return "integral-and-matching";
  }
  return "?";
}

std::vector<Polynomial> GeneratorSet::polynomials() const {
  std::vector<Polynomial> out;
  for (const auto& e : entries) out.push_back(e.poly);
  return out;
}

std::vector<std::size_t> GeneratorSet::count_by_degree() const {
  std::uint32_t top = bound;
  for (const auto& e : entries) top = std::max(top, e.degree);
  std::vector<std::size_t> counts(top + 1, 0);
  for (const auto& e : entries) ++counts[e.degree];
  return counts;
}

GeneratorSet minimal_generators(const MatrixGroup& g, const RingPtr& ring, std::uint32_t max_degree) {
  check_ring(g, ring);
  if (max_degree < 1) throw Error(ErrorCode::kInvalidArgument, "degree bound must be at least 1");
  GeneratorSet out;
  out.bound = max_degree;
  out.certificate = Certificate::kVerifiedUpTo;

  for (std::uint32_t n = 1; n <= max_degree; ++n) {
    const auto invariants = invariant_space(g, ring, n);
    if (invariants.empty()) continue;
    const auto monos = monomials_of_degree(*ring, n);
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
    for (std::size_t i = 0; i < monos.size(); ++i) index.emplace(monos[i], i);
    auto coords = [&](const Polynomial& f) {
      std::vector<Scalar> v(monos.size());
      for (const Term& t : f.terms()) v[index.at(t.mono)] = t.coeff;
      return v;
    };

    EchelonSpan decomposable(ring->field(), monos.size());
    const std::size_t earlier = out.entries.size();
    // unordered products e_{i1} * ... * e_{ik}, i1 <= ... <= ik, of total degree n
    auto enumerate = [&](auto& self, std::size_t from, std::uint32_t remaining,
                         const Polynomial& partial, bool nontrivial) -> void {
      if (decomposable.dimension() == invariants.size()) return;
      if (remaining == 0) {
        if (nontrivial) decomposable.insert(coords(partial));
        return;
      }
      for (std::size_t i = from; i < earlier; ++i) {
        const auto& e = out.entries[i];
        if (e.degree > remaining) continue;
        self(self, i, remaining - e.degree, partial * e.poly, true);
      }
    };
    enumerate(enumerate, 0, n, Polynomial::constant(ring, Scalar{1}), false);

    for (const Polynomial& f : invariants) {
      if (decomposable.insert(coords(f))) out.entries.push_back(GeneratorEntry{f, n});
    }
  }
  return out;
}

Polynomial NormPolynomial::evaluate(const Polynomial& z) const {
  Polynomial acc(z.ring_ptr());
  for (std::size_t k = coefficients.size(); k-- > 0;) acc = acc * z + coefficients[k];
  return acc;
}

NormPolynomial norm_polynomial(const MatrixGroup& g, const RingPtr& ring, std::size_t variable) {
  check_ring(g, ring);
  if (variable >= ring->num_vars()) throw Error(ErrorCode::kDimension, "variable index out of range");
  const Polynomial x = Polynomial::variable(ring, variable);
  std::vector<Polynomial> orbit;
  for (const MatrixFp& e : g.elements()) {
    Polynomial w = act(e, x);
    if (std::find(orbit.begin(), orbit.end(), w) == orbit.end()) orbit.push_back(std::move(w));
  }
  NormPolynomial norm;
  norm.variable = variable;
  norm.coefficients = {Polynomial::constant(ring, Scalar{1})};
  for (const Polynomial& w : orbit) {
    // multiply by (Z - w)
    std::vector<Polynomial> next(norm.coefficients.size() + 1, Polynomial(ring));
    for (std::size_t k = 0; k < norm.coefficients.size(); ++k) {
      next[k + 1] += norm.coefficients[k];
      next[k] -= w * norm.coefficients[k];
    }
    norm.coefficients = std::move(next);
  }
  return norm;
}

bool check_invariant(const MatrixGroup& g, const Polynomial& f) {
  for (const MatrixFp& m : g.generators()) {
    if (!(act(m, f) == f)) return false;
  }
  return true;
}

std::string OffendingCoefficient::describe() const {
  return "coefficient of Z^" + std::to_string(power) + " in the norm of variable " +
         std::to_string(variable) + ": " + coefficient.to_string();
}

IntegralityResult integrality_certificate(const MatrixGroup& g, const RingPtr& ring,
                                          const GeneratorSet& candidate) {
  check_ring(g, ring);
  IntegralityResult result;
  result.generators = candidate;
  const auto gens = candidate.polynomials();
  const PresentedRing presented = presentation_ideal(gens);

  for (std::size_t v = 0; v < ring->num_vars(); ++v) {
    const NormPolynomial norm = norm_polynomial(g, ring, v);
    for (std::size_t k = 0; k + 1 < norm.coefficients.size(); ++k) {
      if (!subalgebra_membership(norm.coefficients[k], presented).member) {
        result.offending.push_back(OffendingCoefficient{v, k, norm.coefficients[k]});
      }
    }
  }
  result.norms_in_subalgebra = result.offending.empty();

  result.hilbert_window = 2 * candidate.bound;
  const HilbertComparison cmp = hilbert_consistency(presented, g, result.hilbert_window);
  result.hilbert_matches = cmp.consistent;
  result.first_hilbert_mismatch = cmp.first_mismatch;

  if (result.norms_in_subalgebra && result.hilbert_matches) {
    result.generators.certificate = Certificate::kIntegralAndMatching;
  }
  return result;
}

}  // namespace paperlab
