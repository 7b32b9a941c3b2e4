#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "paperlab/invariants.hpp"
#include "support.hpp"

using namespace paperlab;
using testing::block_ring;
using testing::group_g;
using testing::group_h;
using testing::trivial;

namespace {

// Degree-n invariants by brute force: the common kernel of (e - id) over
// every group element on the full monomial basis, with no block splitting.
std::size_t brute_force_dimension(const MatrixGroup& g, const RingPtr& ring, std::uint32_t n) {
  const auto monos = monomials_of_degree(*ring, n);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[ring->format_monomial(monos[i])] = i;
  MatrixFp a(ring->field(), g.order() * monos.size(), monos.size());
  for (std::size_t e = 0; e < g.order(); ++e) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      const Polynomial m = Polynomial::monomial(ring, monos[j], Scalar{1});
      const Polynomial moved = act(g.elements()[e], m) - m;
      for (const Term& t : moved.terms()) {
        a(e * monos.size() + index.at(ring->format_monomial(t.mono)), j) = t.coeff;
      }
    }
  }
  return monos.size() - rank(a);
}

// Coefficients of 1/((1-s)^a (1-s^2)^b) up to the given degree.
std::vector<std::int64_t> expand_product(int a, int b, std::uint32_t top) {
  std::vector<std::int64_t> c(top + 1, 0);
  c[0] = 1;
  for (int k = 0; k < a; ++k) {
    for (std::uint32_t n = 1; n <= top; ++n) c[n] += c[n - 1];
  }
  for (int k = 0; k < b; ++k) {
    for (std::uint32_t n = 2; n <= top; ++n) c[n] += c[n - 2];
  }
  return c;
}

}  // namespace

TEST_CASE("invariant spaces of the cyclic group") {
  const RingPtr r = block_ring(2, 3);
  const MatrixGroup h = group_h(2, 3);
  CHECK(invariant_space(h, r, 0).size() == 1);
  CHECK(invariant_space(h, r, 1).size() == 3);
  CHECK(invariant_space(h, r, 2).size() == 12);
  for (const Polynomial& f : invariant_space(h, r, 1)) {
    CHECK(f.terms().size() == 1);
    CHECK(check_invariant(h, f));
  }
}

TEST_CASE("Hilbert function of the block group") {
  for (std::uint32_t p : {2u, 3u}) {
    const RingPtr r = block_ring(p, 3);
    const auto dims = invariant_hilbert_function(group_g(p, 3), r, 8);
    // generators y_i in degree 1 and one degree-p norm per block
    std::vector<std::int64_t> expected(9, 0);
    expected[0] = 1;
    for (int k = 0; k < 3; ++k) {
      for (std::uint32_t n = 1; n <= 8; ++n) expected[n] += expected[n - 1];
      for (std::uint32_t n = p; n <= 8; ++n) expected[n] += expected[n - p];
    }
    CHECK(dims == expected);
  }
  CHECK(invariant_hilbert_function(group_g(2, 3), block_ring(2, 3), 8) == expand_product(3, 3, 8));
}

TEST_CASE("trivial group: every monomial is invariant") {
  const RingPtr r = testing::ring_of(5, {"a", "b", "c"});
  CHECK(invariant_hilbert_function(trivial(5, 3), r, 5) == expand_product(3, 0, 5));
}

TEST_CASE("invariant spaces agree with the all-elements oracle") {
  for (std::uint32_t p : {2u, 3u}) {
    const RingPtr r = block_ring(p, 2);
    const PrimeField f(p);
    std::vector<MatrixGroup> groups;
    groups.push_back(group_g(p, 2));
    groups.push_back(group_h(p, 2));
    groups.push_back(MatrixGroup::closure(f, 4, {testing::unipotent(f, {1, 2})}));
    for (const MatrixGroup& g : groups) {
      if (g.order() > 9) continue;
      for (std::uint32_t n = 0; n <= 3; ++n) {
        CHECK(invariant_space(g, r, n).size() == brute_force_dimension(g, r, n));
      }
    }
  }
  const RingPtr r = block_ring(2, 3);
  for (std::uint32_t n = 0; n <= 3; ++n) {
    CHECK(invariant_space(group_g(2, 3), r, n).size() == brute_force_dimension(group_g(2, 3), r, n));
    CHECK(invariant_space(group_h(2, 3), r, n).size() == brute_force_dimension(group_h(2, 3), r, n));
  }
}

TEST_CASE("cyclic group, p = 2, three blocks: one indecomposable cubic") {
  // rank of all products S_1 * S_2 inside S_3, computed on the full monomial basis
  const RingPtr r = block_ring(2, 3);
  const MatrixGroup h = group_h(2, 3);
  const auto s1 = invariant_space(h, r, 1);
  const auto s2 = invariant_space(h, r, 2);
  const auto s3 = invariant_space(h, r, 3);
  const auto monos = monomials_of_degree(*r, 3);
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < monos.size(); ++i) index[r->format_monomial(monos[i])] = i;
  MatrixFp products(r->field(), s1.size() * s2.size() + 1, monos.size());
  std::size_t row = 0;
  for (const auto& a : s1) {
    for (const auto& b : s2) {
      const Polynomial ab = a * b;
      for (const Term& t : ab.terms()) products(row, index.at(r->format_monomial(t.mono))) = t.coeff;
      ++row;
    }
  }
  CHECK(s3.size() == 28);
  const std::size_t decomposable = rank(products);
  CHECK(s3.size() - decomposable == 1);
  CHECK(minimal_generators(h, r, 3).count_by_degree() == std::vector<std::size_t>{0, 3, 6, 1});

  // x1*x2*x3 + its image under the generator is invariant and not a product
  const Polynomial image = parse_polynomial(
      "x1*x2*x3 + x1*x2*y3 + x1*y2*x3 + y1*x2*x3 + x1*y2*y3 + y1*x2*y3 + y1*y2*x3 + y1*y2*y3", r);
  CHECK(image == act(h.generators()[0], parse_polynomial("x1*x2*x3", r)));
  const Polynomial trace = image + parse_polynomial("x1*x2*x3", r);
  CHECK(check_invariant(h, trace));
  for (const Term& t : trace.terms()) products(row, index.at(r->format_monomial(t.mono))) = t.coeff;
  CHECK(rank(products) == decomposable + 1);
}

TEST_CASE("invariance under generators implies invariance under every element") {
  for (std::uint32_t p : {2u, 3u}) {
    const RingPtr r = block_ring(p, 3);
    for (const MatrixGroup& g : {group_g(p, 3), group_h(p, 3)}) {
      REQUIRE(g.order() <= 27);
      for (std::uint32_t n = 1; n <= 2; ++n) {
        for (const Polynomial& f : invariant_space(g, r, n)) {
          for (const MatrixFp& e : g.elements()) CHECK(act(e, f) == f);
        }
      }
    }
  }
}

TEST_CASE("minimal generators") {
  const RingPtr r = block_ring(2, 3);
  const GeneratorSet hs = minimal_generators(group_h(2, 3), r, 2);
  CHECK(hs.count_by_degree() == std::vector<std::size_t>{0, 3, 6});
  CHECK(hs.certificate == Certificate::kVerifiedUpTo);
  CHECK(certificate_name(hs.certificate) == "verified-up-to-D");

  const GeneratorSet gs = minimal_generators(group_g(2, 3), r, 4);
  CHECK(gs.count_by_degree() == std::vector<std::size_t>{0, 3, 3, 0, 0});
  for (const auto& e : gs.entries) {
    CHECK(check_invariant(group_g(2, 3), e.poly));
    CHECK(e.poly.degree() == e.degree);
  }

  const GeneratorSet g3 = minimal_generators(group_g(3, 3), block_ring(3, 3), 6);
  CHECK(g3.count_by_degree() == std::vector<std::size_t>{0, 3, 0, 3, 0, 0, 0});

  CHECK_THROWS_AS(minimal_generators(group_h(2, 3), r, 0), Error);
  CHECK_THROWS_AS(minimal_generators(group_h(2, 3), block_ring(2, 2), 2), Error);
}

TEST_CASE("minimal generators are linearly independent modulo decomposables") {
  const RingPtr r = block_ring(2, 3);
  const GeneratorSet hs = minimal_generators(group_h(2, 3), r, 3);
  for (const auto& e : hs.entries) CHECK(check_invariant(group_h(2, 3), e.poly));
  // products of the degree-1 generators span a 6-dimensional part of the 12-dimensional degree-2 space
  const auto counts = hs.count_by_degree();
  CHECK(counts[1] == 3);
  CHECK(counts[2] == 12 - 6);
}

TEST_CASE("norm polynomials") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const RingPtr r = block_ring(p, 3);
    const MatrixGroup g = group_g(p, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      const NormPolynomial norm = norm_polynomial(g, r, 2 * i);
      CHECK(norm.degree() == p);
      const Polynomial x = Polynomial::variable(r, 2 * i);
      const Polynomial y = Polynomial::variable(r, 2 * i + 1);
      // Z^p - Z y^{p-1} - (x^p - x y^{p-1})
      std::vector<Polynomial> expected(p + 1, Polynomial(r));
      expected[p] = Polynomial::constant(r, 1);
      expected[1] = -y.pow(p - 1);
      expected[0] = -(x.pow(p) - x * y.pow(p - 1));
      CHECK(norm.coefficients == expected);
      CHECK(norm.evaluate(x).is_zero());
      // y is fixed, so its norm is Z - y
      const NormPolynomial ny = norm_polynomial(g, r, 2 * i + 1);
      CHECK(ny.degree() == 1);
      CHECK(ny.evaluate(y).is_zero());
    }
  }
}

TEST_CASE("check_invariant") {
  const RingPtr r = block_ring(2, 3);
  const MatrixGroup g = group_g(2, 3);
  CHECK(check_invariant(g, parse_polynomial("x1^2 + x1*y1", r)));
  CHECK_FALSE(check_invariant(g, parse_polynomial("x1", r)));
  CHECK(check_invariant(group_h(2, 3), parse_polynomial("x1*y2 + x2*y1", r)));
  CHECK_FALSE(check_invariant(g, parse_polynomial("x1*y2 + x2*y1", r)));
}

TEST_CASE("integrality certificate") {
  const RingPtr r = block_ring(2, 3);
  const MatrixGroup g = group_g(2, 3);
  const IntegralityResult ok = integrality_certificate(g, r, minimal_generators(g, r, 2));
  CHECK(ok.norms_in_subalgebra);
  CHECK(ok.hilbert_matches);
  CHECK(ok.hilbert_window == 4);
  CHECK(ok.generators.certificate == Certificate::kIntegralAndMatching);

  // only the y's: every norm of an x has an offending constant coefficient
  GeneratorSet ys;
  ys.bound = 1;
  ys.certificate = Certificate::kVerifiedUpTo;
  for (std::size_t i = 0; i < 3; ++i) ys.entries.push_back({Polynomial::variable(r, 2 * i + 1), 1});
  const IntegralityResult bad = integrality_certificate(group_h(2, 3), r, ys);
  CHECK_FALSE(bad.norms_in_subalgebra);
  CHECK_FALSE(bad.hilbert_matches);
  REQUIRE(bad.first_hilbert_mismatch.has_value());
  CHECK(*bad.first_hilbert_mismatch == 2);
  CHECK(bad.generators.certificate == Certificate::kVerifiedUpTo);
  std::set<std::size_t> vars;
  for (const auto& o : bad.offending) vars.insert(o.variable);
  CHECK(vars == std::set<std::size_t>{0, 2, 4});
  CHECK(bad.offending.front().describe().find("norm of variable 0") != std::string::npos);
}
