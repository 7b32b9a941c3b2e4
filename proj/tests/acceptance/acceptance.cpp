#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <CLI11.hpp>

#include "paperlab/groebner.hpp"
#include "paperlab/invariants.hpp"
#include "paperlab/report.hpp"
#include "paperlab/structure.hpp"

using namespace paperlab;

namespace {

struct Outcome {
  bool pass = false;
  bool skipped = false;
  std::string detail;
};

std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261016);
  return engine;
}

std::uint32_t uniform(std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng());
}

RingPtr ring_of(std::uint32_t p, std::vector<std::string> names, MonomialOrder order = MonomialOrder::grevlex()) {
  return Ring::make(PrimeField(p), VarSpec::uniform(std::move(names)), order);
}

Polynomial random_homogeneous(const RingPtr& r, std::size_t terms, std::uint32_t degree) {
  const auto monos = monomials_of_degree(*r, degree);
  std::vector<Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    out.push_back(Term{monos[uniform(0, static_cast<std::uint32_t>(monos.size() - 1))],
                       Scalar{uniform(1, r->field().characteristic() - 1)}});
  }
  return Polynomial::from_terms(r, std::move(out));
}

std::vector<Polynomial> random_ideal(const RingPtr& r, std::size_t count) {
  std::vector<Polynomial> gens;
  while (gens.size() < count) {
    Polynomial f = random_homogeneous(r, 3, uniform(1, 3));
    if (!f.is_zero()) gens.push_back(std::move(f));
  }
  return gens;
}

std::vector<Scalar> coordinates(const Polynomial& f, const std::unordered_map<Monomial, std::size_t, MonomialHash>& index,
                                std::size_t dim) {
  std::vector<Scalar> v(dim);
  for (const Term& t : f.terms()) v[index.at(t.mono)] = t.coeff;
  return v;
}

std::unordered_map<Monomial, std::size_t, MonomialHash> index_of(const std::vector<Monomial>& basis) {
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  return index;
}

// span of the degree-n multiples of homogeneous generators
EchelonSpan degree_piece(const RingPtr& r, const std::vector<Polynomial>& gens, std::uint32_t n) {
  const auto basis = monomials_of_degree(*r, n);
  const auto index = index_of(basis);
  EchelonSpan span(r->field(), basis.size());
  for (const Polynomial& g : gens) {
    if (g.is_zero() || g.degree() > n) continue;
    for (const Monomial& m : monomials_of_degree(*r, n - g.degree())) {
      const Polynomial mg = g.times_term(m, Scalar{1});
      span.insert(coordinates(mg, index, basis.size()));
    }
  }
  return span;
}

// degree-n invariants as the common kernel of (e - id) over every group element
std::vector<Polynomial> brute_force_invariants(const MatrixGroup& g, const RingPtr& r, std::uint32_t n) {
  const auto basis = monomials_of_degree(*r, n);
  const auto index = index_of(basis);
  MatrixFp stacked(r->field(), g.order() * basis.size(), basis.size());
  for (std::size_t e = 0; e < g.order(); ++e) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      const Polynomial m = Polynomial::monomial(r, basis[j], Scalar{1});
      const Polynomial moved = act(g.elements()[e], m) - m;
      for (const Term& t : moved.terms()) stacked(e * basis.size() + index.at(t.mono), j) = t.coeff;
    }
  }
  std::vector<Polynomial> out;
  for (const auto& v : kernel_basis(stacked)) {
    std::vector<Term> terms;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (v[j].value != 0) terms.push_back(Term{basis[j], v[j]});
    }
    out.push_back(Polynomial::from_terms(r, std::move(terms)));
  }
  return out;
}

// number of generators needed in each degree: dim S_n minus the span of products of lower degrees
std::vector<std::size_t> oracle_generator_counts(const MatrixGroup& h, const RingPtr& r, std::uint32_t top) {
  std::vector<std::vector<Polynomial>> spaces(top + 1);
  std::vector<std::size_t> counts(top + 1, 0);
  for (std::uint32_t n = 1; n <= top; ++n) {
    spaces[n] = brute_force_invariants(h, r, n);
    const auto basis = monomials_of_degree(*r, n);
    const auto index = index_of(basis);
    EchelonSpan products(r->field(), basis.size());
    for (std::uint32_t a = 1; 2 * a <= n; ++a) {
      for (const Polynomial& f : spaces[a]) {
        for (const Polynomial& g : spaces[n - a]) {
          const Polynomial fg = f * g;
          products.insert(coordinates(fg, index, basis.size()));
        }
      }
    }
    counts[n] = spaces[n].size() - products.dimension();
  }
  return counts;
}

std::string str(const nlohmann::json& j) { return j.dump(); }

template <class T>
std::string list(const std::vector<T>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "]";
  return out.str();
}

// ---- criteria ----

Outcome criterion_groups() {
  const ScenarioReport r = run_verification(build_example_main(2));
  const Stage* g = r.stage("groups");
  Outcome o;
  if (!g || g->status != StageStatus::kOk) {
    o.detail = "group stage failed: " + (g ? g->message : std::string("missing"));
    return o;
  }
  auto computed = [&](const char* name) { return g->find(name)->computed; };
  o.pass = computed("order_g") == 8 && computed("order_h") == 2 && computed("g_abelian") == true &&
           computed("g_generated_by_bireflections") == true && computed("h_generated_by_bireflections") == false &&
           computed("h_nonidentity_bireflections") == 0 && computed("galois_factors") == nlohmann::json({2, 2}) &&
           computed("h_nontrivial_character") == false;
  o.detail = "|G|=" + str(computed("order_g")) + " |H|=" + str(computed("order_h")) +
             " abelian=" + str(computed("g_abelian")) +
             " G_by_bireflections=" + str(computed("g_generated_by_bireflections")) +
             " H_by_bireflections=" + str(computed("h_generated_by_bireflections")) +
             " H_nonidentity_bireflections=" + str(computed("h_nonidentity_bireflections")) +
             " galois=" + str(computed("galois_factors")) +
             " nontrivial_character=" + str(computed("h_nontrivial_character"));
  return o;
}

Outcome criterion_r(std::uint32_t p) {
  const auto start = std::chrono::steady_clock::now();
  const Scenario sc = build_example_main(p);
  Outcome o;
  o.pass = true;
  std::ostringstream detail;
  const GeneratorSet gens = build_R_generators(sc);
  const auto polys = gens.polynomials();

  bool invariant = polys.size() == 6;
  for (const Polynomial& f : polys) invariant = invariant && check_invariant(sc.g, f);
  const PresentedRing pr = presentation_ideal(polys);
  const bool zero = pr.ideal().is_zero_ideal();
  const HilbertComparison hc = hilbert_consistency(pr, sc.g, 2 * p + 4);

  bool norms = true;
  for (std::size_t i = 0; i < sc.d; ++i) {
    const Polynomial x = Polynomial::variable(sc.ring, 2 * i);
    const Polynomial y = Polynomial::variable(sc.ring, 2 * i + 1);
    const NormPolynomial norm = norm_polynomial(sc.g, sc.ring, 2 * i);
    // Z^p - Z y^{p-1} - (x^p - x y^{p-1})
    bool same = norm.coefficients.size() == p + 1;
    for (std::uint32_t k = 0; same && k <= p; ++k) {
      Polynomial expected(sc.ring);
      if (k == p) expected = Polynomial::constant(sc.ring, 1);
      if (k == 1) expected = -y.pow(p - 1);
      if (k == 0) expected = -(x.pow(p) - x * y.pow(p - 1));
      same = norm.coefficients[k] == expected;
    }
    norms = norms && same;
  }
  const IntegralityResult integral = integrality_certificate(sc.g, sc.ring, gens);
  const bool certified = integral.generators.certificate == Certificate::kIntegralAndMatching;

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = invariant && zero && hc.consistent && hc.invariant.size() == 2 * p + 5 && norms && certified &&
           seconds < 120;
  detail << std::boolalpha << "p=" << p << " invariant=" << invariant << " ideal_zero=" << zero << " hilbert_to_" << 2 * p + 4 << "="
         << hc.consistent << " norm_identity=" << norms
         << " certificate=" << certificate_name(integral.generators.certificate);
  o.detail = detail.str();
  return o;
}

Outcome criterion_r_both() {
  const Outcome a = criterion_r(2);
  const Outcome b = criterion_r(3);
  return Outcome{a.pass && b.pass, false, a.detail + "; " + b.detail};
}

struct SResult {
  std::vector<std::size_t> counts;
  std::size_t m = 0;
  RingVerdict verdict;
};

SResult s_pipeline(const Scenario& sc, std::uint32_t bound) {
  const GeneratorSet gens = minimal_generators(sc.h, sc.ring, bound);
  const PresentedRing pr = presentation_ideal(gens.polynomials());
  const FreeResolution res = free_resolution(pr);
  return SResult{gens.count_by_degree(), pr.num_vars(), depth_report(pr, res)};
}

Outcome criterion_s() {
  const Scenario sc = build_example_main(2);
  const SResult s = s_pipeline(sc, default_degree_bound(2, 3));
  const RingVerdict& v = s.verdict;
  const auto oracle = oracle_generator_counts(sc.h, sc.ring, 3);

  const bool counts = s.counts.size() > 2 && s.counts[1] == 3 && s.counts[2] == 6 && oracle[1] == 3 && oracle[2] == 6;
  const bool structure = v.dimension == 6 && v.depth == 5 && !v.is_cohen_macaulay && v.cm_defect == 1;
  const bool identity = v.depth + v.projective_dimension == static_cast<int>(s.m);
  const bool sizes = s.m == 9 && v.projective_dimension == 4;

  Outcome o;
  o.pass = counts && structure && identity && sizes;
  std::ostringstream detail;
  detail << std::boolalpha << "generators by degree " << list(s.counts) << " (oracle " << list(oracle) << ") dim=" << v.dimension << " depth=" << v.depth << " cm=" << v.is_cohen_macaulay
         << " defect=" << v.cm_defect << " depth+pd=m: " << v.depth << "+" << v.projective_dimension << "=" << s.m
         << (identity ? " holds" : " FAILS");
  if (!sizes) detail << "; expected m=9 pd=4, computed m=" << s.m << " pd=" << v.projective_dimension;
  o.detail = detail.str();
  return o;
}

Outcome criterion_stretch(bool enabled) {
  Outcome o;
  if (!enabled) {
    o.skipped = true;
    o.detail = "opt-in, pass --stretch";
    return o;
  }
  const Scenario sc = build_example_general(2, 4);
  const SResult s = s_pipeline(sc, 4);
  const RingVerdict& v = s.verdict;
  o.pass = v.dimension == 8 && v.depth == 6 && v.cm_defect == 2 && !v.is_cohen_macaulay &&
           v.depth + v.projective_dimension == static_cast<int>(s.m);
  std::ostringstream detail;
  detail << "generators by degree " << list(s.counts) << " m=" << s.m << " pd=" << v.projective_dimension
         << " dim=" << v.dimension << " depth=" << v.depth << " defect=" << v.cm_defect;
  o.detail = detail.str();
  return o;
}

bool suite_composition() {
  for (std::uint32_t p : {2u, 3u}) {
    const Scenario sc = build_example_main(p);
    for (int trial = 0; trial < 20; ++trial) {
      const Polynomial f = random_homogeneous(sc.ring, 5, uniform(1, 3));
      const auto& m = sc.g.elements()[uniform(0, static_cast<std::uint32_t>(sc.g.order() - 1))];
      const auto& n = sc.g.elements()[uniform(0, static_cast<std::uint32_t>(sc.g.order() - 1))];
      if (act(m, act(n, f)) != act(n * m, f)) return false;
    }
  }
  return true;
}

bool suite_closure_invariance() {
  for (std::uint32_t p : {2u, 3u}) {
    const Scenario sc = build_example_main(p);
    for (const MatrixGroup* g : {&sc.g, &sc.h}) {
      if (g->order() > 27) return false;
      for (std::uint32_t n = 1; n <= 3; ++n) {
        for (const Polynomial& f : invariant_space(*g, sc.ring, n)) {
          for (const MatrixFp& e : g->elements()) {
            if (act(e, f) != f) return false;
          }
        }
      }
    }
  }
  return true;
}

bool suite_bireflection() {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PrimeField f(p);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = uniform(1, 6);
      MatrixFp m = MatrixFp::identity(f, n);
      for (std::uint32_t k = uniform(0, 4); k > 0; --k) {
        m(uniform(0, static_cast<std::uint32_t>(n - 1)), uniform(0, static_cast<std::uint32_t>(n - 1))) =
            Scalar{uniform(0, p - 1)};
      }
      const MatrixFp diff = m - MatrixFp::identity(f, n);
      const bool by_rank = rank(diff) <= 2;
      const bool by_fixed_space = kernel_basis(diff).size() + 2 >= n;
      if (by_rank != by_fixed_space || is_bireflection(m) != by_rank) return false;
    }
  }
  return true;
}

bool suite_groebner() {
  for (std::uint32_t p : {2u, 3u}) {
    const RingPtr r = ring_of(p, {"a", "b", "c"});
    for (int trial = 0; trial < 20; ++trial) {
      auto gens = random_ideal(r, 3);
      const auto gb = buchberger(r, gens).polys;
      for (std::size_t i = 0; i < gb.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.size(); ++j) {
          if (!normal_form(s_polynomial(gb[i], gb[j]), gb).is_zero()) return false;
        }
      }
      std::shuffle(gens.begin(), gens.end(), rng());
      if (buchberger(r, gens).polys != gb) return false;
    }
  }
  return true;
}

bool suite_elimination() {
  for (std::uint32_t p : {2u, 3u}) {
    for (std::size_t eliminated : {1u, 2u}) {
      const RingPtr r = ring_of(p, {"a", "b", "c"}, MonomialOrder::block(eliminated));
      for (int trial = 0; trial < 6; ++trial) {
        const auto gens = random_ideal(r, 2);
        const Ideal elim = elimination_ideal(Ideal(r, gens));
        for (std::uint32_t n = 0; n <= 6; ++n) {
          // dim(I_n meet K[kept]_n) = dim I_n + dim K[kept]_n - dim(I_n + K[kept]_n)
          const auto basis = monomials_of_degree(*r, n);
          const auto index = index_of(basis);
          EchelonSpan in = degree_piece(r, gens, n);
          const std::size_t dim_in = in.dimension();
          std::size_t kept = 0;
          for (const Monomial& m : basis) {
            if (m.support() & ((std::uint64_t{1} << eliminated) - 1)) continue;
            ++kept;
            in.insert(coordinates(Polynomial::monomial(r, m, Scalar{1}), index, basis.size()));
          }
          const std::size_t oracle = dim_in + kept - in.dimension();
          if (degree_piece(elim.ring_ptr(), elim.basis(), n).dimension() != oracle) return false;
        }
      }
    }
  }
  return true;
}

bool suite_hilbert() {
  for (std::uint32_t p : {2u, 3u}) {
    const RingPtr r = ring_of(p, {"a", "b", "c"});
    for (int trial = 0; trial < 10; ++trial) {
      const auto gens = random_ideal(r, 2);
      const auto expansion = hilbert_series(initial_ideal(Ideal(r, gens)), r->weights()).expand(10);
      for (std::uint32_t n = 0; n <= 10; ++n) {
        const std::size_t direct = monomials_of_degree(*r, n).size() - degree_piece(r, gens, n).dimension();
        if (expansion[n] != static_cast<std::int64_t>(direct)) return false;
      }
    }
  }
  return true;
}

std::vector<PresentedRing> processed_presentations() {
  std::vector<PresentedRing> out;
  for (std::uint32_t p : {2u, 3u}) out.push_back(presentation_ideal(build_R_generators(build_example_main(p)).polynomials()));
  const Scenario s2 = build_example_main(2);
  out.push_back(presentation_ideal(minimal_generators(s2.h, s2.ring, 3).polynomials()));
  out.push_back(presentation_ideal(minimal_generators(s2.h, s2.ring, 2).polynomials()));
  const RingPtr xy = ring_of(5, {"x", "y"});
  out.push_back(presentation_ideal(std::vector<Polynomial>{parse_polynomial("x^2", xy), parse_polynomial("x*y", xy),
                                                           parse_polynomial("y^2", xy)}));
  out.push_back(presentation_ideal(std::vector<Polynomial>{parse_polynomial("x^2", xy), parse_polynomial("x^3", xy)}));
  return out;
}

bool suite_auslander_buchsbaum() {
  std::vector<PresentedRing> rings = processed_presentations();
  const RingPtr r = ring_of(2, {"a", "b", "c", "d"});
  for (int trial = 0; trial < 8; ++trial) {
    PresentedRing q = PresentedRing::quotient(Ideal(r, random_ideal(r, 3)));
    if (!q.ideal().is_unit()) rings.push_back(std::move(q));
  }
  for (const PresentedRing& pr : rings) {
    const RingVerdict v = depth_report(pr);
    if (v.depth + v.projective_dimension != v.num_vars || !v.euler_check) return false;
  }
  return true;
}

bool suite_soundness() {
  for (const PresentedRing& pr : processed_presentations()) {
    for (const Polynomial& f : pr.ideal().basis()) {
      if (!pr.substitute(f).is_zero()) return false;
    }
  }
  return true;
}

Outcome criterion_properties() {
  const std::vector<std::pair<const char*, std::function<bool()>>> suites = {
      {"composition", suite_composition},
      {"closure-invariance", suite_closure_invariance},
      {"bireflection-rank", suite_bireflection},
      {"groebner", suite_groebner},
      {"elimination", suite_elimination},
      {"hilbert", suite_hilbert},
      {"depth+pd=m", suite_auslander_buchsbaum},
      {"substitution", suite_soundness},
  };
  Outcome o;
  o.pass = true;
  std::string failed;
  for (const auto& [name, run] : suites) {
    bool ok = false;
    try {
      ok = run();
    } catch (const std::exception& e) {
      failed += std::string(" ") + name + "(" + e.what() + ")";
    }
    if (!ok && failed.find(name) == std::string::npos) failed += std::string(" ") + name;
    o.pass = o.pass && ok;
  }
  o.detail = std::to_string(suites.size()) + " suites" + (failed.empty() ? "" : ", failed:" + failed);
  return o;
}

Outcome criterion_determinism() {
  Outcome o;
  o.pass = true;
  std::string detail;
  for (std::uint32_t p : {2u, 3u}) {
    const std::string a = without_timings(report_to_json(run_verification(build_example_main(p)))).dump(2);
    const std::string b = without_timings(report_to_json(run_verification(build_example_main(p)))).dump(2);
    const bool same = a == b;
    o.pass = o.pass && same;
    detail += "p=" + std::to_string(p) + (same ? " identical " : " DIFFERENT ") + "(" + std::to_string(a.size()) +
              " bytes) ";
  }
  detail.pop_back();
  o.detail = detail;
  return o;
}

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  bool stretch = false;
  app.add_option("--criterion", selected, "criterion numbers to run (default all)")->check(CLI::Range(1, 6));
  app.add_flag("--stretch", stretch, "run the d = 4 stretch criterion");
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria = {
      {1, "example group facts, p=2", 60, criterion_groups},
      {2, "R certification, p=2 and p=3", 240, criterion_r_both},
      {3, "S certification, p=2 d=3", 300, criterion_s},
      {4, "stretch, p=2 d=4", 1800, [&] { return criterion_stretch(stretch); }},
      {5, "property suites", 600, criterion_properties},
      {6, "determinism", 300, criterion_determinism},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), c.id) == selected.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const Error& e) {
      o.pass = false;
      o.detail = std::string("error ") + error_code_name(e.code()) + ": " + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.skipped && seconds > c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    const char* verdict = o.skipped ? "SKIP" : o.pass ? "PASS" : "FAIL";
    std::printf("criterion %d [%s] %s: %s (%.2f s, limit %.0f s)\n", c.id, verdict, c.title.c_str(),
                o.detail.c_str(), seconds, c.limit_seconds);
    std::fflush(stdout);
    all = all && (o.pass || o.skipped);
  }
  return all ? 0 : 1;
}
