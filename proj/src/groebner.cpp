#include "paperlab/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <unordered_map>

namespace paperlab {

namespace {

// Merges terms[head+1..] with -c * m * g[1..]; the leading terms are known to cancel.
std::vector<Term> cancel_lead(const Ring& ring, const std::vector<Term>& terms, std::size_t head,
                              const Monomial& m, Scalar c, std::span<const Term> g) {
  const PrimeField& f = ring.field();
  const Scalar negc = f.neg(c);
  std::vector<Term> out;
  out.reserve(terms.size() - head + g.size());
  std::size_t i = head + 1, j = 1;
  while (i < terms.size() && j < g.size()) {
    const Monomial gm = g[j].mono * m;
    const int cmp = ring.compare(terms[i].mono, gm);
    if (cmp > 0) {
      out.push_back(terms[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{gm, f.mul(negc, g[j].coeff)});
      ++j;
    } else {
      const Scalar s = f.add(terms[i].coeff, f.mul(negc, g[j].coeff));
      if (!s.is_zero()) out.push_back(Term{gm, s});
      ++i;
      ++j;
    }
  }
  for (; i < terms.size(); ++i) out.push_back(terms[i]);
  for (; j < g.size(); ++j) out.push_back(Term{g[j].mono * m, f.mul(negc, g[j].coeff)});
  return out;
}

std::ptrdiff_t find_reducer(const Monomial& m, std::span<const Polynomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!basis[i].is_zero() && basis[i].lead_monomial().divides(m)) {
      return static_cast<std::ptrdiff_t>(i);
    }
  }
  return -1;
}

// Division engine shared by reduce() and normal_form(). When `top_only` is
// set, stops at the first irreducible leading term.
Polynomial divide(const Polynomial& f, std::span<const Polynomial> basis,
                  std::vector<std::vector<Term>>* quotients, bool top_only) {
  const Ring& ring = f.ring();
  const PrimeField& field = ring.field();
  for (const Polynomial& b : basis) {
    if (!b.is_zero() && !b.ring().same_as(ring)) {
      throw Error(ErrorCode::kRingMismatch, "division by a polynomial from another ring");
    }
  }
  std::vector<Term> work(f.terms().begin(), f.terms().end());
  std::size_t head = 0;
  std::vector<Term> remainder;
  while (head < work.size()) {
    const Term lead = work[head];
    const std::ptrdiff_t r = find_reducer(lead.mono, basis);
    if (r < 0) {
      if (top_only) break;
      remainder.push_back(lead);
      ++head;
      continue;
    }
    const Polynomial& g = basis[static_cast<std::size_t>(r)];
    const Monomial m = lead.mono / g.lead_monomial();
    const Scalar c = field.div(lead.coeff, g.lead_coeff());
    if (quotients != nullptr) (*quotients)[static_cast<std::size_t>(r)].push_back(Term{m, c});
    work = cancel_lead(ring, work, head, m, c, g.terms());
    head = 0;
  }
  for (std::size_t i = head; i < work.size(); ++i) remainder.push_back(work[i]);
  // remainder terms are already strictly descending
  return Polynomial::from_terms(f.ring_ptr(), std::move(remainder));
}

}  // namespace

ReductionResult reduce(const Polynomial& f, std::span<const Polynomial> basis) {
  std::vector<std::vector<Term>> q(basis.size());
  Polynomial nf = divide(f, basis, &q, false);
  ReductionResult out{std::move(nf), {}};
  out.quotients.reserve(basis.size());
  for (auto& terms : q) out.quotients.push_back(Polynomial::from_terms(f.ring_ptr(), std::move(terms)));
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis) {
  return divide(f, basis, nullptr, false);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Ring& ring = f.ring();
  const Monomial l = ring.lcm(f.lead_monomial(), g.lead_monomial());
  const PrimeField& field = ring.field();
  const Polynomial a = f.times_term(l / f.lead_monomial(), field.inv(f.lead_coeff()));
  return a.minus_term_times(l / g.lead_monomial(), field.inv(g.lead_coeff()), g);
}

// ---------------------------------------------------------------- Buchberger

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint64_t seq;
};

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, const BuchbergerOptions& options)
      : ring_(ring), options_(options) {}

  GroebnerBasis run(std::span<const Polynomial> gens) {
    for (const Polynomial& g : gens) {
      if (!g.ring().same_as(*ring_)) {
        throw Error(ErrorCode::kRingMismatch, "generator from another ring");
      }
      if (g.is_zero()) continue;
      if (add_reduced(g)) return unit_result();
    }
    while (!pairs_.empty()) {
      const std::size_t k = select_pair();
      const Pair pair = pairs_[k];
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(k));
      ++stats_.pairs_considered;
      const Polynomial s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      if (add_reduced(s)) return unit_result();
    }
    return finish();
  }

 private:
  // Returns true if the unit ideal was detected.
  bool add_reduced(const Polynomial& f) {
    std::vector<Polynomial> active;
    active.reserve(active_.size());
    for (std::size_t idx : active_) active.push_back(polys_[idx]);
    Polynomial h = normal_form(f, active);
    if (h.is_zero()) {
      ++stats_.zero_reductions;
      return false;
    }
    if (h.is_constant()) return true;
    update(h.monic());
    return false;
  }

  // Gebauer-Moeller update with the new basis element h.
  void update(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial& lh = h.lead_monomial();
    polys_.push_back(std::move(h));

    struct Candidate {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Candidate> c;
    for (std::size_t g : active_) {
      const Monomial& lg = polys_[g].lead_monomial();
      c.push_back({g, ring_->lcm(lh, lg), lh.coprime(lg)});
    }
    // criterion M: drop (h,g1) when some other lcm(h,g2) properly divides lcm(h,g1);
    // among equal lcms keep a single pair
    std::vector<bool> keep(c.size(), true);
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = 0; b < c.size() && keep[a]; ++b) {
        if (a == b || !keep[b]) continue;
        if (c[b].lcm.divides(c[a].lcm)) {
          if (!(c[a].lcm == c[b].lcm)) {
            keep[a] = false;
          } else if (b < a && !c[a].coprime) {
            keep[a] = false;
          } else if (c[b].coprime && !c[a].coprime) {
            keep[a] = false;
          }
        }
      }
    }
    // chain criterion on old pairs
    const std::size_t before = pairs_.size();
    std::erase_if(pairs_, [&](const Pair& p) {
      if (!lh.divides(p.lcm)) return false;
      const Monomial l1 = ring_->lcm(polys_[p.i].lead_monomial(), lh);
      const Monomial l2 = ring_->lcm(polys_[p.j].lead_monomial(), lh);
      return !(l1 == p.lcm) && !(l2 == p.lcm);
    });
    stats_.pairs_pruned += before - pairs_.size();
    // product criterion on new pairs
    for (std::size_t a = 0; a < c.size(); ++a) {
      if (!keep[a] || c[a].coprime) {
        ++stats_.pairs_pruned;
        continue;
      }
      if (options_.max_degree && c[a].lcm.degree() > *options_.max_degree) {
        truncated_ = true;
        continue;
      }
      pairs_.push_back(Pair{c[a].g, hi, c[a].lcm, next_seq_++});
    }
    std::erase_if(active_, [&](std::size_t g) { return lh.divides(polys_[g].lead_monomial()); });
    active_.push_back(hi);
  }

  std::size_t select_pair() const {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.lcm.degree() < b.lcm.degree() ||
          (a.lcm.degree() == b.lcm.degree() && a.seq < b.seq)) {
        best = k;
      }
    }
    return best;
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> basis;
    for (std::size_t idx : active_) basis.push_back(polys_[idx]);
    std::sort(basis.begin(), basis.end(), [this](const Polynomial& a, const Polynomial& b) {
      return ring_->compare(a.lead_monomial(), b.lead_monomial()) < 0;
    });
    // tail reduction; leading monomials are already pairwise non-divisible
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t l = 0; l < basis.size(); ++l) {
        if (l != k) others.push_back(basis[l]);
      }
      const Polynomial lead = Polynomial::monomial(ring_, basis[k].lead_monomial(), Scalar{1});
      basis[k] = lead + normal_form(basis[k] - lead, others);
    }
    GroebnerBasis out;
    out.polys = std::move(basis);
    out.truncated = truncated_;
    out.degree_bound = options_.max_degree;
    out.stats = stats_;
    return out;
  }

  GroebnerBasis unit_result() const {
    GroebnerBasis out;
    out.polys.push_back(Polynomial::constant(ring_, Scalar{1}));
    out.truncated = truncated_;
    out.degree_bound = options_.max_degree;
    out.stats = stats_;
    return out;
  }

  RingPtr ring_;
  BuchbergerOptions options_;
  std::vector<Polynomial> polys_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
  std::uint64_t next_seq_ = 0;
  bool truncated_ = false;
  BuchbergerStats stats_;
};

}  // namespace

GroebnerBasis buchberger(const RingPtr& ring, std::span<const Polynomial> gens,
                         const BuchbergerOptions& options) {
  return Buchberger(ring, options).run(gens);
}

// ---------------------------------------------------------------- Ideal

struct Ideal::Cache {
  std::once_flag once;
  GroebnerBasis gb;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const Polynomial& g : generators_) {
    if (!g.ring().same_as(*ring_)) throw Error(ErrorCode::kRingMismatch, "generator from another ring");
  }
  std::erase_if(generators_, [](const Polynomial& g) { return g.is_zero(); });
}

const GroebnerBasis& Ideal::groebner() const {
  std::call_once(cache_->once, [this] { cache_->gb = buchberger(ring_, generators_); });
  return cache_->gb;
}

bool Ideal::is_zero_ideal() const { return generators_.empty(); }

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b[0].is_constant() && !b[0].is_zero();
}

bool ideal_membership(const Polynomial& f, const Ideal& ideal) {
  return normal_form(f, ideal.basis()).is_zero();
}

Ideal elimination_ideal(const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  if (ring.order().kind != OrderKind::kBlockElimination) {
    throw Error(ErrorCode::kInvalidArgument, "elimination requires a block elimination order");
  }
  const std::size_t first = ring.order().first_block;
  VarSpec kept;
  std::vector<std::size_t> var_map(ring.num_vars(), kMaxVars);
  for (std::size_t i = first; i < ring.num_vars(); ++i) {
    var_map[i] = i - first;
    kept.names.push_back(ring.vars().names[i]);
    kept.weights.push_back(ring.vars().weights[i]);
  }
  RingPtr target = Ring::make(ring.field(), std::move(kept), MonomialOrder::grevlex());
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ideal.basis()) {
    if (g.only_uses_vars(first, ring.num_vars())) gens.push_back(g.mapped_to(target, var_map));
  }
  return Ideal(target, std::move(gens));
}

// ---------------------------------------------------------------- monomial ideals

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens) : num_vars_(num_vars) {
  // minimalize: keep a generator unless another one divides it (first copy wins on ties)
  for (std::size_t a = 0; a < gens.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
      if (a == b || !gens[b].divides(gens[a])) continue;
      redundant = !(gens[a] == gens[b]) || b < a;
    }
    if (!redundant) gens_.push_back(gens[a]);
  }
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::is_unit() const noexcept {
  return std::any_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_one(); });
}

MonomialIdeal initial_ideal(const Ideal& ideal) {
  std::vector<Monomial> leads;
  for (const Polynomial& g : ideal.basis()) leads.push_back(g.lead_monomial());
  return MonomialIdeal(ideal.ring().num_vars(), std::move(leads));
}

KrullDimension combinatorial_dimension(const MonomialIdeal& m) {
  if (m.is_unit()) return KrullDimension{-1, true};
  const std::size_t n = m.num_vars();
  std::vector<std::uint64_t> supports;
  for (const Monomial& g : m.generators()) supports.push_back(g.support());
  // smallest set of variables meeting every support; its complement is independent
  std::size_t best = n;
  auto search = [&](auto& self, std::uint64_t chosen, std::size_t size) -> void {
    if (size >= best) return;
    const auto unhit = std::find_if(supports.begin(), supports.end(),
                                    [&](std::uint64_t s) { return (s & chosen) == 0; });
    if (unhit == supports.end()) {
      best = size;
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if ((*unhit >> v) & 1u) self(self, chosen | (std::uint64_t{1} << v), size + 1);
    }
  };
  search(search, 0, 0);
  return KrullDimension{static_cast<int>(n - best), false};
}

KrullDimension krull_dimension(const Ideal& ideal) {
  return combinatorial_dimension(initial_ideal(ideal));
}

// ---------------------------------------------------------------- Hilbert series

namespace {

using IntPoly = std::vector<std::int64_t>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

void poly_add_shifted(IntPoly& acc, const IntPoly& b, std::size_t shift) {
  if (acc.size() < b.size() + shift) acc.resize(b.size() + shift, 0);
  for (std::size_t j = 0; j < b.size(); ++j) acc[j + shift] += b[j];
}

void trim(IntPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

class HilbertNumerator {
 public:
  HilbertNumerator(std::size_t nv, std::span<const std::uint32_t> weights)
      : nv_(nv), weights_(weights.begin(), weights.end()) {}

  IntPoly compute(std::vector<Monomial> gens) {
    minimalize(gens);
    return numerator(std::move(gens));
  }

 private:
  std::uint32_t degree(const Monomial& m) const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < nv_; ++i) d += m.exponent(i) * weights_[i];
    return d;
  }

  static void minimalize(std::vector<Monomial>& gens) {
    std::vector<Monomial> out;
    for (std::size_t a = 0; a < gens.size(); ++a) {
      bool redundant = false;
      for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
        if (a == b || !gens[b].divides(gens[a])) continue;
        redundant = !(gens[a] == gens[b]) || b < a;
      }
      if (!redundant) out.push_back(gens[a]);
    }
    gens = std::move(out);
  }

  std::string key(std::vector<Monomial>& gens) const {
    std::sort(gens.begin(), gens.end(), [this](const Monomial& a, const Monomial& b) {
      for (std::size_t i = 0; i < nv_; ++i) {
        if (a.exponent(i) != b.exponent(i)) return a.exponent(i) < b.exponent(i);
      }
      return false;
    });
    std::string k;
    k.reserve(gens.size() * nv_);
    for (const Monomial& g : gens) {
      for (std::size_t i = 0; i < nv_; ++i) k.push_back(static_cast<char>(g.exponent(i)));
    }
    return k;
  }

  IntPoly numerator(std::vector<Monomial> gens) {
    if (gens.empty()) return {1};
    std::string k = key(gens);
    if (auto it = memo_.find(k); it != memo_.end()) return it->second;

    IntPoly result;
    std::uint64_t seen = 0;
    bool coprime = true;
    for (const Monomial& g : gens) {
      if ((g.support() & seen) != 0) coprime = false;
      seen |= g.support();
    }
    if (coprime) {
      result = {1};
      for (const Monomial& g : gens) {
        IntPoly factor(degree(g) + 1, 0);
        factor[0] = 1;
        factor[degree(g)] -= 1;
        result = poly_mul(result, factor);
      }
    } else {
      // pivot on the variable occurring in the most generators:
      // N(M) = N(M + (x)) + s^{w_x} N(M : x)
      std::size_t pivot = 0, best = 0;
      for (std::size_t v = 0; v < nv_; ++v) {
        std::size_t count = 0;
        for (const Monomial& g : gens) count += g.exponent(v) > 0 ? 1 : 0;
        if (count > best) {
          best = count;
          pivot = v;
        }
      }
      Monomial x;
      x.set_exponent(pivot, 1, weights_[pivot]);
      std::vector<Monomial> plus{x};
      std::vector<Monomial> colon;
      for (const Monomial& g : gens) {
        if (g.exponent(pivot) == 0) plus.push_back(g);
        Monomial c = g;
        if (c.exponent(pivot) > 0) c.set_exponent(pivot, c.exponent(pivot) - 1, weights_[pivot]);
        colon.push_back(c);
      }
      minimalize(plus);
      minimalize(colon);
      result = numerator(std::move(plus));
      poly_add_shifted(result, numerator(std::move(colon)), weights_[pivot]);
    }
    trim(result);
    memo_.emplace(std::move(k), result);
    return result;
  }

  std::size_t nv_;
  std::vector<std::uint32_t> weights_;
  std::unordered_map<std::string, IntPoly> memo_;
};

}  // namespace

HilbertSeries hilbert_series(const MonomialIdeal& m, std::span<const std::uint32_t> weights) {
  if (weights.size() != m.num_vars()) {
    throw Error(ErrorCode::kDimension, "weight list does not match the variable count");
  }
  for (std::uint32_t w : weights) {
    if (w == 0) throw Error(ErrorCode::kInvalidArgument, "weights must be positive");
  }
  HilbertSeries hs;
  hs.weights.assign(weights.begin(), weights.end());
  hs.numerator = HilbertNumerator(m.num_vars(), weights).compute(m.generators());
  return hs;
}

std::vector<std::int64_t> HilbertSeries::expand(std::uint32_t max_degree) const {
  std::vector<std::int64_t> c(max_degree + 1, 0);
  for (std::size_t k = 0; k < numerator.size() && k <= max_degree; ++k) c[k] = numerator[k];
  for (std::uint32_t w : weights) {
    for (std::size_t k = w; k <= max_degree; ++k) c[k] += c[k - w];
  }
  return c;
}

int HilbertSeries::pole_order() const {
  // each (1 - s^w) contributes one factor (1 - s); cancel those dividing the numerator
  IntPoly num = numerator;
  trim(num);
  int cancelled = 0;
  while (true) {
    if (num.size() == 1 && num[0] == 0) return -1;  // zero series
    std::int64_t at_one = std::accumulate(num.begin(), num.end(), std::int64_t{0});
    if (at_one != 0) break;
    // synthetic division by (1 - s): q_k = sum_{i<=k} a_i
    IntPoly q(num.size() - 1);
    std::int64_t running = 0;
    for (std::size_t k = 0; k + 1 < num.size(); ++k) {
      running += num[k];
      q[k] = running;
    }
    num = std::move(q);
    trim(num);
    ++cancelled;
  }
  return static_cast<int>(weights.size()) - cancelled;
}

std::string HilbertSeries::to_string() const {
  std::string num;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const std::int64_t c = numerator[k];
    if (c == 0) continue;
    const std::int64_t a = c < 0 ? -c : c;
    if (num.empty()) {
      if (c < 0) num += "-";
    } else {
      num += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      num += std::to_string(a);
    } else {
      if (a != 1) num += std::to_string(a) + "*";
      num += k == 1 ? std::string("s") : "s^" + std::to_string(k);
    }
  }
  if (num.empty()) num = "0";
  std::vector<std::uint32_t> ws = weights;
  std::sort(ws.begin(), ws.end());
  std::string den;
  for (std::size_t i = 0; i < ws.size();) {
    std::size_t j = i;
    while (j < ws.size() && ws[j] == ws[i]) ++j;
    if (!den.empty()) den += "*";
    den += ws[i] == 1 ? std::string("(1 - s)") : "(1 - s^" + std::to_string(ws[i]) + ")";
    if (j - i > 1) den += "^" + std::to_string(j - i);
    i = j;
  }
  if (den.empty()) den = "1";
  return "(" + num + ") / (" + den + ")";
}

}  // namespace paperlab
