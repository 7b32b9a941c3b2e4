#include "paperlab/structure.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "paperlab/invariants.hpp"

namespace paperlab {

// ---------------------------------------------------------------- presentation

PresentedRing PresentedRing::quotient(Ideal ideal) { return PresentedRing(std::move(ideal)); }

namespace {

std::string presentation_prefix(const VarSpec& ambient, std::size_t m) {
  std::unordered_set<std::string> taken(ambient.names.begin(), ambient.names.end());
  for (std::string prefix : {"t", "u", "v", "w", "z"}) {
    bool clash = false;
    for (std::size_t j = 1; j <= m && !clash; ++j) clash = taken.contains(prefix + std::to_string(j));
    if (!clash) return prefix;
  }
  std::string prefix = "t";
  while (true) {
    prefix += "t";
    bool clash = false;
    for (std::size_t j = 1; j <= m && !clash; ++j) clash = taken.contains(prefix + std::to_string(j));
    if (!clash) return prefix;
  }
}

}  // namespace

PresentedRing presentation_ideal(std::span<const Polynomial> gens) {
  if (gens.empty()) throw Error(ErrorCode::kInvalidArgument, "presentation needs at least one generator");
  const RingPtr ambient = gens[0].ring_ptr();
  for (const Polynomial& g : gens) {
    if (!g.ring().same_as(*ambient)) throw Error(ErrorCode::kRingMismatch, "generators live in different rings");
    if (g.is_zero() || g.is_constant()) {
      throw Error(ErrorCode::kInvalidArgument, "generators must be nonconstant");
    }
    if (!g.is_homogeneous()) throw Error(ErrorCode::kInvalidArgument, "generators must be homogeneous");
  }

  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return gens[a].degree() < gens[b].degree(); });

  const std::size_t n = ambient->num_vars();
  const std::size_t m = gens.size();
  const std::string prefix = presentation_prefix(ambient->vars(), m);
  VarSpec combined_vars = ambient->vars();
  for (std::size_t j = 0; j < m; ++j) {
    combined_vars.names.push_back(prefix + std::to_string(j + 1));
    combined_vars.weights.push_back(gens[order[j]].degree());
  }
  const RingPtr combined = Ring::make(ambient->field(), combined_vars, MonomialOrder::block(n));

  std::vector<std::size_t> embed(n);
  std::iota(embed.begin(), embed.end(), 0);
  std::vector<Polynomial> relations;
  for (std::size_t j = 0; j < m; ++j) {
    relations.push_back(Polynomial::variable(combined, n + j) - gens[order[j]].mapped_to(combined, embed));
  }
  Ideal graph(combined, std::move(relations));

  PresentedRing out(elimination_ideal(graph));
  out.ambient_ = ambient;
  for (std::size_t j : order) out.generators_.push_back(gens[j]);
  out.discovery_ = order;
  out.combined_ = combined;
  out.elimination_basis_ = graph.basis();

  for (const Polynomial& f : out.ideal_.basis()) {
    if (!out.substitute(f).is_zero()) {
      throw Error(ErrorCode::kInternal, "presentation relation does not vanish: " + f.to_string());
    }
  }
  return out;
}

Polynomial PresentedRing::substitute(const Polynomial& in_t) const {
  if (!has_ambient()) throw Error(ErrorCode::kInvalidArgument, "presentation has no ambient ring");
  if (in_t.ring().num_vars() != generators_.size()) {
    throw Error(ErrorCode::kRingMismatch, "polynomial is not in the presentation ring");
  }
  std::vector<std::vector<Polynomial>> powers(generators_.size());
  for (std::size_t j = 0; j < generators_.size(); ++j) {
    powers[j] = {Polynomial::constant(ambient_, Scalar{1}), generators_[j]};
  }
  Polynomial out(ambient_);
  for (const Term& t : in_t.terms()) {
    Polynomial term = Polynomial::constant(ambient_, t.coeff);
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      const auto e = t.mono.exponent(j);
      if (e == 0) continue;
      auto& cache = powers[j];
      while (cache.size() <= e) cache.push_back(cache.back() * generators_[j]);
      term = term * cache[e];
    }
    out += term;
  }
  return out;
}

MembershipResult subalgebra_membership(const Polynomial& f, const PresentedRing& ring) {
  if (!ring.has_ambient()) throw Error(ErrorCode::kInvalidArgument, "presentation has no ambient ring");
  if (!f.ring().same_as(*ring.ambient())) {
    throw Error(ErrorCode::kRingMismatch, "polynomial is not in the ambient ring");
  }
  const std::size_t n = ring.ambient()->num_vars();
  const std::size_t m = ring.generators().size();
  std::vector<std::size_t> embed(n);
  std::iota(embed.begin(), embed.end(), 0);
  const Polynomial r = normal_form(f.mapped_to(ring.combined_ring(), embed), ring.elimination_basis());
  if (!r.only_uses_vars(n, n + m)) return {};

  std::vector<std::size_t> to_t(n + m, kMaxVars);
  for (std::size_t j = 0; j < m; ++j) to_t[n + j] = j;
  Polynomial preimage = r.mapped_to(ring.ring(), to_t);
  if (!(ring.substitute(preimage) == f)) {
    throw Error(ErrorCode::kInternal, "membership preimage does not substitute back");
  }
  return MembershipResult{true, std::move(preimage)};
}

// ---------------------------------------------------------------- Betti tables

bool PolyMatrix::has_unit_entry() const {
  for (const auto& col : columns) {
    for (const auto& [row, entry] : col) {
      if (entry.is_constant() && !entry.is_zero()) return true;
    }
  }
  return false;
}

std::size_t BettiTable::at(int i, int j) const {
  auto it = entries.find({i, j});
  return it == entries.end() ? 0 : it->second;
}

std::size_t BettiTable::total(int i) const {
  std::size_t sum = 0;
  for (const auto& [key, value] : entries) {
    if (key.first == i) sum += value;
  }
  return sum;
}

std::string BettiTable::to_string() const {
  int max_j = 0;
  for (const auto& [key, value] : entries) max_j = std::max(max_j, key.second);
  std::size_t width = 3;
  for (const auto& [key, value] : entries) width = std::max(width, std::to_string(value).size() + 1);
  auto cell = [&](const std::string& s) { return std::string(width - std::min(width, s.size()), ' ') + s; };
  const std::size_t label = std::to_string(max_j).size() + 1;

  std::ostringstream out;
  out << std::string(label, ' ');
  for (int i = 0; i <= projective_dimension; ++i) out << cell(std::to_string(i));
  out << '\n';
  for (int j = 0; j <= max_j; ++j) {
    std::string row = std::to_string(j) + ":";
    out << row << std::string(label - std::min(label, row.size()), ' ');
    for (int i = 0; i <= projective_dimension; ++i) out << cell(std::to_string(at(i, j)));
    out << '\n';
  }
  out << "total:";
  for (int i = 0; i <= projective_dimension; ++i) out << ' ' << total(i);
  out << '\n';
  return out.str();
}

// ---------------------------------------------------------------- Schreyer frames

namespace {

// m * e_comp, stored together with m * tot(comp) for comparisons.
struct VTerm {
  Monomial mono;
  Monomial sig;
  std::uint32_t comp;
  Scalar coeff;
};

using Vec = std::vector<VTerm>;

// Basis data of one free module in the frame. rank[c] orders the components
// for Schreyer tie-breaks: a smaller rank is the larger component.
struct Frame {
  std::vector<Monomial> tot;
  std::vector<std::size_t> rank;
};

class FrameOrder {
 public:
  FrameOrder(const Ring& ring, const Frame& frame) : ring_(ring), frame_(frame) {}

  int compare(const VTerm& a, const VTerm& b) const {
    const int c = ring_.compare(a.sig, b.sig);
    if (c != 0) return c;
    if (a.comp == b.comp) return 0;
    return frame_.rank[a.comp] < frame_.rank[b.comp] ? 1 : -1;
  }

 private:
  const Ring& ring_;
  const Frame& frame_;
};

// w - c * m * v; both sorted descending, and multiplication by m keeps v sorted.
Vec minus_scaled(const Vec& w, Scalar c, const Monomial& m, const Vec& v, const FrameOrder& order,
                 const PrimeField& f) {
  Vec out;
  out.reserve(w.size() + v.size());
  std::size_t a = 0, b = 0;
  while (a < w.size() || b < v.size()) {
    if (b == v.size()) {
      out.push_back(w[a++]);
      continue;
    }
    VTerm moved{v[b].mono * m, v[b].sig * m, v[b].comp, f.neg(f.mul(c, v[b].coeff))};
    if (a == w.size()) {
      out.push_back(std::move(moved));
      ++b;
      continue;
    }
    const int cmp = order.compare(w[a], moved);
    if (cmp > 0) {
      out.push_back(w[a++]);
    } else if (cmp < 0) {
      out.push_back(std::move(moved));
      ++b;
    } else {
      const Scalar s = f.add(w[a].coeff, moved.coeff);
      if (!s.is_zero()) out.push_back(VTerm{w[a].mono, w[a].sig, w[a].comp, s});
      ++a;
      ++b;
    }
  }
  return out;
}

void sort_and_merge(Vec& v, const FrameOrder& order, const PrimeField& f) {
  std::sort(v.begin(), v.end(), [&](const VTerm& a, const VTerm& b) { return order.compare(a, b) > 0; });
  Vec out;
  for (VTerm& t : v) {
    if (!out.empty() && order.compare(out.back(), t) == 0) {
      out.back().coeff = f.add(out.back().coeff, t.coeff);
      if (out.back().coeff.is_zero()) out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  v = std::move(out);
}

bool lex_greater(const Monomial& a, const Monomial& b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a.exponent(i) != b.exponent(i)) return a.exponent(i) > b.exponent(i);
  }
  return false;
}

PolyMatrix to_matrix(const std::vector<Vec>& cols, std::size_t rows, const RingPtr& ring) {
  PolyMatrix mat;
  mat.rows = rows;
  for (const Vec& v : cols) {
    std::map<std::size_t, std::vector<Term>> by_row;
    for (const VTerm& t : v) by_row[t.comp].push_back(Term{t.mono, t.coeff});
    auto& col = mat.columns.emplace_back();
    for (auto& [row, terms] : by_row) col.emplace_back(row, Polynomial::from_terms(ring, std::move(terms)));
  }
  return mat;
}

struct RawResolution {
  std::vector<std::vector<std::uint32_t>> degrees;
  std::vector<PolyMatrix> differentials;
};

// Schreyer frame of ring/I. Each level's columns form a Groebner basis of the
// image for the order induced from the level below.
RawResolution schreyer_resolution(const Ideal& ideal) {
  const RingPtr& ring = ideal.ring_ptr();
  const PrimeField& field = ring->field();
  const std::size_t nv = ring->num_vars();

  RawResolution raw;
  raw.degrees.push_back({0});
  Frame below{{Monomial()}, {0}};

  std::vector<Vec> cols;
  for (const Polynomial& g : ideal.basis()) {
    Vec v;
    for (const Term& t : g.terms()) v.push_back(VTerm{t.mono, t.mono, 0, t.coeff});
    cols.push_back(std::move(v));
  }

  for (std::size_t level = 1; !cols.empty(); ++level) {
    if (level > nv + 1) throw Error(ErrorCode::kInternal, "syzygy iteration did not terminate");
    std::stable_sort(cols.begin(), cols.end(), [&](const Vec& a, const Vec& b) {
      if (a[0].comp != b[0].comp) return a[0].comp < b[0].comp;
      return lex_greater(a[0].mono, b[0].mono, nv);
    });
    raw.differentials.push_back(to_matrix(cols, below.tot.size(), ring));

    const std::size_t s = cols.size();
    Frame here;
    std::vector<std::uint32_t> degrees;
    for (const Vec& v : cols) {
      here.tot.push_back(v[0].sig);
      degrees.push_back(v[0].sig.degree());
    }
    std::vector<std::size_t> by_rank(s);
    std::iota(by_rank.begin(), by_rank.end(), 0);
    std::stable_sort(by_rank.begin(), by_rank.end(), [&](std::size_t a, std::size_t b) {
      return below.rank[cols[a][0].comp] < below.rank[cols[b][0].comp];
    });
    here.rank.resize(s);
    for (std::size_t r = 0; r < s; ++r) here.rank[by_rank[r]] = r;
    raw.degrees.push_back(std::move(degrees));

    const FrameOrder below_order(*ring, below);
    const FrameOrder here_order(*ring, here);
    std::vector<std::vector<std::size_t>> by_comp(below.tot.size());
    for (std::size_t k = 0; k < s; ++k) by_comp[cols[k][0].comp].push_back(k);

    std::vector<Vec> syzygies;
    for (std::size_t i = 0; i < s; ++i) {
      const VTerm& li = cols[i][0];
      std::vector<std::pair<std::size_t, Monomial>> cands;
      for (std::size_t j : by_comp[li.comp]) {
        if (j > i) cands.emplace_back(j, ring->lcm(li.mono, cols[j][0].mono) / li.mono);
      }
      for (std::size_t a = 0; a < cands.size(); ++a) {
        bool redundant = false;
        for (std::size_t b = 0; b < cands.size() && !redundant; ++b) {
          if (a == b || !cands[b].second.divides(cands[a].second)) continue;
          redundant = !(cands[a].second == cands[b].second) || b < a;
        }
        if (redundant) continue;

        const std::size_t j = cands[a].first;
        const Monomial& mi = cands[a].second;
        const VTerm& lj = cols[j][0];
        const Monomial mj = ring->lcm(li.mono, lj.mono) / lj.mono;
        Vec syz{VTerm{mi, mi * here.tot[i], static_cast<std::uint32_t>(i), lj.coeff},
                VTerm{mj, mj * here.tot[j], static_cast<std::uint32_t>(j), field.neg(li.coeff)}};
        Vec w = minus_scaled(Vec{}, field.neg(lj.coeff), mi, cols[i], below_order, field);
        w = minus_scaled(w, li.coeff, mj, cols[j], below_order, field);
        while (!w.empty()) {
          const VTerm& lead = w[0];
          std::size_t reducer = s;
          for (std::size_t k : by_comp[lead.comp]) {
            if (cols[k][0].mono.divides(lead.mono)) {
              reducer = k;
              break;
            }
          }
          if (reducer == s) throw Error(ErrorCode::kInternal, "syzygy frame is not a Groebner basis");
          const Monomial q = lead.mono / cols[reducer][0].mono;
          const Scalar c = field.div(lead.coeff, cols[reducer][0].coeff);
          syz.push_back(VTerm{q, q * here.tot[reducer], static_cast<std::uint32_t>(reducer), field.neg(c)});
          w = minus_scaled(w, c, q, cols[reducer], below_order, field);
        }
        sort_and_merge(syz, here_order, field);
        if (syz.empty() || syz[0].comp != i || !(syz[0].mono == mi)) {
          throw Error(ErrorCode::kInternal, "unexpected leading term of a syzygy");
        }
        syzygies.push_back(std::move(syz));
      }
    }
    cols = std::move(syzygies);
    below = std::move(here);
  }
  return raw;
}

// ---------------------------------------------------------------- minimization

bool is_unit(const Polynomial& f) { return !f.is_zero() && f.is_constant(); }

void drop_row(PolyMatrix& mat, std::size_t r) {
  for (auto& col : mat.columns) {
    std::erase_if(col, [&](const auto& e) { return e.first == r; });
    for (auto& e : col) {
      if (e.first > r) --e.first;
    }
  }
  --mat.rows;
}

// col_l - factor * col_k
void subtract_column(std::vector<std::pair<std::size_t, Polynomial>>& col_l,
                     const std::vector<std::pair<std::size_t, Polynomial>>& col_k, const Polynomial& factor) {
  std::vector<std::pair<std::size_t, Polynomial>> out;
  std::size_t a = 0, b = 0;
  while (a < col_l.size() || b < col_k.size()) {
    if (b == col_k.size() || (a < col_l.size() && col_l[a].first < col_k[b].first)) {
      out.push_back(std::move(col_l[a++]));
    } else if (a == col_l.size() || col_k[b].first < col_l[a].first) {
      out.emplace_back(col_k[b].first, -(factor * col_k[b].second));
      ++b;
    } else {
      Polynomial e = col_l[a].second - factor * col_k[b].second;
      if (!e.is_zero()) out.emplace_back(col_l[a].first, std::move(e));
      ++a;
      ++b;
    }
  }
  col_l = std::move(out);
}

void prune(RawResolution& res, const PrimeField& field) {
  for (std::size_t level = 1; level <= res.differentials.size(); ++level) {
    PolyMatrix& d = res.differentials[level - 1];
    while (true) {
      std::size_t k = d.cols(), r = 0;
      Scalar c{};
      for (std::size_t col = 0; col < d.cols() && k == d.cols(); ++col) {
        for (const auto& [row, entry] : d.columns[col]) {
          if (is_unit(entry)) {
            k = col;
            r = row;
            c = entry.lead_coeff();
            break;
          }
        }
      }
      if (k == d.cols()) break;

      const Scalar inv = field.inv(c);
      for (std::size_t l = 0; l < d.cols(); ++l) {
        if (l == k) continue;
        auto it = std::find_if(d.columns[l].begin(), d.columns[l].end(),
                               [&](const auto& e) { return e.first == r; });
        if (it == d.columns[l].end()) continue;
        const Polynomial factor = it->second.scaled(inv);
        subtract_column(d.columns[l], d.columns[k], factor);
      }
      d.columns.erase(d.columns.begin() + static_cast<std::ptrdiff_t>(k));
      drop_row(d, r);
      res.degrees[level].erase(res.degrees[level].begin() + static_cast<std::ptrdiff_t>(k));
      res.degrees[level - 1].erase(res.degrees[level - 1].begin() + static_cast<std::ptrdiff_t>(r));
      if (level < res.differentials.size()) drop_row(res.differentials[level], k);
      if (level >= 2) {
        auto& prev = res.differentials[level - 2].columns;
        prev.erase(prev.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }
  while (!res.differentials.empty() && res.differentials.back().cols() == 0) {
    res.differentials.pop_back();
    res.degrees.pop_back();
  }
}

// rank of the degree-j constant block of d: F_level -> F_{level-1}
std::size_t constant_rank(const PolyMatrix& d, const std::vector<std::uint32_t>& row_deg,
                          const std::vector<std::uint32_t>& col_deg, std::uint32_t j, const PrimeField& field) {
  std::vector<std::size_t> rows, cols;
  std::map<std::size_t, std::size_t> row_index;
  for (std::size_t r = 0; r < row_deg.size(); ++r) {
    if (row_deg[r] == j) {
      row_index[r] = rows.size();
      rows.push_back(r);
    }
  }
  for (std::size_t c = 0; c < col_deg.size(); ++c) {
    if (col_deg[c] == j) cols.push_back(c);
  }
  if (rows.empty() || cols.empty()) return 0;
  MatrixFp block(field, rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [row, entry] : d.columns[cols[c]]) {
      auto it = row_index.find(row);
      if (it != row_index.end() && is_unit(entry)) block(it->second, c) = entry.lead_coeff();
    }
  }
  return rank(block);
}

// beta_{i,j} of ring/I read off a possibly non-minimal resolution.
std::map<std::pair<int, int>, std::size_t> betti_from_ranks(const RawResolution& res, const PrimeField& field) {
  std::map<std::pair<int, int>, std::size_t> out;
  const std::size_t top = res.degrees.size();
  for (std::size_t i = 0; i < top; ++i) {
    std::map<std::uint32_t, std::size_t> count;
    for (std::uint32_t deg : res.degrees[i]) ++count[deg];
    for (const auto& [j, n] : count) {
      std::size_t beta = n;
      if (i >= 1) beta -= constant_rank(res.differentials[i - 1], res.degrees[i - 1], res.degrees[i], j, field);
      if (i + 1 < top) beta -= constant_rank(res.differentials[i], res.degrees[i], res.degrees[i + 1], j, field);
      if (beta != 0) out[{static_cast<int>(i), static_cast<int>(j)}] = beta;
    }
  }
  return out;
}

// The ideal re-rooted in a grevlex ring with variable c moved to the end.
Ideal with_variable_last(const Ideal& ideal, std::size_t c) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.num_vars();
  std::vector<std::size_t> map(n);
  VarSpec vars;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == c) continue;
    map[i] = vars.names.size();
    vars.names.push_back(ring.vars().names[i]);
    vars.weights.push_back(ring.vars().weights[i]);
  }
  map[c] = n - 1;
  vars.names.push_back(ring.vars().names[c]);
  vars.weights.push_back(ring.vars().weights[c]);
  const RingPtr target = Ring::make(ring.field(), std::move(vars));
  std::vector<Polynomial> gens;
  for (const Polynomial& f : ideal.basis()) gens.push_back(f.mapped_to(target, map));
  return Ideal(target, std::move(gens));
}

// With v last in reverse lexicographic order, v is a nonzerodivisor modulo a
// homogeneous ideal exactly when no leading monomial involves it, and setting
// v = 0 in the basis gives a basis of the image in the smaller ring.
Ideal cut_regular_variables(Ideal ideal, std::vector<std::string>& cut) {
  while (ideal.ring().num_vars() > 1) {
    bool found = false;
    for (std::size_t c = 0; c < ideal.ring().num_vars() && !found; ++c) {
      const Ideal moved = with_variable_last(ideal, c);
      const std::size_t last = moved.ring().num_vars() - 1;
      if (moved.is_unit()) return ideal;
      bool regular = true;
      for (const Polynomial& f : moved.basis()) {
        if (f.lead_monomial().exponent(last) != 0) {
          regular = false;
          break;
        }
      }
      if (!regular) continue;

      VarSpec vars = moved.ring().vars();
      cut.push_back(vars.names.back());
      vars.names.pop_back();
      vars.weights.pop_back();
      const RingPtr smaller = Ring::make(moved.ring().field(), std::move(vars));
      std::vector<std::size_t> map(last + 1);
      std::iota(map.begin(), map.end(), 0);
      map[last] = kMaxVars;
      std::vector<Polynomial> gens;
      for (const Polynomial& f : moved.basis()) {
        std::vector<Term> kept;
        for (const Term& t : f.terms()) {
          if (t.mono.exponent(last) == 0) kept.push_back(t);
        }
        Polynomial g = Polynomial::from_terms(moved.ring_ptr(), std::move(kept));
        if (!g.is_zero()) gens.push_back(g.mapped_to(smaller, map));
      }
      ideal = Ideal(smaller, std::move(gens));
      found = true;
    }
    if (!found) break;
  }
  return ideal;
}

}  // namespace

FreeResolution free_resolution(const PresentedRing& ring, const ResolutionOptions& options) {
  const Ideal& ideal = ring.ideal();
  if (ideal.is_unit()) throw Error(ErrorCode::kInvalidArgument, "presentation ideal is the unit ideal");
  for (const Polynomial& g : ideal.basis()) {
    if (!g.is_homogeneous()) throw Error(ErrorCode::kInvalidArgument, "resolution needs a homogeneous ideal");
  }
  const PrimeField& field = ideal.ring().field();

  FreeResolution out;
  const Ideal target = options.cut_regular_variables ? cut_regular_variables(ideal, out.cut_variables) : ideal;
  out.ring = target.ring_ptr();
  RawResolution raw = schreyer_resolution(target);
  for (const auto& degs : raw.degrees) out.nonminimal_ranks.push_back(degs.size());
  const auto expected = betti_from_ranks(raw, field);

  prune(raw, field);
  for (const PolyMatrix& d : raw.differentials) {
    if (d.has_unit_entry()) throw Error(ErrorCode::kInternal, "pruned resolution still has a unit entry");
  }
  out.degrees = std::move(raw.degrees);
  out.differentials = std::move(raw.differentials);
  for (std::size_t i = 0; i < out.degrees.size(); ++i) {
    for (std::uint32_t j : out.degrees[i]) ++out.betti.entries[{static_cast<int>(i), static_cast<int>(j)}];
  }
  out.betti.projective_dimension = static_cast<int>(out.degrees.size()) - 1;
  if (out.betti.entries != expected) {
    throw Error(ErrorCode::kInternal, "pruned Betti numbers disagree with the rank computation");
  }
  return out;
}

HilbertSeries presented_hilbert_series(const PresentedRing& ring) {
  const Ideal& ideal = ring.ideal();
  return hilbert_series(initial_ideal(ideal), ideal.ring().weights());
}

RingVerdict depth_report(const PresentedRing& ring, const FreeResolution& resolution) {
  if (ring.ideal().is_unit()) throw Error(ErrorCode::kInvalidArgument, "presentation ideal is the unit ideal");
  RingVerdict v;
  v.num_vars = static_cast<int>(ring.num_vars());
  v.projective_dimension = resolution.betti.projective_dimension;
  v.dimension = krull_dimension(ring.ideal()).dimension;
  v.depth = v.num_vars - v.projective_dimension;
  v.cm_defect = v.dimension - v.depth;
  v.is_cohen_macaulay = v.cm_defect == 0;
  if (v.depth < 0 || v.depth > v.dimension || v.dimension > v.num_vars) {
    throw Error(ErrorCode::kInternal, "depth " + std::to_string(v.depth) + " and dimension " +
                                          std::to_string(v.dimension) + " are inconsistent");
  }

  std::vector<std::int64_t> euler;
  for (const auto& [key, beta] : resolution.betti.entries) {
    const auto [i, j] = key;
    if (euler.size() <= static_cast<std::size_t>(j)) euler.resize(j + 1, 0);
    euler[j] += (i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(beta);
  }
  auto numerator = presented_hilbert_series(ring).numerator;
  auto trim = [](std::vector<std::int64_t>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  };
  trim(euler);
  trim(numerator);
  v.euler_check = euler == numerator;
  return v;
}

RingVerdict depth_report(const PresentedRing& ring) { return depth_report(ring, free_resolution(ring)); }

HilbertComparison hilbert_consistency(const PresentedRing& ring, const MatrixGroup& g, std::uint32_t max_degree) {
  if (!ring.has_ambient()) throw Error(ErrorCode::kInvalidArgument, "presentation has no ambient ring");
  HilbertComparison cmp;
  cmp.presented = presented_hilbert_series(ring).expand(max_degree);
  cmp.invariant = invariant_hilbert_function(g, ring.ambient(), max_degree);
  for (std::uint32_t n = 0; n <= max_degree; ++n) {
    if (cmp.presented[n] != cmp.invariant[n]) {
      cmp.first_mismatch = n;
      break;
    }
  }
  cmp.consistent = !cmp.first_mismatch.has_value();
  return cmp;
}

}  // namespace paperlab
