#include "paperlab/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace paperlab {

// ---------------------------------------------------------------- Monomial

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exps,
                                  std::span<const std::uint32_t> weights) {
  if (exps.size() > kMaxVars || exps.size() > weights.size()) {
    throw Error(ErrorCode::kDimension, "exponent vector longer than variable list");
  }
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m.set_exponent(i, exps[i], weights[i]);
  return m;
}

void Monomial::set_exponent(std::size_t i, std::uint32_t e, std::uint32_t weight) {
  if (e > 255) throw Error(ErrorCode::kArithmetic, "exponent overflow (> 255)");
  const std::uint32_t old = exps_[i];
  degree_ = degree_ - old * weight + e * weight;
  exps_[i] = static_cast<std::uint8_t>(e);
  if (e != 0) {
    support_ |= (std::uint64_t{1} << i);
  } else {
    support_ &= ~(std::uint64_t{1} << i);
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    const unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > 255) throw Error(ErrorCode::kArithmetic, "exponent overflow (> 255)");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = degree_ + other.degree_;
  r.support_ = support_ | other.support_;
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r;
  std::uint64_t support = 0;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
    if (r.exps_[i] != 0) support |= (std::uint64_t{1} << i);
  }
  r.degree_ = degree_ - other.degree_;
  r.support_ = support;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t w = 0; w < kMaxVars; w += 8) {
    std::uint64_t word;
    std::memcpy(&word, exps_.data() + w, 8);
    h ^= word;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

// ---------------------------------------------------------------- orders

VarSpec VarSpec::uniform(std::vector<std::string> names) {
  VarSpec v;
  v.weights.assign(names.size(), 1);
  v.names = std::move(names);
  return v;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case OrderKind::kGRevLex: return "grevlex";
    case OrderKind::kLex: return "lex";
    case OrderKind::kBlockElimination: return "block:" + std::to_string(first_block);
  }
  return "?";
}

MonomialOrder MonomialOrder::parse(std::string_view text) {
  if (text == "grevlex") return grevlex();
  if (text == "lex") return lex();
  if (text.starts_with("block:")) {
    const std::string digits(text.substr(6));
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); })) {
      return block(std::stoul(digits));
    }
  }
  throw Error(ErrorCode::kParse, "unknown monomial order '" + std::string(text) + "'");
}

// ---------------------------------------------------------------- Ring

Ring::Ring(PrimeField field, VarSpec vars, MonomialOrder order)
    : field_(field), vars_(std::move(vars)), order_(order) {
  if (vars_.names.size() != vars_.weights.size()) {
    throw Error(ErrorCode::kInvalidArgument, "variable names and weights differ in length");
  }
  if (vars_.names.size() > kMaxVars) {
    throw Error(ErrorCode::kResourceCap,
                "at most " + std::to_string(kMaxVars) + " variables are supported");
  }
  for (std::size_t i = 0; i < vars_.names.size(); ++i) {
    if (vars_.weights[i] == 0) throw Error(ErrorCode::kInvalidArgument, "variable weight must be >= 1");
    const auto& name = vars_.names[i];
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0])) ||
        !std::all_of(name.begin(), name.end(), [](unsigned char c) {
          return std::isalnum(c) || c == '_';
        })) {
      throw Error(ErrorCode::kInvalidArgument, "invalid variable name '" + name + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_.names[j] == name) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate variable name '" + name + "'");
      }
    }
  }
  if (order_.kind == OrderKind::kBlockElimination && order_.first_block > vars_.names.size()) {
    throw Error(ErrorCode::kInvalidArgument, "elimination block larger than variable list");
  }
}

RingPtr Ring::make(PrimeField field, VarSpec vars, MonomialOrder order) {
  return std::make_shared<const Ring>(field, std::move(vars), order);
}

std::size_t Ring::var_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.names.size(); ++i) {
    if (vars_.names[i] == name) return i;
  }
  throw Error(ErrorCode::kParse, "unknown variable '" + std::string(name) + "'");
}

Monomial Ring::variable(std::size_t i, std::uint32_t exp) const {
  if (i >= num_vars()) throw Error(ErrorCode::kDimension, "variable index out of range");
  Monomial m;
  m.set_exponent(i, exp, vars_.weights[i]);
  return m;
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    m.set_exponent(i, std::max(a.exponent(i), b.exponent(i)), vars_.weights[i]);
  }
  return m;
}

Monomial Ring::gcd(const Monomial& a, const Monomial& b) const {
  Monomial m;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    m.set_exponent(i, std::min(a.exponent(i), b.exponent(i)), vars_.weights[i]);
  }
  return m;
}

int Ring::compare_grevlex(const Monomial& a, const Monomial& b, std::size_t lo,
                          std::size_t hi) const noexcept {
  std::uint32_t da = 0, db = 0;
  if (lo == 0 && hi == num_vars()) {
    da = a.degree();
    db = b.degree();
  } else {
    for (std::size_t i = lo; i < hi; ++i) {
      da += a.exponent(i) * vars_.weights[i];
      db += b.exponent(i) * vars_.weights[i];
    }
  }
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = hi; i-- > lo;) {
    const auto ea = a.exponent(i), eb = b.exponent(i);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const noexcept {
  switch (order_.kind) {
    case OrderKind::kGRevLex:
      return compare_grevlex(a, b, 0, num_vars());
    case OrderKind::kLex:
      for (std::size_t i = 0; i < num_vars(); ++i) {
        const auto ea = a.exponent(i), eb = b.exponent(i);
        if (ea != eb) return ea > eb ? 1 : -1;
      }
      return 0;
    case OrderKind::kBlockElimination: {
      const int first = compare_grevlex(a, b, 0, order_.first_block);
      if (first != 0) return first;
      return compare_grevlex(a, b, order_.first_block, num_vars());
    }
  }
  return 0;
}

RingPtr Ring::with_order(MonomialOrder order) const { return make(field_, vars_, order); }

bool Ring::same_as(const Ring& other) const noexcept {
  return this == &other ||
         (field_ == other.field_ && order_ == other.order_ && vars_ == other.vars_);
}

std::string Ring::format_monomial(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    const auto e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += vars_.names[i];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------- Polynomial

namespace {

using Accumulator = std::unordered_map<Monomial, Scalar, MonomialHash>;

void accumulate(Accumulator& acc, const PrimeField& f, const Monomial& m, Scalar c) {
  auto [it, inserted] = acc.try_emplace(m, c);
  if (!inserted) it->second = f.add(it->second, c);
}

std::vector<Term> drain_sorted(const Ring& ring, Accumulator& acc) {
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back(Term{m, c});
  }
  std::sort(terms.begin(), terms.end(),
            [&ring](const Term& a, const Term& b) { return ring.greater(a.mono, b.mono); });
  return terms;
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, Scalar c) {
  Polynomial f(std::move(ring));
  if (!c.is_zero()) f.terms_.push_back(Term{Monomial{}, c});
  return f;
}

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  const Scalar s = ring->field().from_int(c);
  return constant(std::move(ring), s);
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  const Monomial m = ring->variable(i);
  return monomial(std::move(ring), m, Scalar{1});
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Scalar c) {
  Polynomial f(std::move(ring));
  if (!c.is_zero()) f.terms_.push_back(Term{m, c});
  return f;
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  Accumulator acc;
  const PrimeField& f = ring->field();
  for (const Term& t : terms) accumulate(acc, f, t.mono, f.from_int(t.coeff.value));
  auto sorted = drain_sorted(*ring, acc);
  return Polynomial(std::move(ring), std::move(sorted));
}

void Polynomial::check_same_ring(const Polynomial& g) const {
  if (ring_ != g.ring_ && !ring_->same_as(*g.ring_)) {
    throw Error(ErrorCode::kRingMismatch, "polynomials belong to different rings");
  }
}

std::uint32_t Polynomial::degree() const noexcept {
  std::uint32_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const noexcept {
  for (const Term& t : terms_) {
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  }
  return true;
}

std::map<std::uint32_t, Polynomial> Polynomial::homogeneous_components() const {
  std::map<std::uint32_t, Polynomial> out;
  for (const Term& t : terms_) {
    auto it = out.try_emplace(t.mono.degree(), Polynomial(ring_)).first;
    it->second.terms_.push_back(t);  // order preserved from the sorted source
  }
  return out;
}

bool Polynomial::only_uses_vars(std::size_t lo, std::size_t hi) const noexcept {
  std::uint64_t allowed = 0;
  for (std::size_t i = lo; i < hi; ++i) allowed |= std::uint64_t{1} << i;
  for (const Term& t : terms_) {
    if ((t.mono.support() & ~allowed) != 0) return false;
  }
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_same_ring(g);
  const PrimeField& f = ring_->field();
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < g.terms_.size()) {
    const int c = ring_->compare(terms_[i].mono, g.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(g.terms_[j++]);
    } else {
      const Scalar s = f.add(terms_[i].coeff, g.terms_[j].coeff);
      if (!s.is_zero()) out.push_back(Term{terms_[i].mono, s});
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), terms_.begin() + static_cast<std::ptrdiff_t>(i), terms_.end());
  out.insert(out.end(), g.terms_.begin() + static_cast<std::ptrdiff_t>(j), g.terms_.end());
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = ring_->field().neg(t.coeff);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::scaled(Scalar c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial r = *this;
  for (Term& t : r.terms_) t.coeff = ring_->field().mul(t.coeff, c);
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, Scalar c) const {
  if (c.is_zero()) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const Term& t : terms_) out.push_back(Term{t.mono * m, ring_->field().mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::minus_term_times(const Monomial& m, Scalar c, const Polynomial& g) const {
  check_same_ring(g);
  const PrimeField& f = ring_->field();
  const Scalar negc = f.neg(c);
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  Monomial gm;
  bool have_gm = false;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j < g.terms_.size() && !have_gm) {
      gm = g.terms_[j].mono * m;
      have_gm = true;
    }
    int cmp;
    if (i == terms_.size()) {
      cmp = -1;
    } else if (j == g.terms_.size()) {
      cmp = 1;
    } else {
      cmp = ring_->compare(terms_[i].mono, gm);
    }
    if (cmp > 0) {
      out.push_back(terms_[i++]);
    } else if (cmp < 0) {
      out.push_back(Term{gm, f.mul(negc, g.terms_[j].coeff)});
      ++j;
      have_gm = false;
    } else {
      const Scalar s = f.add(terms_[i].coeff, f.mul(negc, g.terms_[j].coeff));
      if (!s.is_zero()) out.push_back(Term{gm, s});
      ++i;
      ++j;
      have_gm = false;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_same_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  if (terms_.size() == 1) return g.times_term(terms_[0].mono, terms_[0].coeff);
  if (g.terms_.size() == 1) return times_term(g.terms_[0].mono, g.terms_[0].coeff);
  const PrimeField& f = ring_->field();
  Accumulator acc;
  acc.reserve(terms_.size() * g.terms_.size());
  for (const Term& a : terms_) {
    for (const Term& b : g.terms_) accumulate(acc, f, a.mono * b.mono, f.mul(a.coeff, b.coeff));
  }
  return Polynomial(ring_, drain_sorted(*ring_, acc));
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial result = constant(ring_, Scalar{1});
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e != 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Polynomial Polynomial::mapped_to(RingPtr target, std::span<const std::size_t> var_map) const {
  if (var_map.size() < ring_->num_vars()) {
    throw Error(ErrorCode::kDimension, "variable map shorter than source variable list");
  }
  if (!(target->field() == ring_->field())) {
    throw Error(ErrorCode::kRingMismatch, "cannot map between different characteristics");
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  const auto weights = target->weights();
  for (const Term& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < ring_->num_vars(); ++i) {
      const auto e = t.mono.exponent(i);
      if (e == 0) continue;
      if (var_map[i] >= target->num_vars()) {
        throw Error(ErrorCode::kDimension, "variable " + ring_->vars().names[i] +
                                               " has no image in the target ring");
      }
      m.set_exponent(var_map[i], m.exponent(var_map[i]) + e, weights[var_map[i]]);
    }
    out.push_back(Term{m, t.coeff});
  }
  return from_terms(std::move(target), std::move(out));
}

std::string Polynomial::to_string() const { return format_polynomial(*this); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- text

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    const PrimeField& f = ring_->field();
    Accumulator acc;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [mono, coeff] = parse_term();
      if (negative) coeff = f.neg(coeff);
      accumulate(acc, f, mono, coeff);
      first = false;
      skip_ws();
    }
    return Polynomial::from_terms(ring_, drain_sorted(*ring_, acc));
  }

 private:
  std::pair<Monomial, Scalar> parse_term() {
    const PrimeField& f = ring_->field();
    Monomial mono;
    Scalar coeff = f.one();
    while (true) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::uint64_t n = parse_uint();
        coeff = f.mul(coeff, f.from_int(static_cast<std::int64_t>(n % f.characteristic())));
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
          ++pos_;
        }
        const std::string_view name = text_.substr(start, pos_ - start);
        std::size_t index = 0;
        try {
          index = ring_->var_index(name);
        } catch (const Error&) {
          fail_at(start, "unknown variable '" + std::string(name) + "'");
        }
        std::uint64_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected an exponent");
          }
          e = parse_uint();
        }
        const std::uint64_t total = mono.exponent(index) + e;
        if (total > 255) fail("exponent overflow (> 255)");
        mono.set_exponent(index, static_cast<std::uint32_t>(total), ring_->weights()[index]);
      } else {
        fail(std::string("unexpected character '") + peek() + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return {mono, coeff};
    }
  }

  std::uint64_t parse_uint() {
    const std::size_t start = pos_;
    std::uint64_t n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (n > (std::uint64_t{1} << 58)) fail_at(start, "integer literal too large");
      n = n * 10 + static_cast<std::uint64_t>(peek() - '0');
      ++pos_;
    }
    return n;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
    throw Error(ErrorCode::kParse, "syntax error at position " + std::to_string(pos) + ": " + msg);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

std::string format_polynomial(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff.value);
    } else if (t.coeff.value == 1) {
      out += f.ring().format_monomial(t.mono);
    } else {
      out += std::to_string(t.coeff.value) + '*' + f.ring().format_monomial(t.mono);
    }
  }
  return out;
}

// ---------------------------------------------------------------- action

Polynomial substitute_linear(const Polynomial& f, const MatrixFp& m) {
  const Ring& ring = f.ring();
  const std::size_t n = ring.num_vars();
  if (!m.is_square() || m.rows() != n) {
    throw Error(ErrorCode::kDimension, "substitution matrix must be " + std::to_string(n) +
                                           "x" + std::to_string(n));
  }
  if (!(m.field() == ring.field())) {
    throw Error(ErrorCode::kRingMismatch, "matrix and polynomial live over different fields");
  }
  const RingPtr& rp = f.ring_ptr();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < n; ++k) {
      if (!m(j, k).is_zero()) terms.push_back(Term{ring.variable(k), m(j, k)});
    }
    images.push_back(Polynomial::from_terms(rp, std::move(terms)));
  }
  // powers[j][e] = images[j]^e, filled on demand
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t j, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[j];
    if (cache.empty()) cache.push_back(Polynomial::constant(rp, Scalar{1}));
    while (cache.size() <= e) cache.push_back(cache.back() * images[j]);
    return cache[e];
  };

  const PrimeField& field = ring.field();
  Accumulator acc;
  for (const Term& t : f.terms()) {
    Polynomial prod = Polynomial::constant(rp, t.coeff);
    for (std::size_t j = 0; j < n && !prod.is_zero(); ++j) {
      const auto e = t.mono.exponent(j);
      if (e != 0) prod = prod * power(j, e);
    }
    for (const Term& u : prod.terms()) accumulate(acc, field, u.mono, u.coeff);
  }
  return Polynomial::from_terms(rp, drain_sorted(ring, acc));
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, std::uint32_t n) {
  std::vector<Monomial> out;
  const std::size_t nv = ring.num_vars();
  const auto weights = ring.weights();
  Monomial current;
  // depth-first over variables, spending the remaining degree
  auto recurse = [&](auto& self, std::size_t var, std::uint32_t remaining) -> void {
    if (var == nv) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    for (std::uint32_t e = 0; e * weights[var] <= remaining; ++e) {
      current.set_exponent(var, e, weights[var]);
      self(self, var + 1, remaining - e * weights[var]);
    }
    current.set_exponent(var, 0, weights[var]);
  };
  recurse(recurse, 0, n);
  std::sort(out.begin(), out.end(),
            [&ring](const Monomial& a, const Monomial& b) { return ring.greater(a, b); });
  return out;
}

}  // namespace paperlab
