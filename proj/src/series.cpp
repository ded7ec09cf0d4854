#include "kpg/series.hpp"

#include <algorithm>

#include "kpg/error.hpp"

namespace kpg {

namespace {

void check_index(int index) {
  if (index < 1 || index > kMaxVariable) {
    throw SizeError("variable index " + std::to_string(index) + " outside 1.." +
                    std::to_string(kMaxVariable));
  }
}

void check_order(int order) {
  if (order < 1 || order > kMaxOrder) {
    throw SizeError("truncation order " + std::to_string(order) + " outside 1.." +
                    std::to_string(kMaxOrder));
  }
}

void check_compatible(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) {
    throw OrderMismatchError("truncation orders differ: " + std::to_string(a.order()) +
                             " vs " + std::to_string(b.order()));
  }
  if (a.variable() != b.variable()) {
    throw VariableMismatchError("series use different variable families");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::initializer_list<std::pair<int, int>> powers) {
  for (auto [index, e] : powers) set(index, exponent(index) + e);
}

Monomial Monomial::variable(int index, int exponent) {
  Monomial m;
  m.set(index, exponent);
  return m;
}

void Monomial::set(int index, int e) {
  check_index(index);
  if (e < 0 || e > 255) throw SizeError("monomial exponent out of range");
  weight_ += (e - exps_[index - 1]) * index;
  exps_[index - 1] = static_cast<std::uint8_t>(e);
}

int Monomial::exponent(int index) const {
  if (index < 1 || index > kMaxVariable) return 0;
  return exps_[index - 1];
}

int Monomial::degree() const noexcept {
  int d = 0;
  for (auto e : exps_) d += e;
  return d;
}

int Monomial::max_index() const noexcept {
  for (int i = kMaxVariable; i >= 1; --i) {
    if (exps_[i - 1] != 0) return i;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r = *this;
  for (int i = 1; i <= kMaxVariable; ++i) {
    if (other.exps_[i - 1] != 0) r.set(i, exps_[i - 1] + other.exps_[i - 1]);
  }
  return r;
}

std::vector<int> Monomial::exponents() const {
  std::vector<int> out(max_index());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = exps_[i];
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) noexcept {
  if (a.weight_ != b.weight_) return a.weight_ < b.weight_;
  // Within a weight, compare from the highest index down; smaller exponent first.
  return std::lexicographical_compare(a.exps_.rbegin(), a.exps_.rend(), b.exps_.rbegin(),
                                      b.exps_.rend());
}

// ---------------------------------------------------------------------------
// TruncSeries

TruncSeries::TruncSeries(int order, Variable var) : order_(order), var_(var) {
  check_order(order);
}

TruncSeries TruncSeries::constant(const Rational& c, int order, Variable var) {
  TruncSeries s(order, var);
  s.add_term(Monomial{}, c);
  return s;
}

TruncSeries TruncSeries::monomial(const Monomial& m, const Rational& c, int order,
                                  Variable var) {
  TruncSeries s(order, var);
  s.add_term(m, c);
  return s;
}

TruncSeries TruncSeries::gen(int index, int order, Variable var) {
  return monomial(Monomial::variable(index), 1, order, var);
}

void TruncSeries::add_term(const Monomial& m, const Rational& c) {
  if (m.weight() > order_ || c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational TruncSeries::coefficient(const Monomial& m) const {
  if (m.weight() > order_) {
    throw OutOfTruncationError("monomial of weight " + std::to_string(m.weight()) +
                               " above truncation order " + std::to_string(order_));
  }
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational TruncSeries::constant_term() const { return coefficient(Monomial{}); }

TruncSeries TruncSeries::homogeneous_part(int w) const {
  TruncSeries r(order_, var_);
  for (const auto& [m, c] : terms_) {
    if (m.weight() == w) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

TruncSeries TruncSeries::truncated(int w) const {
  TruncSeries r(order_, var_);
  for (const auto& [m, c] : terms_) {
    if (m.weight() <= w) r.terms_.emplace_hint(r.terms_.end(), m, c);
  }
  return r;
}

TruncSeries TruncSeries::with_order(int order) const {
  TruncSeries r(order, var_);
  for (const auto& [m, c] : terms_) r.add_term(m, c);
  return r;
}

TruncSeries TruncSeries::with_variable(Variable var) const {
  TruncSeries r = *this;
  r.var_ = var;
  return r;
}

Rational TruncSeries::evaluate(std::span<const Rational> values) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (int i = 1; i <= m.max_index() && term != 0; ++i) {
      int e = m.exponent(i);
      if (e == 0) continue;
      if (static_cast<std::size_t>(i) > values.size()) {
        term = 0;
      } else {
        term *= kpg::pow(values[i - 1], static_cast<unsigned>(e));
      }
    }
    total += term;
  }
  return total;
}

TruncSeries TruncSeries::operator-() const {
  TruncSeries r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

TruncSeries& TruncSeries::operator+=(const TruncSeries& other) {
  check_compatible(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TruncSeries& TruncSeries::operator-=(const TruncSeries& other) {
  check_compatible(*this, other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

TruncSeries& TruncSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

// ---------------------------------------------------------------------------
// Ring operations

TruncSeries add(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r = a;
  r += b;
  return r;
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries r = a;
  r -= b;
  return r;
}

TruncSeries scale(const TruncSeries& a, const Rational& c) {
  TruncSeries r = a;
  r *= c;
  return r;
}

TruncSeries mul(const TruncSeries& a, const TruncSeries& b) {
  check_compatible(a, b);
  TruncSeries r(a.order(), a.variable());
  const int order = a.order();
  // Both maps iterate in ascending weight, so the inner loop can stop early.
  for (const auto& [ma, ca] : a.terms()) {
    if (ma.weight() > order) break;
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.weight() + mb.weight() > order) break;
      r.add_term(ma * mb, ca * cb);
    }
  }
  return r;
}

TruncSeries pow(const TruncSeries& a, unsigned k) {
  TruncSeries r = TruncSeries::constant(1, a.order(), a.variable());
  for (unsigned i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

TruncSeries exp(const TruncSeries& a) {
  if (a.constant_term() != 0) throw DomainError("exp of a series with nonzero constant term");
  TruncSeries result = TruncSeries::constant(1, a.order(), a.variable());
  TruncSeries power = result;
  // a has no constant term, so a^k vanishes once k exceeds the order.
  for (int k = 1; k <= a.order(); ++k) {
    power = mul(power, a);
    if (power.is_zero()) break;
    result += scale(power, Rational(1) / Rational(factorial(k)));
  }
  return result;
}

TruncSeries log(const TruncSeries& a) {
  if (a.constant_term() != 1) throw DomainError("log of a series whose constant term is not 1");
  TruncSeries x = a - TruncSeries::constant(1, a.order(), a.variable());
  TruncSeries result(a.order(), a.variable());
  TruncSeries power = TruncSeries::constant(1, a.order(), a.variable());
  for (int k = 1; k <= a.order(); ++k) {
    power = mul(power, x);
    if (power.is_zero()) break;
    result += scale(power, Rational(k % 2 == 1 ? 1 : -1, k));
  }
  return result;
}

TruncSeries substitute(const TruncSeries& a, const RescalePlan& plan) {
  TruncSeries r(a.order(), plan.target);
  for (const auto& [m, c] : a.terms()) {
    Rational coeff = c;
    for (int i = 1; i <= m.max_index(); ++i) {
      int e = m.exponent(i);
      if (e == 0) continue;
      auto it = plan.factors.find(i);
      if (it == plan.factors.end()) {
        throw RescaleError("rescale plan has no factor for variable " + std::to_string(i));
      }
      if (it->second == 0) {
        throw RescaleError("rescale plan has a zero factor for variable " + std::to_string(i));
      }
      coeff *= kpg::pow(it->second, static_cast<unsigned>(e));
    }
    r.add_term(m, coeff);
  }
  return r;
}

Derivative partial(const TruncSeries& a, int var, int times) {
  check_index(var);
  if (times < 0) throw DomainError("negative derivative count");
  TruncSeries r(a.order(), a.variable());
  for (const auto& [m, c] : a.terms()) {
    int e = m.exponent(var);
    if (e < times) continue;
    Rational coeff = c;
    for (int t = 0; t < times; ++t) coeff *= e - t;
    Monomial lowered;
    for (int i = 1; i <= m.max_index(); ++i) {
      int ei = (i == var) ? e - times : m.exponent(i);
      if (ei != 0) lowered = lowered * Monomial::variable(i, ei);
    }
    r.add_term(lowered, coeff);
  }
  return {std::move(r), a.order() - times * var};
}

// ---------------------------------------------------------------------------
// Text rendering

std::string to_string(const Monomial& m, Variable var) {
  std::string out;
  for (int i = 1; i <= m.max_index(); ++i) {
    int e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += ' ';
    out += static_cast<char>(var);
    out += std::to_string(i);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out;
}

std::string to_string(const TruncSeries& a) {
  if (a.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    const bool negative = c < 0;
    Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += kpg::to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += kpg::to_string(mag);
      out += ' ';
    }
    out += to_string(m, a.variable());
  }
  return out;
}

}  // namespace kpg
