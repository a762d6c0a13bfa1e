#include "incseq/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace incseq {

Series::Series(int order) {
  if (order < 0) throw std::invalid_argument("Series: negative order");
  c_.assign(static_cast<size_t>(order) + 1, Rational());
}

Series::Series(int order, std::vector<Rational> coeffs) : Series(order) {
  for (size_t k = 0; k < coeffs.size() && k < c_.size(); ++k) c_[k] = std::move(coeffs[k]);
}

Series Series::constant(const Rational& c, int order) {
  Series s(order);
  s.c_[0] = c;
  return s;
}

Series Series::monomial(int k, const Rational& c, int order) {
  Series s(order);
  if (k < 0) throw std::invalid_argument("Series::monomial: negative power");
  if (k <= order) s.c_[static_cast<size_t>(k)] = c;
  return s;
}

const Rational& Series::coeff(int k) const {
  if (k < 0 || k > order())
    throw std::out_of_range("Series::coeff: t^" + std::to_string(k) + " beyond order " + std::to_string(order()));
  return c_[static_cast<size_t>(k)];
}

void Series::set(int k, const Rational& v) {
  if (k < 0 || k > order()) throw std::out_of_range("Series::set: index beyond order");
  c_[static_cast<size_t>(k)] = v;
}

Series Series::truncated(int order) const {
  if (order > this->order()) throw std::invalid_argument("Series::truncated: cannot extend order");
  Series s(order);
  std::copy(c_.begin(), c_.begin() + order + 1, s.c_.begin());
  return s;
}

bool Series::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

int Series::valuation() const {
  for (int k = 0; k <= order(); ++k)
    if (!c_[static_cast<size_t>(k)].is_zero()) return k;
  return order() + 1;
}

Series& Series::operator+=(const Series& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  if (o.order() < order()) c_.resize(o.c_.size());
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    const Rational& ai = a.c_[static_cast<size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      const Rational& bj = b.c_[static_cast<size_t>(j)];
      if (!bj.is_zero()) addmul(r.c_[static_cast<size_t>(i + j)], ai, bj);
    }
  }
  return r;
}

Series& Series::operator*=(const Series& o) { return *this = *this * o; }

Series& Series::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

Series Series::operator-() const {
  Series r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

bool operator==(const Series& a, const Series& b) {
  int n = std::min(a.order(), b.order());
  for (int k = 0; k <= n; ++k)
    if (a.c_[static_cast<size_t>(k)] != b.c_[static_cast<size_t>(k)]) return false;
  return true;
}

Series Series::reciprocal() const {
  if (c_[0].is_zero()) throw std::domain_error("Series::reciprocal: zero constant term");
  int n = order();
  Series r(n);
  Rational inv = Rational(1) / c_[0];
  r.c_[0] = inv;
  for (int k = 1; k <= n; ++k) {
    Rational acc;
    for (int j = 1; j <= k; ++j)
      if (!c_[static_cast<size_t>(j)].is_zero()) addmul(acc, c_[static_cast<size_t>(j)], r.c_[static_cast<size_t>(k - j)]);
    r.c_[static_cast<size_t>(k)] = -(acc * inv);
  }
  return r;
}

Series Series::scaled_variable(const Rational& c) const {
  Series r(*this);
  Rational p(1);
  for (auto& x : r.c_) {
    x *= p;
    p *= c;
  }
  return r;
}

Series Series::power_substitute(int k, int order) const {
  if (k < 1) throw std::invalid_argument("Series::power_substitute: k must be positive");
  if (order > k * this->order() + k - 1) throw std::invalid_argument("Series::power_substitute: order too large");
  Series r(order);
  for (int i = 0; i * k <= order; ++i) r.c_[static_cast<size_t>(i * k)] = c_[static_cast<size_t>(i)];
  return r;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order(); ++k) {
    const Rational& x = c_[static_cast<size_t>(k)];
    if (x.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << x;
    if (k > 0) os << "*t^" << k;
  }
  if (first) os << "0";
  os << " + O(t^" << order() + 1 << ")";
  return os.str();
}

Series series_exp(const Series& s) {
  if (!s[0].is_zero()) throw std::domain_error("series_exp: nonzero constant term");
  int n = s.order();
  std::vector<Rational> e(static_cast<size_t>(n) + 1);
  e[0] = Rational(1);
  // k e_k = sum_{j=1}^k j s_j e_{k-j}
  for (int k = 1; k <= n; ++k) {
    Rational acc;
    for (int j = 1; j <= k; ++j) {
      if (s[j].is_zero()) continue;
      addmul(acc, s[j] * Rational(j), e[static_cast<size_t>(k - j)]);
    }
    e[static_cast<size_t>(k)] = acc / Rational(k);
  }
  return Series(n, std::move(e));
}

Series exp_monomial(const Rational& c, int k, int order) {
  return series_exp(Series::monomial(k, c, order));
}

Series pow(const Series& s, int e) {
  if (e < 0) return pow(s.reciprocal(), -e);
  Series r = one_like(s);
  for (int i = 0; i < e; ++i) r *= s;
  return r;
}

}  // namespace incseq
