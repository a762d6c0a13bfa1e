#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "incseq/rational.hpp"

namespace incseq {

namespace detail {
template <class T>
bool ring_is_zero(const T& v) {
  return is_zero(v);
}
}  // namespace detail

// Laurent polynomial sum_k c_k z^k with coefficients in a ring R. Zero
// coefficients are never stored. An optional window |k| <= w bounds the
// support; products discard powers outside it and coefficient queries
// outside it are errors.
template <class R>
class Laurent {
 public:
  explicit Laurent(R zero, std::optional<int> window = std::nullopt) : zero_(zero_like(zero)), window_(window) {}

  static Laurent constant(const R& c, std::optional<int> window = std::nullopt) {
    Laurent L(c, window);
    L.set(0, c);
    return L;
  }
  static Laurent monomial(int k, const R& c, std::optional<int> window = std::nullopt) {
    Laurent L(c, window);
    L.set(k, c);
    return L;
  }

  const R& zero() const { return zero_; }
  std::optional<int> window() const { return window_; }
  const std::map<int, R>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int min_power() const { return c_.empty() ? 0 : c_.begin()->first; }
  int max_power() const { return c_.empty() ? 0 : c_.rbegin()->first; }

  R coeff(int k) const {
    if (window_ && std::abs(k) > *window_)
      throw std::out_of_range("Laurent::coeff: z^" + std::to_string(k) + " outside window " + std::to_string(*window_));
    auto it = c_.find(k);
    return it == c_.end() ? zero_ : it->second;
  }

  void set(int k, const R& v) {
    if (window_ && std::abs(k) > *window_) return;
    if (is_zero_elem(v))
      c_.erase(k);
    else
      c_.insert_or_assign(k, v);
  }
  void add_to(int k, const R& v) {
    if (window_ && std::abs(k) > *window_) return;
    auto it = c_.find(k);
    if (it == c_.end()) {
      if (!is_zero_elem(v)) c_.emplace(k, v);
      return;
    }
    it->second += v;
    if (is_zero_elem(it->second)) c_.erase(it);
  }

  Laurent& operator+=(const Laurent& o) {
    for (const auto& [k, v] : o.c_) add_to(k, v);
    return *this;
  }
  Laurent& operator-=(const Laurent& o) {
    for (const auto& [k, v] : o.c_) add_to(k, -v);
    return *this;
  }
  Laurent operator-() const {
    Laurent r(zero_, window_);
    for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
    return r;
  }
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r(a.zero_, merge_window(a.window_, b.window_));
    for (const auto& [i, x] : a.c_)
      for (const auto& [j, y] : b.c_) r.add_to(i + j, x * y);
    return r;
  }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
  friend Laurent operator*(Laurent a, const R& c) {
    Laurent r(a.zero_, a.window_);
    for (const auto& [k, v] : a.c_) r.set(k, v * c);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (auto i = a.c_.begin(), j = b.c_.begin(); i != a.c_.end(); ++i, ++j)
      if (i->first != j->first || !(i->second == j->second)) return false;
    return true;
  }

  // z -> 1/z.
  Laurent reflected() const {
    Laurent r(zero_, window_);
    for (const auto& [k, v] : c_) r.c_.emplace(-k, v);
    return r;
  }
  // z -> s z for s = +1 or -1.
  Laurent sign_twisted() const {
    Laurent r(zero_, window_);
    for (const auto& [k, v] : c_) r.c_.emplace(k, (k % 2) ? -v : v);
    return r;
  }
  // Value at z = 1 or z = -1 (the series substitution z -> +-1).
  R at_unit(int s) const {
    R acc = zero_;
    for (const auto& [k, v] : c_) {
      if (s < 0 && (k % 2)) acc -= v;
      else acc += v;
    }
    return acc;
  }
  // Evaluation at an element of the coefficient ring; requires k >= 0.
  R evaluate(const R& z) const {
    if (!c_.empty() && c_.begin()->first < 0) throw std::domain_error("Laurent::evaluate: negative power");
    R acc = zero_;
    int prev = max_power();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      for (; prev > it->first; --prev) acc = acc * z;
      acc += it->second;
    }
    for (; prev > 0; --prev) acc = acc * z;
    return acc;
  }

 private:
  static bool is_zero_elem(const R& v) { return detail::ring_is_zero(v); }
  static std::optional<int> merge_window(std::optional<int> a, std::optional<int> b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
  }
  R zero_;
  std::optional<int> window_;
  std::map<int, R> c_;
};

template <class R>
Laurent<R> zero_like(const Laurent<R>& L) {
  return Laurent<R>(L.zero(), L.window());
}
template <class R>
Laurent<R> one_like(const Laurent<R>& L) {
  return Laurent<R>::constant(one_like(L.zero()), L.window());
}
template <class R>
bool is_zero(const Laurent<R>& L) {
  return L.is_zero();
}

}  // namespace incseq
