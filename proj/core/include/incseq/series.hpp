#pragma once

#include <string>
#include <vector>

#include "incseq/rational.hpp"

namespace incseq {

// Power series in one formal variable t, exact modulo t^(order+1).
// Binary operations return the smaller order of the two operands.
class Series {
 public:
  Series() : Series(0) {}
  explicit Series(int order);
  Series(int order, std::vector<Rational> coeffs);

  static Series constant(const Rational& c, int order);
  static Series monomial(int k, const Rational& c, int order);  // c t^k
  static Series t(int order) { return monomial(1, Rational(1), order); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int k) const { return c_.at(static_cast<size_t>(k)); }
  // Coefficient of t^k; k beyond the order is an error, not zero.
  const Rational& coeff(int k) const;
  void set(int k, const Rational& v);
  const std::vector<Rational>& coeffs() const { return c_; }

  Series truncated(int order) const;
  bool is_zero() const;
  // Smallest k with nonzero coefficient, or order()+1 for the zero series.
  int valuation() const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator*=(const Rational& c);
  Series operator-() const;

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  // Equality compares at the common order.
  friend bool operator==(const Series& a, const Series& b);

  bool is_unit() const { return !c_[0].is_zero(); }
  // Exact reciprocal; requires nonzero constant term.
  Series reciprocal() const;
  // Substitutes t -> c t.
  Series scaled_variable(const Rational& c) const;
  // Substitutes t -> t^k (order grows to k*order only up to the given cap).
  Series power_substitute(int k, int order) const;

  std::string str() const;

 private:
  std::vector<Rational> c_;
};

// exp(s) for s with zero constant term.
Series series_exp(const Series& s);
// exp(c t^k) to the given order.
Series exp_monomial(const Rational& c, int k, int order);
Series pow(const Series& s, int e);

inline Series zero_like(const Series& s) { return Series(s.order()); }
inline Series one_like(const Series& s) { return Series::constant(Rational(1), s.order()); }
inline bool is_zero(const Series& s) { return s.is_zero(); }

}  // namespace incseq
