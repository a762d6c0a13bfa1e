#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

namespace incseq {

// Exact rational backed by GMP. Always canonical (lowest terms, positive
// denominator). Arithmetic goes through the C API to avoid gmpxx expression
// templates leaking into user code.
class Rational {
 public:
  Rational() = default;
  template <class I, std::enable_if_t<std::is_integral_v<I>, int> = 0>
  Rational(I v) : v_(static_cast<long>(v)) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Accepts "a", "-a", "a/b".
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  bool is_one() const { return mpq_cmp_si(v_.get_mpq_t(), 1, 1) == 0; }
  bool is_integer() const { return mpz_cmp_ui(v_.get_den_mpz_t(), 1) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }

  std::string str() const { return v_.get_str(); }
  // Converts an integer value to long; throws if it is not an integer or too large.
  long to_long() const;

  Rational& operator+=(const Rational& o) {
    mpq_add(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
    return *this;
  }
  Rational& operator/=(const Rational& o);

  Rational operator-() const {
    Rational r(*this);
    mpq_neg(r.v_.get_mpq_t(), r.v_.get_mpq_t());
    return r;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // acc += a * b without a heap temporary per call.
  friend void addmul(Rational& acc, const Rational& a, const Rational& b);
  friend void submul(Rational& acc, const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class v_;
};

void addmul(Rational& acc, const Rational& a, const Rational& b);
void submul(Rational& acc, const Rational& a, const Rational& b);

Rational factorial(int n);
Rational binomial(int n, int k);
Rational pow(const Rational& base, int exponent);

// Generic ring helpers used by the matrix templates.
inline Rational zero_like(const Rational&) { return Rational(); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& r) { return r.is_zero(); }

}  // namespace incseq
