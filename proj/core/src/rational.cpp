#include "incseq/rational.hpp"

#include <stdexcept>

namespace incseq {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
  return Rational(q);
}

long Rational::to_long() const {
  if (!is_integer() || !v_.get_num().fits_slong_p())
    throw std::range_error("Rational::to_long: " + str() + " is not a machine integer");
  return v_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(v_.get_mpq_t(), v_.get_mpq_t(), o.v_.get_mpq_t());
  return *this;
}

namespace {
mpq_t& scratch() {
  thread_local struct Tmp {
    mpq_t q;
    Tmp() { mpq_init(q); }
    ~Tmp() { mpq_clear(q); }
  } tmp;
  return tmp.q;
}
}  // namespace

void addmul(Rational& acc, const Rational& a, const Rational& b) {
  mpq_t& t = scratch();
  mpq_mul(t, a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_add(acc.v_.get_mpq_t(), acc.v_.get_mpq_t(), t);
}

void submul(Rational& acc, const Rational& a, const Rational& b) {
  mpq_t& t = scratch();
  mpq_mul(t, a.v_.get_mpq_t(), b.v_.get_mpq_t());
  mpq_sub(acc.v_.get_mpq_t(), acc.v_.get_mpq_t(), t);
}

Rational factorial(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(z);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(z);
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return Rational(1) / pow(base, -exponent);
  Rational r(1), b(base);
  while (exponent > 0) {
    if (exponent & 1) r *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return r;
}

}  // namespace incseq
