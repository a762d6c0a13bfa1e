#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "incseq/rational.hpp"

namespace incseq {

inline constexpr int kMaxVars = 16;
inline constexpr int kMaxGroups = 4;

// Exponent vector, one byte per variable slot, packed into two words.
struct Monomial {
  std::uint64_t w[2] = {0, 0};

  int exponent(int slot) const { return static_cast<int>((w[slot >> 3] >> ((slot & 7) * 8)) & 0xff); }
  void set_exponent(int slot, int e);
  int total_degree() const;
  bool is_one() const { return w[0] == 0 && w[1] == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.w[0] == b.w[0] && a.w[1] == b.w[1]; }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.w[0] != b.w[0] ? a.w[0] < b.w[0] : a.w[1] < b.w[1];
  }
  // Throws on exponent overflow (any exponent reaching 128).
  friend Monomial operator*(const Monomial& a, const Monomial& b);
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    std::uint64_t h = m.w[0] * 0x9E3779B97F4A7C15ULL ^ (m.w[1] + 0x632BE59BD9B4E019ULL + (m.w[0] << 6));
    return static_cast<size_t>(h ^ (h >> 29));
  }
};

// Truncation ideal. Every variable slot belongs to one degree group; a
// monomial survives iff its degree in each bounded group is within bound.
// With a single group this is the plain total-degree truncation.
struct Grading {
  std::array<std::uint8_t, kMaxVars> group{};
  std::array<int, kMaxGroups> bound{{-1, -1, -1, -1}};

  static Grading total(int D);
  Grading& assign(int slot, int group_id);
  Grading& set_bound(int group_id, int b);

  std::array<int, kMaxGroups> degrees(const Monomial& m) const;
  bool admits(const Monomial& m) const;
  bool bounded(int slot) const { return bound[group[static_cast<size_t>(slot)]] >= 0; }

  friend bool operator==(const Grading& a, const Grading& b) { return a.group == b.group && a.bound == b.bound; }
};

// Multivariate polynomial over Rational modulo a Grading. Terms are kept
// sorted by monomial with no zero coefficients.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(Grading g) : g_(g) {}

  static MultiPoly constant(const Rational& c, const Grading& g);
  static MultiPoly variable(int slot, const Grading& g);
  static MultiPoly monomial(const Monomial& m, const Rational& c, const Grading& g);

  const Grading& grading() const { return g_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial{}); }
  // Largest total degree over the given slots (-1 for zero).
  int degree_in(const std::vector<int>& slots) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly& operator*=(const Rational& c);
  MultiPoly operator-() const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // Nonzero constant term and every other term nilpotent.
  bool is_unit() const;
  // Reciprocal of an element with nonzero constant term whose other terms
  // are nilpotent in the truncation.
  MultiPoly reciprocal() const;
  // Keeps terms passing the predicate.
  MultiPoly filtered(const std::function<bool(const Monomial&)>& keep) const;
  // Substitutes a value for a variable in an unbounded group.
  MultiPoly evaluate(int slot, const Rational& value) const;
  // Re-reads this polynomial in a different (compatible) grading, dropping
  // terms the new grading does not admit.
  MultiPoly regraded(const Grading& g) const;
  // Coefficient of var^e viewed as a polynomial in the remaining variables.
  MultiPoly coefficient_of(int slot, int e) const;

  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  friend class MultiPolyBuilder;
  void check_same(const MultiPoly& o) const;
  Grading g_{};
  std::vector<Term> terms_;
};

// Accumulates terms in a hash table and produces a canonical MultiPoly.
class MultiPolyBuilder {
 public:
  explicit MultiPolyBuilder(const Grading& g) : g_(g) {}
  void add(const Monomial& m, const Rational& c);
  void addmul(const Monomial& m, const Rational& a, const Rational& b);
  MultiPoly build();

 private:
  Grading g_;
  std::vector<MultiPoly::Term> terms_;
  std::unordered_map<Monomial, size_t, MonomialHash> index_;
};

MultiPoly pow(const MultiPoly& p, int e);
// exp(p) for p with zero constant term and nilpotent terms.
MultiPoly exp(const MultiPoly& p);

inline MultiPoly zero_like(const MultiPoly& p) { return MultiPoly(p.grading()); }
inline MultiPoly one_like(const MultiPoly& p) { return MultiPoly::constant(Rational(1), p.grading()); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace incseq
