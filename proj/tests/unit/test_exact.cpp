#include <random>

#include "doctest.h"
#include "incseq/matrix.hpp"
#include "incseq/multipoly.hpp"
#include "incseq/permutation.hpp"
#include "incseq/pfaffian_checks.hpp"
#include "incseq/series.hpp"

using namespace incseq;

namespace {

// Leibniz formula over all permutations: the independent determinant oracle.
template <class R>
R leibniz(const RingMatrix<R>& m) {
  const int n = static_cast<int>(m.rows());
  R acc = zero_like(m.proto());
  for (const Perm& p : all_permutations(n)) {
    R term = one_like(m.proto());
    for (int i = 0; i < n; ++i) term = term * m(static_cast<size_t>(i), static_cast<size_t>(p[static_cast<size_t>(i)] - 1));
    if (sign(p) < 0)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// Pfaffian oracle: sum over perfect matchings with the crossing-number sign.
Rational matching_pf(const RingMatrix<Rational>& m) {
  const int n = static_cast<int>(m.rows());
  std::vector<std::pair<int, int>> cur;
  Rational acc(0);
  std::vector<char> used(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self) -> void {
    int i = 0;
    while (i < n && used[static_cast<size_t>(i)]) ++i;
    if (i == n) {
      int cross = 0;
      for (auto [a, b] : cur)
        for (auto [c, d] : cur)
          if (a < c && c < b && b < d) ++cross;
      Rational term(cross % 2 ? -1 : 1);
      for (auto [a, b] : cur) term *= m(static_cast<size_t>(a), static_cast<size_t>(b));
      acc += term;
      return;
    }
    used[static_cast<size_t>(i)] = 1;
    for (int j = i + 1; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      used[static_cast<size_t>(j)] = 1;
      cur.emplace_back(i, j);
      self(self);
      cur.pop_back();
      used[static_cast<size_t>(j)] = 0;
    }
    used[static_cast<size_t>(i)] = 0;
  };
  rec(rec);
  return acc;
}

RingMatrix<Rational> random_matrix(std::mt19937_64& rng, size_t n, bool skew) {
  std::uniform_int_distribution<int> d(-4, 4);
  RingMatrix<Rational> m(n, Rational());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (skew && j <= i) continue;
      m(i, j) = Rational(d(rng), 1 + (d(rng) + 4) % 3);
      if (skew) m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace

TEST_CASE("rational arithmetic is canonical") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational::parse("-6/8") == Rational(-3, 4));
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(6, 2) == Rational(15));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
  CHECK((Rational(1, 3) + Rational(1, 6)).str() == "1/2");
}

TEST_CASE("series exp and reciprocal") {
  Series e = series_exp(Series::t(8));
  for (int k = 0; k <= 8; ++k) CHECK(e.coeff(k) == Rational(1) / factorial(k));
  Series one_minus_t = Series::constant(1, 8) - Series::t(8);
  Series geo = one_minus_t.reciprocal();
  for (int k = 0; k <= 8; ++k) CHECK(geo.coeff(k) == Rational(1));
  CHECK(exp_monomial(Rational(1, 2), 2, 6) == series_exp(Series::monomial(2, Rational(1, 2), 6)));
  CHECK_THROWS(e.coeff(9));
  // Truncation discipline: results carry the smaller order.
  CHECK((Series::t(3) * Series::t(9)).order() == 3);
}

TEST_CASE("multipoly graded arithmetic") {
  Grading g = Grading::total(4);
  MultiPoly x = MultiPoly::variable(0, g), y = MultiPoly::variable(1, g);
  MultiPoly s = x + y;
  MultiPoly sq = s * s;
  Monomial xy;
  xy.set_exponent(0, 1);
  xy.set_exponent(1, 1);
  CHECK(sq.coeff(xy) == Rational(2));
  CHECK(pow(s, 5).is_zero());  // beyond the total degree bound
  MultiPoly one = MultiPoly::constant(1, g);
  MultiPoly inv = (one - x).reciprocal();
  CHECK(inv * (one - x) == one);
  CHECK(exp(x) * exp(-x) == one);
}

TEST_CASE("determinant agrees with the Leibniz oracle") {
  std::mt19937_64 rng(7);
  for (size_t n = 0; n <= 6; ++n)
    for (int rep = 0; rep < 5; ++rep) {
      auto m = random_matrix(rng, n, false);
      CHECK(det(m) == leibniz(m));
    }
  // Series entries exercise the minor expansion and the unit-pivot path.
  for (size_t n : {3u, 8u}) {
    auto m = RingMatrix<Series>::build(n, n, Series(5), [&](size_t i, size_t j) {
      Series s = Series::constant(Rational(i == j ? 2 : 0), 5);
      s += Series::monomial(1 + static_cast<int>((i + j) % 3), Rational(static_cast<int>(i) - static_cast<int>(j)), 5);
      return s;
    });
    if (n <= 6) CHECK(det(m) == leibniz(m));
    CHECK(det(m) == detail::det_by_minors(m));
  }
  CHECK_THROWS_AS(det(RingMatrix<Rational>(2, 3, Rational())), dimension_error);
}

TEST_CASE("pfaffian matches matchings and squares to the determinant") {
  std::mt19937_64 rng(11);
  for (size_t n : {0u, 2u, 4u, 6u, 8u}) {
    auto m = random_matrix(rng, n, true);
    Rational pf = pfaffian(m);
    CHECK(pf == matching_pf(m));
    CHECK(pf * pf == det(m));
    CHECK(pf == detail::pfaffian_by_matchings(m));
  }
  CHECK_THROWS_AS(pfaffian(RingMatrix<Rational>(3, Rational())), structure_error);
  RingMatrix<Rational> bad(2, Rational());
  bad(0, 1) = 1;
  bad(1, 0) = 1;
  CHECK_THROWS_AS(pfaffian(bad), structure_error);
}

TEST_CASE("bordered pfaffian puts the border first") {
  RingMatrix<Rational> a(1, Rational());
  CHECK(bordered_pfaffian<Rational>({Rational(5)}, a) == Rational(5));
  std::mt19937_64 rng(3);
  auto m = random_matrix(rng, 3, true);
  std::vector<Rational> v{1, 2, 3};
  RingMatrix<Rational> b(4, Rational());
  for (size_t j = 0; j < 3; ++j) {
    b(0, j + 1) = v[j];
    b(j + 1, 0) = -v[j];
    for (size_t k = 0; k < 3; ++k) b(j + 1, k + 1) = m(j, k);
  }
  CHECK(bordered_pfaffian(v, m) == matching_pf(b));
}

TEST_CASE("rank") {
  RingMatrix<Rational> m(3, Rational());
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(2, 2) = 3;
  CHECK(rank(m) == 2);
  CHECK(sparse_rank({{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}, {{2, 3}}}) == 2);
}

TEST_CASE("de Bruijn identity on random discrete instances") {
  for (int n = 2; n <= 4; ++n)
    for (int pts = 2; pts <= 4; ++pts)
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto inst = random_de_bruijn_instance(seed * 97 + static_cast<std::uint64_t>(n * 10 + pts), n, pts);
        auto sides = de_bruijn_sides(inst);
        CHECK(sides.lhs == sides.rhs);
      }
}

TEST_CASE("Gordon's identity") {
  for (int l = 1; l <= 3; ++l)
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      OddTable x = random_odd_table(seed + 17, 4 * l + 4);
      GordonReport r = gordon_identity_check(x, l);
      CHECK(r.even_ok);
      CHECK(r.odd_ok);
    }
  CHECK_THROWS_AS(OddTable::from_window({Rational(1), Rational(0), Rational(1)}), structure_error);
}

TEST_CASE("laurent reflection and evaluation") {
  Laurent<Rational> p(Rational(0));
  p.set(-1, 2);
  p.set(2, 3);
  CHECK(p.reflected().coeff(1) == Rational(2));
  CHECK(p.at_unit(1) == Rational(5));
  CHECK(p.at_unit(-1) == Rational(1));
}
