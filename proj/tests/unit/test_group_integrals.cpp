#include <random>

#include "doctest.h"
#include "incseq/ensembles.hpp"
#include "incseq/group_integrals.hpp"

using namespace incseq;

namespace {

Laurent<Rational> random_laurent(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(-3, 3);
  Laurent<Rational> f(Rational(0));
  for (int k = lo; k <= hi; ++k) f.set(k, Rational(d(rng)));
  f.set(0, Rational(1 + std::abs(d(rng))));
  return f;
}

}  // namespace

TEST_CASE("bessel and small D series") {
  const int N = 8;
  CHECK(D_series(DKind::D, 1, N) == bessel_I(0, N));
  CHECK(D_series(DKind::D, 0, N) == Series::constant(1, N));
  CHECK(bessel_I(-2, N) == bessel_I(2, N));
  // (3!)^2 [t^6] D_2 counts permutations of 3 with lis <= 2.
  CHECK(D_series(DKind::D, 2, N).coeff(6) * factorial(3) * factorial(3) == Rational(5));
}

TEST_CASE("Poisson series reproduce the brute-force counts") {
  for (Symmetry s : {Symmetry::U, Symmetry::O, Symmetry::S, Symmetry::UU, Symmetry::u}) {
    const int nmax = (s == Symmetry::U || s == Symmetry::O || s == Symmetry::S) ? 5 : 4;
    for (int n = 0; n <= nmax; ++n) {
      auto table = f_count_table(s, n, 5);
      for (int l = 0; l <= 5; ++l) {
        INFO(to_string(s), " n=", n, " l=", l);
        CHECK(f_from_series(s, n, l) == table[static_cast<size_t>(l)]);
      }
    }
  }
}

TEST_CASE("D-series route equals the direct group integral") {
  for (Symmetry s : {Symmetry::U, Symmetry::O, Symmetry::S, Symmetry::UU, Symmetry::u})
    for (int l = 0; l <= 5; ++l) {
      INFO(to_string(s), " l=", l);
      CHECK(P_series(s, l, 10) == P_series_integral(s, l, 10));
    }
}

TEST_CASE("Weyl constant term agrees with the Toeplitz determinant") {
  std::mt19937_64 rng(5);
  for (int l = 0; l <= 3; ++l)
    for (int rep = 0; rep < 3; ++rep) {
      auto f = random_laurent(rng, -1, 2), g = random_laurent(rng, 0, 2);
      CHECK(weyl_ct_unitary(l, f, g) == integral_det<Rational>({Family::U, l}, f, g));
    }
  CHECK_THROWS_AS(weyl_ct_unitary(4, Laurent<Rational>(Rational(0)), Laurent<Rational>(Rational(0))), std::length_error);
}

TEST_CASE("expected determinants at small dimension") {
  Laurent<Rational> g(Rational(0));
  g.set(0, 1);
  g.set(1, 2);
  SymmetricWeight<Rational> w{[&](int j) { return (g * g.reflected()).coeff(j); }, g.at_unit(1), g.at_unit(-1)};
  // O-(1) = {-1}, O+(1) = {1}, O+(2) = SO(2), O-(2) reflections with eigenvalues +-1.
  CHECK(expect_det<Rational>({Family::O_plus, 1}, w, Rational(0)) == Rational(3));
  CHECK(expect_det<Rational>({Family::O_minus, 1}, w, Rational(0)) == Rational(-1));
  CHECK(expect_det<Rational>({Family::O_minus, 2}, w, Rational(0)) == Rational(-3));
  CHECK(expect_det<Rational>({Family::O_plus, 2}, w, Rational(0)) == Rational(5));
  CHECK(expect_det<Rational>({Family::O_plus, 0}, w, Rational(0)) == Rational(1));
  CHECK_THROWS(expect_det<Rational>({Family::O_minus, 0}, w, Rational(0)));
}

TEST_CASE("generalized Poisson models reproduce the extended counts") {
  const int N = 6, B = 6;
  AlphaLayout L = AlphaLayout::make(N, B);
  for (ExtendedSymmetry s : {ExtendedSymmetry::O, ExtendedSymmetry::S})
    for (int l = 0; l <= 4; ++l) {
      MultiPoly G = ftilde_generating(s, l, L);
      for (int n = 0; n <= N; ++n) {
        auto tab = ftilde_table(s, n, l);
        for (int m = 0; m <= n; ++m) {
          INFO(to_string(s), " n=", n, " m=", m, " l=", l);
          const bool sym_S = s == ExtendedSymmetry::S;
          CHECK(ftilde_from_series(G, L, n, sym_S ? 0 : m, sym_S ? m : 0) == tab[static_cast<size_t>(m)][0][static_cast<size_t>(l)]);
        }
      }
    }
  AlphaLayout Lu = AlphaLayout::make(4, 4);
  for (int l = 0; l <= 5; ++l) {
    MultiPoly G = ftilde_generating(ExtendedSymmetry::u, l, Lu);
    for (int n = 0; n <= 4; ++n) {
      auto tab = ftilde_table(ExtendedSymmetry::u, n, l);
      for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b) {
          INFO("u n=", n, " a=", a, " b=", b, " l=", l);
          CHECK(ftilde_from_series(G, Lu, n, a, b) == tab[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(l)]);
        }
    }
  }
  CHECK(ftilde_from_series(ftilde_generating(ExtendedSymmetry::O, 2, L), L, 3, 1, 0) == Rational(3));
}

TEST_CASE("rotation determinant counts the rotation ensemble") {
  for (int L = 0; L <= 6; ++L)
    for (int n = 0; n <= 2; ++n) {
      INFO("L=", L, " n=", n);
      CHECK(f_rot_from_series(n, L) == f_count(Symmetry::rot, n, L));
    }
}

TEST_CASE("formal Szego limits") {
  for (DKind k : {DKind::D, DKind::pp, DKind::pm, DKind::mp})
    for (int l = 0; l <= 4; ++l) {
      INFO(to_string(k), " l=", l);
      CHECK(formal_szego_check(k, l, 2 * l + 4).agree);
    }
  CHECK(formal_szego_check(DKind::D, 3, 12).first_disagreement == 8);
  CHECK(formal_szego_check(DKind::pm, 3, 12).first_disagreement == 7);
  CHECK(formal_szego_check(DKind::D, 4, 12).monotone);
  // D--_l already differs from e^{t^2/2} in degree 2l.
  CHECK(formal_szego_check(DKind::mm, 3, 12).first_disagreement == 6);
}
