#include <random>

#include "doctest.h"
#include "incseq/opuc.hpp"

using namespace incseq;

namespace {

// g(z) = 1 + t (a z + b z^2) + t^2 c z with small random integers.
Laurent<Series> random_weight(std::uint64_t seed, int order) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(-2, 2);
  Laurent<Series> g(Series(order), 12);
  g.set(0, Series::constant(1, order));
  g.set(1, Series::monomial(1, d(rng), order) + Series::monomial(2, d(rng), order));
  g.set(2, Series::monomial(1, d(rng), order));
  return g;
}

std::string failures(const Report& r) {
  std::string s;
  for (const Check& c : r.checks)
    if (!c.pass) s += c.name + "; ";
  return s;
}

}  // namespace

TEST_CASE("trivial weight gives monomials") {
  MomentSequence c;
  c.order = 4;
  c.window = 10;
  for (int j = -10; j <= 10; ++j) c.values.push_back(Series::constant(j == 0 ? 1 : 0, 4));
  OPUCData d = opuc_build(c, 5);
  for (int j = 0; j <= 5; ++j) {
    CHECK(d.N[static_cast<size_t>(j)] == Series::constant(1, 4));
    for (int i = 0; i < j; ++i) CHECK(d.pi[static_cast<size_t>(j)][static_cast<size_t>(i)].is_zero());
  }
  CHECK(opuc_identities_check(d, c).ok());
  // With N_0 = 1 the product forms of the half-line norms hold without the N_0 factor.
  HalfLineFamily pm = halfline_build(c, HalfLine::pm, 3);
  for (int l = 0; l <= 3; ++l) CHECK(pm.N[static_cast<size_t>(l)] == Series::constant(pow(Rational(4), -l), 4));
  CHECK(halfline_relations_check(c, 3).ok());
}

TEST_CASE("Bessel weight polynomials") {
  const int N = 8;
  MomentSequence c = bessel_moments(N, 12);
  OPUCData d = opuc_build(c, 6);
  CHECK(d.N[0] == bessel_I(0, N));
  // pi_1(0) = -I_1/I_0 by series division
  CHECK(d.at_zero(1) == -(bessel_I(1, N) * bessel_I(0, N).reciprocal()));
  CHECK(d.at_zero(1).coeff(1) == Rational(-1));
  CHECK(d.at_zero(1).coeff(3) == Rational(1, 2));
  Report r = opuc_identities_check(d, c);
  CHECK_MESSAGE(r.ok(), failures(r));
  // The N+- product without N_0 needs N_0 = 1; with the Bessel weight N_0 = I_0 != 1.
  HalfLineFamily pm = halfline_build(c, HalfLine::pm, 1);
  const Series one = Series::constant(1, N);
  Series literal = one + d.at_zero(1);
  CHECK_FALSE(pm.N[0] == literal);
  CHECK(pm.N[0] == d.N[0] * literal);
}

TEST_CASE("degenerate weight is reported with its degree") {
  MomentSequence c;
  c.order = 3;
  c.window = 3;
  for (int j = -3; j <= 3; ++j) c.values.push_back(Series::constant(j == 1 || j == -1 ? 1 : 0, 3));
  try {
    opuc_build(c, 2);
    FAIL("expected a degeneracy error");
  } catch (const degeneracy_error& e) {
    CHECK(e.degree() == 0);
  }
}

TEST_CASE("product formulas and their consequences") {
  const int N = 10, L = 3;
  Laurent<Series> bessel = exp_tz(N, auto_window(2 * L + 2, N));
  for (const Report& r : {verify_products(bessel, L, N), d_series_products_check(L, N)}) CHECK_MESSAGE(r.ok(), failures(r));
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    Laurent<Series> g = random_weight(seed, N);
    Report r = verify_products(g, 2, N);
    CHECK_MESSAGE(r.ok(), failures(r));
    Report a = alpha_formula_check(g, 2, 6);
    CHECK_MESSAGE(a.ok(), failures(a));
    Report u = unitary_alpha_beta_check(g, 2, 6);
    CHECK_MESSAGE(u.ok(), failures(u));
  }
}

TEST_CASE("tail products") {
  Report r = szego_tail_check(3, 10);
  for (const Check& c : r.checks) {
    INFO(c.name);
    const bool literal_mm = c.name.rfind("e^{-t^2/2} D--_l l=", 0) == 0;
    CHECK(c.pass == !literal_mm);
  }
}

TEST_CASE("half-line ladder and alpha formulae, Bessel weight") {
  const int N = 10;
  Report h = halfline_relations_check(bessel_moments(N, auto_window(8, N)), 3);
  CHECK_MESSAGE(h.ok(), failures(h));
  Laurent<Series> g = exp_tz(N, auto_window(8, N));
  Report a = alpha_formula_check(g, 3, N);
  CHECK_MESSAGE(a.ok(), failures(a));
  Report u = unitary_alpha_beta_check(g, 3, N);
  CHECK_MESSAGE(u.ok(), failures(u));
}

TEST_CASE("Poisson models by both routes") {
  Report r = p_alpha_routes_check(5, 6, 4);
  CHECK_MESSAGE(r.ok(), failures(r));
  AlphaLayout A = AlphaLayout::make(6, 4);
  // P^S_{2l+1} does not involve beta.
  MultiPoly s = P_alpha_opuc(ExtendedSymmetry::S, 3, A);
  for (const auto& term : s.terms()) CHECK(term.first.exponent(A.beta) == 0);
  CHECK_THROWS_AS(P_alpha_opuc(ExtendedSymmetry::u, 2, A), std::invalid_argument);
  // alpha = 0 recovers the plain Poisson series.
  Series p = P_series(Symmetry::O, 3, 6);
  MultiPoly q = P_alpha_opuc(ExtendedSymmetry::O, 3, A).filtered([&](const Monomial& m) { return m.exponent(A.alpha) == 0; });
  CHECK(q == A.embed(p));
}
