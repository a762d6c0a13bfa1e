#include "doctest.h"
#include "incseq/symfunc.hpp"

using namespace incseq;

namespace {

Grading graded(int D) {
  Grading g;
  g.set_bound(0, D);
  return g;
}

std::vector<int> range(int a, int b) {
  std::vector<int> v;
  for (int i = a; i < b; ++i) v.push_back(i);
  return v;
}

MultiPoly var(int s, const Grading& g) { return MultiPoly::variable(s, g); }

bool interlaces(const Partition& big, const Partition& small) {
  // big_1 >= small_1 >= big_2 >= small_2 >= ...
  for (size_t i = 0; i < big.size() || i < small.size(); ++i) {
    int b = i < big.size() ? big[i] : 0, s = i < small.size() ? small[i] : 0;
    int bn = i + 1 < big.size() ? big[i + 1] : 0;
    if (s > b || s < bn) return false;
  }
  return true;
}

std::string failures(const Report& r) {
  std::string s;
  for (const Check& c : r.checks)
    if (!c.pass) s += c.name + " (" + c.detail + "); ";
  return s;
}

}  // namespace

TEST_CASE("complete and elementary functions") {
  Grading g = graded(4);
  Alphabet A({0, 1}, {}, g, 4);
  CHECK(A.h(1) == var(0, g) + var(1, g));
  CHECK(A.h(-1).is_zero());
  CHECK(A.e(2) == var(0, g) * var(1, g));
  CHECK(A.e(3).is_zero());
  Alphabet S({0}, {1}, g, 4);
  CHECK(S.h(2) == var(0, g) * var(0, g) + var(0, g) * var(1, g));
}

TEST_CASE("E(t)H(-t) = 1") {
  Grading g = graded(7);
  for (const Alphabet& A : {Alphabet({0, 1, 2}, {}, g, 7), Alphabet({0, 1}, {2, 3}, g, 7)}) {
    GenFun p = genfun_mul(A.E(), genfun_scale(A.H(), Rational(-1)));
    CHECK(p[0] == A.one());
    for (size_t m = 1; m <= 7; ++m) CHECK(p[m].is_zero());
    // And the generator-level inverse.
    HGen e = e_from_h(A.h_gen(), 7, A.zero());
    for (int m = 0; m <= 7; ++m) CHECK(e(m) == A.e(m));
  }
}

TEST_CASE("Jacobi-Trudi against semistandard tableaux") {
  for (int k = 1; k <= 3; ++k) {
    Grading g = graded(6);
    Alphabet A(range(0, k), {}, g, 6);
    for (const Partition& p : partitions_up_to(6)) {
      INFO("k=" << k << " lambda=" << to_string(p));
      CHECK(A.schur(p) == schur_tableaux(p, A));
      CHECK(schur_from_h(p, A.h_gen(), A.zero()) == schur_from_e(p, [&](int m) { return A.e(m); }, A.zero()));
    }
  }
  Grading g = graded(6);
  Alphabet A({0, 1}, {}, g, 6);
  const MultiPoly x1 = var(0, g), x2 = var(1, g);
  CHECK(A.schur({1}) == x1 + x2);
  CHECK(A.schur({2, 1}) == x1 * x1 * x2 + x1 * x2 * x2);
  CHECK(A.schur({1, 1, 1}).is_zero());
  CHECK(schur_from_h({1, 1, 1}, A.h_gen(), A.zero()).is_zero());
}

TEST_CASE("super Schur with the y part set to zero") {
  Grading g = graded(6);
  Alphabet ord({0, 1}, {}, g, 6), sup({0, 1}, {2, 3}, g, 6);
  for (const Partition& p : partitions_up_to(6)) {
    MultiPoly y0 = sup.schur(p).filtered([](const Monomial& m) { return m.exponent(2) == 0 && m.exponent(3) == 0; });
    CHECK(y0 == ord.schur(p));
  }
  // s_(1,1)(x1/y1) = e_2(x1/y1) = x1 y1 + y1^2.
  Alphabet s1({0}, {1}, g, 6);
  CHECK(s1.schur({1, 1}) == var(0, g) * var(1, g) + var(1, g) * var(1, g));
  // hook condition: lambda_2 <= 1 for (1|1)
  CHECK(s1.schur({2, 2}).is_zero());
  CHECK(s1.schur({2, 2}) == schur_from_h({2, 2}, s1.h_gen(), s1.zero()));
}

TEST_CASE("s-tilde by 2-quotient and by phi_2") {
  Grading g = graded(4);
  Alphabet A({0, 1}, {}, g, 4);
  for (const Partition& p : partitions_up_to(8)) {
    INFO(to_string(p));
    CHECK(schur_tilde(p, A) == schur_tilde_phi2(p, A));
  }
  CHECK(schur_tilde({1}, A).is_zero());
  CHECK(schur_tilde({2}, A) == A.h(1));
  CHECK(schur_tilde({1, 1}, A) == A.h(1));
  CHECK(schur_tilde_phi2({1, 1}, A) == A.h(1));
}

TEST_CASE("perp operators") {
  Grading g = graded(5);
  g.assign(4, 1).assign(5, 2);
  Alphabet A({0, 1, 2}, {}, g, 5);
  const MultiPoly al = var(4, g), be = var(5, g);
  HGen Eh = perp(PerpKind::E, al, A.h_gen(), 5);
  HGen Hh = perp(PerpKind::H, be, A.h_gen(), 5);
  // E-perp(alpha) H(u) = (1 + alpha u) H(u), H-perp(beta) H(u) = (1 - beta u)^{-1} H(u)
  for (int m = 0; m <= 5; ++m) {
    CHECK(Eh(m) == A.h(m) + al * A.h(m - 1));
    MultiPoly s = A.zero();
    for (int k = 0; k <= m; ++k) s += pow(be, k) * A.h(m - k);
    CHECK(Hh(m) == s);
  }
  // The e-side identities follow from the h side through E(u)H(-u) = 1.
  HGen Ee = perp_on_e(PerpKind::E, al, [&](int m) { return A.e(m); }, 5);
  HGen He = perp_on_e(PerpKind::H, be, [&](int m) { return A.e(m); }, 5);
  HGen Ee2 = e_from_h(Eh, 5, A.zero()), He2 = e_from_h(Hh, 5, A.zero());
  for (int m = 0; m <= 5; ++m) {
    CHECK(Ee(m) == Ee2(m));
    CHECK(He(m) == He2(m));
  }
  CHECK(schur_from_h({1}, Eh, A.zero()) == A.schur({1}) + al);
  HGen id = perp(PerpKind::H, A.zero(), A.h_gen(), 5);
  for (int m = 0; m <= 5; ++m) CHECK(id(m) == A.h(m));
  // Strip expansions.
  for (const Partition& lam : partitions_up_to(5)) {
    MultiPoly vert = A.zero(), horiz = A.zero();
    for (const Partition& mu : partitions_up_to(weight(lam))) {
      const int d = weight(lam) - weight(mu);
      if (interlaces(lam, mu)) horiz += pow(be, d) * A.schur(mu);
      if (interlaces(conjugate(lam), conjugate(mu))) vert += pow(al, d) * A.schur(mu);
    }
    INFO(to_string(lam));
    CHECK(schur_from_h(lam, Eh, A.zero()) == vert);
    CHECK(schur_from_h(lam, Hh, A.zero()) == horiz);
  }
}

TEST_CASE("schur_sum basics") {
  Grading g = graded(4);
  g.assign(3, 1).set_bound(1, 3);
  Alphabet A({0, 1, 2}, {}, g, 4);
  SumWeights w{var(3, g), A.zero()};
  CHECK(schur_sum(SumVariant::all, 0, w, A) == A.one());
  MultiPoly s = schur_sum(SumVariant::orthogonal_alpha, 2, w, A);
  MultiPoly deg1 = s.filtered([](const Monomial& m) { return m.exponent(0) + m.exponent(1) + m.exponent(2) == 1; });
  CHECK(deg1 == var(3, g) * A.schur({1}));
  CHECK_THROWS_AS(parse_sum_variant("nope"), usage_error);
  for (SumVariant v : {SumVariant::unitary_pair, SumVariant::tilde_column}) CHECK(parse_sum_variant(to_string(v)) == v);
  CHECK_THROWS_AS(schur_sum(SumVariant::unitary_pair, 1, w, A), usage_error);
}

TEST_CASE("identity registry, small scale") {
  IdentityContext ctx;
  ctx.k = 4;
  ctx.D = 6;
  ctx.ab_bound = 2;
  for (const std::string& tag : identity_tags())
    for (int l = 0; l <= 2; ++l) {
      IdentityResult r = verify_identity(tag, l, ctx);
      INFO(tag << " l=" << l);
      CHECK_MESSAGE(r.report.ok(), failures(r.report));
      CHECK(!r.report.checks.empty());
    }
  CHECK_THROWS_AS(verify_identity("no-such-tag", 1, ctx), usage_error);
  ctx.D = 0;
  CHECK_THROWS_AS(verify_identity("orthogonal", 1, ctx), usage_error);
}

TEST_CASE("unitary-type identities at l = 4") {
  IdentityContext ctx;
  for (const char* tag : {"unitary-pair", "tilde-pair", "tilde-square"}) {
    IdentityResult r = verify_identity(tag, 4, ctx);
    CHECK_MESSAGE(r.report.ok(), failures(r.report));
  }
}

TEST_CASE("identity sides are sensitive to the summation range") {
  Grading g = graded(6);
  g.assign(4, 1).set_bound(1, 3).assign(5, 2).set_bound(2, 3);
  Alphabet A({0, 1, 2, 3}, {}, g, 6);
  SumWeights w{var(4, g), var(5, g)};
  // Sp(2): shapes lambda^2 of length <= 2 only; length <= 4 is different.
  MultiPoly sp = schur_sum(SumVariant::symplectic, 2, w, A);
  CHECK_FALSE(sp == schur_sum(SumVariant::symplectic, 4, w, A));
  // Dual hyperoctahedral identity at l = 1: E_U(1) det f(U)H(U^+) = sum_b f_b h_b,
  // f = (1 - beta u)^{-1} H(u). It holds with mu'_2 <= 2 and fails with mu'_2 <= 1.
  MultiPoly rhs = A.zero();
  for (int b = 0; b <= 6; ++b) {
    MultiPoly fb = A.zero();
    for (int k = 0; k <= b; ++k) fb += pow(var(5, g), k) * A.h(b - k);
    rhs += fb * A.h(b);
  }
  rhs = A.E_at(var(4, g)) * rhs;
  CHECK(schur_sum(SumVariant::tilde_column, 2, w, A) == rhs);
  CHECK_FALSE(schur_sum(SumVariant::tilde_column, 1, w, A) == rhs);
  // alpha = 1 in the O-alpha sum is the unrestricted-parity sum.
  SumWeights one{A.one(), A.zero()};
  CHECK(schur_sum(SumVariant::orthogonal_alpha, 3, one, A) == schur_sum(SumVariant::all, 3, w, A));
}

TEST_CASE("pfaffian route for the alpha-weighted orthogonal sum") {
  Grading g = graded(6);
  g.assign(4, 1);
  Alphabet A({0, 1, 2, 3}, {}, g, 6);
  for (int l : {0, 2, 4}) {
    PfaffianRoute r = pfaffian_route_O(l, A, 4);
    INFO("l=" << l);
    CHECK_MESSAGE(r.report.ok(), failures(r.report));
    CHECK(r.value.constant_term() == Rational(1));
  }
  // The uncorrected M0' entries agree for l = 2 (empty pfaffian) but not beyond.
  CHECK(pfaffian_route_O(2, A, 4).literal == pfaffian_route_O(2, A, 4).value);
  CHECK_FALSE(pfaffian_route_O(4, A, 4).literal == pfaffian_route_O(4, A, 4).value);
  CHECK_THROWS_AS(pfaffian_route_O(3, A, 4), usage_error);
  // alpha = 0 gives the sum of s_{2 lambda}.
  MultiPoly a0 = pfaffian_route_O(2, A, 4).value.filtered([](const Monomial& m) { return m.exponent(4) == 0; });
  CHECK(a0 == schur_sum(SumVariant::orthogonal, 2, SumWeights{A.zero(), A.zero()}, A));
  // Odd l through the bordered pair kernel.
  for (int l : {1, 3}) {
    MultiPoly lhs = schur_sum(SumVariant::orthogonal_alpha, l, SumWeights{var(4, g), A.zero()}, A);
    CHECK(pfaffian_direct_O(l, A, 4) == lhs);
  }
}

TEST_CASE("pair-value pfaffian lemma") {
  for (int l = 1; l <= 5; ++l) {
    Report r = pair_lemma_check(l, 7);
    CHECK_MESSAGE(r.ok(), failures(r));
  }
}
