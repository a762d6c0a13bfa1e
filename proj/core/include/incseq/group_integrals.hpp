#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "incseq/ensembles.hpp"
#include "incseq/laurent.hpp"
#include "incseq/matrix.hpp"
#include "incseq/multipoly.hpp"
#include "incseq/series.hpp"

namespace incseq {

template <class R>
using CoeffFn = std::function<R(int)>;

// det(a(j-k)) for 0 <= j,k < l.
template <class R>
R toeplitz_det(int l, const CoeffFn<R>& a, const R& proto) {
  auto m = RingMatrix<R>::build(static_cast<size_t>(l), static_cast<size_t>(l), proto, [&](size_t j, size_t k) {
    return a(static_cast<int>(j) - static_cast<int>(k));
  });
  return det(m);
}

// det(a(j-k) + sign * a(j+k+shift)) for 0 <= j,k < l.
template <class R>
R hankel_det(int l, const CoeffFn<R>& a, int shift, int sign, const R& proto) {
  auto m = RingMatrix<R>::build(static_cast<size_t>(l), static_cast<size_t>(l), proto, [&](size_t j, size_t k) {
    const int jj = static_cast<int>(j), kk = static_cast<int>(k);
    R e = a(jj - kk);
    if (sign > 0)
      e += a(jj + kk + shift);
    else
      e -= a(jj + kk + shift);
    return e;
  });
  return det(m);
}

enum class Family { U, O_plus, O_minus, O, Sp, UU, u };

// dim is the matrix size: U(l) -> l, O(m) -> m, Sp(2l) -> 2l, UU(m) is
// U(m/2 rounded down) x U(m/2 rounded up), u(2l) is U(l) embedded in dimension 2l.
struct GroupSpec {
  Family family;
  int dim;
};
std::string to_string(const GroupSpec& g);

// Everything the orthogonal and symplectic integrals of det g(U) depend on:
// iota_j = [z^j] g(z) g(1/z), and the values g(1), g(-1).
template <class R>
struct SymmetricWeight {
  CoeffFn<R> iota;
  R at_one;
  R at_minus_one;
};

// E det g(U) over O+(m), O-(m), O(m) or Sp(m), by the Hankel forms. The
// exceptional O+(0) integral is 1.
template <class R>
R expect_det(const GroupSpec& G, const SymmetricWeight<R>& w, const R& proto) {
  const R one = one_like(proto);
  const int m = G.dim;
  if (m < 0) throw std::invalid_argument("expect_det: negative dimension");
  switch (G.family) {
    case Family::O_plus:
      if (m == 0) return one;
      if (m % 2 == 0) return hankel_det(m / 2, w.iota, 0, +1, proto) * Rational(1, 2);
      return w.at_one * hankel_det(m / 2, w.iota, 1, -1, proto);
    case Family::O_minus:
      if (m == 0) throw std::invalid_argument("expect_det: O-(0) is empty");
      if (m % 2 == 0) return w.at_one * w.at_minus_one * hankel_det(m / 2 - 1, w.iota, 2, -1, proto);
      return w.at_minus_one * hankel_det(m / 2, w.iota, 1, +1, proto);
    case Family::O:
      if (m == 0) return one;
      return (expect_det(GroupSpec{Family::O_plus, m}, w, proto) + expect_det(GroupSpec{Family::O_minus, m}, w, proto)) *
             Rational(1, 2);
    case Family::Sp:
      if (m % 2) throw std::invalid_argument("expect_det: Sp needs even dimension");
      return hankel_det(m / 2, w.iota, 2, -1, proto);
    default: break;
  }
  throw std::invalid_argument("expect_det: unitary families need a Toeplitz weight");
}

// Fourier coefficient [z^j] of a windowed Laurent series; throws std::out_of_range
// outside the window.
template <class R>
R fourier_coeff(const Laurent<R>& g, int j) {
  return g.coeff(j);
}

// E det g(U) det h(U^dagger) through its Toeplitz or Hankel determinant. For U
// and UU the second function defaults to 1; orthogonal and symplectic
// families ignore h; u(2l) uses det g(V) det g(V^dagger) over U(l).
template <class R>
R integral_det(const GroupSpec& G, const Laurent<R>& g, const std::optional<Laurent<R>>& h = std::nullopt) {
  const R proto = g.zero();
  auto toeplitz_weight = [&](const Laurent<R>& f, const Laurent<R>& k) {
    Laurent<R> w = f * k.reflected();
    return CoeffFn<R>([w](int d) { return w.coeff(-d); });
  };
  Laurent<R> one_fn = Laurent<R>::constant(one_like(proto), g.window());
  switch (G.family) {
    case Family::U: return toeplitz_det(G.dim, toeplitz_weight(g, h ? *h : one_fn), proto);
    case Family::UU: {
      auto a = toeplitz_weight(g, h ? *h : one_fn);
      return toeplitz_det(G.dim / 2, a, proto) * toeplitz_det(G.dim - G.dim / 2, a, proto);
    }
    case Family::u:
      if (G.dim % 2) throw std::invalid_argument("integral_det: u needs even dimension");
      return toeplitz_det(G.dim / 2, toeplitz_weight(g, g), proto);
    default: {
      Laurent<R> w = g * g.reflected();
      SymmetricWeight<R> sw{[w](int j) { return w.coeff(j); }, g.at_unit(1), g.at_unit(-1)};
      return expect_det(G, sw, proto);
    }
  }
}

// Window that keeps an l x l form exact at series order N.
inline int auto_window(int l, int N) { return l + N + 2; }

// e^{t z} as a Laurent series in z with Series coefficients.
Laurent<Series> exp_tz(int order, int window);

// I_j(2t) = sum_m t^m/m! t^{j+m}/(j+m)!.
Series bessel_I(int j, int order);

enum class DKind { D, mm, pp, pm, mp };
std::string to_string(DKind k);
// D_l = det(I_{j-k}); D--_l = (1/2)det(I_{j-k}+I_{j+k}) with D--_0 = 1;
// D++_l = det(I_{j-k}-I_{j+k+2}); D+-_l = det(I_{j-k}-I_{j+k+1});
// D-+_l = det(I_{j-k}+I_{j+k+1}).
Series D_series(DKind kind, int l, int order);
// The Szego limit of each D series: e^{t^2}, e^{t^2/2}, e^{t^2/2}, e^{-t+t^2/2}, e^{t+t^2/2}.
Series D_limit(DKind kind, int order);

// Poissonized distribution P_l(t) for the five symmetry types.
Series P_series(Symmetry sym, int l, int order);
// Same quantity computed as the group integral of exp(t Tr U) (or |.|^2),
// independent of the D-series bookkeeping.
Series P_series_integral(Symmetry sym, int l, int order);
// f_{nl} recovered from P_series: n!^2 or (2n)! times [t^{2n}] e^{a t^2/2} P.
Rational f_from_series(Symmetry sym, int n, int l);

// Slot layout for the generalized Poisson models: t in group 0 (bound N),
// alpha and beta in group 1 (bound B).
struct AlphaLayout {
  int t = 0, alpha = 1, beta = 2;
  Grading grading;
  static AlphaLayout make(int N, int B);
  MultiPoly var(int slot) const { return MultiPoly::variable(slot, grading); }
  MultiPoly one() const { return MultiPoly::constant(1, grading); }
  // Embeds a series in t.
  MultiPoly embed(const Series& s) const;
  // e^{c t} with c a polynomial in alpha, beta.
  MultiPoly exp_t(const MultiPoly& c) const;
};

// Generating function G = sum_n t^n/n! sum alpha^m beta^m2 ftilde (the P
// series with its exponential prefactor removed), by the integral route.
MultiPoly ftilde_generating(ExtendedSymmetry sym, int l, const AlphaLayout& L);
// P(t; alpha, beta) from the integral route.
MultiPoly P_alpha_series(ExtendedSymmetry sym, int l, const AlphaLayout& L);
// n! [t^n alpha^m beta^m2] G.
Rational ftilde_from_series(const MultiPoly& G, const AlphaLayout& L, int n, int m, int m2);

// (1/l!) CT of prod_{j != k}(1 - z_j/z_k) prod_j f(z_j) g(1/z_j), l <= 3.
Rational weyl_ct_unitary(int l, const Laurent<Rational>& f, const Laurent<Rational>& g);

// sum_n f_rot(n, L) t^{2n}/(2n)! as the block determinant with L//2 rows
// t^{j-i}/(j-i)! and L - L//2 rows (-t)^{l+i-j}/(l+i-j)!.
Series rotation_series(int L, int order);
Rational f_rot_from_series(int n, int L);

struct SzegoReport {
  bool agree = false;        // D series equals its limit through degree 2l
  bool monotone = false;     // limit minus D has coefficients of one sign, shrinking in l
  int first_disagreement = -1;  // lowest degree where D and the limit differ
};
// Literal check of the formal Szego statement for one kind and size.
SzegoReport formal_szego_check(DKind kind, int l, int order);

}  // namespace incseq
