#include "incseq/group_integrals.hpp"

#include <array>
#include <map>
#include <memory>
#include <stdexcept>

namespace incseq {

std::string to_string(const GroupSpec& g) {
  const char* name = "?";
  switch (g.family) {
    case Family::U: name = "U"; break;
    case Family::O_plus: name = "O+"; break;
    case Family::O_minus: name = "O-"; break;
    case Family::O: name = "O"; break;
    case Family::Sp: name = "Sp"; break;
    case Family::UU: name = "UU"; break;
    case Family::u: name = "u"; break;
  }
  return std::string(name) + "(" + std::to_string(g.dim) + ")";
}

std::string to_string(DKind k) {
  switch (k) {
    case DKind::D: return "D";
    case DKind::mm: return "D--";
    case DKind::pp: return "D++";
    case DKind::pm: return "D+-";
    case DKind::mp: return "D-+";
  }
  return "?";
}

Laurent<Series> exp_tz(int order, int window) {
  Laurent<Series> g(Series(order), window);
  for (int k = 0; k <= std::min(order, window); ++k) g.set(k, Series::monomial(k, Rational(1) / factorial(k), order));
  return g;
}

Series bessel_I(int j, int order) {
  if (j < 0) j = -j;
  Series s(order);
  for (int m = 0; 2 * m + j <= order; ++m) s.set(2 * m + j, Rational(1) / (factorial(m) * factorial(m + j)));
  return s;
}

namespace {

CoeffFn<Series> bessel_table(int maxj, int order) {
  std::vector<Series> tab;
  for (int j = 0; j <= maxj; ++j) tab.push_back(bessel_I(j, order));
  return [tab = std::move(tab), order](int j) {
    j = std::abs(j);
    return j < static_cast<int>(tab.size()) ? tab[static_cast<size_t>(j)] : bessel_I(j, order);
  };
}

Series exp_poly(const Rational& c2, const Rational& c1, int order) {
  Series s(order);
  if (order >= 1) s.set(1, c1);
  if (order >= 2) s.set(2, c2);
  return series_exp(s);
}

}  // namespace

Series D_series(DKind kind, int l, int order) {
  if (l < 0) throw std::invalid_argument("D_series: negative size");
  const Series proto(order);
  auto I = bessel_table(2 * l + 2, order);
  switch (kind) {
    case DKind::D: return toeplitz_det(l, I, proto);
    case DKind::mm:
      if (l == 0) return Series::constant(1, order);
      return hankel_det(l, I, 0, +1, proto) * Rational(1, 2);
    case DKind::pp: return hankel_det(l, I, 2, -1, proto);
    case DKind::pm: return hankel_det(l, I, 1, -1, proto);
    case DKind::mp: return hankel_det(l, I, 1, +1, proto);
  }
  return proto;
}

Series D_limit(DKind kind, int order) {
  switch (kind) {
    case DKind::D: return exp_poly(1, 0, order);
    case DKind::mm:
    case DKind::pp: return exp_poly(Rational(1, 2), 0, order);
    case DKind::pm: return exp_poly(Rational(1, 2), -1, order);
    case DKind::mp: return exp_poly(Rational(1, 2), 1, order);
  }
  return Series(order);
}

Series P_series(Symmetry sym, int l, int order) {
  if (l < 0) throw std::invalid_argument("P_series: negative bound");
  const int h = l / 2;
  switch (sym) {
    case Symmetry::U: return exp_poly(-1, 0, order) * D_series(DKind::D, l, order);
    case Symmetry::O: {
      Series pre = exp_poly(Rational(-1, 2), 0, order);
      if (l == 0) return pre;
      if (l % 2 == 0) return pre * (D_series(DKind::mm, h, order) + D_series(DKind::pp, h - 1, order)) * Rational(1, 2);
      return pre *
             (exp_poly(0, 1, order) * D_series(DKind::pm, h, order) + exp_poly(0, -1, order) * D_series(DKind::mp, h, order)) *
             Rational(1, 2);
    }
    case Symmetry::S: return exp_poly(Rational(-1, 2), 0, order) * D_series(DKind::pp, h, order);
    case Symmetry::UU: return exp_poly(-2, 0, order) * D_series(DKind::D, h, order) * D_series(DKind::D, l - h, order);
    case Symmetry::u: return exp_poly(-1, 0, order) * D_series(DKind::D, h, order);
    case Symmetry::rot: break;
  }
  throw std::invalid_argument("P_series: rotation ensemble has no Poisson series");
}

Series P_series_integral(Symmetry sym, int l, int order) {
  if (l < 0) throw std::invalid_argument("P_series_integral: negative bound");
  const int window = auto_window(l, order);
  Laurent<Series> g = exp_tz(order, window);
  const int h = l / 2;
  switch (sym) {
    case Symmetry::U: return exp_poly(-1, 0, order) * integral_det<Series>({Family::U, l}, g, g);
    case Symmetry::O: return exp_poly(Rational(-1, 2), 0, order) * integral_det<Series>({Family::O, l}, g);
    case Symmetry::S: return exp_poly(Rational(-1, 2), 0, order) * integral_det<Series>({Family::Sp, 2 * h}, g);
    case Symmetry::UU: return exp_poly(-2, 0, order) * integral_det<Series>({Family::UU, l}, g, g);
    case Symmetry::u: return exp_poly(-1, 0, order) * integral_det<Series>({Family::u, 2 * h}, g);
    case Symmetry::rot: break;
  }
  throw std::invalid_argument("P_series_integral: rotation ensemble has no Poisson series");
}

Rational f_from_series(Symmetry sym, int n, int l) {
  const int order = 2 * n;
  const int a = a_const(sym);
  Series G = exp_poly(Rational(a, 2), 0, order) * P_series(sym, l, order);
  const Rational& c = G.coeff(2 * n);
  if (sym == Symmetry::U || sym == Symmetry::UU) return c * factorial(n) * factorial(n);
  return c * factorial(2 * n);
}

// ---- generalized Poisson models

AlphaLayout AlphaLayout::make(int N, int B) {
  AlphaLayout L;
  L.grading = Grading{};
  L.grading.assign(L.t, 0).assign(L.alpha, 1).assign(L.beta, 1);
  L.grading.set_bound(0, N).set_bound(1, B);
  return L;
}

MultiPoly AlphaLayout::embed(const Series& s) const {
  MultiPolyBuilder b(grading);
  for (int k = 0; k <= s.order(); ++k) {
    if (s.coeff(k).is_zero()) continue;
    Monomial m;
    m.set_exponent(t, k);
    if (grading.admits(m)) b.add(m, s.coeff(k));
  }
  return b.build();
}

MultiPoly AlphaLayout::exp_t(const MultiPoly& c) const { return exp(c * var(t)); }

namespace {

int t_bound(const AlphaLayout& L) { return L.grading.bound[0]; }
int w_bound(const AlphaLayout& L) { return L.grading.bound[1]; }

// t^k/k! as a polynomial, zero for k < 0.
MultiPoly t_power(const AlphaLayout& L, int k) {
  if (k < 0 || k > t_bound(L)) return MultiPoly(L.grading);
  Monomial m;
  m.set_exponent(L.t, k);
  if (!L.grading.admits(m)) return MultiPoly(L.grading);
  return MultiPoly::monomial(m, Rational(1) / factorial(k), L.grading);
}

SymmetricWeight<MultiPoly> weight_from_coeffs(std::vector<MultiPoly> c) {
  auto shared = std::make_shared<std::vector<MultiPoly>>(std::move(c));
  SymmetricWeight<MultiPoly> w;
  w.iota = [shared](int j) {
    j = std::abs(j);
    const auto& v = *shared;
    MultiPoly acc(v[0].grading());
    for (size_t m = 0; m + static_cast<size_t>(j) < v.size(); ++m) acc += v[m] * v[m + static_cast<size_t>(j)];
    return acc;
  };
  MultiPoly one(shared->front().grading()), minus(shared->front().grading());
  for (size_t m = 0; m < shared->size(); ++m) {
    one += (*shared)[m];
    if (m % 2)
      minus -= (*shared)[m];
    else
      minus += (*shared)[m];
  }
  w.at_one = one;
  w.at_minus_one = minus;
  return w;
}

// Toeplitz determinant of E_{U(l)} det f(U) det g(U^dagger) for power series f, g.
MultiPoly toeplitz_from_coeffs(int l, const std::vector<MultiPoly>& f, const std::vector<MultiPoly>& g) {
  CoeffFn<MultiPoly> a = [&](int d) {
    MultiPoly acc(f[0].grading());
    for (int b = 0; b < static_cast<int>(g.size()); ++b) {
      int i = b + d;
      if (i < 0 || i >= static_cast<int>(f.size())) continue;
      acc += f[static_cast<size_t>(i)] * g[static_cast<size_t>(b)];
    }
    return acc;
  };
  return toeplitz_det(l, a, f[0]);
}

}  // namespace

MultiPoly ftilde_generating(ExtendedSymmetry sym, int l, const AlphaLayout& L) {
  if (l < 0) throw std::invalid_argument("ftilde_generating: negative bound");
  const int M = t_bound(L) + std::max(0, w_bound(L)) + 1;
  const MultiPoly alpha = L.var(L.alpha), beta = L.var(L.beta);
  const MultiPoly proto(L.grading);
  auto plain = [&] {
    std::vector<MultiPoly> c;
    for (int m = 0; m <= M; ++m) c.push_back(t_power(L, m));
    return c;
  };
  // Coefficients of (1 - beta z)^{-1} applied to a power series.
  auto geometric = [&](const std::vector<MultiPoly>& c) {
    std::vector<MultiPoly> r;
    for (int m = 0; m <= M; ++m) {
      MultiPoly acc(L.grading), bk = L.one();
      for (int k = 0; k <= m; ++k) {
        acc += bk * c[static_cast<size_t>(m - k)];
        bk = bk * beta;
        if (bk.is_zero()) break;
      }
      r.push_back(acc);
    }
    return r;
  };
  // Coefficients of (1 + alpha z) applied to a power series.
  auto linear = [&](const std::vector<MultiPoly>& c) {
    std::vector<MultiPoly> r;
    for (int m = 0; m <= M; ++m) r.push_back(c[static_cast<size_t>(m)] + (m > 0 ? alpha * c[static_cast<size_t>(m - 1)] : proto));
    return r;
  };
  switch (sym) {
    case ExtendedSymmetry::O: return expect_det(GroupSpec{Family::O, l}, weight_from_coeffs(linear(plain())), proto);
    case ExtendedSymmetry::S:
      if (l % 2 == 0) return expect_det(GroupSpec{Family::Sp, l}, weight_from_coeffs(geometric(plain())), proto);
      return L.exp_t(beta) * expect_det(GroupSpec{Family::Sp, l - 1}, weight_from_coeffs(plain()), proto);
    case ExtendedSymmetry::u:
      if (l % 2 == 0) return toeplitz_from_coeffs(l / 2, geometric(linear(plain())), plain());
      return L.exp_t(beta) * toeplitz_from_coeffs(l / 2, linear(plain()), plain());
  }
  return proto;
}

MultiPoly P_alpha_series(ExtendedSymmetry sym, int l, const AlphaLayout& L) {
  const MultiPoly alpha = L.var(L.alpha), beta = L.var(L.beta);
  const MultiPoly t = L.var(L.t);
  MultiPoly G = ftilde_generating(sym, l, L);
  switch (sym) {
    case ExtendedSymmetry::O: return exp(-(alpha * t) - t * t * Rational(1, 2)) * G;
    case ExtendedSymmetry::S: return exp(-(beta * t) - t * t * Rational(1, 2)) * G;
    case ExtendedSymmetry::u: return exp(-(alpha * t) - beta * t - t * t) * G;
  }
  return G;
}

Rational ftilde_from_series(const MultiPoly& G, const AlphaLayout& L, int n, int m, int m2) {
  Monomial mono;
  mono.set_exponent(L.t, n);
  mono.set_exponent(L.alpha, m);
  mono.set_exponent(L.beta, m2);
  return G.coeff(mono) * factorial(n);
}

// ---- Weyl integration oracle

Rational weyl_ct_unitary(int l, const Laurent<Rational>& f, const Laurent<Rational>& g) {
  if (l < 0) throw std::invalid_argument("weyl_ct_unitary: negative size");
  if (l > 3) throw std::length_error("weyl_ct_unitary: l > 3 exceeds the resource guard");
  using Key = std::array<int, 3>;
  std::map<Key, Rational> poly{{Key{0, 0, 0}, Rational(1)}};
  auto multiply = [&](const std::vector<std::pair<Key, Rational>>& factor) {
    std::map<Key, Rational> out;
    for (const auto& [k1, v1] : poly)
      for (const auto& [k2, v2] : factor) {
        Key k{k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]};
        out[k] += v1 * v2;
      }
    poly.clear();
    for (auto& [k, v] : out)
      if (!v.is_zero()) poly.emplace(k, v);
  };
  Laurent<Rational> w = f * g.reflected();
  for (int j = 0; j < l; ++j) {
    std::vector<std::pair<Key, Rational>> factor;
    for (const auto& [e, c] : w.coeffs()) {
      Key k{0, 0, 0};
      k[static_cast<size_t>(j)] = e;
      factor.emplace_back(k, c);
    }
    multiply(factor);
  }
  for (int j = 0; j < l; ++j)
    for (int k = 0; k < l; ++k) {
      if (j == k) continue;
      Key z{0, 0, 0};
      z[static_cast<size_t>(j)] = 1;
      z[static_cast<size_t>(k)] = -1;
      multiply({{Key{0, 0, 0}, Rational(1)}, {z, Rational(-1)}});
    }
  auto it = poly.find(Key{0, 0, 0});
  Rational ct = it == poly.end() ? Rational(0) : it->second;
  return ct / factorial(l);
}

// ---- rotation ensemble

Series rotation_series(int L, int order) {
  if (L < 0) throw std::invalid_argument("rotation_series: negative bound");
  const int lp = L / 2;
  const Series proto(order);
  auto entry = [&](int k, bool negate) {
    if (k < 0 || k > order) return Series(order);
    Rational c = Rational(1) / factorial(k);
    if (negate && k % 2) c = -c;
    return Series::monomial(k, c, order);
  };
  auto m = RingMatrix<Series>::build(static_cast<size_t>(L), static_cast<size_t>(L), proto, [&](size_t r, size_t c) {
    const int i = static_cast<int>(r), j = static_cast<int>(c);
    if (i < lp) return entry(j - i, false);
    return entry(lp + (i - lp) - j, true);
  });
  return det(m);
}

Rational f_rot_from_series(int n, int L) { return rotation_series(L, 2 * n).coeff(2 * n) * factorial(2 * n); }

// ---- formal Szego

SzegoReport formal_szego_check(DKind kind, int l, int order) {
  SzegoReport rep;
  const Series lim = D_limit(kind, order);
  const Series d = D_series(kind, l, order);
  const Series diff = lim - d;
  rep.first_disagreement = diff.valuation() <= order ? diff.valuation() : -1;
  rep.agree = diff.valuation() > std::min(2 * l, order);
  // Monotone approach: for every coefficient, the gap to the limit keeps one
  // sign and never grows in absolute value as the size runs through 0..l.
  rep.monotone = true;
  std::vector<Series> gaps;
  for (int j = 0; j <= l; ++j) gaps.push_back(lim - D_series(kind, j, order));
  for (int k = 0; k <= order && rep.monotone; ++k) {
    int sgn = 0;
    for (int j = 0; j <= l; ++j) {
      const Rational& g = gaps[static_cast<size_t>(j)].coeff(k);
      if (g.sign() != 0) {
        if (sgn != 0 && g.sign() != sgn) rep.monotone = false;
        sgn = g.sign();
      }
      if (j > 0) {
        Rational prev = gaps[static_cast<size_t>(j - 1)].coeff(k);
        Rational a = g.sign() < 0 ? -g : g, b = prev.sign() < 0 ? -prev : prev;
        if (a > b) rep.monotone = false;
      }
    }
  }
  return rep;
}

}  // namespace incseq
