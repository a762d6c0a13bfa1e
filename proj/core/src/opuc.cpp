#include "incseq/opuc.hpp"

#include <algorithm>

namespace incseq {

const Series& MomentSequence::operator()(int j) const {
  if (std::abs(j) > window)
    throw std::out_of_range("MomentSequence: c_" + std::to_string(j) + " outside window " + std::to_string(window));
  return values[static_cast<size_t>(j + window)];
}

MomentSequence bessel_moments(int order, int window) {
  MomentSequence c;
  c.order = order;
  c.window = window;
  for (int j = -window; j <= window; ++j) c.values.push_back(bessel_I(j, order));
  return c;
}

MomentSequence moments_from_symbol(const Laurent<Series>& f, int order) {
  MomentSequence c;
  c.order = order;
  int w = 0;
  if (f.window())
    w = *f.window();
  else
    w = std::max(std::abs(f.min_power()), std::abs(f.max_power()));
  c.window = w;
  for (int j = -w; j <= w; ++j) c.values.push_back(f.coeff(-j).truncated(order));
  return c;
}

Series poly_eval(const SeriesPoly& p, const Rational& x) {
  if (p.empty()) throw std::invalid_argument("poly_eval: empty polynomial");
  Series acc(p.front().order());
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

SeriesPoly poly_reversed(const SeriesPoly& p, int degree) {
  const int order = p.front().order();
  SeriesPoly r(static_cast<size_t>(degree) + 1, Series(order));
  for (int i = 0; i <= degree && i < static_cast<int>(p.size()); ++i) r[static_cast<size_t>(degree - i)] = p[static_cast<size_t>(i)];
  return r;
}

Series moment_inner(const MomentSequence& c, const SeriesPoly& p, const SeriesPoly& q) {
  Series acc(c.order);
  for (size_t a = 0; a < p.size(); ++a) {
    if (p[a].is_zero()) continue;
    for (size_t b = 0; b < q.size(); ++b) {
      if (q[b].is_zero()) continue;
      acc += p[a] * q[b] * c(static_cast<int>(a) - static_cast<int>(b));
    }
  }
  return acc;
}

namespace {

Series unit_reciprocal(const Series& s, int degree, const char* what) {
  if (s.coeff(0).is_zero())
    throw degeneracy_error(degree, std::string(what) + ": degree " + std::to_string(degree) + " has a non-invertible pivot");
  return s.reciprocal();
}

SeriesPoly poly_add(const SeriesPoly& a, const SeriesPoly& b, int sign = 1) {
  const int order = a.empty() ? b.front().order() : a.front().order();
  SeriesPoly r(std::max(a.size(), b.size()), Series(order));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) {
    if (sign > 0)
      r[i] += b[i];
    else
      r[i] -= b[i];
  }
  return r;
}

SeriesPoly poly_scaled(const SeriesPoly& p, const Series& s) {
  SeriesPoly r;
  for (const Series& x : p) r.push_back(x * s);
  return r;
}

SeriesPoly z_times(const SeriesPoly& p) {
  SeriesPoly r{Series(p.front().order())};
  r.insert(r.end(), p.begin(), p.end());
  return r;
}

bool poly_equal(const SeriesPoly& a, const SeriesPoly& b) {
  const int order = a.front().order();
  for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    Series x = i < a.size() ? a[i] : Series(order);
    Series y = i < b.size() ? b[i] : Series(order);
    if (!(x == y)) return false;
  }
  return true;
}

Laurent<Series> as_laurent(const SeriesPoly& p) {
  Laurent<Series> r(p.front());
  for (size_t i = 0; i < p.size(); ++i) r.set(static_cast<int>(i), p[i]);
  return r;
}

Series product_of(int from, int to, const std::function<Series(int)>& term, int order) {
  Series acc = Series::constant(1, order);
  for (int j = from; j < to; ++j) acc = acc * term(j);
  return acc;
}

std::string at(int l) { return "l=" + std::to_string(l); }

}  // namespace

OPUCData opuc_build(const MomentSequence& c, int L) {
  if (L < 0) throw std::invalid_argument("opuc_build: negative degree");
  if (c.window < L) throw std::out_of_range("opuc_build: moment window smaller than the degree");
  OPUCData d;
  d.order = c.order;
  std::vector<Series> inv;
  for (int j = 0; j <= L; ++j) {
    SeriesPoly p(static_cast<size_t>(j) + 1, Series(c.order));
    p.back() = Series::constant(1, c.order);
    for (int k = 0; k < j; ++k) {
      // <z^j, pi_k> = sum_b pi_k[b] c_{j-b}
      Series ip(c.order);
      const SeriesPoly& q = d.pi[static_cast<size_t>(k)];
      for (int b = 0; b <= k; ++b) ip += q[static_cast<size_t>(b)] * c(j - b);
      Series coef = ip * inv[static_cast<size_t>(k)];
      for (int b = 0; b <= k; ++b) p[static_cast<size_t>(b)] -= coef * q[static_cast<size_t>(b)];
    }
    // N_j = <pi_j, z^j> since pi_j is orthogonal to lower powers.
    Series n(c.order);
    for (int a = 0; a <= j; ++a) n += p[static_cast<size_t>(a)] * c(a - j);
    inv.push_back(unit_reciprocal(n, j, "opuc_build"));
    d.pi.push_back(std::move(p));
    d.N.push_back(std::move(n));
  }
  return d;
}

Report opuc_identities_check(const OPUCData& d, const MomentSequence& c) {
  Report r{"opuc identities", {}};
  const int L = d.max_degree(), order = d.order;
  const Series one = Series::constant(1, order);
  bool orth = true;
  for (int j = 0; j <= L; ++j)
    for (int k = 0; k < j; ++k) {
      SeriesPoly zk(static_cast<size_t>(k) + 1, Series(order));
      zk.back() = one;
      if (!moment_inner(c, d.pi[static_cast<size_t>(j)], zk).is_zero()) orth = false;
    }
  r.add("orthogonality <pi_j, z^k> = 0 for k < j", orth);
  for (int l = 0; l < L; ++l) {
    SeriesPoly rhs = poly_add(z_times(d.pi[static_cast<size_t>(l)]), poly_scaled(d.reversed(l), d.at_zero(l + 1)));
    r.add("Szego recursion " + at(l), poly_equal(d.pi[static_cast<size_t>(l + 1)], rhs));
  }
  for (int l = 1; l <= L; ++l) {
    const Series& p0 = d.at_zero(l);
    r.add("N_l = (1 - pi_l(0)^2) N_{l-1} " + at(l), d.N[static_cast<size_t>(l)] == (one - p0 * p0) * d.N[static_cast<size_t>(l - 1)]);
  }
  for (int l = 0; l <= L; ++l) {
    Series prod = d.N[0] * product_of(1, l + 1, [&](int j) { return one - d.at_zero(j) * d.at_zero(j); }, order);
    r.add("N_l = N_0 prod (1 - pi_j(0)^2) " + at(l), d.N[static_cast<size_t>(l)] == prod);
    Series p1 = product_of(1, l + 1, [&](int j) { return one + d.at_zero(j); }, order);
    r.add("pi_l(1) " + at(l), poly_eval(d.pi[static_cast<size_t>(l)], 1) == p1);
    Series pm = product_of(1, l + 1, [&](int j) { return j % 2 ? one - d.at_zero(j) : one + d.at_zero(j); }, order);
    Series lhs = poly_eval(d.pi[static_cast<size_t>(l)], -1);
    if (l % 2) lhs = -lhs;
    r.add("(-1)^l pi_l(-1) " + at(l), lhs == pm);
  }
  return r;
}

namespace {

// OPUC data for the weight g(z) g(1/z) up to the given degree.
struct WeightContext {
  Laurent<Series> g;
  MomentSequence c;
  OPUCData d;
  Series g1, gm1, one;

  WeightContext(const Laurent<Series>& g_, int degree, int order)
      : g(g_),
        c(moments_from_symbol(g_ * g_.reflected(), order)),
        d(opuc_build(c, degree)),
        g1(g_.at_unit(1).truncated(order)),
        gm1(g_.at_unit(-1).truncated(order)),
        one(Series::constant(1, order)) {}

  const Series& N(int j) const { return d.N.at(static_cast<size_t>(j)); }
  Series ratio(int j, int sign) const {
    return N(j) * unit_reciprocal(sign > 0 ? one + d.at_zero(j) : one - d.at_zero(j), j, "product formula");
  }
};

Series E(const GroupSpec& G, const Laurent<Series>& g) { return integral_det<Series>(G, g); }

}  // namespace

Report verify_products(const Laurent<Series>& g, int L, int order) {
  Report r{"product formulas", {}};
  WeightContext w(g, 2 * L + 2, order);
  for (int l = 0; l <= L; ++l) {
    Series prod = product_of(0, l, [&](int j) { return w.N(j); }, order);
    r.add("U(" + std::to_string(l) + ")", integral_det<Series>({Family::U, l}, g, g) == prod);
  }
  r.add("O+(0)", E({Family::O_plus, 0}, g) == w.one);
  for (int l = 1; l <= L; ++l) {
    Series p = w.N(0) * product_of(0, l - 1, [&](int j) { return w.ratio(2 * j + 2, +1); }, order);
    r.add("O+(" + std::to_string(2 * l) + ")", E({Family::O_plus, 2 * l}, g) == p);
    Series m = w.g1 * w.gm1 * product_of(0, l - 1, [&](int j) { return w.ratio(2 * j + 2, -1); }, order);
    r.add("O-(" + std::to_string(2 * l) + ")", E({Family::O_minus, 2 * l}, g) == m);
  }
  for (int l = 0; l <= L; ++l) {
    Series p = w.g1 * product_of(0, l, [&](int j) { return w.ratio(2 * j + 1, -1); }, order);
    r.add("O+(" + std::to_string(2 * l + 1) + ")", E({Family::O_plus, 2 * l + 1}, g) == p);
    Series m = w.gm1 * product_of(0, l, [&](int j) { return w.ratio(2 * j + 1, +1); }, order);
    r.add("O-(" + std::to_string(2 * l + 1) + ")", E({Family::O_minus, 2 * l + 1}, g) == m);
    Series s = product_of(0, l, [&](int j) { return w.ratio(2 * j + 2, -1); }, order);
    r.add("Sp(" + std::to_string(2 * l) + ")", E({Family::Sp, 2 * l}, g) == s);
  }
  for (int l = 1; l <= L; ++l) {
    Series lhs = w.g1 * w.gm1 * integral_det<Series>({Family::U, l}, g, g);
    Series rhs = E({Family::O_plus, l + 1}, g) * E({Family::O_minus, l + 1}, g);
    r.add("g(1)g(-1)E_U(l) = E_O+(l+1) E_O-(l+1) " + at(l), lhs == rhs);
  }
  return r;
}

Report d_series_products_check(int L, int order) {
  Report r{"D-series products", {}};
  const int window = auto_window(2 * L + 2, order);
  WeightContext w(exp_tz(order, window), 2 * L + 2, order);
  for (int l = 0; l <= L; ++l) {
    r.add("D " + at(l), D_series(DKind::D, l, order) == product_of(0, l, [&](int j) { return w.N(j); }, order));
    Series mm = l == 0 ? w.one : w.N(0) * product_of(0, l - 1, [&](int j) { return w.ratio(2 * j + 2, +1); }, order);
    r.add("D-- " + at(l), D_series(DKind::mm, l, order) == mm);
    r.add("D++ " + at(l), D_series(DKind::pp, l, order) == product_of(0, l, [&](int j) { return w.ratio(2 * j + 2, -1); }, order));
    r.add("D+- " + at(l), D_series(DKind::pm, l, order) == product_of(0, l, [&](int j) { return w.ratio(2 * j + 1, -1); }, order));
    r.add("D-+ " + at(l), D_series(DKind::mp, l, order) == product_of(0, l, [&](int j) { return w.ratio(2 * j + 1, +1); }, order));
  }
  // The group integrals of exp(t Tr U).
  const Series et = series_exp(Series::t(order)), emt = series_exp(-Series::t(order));
  for (int l = 0; l <= L; ++l) {
    r.add("E_U exp " + at(l), integral_det<Series>({Family::U, l}, w.g, w.g) == D_series(DKind::D, l, order));
    r.add("E_O+(2l) exp " + at(l), E({Family::O_plus, 2 * l}, w.g) == D_series(DKind::mm, l, order));
    if (l >= 1) r.add("E_O-(2l) exp " + at(l), E({Family::O_minus, 2 * l}, w.g) == D_series(DKind::pp, l - 1, order));
    r.add("E_O+(2l+1) exp " + at(l), E({Family::O_plus, 2 * l + 1}, w.g) == et * D_series(DKind::pm, l, order));
    r.add("E_O-(2l+1) exp " + at(l), E({Family::O_minus, 2 * l + 1}, w.g) == emt * D_series(DKind::mp, l, order));
  }
  return r;
}

Report szego_tail_check(int L, int order) {
  Report r{"infinite tail products", {}};
  // N_j = 1 + O(t^{2j+2}) for the Bessel weight, so the tail is finite at this order.
  const int J = L + order / 2 + 2;
  const int degree = 2 * J + 2;
  WeightContext w(exp_tz(order, auto_window(degree, order)), degree, order);
  auto inv = [&](int j) { return unit_reciprocal(w.N(j), j, "tail"); };
  const Series t = Series::t(order);
  const Series t2 = Series::monomial(2, 1, order);
  for (int l = 0; l <= L; ++l) {
    Series d = series_exp(-t2) * D_series(DKind::D, l, order);
    r.add("e^{-t^2} D_l " + at(l), d == product_of(l, J, inv, order));
    Series half = series_exp(t2 * Rational(-1, 2));
    Series mm = half * D_series(DKind::mm, l, order);
    r.add("e^{-t^2/2} D--_l " + at(l), mm == product_of(l, J, [&](int j) { return inv(2 * j + 2) * (w.one + w.d.at_zero(2 * j + 2)); }, order));
    if (l >= 1)
      r.add("e^{-t^2/2} D--_l from j >= l-1 " + at(l),
            mm == product_of(l - 1, J, [&](int j) { return inv(2 * j + 2) * (w.one + w.d.at_zero(2 * j + 2)); }, order));
    Series pp = half * D_series(DKind::pp, l, order);
    r.add("e^{-t^2/2} D++_l " + at(l), pp == product_of(l, J, [&](int j) { return inv(2 * j + 2) * (w.one - w.d.at_zero(2 * j + 2)); }, order));
    Series pm = series_exp(t2 * Rational(-1, 2) + t) * D_series(DKind::pm, l, order);
    r.add("e^{-t^2/2+t} D+-_l " + at(l), pm == product_of(l, J, [&](int j) { return inv(2 * j + 1) * (w.one - w.d.at_zero(2 * j + 1)); }, order));
    Series mp = series_exp(t2 * Rational(-1, 2) - t) * D_series(DKind::mp, l, order);
    r.add("e^{-t^2/2-t} D-+_l " + at(l), mp == product_of(l, J, [&](int j) { return inv(2 * j + 1) * (w.one + w.d.at_zero(2 * j + 1)); }, order));
  }
  return r;
}

// ---- half-line families

std::string to_string(HalfLine h) {
  switch (h) {
    case HalfLine::mm: return "p--";
    case HalfLine::pm: return "p+-";
    case HalfLine::mp: return "p-+";
    case HalfLine::pp: return "p++";
  }
  return "?";
}

HalfLineFamily halfline_build(const MomentSequence& c, HalfLine kind, int L) {
  const int order = c.order;
  const int top = 2 * L + 2;
  // <x^a> = 2^{-a} sum_k C(a,k) c_{a-2k}
  std::vector<Series> mu;
  for (int a = 0; a <= top; ++a) {
    Series s(order);
    for (int k = 0; k <= a; ++k) s += c(a - 2 * k) * binomial(a, k);
    mu.push_back(s * pow(Rational(2), -a));
  }
  auto m = [&](int a) {
    switch (kind) {
      case HalfLine::mm: return mu[static_cast<size_t>(a)];
      case HalfLine::pm: return mu[static_cast<size_t>(a)] - mu[static_cast<size_t>(a + 1)];
      case HalfLine::mp: return mu[static_cast<size_t>(a)] + mu[static_cast<size_t>(a + 1)];
      case HalfLine::pp: return mu[static_cast<size_t>(a)] - mu[static_cast<size_t>(a + 2)];
    }
    return mu[0];
  };
  HalfLineFamily f;
  std::vector<Series> inv;
  for (int l = 0; l <= L; ++l) {
    SeriesPoly p(static_cast<size_t>(l) + 1, Series(order));
    p.back() = Series::constant(1, order);
    for (int k = 0; k < l; ++k) {
      const SeriesPoly& q = f.p[static_cast<size_t>(k)];
      Series ip(order);
      for (int b = 0; b <= k; ++b) ip += q[static_cast<size_t>(b)] * m(l + b);
      Series coef = ip * inv[static_cast<size_t>(k)];
      for (int b = 0; b <= k; ++b) p[static_cast<size_t>(b)] -= coef * q[static_cast<size_t>(b)];
    }
    Series n(order);
    for (int a = 0; a <= l; ++a) n += p[static_cast<size_t>(a)] * m(l + a);
    inv.push_back(unit_reciprocal(n, l, "halfline_build"));
    f.p.push_back(std::move(p));
    f.N.push_back(std::move(n));
  }
  return f;
}

namespace {

// (2z)^l p((z + 1/z)/2) as a Laurent polynomial in z.
Laurent<Series> chebyshev_lift(const SeriesPoly& p, int l) {
  Laurent<Series> r(p.front());
  for (int a = 0; a < static_cast<int>(p.size()); ++a)
    for (int k = 0; k <= a; ++k) r.add_to(l + a - 2 * k, p[static_cast<size_t>(a)] * (pow(Rational(2), l - a) * binomial(a, k)));
  return r;
}

}  // namespace

Report halfline_relations_check(const MomentSequence& c, int L) {
  Report r{"half-line relations", {}};
  const int order = c.order;
  OPUCData d = opuc_build(c, 2 * L + 2);
  const Series one = Series::constant(1, order);
  auto pz = [&](int j) { return d.at_zero(j); };
  auto lin = [&](int a0, int a1, int a2) {
    Laurent<Series> f(one);
    f.set(0, one * Rational(a0));
    f.set(1, one * Rational(a1));
    f.set(2, one * Rational(a2));
    return f;
  };
  auto combo = [&](int j, int sign) {
    Laurent<Series> zp = lin(0, 1, 0) * as_laurent(d.pi[static_cast<size_t>(j)]);
    Laurent<Series> s = as_laurent(d.reversed(j));
    return sign > 0 ? s + zp : s - zp;
  };
  HalfLineFamily mm = halfline_build(c, HalfLine::mm, L), pm = halfline_build(c, HalfLine::pm, L),
                 mp = halfline_build(c, HalfLine::mp, L), pp = halfline_build(c, HalfLine::pp, L);
  const Series prod0 = d.N[0];
  auto sq = [&](int j) { return one - pz(j) * pz(j); };
  for (int l = 0; l <= L; ++l) {
    const size_t i = static_cast<size_t>(l);
    const Rational four_l = pow(Rational(4), -l);
    // p--
    if (l == 0)
      r.add("p--_0 = 1", mm.p[0].size() == 1 && mm.p[0][0] == one);
    else
      r.add("(2z)^l p--_l = pi*_{2l-1} + z pi_{2l-1} " + at(l), chebyshev_lift(mm.p[i], l) == combo(2 * l - 1, +1));
    r.add("p--_l(1) " + at(l), poly_eval(mm.p[i], 1) == product_of(0, 2 * l, [&](int j) { return one + pz(j); }, order) * pow(Rational(2), -l));
    r.add("p--_l(-1) " + at(l), poly_eval(mm.p[i], -1) == product_of(0, 2 * l, [&](int j) { return j % 2 ? one - pz(j) : one + pz(j); }, order) * pow(Rational(-2), -l));
    {
      Series chain = mm.N[i];
      Series via_n = d.N[2 * i] * unit_reciprocal(one + pz(2 * l), 2 * l, "N--") * (Rational(2) * four_l);
      Series via_prod = prod0 * product_of(1, 2 * l + 1, sq, order) * unit_reciprocal(one + pz(2 * l), 2 * l, "N--") * (Rational(2) * four_l);
      r.add("N--_l = 4^{1/2-l} N_{2l} / (1 + pi_{2l}(0)) " + at(l), chain == via_n);
      r.add("N--_l product form " + at(l), chain == via_prod);
    }
    // p+-
    r.add("(1-z)(2z)^l p+-_l = pi*_{2l} - z pi_{2l} " + at(l), lin(1, -1, 0) * chebyshev_lift(pm.p[i], l) == combo(2 * l, -1));
    r.add("p+-_l(-1) " + at(l), poly_eval(pm.p[i], -1) == product_of(1, 2 * l + 1, [&](int j) { return j % 2 ? one - pz(j) : one + pz(j); }, order) * pow(Rational(-2), -l));
    {
      Series prod = prod0 * product_of(1, 2 * l + 1, sq, order) * (one + pz(2 * l + 1)) * four_l;
      r.add("N+-_l product form " + at(l), pm.N[i] == prod);
      r.add("N+-_l = 4^{-l} N_{2l} (1 + pi_{2l+1}(0)) " + at(l), pm.N[i] == d.N[2 * i] * (one + pz(2 * l + 1)) * four_l);
      r.add("N+-_l = 4^{-l} N_{2l+1} / (1 - pi_{2l+1}(0)) " + at(l),
            pm.N[i] == d.N[2 * i + 1] * unit_reciprocal(one - pz(2 * l + 1), 2 * l + 1, "N+-") * four_l);
    }
    // p-+
    r.add("(1+z)(2z)^l p-+_l = pi*_{2l} + z pi_{2l} " + at(l), lin(1, 1, 0) * chebyshev_lift(mp.p[i], l) == combo(2 * l, +1));
    r.add("p-+_l(1) " + at(l), poly_eval(mp.p[i], 1) == product_of(1, 2 * l + 1, [&](int j) { return one + pz(j); }, order) * pow(Rational(2), -l));
    {
      Series prod = prod0 * product_of(1, 2 * l + 1, sq, order) * (one - pz(2 * l + 1)) * four_l;
      r.add("N-+_l product form " + at(l), mp.N[i] == prod);
      r.add("N-+_l = 4^{-l} N_{2l} (1 - pi_{2l+1}(0)) " + at(l), mp.N[i] == d.N[2 * i] * (one - pz(2 * l + 1)) * four_l);
      r.add("N-+_l = 4^{-l} N_{2l+1} / (1 + pi_{2l+1}(0)) " + at(l),
            mp.N[i] == d.N[2 * i + 1] * unit_reciprocal(one + pz(2 * l + 1), 2 * l + 1, "N-+") * four_l);
    }
    // p++
    r.add("(1-z^2)(2z)^l p++_l = pi*_{2l+1} - z pi_{2l+1} " + at(l), lin(1, 0, -1) * chebyshev_lift(pp.p[i], l) == combo(2 * l + 1, -1));
    {
      const Rational half4 = four_l * Rational(1, 2);
      Series prod = prod0 * product_of(1, 2 * l + 2, sq, order) * (one + pz(2 * l + 2)) * half4;
      r.add("N++_l product form " + at(l), pp.N[i] == prod);
      r.add("N++_l = 4^{-l-1/2} N_{2l+1} (1 + pi_{2l+2}(0)) " + at(l), pp.N[i] == d.N[2 * i + 1] * (one + pz(2 * l + 2)) * half4);
      r.add("N++_l = 4^{-l-1/2} N_{2l+2} / (1 - pi_{2l+2}(0)) " + at(l),
            pp.N[i] == d.N[2 * i + 2] * unit_reciprocal(one - pz(2 * l + 2), 2 * l + 2, "N++") * half4);
    }
  }
  return r;
}

// ---- alpha formulae

namespace {

Laurent<MultiPoly> lift(const Laurent<Series>& g, const AlphaLayout& A) {
  Laurent<MultiPoly> r(A.one(), g.window());
  for (const auto& [k, v] : g.coeffs()) r.set(k, A.embed(v));
  return r;
}

// p(x) for a polynomial with series coefficients and x in the layout ring.
MultiPoly poly_at(const SeriesPoly& p, const MultiPoly& x, const AlphaLayout& A) {
  MultiPoly acc(A.grading);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + A.embed(p[i]);
  return acc;
}

// (1 + s z) for a ring element s.
Laurent<MultiPoly> one_plus(const MultiPoly& s, const AlphaLayout& A, std::optional<int> window) {
  Laurent<MultiPoly> f(A.one(), window);
  f.set(0, A.one());
  f.set(1, s);
  return f;
}

Laurent<Series> one_plus(int s, int order, std::optional<int> window) {
  Laurent<Series> f(Series(order), window);
  f.set(0, Series::constant(1, order));
  f.set(1, Series::constant(s, order));
  return f;
}

int slot_degree(const MultiPoly& p, int slot) {
  int d = 0;
  for (const auto& term : p.terms()) d = std::max(d, term.first.exponent(slot));
  return d;
}

}  // namespace

Report alpha_formula_check(const Laurent<Series>& g, int L, int order) {
  Report r{"alpha formulae", {}};
  WeightContext w(g, 2 * L + 2, order);
  AlphaLayout A = AlphaLayout::make(order, -1);
  const MultiPoly alpha = A.var(A.alpha);
  Laurent<MultiPoly> ga = one_plus(-alpha, A, g.window()) * lift(g, A);
  auto factor = [&](int j, int sign) {
    MultiPoly star = poly_at(w.d.reversed(j), alpha, A), plain = poly_at(w.d.pi[static_cast<size_t>(j)], alpha, A);
    return sign > 0 ? star + alpha * plain : star - alpha * plain;
  };
  for (int m = 1; m <= 2 * L + 1; ++m)
    for (Family fam : {Family::O_plus, Family::O_minus}) {
      const int s = fam == Family::O_plus ? 1 : -1;
      MultiPoly lhs = integral_det<MultiPoly>({fam, m}, ga);
      MultiPoly base = A.embed(E({fam, m}, g));
      MultiPoly f = m % 2 == 0 ? factor(m - 1, s) : factor(m - 1, -s);
      r.add(to_string(GroupSpec{fam, m}) + " det((1 - alpha U) g)", lhs == f * base);
    }
  const auto win = g.window();
  Laurent<Series> gp = one_plus(1, order, win) * g, gm = one_plus(-1, order, win) * g;
  const Series inv1 = unit_reciprocal(w.g1, 0, "g(1)"), invm1 = unit_reciprocal(w.gm1, 0, "g(-1)");
  for (int m = 1; m <= 2 * L + 1; ++m) {
    const std::string d = std::to_string(m);
    r.add("O+(" + d + ") det((1+U)g) = 2 g(-1)^{-1} E_O-(" + std::to_string(m + 1) + ")",
          E({Family::O_plus, m}, gp) == E({Family::O_minus, m + 1}, g) * invm1 * Rational(2));
    r.add("O-(" + d + ") det((1+U)g) = 0", E({Family::O_minus, m}, gp).is_zero());
  }
  for (int l = 0; l <= L; ++l) {
    if (l >= 1) {
      r.add("O+(2l) det((1-U)g) = 2 g(1)^{-1} E_O+(2l+1) " + at(l), E({Family::O_plus, 2 * l}, gm) == E({Family::O_plus, 2 * l + 1}, g) * inv1 * Rational(2));
      r.add("O-(2l) det((1-U)g) = 0 " + at(l), E({Family::O_minus, 2 * l}, gm).is_zero());
    }
    r.add("O+(2l+1) det((1-U)g) = 0 " + at(l), E({Family::O_plus, 2 * l + 1}, gm).is_zero());
    r.add("O-(2l+1) det((1-U)g) = 2 g(1)^{-1} E_O-(2l+2) " + at(l),
          E({Family::O_minus, 2 * l + 1}, gm) == E({Family::O_minus, 2 * l + 2}, g) * inv1 * Rational(2));
  }
  return r;
}

Report unitary_alpha_beta_check(const Laurent<Series>& g, int L, int order) {
  Report r{"unitary alpha-beta formula", {}};
  WeightContext w(g, L + 1, order);
  AlphaLayout A = AlphaLayout::make(order, -1);
  const MultiPoly alpha = A.var(A.alpha), beta = A.var(A.beta), ab = alpha * beta;
  const Laurent<MultiPoly> gl = lift(g, A);
  const Laurent<MultiPoly> fa = one_plus(-alpha, A, g.window()) * gl, fb = one_plus(-beta, A, g.window()) * gl;
  const MultiPoly g1 = A.embed(w.g1), gm1 = A.embed(w.gm1);
  for (int l = 0; l <= L; ++l) {
    const SeriesPoly& p = w.d.pi[static_cast<size_t>(l)];
    const SeriesPoly ps = w.d.reversed(l);
    MultiPoly num = poly_at(ps, alpha, A) * poly_at(ps, beta, A) - ab * poly_at(p, alpha, A) * poly_at(p, beta, A);
    // Quotient by 1 - alpha beta: the geometric expansion cut back to the
    // numerator's alpha-degree, then checked by multiplying back.
    const int da = slot_degree(num, A.alpha);
    MultiPoly q(A.grading), pk = num;
    for (int k = 0; k <= da; ++k) {
      q += pk;
      pk = pk * ab;
    }
    q = q.filtered([&](const Monomial& mono) { return mono.exponent(A.alpha) <= da; });
    const bool exact = (A.one() - ab) * q == num;
    r.add("1 - alpha beta divides the numerator " + at(l), exact);
    MultiPoly lhs = integral_det<MultiPoly>({Family::U, l}, fa, fb);
    MultiPoly base = A.embed(integral_det<Series>({Family::U, l}, g, g));
    r.add("E_U det((1-aU)(1-bU^*)gg^*) = quotient E_U det(gg^*) " + at(l), exact && lhs == q * base);
    MultiPoly opa = integral_det<MultiPoly>({Family::O_plus, l + 1}, fa), oma = integral_det<MultiPoly>({Family::O_minus, l + 1}, fa);
    MultiPoly opb = integral_det<MultiPoly>({Family::O_plus, l + 1}, fb), omb = integral_det<MultiPoly>({Family::O_minus, l + 1}, fb);
    MultiPoly two_side = g1 * gm1 * (A.one() - ab) * lhs * Rational(2);
    r.add("2g(1)g(-1)(1-ab) E_U = E_O+ E_O- + E_O+ E_O- " + at(l), two_side == opa * omb + opb * oma);
  }
  return r;
}

// ---- Poisson models by the orthogonal polynomial route

namespace {

Series series_of(const MultiPoly& p, int slot, int order) {
  Series s(order);
  for (const auto& term : p.terms()) {
    const Monomial& m = term.first;
    if (m.total_degree() != m.exponent(slot)) throw std::invalid_argument("series_of: polynomial involves other variables");
    if (m.exponent(slot) <= order) s.set(m.exponent(slot), term.second);
  }
  return s;
}

}  // namespace

MultiPoly P_alpha_opuc(ExtendedSymmetry sym, int l, const AlphaLayout& L) {
  if (l < 0) throw std::invalid_argument("P_alpha_opuc: negative bound");
  const int order = L.grading.bound[0];
  const int k = l / 2;
  const MultiPoly alpha = L.var(L.alpha), t = L.var(L.t);
  const MultiPoly half_t2 = t * t * Rational(1, 2);
  auto D = [&](DKind kind, int j) { return L.embed(D_series(kind, j, order)); };
  auto opuc = [&](int degree) { return opuc_build(bessel_moments(order, auto_window(degree, order)), degree); };
  switch (sym) {
    case ExtendedSymmetry::O: {
      const MultiPoly pre = exp(-(alpha * t) - half_t2);
      if (l == 0) return pre;
      OPUCData d = opuc(l);
      const int j = l - 1;
      const MultiPoly ps = poly_at(d.reversed(j), -alpha, L), p = poly_at(d.pi[static_cast<size_t>(j)], -alpha, L);
      if (l % 2 == 0) return pre * ((ps - alpha * p) * D(DKind::mm, k) + (ps + alpha * p) * D(DKind::pp, k - 1)) * Rational(1, 2);
      return pre * ((ps + alpha * p) * L.exp_t(L.one()) * D(DKind::pm, k) + (ps - alpha * p) * L.exp_t(-L.one()) * D(DKind::mp, k)) *
             Rational(1, 2);
    }
    case ExtendedSymmetry::S:
      if (l % 2 == 0) break;
      return exp(-half_t2) * D(DKind::pp, k);
    case ExtendedSymmetry::u: {
      if (l % 2 == 0) break;
      OPUCData d = opuc(k);
      return exp(-(alpha * t) - t * t) * poly_at(d.reversed(k), -alpha, L) * D(DKind::D, k);
    }
  }
  throw std::invalid_argument("P_alpha_opuc: no orthogonal polynomial formula for this case");
}

Series P_alpha_one_opuc(ExtendedSymmetry sym, int l, int order) {
  if (l < 0) throw std::invalid_argument("P_alpha_one_opuc: negative bound");
  const Series t = Series::t(order), t2 = Series::monomial(2, 1, order);
  const int k = l / 2;
  switch (sym) {
    case ExtendedSymmetry::O:
      if (l % 2 == 0) return series_exp(-t - t2 * Rational(1, 2)) * D_series(DKind::mp, k, order);
      return series_exp(-(t2 * Rational(1, 2))) * D_series(DKind::pp, k, order);
    case ExtendedSymmetry::S:
      if (l % 2 == 0) break;
      return series_exp(-(t2 * Rational(1, 2))) * D_series(DKind::pp, k, order);
    case ExtendedSymmetry::u: {
      if (l % 2 == 0) break;
      const int q = l / 4;
      const Series pre = series_exp(-t - t2);
      if (l % 4 == 1) return pre * D_series(DKind::pp, q, order) * D_series(DKind::mp, q, order);
      return pre * D_series(DKind::pp, q, order) * D_series(DKind::mp, q + 1, order);
    }
  }
  throw std::invalid_argument("P_alpha_one_opuc: no product formula for this case");
}

Series P_alpha_one_integral(ExtendedSymmetry sym, int l, int order) {
  AlphaLayout A = AlphaLayout::make(order, -1);
  MultiPoly P = P_alpha_series(sym, l, A).evaluate(A.alpha, 1);
  if (sym == ExtendedSymmetry::S) P = P.evaluate(A.beta, 1);
  return series_of(P, A.t, order);
}

Report p_alpha_routes_check(int lmax, int N, int B) {
  Report r{"Poisson models, integral vs orthogonal polynomial route", {}};
  AlphaLayout A = AlphaLayout::make(N, B);
  for (int l = 0; l <= lmax; ++l) {
    r.add("O " + at(l), P_alpha_series(ExtendedSymmetry::O, l, A) == P_alpha_opuc(ExtendedSymmetry::O, l, A));
    if (l % 2) {
      r.add("S " + at(l), P_alpha_series(ExtendedSymmetry::S, l, A) == P_alpha_opuc(ExtendedSymmetry::S, l, A));
      r.add("u " + at(l), P_alpha_series(ExtendedSymmetry::u, l, A) == P_alpha_opuc(ExtendedSymmetry::u, l, A));
    }
  }
  for (int l = 0; l <= lmax; ++l) {
    r.add("O alpha=1 " + at(l), P_alpha_one_integral(ExtendedSymmetry::O, l, N) == P_alpha_one_opuc(ExtendedSymmetry::O, l, N));
    if (l % 2) {
      r.add("S beta=1 " + at(l), P_alpha_one_integral(ExtendedSymmetry::S, l, N) == P_alpha_one_opuc(ExtendedSymmetry::S, l, N));
      r.add("u alpha=1 " + at(l), P_alpha_one_integral(ExtendedSymmetry::u, l, N) == P_alpha_one_opuc(ExtendedSymmetry::u, l, N));
      // e^{-t^2} E_{O-(m+2)} E_{O-(m+1)} with m = l // 2.
      const int m = l / 2;
      Laurent<Series> g = exp_tz(N, auto_window(m + 2, N));
      Series prod = series_exp(-Series::monomial(2, 1, N)) * E({Family::O_minus, m + 2}, g) * E({Family::O_minus, m + 1}, g);
      r.add("u alpha=1 as O- product " + at(l), P_alpha_one_integral(ExtendedSymmetry::u, l, N) == prod);
    }
  }
  return r;
}

}  // namespace incseq
