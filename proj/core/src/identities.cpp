#include <algorithm>
#include <map>
#include <memory>

#include "incseq/group_integrals.hpp"
#include "incseq/matrix.hpp"
#include "incseq/symfunc.hpp"

namespace incseq {

MultiPoly i_entry(const Alphabet& A, int j) { return g_entry(A, A, j); }

MultiPoly g_entry(const Alphabet& A, const Alphabet& B, int j) {
  MultiPoly s = A.zero();
  for (int m = std::max(0, -j); m <= A.cap() && m + j <= B.cap(); ++m) s += A.h(m) * B.h(m + j);
  return s;
}

namespace {

std::string first_difference(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly d = a - b;
  if (d.is_zero()) return {};
  const MultiPoly::Term* best = nullptr;
  for (const auto& t : d.terms())
    if (!best || t.first.total_degree() < best->first.total_degree()) best = &t;
  MultiPoly mono = MultiPoly::monomial(best->first, Rational(1), a.grading());
  return "first difference at " + mono.str() + ": " + a.coeff(best->first).str() + " vs " + b.coeff(best->first).str();
}

void compare(Report& r, const std::string& name, const MultiPoly& lhs, const MultiPoly& rhs) {
  const bool ok = lhs == rhs;
  r.add(name, ok, ok ? std::string() : first_difference(lhs, rhs));
}

// Power series symbol a(u) = sum a_m u^m as the weight of an orthogonal or
// symplectic integral: iota_j = sum_m a_m a_{m+j}, a(1), a(-1).
SymmetricWeight<MultiPoly> symmetric_weight(const GenFun& a) {
  auto memo = std::make_shared<std::map<int, MultiPoly>>();
  auto coeffs = std::make_shared<GenFun>(a);
  SymmetricWeight<MultiPoly> w;
  w.iota = [memo, coeffs](int j) {
    j = std::abs(j);
    auto it = memo->find(j);
    if (it != memo->end()) return it->second;
    const GenFun& c = *coeffs;
    MultiPoly s = zero_like(c.front());
    for (size_t m = 0; m + static_cast<size_t>(j) < c.size(); ++m) s += c[m] * c[m + static_cast<size_t>(j)];
    return memo->emplace(j, s).first->second;
  };
  w.at_one = zero_like(a.front());
  w.at_minus_one = zero_like(a.front());
  for (size_t m = 0; m < a.size(); ++m) {
    w.at_one += a[m];
    if (m % 2)
      w.at_minus_one -= a[m];
    else
      w.at_minus_one += a[m];
  }
  return w;
}

MultiPoly expect(Family f, int dim, const GenFun& a) {
  return expect_det(GroupSpec{f, dim}, symmetric_weight(a), a.front());
}

// E_{O(m)} det(U) det a(U).
MultiPoly expect_det_twisted(int dim, const GenFun& a) {
  if (dim == 0) return one_like(a.front());
  return (expect(Family::O_plus, dim, a) - expect(Family::O_minus, dim, a)) * Rational(1, 2);
}

// E_{U(l)} det(f(U) g(U^dagger)) = det(c_{j-k}), c_d = sum_b f_{b+d} g_b.
MultiPoly expect_unitary(int l, const GenFun& f, const GenFun& g) {
  auto c = [&](int d) {
    MultiPoly s = zero_like(f.front());
    for (int b = std::max(0, -d); b < static_cast<int>(g.size()) && b + d < static_cast<int>(f.size()); ++b)
      s += f[static_cast<size_t>(b + d)] * g[static_cast<size_t>(b)];
    return s;
  };
  return toeplitz_det<MultiPoly>(l, c, f.front());
}

GenFun linear(const MultiPoly& c) { return {one_like(c), c}; }

GenFun geometric(const MultiPoly& c, int terms) {
  GenFun g{one_like(c)};
  for (int m = 1; m <= terms; ++m) g.push_back(g.back() * c);
  return g;
}

struct Setup {
  IdentityContext ctx;
  Grading g;
  int alpha_slot = 8, beta_slot = 9;
  std::unique_ptr<Alphabet> X, Xp, Yp;
  MultiPoly a, b, one;

  explicit Setup(const IdentityContext& c) : ctx(c) {
    if (c.D < 1) throw usage_error("verify_identity: degree bound must be at least 1");
    if (c.k < 2 || c.k > 8) throw usage_error("verify_identity: need 2 <= k <= 8 variables");
    g.set_bound(0, c.D);
    g.assign(alpha_slot, 1).set_bound(1, c.ab_bound);
    g.assign(beta_slot, 2).set_bound(2, c.ab_bound);
    std::vector<int> xs, xh, yh;
    for (int s = 0; s < c.k; ++s) xs.push_back(s);
    for (int s = 0; s < c.k / 2; ++s) xh.push_back(s);
    for (int s = c.k / 2; s < c.k; ++s) yh.push_back(s);
    X = std::make_unique<Alphabet>(xs, std::vector<int>{}, g, c.D);
    Xp = std::make_unique<Alphabet>(xh, std::vector<int>{}, g, c.D);
    Yp = std::make_unique<Alphabet>(yh, std::vector<int>{}, g, c.D);
    a = MultiPoly::variable(alpha_slot, g);
    b = MultiPoly::variable(beta_slot, g);
    one = MultiPoly::constant(1, g);
  }
  SumWeights w() const { return {a, b}; }
  MultiPoly sum(SumVariant v, int l) const { return schur_sum(v, l, w(), *X); }
  GenFun H() const { return X->H(); }
  MultiPoly Hb() const { return X->H_at(b); }
  MultiPoly Ea() const { return X->E_at(a); }
};

using IdentityFn = void (*)(const Setup&, int, Report&);

void unitary_pair(const Setup& s, int l, Report& r) {
  compare(r, "sum_{l(lambda)<=l} s(x)s(y) = E_U(l) det H(U;x)H(U^+;y)",
          schur_sum(SumVariant::unitary_pair, l, s.w(), *s.Xp, s.Yp.get()), expect_unitary(l, s.Xp->H(), s.Yp->H()));
}

void orthogonal(const Setup& s, int l, Report& r) {
  compare(r, "sum_{l(lambda)<=l} s_{2lambda} = E_O(l) det H(U)", s.sum(SumVariant::orthogonal, l),
          l == 0 ? s.one : expect(Family::O, l, s.H()));
}

void symplectic(const Setup& s, int l, Report& r) {
  compare(r, "sum_{l(lambda^2)<=2l} s_{lambda^2} = E_Sp(2l) det H(U)", s.sum(SumVariant::symplectic, 2 * l),
          expect(Family::Sp, 2 * l, s.H()));
}

void determinant_forms(const Setup& s, int l, Report& r) {
  const Alphabet& A = *s.X;
  auto ihank = [&](int n, int shift, int sign) {
    return hankel_det<MultiPoly>(n, [&](int j) { return i_entry(A, j); }, shift, sign, A.zero());
  };
  const MultiPoly H1 = A.H_at(Rational(1)), Hm = A.H_at(Rational(-1));
  compare(r, "sum s(x)s(y) = det g_{j-k}(x;y)", schur_sum(SumVariant::unitary_pair, l, s.w(), *s.Xp, s.Yp.get()),
          toeplitz_det<MultiPoly>(l, [&](int j) { return g_entry(*s.Xp, *s.Yp, j); }, A.zero()));
  MultiPoly even = ihank(l, 0, +1) * Rational(1, 2);
  if (l >= 1) even += H1 * Hm * ihank(l - 1, 2, -1);
  compare(r, "sum_{l<=2l} s_{2lambda} = [(1/2)det(i+i) + H(1)H(-1)det(i-i)]/2", s.sum(SumVariant::orthogonal, 2 * l),
          l == 0 ? s.one : even * Rational(1, 2));
  compare(r, "sum_{l<=2l+1} s_{2lambda} = [H(1)det(i-i) + H(-1)det(i+i)]/2", s.sum(SumVariant::orthogonal, 2 * l + 1),
          (H1 * ihank(l, 1, -1) + Hm * ihank(l, 1, +1)) * Rational(1, 2));
  compare(r, "sum_{l<=2l} s_{lambda^2} = det(i_{j-k} - i_{j+k+2})", s.sum(SumVariant::symplectic, 2 * l),
          ihank(l, 2, -1));
}

void tilde_pair(const Setup& s, int l, Report& r) {
  MultiPoly t = expect_unitary(l, s.Xp->H(), s.Yp->H());
  compare(r, "sum_{l<=2l} s~(x)s~(y) = E_UU(2l) det H(U;x)H(U^+;y)",
          schur_sum(SumVariant::tilde_pair, 2 * l, s.w(), *s.Xp, s.Yp.get()), t * t);
}

void tilde_square(const Setup& s, int l, Report& r) {
  compare(r, "sum_{l<=l} s~_{2lambda^2} = E_u(2l) det H(U)", s.sum(SumVariant::tilde_square, 2 * l),
          expect_unitary(l, s.H(), s.H()));
  compare(r, "sum_{l<=l} s~_{2lambda^2} = sum_{l<=l} s_lambda^2", s.sum(SumVariant::tilde_square, 2 * l),
          schur_sum(SumVariant::unitary_pair, l, s.w(), *s.X, s.X.get()));
}

void alpha_orthogonal(const Setup& s, int l, Report& r) {
  compare(r, "sum_{l<=l} alpha^f s = E_O(l) det (1+alpha U)H(U)", s.sum(SumVariant::orthogonal_alpha, l),
          l == 0 ? s.one : expect(Family::O, l, genfun_mul(linear(s.a), s.H())));
}

void beta_symplectic(const Setup& s, int l, Report& r) {
  compare(r, "sum_{l<=2l} beta^f' s = E_Sp(2l) det (1-beta U)^{-1}H(U)", s.sum(SumVariant::symplectic_beta, 2 * l),
          expect(Family::Sp, 2 * l, genfun_mul(geometric(s.b, s.ctx.ab_bound), s.H())));
  compare(r, "sum_{l<=2l+1} beta^f' s = H(beta) E_Sp(2l) det H(U)", s.sum(SumVariant::symplectic_beta, 2 * l + 1),
          s.Hb() * expect(Family::Sp, 2 * l, s.H()));
}

void all_partitions(const Setup& s, int l, Report& r) {
  const Alphabet& A = *s.X;
  auto ihank = [&](int n, int shift, int sign) {
    return hankel_det<MultiPoly>(n, [&](int j) { return i_entry(A, j); }, shift, sign, A.zero());
  };
  compare(r, "sum_{l<=l} s = E(1) E_O-(l+1) det H(U)", s.sum(SumVariant::all, l),
          A.E_at(Rational(1)) * expect(Family::O_minus, l + 1, s.H()));
  compare(r, "sum_{l<=2l} s = det(i_{j-k} + i_{j+k+1})", s.sum(SumVariant::all, 2 * l), ihank(l, 1, +1));
  compare(r, "sum_{l<=2l+1} s = H(1) det(i_{j-k} - i_{j+k+2})", s.sum(SumVariant::all, 2 * l + 1),
          A.H_at(Rational(1)) * ihank(l, 2, -1));
  // alpha = 1 in the alpha-weighted orthogonal sum.
  MultiPoly at_one = schur_sum(SumVariant::orthogonal_alpha, l, SumWeights{s.one, s.b}, A);
  compare(r, "alpha = 1 in sum alpha^f s equals sum s", at_one, s.sum(SumVariant::all, l));
}

void column_bound(const Setup& s, int l, Report& r) {
  compare(r, "sum_{lambda'_2<=l} alpha^f s = E(alpha) E_O(l) det H(U)", s.sum(SumVariant::column_bound, l),
          s.Ea() * (l == 0 ? s.one : expect(Family::O, l, s.H())));
  compare(r, "sum_{lambda'_2<=l<=lambda'_1} alpha^{2lambda'_1-l-f} s = E(alpha) E_O(l) det(U) det H(U)",
          s.sum(SumVariant::column_bound_det, l), s.Ea() * expect_det_twisted(l, s.H()));
}

void two_core(const Setup& s, int, Report& r) {
  bool lemma = true, sign = true;
  std::string bad;
  for (const Partition& p : partitions_up_to(2 * s.ctx.D)) {
    PartitionTools t = partition_tools(p);
    const bool cond = odd_parts(t.plus) == odd_parts(t.minus) && 2 * odd_parts(t.plus) == t.f;
    if (cond != t.core_quotient.core.empty()) {
      lemma = false;
      bad = to_string(p);
    }
    if (t.f_conjugate != weight(t.plus) - weight(t.minus)) sign = false;
  }
  r.add("trivial 2-core iff f(lambda+) = f(lambda-) = f(lambda)/2", lemma, bad);
  r.add("f(lambda') = |lambda+| - |lambda-|", sign);
}

void tilde_alpha_beta(const Setup& s, int l, Report& r) {
  GenFun f = genfun_mul(genfun_mul(linear(s.a), geometric(s.b, s.ctx.ab_bound)), s.H());
  compare(r, "sum_{l<=2l} alpha^{f/2} beta^{f'/2} s~ = E_U(l) det (1+aU)(1-bU)^{-1} H(U)H(U^+)",
          s.sum(SumVariant::tilde_alpha_beta, 2 * l), expect_unitary(l, f, s.H()));
}

void tilde_pieri(const Setup& s, int l, Report& r) {
  compare(r, "sum_{l<=2l+1} alpha^{f/2} beta^{f'/2} s~ = H(beta) E_U(l) det (1+aU) H(U)H(U^+)",
          s.sum(SumVariant::tilde_alpha_beta, 2 * l + 1), s.Hb() * expect_unitary(l, genfun_mul(linear(s.a), s.H()), s.H()));
}

void tilde_dual(const Setup& s, int l, Report& r) {
  compare(r, "sum_{mu'_2<=2l} alpha^{f/2} beta^{f'/2} s~ = E(alpha) E_U(l) det (1-bU)^{-1} H(U)H(U^+)",
          s.sum(SumVariant::tilde_column, 2 * l),
          s.Ea() * expect_unitary(l, genfun_mul(geometric(s.b, s.ctx.ab_bound), s.H()), s.H()));
  compare(r, "sum_{mu'_2<=2l+1} alpha^{f/2} beta^{f'/2} s~ = E(alpha) H(beta) E_U(l) det H(U)H(U^+)",
          s.sum(SumVariant::tilde_column, 2 * l + 1), s.Ea() * s.Hb() * expect_unitary(l, s.H(), s.H()));
}

const std::vector<std::pair<std::string, IdentityFn>>& registry() {
  static const std::vector<std::pair<std::string, IdentityFn>> r = {
      {"unitary-pair", unitary_pair},
      {"orthogonal", orthogonal},
      {"symplectic", symplectic},
      {"determinant-forms", determinant_forms},
      {"tilde-pair", tilde_pair},
      {"tilde-square", tilde_square},
      {"alpha-orthogonal", alpha_orthogonal},
      {"beta-symplectic", beta_symplectic},
      {"all-partitions", all_partitions},
      {"column-bound", column_bound},
      {"two-core", two_core},
      {"tilde-alpha-beta", tilde_alpha_beta},
      {"tilde-pieri", tilde_pieri},
      {"tilde-dual", tilde_dual},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& identity_tags() {
  static const std::vector<std::string> tags = [] {
    std::vector<std::string> t;
    for (const auto& e : registry()) t.push_back(e.first);
    return t;
  }();
  return tags;
}

IdentityResult verify_identity(const std::string& tag, int l, const IdentityContext& ctx) {
  auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == tag; });
  if (it == registry().end()) throw usage_error("unknown identity tag: " + tag);
  if (l < 0) throw usage_error("verify_identity: negative l");
  Setup s(ctx);
  IdentityResult res{tag, l, ctx.k, ctx.D, Report{tag + " l=" + std::to_string(l), {}}};
  it->second(s, l, res.report);
  return res;
}

namespace {

MultiPoly alpha_pow(int e, int slot, const Grading& g) { return pow(MultiPoly::variable(slot, g), e); }

// F(m, n) = alpha^{f((n-1, m))} for m < n, antisymmetric.
MultiPoly pair_value(int m, int n, int slot, const Grading& g) {
  if (m == n) return MultiPoly(g);
  if (m > n) return -pair_value(n, m, slot, g);
  return alpha_pow((m % 2) + ((n - 1) % 2), slot, g);
}

}  // namespace

PfaffianRoute pfaffian_route_O(int l, const Alphabet& A, int alpha_slot) {
  if (l % 2 || l < 0) throw usage_error("pfaffian_route_O: l must be even");
  const Grading& g = A.grading();
  const MultiPoly al = MultiPoly::variable(alpha_slot, g), one = A.one();
  std::map<int, MultiPoly> icache;
  auto i = [&](int j) -> const MultiPoly& {
    auto it = icache.find(j);
    if (it == icache.end()) it = icache.emplace(j, i_entry(A, j)).first;
    return it->second;
  };
  const MultiPoly c1 = one + al * al;
  auto M0 = [&](size_t j, size_t k) {
    const int d = static_cast<int>(k) - static_cast<int>(j);
    const int ad = std::abs(d);
    MultiPoly s = A.zero();
    for (int dd = 0; dd < ad; ++dd) s += c1 * i(2 * dd + 1 - ad) + al * (i(2 * dd - ad) + i(2 * dd + 2 - ad));
    s *= Rational(1, 2);
    return d < 0 ? -s : s;
  };
  auto M0pp = [&](size_t j, size_t k) {
    const int d = static_cast<int>(k) - static_cast<int>(j);
    return c1 * (i(d - 1) - i(d + 1)) + al * (i(d - 2) - i(d + 2));
  };
  auto M0p = [&](size_t j, size_t k) {
    const int d = static_cast<int>(k) - static_cast<int>(j);
    return i(d - 1) - i(d + 1);
  };
  const size_t n = static_cast<size_t>(l), n2 = l >= 2 ? n - 2 : 0;
  const MultiPoly main = pfaffian(RingMatrix<MultiPoly>::build(n, n, A.zero(), M0));
  MultiPoly corr = A.zero();
  MultiPoly corr_literal = A.zero();
  if (l >= 2) {
    const MultiPoly pre = (one - al * al) * A.H_at(Rational(1)) * A.H_at(Rational(-1)) * Rational(1, 2);
    corr = pre * pfaffian(RingMatrix<MultiPoly>::build(n2, n2, A.zero(), M0pp));
    corr_literal = pre * pfaffian(RingMatrix<MultiPoly>::build(n2, n2, A.zero(), M0p));
  }
  PfaffianRoute out{main + corr, main + corr_literal, Report{"pfaffian route l=" + std::to_string(l), {}}};
  const MultiPoly lhs = schur_sum(SumVariant::orthogonal_alpha, l, SumWeights{al, A.zero()}, A);
  compare(out.report, "sum alpha^f s = pf(M0) + (1/2)(1-alpha^2)H(1)H(-1)pf(M0'')", lhs, out.value);
  compare(out.report, "sum alpha^f s = pf of the pair kernel", lhs, pfaffian_direct_O(l, A, alpha_slot));
  return out;
}

MultiPoly pfaffian_direct_O(int l, const Alphabet& A, int alpha_slot) {
  const Grading& g = A.grading();
  const int cap = A.cap();
  const int top = cap + l;  // largest index with h_{m-j} possibly nonzero
  // G[k][m] = sum_n F(m, n) h_{n-k}
  std::vector<std::vector<MultiPoly>> G(static_cast<size_t>(l), std::vector<MultiPoly>(static_cast<size_t>(top) + 1, A.zero()));
  for (int k = 0; k < l; ++k)
    for (int m = 0; m <= top; ++m)
      for (int n = k; n <= k + cap; ++n) {
        MultiPoly f = pair_value(m, n, alpha_slot, g);
        if (!f.is_zero()) G[static_cast<size_t>(k)][static_cast<size_t>(m)] += f * A.h(n - k);
      }
  auto M = RingMatrix<MultiPoly>::build(static_cast<size_t>(l), static_cast<size_t>(l), A.zero(), [&](size_t j, size_t k) {
    MultiPoly s = A.zero();
    for (int m = static_cast<int>(j); m <= static_cast<int>(j) + cap; ++m) s += A.h(m - static_cast<int>(j)) * G[k][static_cast<size_t>(m)];
    return s;
  });
  if (l % 2 == 0) return pfaffian(M);
  std::vector<MultiPoly> v;
  for (int j = 0; j < l; ++j) {
    MultiPoly s = A.zero();
    for (int m = j; m <= j + cap; ++m) s += alpha_pow(m % 2, alpha_slot, g) * A.h(m - j);
    v.push_back(s);
  }
  return bordered_pfaffian(v, M);
}

Report pair_lemma_check(int l, int top) {
  Grading g;
  g.assign(0, 1);
  const int slot = 0;
  Report r{"pair lemma l=" + std::to_string(l), {}};
  bool ok = true;
  std::string bad;
  std::vector<int> mu(static_cast<size_t>(l));
  std::function<void(int, int)> rec = [&](int pos, int start) {
    if (pos == l) {
      Partition lam;
      for (int j = l - 1; j >= 0; --j) lam.push_back(mu[static_cast<size_t>(j)] - j);
      const MultiPoly lhs = alpha_pow(odd_parts(normalized(lam)), slot, g);
      auto M = RingMatrix<MultiPoly>::build(static_cast<size_t>(l), static_cast<size_t>(l), MultiPoly(g), [&](size_t a, size_t b) {
        return pair_value(mu[a], mu[b], slot, g);
      });
      MultiPoly rhs(g);
      if (l % 2 == 0) {
        rhs = pfaffian(M);
      } else {
        std::vector<MultiPoly> v;
        for (int m : mu) v.push_back(alpha_pow(m % 2, slot, g));
        rhs = bordered_pfaffian(v, M);
      }
      if (!(lhs == rhs) && ok) {
        ok = false;
        std::string s;
        for (int m : mu) s += std::to_string(m) + " ";
        bad = "mu = " + s;
      }
      return;
    }
    for (int v = start; v <= top; ++v) {
      mu[static_cast<size_t>(pos)] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
  r.add(l % 2 ? "F(mu) = pf(F(m); F(mu_i, mu_k))" : "F(mu) = pf(F(mu_i, mu_k))", ok, bad);
  return r;
}

}  // namespace incseq
