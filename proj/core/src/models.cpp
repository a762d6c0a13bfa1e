#include <functional>
#include <stdexcept>

#include "incseq/rsk.hpp"
#include "incseq/symfunc.hpp"

namespace incseq {

std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::U: return "U";
    case ModelKind::UU: return "UU";
    case ModelKind::O: return "O";
    case ModelKind::S: return "S";
    case ModelKind::u: return "u";
  }
  return "?";
}

namespace {

// One orbit of cells whose multiplicities are tied together.
struct Orbit {
  enum Kind { geometric, bernoulli, parity } kind;
  std::vector<Cell> cells;
  int deg;         // letter degree per unit of multiplicity
  MultiPoly unit;  // weight of one unit
  MultiPoly par;   // parity: extra factor on odd multiplicity
};

bool same_sector(const Letter& a, const Letter& b) { return a.in_W == b.in_W; }

MultiPoly var(const Letter& L, const Grading& g) { return MultiPoly::variable(L.slot, g); }

Orbit pair_orbit(std::vector<Cell> cells, const Letter& a, const Letter& b, const Grading& g) {
  return {same_sector(a, b) ? Orbit::geometric : Orbit::bernoulli, std::move(cells), 2, var(a, g) * var(b, g),
          MultiPoly(g)};
}

// g(c q) when `plain`, else g'(c, q).
Orbit diagonal_orbit(std::vector<Cell> cells, bool plain, const MultiPoly& c, const Letter& L, const Grading& g) {
  if (plain) return {Orbit::geometric, std::move(cells), 1, c * var(L, g), MultiPoly(g)};
  return {Orbit::parity, std::move(cells), 1, var(L, g), c};
}

std::vector<Orbit> orbits(const ModelSpec& s) {
  const Grading& g = s.grading;
  const auto& q = s.q;
  const int a = static_cast<int>(q.size());
  std::vector<Orbit> out;
  switch (s.kind) {
    case ModelKind::U:
      for (int i = 0; i < a; ++i)
        for (size_t j = 0; j < s.qp.size(); ++j)
          out.push_back(pair_orbit({{i + 1, static_cast<int>(j) + 1}}, q[i], s.qp[j], g));
      break;
    case ModelKind::UU:
      for (int i = 0; i < a; ++i)
        for (size_t j = 0; j < s.qp.size(); ++j)
          for (int sg : {1, -1}) {
            const int x = i + 1, y = sg * (static_cast<int>(j) + 1);
            out.push_back(pair_orbit({{x, y}, {-x, -y}}, q[i], s.qp[j], g));
          }
      break;
    case ModelKind::O:
      for (int i = 0; i < a; ++i) {
        for (int j = i + 1; j < a; ++j) out.push_back(pair_orbit({{i + 1, j + 1}, {j + 1, i + 1}}, q[i], q[j], g));
        out.push_back(diagonal_orbit({{i + 1, i + 1}}, q[i].in_W, s.alpha, q[i], g));
      }
      break;
    case ModelKind::S:
      for (int i = 0; i < a; ++i) {
        for (int j = i + 1; j < a; ++j)
          out.push_back(pair_orbit({{i + 1, -(j + 1)}, {j + 1, -(i + 1)}}, q[i], q[j], g));
        out.push_back(diagonal_orbit({{i + 1, -(i + 1)}}, !q[i].in_W, s.beta, q[i], g));
      }
      break;
    case ModelKind::u:
      for (int i = 0; i < a; ++i) {
        const int x = i + 1;
        for (int j = i + 1; j < a; ++j) {
          const int y = j + 1;
          out.push_back(pair_orbit({{x, y}, {-x, -y}, {y, x}, {-y, -x}}, q[i], q[j], g));
          out.push_back(pair_orbit({{x, -y}, {-x, y}, {-y, x}, {y, -x}}, q[i], q[j], g));
        }
        out.push_back(diagonal_orbit({{x, x}, {-x, -x}}, q[i].in_W, s.alpha, q[i], g));
        out.push_back(diagonal_orbit({{x, -x}, {-x, x}}, !q[i].in_W, s.beta, q[i], g));
      }
      break;
  }
  return out;
}

Letters sector_set(const std::vector<Letter>& q, bool both_signs, int sign = 1) {
  Letters W;
  for (size_t i = 0; i < q.size(); ++i)
    if (q[i].in_W) {
      const int v = static_cast<int>(i) + 1;
      W.insert(sign * v);
      if (both_signs) W.insert(-v);
    }
  return W;
}

std::pair<Letters, Letters> lis_sectors(const ModelSpec& s) {
  switch (s.kind) {
    case ModelKind::U: return {sector_set(s.q, false), sector_set(s.qp, false)};
    case ModelKind::UU: return {sector_set(s.q, true), sector_set(s.qp, true)};
    case ModelKind::O: return {sector_set(s.q, false), sector_set(s.q, false)};
    case ModelKind::S: return {sector_set(s.q, false), sector_set(s.q, false, -1)};
    case ModelKind::u: return {sector_set(s.q, true), sector_set(s.q, true)};
  }
  return {};
}

Alphabet alphabet(const std::vector<Letter>& q, const ModelSpec& s) {
  std::vector<int> x, y;
  for (const Letter& L : q) (L.in_W ? y : x).push_back(L.slot);
  return Alphabet(x, y, s.grading, s.D);
}

MultiPoly one(const Grading& g) { return MultiPoly::constant(1, g); }

// (1 - c) for same sectors, (1 + c)^{-1} otherwise.
MultiPoly pair_factor(const Letter& a, const Letter& b, const Grading& g) {
  const MultiPoly c = var(a, g) * var(b, g);
  return same_sector(a, b) ? one(g) - c : (one(g) + c).reciprocal();
}

MultiPoly unitary_Z(const std::vector<Letter>& q, const std::vector<Letter>& qp, const Grading& g) {
  MultiPoly z = one(g);
  for (const Letter& a : q)
    for (const Letter& b : qp) z = z * pair_factor(a, b, g);
  return z;
}

}  // namespace

MultiPoly model_Z(const ModelSpec& s) {
  const Grading& g = s.grading;
  const auto& q = s.q;
  MultiPoly z = one(g);
  auto off_diagonal = [&] {
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = i + 1; j < q.size(); ++j) z = z * pair_factor(q[i], q[j], g);
  };
  switch (s.kind) {
    case ModelKind::U: return unitary_Z(q, s.qp, g);
    case ModelKind::UU: return pow(unitary_Z(q, s.qp, g), 2);
    case ModelKind::O:
      for (const Letter& L : q) {
        const MultiPoly c = s.alpha * var(L, g);
        if (L.in_W) z = z * (one(g) - c);
        else z = z * (one(g) + c).reciprocal() * (one(g) - var(L, g) * var(L, g));
      }
      off_diagonal();
      return z;
    case ModelKind::S:
      for (const Letter& L : q) {
        const MultiPoly c = s.beta * var(L, g);
        if (!L.in_W) z = z * (one(g) - c);
        else z = z * (one(g) + c).reciprocal() * (one(g) - var(L, g) * var(L, g));
      }
      off_diagonal();
      return z;
    case ModelKind::u:
      for (const Letter& L : q) {
        const MultiPoly ca = s.alpha * var(L, g), cb = s.beta * var(L, g);
        if (!L.in_W) z = z * (one(g) - cb) * (one(g) + ca).reciprocal();
        else z = z * (one(g) + cb).reciprocal() * (one(g) - ca);
      }
      return z * unitary_Z(q, q, g);
  }
  return z;
}

std::vector<MultiPoly> model_lis_buckets(const ModelSpec& s) {
  const std::vector<Orbit> orb = orbits(s);
  const auto [W1, W2] = lis_sectors(s);
  const Grading& g = s.grading;
  std::vector<MultiPoly> buckets;
  std::vector<int> mult(orb.size(), 0);

  std::function<void(size_t, int, const MultiPoly&)> rec = [&](size_t k, int deg, const MultiPoly& wt) {
    if (wt.is_zero()) return;
    if (k == orb.size()) {
      WeightedMultiset M;
      for (size_t t = 0; t < orb.size(); ++t)
        for (const Cell& c : orb[t].cells) M.add(c.first, c.second, mult[t]);
      const size_t L = static_cast<size_t>(lis_general(M, W1, W2));
      while (buckets.size() <= L) buckets.push_back(MultiPoly(g));
      buckets[L] += wt;
      return;
    }
    const Orbit& o = orb[k];
    MultiPoly unit_pow = one(g);
    for (int w = 0; deg + o.deg * w <= s.D; ++w) {
      if (o.kind == Orbit::bernoulli && w > 1) break;
      mult[k] = w;
      const MultiPoly factor = (o.kind == Orbit::parity && (w & 1)) ? unit_pow * o.par : unit_pow;
      rec(k + 1, deg + o.deg * w, wt * factor);
      unit_pow = unit_pow * o.unit;
    }
    mult[k] = 0;
  };
  rec(0, 0, one(g));
  if (buckets.empty()) buckets.push_back(MultiPoly(g));
  return buckets;
}

namespace {

MultiPoly up_to(const std::vector<MultiPoly>& buckets, int l, const Grading& g) {
  MultiPoly sum(g);
  for (size_t L = 0; L < buckets.size(); ++L)
    if (l < 0 || static_cast<int>(L) <= l) sum += buckets[L];
  return sum;
}

}  // namespace

MultiPoly model_distribution(const ModelSpec& s, int l) {
  return model_Z(s) * up_to(model_lis_buckets(s), l, s.grading);
}

MultiPoly model_schur_side(const ModelSpec& s, int l) {
  const Alphabet A = alphabet(s.q, s);
  const SumWeights w{s.alpha, s.beta};
  switch (s.kind) {
    case ModelKind::U: {
      const Alphabet B = alphabet(s.qp, s);
      return schur_sum(SumVariant::unitary_pair, l, w, A, &B);
    }
    case ModelKind::UU: {
      const Alphabet B = alphabet(s.qp, s);
      return schur_sum(SumVariant::tilde_pair, l, w, A, &B);
    }
    case ModelKind::O: return schur_sum(SumVariant::orthogonal_alpha, l, w, A);
    case ModelKind::S: return schur_sum(SumVariant::symplectic_beta, l, w, A);
    case ModelKind::u: return schur_sum(SumVariant::tilde_alpha_beta, l, w, A);
  }
  return MultiPoly(s.grading);
}

namespace {

std::string describe(const ModelSpec& s) {
  auto seq = [](const std::vector<Letter>& q) {
    std::string t;
    for (const Letter& L : q) t += L.in_W ? 'W' : '.';
    return t;
  };
  std::string d = to_string(s.kind) + " q=" + seq(s.q);
  if (s.kind == ModelKind::U || s.kind == ModelKind::UU) d += " q'=" + seq(s.qp);
  return d + " D=" + std::to_string(s.D);
}

}  // namespace

Report distribution_check(const ModelSpec& s, int lmax) {
  Report rep;
  rep.title = describe(s);
  const std::vector<MultiPoly> buckets = model_lis_buckets(s);
  const MultiPoly Z = model_Z(s);
  rep.add("Z has constant term 1", Z.constant_term() == Rational(1));
  rep.add("Z times all multisets is 1", Z * up_to(buckets, -1, s.grading) == one(s.grading));
  for (int l = 0; l <= lmax; ++l) {
    const bool eq = up_to(buckets, l, s.grading) == model_schur_side(s, l);
    rep.add("lis <= " + std::to_string(l) + " against the Schur sum", eq);
  }
  return rep;
}

ModelSpec make_model(ModelKind kind, int a, int b, unsigned Wbits, unsigned Wpbits, int D) {
  if (a < 0 || b < 0 || a + b > 12) throw std::invalid_argument("make_model: too many letters");
  constexpr int alpha_slot = 14, beta_slot = 15;
  ModelSpec s;
  s.kind = kind;
  s.D = D;
  s.grading.set_bound(0, D);
  s.grading.assign(alpha_slot, 1).assign(beta_slot, 2);
  for (int i = 0; i < a; ++i) s.q.push_back({i, (Wbits >> i & 1) != 0});
  if (kind == ModelKind::U || kind == ModelKind::UU)
    for (int j = 0; j < b; ++j) s.qp.push_back({a + j, (Wpbits >> j & 1) != 0});
  s.alpha = MultiPoly::variable(alpha_slot, s.grading);
  s.beta = MultiPoly::variable(beta_slot, s.grading);
  return s;
}

Report poisson_models_suite(int vars, int lmax, int D) {
  Report rep;
  rep.title = "lis distributions, letters <= " + std::to_string(vars) + ", l <= " + std::to_string(lmax) +
              ", D = " + std::to_string(D);
  for (ModelKind kind : {ModelKind::U, ModelKind::UU, ModelKind::O, ModelKind::S, ModelKind::u}) {
    const bool pair = kind == ModelKind::U || kind == ModelKind::UU;
    for (int a = 1; a <= vars; ++a)
      for (int b = pair ? 1 : 0; b <= (pair ? vars : 0); ++b)
        for (unsigned W = 0; W < (1u << a); ++W)
          for (unsigned Wp = 0; Wp < (1u << b); ++Wp) rep.merge(distribution_check(make_model(kind, a, b, W, Wp, D), lmax));
  }
  return rep;
}

const std::vector<std::string>& equidistribution_pairs() {
  static const std::vector<std::string> names{"O", "S-floor", "S-ceil", "u-floor", "u-ceil"};
  return names;
}

Report equidistribution_check(const std::string& pair, int nq, int nr, int lmax, int D) {
  if (nq < 0 || nr < 0 || nq + nr > 10) throw usage_error("equidistribution check: too many letters");
  constexpr int alpha_slot = 12, beta_slot = 13;
  Grading g;
  g.set_bound(0, D);
  std::vector<Letter> q, r;
  for (int i = 0; i < nq; ++i) q.push_back({i, false});
  for (int i = 0; i < nr; ++i) r.push_back({nq + i, true});
  const Letter alpha_letter{alpha_slot, true}, beta_letter{beta_slot, false};
  const MultiPoly alpha = MultiPoly::variable(alpha_slot, g), beta = MultiPoly::variable(beta_slot, g);
  const MultiPoly zero(g);

  auto cat = [](std::initializer_list<std::vector<Letter>> parts) {
    std::vector<Letter> v;
    for (const auto& p : parts) v.insert(v.end(), p.begin(), p.end());
    return v;
  };
  auto spec = [&](ModelKind k, std::vector<Letter> a, std::vector<Letter> b, MultiPoly al, MultiPoly be) {
    ModelSpec s;
    s.kind = k;
    s.grading = g;
    s.q = std::move(a);
    s.qp = std::move(b);
    s.alpha = std::move(al);
    s.beta = std::move(be);
    s.D = D;
    return s;
  };

  ModelSpec lhs, rhs;
  // lhs at level L(k) against rhs at level R(k).
  std::function<int(int)> L, R;
  const std::vector<Letter> qr = cat({q, r});
  if (pair == "O") {
    lhs = spec(ModelKind::O, qr, {}, alpha, zero);
    rhs = spec(ModelKind::O, cat({q, {alpha_letter}, r}), {}, zero, zero);
    L = R = [](int k) { return k; };
  } else if (pair == "S-floor") {
    lhs = spec(ModelKind::S, qr, {}, zero, beta);
    rhs = spec(ModelKind::S, qr, {}, zero, zero);
    L = [](int k) { return 2 * k + 1; };
    R = [](int k) { return 2 * k; };
  } else if (pair == "S-ceil") {
    lhs = spec(ModelKind::S, qr, {}, zero, beta);
    rhs = spec(ModelKind::S, cat({{beta_letter}, q, r}), {}, zero, zero);
    L = R = [](int k) { return 2 * k; };
  } else if (pair == "u-floor") {
    lhs = spec(ModelKind::u, qr, {}, alpha, beta);
    rhs = spec(ModelKind::U, cat({q, {alpha_letter}, r}), qr, zero, zero);
    L = [](int k) { return 2 * k + 1; };
    R = [](int k) { return k; };
  } else if (pair == "u-ceil") {
    lhs = spec(ModelKind::u, qr, {}, alpha, beta);
    rhs = spec(ModelKind::U, cat({{beta_letter}, q, {alpha_letter}, r}), qr, zero, zero);
    L = [](int k) { return 2 * k; };
    R = [](int k) { return k; };
  } else {
    throw usage_error("unknown equidistribution pair: " + pair);
  }

  Report rep;
  rep.title = "equidistribution " + pair + " q=" + std::to_string(nq) + " r=" + std::to_string(nr) +
              " D=" + std::to_string(D);
  const auto lb = model_lis_buckets(lhs), rb = model_lis_buckets(rhs);
  const MultiPoly lz = model_Z(lhs), rz = model_Z(rhs);
  for (int k = 0; k <= lmax; ++k) {
    const bool eq = lz * up_to(lb, L(k), g) == rz * up_to(rb, R(k), g);
    rep.add("level " + std::to_string(k), eq);
  }
  return rep;
}

}  // namespace incseq
