#include "incseq/symfunc.hpp"

#include <algorithm>

#include "incseq/matrix.hpp"

namespace incseq {

GenFun genfun_mul(const GenFun& a, const GenFun& b) {
  if (a.empty() || b.empty()) return {};
  GenFun r(a.size() + b.size() - 1, zero_like(a.front()));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

GenFun genfun_scale(const GenFun& a, const Rational& c) {
  GenFun r = a;
  Rational p(1);
  for (auto& v : r) {
    v *= p;
    p *= c;
  }
  return r;
}

Alphabet::Alphabet(std::vector<int> x_slots, std::vector<int> y_slots, const Grading& g, int cap)
    : x_(std::move(x_slots)), y_(std::move(y_slots)), g_(g), cap_(cap), zero_(g) {
  if (cap < 0) throw std::invalid_argument("Alphabet: negative degree cap");
  for (int s : x_)
    if (g.bounded(s) && g.bound[g.group[static_cast<size_t>(s)]] > cap)
      throw std::invalid_argument("Alphabet: degree cap below the truncation bound");
  for (int s : y_)
    if (g.bounded(s) && g.bound[g.group[static_cast<size_t>(s)]] > cap)
      throw std::invalid_argument("Alphabet: degree cap below the truncation bound");
  const size_t n = static_cast<size_t>(cap) + 1;
  hs_.assign(n, MultiPoly(g));
  es_.assign(n, MultiPoly(g));
  hs_[0] = es_[0] = MultiPoly::constant(1, g);
  for (int s : x_) {
    MultiPoly v = MultiPoly::variable(s, g);
    for (size_t m = 1; m < n; ++m) hs_[m] += v * hs_[m - 1];  // times (1 - v u)^{-1}
    for (size_t m = n - 1; m >= 1; --m) es_[m] += v * es_[m - 1];  // times (1 + v u)
  }
  for (int s : y_) {
    MultiPoly v = MultiPoly::variable(s, g);
    for (size_t m = n - 1; m >= 1; --m) hs_[m] += v * hs_[m - 1];
    for (size_t m = 1; m < n; ++m) es_[m] += v * es_[m - 1];
  }
}

const MultiPoly& Alphabet::h(int m) const {
  return m < 0 || m > cap_ ? zero_ : hs_[static_cast<size_t>(m)];
}

const MultiPoly& Alphabet::e(int m) const {
  return m < 0 || m > cap_ ? zero_ : es_[static_cast<size_t>(m)];
}

HGen Alphabet::h_gen() const {
  GenFun hs = hs_;
  Grading g = g_;
  return [hs, g](int m) { return m < 0 || m >= static_cast<int>(hs.size()) ? MultiPoly(g) : hs[static_cast<size_t>(m)]; };
}

namespace {

MultiPoly eval_genfun(const GenFun& f, const MultiPoly& c) {
  MultiPoly r = zero_like(c), p = one_like(c);
  for (const auto& v : f) {
    r += v * p;
    p = p * c;
  }
  return r;
}

}  // namespace

MultiPoly Alphabet::H_at(const MultiPoly& c) const { return eval_genfun(hs_, c); }
MultiPoly Alphabet::E_at(const MultiPoly& c) const { return eval_genfun(es_, c); }
MultiPoly Alphabet::H_at(const Rational& c) const { return eval_genfun(hs_, MultiPoly::constant(c, g_)); }
MultiPoly Alphabet::E_at(const Rational& c) const { return eval_genfun(es_, MultiPoly::constant(c, g_)); }

MultiPoly schur_from_h(const Partition& p, const HGen& h, const MultiPoly& proto) {
  const size_t n = p.size();
  if (n == 0) return one_like(proto);
  auto m = RingMatrix<MultiPoly>::build(n, n, proto, [&](size_t i, size_t j) {
    return h(p[i] - static_cast<int>(i) + static_cast<int>(j));
  });
  return det(m);
}

MultiPoly schur_from_e(const Partition& p, const HGen& e, const MultiPoly& proto) {
  return schur_from_h(conjugate(p), e, proto);
}

const MultiPoly& Alphabet::schur(const Partition& p) const {
  auto it = schur_cache_.find(p);
  if (it != schur_cache_.end()) return it->second;
  MultiPoly v(g_);
  const int k = static_cast<int>(x_.size()), m = static_cast<int>(y_.size());
  // Hook condition: lambda_{k+1} <= m.
  const bool vanishes = static_cast<int>(p.size()) > k && p[static_cast<size_t>(k)] > m;
  if (!vanishes && weight(p) <= cap_) {
    if (p.empty() || p.size() <= static_cast<size_t>(p.front()))
      v = schur_from_h(p, [this](int j) { return h(j); }, v);
    else
      v = schur_from_e(p, [this](int j) { return e(j); }, v);
  }
  return schur_cache_.emplace(p, std::move(v)).first->second;
}

MultiPoly schur(const Partition& p, const Alphabet& A) { return A.schur(p); }

MultiPoly schur_tableaux(const Partition& p, const Alphabet& A) {
  if (!A.y_slots().empty()) throw std::invalid_argument("schur_tableaux: ordinary alphabets only");
  const int k = static_cast<int>(A.x_slots().size());
  MultiPolyBuilder out(A.grading());
  std::vector<std::vector<int>> T;
  for (int r : p) T.emplace_back(static_cast<size_t>(r), 0);
  std::vector<std::pair<size_t, size_t>> cells;
  for (size_t i = 0; i < T.size(); ++i)
    for (size_t j = 0; j < T[i].size(); ++j) cells.emplace_back(i, j);
  std::function<void(size_t)> fill = [&](size_t c) {
    if (c == cells.size()) {
      Monomial mono;
      for (const auto& row : T)
        for (int v : row) {
          int s = A.x_slots()[static_cast<size_t>(v)];
          mono.set_exponent(s, mono.exponent(s) + 1);
        }
      out.add(mono, Rational(1));
      return;
    }
    auto [i, j] = cells[c];
    int lo = 0;
    if (j > 0) lo = std::max(lo, T[i][j - 1]);
    if (i > 0) lo = std::max(lo, T[i - 1][j] + 1);
    for (int v = lo; v < k; ++v) {
      T[i][j] = v;
      fill(c + 1);
    }
  };
  fill(0);
  return out.build();
}

MultiPoly schur_tilde(const Partition& p, const Alphabet& A) {
  TwoCoreQuotient cq = two_core_quotient(p);
  if (!cq.core.empty()) return A.zero();
  return A.schur(cq.q0) * A.schur(cq.q1);
}

MultiPoly schur_tilde_phi2(const Partition& p, const Alphabet& A) {
  HGen phi = [&A](int m) { return m < 0 || m % 2 ? A.zero() : A.h(m / 2); };
  MultiPoly v = schur_from_h(p, phi, A.zero());
  return (odd_parts(p) / 2) % 2 ? -v : v;
}

namespace {

std::vector<MultiPoly> tabulate(const HGen& g, int cap) {
  std::vector<MultiPoly> v;
  for (int m = 0; m <= cap; ++m) v.push_back(g(m));
  return v;
}

HGen from_table(std::vector<MultiPoly> t, const Grading& g) {
  return [t = std::move(t), g](int m) {
    return m < 0 || m >= static_cast<int>(t.size()) ? MultiPoly(g) : t[static_cast<size_t>(m)];
  };
}

// Multiplies the generating function by (1 + c u) or by (1 - c u)^{-1}.
HGen times_linear(const MultiPoly& c, const HGen& a, int cap) {
  auto t = tabulate(a, cap);
  for (size_t m = t.size() - 1; m >= 1; --m) t[m] += c * t[m - 1];
  return from_table(std::move(t), c.grading());
}

HGen times_geometric(const MultiPoly& c, const HGen& a, int cap) {
  auto t = tabulate(a, cap);
  for (size_t m = 1; m < t.size(); ++m) t[m] += c * t[m - 1];
  return from_table(std::move(t), c.grading());
}

}  // namespace

HGen perp(PerpKind kind, const MultiPoly& value, const HGen& h, int cap) {
  return kind == PerpKind::H ? times_geometric(value, h, cap) : times_linear(value, h, cap);
}

HGen perp_on_e(PerpKind kind, const MultiPoly& value, const HGen& e, int cap) {
  return kind == PerpKind::H ? times_linear(value, e, cap) : times_geometric(value, e, cap);
}

HGen e_from_h(const HGen& h, int cap, const MultiPoly& proto) {
  std::vector<MultiPoly> e{one_like(proto)};
  for (int m = 1; m <= cap; ++m) {
    MultiPoly s = zero_like(proto);
    for (int k = 1; k <= m; ++k) {
      MultiPoly t = h(k) * e[static_cast<size_t>(m - k)];
      if (k % 2)
        s += t;
      else
        s -= t;
    }
    e.push_back(std::move(s));
  }
  return from_table(std::move(e), proto.grading());
}

namespace {

const std::vector<std::pair<SumVariant, std::string>>& variant_names() {
  static const std::vector<std::pair<SumVariant, std::string>> v = {
      {SumVariant::unitary_pair, "unitary-pair"},
      {SumVariant::orthogonal, "orthogonal"},
      {SumVariant::symplectic, "symplectic"},
      {SumVariant::orthogonal_alpha, "orthogonal-alpha"},
      {SumVariant::symplectic_beta, "symplectic-beta"},
      {SumVariant::all, "all"},
      {SumVariant::column_bound, "column-bound"},
      {SumVariant::column_bound_det, "column-bound-det"},
      {SumVariant::tilde_pair, "tilde-pair"},
      {SumVariant::tilde_square, "tilde-square"},
      {SumVariant::tilde_alpha_beta, "tilde-alpha-beta"},
      {SumVariant::tilde_column, "tilde-column"},
  };
  return v;
}

bool all_even(const Partition& p) {
  return std::all_of(p.begin(), p.end(), [](int v) { return v % 2 == 0; });
}

int conj_part(const Partition& c, size_t i) { return i < c.size() ? c[i] : 0; }

}  // namespace

std::string to_string(SumVariant v) {
  for (const auto& [k, s] : variant_names())
    if (k == v) return s;
  return "?";
}

SumVariant parse_sum_variant(const std::string& name) {
  for (const auto& [k, s] : variant_names())
    if (s == name) return k;
  throw usage_error("unknown Schur-sum variant: " + name);
}

MultiPoly schur_sum(SumVariant v, int l, const SumWeights& w, const Alphabet& A, const Alphabet* B) {
  const bool pair = v == SumVariant::unitary_pair || v == SumVariant::tilde_pair;
  if (pair && !B) throw usage_error("schur_sum: pair variants need a second alphabet");
  const bool tilde = v == SumVariant::tilde_pair || v == SumVariant::tilde_square ||
                     v == SumVariant::tilde_alpha_beta || v == SumVariant::tilde_column;
  // s~ has degree |lambda|/2, so single tilde sums run to twice the cap.
  const int top = tilde && !pair ? 2 * A.cap() : A.cap();
  MultiPoly sum = A.zero();
  for (const Partition& p : partitions_up_to(top)) {
    const int len = length(p);
    const Partition c = conjugate(p);
    const int f = odd_parts(p);
    MultiPoly term = A.zero();
    switch (v) {
      case SumVariant::unitary_pair:
        if (len <= l) term = A.schur(p) * B->schur(p);
        break;
      case SumVariant::orthogonal:
        if (len <= l && all_even(p)) term = A.schur(p);
        break;
      case SumVariant::symplectic:
        if (len <= l && all_even(c)) term = A.schur(p);
        break;
      case SumVariant::orthogonal_alpha:
        if (len <= l) term = pow(w.alpha, f) * A.schur(p);
        break;
      case SumVariant::symplectic_beta:
        if (len <= l) term = pow(w.beta, odd_parts(c)) * A.schur(p);
        break;
      case SumVariant::all:
        if (len <= l) term = A.schur(p);
        break;
      case SumVariant::column_bound:
        if (conj_part(c, 1) <= l) term = pow(w.alpha, f) * A.schur(p);
        break;
      case SumVariant::column_bound_det:
        if (conj_part(c, 1) <= l && l <= conj_part(c, 0))
          term = pow(w.alpha, 2 * conj_part(c, 0) - l - f) * A.schur(p);
        break;
      case SumVariant::tilde_pair:
        if (len <= l) term = schur_tilde(p, A) * schur_tilde(p, *B);
        break;
      case SumVariant::tilde_square: {
        bool ok = len <= l && len % 2 == 0 && all_even(p);
        for (size_t i = 0; ok && i + 1 < p.size(); i += 2) ok = p[i] == p[i + 1];
        if (ok) term = schur_tilde(p, A);
        break;
      }
      case SumVariant::tilde_alpha_beta:
      case SumVariant::tilde_column: {
        const bool in = v == SumVariant::tilde_alpha_beta ? len <= l : conj_part(c, 1) <= l;
        if (in && has_empty_two_core(p)) term = pow(w.alpha, f / 2) * pow(w.beta, odd_parts(c) / 2) * schur_tilde(p, A);
        break;
      }
    }
    if (!term.is_zero()) sum += term;
  }
  return sum;
}

}  // namespace incseq
