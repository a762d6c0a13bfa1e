#include "incseq/invariants.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "incseq/ensembles.hpp"
#include "incseq/group_integrals.hpp"
#include "incseq/matrix.hpp"
#include "incseq/multipoly.hpp"

namespace incseq {

GroupAlgebraElement GroupAlgebraElement::of(const Perm& p, const Rational& c) {
  GroupAlgebraElement e(static_cast<int>(p.size()));
  e.add(p, c);
  return e;
}

Rational GroupAlgebraElement::coeff(const Perm& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add(const Perm& p, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(p, c);
  if (fresh) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) {
  for (const auto& [p, c] : b.terms_) a.add(p, -c);
  return a;
}

GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a) {
  if (c.is_zero()) return GroupAlgebraElement(a.n_);
  for (auto& [p, x] : a.terms_) x *= c;
  return a;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  GroupAlgebraElement r(a.n_);
  for (const auto& [p, c] : a.terms_)
    for (const auto& [q, d] : b.terms_) r.add(compose(q, p), c * d);
  return r;
}

namespace {

// Every permutation of S_n fixing the complement of S (1-based positions).
void for_each_on(int n, const std::vector<int>& S, const std::function<void(const Perm&)>& visit) {
  std::vector<int> vals(S.begin(), S.end());
  std::sort(vals.begin(), vals.end());
  std::vector<int> img = vals;
  do {
    Perm p = identity_perm(n);
    for (size_t k = 0; k < vals.size(); ++k) p[vals[k] - 1] = img[k];
    visit(p);
  } while (std::next_permutation(img.begin(), img.end()));
}

GroupAlgebraElement sym_sum(int n, const std::vector<int>& S, bool signed_sum) {
  GroupAlgebraElement e(n);
  for_each_on(n, S, [&](const Perm& p) { e.add(p, signed_sum ? Rational(sign(p)) : Rational(1)); });
  return e;
}

size_t word_count(int l, int n) {
  size_t c = 1;
  for (int i = 0; i < n; ++i) {
    c *= static_cast<size_t>(l);
    if (c > 100000) throw resource_error("word space l^n exceeds 10^5");
  }
  return c;
}

}  // namespace

GroupAlgebraElement E_S(int n, const std::vector<int>& S) { return sym_sum(n, S, true); }
GroupAlgebraElement H_S(int n, const std::vector<int>& S) { return sym_sum(n, S, false); }

size_t word_index(const Word& w, int l) {
  size_t idx = 0;
  for (int v : w) idx = idx * static_cast<size_t>(l) + static_cast<size_t>(v - 1);
  return idx;
}

Word word_at(size_t index, int l, int n) {
  Word w(static_cast<size_t>(n));
  for (int j = n; j-- > 0;) {
    w[static_cast<size_t>(j)] = static_cast<int>(index % static_cast<size_t>(l)) + 1;
    index /= static_cast<size_t>(l);
  }
  return w;
}

Rational TensorOperator::at(const Word& out, const Word& in) const {
  auto it = entries.find({word_index(out, l), word_index(in, l)});
  return it == entries.end() ? Rational(0) : it->second;
}

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
  TensorOperator r{a.l, a.n, {}};
  std::multimap<size_t, std::pair<size_t, Rational>> by_out;
  for (const auto& [k, v] : b.entries) by_out.emplace(k.first, std::make_pair(k.second, v));
  for (const auto& [k, v] : a.entries) {
    auto [lo, hi] = by_out.equal_range(k.second);
    for (auto it = lo; it != hi; ++it) {
      Rational& slot = r.entries[{k.first, it->second.first}];
      slot += v * it->second.second;
    }
  }
  for (auto it = r.entries.begin(); it != r.entries.end();) {
    if (it->second.is_zero()) it = r.entries.erase(it);
    else ++it;
  }
  return r;
}

TensorOperator T_matrix(const Perm& p, int l) {
  const int n = static_cast<int>(p.size());
  TensorOperator T{l, n, {}};
  const size_t N = word_count(l, n);
  for (size_t i = 0; i < N; ++i) {
    const Word w = word_at(i, l, n);
    Word out(w.size());
    for (int j = 0; j < n; ++j) out[static_cast<size_t>(j)] = w[static_cast<size_t>(p[static_cast<size_t>(j)] - 1)];
    T.entries[{word_index(out, l), i}] = Rational(1);
  }
  return T;
}

TensorOperator T_matrix(const GroupAlgebraElement& e, int l) {
  TensorOperator T{l, e.n(), {}};
  word_count(l, e.n());
  for (const auto& [p, c] : e.terms()) {
    const TensorOperator t = T_matrix(p, l);
    for (const auto& [k, v] : t.entries) {
      Rational& slot = T.entries[k];
      slot += c * v;
    }
  }
  for (auto it = T.entries.begin(); it != T.entries.end();) {
    if (it->second.is_zero()) it = T.entries.erase(it);
    else ++it;
  }
  return T;
}

GroupAlgebraElement kernel_element(const Perm& p, const std::vector<int>& S) {
  const int n = static_cast<int>(p.size());
  GroupAlgebraElement e(n);
  for_each_on(n, S, [&](const Perm& r) { e.add(compose(p, r), Rational(sign(r))); });
  return e;
}

std::vector<int> decreasing_positions(const Perm& p, int k) {
  const int n = static_cast<int>(p.size());
  std::vector<int> chosen;
  std::function<bool(int)> rec = [&](int start) {
    if (static_cast<int>(chosen.size()) == k) return true;
    for (int i = start; i < n; ++i) {
      if (!chosen.empty() && p[static_cast<size_t>(i)] > p[static_cast<size_t>(chosen.back() - 1)]) continue;
      chosen.push_back(i + 1);
      if (rec(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (k <= 0 || !rec(0)) return {};
  return chosen;
}

GroupAlgebraElement straighten_U(const GroupAlgebraElement& e, int l) {
  GroupAlgebraElement cur = e;
  for (;;) {
    const Perm* pick = nullptr;
    int best = -1;
    for (const auto& [p, c] : cur.terms()) {
      if (lds(p) <= l) continue;
      const int inv = inversions(p);
      if (inv >= best) {
        best = inv;
        pick = &p;
      }
    }
    if (!pick) return cur;
    const Perm p = *pick;
    const Rational c = cur.coeff(p);
    const std::vector<int> S = decreasing_positions(p, l + 1);
    // p + sum_{r != id} sign(r) p r lies in the kernel.
    GroupAlgebraElement rel = kernel_element(p, S);
    cur = cur - c * rel;
  }
}

namespace {

std::vector<std::pair<size_t, Rational>> operator_row(const TensorOperator& T) {
  const size_t N = word_count(T.l, T.n);
  std::vector<std::pair<size_t, Rational>> row;
  for (const auto& [k, v] : T.entries) row.emplace_back(k.first * N + k.second, v);
  return row;
}

std::vector<int> lds_from(const Perm& p) {
  const size_t n = p.size();
  std::vector<int> L(n, 1);
  for (size_t i = n; i-- > 0;)
    for (size_t j = i + 1; j < n; ++j)
      if (p[j] < p[i]) L[i] = std::max(L[i], L[j] + 1);
  return L;
}

size_t to_size(const Rational& r) { return static_cast<size_t>(r.to_long()); }

}  // namespace

BasisCertificate basis_U(int n, int l) {
  word_count(l, n);
  BasisCertificate cert;
  for (const Perm& p : all_permutations(n))
    if (lds(p) <= l) cert.basis.push_back(p);
  cert.expected = to_size(f_count(Symmetry::U, n, l));
  std::vector<std::vector<std::pair<size_t, Rational>>> rows;
  for (const Perm& p : cert.basis) rows.push_back(operator_row(T_matrix(p, l)));
  cert.rank = sparse_rank(rows);

  // w2(p) = w1(p) o p, and any other basis element taking w1 to w2 has more
  // inversions.
  cert.triangular = true;
  for (const Perm& p : cert.basis) {
    const std::vector<int> from_pos = lds_from(p);
    Word w1(static_cast<size_t>(n)), w2(from_pos.begin(), from_pos.end());
    for (int j = 0; j < n; ++j) w1[static_cast<size_t>(p[static_cast<size_t>(j)] - 1)] = from_pos[static_cast<size_t>(j)];
    auto takes = [&](const Perm& q) {
      for (int j = 0; j < n; ++j)
        if (w1[static_cast<size_t>(q[static_cast<size_t>(j)] - 1)] != w2[static_cast<size_t>(j)]) return false;
      return true;
    };
    if (!takes(p) || T_matrix(p, l).at(w2, w1) != Rational(1)) cert.triangular = false;
    for (const Perm& q : cert.basis)
      if (q != p && takes(q) && inversions(q) <= inversions(p)) cert.triangular = false;
  }
  return cert;
}

Report centralizer_dim_check(int n, int l) {
  Report rep;
  rep.title = "centralizer n=" + std::to_string(n) + " l=" + std::to_string(l);
  std::vector<std::vector<std::pair<size_t, Rational>>> rows;
  for (const Perm& p : all_permutations(n)) rows.push_back(operator_row(T_matrix(p, l)));
  const size_t dim = sparse_rank(rows);
  const Rational f = f_count(Symmetry::U, n, l);
  const Rational fs = f_from_series(Symmetry::U, n, l);
  rep.add("span rank equals the count", Rational(static_cast<long>(dim)) == f,
          "rank " + std::to_string(dim) + ", f = " + f.str());
  rep.add("count equals the series coefficient", f == fs, "series " + fs.str());
  return rep;
}

int ProjectedSetting::n() const { return std::accumulate(nu.begin(), nu.end(), 0); }

namespace {

// Block index (1-based) of each position (1-based) under a composition.
std::vector<int> blocks(const std::vector<int>& comp) {
  std::vector<int> b{0};
  for (size_t i = 0; i < comp.size(); ++i)
    for (int k = 0; k < comp[i]; ++k) b.push_back(static_cast<int>(i) + 1);
  return b;
}

GroupAlgebraElement projector(const std::vector<int>& comp, const Letters& W) {
  const int n = std::accumulate(comp.begin(), comp.end(), 0);
  GroupAlgebraElement P = GroupAlgebraElement::of(identity_perm(n));
  int start = 1;
  for (size_t i = 0; i < comp.size(); ++i) {
    std::vector<int> S;
    for (int k = 0; k < comp[i]; ++k) S.push_back(start + k);
    start += comp[i];
    P = P * (W.count(static_cast<int>(i) + 1) ? E_S(n, S) : H_S(n, S));
  }
  return P;
}

void check_setting(const ProjectedSetting& s) {
  const int n = s.n();
  if (std::accumulate(s.nup.begin(), s.nup.end(), 0) != n) throw domain_error("compositions have different sizes");
  for (int v : s.nu)
    if (v < 0) throw domain_error("negative part");
  for (int v : s.nup)
    if (v < 0) throw domain_error("negative part");
}

int multiset_inversions(const std::map<Cell, int>& M) {
  int inv = 0;
  for (const auto& [a, m] : M)
    for (const auto& [b, k] : M)
      if (a.first < b.first && a.second > b.second) inv += m * k;
  return inv;
}

// Output positions whose pairs form a (W,W')-decreasing chain of length k.
std::vector<int> decreasing_outputs(const ProjectedSetting& s, const Perm& p, int k) {
  const int n = static_cast<int>(p.size());
  const std::vector<int> bi = blocks(s.nu), bo = blocks(s.nup);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<std::pair<Cell, int>> pts;
    for (int j = 0; j < n; ++j)
      if (mask >> j & 1) pts.push_back({{bi[static_cast<size_t>(p[static_cast<size_t>(j)])], bo[static_cast<size_t>(j) + 1]}, j + 1});
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
      if (a.first.first != b.first.first) return a.first.first < b.first.first;
      return a.first.second > b.first.second;
    });
    bool ok = true;
    for (size_t t = 1; t < pts.size() && ok; ++t) {
      const auto [x1, y1] = pts[t - 1].first;
      const auto [x2, y2] = pts[t].first;
      ok = x1 <= x2 && y1 >= y2 && (x1 < x2 || s.W.count(x2)) && (y1 > y2 || s.Wp.count(y2));
    }
    if (!ok) continue;
    std::vector<int> J;
    for (const auto& pt : pts) J.push_back(pt.second);
    std::sort(J.begin(), J.end());
    return J;
  }
  return {};
}

struct ProjectedCache {
  const ProjectedSetting& s;
  std::map<std::map<Cell, int>, std::pair<Perm, GroupAlgebraElement>> canon;

  const std::pair<Perm, GroupAlgebraElement>& get(const std::map<Cell, int>& M) {
    auto it = canon.find(M);
    if (it != canon.end()) return it->second;
    WeightedMultiset W;
    W.entries = M;
    const Perm p = canonical_perm(s, W);
    return canon.emplace(M, std::make_pair(p, projected_element(s, p))).first->second;
  }
};

// X = eps * Y for group algebra elements known to be proportional.
Rational ratio(const GroupAlgebraElement& X, const GroupAlgebraElement& Y) {
  if (X.is_zero()) return Rational(0);
  const auto& [p, c] = *Y.terms().begin();
  const Rational eps = X.coeff(p) / c;
  if (!(X == eps * Y)) throw structure_error("projected elements are not proportional");
  return eps;
}

}  // namespace

GroupAlgebraElement projected_element(const ProjectedSetting& s, const Perm& p) {
  check_setting(s);
  return projector(s.nup, s.Wp) * GroupAlgebraElement::of(p) * projector(s.nu, s.W);
}

WeightedMultiset multiset_of(const ProjectedSetting& s, const Perm& p) {
  const std::vector<int> bi = blocks(s.nu), bo = blocks(s.nup);
  WeightedMultiset M;
  for (size_t j = 0; j < p.size(); ++j) M.add(bi[static_cast<size_t>(p[j])], bo[j + 1]);
  return M;
}

Perm canonical_perm(const ProjectedSetting& s, const WeightedMultiset& M) {
  check_setting(s);
  const int n = s.n();
  const std::vector<int> bi = blocks(s.nu), bo = blocks(s.nup);
  std::vector<Perm> found;
  for (const Perm& p : all_permutations(n)) {
    if (!(multiset_of(s, p) == M)) continue;
    const Perm q = inverse(p);
    bool ok = true;
    for (int a = 1; a <= n && ok; ++a)
      for (int b = a + 1; b <= n && ok; ++b) {
        if (bo[static_cast<size_t>(a)] == bo[static_cast<size_t>(b)]) {
          const bool dec = s.Wp.count(bo[static_cast<size_t>(a)]) > 0;
          ok = dec == (p[static_cast<size_t>(a) - 1] > p[static_cast<size_t>(b) - 1]);
        }
        if (ok && bi[static_cast<size_t>(a)] == bi[static_cast<size_t>(b)]) {
          const bool dec = s.W.count(bi[static_cast<size_t>(a)]) > 0;
          ok = dec == (q[static_cast<size_t>(a) - 1] > q[static_cast<size_t>(b) - 1]);
        }
      }
    if (ok) found.push_back(p);
  }
  if (found.size() != 1) throw domain_error("multiset has no canonical representative (incompatible or wrong content)");
  return found[0];
}

std::vector<WeightedMultiset> setting_multisets(const ProjectedSetting& s) {
  check_setting(s);
  std::set<std::map<Cell, int>> seen;
  std::vector<WeightedMultiset> out;
  for (const Perm& p : all_permutations(s.n())) {
    const WeightedMultiset M = multiset_of(s, p);
    if (!is_compatible(M, s.W, s.Wp)) continue;
    if (seen.insert(M.entries).second) out.push_back(M);
  }
  return out;
}

MultisetCombination straighten_U_multiset(const ProjectedSetting& s, const MultisetCombination& e, int l) {
  check_setting(s);
  ProjectedCache cache{s, {}};
  MultisetCombination cur;
  for (const auto& [M, c] : e) {
    WeightedMultiset W;
    W.entries = M;
    if (!is_compatible(W, s.W, s.Wp)) throw domain_error("projected element vanishes: a pair repeats across sectors");
    if (!c.is_zero()) cur[M] += c;
  }
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw structure_error("multiset straightening did not terminate");
    const std::map<Cell, int>* pick = nullptr;
    int best = -1;
    for (const auto& [M, c] : cur) {
      WeightedMultiset W;
      W.entries = M;
      if (lds_general(W, s.W, s.Wp) <= l) continue;
      const int inv = multiset_inversions(M);
      if (inv >= best) {
        best = inv;
        pick = &M;
      }
    }
    if (!pick) break;
    const std::map<Cell, int> M = *pick;
    const Rational c = cur[M];
    const Perm p = cache.get(M).first;
    const std::vector<int> J = decreasing_outputs(s, p, l + 1);
    if (J.empty()) throw structure_error("no decreasing chain found");
    // sum_r sign(r) Pi' (p r) Pi over rearrangements r of the outputs J.
    MultisetCombination rel;
    for_each_on(s.n(), J, [&](const Perm& r) {
      const Perm pr = compose(p, r);
      const WeightedMultiset Mr = multiset_of(s, pr);
      if (!is_compatible(Mr, s.W, s.Wp)) return;
      const Rational eps = ratio(projected_element(s, pr), cache.get(Mr.entries).second);
      rel[Mr.entries] += Rational(sign(r)) * eps;
    });
    const Rational self = rel[M];
    if (self.is_zero()) throw structure_error("relation does not contain the eliminated multiset");
    cur.erase(M);
    for (const auto& [Mr, r] : rel) {
      if (Mr == M || r.is_zero()) continue;
      Rational& slot = cur[Mr];
      slot -= c * r / self;
    }
    for (auto it = cur.begin(); it != cur.end();) {
      if (it->second.is_zero()) it = cur.erase(it);
      else ++it;
    }
  }
  return cur;
}

TensorOperator multiset_operator(const ProjectedSetting& s, const MultisetCombination& e, int l) {
  ProjectedCache cache{s, {}};
  GroupAlgebraElement total(s.n());
  for (const auto& [M, c] : e) total += c * cache.get(M).second;
  return T_matrix(total, l);
}

MultisetBasisCheck multiset_basis_check(const ProjectedSetting& s, int l) {
  MultisetBasisCheck res;
  auto list = [](const auto& xs) {
    std::string t;
    for (int x : xs) t += (t.empty() ? "" : ",") + std::to_string(x);
    return "(" + t + ")";
  };
  res.report.title = "projected nu=" + list(s.nu) + " nu'=" + list(s.nup) + " W=" + list(s.W) + " W'=" + list(s.Wp) +
                     " l=" + std::to_string(l);
  ProjectedCache cache{s, {}};
  std::vector<std::vector<std::pair<size_t, Rational>>> basis_rows, all_rows;
  const std::vector<WeightedMultiset> Ms = setting_multisets(s);
  bool reduced_ok = true, equal_ok = true;
  for (const WeightedMultiset& M : Ms) {
    const auto row = operator_row(T_matrix(cache.get(M.entries).second, l));
    all_rows.push_back(row);
    if (lis_general(M, s.W, s.Wp) <= l) ++res.lis_count;
    if (lds_general(M, s.W, s.Wp) <= l) {
      ++res.basis_size;
      basis_rows.push_back(row);
      continue;
    }
    const MultisetCombination red = straighten_U_multiset(s, {{M.entries, Rational(1)}}, l);
    for (const auto& [R, c] : red) {
      WeightedMultiset W;
      W.entries = R;
      if (lds_general(W, s.W, s.Wp) > l) reduced_ok = false;
    }
    if (!(multiset_operator(s, red, l) == multiset_operator(s, {{M.entries, Rational(1)}}, l))) equal_ok = false;
  }
  res.rank = sparse_rank(basis_rows);
  if (s.nu.size() + s.nup.size() <= 12) {
    const int a = static_cast<int>(s.nu.size()), b = static_cast<int>(s.nup.size());
    unsigned wb = 0, wpb = 0;
    for (int i : s.W) wb |= 1u << (i - 1);
    for (int j : s.Wp) wpb |= 1u << (j - 1);
    const MultiPoly series = model_schur_side(make_model(ModelKind::U, a, b, wb, wpb, 2 * s.n()), l);
    Monomial m;
    for (int i = 0; i < a; ++i) m.set_exponent(i, s.nu[static_cast<size_t>(i)]);
    for (int j = 0; j < b; ++j) m.set_exponent(a + j, s.nup[static_cast<size_t>(j)]);
    res.series_count = static_cast<size_t>(series.coeff(m).to_long());
    res.report.add("basis size equals the series coefficient", res.series_count == res.basis_size,
                   "series " + std::to_string(res.series_count));
  }
  res.span_rank = sparse_rank(all_rows);
  res.report.add("basis operators independent", res.rank == res.basis_size,
                 std::to_string(res.rank) + " of " + std::to_string(res.basis_size));
  res.report.add("basis spans", res.rank == res.span_rank, "span " + std::to_string(res.span_rank));
  res.report.add("basis size equals the lis count", res.basis_size == res.lis_count,
                 "lis count " + std::to_string(res.lis_count));
  res.report.add("reductions land in the basis", reduced_ok);
  res.report.add("reductions preserve the operator", equal_ok);
  return res;
}

std::vector<Perm> fpf_involutions(int n2) {
  std::vector<Perm> out;
  if (n2 % 2) return out;
  Perm t(static_cast<size_t>(n2), 0);
  std::function<void()> rec = [&] {
    int i = 0;
    while (i < n2 && t[static_cast<size_t>(i)] != 0) ++i;
    if (i == n2) {
      out.push_back(t);
      return;
    }
    for (int j = i + 1; j < n2; ++j) {
      if (t[static_cast<size_t>(j)] != 0) continue;
      t[static_cast<size_t>(i)] = j + 1;
      t[static_cast<size_t>(j)] = i + 1;
      rec();
      t[static_cast<size_t>(i)] = t[static_cast<size_t>(j)] = 0;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<std::pair<int, int>> pairs_of(const Perm& tau) {
  std::vector<std::pair<int, int>> P;
  for (size_t a = 0; a < tau.size(); ++a)
    if (static_cast<int>(a) + 1 < tau[a]) P.push_back({static_cast<int>(a) + 1, tau[a]});
  return P;
}

// Sum over words built pair by pair from the allowed (letter, letter, value) triples.
std::map<size_t, Rational> pair_vector(const Perm& tau, int dim, const std::vector<std::tuple<int, int, int>>& form) {
  const int n2 = static_cast<int>(tau.size());
  word_count(dim, n2);
  const auto P = pairs_of(tau);
  std::map<size_t, Rational> v;
  Word w(static_cast<size_t>(n2), 1);
  std::function<void(size_t, long)> rec = [&](size_t k, long c) {
    if (k == P.size()) {
      v[word_index(w, dim)] += Rational(c);
      return;
    }
    for (const auto& [x, y, val] : form) {
      w[static_cast<size_t>(P[k].first) - 1] = x;
      w[static_cast<size_t>(P[k].second) - 1] = y;
      rec(k + 1, c * val);
    }
  };
  rec(0, 1);
  return v;
}

// T(p) applied to a vector: the entry at word w moves to w o p.
std::map<size_t, Rational> apply(const Perm& p, const std::map<size_t, Rational>& v, int dim) {
  const int n = static_cast<int>(p.size());
  std::map<size_t, Rational> r;
  for (const auto& [i, c] : v) {
    const Word w = word_at(i, dim, n);
    Word out(w.size());
    for (int j = 0; j < n; ++j) out[static_cast<size_t>(j)] = w[static_cast<size_t>(p[static_cast<size_t>(j)] - 1)];
    r[word_index(out, dim)] = c;
  }
  return r;
}

std::map<size_t, Rational> scaled(std::map<size_t, Rational> v, const Rational& c) {
  for (auto& [i, x] : v) x *= c;
  return v;
}

// p^{-1} tau p and the orientation sign of the pairs under it.
std::pair<Perm, int> conjugated(const Perm& tau, const Perm& p) {
  const Perm pinv = inverse(p);
  const Perm t2 = compose(pinv, compose(tau, p));
  int s = 1;
  for (const auto& [a, b] : pairs_of(tau))
    if (pinv[static_cast<size_t>(a) - 1] > pinv[static_cast<size_t>(b) - 1]) s = -s;
  return {t2, s};
}

InvolutionElement reduce_involutions(const InvolutionElement& e, bool symplectic, int l) {
  InvolutionElement cur;
  for (const auto& [t, c] : e)
    if (!c.is_zero()) cur[t] += c;
  auto reduced = [&](const Perm& t) { return symplectic ? lds(t) <= 2 * l : lis(t) <= l; };
  for (int guard = 0;; ++guard) {
    if (guard > 100000) throw structure_error("involution straightening did not terminate");
    const Perm* pick = nullptr;
    int best = 0;
    for (const auto& [t, c] : cur) {
      if (reduced(t)) continue;
      const int inv = inversions(t);
      // Symplectic rewrites lower the inversion count, orthogonal ones raise it.
      if (!pick || (symplectic ? inv > best : inv < best)) {
        best = inv;
        pick = &t;
      }
    }
    if (!pick) return cur;
    const Perm tau = *pick;
    const Rational c = cur[tau];
    const auto P = pairs_of(tau);
    std::vector<int> S;
    if (!symplectic) {
      // l+1 pairs (a, b), a < b, increasing in both coordinates.
      std::vector<size_t> chosen;
      std::function<bool(size_t)> rec = [&](size_t from) {
        if (static_cast<int>(chosen.size()) == l + 1) return true;
        for (size_t k = from; k < P.size(); ++k) {
          if (!chosen.empty() && P[k].second < P[chosen.back()].second) continue;
          chosen.push_back(k);
          if (rec(k + 1)) return true;
          chosen.pop_back();
        }
        return false;
      };
      if (!rec(0)) throw structure_error("no increasing chain above the diagonal");
      for (size_t k : chosen) S.push_back(P[k].first);
    } else {
      // l+1 pairs whose points and reflections form one decreasing chain.
      bool found = false;
      for (unsigned mask = 0; mask < (1u << P.size()) && !found; ++mask) {
        if (__builtin_popcount(mask) != l + 1) continue;
        std::vector<std::pair<int, int>> pts;
        for (size_t k = 0; k < P.size(); ++k)
          if (mask >> k & 1) {
            pts.push_back(P[k]);
            pts.push_back({P[k].second, P[k].first});
          }
        std::sort(pts.begin(), pts.end());
        bool dec = true;
        for (size_t k = 1; k < pts.size() && dec; ++k) dec = pts[k].second < pts[k - 1].second;
        if (!dec) continue;
        found = true;
        for (const auto& pt : pts) S.push_back(pt.first);
      }
      if (!found) throw structure_error("no symmetric decreasing chain");
    }
    std::map<Perm, Rational> rel;
    for_each_on(static_cast<int>(tau.size()), S, [&](const Perm& r) {
      const auto [t2, orient] = conjugated(tau, r);
      rel[t2] += Rational(sign(r) * (symplectic ? orient : 1));
    });
    const Rational self = rel[tau];
    if (self.is_zero()) throw structure_error("relation does not contain the eliminated involution");
    cur.erase(tau);
    for (const auto& [t2, r] : rel) {
      if (t2 == tau || r.is_zero()) continue;
      cur[t2] -= c * r / self;
    }
    for (auto it = cur.begin(); it != cur.end();) {
      if (it->second.is_zero()) it = cur.erase(it);
      else ++it;
    }
  }
}

std::vector<std::tuple<int, int, int>> orth_form(int l) {
  std::vector<std::tuple<int, int, int>> f;
  for (int a = 1; a <= l; ++a) f.push_back({a, a, 1});
  return f;
}

std::vector<std::tuple<int, int, int>> symp_form(int l) {
  std::vector<std::tuple<int, int, int>> f;
  for (int a = 1; a <= l; ++a) {
    f.push_back({a, l + a, -1});
    f.push_back({l + a, a, 1});
  }
  return f;
}

std::vector<std::pair<size_t, Rational>> as_row(const std::map<size_t, Rational>& v) {
  return {v.begin(), v.end()};
}

std::map<size_t, Rational> combination(const InvolutionElement& e, bool symplectic, int l) {
  std::map<size_t, Rational> total;
  for (const auto& [t, c] : e)
    for (const auto& [i, x] : symplectic ? symp_vector(t, l) : orth_vector(t, l)) total[i] += c * x;
  for (auto it = total.begin(); it != total.end();) {
    if (it->second.is_zero()) it = total.erase(it);
    else ++it;
  }
  return total;
}

}  // namespace

std::map<size_t, Rational> orth_vector(const Perm& tau, int l) { return pair_vector(tau, l, orth_form(l)); }
std::map<size_t, Rational> symp_vector(const Perm& tau, int l) { return pair_vector(tau, 2 * l, symp_form(l)); }

InvolutionElement orth_reduce(const InvolutionElement& e, int l) { return reduce_involutions(e, false, l); }
InvolutionElement symp_reduce(const InvolutionElement& e, int l) { return reduce_involutions(e, true, l); }

Report orth_symp_check(int n, int l) {
  Report rep;
  rep.title = "involution invariants n=" + std::to_string(n) + " l=" + std::to_string(l);
  const std::vector<Perm> taus = fpf_involutions(2 * n);
  for (bool symplectic : {false, true}) {
    const std::string tag = symplectic ? "Sp" : "O";
    const int dim = symplectic ? 2 * l : l;
    std::vector<std::vector<std::pair<size_t, Rational>>> all, red;
    size_t reduced_count = 0;
    bool support_ok = true, equal_ok = true;
    for (const Perm& t : taus) {
      const auto v = symplectic ? symp_vector(t, l) : orth_vector(t, l);
      all.push_back(as_row(v));
      const bool in_family = symplectic ? lds(t) <= 2 * l : lis(t) <= l;
      if (in_family) {
        ++reduced_count;
        red.push_back(as_row(v));
        continue;
      }
      const InvolutionElement r = symplectic ? symp_reduce({{t, Rational(1)}}, l) : orth_reduce({{t, Rational(1)}}, l);
      for (const auto& [t2, c] : r)
        if (symplectic ? lds(t2) > 2 * l : lis(t2) > l) support_ok = false;
      if (combination(r, symplectic, l) != v) equal_ok = false;
    }
    const size_t rank_red = sparse_rank(red), rank_all = sparse_rank(all);
    rep.add(tag + ": reduced family has full rank", rank_red == reduced_count,
            std::to_string(rank_red) + " of " + std::to_string(reduced_count));
    rep.add(tag + ": reduced family spans", rank_red == rank_all, "span " + std::to_string(rank_all));
    rep.add(tag + ": reductions land in the family", support_ok);
    rep.add(tag + ": reductions preserve the vector", equal_ok);
    (void)dim;
  }
  // Transformation law, checked against direct application of T(p).
  bool law = true, commuting = true;
  for (const Perm& t : taus)
    for (const Perm& p : all_permutations(2 * n)) {
      const auto [t2, orient] = conjugated(t, p);
      if (apply(p, orth_vector(t, l), l) != orth_vector(t2, l)) law = false;
      if (apply(p, symp_vector(t, l), 2 * l) != scaled(symp_vector(t2, l), Rational(orient))) law = false;
      if (t2 == t && orient != sign(p)) commuting = false;
    }
  rep.add("T(p) v(tau) = +-v(p^-1 tau p)", law);
  rep.add("commuting p act by their sign on the symplectic invariant", commuting);
  return rep;
}

Report straightening_suite(int nU, int lU, int nO, int lO) {
  Report rep;
  rep.title = "straightening";
  for (int n = 1; n <= nU; ++n)
    for (int l = 1; l <= lU; ++l) {
      const std::string at = " n=" + std::to_string(n) + " l=" + std::to_string(l);
      const BasisCertificate cert = basis_U(n, l);
      rep.add("basis size" + at, cert.basis.size() == cert.expected,
              std::to_string(cert.basis.size()) + " vs f = " + std::to_string(cert.expected));
      rep.add("basis rank" + at, cert.rank == cert.basis.size(), "rank " + std::to_string(cert.rank));
      rep.add("triangularity" + at, cert.triangular);
      rep.merge(centralizer_dim_check(n, l));

      bool kernel = true, reduced = true, equal = true;
      const std::vector<Perm> perms = all_permutations(n);
      if (n <= 4)
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
          if (__builtin_popcount(mask) <= l) continue;
          std::vector<int> S;
          for (int i = 0; i < n; ++i)
            if (mask >> i & 1) S.push_back(i + 1);
          for (const Perm& p : perms)
            if (!T_matrix(kernel_element(p, S), l).is_zero()) kernel = false;
        }
      for (const Perm& p : perms) {
        if (lds(p) <= l) continue;
        const GroupAlgebraElement in = GroupAlgebraElement::of(p);
        const GroupAlgebraElement out = straighten_U(in, l);
        for (const auto& [q, c] : out.terms())
          if (lds(q) > l) reduced = false;
        if (!(T_matrix(out, l) == T_matrix(in, l))) equal = false;
      }
      if (n <= 4) rep.add("kernel elements vanish" + at, kernel);
      rep.add("straightened support" + at, reduced);
      rep.add("straightening preserves T" + at, equal);
    }
  const std::vector<ProjectedSetting> settings{
      {{2}, {1, 1}, {1}, {}},          {{2, 1}, {1, 2}, {1}, {}},        {{2, 2}, {3, 1}, {1}, {2}},
      {{1, 1, 1}, {3}, {}, {1}},       {{2, 2}, {2, 2}, {1, 2}, {1}},    {{3, 1}, {2, 2}, {}, {}},
      {{2, 1, 1}, {1, 3}, {2}, {1}},   {{2, 2, 1}, {1, 2, 2}, {3}, {1}}, {{1, 1, 1, 1, 1}, {2, 3}, {}, {2}}};
  for (const ProjectedSetting& s : settings)
    if (s.n() <= nU)
      for (int l = 1; l <= lU; ++l) rep.merge(multiset_basis_check(s, l).report);
  for (int n = 1; n <= nO; ++n)
    for (int l = 1; l <= lO; ++l) rep.merge(orth_symp_check(n, l));
  return rep;
}

}  // namespace incseq
