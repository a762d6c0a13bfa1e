#include "incseq/rsk.hpp"

#include <algorithm>
#include <functional>

namespace incseq {

void WeightedMultiset::add(int i, int j, int m) {
  if (m <= 0) return;
  entries[{i, j}] += m;
}

int WeightedMultiset::size() const {
  int n = 0;
  for (const auto& [c, m] : entries) n += m;
  return n;
}

WeightedMultiset WeightedMultiset::transposed() const {
  WeightedMultiset t;
  for (const auto& [c, m] : entries) t.add(c.second, c.first, m);
  return t;
}

bool is_compatible(const WeightedMultiset& M, const Letters& W1, const Letters& W2) {
  for (const auto& [c, m] : M.entries) {
    if (m <= 0) return false;
    if (W1.count(c.first) != W2.count(c.second) && m > 1) return false;
  }
  return true;
}

namespace {

using Pred = std::function<bool(int)>;

Pred member(const Letters& W) {
  return [&W](int v) { return W.count(v) > 0; };
}
Pred outside(const Letters& W) {
  return [&W](int v) { return W.count(v) == 0; };
}

// Longest weakly monotone chain; a coordinate may repeat only where its
// predicate holds. `decreasing` reverses the second coordinate.
int longest_chain(const std::map<Cell, int>& M, const Pred& P1, const Pred& P2, bool decreasing) {
  std::vector<std::pair<Cell, int>> els(M.begin(), M.end());
  if (decreasing) {
    std::sort(els.begin(), els.end(), [](const auto& a, const auto& b) {
      if (a.first.first != b.first.first) return a.first.first < b.first.first;
      return a.first.second > b.first.second;
    });
  }
  std::vector<int> best(els.size(), 0);
  int top = 0;
  for (size_t e = 0; e < els.size(); ++e) {
    const auto [x, y] = els[e].first;
    const bool rx = P1(x), ry = P2(y);
    const int own = (rx && ry) ? els[e].second : 1;
    int b = 0;
    for (size_t f = 0; f < e; ++f) {
      const auto [x2, y2] = els[f].first;
      if (x2 > x || (x2 == x && !rx)) continue;
      if (decreasing) {
        if (y2 < y || (y2 == y && !ry)) continue;
      } else {
        if (y2 > y || (y2 == y && !ry)) continue;
      }
      b = std::max(b, best[f]);
    }
    best[e] = b + own;
    top = std::max(top, best[e]);
  }
  return top;
}

// Maximum size of a submultiset whose chain statistic is at most k.
int max_sub(const WeightedMultiset& M, int k, const std::function<int(const std::map<Cell, int>&)>& stat) {
  std::vector<std::pair<Cell, int>> els(M.entries.begin(), M.entries.end());
  std::vector<int> take(els.size(), 0);
  int best = 0;
  std::function<void(size_t, int)> rec = [&](size_t i, int size) {
    if (i == els.size()) {
      if (size <= best) return;
      std::map<Cell, int> sub;
      for (size_t t = 0; t < els.size(); ++t)
        if (take[t] > 0) sub[els[t].first] = take[t];
      if (stat(sub) <= k) best = size;
      return;
    }
    for (int m = 0; m <= els[i].second; ++m) {
      take[i] = m;
      rec(i + 1, size + m);
    }
    take[i] = 0;
  };
  rec(0, 0);
  return best;
}

}  // namespace

int lis_general(const WeightedMultiset& M, const Letters& W1, const Letters& W2) {
  return longest_chain(M.entries, member(W1), member(W2), false);
}

int lds_general(const WeightedMultiset& M, const Letters& W1, const Letters& W2) {
  return longest_chain(M.entries, member(W1), member(W2), true);
}

int greene_increasing(const WeightedMultiset& M, const Letters& W1, const Letters& W2, int k) {
  const Pred n1 = outside(W1), n2 = outside(W2);
  return max_sub(M, k, [&](const std::map<Cell, int>& s) { return longest_chain(s, n1, n2, true); });
}

int greene_decreasing(const WeightedMultiset& M, const Letters& W1, const Letters& W2, int k) {
  const Pred m1 = member(W1), m2 = member(W2);
  return max_sub(M, k, [&](const std::map<Cell, int>& s) { return longest_chain(s, m1, m2, false); });
}

Partition Bitableau::shape() const {
  Partition p;
  for (const auto& r : rows) p.push_back(static_cast<int>(r.size()));
  return p;
}

Bitableau Bitableau::transposed() const {
  Bitableau t;
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) {
      if (t.rows.size() <= j) t.rows.resize(j + 1);
      t.rows[j].push_back(rows[i][j]);
    }
  return t;
}

bool is_bitableau(const Bitableau& T, const Letters& W) {
  for (size_t i = 0; i < T.rows.size(); ++i) {
    const auto& r = T.rows[i];
    if (r.empty()) return false;
    if (i > 0 && r.size() > T.rows[i - 1].size()) return false;
    for (size_t j = 0; j < r.size(); ++j) {
      if (j > 0) {
        const int a = r[j - 1], b = r[j];
        if (a > b || (a == b && !W.count(b))) return false;
      }
      if (i > 0) {
        const int a = T.rows[i - 1][j], b = r[j];
        if (a > b || (a == b && W.count(b))) return false;
      }
    }
  }
  return true;
}

namespace {

// Row insertion of b into Q; returns the row where a cell was added.
size_t insert_value(std::vector<std::vector<int>>& Q, int b, const Letters& W2) {
  for (size_t r = 0;; ++r) {
    if (r == Q.size()) {
      Q.push_back({b});
      return r;
    }
    auto& row = Q[r];
    const bool strict = W2.count(b) > 0;
    auto it = strict ? std::upper_bound(row.begin(), row.end(), b) : std::lower_bound(row.begin(), row.end(), b);
    if (it == row.end()) {
      row.push_back(b);
      return r;
    }
    std::swap(*it, b);
  }
}

}  // namespace

std::pair<Bitableau, Bitableau> knuth_correspondence(const WeightedMultiset& M, const Letters& W1, const Letters& W2) {
  if (!is_compatible(M, W1, W2)) throw domain_error("multiset repeats a pair across sectors");
  // Group second coordinates by first coordinate.
  std::map<int, std::vector<int>> by_x;
  for (const auto& [c, m] : M.entries)
    for (int t = 0; t < m; ++t) by_x[c.first].push_back(c.second);
  Bitableau P, Q;
  for (auto& [x, ys] : by_x) {
    std::sort(ys.begin(), ys.end());
    if (!W1.count(x)) std::reverse(ys.begin(), ys.end());
    for (int y : ys) {
      const size_t r = insert_value(Q.rows, y, W2);
      if (r == P.rows.size()) P.rows.emplace_back();
      P.rows[r].push_back(x);
    }
  }
  return {P, Q};
}

WeightedMultiset knuth_inverse(const Bitableau& P, const Bitableau& Q, const Letters& W1, const Letters& W2) {
  if (P.shape() != Q.shape()) throw domain_error("tableaux have different shapes");
  if (!is_bitableau(P, W1) || !is_bitableau(Q, W2)) throw domain_error("not a pair of bitableaux");
  Bitableau p = P, q = Q;
  WeightedMultiset M;
  while (!p.rows.empty()) {
    int x = p.rows[0][0];
    for (const auto& r : p.rows)
      for (int v : r) x = std::max(x, v);
    // The last copy of x to arrive: rightmost for W letters, lowest otherwise.
    size_t br = 0, bc = 0;
    bool found = false;
    for (size_t r = 0; r < p.rows.size(); ++r)
      for (size_t c = 0; c < p.rows[r].size(); ++c) {
        if (p.rows[r][c] != x) continue;
        const bool better = !found || (W1.count(x) ? c > bc : r > br);
        if (better) {
          br = r;
          bc = c;
          found = true;
        }
      }
    if (bc + 1 != p.rows[br].size() || (br + 1 < p.rows.size() && p.rows[br + 1].size() > bc))
      throw domain_error("recording tableau is not a valid insertion record");
    p.rows[br].pop_back();
    int b = q.rows[br].back();
    q.rows[br].pop_back();
    if (p.rows[br].empty()) {
      p.rows.pop_back();
      q.rows.pop_back();
    }
    for (size_t r = br; r-- > 0;) {
      auto& row = q.rows[r];
      const bool eq_ok = W2.count(b) == 0;
      size_t pos = row.size();
      for (size_t c = row.size(); c-- > 0;)
        if (row[c] < b || (eq_ok && row[c] == b)) {
          pos = c;
          break;
        }
      if (pos == row.size()) throw domain_error("insertion tableau cannot be reversed");
      std::swap(row[pos], b);
    }
    M.add(x, b);
  }
  if (!is_compatible(M, W1, W2) || knuth_correspondence(M, W1, W2) != std::pair<Bitableau, Bitableau>{P, Q})
    throw domain_error("pair of tableaux is not in the image");
  return M;
}

Report symmetry_checks(const WeightedMultiset& M, const Letters& W1, const Letters& W2) {
  Report rep;
  rep.title = "symmetry";
  const auto [P, Q] = knuth_correspondence(M, W1, W2);
  const auto [Pt, Qt] = knuth_correspondence(M.transposed(), W2, W1);
  rep.add("transpose swaps P and Q", Pt == Q && Qt == P);
  if (W1 == W2 && M.transposed() == M) {
    rep.add("symmetric multiset gives P = Q", P == Q);
    int fixed = 0;
    for (const auto& [c, m] : M.entries) {
      if (c.first != c.second) continue;
      if (W1.count(c.first)) fixed += m;
      else fixed += m & 1;
    }
    const int got = odd_parts(conjugate(P.shape()));
    rep.add("odd columns count the fixed points", got == fixed,
            "f(shape') = " + std::to_string(got) + ", fixed = " + std::to_string(fixed));
  }
  return rep;
}

bool greene_check(const WeightedMultiset& M, const Letters& W1, const Letters& W2) {
  const Partition lam = knuth_correspondence(M, W1, W2).first.shape();
  const Partition lc = conjugate(lam);
  int rows = 0, cols = 0;
  const int kmax = std::max<int>(static_cast<int>(lam.size()), lam.empty() ? 0 : lam[0]) + 1;
  for (int k = 1; k <= kmax; ++k) {
    rows += k <= static_cast<int>(lam.size()) ? lam[k - 1] : 0;
    cols += k <= static_cast<int>(lc.size()) ? lc[k - 1] : 0;
    if (greene_increasing(M, W1, W2, k) != rows) return false;
    if (greene_decreasing(M, W1, W2, k) != cols) return false;
  }
  return true;
}

std::vector<Bitableau> bitableaux(const Partition& shape, int n, const Letters& W) {
  std::vector<Bitableau> out;
  Bitableau T;
  for (int len : shape) T.rows.emplace_back(static_cast<size_t>(len), 0);
  std::vector<Cell> order;
  for (size_t i = 0; i < shape.size(); ++i)
    for (int j = 0; j < shape[i]; ++j) order.push_back({static_cast<int>(i), j});
  std::function<void(size_t)> rec = [&](size_t k) {
    if (k == order.size()) {
      out.push_back(T);
      return;
    }
    const auto [i, j] = order[k];
    for (int v = 1; v <= n; ++v) {
      if (j > 0) {
        const int a = T.rows[i][j - 1];
        if (a > v || (a == v && !W.count(v))) continue;
      }
      if (i > 0) {
        const int a = T.rows[i - 1][j];
        if (a > v || (a == v && W.count(v))) continue;
      }
      T.rows[i][j] = v;
      rec(k + 1);
    }
  };
  rec(0);
  return out;
}

RskSuiteResult rsk_exhaustive_suite(int n, int max_size) {
  RskSuiteResult res;
  res.report.title = "knuth correspondence on [" + std::to_string(n) + "]x[" + std::to_string(n) +
                     "], size <= " + std::to_string(max_size);
  std::vector<Cell> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) cells.push_back({i, j});

  std::vector<WeightedMultiset> all;
  std::vector<int> mult(cells.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i == cells.size()) {
      WeightedMultiset M;
      for (size_t t = 0; t < cells.size(); ++t) M.add(cells[t].first, cells[t].second, mult[t]);
      all.push_back(M);
      return;
    }
    for (int m = 0; m <= left; ++m) {
      mult[i] = m;
      rec(i + 1, left - m);
    }
    mult[i] = 0;
  };
  rec(0, max_size);

  long bad_shape = 0, bad_tab = 0, bad_content = 0, bad_inverse = 0, bad_lis = 0, bad_greene = 0, bad_sym = 0;
  std::string first_fail;
  auto note = [&](const std::string& what, const WeightedMultiset& M, const Letters& W1, const Letters& W2) {
    if (!first_fail.empty()) return;
    std::string s = what + " at M = {";
    for (const auto& [c, m] : M.entries)
      s += "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")^" + std::to_string(m) + " ";
    s += "}, W1 = {";
    for (int v : W1) s += std::to_string(v) + " ";
    s += "}, W2 = {";
    for (int v : W2) s += std::to_string(v) + " ";
    first_fail = s + "}";
  };

  for (unsigned b1 = 0; b1 < (1u << n); ++b1)
    for (unsigned b2 = 0; b2 < (1u << n); ++b2) {
      Letters W1, W2;
      for (int i = 0; i < n; ++i) {
        if (b1 >> i & 1) W1.insert(i + 1);
        if (b2 >> i & 1) W2.insert(i + 1);
      }
      Letters nW1, nW2;
      for (int i = 1; i <= n; ++i) {
        if (!W1.count(i)) nW1.insert(i);
        if (!W2.count(i)) nW2.insert(i);
      }
      for (const WeightedMultiset& M : all) {
        if (!is_compatible(M, W1, W2)) continue;
        ++res.multisets;
        const auto [P, Q] = knuth_correspondence(M, W1, W2);
        const Partition lam = P.shape();
        if (lam != Q.shape()) {
          ++bad_shape;
          note("shape mismatch", M, W1, W2);
          continue;
        }
        if (!is_bitableau(P, W1) || !is_bitableau(Q, W2)) {
          ++bad_tab;
          note("invalid bitableau", M, W1, W2);
        }
        std::map<int, int> cx, cy, tx, ty;
        for (const auto& [c, m] : M.entries) {
          cx[c.first] += m;
          cy[c.second] += m;
        }
        for (const auto& r : P.rows)
          for (int v : r) ++tx[v];
        for (const auto& r : Q.rows)
          for (int v : r) ++ty[v];
        if (cx != tx || cy != ty) {
          ++bad_content;
          note("content", M, W1, W2);
        }
        try {
          if (!(knuth_inverse(P, Q, W1, W2) == M)) {
            ++bad_inverse;
            note("inverse", M, W1, W2);
          }
        } catch (const domain_error&) {
          ++bad_inverse;
          note("inverse threw", M, W1, W2);
        }
        const int l1 = lam.empty() ? 0 : lam[0];
        if (lis_general(M, W1, W2) != l1 || lds_general(M, nW1, nW2) != static_cast<int>(lam.size())) {
          ++bad_lis;
          note("lis / lds against the shape", M, W1, W2);
        }
        if (!greene_check(M, W1, W2)) {
          ++bad_greene;
          note("greene", M, W1, W2);
        }
        if (W1 == W2 && M.transposed() == M) ++res.symmetric;
        if (!symmetry_checks(M, W1, W2).ok()) {
          ++bad_sym;
          note("symmetry", M, W1, W2);
        }
      }
    }

  // Surjectivity: every pair of bitableaux of one shape with entries in [n]
  // comes from a multiset, and the pair count matches the multiset count.
  long bad_onto = 0, bad_count = 0;
  for (unsigned b1 = 0; b1 < (1u << n); ++b1)
    for (unsigned b2 = 0; b2 < (1u << n); ++b2) {
      Letters W1, W2;
      for (int i = 0; i < n; ++i) {
        if (b1 >> i & 1) W1.insert(i + 1);
        if (b2 >> i & 1) W2.insert(i + 1);
      }
      std::vector<long> multisets(max_size + 1, 0), pairs(max_size + 1, 0);
      for (const WeightedMultiset& M : all)
        if (is_compatible(M, W1, W2)) ++multisets[M.size()];
      for (const Partition& lam : partitions_up_to(max_size)) {
        const auto Ps = bitableaux(lam, n, W1);
        const auto Qs = bitableaux(lam, n, W2);
        pairs[weight(lam)] += static_cast<long>(Ps.size() * Qs.size());
        for (const Bitableau& P : Ps)
          for (const Bitableau& Q : Qs) {
            try {
              knuth_inverse(P, Q, W1, W2);
            } catch (const domain_error&) {
              ++bad_onto;
            }
          }
      }
      if (multisets != pairs) ++bad_count;
    }

  res.report.add("every bitableau pair is reached", bad_onto == 0, std::to_string(bad_onto) + " failures");
  res.report.add("pair counts match multiset counts", bad_count == 0, std::to_string(bad_count) + " sector choices differ");
  res.report.add("shapes agree", bad_shape == 0, std::to_string(bad_shape) + " failures");
  res.report.add("P and Q are bitableaux", bad_tab == 0, std::to_string(bad_tab) + " failures");
  res.report.add("content preserved", bad_content == 0, std::to_string(bad_content) + " failures");
  res.report.add("inverse recovers M", bad_inverse == 0, std::to_string(bad_inverse) + " failures");
  res.report.add("first row is lis, length is lds", bad_lis == 0, std::to_string(bad_lis) + " failures");
  res.report.add("greene profile", bad_greene == 0, std::to_string(bad_greene) + " failures");
  res.report.add("transpose and fixed points", bad_sym == 0, std::to_string(bad_sym) + " failures");
  res.report.add("compatible multisets visited", res.multisets > 0,
                 std::to_string(res.multisets) + " multisets, " + std::to_string(res.symmetric) + " symmetric");
  if (!first_fail.empty()) res.report.add("first failure", false, first_fail);
  return res;
}

}  // namespace incseq
