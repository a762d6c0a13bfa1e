#include "incseq/permutation.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace incseq {

bool is_permutation(const Perm& p) {
  std::vector<char> seen(p.size() + 1, 0);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

Perm identity_perm(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  return p;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[static_cast<size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return q;
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
  Perm r(p.size());
  for (size_t i = 0; i < q.size(); ++i) r[i] = p[static_cast<size_t>(q[i] - 1)];
  return r;
}

int inversions(const Perm& p) {
  int c = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++c;
  return c;
}

int sign(const Perm& p) { return inversions(p) % 2 ? -1 : 1; }

Perm reversal_involution(int n) {
  Perm p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = n - i;
  return p;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int lis(const std::vector<int>& word) {
  std::vector<int> tails;
  for (int v : word) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end())
      tails.push_back(v);
    else
      *it = v;
  }
  return static_cast<int>(tails.size());
}

int lds(const std::vector<int>& word) {
  std::vector<int> neg(word.size());
  std::transform(word.begin(), word.end(), neg.begin(), [](int v) { return -v; });
  return lis(neg);
}

int greene_profile(const std::vector<int>& word, int k, bool increasing) {
  const size_t n = word.size();
  if (n > 20) throw std::length_error("greene_profile: word too long for exhaustive search");
  if (k <= 0) return 0;
  if (static_cast<size_t>(k) >= n) return static_cast<int>(n);
  // A set of positions is a union of k increasing subsequences iff its
  // longest decreasing subsequence has length <= k.
  int best = 0;
  std::vector<int> sub;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int size = __builtin_popcount(mask);
    if (size <= best) continue;
    sub.clear();
    for (size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) sub.push_back(word[i]);
    int anti = increasing ? lds(sub) : lis(sub);
    if (anti <= k) best = size;
  }
  return best;
}

}  // namespace incseq
