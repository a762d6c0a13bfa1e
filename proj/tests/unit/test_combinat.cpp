#include <algorithm>
#include <set>

#include "doctest.h"
#include "incseq/ensembles.hpp"
#include "incseq/partition.hpp"
#include "incseq/permutation.hpp"

using namespace incseq;

namespace {

// Exhaustive subsequence oracle for lis.
int lis_brute(const std::vector<int>& w) {
  int best = 0;
  const size_t n = w.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int last = -1000000, len = 0;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      if (mask & (1u << i)) {
        if (w[i] <= last) ok = false;
        last = w[i];
        ++len;
      }
    if (ok) best = std::max(best, len);
  }
  return best;
}

// Ensemble membership straight from the defining relations, filtered out of
// the whole symmetric group.
bool member(Symmetry s, const Perm& p) {
  const int N = static_cast<int>(p.size());
  auto P = [&](int x) { return p[static_cast<size_t>(x - 1)]; };
  auto io = [&](int x) { return N + 1 - x; };
  for (int x = 1; x <= N; ++x) {
    switch (s) {
      case Symmetry::U: break;
      case Symmetry::O:
        if (P(P(x)) != x || P(x) == x) return false;
        break;
      case Symmetry::S:
        if (P(io(P(io(x)))) != x || P(x) == io(x)) return false;
        break;
      case Symmetry::UU:
        if (P(io(x)) != io(P(x))) return false;
        break;
      case Symmetry::u:
        if (P(P(x)) != x || P(io(x)) != io(P(x)) || P(x) == x || P(x) == io(x)) return false;
        break;
      case Symmetry::rot:
        if (P(P(x)) != io(x)) return false;
        break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("lis examples and oracle") {
  CHECK(lis({1, 2, 3}) == 3);
  CHECK(lis({3, 2, 1}) == 1);
  CHECK(lis({3, 1, 4, 2}) == 2);
  CHECK(lds({3, 1, 4, 2}) == 2);
  CHECK(lis({2, 2, 2}) == 1);
  for (const Perm& p : all_permutations(6)) {
    CHECK(lis(p) == lis_brute(p));
    CHECK(lis(p) * lds(p) >= 6);  // Erdos-Szekeres
  }
}

TEST_CASE("greene profile") {
  CHECK(greene_profile({3, 1, 4, 2}, 2) == 4);
  CHECK(greene_profile({2, 1}, 1) == 1);
  CHECK(greene_profile({5, 4, 3}, 7) == 3);
  CHECK(greene_profile({3, 1, 4, 2}, 1) == lis({3, 1, 4, 2}));
}

TEST_CASE("permutation basics") {
  Perm p{2, 3, 1};
  CHECK(compose(p, inverse(p)) == identity_perm(3));
  CHECK(sign(p) == 1);
  CHECK(sign(Perm{2, 1, 3}) == -1);
  CHECK(is_permutation(p));
  CHECK_FALSE(is_permutation(Perm{1, 1}));
}

TEST_CASE("partition tools") {
  CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
  CHECK(odd_parts({3, 1}) == 2);
  CHECK(plus_part({3, 2, 1}) == Partition{3, 1});
  CHECK(minus_part({3, 2, 1}) == Partition{2});
  CHECK(doubled({2, 1}) == Partition{4, 2});
  CHECK(squared({2, 1}) == Partition{2, 2, 1, 1});
  auto cq = two_core_quotient({2, 2});
  CHECK(cq.core.empty());
  CHECK(weight(cq.q0) + weight(cq.q1) == 2);
  CHECK(two_core_quotient({2, 1}).core == Partition{2, 1});
  CHECK(partitions_of(5).size() == 7);
  CHECK(syt_count({2, 1}) == Rational(2));
  CHECK(syt_count({3, 2}) == Rational(5));
}

TEST_CASE("2-quotient round trip and core weights") {
  for (int n = 0; n <= 10; ++n)
    for (const Partition& p : partitions_of(n)) {
      auto cq = two_core_quotient(p);
      CHECK(from_core_quotient(cq) == p);
      CHECK(conjugate(conjugate(p)) == p);
      // |lambda| = |core| + 2 (|q0| + |q1|), and the core is a staircase.
      CHECK(weight(p) == weight(cq.core) + 2 * (weight(cq.q0) + weight(cq.q1)));
      for (size_t i = 0; i < cq.core.size(); ++i) CHECK(cq.core[i] == static_cast<int>(cq.core.size() - i));
    }
}

TEST_CASE("ensembles match their defining relations") {
  for (Symmetry s : {Symmetry::U, Symmetry::O, Symmetry::S, Symmetry::UU, Symmetry::u, Symmetry::rot})
    for (int n = 0; n <= 2; ++n) {
      auto members = ensemble_enumerate(s, n);
      std::vector<Perm> oracle;
      for (const Perm& p : all_permutations(ambient_size(s, n)))
        if (member(s, p)) oracle.push_back(p);
      CHECK(members == oracle);  // also pins lexicographic order
      CHECK(Rational(static_cast<long>(members.size())) == ensemble_size(s, n));
    }
  for (Symmetry s : {Symmetry::U, Symmetry::O, Symmetry::S, Symmetry::UU, Symmetry::u, Symmetry::rot})
    for (int n = 3; n <= 3; ++n)
      CHECK(Rational(static_cast<long>(ensemble_enumerate(s, n).size())) == ensemble_size(s, n));
  CHECK(ensemble_size(Symmetry::U, 3) == Rational(6));
  CHECK(ensemble_size(Symmetry::O, 3) == Rational(15));
  CHECK(ensemble_size(Symmetry::rot, 1) == Rational(2));
}

TEST_CASE("orthogonal members are fixed-point-free involutions") {
  for (const Perm& p : ensemble_enumerate(Symmetry::O, 3)) {
    CHECK(inverse(p) == p);
    CHECK(diagonal_stats(p).fixed == 0);
  }
}

TEST_CASE("f counts") {
  CHECK(f_count(Symmetry::U, 3, 2) == Rational(5));
  CHECK(f_count(Symmetry::O, 2, 1) == Rational(1));
  for (Symmetry s : {Symmetry::U, Symmetry::O, Symmetry::S, Symmetry::UU, Symmetry::u})
    for (int n = 0; n <= 3; ++n) {
      auto t = f_count_table(s, n, 2 * ambient_size(s, n));
      for (size_t l = 1; l < t.size(); ++l) CHECK(t[l - 1] <= t[l]);
      CHECK(t.back() == ensemble_size(s, n));
    }
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l) {
      CHECK(f_count(Symmetry::S, n, 2 * l + 1) == f_count(Symmetry::S, n, 2 * l));
      CHECK(f_count(Symmetry::u, n, 2 * l + 1) == f_count(Symmetry::u, n, 2 * l));
    }
  for (int l = 1; l <= 3; ++l)
    for (int n = l * l + 1; n <= 3; ++n) CHECK(f_count(Symmetry::rot, n, l) == Rational(0));
}

TEST_CASE("extended ensembles") {
  CHECK(ftilde_count(ExtendedSymmetry::O, 3, 1, 2) == Rational(3));
  for (int n = 1; n <= 4; ++n)
    for (int l = 0; l <= n; ++l) CHECK(ftilde_count(ExtendedSymmetry::O, n, n, l) == Rational(l >= n ? 1 : 0));
  CHECK(ftilde_count(ExtendedSymmetry::S, 1, 1, 1) == Rational(1));
  for (ExtendedSymmetry s : {ExtendedSymmetry::O, ExtendedSymmetry::S, ExtendedSymmetry::u})
    for (int n = 0; n <= 4; ++n) {
      auto tab = ftilde_table(s, n, ambient_size(s, n));
      Rational total(0);
      for (auto& a : tab)
        for (auto& b : a) total += b.back();
      CHECK(total == Rational(static_cast<long>(ensemble_enumerate(s, n).size())));
    }
}

TEST_CASE("convolution identities and the rotation property") {
  for (int n = 0; n <= 3; ++n)
    for (int l = 0; l <= 3; ++l) CHECK(convolution_identities_check(n, l));
  for (int n = 0; n <= 2; ++n)
    for (int L = 0; L <= 6; ++L) CHECK(rotation_count_property(n, L));
}
