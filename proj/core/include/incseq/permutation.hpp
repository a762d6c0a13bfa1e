#pragma once

#include <vector>

namespace incseq {

// One-line notation with values 1..n.
using Perm = std::vector<int>;

bool is_permutation(const Perm& p);
Perm identity_perm(int n);
Perm inverse(const Perm& p);
// (p o q)(i) = p(q(i)).
Perm compose(const Perm& p, const Perm& q);
int inversions(const Perm& p);
int sign(const Perm& p);
// x -> n+1-x.
Perm reversal_involution(int n);
std::vector<Perm> all_permutations(int n);

// Longest strictly increasing / strictly decreasing subsequence (patience sorting).
int lis(const std::vector<int>& word);
int lds(const std::vector<int>& word);

// Largest union of k strictly increasing (or decreasing) subsequences,
// by exhaustive search over subsets; intended for words of length <= 16.
int greene_profile(const std::vector<int>& word, int k, bool increasing = true);

}  // namespace incseq
