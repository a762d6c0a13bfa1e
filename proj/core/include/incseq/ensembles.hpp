#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "incseq/permutation.hpp"
#include "incseq/rational.hpp"

namespace incseq {

enum class Symmetry { U, O, S, UU, u, rot };
// Extended ensembles that allow diagonal (and anti-diagonal) points.
enum class ExtendedSymmetry { O, S, u };

std::string to_string(Symmetry s);
std::optional<Symmetry> parse_symmetry(const std::string& s);
std::string to_string(ExtendedSymmetry s);
std::optional<ExtendedSymmetry> parse_extended_symmetry(const std::string& s);

// Time-scale constant a: O, S -> 1; U, u -> 2; UU -> 4.  rot has none.
int a_const(Symmetry s);

// Length of the one-line words in the ensemble of parameter n.
int ambient_size(Symmetry s, int n);
int ambient_size(ExtendedSymmetry s, int n);

// Closed-form ensemble size.
Rational ensemble_size(Symmetry s, int n);

// Members in lexicographic order of their one-line words.
void for_each_member(Symmetry s, int n, const std::function<void(const Perm&)>& visit);
void for_each_member(ExtendedSymmetry s, int n, const std::function<void(const Perm&)>& visit);
std::vector<Perm> ensemble_enumerate(Symmetry s, int n);
std::vector<Perm> ensemble_enumerate(ExtendedSymmetry s, int n);

// Members with no increasing subsequence longer than l.
Rational f_count(Symmetry s, int n, int l);
// Entry l is f_count(s, n, l) for l = 0..lmax, from a single enumeration.
std::vector<Rational> f_count_table(Symmetry s, int n, int lmax);

// Diagonal statistics of an extended member: fixed points and anti-diagonal
// points (pi(x) = n+1-x), as raw counts.
struct DiagonalStats {
  int fixed = 0;
  int antifixed = 0;
};
DiagonalStats diagonal_stats(const Perm& p);

// Counting conventions:
//   O: involutions of S_n with m fixed points;
//   S: members of S_n with (pi iota)^2 = 1 and m points with pi(x) = iota(x);
//   u: members of S_{2n} commuting with iota under both relations, with 2*m
//      fixed points and 2*m2 anti-diagonal points.
Rational ftilde_count(ExtendedSymmetry s, int n, int m, int l, int m2 = 0);

// table[m][m2][l] for all statistics, l = 0..lmax.
using FtildeTable = std::vector<std::vector<std::vector<Rational>>>;
FtildeTable ftilde_table(ExtendedSymmetry s, int n, int lmax);

// f^UU_{n,2l} = sum_m C(n,m)^2 f^U_{m,l} f^U_{n-m,l} and f^u_{n,2l} = C(2n,n) f^U_{n,l}.
bool convolution_identities_check(int n, int l);

// Members pi of the rotation ensemble satisfy lis(pi) = max(2 lis(s), 2 lds(s) - 1)
// for the permutation s of S_n they encode; this checks the induced count
// identity n! f_rot(n,L) = |S_rot_n| #{s : max(2 lis, 2 lds - 1) <= L}.
bool rotation_count_property(int n, int L);

}  // namespace incseq
