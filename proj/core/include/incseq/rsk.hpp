#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "incseq/multipoly.hpp"
#include "incseq/partition.hpp"
#include "incseq/report.hpp"

namespace incseq {

using Cell = std::pair<int, int>;
using Letters = std::set<int>;  // a weak set W inside a totally ordered alphabet of ints

// Multiset of pairs with positive multiplicities.
struct WeightedMultiset {
  std::map<Cell, int> entries;

  void add(int i, int j, int m = 1);
  int size() const;
  WeightedMultiset transposed() const;
  friend bool operator==(const WeightedMultiset& a, const WeightedMultiset& b) { return a.entries == b.entries; }
};

// Pairs (i, j) with chi_1(i) != chi_2(j) occur at most once.
bool is_compatible(const WeightedMultiset& M, const Letters& W1, const Letters& W2);

// Longest (W1,W2)-increasing subsequence: coordinates weakly increase, and
// a coordinate may repeat only inside its W set.
int lis_general(const WeightedMultiset& M, const Letters& W1, const Letters& W2);
// Longest (W1,W2)-decreasing subsequence: as above with the second
// coordinate reversed.
int lds_general(const WeightedMultiset& M, const Letters& W1, const Letters& W2);
// l^{(k)}_{W1W2}: largest submultiset whose longest (W1-bar,W2-bar)-decreasing
// subsequence is at most k. Exhaustive over submultisets.
int greene_increasing(const WeightedMultiset& M, const Letters& W1, const Letters& W2, int k);
// l^{-(k)}_{W1-bar W2-bar}: largest submultiset whose longest
// (W1,W2)-increasing subsequence is at most k.
int greene_decreasing(const WeightedMultiset& M, const Letters& W1, const Letters& W2, int k);

// Rows of a tableau; rows weakly decrease in length.
struct Bitableau {
  std::vector<std::vector<int>> rows;
  Partition shape() const;
  Bitableau transposed() const;
  friend bool operator==(const Bitableau& a, const Bitableau& b) { return a.rows == b.rows; }
};

// Weakly increasing rows and columns; W letters at most once per column,
// the others at most once per row.
bool is_bitableau(const Bitableau& T, const Letters& W);

// All bitableaux of the given shape with entries in [n].
std::vector<Bitableau> bitableaux(const Partition& shape, int n, const Letters& W);

class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// P records first coordinates, Q is the insertion tableau of the second
// coordinates. Pairs are read by first coordinate; equal first coordinates
// i feed their second coordinates in increasing order if i is in W1 and in
// decreasing order otherwise. An inserted b in W2 bumps the leftmost entry
// > b, any other b bumps the leftmost entry >= b. Throws domain_error on
// an incompatible multiset.
std::pair<Bitableau, Bitableau> knuth_correspondence(const WeightedMultiset& M, const Letters& W1, const Letters& W2);
// Throws domain_error on mismatched shapes or invalid tableaux.
WeightedMultiset knuth_inverse(const Bitableau& P, const Bitableau& Q, const Letters& W1, const Letters& W2);

// Transpose equivariance K(M^t) = (Q, P); for M = M^t and W1 = W2 also
// P = Q and the odd-column count of the shape.
Report symmetry_checks(const WeightedMultiset& M, const Letters& W1, const Letters& W2);
// Row sums against l^{(k)} and column sums against l^{-(k)}.
bool greene_check(const WeightedMultiset& M, const Letters& W1, const Letters& W2);

struct RskSuiteResult {
  long multisets = 0;
  long symmetric = 0;
  Report report;
};
// Every compatible multiset on [n] x [n] with total multiplicity <= max_size,
// under every choice of W1, W2 in [n]: round trip, tableau validity,
// content, Greene profile, transposition and fixed points.
RskSuiteResult rsk_exhaustive_suite(int n, int max_size);

// Random-multiset models. A letter is one index of the parameter sequence
// with its variable slot and its sector.
enum class ModelKind { U, UU, O, S, u };
std::string to_string(ModelKind k);

struct Letter {
  int slot = 0;
  bool in_W = false;
};

struct ModelSpec {
  ModelKind kind = ModelKind::U;
  Grading grading;
  std::vector<Letter> q;   // q_1, q_2, ...
  std::vector<Letter> qp;  // q'_1, ... (U and UU only)
  MultiPoly alpha;         // O and u
  MultiPoly beta;          // S and u
  int D = 0;               // bound on the degree in the letters
};

// Probability of the empty multiset, as a product over orbits.
MultiPoly model_Z(const ModelSpec& s);
// Sum over admissible multisets of letter-degree <= D of Prob(M)/Prob(empty),
// bucketed by the longest increasing subsequence length: entry L is the
// total over multisets with lis = L.
std::vector<MultiPoly> model_lis_buckets(const ModelSpec& s);
// Prob(lis <= l) as Z times the bucket sum; l < 0 sums every bucket.
MultiPoly model_distribution(const ModelSpec& s, int l);
// The Schur-function side for lis <= l, without Z.
MultiPoly model_schur_side(const ModelSpec& s, int l);

// Enumeration side against the Schur side for l = 0..lmax, plus
// Z * (all multisets) = 1.
Report distribution_check(const ModelSpec& s, int lmax);

// Standard specs with letters in slots 0.. and alpha, beta in their own
// unbounded groups. Wbits / Wpbits select the W letters.
ModelSpec make_model(ModelKind kind, int a, int b, unsigned Wbits, unsigned Wpbits, int D);
// Every W choice for the five models with at most `vars` letters in total.
Report poisson_models_suite(int vars, int lmax, int D);

// The five equidistribution pairs: "O", "S-floor", "S-ceil", "u-floor",
// "u-ceil", with nq letters outside W and nr letters in W, all variables in
// one degree group bounded by D.
const std::vector<std::string>& equidistribution_pairs();
Report equidistribution_check(const std::string& pair, int nq, int nr, int lmax, int D);

}  // namespace incseq
