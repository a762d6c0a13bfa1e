#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "incseq/permutation.hpp"
#include "incseq/rational.hpp"
#include "incseq/report.hpp"
#include "incseq/rsk.hpp"

namespace incseq {

class resource_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Finite combination of permutations of S_n. Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n = 0) : n_(n) {}
  static GroupAlgebraElement of(const Perm& p, const Rational& c = Rational(1));

  int n() const { return n_; }
  const std::map<Perm, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Perm& p) const;
  void add(const Perm& p, const Rational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b);
  friend GroupAlgebraElement operator*(const Rational& c, GroupAlgebraElement a);
  // The product matching operator composition: T_l(x * y) = T_l(x) T_l(y).
  // For permutations, p * q = compose(q, p).
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& a, const GroupAlgebraElement& b);
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int n_;
  std::map<Perm, Rational> terms_;
};

// Signed (E) and plain (H) sums over permutations fixing the complement of S
// (positions 1..n).
GroupAlgebraElement E_S(int n, const std::vector<int>& S);
GroupAlgebraElement H_S(int n, const std::vector<int>& S);

// Words over {1..l} of length n, indexed lexicographically.
using Word = std::vector<int>;
size_t word_index(const Word& w, int l);
Word word_at(size_t index, int l, int n);

// Sparse operator on (C^l)^{otimes n}: (output word, input word) -> entry.
struct TensorOperator {
  int l = 0;
  int n = 0;
  std::map<std::pair<size_t, size_t>, Rational> entries;

  Rational at(const Word& out, const Word& in) const;
  bool is_zero() const { return entries.empty(); }
  friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
    return a.l == b.l && a.n == b.n && a.entries == b.entries;
  }
  friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
};

// T_l(p)(v_1 x ... x v_n) = v_{p(1)} x ... x v_{p(n)}, extended linearly.
// Throws resource_error when l^n exceeds 10^5.
TensorOperator T_matrix(const Perm& p, int l);
TensorOperator T_matrix(const GroupAlgebraElement& e, int l);

// p composed with the signed sum over rearrangements of the positions S.
GroupAlgebraElement kernel_element(const Perm& p, const std::vector<int>& S);

// Positions of a decreasing subsequence of length k, lexicographically first,
// or empty if there is none.
std::vector<int> decreasing_positions(const Perm& p, int k);

// Rewrites modulo ker T_l until no permutation in the support has a
// decreasing subsequence longer than l. The support element with the most
// inversions is eliminated first.
GroupAlgebraElement straighten_U(const GroupAlgebraElement& e, int l);

struct BasisCertificate {
  std::vector<Perm> basis;
  size_t expected = 0;  // f^U_{nl} from the enumeration oracle
  size_t rank = 0;      // exact rank of the T_l images
  bool triangular = false;
  bool ok() const { return basis.size() == expected && rank == basis.size() && triangular; }
};
// {p in S_n : lds(p) <= l} with the rank and triangularity certificates.
BasisCertificate basis_U(int n, int l);

// Rank of the span of all T_l(p) against the enumeration count and the
// series coefficient.
Report centralizer_dim_check(int n, int l);

// Straightening for the projected invariants Pi(nu') p Pi(nu). A multiset
// here has first coordinates the blocks of nu and second coordinates the
// blocks of nu'; W and W' mark the antisymmetrized blocks.
struct ProjectedSetting {
  std::vector<int> nu;   // composition of n, blocks of the input positions
  std::vector<int> nup;  // composition of n, blocks of the output positions
  Letters W;             // block indices 1.. of nu
  Letters Wp;            // block indices 1.. of nu'
  int n() const;
};
using MultisetCombination = std::map<std::map<Cell, int>, Rational>;

// Pi(nu') p Pi(nu) in the group algebra.
GroupAlgebraElement projected_element(const ProjectedSetting& s, const Perm& p);
// The multiset {(block_nu(p(j)), block_nu'(j))}.
WeightedMultiset multiset_of(const ProjectedSetting& s, const Perm& p);
// The representative whose W blocks read decreasingly and other blocks
// increasingly.
Perm canonical_perm(const ProjectedSetting& s, const WeightedMultiset& M);
// All compatible multisets of the setting's content.
std::vector<WeightedMultiset> setting_multisets(const ProjectedSetting& s);
// Throws domain_error when the projected element vanishes (incompatible M).
MultisetCombination straighten_U_multiset(const ProjectedSetting& s, const MultisetCombination& e, int l);
// Operator of a combination, through the canonical representatives.
TensorOperator multiset_operator(const ProjectedSetting& s, const MultisetCombination& e, int l);

struct MultisetBasisCheck {
  size_t basis_size = 0;   // multisets with lds_{W W'} <= l
  size_t lis_count = 0;    // multisets with lis_{W W'} <= l
  size_t rank = 0;         // rank of the basis operators
  size_t span_rank = 0;    // rank of all projected operators
  size_t series_count = 0; // coefficient of q^nu q'^nu' in the unitary Schur sum
  Report report;
};
MultisetBasisCheck multiset_basis_check(const ProjectedSetting& s, int l);

// Fixed-point-free involutions of S_{2n} in one-line form.
std::vector<Perm> fpf_involutions(int n2);
using InvolutionElement = std::map<Perm, Rational>;

// Basic invariants as vectors in (R^l)^{otimes 2n} (orthogonal) or in
// (R^{2l})^{otimes 2n} with J = [[0, -I], [I, 0]] (symplectic). Pairs are
// contracted in increasing position order.
std::map<size_t, Rational> orth_vector(const Perm& tau, int l);
std::map<size_t, Rational> symp_vector(const Perm& tau, int l);

// Eliminates increasing subsequences of length l+1 built from points
// (x, tau(x)) with x < tau(x). Elements with the fewest inversions go first
// since the rewrite raises the inversion count.
InvolutionElement orth_reduce(const InvolutionElement& e, int l);
// Eliminates symmetric decreasing subsequences of length 2l+2.
InvolutionElement symp_reduce(const InvolutionElement& e, int l);

// Reduced families and their certificates at one (n, l): rank of the reduced
// family, its size, the rank of all basic invariants, and the reductions
// preserving the vector of every involution.
Report orth_symp_check(int n, int l);

// The full straightening suite: basis_U and centralizer dimensions for
// n <= nU, l <= lU, and the involution families for n <= nO, l <= lO.
Report straightening_suite(int nU, int lU, int nO, int lO);

}  // namespace incseq
