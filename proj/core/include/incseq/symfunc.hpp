#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "incseq/multipoly.hpp"
#include "incseq/partition.hpp"
#include "incseq/report.hpp"

namespace incseq {

class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Coefficients of a power series in u with MultiPoly entries; index m holds u^m.
using GenFun = std::vector<MultiPoly>;

GenFun genfun_mul(const GenFun& a, const GenFun& b);
// u -> c u
GenFun genfun_scale(const GenFun& a, const Rational& c);

// Generator sequence m -> h_m (or e_m); negative m must give 0.
using HGen = std::function<MultiPoly(int)>;

// Finite alphabet x_1..x_k / y_1..y_m inside a MultiPoly grading. The
// complete functions are the coefficients of H(u;x/y) = H(u;x)E(u;y), so an
// empty y part gives the ordinary symmetric functions. Degrees above cap are
// not stored; callers pick cap at least the truncation bound of the slots.
class Alphabet {
 public:
  Alphabet(std::vector<int> x_slots, std::vector<int> y_slots, const Grading& g, int cap);

  const std::vector<int>& x_slots() const { return x_; }
  const std::vector<int>& y_slots() const { return y_; }
  const Grading& grading() const { return g_; }
  int cap() const { return cap_; }

  const MultiPoly& h(int m) const;
  const MultiPoly& e(int m) const;
  HGen h_gen() const;
  // H(u;x/y) and E(u;x/y) through u^cap.
  GenFun H() const { return hs_; }
  GenFun E() const { return es_; }
  // H(c;x/y) = sum_m c^m h_m, with c a constant or a polynomial in other slots.
  MultiPoly H_at(const MultiPoly& c) const;
  MultiPoly E_at(const MultiPoly& c) const;
  MultiPoly H_at(const Rational& c) const;
  MultiPoly E_at(const Rational& c) const;

  MultiPoly zero() const { return MultiPoly(g_); }
  MultiPoly one() const { return MultiPoly::constant(1, g_); }

  // Cached Jacobi-Trudi Schur function.
  const MultiPoly& schur(const Partition& p) const;

 private:
  std::vector<int> x_, y_;
  Grading g_;
  int cap_;
  MultiPoly zero_;
  GenFun hs_, es_;
  mutable std::map<Partition, MultiPoly> schur_cache_;
};

// det(h_{lambda_i - i + j}) from an arbitrary generator sequence.
MultiPoly schur_from_h(const Partition& p, const HGen& h, const MultiPoly& proto);
// det(e_{lambda'_i - i + j}).
MultiPoly schur_from_e(const Partition& p, const HGen& e, const MultiPoly& proto);
MultiPoly schur(const Partition& p, const Alphabet& A);

// Tableau oracle: sum over semistandard fillings with entries x_1 < ... < x_k
// (ordinary alphabets only).
MultiPoly schur_tableaux(const Partition& p, const Alphabet& A);

// s~_lambda = s_{lambda^(0)} s_{lambda^(1)} for trivial 2-core, else 0.
MultiPoly schur_tilde(const Partition& p, const Alphabet& A);
// (-1)^{f/2} phi_2(s_lambda) with phi_2(h_2n) = h_n, phi_2(h_2n+1) = 0.
MultiPoly schur_tilde_phi2(const Partition& p, const Alphabet& A);

// H-perp(beta) and E-perp(alpha) on the h generators:
// H-perp(beta) H(u) = (1 - beta u)^{-1} H(u), E-perp(alpha) H(u) = (1 + alpha u) H(u).
// Both are ring homomorphisms, so applying them to a polynomial in the h_m
// means rebuilding it from the transformed generators.
enum class PerpKind { H, E };
HGen perp(PerpKind kind, const MultiPoly& value, const HGen& h, int cap);
// The matching action on the e generators: H-perp(beta) E(u) = (1 + beta u) E(u),
// E-perp(alpha) E(u) = (1 - alpha u)^{-1} E(u).
HGen perp_on_e(PerpKind kind, const MultiPoly& value, const HGen& e, int cap);
// e_m from h_0..h_m by E(u)H(-u) = 1.
HGen e_from_h(const HGen& h, int cap, const MultiPoly& proto);

enum class SumVariant {
  unitary_pair,      // s_l(x) s_l(y), l(lambda) <= l
  orthogonal,        // s_{2 lambda}, l(lambda) <= l
  symplectic,        // s_mu with mu = lambda^2 (mu' even), l(mu) <= l
  orthogonal_alpha,  // alpha^{f(lambda)} s_lambda, l(lambda) <= l
  symplectic_beta,   // beta^{f(lambda')} s_lambda, l(lambda) <= l
  all,               // s_lambda, l(lambda) <= l
  column_bound,      // alpha^{f(lambda)} s_lambda, lambda'_2 <= l
  column_bound_det,  // alpha^{2 lambda'_1 - l - f(lambda)} s_lambda, lambda'_2 <= l <= lambda'_1
  tilde_pair,        // s~_lambda(x) s~_lambda(y), l(lambda) <= l
  tilde_square,      // s~_{2 lambda^2}, l(lambda) <= l
  tilde_alpha_beta,  // alpha^{f/2} beta^{f'/2} s~_lambda, l(lambda) <= l
  tilde_column,      // alpha^{f/2} beta^{f'/2} s~_lambda, lambda'_2 <= l
};
std::string to_string(SumVariant v);
// Throws usage_error on an unknown name.
SumVariant parse_sum_variant(const std::string& name);

struct SumWeights {
  MultiPoly alpha;
  MultiPoly beta;
};

// Direct summation over partitions, up to the size where every term is
// truncated away. B is the second alphabet of the pair variants.
MultiPoly schur_sum(SumVariant v, int l, const SumWeights& w, const Alphabet& A, const Alphabet* B = nullptr);

// Slots for the identity checks: x in group 0 with bound D, y (pair
// identities) in group 0 too, alpha in group 1 and beta in group 2, each
// bounded by ab_bound.
struct IdentityContext {
  int k = 4;         // variables in the x alphabet (split k/2 + k/2 for pairs)
  int D = 8;         // total degree bound
  int ab_bound = 3;  // degree bound in alpha and in beta
};

struct IdentityResult {
  std::string tag;
  int l = 0;
  int k = 0;
  int D = 0;
  Report report;
};

// Stable tags, one per Schur-sum identity.
const std::vector<std::string>& identity_tags();
// Throws usage_error for an unknown tag or D < 1.
IdentityResult verify_identity(const std::string& tag, int l, const IdentityContext& ctx);

// i_j(x) = sum_m h_m h_{m+j}, g_j(x;y) = sum_m h_m(x) h_{m+j}(y).
MultiPoly i_entry(const Alphabet& A, int j);
MultiPoly g_entry(const Alphabet& A, const Alphabet& B, int j);

// pf(M0) + (1/2)(1 - alpha^2) H(1)H(-1) pf(M0'') against the alpha-weighted
// orthogonal sum, l even. Throws usage_error for odd l.
struct PfaffianRoute {
  MultiPoly value;
  MultiPoly literal;  // with the uncorrected M0' entries i_{k-j-1} - i_{k-j+1}
  Report report;
};
PfaffianRoute pfaffian_route_O(int l, const Alphabet& A, int alpha_slot);
// The (bordered) pfaffian of sum_{m,n} F(m,n) h_{m-j} h_{n-k}, any l.
MultiPoly pfaffian_direct_O(int l, const Alphabet& A, int alpha_slot);
// F(mu) = alpha^{f(lambda)} against the pfaffian of the pair values, over
// increasing l-tuples from [0, top]. The odd case uses the bordered
// pfaffian with the border vector F(m) = alpha^{m mod 2} placed first.
Report pair_lemma_check(int l, int top);

}  // namespace incseq
