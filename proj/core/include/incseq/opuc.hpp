#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "incseq/ensembles.hpp"
#include "incseq/group_integrals.hpp"
#include "incseq/laurent.hpp"
#include "incseq/report.hpp"
#include "incseq/series.hpp"

namespace incseq {

// c_j = <z^j, 1> for the weight f, i.e. the coefficient of z^{-j} in f.
// Access outside the stored window throws std::out_of_range.
struct MomentSequence {
  int order = 0;
  int window = 0;
  std::vector<Series> values;  // index j + window

  const Series& operator()(int j) const;
};

// c_j = I_j(2t), the moments of exp(t(z + 1/z)).
MomentSequence bessel_moments(int order, int window);
MomentSequence moments_from_symbol(const Laurent<Series>& f, int order);

class degeneracy_error : public std::runtime_error {
 public:
  degeneracy_error(int degree, const std::string& what) : std::runtime_error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

// Polynomial with series coefficients; index i holds the coefficient of z^i.
using SeriesPoly = std::vector<Series>;

Series poly_eval(const SeriesPoly& p, const Rational& x);
SeriesPoly poly_reversed(const SeriesPoly& p, int degree);
// <p, q> = sum_{a,b} p_a q_b c_{a-b}.
Series moment_inner(const MomentSequence& c, const SeriesPoly& p, const SeriesPoly& q);

struct OPUCData {
  int order = 0;
  std::vector<SeriesPoly> pi;  // monic, deg pi_j = j
  std::vector<Series> N;       // N_j = <pi_j, pi_j>

  int max_degree() const { return static_cast<int>(pi.size()) - 1; }
  // pi_j(0); note pi_0(0) = 1.
  const Series& at_zero(int j) const { return pi.at(static_cast<size_t>(j)).front(); }
  // pi*_j(z) = z^j pi_j(1/z).
  SeriesPoly reversed(int j) const { return poly_reversed(pi.at(static_cast<size_t>(j)), j); }
};

// Gram-Schmidt on 1, z, ..., z^L. Throws degeneracy_error when a norm has
// zero constant term.
OPUCData opuc_build(const MomentSequence& c, int L);

// Orthogonality, the Szego recursion, the norm recursion and the values at +-1.
Report opuc_identities_check(const OPUCData& d, const MomentSequence& c);

// The seven product formulas for E det g(U) over U, O+-, Sp against the
// determinant forms, sizes up to L, together with g(1)g(-1)E_U(l) =
// E_{O+(l+1)} E_{O-(l+1)}.
Report verify_products(const Laurent<Series>& g, int L, int order);
// D-series determinants against their OPUC products for the Bessel weight.
Report d_series_products_check(int L, int order);
// The infinite-tail products e^{-t^2}D_l = prod_{j >= l} N_j^{-1}
// and the four analogues, each checked literally.
Report szego_tail_check(int L, int order);

// Monic p^{+-+-}_l in x orthogonal for <rho p q>, <x^a> = CT[((z+1/z)/2)^a f].
enum class HalfLine { mm, pm, mp, pp };
std::string to_string(HalfLine h);
struct HalfLineFamily {
  std::vector<SeriesPoly> p;  // coefficients in x
  std::vector<Series> N;
};
HalfLineFamily halfline_build(const MomentSequence& c, HalfLine kind, int L);
// The z-identities tying p^{+-+-} to pi, the evaluations at +-1 and the norm chains.
Report halfline_relations_check(const MomentSequence& c, int L);

// E_{O+-(m)} det((1 - alpha U) g(U)) against pi*(alpha) -+ alpha pi(alpha),
// alpha symbolic, and the six alpha = -+1 cases.
Report alpha_formula_check(const Laurent<Series>& g, int L, int order);
// E_{U(l)} det((1-alpha U)(1-beta U^dagger) g g^dagger) against the exact
// quotient (pi*pi* - alpha beta pi pi)/(1 - alpha beta), and the product form
// through O+(l+1), O-(l+1).
Report unitary_alpha_beta_check(const Laurent<Series>& g, int L, int order);

// P(t; alpha, beta) by the orthogonal polynomial route for the Bessel weight:
// O for every l, S and u for odd l. Throws std::invalid_argument otherwise.
MultiPoly P_alpha_opuc(ExtendedSymmetry sym, int l, const AlphaLayout& L);
// The alpha = 1 specializations, by the product route and by the integral route.
Series P_alpha_one_opuc(ExtendedSymmetry sym, int l, int order);
Series P_alpha_one_integral(ExtendedSymmetry sym, int l, int order);
Report p_alpha_routes_check(int lmax, int N, int B);

}  // namespace incseq
