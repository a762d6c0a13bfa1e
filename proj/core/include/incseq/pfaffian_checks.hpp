#pragma once

#include <cstdint>
#include <vector>

#include "incseq/laurent.hpp"
#include "incseq/matrix.hpp"
#include "incseq/rational.hpp"

namespace incseq {

// A finite measure space with an antisymmetric kernel and n test functions.
struct DeBruijnInstance {
  std::vector<Rational> weights;           // mass of each point
  RingMatrix<Rational> rho{0, Rational()};  // antisymmetric kernel on points
  std::vector<std::vector<Rational>> phi;  // phi[j][x]
};

struct IdentitySides {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

// Left side: sum over x in X^n of mass * pf(rho(x_j,x_k)) * det(phi_j(x_k)),
// with the pfaffian bordered by ones when n is odd. Right side: n! times the
// (bordered) pfaffian of the integrated kernel.
IdentitySides de_bruijn_sides(const DeBruijnInstance& inst);
bool de_bruijn_check(const DeBruijnInstance& inst);

// Odd integer-indexed table: value(j) for j >= 1 given, value(0) = 0,
// value(-j) = -value(j). Indices beyond the table read as zero.
class OddTable {
 public:
  explicit OddTable(std::vector<Rational> positive);  // x_1, x_2, ...
  // Builds from a full window x_{-w..w}; throws structure_error unless odd.
  static OddTable from_window(const std::vector<Rational>& window);
  Rational operator()(int j) const;
  size_t extent() const { return pos_.size(); }

 private:
  std::vector<Rational> pos_;
};

struct GordonReport {
  bool even_ok = false;
  bool odd_ok = false;
  bool ok() const { return even_ok && odd_ok; }
};

// Both pfaffian = determinant identities, even and odd, for the given l, the odd
// one with z as a formal Laurent variable.
GordonReport gordon_identity_check(const OddTable& x, int l);
Rational gordon_even_pfaffian(const OddTable& x, int l);
Rational gordon_even_determinant(const OddTable& x, int l);
Laurent<Rational> gordon_odd_pfaffian(const OddTable& x, int l);
Laurent<Rational> gordon_odd_determinant(const OddTable& x, int l);

// Random instance with small integer entries (deterministic in the seed).
DeBruijnInstance random_de_bruijn_instance(std::uint64_t seed, int n, int points);
OddTable random_odd_table(std::uint64_t seed, int extent);

}  // namespace incseq
