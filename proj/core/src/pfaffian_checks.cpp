#include "incseq/pfaffian_checks.hpp"

#include <random>

namespace incseq {

IdentitySides de_bruijn_sides(const DeBruijnInstance& inst) {
  const size_t X = inst.weights.size();
  const size_t n = inst.phi.size();
  if (inst.rho.rows() != X || inst.rho.cols() != X) throw dimension_error("de_bruijn: kernel size mismatch");
  if (!inst.rho.is_antisymmetric()) throw structure_error("de_bruijn: kernel is not antisymmetric");
  for (const auto& f : inst.phi)
    if (f.size() != X) throw dimension_error("de_bruijn: test function size mismatch");

  IdentitySides s;
  const bool odd = n % 2;
  std::vector<size_t> x(n, 0);
  std::vector<Rational> ones(n, Rational(1));
  if (n == 0) {
    s.lhs = Rational(1);
  } else if (X > 0) {
    for (;;) {
      Rational mass(1);
      for (size_t i = 0; i < n; ++i) mass *= inst.weights[x[i]];
      if (!mass.is_zero()) {
        auto R = RingMatrix<Rational>::build(n, n, Rational(), [&](size_t j, size_t k) { return inst.rho(x[j], x[k]); });
        Rational pf = odd ? bordered_pfaffian(ones, R) : pfaffian(R);
        if (!pf.is_zero()) {
          auto P = RingMatrix<Rational>::build(n, n, Rational(), [&](size_t j, size_t k) { return inst.phi[j][x[k]]; });
          s.lhs += mass * pf * det(P);
        }
      }
      size_t i = 0;
      while (i < n && ++x[i] == X) x[i++] = 0;
      if (i == n) break;
    }
  }

  auto A = RingMatrix<Rational>::build(n, n, Rational(), [&](size_t j, size_t k) {
    Rational acc;
    for (size_t a = 0; a < X; ++a)
      for (size_t b = 0; b < X; ++b)
        acc += inst.weights[a] * inst.weights[b] * inst.phi[j][a] * inst.rho(a, b) * inst.phi[k][b];
    return acc;
  });
  Rational pf;
  if (odd) {
    std::vector<Rational> v(n);
    for (size_t j = 0; j < n; ++j)
      for (size_t a = 0; a < X; ++a) v[j] += inst.weights[a] * inst.phi[j][a];
    pf = bordered_pfaffian(v, A);
  } else {
    pf = pfaffian(A);
  }
  s.rhs = factorial(static_cast<int>(n)) * pf;
  return s;
}

bool de_bruijn_check(const DeBruijnInstance& inst) { return de_bruijn_sides(inst).equal(); }

OddTable::OddTable(std::vector<Rational> positive) : pos_(std::move(positive)) {}

OddTable OddTable::from_window(const std::vector<Rational>& window) {
  if (window.size() % 2 == 0) throw structure_error("OddTable: window must have odd length");
  const int w = static_cast<int>(window.size() / 2);
  if (!window[static_cast<size_t>(w)].is_zero()) throw structure_error("OddTable: x_0 must vanish");
  std::vector<Rational> pos;
  for (int j = 1; j <= w; ++j) {
    const Rational& a = window[static_cast<size_t>(w + j)];
    const Rational& b = window[static_cast<size_t>(w - j)];
    if (a != -b) throw structure_error("OddTable: table is not odd at index " + std::to_string(j));
    pos.push_back(a);
  }
  return OddTable(std::move(pos));
}

Rational OddTable::operator()(int j) const {
  if (j == 0) return Rational();
  size_t a = static_cast<size_t>(j < 0 ? -j : j);
  if (a > pos_.size()) return Rational();
  return j < 0 ? -pos_[a - 1] : pos_[a - 1];
}

Rational gordon_even_pfaffian(const OddTable& x, int l) {
  size_t n = static_cast<size_t>(2 * l);
  auto M = RingMatrix<Rational>::build(n, n, Rational(), [&](size_t j, size_t k) {
    return x(static_cast<int>(k) - static_cast<int>(j));
  });
  return pfaffian(M);
}

Rational gordon_even_determinant(const OddTable& x, int l) {
  size_t n = static_cast<size_t>(l);
  auto M = RingMatrix<Rational>::build(n, n, Rational(), [&](size_t j, size_t k) {
    Rational acc;
    for (int m = 0; m <= static_cast<int>(k); ++m) acc += x(static_cast<int>(j) - static_cast<int>(k) + 2 * m + 1);
    return acc;
  });
  return det(M);
}

Laurent<Rational> gordon_odd_pfaffian(const OddTable& x, int l) {
  using L = Laurent<Rational>;
  size_t n = static_cast<size_t>(2 * l + 1);
  L zero(Rational{});
  auto M = RingMatrix<L>::build(n, n, zero, [&](size_t j, size_t k) {
    return L::constant(x(static_cast<int>(k) - static_cast<int>(j)));
  });
  std::vector<L> v;
  for (size_t j = 0; j < n; ++j) v.push_back(L::monomial(static_cast<int>(j) - l, Rational(1)));
  return bordered_pfaffian(v, M);
}

Laurent<Rational> gordon_odd_determinant(const OddTable& x, int l) {
  using L = Laurent<Rational>;
  size_t n = static_cast<size_t>(l);
  L zplus = L::monomial(1, Rational(1)) + L::monomial(-1, Rational(1));
  auto M = RingMatrix<L>::build(n, n, L(Rational{}), [&](size_t j, size_t k) {
    L acc(Rational{});
    int d = static_cast<int>(j) - static_cast<int>(k);
    for (int m = 0; m <= static_cast<int>(k); ++m) {
      acc += zplus * x(d + 2 * m + 1);
      acc -= L::constant(x(d + 2 * m) + x(d + 2 * m + 2));
    }
    return acc;
  });
  return det(M);
}

GordonReport gordon_identity_check(const OddTable& x, int l) {
  if (l < 0) throw std::invalid_argument("gordon_identity_check: negative l");
  GordonReport r;
  r.even_ok = gordon_even_pfaffian(x, l) == gordon_even_determinant(x, l);
  r.odd_ok = gordon_odd_pfaffian(x, l) == gordon_odd_determinant(x, l);
  return r;
}

DeBruijnInstance random_de_bruijn_instance(std::uint64_t seed, int n, int points) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-3, 3), mass(1, 3);
  DeBruijnInstance inst;
  const size_t X = static_cast<size_t>(points);
  for (size_t a = 0; a < X; ++a) inst.weights.push_back(Rational(mass(rng), mass(rng)));
  inst.rho = RingMatrix<Rational>(X, Rational());
  for (size_t a = 0; a < X; ++a)
    for (size_t b = a + 1; b < X; ++b) {
      Rational v(small(rng));
      inst.rho(a, b) = v;
      inst.rho(b, a) = -v;
    }
  inst.phi.assign(static_cast<size_t>(n), std::vector<Rational>(X));
  for (auto& f : inst.phi)
    for (auto& v : f) v = Rational(small(rng));
  return inst;
}

OddTable random_odd_table(std::uint64_t seed, int extent) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> small(-4, 4);
  std::vector<Rational> pos;
  for (int j = 0; j < extent; ++j) pos.push_back(Rational(small(rng)));
  return OddTable(std::move(pos));
}

}  // namespace incseq
