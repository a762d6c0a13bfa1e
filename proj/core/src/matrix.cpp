#include "incseq/matrix.hpp"

#include <map>

namespace incseq {

// Fraction-free Bareiss elimination with row pivoting.
template <>
Rational det(const RingMatrix<Rational>& in) {
  if (!in.square()) throw dimension_error("det: non-square matrix");
  const size_t n = in.rows();
  if (n == 0) return Rational(1);
  RingMatrix<Rational> m = in;
  Rational prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return Rational(0);
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Rational v = m(i, j) * m(k, k);
        submul(v, m(i, k), m(k, j));
        m(i, j) = v / prev;
      }
      m(i, k) = Rational(0);
    }
    prev = m(k, k);
  }
  Rational d = m(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

// Skew elimination: pf(A) = A01 * pf(D + (a1 a0^T - a0 a1^T)/A01) after
// moving a nonzero entry of row 0 into column 1.
template <>
Rational pfaffian(const RingMatrix<Rational>& in) {
  if (!in.square()) throw dimension_error("pfaffian: non-square matrix");
  if (in.rows() % 2) throw structure_error("pfaffian: odd dimension");
  if (!in.is_antisymmetric()) throw structure_error("pfaffian: matrix is not antisymmetric");
  const size_t n = in.rows();
  RingMatrix<Rational> a = in;
  Rational pf(1);
  for (size_t k = 0; k < n; k += 2) {
    size_t p = k + 1;
    while (p < n && a(k, p).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k + 1) {
      for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k + 1, j));
      for (size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, k + 1));
      pf = -pf;
    }
    Rational piv = a(k, k + 1);
    pf *= piv;
    for (size_t i = k + 2; i < n; ++i)
      for (size_t j = k + 2; j < n; ++j) {
        Rational v = a(k + 1, i) * a(k, j);
        submul(v, a(k, i), a(k + 1, j));
        a(i, j) += v / piv;
      }
  }
  return pf;
}

size_t rank(const RingMatrix<Rational>& in) {
  RingMatrix<Rational> m = in;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    for (size_t i = r + 1; i < m.rows(); ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) / m(r, c);
      for (size_t j = c; j < m.cols(); ++j) submul(m(i, j), f, m(r, j));
    }
    ++r;
  }
  return r;
}

size_t sparse_rank(std::vector<std::vector<std::pair<size_t, Rational>>> rows) {
  // Incremental echelon basis keyed by leading column.
  std::map<size_t, std::map<size_t, Rational>> basis;
  for (auto& row : rows) {
    std::map<size_t, Rational> v;
    for (auto& [c, x] : row)
      if (!x.is_zero()) v[c] += x;
    for (auto it = v.begin(); it != v.end();) {
      if (it->second.is_zero()) it = v.erase(it);
      else ++it;
    }
    while (!v.empty()) {
      auto lead = v.begin();
      auto b = basis.find(lead->first);
      if (b == basis.end()) break;
      Rational f = lead->second / b->second.begin()->second;
      for (const auto& [c, x] : b->second) {
        Rational& y = v[c];
        submul(y, f, x);
        if (y.is_zero()) v.erase(c);
      }
    }
    if (!v.empty()) {
      size_t key = v.begin()->first;
      basis.emplace(key, std::move(v));
    }
  }
  return basis.size();
}

}  // namespace incseq
