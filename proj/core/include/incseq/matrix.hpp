#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "incseq/laurent.hpp"
#include "incseq/rational.hpp"

namespace incseq {

class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class structure_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Dense matrix over a commutative ring. Entries of an empty matrix need a
// prototype element so that det() can still return the right "1".
template <class R>
class RingMatrix {
 public:
  RingMatrix(size_t rows, size_t cols, const R& proto)
      : rows_(rows), cols_(cols), proto_(zero_like(proto)), a_(rows * cols, zero_like(proto)) {}
  RingMatrix(size_t n, const R& proto) : RingMatrix(n, n, proto) {}

  template <class F>
  static RingMatrix build(size_t rows, size_t cols, const R& proto, F&& f) {
    RingMatrix m(rows, cols, proto);
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m(i, j) = f(i, j);
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const R& proto() const { return proto_; }
  R& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }

  RingMatrix transposed() const {
    return build(cols_, rows_, proto_, [&](size_t i, size_t j) { return (*this)(j, i); });
  }
  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.cols_ != b.rows_) throw dimension_error("RingMatrix: product shape mismatch");
    RingMatrix r(a.rows_, b.cols_, a.proto_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  bool is_antisymmetric() const {
    if (!square()) return false;
    for (size_t i = 0; i < rows_; ++i) {
      if (!is_zero((*this)(i, i))) return false;
      for (size_t j = i + 1; j < rows_; ++j)
        if (!is_zero((*this)(i, j) + (*this)(j, i))) return false;
    }
    return true;
  }

 private:
  size_t rows_, cols_;
  R proto_;
  std::vector<R> a_;
};

namespace detail {

// Leibniz expansion organised as a DP over the set of used columns:
// n 2^n ring multiplications, no division.
template <class R>
R det_by_minors(const RingMatrix<R>& m) {
  const size_t n = m.rows();
  if (n > 24) throw dimension_error("det: dimension too large for minor expansion");
  const R one = one_like(m.proto());
  if (n == 0) return one;
  std::vector<R> dp(size_t{1} << n, zero_like(m.proto()));
  std::vector<char> live(dp.size(), 0);
  dp[0] = one;
  live[0] = 1;
  for (std::uint32_t mask = 0; mask < dp.size(); ++mask) {
    if (!live[mask]) continue;
    const size_t r = static_cast<size_t>(__builtin_popcount(mask));
    if (r == n) continue;
    if (is_zero(dp[mask])) continue;
    for (size_t c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      const R& e = m(r, c);
      if (is_zero(e)) continue;
      // Columns already used that are greater than c each contribute one inversion.
      int inv = __builtin_popcount(mask >> (c + 1));
      std::uint32_t next = mask | (1u << c);
      if (inv & 1)
        dp[next] -= e * dp[mask];
      else
        dp[next] += e * dp[mask];
      live[next] = 1;
    }
    if (r + 1 < n) dp[mask] = zero_like(m.proto());  // release memory early
  }
  return dp.back();
}

// Elimination using only unit pivots; returns false if some column has none.
template <class R>
bool det_unit_pivot(RingMatrix<R> m, R& out) {
  const size_t n = m.rows();
  R d = one_like(m.proto());
  for (size_t k = 0; k < n; ++k) {
    size_t p = n;
    for (size_t i = k; i < n; ++i)
      if (m(i, k).is_unit()) {
        p = i;
        break;
      }
    if (p == n) return false;
    if (p != k) {
      for (size_t j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      d = -d;
    }
    R inv = m(k, k).reciprocal();
    d = d * m(k, k);
    for (size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      R f = m(i, k) * inv;
      for (size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  out = d;
  return true;
}

template <class R>
R pfaffian_by_matchings(const RingMatrix<R>& m) {
  const size_t n = m.rows();
  if (n > 30) throw dimension_error("pfaffian: dimension too large");
  std::unordered_map<std::uint32_t, R> memo;
  // pf over the index set S, expanding along its smallest element.
  auto rec = [&](auto&& self, std::uint32_t S) -> R {
    if (S == 0) return one_like(m.proto());
    auto it = memo.find(S);
    if (it != memo.end()) return it->second;
    int i = __builtin_ctz(S);
    std::uint32_t rest = S & ~(1u << i);
    R acc = zero_like(m.proto());
    int pos = 0;
    for (std::uint32_t T = rest; T; T &= T - 1) {
      int j = __builtin_ctz(T);
      ++pos;
      const R& e = m(static_cast<size_t>(i), static_cast<size_t>(j));
      if (!is_zero(e)) {
        R sub = self(self, rest & ~(1u << j));
        if (pos % 2 == 1)
          acc += e * sub;
        else
          acc -= e * sub;
      }
    }
    memo.emplace(S, acc);
    return acc;
  };
  std::uint32_t all = n == 32 ? ~0u : ((1u << n) - 1);
  return rec(rec, all);
}

}  // namespace detail

// Determinant. Rational entries use fraction-free Bareiss; other rings use
// expansion by minors below dimension 8 and unit-pivot elimination above it
// when possible (falling back to minors).
template <class R>
R det(const RingMatrix<R>& m) {
  if (!m.square()) throw dimension_error("det: non-square matrix");
  if constexpr (requires(const R& x) {
                  x.is_unit();
                  x.reciprocal();
                }) {
    if (m.rows() >= 8) {
      R out = one_like(m.proto());
      if (detail::det_unit_pivot(m, out)) return out;
    }
  }
  return detail::det_by_minors(m);
}

template <>
Rational det(const RingMatrix<Rational>& m);

// Signed perfect-matching sum over a 2n x 2n antisymmetric matrix.
template <class R>
R pfaffian(const RingMatrix<R>& m) {
  if (!m.square()) throw dimension_error("pfaffian: non-square matrix");
  if (m.rows() % 2) throw structure_error("pfaffian: odd dimension");
  if (!m.is_antisymmetric()) throw structure_error("pfaffian: matrix is not antisymmetric");
  return detail::pfaffian_by_matchings(m);
}

template <>
Rational pfaffian(const RingMatrix<Rational>& m);

// Pfaffian of the (n+1)x(n+1) matrix with v as the extra first row: row and
// column -1 with B(-1,j) = v_j, B(j,-1) = -v_j.
template <class R>
R bordered_pfaffian(const std::vector<R>& v, const RingMatrix<R>& m) {
  if (!m.square()) throw dimension_error("bordered_pfaffian: non-square matrix");
  if (v.size() != m.rows()) throw dimension_error("bordered_pfaffian: border length mismatch");
  const size_t n = m.rows();
  RingMatrix<R> b(n + 1, m.proto());
  for (size_t j = 0; j < n; ++j) {
    b(0, j + 1) = v[j];
    b(j + 1, 0) = -v[j];
    for (size_t k = 0; k < n; ++k) b(j + 1, k + 1) = m(j, k);
  }
  return pfaffian(b);
}

// Rank over the rationals (row echelon form).
size_t rank(const RingMatrix<Rational>& m);
// Sparse rank: rows given as (column, value) lists.
size_t sparse_rank(std::vector<std::vector<std::pair<size_t, Rational>>> rows);

}  // namespace incseq
