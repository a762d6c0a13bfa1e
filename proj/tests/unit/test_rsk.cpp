#include <algorithm>

#include "doctest.h"
#include "incseq/rsk.hpp"
#include "incseq/symfunc.hpp"

using namespace incseq;

namespace {

WeightedMultiset ms(std::initializer_list<std::array<int, 3>> e) {
  WeightedMultiset M;
  for (const auto& [i, j, m] : e) M.add(i, j, m);
  return M;
}

// Brute force: a sub-multiset is a chain iff its sorted order is one.
int lis_oracle(const WeightedMultiset& M, const Letters& W1, const Letters& W2) {
  std::vector<Cell> flat;
  for (const auto& [c, m] : M.entries)
    for (int t = 0; t < m; ++t) flat.push_back(c);
  int best = 0;
  for (unsigned mask = 0; mask < (1u << flat.size()); ++mask) {
    std::vector<Cell> s;
    for (size_t t = 0; t < flat.size(); ++t)
      if (mask >> t & 1) s.push_back(flat[t]);
    std::sort(s.begin(), s.end());
    bool ok = true;
    for (size_t t = 1; t < s.size() && ok; ++t) {
      const auto [x1, y1] = s[t - 1];
      const auto [x2, y2] = s[t];
      ok = x1 <= x2 && y1 <= y2 && (x1 < x2 || W1.count(x2)) && (y1 < y2 || W2.count(y2));
    }
    if (ok) best = std::max(best, static_cast<int>(s.size()));
  }
  return best;
}

std::string failures(const Report& r) {
  std::string s;
  for (const Check& c : r.checks)
    if (!c.pass) s += c.name + " (" + c.detail + "); ";
  return s;
}

}  // namespace

TEST_CASE("compatibility") {
  CHECK(is_compatible({}, {}, {}));
  CHECK(is_compatible(ms({{1, 1, 2}, {1, 2, 5}}), {1, 2}, {1, 2}));
  // Equal sectors may repeat; the repeated pair is the column [1,1].
  CHECK(is_compatible(ms({{1, 1, 2}}), {}, {}));
  CHECK(knuth_correspondence(ms({{1, 1, 2}}), {}, {}).first.shape() == Partition{1, 1});
  CHECK_FALSE(is_compatible(ms({{1, 1, 2}}), {1}, {}));
  CHECK(is_compatible(ms({{1, 1, 1}}), {1}, {}));
}

TEST_CASE("lis on small cases") {
  CHECK(lis_general(ms({{1, 1, 1}, {2, 2, 1}}), {}, {}) == 2);
  CHECK(lis_general(ms({{1, 2, 1}, {2, 1, 1}}), {1, 2}, {1, 2}) == 1);
  CHECK(lis_general(ms({{1, 1, 3}}), {1}, {1}) == 3);
  CHECK(lis_general(ms({{1, 1, 3}}), {}, {1}) == 1);
  CHECK(lis_general({}, {}, {}) == 0);
}

TEST_CASE("lis matches the subset oracle") {
  const std::vector<Cell> cells{{1, 1}, {1, 2}, {2, 1}, {2, 2}, {1, 3}, {3, 2}};
  int n = 0;
  for (unsigned code = 0; code < 729; ++code) {
    WeightedMultiset M;
    unsigned c = code;
    for (const Cell& cell : cells) {
      M.add(cell.first, cell.second, static_cast<int>(c % 3));
      c /= 3;
    }
    if (M.size() > 6) continue;
    for (unsigned w = 0; w < 64; ++w) {
      Letters W1, W2;
      for (int i = 0; i < 3; ++i) {
        if (w >> i & 1) W1.insert(i + 1);
        if (w >> (i + 3) & 1) W2.insert(i + 1);
      }
      REQUIRE(lis_general(M, W1, W2) == lis_oracle(M, W1, W2));
      ++n;
    }
  }
  CHECK(n > 1000);
}

TEST_CASE("correspondence examples") {
  const auto [P0, Q0] = knuth_correspondence({}, {}, {});
  CHECK(P0.rows.empty());
  CHECK(Q0.rows.empty());

  const auto [P, Q] = knuth_correspondence(ms({{1, 2, 1}, {2, 1, 1}}), {1, 2}, {1, 2});
  CHECK(P.shape() == Partition{1, 1});
  CHECK(P.rows == std::vector<std::vector<int>>{{1}, {2}});
  CHECK(Q.rows == std::vector<std::vector<int>>{{1}, {2}});

  // Strictly decreasing with empty W: no chain has two elements.
  const WeightedMultiset dec = ms({{1, 3, 1}, {2, 2, 1}, {3, 1, 1}});
  CHECK(knuth_correspondence(dec, {}, {}).first.shape() == Partition{1, 1, 1});
  CHECK(greene_check(dec, {}, {}));

  CHECK_THROWS_AS(knuth_correspondence(ms({{1, 1, 2}}), {1}, {}), domain_error);
}

TEST_CASE("inverse") {
  CHECK(knuth_inverse({}, {}, {}, {}).entries.empty());
  Bitableau one{{{3}}}, two{{{5}}};
  CHECK(knuth_inverse(one, two, {}, {}) == ms({{3, 5, 1}}));
  Bitableau row{{{1, 2}}}, col{{{1}, {2}}};
  CHECK_THROWS_AS(knuth_inverse(row, col, {}, {}), domain_error);
  Bitableau bad{{{1, 1}}};
  CHECK_THROWS_AS(knuth_inverse(bad, bad, {}, {}), domain_error);
  CHECK_NOTHROW(knuth_inverse(bad, bad, {1}, {1}));
}

TEST_CASE("round trip on [2]x[2], size <= 4") {
  const RskSuiteResult r = rsk_exhaustive_suite(2, 4);
  CHECK_MESSAGE(r.report.ok(), failures(r.report));
}

TEST_CASE("symmetry and fixed points") {
  Report r = symmetry_checks(ms({{1, 1, 1}}), {1}, {1});
  CHECK(r.ok());
  CHECK(knuth_correspondence(ms({{1, 1, 1}}), {1}, {1}).first.shape() == Partition{1});
  const WeightedMultiset twice = ms({{1, 1, 2}});
  const Partition lam = knuth_correspondence(twice, {}, {}).first.shape();
  CHECK(odd_parts(conjugate(lam)) == 0);
  CHECK(symmetry_checks(twice, {}, {}).ok());
  const WeightedMultiset sym = ms({{1, 2, 1}, {2, 1, 1}, {2, 2, 3}});
  r = symmetry_checks(sym, {1}, {1});
  CHECK_MESSAGE(r.ok(), failures(r));
  const auto [P, Q] = knuth_correspondence(sym, {1}, {1});
  CHECK(P == Q);
}

TEST_CASE("greene on single points") {
  CHECK(greene_check({}, {}, {}));
  const WeightedMultiset pt = ms({{2, 2, 1}});
  CHECK(greene_increasing(pt, {}, {}, 1) == 1);
  CHECK(greene_check(pt, {}, {}));
}

TEST_CASE("bitableau enumeration") {
  // Ordinary SSYT of shape (2,1) on [2]: 2 fillings; row-strict on [2]: 2.
  CHECK(bitableaux({2, 1}, 2, {1, 2}).size() == 2);
  CHECK(bitableaux({2, 1}, 2, {}).size() == 2);
  CHECK(bitableaux({2}, 3, {1, 2, 3}).size() == 6);
  CHECK(bitableaux({2}, 3, {}).size() == 3);
}

TEST_CASE("model distributions, small") {
  // U with one letter on each side in opposite sectors, l = 1, D = 4.
  Report r = distribution_check(make_model(ModelKind::U, 1, 1, 0b1, 0b0, 4), 1);
  CHECK_MESSAGE(r.ok(), failures(r));
  r = distribution_check(make_model(ModelKind::O, 2, 0, 0b01, 0, 5), 2);
  CHECK_MESSAGE(r.ok(), failures(r));
  for (ModelKind k : {ModelKind::UU, ModelKind::S, ModelKind::u}) {
    r = distribution_check(make_model(k, 2, 1, 0b10, 0b1, 4), 2);
    CHECK_MESSAGE(r.ok(), failures(r));
  }
  const ModelSpec s = make_model(ModelKind::O, 1, 0, 0, 0, 3);
  CHECK(model_Z(s).constant_term() == Rational(1));
  CHECK(model_distribution(s, 0).constant_term() == Rational(1));
}

TEST_CASE("model levels are distinct") {
  // The distribution must move with l, or the equalities above say little.
  const ModelSpec s = make_model(ModelKind::u, 2, 0, 0b01, 0, 4);
  CHECK_FALSE(model_distribution(s, 0) == model_distribution(s, 1));
  CHECK_FALSE(model_distribution(s, 1) == model_distribution(s, 2));
  CHECK_FALSE(model_schur_side(s, 1) == model_schur_side(s, 2));
}

TEST_CASE("equidistribution pairs") {
  for (const std::string& p : equidistribution_pairs()) {
    const Report r = equidistribution_check(p, 1, 1, 2, 5);
    CHECK_MESSAGE(r.ok(), std::string(p + ": " + failures(r)));
  }
  CHECK(equidistribution_check("O", 1, 0, 2, 5).ok());
  CHECK(equidistribution_check("S-floor", 1, 1, 1, 4).ok());
  CHECK_THROWS_AS(equidistribution_check("Q", 1, 1, 1, 4), usage_error);
}
