#include "doctest.h"
#include "incseq/invariants.hpp"
#include "incseq/partition.hpp"

using namespace incseq;

namespace {

std::string failures(const Report& r) {
  std::string s;
  for (const Check& c : r.checks)
    if (!c.pass) s += c.name + " (" + c.detail + "); ";
  return s;
}

// Independent count: sum over l-row shapes of (#SYT)^2.
long rsk_count(int n, int l) {
  Rational total(0);
  for (const Partition& p : partitions_up_to(n))
    if (weight(p) == n && static_cast<int>(p.size()) <= l) total += syt_count(p) * syt_count(p);
  return total.to_long();
}

}  // namespace

TEST_CASE("T on identity and a transposition") {
  const TensorOperator id = T_matrix(identity_perm(3), 2);
  CHECK(id.entries.size() == 8);
  for (const auto& [k, v] : id.entries) CHECK(k.first == k.second);

  const TensorOperator sw = T_matrix(Perm{2, 1}, 2);
  CHECK(sw.at({1, 2}, {2, 1}) == Rational(1));
  CHECK(sw.at({1, 1}, {1, 1}) == Rational(1));
  CHECK(sw.at({1, 2}, {1, 2}) == Rational(0));
  CHECK_THROWS_AS(T_matrix(identity_perm(17), 2), resource_error);
}

TEST_CASE("T is multiplicative") {
  const Perm p{2, 3, 1}, q{1, 3, 2};
  const auto prod = GroupAlgebraElement::of(p) * GroupAlgebraElement::of(q);
  CHECK(T_matrix(prod, 2) == T_matrix(p, 2) * T_matrix(q, 2));
  CHECK(prod == GroupAlgebraElement::of(compose(q, p)));
}

TEST_CASE("kernel elements vanish, n <= 4, l <= 3") {
  for (int n = 1; n <= 4; ++n)
    for (int l = 1; l <= 3; ++l)
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> S;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) S.push_back(i + 1);
        const bool big = static_cast<int>(S.size()) > l;
        for (const Perm& p : all_permutations(n)) {
          const GroupAlgebraElement e = GroupAlgebraElement::of(p) * E_S(n, S);
          CHECK(T_matrix(e, l).is_zero() == big);
        }
      }
  CHECK(kernel_element(identity_perm(3), {1, 2, 3}).terms().size() == 6);
}

TEST_CASE("straighten_U examples") {
  const GroupAlgebraElement r = straighten_U(GroupAlgebraElement::of(Perm{2, 1}), 1);
  CHECK(r == GroupAlgebraElement::of(Perm{1, 2}));

  const GroupAlgebraElement red = GroupAlgebraElement::of(Perm{1, 3, 2}, Rational(5));
  CHECK(straighten_U(red, 2) == red);

  const GroupAlgebraElement in = GroupAlgebraElement::of(Perm{3, 2, 1});
  const GroupAlgebraElement out = straighten_U(in, 2);
  CHECK(out.terms().size() == 5);
  CHECK(out.coeff(Perm{3, 2, 1}) == Rational(0));
  CHECK(T_matrix(out, 2) == T_matrix(in, 2));
  for (const auto& [p, c] : out.terms()) CHECK(c == Rational(-sign(p) * sign(Perm{3, 2, 1})));
}

TEST_CASE("straightening preserves the operator, n <= 4") {
  for (int n = 2; n <= 4; ++n)
    for (int l = 1; l < n; ++l)
      for (const Perm& p : all_permutations(n)) {
        const GroupAlgebraElement e = GroupAlgebraElement::of(p, Rational(3, 2));
        const GroupAlgebraElement s = straighten_U(e, l);
        for (const auto& [q, c] : s.terms()) CHECK(lds(q) <= l);
        CHECK(T_matrix(s, l) == T_matrix(e, l));
      }
}

TEST_CASE("basis_U") {
  BasisCertificate c = basis_U(3, 3);
  CHECK(c.basis.size() == 6);
  CHECK(c.ok());
  c = basis_U(3, 2);
  CHECK(c.basis.size() == 5);
  CHECK(c.rank == 5);
  CHECK(c.ok());
  c = basis_U(4, 1);
  CHECK(c.basis == std::vector<Perm>{identity_perm(4)});
  CHECK(c.ok());
  for (int n = 1; n <= 5; ++n)
    for (int l = 1; l <= 3; ++l) {
      c = basis_U(n, l);
      CHECK(c.ok());
      CHECK(static_cast<long>(c.basis.size()) == rsk_count(n, l));
    }
}

TEST_CASE("centralizer dimensions") {
  CHECK(centralizer_dim_check(2, 1).ok());
  CHECK(centralizer_dim_check(3, 2).ok());
  const Report r = centralizer_dim_check(4, 2);
  CHECK_MESSAGE(r.ok(), failures(r));
}

TEST_CASE("projected elements and multisets") {
  const ProjectedSetting s{{2, 1}, {1, 2}, {1}, {}};
  for (const Perm& p : all_permutations(3)) {
    const bool vanishes = projected_element(s, p).is_zero();
    CHECK(vanishes == !is_compatible(multiset_of(s, p), s.W, s.Wp));
  }
  for (const WeightedMultiset& M : setting_multisets(s)) CHECK(multiset_of(s, canonical_perm(s, M)) == M);

  WeightedMultiset bad;
  bad.add(1, 2, 2);
  bad.add(2, 1, 1);
  CHECK_THROWS_AS(straighten_U_multiset(s, {{bad.entries, Rational(1)}}, 1), domain_error);
}

TEST_CASE("multiset bases") {
  // One block of size two, antisymmetrized: nothing survives at l = 1.
  MultisetBasisCheck c = multiset_basis_check({{2}, {1, 1}, {1}, {}}, 1);
  CHECK_MESSAGE(c.report.ok(), failures(c.report));
  CHECK(c.basis_size == c.series_count);
  CHECK(c.basis_size == 0);
  c = multiset_basis_check({{2}, {1, 1}, {1}, {}}, 2);
  CHECK(c.basis_size == 1);
  CHECK(c.series_count == 1);

  c = multiset_basis_check({{2, 1}, {1, 2}, {1}, {2}}, 2);
  CHECK_MESSAGE(c.report.ok(), failures(c.report));
  c = multiset_basis_check({{2, 2}, {2, 2}, {1}, {}}, 2);
  CHECK_MESSAGE(c.report.ok(), failures(c.report));
  CHECK(c.rank == c.span_rank);
  CHECK(c.basis_size == c.lis_count);
}

TEST_CASE("involution invariants") {
  CHECK(fpf_involutions(2) == std::vector<Perm>{{2, 1}});
  CHECK(fpf_involutions(4).size() == 3);
  CHECK(fpf_involutions(6).size() == 15);
  CHECK(fpf_involutions(3).empty());

  const InvolutionElement one{{Perm{2, 1}, Rational(1)}};
  CHECK(orth_reduce(one, 1) == one);
  CHECK(symp_reduce(one, 1) == one);

  // In (R^1)^{x4} all three basic invariants coincide.
  const Perm a{2, 1, 4, 3}, b{3, 4, 1, 2}, c{4, 3, 2, 1};
  CHECK(orth_vector(a, 1) == orth_vector(c, 1));
  CHECK(orth_reduce({{b, Rational(1)}}, 1) == InvolutionElement{{c, Rational(1)}});
  CHECK(orth_reduce({{a, Rational(1)}}, 1) == InvolutionElement{{c, Rational(1)}});
  CHECK(orth_vector(a, 2).size() == 4);

  // Sp(2): the three invariants span a 2-dimensional space.
  const InvolutionElement r = symp_reduce({{c, Rational(1)}}, 1);
  for (const auto& [t, x] : r) CHECK(lds(t) <= 2);

  for (int n = 1; n <= 3; ++n)
    for (int l = 1; l <= 2; ++l) {
      const Report rep = orth_symp_check(n, l);
      CHECK_MESSAGE(rep.ok(), failures(rep));
    }
}

TEST_CASE("straightening suite, small") {
  const Report r = straightening_suite(3, 2, 2, 1);
  CHECK_MESSAGE(r.ok(), failures(r));
}
