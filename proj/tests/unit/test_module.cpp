#include "doctest.h"

#include <random>

#include "cslab/module.hpp"
#include "cslab/quiver.hpp"
#include "support.hpp"

using namespace cslab;
using cslab_test::cyclic_table;
using cslab_test::random_invertible;

namespace {

AlgebraPtr dual_numbers(std::uint32_t p) {
  QuiverWithRelations q;
  q.p = p;
  q.vertex_count = 1;
  q.arrows = {{"x", 0, 0}};
  q.cutoff = 2;
  return from_quiver(q);
}

}  // namespace

TEST_CASE("regular module shapes") {
  RightModule f2 = RightModule::regular(field_algebra(2));
  CHECK(f2.dim() == 1);
  CHECK(f2.action(0).is_identity());

  RightModule dual = RightModule::regular(dual_numbers(3));
  CHECK(dual.dim() == 2);
  CHECK((dual.action(1) * dual.action(1)).is_zero());
  CHECK_FALSE(dual.action(1).is_zero());

  RightModule u2 = RightModule::regular(upper_triangular(2, field_algebra(2)));
  CHECK(u2.dim() == 3);
  CHECK(length(u2) == 3);
}

TEST_CASE("spin: zero vector, simple module, nilpotent generator") {
  RightModule dual = RightModule::regular(dual_numbers(2));
  FFMatrix zero(2, 1, 2);
  CHECK(spin(dual, zero).rows() == 0);

  // x spins to the one-dimensional span{x}
  FFMatrix x = FFMatrix::row_vector(2, {0, 1});
  FFMatrix span_x = spin(dual, x);
  CHECK(span_x.rows() == 1);
  CHECK(span_x.at(0, 1) == 1);

  // 1 generates everything
  CHECK(spin(dual, FFMatrix::row_vector(2, {1, 0})).rows() == 2);

  RightModule simple = RightModule::regular(field_algebra(5));
  CHECK(spin(simple, FFMatrix::row_vector(5, {3})).rows() == 1);
}

TEST_CASE("is_simple across the basic examples") {
  CHECK_FALSE(is_simple(RightModule::zero(field_algebra(2))));
  CHECK(is_simple(RightModule::regular(field_algebra(3))));
  CHECK_FALSE(is_simple(RightModule::regular(dual_numbers(2))));

  // the 2-dimensional simple of M2(GF(2)) is a composition factor of the
  // regular module
  AlgebraPtr m2 = matrix_algebra(2, field_algebra(2));
  auto factors = composition_factors(RightModule::regular(m2));
  REQUIRE(factors.size() == 1);
  CHECK(factors[0].first.dim() == 2);
  CHECK(factors[0].second == 2);
  CHECK(is_simple(factors[0].first));
}

TEST_CASE("sub_quotient: trivial ends and the U2 regular module") {
  AlgebraPtr u2 = upper_triangular(2, field_algebra(2));
  RightModule reg = RightModule::regular(u2);

  SubQuotient at_zero = sub_quotient(reg, FFMatrix(2, 0, 3));
  CHECK(at_zero.sub.dim() == 0);
  CHECK(at_zero.quot.dim() == 3);

  SubQuotient at_full = sub_quotient(reg, FFMatrix::identity(2, 3));
  CHECK(at_full.sub.dim() == 3);
  CHECK(at_full.quot.dim() == 0);

  // sub = span{e12} (position order (0,0), (0,1), (1,1))
  FFMatrix e12 = FFMatrix::row_vector(2, {0, 1, 0});
  SubQuotient sq = sub_quotient(reg, spin(reg, e12));
  CHECK(sq.sub.dim() == 1);
  CHECK(sq.quot.dim() == 2);
  CHECK(length(sq.sub) + length(sq.quot) == length(reg));

  // the quotient is S1 + S2: two distinct simple factors
  auto factors = composition_factors(sq.quot);
  CHECK(factors.size() == 2);

  // a non-closed subspace is rejected
  CHECK_THROWS_AS(sub_quotient(reg, FFMatrix::row_vector(2, {1, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("composition factors of group algebra regular modules") {
  AlgebraPtr f3c3 = from_group_table(cyclic_table(3), 3);
  auto local_factors = composition_factors(RightModule::regular(f3c3));
  REQUIRE(local_factors.size() == 1);
  CHECK(local_factors[0].first.dim() == 1);
  CHECK(local_factors[0].second == 3);

  AlgebraPtr f2c3 = from_group_table(cyclic_table(3), 2);
  auto ss_factors = composition_factors(RightModule::regular(f2c3));
  REQUIRE(ss_factors.size() == 2);
  std::vector<std::size_t> dims;
  for (const auto& [factor, mult] : ss_factors) {
    dims.push_back(factor.dim());
    CHECK(mult == 1);
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{1, 2});
}

TEST_CASE("Jordan-Hoelder: factor multiset survives random base changes") {
  std::mt19937 rng(42);
  std::vector<AlgebraPtr> algebras = {
      field_algebra(2),
      dual_numbers(2),
      upper_triangular(2, field_algebra(2)),
      from_group_table(cyclic_table(3), 2),
      from_group_table(cyclic_table(3), 3),
      matrix_algebra(2, field_algebra(2)),
  };
  for (const AlgebraPtr& a : algebras) {
    RightModule reg = RightModule::regular(a);
    auto reference = composition_factors(reg);
    std::vector<std::pair<std::size_t, std::size_t>> ref_multiset;
    for (const auto& [f, m] : reference) ref_multiset.push_back({f.dim(), m});
    std::sort(ref_multiset.begin(), ref_multiset.end());
    for (int trial = 0; trial < 10; ++trial) {
      FFMatrix u = random_invertible(a->p(), reg.dim(), rng);
      auto moved = composition_factors(conjugated(reg, u));
      std::vector<std::pair<std::size_t, std::size_t>> multiset;
      for (const auto& [f, m] : moved) multiset.push_back({f.dim(), m});
      std::sort(multiset.begin(), multiset.end());
      CHECK(multiset == ref_multiset);
      // factors themselves match up to isomorphism
      for (const auto& [f, m] : moved) {
        bool matched = false;
        for (const auto& [g, gm] : reference)
          if (f.dim() == g.dim() && are_isomorphic(f, g)) {
            matched = m == gm;
            break;
          }
        CHECK(matched);
      }
    }
  }
}

TEST_CASE("hom spaces between simples and sums") {
  AlgebraPtr u2 = upper_triangular(2, field_algebra(2));
  SimpleInventory inv = simple_inventory(u2);
  REQUIRE(inv.simples.size() == 2);
  CHECK(hom_space(inv.simples[0], inv.simples[1]).dim() == 0);
  CHECK(hom_space(inv.simples[1], inv.simples[0]).dim() == 0);

  const RightModule& s1 = inv.simples[0];
  RightModule s1s1 = direct_sum(s1, s1);
  CHECK(hom_space(s1s1, s1).dim() == 2);
  CHECK(hom_space(s1, s1).dim() == 1);

  // every hom basis element intertwines exactly
  HomSpace hom = hom_space(s1s1, s1s1);
  for (const FFMatrix& x : hom.basis)
    for (std::size_t i = 0; i < u2->dim(); ++i)
      CHECK(s1s1.action(i) * x == x * s1s1.action(i));

  AlgebraPtr f2 = field_algebra(2);
  CHECK_THROWS_AS(hom_space(RightModule::regular(u2), RightModule::regular(f2)),
                  std::invalid_argument);
}

TEST_CASE("end_algebra: field of order 4 as 2x2 matrices") {
  AlgebraPtr f2c3 = from_group_table(cyclic_table(3), 2);
  auto factors = composition_factors(RightModule::regular(f2c3));
  const RightModule* w = nullptr;
  for (const auto& [f, m] : factors)
    if (f.dim() == 2) w = &f;
  REQUIRE(w != nullptr);

  auto [end, end_alg] = end_algebra(*w);
  CHECK(end.dim() == 2);
  CHECK(validate(*end_alg).ok());
  // all three nonzero elements are invertible and commute: GF(4)
  std::vector<FFMatrix> elements;
  for (std::uint32_t c0 : {0u, 1u})
    for (std::uint32_t c1 : {0u, 1u}) {
      if (c0 == 0 && c1 == 0) continue;
      elements.push_back(end.element(FFMatrix::row_vector(2, {c0, c1})));
    }
  for (const FFMatrix& e : elements) CHECK(e.invertible());
  for (const FFMatrix& x : elements)
    for (const FFMatrix& y : elements) CHECK(x * y == y * x);

  // End of a 1-dimensional module is the ground field
  auto [end1, alg1] = end_algebra(RightModule::regular(field_algebra(3)));
  CHECK(end1.dim() == 1);
  CHECK(alg1->dim() == 1);
}

TEST_CASE("are_isomorphic: identity, distinct simples, base change") {
  AlgebraPtr u2 = upper_triangular(2, field_algebra(2));
  SimpleInventory inv = simple_inventory(u2);
  auto self = are_isomorphic(inv.simples[0], inv.simples[0]);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());
  CHECK_FALSE(are_isomorphic(inv.simples[0], inv.simples[1]).has_value());

  AlgebraPtr dual = dual_numbers(3);
  RightModule reg = RightModule::regular(dual);
  std::mt19937 rng(11);
  RightModule moved = conjugated(reg, random_invertible(3, 2, rng));
  auto iso = are_isomorphic(reg, moved);
  REQUIRE(iso.has_value());
  for (std::size_t i = 0; i < dual->dim(); ++i)
    CHECK(reg.action(i) * *iso == *iso * moved.action(i));
}

TEST_CASE("radical and socle of modules") {
  AlgebraPtr prod = direct_product(field_algebra(2), field_algebra(2));
  SimpleInventory inv = simple_inventory(prod);
  FFMatrix rad_a = radical_ideal(*prod, inv.simples);
  RightModule reg = RightModule::regular(prod);
  auto [rad_m, soc_m] = radical_and_socle(reg, rad_a);
  CHECK(rad_m.rows() == 0);
  CHECK(soc_m.rows() == reg.dim());

  AlgebraPtr dual = dual_numbers(2);
  SimpleInventory inv2 = simple_inventory(dual);
  FFMatrix rad_a2 = radical_ideal(*dual, inv2.simples);
  RightModule reg2 = RightModule::regular(dual);
  auto [rad2, soc2] = radical_and_socle(reg2, rad_a2);
  CHECK(rad2.rows() == 1);
  CHECK(soc2.rows() == 1);
  CHECK(rad2 == soc2);

  AlgebraPtr u2 = upper_triangular(2, field_algebra(2));
  SimpleInventory inv3 = simple_inventory(u2);
  FFMatrix rad_a3 = radical_ideal(*u2, inv3.simples);
  RightModule reg3 = RightModule::regular(u2);
  auto [rad3, soc3] = radical_and_socle(reg3, rad_a3);
  CHECK(rad3.rows() == 1);
  CHECK(soc3.rows() == 2);
  for (std::size_t i = 0; i < rad3.rows(); ++i)
    CHECK(row_space_contains(soc3, rad3.row(i)));
}

TEST_CASE("decompose_indecomposable: simples, block sums, product algebra") {
  AlgebraPtr f2 = field_algebra(2);
  RightModule simple = RightModule::regular(f2);
  Decomposition one = decompose_indecomposable(simple);
  CHECK(one.summands.size() == 1);

  AlgebraPtr u2 = upper_triangular(2, field_algebra(2));
  SimpleInventory inv = simple_inventory(u2);
  RightModule sum = direct_sum(inv.simples[0], inv.simples[1]);
  Decomposition two = decompose_indecomposable(sum);
  REQUIRE(two.summands.size() == 2);
  bool matched_first =
      are_isomorphic(two.summands[0], inv.simples[0]).has_value() ||
      are_isomorphic(two.summands[0], inv.simples[1]).has_value();
  CHECK(matched_first);

  AlgebraPtr prod = direct_product(field_algebra(2), field_algebra(2));
  Decomposition reg = decompose_indecomposable(RightModule::regular(prod));
  CHECK(reg.summands.size() == 2);
  CHECK(reg.summands[0].dim() == 1);
  CHECK(reg.summands[1].dim() == 1);
}

TEST_CASE("decomposition certificate: base change block-diagonalizes") {
  std::vector<AlgebraPtr> algebras = {
      direct_product(field_algebra(2), field_algebra(2)),
      from_group_table(cyclic_table(3), 2),
      matrix_algebra(2, field_algebra(2)),
      upper_triangular(2, field_algebra(3)),
  };
  for (const AlgebraPtr& a : algebras) {
    RightModule reg = RightModule::regular(a);
    Decomposition dec = decompose_indecomposable(reg);
    RightModule changed = conjugated(reg, dec.base_change);
    std::size_t offset = 0;
    for (const RightModule& summand : dec.summands) {
      for (std::size_t i = 0; i < a->dim(); ++i) {
        FFMatrix block = changed.action(i).submatrix(offset, offset,
                                                     summand.dim(),
                                                     summand.dim());
        CHECK(block == summand.action(i));
        // off-diagonal strips vanish
        for (std::size_t r = offset; r < offset + summand.dim(); ++r)
          for (std::size_t c = 0; c < changed.dim(); ++c)
            if (c < offset || c >= offset + summand.dim())
              CHECK(changed.action(i).at(r, c) == 0);
      }
      offset += summand.dim();
    }
    CHECK(offset == reg.dim());
  }
}

TEST_CASE("is_isotypic") {
  CHECK(is_isotypic(RightModule::zero(field_algebra(2))));
  AlgebraPtr f3c3 = from_group_table(cyclic_table(3), 3);
  CHECK(is_isotypic(RightModule::regular(f3c3)));
  AlgebraPtr u2 = upper_triangular(2, field_algebra(2));
  CHECK_FALSE(is_isotypic(RightModule::regular(u2)));
  SimpleInventory inv = simple_inventory(u2);
  CHECK(is_isotypic(inv.simples[0]));
}

TEST_CASE("guards convert blow-ups into clean errors") {
  AlgebraPtr m2 = matrix_algebra(2, field_algebra(2));
  RightModule reg = RightModule::regular(m2);  // dim 4
  CHECK_THROWS_AS(is_simple(reg, 8), GuardExceeded);
  CHECK_THROWS_AS(composition_factors(reg, 8), GuardExceeded);
}
