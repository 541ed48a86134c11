#include "doctest.h"

#include "cslab/algebra.hpp"
#include "cslab/module.hpp"
#include "cslab/quiver.hpp"
#include "support.hpp"

using namespace cslab;
using cslab_test::cyclic_table;

namespace {

QuiverWithRelations loop_algebra_quiver(std::uint32_t p, std::size_t n) {
  QuiverWithRelations q;
  q.p = p;
  q.vertex_count = 1;
  q.arrows = {{"x", 0, 0}};
  std::vector<std::string> xn(n, "x");
  q.relations = {{{1, xn}}};
  q.cutoff = n;
  return q;
}

}  // namespace

TEST_CASE("validate passes on products of fields and fails on corruption") {
  AlgebraPtr f2xf2 = direct_product(field_algebra(2), field_algebra(2));
  CHECK(validate(*f2xf2).ok());

  // break associativity in one entry
  std::size_t n = 2;
  std::vector<std::uint32_t> mul(n * n * n, 0);
  mul[(0 * n + 0) * n + 0] = 1;
  mul[(1 * n + 1) * n + 1] = 1;
  mul[(0 * n + 1) * n + 0] = 1;  // e0 * e1 = e0 breaks both laws
  AlgebraPresentation broken(2, n, mul, {1, 1}, "broken");
  ValidationReport rep = validate(broken);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.message.empty());
  CHECK((rep.bad_triple.has_value() || rep.bad_unit_index.has_value()));
}

TEST_CASE("group algebra construction and validation") {
  AlgebraPtr trivial = from_group_table({{0}}, 2);
  CHECK(trivial->dim() == 1);
  CHECK(validate(*trivial).ok());

  AlgebraPtr f2c3 = from_group_table(cyclic_table(3), 2);
  CHECK(f2c3->dim() == 3);
  CHECK(validate(*f2c3).ok());
  AlgebraPtr f3c3 = from_group_table(cyclic_table(3), 3);
  CHECK(validate(*f3c3).ok());

  // not a group: constant row
  CHECK_THROWS_AS(from_group_table({{0, 0}, {1, 1}}, 2),
                  std::invalid_argument);
  // Latin square without associativity would need order >= 5; check a
  // non-identity table instead
  CHECK_THROWS_AS(from_group_table({{1, 0}, {1, 0}}, 2),
                  std::invalid_argument);
}

TEST_CASE("path algebra: one vertex, no arrows, is the field") {
  QuiverWithRelations q;
  q.p = 5;
  q.vertex_count = 1;
  q.cutoff = 1;
  AlgebraPtr a = from_quiver(q);
  CHECK(a->dim() == 1);
  CHECK(validate(*a).ok());
}

TEST_CASE("path algebra: A2 quiver gives upper triangular 2x2") {
  QuiverWithRelations q;
  q.p = 2;
  q.vertex_count = 2;
  q.arrows = {{"a", 0, 1}};
  q.cutoff = 2;
  AlgebraPtr a2 = from_quiver(q);
  REQUIRE(a2->dim() == 3);
  CHECK(validate(*a2).ok());

  AlgebraPtr u2 = upper_triangular(2, field_algebra(2));
  REQUIRE(u2->dim() == 3);
  // basis match: path order e_0, e_1, a vs position order e11, e12, e22;
  // identify e_0 -> e11, e_1 -> e22, a -> e12
  std::vector<std::size_t> to_u2 = {0, 2, 1};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        CHECK(a2->structure_constant(i, j, k) ==
              u2->structure_constant(to_u2[i], to_u2[j], to_u2[k]));
}

TEST_CASE("path algebra: loop with nilpotency relation") {
  AlgebraPtr kx2 = from_quiver(loop_algebra_quiver(3, 2));
  REQUIRE(kx2->dim() == 2);
  CHECK(validate(*kx2).ok());
  // x * x = 0 in the table
  CHECK(kx2->basis_product(1, 1).is_zero());

  AlgebraPtr kx3 = from_quiver(loop_algebra_quiver(2, 3));
  REQUIRE(kx3->dim() == 3);
  CHECK(kx3->basis_product(1, 1).at(0, 2) == 1);
  CHECK(kx3->basis_product(1, 2).is_zero());
}

TEST_CASE("path algebra relation errors") {
  QuiverWithRelations q;
  q.p = 2;
  q.vertex_count = 2;
  q.arrows = {{"a", 0, 1}};
  q.cutoff = 2;
  q.relations = {{{1, {"b"}}}};
  CHECK_THROWS_AS(from_quiver(q), std::invalid_argument);

  QuiverWithRelations mixed;
  mixed.p = 2;
  mixed.vertex_count = 3;
  mixed.arrows = {{"a", 0, 1}, {"b", 0, 2}};
  mixed.cutoff = 2;
  mixed.relations = {{{1, {"a"}}, {1, {"b"}}}};  // different targets
  CHECK_THROWS_AS(from_quiver(mixed), std::invalid_argument);
}

TEST_CASE("upper triangular dimensions and degenerate case") {
  AlgebraPtr f2 = field_algebra(2);
  AlgebraPtr u1 = upper_triangular(1, f2);
  CHECK(u1->dim() == 1);
  CHECK(u1->same_presentation(*f2));

  AlgebraPtr u2 = upper_triangular(2, f2);
  CHECK(u2->dim() == 3);
  CHECK(validate(*u2).ok());
}

TEST_CASE("upper triangular over the dual numbers has dim 6") {
  QuiverWithRelations loop = loop_algebra_quiver(2, 2);
  AlgebraPtr base = from_quiver(loop);
  AlgebraPtr u2 = upper_triangular(2, base);
  CHECK(u2->dim() == 6);
  CHECK(validate(*u2).ok());
}

TEST_CASE("matrix algebra and direct product") {
  AlgebraPtr f2 = field_algebra(2);
  CHECK(matrix_algebra(1, f2)->same_presentation(*f2));

  AlgebraPtr m2 = matrix_algebra(2, f2);
  CHECK(m2->dim() == 4);
  CHECK(validate(*m2).ok());

  AlgebraPtr prod = direct_product(f2, f2);
  CHECK(prod->dim() == 2);
  CHECK(validate(*prod).ok());
  // unit is (1, 1)
  CHECK(prod->unit().at(0, 0) == 1);
  CHECK(prod->unit().at(0, 1) == 1);
}

TEST_CASE("radical: semisimple, dual numbers, upper triangular") {
  AlgebraPtr prod = direct_product(field_algebra(2), field_algebra(2));
  SimpleInventory inv = simple_inventory(prod);
  CHECK(radical_ideal(*prod, inv.simples).rows() == 0);

  AlgebraPtr kx2 = from_quiver(loop_algebra_quiver(2, 2));
  SimpleInventory inv2 = simple_inventory(kx2);
  FFMatrix rad2 = radical_ideal(*kx2, inv2.simples);
  REQUIRE(rad2.rows() == 1);
  CHECK(rad2.at(0, 0) == 0);  // span{x}
  CHECK(rad2.at(0, 1) == 1);

  AlgebraPtr u2 = upper_triangular(2, field_algebra(2));
  SimpleInventory inv3 = simple_inventory(u2);
  FFMatrix rad3 = radical_ideal(*u2, inv3.simples);
  REQUIRE(rad3.rows() == 1);
  // position order (0,0), (0,1), (1,1): the strict upper triangle is e12
  CHECK(rad3.at(0, 1) == 1);
}

TEST_CASE("radical is a two-sided nilpotent ideal on the corpus shapes") {
  std::vector<AlgebraPtr> algebras = {
      direct_product(field_algebra(2), field_algebra(2)),
      from_quiver(loop_algebra_quiver(2, 3)),
      upper_triangular(2, field_algebra(3)),
      from_group_table(cyclic_table(3), 3),
      matrix_algebra(2, field_algebra(2)),
  };
  for (const AlgebraPtr& a : algebras) {
    SimpleInventory inv = simple_inventory(a);
    FFMatrix rad = radical_ideal(*a, inv.simples);
    // two-sided: products of the radical with any basis element stay inside
    for (std::size_t i = 0; i < rad.rows(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j) {
        FFMatrix ej(a->p(), 1, a->dim());
        ej.set(0, j, 1);
        CHECK(row_space_contains(rad, a->product(rad.row(i), ej)));
        CHECK(row_space_contains(rad, a->product(ej, rad.row(i))));
      }
    // nilpotent: rad^dim = 0, checked by iterated products
    FFMatrix power = rad;
    for (std::size_t step = 0; step + 1 < a->dim() && power.rows() > 0;
         ++step) {
      FFMatrix next(a->p(), 0, a->dim());
      for (std::size_t i = 0; i < power.rows(); ++i)
        for (std::size_t j = 0; j < rad.rows(); ++j) {
          FFMatrix prod = a->product(power.row(i), rad.row(j));
          if (!prod.is_zero()) next = vstack(next, prod);
        }
      power = row_basis(next);
    }
    CHECK(power.rows() == 0);
  }
}
