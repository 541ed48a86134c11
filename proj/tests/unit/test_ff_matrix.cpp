#include "doctest.h"

#include <random>

#include "cslab/ff_matrix.hpp"
#include "support.hpp"

using cslab::FFMatrix;
using namespace cslab_test;

TEST_CASE("rank of identity and degenerate matrices") {
  CHECK(FFMatrix::identity(2, 3).rank() == 3);
  CHECK(FFMatrix(2, std::vector<std::vector<std::uint32_t>>{{1, 1}, {1, 1}})
            .rank() == 1);
  CHECK(FFMatrix(2, 0, 4).rank() == 0);
  CHECK(FFMatrix(2, 4, 0).rank() == 0);
}

TEST_CASE("rank matches the exhaustive span oracle over GF(3)") {
  std::mt19937 rng(20240517);
  for (int trial = 0; trial < 25; ++trial) {
    FFMatrix m = random_matrix(3, 4, 4, rng);
    CHECK(m.rank() == rank_by_span_oracle(m));
  }
}

TEST_CASE("null space basics") {
  CHECK(FFMatrix::identity(2, 4).null_space().rows() == 0);
  FFMatrix zero(2, 2, 3);
  FFMatrix basis = zero.null_space();
  CHECK(basis.rows() == 3);
  CHECK(span_set(basis).size() == 8);
}

TEST_CASE("null space of [[1,1,0],[0,1,1]] over GF(2)") {
  FFMatrix m(2, {{1, 1, 0}, {0, 1, 1}});
  FFMatrix basis = m.null_space();
  REQUIRE(basis.rows() == 1);
  CHECK(basis.at(0, 0) == 1);
  CHECK(basis.at(0, 1) == 1);
  CHECK(basis.at(0, 2) == 1);
  // cross-check against all 2^3 vectors
  for (const FFMatrix& v : all_vectors(2, 3)) {
    bool in_kernel = (m * v.transposed()).is_zero();
    CHECK(in_kernel == cslab::row_space_contains(basis, v));
  }
}

TEST_CASE("rank-nullity and kernel membership, fuzzed") {
  std::mt19937 rng(7);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 20; ++trial) {
      FFMatrix m = random_matrix(p, 3, 5, rng);
      FFMatrix basis = m.null_space();
      CHECK(m.rank() + basis.rows() == m.cols());
      for (std::size_t r = 0; r < basis.rows(); ++r)
        CHECK((m * basis.row(r).transposed()).is_zero());
    }
  }
}

TEST_CASE("solve: identity, inconsistent, and 2x2 example") {
  FFMatrix id = FFMatrix::identity(3, 2);
  FFMatrix rhs(3, {{1, 2}, {0, 1}});
  auto x = id.solve(rhs);
  REQUIRE(x.has_value());
  CHECK(*x == rhs);

  FFMatrix zero(2, 2, 2);
  CHECK_FALSE(zero.solve(FFMatrix(2, {{1}, {0}})).has_value());

  FFMatrix m(2, {{1, 1}, {0, 1}});
  auto sol = m.solve(FFMatrix(2, {{0}, {1}}));
  REQUIRE(sol.has_value());
  CHECK(*sol == FFMatrix(2, {{1}, {1}}));
}

TEST_CASE("solve round trip on random systems") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    FFMatrix m = random_matrix(3, 3, 4, rng);
    FFMatrix x0 = random_matrix(3, 4, 2, rng);
    FFMatrix rhs = m * x0;
    auto x = m.solve(rhs);
    REQUIRE(x.has_value());
    CHECK(m * *x == rhs);
  }
}

TEST_CASE("row space intersection: trivial cases") {
  FFMatrix a(2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
  CHECK(cslab::row_space_intersection(a, a) == cslab::row_basis(a));
  FFMatrix b(2, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(cslab::row_space_intersection(a, b).rows() == 0);
}

TEST_CASE("row space intersection matches the membership oracle over GF(2)^4") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    FFMatrix a = random_matrix(2, 2, 4, rng);
    FFMatrix b = random_matrix(2, 2, 4, rng);
    FFMatrix inter = cslab::row_space_intersection(a, b);
    auto sa = span_set(a);
    auto sb = span_set(b);
    auto si = span_set(inter);
    for (const FFMatrix& v : all_vectors(2, 4)) {
      bool in_both = sa.count(v.entries()) && sb.count(v.entries());
      CHECK(in_both == (si.count(v.entries()) > 0));
    }
    // dimension formula
    CHECK(a.rank() + b.rank() ==
          cslab::row_space_sum(a, b).rank() + inter.rank());
  }
}

TEST_CASE("modulus mismatch is a hard error") {
  FFMatrix a = FFMatrix::identity(2, 2);
  FFMatrix b = FFMatrix::identity(3, 2);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(cslab::row_space_intersection(a, b), std::invalid_argument);
}

TEST_CASE("operations are referentially transparent") {
  std::mt19937 rng(5);
  FFMatrix m = random_matrix(5, 4, 4, rng);
  CHECK(m.rref() == m.rref());
  CHECK(m.null_space() == m.null_space());
  CHECK(m.rank() == m.rank());
}

TEST_CASE("scalar arithmetic") {
  for (std::uint32_t p : {2u, 3u, 251u}) {
    for (std::uint32_t a = 1; a < std::min(p, 20u); ++a) {
      CHECK(cslab::ff_mul(a, cslab::ff_inv(a, p), p) == 1);
      CHECK(cslab::ff_add(a, cslab::ff_neg(a, p), p) == 0);
    }
  }
  CHECK(cslab::is_prime(2));
  CHECK(cslab::is_prime(251));
  CHECK_FALSE(cslab::is_prime(1));
  CHECK_FALSE(cslab::is_prime(249));
  CHECK_THROWS_AS(FFMatrix(4, 1, 1), std::invalid_argument);
}
