#ifndef CSLAB_SUBCAT_HPP
#define CSLAB_SUBCAT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cslab/csl.hpp"
#include "cslab/module.hpp"

namespace cslab {

/// GF(p)[t]/(t^n): commutative uniserial, radical generated by t, radical
/// factor field GF(p). Basis 1, t, ..., t^(n-1).
AlgebraPtr uniserial_lambda(std::uint32_t p, std::size_t n);

/// An object of S(Lambda): a Lambda-module B with an action-closed subspace
/// A, realized as a module over U_2(Lambda) via
/// (a, b) * (x y; 0 z) = (a x, f(a) y + b z), f the inclusion.
struct EmbeddingPair {
  AlgebraPtr lambda;
  AlgebraPtr u2;            // upper_triangular(2, lambda), shared per run
  RightModule big;          // B
  FFMatrix sub_basis;       // canonical basis of A inside B
  RightModule realization;  // the U_2(Lambda)-module
};

/// Realization of the pair (sub_basis inside big) over u2, which must be
/// upper_triangular(2, base) for big's algebra.
RightModule realize_pair(const AlgebraPtr& u2, const RightModule& big,
                         const FFMatrix& sub_basis);

/// True when x (a module over upper_triangular(2, base)) lies in S(base):
/// the map component x e_1 -> x e_2 recovered from the (0,1) position is
/// injective.
bool in_submodule_category(const RightModule& x, const AlgebraPtr& base);

/// All embedding pairs with dim B <= max_b_dim, up to isomorphism of the
/// U_2(Lambda) realizations. B ranges over direct sums of the uniserial
/// indecomposables GF(p)[t]/(t^m), m <= n; A over all submodules of B.
std::vector<EmbeddingPair> enumerate_pairs(const AlgebraPtr& lambda,
                                           std::size_t max_b_dim,
                                           std::uint64_t guard = kDefaultGuard);

/// Quasi-simplicity: no proper nonzero submodule N of the realization with
/// both N and M/N again in S(Lambda). The zero pair is not quasi-simple,
/// matching the convention for simplicity.
struct QuasiSimpleVerdict {
  bool is_quasi_simple = false;
  std::optional<FFMatrix> blocking_sub;  // basis in realization coordinates
};

QuasiSimpleVerdict is_quasi_simple(const EmbeddingPair& pair,
                                   std::uint64_t guard = kDefaultGuard);

struct SubcatPairRecord {
  std::size_t index = 0;
  std::size_t a_dim = 0;
  std::size_t b_dim = 0;
  bool b_semisimple = false;
  std::size_t realization_dim = 0;
  std::size_t end_dim = 0;
  bool division_end = false;
  bool quasi_simple = false;
  bool simple = false;  // as a U_2(Lambda)-module
  std::size_t length = 0;
  std::vector<std::size_t> s1_s2_split;  // counts (S1, S2) when B semisimple
  bool has_t_nilpotent = false;          // when B is not semisimple
};

/// Verdicts for the quasi-CSL example over GF(p)[t]/(t^n):
/// (1) semisimple-B pairs decompose into copies of S1 = (k k), S2 = (0 k);
/// (2) non-semisimple-B pairs carry the multiplication-by-t nilpotent;
/// (3) quasi-CSL holds at the bound while CSL fails, witnessed by S1.
struct QuasiCslReport {
  std::uint32_t p = 2;
  std::size_t n = 1;
  std::size_t max_b_dim = 0;
  std::vector<SubcatPairRecord> pairs;
  std::size_t quasi_simple_count = 0;
  bool claim_semisimple_decomposes = false;
  bool claim_nonsemisimple_nilpotent = false;
  bool quasi_csl_holds = false;
  bool csl_fails = false;
  std::size_t csl_witness_index = 0;  // the S1-like pair
};

QuasiCslReport quasi_csl_check(const AlgebraPtr& lambda, std::size_t max_b_dim,
                               std::uint64_t guard = kDefaultGuard);

/// The row (S S) as a module over upper_triangular(2, R0) for a simple
/// right R0-module S: length 2, not simple, End of the same dimension and
/// division verdict as End(S). All three facts are asserted.
RightModule row_module(const RightModule& s,
                       std::uint64_t guard = kDefaultGuard);

}  // namespace cslab

#endif
