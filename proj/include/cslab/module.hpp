#ifndef CSLAB_MODULE_HPP
#define CSLAB_MODULE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cslab/algebra.hpp"
#include "cslab/ff_matrix.hpp"
#include "cslab/guard.hpp"

namespace cslab {

/// Finite-dimensional right module over an AlgebraPresentation, given by one
/// action matrix per algebra basis element. Row-vector convention throughout:
/// v * a means v * rho(a), and rho is a unital algebra homomorphism
/// (rho(a_i) rho(a_j) = sum_k c[i][j][k] rho(a_k), rho(1) = id); both
/// identities are checked exactly on construction. The zero module (dim 0)
/// is allowed.
class RightModule {
 public:
  RightModule(AlgebraPtr algebra, std::vector<FFMatrix> action);

  static RightModule zero(AlgebraPtr algebra);
  static RightModule regular(AlgebraPtr algebra);

  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const AlgebraPresentation& algebra() const { return *algebra_; }
  std::uint32_t p() const { return algebra_->p(); }
  std::size_t dim() const { return dim_; }

  /// Action matrix of the i-th algebra basis element.
  const FFMatrix& action(std::size_t i) const { return action_[i]; }
  const std::vector<FFMatrix>& actions() const { return action_; }

  /// Action matrix of an arbitrary algebra element (1 x dim_A coordinates).
  FFMatrix action_of(const FFMatrix& coords) const;

  /// Concatenated entries of all action matrices; the canonical sort key for
  /// deterministic module orderings is (dim, these bytes).
  std::vector<std::uint32_t> action_bytes() const;

 private:
  AlgebraPtr algebra_;
  std::size_t dim_;
  std::vector<FFMatrix> action_;
};

bool same_algebra(const RightModule& m, const RightModule& n);

RightModule direct_sum(const RightModule& m, const RightModule& n);

/// Action conjugated by an invertible base change u (rho' = u rho u^-1).
RightModule conjugated(const RightModule& m, const FFMatrix& u);

/// Canonical basis of the submodule generated by v (1 x dim): the smallest
/// action-closed subspace containing v.
FFMatrix spin(const RightModule& m, const FFMatrix& v);

/// True when the subspace spanned by the rows is closed under every action
/// matrix.
bool action_closed(const RightModule& m, const FFMatrix& basis);

/// Exhaustive simplicity test: m.dim > 0 and every nonzero vector generates
/// the whole space. Requires p^dim <= guard.
bool is_simple(const RightModule& m, std::uint64_t guard = kDefaultGuard);

/// Induced structures on an action-closed subspace and its quotient.
/// inclusion: sub.dim x m.dim (rows are the canonical subspace basis);
/// projection: m.dim x quot.dim. Throws if sub_basis is not action-closed.
struct SubQuotient {
  RightModule sub;
  RightModule quot;
  FFMatrix inclusion;
  FFMatrix projection;
};
SubQuotient sub_quotient(const RightModule& m, const FFMatrix& sub_basis);

/// Composition factors with multiplicities; factors pairwise nonisomorphic.
/// The series is the deterministic one through minimal spins (smallest
/// dimension, ties broken by the lexicographically least generating vector).
std::vector<std::pair<RightModule, std::size_t>> composition_factors(
    const RightModule& m, std::uint64_t guard = kDefaultGuard);

std::size_t length(const RightModule& m, std::uint64_t guard = kDefaultGuard);

/// Space of intertwiners X with rho_m(a) X = X rho_n(a) for all basis a.
struct HomSpace {
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
  std::vector<FFMatrix> basis;  // canonical, linearly independent

  std::size_t dim() const { return basis.size(); }
};
HomSpace hom_space(const RightModule& m, const RightModule& n);

/// End(M) realized as intertwiner matrices, with the identity in the span.
struct EndRealization {
  HomSpace hom;              // source == target
  FFMatrix identity_coords;  // 1 x dim(hom), coordinates of id
  bool contains_identity = true;

  std::size_t dim() const { return hom.dim(); }
  /// Acting matrix of the element with the given coordinates.
  FFMatrix element(const FFMatrix& coords) const;
};

/// End(M) plus its structure constants as an algebra (composition expanded
/// over the intertwiner basis; products read left to right on row vectors).
std::pair<EndRealization, AlgebraPtr> end_algebra(const RightModule& m);

/// Invertible intertwiner if one exists (deterministic weight-then-lex
/// search over the Hom space); nullopt otherwise. Requires p^(dim Hom) <=
/// guard. Zero modules over the same algebra are isomorphic via the empty
/// matrix.
std::optional<FFMatrix> are_isomorphic(const RightModule& m,
                                       const RightModule& n,
                                       std::uint64_t guard = kDefaultGuard);

/// rad(M) = M rad(A) and soc(M) = annihilator of rad(A) in M, both as
/// canonical action-closed bases; valid because A is finite-dimensional,
/// hence semiprimary. rad_a comes from radical_ideal.
std::pair<FFMatrix, FFMatrix> radical_and_socle(const RightModule& m,
                                                const FFMatrix& rad_a);

/// Direct-sum decomposition into indecomposables, with certificate.
/// base_change rows are the summand bases; conjugating the action by it
/// yields block-diagonal matrices with the summands' actions.
struct Decomposition {
  std::vector<RightModule> summands;
  std::vector<FFMatrix> summand_bases;  // rows in m coordinates
  FFMatrix base_change;                 // vstack of summand_bases
};
Decomposition decompose_indecomposable(const RightModule& m,
                                       std::uint64_t guard = kDefaultGuard);

/// True when all composition factors lie in a single isomorphism class
/// (zero module: true by convention).
bool is_isotypic(const RightModule& m, std::uint64_t guard = kDefaultGuard);

/// All action-closed subspaces of m (canonical bases, sorted by dimension
/// then entries). Exhaustive: spins of all vectors closed under sums.
/// Requires p^dim <= guard.
std::vector<FFMatrix> all_submodules(const RightModule& m,
                                     std::uint64_t guard = kDefaultGuard);

}  // namespace cslab

#endif
