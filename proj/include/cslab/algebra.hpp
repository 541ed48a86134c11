#ifndef CSLAB_ALGEBRA_HPP
#define CSLAB_ALGEBRA_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cslab/ff_matrix.hpp"
#include "cslab/guard.hpp"

namespace cslab {

class RightModule;

/// Finite-dimensional associative unital algebra over GF(p), given by
/// structure constants: a_i * a_j = sum_k c[i][j][k] a_k.
///
/// Immutable after construction. Construction does not check the axioms;
/// validate() does, and every factory in this header produces presentations
/// that pass it.
class AlgebraPresentation {
 public:
  AlgebraPresentation(std::uint32_t p, std::size_t dim,
                      std::vector<std::uint32_t> structure_constants,
                      std::vector<std::uint32_t> unit, std::string label);

  std::uint32_t p() const { return p_; }
  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }

  /// c[i][j][k]
  std::uint32_t structure_constant(std::size_t i, std::size_t j,
                                   std::size_t k) const;

  /// Coordinates of the unit element.
  const FFMatrix& unit() const { return unit_; }

  /// Coordinates of a_i * a_j as a 1 x dim row.
  FFMatrix basis_product(std::size_t i, std::size_t j) const;

  /// Bilinear product of two coordinate rows.
  FFMatrix product(const FFMatrix& x, const FFMatrix& y) const;

  /// Matrix of v -> v * y in the basis (row-vector convention).
  FFMatrix right_multiplication(const FFMatrix& y) const;

  /// Sparse (i, j, k, c) quadruples with c != 0, in index order.
  std::vector<std::array<std::uint32_t, 4>> sparse_constants() const;

  /// Content equality; labels are ignored.
  bool same_presentation(const AlgebraPresentation& other) const;

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<std::uint32_t> mul_;  // dense, ((i*dim)+j)*dim+k
  FFMatrix unit_;
  std::string label_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraPresentation>;

/// Outcome of checking associativity and the unit laws by exhaustive
/// expansion. Failures are content, not exceptions.
struct ValidationReport {
  bool associative = true;
  bool unital = true;
  // first violating triple (i, j, l) for associativity, or index for unit law
  std::optional<std::array<std::size_t, 3>> bad_triple;
  std::optional<std::size_t> bad_unit_index;
  std::string message;  // empty when ok

  bool ok() const { return associative && unital; }
};

ValidationReport validate(const AlgebraPresentation& a);

/// Quiver with relations, used as a presentation device for test algebras.
/// Arrows are (name, source, target); a relation is a GF(p)-combination of
/// parallel paths, each path a sequence of arrow names read left to right.
/// Paths of length >= cutoff are zero.
struct QuiverWithRelations {
  std::uint32_t p = 2;
  std::size_t vertex_count = 0;
  struct Arrow {
    std::string name;
    std::size_t source;
    std::size_t target;
  };
  std::vector<Arrow> arrows;
  struct RelationTerm {
    std::uint32_t coefficient;
    std::vector<std::string> path;  // arrow names, length >= 1
  };
  using Relation = std::vector<RelationTerm>;
  std::vector<Relation> relations;
  std::size_t cutoff = 1;
};

// Factories. Each result passes validate(); labels describe the construction.

AlgebraPtr field_algebra(std::uint32_t p);

/// Path algebra of q modulo its relations, truncated at the cutoff; basis is
/// the set of path residues, unit the sum of vertex idempotents.
AlgebraPtr from_quiver(const QuiverWithRelations& q);

/// Group algebra GF(p)G from a multiplication table (table[i][j] = i*j).
/// Throws std::invalid_argument unless the table is a group.
AlgebraPtr from_group_table(const std::vector<std::vector<std::size_t>>& table,
                            std::uint32_t p);

/// Upper triangular n x n matrices with entries in base.
AlgebraPtr upper_triangular(std::size_t n, const AlgebraPtr& base);

/// Full matrix algebra M_n(base).
AlgebraPtr matrix_algebra(std::size_t n, const AlgebraPtr& base);

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b);

/// Jacobson radical as the joint annihilator of the given complete list of
/// simple modules; returns a canonical basis (rows, algebra coordinates).
/// The result is checked nilpotent; failure means the inventory was
/// incomplete and raises TheoremViolation.
FFMatrix radical_ideal(const AlgebraPresentation& a,
                       const std::vector<RightModule>& simples);

}  // namespace cslab

#endif
