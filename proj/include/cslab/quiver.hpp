#ifndef CSLAB_QUIVER_HPP
#define CSLAB_QUIVER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cslab/module.hpp"

namespace cslab {

/// Complete list of pairwise nonisomorphic simple right modules, obtained
/// from the composition factors of the regular module (every simple of a
/// finite-dimensional algebra occurs there). Ordered by dimension, then
/// discovery order.
struct SimpleInventory {
  AlgebraPtr algebra;
  std::vector<RightModule> simples;
  std::vector<std::size_t> end_dims;
  std::vector<std::string> provenance;
};

SimpleInventory simple_inventory(const AlgebraPtr& a,
                                 std::uint64_t guard = kDefaultGuard);

/// Cocycles and coboundaries computing Ext^1(top, bottom) for the sequences
/// 0 -> bottom -> E -> top -> 0. A cocycle is one top.dim x bottom.dim block
/// delta(a_i) per algebra basis element with
///   sum_k c[i][j][k] delta(a_k) = rho_top(a_i) delta(a_j)
///                                 + delta(a_i) rho_bottom(a_j),
/// stored vectorized (one row per basis cocycle, blocks concatenated).
struct CocycleSpace {
  std::size_t top_dim = 0;
  std::size_t bottom_dim = 0;
  std::size_t algebra_dim = 0;
  FFMatrix cocycles;      // Z, canonical row basis
  FFMatrix coboundaries;  // B, canonical row basis, B subset of Z
  FFMatrix complement;    // ext_dim rows of Z spanning a complement of B

  std::size_t ext_dim() const {
    return cocycles.rows() - coboundaries.rows();
  }

  /// Blocks delta(a_i) of a vectorized cocycle row.
  std::vector<FFMatrix> blocks(const FFMatrix& row) const;
};

CocycleSpace ext_space(const RightModule& top, const RightModule& bottom);

/// Middle term of the extension defined by a cocycle, with the canonical
/// embedding of bottom and projection onto top. split is decided by
/// membership in the coboundary space; the zero cocycle gives the direct
/// sum. Throws if the blocks fail the cocycle identity.
struct Extension {
  RightModule total;
  FFMatrix bottom_inclusion;  // bottom.dim x total.dim
  FFMatrix top_projection;    // total.dim x top.dim
  bool split = false;
};

Extension extension_from_cocycle(const RightModule& top,
                                 const RightModule& bottom,
                                 const std::vector<FFMatrix>& delta);

/// The right Gabriel quiver: vertices are the inventory simples, with an
/// arrow i -> j exactly when Ext^1(S_i, S_j) != 0. Loops are recorded but do
/// not count against total disconnectedness.
struct GabrielQuiver {
  SimpleInventory inventory;
  std::vector<std::vector<std::size_t>> ext_dims;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // row-major order
  bool disconnected = true;
};

GabrielQuiver gabriel_quiver(const AlgebraPtr& a,
                             std::uint64_t guard = kDefaultGuard);

bool is_totally_disconnected(const GabrielQuiver& q);

/// Deterministic DOT rendering (vertices S1..Sn in inventory order, one line
/// per arrow, loops included).
std::string to_dot(const GabrielQuiver& q);

}  // namespace cslab

#endif
