#ifndef CSLAB_CSL_HPP
#define CSLAB_CSL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cslab/quiver.hpp"

namespace cslab {

/// Result of the exhaustive division-ring test on a realized endomorphism
/// ring: every nonzero element invertible. For finite rings this is
/// equivalent to having no zero divisors.
struct DivisionVerdict {
  bool is_division = false;
  std::uint64_t card = 0;  // p^dim, the full enumeration size
  std::optional<FFMatrix> witness_coords;  // nonzero non-invertible element
  std::optional<FFMatrix> witness_matrix;
  bool commutative = false;
};

DivisionVerdict division_test(const EndRealization& e,
                              std::uint64_t guard = kDefaultGuard);

/// Non-split extension M of nonisomorphic simples along the first proper
/// arrow, with the verified conclusions of the division-subring lemma:
/// End(M) is a division ring embedding into End(S_top) and End(S_bottom).
struct CslWitness {
  std::size_t from = 0;  // arrow from -> to; top = S_from, bottom = S_to
  std::size_t to = 0;
  std::vector<FFMatrix> cocycle;
  Extension extension;
  std::size_t length = 0;        // always 2
  bool simple = false;           // always false
  std::size_t end_dim = 0;
  std::size_t end_dim_top = 0;
  std::size_t end_dim_bottom = 0;
  DivisionVerdict end_verdict;
  bool embeds_in_end_top = false;     // injective ring map End(M) -> End(S)
  bool embeds_in_end_bottom = false;  // injective ring map End(M) -> End(T)
};

std::optional<CslWitness> csl_witness(const AlgebraPtr& a,
                                      const GabrielQuiver& q,
                                      std::uint64_t guard = kDefaultGuard);

/// All modules of length <= max_length up to isomorphism, built layer by
/// layer: layer 1 is the simple inventory; layer l+1 consists of all
/// extensions of a simple top by a layer-l bottom, over every cocycle class
/// representative, deduplicated by are_isomorphic. exhaustive_length <
/// requested_length records a guard-limited partial enumeration.
struct ModuleEnumeration {
  std::vector<RightModule> modules;
  std::vector<std::size_t> lengths;  // parallel to modules
  std::size_t requested_length = 0;
  std::size_t exhaustive_length = 0;
};

ModuleEnumeration enumerate_modules(const AlgebraPtr& a,
                                    std::size_t max_length,
                                    std::uint64_t guard = kDefaultGuard);

/// Isotypic direct-sum decomposition (requires a totally disconnected
/// quiver). Summands are grouped by the isomorphism class of their
/// composition factor; any non-isotypic indecomposable summand would
/// contradict the decomposition theorem and raises TheoremViolation.
struct IsotypicGroup {
  std::size_t class_index = 0;  // into the quiver's simple inventory
  std::vector<std::size_t> summand_indices;
  std::size_t total_dim = 0;
};

struct IsotypicDecomposition {
  Decomposition decomposition;
  std::vector<std::size_t> summand_class;  // inventory class per summand
  std::vector<IsotypicGroup> groups;
};

IsotypicDecomposition isotypic_decomposition(
    const RightModule& m, const GabrielQuiver& q,
    std::uint64_t guard = kDefaultGuard);

/// Nonzero endomorphism f with f^2 = 0 for a nonzero non-simple isotypic
/// module: through a simple direct summand when one exists, otherwise via
/// soc(M) <= rad(M) and a nonzero map M/rad(M) -> soc(M). Both f != 0 and
/// f*f = 0 are asserted on the returned matrix.
FFMatrix nilpotent_endomorphism(const RightModule& m, const FFMatrix& rad_a,
                                std::uint64_t guard = kDefaultGuard);

/// Per-module certificate attached by csl_check in exhaustive mode.
struct ModuleCertificate {
  std::size_t module_index = 0;
  std::size_t dim = 0;
  std::size_t length = 0;
  bool simple = false;
  bool isotypic = false;
  std::string kind;  // "simple" | "nilpotent_endomorphism" | "isotypic_decomposition"
  std::optional<FFMatrix> nilpotent;            // f != 0 with f^2 = 0
  std::optional<FFMatrix> proper_idempotent;    // singular projection
  std::optional<DivisionVerdict> division;      // cross-check when enumerable
};

struct ViolationRecord {
  std::optional<std::size_t> module_index;  // none for the witness module
  std::size_t dim = 0;
  std::size_t length = 0;
  std::size_t end_dim = 0;
  std::string note;
};

/// Executable form of the finite-length CSL theorem for one algebra.
struct CSLReport {
  std::string algebra_label;
  bool disconnected = true;
  std::string mode;  // "witness" | "exhaustive"
  std::size_t requested_length = 0;
  std::size_t max_length = 0;  // bound actually checked
  std::size_t modules_examined = 0;
  std::vector<ViolationRecord> violations;
  std::vector<ModuleCertificate> certificates;
  std::optional<CslWitness> witness;
  bool guard_limited = false;
  bool theorem_consistent = false;
};

/// Full check: computes the quiver; a connected quiver is refuted by the
/// length-2 witness, a disconnected one is verified exhaustively against
/// every module of length <= max_length. force_exhaustive additionally
/// enumerates modules when the quiver is connected.
CSLReport csl_check(const AlgebraPtr& a, std::size_t max_length,
                    bool force_exhaustive = false,
                    std::uint64_t guard = kDefaultGuard);

/// One factor M_{matrix_size}(local_algebra) of the semiprimary structure
/// decomposition.
struct StructureFactor {
  std::size_t matrix_size = 0;  // multiplicity of the projective in R_R
  std::size_t projective_dim = 0;
  AlgebraPtr local_algebra;  // End of the indecomposable projective
  bool local_verified = false;
};

struct StructureReport {
  std::string algebra_label;
  bool decomposition_exists = false;
  std::vector<StructureFactor> factors;
  bool quiver_disconnected = false;
  bool matches_quiver = false;
};

/// Decomposes the regular module into indecomposable projectives, groups
/// them up to isomorphism, realizes each End as a local algebra, and
/// cross-checks against the quiver: a matrix-rings-over-local-rings product
/// exists exactly when the quiver is totally disconnected.
StructureReport semiprimary_structure(const AlgebraPtr& a,
                                      std::uint64_t guard = kDefaultGuard);

}  // namespace cslab

#endif
