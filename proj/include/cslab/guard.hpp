#ifndef CSLAB_GUARD_HPP
#define CSLAB_GUARD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cslab {

/// Default cap on exhaustive enumerations (vectors, ring elements, cocycle
/// classes). Overridable per call; the CLI reads CSLAB_GUARD / --guard.
inline constexpr std::uint64_t kDefaultGuard = 1'000'000;

/// Thrown when an exhaustive step would enumerate more than `guard` items.
/// The CLI maps this to exit code 2 (guard-limited partial check).
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what_arg, std::uint64_t required,
                std::uint64_t guard)
      : std::runtime_error(what_arg + " (needs " + std::to_string(required) +
                           " > guard " + std::to_string(guard) + ")"),
        required_(required),
        guard_(guard) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t guard() const { return guard_; }

 private:
  std::uint64_t required_;
  std::uint64_t guard_;
};

/// Thrown when a computation contradicts one of the verified theorems.
/// Indicates a bug in the toolkit, never a mathematical discovery.
/// The CLI maps this to exit code 1.
class TheoremViolation : public std::logic_error {
 public:
  explicit TheoremViolation(const std::string& what_arg)
      : std::logic_error(what_arg) {}
};

/// p^k if it is <= guard, else throws GuardExceeded.
std::uint64_t checked_pow(std::uint32_t p, std::size_t k, std::uint64_t guard,
                          const std::string& context);

/// Writes the big-endian base-p digits of n into out (out.size() digits).
/// Enumerating n = 0,1,2,... yields vectors in lexicographic order.
void index_to_digits(std::uint64_t n, std::uint32_t p,
                     std::vector<std::uint32_t>& out);

/// Enumerates GF(p)^k \ {0} ordered by support size, then support position
/// (lexicographic), then digit values. Complete and deterministic; sparse
/// combinations come first, which is where idempotents, singular elements
/// and identity-like maps tend to live.
class WeightOrderedVectors {
 public:
  WeightOrderedVectors(std::uint32_t p, std::size_t k);

  /// Fills `out` with the next vector; false once all p^k - 1 are spent.
  bool next(std::vector<std::uint32_t>& out);

 private:
  bool advance_digits();
  bool advance_support();

  std::uint32_t p_;
  std::size_t k_;
  std::size_t weight_;
  std::vector<std::size_t> support_;
  std::vector<std::uint32_t> digits_;  // values in [1, p), one per support slot
  bool fresh_support_ = false;
  bool done_ = false;
};

}  // namespace cslab

#endif
