#include "cslab/guard.hpp"

namespace cslab {

std::uint64_t checked_pow(std::uint32_t p, std::size_t k, std::uint64_t guard,
                          const std::string& context) {
  std::uint64_t v = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (v > guard / p) throw GuardExceeded(context, 0, guard);
    v *= p;
    if (v > guard) throw GuardExceeded(context, v, guard);
  }
  return v;
}

void index_to_digits(std::uint64_t n, std::uint32_t p,
                     std::vector<std::uint32_t>& out) {
  for (std::size_t j = out.size(); j > 0; --j) {
    out[j - 1] = static_cast<std::uint32_t>(n % p);
    n /= p;
  }
}

WeightOrderedVectors::WeightOrderedVectors(std::uint32_t p, std::size_t k)
    : p_(p), k_(k), weight_(1) {
  if (k_ == 0) {
    done_ = true;
    return;
  }
  support_.resize(1, 0);
  digits_.assign(1, 1);
  fresh_support_ = true;
}

bool WeightOrderedVectors::advance_digits() {
  // digits over [1, p), big-endian odometer
  for (std::size_t j = digits_.size(); j > 0; --j) {
    if (digits_[j - 1] + 1 < p_) {
      ++digits_[j - 1];
      for (std::size_t t = j; t < digits_.size(); ++t) digits_[t] = 1;
      return true;
    }
  }
  return false;
}

bool WeightOrderedVectors::advance_support() {
  // next size-weight_ subset of {0..k_-1} in lexicographic order
  std::size_t w = support_.size();
  std::size_t j = w;
  while (j > 0) {
    if (support_[j - 1] + 1 <= k_ - (w - (j - 1))) {
      ++support_[j - 1];
      for (std::size_t t = j; t < w; ++t) support_[t] = support_[t - 1] + 1;
      return true;
    }
    --j;
  }
  // subsets exhausted, grow the weight
  if (weight_ == k_) return false;
  ++weight_;
  support_.resize(weight_);
  for (std::size_t t = 0; t < weight_; ++t) support_[t] = t;
  return true;
}

bool WeightOrderedVectors::next(std::vector<std::uint32_t>& out) {
  if (done_) return false;
  if (fresh_support_) {
    fresh_support_ = false;
  } else if (!advance_digits()) {
    if (!advance_support()) {
      done_ = true;
      return false;
    }
    digits_.assign(weight_, 1);
  }
  out.assign(k_, 0);
  for (std::size_t t = 0; t < support_.size(); ++t)
    out[support_[t]] = digits_[t];
  return true;
}

}  // namespace cslab
