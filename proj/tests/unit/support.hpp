#ifndef CSLAB_TESTS_SUPPORT_HPP
#define CSLAB_TESTS_SUPPORT_HPP

#include <random>
#include <set>
#include <vector>

#include "cslab/module.hpp"

namespace cslab_test {

using cslab::FFMatrix;

// all vectors of GF(p)^n in lexicographic (big-endian digit) order
inline std::vector<FFMatrix> all_vectors(std::uint32_t p, std::size_t n) {
  std::vector<FFMatrix> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<std::uint32_t> digits(n);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    cslab::index_to_digits(idx, p, digits);
    out.push_back(FFMatrix::row_vector(p, digits));
  }
  return out;
}

// the full set of vectors in the row space, computed by brute-force
// enumeration of all row combinations (the independent span oracle)
inline std::set<std::vector<std::uint32_t>> span_set(const FFMatrix& m) {
  std::set<std::vector<std::uint32_t>> out;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) total *= m.p();
  std::vector<std::uint32_t> digits(m.rows());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    cslab::index_to_digits(idx, m.p(), digits);
    FFMatrix v(m.p(), 1, m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (digits[r] != 0) v = v + m.row(r).scaled(digits[r]);
    out.insert(v.entries());
  }
  return out;
}

// brute-force rank: log_p of the span cardinality
inline std::size_t rank_by_span_oracle(const FFMatrix& m) {
  std::size_t card = span_set(m).size();
  std::size_t rank = 0;
  while (card > 1) {
    card /= m.p();
    ++rank;
  }
  return rank;
}

inline FFMatrix random_matrix(std::uint32_t p, std::size_t rows,
                              std::size_t cols, std::mt19937& rng) {
  FFMatrix m(p, rows, cols);
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, dist(rng));
  return m;
}

inline FFMatrix random_invertible(std::uint32_t p, std::size_t n,
                                  std::mt19937& rng) {
  while (true) {
    FFMatrix m = random_matrix(p, n, n, rng);
    if (m.invertible()) return m;
  }
}

// multiplication table of the cyclic group of order n
inline std::vector<std::vector<std::size_t>> cyclic_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

}  // namespace cslab_test

#endif
