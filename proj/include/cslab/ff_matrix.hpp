#ifndef CSLAB_FF_MATRIX_HPP
#define CSLAB_FF_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cslab {

/// Dense matrix over the prime field GF(p), 2 <= p <= 251, row-major.
/// Entries are residues in [0, p). All arithmetic is exact; matrices with
/// different moduli never combine (std::invalid_argument).
///
/// All elimination-based operations (rank, rref, null_space, solve) use
/// deterministic Gaussian elimination with the lowest-index pivot, so every
/// returned basis is canonical for its subspace and bit-identical run to run.
class FFMatrix {
 public:
  FFMatrix() : p_(2), rows_(0), cols_(0) {}
  FFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols);  // zeros
  FFMatrix(std::uint32_t p,
           const std::vector<std::vector<std::uint32_t>>& rows);

  static FFMatrix identity(std::uint32_t p, std::size_t n);
  static FFMatrix row_vector(std::uint32_t p,
                             const std::vector<std::uint32_t>& entries);

  std::uint32_t p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::uint32_t at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, std::uint32_t v);  // reduces mod p

  const std::vector<std::uint32_t>& entries() const { return entries_; }

  bool operator==(const FFMatrix& other) const;
  bool operator!=(const FFMatrix& other) const { return !(*this == other); }

  bool is_zero() const;
  bool is_identity() const;

  FFMatrix operator+(const FFMatrix& other) const;
  FFMatrix operator-(const FFMatrix& other) const;
  FFMatrix operator*(const FFMatrix& other) const;
  FFMatrix scaled(std::uint32_t c) const;
  FFMatrix transposed() const;
  FFMatrix pow(std::size_t e) const;  // square matrices only

  FFMatrix row(std::size_t r) const;                       // 1 x cols
  FFMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                     std::size_t nc) const;

  /// Reduced row echelon form; pivot column indices appended to *pivots.
  FFMatrix rref(std::vector<std::size_t>* pivots = nullptr) const;

  std::size_t rank() const;

  /// Canonical basis of the right kernel {v : this * v^T = 0}, one row per
  /// basis vector; rows() == cols() - rank().
  FFMatrix null_space() const;

  /// Some X with this * X = rhs, or nullopt when the system is inconsistent.
  /// Free variables are set to zero, so the solution is deterministic.
  std::optional<FFMatrix> solve(const FFMatrix& rhs) const;

  std::optional<FFMatrix> inverse() const;
  bool invertible() const;

  std::string to_string() const;  // e.g. [[0,1],[1,0]]

 private:
  std::uint32_t p_;
  std::size_t rows_, cols_;
  std::vector<std::uint32_t> entries_;
};

FFMatrix hstack(const FFMatrix& a, const FFMatrix& b);
FFMatrix vstack(const FFMatrix& a, const FFMatrix& b);

/// Canonical (RREF) basis of the row space; zero rows dropped.
FFMatrix row_basis(const FFMatrix& m);

/// True when v (1 x cols) lies in the row space of basis.
bool row_space_contains(const FFMatrix& basis, const FFMatrix& v);

/// True when every row of a lies in the row space of b and vice versa.
bool same_row_space(const FFMatrix& a, const FFMatrix& b);

/// Canonical basis of rowspace(a) + rowspace(b).
FFMatrix row_space_sum(const FFMatrix& a, const FFMatrix& b);

/// Canonical basis of rowspace(a) ∩ rowspace(b) (Zassenhaus).
FFMatrix row_space_intersection(const FFMatrix& a, const FFMatrix& b);

/// Coordinates of each row of targets in the row basis `basis`
/// (coords * basis = targets), or nullopt if some row is outside.
std::optional<FFMatrix> express_rows(const FFMatrix& targets,
                                     const FFMatrix& basis);

/// Row-major flattening of m as a 1 x (rows*cols) row vector.
FFMatrix vectorize(const FFMatrix& m);

/// Inverse of vectorize for a given shape.
FFMatrix unvectorize(const FFMatrix& v, std::size_t rows, std::size_t cols);

// Scalar arithmetic in GF(p).
std::uint32_t ff_add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t ff_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t ff_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t ff_neg(std::uint32_t a, std::uint32_t p);
std::uint32_t ff_inv(std::uint32_t a, std::uint32_t p);

bool is_prime(std::uint32_t p);

}  // namespace cslab

#endif
