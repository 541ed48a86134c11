#include "cslab/ff_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cslab {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void require_same_field(const FFMatrix& a, const FFMatrix& b) {
  require(a.p() == b.p(), "FFMatrix: modulus mismatch");
}

}  // namespace

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t ff_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint32_t ff_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint32_t ff_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(
      (static_cast<std::uint64_t>(a) * b) % p);
}

std::uint32_t ff_neg(std::uint32_t a, std::uint32_t p) {
  return a == 0 ? 0 : p - a;
}

std::uint32_t ff_inv(std::uint32_t a, std::uint32_t p) {
  require(a % p != 0, "ff_inv: zero is not invertible");
  // extended Euclid
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

FFMatrix::FFMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
  require(p >= 2 && p <= 251 && is_prime(p), "FFMatrix: p must be prime, 2..251");
}

FFMatrix::FFMatrix(std::uint32_t p,
                   const std::vector<std::vector<std::uint32_t>>& rows)
    : FFMatrix(p, rows.size(), rows.empty() ? 0 : rows.front().size()) {
  for (std::size_t r = 0; r < rows_; ++r) {
    require(rows[r].size() == cols_, "FFMatrix: ragged rows");
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, rows[r][c]);
  }
}

FFMatrix FFMatrix::identity(std::uint32_t p, std::size_t n) {
  FFMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FFMatrix FFMatrix::row_vector(std::uint32_t p,
                              const std::vector<std::uint32_t>& entries) {
  FFMatrix m(p, 1, entries.size());
  for (std::size_t c = 0; c < entries.size(); ++c) m.set(0, c, entries[c]);
  return m;
}

std::uint32_t FFMatrix::at(std::size_t r, std::size_t c) const {
  require(r < rows_ && c < cols_, "FFMatrix::at: index out of range");
  return entries_[r * cols_ + c];
}

void FFMatrix::set(std::size_t r, std::size_t c, std::uint32_t v) {
  require(r < rows_ && c < cols_, "FFMatrix::set: index out of range");
  entries_[r * cols_ + c] = v % p_;
}

bool FFMatrix::operator==(const FFMatrix& other) const {
  return p_ == other.p_ && rows_ == other.rows_ && cols_ == other.cols_ &&
         entries_ == other.entries_;
}

bool FFMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](std::uint32_t e) { return e == 0; });
}

bool FFMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(p_, rows_);
}

FFMatrix FFMatrix::operator+(const FFMatrix& other) const {
  require_same_field(*this, other);
  require(rows_ == other.rows_ && cols_ == other.cols_,
          "FFMatrix: shape mismatch in +");
  FFMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = ff_add(entries_[i], other.entries_[i], p_);
  return out;
}

FFMatrix FFMatrix::operator-(const FFMatrix& other) const {
  require_same_field(*this, other);
  require(rows_ == other.rows_ && cols_ == other.cols_,
          "FFMatrix: shape mismatch in -");
  FFMatrix out(p_, rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = ff_sub(entries_[i], other.entries_[i], p_);
  return out;
}

FFMatrix FFMatrix::operator*(const FFMatrix& other) const {
  require_same_field(*this, other);
  require(cols_ == other.rows_, "FFMatrix: shape mismatch in *");
  FFMatrix out(p_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = entries_[r * cols_ + k];
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        std::uint64_t v = out.entries_[r * other.cols_ + c] +
                          a * other.entries_[k * other.cols_ + c];
        out.entries_[r * other.cols_ + c] =
            static_cast<std::uint32_t>(v % p_);
      }
    }
  }
  return out;
}

FFMatrix FFMatrix::scaled(std::uint32_t c) const {
  FFMatrix out(p_, rows_, cols_);
  c %= p_;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out.entries_[i] = ff_mul(entries_[i], c, p_);
  return out;
}

FFMatrix FFMatrix::transposed() const {
  FFMatrix out(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out.entries_[c * rows_ + r] = entries_[r * cols_ + c];
  return out;
}

FFMatrix FFMatrix::pow(std::size_t e) const {
  require(rows_ == cols_, "FFMatrix::pow: square matrices only");
  FFMatrix acc = identity(p_, rows_);
  FFMatrix base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FFMatrix FFMatrix::row(std::size_t r) const {
  return submatrix(r, 0, 1, cols_);
}

FFMatrix FFMatrix::submatrix(std::size_t r0, std::size_t c0, std::size_t nr,
                             std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_,
          "FFMatrix::submatrix: out of range");
  FFMatrix out(p_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c)
      out.entries_[r * nc + c] = entries_[(r0 + r) * cols_ + (c0 + c)];
  return out;
}

FFMatrix FFMatrix::rref(std::vector<std::size_t>* pivots) const {
  FFMatrix m = *this;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols_ && pivot_row < rows_; ++col) {
    // lowest-index pivot: first row at or below pivot_row with nonzero entry
    std::size_t sel = rows_;
    for (std::size_t r = pivot_row; r < rows_; ++r) {
      if (m.entries_[r * cols_ + col] != 0) {
        sel = r;
        break;
      }
    }
    if (sel == rows_) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < cols_; ++c)
        std::swap(m.entries_[sel * cols_ + c],
                  m.entries_[pivot_row * cols_ + c]);
    }
    std::uint32_t inv = ff_inv(m.entries_[pivot_row * cols_ + col], p_);
    for (std::size_t c = 0; c < cols_; ++c)
      m.entries_[pivot_row * cols_ + c] =
          ff_mul(m.entries_[pivot_row * cols_ + c], inv, p_);
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pivot_row) continue;
      std::uint32_t f = m.entries_[r * cols_ + col];
      if (f == 0) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        m.entries_[r * cols_ + c] =
            ff_sub(m.entries_[r * cols_ + c],
                   ff_mul(f, m.entries_[pivot_row * cols_ + c], p_), p_);
    }
    if (pivots) pivots->push_back(col);
    ++pivot_row;
  }
  return m;
}

std::size_t FFMatrix::rank() const {
  std::vector<std::size_t> pivots;
  rref(&pivots);
  return pivots.size();
}

FFMatrix FFMatrix::null_space() const {
  std::vector<std::size_t> pivots;
  FFMatrix r = rref(&pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  FFMatrix basis(p_, free_cols.size(), cols_);
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t f = free_cols[i];
    basis.set(i, f, 1);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr)
      basis.set(i, pivots[pr], ff_neg(r.at(pr, f), p_));
  }
  return basis;
}

std::optional<FFMatrix> FFMatrix::solve(const FFMatrix& rhs) const {
  require_same_field(*this, rhs);
  require(rhs.rows_ == rows_, "FFMatrix::solve: shape mismatch");
  FFMatrix aug = hstack(*this, rhs);
  std::vector<std::size_t> pivots;
  FFMatrix r = aug.rref(&pivots);
  // pivot in the rhs block means inconsistency
  for (std::size_t c : pivots)
    if (c >= cols_) return std::nullopt;
  FFMatrix x(p_, cols_, rhs.cols_);
  for (std::size_t pr = 0; pr < pivots.size(); ++pr)
    for (std::size_t c = 0; c < rhs.cols_; ++c)
      x.set(pivots[pr], c, r.at(pr, cols_ + c));
  return x;
}

std::optional<FFMatrix> FFMatrix::inverse() const {
  require(rows_ == cols_, "FFMatrix::inverse: square matrices only");
  auto x = solve(identity(p_, rows_));
  if (!x) return std::nullopt;
  if ((*this) * (*x) != identity(p_, rows_)) return std::nullopt;
  return x;
}

bool FFMatrix::invertible() const {
  return rows_ == cols_ && rank() == rows_;
}

std::string FFMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << entries_[r * cols_ + c];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

FFMatrix hstack(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b);
  require(a.rows() == b.rows(), "hstack: row count mismatch");
  FFMatrix out(a.p(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c)
      out.set(r, a.cols() + c, b.at(r, c));
  }
  return out;
}

FFMatrix vstack(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b);
  require(a.cols() == b.cols(), "vstack: column count mismatch");
  FFMatrix out(a.p(), a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c)
      out.set(a.rows() + r, c, b.at(r, c));
  return out;
}

FFMatrix row_basis(const FFMatrix& m) {
  std::vector<std::size_t> pivots;
  FFMatrix r = m.rref(&pivots);
  return r.submatrix(0, 0, pivots.size(), m.cols());
}

bool row_space_contains(const FFMatrix& basis, const FFMatrix& v) {
  require_same_field(basis, v);
  require(v.rows() == 1 && v.cols() == basis.cols(),
          "row_space_contains: v must be 1 x cols");
  if (v.is_zero()) return true;
  return vstack(basis, v).rank() == basis.rank();
}

bool same_row_space(const FFMatrix& a, const FFMatrix& b) {
  return row_basis(a) == row_basis(b);
}

FFMatrix row_space_sum(const FFMatrix& a, const FFMatrix& b) {
  return row_basis(vstack(a, b));
}

FFMatrix row_space_intersection(const FFMatrix& a, const FFMatrix& b) {
  require_same_field(a, b);
  require(a.cols() == b.cols(), "row_space_intersection: column mismatch");
  std::size_t n = a.cols();
  // Zassenhaus: reduce [[A A],[B 0]]; rows with zero left block carry the
  // intersection in the right block.
  FFMatrix top = hstack(a, a);
  FFMatrix bottom = hstack(b, FFMatrix(b.p(), b.rows(), n));
  FFMatrix r = vstack(top, bottom).rref();
  FFMatrix inter(a.p(), 0, n);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c)
      if (r.at(i, c) != 0) left_zero = false;
    FFMatrix right = r.submatrix(i, n, 1, n);
    if (left_zero && !right.is_zero()) inter = vstack(inter, right);
  }
  return row_basis(inter);
}

std::optional<FFMatrix> express_rows(const FFMatrix& targets,
                                     const FFMatrix& basis) {
  require_same_field(targets, basis);
  require(targets.cols() == basis.cols(), "express_rows: column mismatch");
  // coords * basis = targets  <=>  basis^T * coords^T = targets^T
  auto ct = basis.transposed().solve(targets.transposed());
  if (!ct) return std::nullopt;
  FFMatrix coords = ct->transposed();
  if (coords * basis != targets) return std::nullopt;
  return coords;
}

FFMatrix vectorize(const FFMatrix& m) {
  FFMatrix out(m.p(), 1, m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.set(0, r * m.cols() + c, m.at(r, c));
  return out;
}

FFMatrix unvectorize(const FFMatrix& v, std::size_t rows, std::size_t cols) {
  require(v.rows() == 1 && v.cols() == rows * cols,
          "unvectorize: shape mismatch");
  FFMatrix out(v.p(), rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, v.at(0, r * cols + c));
  return out;
}

}  // namespace cslab
