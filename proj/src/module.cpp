#include "cslab/module.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace cslab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

RightModule::RightModule(AlgebraPtr algebra, std::vector<FFMatrix> action)
    : algebra_(std::move(algebra)), action_(std::move(action)) {
  require(static_cast<bool>(algebra_), "RightModule: null algebra");
  const auto& a = *algebra_;
  require(action_.size() == a.dim(),
          "RightModule: one action matrix per algebra basis element required");
  dim_ = action_.empty() ? 0 : action_.front().rows();
  for (const auto& rho : action_) {
    require(rho.p() == a.p(), "RightModule: action modulus mismatch");
    require(rho.rows() == dim_ && rho.cols() == dim_,
            "RightModule: action matrices must be square of equal size");
  }
  // rho is a unital algebra homomorphism; check both identities exactly
  FFMatrix id = action_of(a.unit());
  require(id == FFMatrix::identity(a.p(), dim_),
          "RightModule: rho(1) != id");
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      FFMatrix lhs = action_[i] * action_[j];
      FFMatrix rhs(a.p(), dim_, dim_);
      for (std::size_t k = 0; k < a.dim(); ++k) {
        std::uint32_t c = a.structure_constant(i, j, k);
        if (c != 0) rhs = rhs + action_[k].scaled(c);
      }
      require(lhs == rhs, "RightModule: action is not multiplicative");
    }
}

RightModule RightModule::zero(AlgebraPtr algebra) {
  std::vector<FFMatrix> action(algebra->dim(),
                               FFMatrix(algebra->p(), 0, 0));
  return RightModule(std::move(algebra), std::move(action));
}

RightModule RightModule::regular(AlgebraPtr algebra) {
  std::vector<FFMatrix> action;
  for (std::size_t j = 0; j < algebra->dim(); ++j) {
    FFMatrix ej(algebra->p(), 1, algebra->dim());
    ej.set(0, j, 1);
    action.push_back(algebra->right_multiplication(ej));
  }
  return RightModule(std::move(algebra), std::move(action));
}

FFMatrix RightModule::action_of(const FFMatrix& coords) const {
  require(coords.rows() == 1 && coords.cols() == algebra_->dim(),
          "RightModule::action_of: coords must be 1 x dim_A");
  FFMatrix out(p(), dim_, dim_);
  for (std::size_t i = 0; i < algebra_->dim(); ++i) {
    std::uint32_t c = coords.at(0, i);
    if (c != 0) out = out + action_[i].scaled(c);
  }
  return out;
}

std::vector<std::uint32_t> RightModule::action_bytes() const {
  std::vector<std::uint32_t> out;
  for (const auto& rho : action_)
    out.insert(out.end(), rho.entries().begin(), rho.entries().end());
  return out;
}

bool same_algebra(const RightModule& m, const RightModule& n) {
  return m.algebra_ptr() == n.algebra_ptr() ||
         m.algebra().same_presentation(n.algebra());
}

RightModule direct_sum(const RightModule& m, const RightModule& n) {
  require(same_algebra(m, n), "direct_sum: algebra mismatch");
  std::vector<FFMatrix> action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    FFMatrix block(m.p(), m.dim() + n.dim(), m.dim() + n.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c)
        block.set(r, c, m.action(i).at(r, c));
    for (std::size_t r = 0; r < n.dim(); ++r)
      for (std::size_t c = 0; c < n.dim(); ++c)
        block.set(m.dim() + r, m.dim() + c, n.action(i).at(r, c));
    action.push_back(block);
  }
  return RightModule(m.algebra_ptr(), std::move(action));
}

RightModule conjugated(const RightModule& m, const FFMatrix& u) {
  auto uinv = u.inverse();
  require(uinv.has_value() && u.rows() == m.dim(),
          "conjugated: base change must be invertible of matching size");
  std::vector<FFMatrix> action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i)
    action.push_back(u * m.action(i) * (*uinv));
  return RightModule(m.algebra_ptr(), std::move(action));
}

FFMatrix spin(const RightModule& m, const FFMatrix& v) {
  require(v.rows() == 1 && v.cols() == m.dim(),
          "spin: v must be 1 x dim");
  FFMatrix basis(m.p(), 0, m.dim());
  if (v.is_zero()) return basis;
  basis = row_basis(v);
  // close under the basis actions; products of actions stay inside their span
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t r = 0; r < basis.rows(); ++r)
      for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        FFMatrix w = basis.row(r) * m.action(i);
        if (!row_space_contains(basis, w)) {
          basis = row_basis(vstack(basis, w));
          grew = true;
        }
      }
  }
  return basis;
}

bool action_closed(const RightModule& m, const FFMatrix& basis) {
  for (std::size_t r = 0; r < basis.rows(); ++r)
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
      if (!row_space_contains(basis, basis.row(r) * m.action(i)))
        return false;
  return true;
}

bool is_simple(const RightModule& m, std::uint64_t guard) {
  if (m.dim() == 0) return false;
  std::uint64_t total =
      checked_pow(m.p(), m.dim(), guard, "is_simple enumeration");
  std::vector<std::uint32_t> digits(m.dim());
  for (std::uint64_t n = 1; n < total; ++n) {
    index_to_digits(n, m.p(), digits);
    FFMatrix v = FFMatrix::row_vector(m.p(), digits);
    if (spin(m, v).rows() != m.dim()) return false;
  }
  return true;
}

SubQuotient sub_quotient(const RightModule& m, const FFMatrix& sub_basis) {
  require(sub_basis.cols() == m.dim() && sub_basis.p() == m.p(),
          "sub_quotient: basis shape mismatch");
  FFMatrix b = row_basis(sub_basis);
  require(action_closed(m, b), "sub_quotient: subspace is not action-closed");

  std::vector<std::size_t> pivots;
  b = b.rref(&pivots);  // already RREF; recompute for the pivot list
  std::vector<bool> is_pivot(m.dim(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.dim(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  std::size_t r = pivots.size(), q = free_cols.size();

  // projection m.dim x q: e_j -> class of e_j in the free-coordinate
  // complement (reduce by the RREF rows, read off free coordinates)
  FFMatrix proj(m.p(), m.dim(), q);
  for (std::size_t t = 0; t < q; ++t) proj.set(free_cols[t], t, 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < q; ++t)
      proj.set(pivots[i], t, ff_neg(b.at(i, free_cols[t]), m.p()));

  std::vector<FFMatrix> sub_action, quot_action;
  for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
    FFMatrix moved = b * m.action(i);  // rows stay in rowspace(b)
    // coordinates in the RREF basis can be read off the pivot columns
    FFMatrix sigma(m.p(), r, r);
    for (std::size_t u = 0; u < r; ++u)
      for (std::size_t v = 0; v < r; ++v)
        sigma.set(u, v, moved.at(u, pivots[v]));
    sub_action.push_back(sigma);

    FFMatrix tau(m.p(), q, q);
    for (std::size_t s = 0; s < q; ++s) {
      FFMatrix image = m.action(i).row(free_cols[s]) * proj;
      for (std::size_t t = 0; t < q; ++t) tau.set(s, t, image.at(0, t));
    }
    quot_action.push_back(tau);
  }

  return SubQuotient{RightModule(m.algebra_ptr(), std::move(sub_action)),
                     RightModule(m.algebra_ptr(), std::move(quot_action)), b,
                     proj};
}

namespace {

// minimal nonzero submodule: smallest spin dimension, ties broken by the
// lexicographically least generating vector (big-endian digit order)
FFMatrix minimal_submodule(const RightModule& m, std::uint64_t guard) {
  std::uint64_t total =
      checked_pow(m.p(), m.dim(), guard, "minimal submodule search");
  std::vector<std::uint32_t> digits(m.dim());
  FFMatrix best(m.p(), 0, m.dim());
  std::size_t best_dim = m.dim() + 1;
  for (std::uint64_t n = 1; n < total; ++n) {
    index_to_digits(n, m.p(), digits);
    FFMatrix s = spin(m, FFMatrix::row_vector(m.p(), digits));
    if (s.rows() < best_dim) {
      best_dim = s.rows();
      best = s;
      if (best_dim == 1) break;
    }
  }
  return best;
}

}  // namespace

std::vector<std::pair<RightModule, std::size_t>> composition_factors(
    const RightModule& m, std::uint64_t guard) {
  std::vector<RightModule> series;
  RightModule cur = m;
  while (cur.dim() > 0) {
    FFMatrix minimal = minimal_submodule(cur, guard);
    SubQuotient sq = sub_quotient(cur, minimal);
    series.push_back(sq.sub);
    cur = sq.quot;
  }
  std::vector<std::pair<RightModule, std::size_t>> factors;
  for (const auto& s : series) {
    bool found = false;
    for (auto& [rep, mult] : factors)
      if (rep.dim() == s.dim() && are_isomorphic(rep, s, guard)) {
        ++mult;
        found = true;
        break;
      }
    if (!found) factors.push_back({s, 1});
  }
  return factors;
}

std::size_t length(const RightModule& m, std::uint64_t guard) {
  std::size_t total = 0;
  for (const auto& [rep, mult] : composition_factors(m, guard)) {
    (void)rep;
    total += mult;
  }
  return total;
}

HomSpace hom_space(const RightModule& m, const RightModule& n) {
  require(same_algebra(m, n), "hom_space: algebra mismatch");
  std::size_t s = m.dim(), t = n.dim();
  std::size_t unknowns = s * t;
  std::size_t na = m.algebra().dim();
  // rho_m(a_i) X - X rho_n(a_i) = 0, vectorized row-major over X
  FFMatrix system(m.p(), na * s * t, unknowns);
  for (std::size_t i = 0; i < na; ++i) {
    const FFMatrix& am = m.action(i);
    const FFMatrix& an = n.action(i);
    for (std::size_t r = 0; r < s; ++r)
      for (std::size_t c = 0; c < t; ++c) {
        std::size_t eq = (i * s + r) * t + c;
        for (std::size_t k = 0; k < s; ++k)
          system.set(eq, k * t + c,
                     ff_add(system.at(eq, k * t + c), am.at(r, k), m.p()));
        for (std::size_t k = 0; k < t; ++k)
          system.set(eq, r * t + k,
                     ff_sub(system.at(eq, r * t + k), an.at(k, c), m.p()));
      }
  }
  FFMatrix kernel = system.null_space();
  HomSpace hom;
  hom.source_dim = s;
  hom.target_dim = t;
  for (std::size_t i = 0; i < kernel.rows(); ++i)
    hom.basis.push_back(unvectorize(kernel.row(i), s, t));
  return hom;
}

FFMatrix EndRealization::element(const FFMatrix& coords) const {
  FFMatrix out(coords.p(), hom.source_dim, hom.source_dim);
  for (std::size_t i = 0; i < hom.basis.size(); ++i) {
    std::uint32_t c = coords.at(0, i);
    if (c != 0) out = out + hom.basis[i].scaled(c);
  }
  return out;
}

std::pair<EndRealization, AlgebraPtr> end_algebra(const RightModule& m) {
  require(m.dim() > 0, "end_algebra: zero module");
  EndRealization end;
  end.hom = hom_space(m, m);
  std::size_t k = end.hom.dim();

  FFMatrix basis_rows(m.p(), k, m.dim() * m.dim());
  for (std::size_t i = 0; i < k; ++i) {
    FFMatrix v = vectorize(end.hom.basis[i]);
    for (std::size_t c = 0; c < v.cols(); ++c) basis_rows.set(i, c, v.at(0, c));
  }
  auto id_coords =
      express_rows(vectorize(FFMatrix::identity(m.p(), m.dim())), basis_rows);
  if (!id_coords)
    throw TheoremViolation("end_algebra: identity not in the Hom basis span");
  end.identity_coords = *id_coords;
  end.contains_identity = true;

  std::vector<std::uint32_t> mul(k * k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      FFMatrix prod = end.hom.basis[i] * end.hom.basis[j];
      auto coords = express_rows(vectorize(prod), basis_rows);
      if (!coords)
        throw TheoremViolation(
            "end_algebra: Hom basis is not closed under composition");
      for (std::size_t l = 0; l < k; ++l)
        mul[(i * k + j) * k + l] = coords->at(0, l);
    }
  std::vector<std::uint32_t> unit(k);
  for (std::size_t l = 0; l < k; ++l) unit[l] = end.identity_coords.at(0, l);
  auto alg = std::make_shared<AlgebraPresentation>(
      m.p(), k, std::move(mul), std::move(unit), "End(dim " +
          std::to_string(m.dim()) + " module)");
  return {std::move(end), std::move(alg)};
}

std::optional<FFMatrix> are_isomorphic(const RightModule& m,
                                       const RightModule& n,
                                       std::uint64_t guard) {
  require(same_algebra(m, n), "are_isomorphic: algebra mismatch");
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return FFMatrix(m.p(), 0, 0);
  HomSpace hom = hom_space(m, n);
  if (hom.dim() == 0) return std::nullopt;
  checked_pow(m.p(), hom.dim(), guard, "are_isomorphic enumeration");
  WeightOrderedVectors en(m.p(), hom.dim());
  std::vector<std::uint32_t> coeffs;
  while (en.next(coeffs)) {
    FFMatrix x(m.p(), m.dim(), n.dim());
    for (std::size_t i = 0; i < hom.dim(); ++i)
      if (coeffs[i] != 0) x = x + hom.basis[i].scaled(coeffs[i]);
    if (x.invertible()) return x;
  }
  return std::nullopt;
}

std::pair<FFMatrix, FFMatrix> radical_and_socle(const RightModule& m,
                                                const FFMatrix& rad_a) {
  require(rad_a.cols() == m.algebra().dim() && rad_a.p() == m.p(),
          "radical_and_socle: radical basis shape mismatch");
  // rad(M) = span of the rows of every rho(x), x over the radical basis
  FFMatrix rad_m(m.p(), 0, m.dim());
  FFMatrix stacked(m.p(), m.dim(), 0);
  for (std::size_t i = 0; i < rad_a.rows(); ++i) {
    FFMatrix rho = m.action_of(rad_a.row(i));
    rad_m = vstack(rad_m, rho);
    stacked = hstack(stacked, rho);
  }
  rad_m = row_basis(rad_m);
  // soc(M) = { v : v rho(x) = 0 for all x in rad(A) }
  FFMatrix soc_m = rad_a.rows() == 0 ? FFMatrix::identity(m.p(), m.dim())
                                     : stacked.transposed().null_space();
  if (!action_closed(m, rad_m) || !action_closed(m, soc_m))
    throw TheoremViolation("radical_and_socle: result not action-closed");
  return {rad_m, soc_m};
}

// ---------------------------------------------------------------------------
// decomposition into indecomposables

namespace {

// Split m along complementary action-closed subspaces, recurse, and lift the
// summand bases back to m's coordinates.
void decompose_into(const RightModule& m, std::uint64_t guard,
                    Decomposition& out);

bool try_split(const RightModule& m, const FFMatrix& first,
               const FFMatrix& second, std::uint64_t guard,
               Decomposition& out) {
  if (first.rows() == 0 || second.rows() == 0) return false;
  if (first.rows() + second.rows() != m.dim()) return false;
  if (row_space_intersection(first, second).rows() != 0) return false;
  for (const FFMatrix* part : {&first, &second}) {
    SubQuotient sq = sub_quotient(m, *part);
    Decomposition inner;
    decompose_into(sq.sub, guard, inner);
    for (std::size_t i = 0; i < inner.summands.size(); ++i) {
      out.summands.push_back(inner.summands[i]);
      out.summand_bases.push_back(inner.summand_bases[i] * sq.inclusion);
    }
  }
  return true;
}

void decompose_into(const RightModule& m, std::uint64_t guard,
                    Decomposition& out) {
  if (m.dim() == 0) return;
  auto [end, end_alg] = end_algebra(m);
  (void)end_alg;

  // Fitting probes: f^dim gives a stable image/kernel pair for every basis
  // endomorphism; a proper pair splits the module with no enumeration.
  for (const FFMatrix& f : end.hom.basis) {
    FFMatrix stable = f.pow(m.dim());
    FFMatrix image = row_basis(stable);
    if (image.rows() == 0 || image.rows() == m.dim()) continue;
    FFMatrix kernel = stable.transposed().null_space();
    if (try_split(m, image, kernel, guard, out)) return;
  }

  // exhaustive idempotent search (weight-then-lex); finding none proves
  // indecomposability
  checked_pow(m.p(), end.dim(), guard, "idempotent enumeration");
  WeightOrderedVectors en(m.p(), end.dim());
  std::vector<std::uint32_t> coeffs;
  while (en.next(coeffs)) {
    FFMatrix e = end.element(FFMatrix::row_vector(m.p(), coeffs));
    if (e * e != e) continue;
    if (e.is_zero() || e.is_identity()) continue;
    FFMatrix image = row_basis(e);
    FFMatrix kernel = e.transposed().null_space();
    if (try_split(m, image, kernel, guard, out)) return;
    throw TheoremViolation("decompose: idempotent failed to split the module");
  }

  out.summands.push_back(m);
  out.summand_bases.push_back(FFMatrix::identity(m.p(), m.dim()));
}

}  // namespace

Decomposition decompose_indecomposable(const RightModule& m,
                                       std::uint64_t guard) {
  Decomposition out;
  decompose_into(m, guard, out);
  out.base_change = FFMatrix(m.p(), 0, m.dim());
  std::size_t total = 0;
  for (const auto& b : out.summand_bases) {
    out.base_change = vstack(out.base_change, b);
    total += b.rows();
  }
  if (total != m.dim() || (m.dim() > 0 && !out.base_change.invertible()))
    throw TheoremViolation("decompose: base change is not invertible");
  return out;
}

bool is_isotypic(const RightModule& m, std::uint64_t guard) {
  if (m.dim() == 0) return true;  // convention
  return composition_factors(m, guard).size() == 1;
}

std::vector<FFMatrix> all_submodules(const RightModule& m,
                                     std::uint64_t guard) {
  std::uint64_t total =
      checked_pow(m.p(), m.dim(), guard, "submodule lattice enumeration");
  // cyclic submodules first, then close under pairwise sums (joins)
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<FFMatrix> subs;
  auto add = [&](const FFMatrix& basis) {
    std::vector<std::uint32_t> key = basis.entries();
    key.push_back(static_cast<std::uint32_t>(basis.rows()));
    if (seen.insert(key).second) {
      subs.push_back(basis);
      return true;
    }
    return false;
  };
  add(FFMatrix(m.p(), 0, m.dim()));
  std::vector<std::uint32_t> digits(m.dim());
  for (std::uint64_t n = 1; n < total; ++n) {
    index_to_digits(n, m.p(), digits);
    add(spin(m, FFMatrix::row_vector(m.p(), digits)));
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::size_t count = subs.size();
    if (count * count > guard)
      throw GuardExceeded("submodule join closure", count * count, guard);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = i + 1; j < count; ++j)
        if (add(row_space_sum(subs[i], subs[j]))) grew = true;
  }
  std::sort(subs.begin(), subs.end(), [](const FFMatrix& a, const FFMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() < b.rows();
    return a.entries() < b.entries();
  });
  return subs;
}

}  // namespace cslab
