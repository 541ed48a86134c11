#include "cslab/subcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace cslab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// uniserial indecomposable GF(p)[t]/(t^m) as a module over GF(p)[t]/(t^n):
// basis 1, t, ..., t^(m-1); the Lambda basis element t^j shifts by j
RightModule uniserial_indecomposable(const AlgebraPtr& lambda, std::size_t m) {
  std::vector<FFMatrix> action;
  for (std::size_t j = 0; j < lambda->dim(); ++j) {
    FFMatrix rho(lambda->p(), m, m);
    for (std::size_t i = 0; i + j < m; ++i) rho.set(i, i + j, 1);
    action.push_back(rho);
  }
  return RightModule(lambda, std::move(action));
}

// partitions with parts <= max_part and total <= max_sum, parts
// non-increasing; deterministic order (by total, then lexicographic)
void partitions_into(std::size_t max_sum, std::size_t max_part,
                     std::vector<std::size_t>& current,
                     std::vector<std::vector<std::size_t>>& out) {
  out.push_back(current);
  std::size_t used = 0;
  for (std::size_t part : current) used += part;
  std::size_t limit = current.empty() ? max_part : current.back();
  for (std::size_t part = std::min(limit, max_sum - used); part >= 1; --part) {
    if (used + part > max_sum) continue;
    current.push_back(part);
    partitions_into(max_sum, max_part, current, out);
    current.pop_back();
    if (part == 1) break;  // size_t underflow guard
  }
}

}  // namespace

AlgebraPtr uniserial_lambda(std::uint32_t p, std::size_t n) {
  require(n >= 1, "uniserial_lambda: n must be >= 1");
  std::vector<std::uint32_t> mul(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i + j < n) mul[(i * n + j) * n + (i + j)] = 1;
  std::vector<std::uint32_t> unit(n, 0);
  unit[0] = 1;
  return std::make_shared<AlgebraPresentation>(
      p, n, std::move(mul), std::move(unit),
      "GF(" + std::to_string(p) + ")[t]/(t^" + std::to_string(n) + ")");
}

RightModule realize_pair(const AlgebraPtr& u2, const RightModule& big,
                         const FFMatrix& sub_basis) {
  const AlgebraPtr& base = big.algebra_ptr();
  std::size_t bd = base->dim();
  require(u2->dim() == 3 * bd, "realize_pair: u2 is not U_2 of big's algebra");
  FFMatrix j = row_basis(sub_basis);
  require(action_closed(big, j), "realize_pair: subspace not action-closed");
  std::size_t da = j.rows(), db = big.dim(), total = da + db;
  std::uint32_t p = big.p();

  // restricted action on A (sigma * J = J * rho_B)
  std::vector<FFMatrix> a_action;
  {
    SubQuotient sq = sub_quotient(big, j);
    a_action = sq.sub.actions();
  }

  // u2 basis layout from upper_triangular: positions (0,0), (0,1), (1,1),
  // base index fastest
  std::vector<FFMatrix> action;
  for (std::size_t pos = 0; pos < 3; ++pos)
    for (std::size_t b = 0; b < bd; ++b) {
      FFMatrix rho(p, total, total);
      if (pos == 0) {  // x: (a, v) -> (a b, 0)
        for (std::size_t r = 0; r < da; ++r)
          for (std::size_t c = 0; c < da; ++c)
            rho.set(r, c, a_action[b].at(r, c));
      } else if (pos == 1) {  // y: (a, v) -> (0, f(a) b)
        FFMatrix block = j * big.action(b);
        for (std::size_t r = 0; r < da; ++r)
          for (std::size_t c = 0; c < db; ++c)
            rho.set(r, da + c, block.at(r, c));
      } else {  // z: (a, v) -> (0, v b)
        for (std::size_t r = 0; r < db; ++r)
          for (std::size_t c = 0; c < db; ++c)
            rho.set(da + r, da + c, big.action(b).at(r, c));
      }
      action.push_back(rho);
    }
  return RightModule(u2, std::move(action));
}

bool in_submodule_category(const RightModule& x, const AlgebraPtr& base) {
  std::size_t bd = base->dim();
  require(x.algebra().dim() == 3 * bd,
          "in_submodule_category: module is not over U_2(base)");
  if (x.dim() == 0) return true;
  std::uint32_t p = x.p();
  // vertex idempotent e_1 = (0,0)-position unit, map generator
  // eta = (0,1)-position unit
  FFMatrix e1_coords(p, 1, 3 * bd), eta_coords(p, 1, 3 * bd);
  for (std::size_t b = 0; b < bd; ++b) {
    e1_coords.set(0, b, base->unit().at(0, b));
    eta_coords.set(0, bd + b, base->unit().at(0, b));
  }
  FFMatrix e1 = x.action_of(e1_coords);
  FFMatrix eta = x.action_of(eta_coords);
  FFMatrix left = row_basis(e1);  // X e_1
  return (left * eta).rank() == left.rows();
}

std::vector<EmbeddingPair> enumerate_pairs(const AlgebraPtr& lambda,
                                           std::size_t max_b_dim,
                                           std::uint64_t guard) {
  AlgebraPtr u2 = upper_triangular(2, lambda);
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> scratch;
  partitions_into(max_b_dim, lambda->dim(), scratch, parts);

  std::vector<EmbeddingPair> pairs;
  for (const auto& partition : parts) {
    RightModule big = RightModule::zero(lambda);
    for (std::size_t m : partition)
      big = direct_sum(big, uniserial_indecomposable(lambda, m));
    for (const FFMatrix& sub : all_submodules(big, guard)) {
      EmbeddingPair pair{lambda, u2, big, sub,
                         realize_pair(u2, big, sub)};
      bool known = false;
      for (const auto& existing : pairs) {
        if (existing.realization.dim() != pair.realization.dim()) continue;
        if (existing.sub_basis.rows() != pair.sub_basis.rows()) continue;
        if (are_isomorphic(existing.realization, pair.realization, guard)) {
          known = true;
          break;
        }
      }
      if (!known) pairs.push_back(std::move(pair));
    }
  }
  return pairs;
}

QuasiSimpleVerdict is_quasi_simple(const EmbeddingPair& pair,
                                   std::uint64_t guard) {
  QuasiSimpleVerdict verdict;
  const RightModule& m = pair.realization;
  if (m.dim() == 0) return verdict;  // zero object, not quasi-simple
  verdict.is_quasi_simple = true;
  for (const FFMatrix& sub : all_submodules(m, guard)) {
    if (sub.rows() == 0 || sub.rows() == m.dim()) continue;
    SubQuotient sq = sub_quotient(m, sub);
    if (in_submodule_category(sq.sub, pair.lambda) &&
        in_submodule_category(sq.quot, pair.lambda)) {
      verdict.is_quasi_simple = false;
      verdict.blocking_sub = sub;
      break;
    }
  }
  return verdict;
}

QuasiCslReport quasi_csl_check(const AlgebraPtr& lambda, std::size_t max_b_dim,
                               std::uint64_t guard) {
  QuasiCslReport report;
  report.p = lambda->p();
  report.n = lambda->dim();
  report.max_b_dim = max_b_dim;

  AlgebraPtr u2 = upper_triangular(2, lambda);
  RightModule k_module = uniserial_indecomposable(lambda, 1);
  RightModule s1 = realize_pair(u2, k_module, FFMatrix::identity(lambda->p(), 1));
  RightModule s2 = realize_pair(u2, k_module, FFMatrix(lambda->p(), 0, 1));

  std::vector<EmbeddingPair> pairs = enumerate_pairs(lambda, max_b_dim, guard);

  report.claim_semisimple_decomposes = true;
  report.claim_nonsemisimple_nilpotent = true;
  report.quasi_csl_holds = true;
  report.csl_fails = false;

  // radical action on B: multiplication by t (zero for n = 1)
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const EmbeddingPair& pair = pairs[idx];
    SubcatPairRecord rec;
    rec.index = idx;
    rec.a_dim = pair.sub_basis.rows();
    rec.b_dim = pair.big.dim();
    rec.realization_dim = pair.realization.dim();
    rec.b_semisimple =
        lambda->dim() == 1 || pair.big.action(1).is_zero();

    const RightModule& m = pair.realization;
    if (m.dim() > 0) {
      auto [end, end_alg] = end_algebra(m);
      (void)end_alg;
      rec.end_dim = end.dim();
      rec.division_end = division_test(end, guard).is_division;
      rec.simple = is_simple(m, guard);
      rec.length = length(m, guard);
    }
    rec.quasi_simple = is_quasi_simple(pair, guard).is_quasi_simple;
    if (rec.quasi_simple) ++report.quasi_simple_count;

    if (rec.b_semisimple && m.dim() > 0) {
      // claim 1: decomposes into copies of S1 and S2
      Decomposition dec = decompose_indecomposable(m, guard);
      rec.s1_s2_split = {0, 0};
      for (const auto& summand : dec.summands) {
        if (summand.dim() == s1.dim() && are_isomorphic(summand, s1, guard))
          ++rec.s1_s2_split[0];
        else if (summand.dim() == s2.dim() &&
                 are_isomorphic(summand, s2, guard))
          ++rec.s1_s2_split[1];
        else
          report.claim_semisimple_decomposes = false;
      }
    } else if (!rec.b_semisimple) {
      // claim 2: multiplication by t is a nonzero nilpotent endomorphism
      FFMatrix t_coords(lambda->p(), 1, u2->dim());
      t_coords.set(0, 1, 1);                      // (0,0) position, t
      t_coords.set(0, 2 * lambda->dim() + 1, 1);  // (1,1) position, t
      FFMatrix f = m.action_of(t_coords);
      bool nonzero = !f.is_zero();
      bool nilpotent = f.pow(lambda->dim()).is_zero();
      bool endo = true;
      for (std::size_t i = 0; i < u2->dim() && endo; ++i)
        if (m.action(i) * f != f * m.action(i)) endo = false;
      rec.has_t_nilpotent = nonzero && nilpotent && endo;
      if (!rec.has_t_nilpotent) report.claim_nonsemisimple_nilpotent = false;
    }

    if (rec.division_end && !rec.quasi_simple) report.quasi_csl_holds = false;
    if (rec.division_end && rec.quasi_simple && !rec.simple) {
      report.csl_fails = true;
      report.csl_witness_index = idx;
    }
    report.pairs.push_back(rec);
  }

  if (!report.claim_semisimple_decomposes ||
      !report.claim_nonsemisimple_nilpotent || !report.quasi_csl_holds ||
      !report.csl_fails)
    throw TheoremViolation(
        "quasi_csl_check: an enumerated pair escapes the example's verdicts");
  return report;
}

RightModule row_module(const RightModule& s, std::uint64_t guard) {
  require(is_simple(s, guard), "row_module: input module must be simple");
  AlgebraPtr u2 = upper_triangular(2, s.algebra_ptr());
  RightModule row =
      realize_pair(u2, s, FFMatrix::identity(s.p(), s.dim()));

  if (length(row, guard) != 2 || is_simple(row, guard))
    throw TheoremViolation("row_module: (S S) is not a length-2 non-simple");
  auto [end_row, alg_row] = end_algebra(row);
  (void)alg_row;
  std::size_t end_s_dim = hom_space(s, s).dim();
  if (end_row.dim() != end_s_dim)
    throw TheoremViolation("row_module: End dimension differs from End(S)");
  auto [end_s, alg_s] = end_algebra(s);
  (void)alg_s;
  if (division_test(end_row, guard).is_division !=
      division_test(end_s, guard).is_division)
    throw TheoremViolation("row_module: division verdicts disagree");
  return row;
}

}  // namespace cslab
