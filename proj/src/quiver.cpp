#include "cslab/quiver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cslab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

SimpleInventory simple_inventory(const AlgebraPtr& a, std::uint64_t guard) {
  RightModule regular = RightModule::regular(a);
  auto factors = composition_factors(regular, guard);
  // stable sort by dimension keeps discovery order within equal dims
  std::vector<std::size_t> order(factors.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return factors[x].first.dim() < factors[y].first.dim();
  });

  SimpleInventory inv;
  inv.algebra = a;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto& [simple, mult] = factors[order[rank]];
    inv.simples.push_back(simple);
    inv.end_dims.push_back(hom_space(simple, simple).dim());
    std::ostringstream os;
    os << "regular module factor " << order[rank] << " (multiplicity " << mult
       << ")";
    inv.provenance.push_back(os.str());
  }
  return inv;
}

std::vector<FFMatrix> CocycleSpace::blocks(const FFMatrix& row) const {
  require(row.rows() == 1 &&
              row.cols() == algebra_dim * top_dim * bottom_dim,
          "CocycleSpace::blocks: row shape mismatch");
  std::vector<FFMatrix> out;
  std::size_t block = top_dim * bottom_dim;
  for (std::size_t i = 0; i < algebra_dim; ++i)
    out.push_back(
        unvectorize(row.submatrix(0, i * block, 1, block), top_dim, bottom_dim));
  return out;
}

namespace {

FFMatrix coboundary_space(const RightModule& top, const RightModule& bottom) {
  std::size_t s = top.dim(), t = bottom.dim(), na = top.algebra().dim();
  FFMatrix gens(top.p(), 0, na * s * t);
  for (std::size_t u = 0; u < s; ++u)
    for (std::size_t c = 0; c < t; ++c) {
      FFMatrix x(top.p(), s, t);
      x.set(u, c, 1);
      FFMatrix row(top.p(), 1, 0);
      for (std::size_t i = 0; i < na; ++i)
        row = hstack(row, vectorize(top.action(i) * x - x * bottom.action(i)));
      gens = vstack(gens, row);
    }
  return row_basis(gens);
}

}  // namespace

CocycleSpace ext_space(const RightModule& top, const RightModule& bottom) {
  require(same_algebra(top, bottom), "ext_space: algebra mismatch");
  const auto& a = top.algebra();
  std::size_t s = top.dim(), t = bottom.dim(), na = a.dim();
  std::uint32_t p = top.p();
  std::size_t block = s * t;
  std::size_t unknowns = na * block;

  // cocycle identity, one equation per (i, j, r, c)
  FFMatrix system(p, na * na * block, unknowns);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const FFMatrix& rt = top.action(i);
      const FFMatrix& rb = bottom.action(j);
      for (std::size_t r = 0; r < s; ++r)
        for (std::size_t c = 0; c < t; ++c) {
          std::size_t eq = ((i * na + j) * s + r) * t + c;
          for (std::size_t k = 0; k < na; ++k) {
            std::uint32_t ck = a.structure_constant(i, j, k);
            if (ck != 0) {
              std::size_t col = k * block + r * t + c;
              system.set(eq, col, ff_add(system.at(eq, col), ck, p));
            }
          }
          for (std::size_t u = 0; u < s; ++u) {
            std::uint32_t v = rt.at(r, u);
            if (v != 0) {
              std::size_t col = j * block + u * t + c;
              system.set(eq, col, ff_sub(system.at(eq, col), v, p));
            }
          }
          for (std::size_t u = 0; u < t; ++u) {
            std::uint32_t v = rb.at(u, c);
            if (v != 0) {
              std::size_t col = i * block + r * t + u;
              system.set(eq, col, ff_sub(system.at(eq, col), v, p));
            }
          }
        }
    }

  CocycleSpace out;
  out.top_dim = s;
  out.bottom_dim = t;
  out.algebra_dim = na;
  out.cocycles = system.null_space();
  out.coboundaries = coboundary_space(top, bottom);

  for (std::size_t i = 0; i < out.coboundaries.rows(); ++i)
    if (!row_space_contains(out.cocycles, out.coboundaries.row(i)))
      throw TheoremViolation("ext_space: coboundary outside the cocycle space");

  // delta(1) = 0 for every cocycle (consequence of the identity)
  for (std::size_t i = 0; i < out.cocycles.rows(); ++i) {
    auto blocks = out.blocks(out.cocycles.row(i));
    FFMatrix at_unit(p, s, t);
    for (std::size_t k = 0; k < na; ++k) {
      std::uint32_t u = a.unit().at(0, k);
      if (u != 0) at_unit = at_unit + blocks[k].scaled(u);
    }
    if (!at_unit.is_zero())
      throw TheoremViolation("ext_space: cocycle nonzero at the unit");
  }

  // complement of B inside Z: reduce the Z basis modulo B, rebase
  std::vector<std::size_t> b_pivots;
  FFMatrix b_rref = out.coboundaries.rref(&b_pivots);
  FFMatrix reduced(p, 0, unknowns);
  for (std::size_t i = 0; i < out.cocycles.rows(); ++i) {
    FFMatrix v = out.cocycles.row(i);
    for (std::size_t r = 0; r < b_pivots.size(); ++r) {
      std::uint32_t c = v.at(0, b_pivots[r]);
      if (c != 0) v = v - b_rref.row(r).scaled(c);
    }
    if (!v.is_zero()) reduced = vstack(reduced, v);
  }
  out.complement = row_basis(reduced);
  if (out.complement.rows() != out.ext_dim())
    throw TheoremViolation("ext_space: complement dimension mismatch");
  return out;
}

Extension extension_from_cocycle(const RightModule& top,
                                 const RightModule& bottom,
                                 const std::vector<FFMatrix>& delta) {
  require(same_algebra(top, bottom),
          "extension_from_cocycle: algebra mismatch");
  const auto& a = top.algebra();
  std::size_t s = top.dim(), t = bottom.dim(), na = a.dim();
  std::uint32_t p = top.p();
  require(delta.size() == na,
          "extension_from_cocycle: one block per algebra basis element");
  for (const auto& d : delta)
    require(d.rows() == s && d.cols() == t && d.p() == p,
            "extension_from_cocycle: block shape mismatch");

  // cocycle identity check
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      FFMatrix lhs(p, s, t);
      for (std::size_t k = 0; k < na; ++k) {
        std::uint32_t c = a.structure_constant(i, j, k);
        if (c != 0) lhs = lhs + delta[k].scaled(c);
      }
      FFMatrix rhs = top.action(i) * delta[j] + delta[i] * bottom.action(j);
      require(lhs == rhs,
              "extension_from_cocycle: blocks fail the cocycle identity");
    }

  std::vector<FFMatrix> action;
  for (std::size_t i = 0; i < na; ++i) {
    FFMatrix block(p, s + t, s + t);
    for (std::size_t r = 0; r < s; ++r) {
      for (std::size_t c = 0; c < s; ++c) block.set(r, c, top.action(i).at(r, c));
      for (std::size_t c = 0; c < t; ++c) block.set(r, s + c, delta[i].at(r, c));
    }
    for (std::size_t r = 0; r < t; ++r)
      for (std::size_t c = 0; c < t; ++c)
        block.set(s + r, s + c, bottom.action(i).at(r, c));
    action.push_back(block);
  }

  Extension ext{RightModule(top.algebra_ptr(), std::move(action)),
                FFMatrix(p, t, s + t), FFMatrix(p, s + t, s), false};
  for (std::size_t r = 0; r < t; ++r) ext.bottom_inclusion.set(r, s + r, 1);
  for (std::size_t r = 0; r < s; ++r) ext.top_projection.set(r, r, 1);

  FFMatrix vec(p, 1, 0);
  for (std::size_t i = 0; i < na; ++i) vec = hstack(vec, vectorize(delta[i]));
  FFMatrix b = coboundary_space(top, bottom);
  ext.split = row_space_contains(b, vec);
  return ext;
}

GabrielQuiver gabriel_quiver(const AlgebraPtr& a, std::uint64_t guard) {
  GabrielQuiver q;
  q.inventory = simple_inventory(a, guard);
  std::size_t n = q.inventory.simples.size();
  q.ext_dims.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      q.ext_dims[i][j] =
          ext_space(q.inventory.simples[i], q.inventory.simples[j]).ext_dim();
      if (q.ext_dims[i][j] > 0) q.arrows.push_back({i, j});
    }
  q.disconnected = is_totally_disconnected(q);
  return q;
}

bool is_totally_disconnected(const GabrielQuiver& q) {
  for (const auto& [i, j] : q.arrows)
    if (i != j) return false;
  return true;
}

std::string to_dot(const GabrielQuiver& q) {
  std::ostringstream os;
  os << "digraph gabriel_quiver {\n";
  for (std::size_t i = 0; i < q.inventory.simples.size(); ++i)
    os << "  S" << (i + 1) << " [label=\"S" << (i + 1) << " dim="
       << q.inventory.simples[i].dim() << " end=" << q.inventory.end_dims[i]
       << "\"];\n";
  for (const auto& [i, j] : q.arrows)
    os << "  S" << (i + 1) << " -> S" << (j + 1) << " [label=\""
       << q.ext_dims[i][j] << "\"];\n";
  os << "}\n";
  return os.str();
}

}  // namespace cslab
