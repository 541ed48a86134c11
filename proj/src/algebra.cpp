#include "cslab/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cslab/module.hpp"

namespace cslab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

AlgebraPresentation::AlgebraPresentation(
    std::uint32_t p, std::size_t dim,
    std::vector<std::uint32_t> structure_constants,
    std::vector<std::uint32_t> unit, std::string label)
    : p_(p),
      dim_(dim),
      mul_(std::move(structure_constants)),
      unit_(FFMatrix::row_vector(p, unit)),
      label_(std::move(label)) {
  require(is_prime(p) && p <= 251, "AlgebraPresentation: p must be prime <= 251");
  require(dim >= 1, "AlgebraPresentation: dim must be >= 1");
  require(mul_.size() == dim * dim * dim,
          "AlgebraPresentation: structure constant tensor has wrong size");
  require(unit.size() == dim, "AlgebraPresentation: unit vector has wrong size");
  for (auto& c : mul_) c %= p_;
}

std::uint32_t AlgebraPresentation::structure_constant(std::size_t i,
                                                      std::size_t j,
                                                      std::size_t k) const {
  return mul_[(i * dim_ + j) * dim_ + k];
}

FFMatrix AlgebraPresentation::basis_product(std::size_t i,
                                            std::size_t j) const {
  FFMatrix out(p_, 1, dim_);
  for (std::size_t k = 0; k < dim_; ++k)
    out.set(0, k, structure_constant(i, j, k));
  return out;
}

FFMatrix AlgebraPresentation::product(const FFMatrix& x,
                                      const FFMatrix& y) const {
  require(x.rows() == 1 && x.cols() == dim_ && y.rows() == 1 &&
              y.cols() == dim_ && x.p() == p_ && y.p() == p_,
          "AlgebraPresentation::product: operands must be 1 x dim over GF(p)");
  FFMatrix out(p_, 1, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    std::uint32_t xi = x.at(0, i);
    if (xi == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      std::uint32_t f = ff_mul(xi, y.at(0, j), p_);
      if (f == 0) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        std::uint32_t c = structure_constant(i, j, k);
        if (c == 0) continue;
        out.set(0, k, ff_add(out.at(0, k), ff_mul(f, c, p_), p_));
      }
    }
  }
  return out;
}

FFMatrix AlgebraPresentation::right_multiplication(const FFMatrix& y) const {
  FFMatrix out(p_, dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    FFMatrix ei(p_, 1, dim_);
    ei.set(0, i, 1);
    FFMatrix row = product(ei, y);
    for (std::size_t k = 0; k < dim_; ++k) out.set(i, k, row.at(0, k));
  }
  return out;
}

std::vector<std::array<std::uint32_t, 4>>
AlgebraPresentation::sparse_constants() const {
  std::vector<std::array<std::uint32_t, 4>> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        std::uint32_t c = structure_constant(i, j, k);
        if (c != 0)
          out.push_back({static_cast<std::uint32_t>(i),
                         static_cast<std::uint32_t>(j),
                         static_cast<std::uint32_t>(k), c});
      }
  return out;
}

bool AlgebraPresentation::same_presentation(
    const AlgebraPresentation& other) const {
  return p_ == other.p_ && dim_ == other.dim_ && mul_ == other.mul_ &&
         unit_ == other.unit_;
}

ValidationReport validate(const AlgebraPresentation& a) {
  ValidationReport rep;
  std::size_t n = a.dim();
  for (std::size_t i = 0; i < n && rep.associative; ++i) {
    FFMatrix ei(a.p(), 1, n);
    ei.set(0, i, 1);
    for (std::size_t j = 0; j < n && rep.associative; ++j) {
      FFMatrix ej(a.p(), 1, n);
      ej.set(0, j, 1);
      FFMatrix ij = a.basis_product(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        FFMatrix el(a.p(), 1, n);
        el.set(0, l, 1);
        FFMatrix left = a.product(ij, el);
        FFMatrix right = a.product(ei, a.basis_product(j, l));
        if (left != right) {
          rep.associative = false;
          rep.bad_triple = {{i, j, l}};
          std::ostringstream os;
          os << "associativity fails at basis triple (" << i << "," << j
             << "," << l << ")";
          rep.message = os.str();
          break;
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    FFMatrix ei(a.p(), 1, n);
    ei.set(0, i, 1);
    if (a.product(a.unit(), ei) != ei || a.product(ei, a.unit()) != ei) {
      rep.unital = false;
      rep.bad_unit_index = i;
      if (!rep.message.empty()) rep.message += "; ";
      rep.message += "unit law fails at basis element " + std::to_string(i);
      break;
    }
  }
  return rep;
}

AlgebraPtr field_algebra(std::uint32_t p) {
  std::vector<std::uint32_t> mul(1, 1);
  return std::make_shared<AlgebraPresentation>(
      p, 1, std::move(mul), std::vector<std::uint32_t>{1},
      "GF(" + std::to_string(p) + ")");
}

// ---------------------------------------------------------------------------
// Path algebra modulo relations, truncated at the cutoff.

namespace {

struct Path {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;  // indices into q.arrows
};

// paths of length < cutoff, by length then construction order
std::vector<Path> enumerate_paths(const QuiverWithRelations& q) {
  std::vector<Path> paths;
  std::vector<Path> layer;
  for (std::size_t v = 0; v < q.vertex_count; ++v)
    layer.push_back({v, v, {}});
  paths = layer;
  for (std::size_t len = 1; len < q.cutoff; ++len) {
    std::vector<Path> next;
    for (const Path& p : layer)
      for (std::size_t ai = 0; ai < q.arrows.size(); ++ai)
        if (q.arrows[ai].source == p.target) {
          Path ext = p;
          ext.arrows.push_back(ai);
          ext.target = q.arrows[ai].target;
          next.push_back(ext);
        }
    paths.insert(paths.end(), next.begin(), next.end());
    layer = std::move(next);
    if (layer.empty()) break;
  }
  return paths;
}

}  // namespace

AlgebraPtr from_quiver(const QuiverWithRelations& q) {
  require(q.vertex_count >= 1, "from_quiver: at least one vertex required");
  require(q.cutoff >= 1, "from_quiver: cutoff must be >= 1");
  std::map<std::string, std::size_t> arrow_index;
  for (std::size_t i = 0; i < q.arrows.size(); ++i) {
    const auto& a = q.arrows[i];
    require(a.source < q.vertex_count && a.target < q.vertex_count,
            "from_quiver: arrow endpoint out of range");
    require(!arrow_index.count(a.name), "from_quiver: duplicate arrow name");
    arrow_index[a.name] = i;
  }

  std::vector<Path> paths = enumerate_paths(q);
  std::size_t N = paths.size();
  // arrows determine the path except for trivial paths, so key on (source, arrows)
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> lookup;
  for (std::size_t i = 0; i < N; ++i)
    lookup[{paths[i].source, paths[i].arrows}] = i;

  // relation vectors in path space, truncation already applied
  auto relation_vector = [&](const QuiverWithRelations::Relation& rel) {
    FFMatrix v(q.p, 1, N);
    std::optional<std::pair<std::size_t, std::size_t>> endpoints;
    for (const auto& term : rel) {
      require(!term.path.empty(), "from_quiver: relation path must name arrows");
      std::vector<std::size_t> idx;
      for (const auto& name : term.path) {
        auto it = arrow_index.find(name);
        require(it != arrow_index.end(),
                "from_quiver: relation refers to unknown arrow '" + name + "'");
        idx.push_back(it->second);
      }
      std::size_t src = q.arrows[idx.front()].source;
      std::size_t cur = src;
      for (std::size_t ai : idx) {
        require(q.arrows[ai].source == cur,
                "from_quiver: relation path is not composable");
        cur = q.arrows[ai].target;
      }
      if (!endpoints)
        endpoints = {src, cur};
      else
        require(endpoints->first == src && endpoints->second == cur,
                "from_quiver: mixed endpoints in a relation");
      if (idx.size() >= q.cutoff) continue;  // zero beyond the cutoff
      auto it = lookup.find({src, idx});
      require(it != lookup.end(), "from_quiver: internal path lookup failure");
      v.set(0, it->second, ff_add(v.at(0, it->second), term.coefficient, q.p));
    }
    return v;
  };

  // product of two paths in the truncated path space
  auto path_product = [&](std::size_t s, std::size_t t) {
    FFMatrix v(q.p, 1, N);
    if (paths[s].target != paths[t].source) return v;
    if (paths[s].arrows.size() + paths[t].arrows.size() >= q.cutoff) return v;
    std::vector<std::size_t> idx = paths[s].arrows;
    idx.insert(idx.end(), paths[t].arrows.begin(), paths[t].arrows.end());
    auto it = lookup.find({paths[s].source, idx});
    require(it != lookup.end(), "from_quiver: internal path lookup failure");
    v.set(0, it->second, 1);
    return v;
  };

  // two-sided ideal generated by the relations
  FFMatrix ideal(q.p, 0, N);
  for (const auto& rel : q.relations) {
    FFMatrix r = relation_vector(rel);
    if (r.is_zero()) continue;
    for (std::size_t u = 0; u < N; ++u) {
      for (std::size_t w = 0; w < N; ++w) {
        // u * r * w, expanded term by term
        FFMatrix acc(q.p, 1, N);
        for (std::size_t t = 0; t < N; ++t) {
          std::uint32_t c = r.at(0, t);
          if (c == 0) continue;
          FFMatrix ut = path_product(u, t);
          for (std::size_t m = 0; m < N; ++m) {
            std::uint32_t cm = ut.at(0, m);
            if (cm == 0) continue;
            FFMatrix utw = path_product(m, w);
            acc = acc + utw.scaled(ff_mul(c, cm, q.p));
          }
        }
        if (!acc.is_zero()) ideal = vstack(ideal, acc);
      }
    }
  }

  std::vector<std::size_t> pivots;
  FFMatrix ideal_rref = ideal.rref(&pivots);
  std::vector<bool> is_pivot(N, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> basis_paths;  // quotient basis = non-pivot paths
  for (std::size_t t = 0; t < N; ++t)
    if (!is_pivot[t]) basis_paths.push_back(t);
  std::size_t dim = basis_paths.size();
  require(dim >= 1, "from_quiver: relations collapse the algebra to zero");

  // reduce a path-space vector modulo the ideal, read off quotient coords
  auto reduce = [&](FFMatrix v) {
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      std::uint32_t c = v.at(0, pivots[r]);
      if (c == 0) continue;
      v = v - ideal_rref.row(r).scaled(c);
    }
    FFMatrix out(q.p, 1, dim);
    for (std::size_t t = 0; t < dim; ++t) out.set(0, t, v.at(0, basis_paths[t]));
    return out;
  };

  std::vector<std::uint32_t> mul(dim * dim * dim, 0);
  for (std::size_t s = 0; s < dim; ++s)
    for (std::size_t t = 0; t < dim; ++t) {
      FFMatrix prod = reduce(path_product(basis_paths[s], basis_paths[t]));
      for (std::size_t k = 0; k < dim; ++k)
        mul[(s * dim + t) * dim + k] = prod.at(0, k);
    }

  FFMatrix unit_vec(q.p, 1, N);
  for (std::size_t i = 0; i < N; ++i)
    if (paths[i].arrows.empty()) unit_vec.set(0, i, 1);
  FFMatrix unit_coords = reduce(unit_vec);
  std::vector<std::uint32_t> unit(dim);
  for (std::size_t k = 0; k < dim; ++k) unit[k] = unit_coords.at(0, k);

  std::ostringstream label;
  label << "path algebra (" << q.vertex_count << " vertices, "
        << q.arrows.size() << " arrows, " << q.relations.size()
        << " relations, cutoff " << q.cutoff << ")";
  return std::make_shared<AlgebraPresentation>(q.p, dim, std::move(mul),
                                               std::move(unit), label.str());
}

// ---------------------------------------------------------------------------

AlgebraPtr from_group_table(const std::vector<std::vector<std::size_t>>& table,
                            std::uint32_t p) {
  std::size_t n = table.size();
  require(n >= 1, "from_group_table: empty table");
  for (const auto& row : table) {
    require(row.size() == n, "from_group_table: table is not square");
    for (std::size_t v : row)
      require(v < n, "from_group_table: entry out of range");
  }
  // Latin square
  for (std::size_t i = 0; i < n; ++i) {
    std::set<std::size_t> r(table[i].begin(), table[i].end());
    require(r.size() == n, "from_group_table: repeated entry in a row");
    std::set<std::size_t> c;
    for (std::size_t j = 0; j < n; ++j) c.insert(table[j][i]);
    require(c.size() == n, "from_group_table: repeated entry in a column");
  }
  // identity
  std::size_t e = n;
  for (std::size_t i = 0; i < n && e == n; ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] != j || table[j][i] != j) {
        ok = false;
        break;
      }
    if (ok) e = i;
  }
  require(e < n, "from_group_table: no identity element");
  // inverses
  for (std::size_t i = 0; i < n; ++i) {
    bool has = false;
    for (std::size_t j = 0; j < n; ++j)
      if (table[i][j] == e && table[j][i] == e) has = true;
    require(has, "from_group_table: element without inverse");
  }
  // associativity by exhaustion
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        require(table[table[i][j]][k] == table[i][table[j][k]],
                "from_group_table: table is not associative");

  std::vector<std::uint32_t> mul(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mul[(i * n + j) * n + table[i][j]] = 1;
  std::vector<std::uint32_t> unit(n, 0);
  unit[e] = 1;
  return std::make_shared<AlgebraPresentation>(
      p, n, std::move(mul), std::move(unit),
      "GF(" + std::to_string(p) + ") group algebra of order " +
          std::to_string(n));
}

namespace {

// common core of upper_triangular and matrix_algebra: basis elements are
// (position, base element) pairs with e_{rc} b * e_{r'c'} b' =
// delta_{c,r'} e_{rc'} (b b')
AlgebraPtr positional_algebra(const std::vector<std::pair<std::size_t, std::size_t>>& positions,
                              const AlgebraPtr& base, std::size_t n,
                              const std::string& label) {
  std::size_t bd = base->dim();
  std::size_t dim = positions.size() * bd;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pos_index;
  for (std::size_t i = 0; i < positions.size(); ++i) pos_index[positions[i]] = i;

  auto coord = [&](std::size_t pos, std::size_t b) { return pos * bd + b; };

  std::vector<std::uint32_t> mul(dim * dim * dim, 0);
  for (std::size_t pi = 0; pi < positions.size(); ++pi)
    for (std::size_t bi = 0; bi < bd; ++bi)
      for (std::size_t pj = 0; pj < positions.size(); ++pj)
        for (std::size_t bj = 0; bj < bd; ++bj) {
          if (positions[pi].second != positions[pj].first) continue;
          auto it = pos_index.find({positions[pi].first, positions[pj].second});
          if (it == pos_index.end()) continue;  // cannot happen for our shapes
          std::size_t i = coord(pi, bi), j = coord(pj, bj);
          for (std::size_t k = 0; k < bd; ++k) {
            std::uint32_t c = base->structure_constant(bi, bj, k);
            if (c != 0) mul[(i * dim + j) * dim + coord(it->second, k)] = c;
          }
        }

  std::vector<std::uint32_t> unit(dim, 0);
  for (std::size_t r = 0; r < n; ++r) {
    auto it = pos_index.find({r, r});
    for (std::size_t b = 0; b < bd; ++b) {
      std::uint32_t u = base->unit().at(0, b);
      if (u != 0) unit[coord(it->second, b)] = u;
    }
  }
  return std::make_shared<AlgebraPresentation>(base->p(), dim, std::move(mul),
                                               std::move(unit), label);
}

}  // namespace

AlgebraPtr upper_triangular(std::size_t n, const AlgebraPtr& base) {
  require(n >= 1, "upper_triangular: n must be >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) positions.push_back({r, c});
  return positional_algebra(positions, base, n,
                            "U_" + std::to_string(n) + "(" + base->label() + ")");
}

AlgebraPtr matrix_algebra(std::size_t n, const AlgebraPtr& base) {
  require(n >= 1, "matrix_algebra: n must be >= 1");
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) positions.push_back({r, c});
  return positional_algebra(positions, base, n,
                            "M_" + std::to_string(n) + "(" + base->label() + ")");
}

AlgebraPtr direct_product(const AlgebraPtr& a, const AlgebraPtr& b) {
  require(a->p() == b->p(), "direct_product: modulus mismatch");
  std::size_t da = a->dim(), db = b->dim(), dim = da + db;
  std::vector<std::uint32_t> mul(dim * dim * dim, 0);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k)
        mul[(i * dim + j) * dim + k] = a->structure_constant(i, j, k);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k)
        mul[((da + i) * dim + (da + j)) * dim + (da + k)] =
            b->structure_constant(i, j, k);
  std::vector<std::uint32_t> unit(dim, 0);
  for (std::size_t i = 0; i < da; ++i) unit[i] = a->unit().at(0, i);
  for (std::size_t i = 0; i < db; ++i) unit[da + i] = b->unit().at(0, i);
  return std::make_shared<AlgebraPresentation>(
      a->p(), dim, std::move(mul), std::move(unit),
      a->label() + " x " + b->label());
}

FFMatrix radical_ideal(const AlgebraPresentation& a,
                       const std::vector<RightModule>& simples) {
  std::size_t n = a.dim();
  // rad(A) = { x : rho_S(x) = 0 for every simple S }; assemble the map
  // x -> (rho_S(a_i) stacked) and take its left kernel.
  std::size_t total = 0;
  for (const auto& s : simples) total += s.dim() * s.dim();
  FFMatrix m(a.p(), n, total);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t off = 0;
    for (const auto& s : simples) {
      const FFMatrix& rho = s.action(i);
      for (std::size_t r = 0; r < s.dim(); ++r)
        for (std::size_t c = 0; c < s.dim(); ++c)
          m.set(i, off + r * s.dim() + c, rho.at(r, c));
      off += s.dim() * s.dim();
    }
  }
  FFMatrix rad = m.transposed().null_space();

  // self-check: the annihilator of a complete set of simples is nilpotent
  FFMatrix power = rad;
  bool nilpotent = power.rows() == 0;
  for (std::size_t step = 0; step < n && !nilpotent; ++step) {
    FFMatrix next(a.p(), 0, n);
    for (std::size_t i = 0; i < power.rows(); ++i)
      for (std::size_t j = 0; j < rad.rows(); ++j) {
        FFMatrix prod = a.product(power.row(i), rad.row(j));
        if (!prod.is_zero()) next = vstack(next, prod);
      }
    next = row_basis(next);
    if (next.rows() == 0) nilpotent = true;
    power = next;
  }
  if (!nilpotent)
    throw TheoremViolation(
        "radical_ideal: computed annihilator is not nilpotent; "
        "the simple inventory must be incomplete");
  return rad;
}

}  // namespace cslab
