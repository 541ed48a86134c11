#include "cslab/io.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace cslab {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open file: " + path);
  return ordered_json::parse(in);  // parse_error carries line/position
}

std::uint32_t get_prime(const ordered_json& doc) {
  require(doc.contains("p") && doc["p"].is_number_unsigned(),
          "document needs a prime field entry \"p\"");
  return doc["p"].get<std::uint32_t>();
}

}  // namespace

AlgebraPtr with_label(const AlgebraPtr& a, const std::string& label) {
  std::size_t n = a->dim();
  std::vector<std::uint32_t> mul(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        mul[(i * n + j) * n + k] = a->structure_constant(i, j, k);
  std::vector<std::uint32_t> unit(n);
  for (std::size_t k = 0; k < n; ++k) unit[k] = a->unit().at(0, k);
  return std::make_shared<AlgebraPresentation>(a->p(), n, std::move(mul),
                                               std::move(unit), label);
}

AlgebraPtr algebra_from_json(const ordered_json& doc) {
  require(doc.is_object(), "algebra document must be a JSON object");
  require(doc.contains("kind") && doc["kind"].is_string(),
          "algebra document needs a \"kind\" string");
  std::string kind = doc["kind"].get<std::string>();

  AlgebraPtr result;
  if (kind == "structure_constants") {
    std::uint32_t p = get_prime(doc);
    require(doc.contains("dim"), "structure_constants: missing \"dim\"");
    std::size_t dim = doc["dim"].get<std::size_t>();
    require(dim >= 1, "structure_constants: dim must be >= 1");
    require(doc.contains("unit") && doc["unit"].is_array() &&
                doc["unit"].size() == dim,
            "structure_constants: \"unit\" must list dim coordinates");
    std::vector<std::uint32_t> unit =
        doc["unit"].get<std::vector<std::uint32_t>>();
    std::vector<std::uint32_t> mul(dim * dim * dim, 0);
    require(doc.contains("mul") && doc["mul"].is_array(),
            "structure_constants: \"mul\" must be an array of quadruples");
    for (const auto& quad : doc["mul"]) {
      require(quad.is_array() && quad.size() == 4,
              "structure_constants: each mul entry is [i, j, k, c]");
      std::size_t i = quad[0].get<std::size_t>();
      std::size_t j = quad[1].get<std::size_t>();
      std::size_t k = quad[2].get<std::size_t>();
      std::uint32_t c = quad[3].get<std::uint32_t>();
      require(i < dim && j < dim && k < dim,
              "structure_constants: mul index out of range");
      mul[(i * dim + j) * dim + k] = c % p;
    }
    result = std::make_shared<AlgebraPresentation>(p, dim, std::move(mul),
                                                   std::move(unit), "");
  } else if (kind == "quiver") {
    QuiverWithRelations q;
    q.p = get_prime(doc);
    require(doc.contains("vertices"), "quiver: missing \"vertices\"");
    q.vertex_count = doc["vertices"].get<std::size_t>();
    require(doc.contains("cutoff"), "quiver: missing \"cutoff\"");
    q.cutoff = doc["cutoff"].get<std::size_t>();
    if (doc.contains("arrows"))
      for (const auto& arr : doc["arrows"]) {
        require(arr.is_array() && arr.size() == 3,
                "quiver: each arrow is [name, source, target]");
        q.arrows.push_back({arr[0].get<std::string>(),
                            arr[1].get<std::size_t>(),
                            arr[2].get<std::size_t>()});
      }
    if (doc.contains("relations"))
      for (const auto& rel : doc["relations"]) {
        require(rel.is_array(), "quiver: each relation is an array of terms");
        QuiverWithRelations::Relation relation;
        for (const auto& term : rel) {
          require(term.is_array() && term.size() == 2,
                  "quiver: each relation term is [coefficient, [arrows...]]");
          relation.push_back(
              {term[0].get<std::uint32_t>(),
               term[1].get<std::vector<std::string>>()});
        }
        q.relations.push_back(relation);
      }
    result = from_quiver(q);
  } else if (kind == "group_table") {
    std::uint32_t p = get_prime(doc);
    require(doc.contains("table") && doc["table"].is_array(),
            "group_table: missing \"table\"");
    auto table = doc["table"].get<std::vector<std::vector<std::size_t>>>();
    result = from_group_table(table, p);
  } else if (kind == "upper_triangular" || kind == "matrix") {
    require(doc.contains("n") && doc.contains("base"),
            kind + ": needs \"n\" and a \"base\" sub-document");
    std::size_t n = doc["n"].get<std::size_t>();
    AlgebraPtr base = algebra_from_json(doc["base"]);
    result = kind == "matrix" ? matrix_algebra(n, base)
                              : upper_triangular(n, base);
  } else if (kind == "product") {
    require(doc.contains("factors") && doc["factors"].is_array() &&
                doc["factors"].size() >= 2,
            "product: needs a \"factors\" array with at least two entries");
    result = algebra_from_json(doc["factors"][0]);
    for (std::size_t i = 1; i < doc["factors"].size(); ++i)
      result = direct_product(result, algebra_from_json(doc["factors"][i]));
  } else if (kind == "uniserial") {
    std::uint32_t p = get_prime(doc);
    require(doc.contains("n"), "uniserial: missing \"n\"");
    result = uniserial_lambda(p, doc["n"].get<std::size_t>());
  } else {
    throw std::invalid_argument("unknown algebra kind: " + kind);
  }

  if (doc.contains("label") && doc["label"].is_string())
    result = with_label(result, doc["label"].get<std::string>());
  else if (result->label().empty())
    result = with_label(result, kind + " algebra");
  return result;
}

AlgebraPtr load_algebra_file(const std::string& path) {
  return algebra_from_json(read_json_file(path));
}

bool is_module_document(const ordered_json& doc) {
  return doc.is_object() && doc.contains("action");
}

RightModule module_from_json(const ordered_json& doc,
                             const std::string& base_dir) {
  require(doc.is_object() && doc.contains("algebra"),
          "module document needs an \"algebra\" entry");
  AlgebraPtr algebra;
  if (doc["algebra"].is_string()) {
    std::filesystem::path p = doc["algebra"].get<std::string>();
    if (p.is_relative() && !base_dir.empty())
      p = std::filesystem::path(base_dir) / p;
    algebra = load_algebra_file(p.string());
  } else {
    algebra = algebra_from_json(doc["algebra"]);
  }
  require(doc.contains("dim"), "module document needs \"dim\"");
  std::size_t dim = doc["dim"].get<std::size_t>();
  require(doc.contains("action") && doc["action"].is_array() &&
              doc["action"].size() == algebra->dim(),
          "module document needs one action matrix per algebra basis element");
  std::vector<FFMatrix> action;
  for (const auto& mat : doc["action"]) {
    require(mat.is_array() && mat.size() == dim * dim,
            "module action matrices must be row-major with dim*dim entries");
    FFMatrix rho(algebra->p(), dim, dim);
    for (std::size_t r = 0; r < dim; ++r)
      for (std::size_t c = 0; c < dim; ++c)
        rho.set(r, c, mat[r * dim + c].get<std::uint32_t>());
    action.push_back(rho);
  }
  return RightModule(algebra, std::move(action));  // axioms checked on load
}

RightModule load_module_file(const std::string& path) {
  return module_from_json(read_json_file(path),
                          std::filesystem::path(path).parent_path().string());
}

ordered_json ff_matrix_json(const FFMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(row);
  }
  return ordered_json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

ordered_json algebra_json(const AlgebraPresentation& a) {
  ordered_json mul = ordered_json::array();
  for (const auto& quad : a.sparse_constants())
    mul.push_back({quad[0], quad[1], quad[2], quad[3]});
  ordered_json unit = ordered_json::array();
  for (std::size_t k = 0; k < a.dim(); ++k) unit.push_back(a.unit().at(0, k));
  return ordered_json{{"format_version", 1},
                      {"kind", "structure_constants"},
                      {"label", a.label()},
                      {"p", a.p()},
                      {"dim", a.dim()},
                      {"unit", unit},
                      {"mul", mul}};
}

ordered_json quiver_report_json(const GabrielQuiver& q,
                                const std::string& label) {
  ordered_json vertices = ordered_json::array();
  for (std::size_t i = 0; i < q.inventory.simples.size(); ++i)
    vertices.push_back({{"name", "S" + std::to_string(i + 1)},
                        {"dim", q.inventory.simples[i].dim()},
                        {"end_dim", q.inventory.end_dims[i]},
                        {"provenance", q.inventory.provenance[i]}});
  ordered_json arrows = ordered_json::array();
  for (const auto& [i, j] : q.arrows) arrows.push_back({i, j});
  return ordered_json{
      {"format_version", 1},
      {"label", label},
      {"vertices", vertices},
      {"ext_dims", q.ext_dims},
      {"arrows", arrows},
      {"disconnected", q.disconnected},
      {"finlen_csl", q.disconnected
                         ? "FinLen has CSL"
                         : "FinLen does not have CSL (witness available)"}};
}

namespace {

ordered_json division_json(const DivisionVerdict& v) {
  ordered_json out{{"is_division", v.is_division},
                   {"card", v.card},
                   {"commutative", v.commutative}};
  if (v.witness_coords) out["witness_coords"] = ff_matrix_json(*v.witness_coords);
  return out;
}

ordered_json witness_json(const CslWitness& w) {
  ordered_json cocycle = ordered_json::array();
  for (const auto& block : w.cocycle) cocycle.push_back(ff_matrix_json(block));
  ordered_json action = ordered_json::array();
  for (const auto& rho : w.extension.total.actions())
    action.push_back(ff_matrix_json(rho));
  return ordered_json{{"from", w.from},
                      {"to", w.to},
                      {"extension_dim", w.extension.total.dim()},
                      {"length", w.length},
                      {"simple", w.simple},
                      {"split", w.extension.split},
                      {"end_dim", w.end_dim},
                      {"end_dim_top", w.end_dim_top},
                      {"end_dim_bottom", w.end_dim_bottom},
                      {"division", division_json(w.end_verdict)},
                      {"embeds_in_end_top", w.embeds_in_end_top},
                      {"embeds_in_end_bottom", w.embeds_in_end_bottom},
                      {"cocycle", cocycle},
                      {"extension_action", action}};
}

}  // namespace

ordered_json csl_report_json(const CSLReport& report) {
  ordered_json violations = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json rec{{"dim", v.dim},
                     {"length", v.length},
                     {"end_dim", v.end_dim},
                     {"note", v.note}};
    if (v.module_index) rec["module_index"] = *v.module_index;
    violations.push_back(rec);
  }
  ordered_json certificates = ordered_json::array();
  for (const auto& c : report.certificates) {
    ordered_json rec{{"module_index", c.module_index},
                     {"dim", c.dim},
                     {"length", c.length},
                     {"simple", c.simple},
                     {"isotypic", c.isotypic},
                     {"kind", c.kind}};
    if (c.nilpotent) rec["nilpotent"] = ff_matrix_json(*c.nilpotent);
    if (c.proper_idempotent)
      rec["proper_idempotent"] = ff_matrix_json(*c.proper_idempotent);
    if (c.division) rec["division"] = division_json(*c.division);
    certificates.push_back(rec);
  }
  ordered_json out{{"format_version", 1},
                   {"algebra_label", report.algebra_label},
                   {"disconnected", report.disconnected},
                   {"mode", report.mode},
                   {"requested_length", report.requested_length},
                   {"max_length", report.max_length},
                   {"guard_limited", report.guard_limited},
                   {"modules_examined", report.modules_examined},
                   {"theorem_consistent", report.theorem_consistent},
                   {"violations", violations},
                   {"certificates", certificates}};
  if (report.witness) out["witness"] = witness_json(*report.witness);
  return out;
}

ordered_json structure_report_json(const StructureReport& report) {
  ordered_json factors = ordered_json::array();
  for (const auto& f : report.factors)
    factors.push_back({{"matrix_size", f.matrix_size},
                       {"projective_dim", f.projective_dim},
                       {"local_dim", f.local_algebra->dim()},
                       {"local_verified", f.local_verified},
                       {"local_algebra", algebra_json(*f.local_algebra)}});
  return ordered_json{{"format_version", 1},
                      {"algebra_label", report.algebra_label},
                      {"decomposition_exists", report.decomposition_exists},
                      {"factors", factors},
                      {"quiver_disconnected", report.quiver_disconnected},
                      {"matches_quiver", report.matches_quiver}};
}

ordered_json subcat_report_json(const QuasiCslReport& report) {
  ordered_json pairs = ordered_json::array();
  for (const auto& r : report.pairs) {
    ordered_json rec{{"index", r.index},
                     {"a_dim", r.a_dim},
                     {"b_dim", r.b_dim},
                     {"b_semisimple", r.b_semisimple},
                     {"realization_dim", r.realization_dim},
                     {"end_dim", r.end_dim},
                     {"division_end", r.division_end},
                     {"quasi_simple", r.quasi_simple},
                     {"simple", r.simple},
                     {"length", r.length}};
    if (!r.s1_s2_split.empty()) rec["s1_s2_split"] = r.s1_s2_split;
    if (!r.b_semisimple) rec["has_t_nilpotent"] = r.has_t_nilpotent;
    pairs.push_back(rec);
  }
  return ordered_json{
      {"format_version", 1},
      {"p", report.p},
      {"n", report.n},
      {"max_b_dim", report.max_b_dim},
      {"quasi_simple_count", report.quasi_simple_count},
      {"claims",
       {{"semisimple_pairs_decompose", report.claim_semisimple_decomposes},
        {"nonsemisimple_pairs_nilpotent",
         report.claim_nonsemisimple_nilpotent},
        {"quasi_csl_holds", report.quasi_csl_holds},
        {"csl_fails", report.csl_fails}}},
      {"csl_witness_index", report.csl_witness_index},
      {"pairs", pairs}};
}

std::string dump_report(const ordered_json& doc) { return doc.dump(2) + "\n"; }

}  // namespace cslab
