#ifndef CSLAB_IO_HPP
#define CSLAB_IO_HPP

#include <string>

#include "json.hpp"

#include "cslab/csl.hpp"
#include "cslab/subcat.hpp"

namespace cslab {

using ordered_json = nlohmann::ordered_json;

/// Copy of an algebra presentation carrying a different label.
AlgebraPtr with_label(const AlgebraPtr& a, const std::string& label);

/// Algebra description document. kind selects the constructor:
/// structure_constants, quiver, group_table, upper_triangular, matrix,
/// product, uniserial; composite kinds nest sub-documents under "base" /
/// "factors". Throws std::invalid_argument on schema violations.
AlgebraPtr algebra_from_json(const ordered_json& doc);
AlgebraPtr load_algebra_file(const std::string& path);

/// Module description document: {"algebra": <inline doc or path>, "dim": m,
/// "action": [row-major matrix per algebra basis element]}. base_dir
/// resolves a relative algebra path.
RightModule module_from_json(const ordered_json& doc,
                             const std::string& base_dir);
RightModule load_module_file(const std::string& path);

bool is_module_document(const ordered_json& doc);

ordered_json ff_matrix_json(const FFMatrix& m);
ordered_json algebra_json(const AlgebraPresentation& a);

ordered_json quiver_report_json(const GabrielQuiver& q,
                                const std::string& label);
ordered_json csl_report_json(const CSLReport& report);
ordered_json structure_report_json(const StructureReport& report);
ordered_json subcat_report_json(const QuasiCslReport& report);

/// Serialized with a stable 2-space indent; reports are byte-identical
/// across runs on the same inputs.
std::string dump_report(const ordered_json& doc);

}  // namespace cslab

#endif
