#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "cslab/io.hpp"

namespace {

constexpr int kExitConsistent = 0;
constexpr int kExitViolation = 1;
constexpr int kExitGuardLimited = 2;

std::uint64_t guard_from_env() {
  if (const char* env = std::getenv("CSLAB_GUARD")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring unparsable CSLAB_GUARD value\n";
    }
  }
  return cslab::kDefaultGuard;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out.good())
    throw std::runtime_error("cannot write output file: " + path);
  out << content;
}

int run_validate(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) {
    std::cerr << "cannot open file: " << path << "\n";
    return kExitViolation;
  }
  cslab::ordered_json doc = cslab::ordered_json::parse(in);
  if (cslab::is_module_document(doc)) {
    // module axioms are checked during load
    cslab::RightModule m = cslab::module_from_json(
        doc, std::filesystem::path(path).parent_path().string());
    std::cout << "module ok: dim " << m.dim() << " over "
              << m.algebra().label() << " (p=" << m.p() << ")\n";
    return kExitConsistent;
  }
  cslab::AlgebraPtr a = cslab::algebra_from_json(doc);
  cslab::ValidationReport rep = cslab::validate(*a);
  if (rep.ok()) {
    std::cout << "algebra ok: " << a->label() << " (p=" << a->p() << ", dim "
              << a->dim() << ")\n";
    return kExitConsistent;
  }
  std::cout << "algebra invalid: " << rep.message << "\n";
  return kExitViolation;
}

int run_quiver(const std::string& path, const std::string& dot_out,
               const std::string& json_out, std::uint64_t guard) {
  cslab::AlgebraPtr a = cslab::load_algebra_file(path);
  cslab::GabrielQuiver q = cslab::gabriel_quiver(a, guard);

  std::cout << "algebra: " << a->label() << " (p=" << a->p() << ", dim "
            << a->dim() << ")\n";
  for (std::size_t i = 0; i < q.inventory.simples.size(); ++i)
    std::cout << "  S" << (i + 1) << ": dim "
              << q.inventory.simples[i].dim() << ", End dim "
              << q.inventory.end_dims[i] << "\n";
  std::cout << "ext_dims:\n";
  for (const auto& row : q.ext_dims) {
    std::cout << " ";
    for (std::size_t v : row) std::cout << " " << v;
    std::cout << "\n";
  }
  if (q.arrows.empty()) {
    std::cout << "arrows: none\n";
  } else {
    std::cout << "arrows:";
    for (const auto& [i, j] : q.arrows)
      std::cout << " S" << (i + 1) << "->S" << (j + 1);
    std::cout << "\n";
  }
  std::cout << "totally disconnected: " << (q.disconnected ? "yes" : "no")
            << "\n";
  std::cout << (q.disconnected
                    ? "FinLen has CSL"
                    : "FinLen does not have CSL (witness available)")
            << "\n";

  if (!dot_out.empty()) write_file(dot_out, cslab::to_dot(q));
  if (!json_out.empty())
    write_file(json_out,
               cslab::dump_report(cslab::quiver_report_json(q, a->label())));
  return kExitConsistent;
}

int run_csl(const std::string& path, std::size_t max_length,
            bool force_exhaustive, const std::string& json_out,
            std::uint64_t guard) {
  cslab::AlgebraPtr a = cslab::load_algebra_file(path);
  cslab::CSLReport report = cslab::csl_check(a, max_length, force_exhaustive, guard);
  std::string text = cslab::dump_report(cslab::csl_report_json(report));
  if (!json_out.empty())
    write_file(json_out, text);
  else
    std::cout << text;
  if (report.guard_limited) {
    std::cerr << "guard-limited: checked up to length " << report.max_length
              << " < " << report.requested_length << "\n";
    return kExitGuardLimited;
  }
  return kExitConsistent;
}

int run_structure(const std::string& path, const std::string& json_out,
                  std::uint64_t guard) {
  cslab::AlgebraPtr a = cslab::load_algebra_file(path);
  cslab::StructureReport report = cslab::semiprimary_structure(a, guard);
  std::string text = cslab::dump_report(cslab::structure_report_json(report));
  if (!json_out.empty())
    write_file(json_out, text);
  else
    std::cout << text;
  return kExitConsistent;
}

int run_subcat(std::uint32_t p, std::size_t n, std::size_t max_dim,
               const std::string& json_out, std::uint64_t guard) {
  cslab::AlgebraPtr lambda = cslab::uniserial_lambda(p, n);
  cslab::QuasiCslReport report = cslab::quasi_csl_check(lambda, max_dim, guard);
  std::string text = cslab::dump_report(cslab::subcat_report_json(report));
  if (!json_out.empty())
    write_file(json_out, text);
  else
    std::cout << text;
  return kExitConsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cslab: Gabriel quivers and the converse of Schur's lemma "
               "over finite-dimensional GF(p)-algebras"};
  app.require_subcommand(1);

  std::uint64_t guard = guard_from_env();

  std::string path, dot_out, json_out;
  std::size_t max_length = 3;
  bool force_exhaustive = false;
  std::uint32_t sub_p = 2;
  std::size_t sub_n = 2, sub_max_dim = 3;

  auto* validate =
      app.add_subcommand("validate", "check an algebra or module file");
  validate->add_option("path", path, "JSON description file")->required();

  auto* quiver =
      app.add_subcommand("quiver", "compute the right Gabriel quiver");
  quiver->add_option("path", path, "algebra file")->required();
  quiver->add_option("--dot", dot_out, "write DOT output here");
  quiver->add_option("--json", json_out, "write the JSON report here");
  quiver->add_option("--guard", guard, "enumeration guard");

  auto* csl = app.add_subcommand(
      "csl", "verify the finite-length CSL theorem for an algebra");
  csl->add_option("path", path, "algebra file")->required();
  csl->add_option("--max-length", max_length, "module length bound")
      ->check(CLI::PositiveNumber);
  csl->add_flag("--force-exhaustive", force_exhaustive,
                "enumerate modules even when the quiver is connected");
  csl->add_option("--guard", guard, "enumeration guard");
  csl->add_option("--json", json_out, "write the JSON report here");

  auto* structure = app.add_subcommand(
      "structure", "matrix-rings-over-local-rings decomposition");
  structure->add_option("path", path, "algebra file")->required();
  structure->add_option("--json", json_out, "write the JSON report here");
  structure->add_option("--guard", guard, "enumeration guard");

  auto* subcat = app.add_subcommand(
      "subcat", "quasi-CSL check for S(GF(p)[t]/(t^n))");
  subcat->add_option("--p", sub_p, "field characteristic")->required();
  subcat->add_option("--n", sub_n, "uniserial length")->required();
  subcat->add_option("--max-dim", sub_max_dim, "bound on dim B")->required();
  subcat->add_option("--json", json_out, "write the JSON report here");
  subcat->add_option("--guard", guard, "enumeration guard");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(path);
    if (quiver->parsed()) return run_quiver(path, dot_out, json_out, guard);
    if (csl->parsed())
      return run_csl(path, max_length, force_exhaustive, json_out, guard);
    if (structure->parsed()) return run_structure(path, json_out, guard);
    if (subcat->parsed())
      return run_subcat(sub_p, sub_n, sub_max_dim, json_out, guard);
  } catch (const cslab::GuardExceeded& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return kExitGuardLimited;
  } catch (const cslab::TheoremViolation& e) {
    std::cerr << "internal violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const cslab::ordered_json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitViolation;
}
