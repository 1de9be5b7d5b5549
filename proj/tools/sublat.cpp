// sublat analyze <spec> [--sections lattice,counts,verdicts,series] [--format text|json]
//         [--max-order N] [--max-elements N] [--threads N]
//
// Exit codes: 0 ok, 2 parse or parameter error, 3 bound exceeded,
// 4 internal invariant violation.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sublat/analysis.hpp"
#include "sublat/errors.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitBound = 3;
constexpr int kExitInternal = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattice, classification counts and solvability verdicts for a finite group"};
  app.set_version_flag("--version", "sublat 1.0.0");

  std::string spec_text;
  std::string sections = "lattice,counts,verdicts";
  std::string format = "json";
  sublat::Bounds bounds = sublat::Bounds::from_environment();
  unsigned threads = 1;

  app.require_subcommand(1);
  CLI::App* analyze = app.add_subcommand("analyze", "Analyze one group");
  analyze->add_option("spec", spec_text,
                 "Group: C(n) D(n) S(n) A(n) K4 NM(n,m,t) SL(2,p) PSL(2,p) DP(spec,spec); "
                 "D(n) has order 2n")
      ->required();
  analyze->add_option("--sections", sections, "Comma-separated: lattice,counts,verdicts,series");
  analyze->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--max-order", bounds.max_lattice_order,
                 "Largest group order for lattice enumeration (env SUBLAT_MAX_ORDER)")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--max-elements", bounds.max_elements,
                 "Largest element enumeration (env SUBLAT_MAX_ELEMENTS)")
      ->check(CLI::PositiveNumber);
  analyze->add_option("--threads", threads, "Worker threads for per-class predicates")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    sublat::AnalysisRequest request;
    request.spec = sublat::parse_spec(spec_text);
    request.sections = sublat::parse_sections(sections);
    request.format = format == "text" ? sublat::ReportFormat::Text : sublat::ReportFormat::Json;
    request.bounds = bounds;
    request.threads = threads;
    request.validate();
    std::cout << sublat::serialize(sublat::analyze(request), request.format);
    return 0;
  } catch (const sublat::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const sublat::ConstraintViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const sublat::BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
