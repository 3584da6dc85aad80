#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "eorlicz/commands.hpp"
#include "eorlicz/parallel.hpp"

namespace {

// Reports land either on stdout or, with --report, in a file written via a
// temporary so readers never see a partial document.
int emit(const eorlicz::CommandResult& result, const std::string& report_path) {
  if (report_path.empty()) {
    std::cout << result.report;
    return result.exit_code;
  }
  std::string tmp = report_path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "cannot write " << tmp << "\n";
      return 3;
    }
    out << result.report;
  }
  if (std::rename(tmp.c_str(), report_path.c_str()) != 0) {
    std::cerr << "cannot move report into place at " << report_path << "\n";
    std::remove(tmp.c_str());
    return 3;
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verifier for composed convex function classes and the "
               "norms they generate"};
  app.require_subcommand(1);

  std::string spec_path, data_path, report_path, fixture_name;
  int order = 0;
  double tol = 1e-10;
  unsigned threads = 1;

  app.add_option("--threads", threads, "internal worker threads (default 1)")
      ->check(CLI::Range(1u, 256u));

  CLI::App* classify = app.add_subcommand("classify", "classify a (phi, E) pair");
  classify->add_option("--spec", spec_path, "problem JSON")->required();
  classify->add_option("--report", report_path, "write the JSON report here");

  CLI::App* norm = app.add_subcommand("norm", "scaling norm of grid data");
  norm->add_option("--spec", spec_path, "problem JSON")->required();
  norm->add_option("--data", data_path, "CSV rows t,value aligned with omega")->required();
  norm->add_option("--tol", tol, "relative bisection tolerance (default 1e-10)");
  norm->add_option("--report", report_path, "write the JSON report here");

  CLI::App* sobolev = app.add_subcommand("sobolev", "derivative-order norm of grid data");
  sobolev->add_option("--spec", spec_path, "problem JSON")->required();
  sobolev->add_option("--data", data_path, "CSV rows t,value aligned with omega")->required();
  sobolev->add_option("--order", order, "highest derivative order k")->required();
  sobolev->add_option("--tol", tol, "relative bisection tolerance (default 1e-10)");
  sobolev->add_option("--report", report_path, "write the JSON report here");

  CLI::App* catalog = app.add_subcommand("catalog", "run the built-in example fixtures");
  catalog->add_option("--fixture", fixture_name, "run one fixture with full detail");
  catalog->add_option("--report", report_path, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  eorlicz::set_max_threads(threads);

  eorlicz::CommandResult result;
  if (classify->parsed()) {
    result = eorlicz::cmd_classify(spec_path);
  } else if (norm->parsed()) {
    result = eorlicz::cmd_norm(spec_path, data_path, tol);
  } else if (sobolev->parsed()) {
    result = eorlicz::cmd_sobolev(spec_path, data_path, order, tol);
  } else {
    std::optional<std::string> fixture;
    if (!fixture_name.empty()) fixture = fixture_name;
    result = eorlicz::cmd_catalog(fixture);
  }
  return emit(result, report_path);
}
