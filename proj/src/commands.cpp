#include "eorlicz/commands.hpp"

#include "eorlicz/report_json.hpp"
#include "eorlicz/specfile.hpp"

namespace eorlicz {

namespace {

CommandResult input_error(const std::string& message) {
  Json j;
  j["error"] = message;
  return CommandResult{3, render(j)};
}

}  // namespace

CommandResult cmd_classify(const std::string& spec_path) {
  SpecFile spec;
  try {
    spec = load_spec_file(spec_path);
    if (!spec.has_t_samples) {
      throw SpecError("classify needs \"t_samples\" in the spec file");
    }
  } catch (const SpecError& err) {
    return input_error(err.what());
  }
  ClassificationReport report =
      classify(spec.phi, spec.e_t, spec.e_u, spec.p, spec.config);

  Json j = json_of(report);
  Json requested = Json::array();
  for (EClass c : spec.requested_classes) requested.push_back(to_string(c));
  j["requested_classes"] = requested;

  bool any_refuted = false, any_inconclusive = false;
  for (EClass c : spec.requested_classes) {
    Status s = report.class_status(c);
    if (s == Status::kRefuted) any_refuted = true;
    if (s == Status::kInconclusive) any_inconclusive = true;
  }
  int exit_code = any_refuted ? 1 : any_inconclusive ? 2 : 0;
  return CommandResult{exit_code, render(j)};
}

CommandResult cmd_norm(const std::string& spec_path, const std::string& data_path, double tol) {
  SpecFile spec;
  NormResult result;
  try {
    spec = load_spec_file(spec_path);
    if (!spec.omega) throw SpecError("norm needs \"omega\" in the spec file");
    GridFunction f = load_grid_csv(data_path, *spec.omega);
    result = luxemburg_norm(spec.composed(), *spec.omega, f, tol);
  } catch (const SpecError& err) {
    return input_error(err.what());
  } catch (const PreconditionError& err) {
    return input_error(err.what());
  } catch (const EvalError& err) {
    return input_error(err.what());
  }
  Json j = json_of(result, spec.config);
  return CommandResult{result.value.is_inf() ? 1 : 0, render(j)};
}

CommandResult cmd_sobolev(const std::string& spec_path, const std::string& data_path, int order,
                          double tol) {
  SpecFile spec;
  SobolevResult result;
  try {
    spec = load_spec_file(spec_path);
    if (!spec.omega) throw SpecError("sobolev needs \"omega\" in the spec file");
    GridFunction f = load_grid_csv(data_path, *spec.omega);
    SobolevSpec sobolev_spec(order, spec.composed(), *spec.omega);
    result = sobolev_norm(sobolev_spec, f, tol);
  } catch (const SpecError& err) {
    return input_error(err.what());
  } catch (const PreconditionError& err) {
    return input_error(err.what());
  } catch (const EvalError& err) {
    return input_error(err.what());
  }
  Json j = json_of(result, order, spec.config);
  return CommandResult{result.value.is_inf() ? 1 : 0, render(j)};
}

CommandResult cmd_catalog(const std::optional<std::string>& fixture) {
  if (fixture) {
    const Fixture* fx = nullptr;
    try {
      fx = &find_fixture(*fixture);
    } catch (const std::out_of_range& err) {
      return input_error(err.what());
    }
    FixtureReport report = run_fixture(*fx);
    bool ok = report.status == FixtureStatus::kConfirmed ||
              (report.status == FixtureStatus::kDisputed && report.expected_dispute);
    return CommandResult{ok ? 0 : 1, render(json_of(report, /*include_details=*/true))};
  }
  CatalogReport report = run_all();
  bool ok = report.summary.disputes_expected && report.summary.inconclusive.empty();
  return CommandResult{ok ? 0 : 1, render(json_of(report))};
}

}  // namespace eorlicz
