// vmrt: batch front end for the line-family verification suite.
//
//   vmrt verify <spec> [--seed N] [--samples N] [--checks a,b] [--jobs N] [--out FILE] [--format json|text]
//   vmrt info <spec>
//   vmrt build-omega <spec> [--seed N] [--out FILE]
//   vmrt sample-line <spec> [--seed N]
//
// <spec> is a variety spec JSON file or builtin:<name>.
// Exit codes: 0 pass, 1 check failure, 2 bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "vmrt/compactification.hpp"
#include "vmrt/family.hpp"
#include "vmrt/omega_builder.hpp"
#include "vmrt/spec_io.hpp"
#include "vmrt/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitBadInput = 2;

struct Common {
  std::string spec;
  std::uint64_t seed = 42;
  std::string out;
  std::string format = "json";
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw vmrt::ParseError("cannot write '" + path + "'");
  file << text;
}

vmrt::OmegaForm omega_for(const vmrt::VarietySpec& spec, std::uint64_t seed) {
  if (spec.omega) return *spec.omega;
  vmrt::OmegaBuildOptions options;
  options.seed = seed;
  return vmrt::build_omega(*spec.chart, options).omega;
}

int cmd_verify(const Common& c, const vmrt::VerifyOptions& options, bool timing) {
  const vmrt::VarietySpec spec = vmrt::load_variety_spec(c.spec);
  const vmrt::VerificationReport report = vmrt::run_verification(spec, options);
  if (c.format == "text") {
    emit(vmrt::report_to_text(report), c.out);
  } else {
    emit(vmrt::report_to_json(report, timing), c.out);
  }
  return report.passed() ? 0 : kExitFailure;
}

int cmd_info(const Common& c) {
  const vmrt::VarietySpec spec = vmrt::load_variety_spec(c.spec);
  const vmrt::VarietyChart& chart = *spec.chart;
  const std::size_t dim_w = chart.ambient_dim();
  const std::size_t d = chart.param_dim();
  const std::size_t lambda2 = vmrt::pair_count(dim_w);
  const vmrt::OmegaForm omega = omega_for(spec, c.seed);
  const std::size_t n = omega.dim_g();
  if (c.format == "text") {
    std::ostringstream out;
    out << chart.label() << "\n"
        << "dimW          " << dim_w << "\n"
        << "d             " << d << "\n"
        << "dimLambda2W   " << lambda2 << "\n"
        << "dimU          " << omega.dim_u() << (spec.omega ? " (explicit)" : " (built)") << "\n"
        << "n             " << n << "\n"
        << "familyDim     " << n - 1 + d << " (predicted)\n";
    emit(out.str(), c.out);
    return 0;
  }
  nlohmann::ordered_json doc;
  doc["label"] = chart.label();
  doc["dimW"] = dim_w;
  doc["d"] = d;
  doc["dimLambda2W"] = lambda2;
  doc["dimU"] = omega.dim_u();
  doc["omegaSource"] = spec.omega ? "explicit" : "built";
  doc["n"] = n;
  doc["predictedFamilyDim"] = n - 1 + d;
  emit(doc.dump(2) + "\n", c.out);
  return 0;
}

int cmd_build_omega(const Common& c) {
  const vmrt::VarietySpec spec = vmrt::load_variety_spec(c.spec);
  vmrt::OmegaBuildOptions options;
  options.seed = c.seed;
  const vmrt::OmegaConstruction construction = vmrt::build_omega(*spec.chart, options);
  emit(vmrt::construction_to_json(construction) + "\n", c.out);
  return 0;
}

nlohmann::ordered_json strings(const vmrt::Vec& v) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& x : v) out.push_back(vmrt::to_string(x));
  return out;
}

int cmd_sample_line(const Common& c) {
  const vmrt::VarietySpec spec = vmrt::load_variety_spec(c.spec);
  const vmrt::OmegaForm omega = omega_for(spec, c.seed);
  const vmrt::VarietyChart& chart = *spec.chart;
  vmrt::SampleStream stream(vmrt::sample_seed(c.seed, "sample-line", 0));
  vmrt::Vec p = stream.next_vector(chart.param_dim());
  while (!vmrt::frame_is_nondegenerate(chart, p)) p = stream.next_vector(chart.param_dim());
  const vmrt::GroupElement x = vmrt::unflatten(omega, stream.next_vector(omega.dim_g()));

  const vmrt::LineFamily family(omega, spec.chart);
  const vmrt::HorizontalLine line = vmrt::line_through(omega, x, chart.lift(p));
  const vmrt::PlueckerLine plane = vmrt::plucker_embed(omega, line);
  const vmrt::GrassmannChart g = vmrt::GrassmannChart::primary_for(plane);

  nlohmann::ordered_json doc;
  doc["label"] = chart.label();
  doc["seed"] = c.seed;
  doc["p"] = strings(p);
  doc["x"] = {{"w", strings(x.w)}, {"u", strings(x.u)}};
  doc["direction"] = strings(line.direction);
  doc["base"] = {{"w", strings(line.base.w)}, {"u", strings(line.base.u)}};
  doc["pluecker"] = strings(plane.pluecker);
  doc["grassmannChart"] = {g.pivot_a(), g.pivot_b()};
  doc["chartCoordinates"] = strings(family.chart_coordinates(g, p, x));
  doc["boundaryPoint"] = strings(vmrt::boundary_point(omega, line));
  try {
    const auto b = std::get<vmrt::BoundaryPoint>(vmrt::mu_hat(omega, vmrt::OnSection{spec.chart, line}));
    doc["boundaryCoset"] = {{"w", strings(b.coset.w)}, {"u", strings(b.coset.u)}};
  } catch (const vmrt::DirectionNotOnChart&) {
    doc["boundaryCoset"] = nullptr;
  }
  if (c.format == "text") {
    std::ostringstream out;
    for (const auto& [key, value] : doc.items()) out << key << ": " << value.dump() << "\n";
    emit(out.str(), c.out);
  } else {
    emit(doc.dump(2) + "\n", c.out);
  }
  return 0;
}

void add_common(CLI::App* cmd, Common& c, bool with_seed) {
  cmd->add_option("spec", c.spec, "variety spec JSON file or builtin:<name>")->required();
  if (with_seed) cmd->add_option("--seed", c.seed, "deterministic sample seed")->capture_default_str();
  cmd->add_option("--out", c.out, "write output to this file instead of stdout");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of line families in metabelian groups"};
  app.require_subcommand(1);
  std::string builtins;
  for (const auto& name : vmrt::builtin_names()) builtins += " " + name;
  app.footer("builtin fixtures:" + builtins);

  Common common;
  vmrt::VerifyOptions verify_options;
  std::string checks;
  bool timing = false;

  auto* verify = app.add_subcommand("verify", "run the verification suite and emit a report");
  add_common(verify, common, true);
  verify->add_option("--samples", verify_options.samples, "samples per check")->capture_default_str();
  verify->add_option("--checks", checks, "comma-separated subset of checks");
  verify->add_option("--jobs", verify_options.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_flag("--timing", timing, "include wall-clock seconds in the JSON report");

  auto* info = app.add_subcommand("info", "print dimension summary");
  add_common(info, common, true);
  auto* build = app.add_subcommand("build-omega", "construct omega from the tangent planes");
  add_common(build, common, true);
  auto* sample = app.add_subcommand("sample-line", "draw one S-line and print its coordinates");
  add_common(sample, common, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  }

  try {
    if (*verify) {
      verify_options.seed = common.seed;
      std::stringstream list(checks);
      for (std::string name; std::getline(list, name, ',');)
        if (!name.empty()) verify_options.checks.push_back(name);
      return cmd_verify(common, verify_options, timing);
    }
    if (*info) return cmd_info(common);
    if (*build) return cmd_build_omega(common);
    if (*sample) return cmd_sample_line(common);
  } catch (const vmrt::ParseError& e) {
    std::cerr << "vmrt: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "vmrt: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitBadInput;
}
