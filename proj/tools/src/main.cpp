// Copyright 2026 The g41 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "g41/algebra.hpp"
#include "g41/dirac.hpp"
#include "g41/errors.hpp"
#include "g41/field.hpp"
#include "g41/frames.hpp"
#include "g41/matrix_rep.hpp"
#include "g41/monogenic.hpp"
#include "g41/multivector_io.hpp"
#include "g41/projectors.hpp"
#include "g41/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

using nlohmann::ordered_json;

double parse_real(const std::string& text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw g41::UsageError("malformed number '" + text + "'");
  }
  return value;
}

std::vector<double> parse_reals(const std::vector<std::string>& args) {
  std::vector<double> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(parse_real(a));
  return out;
}

/// "E p1 p2 p3 m" or "p1 p2 p3 m".
g41::MomentumVector parse_momentum(const std::vector<std::string>& args) {
  const auto v = parse_reals(args);
  try {
    if (v.size() == 4) return g41::MomentumVector::from_momentum({v[0], v[1], v[2]}, v[3]);
    if (v.size() == 5) return g41::MomentumVector::from_components(v[0], {v[1], v[2], v[3]}, v[4]);
  } catch (const g41::ContractViolation& e) {
    throw g41::UsageError(e.what());
  }
  throw g41::UsageError("expected 'p1 p2 p3 m' or 'E p1 p2 p3 m'");
}

std::string blade_cell(g41::BladeProduct p) {
  const std::string name = g41::blade_name(p.blade);
  return (p.sign < 0 ? "-" : "") + name;
}

int run_table() {
  std::cout << "product table (row * column)\n";
  std::cout << "*";
  for (unsigned b = 0; b < g41::kBlades; ++b) std::cout << '\t' << g41::blade_name(g41::BladeIndex(b));
  std::cout << '\n';
  for (unsigned a = 0; a < g41::kBlades; ++a) {
    std::cout << g41::blade_name(g41::BladeIndex(a));
    for (unsigned b = 0; b < g41::kBlades; ++b) {
      std::cout << '\t' << blade_cell(g41::blade_product(g41::BladeIndex(a), g41::BladeIndex(b)));
    }
    std::cout << '\n';
  }
  for (int alpha = 0; alpha < g41::kGenerators; ++alpha) {
    std::cout << "\nsigma^" << alpha << "\n" << to_string(g41::sigma_matrix(alpha)) << "\n";
  }
  return kExitPass;
}

int run_planewave(const std::vector<std::string>& args, double step_h, int grid, double spacing) {
  if (!(step_h > 0.0)) throw g41::UsageError("--step-h must be positive");
  const g41::MomentumVector k = parse_momentum(args);
  const g41::MultivectorField psi = g41::plane_wave(k);
  std::vector<g41::Point5> points;
  for (int j = 0; j < grid; ++j) {
    const double s = spacing * j;
    points.emplace_back(s, 0.5 * s, -0.25 * s, 0.75 * s, -0.5 * s);
  }
  const g41::Point5 origin{};
  const double analytic = g41::monogenic_residual(psi, points, g41::Differentiation::analytic());
  const double numeric = g41::monogenic_residual(psi, points, g41::Differentiation::richardson(step_h));
  double harmonic = 0.0;
  for (const auto& x : points) {
    harmonic = std::max(harmonic, g41::magnitude(g41::laplacian(psi, x, g41::Differentiation::richardson(step_h))));
  }
  std::cout << "E = " << g41::format_real(k.energy()) << "\n";
  std::cout << "psi0 = " << g41::to_string(g41::plane_wave_amplitude(k)) << "\n";
  std::cout << "null_defect = " << g41::format_real(k.null_defect()) << "\n";
  std::cout << "monogenic_residual = " << g41::format_real(analytic) << "\n";
  std::cout << "numeric_residual = " << g41::format_real(numeric) << "\n";
  std::cout << "laplacian_residual = " << g41::format_real(harmonic) << "\n";
  std::cout << "grid\n" << g41::format_grid(psi, points);
  (void)origin;
  return analytic <= 1e-10 ? kExitPass : kExitFail;
}

int run_eigen(const std::vector<std::string>& args) {
  const g41::MomentumVector k = parse_momentum(args);
  const g41::DiracSystem s = g41::dirac_system(k);
  const std::vector<g41::Point5> points = {{0, 0, 0, 0, 0}, {0.3, -0.2, 0.5, 0.1, 0.0}, {1, 1, -1, 0.5, 0}};
  const g41::CrosscheckReport cross = g41::geometric_matrix_crosscheck(k, points);
  std::cout << "A_bar\n" << to_string(s.a_bar) << "\n\npsi_bar\n" << to_string(s.psi_bar) << "\n\nLambda\n"
            << to_string(s.lambda) << "\n\n";
  ordered_json report;
  report["energy"] = k.energy();
  report["eigenvalues"] = s.eigenvalues;
  report["eigen_equation_residual"] = g41::eigen_equation_residual(s);
  report["reconstruction_residual"] = g41::reconstruction_residual(s);
  report["unitarity_residual"] = g41::max_abs(g41::adjoint(s.psi_bar) * s.psi_bar - g41::ComplexMatrix4::identity());
  report["crosscheck_residual"] = cross.residual();
  std::cout << report.dump(2) << "\n";
  const bool ok = g41::eigen_equation_residual(s) <= 1e-10 && g41::reconstruction_residual(s) <= 1e-10 &&
                  cross.residual() <= 1e-10;
  return ok ? kExitPass : kExitFail;
}

void print_set(const char* label, const g41::IdempotentSet& set) {
  std::cout << label << "\n";
  for (int i = 0; i < 4; ++i) std::cout << "  " << i + 1 << ": " << g41::to_string(set.elements[i]) << "\n";
}

int run_projectors() {
  const auto f = g41::build_f_set();
  const auto e = g41::build_e_set();
  print_set("f-set", f);
  print_set("e-set", e);
  const g41::Su4Report report = g41::verify_su4_generators();
  ordered_json doc;
  doc["f_set_defect"] = g41::idempotent_defects(f).worst();
  doc["e_set_defect"] = g41::idempotent_defects(e).worst();
  doc["f_set_permutation"] = g41::diagonalizing_permutation(f);
  doc["ok"] = report.ok();
  doc["worst_ratio"] = report.worst_ratio();
  ordered_json findings = ordered_json::array();
  for (const auto& finding : report.findings) {
    findings.push_back({{"name", finding.name},
                        {"residual", finding.residual},
                        {"tolerance", finding.tolerance},
                        {"passed", finding.passed()}});
  }
  doc["findings"] = std::move(findings);
  std::cout << doc.dump(2) << "\n";
  return report.ok() ? kExitPass : kExitFail;
}

g41::Matrix5 components(const g41::Frame& frame) {
  g41::Matrix5 n{};
  for (int alpha = 0; alpha < g41::kGenerators; ++alpha) {
    for (int beta = 0; beta < g41::kGenerators; ++beta) n[beta][alpha] = frame.vectors[alpha].coeff(1u << beta);
  }
  return n;
}

int run_frame(const std::vector<std::string>& args, const std::vector<std::string>& potential, double charge,
              double mass) {
  g41::Frame frame;
  g41::Matrix5 n = g41::identity5();
  if (!potential.empty()) {
    if (!args.empty()) throw g41::UsageError("give either a refractive index or --potential, not both");
    const auto a = parse_reals(potential);
    if (a.size() != 4) throw g41::UsageError("--potential needs four components");
    if (mass == 0.0) throw g41::UsageError("--mass must be non-zero");
    const auto field = g41::GaugeField::constant({a[0], a[1], a[2], a[3]}, charge, mass);
    frame = g41::em_frame(field, g41::Point5{});
    n = components(frame);
  } else {
    if (!args.empty()) {
      const auto v = parse_reals(args);
      if (v.size() != 25) throw g41::UsageError("refractive index needs 25 entries n[beta][alpha], row-major");
      for (int r = 0; r < g41::kGenerators; ++r) {
        for (int c = 0; c < g41::kGenerators; ++c) n[r][c] = v[r * g41::kGenerators + c];
      }
    }
    frame = g41::build_frame(g41::RefractiveIndex::constant(n), g41::Point5{});
  }
  std::cout << g41::frame_to_json(frame, n);
  return g41::frame_duality_residual(frame) <= 1e-10 ? kExitPass : kExitFail;
}

std::pair<std::string, double> parse_tolerance(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw g41::UsageError("--tolerance expects name=value, got '" + text + "'");
  return {text.substr(0, eq), parse_real(text.substr(eq + 1))};
}

int run_verify(g41::RunConfig config, const std::vector<std::string>& tolerances, const std::vector<std::string>& checks,
               bool list) {
  if (list) {
    std::cout << g41::format_registry();
    return kExitPass;
  }
  for (const auto& t : tolerances) config.tolerance_overrides.insert_or_assign(parse_tolerance(t).first,
                                                                               parse_tolerance(t).second);
  if (!checks.empty()) config.selected_checks = checks;
  const auto results = g41::run_suite(config);
  if (config.output == g41::OutputFormat::json) {
    std::cout << g41::format_json(config, results);
  } else {
    std::cout << g41::format_text(results);
  }
  return g41::exit_code(results);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric algebra G(4,1) verification toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(g41::kVersion));

  g41::RunConfig config;
  std::vector<std::string> tolerances;
  std::vector<std::string> checks;
  bool list = false;
  std::string output = "text";
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--seed", config.seed, "Seed for all random sampling");
  verify->add_option("--tolerance", tolerances, "Override a check tolerance, name=value (repeatable)");
  verify->add_option("--step-h", config.step_h, "Finite-difference step");
  verify->add_option("--check", checks, "Run only the named check (repeatable)");
  verify->add_flag("--list", list, "List registered checks and exit");
  verify->add_option("--output", output, "Report format")->check(CLI::IsMember({"text", "json"}));

  auto* table = app.add_subcommand("table", "Print the blade product table and the sigma matrices");

  std::vector<std::string> numbers;
  double step_h = g41::kDefaultStep;
  int grid = 5;
  double spacing = 0.25;
  auto* planewave = app.add_subcommand("planewave", "Plane wave for 'E p1 p2 p3 m' or 'p1 p2 p3 m'");
  planewave->add_option("values", numbers, "Momentum components")->expected(4, 5)->required();
  planewave->add_option("--step-h", step_h, "Finite-difference step");
  planewave->add_option("--grid", grid, "Number of grid rows to dump")->check(CLI::Range(0, 10000));
  planewave->add_option("--spacing", spacing, "Grid spacing along the sampling line");

  auto* eigen = app.add_subcommand("eigen", "Dirac operator eigensystem for 'E p1 p2 p3 m' or 'p1 p2 p3 m'");
  eigen->add_option("values", numbers, "Momentum components")->expected(4, 5)->required();

  auto* projectors = app.add_subcommand("projectors", "Idempotent sets and the SU(4) generator report");

  std::vector<std::string> potential;
  double charge = -1.0;
  double mass = 1.0;
  auto* frame = app.add_subcommand("frame", "Frame dump for a refractive index or an electromagnetic potential");
  frame->add_option("n", numbers, "25 entries n[beta][alpha], row-major (default identity)");
  frame->add_option("--potential", potential, "A_0 A_1 A_2 A_3")->expected(4);
  frame->add_option("--charge", charge, "Charge density q");
  frame->add_option("--mass", mass, "Mass density m");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*verify) {
      config.output = output == "json" ? g41::OutputFormat::json : g41::OutputFormat::text;
      return run_verify(config, tolerances, checks, list);
    }
    if (*table) return run_table();
    if (*planewave) return run_planewave(numbers, step_h, grid, spacing);
    if (*eigen) return run_eigen(numbers);
    if (*projectors) return run_projectors();
    if (*frame) return run_frame(numbers, potential, charge, mass);
  } catch (const g41::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
