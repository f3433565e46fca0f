#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vdw/config.hpp"
#include "vdw/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitVerifyFailed = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Writes to the given path, or stdout when the path is empty.
class CsvSink {
 public:
  explicit CsvSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw vdw::ConfigError("cannot open output path: " + path);
    }
  }
  std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<double> sweep_grid(const vdw::SweepSpec& sweep) {
  std::vector<double> grid;
  const double lo = sweep.min_nm * 1e-9;
  const double hi = sweep.max_nm * 1e-9;
  for (int i = 0; i < sweep.points; ++i) {
    const double t = static_cast<double>(i) / (sweep.points - 1);
    grid.push_back(sweep.log_spacing ? std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo)))
                                     : lo + t * (hi - lo));
  }
  return grid;
}

int cmd_pressure(const vdw::RunConfig& config, int layer, const std::string& csv_path) {
  if (layer < 1 || static_cast<std::size_t>(layer) > config.stack.layers.size())
    throw vdw::ConfigError("--layer must index a stack layer (1-based)");
  const auto result = vdw::pressure_in_layer(config.stack, static_cast<std::size_t>(layer - 1),
                                             config.matsubara, config.quadrature);
  std::cout << "pressure_Pa " << fmt(result.value) << "\n"
            << "n_used " << result.n_used << "\n"
            << "truncation_error_Pa " << fmt(result.truncation_error) << "\n"
            << "quadrature_error_Pa " << fmt(result.quadrature_error) << "\n";
  if (!csv_path.empty()) {
    CsvSink sink(csv_path);
    sink.out() << "z_m_m,pressure_Pa,n_terms,truncation_error_Pa,quadrature_error_Pa\n"
               << fmt(config.stack.layers[layer - 1].thickness) << "," << fmt(result.value)
               << "," << result.n_used << "," << fmt(result.truncation_error) << ","
               << fmt(result.quadrature_error) << "\n";
  }
  return kExitOk;
}

int cmd_sweep(const vdw::RunConfig& config, const std::string& csv_path) {
  if (!config.sweep) throw vdw::ConfigError("config has no sweep section");
  const vdw::SweepSpec& sweep = *config.sweep;
  CsvSink sink(csv_path);
  sink.out() << "z_m_m,pressure_Pa,n_terms,truncation_error_Pa,quadrature_error_Pa\n";
  for (double z : sweep_grid(sweep)) {
    vdw::Stack stack = config.stack;
    stack.layers[sweep.layer].thickness = z;
    const auto result =
        vdw::pressure_in_layer(stack, sweep.layer, config.matsubara, config.quadrature);
    sink.out() << fmt(z) << "," << fmt(result.value) << "," << result.n_used << ","
               << fmt(result.truncation_error) << "," << fmt(result.quadrature_error) << "\n";
  }
  return kExitOk;
}

int cmd_spectrum(const vdw::RunConfig& config, int layer, int n_max,
                 const std::string& csv_path) {
  if (layer < 1 || static_cast<std::size_t>(layer) > config.stack.layers.size())
    throw vdw::ConfigError("--layer must index a stack layer (1-based)");
  const auto result = vdw::pressure_in_layer(config.stack, static_cast<std::size_t>(layer - 1),
                                             config.matsubara, config.quadrature,
                                             /*record_per_n=*/true);
  CsvSink sink(csv_path);
  sink.out() << "n,xi_rad_per_s,contribution_Pa\n";
  for (const auto& term : *result.per_n) {
    if (n_max >= 0 && term.n > n_max) break;
    sink.out() << term.n << "," << fmt(term.xi) << "," << fmt(term.contribution) << "\n";
  }
  return kExitOk;
}

int cmd_material(const vdw::RunConfig& config, const std::string& name, int points,
                 const std::string& csv_path) {
  auto it = config.materials.find(name);
  if (it == config.materials.end())
    throw vdw::ConfigError("unknown material '" + name + "'");
  const vdw::MaterialModel& mat = it->second;
  CsvSink sink(csv_path);
  sink.out() << "xi_rad_per_s,epsilon,mu\n";
  std::vector<double> grid;
  if (!mat.diverges_at_zero()) grid.push_back(0.0);
  const double lo = 1e13, hi = 1e18;
  const int n = points - static_cast<int>(grid.size());
  for (int i = 0; i < n; ++i) {
    const double t = n > 1 ? static_cast<double>(i) / (n - 1) : 0.0;
    grid.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
  }
  for (double xi : grid)
    sink.out() << fmt(xi) << "," << fmt(mat.permittivity(xi)) << ","
               << fmt(mat.permeability(xi)) << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& csv_path) {
  std::vector<vdw::VerificationReport> reports;
  auto want = [&](const std::string& name) { return suite == "all" || suite == name; };
  if (want("reduction")) reports.push_back(vdw::check_reduction_chain(seed));
  if (want("fd")) reports.push_back(vdw::check_finite_difference(seed));
  if (want("gap")) reports.push_back(vdw::check_gap_derivative(seed));
  if (want("dlp")) reports.push_back(vdw::check_dlp_equivalence(seed));
  if (want("hamaker")) reports.push_back(vdw::check_hamaker_limit(seed));
  if (want("idealmetal")) reports.push_back(vdw::check_ideal_metal());
  if (reports.empty()) throw vdw::ConfigError("unknown suite '" + suite + "'");

  bool all_pass = true;
  for (const auto& report : reports) {
    std::cout << vdw::format_report(report);
    all_pass = all_pass && report.overall;
  }
  if (!csv_path.empty()) {
    CsvSink sink(csv_path);
    sink.out() << "suite,seed,description,expected,actual,relative_error,tolerance,pass\n";
    for (const auto& report : reports)
      for (const auto& c : report.cases)
        sink.out() << report.suite << "," << report.seed << ",\"" << c.description << "\","
                   << fmt(c.expected) << "," << fmt(c.actual) << "," << fmt(c.relative_error)
                   << "," << fmt(c.tolerance) << "," << (c.pass ? 1 : 0) << "\n";
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"van der Waals / Casimir pressure in planar multilayer stacks"};
  app.require_subcommand(1);

  std::string config_path;
  std::string csv_path;
  std::string suite = "all";
  std::string material_name;
  int layer = 1;
  int n_max = -1;
  int points = 50;
  std::uint64_t seed = 12345;

  auto* pressure = app.add_subcommand("pressure", "pressure in one layer of the stack");
  pressure->add_option("--config", config_path)->required();
  pressure->add_option("--layer", layer, "1-based layer index");
  pressure->add_option("--csv", csv_path, "also write a one-row CSV");

  auto* sweep = app.add_subcommand("sweep", "pressure over a thickness grid, as CSV");
  sweep->add_option("--config", config_path)->required();
  sweep->add_option("--csv", csv_path, "output path (default stdout)");

  auto* spectrum = app.add_subcommand("spectrum", "per-Matsubara-term contributions, as CSV");
  spectrum->add_option("--config", config_path)->required();
  spectrum->add_option("--layer", layer, "1-based layer index");
  spectrum->add_option("--n-max", n_max, "emit terms up to this index (default: all used)");
  spectrum->add_option("--csv", csv_path, "output path (default stdout)");

  auto* material = app.add_subcommand("material", "tabulate eps(i xi), mu(i xi) as CSV");
  material->add_option("--config", config_path)->required();
  material->add_option("--name", material_name)->required();
  material->add_option("--points", points, "number of grid rows");
  material->add_option("--csv", csv_path, "output path (default stdout)");

  auto* verify = app.add_subcommand("verify", "run oracle verification suites");
  verify->add_option("--suite", suite, "all|fd|gap|dlp|hamaker|idealmetal|reduction");
  verify->add_option("--seed", seed);
  verify->add_option("--csv", csv_path, "machine-readable report path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) return cmd_verify(suite, seed, csv_path);
    const vdw::RunConfig config = vdw::parse_config(config_path);
    if (pressure->parsed()) return cmd_pressure(config, layer, csv_path);
    if (sweep->parsed()) return cmd_sweep(config, csv_path);
    if (spectrum->parsed()) return cmd_spectrum(config, layer, n_max, csv_path);
    if (material->parsed()) return cmd_material(config, material_name, points, csv_path);
  } catch (const vdw::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const vdw::QuadratureError& e) {
    std::cerr << "numerical error: " << e.what() << " (partial " << e.partial_value
              << ", error estimate " << e.error_estimate << ")\n";
    return kExitNumerical;
  } catch (const vdw::SeriesTruncationError& e) {
    std::cerr << "numerical error: " << e.what() << " (partial " << e.partial_value << " after "
              << e.n_terms << " terms)\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitOk;
}
