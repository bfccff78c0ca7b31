// Command-line front end: run, preset, sweep, fit, verify, linear.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "radgas/errors.hpp"
#include "radgas/harness.hpp"

namespace {

int print_summary(const radgas::RunSummary& s) {
  std::printf("%s  digest=%s  steps=%zu  records=%zu  wall=%.1fs\n", s.name.c_str(), s.digest.c_str(), s.steps,
              s.records, s.wall_seconds);
  if (!s.completed) std::printf("  run did not complete: %s\n", s.failure.c_str());
  if (!s.domain_valid) std::printf("  domain-invalid\n");
  for (const auto& c : s.claims) {
    if (!c.error.empty()) {
      std::printf("  %-18s error: %s\n", c.id.c_str(), c.error.c_str());
      continue;
    }
    std::printf("  %-18s slope %+.4f (stderr %.1e, r2 %.6f) theory %+.4f tol %.2f  %s\n", c.id.c_str(), c.fit.slope,
                c.fit.stderr_slope, c.fit.r2, c.fit.theory, c.fit.tolerance, c.passed() ? "ok" : "FAIL");
  }
  for (const auto& m : s.monitors)
    std::printf("  %-22s value %.6g tol %.3g violations %zu  %s%s%s\n", m.name.c_str(), m.value, m.tolerance,
                m.violations, m.passed ? "ok" : "FAIL", m.note.empty() ? "" : "  ", m.note.c_str());
  std::printf("%s\n", s.passed ? "PASS" : "FAIL");
  return s.passed ? 0 : 1;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (!item.empty()) out.push_back(std::stod(item));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pseudo-spectral radiating-gas decay laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "run an experiment from a JSON config");
  run->add_option("--config", config_path, "config file")->required();
  run->add_option("--out", out_dir, "output directory (overrides the config)");

  std::string preset_name;
  auto* preset = app.add_subcommand("preset", "run a canned experiment");
  preset->add_option("name", preset_name, "preset name")->required();
  preset->add_option("--out", out_dir, "output directory");

  std::string plan_path;
  int jobs = 1;
  auto* sweep = app.add_subcommand("sweep", "run a plan of experiments concurrently");
  sweep->add_option("--plan", plan_path, "plan file")->required();
  sweep->add_option("--jobs", jobs, "concurrent runs")->check(CLI::PositiveNumber);

  std::string csv_path;
  std::string quantity;
  double t_lo = 0.0;
  double t_hi = 0.0;
  auto* fit = app.add_subcommand("fit", "fit a power law to one CSV column");
  fit->add_option("--csv", csv_path, "time-series CSV")->required();
  fit->add_option("--quantity", quantity, "column name")->required();
  fit->add_option("--t-lo", t_lo, "window start")->required();
  fit->add_option("--t-hi", t_hi, "window end")->required();

  std::string verify_dir;
  auto* verify = app.add_subcommand("verify", "check every summary in a directory");
  verify->add_option("dir", verify_dir, "directory of summaries")->required();

  int n = 1;
  std::string k_list;
  std::string t_list;
  auto* linear = app.add_subcommand("linear", "tabulate the linear symbol");
  linear->add_option("--n", n, "dimension")->required();
  linear->add_option("--k", k_list, "comma-separated |xi| values")->required();
  linear->add_option("--t", t_list, "comma-separated times")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) {
      auto cfg = radgas::parse_config_file(config_path);
      if (!out_dir.empty()) cfg.output_dir = out_dir;
      return print_summary(radgas::run_experiment(cfg));
    }
    if (*preset) {
      return print_summary(
          radgas::run_preset(preset_name, out_dir.empty() ? std::nullopt : std::optional<std::string>(out_dir)));
    }
    if (*sweep) {
      std::ifstream in(plan_path);
      if (!in) throw radgas::ConfigError("cannot open plan '" + plan_path + "'");
      const auto result = radgas::sweep(radgas::Json::parse(in), jobs);
      std::cout << result.dump(2) << "\n";
      return result.at("passed").get<bool>() ? 0 : 1;
    }
    if (*fit) {
      const auto table = radgas::read_csv(csv_path);
      const auto f = radgas::fit_power_law(table.column("t"), table.column(quantity), t_lo, t_hi);
      std::printf("quantity %s window [%g, %g] samples %zu\nslope %.6f stderr %.3e r2 %.9f\n", quantity.c_str(), t_lo,
                  t_hi, f.samples, f.slope, f.stderr_slope, f.r2);
      return 0;
    }
    if (*verify) {
      const auto r = radgas::verify(verify_dir);
      std::cout << r.report;
      return r.exit_code;
    }
    if (*linear) {
      std::cout << radgas::linear_table(n, parse_list(k_list), parse_list(t_list));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
