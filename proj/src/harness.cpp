#include "radgas/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "radgas/errors.hpp"
#include "radgas/norms.hpp"

namespace radgas {

namespace fs = std::filesystem;

namespace {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::one_sided_pass: return "one_sided_pass";
    case Verdict::ungated: return "ungated";
  }
  return "ungated";
}

Verdict verdict_of(const std::string& s) {
  if (s == "pass") return Verdict::pass;
  if (s == "one_sided_pass") return Verdict::one_sided_pass;
  if (s == "ungated") return Verdict::ungated;
  if (s == "fail") return Verdict::fail;
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string gate_label(Gate g) {
  switch (g) {
    case Gate::two_sided: return "two_sided";
    case Gate::one_sided: return "one_sided";
    case Gate::none: return "none";
  }
  return "none";
}

Gate gate_of(const std::string& s) {
  if (s == "two_sided") return Gate::two_sided;
  if (s == "one_sided") return Gate::one_sided;
  if (s == "none") return Gate::none;
  throw std::invalid_argument("unknown gate '" + s + "'");
}

// JSON cannot hold inf/nan; they travel as strings.
Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double number_of(const Json& j) {
  if (j.is_number()) return j.get<double>();
  const auto s = j.get<std::string>();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  throw std::invalid_argument("not a number: " + s);
}

double spectral_distance(const SpectralField& a, const SpectralField& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::norm(a.coeffs[i] - b.coeffs[i]);
  return std::sqrt(acc * a.grid->mode_weight());
}

double linear_oracle_error(const SpectralField& u_hat, const SpectralField& u0_hat, double t) {
  const SpectralField exact = linear_exact(u0_hat, t);
  double err = 0.0;
  double scale = 0.0;
  for (std::size_t i = 0; i < u_hat.size(); ++i) {
    err = std::max(err, std::abs(u_hat.coeffs[i] - exact.coeffs[i]));
    scale = std::max(scale, std::abs(exact.coeffs[i]));
  }
  return scale > 0.0 ? err / scale : err;
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
}

void write_outputs(const ExperimentConfig& cfg, const NormSeries& series, const RunSummary& summary) {
  const fs::path dir(cfg.output_dir);
  fs::create_directories(dir);
  write_series_csv(series, (dir / (cfg.name + ".csv")).string());
  write_text(dir / (cfg.name + ".summary.json"), summary_to_json(summary).dump(2) + "\n");
}

void finish(RunSummary& s) {
  bool ok = s.completed && s.domain_valid;
  for (const auto& m : s.monitors) ok = ok && m.passed;
  for (const auto& c : s.claims) ok = ok && c.passed();
  s.passed = ok;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool ClaimResult::passed() const {
  return error.empty() && fit.verdict != Verdict::fail;
}

RealField build_initial(const ExperimentConfig& cfg) {
  const auto grid = make_grid(cfg.dim, cfg.points, cfg.length);
  RealField u = [&] {
    switch (cfg.init.kind) {
      case InitSpec::Kind::gaussian:
        return gaussian_bump(grid, cfg.init.gaussian);
      case InitSpec::Kind::dipole:
        return dipole(grid, cfg.init.dipole);
      case InitSpec::Kind::spectral_profile:
        return spectral_profile(grid, cfg.init.profile);
    }
    throw std::invalid_argument("unknown init kind");
  }();
  if (cfg.init.rescale) u = rescale_to(u, *cfg.init.rescale);
  return u;
}

Simulation simulate(const ExperimentConfig& cfg) {
  Simulation sim;
  const RealField u0 = build_initial(cfg);
  sim.u0_hat = forward_transform(u0);
  sim.series.dim = cfg.dim;
  sim.series.request = cfg.norms;
  const auto start = std::chrono::steady_clock::now();

  auto recorder = [&](double t, const SpectralField& u_hat) {
    sim.series.records.push_back(record_norms(u_hat, t, cfg.norms));
    sim.t_reached = t;
    if (cfg.monitors.linear_oracle)
      sim.linear_oracle_error = std::max(sim.linear_oracle_error, linear_oracle_error(u_hat, sim.u0_hat, t));
  };
  try {
    const Trajectory traj = integrate(u0, cfg.scheme, cfg.flux, recorder);
    sim.steps = traj.steps;
  } catch (const BlowUpError& e) {
    sim.completed = false;
    sim.failure = "blow-up at t=" + format_double(e.time()) + ": " + e.what();
  } catch (const WallTimeExceeded& e) {
    sim.completed = false;
    sim.failure = "wall-time budget exceeded at t=" + format_double(e.time());
  }
  sim.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return sim;
}

RunSummary evaluate(const ExperimentConfig& cfg, const Simulation& sim) {
  RunSummary s;
  s.name = cfg.name;
  s.digest = config_digest(cfg);
  s.config = emit_config(cfg);
  s.completed = sim.completed;
  s.failure = sim.failure;
  s.t_reached = sim.t_reached;
  s.steps = sim.steps;
  s.records = sim.series.records.size();
  s.wall_seconds = sim.wall_seconds;
  const auto& series = sim.series;

  const bool check_boundary = cfg.monitors.boundary.value_or(cfg.init.kind != InitSpec::Kind::spectral_profile);
  const ValidityReport validity = conservation_and_validity(series, check_boundary);
  s.domain_valid = validity.domain_valid;
  for (const auto& m : {validity.mass, validity.spectrum, validity.l1, validity.boundary, validity.splitting})
    s.monitors.push_back(m);

  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      s.monitors.push_back(fn());
    } catch (const std::invalid_argument& e) {
      MonitorReport rep;
      rep.name = name;
      rep.note = std::string("not evaluated: ") + e.what();
      s.monitors.push_back(rep);
    }
  };
  for (int l : cfg.norms.monitor_l) {
    if (cfg.monitors.lyapunov) guarded("lyapunov", [&] { return lyapunov_monitor(series, l); });
    if (cfg.monitors.dissipation) guarded("dissipation", [&] { return dissipation_monitor(series, l); });
  }
  if (cfg.monitors.weighted && !series.records.empty())
    for (int l : cfg.norms.monitor_l)
      guarded("weighted_l" + std::to_string(l),
              [&] { return weighted_inequality_monitor(series, l, series.records.front().l1); });
  if (cfg.norms.budget_order > 0 && !series.records.empty())
    s.monitors.push_back(energy_budget(series, cfg.norms.budget_order, std::sqrt(series.records.front().hn_u_sq),
                                       cfg.monitors.energy_budget));
  for (double sv : cfg.monitors.negative_energy_s)
    s.monitors.push_back(negative_energy_monitor(series, sv, cfg.monitors.eta));
  if (cfg.monitors.linear_oracle) {
    MonitorReport rep;
    rep.name = "linear_oracle";
    rep.value = sim.linear_oracle_error;
    rep.tolerance = cfg.monitors.linear_oracle_tolerance;
    rep.samples = series.records.size();
    rep.passed = rep.value <= rep.tolerance;
    rep.violations = rep.passed ? 0 : 1;
    s.monitors.push_back(rep);
  }

  for (const auto& c : cfg.claims) {
    ClaimResult r;
    r.id = c.id;
    r.type = claim_type_name(c.type);
    r.fit.quantity = default_quantity(c);
    r.fit.gate = c.gate;
    r.fit.tolerance = c.tolerance;
    r.fit.t_lo = c.t_lo.value_or(cfg.default_t_lo());
    r.fit.t_hi = c.t_hi.value_or(cfg.default_t_hi());
    if (!sim.completed) {
      r.error = "run did not complete: " + sim.failure;
    } else if (!s.domain_valid) {
      r.error = "domain-invalid run; fit suppressed";
    } else {
      try {
        double theory = 0.0;
        if (auto e = claim_exponent(c, cfg)) {
          theory = *e;
        } else {
          NormSeries lin;
          lin.dim = series.dim;
          lin.request = series.request;
          for (const auto& rec : series.records)
            lin.records.push_back(record_norms(linear_exact(sim.u0_hat, rec.t), rec.t, series.request));
          theory = fit_power_law(lin.times(), lin.column(r.fit.quantity), r.fit.t_lo, r.fit.t_hi).slope;
        }
        r.fit = fit_decay(series, r.fit.quantity, r.fit.t_lo, r.fit.t_hi, theory, c.tolerance, c.gate);
      } catch (const std::invalid_argument& e) {
        r.error = e.what();
      }
    }
    if (!r.error.empty()) r.fit.verdict = Verdict::fail;
    s.claims.push_back(r);
  }
  finish(s);
  return s;
}

namespace {

RunSummary convergence_study(const ExperimentConfig& cfg, NormSeries& series) {
  const auto& conv = *cfg.convergence;
  const RealField u0 = build_initial(cfg);
  const double dt0 = cfg.scheme.dt_policy.dt;
  auto final_state = [&](Scheme scheme, double dt) {
    SchemeConfig sc = cfg.scheme;
    sc.scheme = scheme;
    sc.dt_policy = DtPolicy::fixed_step(dt);
    sc.record_interval = cfg.scheme.t_final;
    return integrate(u0, sc, cfg.flux, [](double, const SpectralField&) {}).final_state;
  };

  // The finest run of the first scheme doubles as the recorded trajectory.
  ExperimentConfig ref_cfg = cfg;
  ref_cfg.scheme.scheme = conv.schemes.front();
  ref_cfg.scheme.dt_policy = DtPolicy::fixed_step(dt0 / conv.reference_divisor);
  const Simulation sim = simulate(ref_cfg);
  series = sim.series;
  RunSummary s = evaluate(cfg, sim);

  for (Scheme scheme : conv.schemes) {
    MonitorReport rep;
    rep.name = std::string("convergence_order_") + (scheme == Scheme::etdrk4 ? "etdrk4" : "rk4");
    rep.tolerance = conv.min_order;
    try {
      const SpectralField ref = final_state(scheme, dt0 / conv.reference_divisor);
      std::vector<double> log_dt;
      std::vector<double> log_err;
      std::string note;
      for (int k = 0; k < conv.levels; ++k) {
        const double dt = dt0 / std::pow(2.0, k);
        const double err = spectral_distance(final_state(scheme, dt), ref);
        log_dt.push_back(std::log(dt));
        log_err.push_back(std::log(err));
        note += (k ? "; " : "") + std::string("dt=") + format_double(dt) + " err=" + format_double(err);
      }
      double mx = 0.0;
      double my = 0.0;
      for (std::size_t i = 0; i < log_dt.size(); ++i) {
        mx += log_dt[i];
        my += log_err[i];
      }
      mx /= static_cast<double>(log_dt.size());
      my /= static_cast<double>(log_dt.size());
      double sxx = 0.0;
      double sxy = 0.0;
      for (std::size_t i = 0; i < log_dt.size(); ++i) {
        sxx += (log_dt[i] - mx) * (log_dt[i] - mx);
        sxy += (log_dt[i] - mx) * (log_err[i] - my);
      }
      rep.value = sxy / sxx;
      rep.samples = log_dt.size();
      rep.note = note;
      rep.passed = std::isfinite(rep.value) && rep.value >= conv.min_order;
    } catch (const BlowUpError& e) {
      rep.passed = false;
      rep.note = std::string("blow-up: ") + e.what();
    }
    rep.violations = rep.passed ? 0 : 1;
    s.monitors.push_back(rep);
  }
  finish(s);
  return s;
}

}  // namespace

RunSummary run_convergence(const ExperimentConfig& cfg) {
  cfg.validate();
  if (!cfg.convergence) throw std::invalid_argument("config has no convergence block");
  NormSeries series;
  return convergence_study(cfg, series);
}

RunSummary run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  if (cfg.convergence) {
    NormSeries series;
    RunSummary s = convergence_study(cfg, series);
    write_outputs(cfg, series, s);
    return s;
  }
  const Simulation sim = simulate(cfg);
  RunSummary s = evaluate(cfg, sim);
  write_outputs(cfg, sim.series, s);
  return s;
}

RunSummary run_preset(const std::string& name, const std::optional<std::string>& out_dir) {
  ExperimentConfig cfg = preset_config(name);
  if (out_dir) cfg.output_dir = *out_dir;
  return run_experiment(cfg);
}

Json summary_to_json(const RunSummary& s) {
  Json claims = Json::array();
  for (const auto& c : s.claims) {
    claims.push_back({{"id", c.id},
                      {"type", c.type},
                      {"quantity", c.fit.quantity},
                      {"t_lo", number(c.fit.t_lo)},
                      {"t_hi", number(c.fit.t_hi)},
                      {"samples", c.fit.samples},
                      {"slope", number(c.fit.slope)},
                      {"stderr", number(c.fit.stderr_slope)},
                      {"r2", number(c.fit.r2)},
                      {"theory", number(c.fit.theory)},
                      {"tolerance", number(c.fit.tolerance)},
                      {"gate", gate_label(c.fit.gate)},
                      {"verdict", verdict_name(c.fit.verdict)},
                      {"error", c.error}});
  }
  Json monitors = Json::array();
  for (const auto& m : s.monitors) {
    monitors.push_back({{"name", m.name},
                        {"value", number(m.value)},
                        {"tolerance", number(m.tolerance)},
                        {"violations", m.violations},
                        {"samples", m.samples},
                        {"passed", m.passed},
                        {"note", m.note}});
  }
  return {{"name", s.name},
          {"digest", s.digest},
          {"config", s.config},
          {"completed", s.completed},
          {"failure", s.failure},
          {"t_reached", number(s.t_reached)},
          {"steps", s.steps},
          {"records", s.records},
          {"domain_valid", s.domain_valid},
          {"claims", claims},
          {"monitors", monitors},
          {"passed", s.passed}};
}

RunSummary summary_from_json(const Json& j) {
  RunSummary s;
  s.name = j.at("name").get<std::string>();
  s.digest = j.at("digest").get<std::string>();
  s.config = j.at("config");
  s.completed = j.at("completed").get<bool>();
  s.failure = j.at("failure").get<std::string>();
  s.t_reached = number_of(j.at("t_reached"));
  s.steps = j.at("steps").get<std::size_t>();
  s.records = j.at("records").get<std::size_t>();
  s.domain_valid = j.at("domain_valid").get<bool>();
  for (const auto& c : j.at("claims")) {
    ClaimResult r;
    r.id = c.at("id").get<std::string>();
    r.type = c.at("type").get<std::string>();
    r.fit.quantity = c.at("quantity").get<std::string>();
    r.fit.t_lo = number_of(c.at("t_lo"));
    r.fit.t_hi = number_of(c.at("t_hi"));
    r.fit.samples = c.at("samples").get<std::size_t>();
    r.fit.slope = number_of(c.at("slope"));
    r.fit.stderr_slope = number_of(c.at("stderr"));
    r.fit.r2 = number_of(c.at("r2"));
    r.fit.theory = number_of(c.at("theory"));
    r.fit.tolerance = number_of(c.at("tolerance"));
    r.fit.gate = gate_of(c.at("gate").get<std::string>());
    r.fit.verdict = verdict_of(c.at("verdict").get<std::string>());
    r.error = c.at("error").get<std::string>();
    s.claims.push_back(r);
  }
  for (const auto& m : j.at("monitors")) {
    MonitorReport r;
    r.name = m.at("name").get<std::string>();
    r.value = number_of(m.at("value"));
    r.tolerance = number_of(m.at("tolerance"));
    r.violations = m.at("violations").get<std::size_t>();
    r.samples = m.at("samples").get<std::size_t>();
    r.passed = m.at("passed").get<bool>();
    r.note = m.at("note").get<std::string>();
    s.monitors.push_back(r);
  }
  s.passed = j.at("passed").get<bool>();
  return s;
}

void write_series_csv(const NormSeries& series, const std::string& path) {
  std::string text;
  const auto names = series.column_names();
  for (std::size_t i = 0; i < names.size(); ++i) text += (i ? "," : "") + names[i];
  text += '\n';
  for (const auto& r : series.records) {
    const auto row = series.row(r);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) text += ',';
      text += format_double(row[i]);
    }
    text += '\n';
  }
  write_text(path, text);
}

std::vector<double> CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw std::invalid_argument("column '" + name + "' not in CSV");
  const auto idx = static_cast<std::size_t>(it - header.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(idx));
  return out;
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  CsvTable table;
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> cells;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    return cells;
  };
  if (!std::getline(in, line)) throw std::runtime_error("empty CSV '" + path + "'");
  table.header = split(line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != table.header.size())
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": wrong number of cells");
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(std::stod(c));
    table.rows.push_back(std::move(row));
  }
  return table;
}

Json sweep(const Json& plan, int jobs) {
  if (!plan.is_object()) throw ConfigError("sweep plan must be an object");
  for (const auto& [key, value] : plan.items()) {
    (void)value;
    if (key != "runs" && key != "output_dir") throw ConfigError("unknown key '" + key + "' in sweep plan");
  }
  if (jobs < 1) throw std::invalid_argument("sweep needs at least one job");
  const Json runs = plan.value("runs", Json::array());
  if (!runs.is_array()) throw ConfigError("sweep plan 'runs' must be an array");
  const std::string out_root = plan.value("output_dir", std::string("sweep_out"));

  std::vector<Json> results(runs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      const Json& entry = runs[i];
      try {
        Json doc;
        if (!entry.is_object()) throw ConfigError("plan entry must be an object");
        for (const auto& [key, value] : entry.items()) {
          (void)value;
          if (key != "preset" && key != "overrides" && key != "config")
            throw ConfigError("unknown key '" + key + "' in plan entry");
        }
        if (entry.contains("preset") == entry.contains("config"))
          throw ConfigError("plan entry needs exactly one of preset or config");
        if (entry.contains("preset"))
          doc = emit_config(preset_config(entry.at("preset").get<std::string>()));
        else
          doc = entry.at("config");
        if (entry.contains("overrides")) doc.merge_patch(entry.at("overrides"));
        doc["output_dir"] = (fs::path(out_root) / ("run" + std::to_string(i))).string();
        const ExperimentConfig cfg = parse_config(doc);
        results[i] = summary_to_json(run_experiment(cfg));
      } catch (const std::exception& e) {
        const std::string text = entry.dump();
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : text) {
          h ^= c;
          h *= 0x100000001b3ULL;
        }
        char buf[17];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
        results[i] = {{"digest", buf}, {"error", e.what()}, {"passed", false}};
      }
    }
  };
  std::vector<std::thread> pool;
  const int n_threads = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(runs.size(), 1)));
  for (int k = 0; k < n_threads; ++k) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::sort(results.begin(), results.end(), [](const Json& a, const Json& b) {
    const auto da = a.at("digest").get<std::string>();
    const auto db = b.at("digest").get<std::string>();
    return da != db ? da < db : a.dump() < b.dump();
  });
  bool all = true;
  for (const auto& r : results) all = all && r.at("passed").get<bool>();
  return {{"count", results.size()}, {"passed", all}, {"runs", results}};
}

VerifyResult verify(const std::string& directory) {
  VerifyResult out;
  std::ostringstream rep;
  if (!fs::is_directory(directory)) {
    out.exit_code = 2;
    out.report = "error: '" + directory + "' is not a directory\n";
    return out;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(directory)) {
    const auto name = e.path().filename().string();
    if (e.is_regular_file() && name.size() > 13 && name.ends_with(".summary.json")) files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    out.exit_code = 2;
    out.report = "error: no summaries in '" + directory + "'\n";
    return out;
  }

  char line[256];
  std::snprintf(line, sizeof line, "%-14s %-22s %12s %12s %8s  %s\n", "run", "claim", "measured", "theory", "tol",
                "verdict");
  rep << line;
  bool any_fail = false;
  bool corrupt = false;
  for (const auto& path : files) {
    RunSummary s;
    try {
      std::ifstream in(path);
      s = summary_from_json(Json::parse(in));
    } catch (const std::exception& e) {
      rep << "error: corrupt summary " << path.string() << ": " << e.what() << "\n";
      corrupt = true;
      continue;
    }
    bool ok = s.completed && s.domain_valid;
    if (!s.completed) rep << s.name << ": run did not complete (" << s.failure << ")\n";
    if (!s.domain_valid) rep << s.name << ": domain-invalid\n";
    for (const auto& c : s.claims) {
      std::snprintf(line, sizeof line, "%-14s %-22s %12.5f %12.5f %8.3f  %s%s\n", s.name.c_str(), c.id.c_str(),
                    c.fit.slope, c.fit.theory, c.fit.tolerance, verdict_name(c.fit.verdict).c_str(),
                    c.error.empty() ? "" : (" (" + c.error + ")").c_str());
      rep << line;
      ok = ok && c.passed();
    }
    for (const auto& m : s.monitors) {
      if (m.passed) continue;
      std::snprintf(line, sizeof line, "%-14s %-22s %12.5g %12s %8.3g  fail\n", s.name.c_str(), m.name.c_str(), m.value,
                    "-", m.tolerance);
      rep << line;
      ok = false;
    }
    if (!ok) any_fail = true;
  }
  out.exit_code = corrupt ? 2 : (any_fail ? 1 : 0);
  rep << (out.exit_code == 0 ? "all gated verdicts passed\n" : "FAILED\n");
  out.report = rep.str();
  return out;
}

std::string linear_table(int n, const std::vector<double>& wavenumbers, const std::vector<double>& times) {
  if (n < 1 || n > Grid::kMaxDim) throw std::invalid_argument("n must lie in 1..4");
  std::string text = "xi,m";
  for (double t : times) {
    if (!(t >= 0.0)) throw std::invalid_argument("times must be nonnegative");
    text += ",exp_t" + format_index(t);
  }
  text += '\n';
  for (double xi : wavenumbers) {
    if (!(xi >= 0.0)) throw std::invalid_argument("wavenumbers are magnitudes and must be nonnegative");
    const double m = linear_symbol(xi * xi) + 0.0;  // no "-0" row at xi = 0
    text += format_double(xi) + "," + format_double(m);
    for (double t : times) text += "," + format_double(std::exp(t * m));
    text += '\n';
  }
  return text;
}

}  // namespace radgas
