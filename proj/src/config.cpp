#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "radgas/errors.hpp"
#include "radgas/harness.hpp"

namespace radgas {

namespace {

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError((where.empty() ? std::string("config") : where) + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }))
      throw ConfigError("unknown key '" + join(where, key) + "'");
  }
}

template <typename T>
T get(const Json& obj, const char* key, T fallback, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return fallback;
  try {
    return it->get<T>();
  } catch (const Json::exception& e) {
    throw ConfigError("key '" + join(where, key) + "': " + e.what());
  }
}

std::optional<double> get_opt(const Json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_number()) throw ConfigError("key '" + join(where, key) + "': expected a number");
  return it->get<double>();
}

double number_or_inf(const Json& v, const std::string& where) {
  if (v.is_string() && v.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
  if (!v.is_number()) throw ConfigError(where + ": expected a number or \"inf\"");
  return v.get<double>();
}

template <typename E>
E parse_enum(const std::string& text, std::initializer_list<std::pair<const char*, E>> table, const std::string& where) {
  for (const auto& [name, value] : table)
    if (text == name) return value;
  throw ConfigError(where + ": unknown value '" + text + "'");
}

const std::initializer_list<std::pair<const char*, ClaimType>> kClaimTypes{
    {"thm11_u", ClaimType::thm11_u},         {"thm11_q", ClaimType::thm11_q},
    {"thm12_u", ClaimType::thm12_u},         {"thm12_q", ClaimType::thm12_q},
    {"cor11_u", ClaimType::cor11_u},         {"cor11_q", ClaimType::cor11_q},
    {"heat_oracle", ClaimType::heat_oracle}, {"linear_prediction", ClaimType::linear_prediction}};

const std::initializer_list<std::pair<const char*, Gate>> kGates{
    {"two_sided", Gate::two_sided}, {"one_sided", Gate::one_sided}, {"none", Gate::none}};

const std::initializer_list<std::pair<const char*, Scheme>> kSchemes{{"etdrk4", Scheme::etdrk4}, {"rk4", Scheme::rk4}};

std::string gate_name(Gate g) {
  switch (g) {
    case Gate::two_sided: return "two_sided";
    case Gate::one_sided: return "one_sided";
    case Gate::none: return "none";
  }
  return "none";
}

std::string scheme_name(Scheme s) { return s == Scheme::etdrk4 ? "etdrk4" : "rk4"; }

int default_order(int dim) { return std::max(3, dim / 2 + 2); }

InitSpec default_init(InitSpec::Kind kind, int dim) {
  InitSpec init;
  init.kind = kind;
  init.gaussian = {1.0, 2.0, {}};
  init.dipole = {1.0, 2.0, 0};
  init.profile = {-0.4, 1.0, 42, std::nullopt};
  init.rescale = Rescale{RescaleNorm::hn, default_order(dim), 0.05};
  return init;
}

InitSpec::Kind init_kind(const std::string& s, const std::string& where) {
  return parse_enum<InitSpec::Kind>(s,
                                    {{"gaussian", InitSpec::Kind::gaussian},
                                     {"dipole", InitSpec::Kind::dipole},
                                     {"spectral_profile", InitSpec::Kind::spectral_profile}},
                                    where);
}

void parse_init(const Json& j, InitSpec& init) {
  const std::string w = "init";
  check_keys(j, {"kind", "amplitude", "sigma", "center", "axis", "sigma_exp", "cutoff", "seed", "target_s"}, w);
  init.kind = init_kind(get<std::string>(j, "kind", "gaussian", w), "init.kind");
  switch (init.kind) {
    case InitSpec::Kind::gaussian:
      init.gaussian.amplitude = get(j, "amplitude", init.gaussian.amplitude, w);
      init.gaussian.sigma = get(j, "sigma", init.gaussian.sigma, w);
      init.gaussian.center = get(j, "center", init.gaussian.center, w);
      break;
    case InitSpec::Kind::dipole:
      init.dipole.amplitude = get(j, "amplitude", init.dipole.amplitude, w);
      init.dipole.sigma = get(j, "sigma", init.dipole.sigma, w);
      init.dipole.axis = get(j, "axis", init.dipole.axis, w);
      break;
    case InitSpec::Kind::spectral_profile:
      init.profile.sigma_exp = get(j, "sigma_exp", init.profile.sigma_exp, w);
      init.profile.cutoff = get(j, "cutoff", init.profile.cutoff, w);
      init.profile.seed = get<std::uint64_t>(j, "seed", init.profile.seed, w);
      init.profile.target_s = get_opt(j, "target_s", w);
      break;
  }
  static const std::map<InitSpec::Kind, std::set<std::string>> used{
      {InitSpec::Kind::gaussian, {"kind", "amplitude", "sigma", "center"}},
      {InitSpec::Kind::dipole, {"kind", "amplitude", "sigma", "axis"}},
      {InitSpec::Kind::spectral_profile, {"kind", "sigma_exp", "cutoff", "seed", "target_s"}}};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!used.at(init.kind).count(key)) throw ConfigError("key 'init." + key + "' does not apply to this init kind");
  }
}

std::optional<Rescale> parse_rescale(const Json& j, int dim) {
  if (j.is_null()) return std::nullopt;
  const std::string w = "rescale";
  check_keys(j, {"norm", "order", "target"}, w);
  Rescale r{RescaleNorm::hn, default_order(dim), 0.05};
  r.norm = parse_enum<RescaleNorm>(get<std::string>(j, "norm", "HN", w), {{"HN", RescaleNorm::hn}, {"L2", RescaleNorm::l2}},
                                   "rescale.norm");
  r.order = get(j, "order", r.order, w);
  r.target = get(j, "target", r.target, w);
  return r;
}

FluxSpec parse_flux(const Json& j, int dim) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "quadratic") return FluxSpec::quadratic(dim);
    if (s == "zero") return FluxSpec::zero(dim);
    throw ConfigError("flux: unknown value '" + s + "'");
  }
  check_keys(j, {"c2", "c3", "axes"}, "flux");
  if (j.contains("axes")) {
    if (j.contains("c2") || j.contains("c3")) throw ConfigError("flux: give either axes or c2/c3");
    const auto& axes = j.at("axes");
    if (!axes.is_array()) throw ConfigError("flux.axes: expected an array");
    FluxSpec spec;
    for (std::size_t i = 0; i < axes.size(); ++i) {
      const std::string w = "flux.axes[" + std::to_string(i) + "]";
      check_keys(axes[i], {"c2", "c3"}, w);
      spec.axes.push_back(AxisFlux{get(axes[i], "c2", 1.0, w), get(axes[i], "c3", 0.0, w)});
    }
    return spec;
  }
  return FluxSpec::uniform(dim, get(j, "c2", 1.0, "flux"), get(j, "c3", 0.0, "flux"));
}

void parse_scheme(const Json& j, SchemeConfig& s) {
  const std::string w = "scheme";
  check_keys(j,
             {"method", "dt_policy", "dt", "safety", "t_final", "record_interval", "dealias_rule",
              "wall_budget_seconds", "dt_min", "dt_max", "cfl_refresh_steps"},
             w);
  s.scheme = parse_enum(get<std::string>(j, "method", scheme_name(s.scheme), w), kSchemes, "scheme.method");
  const auto policy = get<std::string>(j, "dt_policy", s.dt_policy.kind == DtPolicy::Kind::cfl ? "cfl" : "fixed", w);
  s.dt_policy.kind =
      parse_enum<DtPolicy::Kind>(policy, {{"cfl", DtPolicy::Kind::cfl}, {"fixed", DtPolicy::Kind::fixed}}, "scheme.dt_policy");
  s.dt_policy.dt = get(j, "dt", s.dt_policy.dt, w);
  s.dt_policy.safety = get(j, "safety", s.dt_policy.safety, w);
  s.t_final = get(j, "t_final", s.t_final, w);
  s.record_interval = get(j, "record_interval", s.record_interval, w);
  s.dealias_rule = get(j, "dealias_rule", s.dealias_rule, w);
  s.wall_budget_seconds = get(j, "wall_budget_seconds", s.wall_budget_seconds, w);
  s.dt_min = get(j, "dt_min", s.dt_min, w);
  s.dt_max = get(j, "dt_max", s.dt_max, w);
  s.cfl_refresh_steps = get(j, "cfl_refresh_steps", s.cfl_refresh_steps, w);
}

void parse_norms(const Json& j, NormRequest& n) {
  const std::string w = "norms";
  check_keys(j, {"l", "s", "lp", "include_q", "include_grad_neg", "monitor_l", "budget_order"}, w);
  n.l_list = get(j, "l", n.l_list, w);
  n.s_list = get(j, "s", n.s_list, w);
  if (j.contains("lp")) {
    if (!j.at("lp").is_array()) throw ConfigError("norms.lp: expected an array");
    n.lp_list.clear();
    for (const auto& v : j.at("lp")) n.lp_list.push_back(number_or_inf(v, "norms.lp"));
  }
  n.include_q = get(j, "include_q", n.include_q, w);
  n.include_grad_neg = get(j, "include_grad_neg", n.include_grad_neg, w);
  n.monitor_l = get(j, "monitor_l", n.monitor_l, w);
  n.budget_order = get(j, "budget_order", n.budget_order, w);
}

ClaimSpec parse_claim(const Json& j, std::size_t index) {
  const std::string w = "claims[" + std::to_string(index) + "]";
  check_keys(j, {"id", "kind", "l", "param", "quantity", "gate", "tolerance", "t_lo", "t_hi"}, w);
  ClaimSpec c;
  c.type = parse_enum(get<std::string>(j, "kind", "", w), kClaimTypes, w + ".kind");
  c.l = get(j, "l", 0, w);
  c.param = get(j, "param", 0.0, w);
  c.quantity = get<std::string>(j, "quantity", "", w);
  c.gate = parse_enum(get<std::string>(j, "gate", "two_sided", w), kGates, w + ".gate");
  c.tolerance = get(j, "tolerance", 0.1, w);
  c.t_lo = get_opt(j, "t_lo", w);
  c.t_hi = get_opt(j, "t_hi", w);
  c.id = get<std::string>(j, "id", claim_type_name(c.type) + "_l" + std::to_string(c.l), w);
  return c;
}

void parse_monitors(const Json& j, MonitorSpec& m) {
  const std::string w = "monitors";
  check_keys(j,
             {"lyapunov", "dissipation", "weighted", "energy_budget", "negative_energy_s", "eta", "boundary",
              "linear_oracle", "linear_oracle_tolerance"},
             w);
  m.lyapunov = get(j, "lyapunov", m.lyapunov, w);
  m.dissipation = get(j, "dissipation", m.dissipation, w);
  m.weighted = get(j, "weighted", m.weighted, w);
  m.energy_budget = get(j, "energy_budget", m.energy_budget, w);
  m.negative_energy_s = get(j, "negative_energy_s", m.negative_energy_s, w);
  m.eta = get(j, "eta", m.eta, w);
  if (j.contains("boundary")) {
    const auto& b = j.at("boundary");
    if (b.is_string() && b.get<std::string>() == "auto")
      m.boundary.reset();
    else if (b.is_boolean())
      m.boundary = b.get<bool>();
    else
      throw ConfigError("monitors.boundary: expected true, false or \"auto\"");
  }
  m.linear_oracle = get(j, "linear_oracle", m.linear_oracle, w);
  m.linear_oracle_tolerance = get(j, "linear_oracle_tolerance", m.linear_oracle_tolerance, w);
}

ConvergenceSpec parse_convergence(const Json& j) {
  const std::string w = "convergence";
  check_keys(j, {"levels", "reference_divisor", "schemes", "min_order"}, w);
  ConvergenceSpec c;
  c.levels = get(j, "levels", c.levels, w);
  c.reference_divisor = get(j, "reference_divisor", c.reference_divisor, w);
  if (j.contains("schemes")) {
    c.schemes.clear();
    for (const auto& s : j.at("schemes")) c.schemes.push_back(parse_enum(s.get<std::string>(), kSchemes, "convergence.schemes"));
  }
  c.min_order = get(j, "min_order", c.min_order, w);
  return c;
}

Json emit_init(const InitSpec& init) {
  switch (init.kind) {
    case InitSpec::Kind::gaussian: {
      Json j{{"kind", "gaussian"}, {"amplitude", init.gaussian.amplitude}, {"sigma", init.gaussian.sigma}};
      if (!init.gaussian.center.empty()) j["center"] = init.gaussian.center;
      return j;
    }
    case InitSpec::Kind::dipole:
      return {{"kind", "dipole"}, {"amplitude", init.dipole.amplitude}, {"sigma", init.dipole.sigma}, {"axis", init.dipole.axis}};
    case InitSpec::Kind::spectral_profile: {
      Json j{{"kind", "spectral_profile"},
             {"sigma_exp", init.profile.sigma_exp},
             {"cutoff", init.profile.cutoff},
             {"seed", init.profile.seed}};
      if (init.profile.target_s) j["target_s"] = *init.profile.target_s;
      return j;
    }
  }
  return {};
}

}  // namespace

std::string claim_type_name(ClaimType t) {
  for (const auto& [name, value] : kClaimTypes)
    if (value == t) return name;
  return "unknown";
}

double ExperimentConfig::default_t_lo() const { return fit_t_lo.value_or(5.0); }

double ExperimentConfig::default_t_hi() const {
  return fit_t_hi.value_or(std::min(scheme.t_final, 0.1 * length * length));
}

ExperimentConfig parse_config(const Json& doc) {
  check_keys(doc,
             {"name", "dim", "points", "length", "preset_init", "init", "rescale", "flux", "scheme", "norms", "fit",
              "claims", "monitors", "convergence", "output_dir"},
             "");
  ExperimentConfig cfg;
  cfg.name = get<std::string>(doc, "name", cfg.name, "");
  if (!doc.contains("dim") || !doc.contains("points") || !doc.contains("length"))
    throw ConfigError("config needs dim, points and length");
  cfg.dim = get(doc, "dim", cfg.dim, "");
  cfg.points = get(doc, "points", cfg.points, "");
  cfg.length = get(doc, "length", cfg.length, "");
  if (cfg.dim < 1 || cfg.dim > Grid::kMaxDim) throw ConfigError("dim must lie in 1..4");

  if (doc.contains("preset_init") && doc.contains("init")) throw ConfigError("give either preset_init or init");
  cfg.init = default_init(InitSpec::Kind::gaussian, cfg.dim);
  if (doc.contains("preset_init"))
    cfg.init = default_init(init_kind(get<std::string>(doc, "preset_init", "", ""), "preset_init"), cfg.dim);
  if (doc.contains("init")) parse_init(doc.at("init"), cfg.init);
  if (doc.contains("rescale")) cfg.init.rescale = parse_rescale(doc.at("rescale"), cfg.dim);

  cfg.flux = doc.contains("flux") ? parse_flux(doc.at("flux"), cfg.dim) : FluxSpec::quadratic(cfg.dim);
  cfg.scheme.t_final = 100.0;
  cfg.scheme.record_interval = 1.0;
  if (doc.contains("scheme")) parse_scheme(doc.at("scheme"), cfg.scheme);
  cfg.norms.budget_order = default_order(cfg.dim);
  if (doc.contains("norms")) parse_norms(doc.at("norms"), cfg.norms);
  if (doc.contains("fit")) {
    check_keys(doc.at("fit"), {"t_lo", "t_hi"}, "fit");
    cfg.fit_t_lo = get_opt(doc.at("fit"), "t_lo", "fit");
    cfg.fit_t_hi = get_opt(doc.at("fit"), "t_hi", "fit");
  }
  if (doc.contains("claims")) {
    const auto& claims = doc.at("claims");
    if (!claims.is_array()) throw ConfigError("claims: expected an array");
    for (std::size_t i = 0; i < claims.size(); ++i) cfg.claims.push_back(parse_claim(claims[i], i));
  }
  if (doc.contains("monitors")) parse_monitors(doc.at("monitors"), cfg.monitors);
  if (doc.contains("convergence")) cfg.convergence = parse_convergence(doc.at("convergence"));
  cfg.output_dir = get<std::string>(doc, "output_dir", cfg.output_dir, "");
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
    throw ConfigError(path + ":" + std::to_string(line) + ": " + e.what());
  }
  try {
    return parse_config(doc);
  } catch (const ConfigError& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

Json emit_config(const ExperimentConfig& cfg) {
  Json j;
  j["name"] = cfg.name;
  j["dim"] = cfg.dim;
  j["points"] = cfg.points;
  j["length"] = cfg.length;
  j["init"] = emit_init(cfg.init);
  if (cfg.init.rescale)
    j["rescale"] = {{"norm", cfg.init.rescale->norm == RescaleNorm::hn ? "HN" : "L2"},
                    {"order", cfg.init.rescale->order},
                    {"target", cfg.init.rescale->target}};
  else
    j["rescale"] = nullptr;
  Json axes = Json::array();
  for (const auto& a : cfg.flux.axes) axes.push_back({{"c2", a.c2}, {"c3", a.c3}});
  j["flux"] = {{"axes", axes}};
  const auto& s = cfg.scheme;
  j["scheme"] = {{"method", scheme_name(s.scheme)},
                 {"dt_policy", s.dt_policy.kind == DtPolicy::Kind::cfl ? "cfl" : "fixed"},
                 {"dt", s.dt_policy.dt},
                 {"safety", s.dt_policy.safety},
                 {"t_final", s.t_final},
                 {"record_interval", s.record_interval},
                 {"dealias_rule", s.dealias_rule},
                 {"wall_budget_seconds", s.wall_budget_seconds},
                 {"dt_min", s.dt_min},
                 {"dt_max", s.dt_max},
                 {"cfl_refresh_steps", s.cfl_refresh_steps}};
  Json lp = Json::array();
  for (double p : cfg.norms.lp_list) {
    if (std::isinf(p))
      lp.push_back("inf");
    else
      lp.push_back(p);
  }
  j["norms"] = {{"l", cfg.norms.l_list},
                {"s", cfg.norms.s_list},
                {"lp", lp},
                {"include_q", cfg.norms.include_q},
                {"include_grad_neg", cfg.norms.include_grad_neg},
                {"monitor_l", cfg.norms.monitor_l},
                {"budget_order", cfg.norms.budget_order}};
  j["fit"] = {{"t_lo", cfg.default_t_lo()}, {"t_hi", cfg.default_t_hi()}};
  Json claims = Json::array();
  for (const auto& c : cfg.claims) {
    Json cj{{"id", c.id},
            {"kind", claim_type_name(c.type)},
            {"l", c.l},
            {"param", c.param},
            {"quantity", default_quantity(c)},
            {"gate", gate_name(c.gate)},
            {"tolerance", c.tolerance}};
    if (c.t_lo) cj["t_lo"] = *c.t_lo;
    if (c.t_hi) cj["t_hi"] = *c.t_hi;
    claims.push_back(cj);
  }
  j["claims"] = claims;
  const auto& m = cfg.monitors;
  j["monitors"] = {{"lyapunov", m.lyapunov},
                   {"dissipation", m.dissipation},
                   {"weighted", m.weighted},
                   {"energy_budget", m.energy_budget},
                   {"negative_energy_s", m.negative_energy_s},
                   {"eta", m.eta},
                   {"linear_oracle", m.linear_oracle},
                   {"linear_oracle_tolerance", m.linear_oracle_tolerance}};
  if (m.boundary)
    j["monitors"]["boundary"] = *m.boundary;
  else
    j["monitors"]["boundary"] = "auto";
  if (cfg.convergence) {
    Json schemes = Json::array();
    for (auto sch : cfg.convergence->schemes) schemes.push_back(scheme_name(sch));
    j["convergence"] = {{"levels", cfg.convergence->levels},
                        {"reference_divisor", cfg.convergence->reference_divisor},
                        {"schemes", schemes},
                        {"min_order", cfg.convergence->min_order}};
  }
  j["output_dir"] = cfg.output_dir;
  return j;
}

std::string config_digest(const ExperimentConfig& cfg) {
  const std::string text = emit_config(cfg).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string default_quantity(const ClaimSpec& c) {
  if (!c.quantity.empty()) return c.quantity;
  switch (c.type) {
    case ClaimType::thm11_q:
    case ClaimType::thm12_q:
    case ClaimType::cor11_q:
      return "l2_d" + std::to_string(c.l) + "_q";
    default:
      return "l2_d" + std::to_string(c.l) + "_u";
  }
}

std::optional<double> claim_exponent(const ClaimSpec& c, const ExperimentConfig& cfg) {
  const int order = cfg.norms.budget_order > 0 ? cfg.norms.budget_order : default_order(cfg.dim);
  switch (c.type) {
    case ClaimType::thm11_u:
      return theoretical_exponent(ClaimKind::thm11_u, cfg.dim, c.l, 0.0, order);
    case ClaimType::thm11_q:
      return theoretical_exponent(ClaimKind::thm11_q, cfg.dim, c.l, 0.0, order);
    case ClaimType::thm12_u:
      return theoretical_exponent(ClaimKind::thm12_u, cfg.dim, c.l, c.param, order);
    case ClaimType::thm12_q:
      return theoretical_exponent(ClaimKind::thm12_q, cfg.dim, c.l, c.param, order);
    case ClaimType::cor11_u:
      return theoretical_exponent(ClaimKind::cor11_u, cfg.dim, c.l, c.param, order);
    case ClaimType::cor11_q:
      return theoretical_exponent(ClaimKind::cor11_q, cfg.dim, c.l, c.param, order);
    case ClaimType::heat_oracle:
      if (cfg.init.kind != InitSpec::Kind::spectral_profile)
        throw std::invalid_argument("heat_oracle needs spectral_profile data");
      // ||D^l u||^2 ~ int exp(-2t|xi|^2) |xi|^{2 sigma + 2l} d xi ~ t^{-(2 sigma + 2l + n)/2}
      return -(2.0 * cfg.init.profile.sigma_exp + 2.0 * c.l + cfg.dim) / 4.0;
    case ClaimType::linear_prediction:
      return std::nullopt;
  }
  return std::nullopt;
}

void ExperimentConfig::validate() const {
  try {
    if (name.empty() || name.find('/') != std::string::npos) throw std::invalid_argument("name must be a plain file stem");
    const Grid g(dim, points, length);
    if (flux.dim() != dim) throw std::invalid_argument("flux has " + std::to_string(flux.dim()) + " axes for dim " + std::to_string(dim));
    scheme.validate();
    norms.validate(dim);
    if (init.rescale) {
      if (!(init.rescale->target > 0.0)) throw std::invalid_argument("rescale target must be positive");
      if (init.rescale->order < 0) throw std::invalid_argument("rescale order must be nonnegative");
    }
    switch (init.kind) {
      case InitSpec::Kind::gaussian:
        if (!(init.gaussian.sigma > 0.0 && init.gaussian.sigma <= length / 12.0))
          throw std::invalid_argument("Gaussian width must lie in (0, L/12]");
        if (!init.gaussian.center.empty() && static_cast<int>(init.gaussian.center.size()) != dim)
          throw std::invalid_argument("Gaussian center has the wrong dimension");
        break;
      case InitSpec::Kind::dipole:
        if (!(init.dipole.sigma > 0.0 && init.dipole.sigma <= length / 12.0))
          throw std::invalid_argument("dipole width must lie in (0, L/12]");
        if (init.dipole.axis < 0 || init.dipole.axis >= dim) throw std::invalid_argument("dipole axis out of range");
        break;
      case InitSpec::Kind::spectral_profile:
        if (!(init.profile.cutoff >= g.dxi() && init.profile.cutoff <= g.dxi() * (points / 2)))
          throw std::invalid_argument("spectral cutoff must lie between the lowest and the Nyquist wavenumber");
        break;
    }
    if (!claims.empty() && !(default_t_lo() < default_t_hi())) throw std::invalid_argument("fit window needs t_lo < t_hi");

    NormSeries probe;
    probe.dim = dim;
    probe.request = norms;
    const auto columns = probe.column_names();
    std::set<std::string> ids;
    for (const auto& c : claims) {
      if (c.id.empty() || !ids.insert(c.id).second) throw std::invalid_argument("claim ids must be unique and nonempty");
      claim_exponent(c, *this);
      const auto q = default_quantity(c);
      if (std::find(columns.begin(), columns.end(), q) == columns.end())
        throw std::invalid_argument("claim " + c.id + " fits '" + q + "', which is not recorded");
      if (!(c.tolerance >= 0.0)) throw std::invalid_argument("claim tolerance must be nonnegative");
    }
    for (double s : monitors.negative_energy_s) {
      if (!norms.include_grad_neg) throw std::invalid_argument("negative energy monitor needs include_grad_neg");
      if (std::none_of(norms.s_list.begin(), norms.s_list.end(), [s](double v) { return std::abs(v - s) <= 1e-12; }))
        throw std::invalid_argument("negative energy index s=" + format_index(s) + " is not in norms.s");
    }
    if (convergence) {
      if (scheme.dt_policy.kind != DtPolicy::Kind::fixed) throw std::invalid_argument("convergence study needs a fixed dt");
      if (convergence->levels < 2) throw std::invalid_argument("convergence study needs at least 2 levels");
      if (!(convergence->reference_divisor > std::pow(2.0, convergence->levels - 1)))
        throw std::invalid_argument("reference step must be finer than every level");
      if (convergence->schemes.empty()) throw std::invalid_argument("convergence study needs a scheme");
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
}

}  // namespace radgas
