#include "mhdtriad/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "mhdtriad/errors.hpp"

namespace mhdtriad {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = s.find(',');
    out.push_back(trim(s.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

double parse_number(std::string_view s, int line) {
  s = trim(s);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected a number, got '" + std::string(s) + "'", line);
  return v;
}

int parse_int(std::string_view s, int line) {
  s = trim(s);
  int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty())
    throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  return v;
}

bool parse_bool(std::string_view s, int line) {
  s = trim(s);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ParseError("expected true or false, got '" + std::string(s) + "'", line);
}

std::vector<double> parse_numbers(std::string_view s, int line) {
  std::vector<double> out;
  for (auto item : split_list(s)) out.push_back(parse_number(item, line));
  return out;
}

TimeSpec parse_time(std::string_view s, int line) {
  s = trim(s);
  if (s.size() >= 2 && s.substr(s.size() - 2) == "tb") {
    std::string_view factor = trim(s.substr(0, s.size() - 2));
    if (!factor.empty() && factor.back() == '*') factor = trim(factor.substr(0, factor.size() - 1));
    return {factor.empty() ? 1.0 : parse_number(factor, line), true};
  }
  return {parse_number(s, line), false};
}

std::string render_time(const TimeSpec& t) { return t.in_breakdown_units ? format_double(t.value) + "tb" : format_double(t.value); }

std::string render_list(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + format_double(v[i]);
  return s;
}

ManifestSpec base_spec(std::string name) {
  ManifestSpec s;
  s.preset = std::move(name);
  return s;
}

std::vector<Preset> build_presets() {
  std::vector<Preset> p;
  {
    ManifestSpec s = base_spec("case1");
    s.physics.b = {0.0, 0.02, 0.04};
    p.push_back({"case1", "van der Waals sweep b in {0, 0.02, 0.04}, B01 = 0.1, B02 = 1, A = 1", s});
  }
  {
    ManifestSpec s = base_spec("case2");
    s.physics.b = {0.0, 0.02, 0.04};
    s.physics.B01 = {0.05};
    p.push_back({"case2", "as case1 with the weaker longitudinal field B01 = 0.05", s});
  }
  {
    ManifestSpec s = base_spec("case3");
    s.physics.b = {0.0, 0.02, 0.04};
    s.physics.amplitude = {2.0};
    p.push_back({"case3", "as case1 with doubled initial amplitude A = 2", s});
  }
  {
    ManifestSpec s = base_spec("case4");
    s.physics.b = {0.02};
    s.physics.B01 = {0.1, 0.075, 0.05, 0.02};
    // Lambda_f drops to ~1.4e-4 at B01 = 0.02; solitons need the finer grid.
    s.solver.n = 1024;
    p.push_back({"case4", "longitudinal field sweep B01 in {0.1, 0.075, 0.05, 0.02}, b = 0.02", s});
  }
  {
    ManifestSpec s = base_spec("case5");
    s.physics.b = {0.02};
    s.physics.B02 = {0.0, 0.5, 1.0, 2.0};
    p.push_back({"case5", "transverse field sweep B02 in {0, 0.5, 1, 2}, b = 0.02", s});
  }
  {
    ManifestSpec s = base_spec("case6");
    s.physics.b = {0.02};
    s.physics.B02 = {0.0, 0.5, 1.0, 2.0};
    s.solver.t_end = {0.5, false};
    s.solver.snapshot_times = {{0.0, false}, {0.25, false}, {0.5, false}};
    p.push_back({"case6", "as case5, all profiles compared at common times up to t = 0.5", s});
  }
  {
    ManifestSpec s = base_spec("zk");
    s.physics.E_f = 1.0;
    s.physics.M_f = 0.0;
    s.physics.Lambda_f = 0.022 * 0.022;
    p.push_back({"zk", "KdV regression u_t + u u_x + beta^2 u_xxx = 0, beta = 0.022, from cos x", s});
  }
  return p;
}

}  // namespace

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = build_presets();
  return all;
}

const Preset* find_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

void apply_setting(ManifestSpec& spec, std::string_view key, std::string_view value, int line) {
  auto& ph = spec.physics;
  auto& so = spec.solver;
  value = trim(value);
  if (key == "preset" || key == "preset.name") {
    const Preset* p = find_preset(value);
    if (!p) throw ParseError("unknown preset '" + std::string(value) + "'", line);
    spec = p->spec;
  } else if (key == "physics.delta") ph.delta = parse_number(value, line);
  else if (key == "physics.b") ph.b = parse_numbers(value, line);
  else if (key == "physics.B01") ph.B01 = parse_numbers(value, line);
  else if (key == "physics.B02") ph.B02 = parse_numbers(value, line);
  else if (key == "physics.amplitude") ph.amplitude = parse_numbers(value, line);
  else if (key == "physics.chi_hat") ph.chi_hat = parse_number(value, line);
  else if (key == "physics.mu_hat") ph.mu_hat = parse_number(value, line);
  else if (key == "physics.eta_hat") ph.eta_hat = parse_number(value, line);
  else if (key == "physics.kappa_hat") ph.kappa_hat = parse_number(value, line);
  else if (key == "physics.ef_variant") {
    const auto v = parse_ef_variant(value);
    if (!v) throw ParseError("unknown E_f variant '" + std::string(value) + "'", line);
    ph.ef_variant = *v;
  } else if (key == "physics.kernel") ph.kernel = std::string(value);
  else if (key == "physics.E_f") ph.E_f = parse_number(value, line);
  else if (key == "physics.M_f") ph.M_f = parse_number(value, line);
  else if (key == "physics.Lambda_f") ph.Lambda_f = parse_number(value, line);
  else if (key == "solver.n") so.n = parse_int(value, line);
  else if (key == "solver.dt") {
    if (value == "auto") so.dt.reset(); else so.dt = parse_number(value, line);
  } else if (key == "solver.t_end") so.t_end = parse_time(value, line);
  else if (key == "solver.mode") {
    if (value == "single") so.mode = SolveMode::Single;
    else if (value == "pair") so.mode = SolveMode::Pair;
    else throw ParseError("solver.mode must be single or pair", line);
  } else if (key == "solver.record_stride") so.record_stride = parse_int(value, line);
  else if (key == "solver.viscous") so.viscous = parse_bool(value, line);
  else if (key == "solver.snapshot_times") {
    so.snapshot_times.clear();
    if (!value.empty())
      for (auto item : split_list(value)) so.snapshot_times.push_back(parse_time(item, line));
  } else if (key == "solver.breakdown_factor") so.breakdown_factor = parse_number(value, line);
  else if (key == "solver.min_prominence") so.min_prominence = parse_number(value, line);
  else if (key == "output.dir") spec.output.dir = std::string(value);
  else throw ParseError("unknown key '" + std::string(key) + "'", line);
}

ManifestSpec parse_spec(std::string_view text) {
  struct Line {
    int number;
    std::string key, value;
  };
  std::vector<Line> lines;
  int number = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++number;
    std::string_view s = raw;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected 'section.key = value'", number);
    const auto key = trim(s.substr(0, eq));
    if (key.empty()) throw ParseError("missing key", number);
    if (key != "preset") {
      const auto dot = key.find('.');
      const auto section = key.substr(0, dot);
      if (dot == std::string_view::npos ||
          !(section == "physics" || section == "solver" || section == "output" || section == "preset"))
        throw ParseError("unknown section in key '" + std::string(key) + "'", number);
    }
    lines.push_back({number, std::string(key), std::string(trim(s.substr(eq + 1)))});
  }

  ManifestSpec spec;
  bool has_preset = false, has_physics = false;
  // The preset supplies defaults regardless of where it appears.
  for (const auto& l : lines)
    if (l.key == "preset" || l.key == "preset.name") {
      apply_setting(spec, l.key, l.value, l.number);
      has_preset = true;
    }
  for (const auto& l : lines) {
    if (l.key == "preset" || l.key == "preset.name") continue;
    if (l.key.rfind("physics.", 0) == 0) has_physics = true;
    apply_setting(spec, l.key, l.value, l.number);
  }
  if (!has_preset && !has_physics) throw ValidationError("configuration needs a preset or a physics block");
  return spec;
}

std::string render_config(const ManifestSpec& spec) {
  std::ostringstream o;
  const auto& ph = spec.physics;
  const auto& so = spec.solver;
  if (!spec.preset.empty()) o << "preset.name = " << spec.preset << "\n";
  o << "physics.delta = " << format_double(ph.delta) << "\n";
  o << "physics.b = " << render_list(ph.b) << "\n";
  o << "physics.B01 = " << render_list(ph.B01) << "\n";
  o << "physics.B02 = " << render_list(ph.B02) << "\n";
  o << "physics.amplitude = " << render_list(ph.amplitude) << "\n";
  o << "physics.chi_hat = " << format_double(ph.chi_hat) << "\n";
  o << "physics.mu_hat = " << format_double(ph.mu_hat) << "\n";
  o << "physics.eta_hat = " << format_double(ph.eta_hat) << "\n";
  o << "physics.kappa_hat = " << format_double(ph.kappa_hat) << "\n";
  o << "physics.ef_variant = " << to_string(ph.ef_variant) << "\n";
  o << "physics.kernel = " << ph.kernel << "\n";
  if (ph.E_f) o << "physics.E_f = " << format_double(*ph.E_f) << "\n";
  if (ph.M_f) o << "physics.M_f = " << format_double(*ph.M_f) << "\n";
  if (ph.Lambda_f) o << "physics.Lambda_f = " << format_double(*ph.Lambda_f) << "\n";
  o << "solver.n = " << so.n << "\n";
  o << "solver.dt = " << (so.dt ? format_double(*so.dt) : std::string("auto")) << "\n";
  o << "solver.t_end = " << render_time(so.t_end) << "\n";
  o << "solver.mode = " << (so.mode == SolveMode::Pair ? "pair" : "single") << "\n";
  o << "solver.record_stride = " << so.record_stride << "\n";
  o << "solver.viscous = " << (so.viscous ? "true" : "false") << "\n";
  o << "solver.snapshot_times = ";
  for (std::size_t i = 0; i < so.snapshot_times.size(); ++i) o << (i ? ", " : "") << render_time(so.snapshot_times[i]);
  o << "\n";
  o << "solver.breakdown_factor = " << format_double(so.breakdown_factor) << "\n";
  o << "solver.min_prominence = " << format_double(so.min_prominence) << "\n";
  if (!spec.output.dir.empty()) o << "output.dir = " << spec.output.dir << "\n";
  return o.str();
}

namespace {

Kernel make_kernel(const std::string& name, const Grid& grid) {
  if (name == "sin") return Kernel::sine(grid);
  if (name == "cos") return Kernel::cosine(grid);
  throw ValidationError("physics.kernel must be sin or cos, got '" + name + "'");
}

std::string make_label(double b, double B01, double B02, double A) {
  return "b=" + format_double(b) + " B01=" + format_double(B01) + " B02=" + format_double(B02) +
         " A=" + format_double(A);
}

}  // namespace

RunManifest resolve(const ManifestSpec& spec) {
  const auto& ph = spec.physics;
  const auto& so = spec.solver;
  if (ph.b.empty() || ph.B01.empty() || ph.B02.empty() || ph.amplitude.empty())
    throw ValidationError("physics sweep lists must not be empty");
  if (so.record_stride < 1) throw ValidationError("solver.record_stride must be at least 1");
  if (!(so.breakdown_factor > 1.0)) throw ValidationError("solver.breakdown_factor must exceed 1");
  if (!(so.min_prominence >= 0.0 && so.min_prominence < 1.0))
    throw ValidationError("solver.min_prominence must lie in [0, 1)");
  const Grid grid(so.n);  // power-of-two check

  RunManifest m;
  m.spec = spec;
  int index = 0;
  for (double b : ph.b)
    for (double B01 : ph.B01)
      for (double B02 : ph.B02)
        for (double A : ph.amplitude) {
          if (!(A > 0.0)) throw ValidationError("physics.amplitude must be positive");
          RunSpec r;
          r.index = index++;
          r.label = make_label(b, B01, B02, A);
          r.amplitude = A;
          r.mode = so.mode;
          r.breakdown_factor = so.breakdown_factor;
          try {
            r.background = BackgroundState::make(ph.delta, b, B01, B02, ph.chi_hat);
            r.background.mu_hat = ph.mu_hat;
            r.background.eta_hat = ph.eta_hat;
            r.background.kappa_hat = ph.kappa_hat;
            r.coefficients = triad_coefficients(r.background, ph.ef_variant);
          } catch (const DomainError& e) {
            throw ValidationError(r.label + ": " + e.what());
          } catch (const DegenerateBackground& e) {
            throw ValidationError(r.label + ": " + e.what());
          }
          if (ph.E_f) r.coefficients.E_f = *ph.E_f;
          if (ph.M_f) r.coefficients.M_f = *ph.M_f;
          if (ph.Lambda_f) r.coefficients.Lambda_f = *ph.Lambda_f;
          if (!(r.coefficients.E_f > 0.0)) throw ValidationError(r.label + ": E_f must be positive");
          r.t_b = breakdown_time(A, r.coefficients.E_f);

          SolverConfig cfg;
          cfg.coefficients = r.coefficients;
          cfg.grid = grid;
          cfg.kernel = make_kernel(ph.kernel, grid);
          cfg.initial_amplitude = A;
          cfg.t_end = so.t_end.resolve(r.t_b);
          cfg.record_stride = so.record_stride;
          cfg.viscous = so.viscous;
          cfg.min_prominence = so.min_prominence;
          for (const auto& t : so.snapshot_times) cfg.snapshot_times.push_back(t.resolve(r.t_b));
          // Solitons reach about three times the initial amplitude.
          cfg.dt = so.dt ? *so.dt : std::min(1e-4, 0.8 * cfg.stable_dt(3.0));
          cfg.validate();
          r.solver = std::move(cfg);
          m.runs.push_back(std::move(r));
        }
  return m;
}

RunManifest parse_config(std::string_view text) { return resolve(parse_spec(text)); }

}  // namespace mhdtriad
