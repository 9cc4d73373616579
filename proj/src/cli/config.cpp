#include "nsk/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "nsk/errors.hpp"

namespace nsk::cli {

namespace {

struct Value {
  enum class Kind { number, boolean, string, array } kind = Kind::number;
  double number = 0.0;
  bool boolean = false;
  std::string string;
  std::vector<Value> items;
  int line = 0;
};

[[noreturn]] void syntax_error(int line, const std::string& what) {
  std::ostringstream msg;
  msg << "config line " << line << ": " << what;
  throw ConfigError(msg.str());
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Drops a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view s) {
  bool quoted = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') quoted = !quoted;
    if (s[i] == '#' && !quoted) return s.substr(0, i);
  }
  return s;
}

Value parse_scalar(std::string_view s, int line) {
  Value v;
  v.line = line;
  if (s.empty()) syntax_error(line, "missing value");
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"') syntax_error(line, "unterminated string");
    v.kind = Value::Kind::string;
    v.string = std::string(s.substr(1, s.size() - 2));
    if (v.string.find('"') != std::string::npos) syntax_error(line, "unexpected quote in string");
    return v;
  }
  if (s == "true" || s == "false") {
    v.kind = Value::Kind::boolean;
    v.boolean = s == "true";
    return v;
  }
  std::string num(s);
  num.erase(std::remove(num.begin(), num.end(), '_'), num.end());
  const char* first = num.data();
  if (!num.empty() && num.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, num.data() + num.size(), v.number);
  if (ec != std::errc() || ptr != num.data() + num.size())
    syntax_error(line, "cannot parse value '" + std::string(s) + "'");
  return v;
}

Value parse_value(std::string_view s, int line) {
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') syntax_error(line, "unterminated array");
    Value v;
    v.kind = Value::Kind::array;
    v.line = line;
    std::string_view body = trim(s.substr(1, s.size() - 2));
    while (!body.empty()) {
      const auto comma = body.find(',');
      const std::string_view item = trim(body.substr(0, comma));
      if (item.empty()) syntax_error(line, "empty array element");
      v.items.push_back(parse_scalar(item, line));
      if (comma == std::string_view::npos) break;
      body = trim(body.substr(comma + 1));
      if (body.empty()) break;  // trailing comma
    }
    return v;
  }
  return parse_scalar(s, line);
}

using Table = std::map<std::string, std::map<std::string, Value>>;
using Setter = std::function<void(RunConfig&, const Value&)>;
using Schema = std::map<std::string, std::map<std::string, Setter>>;
const Schema& schema();

Table tokenize(const std::string& text) {
  Table table;
  std::string section;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::set<std::string> seen_sections;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view s = trim(strip_comment(raw));
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') syntax_error(line, "malformed section header");
      section = std::string(trim(s.substr(1, s.size() - 2)));
      if (section.empty()) syntax_error(line, "empty section name");
      if (!schema().count(section)) syntax_error(line, "unknown section [" + section + "]");
      if (!seen_sections.insert(section).second)
        syntax_error(line, "duplicate section [" + section + "]");
      table[section];
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) syntax_error(line, "expected key = value");
    const std::string key(trim(s.substr(0, eq)));
    if (key.empty()) syntax_error(line, "missing key");
    if (section.empty()) syntax_error(line, "key '" + key + "' outside of a section");
    auto& sec = table[section];
    if (sec.count(key)) syntax_error(line, "duplicate key '" + key + "'");
    sec[key] = parse_value(trim(s.substr(eq + 1)), line);
  }
  return table;
}

double as_number(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::number) syntax_error(v.line, key + " must be a number");
  return v.number;
}

std::size_t as_count(const Value& v, const std::string& key) {
  const double x = as_number(v, key);
  if (!(x >= 0.0) || x != std::floor(x) || x > 1e15)
    syntax_error(v.line, key + " must be a non-negative integer");
  return static_cast<std::size_t>(x);
}

bool as_bool(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::boolean) syntax_error(v.line, key + " must be true or false");
  return v.boolean;
}

std::string as_string(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::string) syntax_error(v.line, key + " must be a quoted string");
  return v.string;
}

std::vector<double> as_numbers(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::array) syntax_error(v.line, key + " must be an array");
  std::vector<double> out;
  for (const Value& item : v.items) out.push_back(as_number(item, key));
  return out;
}

std::vector<std::string> as_strings(const Value& v, const std::string& key) {
  if (v.kind != Value::Kind::array) syntax_error(v.line, key + " must be an array");
  std::vector<std::string> out;
  for (const Value& item : v.items) out.push_back(as_string(item, key));
  return out;
}

const Schema& schema() {
  static const Schema s = {
      {"gas",
       {
           {"gamma", [](RunConfig& c, const Value& v) { c.gas.gamma = as_number(v, "gamma"); }},
           {"alpha", [](RunConfig& c, const Value& v) { c.gas.alpha = as_number(v, "alpha"); }},
           {"beta", [](RunConfig& c, const Value& v) { c.gas.beta = as_number(v, "beta"); }},
       }},
      {"states",
       {
           {"v_plus", [](RunConfig& c, const Value& v) { c.states.v_plus = as_number(v, "v_plus"); }},
           {"u_plus", [](RunConfig& c, const Value& v) { c.states.u_plus = as_number(v, "u_plus"); }},
           {"v_minus", [](RunConfig& c, const Value& v) { c.states.v_minus = as_number(v, "v_minus"); }},
           {"u_minus", [](RunConfig& c, const Value& v) { c.states.u_minus = as_number(v, "u_minus"); }},
           {"v_m", [](RunConfig& c, const Value& v) { c.states.v_m = as_number(v, "v_m"); }},
           {"delta_R", [](RunConfig& c, const Value& v) { c.states.delta_R = as_number(v, "delta_R"); }},
       }},
      {"grid",
       {
           {"x_lo", [](RunConfig& c, const Value& v) { c.grid.x_lo = as_number(v, "x_lo"); }},
           {"x_hi", [](RunConfig& c, const Value& v) { c.grid.x_hi = as_number(v, "x_hi"); }},
           {"n", [](RunConfig& c, const Value& v) { c.grid.n = as_count(v, "n"); }},
       }},
      {"scheme",
       {
           {"cfl", [](RunConfig& c, const Value& v) { c.scheme.cfl = as_number(v, "cfl"); }},
           {"t_end", [](RunConfig& c, const Value& v) { c.scheme.t_end = as_number(v, "t_end"); }},
           {"output_stride",
            [](RunConfig& c, const Value& v) { c.scheme.output_stride = as_count(v, "output_stride"); }},
           {"shift", [](RunConfig& c, const Value& v) { c.scheme.shift_enabled = as_bool(v, "shift"); }},
           {"amplitude_cap",
            [](RunConfig& c, const Value& v) { c.scheme.amplitude_cap = as_number(v, "amplitude_cap"); }},
           {"constraint_ceiling",
            [](RunConfig& c, const Value& v) {
              c.scheme.constraint_ceiling = as_number(v, "constraint_ceiling");
            }},
           {"vacuum_floor",
            [](RunConfig& c, const Value& v) { c.scheme.vacuum_floor = as_number(v, "vacuum_floor"); }},
           {"strength_cap",
            [](RunConfig& c, const Value& v) { c.strength_cap = as_number(v, "strength_cap"); }},
       }},
      {"perturbation",
       {
           {"kind",
            [](RunConfig& c, const Value& v) {
              const std::string k = as_string(v, "kind");
              if (k == "none")
                c.scheme.perturbation.kind = PerturbationKind::none;
              else if (k == "gaussian")
                c.scheme.perturbation.kind = PerturbationKind::gaussian;
              else
                syntax_error(v.line, "kind must be \"none\" or \"gaussian\"");
            }},
           {"amplitude",
            [](RunConfig& c, const Value& v) { c.scheme.perturbation.amplitude = as_number(v, "amplitude"); }},
           {"center",
            [](RunConfig& c, const Value& v) { c.scheme.perturbation.center = as_number(v, "center"); }},
           {"width",
            [](RunConfig& c, const Value& v) { c.scheme.perturbation.width = as_number(v, "width"); }},
           {"field",
            [](RunConfig& c, const Value& v) {
              const std::string f = as_string(v, "field");
              if (f == "v")
                c.scheme.perturbation.field = PerturbationField::v;
              else if (f == "u")
                c.scheme.perturbation.field = PerturbationField::u;
              else if (f == "both")
                c.scheme.perturbation.field = PerturbationField::both;
              else
                syntax_error(v.line, "field must be \"v\", \"u\" or \"both\"");
            }},
       }},
      {"output",
       {
           {"dir", [](RunConfig& c, const Value& v) { c.output.dir = as_string(v, "dir"); }},
           {"formats", [](RunConfig& c, const Value& v) { c.output.formats = as_strings(v, "formats"); }},
           {"snapshot_every",
            [](RunConfig& c, const Value& v) { c.output.snapshot_every = as_count(v, "snapshot_every"); }},
       }},
      {"sampling",
       {
           {"t", [](RunConfig& c, const Value& v) { c.sampling.t = as_number(v, "t"); }},
           {"points", [](RunConfig& c, const Value& v) { c.sampling.points = as_count(v, "points"); }},
           {"times", [](RunConfig& c, const Value& v) { c.sampling.times = as_numbers(v, "times"); }},
       }},
  };
  return s;
}

} // namespace

RunConfig parse_config(const std::string& text) {
  const Table table = tokenize(text);
  RunConfig cfg;
  for (const auto& [section, keys] : table) {
    const auto sec = schema().find(section);
    for (const auto& [key, value] : keys) {
      const auto setter = sec->second.find(key);
      if (setter == sec->second.end())
        syntax_error(value.line, "unknown key '" + key + "' in [" + section + "]");
      setter->second(cfg, value);
    }
  }
  StatesSection& st = cfg.states;
  if (!st.v_minus && !st.u_minus && !st.v_m && !st.delta_R) {
    st.v_m = 0.95 * st.v_plus;
    st.delta_R = 0.05;
  }
  const std::vector<std::string> errors = validate(cfg);
  if (!errors.empty()) {
    std::ostringstream msg;
    msg << "invalid configuration:";
    for (const std::string& e : errors) msg << "\n  - " << e;
    throw ConfigError(msg.str());
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::vector<std::string> validate(const RunConfig& c) {
  std::vector<std::string> e;
  if (!(c.gas.gamma > 1.0)) e.push_back("gamma must exceed 1");
  if (!std::isfinite(c.gas.alpha)) e.push_back("alpha must be finite");
  if (!std::isfinite(c.gas.beta)) e.push_back("beta must be finite");

  const StatesSection& s = c.states;
  if (!(s.v_plus > 1e-12)) e.push_back("v_plus must be positive");
  if (!std::isfinite(s.u_plus)) e.push_back("u_plus must be finite");
  const bool full = s.u_minus.has_value();
  if (full) {
    if (!s.v_minus) e.push_back("u_minus requires v_minus");
    if (s.v_m || s.delta_R) e.push_back("give either the left state or v_m, not both");
  } else {
    if (!s.v_m) {
      e.push_back("states need either (v_minus, u_minus) or v_m");
    } else {
      if (!(*s.v_m > 1e-12 && *s.v_m <= s.v_plus)) e.push_back("v_m must lie in (0, v_plus]");
      if (s.delta_R.has_value() == s.v_minus.has_value())
        e.push_back("with v_m give exactly one of delta_R or v_minus");
      if (s.delta_R && !(*s.delta_R >= 0.0)) e.push_back("delta_R must be non-negative");
    }
  }
  if (s.v_minus && !(*s.v_minus > 1e-12)) e.push_back("v_minus must be positive");
  if (!(c.strength_cap > 0.0)) e.push_back("strength_cap must be positive");

  if (!(c.grid.x_lo < c.grid.x_hi)) e.push_back("grid x_lo must be below x_hi");
  if (c.grid.n < 16) e.push_back("grid n must be at least 16");

  const SchemeConfig& sc = c.scheme;
  if (!(sc.cfl > 0.0 && sc.cfl <= 0.5)) e.push_back("cfl must lie in (0, 0.5]");
  if (!(sc.t_end >= 0.0)) e.push_back("t_end must be non-negative");
  if (sc.output_stride == 0) e.push_back("output_stride must be positive");
  if (!(sc.vacuum_floor > 0.0)) e.push_back("vacuum_floor must be positive");
  if (!(sc.constraint_ceiling > 0.0)) e.push_back("constraint_ceiling must be positive");
  if (sc.perturbation.kind == PerturbationKind::gaussian) {
    if (!(sc.perturbation.width > 0.0)) e.push_back("perturbation width must be positive");
    if (!(std::abs(sc.perturbation.amplitude) <= sc.amplitude_cap))
      e.push_back("perturbation amplitude exceeds amplitude_cap");
  }
  for (const std::string& f : c.output.formats)
    if (f != "csv" && f != "ndjson") e.push_back("unknown output format \"" + f + "\"");
  if (c.output.dir.empty()) e.push_back("output dir must not be empty");
  if (!(c.sampling.t >= 0.0)) e.push_back("sampling t must be non-negative");
  if (c.sampling.points < 2) e.push_back("sampling points must be at least 2");
  for (double t : c.sampling.times)
    if (!(t >= 0.0)) {
      e.push_back("sampling times must be non-negative");
      break;
    }
  return e;
}

GasModel make_model(const RunConfig& cfg) { return GasModel(cfg.gas.gamma, cfg.gas.alpha, cfg.gas.beta); }

WavePattern make_pattern(const RunConfig& cfg) {
  const GasModel model = make_model(cfg);
  const StatesSection& s = cfg.states;
  const EndState right{s.v_plus, s.u_plus};
  PatternOptions opts;
  opts.strength_cap = cfg.strength_cap;
  if (s.u_minus) return solve_intermediate_state(model, EndState{*s.v_minus, *s.u_minus}, right, opts);
  double v_minus = s.v_minus.value_or(*s.v_m);
  if (s.delta_R && *s.delta_R > 0.0) {
    const auto [u_m, sigma] = *s.v_m < s.v_plus ? shock_curve(model, *s.v_m, right)
                                               : std::pair{s.u_plus, 0.0};
    (void)sigma;
    v_minus = left_volume_for_strength(model, EndState{*s.v_m, u_m}, *s.delta_R);
  }
  return construct_pattern(model, right, *s.v_m, v_minus, opts);
}

} // namespace nsk::cli
