#include "boussinesq/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "boussinesq/csv.hpp"

namespace boussinesq {

std::string_view to_string(Units units) { return units == Units::SI ? "si" : "nondimensional"; }

std::string_view to_string(InitialKind kind) {
  switch (kind) {
    case InitialKind::Solitary: return "solitary";
    case InitialKind::TwoSolitary: return "two_solitary";
    case InitialKind::Heap: return "heap";
    case InitialKind::DamBreak: return "dam_break";
    case InitialKind::Flat: return "flat";
  }
  return "unknown";
}

std::string_view to_string(analytic::CorrectorCenter center) {
  return center == analytic::CorrectorCenter::Wave ? "wave" : "origin";
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double to_double(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
    throw ConfigError("key '" + key + "': expected a number, got '" + text + "'");
  }
  return v;
}

long long to_integer(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const long long v = std::strtoll(text.c_str(), &end, 10);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE) {
    throw ConfigError("key '" + key + "': expected an integer, got '" + text + "'");
  }
  return v;
}

bool to_bool(const std::string& key, const std::string& text) {
  if (text == "true") return true;
  if (text == "false") return false;
  throw ConfigError("key '" + key + "': expected true or false, got '" + text + "'");
}

std::vector<double> to_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(to_double(key, trim(item)));
  return out;
}

std::string list_to_string(const std::vector<double>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + csv::format_double(values[i]);
  return s;
}

struct Field {
  std::string key;
  std::function<std::string(const ScenarioConfig&)> get;
  std::function<void(ScenarioConfig&, const std::string&)> set;
};

Field real(std::string key, double ScenarioConfig::*member) {
  return {key, [member](const ScenarioConfig& c) { return csv::format_double(c.*member); },
          [member, key](ScenarioConfig& c, const std::string& v) { c.*member = to_double(key, v); }};
}

Field param(std::string key, double PhysParams::*member) {
  return {key, [member](const ScenarioConfig& c) { return csv::format_double(c.params.*member); },
          [member, key](ScenarioConfig& c, const std::string& v) { c.params.*member = to_double(key, v); }};
}

Field integer(std::string key, int ScenarioConfig::*member) {
  return {key, [member](const ScenarioConfig& c) { return std::to_string(c.*member); },
          [member, key](ScenarioConfig& c, const std::string& v) {
            const long long n = to_integer(key, v);
            if (n < -1000000 || n > 1000000) throw ConfigError("key '" + key + "' out of range");
            c.*member = static_cast<int>(n);
          }};
}

Field boolean(std::string key, bool ScenarioConfig::*member) {
  return {key, [member](const ScenarioConfig& c) { return std::string(c.*member ? "true" : "false"); },
          [member, key](ScenarioConfig& c, const std::string& v) { c.*member = to_bool(key, v); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back({"name", [](const ScenarioConfig& c) { return c.name; },
                 [](ScenarioConfig& c, const std::string& v) { c.name = v; }});
    f.push_back({"units", [](const ScenarioConfig& c) { return std::string(to_string(c.units)); },
                 [](ScenarioConfig& c, const std::string& v) {
                   if (v == "si") c.units = Units::SI;
                   else if (v == "nondimensional") c.units = Units::Nondimensional;
                   else throw ConfigError("units must be 'nondimensional' or 'si'");
                 }});
    f.push_back(real("x_min", &ScenarioConfig::x_min));
    f.push_back(real("x_max", &ScenarioConfig::x_max));
    f.push_back({"n_cells", [](const ScenarioConfig& c) { return std::to_string(c.n_cells); },
                 [](ScenarioConfig& c, const std::string& v) {
                   const long long n = to_integer("n_cells", v);
                   if (n <= 0) throw ConfigError("n_cells must be positive");
                   c.n_cells = static_cast<std::size_t>(n);
                 }});
    f.push_back(param("epsilon", &PhysParams::epsilon));
    f.push_back(param("alpha", &PhysParams::alpha));
    f.push_back(param("gravity", &PhysParams::gravity));
    f.push_back(param("depth", &PhysParams::depth));
    f.push_back({"variant", [](const ScenarioConfig& c) { return std::string(to_string(c.variant)); },
                 [](ScenarioConfig& c, const std::string& v) { c.variant = parse_variant(v); }});
    f.push_back({"reconstruction", [](const ScenarioConfig& c) { return std::string(to_string(c.reconstruction)); },
                 [](ScenarioConfig& c, const std::string& v) { c.reconstruction = hyperbolic::parse_reconstruction(v); }});
    f.push_back({"conversion", [](const ScenarioConfig& c) { return std::string(splitting::to_string(c.conversion)); },
                 [](ScenarioConfig& c, const std::string& v) { c.conversion = splitting::parse_conversion(v); }});
    f.push_back({"initial", [](const ScenarioConfig& c) { return std::string(to_string(c.initial)); },
                 [](ScenarioConfig& c, const std::string& v) {
                   for (InitialKind k : {InitialKind::Solitary, InitialKind::TwoSolitary, InitialKind::Heap,
                                         InitialKind::DamBreak, InitialKind::Flat}) {
                     if (v == to_string(k)) {
                       c.initial = k;
                       return;
                     }
                   }
                   throw ConfigError("unknown initial condition '" + v + "'");
                 }});
    f.push_back(real("amplitude", &ScenarioConfig::amplitude));
    f.push_back(real("x0", &ScenarioConfig::x0));
    f.push_back(integer("direction", &ScenarioConfig::direction));
    f.push_back(real("amplitude2", &ScenarioConfig::amplitude2));
    f.push_back(real("x0_2", &ScenarioConfig::x0_2));
    f.push_back(integer("direction2", &ScenarioConfig::direction2));
    f.push_back(boolean("corrector", &ScenarioConfig::corrector));
    f.push_back({"corrector_center", [](const ScenarioConfig& c) { return std::string(to_string(c.corrector_center)); },
                 [](ScenarioConfig& c, const std::string& v) {
                   if (v == "wave") c.corrector_center = analytic::CorrectorCenter::Wave;
                   else if (v == "origin") c.corrector_center = analytic::CorrectorCenter::Origin;
                   else throw ConfigError("corrector_center must be 'wave' or 'origin'");
                 }});
    f.push_back(real("heap_amplitude", &ScenarioConfig::heap_amplitude));
    f.push_back(real("heap_width", &ScenarioConfig::heap_width));
    f.push_back(real("background", &ScenarioConfig::background));
    f.push_back(real("dam_amplitude", &ScenarioConfig::dam_amplitude));
    f.push_back(real("end_time", &ScenarioConfig::end_time));
    f.push_back({"output_times", [](const ScenarioConfig& c) { return list_to_string(c.output_times); },
                 [](ScenarioConfig& c, const std::string& v) { c.output_times = to_list("output_times", v); }});
    f.push_back(real("cfl", &ScenarioConfig::cfl));
    f.push_back(real("dt", &ScenarioConfig::dt));
    f.push_back(integer("n_disp", &ScenarioConfig::n_disp));
    f.push_back(real("blowup_threshold", &ScenarioConfig::blowup_threshold));
    f.push_back(boolean("expect_blowup", &ScenarioConfig::expect_blowup));
    return f;
  }();
  return table;
}

}  // namespace

void ScenarioConfig::validate() const {
  if (name.empty()) throw ConfigError("name must not be empty");
  if (name.find_first_of("\n#=") != std::string::npos) throw ConfigError("name contains a reserved character");
  if (trim(name) != name) throw ConfigError("name must not start or end with whitespace");
  Grid(x_min, x_max, n_cells);
  params.validate();
  check_variant(variant, params);
  if (!(end_time >= 0.0) || !std::isfinite(end_time)) throw ConfigError("end_time must be finite and >= 0");
  if (!std::is_sorted(output_times.begin(), output_times.end())) throw ConfigError("output_times must be sorted");
  for (double t : output_times) {
    if (!(t >= 0.0 && t <= end_time)) throw ConfigError("output_times must lie in [0, end_time]");
  }
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl must lie in (0, 1]");
  if (!(dt >= 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be finite and >= 0 (0 selects the CFL rule)");
  if (n_disp < 1) throw ConfigError("n_disp must be at least 1");
  if (!(blowup_threshold > 0.0)) throw ConfigError("blowup_threshold must be positive");
  if (direction != 1 && direction != -1) throw ConfigError("direction must be 1 or -1");
  if (direction2 != 1 && direction2 != -1) throw ConfigError("direction2 must be 1 or -1");
  if (initial == InitialKind::Solitary || initial == InitialKind::TwoSolitary) {
    analytic::SolitaryWaveSpec{amplitude, params.epsilon, x0, direction}.validate();
    if (initial == InitialKind::TwoSolitary) {
      analytic::SolitaryWaveSpec{amplitude2, params.epsilon, x0_2, direction2}.validate();
    }
  }
  if (initial == InitialKind::Heap && !(heap_width > 0.0)) throw ConfigError("heap_width must be positive");
}

splitting::StepOptions ScenarioConfig::step_options() const {
  splitting::StepOptions o;
  o.n_disp = n_disp;
  o.conversion = conversion;
  o.blowup_threshold = blowup_threshold;
  o.reconstruction = reconstruction;
  return o;
}

splitting::RunOptions ScenarioConfig::run_options() const {
  splitting::RunOptions o;
  o.end_time = end_time;
  o.output_times = output_times;
  o.cfl = cfl;
  if (dt > 0.0) o.fixed_dt = dt;
  return o;
}

ScenarioConfig parse_config(std::istream& in) {
  ScenarioConfig c;
  std::map<std::string, const Field*> by_key;
  for (const Field& f : fields()) by_key[f.key] = &f;
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    const auto it = by_key.find(key);
    if (it == by_key.end()) throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    if (!seen.insert(key).second) throw ConfigError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    it->second->set(c, value);
  }
  c.validate();
  return c;
}

ScenarioConfig parse_config_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_config(in);
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

void write_config(std::ostream& out, const ScenarioConfig& config) {
  for (const Field& f : fields()) out << f.key << " = " << f.get(config) << '\n';
}

std::string config_to_string(const ScenarioConfig& config) {
  std::ostringstream out;
  write_config(out, config);
  return out.str();
}

}  // namespace boussinesq
