#include "efsolve/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "efsolve/errors.hpp"

namespace efsolve {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string strip_quotes(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

double parse_double(const std::string& s, int line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty() || !std::isfinite(v)) {
    throw config_error("line " + std::to_string(line) + ": expected a number, got '" + s + "'");
  }
  return v;
}

int parse_int(const std::string& s, int line) {
  const double v = parse_double(s, line);
  if (v != std::floor(v)) {
    throw config_error("line " + std::to_string(line) + ": expected an integer, got '" + s + "'");
  }
  return static_cast<int>(v);
}

std::vector<double> parse_list(const std::string& s, int line) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_double(trim(item), line));
  }
  if (out.empty()) {
    throw config_error("line " + std::to_string(line) + ": expected a comma-separated list");
  }
  return out;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

PotentialSpec compile_source(const std::string& source) {
  // A bare number is a constant potential; anything else is a DSL expression.
  char* end = nullptr;
  const double v = std::strtod(source.c_str(), &end);
  if (end == source.c_str() + source.size() && !source.empty() && std::isfinite(v)) {
    return PotentialSpec::constant(v);
  }
  return PotentialSpec::from_expression(source);
}

}  // namespace

Problem RunConfig::to_problem() const {
  Problem pr{dimension, gamma, a, compile_source(p_source), compile_source(q_source),
             std::nullopt};
  if (phi_source) pr.phi = compile_source(*phi_source);
  return pr;
}

bool RunConfig::operator==(const RunConfig& other) const {
  return dimension == other.dimension && gamma == other.gamma && a == other.a &&
         p_source == other.p_source && q_source == other.q_source &&
         phi_source == other.phi_source && solver.radii == other.solver.radii &&
         solver.h == other.solver.h && solver.cauchy_tol == other.solver.cauchy_tol &&
         solver.tail_tol == other.solver.tail_tol &&
         solver.newton_tol == other.solver.newton_tol &&
         solver.max_iter == other.solver.max_iter &&
         solver.eigen_tol == other.solver.eigen_tol &&
         solver.k_tol == other.solver.k_tol &&
         solver.integrability_tol == other.solver.integrability_tol &&
         output_dir == other.output_dir && formats == other.formats;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  cfg.solver = ExhaustionConfig{};

  bool saw_n = false, saw_gamma = false, saw_a = false, saw_p = false, saw_q = false;

  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string s = trim(raw);
    if (s.empty()) continue;

    if (s.front() == '[') {
      if (s.back() != ']') {
        throw config_error("line " + std::to_string(line) + ": unterminated section header");
      }
      section = s.substr(1, s.size() - 2);
      if (section != "problem" && section != "solver" && section != "output") {
        throw config_error("line " + std::to_string(line) + ": unknown section [" + section + "]");
      }
      continue;
    }

    const std::size_t eq = s.find('=');
    if (eq == std::string::npos) {
      throw config_error("line " + std::to_string(line) + ": expected key = value");
    }
    const std::string key = trim(s.substr(0, eq));
    const std::string value = strip_quotes(trim(s.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      throw config_error("line " + std::to_string(line) + ": empty key or value");
    }
    if (section.empty()) {
      throw config_error("line " + std::to_string(line) + ": key before any [section]");
    }

    if (section == "problem") {
      if (key == "N") {
        cfg.dimension = parse_int(value, line);
        saw_n = true;
      } else if (key == "gamma") {
        cfg.gamma = parse_double(value, line);
        saw_gamma = true;
      } else if (key == "a") {
        cfg.a = parse_double(value, line);
        saw_a = true;
      } else if (key == "p") {
        cfg.p_source = value;
        saw_p = true;
      } else if (key == "q") {
        cfg.q_source = value;
        saw_q = true;
      } else if (key == "phi") {
        cfg.phi_source = value;
      } else {
        throw config_error("line " + std::to_string(line) + ": unknown key '" + key +
                           "' in [problem]");
      }
    } else if (section == "solver") {
      if (key == "h") {
        cfg.solver.h = parse_double(value, line);
      } else if (key == "radii") {
        cfg.solver.radii = parse_list(value, line);
      } else if (key == "cauchy_tol") {
        cfg.solver.cauchy_tol = parse_double(value, line);
      } else if (key == "tail_tol") {
        cfg.solver.tail_tol = parse_double(value, line);
      } else if (key == "newton_tol") {
        cfg.solver.newton_tol = parse_double(value, line);
      } else if (key == "max_iter") {
        cfg.solver.max_iter = parse_int(value, line);
      } else if (key == "eigen_tol") {
        cfg.solver.eigen_tol = parse_double(value, line);
      } else if (key == "k_tol") {
        cfg.solver.k_tol = parse_double(value, line);
      } else if (key == "integrability_tol") {
        cfg.solver.integrability_tol = parse_double(value, line);
      } else {
        throw config_error("line " + std::to_string(line) + ": unknown key '" + key +
                           "' in [solver]");
      }
    } else {  // output
      if (key == "dir") {
        cfg.output_dir = value;
      } else if (key == "formats") {
        cfg.formats.clear();
        std::stringstream ss(value);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const std::string f = trim(item);
          if (f != "csv" && f != "json" && f != "svg") {
            throw config_error("line " + std::to_string(line) + ": unknown format '" + f + "'");
          }
          cfg.formats.insert(f);
        }
      } else {
        throw config_error("line " + std::to_string(line) + ": unknown key '" + key +
                           "' in [output]");
      }
    }
  }

  std::vector<std::string> missing;
  if (!saw_n) missing.push_back("N");
  if (!saw_gamma) missing.push_back("gamma");
  if (!saw_a) missing.push_back("a");
  if (!saw_p) missing.push_back("p");
  if (!saw_q) missing.push_back("q");
  if (!missing.empty()) {
    std::string msg = "missing required key(s):";
    for (const auto& k : missing) msg += " " + k;
    throw config_error(msg);
  }

  // Surface malformed potential expressions as config errors now, not at
  // first evaluation.
  try {
    cfg.to_problem();
  } catch (const parse_error& e) {
    throw config_error(std::string("invalid potential expression: ") + e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const RunConfig& cfg) {
  std::ostringstream os;
  os << "[problem]\n";
  os << "N = " << cfg.dimension << "\n";
  os << "gamma = " << fmt(cfg.gamma) << "\n";
  os << "a = " << fmt(cfg.a) << "\n";
  os << "p = \"" << cfg.p_source << "\"\n";
  os << "q = \"" << cfg.q_source << "\"\n";
  if (cfg.phi_source) os << "phi = \"" << *cfg.phi_source << "\"\n";
  os << "\n[solver]\n";
  os << "h = " << fmt(cfg.solver.h) << "\n";
  os << "radii = ";
  for (std::size_t i = 0; i < cfg.solver.radii.size(); ++i) {
    if (i) os << ",";
    os << fmt(cfg.solver.radii[i]);
  }
  os << "\n";
  os << "cauchy_tol = " << fmt(cfg.solver.cauchy_tol) << "\n";
  os << "tail_tol = " << fmt(cfg.solver.tail_tol) << "\n";
  os << "newton_tol = " << fmt(cfg.solver.newton_tol) << "\n";
  os << "max_iter = " << cfg.solver.max_iter << "\n";
  os << "eigen_tol = " << fmt(cfg.solver.eigen_tol) << "\n";
  os << "k_tol = " << fmt(cfg.solver.k_tol) << "\n";
  os << "integrability_tol = " << fmt(cfg.solver.integrability_tol) << "\n";
  os << "\n[output]\n";
  os << "dir = " << cfg.output_dir << "\n";
  os << "formats = ";
  bool first = true;
  for (const auto& f : cfg.formats) {
    if (!first) os << ",";
    os << f;
    first = false;
  }
  os << "\n";
  return os.str();
}

void save_config(const RunConfig& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw config_error("cannot write config file '" + path + "'");
  out << format_config(cfg);
}

}  // namespace efsolve
