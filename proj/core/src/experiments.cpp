#include "disclab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "disclab/error.hpp"

namespace disclab {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Params::Params(const std::vector<ParamDoc>& docs, const std::map<std::string, std::string>& given,
               std::filesystem::path base_dir)
    : base_dir_(std::move(base_dir)) {
  for (const ParamDoc& d : docs) values_[d.name] = d.default_value;
  for (const auto& [k, v] : given) {
    if (!values_.count(k)) {
      std::string valid;
      for (const ParamDoc& d : docs) valid += (valid.empty() ? "" : ", ") + d.name;
      throw ParameterError(k, "unknown parameter (valid: " + valid + ")");
    }
    values_[k] = v;
  }
}

const std::string& Params::raw(const std::string& name) {
  const auto it = values_.find(name);
  if (it == values_.end()) throw ParameterError(name, "undocumented parameter");
  return it->second;
}

double Params::real(const std::string& name) {
  const std::string& s = raw(name);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ParameterError(name, "expected a number, got '" + s + "'");
  }
  if (used != s.size()) throw ParameterError(name, "expected a number, got '" + s + "'");
  resolved_[name] = v;
  return v;
}

long long Params::integer(const std::string& name) {
  const std::string& s = raw(name);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParameterError(name, "expected an integer, got '" + s + "'");
  }
  if (used != s.size()) throw ParameterError(name, "expected an integer, got '" + s + "'");
  resolved_[name] = v;
  return v;
}

std::string Params::text(const std::string& name) {
  const std::string& s = raw(name);
  resolved_[name] = s;
  return s;
}

nlohmann::json Params::json(const std::string& name) {
  const std::string& s = raw(name);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(s);
  } catch (const nlohmann::json::parse_error&) {
    j = s;
  }
  resolved_[name] = nlohmann::ordered_json::parse(j.dump());
  return j;
}

std::vector<double> Params::reals(const std::string& name) {
  const std::string& s = raw(name);
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(trim(item)));
    } catch (const std::exception&) {
      throw ParameterError(name, "expected comma-separated numbers, got '" + s + "'");
    }
  }
  if (out.empty()) throw ParameterError(name, "empty list");
  resolved_[name] = out;
  return out;
}

RadialScheme Params::scheme() {
  RadialScheme s;
  s.depth = static_cast<int>(integer("depth"));
  s.refinement = static_cast<int>(integer("refinement"));
  s.angular_m = static_cast<std::size_t>(integer("angular_m"));
  s.validate();
  return s;
}

std::vector<ParamDoc> with_scheme(std::vector<ParamDoc> docs, int depth, int refinement) {
  docs.push_back({"depth", std::to_string(depth), "radii r_k = 1-2^-k, k = 1..depth"});
  docs.push_back({"refinement", std::to_string(refinement), "Gauss-Legendre nodes per dyadic ring"});
  docs.push_back({"angular_m", "0", "angular samples (0 = smallest alias-free power of two)"});
  return docs;
}

const std::vector<Experiment>& experiments() {
  static const std::vector<Experiment> registry = [] {
    std::vector<Experiment> v;
    add_norm_experiments(v);
    add_carleson_experiments(v);
    add_volterra_experiments(v);
    std::sort(v.begin(), v.end(), [](const Experiment& a, const Experiment& b) { return a.name < b.name; });
    return v;
  }();
  return registry;
}

const Experiment* find_experiment(const std::string& name) {
  for (const Experiment& e : experiments()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

RunReport run_experiment(const std::string& name, const std::map<std::string, std::string>& params,
                         const std::filesystem::path& base_dir) {
  const Experiment* e = find_experiment(name);
  if (!e) {
    std::string valid;
    for (const Experiment& x : experiments()) valid += (valid.empty() ? "" : ", ") + x.name;
    throw ParameterError("experiment", "unknown experiment '" + name + "' (valid: " + valid + ")");
  }
  Params p(e->params, params, base_dir);
  RunReport report;
  report.experiment = e->name;
  e->body(p, report);
  report.params = p.resolved();
  return report;
}

std::map<std::string, std::string> parse_config(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("config", "line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ParameterError("config", "line " + std::to_string(lineno) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("config", "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace disclab
