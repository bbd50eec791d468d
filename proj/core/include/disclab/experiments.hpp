#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "disclab/quadrature.hpp"
#include "disclab/report.hpp"

namespace disclab {

struct ParamDoc {
  std::string name;
  std::string default_value;
  std::string help;
};

/// Typed view of the key=value parameters of one run. Every lookup must name
/// a documented parameter; the resolved value is recorded for the report.
class Params {
 public:
  Params(const std::vector<ParamDoc>& docs, const std::map<std::string, std::string>& given,
         std::filesystem::path base_dir = {});

  double real(const std::string& name);
  long long integer(const std::string& name);
  std::string text(const std::string& name);
  /// Parses the value as JSON; bare words become JSON strings.
  nlohmann::json json(const std::string& name);
  std::vector<double> reals(const std::string& name);  // comma-separated
  /// depth, refinement and angular_m.
  RadialScheme scheme();

  const nlohmann::ordered_json& resolved() const noexcept { return resolved_; }
  const std::filesystem::path& base_dir() const noexcept { return base_dir_; }

 private:
  const std::string& raw(const std::string& name);

  std::map<std::string, std::string> values_;
  nlohmann::ordered_json resolved_ = nlohmann::ordered_json::object();
  std::filesystem::path base_dir_;
};

struct Experiment {
  std::string name;
  std::string description;
  std::string criterion;
  std::vector<ParamDoc> params;
  std::function<void(Params&, RunReport&)> body;
};

/// Registry in stable (alphabetical) order.
const std::vector<Experiment>& experiments();
const Experiment* find_experiment(const std::string& name);

/// Runs a registered experiment. Throws ParameterError("experiment", ...)
/// listing the valid names when `name` is unknown, and ParameterError for
/// unknown or malformed parameters.
RunReport run_experiment(const std::string& name, const std::map<std::string, std::string>& params,
                         const std::filesystem::path& base_dir = {});

/// key = value lines; '#' starts a comment; blank lines ignored.
std::map<std::string, std::string> parse_config(const std::string& text);
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

/// Registration hooks implemented per module.
void add_norm_experiments(std::vector<Experiment>& out);
void add_carleson_experiments(std::vector<Experiment>& out);
void add_volterra_experiments(std::vector<Experiment>& out);

/// Parameters shared by experiments that sample radial schemes.
std::vector<ParamDoc> with_scheme(std::vector<ParamDoc> docs, int depth = 24, int refinement = 8);

}  // namespace disclab
