#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace disclab {

inline constexpr int kReportSchema = 1;
inline constexpr const char* kVersion = "0.1.0";

using Cell = std::variant<double, std::int64_t, std::string>;

/// One pass/fail line of an experiment summary. `criterion` names the
/// acceptance criterion (C1..C10) or a regression bracket (REG-...).
struct Check {
  std::string criterion;
  std::string name;
  double measured;
  double lo;
  double hi;
  bool pass;
  std::string detail;
};

struct RunReport {
  std::string experiment;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<Check> checks;
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();

  bool all_pass() const;
  /// Throws std::invalid_argument when the row does not match the columns.
  void add_row(std::vector<Cell> row);
  /// Adds a check that passes when lo <= measured <= hi.
  Check& check(std::string criterion, std::string name, double measured, double lo, double hi,
               std::string detail = {});
};

/// %.17g; non-finite values as nan, inf, -inf.
std::string format_number(double x);

std::string to_csv(const RunReport& report);
/// timestamp is stored under "generated_at" unless empty.
std::string to_json(const RunReport& report, const std::string& timestamp = {});
/// Serializes any JSON tree with floats at 17 significant digits.
std::string dump_json(const nlohmann::ordered_json& j, int indent = 2);

}  // namespace disclab
