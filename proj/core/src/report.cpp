#include "disclab/report.hpp"

#include <fftw3.h>
#include <gsl/gsl_version.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace disclab {

bool RunReport::all_pass() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void RunReport::add_row(std::vector<Cell> row) {
  if (!columns.empty() && row.size() != columns.size()) {
    throw std::invalid_argument("row has " + std::to_string(row.size()) + " cells for " +
                                std::to_string(columns.size()) + " columns");
  }
  rows.push_back(std::move(row));
}

Check& RunReport::check(std::string criterion, std::string name, double measured, double lo, double hi,
                        std::string detail) {
  const bool pass = measured >= lo && measured <= hi;
  checks.push_back({std::move(criterion), std::move(name), measured, lo, hi, pass, std::move(detail)});
  return checks.back();
}

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return csv_field(std::get<std::string>(c));
}

bool is_scalar(const nlohmann::ordered_json& j) { return !j.is_array() && !j.is_object(); }

void emit(const nlohmann::ordered_json& j, std::string& out, int indent, int level) {
  using value_t = nlohmann::ordered_json::value_t;
  const std::string pad(static_cast<std::size_t>(indent * (level + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(indent * level), ' ');
  switch (j.type()) {
    case value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_number(x) : "\"" + format_number(x) + "\"";
      return;
    }
    case value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + nlohmann::ordered_json(it.key()).dump() + ": ";
        emit(it.value(), out, indent, level + 1);
      }
      out += "\n" + close_pad + "}";
      return;
    }
    case value_t::array: {
      bool flat = true;
      for (const auto& e : j) flat = flat && is_scalar(e);
      if (j.empty() || flat) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          emit(j[i], out, indent, level + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        emit(j[i], out, indent, level + 1);
      }
      out += "\n" + close_pad + "]";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::ordered_json& j, int indent) {
  std::string out;
  emit(j, out, indent, 0);
  return out;
}

std::string to_csv(const RunReport& report) {
  std::string out;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_field(report.columns[i]);
  }
  out += '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const RunReport& report, const std::string& timestamp) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["experiment"] = report.experiment;
  j["params"] = report.params;
  j["columns"] = report.columns;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : report.rows) {
    auto r = nlohmann::ordered_json::array();
    for (const Cell& c : row) {
      std::visit([&](const auto& v) { r.push_back(v); }, c);
    }
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  auto checks = nlohmann::ordered_json::array();
  for (const Check& c : report.checks) {
    checks.push_back({{"criterion", c.criterion},
                      {"name", c.name},
                      {"measured", c.measured},
                      {"lo", c.lo},
                      {"hi", c.hi},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  }
  j["summary"] = {{"pass", report.all_pass()}, {"checks", std::move(checks)}};
  j["notes"] = report.notes;
  j["versions"] = {{"disclab", std::string(kVersion)}, {"fftw", std::string(fftw_version)}, {"gsl", std::string(GSL_VERSION)}};
  if (!timestamp.empty()) j["generated_at"] = timestamp;
  return dump_json(j) + "\n";
}

}  // namespace disclab
