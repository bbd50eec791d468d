#include "disclab/specs.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "disclab/error.hpp"

namespace disclab {
namespace {

using json = nlohmann::json;

const json& field(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParameterError(ctx + "." + key, "missing");
  }
  return j.at(key);
}

double number(const json& j, const char* key, const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_number()) throw ParameterError(ctx + "." + key, "must be a number");
  return v.get<double>();
}

double number_or(const json& j, const char* key, double fallback, const std::string& ctx) {
  return j.contains(key) ? number(j, key, ctx) : fallback;
}

std::int64_t integer(const json& j, const char* key, const std::string& ctx) {
  const json& v = field(j, key, ctx);
  if (!v.is_number_integer() && !(v.is_number() && v.get<double>() == std::floor(v.get<double>()))) {
    throw ParameterError(ctx + "." + key, "must be an integer");
  }
  return v.is_number_integer() ? v.get<std::int64_t>() : static_cast<std::int64_t>(v.get<double>());
}

std::size_t nonneg(const json& j, const char* key, const std::string& ctx) {
  const auto v = integer(j, key, ctx);
  if (v < 0) throw ParameterError(ctx + "." + key, "must be nonnegative");
  return static_cast<std::size_t>(v);
}

cplx complex_value(const json& v, const std::string& ctx) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ParameterError(ctx, "expected a number or [re, im]");
}

std::string type_of(const json& j, const std::string& ctx) {
  const json& t = field(j, "type", ctx);
  if (!t.is_string()) throw ParameterError(ctx + ".type", "must be a string");
  return t.get<std::string>();
}

}  // namespace

std::vector<cplx> coefficients_from_json(const json& j) {
  if (!j.is_array()) throw ParameterError("coeffs", "expected an array of [re, im] pairs");
  std::vector<cplx> c;
  c.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& e = j[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw ParameterError("coeffs[" + std::to_string(i) + "]", "expected [re, im]");
    }
    c.emplace_back(e[0].get<double>(), e[1].get<double>());
  }
  return c;
}

json coefficients_to_json(const PowerSeries& f) {
  json arr = json::array();
  for (const cplx& c : f.coeffs()) arr.push_back({c.real(), c.imag()});
  return arr;
}

PowerSeries read_coefficient_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("path", "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ParameterError("path", path.string() + ": " + e.what());
  }
  return PowerSeries(coefficients_from_json(j));
}

void write_coefficient_file(const std::filesystem::path& path, const PowerSeries& f) {
  std::ofstream out(path);
  if (!out) throw ParameterError("path", "cannot write " + path.string());
  out << coefficients_to_json(f).dump() << '\n';
}

PhiSpec phi_from_spec(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw ParameterError("phi", "expected powerlog:c or iterlog:N,alpha");
    const std::string kind = s.substr(0, colon);
    const std::string rest = s.substr(colon + 1);
    try {
      if (kind == "powerlog") return PhiSpec::power_log(std::stod(rest));
      if (kind == "iterlog") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw ParameterError("phi", "iterlog needs N,alpha");
        return PhiSpec::iterated_log(std::stoi(rest.substr(0, comma)), std::stod(rest.substr(comma + 1)));
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const ParameterError*>(&e)) throw;
      throw ParameterError("phi", "cannot parse '" + s + "'");
    }
    throw ParameterError("phi", "unknown family '" + kind + "'");
  }
  const std::string t = type_of(j, "phi");
  if (t == "powerlog") return PhiSpec::power_log(number(j, "c", "phi"));
  if (t == "iterlog") {
    return PhiSpec::iterated_log(static_cast<int>(integer(j, "N", "phi")), number(j, "alpha", "phi"));
  }
  throw ParameterError("phi.type", "unknown family '" + t + "' (powerlog, iterlog)");
}

Truncated series_from_spec(const json& j, const std::filesystem::path& base_dir) {
  const std::string t = type_of(j, "series");
  const std::string ctx = "series[" + t + "]";
  if (t == "monomial") return {monomial(nonneg(j, "n", ctx)), 0.0};
  if (t == "lacunary") {
    return lacunary_from_phi(phi_from_spec(field(j, "phi", ctx)), number(j, "p", ctx),
                             static_cast<int>(integer(j, "K", ctx)));
  }
  if (t == "testfn") {
    const TestFnParams params{complex_value(field(j, "a", ctx), ctx + ".a"), number(j, "p", ctx),
                              number(j, "gamma", ctx)};
    const std::size_t N = j.contains("N") ? nonneg(j, "N", ctx) : test_function_degree(std::abs(params.a));
    return test_function(params, N);
  }
  if (t == "symbol") {
    return counterexample_symbol(number(j, "alpha", ctx), static_cast<int>(integer(j, "J", ctx)));
  }
  if (t == "log") return {log_series(nonneg(j, "N", ctx)), 0.0};
  if (t == "geometric") {
    return {geometric(complex_value(field(j, "w", ctx), ctx + ".w"), nonneg(j, "N", ctx)), 0.0};
  }
  if (t == "binomial") return {binomial_power(number(j, "beta", ctx), nonneg(j, "N", ctx)), 0.0};
  if (t == "random") {
    return {random_polynomial(nonneg(j, "degree", ctx), static_cast<std::uint64_t>(nonneg(j, "seed", ctx))), 0.0};
  }
  if (t == "coeffs") return {PowerSeries(coefficients_from_json(field(j, "values", ctx))), 0.0};
  if (t == "file") {
    const json& p = field(j, "path", ctx);
    if (!p.is_string()) throw ParameterError(ctx + ".path", "must be a string");
    std::filesystem::path path = p.get<std::string>();
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    return {read_coefficient_file(path), 0.0};
  }
  throw ParameterError("series.type",
                       "unknown constructor '" + t +
                           "' (monomial, lacunary, testfn, symbol, log, geometric, binomial, random, coeffs, file)");
}

MeasureSpec measure_from_spec(const json& j) {
  const std::string t = type_of(j, "measure");
  const std::string ctx = "measure[" + t + "]";
  if (t == "radial") {
    return MeasureSpec::radial_formula(number_or(j, "scale", 1.0, ctx), number_or(j, "gamma", 0.0, ctx),
                                       number_or(j, "beta", 0.0, ctx));
  }
  if (t == "atoms") {
    const json& arr = field(j, "atoms", ctx);
    if (!arr.is_array()) throw ParameterError(ctx + ".atoms", "expected [[re, im, mass], ...]");
    std::vector<Atom> atoms;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const json& e = arr[i];
      if (!e.is_array() || e.size() != 3) {
        throw ParameterError(ctx + ".atoms[" + std::to_string(i) + "]", "expected [re, im, mass]");
      }
      atoms.push_back({{e[0].get<double>(), e[1].get<double>()}, e[2].get<double>()});
    }
    return MeasureSpec::atoms(std::move(atoms));
  }
  if (t == "sharp") return MeasureSpec::sharp(phi_from_spec(field(j, "phi", ctx)), number(j, "p", ctx));
  throw ParameterError("measure.type", "unknown measure '" + t + "' (radial, atoms, sharp)");
}

OperatorProbe probe_from_spec(const json& j, const std::filesystem::path& base_dir) {
  OperatorProbe probe;
  probe.symbol = series_from_spec(field(j, "symbol", "probe"), base_dir).series;
  probe.p = number_or(j, "p", 2.0, "probe");
  probe.q = number_or(j, "q", 2.0, "probe");
  const json& fam = field(j, "family", "probe");
  if (!fam.is_array() || fam.empty()) throw ParameterError("probe.family", "must be a nonempty array");
  for (const json& e : fam) probe.family.emplace_back(e.dump(), series_from_spec(e, base_dir).series);
  return probe;
}

}  // namespace disclab
