#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "disclab/constructions.hpp"
#include "disclab/measure.hpp"
#include "disclab/phi.hpp"
#include "disclab/volterra.hpp"

namespace disclab {

/// Coefficient files hold a JSON array of [re, im] pairs.
std::vector<cplx> coefficients_from_json(const nlohmann::json& j);
nlohmann::json coefficients_to_json(const PowerSeries& f);
PowerSeries read_coefficient_file(const std::filesystem::path& path);
void write_coefficient_file(const std::filesystem::path& path, const PowerSeries& f);

/// {"type":"powerlog","c":0.2} or {"type":"iterlog","N":1,"alpha":1}; the
/// short strings "powerlog:0.2" and "iterlog:1,1" are accepted too.
PhiSpec phi_from_spec(const nlohmann::json& j);

/// Constructor specs, keyed by "type":
///   monomial  {n}
///   lacunary  {phi, p, K}
///   testfn    {a: [re, im] | number, p, gamma, N (optional)}
///   symbol    {alpha, J}
///   log       {N}
///   geometric {w: [re, im] | number, N}
///   binomial  {beta, N}
///   random    {degree, seed}
///   coeffs    {values: [[re, im], ...]}
///   file      {path} (relative paths resolve against base_dir)
Truncated series_from_spec(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

/// {"type":"radial","scale":1,"gamma":0,"beta":0} | {"type":"atoms",
/// "atoms":[[re, im, mass], ...]} | {"type":"sharp","phi":..., "p":4}.
MeasureSpec measure_from_spec(const nlohmann::json& j);

/// {"symbol": ctor, "p": ..., "q": ..., "family": [ctor, ...]}. Family
/// labels are the compact JSON text of each constructor.
OperatorProbe probe_from_spec(const nlohmann::json& j, const std::filesystem::path& base_dir = {});

}  // namespace disclab
