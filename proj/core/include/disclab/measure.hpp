#pragma once

#include <functional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "disclab/dyadic.hpp"
#include "disclab/phi.hpp"
#include "disclab/power_series.hpp"
#include "disclab/quadrature.hpp"

namespace disclab {

/// dmu = w(|z|) dA(z). The density is given as a function of the gap
/// t = 1 - |z| so that boxes near the boundary stay accurate.
struct RadialDensity {
  std::function<double(double gap)> w;
  std::string label;
};

struct Atom {
  cplx z;
  double mass;
};

struct AtomList {
  std::vector<Atom> atoms;
};

/// dmu = Phi(|z|) dA / ((1-|z|) (log e/(1-|z|))^{p/2}).
struct SharpMeasure {
  PhiSpec phi;
  double p;
};

class MeasureSpec {
 public:
  using Variant = std::variant<RadialDensity, AtomList, SharpMeasure>;

  explicit MeasureSpec(Variant v);
  /// w(r) = scale (1-r^2)^gamma (log e/(1-r))^-beta.
  static MeasureSpec radial_formula(double scale, double gamma, double beta);
  static MeasureSpec atoms(std::vector<Atom> atoms);
  static MeasureSpec sharp(PhiSpec phi, double p);

  const Variant& variant() const noexcept { return v_; }
  bool is_radial() const noexcept { return !std::holds_alternative<AtomList>(v_); }
  /// Density as a function of the gap; only for radial variants.
  double density_at_gap(double gap) const;
  std::string describe() const;

 private:
  Variant v_;
};

struct GaugePower {
  double s;
};
struct GaugePowerLog {
  double s;
  double beta;
};
struct GaugePowerLogPhi {
  double s;
  double beta;
  PhiSpec phi;
};

/// Boundary gauge h(t) = t^s (log e/t)^-beta [Phi(1-t)].
class Gauge {
 public:
  using Variant = std::variant<GaugePower, GaugePowerLog, GaugePowerLogPhi>;

  explicit Gauge(Variant v) : v_(std::move(v)) {}
  double operator()(double t) const;
  const Variant& variant() const noexcept { return v_; }
  std::string describe() const;

 private:
  Variant v_;
};

struct BoxMass {
  double value = 0.0;
  bool divergent = false;
};

/// mu(S(I)) with S(I) = {r e^{it} : e^{it} in I, 1-|I| <= r < 1}.
/// Throws ParameterError unless level >= 1 and position < 2^level.
BoxMass box_mass(const MeasureSpec& mu, const DyadicInterval& I,
                 const LogScaleOptions& opt = {});

/// Mass of the whole disc (level 0).
BoxMass total_mass(const MeasureSpec& mu, const LogScaleOptions& opt = {});

struct CarlesonLevel {
  int level;
  double ratio;
  std::uint64_t position;
};

struct CarlesonReport {
  double sup_ratio = 0.0;
  int argmax_level = 1;
  std::uint64_t argmax_position = 0;
  std::vector<CarlesonLevel> profile;
  /// Some box mass failed the Cauchy test (the radial integral diverges).
  bool divergent = false;
};

/// sup of mu(S(I))/h(|I|) over dyadic I with 1 <= level <= max_level.
/// Ties go to the smallest level, then the smallest position.
CarlesonReport carleson_constant(const MeasureSpec& mu, const Gauge& gauge, int max_level,
                                 const LogScaleOptions& opt = {});

/// (L, sup of the level-ratio over L <= k <= levels), L = 1..levels.
std::vector<std::pair<int, double>> vanishing_profile(const MeasureSpec& mu, const Gauge& gauge,
                                                      int levels,
                                                      const LogScaleOptions& opt = {});

/// int_D |f|^q dmu. Atoms are summed exactly, radial measures use the ring
/// nodes of the scheme with M_q from circle samples.
double lq_integral(const MeasureSpec& mu, const PowerSeries& f, double q,
                   const RadialScheme& scheme = {});

}  // namespace disclab
