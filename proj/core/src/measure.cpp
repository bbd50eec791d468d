#include "disclab/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

#include "disclab/circle.hpp"
#include "disclab/error.hpp"
#include "disclab/means.hpp"
#include "disclab/parallel.hpp"
#include "disclab/summation.hpp"

namespace disclab {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double sharp_density(const SharpMeasure& s, double gap) {
  const double lambda = -std::log(gap);
  return s.phi.value_at_lambda(lambda) / (gap * std::pow(1.0 + lambda, s.p / 2.0));
}

// int over gap <= e^{1-u0} of w 2r dr, in the variable u = log(e/gap).
BoxMass radial_mass_beyond(const MeasureSpec& mu, double u0, const LogScaleOptions& opt) {
  LogScaleIntegral res;
  if (const auto* s = std::get_if<SharpMeasure>(&mu.variant())) {
    // the 1/gap of the density cancels dr = gap du
    auto density = [s](double u) {
      const double gap = std::exp(1.0 - u);
      return s->phi.value_at_lambda(u - 1.0) * std::pow(u, -s->p / 2.0) * 2.0 * (1.0 - gap);
    };
    std::function<double(double)> closed;
    if (const auto* pl = std::get_if<PowerLog>(&s->phi.variant())) {
      const double e = pl->c - s->p / 2.0 + 1.0;
      closed = [e](double u) {
        return e < 0.0 ? 2.0 * std::pow(u, e) / -e : std::numeric_limits<double>::infinity();
      };
    }
    res = integrate_log_scale(density, u0, opt, closed);
  } else {
    auto density = [&mu](double u) {
      const double gap = std::exp(1.0 - u);
      return mu.density_at_gap(gap) * 2.0 * (1.0 - gap) * gap;
    };
    res = integrate_log_scale(density, u0, opt);
  }
  return {res.value, res.divergent};
}

}  // namespace

MeasureSpec::MeasureSpec(Variant v) : v_(std::move(v)) {
  if (const auto* a = std::get_if<AtomList>(&v_)) {
    for (const Atom& at : a->atoms) {
      if (!(std::abs(at.z) < 1.0)) throw ParameterError("atoms", "atoms must lie inside the disc");
      if (!(at.mass > 0.0)) throw ParameterError("atoms", "masses must be positive");
    }
  } else if (const auto* s = std::get_if<SharpMeasure>(&v_)) {
    if (!(s->p > 2.0)) throw ParameterError("p", "sharp measure needs p > 2");
  } else if (!std::get<RadialDensity>(v_).w) {
    throw ParameterError("w", "radial density missing");
  }
}

MeasureSpec MeasureSpec::radial_formula(double scale, double gamma, double beta) {
  if (!(scale >= 0.0)) throw ParameterError("scale", "must be nonnegative");
  if (!(gamma > -1.0)) throw ParameterError("gamma", "must exceed -1");
  char label[128];
  std::snprintf(label, sizeof label, "radial{scale=%.17g,gamma=%.17g,beta=%.17g}", scale, gamma, beta);
  return MeasureSpec(RadialDensity{[=](double gap) {
                                     if (scale == 0.0) return 0.0;
                                     return scale * std::pow(gap * (2.0 - gap), gamma) *
                                            std::pow(1.0 - std::log(gap), -beta);
                                   },
                                   label});
}

MeasureSpec MeasureSpec::atoms(std::vector<Atom> atoms) { return MeasureSpec(AtomList{std::move(atoms)}); }

MeasureSpec MeasureSpec::sharp(PhiSpec phi, double p) { return MeasureSpec(SharpMeasure{phi, p}); }

double MeasureSpec::density_at_gap(double gap) const {
  return std::visit(Overloaded{[&](const RadialDensity& d) { return d.w(gap); },
                               [&](const SharpMeasure& s) { return sharp_density(s, gap); },
                               [](const AtomList&) -> double {
                                 throw ParameterError("measure", "atomic measure has no density");
                               }},
                    v_);
}

std::string MeasureSpec::describe() const {
  return std::visit(Overloaded{[](const RadialDensity& d) { return d.label; },
                               [](const SharpMeasure& s) {
                                 char buf[64];
                                 std::snprintf(buf, sizeof buf, ",p=%.17g}", s.p);
                                 return "sharp{" + s.phi.describe() + buf;
                               },
                               [](const AtomList& a) {
                                 return "atoms{n=" + std::to_string(a.atoms.size()) + "}";
                               }},
                    v_);
}

double Gauge::operator()(double t) const {
  return std::visit(Overloaded{[&](const GaugePower& g) { return std::pow(t, g.s); },
                               [&](const GaugePowerLog& g) {
                                 return std::pow(t, g.s) * std::pow(1.0 - std::log(t), -g.beta);
                               },
                               [&](const GaugePowerLogPhi& g) {
                                 return std::pow(t, g.s) * std::pow(1.0 - std::log(t), -g.beta) *
                                        g.phi.value_at_lambda(-std::log(t));
                               }},
                    v_);
}

std::string Gauge::describe() const {
  char buf[160];
  std::visit(Overloaded{[&](const GaugePower& g) { std::snprintf(buf, sizeof buf, "t^%.17g", g.s); },
                        [&](const GaugePowerLog& g) {
                          std::snprintf(buf, sizeof buf, "t^%.17g (log e/t)^-%.17g", g.s, g.beta);
                        },
                        [&](const GaugePowerLogPhi& g) {
                          std::snprintf(buf, sizeof buf, "t^%.17g (log e/t)^-%.17g %s(1-t)", g.s,
                                        g.beta, g.phi.describe().c_str());
                        }},
             v_);
  return buf;
}

BoxMass box_mass(const MeasureSpec& mu, const DyadicInterval& I, const LogScaleOptions& opt) {
  if (I.level < 1 || I.level > 60) throw ParameterError("level", "must lie in [1,60]");
  if (I.position >= (std::uint64_t{1} << I.level)) {
    throw ParameterError("position", "must be below 2^level");
  }
  const double len = I.length();
  if (const auto* a = std::get_if<AtomList>(&mu.variant())) {
    CompensatedSum s;
    for (const Atom& at : a->atoms) {
      if (1.0 - std::abs(at.z) <= len && dyadic_position(std::arg(at.z), I.level) == I.position) {
        s += at.mass;
      }
    }
    return {s.value(), false};
  }
  BoxMass inner = radial_mass_beyond(mu, 1.0 + I.level * std::numbers::ln2, opt);
  inner.value *= len;
  return inner;
}

BoxMass total_mass(const MeasureSpec& mu, const LogScaleOptions& opt) {
  if (const auto* a = std::get_if<AtomList>(&mu.variant())) {
    CompensatedSum s;
    for (const Atom& at : a->atoms) s += at.mass;
    return {s.value(), false};
  }
  return radial_mass_beyond(mu, 1.0, opt);
}

CarlesonReport carleson_constant(const MeasureSpec& mu, const Gauge& gauge, int max_level,
                                 const LogScaleOptions& opt) {
  if (max_level < 1 || max_level > 60) throw ParameterError("max_level", "must lie in [1,60]");
  CarlesonReport rep;
  std::vector<CarlesonLevel> levels(static_cast<std::size_t>(max_level));
  std::vector<char> divergent(levels.size(), 0);
  if (const auto* a = std::get_if<AtomList>(&mu.variant())) {
    for (int k = 1; k <= max_level; ++k) {
      std::map<std::uint64_t, double> boxes;
      for (const Atom& at : a->atoms) {
        if (1.0 - std::abs(at.z) <= std::ldexp(1.0, -k)) {
          boxes[dyadic_position(std::arg(at.z), k)] += at.mass;
        }
      }
      CarlesonLevel lv{k, 0.0, 0};
      const double h = gauge(std::ldexp(1.0, -k));
      for (const auto& [pos, mass] : boxes) {
        if (mass / h > lv.ratio) lv.ratio = mass / h, lv.position = pos;
      }
      levels[static_cast<std::size_t>(k - 1)] = lv;
    }
  } else {
    parallel_for(levels.size(), [&](std::size_t i) {
      const int k = static_cast<int>(i) + 1;
      const BoxMass bm = box_mass(mu, {k, 0}, opt);
      levels[i] = {k, bm.value / gauge(std::ldexp(1.0, -k)), 0};
      divergent[i] = bm.divergent;
    });
  }
  rep.profile = levels;
  rep.sup_ratio = -1.0;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    rep.divergent = rep.divergent || divergent[i];
    if (levels[i].ratio > rep.sup_ratio) {
      rep.sup_ratio = levels[i].ratio;
      rep.argmax_level = levels[i].level;
      rep.argmax_position = levels[i].position;
    }
  }
  return rep;
}

std::vector<std::pair<int, double>> vanishing_profile(const MeasureSpec& mu, const Gauge& gauge,
                                                      int levels, const LogScaleOptions& opt) {
  const CarlesonReport rep = carleson_constant(mu, gauge, levels, opt);
  std::vector<std::pair<int, double>> out(rep.profile.size());
  double tail = 0.0;
  for (std::size_t i = rep.profile.size(); i-- > 0;) {
    tail = std::max(tail, rep.profile[i].ratio);
    out[i] = {rep.profile[i].level, tail};
  }
  return out;
}

double lq_integral(const MeasureSpec& mu, const PowerSeries& f, double q, const RadialScheme& scheme) {
  if (!(q > 0.0)) throw ParameterError("q", "must be positive");
  if (const auto* a = std::get_if<AtomList>(&mu.variant())) {
    CompensatedSum s;
    for (const Atom& at : a->atoms) s += at.mass * std::pow(std::abs(f(at.z)), q);
    return s.value();
  }
  scheme.validate();
  const auto nodes = ring_nodes(scheme.depth, scheme.refinement);
  const std::size_t m = alias_free_samples(f.degree());
  const auto terms = parallel_map<double>(nodes.size(), [&](std::size_t i) {
    const RadialNode& nd = nodes[i];
    const double mq = integral_mean(f, q, nd.r, m);
    return nd.weight * 2.0 * nd.r * mu.density_at_gap(nd.gap) * std::pow(mq, q);
  });
  CompensatedSum s;
  for (double t : terms) s += t;
  return s.value();
}

}  // namespace disclab
