#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "disclab/constructions.hpp"
#include "disclab/error.hpp"
#include "disclab/experiments.hpp"
#include "disclab/parallel.hpp"
#include "disclab/specs.hpp"
#include "disclab/volterra.hpp"

namespace disclab {
namespace {

// Frozen from the reference run of opnorm-probe with its defaults.
constexpr double kOpnormLo = 1.70;
constexpr double kOpnormHi = 1.85;

void growth_rows(const GrowthExperiment& g, RunReport& rep) {
  rep.columns = {"level", "m2", "mp", "normalized", "sharp_curve"};
  for (std::size_t i = 0; i < g.levels.size(); ++i) {
    rep.add_row({static_cast<std::int64_t>(g.levels[i]), g.m2[i], g.mp[i], g.normalized[i], g.sharp_curve[i]});
  }
  auto fit = [](const GrowthFit& f) {
    nlohmann::ordered_json j;
    j["first_level"] = f.first_level;
    j["last_level"] = f.last_level;
    j["slope"] = f.slope;
    j["intercept"] = f.intercept;
    j["max_residual"] = f.max_residual;
    return j;
  };
  rep.notes["lower_fit"] = fit(g.lower);
  rep.notes["upper_fit"] = fit(g.upper);
  rep.notes["curve_fit"] = fit(g.curve);
}

GrowthExperiment run_growth(Params& p) {
  const PhiSpec phi = phi_from_spec(p.json("phi"));
  return growth_experiment(phi, p.real("p"), static_cast<int>(p.integer("K")),
                           static_cast<int>(p.integer("first")), static_cast<int>(p.integer("last")));
}

void growth_lower(Params& p, RunReport& rep) {
  const auto g = run_growth(p);
  const double lo = p.real("slope_lo"), hi = p.real("slope_hi");
  growth_rows(g, rep);
  rep.check("C3", "slope of log M_2 against log log(e/(1-r)), levels " + std::to_string(g.lower.first_level) +
                      ".." + std::to_string(g.lower.last_level),
            g.lower.slope, lo, hi);
}

void growth_upper(Params& p, RunReport& rep) {
  const auto g = run_growth(p);
  const int tail = static_cast<int>(p.integer("tail"));
  const double slope_hi = p.real("slope_hi");
  if (tail < 2 || static_cast<std::size_t>(tail) > g.levels.size()) {
    throw ParameterError("tail", "need 2 <= tail <= number of levels");
  }
  growth_rows(g, rep);
  double worst = -kInfinity;
  for (std::size_t i = g.levels.size() - static_cast<std::size_t>(tail) + 1; i < g.levels.size(); ++i) {
    worst = std::max(worst, g.normalized[i] / g.normalized[i - 1] - 1.0);
  }
  rep.check("C3", "largest relative step of M_p/(log e/(1-r))^{1/2-1/p} over the last " + std::to_string(tail) +
                      " levels",
            worst, -kInfinity, 0.0);
  rep.check("C3", "slope of log M_p, levels " + std::to_string(g.upper.first_level) + ".." +
                      std::to_string(g.upper.last_level),
            g.upper.slope, -kInfinity, slope_hi);
}

void tg_counterexample(Params& p, RunReport& rep) {
  const double pp = p.real("p");
  const double eps = p.real("eps");
  const double alpha = p.real("alpha");
  const int J = static_cast<int>(p.integer("J_max"));
  const int from = static_cast<int>(p.integer("increasing_from"));
  const int s_lo = static_cast<int>(p.integer("series_lo"));
  const int q_lo = static_cast<int>(p.integer("quadrature_lo"));
  const double s_ratio = p.real("series_ratio");
  const double q_ratio = p.real("quadrature_ratio");
  const RadialScheme scheme = p.scheme();
  if (s_lo < 1 || s_lo >= J) throw ParameterError("series_lo", "must lie in [1, J_max)");
  if (q_lo < 1 || q_lo >= scheme.depth) throw ParameterError("quadrature_lo", "must lie in [1, depth)");
  if (from < 1 || from >= J) throw ParameterError("increasing_from", "must lie in [1, J_max)");
  const DivergenceSequences d = counterexample_divergence(pp, eps, alpha, J, scheme);
  rep.columns = {"kind", "index", "value"};
  for (std::size_t i = 0; i < d.series.size(); ++i) {
    rep.add_row({std::string("series"), static_cast<std::int64_t>(i + 1), d.series[i]});
  }
  for (std::size_t i = 0; i < d.quadrature.size(); ++i) {
    rep.add_row({std::string("quadrature"), static_cast<std::int64_t>(i + 1), d.quadrature[i]});
  }
  double step = kInfinity;
  for (int j = from + 1; j <= J; ++j) {
    step = std::min(step, d.series[static_cast<std::size_t>(j - 1)] - d.series[static_cast<std::size_t>(j - 2)]);
  }
  rep.check("C4", "smallest increment S_j - S_{j-1}, j > " + std::to_string(from), step,
            std::numeric_limits<double>::min(), kInfinity);
  rep.check("C4", "S_" + std::to_string(J) + " / S_" + std::to_string(s_lo),
            d.series.back() / d.series[static_cast<std::size_t>(s_lo - 1)], s_ratio, kInfinity);
  rep.check("C4", "Q_" + std::to_string(scheme.depth) + " / Q_" + std::to_string(q_lo),
            d.quadrature.back() / d.quadrature[static_cast<std::size_t>(q_lo - 1)], q_ratio, kInfinity);
  rep.notes["symbol_J"] = d.symbol_J;
}

struct IdentityErrors {
  double linearity, at_zero, of_one, symmetrization;
};

void tg_identities(Params& p, RunReport& rep) {
  const auto count = static_cast<std::size_t>(p.integer("pairs"));
  const auto degree = static_cast<std::size_t>(p.integer("degree"));
  const auto seed = static_cast<std::uint64_t>(p.integer("seed"));
  const double tol = p.real("tol");
  if (degree < 1) throw ParameterError("degree", "must be at least 1");
  const auto errs = parallel_map<IdentityErrors>(count, [&](std::size_t i) {
    std::mt19937_64 gen(seed * 1000003ULL + i);
    auto deg = [&] { return 1 + gen() % degree; };
    const PowerSeries f = random_polynomial(deg(), gen());
    const PowerSeries g = random_polynomial(deg(), gen());
    const PowerSeries h = random_polynomial(deg(), gen());
    const PowerSeries ab = random_polynomial(1, gen());
    const cplx a = ab[0], b = ab[1];

    PowerSeries af = f, bh = h;
    af *= a;
    bh *= b;
    PowerSeries lin = tg_apply(af + bh, g);
    PowerSeries idl = tg_apply(f, g);
    idl *= a;
    PowerSeries idr = tg_apply(h, g);
    idr *= b;
    lin -= idl + idr;

    const PowerSeries tfg = tg_apply(f, g);
    PowerSeries g0 = g;
    g0 -= PowerSeries(std::vector<cplx>{g[0]});
    PowerSeries prod = cauchy_product(f, g);
    prod -= PowerSeries(std::vector<cplx>{f[0] * g[0]});
    const PowerSeries zero(std::vector<cplx>{0.0});
    return IdentityErrors{max_coeff_distance(lin, zero), std::abs(tfg[0]),
                          max_coeff_distance(tg_apply(PowerSeries(std::vector<cplx>{1.0}), g), g0),
                          max_coeff_distance(tfg + tg_apply(g, f), prod)};
  });
  rep.columns = {"pair", "linearity", "at_zero", "of_one", "symmetrization"};
  IdentityErrors worst{0, 0, 0, 0};
  for (std::size_t i = 0; i < errs.size(); ++i) {
    const auto& e = errs[i];
    worst.linearity = std::max(worst.linearity, e.linearity);
    worst.at_zero = std::max(worst.at_zero, e.at_zero);
    worst.of_one = std::max(worst.of_one, e.of_one);
    worst.symmetrization = std::max(worst.symmetrization, e.symmetrization);
    rep.add_row({static_cast<std::int64_t>(i), e.linearity, e.at_zero, e.of_one, e.symmetrization});
  }
  rep.check("C9", "linearity T_g(af+bh) - aT_g f - bT_g h", worst.linearity, 0.0, tol);
  rep.check("C9", "(T_g f)(0)", worst.at_zero, 0.0, tol);
  rep.check("C9", "T_g(1) - (g - g(0))", worst.of_one, 0.0, tol);
  rep.check("C9", "T_g f + T_f g - (fg - f(0)g(0))", worst.symmetrization, 0.0, tol);
}

// Ratio of the last profile value to the one at half the depth.
double profile_trend(const std::vector<ProfilePoint>& pts) {
  const double tail = pts.back().value;
  const double mid = pts[pts.size() / 2 - (pts.size() % 2 == 0 ? 1 : 0)].value;
  if (mid == 0.0) return tail == 0.0 ? 0.0 : kInfinity;
  return tail / mid;
}

void check_trend(RunReport& rep, const std::string& criterion, const std::string& what, double trend,
                 const std::string& expect, double bounded_max, double unbounded_min) {
  if (expect == "bounded") {
    rep.check(criterion, what + " last/mid (bounded)", trend, 0.0, bounded_max);
  } else {
    rep.check(criterion, what + " last/mid (unbounded)", trend, unbounded_min, kInfinity);
  }
}

std::string expectation(Params& p) {
  std::string e = p.text("expect");
  if (e != "bounded" && e != "unbounded") throw ParameterError("expect", "must be bounded or unbounded");
  return e;
}

void lemma1(Params& p, RunReport& rep) {
  const PowerSeries g = series_from_spec(p.json("g"), p.base_dir()).series;
  const double pp = p.real("p"), q = p.real("q");
  const std::string expect = expectation(p);
  const auto prof = lemma1_profile(g, pp, q, p.scheme());
  rep.columns = {"level", "r", "value"};
  for (const auto& pt : prof) rep.add_row({static_cast<std::int64_t>(pt.level), pt.r, pt.value});
  check_trend(rep, "REG-lemma1", "M_inf(r,g')(1-r)^{1-1/p+1/q}", profile_trend(prof), expect,
              p.real("bounded_max"), p.real("unbounded_min"));
}

void lipschitz(Params& p, RunReport& rep) {
  const PowerSeries g = series_from_spec(p.json("g"), p.base_dir()).series;
  const double alpha = p.real("alpha");
  const std::string expect = expectation(p);
  const LipschitzProfile lp = lipschitz_profile(g, alpha, p.scheme());
  rep.columns = {"kind", "level", "r", "value"};
  for (const auto& pt : lp.growth) rep.add_row({std::string("growth"), static_cast<std::int64_t>(pt.level), pt.r, pt.value});
  for (const auto& pt : lp.boxes) rep.add_row({std::string("box"), static_cast<std::int64_t>(pt.level), pt.r, pt.value});
  rep.notes["growth_sup"] = lp.growth_sup;
  rep.notes["box_sup"] = lp.box_sup;
  rep.notes["growth_tail"] = lp.growth_tail;
  rep.notes["box_tail"] = lp.box_tail;
  const double bmax = p.real("bounded_max"), umin = p.real("unbounded_min");
  check_trend(rep, "REG-lipschitz", "M_inf(r,g')(1-r)^{1-alpha}", profile_trend(lp.growth), expect, bmax, umin);
  check_trend(rep, "REG-lipschitz", "mu_g(S(I))/|I|^{2alpha+1}", profile_trend(lp.boxes), expect, bmax, umin);
}

void opnorm_probe(Params& p, RunReport& rep) {
  const PowerSeries g = series_from_spec(p.json("symbol"), p.base_dir()).series;
  const double pp = p.real("p"), q = p.real("q");
  const int k_max = static_cast<int>(p.integer("k_max"));
  const int k_ref = static_cast<int>(p.integer("k_ref"));
  const int angles = static_cast<int>(p.integer("angles"));
  const double settle = p.real("settle");
  if (k_ref < 1 || k_ref >= k_max) throw ParameterError("k_ref", "must lie in [1, k_max)");
  if (angles < 1) throw ParameterError("angles", "must be at least 1");
  OperatorProbe probe{g, pp, q, {}};
  std::vector<int> level_of;
  for (int k = 1; k <= k_max; ++k) {
    const double abs_a = 1.0 - std::ldexp(1.0, -k);
    for (int t = 0; t < angles; ++t) {
      const cplx a = std::polar(abs_a, 2.0 * std::numbers::pi * t / angles);
      probe.family.emplace_back("k=" + std::to_string(k) + " angle=" + std::to_string(t),
                                test_function({a, pp, pp + 1.0}, test_function_degree(abs_a)).series);
      level_of.push_back(k);
    }
  }
  const ProbeResult res = opnorm_lower_bound(probe, p.scheme());
  rep.columns = {"member", "level", "angle", "ratio", "running_bound"};
  double running = 0.0, at_ref = 0.0;
  for (std::size_t i = 0; i < res.ratios.size(); ++i) {
    running = std::max(running, res.ratios[i]);
    if (level_of[i] <= k_ref) at_ref = running;
    rep.add_row({static_cast<std::int64_t>(i), static_cast<std::int64_t>(level_of[i]),
                 static_cast<std::int64_t>(i % static_cast<std::size_t>(angles)), res.ratios[i], running});
  }
  rep.check("REG-opnorm", "bound over levels <= " + std::to_string(k_max) + " / bound over levels <= " +
                              std::to_string(k_ref) + " - 1",
            res.bound / at_ref - 1.0, 0.0, settle);
  rep.check("REG-opnorm", "lower bound of the operator norm", res.bound, kOpnormLo, kOpnormHi);
  rep.notes["argmax"] = probe.family[res.argmax].first;
}

}  // namespace

void add_volterra_experiments(std::vector<Experiment>& out) {
  const std::vector<ParamDoc> growth = {{"phi", "powerlog:0.2", "Phi family"},
                                        {"p", "4", "exponent p > 2"},
                                        {"K", "20", "lacunary series length"},
                                        {"first", "8", "first fitted level"},
                                        {"last", "20", "last fitted level"}};
  auto with = [](std::vector<ParamDoc> base, std::vector<ParamDoc> extra) {
    base.insert(base.end(), extra.begin(), extra.end());
    return base;
  };
  out.push_back({"growth-lower", "log-log slope of M_2(r, f) for the lacunary f built from Phi", "C3",
                 with(growth, {{"slope_lo", "0.15", "lower end of the slope window"},
                               {"slope_hi", "0.30", "upper end of the slope window"}}),
                 growth_lower});
  out.push_back({"growth-upper", "M_p(r, f)/(log e/(1-r))^{1/2-1/p} trend and the M_p slope", "C3",
                 with(growth, {{"tail", "6", "levels in the monotonicity window"},
                               {"slope_hi", "0.30", "largest allowed M_p slope"}}),
                 growth_upper});
  out.push_back({"tg-counterexample", "series and quadrature sequences for the lacunary symbol g", "C4",
                 with_scheme({{"p", "3", "exponent p > 2"},
                              {"eps", "0.2", "epsilon in (0, p/2-1)"},
                              {"alpha", "1.5", "symbol exponent alpha > 1"},
                              {"J_max", "40", "series length"},
                              {"increasing_from", "8", "strict increase required after this index"},
                              {"series_lo", "20", "reference index for the series ratio"},
                              {"series_ratio", "1.5", "required S_J_max / S_series_lo"},
                              {"quadrature_lo", "8", "reference depth for the quadrature ratio"},
                              {"quadrature_ratio", "3", "required Q_depth / Q_quadrature_lo"}}),
                 tg_counterexample});
  out.push_back({"tg-identities", "coefficient identities of T_g on random pairs", "C9",
                 {{"pairs", "100", "number of random pairs"},
                  {"degree", "64", "largest degree"},
                  {"seed", "23", "mt19937_64 seed"},
                  {"tol", "1e-12", "largest coefficient error"}},
                 tg_identities});
  out.push_back({"lemma1-profile", "M_inf(r,g')(1-r)^{1-1/p+1/q} along r = 1-2^-k", "REG-lemma1",
                 with_scheme({{"g", R"({"type":"geometric","w":1,"N":4096})", "symbol constructor"},
                              {"p", "2", "domain exponent"},
                              {"q", "2", "target exponent"},
                              {"expect", "unbounded", "bounded or unbounded"},
                              {"bounded_max", "2", "largest last/mid ratio for bounded"},
                              {"unbounded_min", "4", "smallest last/mid ratio for unbounded"}},
                             10),
                 lemma1});
  out.push_back({"lipschitz-profile", "growth and box diagnostics of the Lipschitz class", "REG-lipschitz",
                 with_scheme({{"g", R"({"type":"binomial","beta":0.5,"N":4096})", "symbol constructor"},
                              {"alpha", "0.5", "Lipschitz exponent in (0, 1]"},
                              {"expect", "bounded", "bounded or unbounded"},
                              {"bounded_max", "2", "largest last/mid ratio for bounded"},
                              {"unbounded_min", "4", "smallest last/mid ratio for unbounded"}},
                             10),
                 lipschitz});
  out.push_back({"opnorm-probe", "lower bound of ||T_g|| over test functions F_{a,p,p+1}", "REG-opnorm",
                 with_scheme({{"symbol", R"({"type":"log","N":4096})", "symbol constructor"},
                              {"p", "2", "domain exponent"},
                              {"q", "2", "target exponent"},
                              {"k_max", "10", "|a| = 1-2^-k up to k_max"},
                              {"k_ref", "8", "reference level for stabilization"},
                              {"angles", "8", "angles per level"},
                              {"settle", "0.1", "largest relative growth after k_ref"}}),
                 opnorm_probe});
}

}  // namespace disclab
