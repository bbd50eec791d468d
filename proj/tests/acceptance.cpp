// Acceptance runner: one PASS/FAIL line per criterion, with its runtime limit.
//   acceptance C<n> | REG | all
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "disclab/config.hpp"
#include "disclab/experiments.hpp"
#include "disclab/report.hpp"

using namespace disclab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

void note(Outcome& out, const std::string& text) {
  if (!out.detail.empty()) out.detail += "; ";
  out.detail += text;
}

// Runs the experiments with defaults; every check must carry `id` and pass.
Outcome run_checks(const std::string& id, const std::vector<std::string>& names, double limit) {
  Outcome out;
  const auto t0 = Clock::now();
  for (const auto& name : names) {
    RunReport rep;
    try {
      rep = run_experiment(name, {});
    } catch (const std::exception& e) {
      out.pass = false;
      note(out, name + ": " + e.what());
      continue;
    }
    if (rep.checks.empty()) {
      out.pass = false;
      note(out, name + ": no checks");
    }
    for (const auto& c : rep.checks) {
      const bool ours = c.criterion.rfind(id, 0) == 0;
      if (!ours || !c.pass) {
        out.pass = false;
        note(out, name + ": " + c.name + " = " + format_number(c.measured) + " not in [" + format_number(c.lo) +
                      ", " + format_number(c.hi) + "]" + (ours ? "" : " (criterion " + c.criterion + ")"));
      }
    }
  }
  const double t = seconds_since(t0);
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.3f s (limit %g s)", t, limit);
  if (t >= limit) out.pass = false;
  note(out, buf);
  return out;
}

Outcome determinism() {
  const std::vector<std::string> names = {"carleson-gauge", "embedding-qp",  "fs-ratio",         "inclusion",
                                          "lipschitz-profile", "littlewood-paley", "maximal-probe",
                                          "opnorm-probe", "tg-identities"};
  const unsigned saved = thread_count();
  const unsigned many = std::max(4u, std::thread::hardware_concurrency());
  Outcome out;
  double run_time = 0.0, compare_time = 0.0;
  for (const auto& name : names) {
    set_thread_count(1);
    auto t0 = Clock::now();
    const RunReport a = run_experiment(name, {});
    run_time += seconds_since(t0);
    set_thread_count(many);
    t0 = Clock::now();
    const RunReport b = run_experiment(name, {});
    const RunReport c = run_experiment(name, {});
    const bool same = to_csv(a) == to_csv(b) && to_json(a) == to_json(b) && to_csv(b) == to_csv(c);
    compare_time += seconds_since(t0) / 2.0;
    if (!same) {
      out.pass = false;
      note(out, name + " differs between 1 and " + std::to_string(many) + " threads");
    }
  }
  set_thread_count(saved);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu experiments, rerun %.3f s vs single-thread %.3f s", names.size(),
                compare_time, run_time);
  note(out, buf);
  return out;
}

struct Criterion {
  std::string id;
  std::function<Outcome()> run;
};

std::vector<Criterion> criteria() {
  auto exp = [](std::string id, std::vector<std::string> names, double limit) {
    return Criterion{id, [=] { return run_checks(id, names, limit); }};
  };
  return {
      exp("C1", {"littlewood-paley"}, 5),
      exp("C2", {"testfn-norm"}, 30),
      exp("C3", {"growth-lower", "growth-upper"}, 30),
      exp("C4", {"tg-counterexample"}, 60),
      exp("C5", {"sharp-measure"}, 120),
      exp("C6", {"bernoulli-check"}, 5),
      exp("C7", {"embedding-qp"}, 60),
      exp("C8", {"carleson-gauge"}, 1),
      exp("C9", {"tg-identities"}, 5),
      {"C10", determinism},
      exp("REG-fs", {"fs-ratio"}, 60),
      exp("REG-inclusion", {"inclusion"}, 60),
      exp("REG-maximal", {"maximal-probe"}, 60),
      exp("REG-opnorm", {"opnorm-probe"}, 60),
      exp("REG-lemma1", {"lemma1-profile"}, 60),
      exp("REG-lipschitz", {"lipschitz-profile"}, 60),
  };
}

}  // namespace

int main(int argc, char** argv) {
  const std::string which = argc > 1 ? argv[1] : "all";
  bool any = false, all_pass = true;
  for (const auto& c : criteria()) {
    const bool is_reg = c.id.rfind("REG", 0) == 0;
    if (which != "all" && which != c.id && !(which == "REG" && is_reg)) continue;
    any = true;
    const Outcome o = c.run();
    all_pass = all_pass && o.pass;
    std::printf("%s %s  %s\n", o.pass ? "PASS" : "FAIL", c.id.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  if (!any) {
    std::fprintf(stderr, "unknown criterion '%s' (C1..C10, REG-..., REG, all)\n", which.c_str());
    return 2;
  }
  return all_pass ? 0 : 1;
}
