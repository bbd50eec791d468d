#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "disclab/config.hpp"
#include "disclab/error.hpp"
#include "disclab/experiments.hpp"
#include "disclab/parallel.hpp"
#include "disclab/report.hpp"
#include "disclab/specs.hpp"

using namespace disclab;

TEST_CASE("constructor specs") {
  const nlohmann::json j = nlohmann::json::parse(R"({"type":"geometric","w":[0,0.5],"N":3})");
  const PowerSeries g = series_from_spec(j).series;
  REQUIRE(g.degree() == 3);
  CHECK(std::abs(g[2] - cplx(-0.25, 0.0)) < 1e-15);
  CHECK(series_from_spec(nlohmann::json::parse(R"({"type":"monomial","n":4})")).series[4] == cplx(1.0));
  CHECK_THROWS_AS(series_from_spec(nlohmann::json::parse(R"({"type":"nope"})")), ParameterError);
  try {
    series_from_spec(nlohmann::json::parse(R"({"type":"log"})"));
    FAIL("missing field accepted");
  } catch (const ParameterError& e) {
    CHECK(e.field().ends_with("N"));
  }

  const auto path = std::filesystem::temp_directory_path() / "disclab_coeffs.json";
  const PowerSeries f(std::vector<cplx>{{1.0, 2.0}, {0.125, -3.0}});
  write_coefficient_file(path, f);
  CHECK(max_coeff_distance(read_coefficient_file(path), f) == 0.0);
  const auto from_file = series_from_spec({{"type", "file"}, {"path", path.filename().string()}}, path.parent_path());
  CHECK(max_coeff_distance(from_file.series, f) == 0.0);
  std::filesystem::remove(path);

  CHECK(phi_from_spec("powerlog:0.2").describe() == phi_from_spec(nlohmann::json::parse(R"({"type":"powerlog","c":0.2})")).describe());
  CHECK_THROWS_AS(phi_from_spec("iterlog:1"), ParameterError);
  const MeasureSpec mu = measure_from_spec(nlohmann::json::parse(R"({"type":"atoms","atoms":[[0.5,0,1]]})"));
  CHECK_FALSE(mu.is_radial());
}

TEST_CASE("report serialization") {
  RunReport rep;
  rep.experiment = "demo";
  rep.columns = {"a", "b", "c"};
  rep.add_row({std::int64_t{3}, 0.1, std::string("x")});
  rep.add_row({std::int64_t{-1}, std::nan(""), std::string("y")});
  CHECK_THROWS(rep.add_row({std::int64_t{1}}));
  rep.check("C1", "bounded", 0.5, 0.0, 1.0);
  CHECK(rep.all_pass());
  rep.check("C1", "nan never passes", std::nan(""), -kInfinity, kInfinity);
  CHECK_FALSE(rep.all_pass());

  CHECK(to_csv(rep) == "a,b,c\n3,0.10000000000000001,x\n-1,nan,y\n");
  const std::string js = to_json(rep);
  const auto j = nlohmann::json::parse(js);
  CHECK(j["schema"] == 1);
  CHECK(j["rows"][1][1] == "nan");
  CHECK(j["summary"]["pass"] == false);
  CHECK_FALSE(j.contains("generated_at"));
  CHECK(nlohmann::json::parse(to_json(rep, "2026-01-01T00:00:00Z"))["generated_at"] == "2026-01-01T00:00:00Z");
  CHECK(format_number(-kInfinity) == "-inf");
  CHECK(format_number(0.1) == "0.10000000000000001");
  CHECK(format_number(1e-300) == "1e-300");
}

TEST_CASE("config parsing") {
  const auto cfg = parse_config("# comment\n degree = 8 \n\nseed=3 # trailing\nphi = iterlog:1,1\n");
  CHECK(cfg.size() == 3);
  CHECK(cfg.at("degree") == "8");
  CHECK(cfg.at("seed") == "3");
  CHECK(cfg.at("phi") == "iterlog:1,1");
  CHECK_THROWS_AS(parse_config("novalue\n"), ParameterError);
}

TEST_CASE("registry") {
  const auto& reg = experiments();
  CHECK(reg.size() >= 13);
  CHECK(find_experiment("tg-counterexample") != nullptr);
  for (std::size_t i = 1; i < reg.size(); ++i) CHECK(reg[i - 1].name < reg[i].name);
  for (const auto& e : reg) {
    CHECK_FALSE(e.criterion.empty());
    CHECK_FALSE(e.description.empty());
  }
  try {
    run_experiment("unknown-name", {});
    FAIL("unknown experiment accepted");
  } catch (const ParameterError& e) {
    CHECK(e.field() == "experiment");
    CHECK(std::string(e.what()).find("tg-counterexample") != std::string::npos);
  }
  try {
    run_experiment("littlewood-paley", {{"bogus", "1"}});
    FAIL("unknown parameter accepted");
  } catch (const ParameterError& e) {
    CHECK(e.field() == "bogus");
  }
  CHECK_THROWS_AS(run_experiment("littlewood-paley", {{"degree", "abc"}}), ParameterError);
  CHECK_THROWS_AS(run_experiment("testfn-norm", {{"k_min", "3"}, {"k_max", "2"}}), ParameterError);
}

TEST_CASE("experiment reports") {
  const RunReport rep = run_experiment("littlewood-paley", {{"count", "20"}});
  CHECK(rep.all_pass());
  CHECK(rep.rows.size() == 20);
  CHECK(rep.params["count"] == 20);
  CHECK(rep.params["degree"] == 256);
  for (const auto& c : rep.checks) CHECK(c.criterion == "C1");
}

TEST_CASE("thread-count independence") {
  const unsigned saved = thread_count();
  const auto run = [](unsigned n) {
    set_thread_count(n);
    return parallel_map<double>(1000, [](std::size_t i) { return std::sin(static_cast<double>(i)); });
  };
  const auto one = run(1);
  CHECK(run(4) == one);
  std::vector<std::size_t> order;
  set_thread_count(3);
  parallel_ordered<std::size_t>(50, [](std::size_t i) { return i * i; },
                                [&](std::size_t i, std::size_t v) {
                                  CHECK(v == i * i);
                                  order.push_back(i);
                                });
  for (std::size_t i = 0; i < order.size(); ++i) CHECK(order[i] == i);

  for (const char* name : {"fs-ratio", "embedding-qp", "tg-identities"}) {
    set_thread_count(1);
    const std::string a = to_csv(run_experiment(name, {}));
    set_thread_count(4);
    const std::string b = to_csv(run_experiment(name, {}));
    CHECK(a == b);
  }
  set_thread_count(saved);
}
