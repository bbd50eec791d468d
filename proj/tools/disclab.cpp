#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "disclab/config.hpp"
#include "disclab/error.hpp"
#include "disclab/experiments.hpp"
#include "disclab/report.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

int list_command(bool as_json) {
  if (as_json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : disclab::experiments()) {
      nlohmann::ordered_json j;
      j["name"] = e.name;
      j["description"] = e.description;
      j["criterion"] = e.criterion;
      nlohmann::ordered_json ps = nlohmann::ordered_json::array();
      for (const auto& d : e.params) ps.push_back({{"name", d.name}, {"default", d.default_value}, {"help", d.help}});
      j["params"] = std::move(ps);
      arr.push_back(std::move(j));
    }
    std::cout << disclab::dump_json(arr) << "\n";
    return 0;
  }
  for (const auto& e : disclab::experiments()) {
    std::cout << e.name << "  [" << e.criterion << "]  " << e.description << "\n";
    for (const auto& d : e.params) {
      std::cout << "    " << d.name << " = " << d.default_value << "  (" << d.help << ")\n";
    }
  }
  return 0;
}

void print_summary(const disclab::RunReport& rep) {
  for (const auto& c : rep.checks) {
    std::cout << (c.pass ? "PASS " : "FAIL ") << c.criterion << "  " << c.name << "  measured "
              << disclab::format_number(c.measured) << " in [" << disclab::format_number(c.lo) << ", "
              << disclab::format_number(c.hi) << "]";
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"disc function space experiments"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "list registered experiments");
  bool list_json = false;
  list->add_flag("--json", list_json, "machine-readable output");

  auto* run = app.add_subcommand("run", "run one experiment");
  std::string name, config, out_dir = ".";
  std::vector<std::string> overrides;
  int threads = 0;
  bool run_json = false;
  run->add_option("experiment", name, "experiment name")->required();
  run->add_option("--param", overrides, "key=value override (repeatable)");
  run->add_option("--config", config, "key = value config file");
  run->add_option("--out", out_dir, "output directory");
  run->add_option("--threads", threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
  run->add_flag("--json", run_json, "print the JSON report to stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  if (*list) return list_command(list_json);

  try {
    std::map<std::string, std::string> params;
    std::filesystem::path base_dir;
    if (!config.empty()) {
      params = disclab::read_config_file(config);
      base_dir = std::filesystem::path(config).parent_path();
    }
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) {
        std::cerr << "error: --param expects key=value, got '" << kv << "'\n";
        return kExitUsage;
      }
      params[kv.substr(0, eq)] = kv.substr(eq + 1);
    }
    disclab::set_thread_count(static_cast<unsigned>(threads));
    const disclab::RunReport rep = disclab::run_experiment(name, params, base_dir);

    std::filesystem::create_directories(out_dir);
    const std::string json = disclab::to_json(rep, utc_now());
    write_file(std::filesystem::path(out_dir) / (name + ".json"), json);
    write_file(std::filesystem::path(out_dir) / (name + ".csv"), disclab::to_csv(rep));
    if (run_json) {
      std::cout << json;
    } else {
      print_summary(rep);
    }
    return rep.all_pass() ? 0 : kExitFail;
  } catch (const disclab::ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
}
