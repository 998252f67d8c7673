// conekit command line driver.
//
// One subcommand per scenario kind plus `list`. Parameter precedence, lowest
// to highest: catalog defaults, --config JSON file, explicit flags. The
// output directory comes from --out, falling back to the CONEKIT_OUT
// environment variable, falling back to conekit-out/<kind>.
//
// Exit codes: 0 all checks passed, 2 the scenario ran but a check failed,
// 1 usage or runtime error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conekit/scenarios.hpp"

namespace {

using conekit::ScenarioInfo;
using nlohmann::json;

struct SubState {
  std::string kind;
  std::string config;
  std::uint64_t seed = 1;
  std::string out;
  double diag = 0.0;

  std::map<std::string, long long> ints;
  std::map<std::string, double> dbls;
  std::map<std::string, std::string> strs;
  std::map<std::string, std::vector<double>> vecs;
  std::map<std::string, CLI::Option*> opts;
  CLI::Option* diag_opt = nullptr;
};

std::string flag_name(const std::string& key) {
  std::string name = "--" + key;
  for (auto& c : name)
    if (c == '_') c = '-';
  if (key == "test_harmonics") name = "--harmonics,--test-harmonics";
  return name;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  json config = json::parse(in);
  if (!config.is_object())
    throw std::runtime_error("config file must hold a JSON object");
  return config;
}

int run_one(const ScenarioInfo& info, const SubState& state) {
  json overrides = state.config.empty() ? json::object()
                                        : load_config(state.config);

  for (const auto& [key, value] : info.defaults.items()) {
    const CLI::Option* opt = state.opts.at(key);
    if (opt->count() == 0) continue;
    if (value.is_number_integer())
      overrides[key] = state.ints.at(key);
    else if (value.is_number_float())
      overrides[key] = state.dbls.at(key);
    else if (value.is_string())
      overrides[key] = state.strs.at(key);
    else
      overrides[key] = state.vecs.at(key);
  }
  if (state.diag_opt != nullptr && state.diag_opt->count() > 0) {
    if (state.opts.at("matrix")->count() > 0)
      throw std::runtime_error("--a and --matrix are mutually exclusive");
    if (state.diag == 0.0) throw std::runtime_error("--a must be nonzero");
    overrides["matrix"] = {state.diag, 0.0, 0.0, 1.0 / state.diag};
  }

  conekit::ScenarioRequest request;
  request.kind = state.kind;
  request.params = overrides;
  request.seed = state.seed;
  request.out_dir = state.out;

  const conekit::ScenarioResult result = conekit::run_scenario(request);

  for (const auto& check : result.summary.at("checks")) {
    std::printf("[%s] %-32s value=%-13.6g tol=%g\n",
                check.at("passed").get<bool>() ? "PASS" : "FAIL",
                check.at("name").get<std::string>().c_str(),
                check.at("value").get<double>(),
                check.at("tol").get<double>());
  }
  std::printf("summary: %s\n",
              (std::filesystem::path(state.out) / (state.kind + "-summary.json"))
                  .string()
                  .c_str());
  return result.all_passed ? 0 : 2;
}

void print_catalog(bool as_json) {
  if (as_json) {
    json catalog = json::array();
    for (const auto& info : conekit::scenario_catalog())
      catalog.push_back({{"kind", info.kind},
                         {"description", info.description},
                         {"defaults", info.defaults}});
    std::printf("%s\n", catalog.dump(2).c_str());
    return;
  }
  for (const auto& info : conekit::scenario_catalog()) {
    std::printf("%-18s %s\n", info.kind.c_str(), info.description.c_str());
    std::printf("%-18s defaults: %s\n", "", info.defaults.dump().c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical scenarios for cones, multiplier cocycles, and "
               "orbit-graph triviality"};
  app.require_subcommand(1);

  bool list_json = false;
  CLI::App* list =
      app.add_subcommand("list", "list scenario kinds and default parameters");
  list->add_flag("--json", list_json, "emit the catalog as JSON");

  int exit_code = 0;
  std::vector<std::unique_ptr<SubState>> states;

  for (const auto& info : conekit::scenario_catalog()) {
    auto state = std::make_unique<SubState>();
    state->kind = info.kind;
    state->out = "conekit-out/" + info.kind;

    CLI::App* sub = app.add_subcommand(info.kind, info.description);
    sub->add_option("--config", state->config,
                    "JSON file with parameter overrides")
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", state->seed, "random seed (default 1)");
    sub->add_option("--out", state->out, "output directory")
        ->envname("CONEKIT_OUT");

    for (const auto& [key, value] : info.defaults.items()) {
      const std::string name = flag_name(key);
      const std::string help = "override " + key + " (default " +
                               value.dump() + ")";
      if (value.is_number_integer())
        state->opts[key] = sub->add_option(name, state->ints[key], help);
      else if (value.is_number_float())
        state->opts[key] = sub->add_option(name, state->dbls[key], help);
      else if (value.is_string())
        state->opts[key] = sub->add_option(name, state->strs[key], help);
      else if (value.is_array())
        state->opts[key] = sub->add_option(name, state->vecs[key], help)
                               ->delimiter(',')
                               ->expected(static_cast<int>(value.size()));
    }
    if (info.defaults.contains("matrix"))
      state->diag_opt = sub->add_option(
          "--a", state->diag, "shorthand for --matrix a,0,0,1/a");

    SubState* raw = state.get();
    const ScenarioInfo* info_ptr = &info;
    sub->callback([raw, info_ptr, &exit_code] {
      exit_code = run_one(*info_ptr, *raw);
    });
    states.push_back(std::move(state));
  }

  list->callback([&list_json] { print_catalog(list_json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return exit_code;
}
