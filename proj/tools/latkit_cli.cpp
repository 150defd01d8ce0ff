// Copyright 2026 The latkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "latkit/latkit.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitAssertion = 1;
constexpr int kExitError = 2;

struct BudgetFlag {
  const char* key;
  const char* flag;
  const char* env;
  std::size_t value;
};

std::string ReadInput(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, target);
}

Json RhoOption(const std::string& text) {
  Json out = Json::array();
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
      out.push_back(std::stoull(token));
    } else {
      out.push_back(token);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"latkit: finite lattices, ranks, representations and congruences"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string expect, out_path;
  bool pretty = false, timings = false, want_report = false;
  app.add_option("--expect", expect, "Exit 1 unless the verdict is this value")
      ->check(CLI::IsMember({"true", "false"}));
  app.add_flag("--pretty", pretty, "Indent JSON output");
  app.add_option("--out", out_path, "Write output to this file");
  app.add_flag("--timings", timings, "Include wall-clock timings in the report");
  app.add_flag("--report", want_report,
               "Print the JSON report even for commands with CSV/DOT output");

  latkit_budgets defaults;
  latkit_budgets_default(&defaults);
  std::vector<BudgetFlag> budgets{
      {"lattice_elements", "--budget-lattice-elements", "LATKIT_BUDGET_LATTICE_ELEMENTS", defaults.lattice_elements},
      {"search_target", "--budget-search-target", "LATKIT_BUDGET_SEARCH_TARGET", defaults.search_target},
      {"rank_elements", "--budget-rank-elements", "LATKIT_BUDGET_RANK_ELEMENTS", defaults.rank_elements},
      {"birkhoff_irreducibles", "--budget-birkhoff-irreducibles", "LATKIT_BUDGET_BIRKHOFF_IRREDUCIBLES", defaults.birkhoff_irreducibles},
      {"cpp_ground", "--budget-cpp-ground", "LATKIT_BUDGET_CPP_GROUND", defaults.cpp_ground},
      {"iso_ground", "--budget-iso-ground", "LATKIT_BUDGET_ISO_GROUND", defaults.iso_ground},
      {"power_ground", "--budget-power-ground", "LATKIT_BUDGET_POWER_GROUND", defaults.power_ground},
      {"carrier", "--budget-carrier", "LATKIT_BUDGET_CARRIER", defaults.carrier},
      {"reasonable_elements", "--budget-reasonable-elements", "LATKIT_BUDGET_REASONABLE_ELEMENTS", defaults.reasonable_elements},
      {"partitions", "--budget-partitions", "LATKIT_BUDGET_PARTITIONS", defaults.partitions},
      {"search_tables", "--budget-search-tables", "LATKIT_BUDGET_SEARCH_TABLES", defaults.search_tables},
  };
  for (auto& b : budgets) {
    app.add_option(b.flag, b.value)->envname(b.env)->group("Budgets")->capture_default_str();
  }

  Json request;
  Json inputs = Json::object();
  Json options = Json::object();
  std::vector<std::pair<std::string, std::string>> files;  // role, path

  std::string lattice_path, rep_path, family_path, algebra_path, theta_path,
      function_path, elattice_path, standard_name, rho_text, dot_name = "L";
  std::size_t depth = 0, bound = 1, n = 0, k = 3, max_carrier = 4,
              max_unary = 2, max_binary = 0;
  bool blass = false, gaifman = false, certificate = false, survey = false,
       dual = false, no_fast_path = false;

  auto* analyze = app.add_subcommand("analyze", "Lattice axioms and distributivity");
  analyze->add_option("lattice", lattice_path, "Lattice JSON")->required();

  auto* ranks = app.add_subcommand("ranks", "Enumerate rank maps");
  ranks->add_option("lattice", lattice_path, "Lattice JSON")->required();
  ranks->add_flag("--blass", blass, "Require the Blass condition");
  ranks->add_flag("--gaifman", gaifman, "Require the Gaifman condition");

  auto* rep = app.add_subcommand("rep", "Representations");
  rep->require_subcommand(1);
  auto* rep_verify = rep->add_subcommand("verify", "Pseudo-representation laws and injectivity");
  rep_verify->add_option("rep", rep_path, "Representation JSON")->required();
  auto* rep_cpp = rep->add_subcommand("cpp", "Canonical partition property");
  rep_cpp->add_option("rep", rep_path, "Representation JSON")->required();
  rep_cpp->add_option("--depth", depth, "CPP depth")->capture_default_str();
  rep_cpp->add_flag("--certificate", certificate, "Include the certificate tree");
  auto* rep_ranked = rep->add_subcommand("ranked", "Threshold ranked-representation check");
  rep_ranked->add_option("rep", rep_path, "Representation JSON")->required();
  rep_ranked->add_option("--rho", rho_text, "Rank map as comma-separated elements")->required();
  rep_ranked->add_option("--bound", bound, "Class-count threshold")->capture_default_str();
  auto* rep_family = rep->add_subcommand("family-closure", "Correctness of a finite family");
  rep_family->add_option("family", family_path, "JSON array of representations")->required();

  auto* crt2 = app.add_subcommand("crt2", "Canonical forms of pair functions");
  crt2->add_option("function", function_path, "Pair function JSON (omit for a survey)");
  crt2->add_option("--n", n, "Base size for the survey");
  crt2->add_option("--k", k, "Target subset size")->capture_default_str();
  crt2->add_flag("--survey", survey, "Survey every kernel on n points");

  auto* alg = app.add_subcommand("alg", "Finite algebras and congruences");
  alg->require_subcommand(1);
  auto* alg_cg = alg->add_subcommand("cg", "Congruence lattice");
  alg_cg->add_option("algebra", algebra_path, "Algebra JSON")->required();
  auto* alg_check = alg->add_subcommand("check", "Congruence or congruence-representation check");
  alg_check->add_option("algebra", algebra_path, "Algebra JSON")->required();
  auto* theta_opt = alg_check->add_option("--theta", theta_path, "Equivalence relation JSON");
  alg_check->add_option("--lattice", lattice_path, "Lattice JSON")->excludes(theta_opt);
  auto* alg_search = alg->add_subcommand("search", "Search for an algebra with a given Con");
  alg_search->add_option("lattice", lattice_path, "Lattice JSON")->required();
  alg_search->add_option("--max-carrier", max_carrier, "Largest carrier tried (at most 5)")->capture_default_str();
  alg_search->add_option("--max-unary-ops", max_unary, "Most unary operations")->capture_default_str();
  alg_search->add_option("--max-binary-ops", max_binary, "Most binary operations")->capture_default_str();
  alg_search->add_flag("--dual", dual, "Match the dual lattice");

  auto* reasonable = app.add_subcommand("reasonable", "Reasonableness of an equivalenced lattice");
  reasonable->add_option("elattice", elattice_path, "Equivalenced lattice JSON")->required();
  reasonable->add_flag("--no-fast-path", no_fast_path, "Skip the cardinality shortcut");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram as DOT");
  dot->add_option("lattice", lattice_path, "Lattice JSON")->required();
  dot->add_option("--name", dot_name, "Graph name")->capture_default_str();

  auto* standard = app.add_subcommand("standard", "Emit a named lattice as JSON");
  standard->add_option("name", standard_name, "boolean(n), m(n), pentagon, hexagon, chain(n)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  std::string command;
  if (analyze->parsed()) {
    command = "analyze";
    files.emplace_back("lattice", lattice_path);
  } else if (ranks->parsed()) {
    command = "ranks";
    files.emplace_back("lattice", lattice_path);
    options["blass"] = blass;
    options["gaifman"] = gaifman;
  } else if (rep_verify->parsed()) {
    command = "rep verify";
    files.emplace_back("rep", rep_path);
  } else if (rep_cpp->parsed()) {
    command = "rep cpp";
    files.emplace_back("rep", rep_path);
    options["depth"] = depth;
    options["certificate"] = certificate;
  } else if (rep_ranked->parsed()) {
    command = "rep ranked";
    files.emplace_back("rep", rep_path);
    options["rho"] = RhoOption(rho_text);
    options["bound"] = bound;
  } else if (rep_family->parsed()) {
    command = "rep family-closure";
    files.emplace_back("family", family_path);
  } else if (crt2->parsed()) {
    command = "crt2";
    if (!function_path.empty()) {
      files.emplace_back("function", function_path);
    } else if (n == 0) {
      std::cerr << "crt2: give a function file or --n for a survey\n";
      return kExitError;
    }
    options["n"] = n;
    options["k"] = k;
    options["survey"] = survey || function_path.empty();
  } else if (alg_cg->parsed()) {
    command = "alg cg";
    files.emplace_back("algebra", algebra_path);
  } else if (alg_check->parsed()) {
    command = "alg check";
    files.emplace_back("algebra", algebra_path);
    if (!theta_path.empty()) {
      files.emplace_back("theta", theta_path);
    } else if (!lattice_path.empty()) {
      files.emplace_back("lattice", lattice_path);
    } else {
      std::cerr << "alg check: give --theta or --lattice\n";
      return kExitError;
    }
  } else if (alg_search->parsed()) {
    command = "alg search";
    files.emplace_back("lattice", lattice_path);
    options["max_carrier"] = max_carrier;
    options["max_unary_ops"] = max_unary;
    options["max_binary_ops"] = max_binary;
    options["dual"] = dual;
  } else if (reasonable->parsed()) {
    command = "reasonable";
    files.emplace_back("elattice", elattice_path);
    options["fast_path"] = !no_fast_path;
  } else if (dot->parsed()) {
    command = "export-dot";
    files.emplace_back("lattice", lattice_path);
    options["name"] = dot_name;
  } else if (standard->parsed()) {
    command = "standard";
    options["name"] = standard_name;
  }

  try {
    for (const auto& [role, path] : files) {
      std::string text = ReadInput(path);
      inputs[role] = Json{{"name", path}, {"text", std::move(text)}};
    }
  } catch (const std::exception& e) {
    std::cerr << "latkit: " << e.what() << "\n";
    return kExitError;
  }

  Json echo = Json::array();
  for (int i = 1; i < argc; ++i) echo.push_back(argv[i]);
  Json budget_json = Json::object();
  for (const auto& b : budgets) budget_json[b.key] = b.value;
  request = Json{{"command", command},       {"echo", echo},
                 {"inputs", inputs},         {"options", options},
                 {"budgets", budget_json},   {"timings", timings}};

  char* report = nullptr;
  char* artifact = nullptr;
  int verdict = -1;
  const latkit_status status =
      latkit_run(request.dump().c_str(), &report, &artifact, &verdict);
  std::string report_text = report ? report : "";
  std::string artifact_text = artifact ? artifact : "";
  latkit_string_free(report);
  latkit_string_free(artifact);

  auto render = [&](const std::string& json_text) {
    auto j = Json::parse(json_text);
    return j.dump(pretty ? 2 : -1) + "\n";
  };

  if (status != LATKIT_OK) {
    std::cerr << "latkit: " << latkit_status_name(status) << ": "
              << latkit_last_error() << "\n";
    if (!report_text.empty()) std::cout << render(report_text);
    return kExitError;
  }

  try {
    const bool use_artifact = !artifact_text.empty() && !want_report;
    WriteOutput(out_path, use_artifact ? artifact_text : render(report_text));
  } catch (const std::exception& e) {
    std::cerr << "latkit: " << e.what() << "\n";
    return kExitError;
  }

  if (!expect.empty()) {
    if (verdict < 0) {
      std::cerr << "latkit: " << command << " has no verdict to compare\n";
      return kExitError;
    }
    if ((verdict == 1) != (expect == "true")) return kExitAssertion;
  }
  return kExitOk;
}
