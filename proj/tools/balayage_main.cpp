// Command-line front end: run scenarios, list bundled fixtures, print the
// scenario schema.
//
//   balayage run --scenario <path-or-fixture> [--out <path>] [--seed <int>]
//                [--eps <float>] [--csv <path>]
//   balayage fixtures [--dump <name>]
//   balayage schema
//
// Exit codes: 0 pass, 1 fail verdict, 2 invalid input.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "bal/scenario.hpp"

namespace {

int usage() {
  std::cerr << "usage:\n"
            << "  balayage run --scenario <path-or-fixture> [--out <path>] [--seed <int>]\n"
            << "               [--eps <float>] [--csv <path>]\n"
            << "  balayage fixtures [--dump <name>]\n"
            << "  balayage schema\n";
  return 2;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) return false;
  out << text;
  return out.good();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) return usage();
  const std::string cmd = argv[1];

  std::string scenario, out_path, csv_path, dump_name;
  bal::RunOptions opts;
  for (int i = 2; i < argc; ++i) {
    const std::string arg = argv[i];
    auto next = [&]() -> const char* {
      if (i + 1 >= argc) {
        std::cerr << "missing value for " << arg << "\n";
        std::exit(2);
      }
      return argv[++i];
    };
    if (arg == "--scenario")
      scenario = next();
    else if (arg == "--out")
      out_path = next();
    else if (arg == "--csv")
      csv_path = next();
    else if (arg == "--dump")
      dump_name = next();
    else if (arg == "--seed")
      opts.seed = std::strtoull(next(), nullptr, 10);
    else if (arg == "--eps")
      opts.eps = std::strtod(next(), nullptr);
    else
      return usage();
  }

  if (cmd == "fixtures") {
    if (!dump_name.empty()) {
      const char* src = bal::fixture_source(dump_name);
      if (src == nullptr) {
        std::cerr << "unknown fixture '" << dump_name << "'\n";
        return 2;
      }
      std::cout << src << "\n";
      return 0;
    }
    for (const std::string& name : bal::fixture_names()) std::cout << name << "\n";
    return 0;
  }
  if (cmd == "schema") {
    std::cout << bal::scenario_schema().dump(2) << "\n";
    return 0;
  }
  if (cmd != "run") return usage();
  if (scenario.empty()) return usage();

  const bal::RunResult rr = bal::run_scenario_ref(scenario, opts);
  const std::string text = bal::format_report(rr.report);
  if (!out_path.empty()) {
    if (!write_file(out_path, text)) {
      std::cerr << "cannot write report to " << out_path << "\n";
      return 2;
    }
  } else {
    std::cout << text;
  }
  if (!csv_path.empty() && rr.csv) {
    if (!write_file(csv_path, *rr.csv)) {
      std::cerr << "cannot write csv to " << csv_path << "\n";
      return 2;
    }
  }
  return rr.exit_code;
}
