// Prints one PASS/FAIL line per acceptance criterion. Exit status is 0 iff
// every criterion passes. With the CLI path as argv[1], criterion 11 also
// runs the CLI twice and compares output files byte for byte.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "crossvol/verify.hpp"

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool cli_reruns_identical(const std::string& cli, std::string& detail) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "crossvol_acceptance";
  fs::create_directories(dir);
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"bounds --gallery random_spsd --n 10 --seed 7 --m 4", "r.json"},
      {"gallery --name random_doubly_dd --n 12 --seed 3", "g.mat"},
      {"funcross --function runge2d --m 6 --grid 65", "e.csv"},
      {"maxvol --gallery random_general --n 7 --seed 5 --k 3", "v.json"},
      {"tightness --family quad_growth --n 8:4:24", "t.csv"},
  };
  bool ok = true;
  for (const auto& [args, file] : commands) {
    std::string outputs[2];
    for (int run = 0; run < 2; ++run) {
      const fs::path out = dir / (std::to_string(run) + "_" + file);
      const std::string cmd = "\"" + cli + "\" " + args + " -o \"" + out.string() + "\"";
      if (std::system(cmd.c_str()) != 0) {
        detail += "; command failed: " + args;
        ok = false;
      }
      outputs[run] = slurp(out);
    }
    if (outputs[0].empty() || outputs[0] != outputs[1]) {
      detail += "; differs: " + args;
      ok = false;
    }
  }
  fs::remove_all(dir);
  detail += ok ? "; CLI reruns byte-identical (5 commands)" : "";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  auto results = crossvol::verify::run_suite("all");
  if (argc > 1) {
    for (auto& r : results) {
      if (r.id == 11) r.passed = cli_reruns_identical(argv[1], r.detail) && r.passed;
    }
  }
  bool all = true;
  double total = 0.0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name << " ["
              << r.seconds << " s] " << r.detail << '\n';
    all = all && r.passed;
    total += r.seconds;
  }
  std::cout << (all ? "ALL PASS" : "SOME FAILED") << " (" << total << " s)\n";
  return all ? 0 : 1;
}
