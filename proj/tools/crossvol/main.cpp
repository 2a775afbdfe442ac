// crossvol command-line front end.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crossvol/bounds.hpp"
#include "crossvol/classify.hpp"
#include "crossvol/cross.hpp"
#include "crossvol/errors.hpp"
#include "crossvol/funcross.hpp"
#include "crossvol/gallery.hpp"
#include "crossvol/io.hpp"
#include "crossvol/maxvol.hpp"
#include "crossvol/serialize.hpp"
#include "crossvol/verify.hpp"

namespace {

using namespace crossvol;

enum class Format { csv, json, matrix };

struct Source {
  std::string input;
  std::string gallery;
  std::size_t n = 0;
  std::uint64_t seed = 1;
  double theta = kKahanDefaultTheta;

  void add_to(CLI::App* cmd) {
    auto* in = cmd->add_option("--input,-i", input, "Matrix file");
    auto* gal = cmd->add_option("--gallery", gallery, "Gallery family instead of a file");
    in->excludes(gal);
    cmd->add_option("--n", n, "Gallery size");
    cmd->add_option("--seed", seed, "Gallery seed");
    cmd->add_option("--theta", theta, "Kahan angle");
  }

  Matrix load() const {
    if (!input.empty()) return read_matrix_file(input);
    if (gallery.empty()) throw UsageError("need --input FILE or --gallery NAME");
    if (n == 0) throw UsageError("--gallery needs --n");
    return generate({gallery, n, theta, seed});
  }
};

struct Output {
  std::string path;
  std::string format;

  void add_to(CLI::App* cmd) {
    cmd->add_option("-o,--output", path, "Output file (stdout if omitted)");
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  }

  Format resolve(Format fallback) const {
    if (format == "csv") return Format::csv;
    if (format == "json") return Format::json;
    const auto ext = std::filesystem::path(path).extension().string();
    if (ext == ".csv") return Format::csv;
    if (ext == ".json") return Format::json;
    return fallback;
  }

  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write '" + path + "'");
    out << text;
    if (!out) throw Error("write failed for '" + path + "'");
  }
};

std::string json_line(const std::string& json) { return json + "\n"; }

std::vector<std::size_t> parse_range(const std::string& spec) {
  std::vector<std::size_t> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (item.empty() || pos != item.size()) throw UsageError("bad range '" + spec + "'");
    parts.push_back(v);
  }
  std::size_t start = 0, step = 1, stop = 0;
  if (parts.size() == 1) {
    start = stop = parts[0];
  } else if (parts.size() == 2) {
    start = parts[0];
    stop = parts[1];
  } else if (parts.size() == 3) {
    start = parts[0];
    step = parts[1];
    stop = parts[2];
  } else {
    throw UsageError("bad range '" + spec + "' (expected a, a:b or a:step:b)");
  }
  if (step == 0 || start > stop) throw UsageError("bad range '" + spec + "'");
  std::vector<std::size_t> out;
  for (std::size_t v = start; v <= stop; v += step) out.push_back(v);
  return out;
}

std::string tightness_csv(const verify::TightnessSweep& sweep) {
  std::ostringstream out;
  out << "n,norm_l_inv,norm_u_inv,norm_d_inv,last_pivot,r_m,interchanges,slope_l_inv,slope_u_inv,"
         "slope_r_m\n";
  for (const auto& row : sweep.rows) {
    out << row.n << ',' << format_number(row.norm_l_inv) << ',' << format_number(row.norm_u_inv)
        << ',' << format_number(row.norm_d_inv) << ',' << format_number(row.last_pivot) << ','
        << format_number(row.r_m) << ',' << (row.interchanges ? 1 : 0) << ','
        << format_number(sweep.slope_l_inv) << ',' << format_number(sweep.slope_u_inv) << ','
        << format_number(sweep.slope_r_m) << '\n';
  }
  return out.str();
}

std::string tightness_json(const verify::TightnessSweep& sweep) {
  std::ostringstream out;
  out << "{\"family\":\"" << sweep.family << "\",\"rows\":[";
  for (std::size_t k = 0; k < sweep.rows.size(); ++k) {
    const auto& row = sweep.rows[k];
    out << (k ? "," : "") << "{\"n\":" << row.n
        << ",\"norm_l_inv\":" << format_number(row.norm_l_inv)
        << ",\"norm_u_inv\":" << format_number(row.norm_u_inv)
        << ",\"norm_d_inv\":" << format_number(row.norm_d_inv)
        << ",\"last_pivot\":" << format_number(row.last_pivot)
        << ",\"r_m\":" << format_number(row.r_m)
        << ",\"interchanges\":" << (row.interchanges ? "true" : "false") << "}";
  }
  out << "],\"slope_l_inv\":" << format_number(sweep.slope_l_inv)
      << ",\"slope_u_inv\":" << format_number(sweep.slope_u_inv)
      << ",\"slope_r_m\":" << format_number(sweep.slope_r_m) << "}\n";
  return out.str();
}

std::string pivots_csv(const CrossResult& result) {
  std::ostringstream out;
  out << "step,row,col,value\n";
  for (std::size_t k = 0; k < result.pivots.size(); ++k) {
    const Pivot& p = result.pivots[k];
    out << k + 1 << ',' << p.row + 1 << ',' << p.col + 1 << ',' << format_number(p.value) << '\n';
  }
  if (result.lookahead) {
    const Pivot& p = *result.lookahead;
    out << "lookahead," << p.row + 1 << ',' << p.col + 1 << ',' << format_number(p.value) << '\n';
  }
  return out.str();
}

std::string bounds_csv(const BoundReport& report) {
  std::ostringstream out;
  out << "kind,bound,achieved,ratio\n";
  for (const auto& [kind, bound] : report.bounds) {
    const double achieved = kind == "goreinov" ? report.maxvol_error.value_or(0.0)
                                               : report.achieved_error;
    out << kind << ',' << format_number(bound) << ',' << format_number(achieved) << ','
        << format_number(report.ratios.at(kind)) << '\n';
  }
  return out.str();
}

int exit_code_for(const std::exception& ex) {
  if (dynamic_cast<const ParseError*>(&ex)) return 2;
  if (dynamic_cast<const CapabilityError*>(&ex)) return 3;
  if (dynamic_cast<const NumericalError*>(&ex)) return 4;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross approximation with complete pivoting, maximum-volume oracles and bounds"};
  app.require_subcommand(1);

  // classify
  Source classify_src;
  Output classify_out;
  double classify_tol = kDefaultClassifyTol;
  auto* classify_cmd = app.add_subcommand("classify", "Report the structural class of a matrix");
  classify_src.add_to(classify_cmd);
  classify_out.add_to(classify_cmd);
  classify_cmd->add_option("--tol", classify_tol, "Tolerance relative to |A|_max");

  // maxvol
  Source maxvol_src;
  Output maxvol_out;
  std::size_t maxvol_k = 1;
  bool maxvol_principal = false;
  bool maxvol_check = false;
  auto* maxvol_cmd = app.add_subcommand("maxvol", "Exhaustive maximum-volume submatrix");
  maxvol_src.add_to(maxvol_cmd);
  maxvol_out.add_to(maxvol_cmd);
  maxvol_cmd->add_option("--k,--m", maxvol_k, "Submatrix order")->required();
  maxvol_cmd->add_flag("--principal", maxvol_principal, "Restrict to principal submatrices");
  maxvol_cmd->add_flag("--check", maxvol_check, "Compare overall and principal maxima");

  // cross
  Source cross_src;
  Output cross_out;
  std::size_t cross_m = 1;
  std::string cross_strategy = "full";
  double cross_tol = kBreakdownTol;
  auto* cross_cmd = app.add_subcommand("cross", "Cross approximation with complete pivoting");
  cross_src.add_to(cross_cmd);
  cross_out.add_to(cross_cmd);
  cross_cmd->add_option("--m", cross_m, "Number of steps")->required();
  cross_cmd->add_option("--strategy", cross_strategy, "full|diagonal");
  cross_cmd->add_option("--tol", cross_tol, "Breakdown tolerance relative to |A|_max");

  // bounds
  Source bounds_src;
  Output bounds_out;
  std::size_t bounds_m = 1;
  auto* bounds_cmd = app.add_subcommand("bounds", "Achieved error against every applicable bound");
  bounds_src.add_to(bounds_cmd);
  bounds_out.add_to(bounds_cmd);
  bounds_cmd->add_option("--m", bounds_m, "Rank")->required();

  // gallery
  std::string gallery_name;
  std::size_t gallery_n = 0;
  std::uint64_t gallery_seed = 1;
  double gallery_theta = kKahanDefaultTheta;
  Output gallery_out;
  auto* gallery_cmd = app.add_subcommand("gallery", "Write a gallery matrix");
  gallery_cmd->add_option("--name", gallery_name, "Family")->required();
  gallery_cmd->add_option("--n", gallery_n, "Size")->required();
  gallery_cmd->add_option("--seed", gallery_seed, "Seed for random families");
  gallery_cmd->add_option("--theta", gallery_theta, "Kahan angle");
  gallery_cmd->add_option("-o,--output", gallery_out.path, "Output file (stdout if omitted)");

  // funcross
  std::string fn_name = "gauss";
  double fn_c = 4.0;
  std::size_t fn_m = 1;
  std::size_t fn_grid = kDefaultGridSize;
  double fn_tol = 1e-12;
  Output fn_out;
  auto* fn_cmd = app.add_subcommand("funcross", "Cross approximation of a bivariate function");
  fn_cmd->add_option("--function", fn_name, "product|gauss|runge2d|expxy");
  fn_cmd->add_option("--c", fn_c, "runge2d shift");
  fn_cmd->add_option("--m", fn_m, "Number of steps")->required();
  fn_cmd->add_option("--grid", fn_grid, "Chebyshev grid size per axis");
  fn_cmd->add_option("--tol", fn_tol, "Breakdown tolerance relative to max|f|");
  fn_out.add_to(fn_cmd);

  // tightness
  std::string tight_family = "quad_growth";
  std::string tight_range = "8:4:40";
  Output tight_out;
  auto* tight_cmd = app.add_subcommand("tightness", "Complete-pivoting LDU growth sweep");
  tight_cmd->add_option("--family", tight_family, "Gallery family");
  tight_cmd->add_option("--n", tight_range, "Sizes as start:step:stop");
  tight_out.add_to(tight_cmd);

  // verify
  std::string verify_suite;
  double verify_budget = 0.0;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification battery");
  verify_cmd->add_option("suite", verify_suite, "theorems2|bounds3|funcross|tightness|all")
      ->required();
  verify_cmd->add_option("--budget", verify_budget, "Time budget in seconds (0 = none)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    if (*classify_cmd) {
      const MatrixClass cls = classify(classify_src.load(), classify_tol);
      classify_out.emit(json_line(to_json(cls)));
    } else if (*maxvol_cmd) {
      const Matrix a = maxvol_src.load();
      if (maxvol_check) {
        maxvol_out.emit(json_line(to_json(check_principal_optimality(a, maxvol_k))));
      } else {
        maxvol_out.emit(json_line(to_json(brute_force_maxvol(a, maxvol_k, maxvol_principal))));
      }
    } else if (*cross_cmd) {
      const Matrix a = cross_src.load();
      const CrossResult result =
          cross_approximate(a, cross_m, parse_strategy(cross_strategy), {cross_tol});
      if (cross_out.resolve(Format::json) == Format::csv) {
        cross_out.emit(pivots_csv(result));
      } else {
        cross_out.emit(json_line(to_json(result, skeleton_error(a, result))));
      }
    } else if (*bounds_cmd) {
      const BoundReport report = bound_report(bounds_src.load(), bounds_m);
      if (bounds_out.resolve(Format::json) == Format::csv) {
        bounds_out.emit(bounds_csv(report));
      } else {
        bounds_out.emit(json_line(to_json(report)));
      }
    } else if (*gallery_cmd) {
      std::ostringstream out;
      write_matrix(out, generate({gallery_name, gallery_n, gallery_theta, gallery_seed}));
      gallery_out.emit(out.str());
    } else if (*fn_cmd) {
      const TestFunction fn = test_function(fn_name, fn_c);
      const FunctionCrossResult result =
          function_cross(fn.f, fn_m, Grid::chebyshev(fn_grid), {fn_tol});
      if (fn_out.resolve(Format::json) == Format::csv) {
        std::ostringstream out;
        write_csv(out, result.residual_grid);
        fn_out.emit(out.str());
      } else {
        fn_out.emit(json_line(to_json(result)));
      }
    } else if (*tight_cmd) {
      const auto sweep = verify::tightness_sweep(tight_family, parse_range(tight_range));
      tight_out.emit(tight_out.resolve(Format::csv) == Format::json ? tightness_json(sweep)
                                                                   : tightness_csv(sweep));
    } else if (*verify_cmd) {
      const auto start = std::chrono::steady_clock::now();
      const auto results = verify::run_suite(verify_suite);
      const double elapsed =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      bool ok = true;
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.name << " ("
                  << r.seconds << " s): " << r.detail << '\n';
        ok = ok && r.passed;
      }
      if (verify_budget > 0.0 && elapsed > verify_budget) {
        std::cout << "FAIL  budget: " << elapsed << " s > " << verify_budget << " s\n";
        ok = false;
      }
      std::cout << (ok ? "suite passed" : "suite FAILED") << " in " << elapsed << " s\n";
      return ok ? 0 : 1;
    }
  } catch (const std::exception& ex) {
    std::cerr << "crossvol: " << ex.what() << '\n';
    return exit_code_for(ex);
  }
  return 0;
}
