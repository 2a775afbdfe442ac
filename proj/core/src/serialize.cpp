#include "crossvol/serialize.hpp"

#include <cmath>
#include <limits>

#include "crossvol/errors.hpp"
#include "json.hpp"

namespace crossvol {

using nlohmann::json;

namespace {

// Non-finite doubles are written as null.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double read_number(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

json one_based(const IndexSet& s) {
  json arr = json::array();
  for (std::size_t i : s) arr.push_back(i + 1);
  return arr;
}

json to_value(const MatrixClass& c) {
  return {{"is_symmetric", c.is_symmetric},
          {"is_spsd", c.is_spsd},
          {"is_dd", c.is_dd},
          {"is_strictly_dd", c.is_strictly_dd},
          {"is_doubly_dd", c.is_doubly_dd}};
}

MatrixClass class_from(const json& j) {
  MatrixClass c;
  c.is_symmetric = j.at("is_symmetric").get<bool>();
  c.is_spsd = j.at("is_spsd").get<bool>();
  c.is_dd = j.at("is_dd").get<bool>();
  c.is_strictly_dd = j.at("is_strictly_dd").get<bool>();
  c.is_doubly_dd = j.at("is_doubly_dd").get<bool>();
  return c;
}

json to_value(const Pivot& p) {
  return {{"row", p.row + 1}, {"col", p.col + 1}, {"value", p.value}};
}

Pivot pivot_from(const json& j) {
  return {j.at("row").get<std::size_t>() - 1, j.at("col").get<std::size_t>() - 1,
          j.at("value").get<double>()};
}

json to_value(const VolumeResult& v) {
  return {{"row_set", one_based(v.row_set)},
          {"col_set", one_based(v.col_set)},
          {"volume", v.volume},
          {"is_principal", v.is_principal()}};
}

}  // namespace

std::string to_json(const MatrixClass& cls) { return to_value(cls).dump(2); }

std::string to_json(const VolumeResult& result) { return to_value(result).dump(2); }

std::string to_json(const PrincipalCheck& check) {
  return json{{"holds", check.holds},
              {"overall", to_value(check.overall)},
              {"principal", to_value(check.principal)}}
      .dump(2);
}

std::string to_json(const CrossResult& result, double skeleton_error) {
  json pivots = json::array();
  for (const Pivot& p : result.pivots) pivots.push_back(to_value(p));
  return json{{"steps_completed", result.steps_completed},
              {"termination", std::string(to_string(result.termination))},
              {"pivots", pivots},
              {"lookahead", result.lookahead ? to_value(*result.lookahead) : json(nullptr)},
              {"row_set", one_based(result.row_set)},
              {"col_set", one_based(result.col_set)},
              {"residual_max", result.residual_max},
              {"skeleton_error", skeleton_error}}
      .dump(2);
}

std::string to_json(const BoundReport& r) {
  json pivots = json::array();
  for (const Pivot& p : r.pivots) pivots.push_back(to_value(p));
  json bounds = json::object();
  for (const auto& [k, v] : r.bounds) bounds[k] = number(v);
  json ratios = json::object();
  for (const auto& [k, v] : r.ratios) ratios[k] = number(v);
  return json{{"n_rows", r.n_rows},
              {"n_cols", r.n_cols},
              {"m", r.m},
              {"numerical_rank", r.numerical_rank},
              {"matrix_class", to_value(r.matrix_class)},
              {"achieved_error", r.achieved_error},
              {"residual_max", r.residual_max},
              {"sigma_next", r.sigma_next},
              {"min_pivot", r.min_pivot},
              {"rho", r.rho},
              {"gamma",
               {{"k", r.gamma.k},
                {"lower", r.gamma.lower},
                {"upper", r.gamma.upper},
                {"exact", r.gamma.exact ? json(*r.gamma.exact) : json(nullptr)}}},
              {"pivots", pivots},
              {"maxvol_error", r.maxvol_error ? json(*r.maxvol_error) : json(nullptr)},
              {"bounds", bounds},
              {"ratios", ratios},
              {"all_satisfied", r.all_satisfied()}}
      .dump(2);
}

BoundReport bound_report_from_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    BoundReport r;
    r.n_rows = j.at("n_rows").get<std::size_t>();
    r.n_cols = j.at("n_cols").get<std::size_t>();
    r.m = j.at("m").get<std::size_t>();
    r.numerical_rank = j.at("numerical_rank").get<std::size_t>();
    r.matrix_class = class_from(j.at("matrix_class"));
    r.achieved_error = j.at("achieved_error").get<double>();
    r.residual_max = j.at("residual_max").get<double>();
    r.sigma_next = j.at("sigma_next").get<double>();
    r.min_pivot = j.at("min_pivot").get<double>();
    r.rho = j.at("rho").get<double>();
    const json& g = j.at("gamma");
    r.gamma.k = g.at("k").get<std::size_t>();
    r.gamma.lower = g.at("lower").get<double>();
    r.gamma.upper = g.at("upper").get<double>();
    if (!g.at("exact").is_null()) r.gamma.exact = g.at("exact").get<double>();
    for (const json& p : j.at("pivots")) r.pivots.push_back(pivot_from(p));
    if (!j.at("maxvol_error").is_null()) r.maxvol_error = j.at("maxvol_error").get<double>();
    for (const auto& [k, v] : j.at("bounds").items()) r.bounds[k] = read_number(v);
    for (const auto& [k, v] : j.at("ratios").items()) r.ratios[k] = read_number(v);
    return r;
  } catch (const json::exception& ex) {
    throw ParseError(std::string("bound report JSON: ") + ex.what());
  }
}

std::string to_json(const FunctionCrossResult& result) {
  json points = json::array();
  for (const GridPoint& p : result.points) {
    points.push_back(
        {{"x_index", p.x_index + 1}, {"y_index", p.y_index + 1}, {"x", p.x}, {"y", p.y}});
  }
  return json{{"steps_completed", result.steps_completed},
              {"termination", std::string(to_string(result.termination))},
              {"grid_size", {result.residual_grid.rows(), result.residual_grid.cols()}},
              {"points", points},
              {"pivot_values", result.pivot_values},
              {"error_max", result.error_max}}
      .dump(2);
}

}  // namespace crossvol
