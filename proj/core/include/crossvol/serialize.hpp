#pragma once

#include <string>
#include <string_view>

#include "crossvol/bounds.hpp"
#include "crossvol/classify.hpp"
#include "crossvol/cross.hpp"
#include "crossvol/funcross.hpp"
#include "crossvol/maxvol.hpp"

namespace crossvol {

// JSON reports. Indices are written 1-based; readers convert back.

std::string to_json(const MatrixClass& cls);
std::string to_json(const VolumeResult& result);
std::string to_json(const PrincipalCheck& check);
std::string to_json(const CrossResult& result, double skeleton_error);
std::string to_json(const BoundReport& report);
std::string to_json(const FunctionCrossResult& result);

/// Inverse of to_json(BoundReport). Throws ParseError on malformed input.
BoundReport bound_report_from_json(std::string_view text);

}  // namespace crossvol
