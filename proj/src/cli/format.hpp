#pragma once

#include <iosfwd>

#include "json.hpp"

namespace screw::cli {

using Record = nlohmann::ordered_json;

enum class OutputMode { Human, Machine };

/// Machine mode: JSON with every number rounded to 12 significant digits and
/// magnitudes below 1e-12 written as 0.
/// Human mode: indented key/value text with 6 significant digits.
void emit(std::ostream& out, const Record& record, OutputMode mode);

/// One compact JSON line (machine) or one space-separated row (human).
void emit_row(std::ostream& out, const Record& record, OutputMode mode);

double round_significant(double x, int digits);

}  // namespace screw::cli
