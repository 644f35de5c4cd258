#pragma once

#include <string>
#include <string_view>

#include "tqftdef/complex.hpp"
#include "tqftdef/frobenius_data.hpp"

namespace tqftdef {

/// JSON system documents. Throws Parse on malformed input and
/// DimensionMismatch on inconsistent tables. Missing loop constants are
/// derived when the algebra is projectively special.
SystemData system_from_json(std::string_view text);
/// Deterministic: sorted keys, entries sorted lexicographically, zero entries
/// omitted, scalars as "p/q" strings.
std::string system_to_json(const SystemData& system);

/// JSON complex documents. Triangles are rotated to canonical form on load.
CurveSurfaceComplex complex_from_json(std::string_view text);
std::string complex_to_json(const CurveSurfaceComplex& complex);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace tqftdef
