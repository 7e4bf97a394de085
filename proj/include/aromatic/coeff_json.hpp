#pragma once

#include <string>
#include <string_view>

#include "aromatic/series.hpp"

namespace aromatic {

// JSON object: canonical forest text -> "p/q", plus "__order" (integer) and
// "__domain" ("AF" | "AT" | "A"). Zero coefficients are omitted.
std::string to_json(const CoeffMap& map);
CoeffMap coeff_map_from_json(std::string_view json_text);

CoeffMap read_coeff_map(const std::string& path);
void write_coeff_map(const std::string& path, const CoeffMap& map);

}  // namespace aromatic
