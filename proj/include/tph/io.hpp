#pragma once

// JSON schemas and CSV emission.  All JSON uses ordered maps and all floats
// print with 17 significant digits so identical runs produce identical bytes.

#include <string>
#include <vector>

#include "json.hpp"
#include "tph/mercer.hpp"
#include "tph/zonal.hpp"

namespace tph {

using ordered_json = nlohmann::ordered_json;

inline constexpr const char* toolkit_version = "0.1.0";

// {"family": "...", "m": int, "coeffs": [h_0, ...]}
ordered_json to_json(const ZonalFunction& f);
ZonalFunction zonal_from_json(const ordered_json& j);

// {"family", "m", "coeffs"} or {"family", "m", "per_j": [[...], ...]}; per_j
// rows are collapsed to their maximum with a warning flag (stderr note left to
// the caller).
ordered_json to_json(const MercerKernel& k);
MercerKernel kernel_from_json(const ordered_json& j, bool* collapsed_per_j = nullptr);

ZonalFunction load_zonal(const std::string& path);
MercerKernel load_kernel(const std::string& path, bool* collapsed_per_j = nullptr);
void save_json(const ordered_json& j, const std::string& path);  // "-" = stdout

// Full-precision scientific formatting (%.16e -> 17 significant digits).
std::string format_sci(double v);

// header + column-major data -> CSV text.
std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns);

}  // namespace tph
