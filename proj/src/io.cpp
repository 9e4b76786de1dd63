#include "tph/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

namespace tph {

ordered_json to_json(const ZonalFunction& f) {
    ordered_json j;
    j["family"] = family_name(f.space.family);
    j["m"] = f.space.m;
    j["coeffs"] = f.h;
    return j;
}

static Space space_from_json(const ordered_json& j) {
    if (!j.contains("family") || !j.contains("m"))
        throw std::invalid_argument("JSON object needs \"family\" and \"m\"");
    return make_space(family_from_name(j.at("family").get<std::string>()),
                      j.at("m").get<int>());
}

ZonalFunction zonal_from_json(const ordered_json& j) {
    ZonalFunction f;
    f.space = space_from_json(j);
    if (!j.contains("coeffs")) throw std::invalid_argument("function JSON needs \"coeffs\"");
    f.h = j.at("coeffs").get<std::vector<double>>();
    if (f.h.empty()) throw std::invalid_argument("\"coeffs\" must be nonempty");
    return f;
}

ordered_json to_json(const MercerKernel& k) {
    ordered_json j;
    j["family"] = family_name(k.space.family);
    j["m"] = k.space.m;
    j["coeffs"] = k.b;
    if (!k.note.empty()) j["note"] = k.note;
    return j;
}

MercerKernel kernel_from_json(const ordered_json& j, bool* collapsed_per_j) {
    if (collapsed_per_j) *collapsed_per_j = false;
    MercerKernel k;
    k.space = space_from_json(j);
    bool has_coeffs = j.contains("coeffs"), has_per_j = j.contains("per_j");
    if (has_coeffs && has_per_j)
        throw std::invalid_argument("kernel JSON must carry \"coeffs\" or \"per_j\", not both");
    if (has_coeffs) {
        k.b = j.at("coeffs").get<std::vector<double>>();
    } else if (has_per_j) {
        // general per-degree rows are outside the zonal model: collapse each
        // row to its maximum and let the caller surface the warning
        auto rows = j.at("per_j").get<std::vector<std::vector<double>>>();
        k.b.reserve(rows.size());
        for (const auto& row : rows) {
            if (row.empty()) throw std::invalid_argument("\"per_j\" rows must be nonempty");
            k.b.push_back(*std::max_element(row.begin(), row.end()));
        }
        if (collapsed_per_j) *collapsed_per_j = true;
    } else {
        throw std::invalid_argument("kernel JSON needs \"coeffs\" or \"per_j\"");
    }
    if (k.b.empty()) throw std::invalid_argument("kernel coefficient list must be nonempty");
    if (j.contains("note")) k.note = j.at("note").get<std::string>();
    return k;
}

static ordered_json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    ordered_json j;
    in >> j;
    return j;
}

ZonalFunction load_zonal(const std::string& path) { return zonal_from_json(parse_file(path)); }

MercerKernel load_kernel(const std::string& path, bool* collapsed_per_j) {
    return kernel_from_json(parse_file(path), collapsed_per_j);
}

void save_json(const ordered_json& j, const std::string& path) {
    if (path == "-" || path.empty()) {
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

std::string format_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string to_csv(const std::vector<std::string>& header,
                   const std::vector<std::vector<double>>& columns) {
    if (header.size() != columns.size())
        throw std::invalid_argument("to_csv: header/column count mismatch");
    std::string out;
    for (std::size_t c = 0; c < header.size(); ++c) {
        out += header[c];
        out += c + 1 < header.size() ? ',' : '\n';
    }
    std::size_t rows = columns.empty() ? 0 : columns[0].size();
    for (const auto& col : columns)
        if (col.size() != rows) throw std::invalid_argument("to_csv: ragged columns");
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out += format_sci(columns[c][r]);
            out += c + 1 < columns.size() ? ',' : '\n';
        }
    return out;
}

}  // namespace tph
