// Copyright 2026 The cmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cmap/report.h"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace cmap {

namespace {

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "null";
    }
    if (std::isinf(v)) {
        return v > 0 ? "1e999" : "-1e999";
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(std::ostringstream &out, const nlohmann::json &j, int depth) {
    const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
    switch (j.type()) {
        case nlohmann::json::value_t::object: {
            if (j.empty()) {
                out << "{}";
                return;
            }
            out << "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out << (first ? "" : ",\n") << pad << nlohmann::json(it.key()).dump() << ": ";
                emit(out, it.value(), depth + 1);
                first = false;
            }
            out << "\n" << close_pad << "}";
            return;
        }
        case nlohmann::json::value_t::array: {
            if (j.empty()) {
                out << "[]";
                return;
            }
            out << "[\n";
            for (std::size_t i = 0; i < j.size(); i++) {
                out << (i ? ",\n" : "") << pad;
                emit(out, j[i], depth + 1);
            }
            out << "\n" << close_pad << "]";
            return;
        }
        case nlohmann::json::value_t::number_float:
            out << format_double(j.get<double>());
            return;
        default:
            out << j.dump();
    }
}

}  // namespace

std::string dump_json(const nlohmann::json &j) {
    std::ostringstream out;
    emit(out, j, 0);
    out << "\n";
    return out.str();
}

nlohmann::json polynomial_json(const DiagonalMapPolynomial &poly) {
    nlohmann::json out = nlohmann::json::object();
    const char *names[3] = {"X", "Y", "Z"};
    for (int s = 0; s < 3; s++) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &m : poly.components[static_cast<std::size_t>(s)].monomials()) {
            terms.push_back({
                {"a", m.exponents[0]},
                {"b", m.exponents[1]},
                {"c", m.exponents[2]},
                {"num", m.coeff.numerator()},
                {"den", m.coeff.denominator()},
            });
        }
        out[names[s]] = terms;
    }
    return out;
}

nlohmann::json channel_json(const StokesChannel &t) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < 4; r++) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < 4; c++) {
            row.push_back(t(r, c));
        }
        rows.push_back(row);
    }
    return rows;
}

std::string orbit_csv(const OrbitRecord &orbit) {
    std::ostringstream out;
    if (orbit.diagonal) {
        out << "k,x,y,z,dist_to_id\n";
    } else {
        out << "k";
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) {
                out << ",t_" << "IXYZ"[r] << "IXYZ"[c];
            }
        }
        out << ",dist_to_id\n";
    }
    for (const auto &level : orbit.levels) {
        out << level.k;
        if (orbit.diagonal) {
            auto d = level.state.diagonal();
            out << "," << format_double(d.x) << "," << format_double(d.y) << "," << format_double(d.z);
        } else {
            for (double v : level.state.entries()) {
                out << "," << format_double(v);
            }
        }
        out << "," << format_double(level.distance) << "\n";
    }
    return out.str();
}

nlohmann::json orbit_json(const OrbitRecord &orbit) {
    nlohmann::json levels = nlohmann::json::array();
    for (const auto &level : orbit.levels) {
        nlohmann::json item{{"k", level.k}, {"dist_to_id", level.distance}};
        if (orbit.diagonal) {
            auto d = level.state.diagonal();
            item["diag"] = {d.x, d.y, d.z};
        } else {
            item["stokes"] = channel_json(level.state);
        }
        levels.push_back(item);
    }
    return {
        {"converged", orbit.converged},
        {"iterations_used", orbit.iterations_used},
        {"levels", levels},
    };
}

}  // namespace cmap
