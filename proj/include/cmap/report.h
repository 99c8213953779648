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

#ifndef CMAP_REPORT_H
#define CMAP_REPORT_H

#include <string>

#include "json.hpp"

#include "cmap/codingmap.h"
#include "cmap/dynamics.h"

namespace cmap {

/// Deterministic JSON text: keys sorted, floats as %.17g, two-space indent.
std::string dump_json(const nlohmann::json &j);

/// {"X": [{a, b, c, num, den}, ...], "Y": ..., "Z": ...}, terms ordered by (a, b, c).
nlohmann::json polynomial_json(const DiagonalMapPolynomial &poly);
nlohmann::json channel_json(const StokesChannel &t);

/// Header "k,x,y,z,dist_to_id" for diagonal orbits, otherwise k, the 16
/// row-major Stokes entries t_<row><col>, dist_to_id.
std::string orbit_csv(const OrbitRecord &orbit);
nlohmann::json orbit_json(const OrbitRecord &orbit);

}  // namespace cmap

#endif
