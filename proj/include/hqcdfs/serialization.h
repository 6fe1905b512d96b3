// Copyright 2026 The hqcdfs Authors
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

// JSON and CSV forms of configurations and reports.
//
// Matrices are nested arrays of [re, im] pairs, row-major, rounded to 12
// significant digits. Angles are radians. Every from_json throws ConfigError on
// schema violations.

#ifndef HQCDFS_SERIALIZATION_H
#define HQCDFS_SERIALIZATION_H

#include <string>

#include "json.hpp"

#include "hqcdfs/gates.h"
#include "hqcdfs/holonomy.h"
#include "hqcdfs/model.h"
#include "hqcdfs/noise.h"
#include "hqcdfs/subspace.h"

namespace hqcdfs {

using Json = nlohmann::json;

/// Shortest decimal with 12 significant digits; locale independent.
std::string format_number(double value);
/// `value` rounded to 12 significant digits.
double round_significant(double value);

Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);

Json to_json(const CouplingConfig& config);
CouplingConfig coupling_config_from_json(const Json& j);

/// Keys: kind, phase, strength, duration, blocks, detuned.
Json to_json(const GateRecipe& recipe);
/// Honors "detuned": true; otherwise the pulse-area check applies.
GateRecipe gate_recipe_from_json(const Json& j);

/// Keys: kick_count, distribution {type, params}, samples, seed.
Json to_json(const NoiseEnsemble& ensemble);
NoiseEnsemble noise_ensemble_from_json(const Json& j);

/// Keys: n_qubits, labels, vectors (each a list of [re, im]).
Json to_json(const BasisSet& basis);
BasisSet basis_set_from_json(const Json& j);

Json to_json(const HolonomyReport& report);
Json to_json(const GateRealization& realization);
Json to_json(const NoisyResult& result, bool include_samples);
Json to_json(const NoGoReport& report);

/// Parses `text` as JSON; ConfigError with the parser message on failure.
Json parse_json(const std::string& text);

}  // namespace hqcdfs

#endif  // HQCDFS_SERIALIZATION_H
