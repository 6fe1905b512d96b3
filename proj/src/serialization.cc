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

#include "hqcdfs/serialization.h"

#include <charconv>
#include <cmath>
#include <numbers>

namespace hqcdfs {

namespace {

template <typename T>
T require(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) {
        throw ConfigError(std::string(what) + ": missing key \"" + key + "\"");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string(what) + ": bad value for \"" + key + "\": " + e.what());
    }
}

template <typename T>
T optional(const Json& j, const char* key, T fallback, const char* what) {
    if (!j.is_object() || !j.contains(key)) return fallback;
    return require<T>(j, key, what);
}

Json complex_to_json(Complex z) {
    return Json::array({round_significant(z.real()), round_significant(z.imag())});
}

Json optional_number(const std::optional<double>& v) {
    return v ? Json(*v) : Json(nullptr);
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    auto result = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
    return std::string(buf, result.ptr);
}

double round_significant(double value) {
    if (!std::isfinite(value)) return value;
    std::string s = format_number(value);
    double out = 0;
    std::from_chars(s.data(), s.data() + s.size(), out);
    return out;
}

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty()) {
        throw ConfigError("matrix: expected a non-empty array of rows");
    }
    ComplexMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(j[0].size()));
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != j[0].size()) {
            throw ConfigError("matrix: ragged rows");
        }
        for (std::size_t c = 0; c < j[r].size(); ++c) {
            const Json& z = j[r][c];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw ConfigError("matrix: entries must be [re, im] pairs");
            }
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return m;
}

Json to_json(const CouplingConfig& config) {
    Json two = Json::array();
    for (const auto& t : config.two_body) {
        two.push_back({{"k", t.k}, {"l", t.l}, {"axis", std::string(1, axis_name(t.axis))}, {"value", t.value}});
    }
    Json four = Json::array();
    for (const auto& t : config.four_body) {
        four.push_back({{"k", t.k},
                        {"l", t.l},
                        {"p", t.p},
                        {"q", t.q},
                        {"axes", axis_pair_name(t.axes)},
                        {"value", t.value}});
    }
    return {{"n_qubits", config.n_qubits}, {"two_body", two}, {"four_body", four}};
}

CouplingConfig coupling_config_from_json(const Json& j) {
    constexpr const char* what = "CouplingConfig";
    CouplingConfig config;
    config.n_qubits = require<int>(j, "n_qubits", what);
    for (const Json& t : optional<Json>(j, "two_body", Json::array(), what)) {
        auto axis = require<std::string>(t, "axis", what);
        if (axis.size() != 1) throw ConfigError("CouplingConfig: axis must be \"x\" or \"y\"");
        config.two_body.push_back(
            {require<int>(t, "k", what), require<int>(t, "l", what), parse_axis(axis[0]), require<double>(t, "value", what)});
    }
    for (const Json& t : optional<Json>(j, "four_body", Json::array(), what)) {
        config.four_body.push_back({require<int>(t, "k", what), require<int>(t, "l", what), require<int>(t, "p", what),
                                    require<int>(t, "q", what), parse_axis_pair(require<std::string>(t, "axes", what)),
                                    require<double>(t, "value", what)});
    }
    config.validate();
    return config;
}

Json to_json(const GateRecipe& recipe) {
    return {{"kind", gate_kind_name(recipe.kind())}, {"phase", recipe.phase()},
            {"strength", recipe.strength()},         {"duration", recipe.duration()},
            {"blocks", recipe.blocks()},             {"detuned", recipe.is_detuned()}};
}

GateRecipe gate_recipe_from_json(const Json& j) {
    constexpr const char* what = "GateRecipe";
    GateKind kind = parse_gate_kind(require<std::string>(j, "kind", what));
    double phase = optional<double>(j, "phase", 0.0, what);
    double strength = require<double>(j, "strength", what);
    double duration = j.contains("duration") ? require<double>(j, "duration", what)
                                             : nominal_pulse_area(kind) / strength;
    std::vector<int> blocks;
    if (j.contains("blocks") && j.at("blocks").is_number_integer()) {
        blocks = {j.at("blocks").get<int>()};
    } else {
        blocks = optional<std::vector<int>>(j, "blocks", kind == GateKind::kCNOT ? std::vector<int>{1, 2}
                                                                                 : std::vector<int>{1},
                                            what);
    }
    bool detuned = optional<bool>(j, "detuned", false, what);
    return detuned ? GateRecipe::detuned(kind, phase, strength, duration, std::move(blocks))
                   : GateRecipe::make(kind, phase, strength, duration, std::move(blocks));
}

Json to_json(const NoiseEnsemble& ensemble) {
    Json params;
    const auto& d = ensemble.distribution;
    switch (d.kind) {
        case ThetaDistribution::Kind::kUniform:
            params = {{"low", d.first}, {"high", d.second}};
            break;
        case ThetaDistribution::Kind::kGaussian:
            params = {{"mean", d.first}, {"stddev", d.second}};
            break;
        case ThetaDistribution::Kind::kFixed:
            params = {{"theta", d.first}};
            break;
    }
    return {{"kick_count", ensemble.kick_count},
            {"distribution", {{"type", distribution_kind_name(d.kind)}, {"params", params}}},
            {"samples", ensemble.samples},
            {"seed", ensemble.seed}};
}

NoiseEnsemble noise_ensemble_from_json(const Json& j) {
    constexpr const char* what = "NoiseEnsemble";
    NoiseEnsemble e;
    e.kick_count = require<int>(j, "kick_count", what);
    e.samples = require<int>(j, "samples", what);
    e.seed = optional<std::uint64_t>(j, "seed", 0, what);
    Json dist = require<Json>(j, "distribution", what);
    auto kind = parse_distribution_kind(require<std::string>(dist, "type", what));
    Json params = optional<Json>(dist, "params", Json::object(), what);
    switch (kind) {
        case ThetaDistribution::Kind::kUniform:
            e.distribution = ThetaDistribution::uniform(optional<double>(params, "low", 0.0, what),
                                                        optional<double>(params, "high", 2 * std::numbers::pi, what));
            break;
        case ThetaDistribution::Kind::kGaussian:
            e.distribution = ThetaDistribution::gaussian(optional<double>(params, "mean", 0.0, what),
                                                         require<double>(params, "stddev", what));
            break;
        case ThetaDistribution::Kind::kFixed:
            e.distribution = ThetaDistribution::fixed(require<double>(params, "theta", what));
            break;
    }
    e.validate();
    return e;
}

Json to_json(const BasisSet& basis) {
    Json vectors = Json::array();
    for (const auto& v : basis.vectors()) {
        Json amps = Json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i) amps.push_back(Json::array({v(i).real(), v(i).imag()}));
        vectors.push_back(std::move(amps));
    }
    return {{"n_qubits", basis.n_qubits()}, {"labels", basis.labels()}, {"vectors", vectors}};
}

BasisSet basis_set_from_json(const Json& j) {
    constexpr const char* what = "BasisSet";
    int n = require<int>(j, "n_qubits", what);
    auto labels = require<std::vector<std::string>>(j, "labels", what);
    Json vectors = require<Json>(j, "vectors", what);
    if (!vectors.is_array()) throw ConfigError("BasisSet: vectors must be an array");
    std::vector<StateVector> out;
    for (const Json& v : vectors) {
        if (!v.is_array()) throw ConfigError("BasisSet: each vector must be an array of [re, im]");
        StateVector s(static_cast<Eigen::Index>(v.size()));
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Json& z = v[i];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                throw ConfigError("BasisSet: amplitudes must be [re, im] pairs");
            }
            s(static_cast<Eigen::Index>(i)) = Complex(z[0].get<double>(), z[1].get<double>());
        }
        out.push_back(std::move(s));
    }
    return BasisSet(n, std::move(out), std::move(labels));
}

Json to_json(const HolonomyReport& report) {
    return {{"cyclicity_defect", report.cyclicity_defect},
            {"transport_defect", report.transport_defect},
            {"preconditions_met", report.preconditions_met},
            {"holonomy_matrix", report.holonomy_matrix ? matrix_to_json(report.holonomy_matrix->matrix()) : Json(nullptr)},
            {"reconstruction_distance", optional_number(report.reconstruction_distance)},
            {"chain_distance", optional_number(report.chain_distance)},
            {"steps", report.steps},
            {"tau", report.tau}};
}

Json to_json(const GateRealization& r) {
    return {{"recipe", to_json(r.recipe)},
            {"n_blocks", r.n_blocks},
            {"detuned", r.recipe.is_detuned()},
            {"pulse_area_error", r.recipe.pulse_area_error()},
            {"propagator", matrix_to_json(r.propagator.matrix())},
            {"restricted", matrix_to_json(r.restricted)},
            {"target", matrix_to_json(r.target.matrix())},
            {"distance", r.distance},
            {"fidelity", r.fidelity},
            {"invariance", r.invariance},
            {"invariant_block", matrix_to_json(r.invariant_block)},
            {"expected_block", matrix_to_json(r.expected_block)},
            {"invariant_block_defect", r.invariant_block_defect},
            {"holonomy", to_json(r.holonomy)},
            {"spectator", "0L"}};
}

Json to_json(const NoisyResult& result, bool include_samples) {
    Json j = {{"mean_fidelity", result.mean_fidelity},
              {"min_fidelity", result.min_fidelity},
              {"samples", result.per_sample.size()}};
    if (include_samples) j["per_sample"] = result.per_sample;
    return j;
}

Json to_json(const NoGoReport& r) {
    return {{"trials", r.trials},
            {"seed", r.seed},
            {"trivial", r.trivial},
            {"nontrivial", r.nontrivial},
            {"counterexamples", r.counterexamples},
            {"nontrivial_without_defect", r.nontrivial_without_defect},
            {"max_invariance_defect", r.max_invariance_defect},
            {"max_trivial_transport_defect", r.max_trivial_transport_defect},
            {"min_nontrivial_transport_defect", r.min_nontrivial_transport_defect},
            {"witness",
             {{"couplings", {{"J12x", 1.0}}},
              {"restricted", matrix_to_json(r.witness_restricted)},
              {"transport_defect", r.witness_transport_defect}}}};
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace hqcdfs
