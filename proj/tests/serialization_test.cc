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

#include <gtest/gtest.h>

using namespace hqcdfs;

TEST(format_number, twelve_significant_digits) {
    EXPECT_EQ(format_number(0.1), "0.1");
    EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
    EXPECT_EQ(format_number(0), "0");
    EXPECT_EQ(format_number(-2.5e-17), "-2.5e-17");
}

TEST(matrix_json, round_trip) {
    ComplexMatrix m(2, 2);
    m << std::complex<double>(0.25, -1), 0, 3, std::complex<double>(0, 0.5);
    EXPECT_EQ(matrix_from_json(matrix_to_json(m)), m);
    EXPECT_THROW(matrix_from_json(Json::parse("[[1, 2]]")), ConfigError);
    EXPECT_THROW(matrix_from_json(Json::parse("[[[1, 2]], [[1, 2], [3, 4]]]")), ConfigError);
}

TEST(coupling_config_json, round_trip) {
    CouplingConfig c{.n_qubits = 6,
                     .two_body = {{1, 2, Axis::kY, -0.5}},
                     .four_body = {{1, 3, 4, 6, AxisPair::kXX, 2.0}}};
    CouplingConfig back = coupling_config_from_json(to_json(c));
    EXPECT_EQ(back.n_qubits, 6);
    ASSERT_EQ(back.two_body.size(), 1u);
    EXPECT_EQ(back.two_body[0].axis, Axis::kY);
    EXPECT_EQ(back.two_body[0].value, -0.5);
    ASSERT_EQ(back.four_body.size(), 1u);
    EXPECT_EQ(back.four_body[0].q, 6);
    EXPECT_THROW(coupling_config_from_json(Json::parse(R"({"n_qubits": 3, "two_body": [{"k": 1}]})")), ConfigError);
}

TEST(gate_recipe_json, schema) {
    GateRecipe r = gate_recipe_from_json(Json::parse(R"({"kind": "CNOT", "phase": 0, "strength": 1, "blocks": [2, 1]})"));
    EXPECT_EQ(r.kind(), GateKind::kCNOT);
    EXPECT_EQ(r.blocks(), (std::vector<int>{2, 1}));
    GateRecipe x = gate_recipe_from_json(to_json(GateRecipe::xz(0.25, 2.0, 3)));
    EXPECT_EQ(x.phase(), 0.25);
    EXPECT_EQ(x.blocks(), (std::vector<int>{3}));
    EXPECT_THROW(gate_recipe_from_json(Json::parse(R"({"kind": "XZ", "phase": 0, "strength": 1, "duration": 1, "blocks": 1})")),
                 ConfigError);
    GateRecipe d = gate_recipe_from_json(
        Json::parse(R"({"kind": "XZ", "phase": 0, "strength": 1, "duration": 1, "blocks": 1, "detuned": true})"));
    EXPECT_TRUE(d.is_detuned());
}

TEST(noise_ensemble_json, round_trip) {
    NoiseEnsemble e{.kick_count = 3, .distribution = ThetaDistribution::gaussian(0.1, 0.2), .samples = 7, .seed = 9};
    NoiseEnsemble back = noise_ensemble_from_json(to_json(e));
    EXPECT_EQ(back.kick_count, 3);
    EXPECT_EQ(back.distribution.kind, ThetaDistribution::Kind::kGaussian);
    EXPECT_EQ(back.distribution.second, 0.2);
    EXPECT_EQ(back.seed, 9u);
    EXPECT_THROW(noise_ensemble_from_json(Json::parse(R"({"kick_count": 1, "distribution": {"type": "cauchy"}, "samples": 1, "seed": 0})")),
                 ConfigError);
}

TEST(basis_json, round_trip) {
    BasisSet b = cnot_invariant_basis(LogicalBlock(1), LogicalBlock(2), 6);
    BasisSet back = basis_set_from_json(to_json(b));
    EXPECT_EQ(back.labels(), b.labels());
    EXPECT_EQ(back.columns(), b.columns());
}

TEST(report_json, realization_matrices_reload_unitary) {
    Json j = to_json(realize(GateRecipe::zx(0.4), 1, 64));
    for (const char* key : {"propagator", "target", "invariant_block"}) {
        ComplexMatrix m = matrix_from_json(j.at(key));
        EXPECT_LE(unitarity_defect(m), 1e-10 * static_cast<double>(m.rows())) << key;
    }
    ComplexMatrix hol = matrix_from_json(j.at("holonomy").at("holonomy_matrix"));
    EXPECT_LE(unitarity_defect(hol), 1e-8);
}

TEST(parse_json, malformed) { EXPECT_THROW(parse_json("{oops"), ConfigError); }
