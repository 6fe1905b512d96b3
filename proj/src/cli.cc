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

#include "hqcdfs/cli.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "hqcdfs/gates.h"
#include "hqcdfs/holonomy.h"
#include "hqcdfs/noise.h"
#include "hqcdfs/serialization.h"

namespace hqcdfs {

namespace {

// Thrown for bad command-line values that CLI11 cannot catch itself.
class UsageError : public Error {
   public:
    using Error::Error;
};

class Violations {
   public:
    void check_at_most(const std::string& name, double value, double limit) {
        if (!(value <= limit)) {
            items_.push_back({{"check", name}, {"value", value}, {"limit", limit}});
        }
    }
    void fail(const std::string& name, const std::string& detail) {
        items_.push_back({{"check", name}, {"detail", detail}});
    }
    bool empty() const { return items_.empty(); }
    const Json& json() const { return items_; }

   private:
    Json items_ = Json::array();
};

std::string read_input(const std::string& source) {
    auto first = source.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
        return source;
    }
    std::ifstream in(source);
    if (!in) {
        throw UsageError("cannot read input file '" + source + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct RecipeInput {
    Json document;
    GateRecipe recipe;
    int n_blocks;
};

RecipeInput load_recipe(const std::string& source, int n_blocks_override) {
    Json doc = parse_json(read_input(source));
    GateRecipe recipe = gate_recipe_from_json(doc);
    int n_blocks = n_blocks_override > 0 ? n_blocks_override
                   : doc.contains("n_blocks") && doc["n_blocks"].is_number_integer()
                       ? doc["n_blocks"].get<int>()
                       : default_block_count(recipe);
    if (n_blocks < recipe.max_block()) {
        throw IndexError("n_blocks " + std::to_string(n_blocks) + " smaller than block " +
                         std::to_string(recipe.max_block()));
    }
    return {std::move(doc), std::move(recipe), n_blocks};
}

Json envelope(const std::string& command, const Tolerances& tol, Json input, Json result,
              const Violations& violations) {
    return {{"tool", kToolVersion},
            {"command", command},
            {"tolerance_scale", tol.scale},
            {"input", std::move(input)},
            {"result", std::move(result)},
            {"violations", violations.json()},
            {"status", violations.empty() ? "ok" : "violations"}};
}

void check_gate(const GateRealization& r, const Tolerances& tol, Violations& v) {
    v.check_at_most("invariance", r.invariance, tol.invariance());
    if (r.recipe.is_detuned()) return;
    v.check_at_most("distance", r.distance, tol.gate_distance());
    v.check_at_most("invariant_block_defect", r.invariant_block_defect, tol.invariant_block());
    v.check_at_most("cyclicity_defect", r.holonomy.cyclicity_defect, tol.cyclicity());
    v.check_at_most("transport_defect", r.holonomy.transport_defect, tol.transport());
    if (r.holonomy.steps > 0) {
        if (r.holonomy.reconstruction_distance) {
            v.check_at_most("reconstruction_distance", *r.holonomy.reconstruction_distance, tol.reconstruction());
        } else {
            v.fail("holonomy_preconditions", "cyclicity or transport condition failed; no reconstruction");
        }
    }
}

class Output {
   public:
    Output(std::string path, std::ostream& fallback) : path_(std::move(path)), fallback_(fallback) {
        if (!path_.empty()) {
            // Fail before any computation if the destination is not writable.
            std::ofstream probe(path_, std::ios::app);
            if (!probe) throw UsageError("cannot write output file '" + path_ + "'");
        }
    }

    void write(const std::string& text) const {
        if (path_.empty()) {
            fallback_ << text;
            return;
        }
        std::ofstream f(path_, std::ios::trunc);
        if (!f) throw UsageError("cannot write output file '" + path_ + "'");
        f << text;
    }

   private:
    std::string path_;
    std::ostream& fallback_;
};

int finish(const Output& output, const Json& report, const Violations& violations) {
    output.write(report.dump(2) + "\n");
    return violations.empty() ? kExitOk : kExitViolations;
}

}  // namespace

Tolerances Tolerances::from_environment() {
    Tolerances t;
    const char* raw = std::getenv(kToleranceScaleEnv);
    if (raw == nullptr || *raw == '\0') return t;
    std::string text(raw);
    double value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !(value > 0) || !std::isfinite(value)) {
        throw ConfigError(std::string(kToleranceScaleEnv) + " must be a positive number, got '" + text + "'");
    }
    t.scale = value;
    return t;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Non-adiabatic holonomic gates in decoherence-free subspaces", "hqcdfs"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string recipe_source;
    std::string ensemble_source;
    std::string basis_source;
    std::string out_path;
    std::string csv_path;
    std::string param;
    std::string kind = "dfs";
    std::string spectator = "0L";
    std::vector<int> blocks;
    int steps = 4096;
    int n_blocks = 0;
    int points = 2;
    int trials = 1000;
    std::uint64_t seed = 7;
    double from = 0;
    double to = 0;
    double time = -1;
    bool convergence = false;
    bool samples_in_report = false;

    auto* gate = app.add_subcommand("gate", "Realize one gate recipe and compare it with its target");
    gate->add_option("--recipe", recipe_source, "GateRecipe JSON file or inline JSON")->required();
    gate->add_option("--steps", steps, "Projector-chain steps (0 skips the reconstruction)")
        ->check(CLI::NonNegativeNumber);
    gate->add_option("--n-blocks", n_blocks, "Logical blocks in the register");
    gate->add_option("--out", out_path, "Report file (default: stdout)");

    auto* holonomy = app.add_subcommand("holonomy", "Certify the holonomy conditions and reconstruct the holonomy");
    holonomy->add_option("--recipe", recipe_source, "GateRecipe JSON file or inline JSON")->required();
    holonomy->add_option("--steps", steps, "Projector-chain steps")->check(CLI::Range(kMinChainSteps, 1 << 20));
    holonomy->add_option("--n-blocks", n_blocks, "Logical blocks in the register");
    holonomy->add_flag("--convergence", convergence, "Add a convergence study over 512..8192 steps");
    holonomy->add_option("--out", out_path, "Report file (default: stdout)");

    auto* noise = app.add_subcommand("noise", "Run a recipe under collective phase kicks");
    noise->add_option("--recipe", recipe_source, "GateRecipe JSON file or inline JSON")->required();
    noise->add_option("--ensemble", ensemble_source, "NoiseEnsemble JSON file or inline JSON")->required();
    noise->add_option("--n-blocks", n_blocks, "Logical blocks in the register");
    noise->add_option("--baseline-angle", time, "Also run the unencoded baseline for this rotation angle");
    noise->add_flag("--samples-in-report", samples_in_report, "Embed per-sample fidelities in the report");
    noise->add_option("--csv", csv_path, "Per-sample fidelity CSV");
    noise->add_option("--out", out_path, "Report file (default: stdout)");

    auto* sweep = app.add_subcommand("sweep", "Sweep a recipe parameter and emit CSV");
    sweep->add_option("--param", param, "phase | pulse_area_detuning")
        ->required()
        ->check(CLI::IsMember({"phase", "pulse_area_detuning"}));
    sweep->add_option("--from", from, "First parameter value")->required();
    sweep->add_option("--to", to, "Last parameter value")->required();
    sweep->add_option("--points", points, "Number of points, ≥ 2")->required();
    sweep->add_option("--recipe", recipe_source, "GateRecipe JSON template")->required();
    sweep->add_option("--n-blocks", n_blocks, "Logical blocks in the register");
    sweep->add_option("--out", out_path, "CSV file (default: stdout)");

    auto* nogo = app.add_subcommand("nogo", "Randomized two-qubit no-go certificate");
    nogo->add_option("--trials", trials, "Random configurations")->check(CLI::PositiveNumber);
    nogo->add_option("--seed", seed, "Random seed");
    nogo->add_option("--out", out_path, "Report file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Check a recipe Hamiltonian against a serialized basis");
    verify->add_option("--recipe", recipe_source, "GateRecipe JSON file or inline JSON")->required();
    verify->add_option("--basis", basis_source, "BasisSet JSON file or inline JSON")->required();
    verify->add_option("--n-blocks", n_blocks, "Logical blocks in the register");
    verify->add_option("--time", time, "Evolution time (default: recipe duration)");
    verify->add_option("--out", out_path, "Report file (default: stdout)");

    auto* basis = app.add_subcommand("basis", "Emit a basis as BasisSet JSON");
    basis->add_option("--kind", kind, "dfs | logical | dfs-product | cnot")
        ->check(CLI::IsMember({"dfs", "logical", "dfs-product", "cnot"}));
    basis->add_option("--blocks", blocks, "Block indices")->required()->delimiter(',');
    basis->add_option("--n-blocks", n_blocks, "Logical blocks in the register");
    basis->add_option("--spectator", spectator, "State of the other blocks: a | 0L | 1L");
    basis->add_option("--out", out_path, "Report file (default: stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        Tolerances tol = Tolerances::from_environment();
        Output output(out_path, out);
        Violations violations;

        if (gate->parsed()) {
            RecipeInput in = load_recipe(recipe_source, n_blocks);
            GateRealization r = realize(in.recipe, in.n_blocks, steps);
            check_gate(r, tol, violations);
            Json input = {{"recipe", in.document}, {"n_blocks", in.n_blocks}, {"steps", steps}};
            return finish(output, envelope("gate", tol, input, to_json(r), violations), violations);
        }

        if (holonomy->parsed()) {
            RecipeInput in = load_recipe(recipe_source, n_blocks);
            HermitianOperator h = recipe_hamiltonian(in.recipe, in.n_blocks);
            BasisSet logical = recipe_logical_basis(in.recipe, in.n_blocks);
            HolonomyReport report = certify(h, logical, in.recipe.duration(), steps);
            Json result = to_json(report);
            result["restricted_propagator"] = matrix_to_json(restrict(evolve(h, in.recipe.duration()).matrix(), logical));
            violations.check_at_most("cyclicity_defect", report.cyclicity_defect, tol.cyclicity());
            violations.check_at_most("transport_defect", report.transport_defect, tol.transport());
            if (report.reconstruction_distance) {
                violations.check_at_most("reconstruction_distance", *report.reconstruction_distance,
                                         tol.reconstruction());
            } else {
                violations.fail("holonomy_preconditions", "cyclicity or transport condition failed; no reconstruction");
            }
            if (convergence && report.preconditions_met) {
                const std::vector<int> ladder = {512, 1024, 2048, 4096, 8192};
                ConvergenceStudy study = convergence_study(h, logical, in.recipe.duration(), ladder);
                Json pts = Json::array();
                for (const auto& p : study.points) {
                    pts.push_back({{"steps", p.steps},
                                   {"reconstruction_distance", p.reconstruction_distance},
                                   {"chain_distance", p.chain_distance}});
                }
                result["convergence"] = {{"points", pts}, {"chain_order", study.chain_order}};
            }
            Json input = {{"recipe", in.document}, {"n_blocks", in.n_blocks}, {"steps", steps}};
            return finish(output, envelope("holonomy", tol, input, result, violations), violations);
        }

        if (noise->parsed()) {
            RecipeInput in = load_recipe(recipe_source, n_blocks);
            Json ensemble_doc = parse_json(read_input(ensemble_source));
            NoiseEnsemble ensemble = noise_ensemble_from_json(ensemble_doc);
            std::optional<Output> csv;
            if (!csv_path.empty()) csv.emplace(csv_path, out);
            NoisyResult result = noisy_realize(in.recipe, ensemble, in.n_blocks);
            Json body = to_json(result, samples_in_report);
            if (!in.recipe.is_detuned()) {
                violations.check_at_most("fidelity_loss", 1.0 - result.min_fidelity, tol.fidelity_loss());
            }
            if (time >= 0) {
                body["baseline"] = to_json(bare_baseline(time, ensemble), samples_in_report);
                body["baseline"]["angle"] = time;
            }
            if (csv) {
                std::string text = "sample,fidelity\n";
                for (std::size_t i = 0; i < result.per_sample.size(); ++i) {
                    text += std::to_string(i) + "," + format_number(result.per_sample[i]) + "\n";
                }
                csv->write(text);
            }
            Json input = {{"recipe", in.document}, {"ensemble", ensemble_doc}, {"n_blocks", in.n_blocks}};
            return finish(output, envelope("noise", tol, input, body, violations), violations);
        }

        if (sweep->parsed()) {
            if (points < 2) throw UsageError("sweep: --points must be ≥ 2");
            if (!std::isfinite(from) || !std::isfinite(to) || from > to) {
                throw UsageError("sweep: invalid range [" + format_number(from) + ", " + format_number(to) + "]");
            }
            if (param == "pulse_area_detuning" && !(1 + from > 0)) {
                throw UsageError("sweep: detuning must keep the pulse area positive");
            }
            RecipeInput in = load_recipe(recipe_source, n_blocks);
            std::string text = "value,distance,cyclicity_defect,transport_defect\n";
            double previous = -1;
            for (int i = 0; i < points; ++i) {
                double value = from + (to - from) * static_cast<double>(i) / static_cast<double>(points - 1);
                GateRecipe r = in.recipe;
                if (param == "phase") {
                    r = in.recipe.with_phase(value);
                } else {
                    double area = nominal_pulse_area(in.recipe.kind()) * (1 + value);
                    r = GateRecipe::detuned(in.recipe.kind(), in.recipe.phase(), in.recipe.strength(),
                                            area / in.recipe.strength(), in.recipe.blocks());
                }
                GateRealization g = realize(r, in.n_blocks, 0);
                text += format_number(value) + "," + format_number(g.distance) + "," +
                        format_number(g.holonomy.cyclicity_defect) + "," + format_number(g.holonomy.transport_defect) +
                        "\n";
                if (param == "phase") {
                    std::string at = "[" + format_number(value) + "]";
                    violations.check_at_most("distance" + at, g.distance, tol.gate_distance());
                    violations.check_at_most("cyclicity_defect" + at, g.holonomy.cyclicity_defect, tol.cyclicity());
                    violations.check_at_most("transport_defect" + at, g.holonomy.transport_defect, tol.transport());
                } else if (g.distance < previous - 1e-12) {
                    violations.fail("distance_nondecreasing", "distance drops at detuning " + format_number(value));
                }
                previous = g.distance;
            }
            output.write(text);
            if (!violations.empty()) {
                err << Json{{"violations", violations.json()}}.dump(2) << "\n";
                return kExitViolations;
            }
            return kExitOk;
        }

        if (nogo->parsed()) {
            NoGoReport report = no_go_certificate(trials, seed);
            if (report.counterexamples != 0) {
                violations.fail("equivalence", std::to_string(report.counterexamples) + " counterexamples");
            }
            if (report.nontrivial_without_defect != 0) {
                violations.fail("nontrivial_transport", "nontrivial configs with zero transport defect");
            }
            ComplexMatrix sigma_x = pauli(Axis::kX);
            if ((report.witness_restricted - sigma_x).cwiseAbs().maxCoeff() != 0) {
                violations.fail("witness", "J12x = 1 does not restrict to sigma_x");
            }
            Json input = {{"trials", trials}, {"seed", seed}};
            return finish(output, envelope("nogo", tol, input, to_json(report), violations), violations);
        }

        if (verify->parsed()) {
            RecipeInput in = load_recipe(recipe_source, n_blocks);
            Json basis_doc = parse_json(read_input(basis_source));
            BasisSet b = basis_set_from_json(basis_doc);
            HermitianOperator h = recipe_hamiltonian(in.recipe, in.n_blocks);
            if (h.dim() != b.dim_ambient()) {
                throw ShapeError("verify: basis has " + std::to_string(b.n_qubits()) + " qubits, recipe register has " +
                                 std::to_string(3 * in.n_blocks));
            }
            double t = time >= 0 ? time : in.recipe.duration();
            double inv = invariance_defect(evolve(h, t).matrix(), b);
            double cyc = cyclicity_defect(h, b, t);
            double tr = transport_defect(h, b, t);
            violations.check_at_most("invariance", inv, tol.invariance());
            violations.check_at_most("cyclicity_defect", cyc, tol.cyclicity());
            violations.check_at_most("transport_defect", tr, tol.transport());
            Json result = {{"time", t},
                           {"invariance", inv},
                           {"cyclicity_defect", cyc},
                           {"transport_defect", tr},
                           {"restricted_propagator", matrix_to_json(restrict(evolve(h, t).matrix(), b))}};
            Json input = {{"recipe", in.document}, {"basis", basis_doc}, {"n_blocks", in.n_blocks}};
            return finish(output, envelope("verify", tol, input, result, violations), violations);
        }

        if (basis->parsed()) {
            std::vector<LogicalBlock> lb;
            for (int b : blocks) lb.emplace_back(b);
            int nb = n_blocks;
            for (int b : blocks) nb = std::max(nb, b);
            BlockState spectator_state = parse_block_state(spectator);
            std::optional<BasisSet> result;
            if (kind == "dfs") {
                if (lb.size() != 1) throw UsageError("basis: dfs takes one block");
                result = dfs_basis(lb[0], 3 * nb, spectator_state);
            } else if (kind == "logical") {
                result = logical_basis(lb, 3 * nb, spectator_state);
            } else if (kind == "dfs-product") {
                result = dfs_product_basis(lb, 3 * nb, spectator_state);
            } else {
                if (lb.size() != 2) throw UsageError("basis: cnot takes two blocks");
                result = cnot_invariant_basis(lb[0], lb[1], 3 * nb, spectator_state);
            }
            output.write(to_json(*result).dump(2) + "\n");
            return kExitOk;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const IndexError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const DimensionCapError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ShapeError& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternalError;
    }
    err << "internal error: no command dispatched\n";
    return kExitInternalError;
}

}  // namespace hqcdfs
