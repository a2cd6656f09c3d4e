#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "laea/backends.hpp"
#include "laea/predictor.hpp"
#include "laea/problems.hpp"

namespace laea::harness {

struct PredictorSpec {
    enum class Type { Oracle, Llm, Echo };
    Type type = Type::Oracle;
    OracleSpec oracle;
    BackendConfig backend;
    ProtocolConfig protocol;
    std::string echo_reply = "{\"Value\": \"0.5\"}";
    double echo_latency_s = 0.0;
};

struct ArmSpec {
    std::string name;
    std::string algorithm;  // compare: laea | laea-reg; preselect: random | reg | cla
    PredictorSpec predictor;
};

/// One experiment = one JSON document (schema 1). Seeds are either listed
/// explicitly or fanned out as master_seed + i so partial reruns align.
struct ExperimentConfig {
    int schema = 1;
    std::string experiment;  // case2d | select-acc | compare | preselect | timing
    std::vector<std::string> problems;
    std::vector<int> dims;
    std::vector<std::uint64_t> seeds;
    int budget = 300;
    int population_size = 50;
    int window_size = 50;
    double label_ratio = 0.3;
    int train_size = 50;   // case2d / timing
    int grid_points = 20;  // case2d
    std::vector<int> record_generations = {2, 22, 42};  // select-acc
    std::string dataset_dir;                            // select-acc, optional
    PredictorSpec predictor;     // single-predictor experiments
    std::vector<ArmSpec> arms;   // compare / preselect
    std::string reference_arm;   // defaults to the first arm
    std::string out_dir;
    bool emit_runs = false;
    int jobs = 1;
    nlohmann::json raw;  // verbatim config, echoed into the manifest
};

ExperimentConfig parse_experiment_config(const nlohmann::json& doc);
ExperimentConfig load_experiment_config(const std::string& path);

PredictorSpec parse_predictor_spec(const nlohmann::json& doc);

/// True when NO_NETWORK=1 is set; llm predictors are then rejected.
bool network_forbidden();

struct BuiltPredictor {
    std::unique_ptr<Predictor> predictor;
    std::shared_ptr<TextCompleter> completer;  // set for llm/echo predictors
};

/// Per-cell predictor. `run_seed` decorrelates oracle streams across runs
/// (the oracle seed becomes mix(spec seed, run seed)).
BuiltPredictor make_predictor(const PredictorSpec& spec,
                              const BenchmarkProblem& problem,
                              std::uint64_t run_seed);

/// Bare text backend for the timing study (llm or echo; oracle has none).
std::shared_ptr<TextCompleter> make_completer(const PredictorSpec& spec);

std::string to_string(PredictorSpec::Type type);

}  // namespace laea::harness
