#include "laea/harness/config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "laea/errors.hpp"
#include "laea/rng.hpp"

namespace laea::harness {

namespace {

const std::vector<std::string> kAllProblems = {"ellipsoid", "rosenbrock",
                                               "ackley", "griewank"};

template <typename T>
T get_or(const nlohmann::json& doc, const char* key, T fallback) {
    if (auto it = doc.find(key); it != doc.end()) return it->get<T>();
    return fallback;
}

std::vector<std::uint64_t> parse_seeds(const nlohmann::json& doc) {
    const bool has_list = doc.contains("seeds");
    const bool has_master = doc.contains("master_seed");
    if (has_list && has_master)
        throw ConfigError("give either 'seeds' or 'master_seed'+'runs', not both");
    if (has_list) {
        auto seeds = doc.at("seeds").get<std::vector<std::uint64_t>>();
        if (seeds.empty()) throw ConfigError("'seeds' must be nonempty");
        return seeds;
    }
    if (has_master) {
        const auto master = doc.at("master_seed").get<std::uint64_t>();
        const auto runs = get_or<int>(doc, "runs", 30);
        if (runs < 1) throw ConfigError("'runs' must be positive");
        std::vector<std::uint64_t> seeds(runs);
        for (int i = 0; i < runs; ++i) seeds[i] = master + i;  // run i = master+i
        return seeds;
    }
    throw ConfigError("config needs 'seeds' or 'master_seed'");
}

}  // namespace

std::string to_string(PredictorSpec::Type type) {
    switch (type) {
        case PredictorSpec::Type::Oracle: return "oracle";
        case PredictorSpec::Type::Llm: return "llm";
        case PredictorSpec::Type::Echo: return "echo";
    }
    return "unknown";
}

PredictorSpec parse_predictor_spec(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("type"))
        throw ConfigError("predictor spec needs a 'type' field");
    PredictorSpec spec;
    const auto type = doc.at("type").get<std::string>();
    if (type == "oracle") {
        spec.type = PredictorSpec::Type::Oracle;
        const auto mode = get_or<std::string>(doc, "mode", "perfect");
        if (mode == "perfect") {
            spec.oracle.mode = OracleSpec::Mode::Perfect;
        } else if (mode == "noisy") {
            spec.oracle.mode = OracleSpec::Mode::Noisy;
            spec.oracle.sigma = get_or<double>(doc, "sigma", 0.1);
        } else if (mode == "random") {
            spec.oracle.mode = OracleSpec::Mode::Random;
        } else {
            throw ConfigError("unknown oracle mode: " + mode);
        }
        spec.oracle.seed = get_or<std::uint64_t>(doc, "seed", 0);
    } else if (type == "llm") {
        spec.type = PredictorSpec::Type::Llm;
        if (!doc.contains("endpoint") || !doc.contains("model"))
            throw ConfigError("llm predictor needs 'endpoint' and 'model'");
        spec.backend.endpoint = doc.at("endpoint").get<std::string>();
        spec.backend.model = doc.at("model").get<std::string>();
        spec.backend.temperature = get_or<double>(doc, "temperature", 0.0);
        spec.backend.timeout_s = get_or<double>(doc, "timeout_s", 60.0);
        spec.backend.max_retries = get_or<int>(doc, "max_retries", 3);
        spec.backend.parallelism = get_or<int>(doc, "parallelism", 1);
        spec.backend.api_key_env =
            get_or<std::string>(doc, "api_key_env", "OPENAI_API_KEY");
        spec.protocol.max_retries = spec.backend.max_retries;
        spec.protocol.parallelism = spec.backend.parallelism;
    } else if (type == "echo") {
        spec.type = PredictorSpec::Type::Echo;
        spec.echo_reply =
            get_or<std::string>(doc, "reply", "{\"Value\": \"0.5\"}");
        spec.echo_latency_s = get_or<double>(doc, "latency_ms", 0.0) / 1000.0;
        spec.protocol.parallelism = get_or<int>(doc, "parallelism", 1);
    } else {
        throw ConfigError("unknown predictor type: " + type);
    }
    spec.protocol.feature_precision = get_or<int>(doc, "feature_precision", 3);
    spec.protocol.value_precision = get_or<int>(doc, "value_precision", 5);
    return spec;
}

ExperimentConfig parse_experiment_config(const nlohmann::json& doc) {
    ExperimentConfig cfg;
    cfg.raw = doc;
    cfg.schema = get_or<int>(doc, "schema", 0);
    if (cfg.schema != 1) throw ConfigError("unsupported config schema");
    if (!doc.contains("experiment"))
        throw ConfigError("config needs an 'experiment' field");
    cfg.experiment = doc.at("experiment").get<std::string>();

    cfg.problems =
        get_or<std::vector<std::string>>(doc, "problems", kAllProblems);
    for (const auto& name : cfg.problems) problem_from_string(name);  // validate
    cfg.dims = get_or<std::vector<int>>(doc, "dims", {5, 10});
    for (int dim : cfg.dims)
        if (dim < 1) throw ConfigError("dims must be positive");
    cfg.seeds = parse_seeds(doc);
    cfg.budget = get_or<int>(doc, "budget", 300);
    cfg.population_size = get_or<int>(doc, "population_size", 50);
    cfg.window_size = get_or<int>(doc, "window_size", 50);
    cfg.label_ratio = get_or<double>(doc, "label_ratio", 0.3);
    cfg.train_size = get_or<int>(doc, "train_size", 50);
    cfg.grid_points = get_or<int>(doc, "grid_points", 20);
    cfg.record_generations =
        get_or<std::vector<int>>(doc, "record_generations", {2, 22, 42});
    cfg.dataset_dir = get_or<std::string>(doc, "dataset_dir", "");
    cfg.out_dir = get_or<std::string>(doc, "out", "results/" + cfg.experiment);
    cfg.emit_runs = get_or<bool>(doc, "emit_runs", false);
    cfg.jobs = get_or<int>(doc, "jobs", 1);
    if (cfg.jobs < 1) throw ConfigError("jobs must be positive");

    if (doc.contains("predictor"))
        cfg.predictor = parse_predictor_spec(doc.at("predictor"));
    if (doc.contains("arms")) {
        for (const auto& arm_doc : doc.at("arms")) {
            ArmSpec arm;
            if (!arm_doc.contains("name"))
                throw ConfigError("every arm needs a 'name'");
            arm.name = arm_doc.at("name").get<std::string>();
            if (arm.name.find(',') != std::string::npos)
                throw ConfigError("arm names must not contain commas");
            arm.algorithm = get_or<std::string>(arm_doc, "algorithm", "");
            if (arm_doc.contains("predictor"))
                arm.predictor = parse_predictor_spec(arm_doc.at("predictor"));
            cfg.arms.push_back(std::move(arm));
        }
        for (std::size_t i = 0; i < cfg.arms.size(); ++i)
            for (std::size_t j = i + 1; j < cfg.arms.size(); ++j)
                if (cfg.arms[i].name == cfg.arms[j].name)
                    throw ConfigError("duplicate arm name: " + cfg.arms[i].name);
    }
    cfg.reference_arm = get_or<std::string>(doc, "reference", "");
    if (!cfg.arms.empty()) {
        if (cfg.reference_arm.empty()) cfg.reference_arm = cfg.arms.front().name;
        const bool found =
            std::any_of(cfg.arms.begin(), cfg.arms.end(), [&](const auto& a) {
                return a.name == cfg.reference_arm;
            });
        if (!found)
            throw ConfigError("reference arm not found: " + cfg.reference_arm);
    }
    return cfg;
}

ExperimentConfig load_experiment_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded())
        throw ConfigError("config file is not valid JSON: " + path);
    return parse_experiment_config(doc);
}

bool network_forbidden() {
    const char* v = std::getenv("NO_NETWORK");
    return v != nullptr && std::string(v) == "1";
}

BuiltPredictor make_predictor(const PredictorSpec& spec,
                              const BenchmarkProblem& problem,
                              std::uint64_t run_seed) {
    BuiltPredictor built;
    switch (spec.type) {
        case PredictorSpec::Type::Oracle: {
            OracleSpec oracle = spec.oracle;
            oracle.seed = mix_seeds(oracle.seed, run_seed);
            built.predictor =
                std::make_unique<OraclePredictor>(oracle, problem);
            break;
        }
        case PredictorSpec::Type::Llm:
        case PredictorSpec::Type::Echo: {
            built.completer = make_completer(spec);
            built.predictor =
                std::make_unique<LlmPredictor>(built.completer, spec.protocol);
            break;
        }
    }
    return built;
}

std::shared_ptr<TextCompleter> make_completer(const PredictorSpec& spec) {
    switch (spec.type) {
        case PredictorSpec::Type::Llm:
            if (network_forbidden())
                throw ConfigError(
                    "NO_NETWORK=1 forbids llm predictors; use an oracle or "
                    "echo predictor");
            return std::make_shared<HttpBackend>(spec.backend);
        case PredictorSpec::Type::Echo:
            return std::make_shared<EchoBackend>(spec.echo_reply,
                                                 spec.echo_latency_s);
        case PredictorSpec::Type::Oracle:
            throw ConfigError("oracle predictors have no text backend");
    }
    throw ConfigError("unknown predictor type");
}

}  // namespace laea::harness
