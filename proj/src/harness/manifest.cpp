#include <fstream>

#include "laea/harness/experiments.hpp"
#include "laea/version.hpp"

#include "io_util.hpp"

namespace laea::harness {

namespace detail {

void write_manifest(const ExperimentConfig& cfg, ExperimentOutcome& outcome) {
    OutputDir out(outcome.out_dir);
    nlohmann::json manifest = {
        {"schema", 1},
        {"experiment", cfg.experiment},
        {"revision", kGitDescribe},
        {"jobs", cfg.jobs},
        {"prediction_failures", outcome.prediction_failures},
        {"files", outcome.files},
        {"config", cfg.raw},
    };
    auto stream = out.open("manifest.json");
    stream << manifest.dump(2) << '\n';
    outcome.files.push_back("manifest.json");
}

}  // namespace detail

}  // namespace laea::harness
