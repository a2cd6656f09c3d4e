#include "laea/errors.hpp"
#include "laea/harness/experiments.hpp"

namespace laea::harness {

namespace detail {
void write_manifest(const ExperimentConfig& cfg, ExperimentOutcome& outcome);
}

ExperimentOutcome run_experiment(const ExperimentConfig& cfg) {
    ExperimentOutcome outcome;
    if (cfg.experiment == "case2d") {
        outcome = run_case2d(cfg);
    } else if (cfg.experiment == "select-acc") {
        outcome = run_select_acc(cfg);
    } else if (cfg.experiment == "compare") {
        outcome = run_compare(cfg);
    } else if (cfg.experiment == "preselect") {
        outcome = run_preselect(cfg);
    } else if (cfg.experiment == "timing") {
        outcome = run_timing(cfg);
    } else {
        throw ConfigError("unknown experiment: " + cfg.experiment);
    }
    detail::write_manifest(cfg, outcome);
    return outcome;
}

}  // namespace laea::harness
