#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "laea/ga.hpp"
#include "laea/problems.hpp"
#include "laea/solution.hpp"

namespace laea {

struct GaCollectConfig {
    int population_size = 50;
    std::vector<int> record_generations = {2, 22, 42};
    int repeats = 30;
    std::uint64_t master_seed = 0;  // run r uses master_seed + r
    GaConfig ga;
};

/// One recorded snapshot: the parent population of generation `generation`
/// and the offspring it produced, both fully evaluated.
struct GaCollectRecord {
    int run = 0;
    int generation = 0;
    Population parents;
    Population offspring;
};

/// Plain elitist GA runs used as a data source: parents and offspring are
/// dumped at the recorded generations, across independent repeats.
std::vector<GaCollectRecord> ga_collect_run(const BenchmarkProblem& problem,
                                            const GaCollectConfig& cfg);

/// CSV schema: run,gen,role,x1..xn,f with role in {parent, offspring}.
void write_ga_dataset_csv(const std::vector<GaCollectRecord>& records, int dim,
                          std::ostream& out);
std::vector<GaCollectRecord> read_ga_dataset_csv(std::istream& in, int dim);

}  // namespace laea
