#include "laea/ga_collect.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "laea/csv.hpp"
#include "laea/errors.hpp"
#include "laea/rng.hpp"

namespace laea {

std::vector<GaCollectRecord> ga_collect_run(const BenchmarkProblem& problem,
                                            const GaCollectConfig& cfg) {
    if (cfg.record_generations.empty())
        throw InvalidInput("ga_collect_run: no generations to record");
    const int last_generation = *std::max_element(
        cfg.record_generations.begin(), cfg.record_generations.end());
    const int n = cfg.population_size;

    std::vector<GaCollectRecord> records;
    records.reserve(static_cast<std::size_t>(cfg.repeats) *
                    cfg.record_generations.size());

    for (int run = 0; run < cfg.repeats; ++run) {
        const std::uint64_t run_seed = cfg.master_seed + run;
        // Separate streams per problem and dimension so shared seeds do not
        // reuse the same normalized sample pattern everywhere.
        Rng rng(mix_seeds(run_seed, hash_string(to_string(problem.name)) ^
                                        static_cast<std::uint64_t>(problem.dim)));

        Population population;
        population.reserve(n);
        for (auto& point : lhs_sample(n, problem, rng.next_u64()))
            population.emplace_back(point, evaluate(problem, point));

        for (int gen = 1; gen <= last_generation; ++gen) {
            Population offspring = ga_step(population, problem, cfg.ga, rng);
            for (auto& child : offspring) {
                child.objective = evaluate(problem, child.x);
                child.evaluated = true;
            }
            if (std::find(cfg.record_generations.begin(),
                          cfg.record_generations.end(),
                          gen) != cfg.record_generations.end())
                records.push_back({run, gen, population, offspring});

            // (mu + lambda) truncation.
            Population merged = population;
            merged.insert(merged.end(), offspring.begin(), offspring.end());
            std::stable_sort(merged.begin(), merged.end(),
                             [](const auto& a, const auto& b) {
                                 return objective_of(a) < objective_of(b);
                             });
            merged.resize(n);
            population = std::move(merged);
        }
    }
    return records;
}

void write_ga_dataset_csv(const std::vector<GaCollectRecord>& records, int dim,
                          std::ostream& out) {
    std::vector<std::string> header = {"run", "gen", "role"};
    for (int d = 1; d <= dim; ++d) header.push_back("x" + std::to_string(d));
    header.push_back("f");
    write_csv_row(out, header);

    auto dump = [&](const GaCollectRecord& record, const Population& pop,
                    const char* role) {
        for (const auto& s : pop) {
            std::vector<std::string> row = {std::to_string(record.run),
                                            std::to_string(record.generation),
                                            role};
            for (double v : s.x) row.push_back(format_double(v));
            row.push_back(format_double(objective_of(s)));
            write_csv_row(out, row);
        }
    };
    for (const auto& record : records) {
        dump(record, record.parents, "parent");
        dump(record, record.offspring, "offspring");
    }
}

std::vector<GaCollectRecord> read_ga_dataset_csv(std::istream& in, int dim) {
    std::string line;
    if (!std::getline(in, line))
        throw InvalidState("ga dataset: empty file");
    const auto header = split_csv_line(line);
    if (static_cast<int>(header.size()) != dim + 4)
        throw InvalidState("ga dataset: header does not match dimension");

    std::map<std::pair<int, int>, GaCollectRecord> cells;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto fields = split_csv_line(line);
        if (static_cast<int>(fields.size()) != dim + 4)
            throw InvalidState("ga dataset: malformed row");
        const int run = std::stoi(fields[0]);
        const int gen = std::stoi(fields[1]);
        DecisionVector x(dim);
        for (int d = 0; d < dim; ++d) x[d] = std::stod(fields[3 + d]);
        const double f = std::stod(fields[3 + dim]);

        auto& cell = cells[{run, gen}];
        cell.run = run;
        cell.generation = gen;
        if (fields[2] == "parent")
            cell.parents.emplace_back(std::move(x), f);
        else if (fields[2] == "offspring")
            cell.offspring.emplace_back(std::move(x), f);
        else
            throw InvalidState("ga dataset: unknown role " + fields[2]);
    }

    std::vector<GaCollectRecord> records;
    records.reserve(cells.size());
    for (auto& [key, cell] : cells) records.push_back(std::move(cell));
    return records;
}

}  // namespace laea
