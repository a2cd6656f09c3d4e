#include <filesystem>
#include <fstream>
#include <sstream>

#include "laea/harness/experiments.hpp"
#include "laea/labeling.hpp"
#include "laea/prompt.hpp"
#include "laea/rng.hpp"
#include "laea/scaling.hpp"

namespace laea::harness {

namespace {

struct FixtureCase {
    std::string name;
    std::string text;
};

/// Canonical exemplars: one regression and one classification prompt per
/// tested dimension, built from fixed seeds so the bytes never move.
std::vector<FixtureCase> canonical_prompts() {
    std::vector<FixtureCase> cases;
    for (int dim : {2, 5, 10}) {
        const auto problem = make_problem(ProblemName::Ellipsoid, dim);
        const auto train =
            lhs_sample(8, problem, mix_seeds(1000, static_cast<std::uint64_t>(dim)));
        std::vector<double> train_f(train.size());
        for (std::size_t i = 0; i < train.size(); ++i)
            train_f[i] = evaluate(problem, train[i]);
        const auto query =
            lhs_sample(1, problem, mix_seeds(2000, static_cast<std::uint64_t>(dim)))
                .front();

        const auto transform = fit_scaling(train, &train_f);
        ScaledDataset data;
        for (const auto& row : train)
            data.features.push_back(apply_scaling(transform, row));
        for (double f : train_f) data.values.push_back(scale_value(transform, f));
        data.labels = assign_labels_topk(train_f, 0.3);
        const auto scaled_query = apply_scaling(transform, query);

        cases.push_back(
            {"reg_d" + std::to_string(dim) + ".txt",
             render_prompt(SurrogateTask::Reg, data, scaled_query).text});
        cases.push_back(
            {"cla_d" + std::to_string(dim) + ".txt",
             render_prompt(SurrogateTask::Cla, data, scaled_query).text});
    }
    return cases;
}

}  // namespace

int validate_prompt_fixtures(const std::string& fixtures_dir, bool update,
                             std::ostream& out) {
    const auto dir = std::filesystem::path(fixtures_dir) / "prompts";
    int mismatches = 0;
    for (const auto& fixture : canonical_prompts()) {
        const auto path = dir / fixture.name;
        if (update) {
            std::filesystem::create_directories(dir);
            std::ofstream stream(path, std::ios::binary);
            stream << fixture.text;
            out << "wrote " << path.string() << '\n';
            continue;
        }
        std::ifstream stream(path, std::ios::binary);
        if (!stream) {
            out << "MISSING " << path.string() << '\n';
            ++mismatches;
            continue;
        }
        std::stringstream content;
        content << stream.rdbuf();
        if (content.str() == fixture.text) {
            out << "ok      " << path.string() << '\n';
        } else {
            out << "DIFFERS " << path.string() << '\n';
            ++mismatches;
        }
    }
    return mismatches;
}

}  // namespace laea::harness
