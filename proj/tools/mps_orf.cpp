#include <atomic>
#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mpsorf/scenario.hpp"
#include "mpsorf/selfcheck.hpp"

namespace {

// computes every report first (scenario-level parallelism when asked for),
// then writes and prints serially in config order
int run_scenarios(const std::vector<mpsorf::Scenario>& scenarios,
                  const std::string& out_dir_override, bool plots,
                  const mpsorf::RunOptions& opt) {
    const std::size_t count = scenarios.size();
    std::vector<std::optional<mpsorf::DiagnosticsReport>> reports(count);
    std::vector<std::exception_ptr> errors(count);

    if (count > 1 && opt.jobs > 1) {
        const int workers = static_cast<int>(std::min<std::size_t>(opt.jobs, count));
        mpsorf::RunOptions inner = opt;
        inner.jobs = std::max(1, opt.jobs / workers);
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= count) return;
                    try {
                        reports[i] = mpsorf::run_scenario(scenarios[i], inner);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (auto& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                reports[i] = mpsorf::run_scenario(scenarios[i], opt);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    }

    for (std::size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        const mpsorf::Scenario& s = scenarios[i];
        const std::string out_dir = out_dir_override.empty() ? s.out_dir : out_dir_override;
        mpsorf::emit_outputs(*reports[i], s, out_dir, plots);
        std::printf("scenario %-20s  %2zu series, %zu warnings -> %s\n", s.id.c_str(),
                    reports[i]->series.size() + reports[i]->residual_maxima.size(),
                    reports[i]->warnings.size(), out_dir.c_str());
        for (const std::string& w : reports[i]->warnings)
            std::printf("  warning: %s\n", w.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multipoint Schur algorithm and orthogonal rational function diagnostics"};
    app.require_subcommand(1);

    std::string config_path, out_dir, scenario_name;
    bool plots = false, force = false;
    int jobs = 1;
    unsigned seed = 12345u;

    CLI::App* run = app.add_subcommand("run", "run scenarios from a JSON config file");
    run->add_option("--config", config_path, "path to the scenario config")->required();
    run->add_option("--out-dir", out_dir, "output directory (overrides the config)");
    run->add_flag("--plots", plots, "also write SVG line plots");
    run->add_option("--jobs", jobs, "worker threads for the sweep");
    run->add_flag("--force", force, "proceed when the grid cannot resolve a Poisson weight");
    run->add_option("--seed", seed, "seed for property sampling (runs stay deterministic)");

    CLI::App* check = app.add_subcommand("check", "run the full invariant suite");
    check->add_option("--seed", seed, "seed for the sampled invariants");

    CLI::App* scen = app.add_subcommand("scenario", "run a built-in scenario by name");
    scen->add_option("name", scenario_name, "one of the built-in scenario names")->required();
    scen->add_option("--out-dir", out_dir, "output directory");
    scen->add_flag("--plots", plots, "also write SVG line plots");
    scen->add_option("--jobs", jobs, "worker threads for the sweep");
    scen->add_flag("--force", force, "proceed when the grid cannot resolve a Poisson weight");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            const auto scenarios = mpsorf::load_config_file(config_path);
            return run_scenarios(scenarios, out_dir, plots, {force, jobs, seed});
        }
        if (check->parsed()) {
            const auto results = mpsorf::run_invariant_suite(seed);
            std::size_t failed = 0;
            std::printf("%-52s %-6s %13s %13s\n", "invariant", "status", "observed",
                        "bound");
            for (const auto& r : results) {
                if (!r.pass) ++failed;
                std::printf("%-52s %-6s %13.4e %13.4e\n", r.name.c_str(),
                            r.pass ? "pass" : "FAIL", r.observed, r.bound);
            }
            std::printf("%zu/%zu invariants hold\n", results.size() - failed,
                        results.size());
            return failed == 0 ? 0 : 1;
        }
        if (scen->parsed()) {
            const mpsorf::Scenario s = mpsorf::builtin_scenario(scenario_name);
            return run_scenarios({s}, out_dir.empty() ? std::string(".") : out_dir, plots,
                                 {force, jobs, seed});
        }
    } catch (const mpsorf::ResolutionRefused& e) {
        std::fprintf(stderr, "refused: %s\n", e.what());
        return 2;
    } catch (const mpsorf::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
