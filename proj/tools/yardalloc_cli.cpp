// Command-line front end: generate instances, solve them with the GA or the
// stacking baseline, validate plans, run benchmark sweeps, summarize CSVs.
// Exit codes: 0 success, 1 infeasible/unsatisfiable, 2 usage/parse/validation.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "yardalloc/yardalloc.hpp"

namespace ya = yardalloc;

namespace {

struct GenOpts {
    ya::GenSpec spec;
    int preset = 0;
    std::string out;
};

struct SolveOpts {
    std::string instance_path;
    std::string plan_path;
    ya::GAConfig ga;
    std::string mode = "blocking";
    std::uint64_t seed = 0;
};

struct BaselineOpts {
    std::string instance_path;
    std::string plan_path;
};

struct ValidateOpts {
    std::string instance_path;
    std::string plan_path;
};

struct BenchOpts {
    std::string suite;
    int reps = 5;
    std::uint64_t seed = 0;
    std::string out;
};

struct SummarizeOpts {
    std::string in;
    std::string out;
};

std::string fmt(double v) { return ya::detail::format_double(v); }

void write_text(const std::string& path, const std::string& what,
                const std::function<void(std::ostream&)>& emit) {
    if (path.empty()) {
        emit(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out) throw ya::io_error("cannot open " + what + " file for writing: " + path);
    emit(out);
    if (!out) throw ya::io_error("failed writing " + what + " file: " + path);
}

int run_gen(const GenOpts& o) {
    ya::Instance inst = o.preset > 0
                            ? ya::benchmark_preset(o.preset, o.spec.date_min, o.spec.date_max,
                                                   o.spec.seed)
                            : ya::generate_instance(o.spec);
    ya::save_instance(inst, o.out);
    std::cout << "wrote " << o.out << " (" << inst.containers.size() << " containers, "
              << inst.config.total_blocks() << " blocks)\n";
    return 0;
}

int run_solve(const SolveOpts& o) {
    ya::Instance inst = ya::load_instance(o.instance_path);
    ya::GAConfig cfg = o.ga;
    cfg.mode = ya::fitness_mode_from_string(o.mode);
    auto t0 = std::chrono::steady_clock::now();
    ya::RunResult r = ya::run_ga(inst, cfg, o.seed);
    std::int64_t ms = ya::detail::elapsed_ms_since(t0);
    ya::save_plan(r.best, o.plan_path);
    std::cout << "initial fitness: " << fmt(r.fitness_initial) << '\n'
              << "final fitness: " << fmt(r.fitness_final) << '\n'
              << "generations: " << r.generations << '\n'
              << "elapsed ms: " << ms << '\n'
              << "plan: " << o.plan_path << '\n';
    return 0;
}

int run_baseline(const BaselineOpts& o) {
    ya::Instance inst = ya::load_instance(o.instance_path);
    ya::Layout layout = ya::lifo_allocate(inst);
    ya::save_plan(layout, o.plan_path);
    std::cout << "fitness (blocking): "
              << fmt(ya::layout_fitness(layout, inst, ya::FitnessMode::blocking)) << '\n'
              << "fitness (above): "
              << fmt(ya::layout_fitness(layout, inst, ya::FitnessMode::above)) << '\n'
              << "plan: " << o.plan_path << '\n';
    return 0;
}

int run_validate(const ValidateOpts& o) {
    ya::Instance inst = ya::load_instance(o.instance_path);
    ya::Layout layout = ya::load_plan(o.plan_path, inst);
    std::vector<ya::Violation> vs = ya::validate_layout(layout, inst);
    for (const ya::Violation& v : vs)
        std::cout << "violation: " << ya::constraint_name(v.constraint) << " ("
                  << static_cast<int>(v.constraint) << ") at " << ya::to_string(v.coord) << ": "
                  << v.detail << '\n';
    if (vs.empty()) {
        std::cout << "no violations\n";
        return 0;
    }
    std::cout << vs.size() << " violation" << (vs.size() == 1 ? "" : "s") << '\n';
    return 1;
}

int run_bench(const BenchOpts& o) {
    ya::BenchReport report = ya::run_bench(ya::suite_from_string(o.suite), o.reps, o.seed);
    write_text(o.out, "CSV", [&](std::ostream& os) { ya::write_csv(report, os); });
    if (!o.out.empty())
        std::cout << "wrote " << o.out << " (" << report.rows.size() << " rows)\n";
    return 0;
}

int run_summarize(const SummarizeOpts& o) {
    std::ifstream in(o.in);
    if (!in) throw ya::io_error("cannot open CSV file: " + o.in);
    std::vector<ya::SummaryRow> rows = ya::summarize_csv(in);
    write_text(o.out, "summary", [&](std::ostream& os) { ya::write_summary_csv(rows, os); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"container yard storage allocation: GA solver, stacking baseline, benchmarks"};
    app.require_subcommand(1);

    GenOpts gen;
    // Yard defaults for hand-rolled instances mirror the benchmark cases.
    gen.spec.config = ya::YardConfig{3, 3, 3, 2, 3};
    CLI::App* cmd_gen = app.add_subcommand("gen", "generate a random instance file");
    cmd_gen->add_option("-o,--out", gen.out, "instance file to write")->required();
    auto* preset_opt =
        cmd_gen->add_option("--preset", gen.preset, "benchmark case 1..5 (overrides counts/yard)")
            ->check(CLI::Range(1, 5));
    std::vector<CLI::Option*> shape_opts = {
        cmd_gen->add_option("--slots-x", gen.spec.config.slots_x, "cells along x per block")
            ->capture_default_str(),
        cmd_gen->add_option("--slots-y", gen.spec.config.slots_y, "cells along y per block")
            ->capture_default_str(),
        cmd_gen->add_option("--tiers", gen.spec.config.tiers, "stacking height")
            ->capture_default_str(),
        cmd_gen->add_option("--refrig-blocks", gen.spec.config.refrig_blocks, "powered blocks")
            ->capture_default_str(),
        cmd_gen->add_option("--regular-blocks", gen.spec.config.regular_blocks, "regular blocks")
            ->capture_default_str(),
        cmd_gen->add_option("--dry", gen.spec.counts[0], "dry container count"),
        cmd_gen->add_option("--empty", gen.spec.counts[1], "empty container count"),
        cmd_gen->add_option("--open-top", gen.spec.counts[2], "open-top container count"),
        cmd_gen->add_option("--open-side", gen.spec.counts[3], "open-side container count"),
        cmd_gen->add_option("--tank", gen.spec.counts[4], "tank container count"),
        cmd_gen->add_option("--reefer", gen.spec.counts[5], "reefer container count"),
    };
    for (CLI::Option* opt : shape_opts) preset_opt->excludes(opt);
    cmd_gen->add_option("--date-min", gen.spec.date_min, "earliest delivery date")
        ->capture_default_str();
    cmd_gen->add_option("--date-max", gen.spec.date_max, "latest delivery date")
        ->capture_default_str();
    cmd_gen->add_option("--seed", gen.spec.seed, "generation seed")->capture_default_str();

    SolveOpts solve;
    CLI::App* cmd_solve = app.add_subcommand("solve", "optimize an instance with the GA");
    cmd_solve->add_option("instance", solve.instance_path, "instance file")->required();
    cmd_solve->add_option("-o,--out", solve.plan_path, "plan file to write")->required();
    cmd_solve->add_option("--pop-size", solve.ga.pop_size, "population size")
        ->capture_default_str();
    cmd_solve->add_option("--stall", solve.ga.stall_window, "generations without improvement before stopping")
        ->capture_default_str();
    cmd_solve->add_option("--p-cross", solve.ga.p_cross, "crossover probability")
        ->capture_default_str();
    cmd_solve->add_option("--p-mut", solve.ga.p_mut, "mutation probability")
        ->capture_default_str();
    cmd_solve->add_option("--mode", solve.mode, "fitness mode: blocking or above")
        ->capture_default_str();
    cmd_solve->add_option("--seed", solve.seed, "run seed")->capture_default_str();
    cmd_solve->add_option("--max-generations", solve.ga.max_generations,
                          "hard generation cap (0 = derived)")
        ->capture_default_str();

    BaselineOpts baseline;
    CLI::App* cmd_baseline = app.add_subcommand("baseline", "run the deterministic stacking baseline");
    cmd_baseline->add_option("instance", baseline.instance_path, "instance file")->required();
    cmd_baseline->add_option("-o,--out", baseline.plan_path, "plan file to write")->required();

    ValidateOpts validate;
    CLI::App* cmd_validate = app.add_subcommand("validate", "check a plan against an instance");
    cmd_validate->add_option("instance", validate.instance_path, "instance file")->required();
    cmd_validate->add_option("plan", validate.plan_path, "plan file")->required();

    BenchOpts bench;
    CLI::App* cmd_bench = app.add_subcommand("bench", "run a benchmark sweep, emit CSV");
    cmd_bench
        ->add_option("--suite", bench.suite,
                     "type-influence | stall-influence | popsize-influence | lifo-comparison")
        ->required();
    cmd_bench->add_option("--reps", bench.reps, "GA repetitions per sweep row")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    cmd_bench->add_option("--seed", bench.seed, "master seed")->capture_default_str();
    cmd_bench->add_option("-o,--out", bench.out, "CSV file to write (default: stdout)");

    SummarizeOpts summarize;
    CLI::App* cmd_summarize = app.add_subcommand("summarize", "aggregate a bench CSV");
    cmd_summarize->add_option("csv", summarize.in, "bench CSV file")->required();
    cmd_summarize->add_option("-o,--out", summarize.out, "summary file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*cmd_gen) return run_gen(gen);
        if (*cmd_solve) return run_solve(solve);
        if (*cmd_baseline) return run_baseline(baseline);
        if (*cmd_validate) return run_validate(validate);
        if (*cmd_bench) return run_bench(bench);
        if (*cmd_summarize) return run_summarize(summarize);
    } catch (const ya::generation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ya::allocation_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ya::infeasible_layout_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
