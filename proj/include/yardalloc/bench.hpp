#pragma once

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "yardalloc/core.hpp"
#include "yardalloc/fitness.hpp"
#include "yardalloc/ga.hpp"
#include "yardalloc/io.hpp"
#include "yardalloc/lifo.hpp"

namespace yardalloc {

/// The four parameter sweeps the bench command knows how to run.
enum class BenchSuite { type_influence, stall_influence, popsize_influence, lifo_comparison };

inline const char* to_string(BenchSuite s) {
    switch (s) {
        case BenchSuite::type_influence: return "type-influence";
        case BenchSuite::stall_influence: return "stall-influence";
        case BenchSuite::popsize_influence: return "popsize-influence";
        case BenchSuite::lifo_comparison: return "lifo-comparison";
    }
    return "?";
}

inline BenchSuite suite_from_string(const std::string& s) {
    if (s == "type-influence") return BenchSuite::type_influence;
    if (s == "stall-influence") return BenchSuite::stall_influence;
    if (s == "popsize-influence") return BenchSuite::popsize_influence;
    if (s == "lifo-comparison") return BenchSuite::lifo_comparison;
    throw parse_error("unknown bench suite: " + s);
}

/// One CSV data row. rep >= 0 rows hold a GA run; rep == -1 rows hold the
/// deterministic baseline of the same instance (GA fields stay empty).
struct BenchRow {
    std::string suite;
    std::string instance;
    std::uint64_t seed = 0;
    int rep = 0;
    bool has_ga = true;
    double fitness_initial = 0.0;
    double fitness_final = 0.0;
    std::int64_t generations = 0;
    std::int64_t elapsed_ms = 0;
    bool has_baseline = false;
    double baseline_fitness = 0.0;
};

struct BenchReport {
    std::vector<std::string> metadata;  // emitted as leading "# " comment lines
    std::vector<BenchRow> rows;
};

inline constexpr const char* kBenchCsvHeader =
    "suite,instance,seed,rep,fitness_initial,fitness_final,generations,elapsed_ms,"
    "baseline_fitness";

namespace detail {

inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

inline std::string describe(const YardConfig& c) {
    return std::to_string(c.slots_x) + "x" + std::to_string(c.slots_y) + "x" +
           std::to_string(c.tiers) + " cells, " + std::to_string(c.refrig_blocks) +
           " powered + " + std::to_string(c.regular_blocks) + " regular blocks";
}

inline std::string describe(const GAConfig& c) {
    return "pop " + std::to_string(c.pop_size) + ", stall " + std::to_string(c.stall_window) +
           ", p_cross " + format_double(c.p_cross) + ", p_mut " + format_double(c.p_mut) +
           ", mode " + std::string(to_string(c.mode));
}

/// Instance for the type sweep: the first n_types entries of the fixed
/// per-type counts (10 dry, 10 empty, 8 open-top, 8 open-side, 15 tank,
/// 10 reefer) on a 3x3x3 yard with four powered and four regular blocks.
inline GenSpec type_sweep_spec(int n_types, std::uint64_t seed) {
    if (n_types < 2 || n_types > kTypeCount)
        throw config_error("type sweep needs 2..6 types, got " + std::to_string(n_types));
    static constexpr std::int64_t kCounts[kTypeCount] = {10, 10, 8, 8, 15, 10};
    GenSpec spec;
    spec.config = YardConfig{3, 3, 3, 4, 4};
    spec.seed = seed;
    for (int code = 1; code <= n_types; ++code)
        spec.counts[static_cast<std::size_t>(code) - 1] = kCounts[code - 1];
    return spec;
}

/// Four-type mix reused by the stall sweep.
inline GenSpec stall_sweep_spec(std::uint64_t seed) {
    GenSpec spec = type_sweep_spec(4, seed);
    spec.config = YardConfig{3, 3, 3, 3, 3};
    return spec;
}

/// Mix for the population-size sweep: 20 dry, 15 open-side, 10 tank,
/// 30 reefer. Three powered blocks so the reefers fit.
inline GenSpec popsize_sweep_spec(std::uint64_t seed) {
    GenSpec spec;
    spec.config = YardConfig{3, 3, 3, 3, 3};
    spec.seed = seed;
    spec.count(ContainerType::dry) = 20;
    spec.count(ContainerType::open_side) = 15;
    spec.count(ContainerType::tank) = 10;
    spec.count(ContainerType::reefer) = 30;
    return spec;
}

struct BenchJob {
    std::string label;
    Instance instance;
    GAConfig ga;
};

inline std::int64_t elapsed_ms_since(std::chrono::steady_clock::time_point t0) {
    auto dt = std::chrono::steady_clock::now() - t0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
}

}  // namespace detail

/// Runs one suite: `reps` GA repetitions per job (run seed = master_seed +
/// rep), plus one baseline row per instance for the baseline-comparison
/// suite. reps == 0 produces metadata and header only. Rows come out in
/// deterministic order: GA rows grouped per job, baseline rows last.
inline BenchReport run_bench(BenchSuite suite, int reps, std::uint64_t master_seed) {
    if (reps < 0) throw config_error("repetitions must be >= 0");

    std::vector<detail::BenchJob> jobs;
    GAConfig ga;
    ga.mode = FitnessMode::blocking;

    switch (suite) {
        case BenchSuite::type_influence: {
            ga.pop_size = 50;
            ga.stall_window = 20;
            for (int nt = 2; nt <= kTypeCount; ++nt)
                jobs.push_back({"types" + std::to_string(nt),
                                generate_instance(detail::type_sweep_spec(nt, master_seed)), ga});
            break;
        }
        case BenchSuite::stall_influence: {
            ga.pop_size = 30;
            Instance inst = generate_instance(detail::stall_sweep_spec(master_seed));
            for (int stall : {25, 50, 100, 150}) {
                ga.stall_window = stall;
                jobs.push_back({"stall" + std::to_string(stall), inst, ga});
            }
            break;
        }
        case BenchSuite::popsize_influence: {
            ga.stall_window = 50;
            Instance inst = generate_instance(detail::popsize_sweep_spec(master_seed));
            for (int pop : {20, 40, 50, 70, 100}) {
                ga.pop_size = pop;
                jobs.push_back({"pop" + std::to_string(pop), inst, ga});
            }
            break;
        }
        case BenchSuite::lifo_comparison: {
            ga.pop_size = 30;
            ga.stall_window = 20;
            for (int n = 1; n <= 5; ++n)
                jobs.push_back({"case" + std::to_string(n),
                                benchmark_preset(n, 1, 30, master_seed), ga});
            break;
        }
    }

    BenchReport report;
    report.metadata.push_back(std::string("suite: ") + to_string(suite));
    report.metadata.push_back("master seed: " + std::to_string(master_seed) +
                              ", repetitions: " + std::to_string(reps) +
                              " (run seed = master seed + rep)");
    report.metadata.push_back("yard: " + detail::describe(jobs.front().instance.config));
    report.metadata.push_back("delivery dates: uniform integers in [1, 30]");
    if (suite == BenchSuite::stall_influence)
        report.metadata.push_back(
            "ga: pop 30; stall varies per row; containers reuse the four-type mix "
            "(10 dry, 10 empty, 8 open-top, 8 open-side)");
    else if (suite == BenchSuite::popsize_influence)
        report.metadata.push_back(
            "ga: stall 50; population size varies per row; yard block counts are a "
            "documented choice (three powered blocks hold the 30 reefers)");
    else
        report.metadata.push_back("ga: " + detail::describe(ga));

    if (reps == 0) return report;

    for (const detail::BenchJob& job : jobs) {
        bool has_baseline = false;
        double baseline = 0.0;
        try {
            Layout b = lifo_allocate(job.instance);
            baseline = layout_fitness(b, job.instance, FitnessMode::blocking);
            has_baseline = true;
        } catch (const allocation_error&) {
            // baseline column stays empty for this instance
        }
        for (int rep = 0; rep < reps; ++rep) {
            std::uint64_t seed = master_seed + static_cast<std::uint64_t>(rep);
            auto t0 = std::chrono::steady_clock::now();
            RunResult r = run_ga(job.instance, job.ga, seed);
            BenchRow row;
            row.suite = to_string(suite);
            row.instance = job.label;
            row.seed = seed;
            row.rep = rep;
            row.fitness_initial = r.fitness_initial;
            row.fitness_final = r.fitness_final;
            row.generations = r.generations;
            row.elapsed_ms = detail::elapsed_ms_since(t0);
            row.has_baseline = has_baseline;
            row.baseline_fitness = baseline;
            report.rows.push_back(std::move(row));
        }
    }

    if (suite == BenchSuite::lifo_comparison) {
        for (const detail::BenchJob& job : jobs) {
            BenchRow row;
            row.suite = to_string(suite);
            row.instance = job.label;
            row.seed = master_seed;
            row.rep = -1;
            row.has_ga = false;
            auto t0 = std::chrono::steady_clock::now();
            try {
                Layout b = lifo_allocate(job.instance);
                row.baseline_fitness = layout_fitness(b, job.instance, FitnessMode::blocking);
                row.has_baseline = true;
            } catch (const allocation_error&) {
                // baseline column stays empty for this instance
            }
            row.elapsed_ms = detail::elapsed_ms_since(t0);
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

inline void write_csv(const BenchReport& report, std::ostream& out) {
    for (const std::string& m : report.metadata) out << "# " << m << '\n';
    out << kBenchCsvHeader << '\n';
    for (const BenchRow& r : report.rows) {
        out << r.suite << ',' << r.instance << ',' << r.seed << ',' << r.rep << ',';
        if (r.has_ga)
            out << detail::format_double(r.fitness_initial) << ','
                << detail::format_double(r.fitness_final) << ',' << r.generations << ',';
        else
            out << ",,,";
        out << r.elapsed_ms << ',';
        if (r.has_baseline) out << detail::format_double(r.baseline_fitness);
        out << '\n';
    }
}

// ---------------------------------------------------------------------------
// Summaries
// ---------------------------------------------------------------------------

struct SummaryRow {
    std::string suite;
    std::string instance;
    int runs = 0;
    double mean_fitness_initial = 0.0;
    double mean_fitness_final = 0.0;
    double best_fitness_final = 0.0;
    double mean_generations = 0.0;
    double mean_elapsed_ms = 0.0;
    bool has_baseline = false;
    double baseline_fitness = 0.0;
};

inline constexpr const char* kSummaryCsvHeader =
    "suite,instance,runs,mean_fitness_initial,mean_fitness_final,best_fitness_final,"
    "mean_generations,mean_elapsed_ms,baseline_fitness";

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

inline double parse_double_field(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) throw parse_error("");
        return v;
    } catch (...) {
        throw parse_error(std::string("bad numeric field for ") + what + ": '" + s + "'");
    }
}

}  // namespace detail

/// Aggregates a bench CSV: one row per (suite, instance) with means over the
/// GA rows, the best final fitness, and the baseline value if a baseline row
/// or column was present. Group order follows first appearance.
inline std::vector<SummaryRow> summarize_csv(std::istream& in) {
    std::string line;
    bool header_seen = false;
    struct Acc {
        SummaryRow row;
        double sum_fi = 0.0, sum_ff = 0.0, sum_gen = 0.0, sum_ms = 0.0;
    };
    std::vector<Acc> groups;
    auto group_for = [&](const std::string& suite, const std::string& instance) -> Acc& {
        for (Acc& g : groups)
            if (g.row.suite == suite && g.row.instance == instance) return g;
        groups.emplace_back();
        groups.back().row.suite = suite;
        groups.back().row.instance = instance;
        return groups.back();
    };

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line != kBenchCsvHeader)
                throw parse_error("unexpected CSV header: " + line);
            header_seen = true;
            continue;
        }
        std::vector<std::string> f = detail::split_csv_line(line);
        if (f.size() != 9) throw parse_error("expected 9 CSV fields, got row: " + line);
        Acc& g = group_for(f[0], f[1]);
        int rep = static_cast<int>(detail::parse_double_field(f[3], "rep"));
        if (rep >= 0) {
            ++g.row.runs;
            double fi = detail::parse_double_field(f[4], "fitness_initial");
            double ff = detail::parse_double_field(f[5], "fitness_final");
            g.sum_fi += fi;
            g.sum_ff += ff;
            g.sum_gen += detail::parse_double_field(f[6], "generations");
            g.sum_ms += detail::parse_double_field(f[7], "elapsed_ms");
            if (g.row.runs == 1 || ff < g.row.best_fitness_final) g.row.best_fitness_final = ff;
        }
        if (!f[8].empty()) {
            g.row.has_baseline = true;
            g.row.baseline_fitness = detail::parse_double_field(f[8], "baseline_fitness");
        }
    }
    if (!header_seen) throw parse_error("CSV has no header row");

    std::vector<SummaryRow> out;
    out.reserve(groups.size());
    for (Acc& g : groups) {
        if (g.row.runs > 0) {
            g.row.mean_fitness_initial = g.sum_fi / g.row.runs;
            g.row.mean_fitness_final = g.sum_ff / g.row.runs;
            g.row.mean_generations = g.sum_gen / g.row.runs;
            g.row.mean_elapsed_ms = g.sum_ms / g.row.runs;
        }
        out.push_back(g.row);
    }
    return out;
}

inline void write_summary_csv(const std::vector<SummaryRow>& rows, std::ostream& out) {
    out << kSummaryCsvHeader << '\n';
    for (const SummaryRow& r : rows) {
        out << r.suite << ',' << r.instance << ',' << r.runs << ',';
        if (r.runs > 0)
            out << detail::format_double(r.mean_fitness_initial) << ','
                << detail::format_double(r.mean_fitness_final) << ','
                << detail::format_double(r.best_fitness_final) << ','
                << detail::format_double(r.mean_generations) << ','
                << detail::format_double(r.mean_elapsed_ms) << ',';
        else
            out << ",,,,,";
        if (r.has_baseline) out << detail::format_double(r.baseline_fitness);
        out << '\n';
    }
}

}  // namespace yardalloc
