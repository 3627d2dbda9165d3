#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "polyarea/gen.hpp"
#include "polyarea/oracle.hpp"
#include "polyarea/solve.hpp"

namespace {

using namespace polyarea;

constexpr int kExitOk = 0;
constexpr int kExitLimit = 2;
constexpr int kExitError = 3;
constexpr int kExitUsage = 64;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ','))
        if (!item.empty()) parts.push_back(item);
    return parts;
}

std::optional<oracle::Objective> parse_objective(const std::string& s) {
    if (s == "min") return oracle::Objective::Min;
    if (s == "max") return oracle::Objective::Max;
    return std::nullopt;
}

int cmd_solve(const std::string& instance_path, const std::string& objective,
              const std::string& preset_id, double time_limit, const std::string& start,
              const std::string& out_path, const std::string& svg_path) {
    const auto obj = parse_objective(objective);
    if (!obj) {
        std::cerr << "error: --objective must be min or max\n";
        return kExitUsage;
    }
    SolveOptions opt;
    opt.time_limit_s = time_limit;
    if (!preset_id.empty()) {
        opt.preset = parse_preset(preset_id);
        if (!opt.preset) {
            std::cerr << "error: unknown preset '" << preset_id << "'\n";
            return kExitUsage;
        }
    }

    Instance inst;
    try {
        inst = parse_instance(read_file(instance_path));
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    try {
        if (start == "greedy") {
            opt.greedy_start = true;
        } else if (start == "none") {
            opt.greedy_start = false;
        } else {
            const SolutionRecord prev = parse_solution(read_file(start));
            opt.start_order = prev.order;
        }

        const SolveOutcome outcome = solve_instance(inst, *obj, opt);
        const std::string text = write_solution(outcome.record);
        if (out_path.empty())
            std::cout << text << "\n";
        else
            write_file(out_path, text);
        if (!svg_path.empty()) {
            const std::vector<int>* order =
                outcome.record.order.empty() ? nullptr : &outcome.record.order;
            write_file(svg_path, render_svg(inst, order));
        }
        std::cerr << "status=" << to_string(outcome.record.status)
                  << " twice_area=" << outcome.record.twice_area
                  << " bound=" << outcome.record.bound << " gap=" << outcome.record.gap
                  << " nodes=" << outcome.result.stats.nodes
                  << " cuts=" << outcome.result.stats.total_cuts()
                  << " runtime_s=" << outcome.record.runtime_s << "\n";
        switch (outcome.record.status) {
            case SolveStatus::Optimal:
                return kExitOk;
            case SolveStatus::Limit:
            case SolveStatus::Feasible:
                return outcome.record.order.empty() ? kExitError : kExitLimit;
            case SolveStatus::Infeasible:
                return kExitError;
        }
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_oracle(const std::string& instance_path, int max_n) {
    try {
        const Instance inst = parse_instance(read_file(instance_path));
        if (inst.n() > max_n) {
            std::cerr << "refusing exhaustive enumeration for n=" << inst.n() << " > max-n="
                      << max_n << "\n";
            return kExitError;
        }
        long count = 0;
        std::optional<Polygonization> best_min, best_max;
        oracle::enumerate_polygonizations(
            inst,
            [&](const Polygonization& p) {
                ++count;
                if (!best_min || p.twice_area < best_min->twice_area) best_min = p;
                if (!best_max || p.twice_area > best_max->twice_area) best_max = p;
            },
            max_n);
        std::cout << "polygonizations: " << count << "\n";
        auto show = [](const char* label, const Polygonization& p) {
            std::cout << label << ": twice_area=" << p.twice_area << " order=[";
            for (size_t k = 0; k < p.order.size(); ++k)
                std::cout << (k ? "," : "") << p.order[k];
            std::cout << "]\n";
        };
        if (best_min) show("min", *best_min);
        if (best_max) show("max", *best_max);
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

struct BenchCell {
    Instance inst;
    oracle::Objective obj;
    Preset preset;
};

int cmd_bench(const std::vector<std::string>& instance_paths, bool random, int n, int count,
              int hull_k, const std::string& presets_arg, const std::string& objectives_arg,
              int reps, std::uint64_t seed, double time_limit, const std::string& out_path) {
    std::vector<Preset> presets;
    for (const std::string& id : split_csv(presets_arg)) {
        auto p = parse_preset(id);
        if (!p) {
            std::cerr << "error: unknown preset '" << id << "'\n";
            return kExitUsage;
        }
        presets.push_back(*p);
    }
    std::vector<oracle::Objective> objectives;
    for (const std::string& o : split_csv(objectives_arg)) {
        auto obj = parse_objective(o);
        if (!obj) {
            std::cerr << "error: unknown objective '" << o << "'\n";
            return kExitUsage;
        }
        objectives.push_back(*obj);
    }
    if (presets.empty() || objectives.empty()) {
        std::cerr << "error: need at least one preset and one objective\n";
        return kExitUsage;
    }

    std::vector<Instance> instances;
    try {
        for (const std::string& path : instance_paths)
            instances.push_back(parse_instance(read_file(path)));
        if (random) {
            for (int c = 0; c < count; ++c) {
                const std::uint64_t s = seed + static_cast<std::uint64_t>(c);
                instances.push_back(hull_k > 0 ? convex_hull_size_instance(n, hull_k, s)
                                               : uniform_instance(n, s));
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    if (instances.empty()) {
        std::cerr << "error: no instances (pass --instance or --random)\n";
        return kExitUsage;
    }

    std::vector<BenchCell> cells;
    for (int r = 0; r < reps; ++r)
        for (const Instance& inst : instances)
            for (oracle::Objective obj : objectives)
                for (const Preset& p : presets) cells.push_back({inst, obj, p});

    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("POLYAREA_THREADS")) {
        const long cap = std::strtol(env, nullptr, 10);
        if (cap > 0) workers = std::min<unsigned>(workers, static_cast<unsigned>(cap));
    }
    workers = std::min<unsigned>(workers, static_cast<unsigned>(cells.size()));

    std::vector<std::string> lines(cells.size());
    std::atomic<size_t> next{0};
    auto run_cells = [&] {
        for (;;) {
            const size_t c = next.fetch_add(1);
            if (c >= cells.size()) return;
            const BenchCell& cell = cells[c];
            SolveOptions opt;
            opt.preset = cell.preset;
            opt.time_limit_s = time_limit;
            const SolveOutcome out = solve_instance(cell.inst, cell.obj, opt);
            std::ostringstream row;
            row << cell.inst.name << "," << cell.inst.n() << ","
                << (cell.obj == oracle::Objective::Min ? "min" : "max") << ","
                << cell.preset.id << "," << to_string(out.record.status) << ","
                << out.record.twice_area << "," << out.record.bound << "," << out.record.gap
                << "," << out.record.runtime_s << "," << out.result.stats.nodes << ",";
            bool first = true;
            for (const auto& [family, cnt] : out.result.stats.cuts_by_family) {
                row << (first ? "" : ";") << family << ":" << cnt;
                first = false;
            }
            lines[c] = row.str();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run_cells);
    run_cells();
    for (std::thread& t : pool) t.join();

    std::ostringstream csv;
    csv << "instance,n,objective,preset,status,twice_area,bound,gap,runtime_s,nodes,"
           "cuts_by_family\n";
    for (const std::string& line : lines) csv << line << "\n";
    if (out_path.empty())
        std::cout << csv.str();
    else
        write_file(out_path, csv.str());
    return kExitOk;
}

int cmd_validate(const std::string& instance_path, const std::string& solution_path) {
    try {
        const Instance inst = parse_instance(read_file(instance_path));
        const SolutionRecord rec = parse_solution(read_file(solution_path));
        if (rec.instance_name != inst.name)
            std::cerr << "warning: solution names instance '" << rec.instance_name
                      << "', file holds '" << inst.name << "'\n";
        PolygonViolation why;
        const auto poly = validate_polygonization(inst, rec.order, &why);
        if (!poly) {
            std::cerr << "INVALID: " << why.message << "\n";
            return kExitError;
        }
        if (poly->twice_area != rec.twice_area) {
            std::cerr << "INVALID: recorded twice_area=" << rec.twice_area
                      << " but exact recomputation gives " << poly->twice_area << "\n";
            return kExitError;
        }
        std::cout << "OK twice_area=" << poly->twice_area << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact min/max-area simple polygonization solver"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Solve one instance to optimality");
    std::string instance_path, objective, preset_id, out_path, svg_path;
    std::string start = "greedy";
    double time_limit = 1800.0;
    solve->add_option("--instance", instance_path, "Instance JSON file")->required();
    solve->add_option("--objective", objective, "min | max")->required();
    solve->add_option("--preset", preset_id, "edge-v1..v4 | tri-v1..v3 (default per objective)");
    solve->add_option("--time-limit", time_limit, "Time limit in seconds");
    solve->add_option("--start", start, "greedy | none | PATH to a warm-start solution");
    solve->add_option("--out", out_path, "Solution JSON output (default: stdout)");
    solve->add_option("--svg", svg_path, "Optional SVG rendering");

    // oracle
    auto* orac = app.add_subcommand("oracle", "Exhaustive enumeration report");
    std::string oracle_instance;
    int max_n = polyarea::oracle::kDefaultMaxN;
    orac->add_option("--instance", oracle_instance, "Instance JSON file")->required();
    orac->add_option("--max-n", max_n, "Enumeration size cap");

    // bench
    auto* bench = app.add_subcommand("bench", "Benchmark grid, CSV output");
    std::vector<std::string> bench_instances;
    bool random = false;
    int bn = 8, bcount = 5, bk = 0, breps = 1;
    std::uint64_t bseed = 1;
    std::string bpresets, bobjectives = "min,max", bout;
    double btime = 1800.0;
    bench->add_option("--instance", bench_instances, "Instance JSON files");
    bench->add_flag("--random", random, "Generate random instances");
    bench->add_option("--n", bn, "Random instance size");
    bench->add_option("--count", bcount, "Number of random instances");
    bench->add_option("--hull-k", bk, "Exact hull size for random instances (0: uniform)");
    bench->add_option("--presets", bpresets, "Comma-separated preset ids")->required();
    bench->add_option("--objectives", bobjectives, "Comma-separated objectives");
    bench->add_option("--reps", breps, "Repetitions per cell");
    bench->add_option("--seed", bseed, "Generator seed");
    bench->add_option("--time-limit", btime, "Per-cell time limit in seconds");
    bench->add_option("--out", bout, "CSV output path (default: stdout)");

    // validate
    auto* val = app.add_subcommand("validate", "Re-check a solution file exactly");
    std::string val_instance, val_solution;
    val->add_option("--instance", val_instance, "Instance JSON file")->required();
    val->add_option("--solution", val_solution, "Solution JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (solve->parsed())
        return cmd_solve(instance_path, objective, preset_id, time_limit, start, out_path,
                         svg_path);
    if (orac->parsed()) return cmd_oracle(oracle_instance, max_n);
    if (bench->parsed())
        return cmd_bench(bench_instances, random, bn, bcount, bk, bpresets, bobjectives, breps,
                         bseed, btime, bout);
    if (val->parsed()) return cmd_validate(val_instance, val_solution);
    return kExitUsage;
}
