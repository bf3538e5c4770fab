// Command-line front end: simulate / verify / sweep / weights.
// Exit codes: 0 success, 2 configuration error, 3 runtime or step
// failure, 4 verification failure.

#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>
#include <cstdio>

#include <json.hpp>

#include "muskat/config.hpp"
#include "muskat/errors.hpp"
#include "muskat/reporting.hpp"
#include "muskat/verification.hpp"

namespace fs = std::filesystem;
using namespace muskat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitVerification = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error(path, "cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

int run_simulate(const std::string& config_path, const std::string& out_dir,
                 std::uint64_t seed_override, bool has_seed) {
    ParsedConfig parsed;
    try {
        parsed = parse_config(read_file(config_path));
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    SimConfig cfg = parsed.sim;
    if (has_seed) cfg.seed = seed_override;

    fs::create_directories(out_dir);
    try {
        const SimContext ctx(cfg);
        const EnergyTrace trace = simulate(ctx);
        const SmallnessResult smallness = smallness_check(ctx.initial(), cfg.smallness_c0);
        double horizon = 0.0;
        const bool horizon_applicable = cfg.weight_kind == WeightKind::data_adapted;
        if (horizon_applicable)
            horizon =
                predicted_t0(ctx.raw_initial(), ctx.kappa(), cfg.constant_c1, cfg.constant_c2);
        write_file(fs::path(out_dir) / "trace.csv", trace_to_csv(trace));
        write_file(fs::path(out_dir) / "trace.svg", trace_to_svg(trace));
        write_file(fs::path(out_dir) / "summary.json",
                   run_summary_to_json(trace, cfg, smallness, horizon, horizon_applicable));
        if (trace.termination != Termination::reached_final_time) {
            std::cerr << "run terminated early: " << to_string(trace.termination) << "\n";
            return kExitRuntime;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int run_verify(const std::string& out_dir, const std::string& inject, bool print_baselines) {
    if (print_baselines) {
        std::cout << compute_baseline_report();
        return kExitOk;
    }
    RhsFault fault = RhsFault::none;
    if (inject == "flip-v-sign")
        fault = RhsFault::flip_v_sign;
    else if (inject == "flip-e-split")
        fault = RhsFault::flip_e_split;
    else if (!inject.empty()) {
        std::cerr << "config error: unknown fault '" << inject << "'\n";
        return kExitConfig;
    }

    const VerificationOutcome outcome = run_verification(fault);
    nlohmann::ordered_json report;
    report["version"] = kVersion;
    report["items"] = nlohmann::ordered_json::array();
    std::string first_failure;
    for (const VerificationItem& item : outcome.items) {
        report["items"].push_back({{"id", item.id},
                                   {"pass", item.pass},
                                   {"value", item.value},
                                   {"reference", item.reference},
                                   {"note", item.note}});
        std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.id
                  << "  value=" << format_full(item.value)
                  << "  reference=" << format_full(item.reference) << "\n";
        if (!item.pass && first_failure.empty()) first_failure = item.id;
    }
    report["all_pass"] = outcome.all_pass;
    if (!out_dir.empty()) {
        fs::create_directories(out_dir);
        write_file(fs::path(out_dir) / "verification.json", report.dump(2));
        for (const auto& [stem, text] : outcome.reports)
            write_file(fs::path(out_dir) / (stem + ".json"), text);
    }
    if (!outcome.all_pass) {
        std::cerr << "verification failed at: " << first_failure << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& out_dir, int workers) {
    ParsedConfig parsed;
    try {
        parsed = parse_config(read_file(config_path));
    } catch (const config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
    SweepSpec sweep = parsed.sweep;
    if (sweep.amplitudes.empty()) sweep.amplitudes = {1.0};
    if (sweep.cutoffs.empty()) sweep.cutoffs = {parsed.sim.resolved_cutoff()};
    if (sweep.dts.empty()) sweep.dts = {parsed.sim.resolved_dt()};

    struct Cell {
        double amplitude = 0.0, cutoff = 0.0, dt = 0.0;
        SimConfig cfg;
        bool ok = false;
        bool l2_monotone = true, a_monotone = true;
        bool smallness_pass = false;
        EnergyRecord final_record;
        std::string termination;
    };
    std::vector<Cell> cells;
    for (double amp : sweep.amplitudes)
        for (double n : sweep.cutoffs)
            for (double dt : sweep.dts) {
                Cell cell;
                cell.amplitude = amp;
                cell.cutoff = n;
                cell.dt = dt;
                cell.cfg = parsed.sim;
                cell.cfg.cutoff_n = n;
                cell.cfg.dt = dt;
                for (ModeSpec& m : cell.cfg.modes) m.amplitude *= amp;
                cell.cfg.random_init.amplitude *= amp;
                cells.push_back(cell);
            }

    fs::create_directories(out_dir);
    auto run_cell = [&](Cell& cell, int index) {
        try {
            const SimContext ctx(cell.cfg);
            cell.smallness_pass = smallness_check(ctx.initial(), cell.cfg.smallness_c0).pass;
            const EnergyTrace trace = simulate(ctx);
            cell.termination = to_string(trace.termination);
            cell.ok = trace.termination == Termination::reached_final_time;
            for (size_t i = 1; i < trace.records.size(); ++i) {
                if (trace.records[i].l2 > trace.records[i - 1].l2 + 1e-8) cell.l2_monotone = false;
                if (trace.records[i].a_monitor > trace.records[i - 1].a_monitor + 1e-8)
                    cell.a_monotone = false;
            }
            cell.final_record = trace.records.back();
            // per-cell file, no shared mutable outputs
            write_file(fs::path(out_dir) / ("trace_" + std::to_string(index) + ".csv"),
                       trace_to_csv(trace));
        } catch (const std::exception& e) {
            cell.ok = false;
            cell.termination = std::string("error: ") + e.what();
        }
    };

    std::vector<std::thread> pool;
    std::atomic<size_t> next{0};
    const int nworkers = std::max(1, workers);
    for (int w = 0; w < nworkers; ++w)
        pool.emplace_back([&]() {
            for (size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1))
                run_cell(cells[i], static_cast<int>(i));
        });
    for (std::thread& t : pool) t.join();

    std::ostringstream summary;
    summary << "amplitude,cutoff_n,dt,final_l2,final_A,final_B,l2_monotone,A_monotone,"
               "smallness_pass,termination\n";
    int failures = 0;
    for (const Cell& cell : cells) {
        summary << format_full(cell.amplitude) << ',' << format_full(cell.cutoff) << ','
                << format_full(cell.dt) << ',' << format_full(cell.final_record.l2) << ','
                << format_full(cell.final_record.a_monitor) << ','
                << format_full(cell.final_record.b_monitor) << ',' << cell.l2_monotone << ','
                << cell.a_monotone << ',' << cell.smallness_pass << ',' << cell.termination
                << '\n';
        if (!cell.ok) ++failures;
    }
    summary << "# config_digest=" << config_digest(parsed.sim) << '\n';
    write_file(fs::path(out_dir) / "sweep_summary.csv", summary.str());
    if (failures > 0) {
        std::cerr << failures << " sweep cell(s) failed\n";
        return kExitRuntime;
    }
    return kExitOk;
}

int run_weights(const std::string& kind, double a, const std::string& out_dir) {
    if (kind != "power-log" && kind != "constant") {
        std::cerr << "config error: weights kind must be power-log or constant\n";
        return kExitConfig;
    }
    fs::create_directories(out_dir);
    try {
        const Kappa kappa = kind == "constant" ? kappa_constant() : kappa_power_log(a);
        const bool degenerate = kind == "constant" || a == 0.0;
        const Phi phi = tabulate_phi(kappa, 1e-6, 1e6, 64, degenerate);
        // digest of the weight parameters, embedded in the table
        std::uint64_t h = 14695981039346656037ull;
        for (unsigned char c : kind + "/" + format_full(a)) {
            h ^= c;
            h *= 1099511628211ull;
        }
        char digest[24];
        std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(h));
        write_file(fs::path(out_dir) / "phi_table.csv", phi_table_to_csv(phi, digest));
        const KappaValidation v = validate_kappa(kappa);
        nlohmann::ordered_json j;
        j["kind"] = kind;
        j["a"] = a;
        j["validation"] = {{"H1", v.h1_pass},
                           {"H2", v.h2_pass},
                           {"H3", v.h3_pass},
                           {"kappa_ge_1", v.lower_bound_pass},
                           {"doubling_c0", v.empirical_doubling}};
        j["equivalence"] = {{"lower", phi.equivalence_lower()}, {"upper", phi.equivalence_upper()}};
        write_file(fs::path(out_dir) / "weight_summary.json", j.dump(2));
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "runtime failure: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pseudospectral Muskat simulation and verification harness"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);

    std::string config_path, out_dir, inject, weights_kind = "power-log";
    std::uint64_t seed_override = 0;
    bool print_baselines = false;
    double weights_a = 1.0 / 3.0;
    int workers = std::max(1u, std::thread::hardware_concurrency());

    CLI::App* sim = app.add_subcommand("simulate", "run one simulation");
    sim->add_option("--config", config_path, "config JSON path")->required();
    sim->add_option("--out", out_dir, "output directory")->required();
    CLI::Option* seed_opt = sim->add_option("--seed", seed_override, "seed override");

    CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
    verify->add_option("--out", out_dir, "output directory for verification.json");
    verify->add_option("--inject", inject, "fault: flip-v-sign | flip-e-split");
    verify->add_flag("--print-baselines", print_baselines, "recompute and print baselines");

    CLI::App* sweep = app.add_subcommand("sweep", "run an amplitude x cutoff x dt grid");
    sweep->add_option("--config", config_path, "config JSON path")->required();
    sweep->add_option("--out", out_dir, "output directory")->required();
    sweep->add_option("--workers", workers, "concurrent cells");

    CLI::App* weights = app.add_subcommand("weights", "emit a phi table CSV");
    weights->add_option("--kind", weights_kind, "power-log | constant");
    weights->add_option("--a", weights_a, "power-log exponent");
    weights->add_option("--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    if (sim->parsed())
        return run_simulate(config_path, out_dir, seed_override, seed_opt->count() > 0);
    if (verify->parsed()) return run_verify(out_dir, inject, print_baselines);
    if (sweep->parsed()) return run_sweep(config_path, out_dir, workers);
    if (weights->parsed()) return run_weights(weights_kind, weights_a, out_dir);
    return kExitConfig;
}
