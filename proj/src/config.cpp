#include "muskat/config.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

namespace muskat {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw config_error(path, "expected an object");
}

void reject_unknown(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key())) throw config_error(path + "." + it.key(), "unknown key");
}

double get_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw config_error(path, "expected a number");
    return j.get<double>();
}

int get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw config_error(path, "expected an integer");
    return j.get<int>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean()) throw config_error(path, "expected a boolean");
    return j.get<bool>();
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

void parse_grid(const json& j, SimConfig& cfg) {
    require_object(j, "grid");
    reject_unknown(j, "grid", {"L", "N"});
    if (j.contains("L")) {
        cfg.grid_half_length = get_number(j["L"], "grid.L");
        if (!(cfg.grid_half_length > 0.0)) throw config_error("grid.L", "must be positive");
    }
    if (j.contains("N")) {
        cfg.grid_size = get_int(j["N"], "grid.N");
        if (!is_power_of_two(cfg.grid_size) || cfg.grid_size < 8)
            throw config_error("grid.N", "must be a power of two, at least 8");
    }
}

void parse_weight(const json& j, SimConfig& cfg) {
    require_object(j, "weight");
    reject_unknown(j, "weight", {"kind", "a"});
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) throw config_error("weight.kind", "expected a string");
        const std::string kind = j["kind"].get<std::string>();
        if (kind == "power-log")
            cfg.weight_kind = WeightKind::power_log;
        else if (kind == "data-adapted")
            cfg.weight_kind = WeightKind::data_adapted;
        else
            throw config_error("weight.kind", "must be 'power-log' or 'data-adapted'");
    }
    if (j.contains("a")) {
        cfg.weight_a = get_number(j["a"], "weight.a");
        if (!(cfg.weight_a >= 0.0 && cfg.weight_a <= 1.0))
            throw config_error("weight.a", "must lie in [0, 1]");
    }
}

void parse_time(const json& j, SimConfig& cfg) {
    require_object(j, "time");
    reject_unknown(j, "time", {"dt", "T"});
    if (j.contains("dt")) {
        cfg.dt = get_number(j["dt"], "time.dt");
        if (!(cfg.dt > 0.0)) throw config_error("time.dt", "must be positive");
    }
    if (j.contains("T")) {
        cfg.final_time = get_number(j["T"], "time.T");
        if (!(cfg.final_time > 0.0)) throw config_error("time.T", "must be positive");
    }
}

void parse_init(const json& j, SimConfig& cfg) {
    require_object(j, "init");
    reject_unknown(j, "init", {"modes", "random"});
    if (j.contains("modes")) {
        if (!j["modes"].is_array()) throw config_error("init.modes", "expected an array");
        int idx = 0;
        for (const json& m : j["modes"]) {
            const std::string path = "init.modes[" + std::to_string(idx) + "]";
            require_object(m, path);
            reject_unknown(m, path, {"wavenumber", "amplitude", "phase"});
            if (!m.contains("wavenumber") || !m.contains("amplitude"))
                throw config_error(path, "needs wavenumber and amplitude");
            ModeSpec mode;
            mode.wavenumber = get_number(m["wavenumber"], path + ".wavenumber");
            mode.amplitude = get_number(m["amplitude"], path + ".amplitude");
            if (m.contains("phase")) mode.phase = get_number(m["phase"], path + ".phase");
            cfg.modes.push_back(mode);
            ++idx;
        }
    }
    if (j.contains("random")) {
        const json& r = j["random"];
        require_object(r, "init.random");
        reject_unknown(r, "init.random", {"amplitude", "decay", "cutoff_index"});
        cfg.random_init.enabled = true;
        if (r.contains("amplitude"))
            cfg.random_init.amplitude = get_number(r["amplitude"], "init.random.amplitude");
        if (r.contains("decay"))
            cfg.random_init.decay = get_number(r["decay"], "init.random.decay");
        if (r.contains("cutoff_index")) {
            cfg.random_init.cutoff_index = get_int(r["cutoff_index"], "init.random.cutoff_index");
            if (cfg.random_init.cutoff_index < 1)
                throw config_error("init.random.cutoff_index", "must be >= 1");
        }
    }
}

void parse_output(const json& j, SimConfig& cfg) {
    require_object(j, "output");
    reject_unknown(j, "output", {"cadence", "keep_fields"});
    if (j.contains("cadence")) {
        cfg.cadence = get_int(j["cadence"], "output.cadence");
        if (cfg.cadence < 1) throw config_error("output.cadence", "must be >= 1");
    }
    if (j.contains("keep_fields")) cfg.keep_fields = get_bool(j["keep_fields"], "output.keep_fields");
}

void parse_constants(const json& j, SimConfig& cfg) {
    require_object(j, "constants");
    reject_unknown(j, "constants", {"c1", "c2", "gronwall_c"});
    if (j.contains("c1")) cfg.constant_c1 = get_number(j["c1"], "constants.c1");
    if (j.contains("c2")) cfg.constant_c2 = get_number(j["c2"], "constants.c2");
    if (j.contains("gronwall_c"))
        cfg.gronwall_c = get_number(j["gronwall_c"], "constants.gronwall_c");
}

std::vector<double> number_list(const json& j, const std::string& path) {
    if (!j.is_array()) throw config_error(path, "expected an array of numbers");
    std::vector<double> out;
    for (size_t i = 0; i < j.size(); ++i)
        out.push_back(get_number(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

void parse_sweep(const json& j, SweepSpec& sweep) {
    require_object(j, "sweep");
    reject_unknown(j, "sweep", {"amplitudes", "cutoffs", "dts"});
    if (j.contains("amplitudes")) sweep.amplitudes = number_list(j["amplitudes"], "sweep.amplitudes");
    if (j.contains("cutoffs")) sweep.cutoffs = number_list(j["cutoffs"], "sweep.cutoffs");
    if (j.contains("dts")) sweep.dts = number_list(j["dts"], "sweep.dts");
}

}  // namespace

ParsedConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw config_error("<document>", e.what());
    }
    require_object(doc, "<document>");
    reject_unknown(doc, "<document>",
                   {"grid", "cutoff_n", "weight", "time", "quad", "init", "output", "seed",
                    "smallness_c0", "constants", "sweep"});
    ParsedConfig out;
    SimConfig& cfg = out.sim;
    if (doc.contains("grid")) parse_grid(doc["grid"], cfg);
    if (doc.contains("cutoff_n")) {
        cfg.cutoff_n = get_number(doc["cutoff_n"], "cutoff_n");
        if (!(cfg.cutoff_n > 0.0)) throw config_error("cutoff_n", "must be positive");
    }
    if (doc.contains("weight")) parse_weight(doc["weight"], cfg);
    if (doc.contains("time")) parse_time(doc["time"], cfg);
    if (doc.contains("quad")) {
        require_object(doc["quad"], "quad");
        reject_unknown(doc["quad"], "quad", {"alpha_nodes_per_decade"});
        if (doc["quad"].contains("alpha_nodes_per_decade")) {
            cfg.alpha_nodes_per_decade =
                get_int(doc["quad"]["alpha_nodes_per_decade"], "quad.alpha_nodes_per_decade");
            if (cfg.alpha_nodes_per_decade < 8)
                throw config_error("quad.alpha_nodes_per_decade", "must be >= 8");
        }
    }
    if (doc.contains("init")) parse_init(doc["init"], cfg);
    if (doc.contains("output")) parse_output(doc["output"], cfg);
    if (doc.contains("seed")) {
        if (!doc["seed"].is_number_unsigned() && !doc["seed"].is_number_integer())
            throw config_error("seed", "expected an integer");
        cfg.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("smallness_c0")) {
        cfg.smallness_c0 = get_number(doc["smallness_c0"], "smallness_c0");
        if (!(cfg.smallness_c0 > 0.0)) throw config_error("smallness_c0", "must be positive");
    }
    if (doc.contains("constants")) parse_constants(doc["constants"], cfg);
    if (doc.contains("sweep")) parse_sweep(doc["sweep"], out.sweep);

    // constraint checks that need the whole document
    const Grid grid(cfg.grid_half_length, cfg.grid_size);
    if (cfg.cutoff_n > grid.nyquist() * (1.0 + 1e-12))
        throw config_error("cutoff_n", "exceeds the grid Nyquist wavenumber");
    return out;
}

std::string canonical_config_json(const SimConfig& cfg) {
    nlohmann::ordered_json j;
    j["grid"]["L"] = cfg.grid_half_length;
    j["grid"]["N"] = cfg.grid_size;
    j["cutoff_n"] = cfg.resolved_cutoff();
    j["weight"]["kind"] = cfg.weight_kind == WeightKind::power_log ? "power-log" : "data-adapted";
    j["weight"]["a"] = cfg.weight_a;
    j["time"]["dt"] = cfg.resolved_dt();
    j["time"]["T"] = cfg.final_time;
    j["quad"]["alpha_nodes_per_decade"] = cfg.alpha_nodes_per_decade;
    j["init"]["modes"] = nlohmann::ordered_json::array();
    for (const ModeSpec& m : cfg.modes)
        j["init"]["modes"].push_back(
            {{"wavenumber", m.wavenumber}, {"amplitude", m.amplitude}, {"phase", m.phase}});
    if (cfg.random_init.enabled) {
        j["init"]["random"]["amplitude"] = cfg.random_init.amplitude;
        j["init"]["random"]["decay"] = cfg.random_init.decay;
        j["init"]["random"]["cutoff_index"] = cfg.random_init.cutoff_index;
    }
    j["output"]["cadence"] = cfg.cadence;
    j["seed"] = cfg.seed;
    j["smallness_c0"] = cfg.smallness_c0;
    j["constants"]["c1"] = cfg.constant_c1;
    j["constants"]["c2"] = cfg.constant_c2;
    j["constants"]["gronwall_c"] = cfg.gronwall_c;
    return j.dump(2);
}

}  // namespace muskat
