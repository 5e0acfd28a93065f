// progrand: multi-stream PRNG with programmable output statistics.
//
// Subcommands mirror the bench experiments: check-poly, generate, sweep,
// dynamic, correlate, capacity. Every run drops a manifest.json into the
// output directory; re-running a subcommand with --manifest reproduces the
// recorded outputs byte for byte.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "progrand/engine.hpp"
#include "progrand/errors.hpp"
#include "progrand/io.hpp"
#include "progrand/serialize.hpp"
#include "progrand/stats.hpp"

namespace fs = std::filesystem;
using namespace progrand;

namespace {

fs::path resolve_out_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("PROGRAND_OUT_DIR"); env && *env) return env;
    return ".";
}

json load_json_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("invalid JSON in " + path.string() + ": " + e.what());
    }
    return j;
}

void write_manifest(const fs::path& out_dir, json manifest) {
    write_file_atomic(out_dir / "manifest.json", manifest.dump(2) + "\n");
}

// ---- shared option plumbing for the generator-backed subcommands ----

struct GeneratorOptions {
    std::string config_path;
    std::string manifest_path;
    std::string out_dir_flag;
    std::string seed_text;
    std::string schedule_csv;
    std::uint32_t fixed_threshold = 0;
    bool threshold_set = false;
    std::uint64_t samples = 100000;
};

void add_generator_options(CLI::App* cmd, GeneratorOptions& opt, const char* samples_help) {
    cmd->add_option("-c,--config", opt.config_path, "generator config JSON file");
    cmd->add_option("-N,--samples", opt.samples, samples_help);
    cmd->add_option("--seed", opt.seed_text,
                    "seed override: decimal, 0x hex, or 0b binary (0b form must spell "
                    "out exactly <degree> digits)");
    cmd->add_option("--threshold", opt.fixed_threshold, "fixed threshold override")
        ->each([&opt](const std::string&) { opt.threshold_set = true; });
    cmd->add_option("--schedule-csv", opt.schedule_csv,
                    "custom schedule CSV (header 'step,threshold') replacing the config schedule");
    cmd->add_option("--manifest", opt.manifest_path,
                    "replay a recorded run; generator options are taken from the manifest")
        ->excludes("--config")
        ->excludes("--samples")
        ->excludes("--seed")
        ->excludes("--threshold")
        ->excludes("--schedule-csv");
    cmd->add_option("-o,--out-dir", opt.out_dir_flag,
                    "output directory (default: $PROGRAND_OUT_DIR or '.')");
}

GeneratorConfig resolve_config(const GeneratorOptions& opt) {
    GeneratorConfig config =
        opt.config_path.empty() ? default_config() : config_from_json(load_json_file(opt.config_path));
    if (!opt.seed_text.empty()) {
        config.seed = parse_seed(opt.seed_text, config.polynomial.degree());
    }
    if (!opt.schedule_csv.empty()) {
        config.schedule = load_schedule_csv(opt.schedule_csv);
    }
    if (opt.threshold_set) {
        config.schedule = FixedThreshold{opt.fixed_threshold};
    }
    validate_config(config);
    return config;
}

json recorded_arguments(const GeneratorOptions& opt) {
    json j;
    j["config_file"] = opt.config_path;
    j["seed"] = opt.seed_text;
    j["schedule_csv"] = opt.schedule_csv;
    if (opt.threshold_set) j["threshold"] = opt.fixed_threshold;
    return j;
}

void check_manifest_command(const json& manifest, const std::string& command) {
    if (!manifest.contains("command") || manifest.at("command").get<std::string>() != command) {
        throw Error("manifest does not record a '" + command + "' run");
    }
}

// ---- subcommand bodies ----

int run_check_poly(const std::string& poly_text, const std::string& out_dir_flag) {
    const fs::path out_dir = resolve_out_dir(out_dir_flag);
    const GF2Polynomial poly = parse_polynomial(poly_text);
    const bool irreducible = is_irreducible(poly);
    const bool primitive = irreducible && is_primitive(poly);

    std::string report;
    report += "polynomial: " + poly.to_caret() + "\n";
    report += "hex_mask: " + poly.to_hex_mask() + "\n";
    report += "degree: " + std::to_string(poly.degree()) + "\n";
    report += std::string("irreducible: ") + (irreducible ? "yes" : "no") + "\n";
    report += std::string("primitive: ") + (primitive ? "yes" : "no") + "\n";
    if (poly.degree() <= 24) {
        const std::uint64_t period = lfsr_period(poly);
        report += "period: " + std::to_string(period) + "\n";
        report += "max_period: " + std::to_string((std::uint64_t{1} << poly.degree()) - 1) + "\n";
    }
    std::cout << report;
    write_file_atomic(out_dir / "poly_report.txt", report);

    json manifest;
    manifest["command"] = "check-poly";
    manifest["arguments"] = {{"polynomial", poly_text}};
    manifest["outputs"] = {"poly_report.txt"};
    write_manifest(out_dir, manifest);
    return 0;
}

int run_capacity(int n, int k, int m, const std::string& out_dir_flag) {
    const fs::path out_dir = resolve_out_dir(out_dir_flag);
    const std::uint64_t value = capacity(n, k, m);
    std::cout << value << "\n";
    write_file_atomic(out_dir / "capacity.txt", std::to_string(value) + "\n");

    json manifest;
    manifest["command"] = "capacity";
    manifest["arguments"] = {{"n", n}, {"k", k}, {"m", m}};
    manifest["outputs"] = {"capacity.txt"};
    write_manifest(out_dir, manifest);
    return 0;
}

int run_generate(const GeneratorOptions& opt, const std::string& format) {
    const fs::path out_dir = resolve_out_dir(opt.out_dir_flag);

    GeneratorConfig config{default_config()};
    std::uint64_t samples = opt.samples;
    std::string fmt = format;
    json arguments;
    if (!opt.manifest_path.empty()) {
        const json manifest = load_json_file(opt.manifest_path);
        check_manifest_command(manifest, "generate");
        config = config_from_json(manifest.at("config"));
        samples = manifest.at("samples").get<std::uint64_t>();
        fmt = manifest.at("format").get<std::string>();
        arguments = manifest.at("arguments");
    } else {
        config = resolve_config(opt);
        arguments = recorded_arguments(opt);
    }
    if (fmt != "packed" && fmt != "ascii") {
        throw Error("format must be 'packed' or 'ascii', got '" + fmt + "'");
    }
    if (samples < 1) throw Error("sample count must be >= 1");

    const MultiStreamOutput output = run(config, samples);

    std::vector<std::string> outputs;
    for (std::size_t s = 0; s < output.bits.size(); ++s) {
        const std::string name = "stream_" + config.streams[s].stream_id +
                                 (fmt == "packed" ? ".bin" : ".txt");
        if (fmt == "packed") {
            write_file_atomic(out_dir / name, pack_bits(output.bits[s]));
        } else {
            write_file_atomic(out_dir / name, ascii_bits(output.bits[s]));
        }
        outputs.push_back(name);
    }
    write_file_atomic(out_dir / "thresholds.csv", threshold_trace_csv(output.thresholds));
    outputs.push_back("thresholds.csv");

    json manifest;
    manifest["command"] = "generate";
    manifest["arguments"] = arguments;
    manifest["config"] = config_to_json(config);
    manifest["samples"] = samples;
    manifest["format"] = fmt;
    manifest["outputs"] = outputs;
    write_manifest(out_dir, manifest);
    std::cout << "wrote " << output.bits.size() << " streams x " << samples << " bits to "
              << out_dir.string() << "\n";
    return 0;
}

int run_sweep(const GeneratorOptions& opt, std::vector<std::uint32_t> thresholds) {
    const fs::path out_dir = resolve_out_dir(opt.out_dir_flag);

    GeneratorConfig config{default_config()};
    std::uint64_t samples = opt.samples;
    json arguments;
    if (!opt.manifest_path.empty()) {
        const json manifest = load_json_file(opt.manifest_path);
        check_manifest_command(manifest, "sweep");
        config = config_from_json(manifest.at("config"));
        samples = manifest.at("samples").get<std::uint64_t>();
        thresholds = manifest.at("thresholds").get<std::vector<std::uint32_t>>();
        arguments = manifest.at("arguments");
    } else {
        config = resolve_config(opt);
        arguments = recorded_arguments(opt);
    }
    if (!std::holds_alternative<FixedThreshold>(config.schedule)) {
        throw ConfigError("sweep requires a fixed-threshold base config");
    }
    if (thresholds.empty()) throw Error("sweep needs at least one threshold");
    if (samples < 1) throw Error("sample count must be >= 1");

    std::string csv = "threshold,empirical_p1,theoretical_p1\n";
    for (std::uint32_t t : thresholds) {
        GeneratorConfig point = config;
        point.schedule = FixedThreshold{t};
        validate_config(point);
        const MultiStreamOutput output = progrand::run(point, samples);
        // P(1) pooled across the streams; per-stream traces are generate's job
        double ones = 0.0;
        for (const auto& stream : output.bits) {
            for (std::uint8_t b : stream) ones += b;
        }
        const double p1 = ones / (static_cast<double>(samples) *
                                  static_cast<double>(output.bits.size()));
        csv += std::to_string(t) + "," + format_double(p1) + "," +
               format_double(theoretical_p1(t, config.sample_width)) + "\n";
    }
    write_file_atomic(out_dir / "sweep.csv", csv);

    json manifest;
    manifest["command"] = "sweep";
    manifest["arguments"] = arguments;
    manifest["config"] = config_to_json(config);
    manifest["samples"] = samples;
    manifest["thresholds"] = thresholds;
    manifest["outputs"] = {"sweep.csv"};
    write_manifest(out_dir, manifest);
    std::cout << csv;
    return 0;
}

int run_dynamic(const GeneratorOptions& opt) {
    const fs::path out_dir = resolve_out_dir(opt.out_dir_flag);

    GeneratorConfig config{default_config()};
    std::uint64_t samples = opt.samples;
    json arguments;
    if (!opt.manifest_path.empty()) {
        const json manifest = load_json_file(opt.manifest_path);
        check_manifest_command(manifest, "dynamic");
        config = config_from_json(manifest.at("config"));
        samples = manifest.at("samples").get<std::uint64_t>();
        arguments = manifest.at("arguments");
    } else {
        config = resolve_config(opt);
        // the stock config is fixed-threshold; the canonical dynamic run
        // ramps from zero unless told otherwise
        if (opt.config_path.empty() && opt.schedule_csv.empty() && !opt.threshold_set) {
            config.schedule = CounterRamp{0};
        }
        arguments = recorded_arguments(opt);
    }
    if (std::holds_alternative<FixedThreshold>(config.schedule)) {
        throw ConfigError("dynamic requires a counter-ramp or custom schedule");
    }
    if (samples < 2) throw Error("dynamic needs at least 2 samples");

    const MultiStreamOutput output = progrand::run(config, samples);
    const std::uint32_t max_threshold =
        config.sample_width == 32 ? ~std::uint32_t{0}
                                  : (std::uint32_t{1} << config.sample_width) - 1;
    // ramp phase = everything up to the first saturated step (whole run if
    // the schedule never saturates)
    std::size_t saturation_step = output.thresholds.size() - 1;
    for (std::size_t i = 0; i < output.thresholds.size(); ++i) {
        if (output.thresholds[i] == max_threshold) {
            saturation_step = i;
            break;
        }
    }
    if (saturation_step == 0) {
        throw NoOnes("the schedule is saturated from step 0; no ramp phase exists");
    }

    std::vector<std::string> outputs;
    json fits = json::array();
    for (std::size_t s = 0; s < output.bits.size(); ++s) {
        const Sequence bits = to_sequence(output.bits[s]);
        const Sequence curve = cumulative_count_curve(bits);  // NoOnes propagates

        std::string csv = "step,threshold,cumulative_ones,cc_norm\n";
        double running = 0.0;
        for (std::size_t i = 0; i < bits.size(); ++i) {
            running += bits[i];
            csv += std::to_string(i) + "," + std::to_string(output.thresholds[i]) + "," +
                   format_double(running) + "," + format_double(curve[i]) + "\n";
        }
        const std::string name = "dynamic_curve_" + config.streams[s].stream_id + ".csv";
        write_file_atomic(out_dir / name, csv);
        outputs.push_back(name);

        // quadratic fit over the ramp window, both axes normalized to [0, 1]
        // at the saturation step
        double window_ones = 0.0;
        for (std::size_t i = 0; i <= saturation_step; ++i) window_ones += bits[i];
        if (window_ones == 0.0) {
            throw NoOnes("stream " + config.streams[s].stream_id +
                         " emitted no 1's during the ramp phase");
        }
        Sequence t, v;
        double cum = 0.0;
        for (std::size_t i = 0; i <= saturation_step; ++i) {
            cum += bits[i];
            t.push_back(static_cast<double>(i) / static_cast<double>(saturation_step));
            v.push_back(cum / window_ones);
        }
        const QuadraticFit fit = quadratic_fit(t, v);
        json entry;
        entry["stream"] = config.streams[s].stream_id;
        entry["saturation_step"] = saturation_step;
        entry["fit"] = fit_to_json(fit);
        fits.push_back(entry);
    }
    write_file_atomic(out_dir / "dynamic_fit.json", fits.dump(2) + "\n");
    outputs.push_back("dynamic_fit.json");

    json manifest;
    manifest["command"] = "dynamic";
    manifest["arguments"] = arguments;
    manifest["config"] = config_to_json(config);
    manifest["samples"] = samples;
    manifest["outputs"] = outputs;
    write_manifest(out_dir, manifest);
    std::cout << fits.dump(2) << "\n";
    return 0;
}

int run_correlate(const std::vector<std::string>& files, long max_lag_flag,
                  const std::string& out_dir_flag) {
    const fs::path out_dir = resolve_out_dir(out_dir_flag);
    if (files.empty()) throw Error("correlate needs at least one bit file");

    std::vector<Sequence> sequences;
    for (const std::string& f : files) {
        sequences.push_back(to_sequence(read_bit_file(f)));
        if (sequences.back().size() != sequences.front().size()) {
            throw Error("bit files must have equal length; " + f + " has " +
                        std::to_string(sequences.back().size()) + " bits, expected " +
                        std::to_string(sequences.front().size()));
        }
    }
    // surface degenerate inputs up front, naming the file
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        const double first = sequences[i].front();
        bool constant = true;
        for (double v : sequences[i]) {
            if (v != first) {
                constant = false;
                break;
            }
        }
        if (constant) {
            throw ZeroVariance("file " + files[i] + " is constant; correlation is undefined");
        }
    }

    const long max_lag =
        max_lag_flag > 0 ? max_lag_flag : default_max_lag(sequences.front().size());

    json report;
    report["files"] = files;
    report["max_lag"] = max_lag;
    std::string csv = "kind,a,b,lag,value\n";
    json pairs = json::array();
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        for (std::size_t j = i + 1; j < sequences.size(); ++j) {
            const MaxCorrelation best = max_abs_correlation(sequences[i], sequences[j], max_lag);
            json entry;
            entry["a"] = files[i];
            entry["b"] = files[j];
            entry["lag"] = best.lag;
            entry["value"] = best.value;
            pairs.push_back(entry);
            csv += "cross," + files[i] + "," + files[j] + "," + std::to_string(best.lag) + "," +
                   format_double(best.value) + "\n";
        }
    }
    report["cross"] = pairs;
    json autos = json::array();
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        const MaxCorrelation best = max_abs_correlation(sequences[i], sequences[i], max_lag);
        json entry;
        entry["file"] = files[i];
        entry["lag"] = best.lag;
        entry["value"] = best.value;
        autos.push_back(entry);
        csv += "auto," + files[i] + ",," + std::to_string(best.lag) + "," +
               format_double(best.value) + "\n";
    }
    report["auto"] = autos;

    write_file_atomic(out_dir / "correlation.json", report.dump(2) + "\n");
    write_file_atomic(out_dir / "correlation.csv", csv);

    json manifest;
    manifest["command"] = "correlate";
    manifest["arguments"] = {{"files", files}, {"max_lag", max_lag}};
    manifest["outputs"] = {"correlation.json", "correlation.csv"};
    write_manifest(out_dir, manifest);
    std::cout << report.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-stream LFSR PRNG with programmable output statistics"};
    app.require_subcommand(1);

    std::string poly_text;
    std::string poly_out_dir;
    CLI::App* check = app.add_subcommand(
        "check-poly", "report degree, irreducibility, primitivity and (degree <= 24) period");
    check->add_option("polynomial", poly_text, "caret form (x^3+x^2+1) or hex mask (0xd)")
        ->required();
    check->add_option("-o,--out-dir", poly_out_dir, "output directory");

    int cap_n = 0, cap_k = 0, cap_m = 0;
    std::string cap_out_dir;
    CLI::App* cap = app.add_subcommand(
        "capacity", "count of non-shift-equivalent m-bit streams: floor(C(n-1,k-1)/m)");
    cap->add_option("n", cap_n, "LFSR degree")->required();
    cap->add_option("k", cap_k, "taps per XOR")->required();
    cap->add_option("m", cap_m, "sample width in bits")->required();
    cap->add_option("-o,--out-dir", cap_out_dir, "output directory");

    GeneratorOptions gen_opt;
    std::string gen_format = "packed";
    CLI::App* gen = app.add_subcommand("generate", "emit per-stream bit files + threshold trace");
    add_generator_options(gen, gen_opt, "samples per stream (default 100000)");
    gen->add_option("-f,--format", gen_format, "bit file format: packed or ascii")
        ->check(CLI::IsMember({"packed", "ascii"}));

    GeneratorOptions sweep_opt;
    std::vector<std::uint32_t> sweep_thresholds;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "empirical vs theoretical P(1) across fixed thresholds, CSV output");
    add_generator_options(sweep, sweep_opt, "samples per threshold (default 100000)");
    sweep->add_option("-t,--thresholds", sweep_thresholds,
                      "comma list of thresholds, e.g. 27,127,227")
        ->delimiter(',');

    GeneratorOptions dyn_opt;
    CLI::App* dyn = app.add_subcommand(
        "dynamic", "cumulative-count curve and ramp-phase quadratic fit under a moving threshold");
    add_generator_options(dyn, dyn_opt, "run length (default 100000)");

    std::vector<std::string> corr_files;
    long corr_max_lag = 0;
    std::string corr_out_dir;
    CLI::App* corr = app.add_subcommand(
        "correlate", "pairwise max cross-correlation and per-file auto-correlation of bit files");
    corr->add_option("files", corr_files, "bit files (ascii or .bin packed)")->required();
    corr->add_option("--max-lag", corr_max_lag, "lag scan bound (default min(1000, N/10))");
    corr->add_option("-o,--out-dir", corr_out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check_poly(poly_text, poly_out_dir);
        if (cap->parsed()) return run_capacity(cap_n, cap_k, cap_m, cap_out_dir);
        if (gen->parsed()) return run_generate(gen_opt, gen_format);
        if (sweep->parsed()) return run_sweep(sweep_opt, sweep_thresholds);
        if (dyn->parsed()) return run_dynamic(dyn_opt);
        if (corr->parsed()) return run_correlate(corr_files, corr_max_lag, corr_out_dir);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
