// scalekit: scaling analysis of daily price series.
//
// Subcommands cover the individual estimators (dfa, dma, wavelet, tddma,
// cycles, fit), synthetic data generation (synth), and the consolidated
// pipeline (report). Exit status: 0 success, 1 any series failed, 2
// configuration error.

#include <CLI11.hpp>

#include "scalekit/dfa.hpp"
#include "scalekit/dma.hpp"
#include "scalekit/grid.hpp"
#include "scalekit/io.hpp"
#include "scalekit/report.hpp"
#include "scalekit/synth.hpp"
#include "scalekit/tddma.hpp"
#include "scalekit/wavelet.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace scalekit;

constexpr int kExitOk = 0;
constexpr int kExitSeriesFailed = 1;
constexpr int kExitConfigError = 2;

std::string default_label(const std::string& path, const std::string& label) {
    if (!label.empty()) return label;
    return std::filesystem::path(path).stem().string();
}

ReturnSeries load_returns(const std::string& path, const std::string& label) {
    return log_returns(ingest(path, default_label(path, label)));
}

void emit(const std::string& out_path, const std::string& contents) {
    if (out_path.empty() || out_path == "-")
        std::cout << contents;
    else
        write_file(out_path, contents);
}

struct CommonOpts {
    std::string input;
    std::string label;
    std::string out;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool input_required = true) {
    auto* in = cmd->add_option("--input", o.input, "input date,close CSV file");
    if (input_required) in->required();
    cmd->add_option("--label", o.label, "series label (default: file stem)");
    cmd->add_option("--out", o.out, "output file ('-' or empty: stdout)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"scaling analysis of daily price time series"};
    app.require_subcommand(1);

    // ---- synth ----------------------------------------------------------
    auto* synth_cmd = app.add_subcommand("synth", "generate a synthetic price series");
    std::string synth_kind = "white";
    SynthSpec synth_spec;
    std::string synth_out;
    long synth_n = 10000;
    synth_cmd->add_option("--kind", synth_kind, "white | fgn | sinusoid")
        ->check(CLI::IsMember({"white", "fgn", "sinusoid"}));
    synth_cmd->add_option("--n", synth_n, "series length (number of returns)");
    synth_cmd->add_option("--seed", synth_spec.seed, "generator seed");
    synth_cmd->add_option("--hurst", synth_spec.h_target, "fgn target exponent in (0,1)");
    synth_cmd->add_option("--period", synth_spec.period, "sinusoid period (samples)");
    synth_cmd->add_option("--amplitude-ratio", synth_spec.amplitude_ratio,
                          "sinusoid amplitude over noise std");
    synth_cmd->add_option("--out", synth_out, "output file ('-' or empty: stdout)");

    // ---- returns --------------------------------------------------------
    auto* returns_cmd = app.add_subcommand("returns", "log-returns of a price series");
    CommonOpts returns_opts;
    add_common(returns_cmd, returns_opts);

    // ---- dfa ------------------------------------------------------------
    auto* dfa_cmd = app.add_subcommand("dfa", "detrended fluctuation function F(n)");
    CommonOpts dfa_opts;
    add_common(dfa_cmd, dfa_opts);
    int dfa_order = 2, dfa_min = 4, dfa_max = 0, dfa_ppd = 40;
    dfa_cmd->add_option("--dfa-order", dfa_order, "detrending polynomial order");
    dfa_cmd->add_option("--min-scale", dfa_min, "smallest segment length");
    dfa_cmd->add_option("--max-scale", dfa_max, "largest segment length (0: N/4)");
    dfa_cmd->add_option("--grid-ppd", dfa_ppd, "grid points per decade");

    // ---- dma ------------------------------------------------------------
    auto* dma_cmd = app.add_subcommand("dma", "centered moving-average fluctuation sigma(n)");
    CommonOpts dma_opts;
    add_common(dma_cmd, dma_opts);
    int dma_min = 3, dma_max = 0, dma_ppd = 40;
    dma_cmd->add_option("--min-scale", dma_min, "smallest window (odd)");
    dma_cmd->add_option("--max-scale", dma_max, "largest window (0: N/4)");
    dma_cmd->add_option("--grid-ppd", dma_ppd, "grid points per decade");

    // ---- wavelet --------------------------------------------------------
    auto* wav_cmd = app.add_subcommand("wavelet", "DOG-wavelet scalegram E_W(a)");
    CommonOpts wav_opts;
    add_common(wav_cmd, wav_opts);
    int dog_order = 1, voices = 16;
    double wav_min = 4.0, wav_max = 0.0;
    bool wav_rescaled = false, wav_coi = false;
    std::string field_out;
    wav_cmd->add_option("--dog-order", dog_order, "derivative-of-Gaussian order");
    wav_cmd->add_option("--min-scale", wav_min, "smallest wavelet scale");
    wav_cmd->add_option("--max-scale", wav_max, "largest wavelet scale (0: N/4)");
    wav_cmd->add_option("--voices", voices, "scales per octave");
    wav_cmd->add_flag("--rescaled", wav_rescaled,
                      "emit sqrt(a*E_W(a)) for slope comparison with DFA/DMA");
    wav_cmd->add_flag("--exclude-coi", wav_coi,
                      "drop edge-affected translations from the scalegram");
    wav_cmd->add_option("--field-out", field_out, "also write the W(a,b) matrix");

    // ---- fit ------------------------------------------------------------
    auto* fit_cmd = app.add_subcommand("fit", "power-law exponent of a scale,value file");
    std::string fit_input;
    double fit_lo = 10.0, fit_hi = 100.0;
    fit_cmd->add_option("--input", fit_input, "scale,value CSV file")->required();
    fit_cmd->add_option("--fit-min", fit_lo, "lower fit bound");
    fit_cmd->add_option("--fit-max", fit_hi, "upper fit bound");

    // ---- tddma ----------------------------------------------------------
    auto* td_cmd = app.add_subcommand("tddma", "sliding-window local Hurst exponents");
    CommonOpts td_opts;
    add_common(td_cmd, td_opts);
    TdConfig td_cfg;
    td_cmd->add_option("--window", td_cfg.window_size, "sliding window size N_s");
    td_cmd->add_option("--step", td_cfg.step, "window step");
    td_cmd->add_option("--scale-lo", td_cfg.scale_lo, "smallest cDMA scale");
    td_cmd->add_option("--scale-hi", td_cfg.scale_hi, "largest cDMA scale");
    td_cmd->add_option("--fit-min", td_cfg.fit_lo, "lower fit bound inside windows");
    td_cmd->add_option("--fit-max", td_cfg.fit_hi, "upper fit bound inside windows");
    td_cmd->add_option("--r2-floor", td_cfg.r2_floor, "minimum r^2 for a valid window");
    td_cmd->add_option("--grid-ppd", td_cfg.points_per_decade, "grid points per decade");

    // ---- cycles ---------------------------------------------------------
    auto* cyc_cmd = app.add_subcommand(
        "cycles", "periodic-like trend detection from DOG scalegrams");
    CommonOpts cyc_opts;
    add_common(cyc_cmd, cyc_opts);
    int cyc_low = 1, cyc_high = 10, cyc_voices = 16;
    double cyc_min = 4.0, cyc_max = 0.0;
    double cyc_prominence = kDefaultCycleProminence;
    cyc_cmd->add_option("--dog-order", cyc_high, "high (magnifying) wavelet order");
    cyc_cmd->add_option("--dog-low", cyc_low, "low-order reference wavelet");
    cyc_cmd->add_option("--voices", cyc_voices, "scales per octave");
    cyc_cmd->add_option("--min-scale", cyc_min, "smallest wavelet scale");
    cyc_cmd->add_option("--max-scale", cyc_max, "largest wavelet scale (0: N/4)");
    cyc_cmd->add_option("--prominence", cyc_prominence,
                        "detection threshold in residual MADs");

    // ---- report ---------------------------------------------------------
    auto* rep_cmd = app.add_subcommand(
        "report", "full pipeline over one or more series, consolidated table");
    RunConfig run_cfg;
    std::vector<std::string> rep_inputs, rep_labels;
    rep_cmd->add_option("--input", rep_inputs, "input CSV (repeatable)")
        ->required()
        ->take_all();
    rep_cmd->add_option("--label", rep_labels, "label per input (repeatable)")
        ->take_all();
    rep_cmd->add_option("--out", run_cfg.out_dir, "output directory")->required();
    rep_cmd->add_option("--dfa-order", run_cfg.dfa_order, "DFA polynomial order");
    rep_cmd->add_option("--grid-ppd", run_cfg.grid_ppd, "detrending grid density");
    rep_cmd->add_option("--voices", run_cfg.voices_per_octave, "wavelet scales per octave");
    rep_cmd->add_option("--dog-order", run_cfg.dog_high, "high wavelet order");
    rep_cmd->add_option("--dog-low", run_cfg.dog_low, "low wavelet order");
    rep_cmd->add_option("--fit-min", run_cfg.fit_min, "lower fit bound");
    rep_cmd->add_option("--fit-max", run_cfg.fit_max,
                        "upper fit bound (0: min(500, N/4) per series)");
    rep_cmd->add_option("--prominence", run_cfg.cycle_prominence,
                        "cycle detection threshold in residual MADs");
    rep_cmd->add_option("--window", run_cfg.td.window_size, "tdDMA window size");
    rep_cmd->add_option("--step", run_cfg.td.step, "tdDMA window step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfigError;
    }

    try {
        if (*synth_cmd) {
            if (synth_n < 64) throw std::invalid_argument("synth: --n must be >= 64");
            synth_spec.length = static_cast<std::size_t>(synth_n);
            synth_spec.kind = synth_kind == "white" ? SynthKind::white
                              : synth_kind == "fgn" ? SynthKind::fgn
                                                    : SynthKind::sinusoid_plus_noise;
            const ReturnSeries rs = generate(synth_spec);
            std::ostringstream os;
            write_price_series(os, to_price_series(rs, rs.source_name));
            emit(synth_out, os.str());
            return kExitOk;
        }

        if (*returns_cmd) {
            const ReturnSeries rs = load_returns(returns_opts.input, returns_opts.label);
            std::ostringstream os;
            write_return_series(os, rs);
            emit(returns_opts.out, os.str());
            return kExitOk;
        }

        if (*dfa_cmd) {
            const ReturnSeries rs = load_returns(dfa_opts.input, dfa_opts.label);
            const int max_scale =
                dfa_max > 0 ? dfa_max : static_cast<int>(rs.size() / 4);
            const ScalingFunction sf = dfa_fluctuation(
                rs, dfa_order, ScaleGrid{dfa_min, max_scale, dfa_ppd});
            std::ostringstream os;
            write_scaling_function(os, sf);
            emit(dfa_opts.out, os.str());
            return kExitOk;
        }

        if (*dma_cmd) {
            const ReturnSeries rs = load_returns(dma_opts.input, dma_opts.label);
            const int max_scale =
                dma_max > 0 ? dma_max : static_cast<int>(rs.size() / 4);
            const ScalingFunction sf =
                dma_fluctuation(rs, ScaleGrid{dma_min, max_scale, dma_ppd});
            std::ostringstream os;
            write_scaling_function(os, sf);
            emit(dma_opts.out, os.str());
            return kExitOk;
        }

        if (*wav_cmd) {
            const ReturnSeries rs = load_returns(wav_opts.input, wav_opts.label);
            const double max_scale = wav_max > 0.0 ? wav_max : double(rs.size() / 4);
            const WaveletSpec spec{dog_order, 8.0, wav_coi};
            const WaveletField field =
                cwt(rs, spec, log_spaced_scales(wav_min, max_scale, voices));
            ScalingFunction sg = scalegram(field);
            if (wav_rescaled) sg = rescale_scalegram(sg);
            std::ostringstream os;
            write_scaling_function(os, sg);
            emit(wav_opts.out, os.str());
            if (!field_out.empty()) {
                std::ostringstream fs;
                write_wavelet_field(fs, field);
                write_file(field_out, fs.str());
            }
            return kExitOk;
        }

        if (*fit_cmd) {
            const ScalingFunction sf = read_scaling_function(fit_input);
            const ExponentFit fit = fit_exponent(sf, fit_lo, fit_hi);
            std::cout << "method=" << method_name(fit.method)
                      << " exponent=" << format_double(fit.exponent)
                      << " stderr=" << format_double(fit.slope_stderr)
                      << " r2=" << format_double(fit.r_squared)
                      << " range=" << format_double(fit.fit_min) << ".."
                      << format_double(fit.fit_max) << " points=" << fit.points
                      << '\n';
            return kExitOk;
        }

        if (*td_cmd) {
            const ReturnSeries rs = load_returns(td_opts.input, td_opts.label);
            const HurstTrack track = td_dma(rs, td_cfg);
            std::ostringstream os;
            write_hurst_track(os, track);
            emit(td_opts.out, os.str());
            return kExitOk;
        }

        if (*cyc_cmd) {
            const ReturnSeries rs = load_returns(cyc_opts.input, cyc_opts.label);
            const double max_scale = cyc_max > 0.0 ? cyc_max : double(rs.size() / 4);
            const std::vector<double> scales =
                log_spaced_scales(cyc_min, max_scale, cyc_voices);
            const ScalingFunction sg_low =
                scalegram(cwt(rs, WaveletSpec{cyc_low, 8.0, false}, scales));
            const ScalingFunction sg_high =
                scalegram(cwt(rs, WaveletSpec{cyc_high, 8.0, false}, scales));
            const CycleReport report = detect_cycles(sg_high, sg_low, cyc_prominence);
            std::ostringstream os;
            write_cycle_report(os, report);
            emit(cyc_opts.out, os.str());
            return kExitOk;
        }

        if (*rep_cmd) {
            if (!rep_labels.empty() && rep_labels.size() != rep_inputs.size())
                throw CLI::ValidationError("--label",
                                           "need one --label per --input or none");
            for (std::size_t i = 0; i < rep_inputs.size(); ++i) {
                const std::string label =
                    i < rep_labels.size() ? rep_labels[i] : std::string();
                run_cfg.inputs.push_back(
                    {rep_inputs[i], default_label(rep_inputs[i], label)});
            }
            const std::vector<ReportRow> rows =
                run_report(run_cfg, std::cout, std::cerr);
            for (const ReportRow& r : rows)
                if (!r.ok) return kExitSeriesFailed;
            return kExitOk;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfigError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitSeriesFailed;
    }
    return kExitConfigError;
}
