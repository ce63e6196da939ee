#include "scalekit/report.hpp"

#include "scalekit/dfa.hpp"
#include "scalekit/dma.hpp"
#include "scalekit/grid.hpp"
#include "scalekit/io.hpp"
#include "scalekit/wavelet.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <ostream>
#include <sstream>

namespace scalekit {

namespace {

std::string sanitize_label(const std::string& label) {
    std::string out = label;
    for (char& c : out)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '.' && c != '-' &&
            c != '_')
            c = '_';
    return out.empty() ? "series" : out;
}

std::string two_dec(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string one_dec(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", v);
    return buf;
}

std::string cycles_cell(const std::vector<double>& periods) {
    if (periods.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < periods.size(); ++i)
        out += (i ? ";" : "") + one_dec(periods[i]);
    return out;
}

struct SeriesArtifacts {
    ReportRow row;
    std::vector<std::pair<std::string, std::string>> files;  // name -> contents
};

SeriesArtifacts analyze_series(const RunConfig& cfg, const RunConfig::Input& input) {
    SeriesArtifacts art;
    ReportRow& row = art.row;
    row.series = input.label;

    const PriceSeries prices = ingest(input.path, input.label);
    const ReturnSeries returns = log_returns(prices);
    const long n = static_cast<long>(returns.size());
    const std::string stem = sanitize_label(input.label);

    row.fit_lo = cfg.fit_min;
    row.fit_hi = cfg.fit_max > 0.0 ? cfg.fit_max : double(std::min<long>(500, n / 4));
    if (!(row.fit_lo < row.fit_hi))
        throw std::runtime_error("series too short for the requested fit range");

    const int grid_max = static_cast<int>(std::min<long>(600, n / 4));
    const std::string provenance =
        "config: dfa_order=" + std::to_string(cfg.dfa_order) +
        " grid_ppd=" + std::to_string(cfg.grid_ppd) +
        " voices_per_octave=" + std::to_string(cfg.voices_per_octave) +
        " fit=" + format_double(row.fit_lo) + ".." + format_double(row.fit_hi);

    // detrending estimators
    const ScaleGrid dfa_grid{std::max(4, cfg.dfa_order + 2), grid_max, cfg.grid_ppd};
    const ScalingFunction f_dfa = dfa_fluctuation(returns, cfg.dfa_order, dfa_grid);
    const ScaleGrid dma_grid{3, grid_max, cfg.grid_ppd};
    const ScalingFunction f_dma = dma_fluctuation(returns, dma_grid);

    // wavelet scalegrams, low and high order on a shared grid
    const std::vector<double> wscales =
        log_spaced_scales(4.0, double(grid_max), cfg.voices_per_octave);
    const WaveletSpec low_spec{cfg.dog_low, 8.0, false};
    const WaveletSpec high_spec{cfg.dog_high, 8.0, false};
    const ScalingFunction sg_low = scalegram(cwt(returns, low_spec, wscales));
    const ScalingFunction sg_high = scalegram(cwt(returns, high_spec, wscales));

    row.alpha = fit_exponent(f_dfa, row.fit_lo, row.fit_hi);
    row.hurst = fit_exponent(f_dma, row.fit_lo, row.fit_hi);
    row.beta = fit_exponent(sg_low, row.fit_lo, row.fit_hi);

    // sliding-window local exponents
    const HurstTrack track = td_dma(returns, cfg.td);
    row.mean_h = track.mean_h;
    row.valid_fraction = track.valid_fraction;

    // periodic-like trends plus the detrending-curve crossover signature
    CycleReport cycles = detect_cycles(sg_high, sg_low, cfg.cycle_prominence);
    try {
        cycles.crossover_scales =
            detect_crossovers(f_dfa, cfg.crossover_window, cfg.crossover_delta);
    } catch (const std::invalid_argument&) {
        // grid too short for the crossover window; leave the list empty
    }
    for (const DetectedCycle& c : cycles.detected_periods)
        row.cycle_periods.push_back(c.period);

    const auto sf_file = [&](const ScalingFunction& sf, const std::string& suffix) {
        std::ostringstream os;
        write_scaling_function(os, sf, {provenance});
        art.files.emplace_back(stem + "_" + suffix + ".csv", os.str());
    };
    sf_file(f_dfa, "dfa");
    sf_file(f_dma, "dma");
    sf_file(sg_low, "dog" + std::to_string(cfg.dog_low));
    sf_file(sg_high, "dog" + std::to_string(cfg.dog_high));
    sf_file(rescale_scalegram(sg_low),
            "dog" + std::to_string(cfg.dog_low) + "_rescaled");
    {
        std::ostringstream os;
        write_hurst_track(os, track);
        art.files.emplace_back(stem + "_hurst_track.csv", os.str());
    }
    {
        std::ostringstream os;
        write_cycle_report(os, cycles);
        art.files.emplace_back(stem + "_cycles.csv", os.str());
    }

    row.ok = true;
    return art;
}

}  // namespace

std::string render_report_table(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    const char* fmt = "%-16s %-11s %-7s %-7s %-7s %-14s %s\n";
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, "series", "fit range", "alpha", "H", "<H>",
                  "(beta) b->a", "cycles");
    os << buf;
    for (const ReportRow& r : rows) {
        if (!r.ok) {
            std::snprintf(buf, sizeof buf, "%-16s FAILED: %s\n", r.series.c_str(),
                          r.error.c_str());
            os << buf;
            continue;
        }
        const std::string range =
            format_double(r.fit_lo) + "-" + format_double(r.fit_hi);
        const std::string beta_cell =
            "(" + two_dec(r.beta->exponent) + ") " +
            two_dec(beta_to_alpha(r.beta->exponent));
        std::snprintf(buf, sizeof buf, fmt, r.series.c_str(), range.c_str(),
                      two_dec(r.alpha->exponent).c_str(),
                      two_dec(r.hurst->exponent).c_str(), two_dec(r.mean_h).c_str(),
                      beta_cell.c_str(), cycles_cell(r.cycle_periods).c_str());
        os << buf;
    }
    return os.str();
}

std::string render_report_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream os;
    os << "series,status,fit_lo,fit_hi,alpha,alpha_stderr,h,h_stderr,mean_h,"
          "valid_fraction,beta,beta_stderr,alpha_from_beta,cycle_periods\n";
    for (const ReportRow& r : rows) {
        os << r.series << ',';
        if (!r.ok) {
            std::string msg = r.error;
            std::replace(msg.begin(), msg.end(), ',', ';');
            os << "failed: " << msg << ",,,,,,,,,,,,\n";
            continue;
        }
        os << "ok," << format_double(r.fit_lo) << ',' << format_double(r.fit_hi)
           << ',' << format_double(r.alpha->exponent) << ','
           << format_double(r.alpha->slope_stderr) << ','
           << format_double(r.hurst->exponent) << ','
           << format_double(r.hurst->slope_stderr) << ','
           << format_double(r.mean_h) << ',' << format_double(r.valid_fraction)
           << ',' << format_double(r.beta->exponent) << ','
           << format_double(r.beta->slope_stderr) << ','
           << format_double(beta_to_alpha(r.beta->exponent)) << ','
           << cycles_cell(r.cycle_periods) << '\n';
    }
    return os.str();
}

std::vector<ReportRow> run_report(const RunConfig& cfg, std::ostream& table_out,
                                  std::ostream& diag) {
    std::filesystem::create_directories(cfg.out_dir);
    std::vector<ReportRow> rows;
    rows.reserve(cfg.inputs.size());
    for (const RunConfig::Input& input : cfg.inputs) {
        try {
            SeriesArtifacts art = analyze_series(cfg, input);
            for (const auto& [name, contents] : art.files)
                write_file((std::filesystem::path(cfg.out_dir) / name).string(),
                           contents);
            rows.push_back(std::move(art.row));
        } catch (const std::exception& e) {
            ReportRow row;
            row.series = input.label;
            row.ok = false;
            row.error = e.what();
            diag << "error: " << input.label << ": " << e.what() << '\n';
            rows.push_back(std::move(row));
        }
    }
    const std::string table = render_report_table(rows);
    table_out << table;
    write_file((std::filesystem::path(cfg.out_dir) / "report.txt").string(), table);
    write_file((std::filesystem::path(cfg.out_dir) / "report.csv").string(),
               render_report_csv(rows));
    return rows;
}

}  // namespace scalekit
