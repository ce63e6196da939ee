#pragma once

#include "scalekit/cycles.hpp"
#include "scalekit/fit.hpp"
#include "scalekit/tddma.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace scalekit {

// Batch configuration for the full pipeline run.
struct RunConfig {
    struct Input {
        std::string path;
        std::string label;
    };
    std::vector<Input> inputs;
    std::string out_dir = ".";

    int dfa_order = 2;
    int grid_ppd = 40;        // detrending scale grid density
    int voices_per_octave = 16;
    int dog_low = 1;
    int dog_high = 10;
    double fit_min = 10.0;
    double fit_max = 0.0;     // 0 = per-series default min(500, N/4)
    double cycle_prominence = kDefaultCycleProminence;
    int crossover_window = 5;
    double crossover_delta = 0.15;
    TdConfig td;
};

// One consolidated line per input series; every headline number keeps its
// full fit behind it.
struct ReportRow {
    std::string series;
    bool ok = false;
    std::string error;

    double fit_lo = 0.0, fit_hi = 0.0;
    std::optional<ExponentFit> alpha;    // DFA
    std::optional<ExponentFit> hurst;    // cDMA
    std::optional<ExponentFit> beta;     // wavelet scalegram
    double mean_h = 0.0;                 // tdDMA average
    double valid_fraction = 0.0;
    std::vector<double> cycle_periods;   // headline periods
};

// Runs returns -> {DFA, cDMA, DOG scalegrams, tdDMA} -> fits -> cycle
// detection for every input, writes the per-series data files and the
// consolidated table under cfg.out_dir, prints the table to `table_out`,
// and reports per-series errors on `diag` without aborting the batch.
std::vector<ReportRow> run_report(const RunConfig& cfg, std::ostream& table_out,
                                  std::ostream& diag);

std::string render_report_table(const std::vector<ReportRow>& rows);
std::string render_report_csv(const std::vector<ReportRow>& rows);

}  // namespace scalekit
