#pragma once

#include "scalekit/cycles.hpp"
#include "scalekit/scaling_function.hpp"
#include "scalekit/series.hpp"
#include "scalekit/tddma.hpp"
#include "scalekit/wavelet.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace scalekit {

// Locale-independent shortest-round-trip formatting (std::to_chars).
std::string format_double(double v);
// Scientific notation with 12 significant digits, for data files.
std::string format_sci(double v);

// Reads a `date,close` file: ISO-8601 dates, strictly ascending, positive
// closes. Errors carry the offending line number.
PriceSeries ingest(const std::string& path, const std::string& label);
PriceSeries parse_price_csv(std::istream& in, const std::string& label,
                            const std::string& origin);

void write_price_series(std::ostream& out, const PriceSeries& ps);
void write_return_series(std::ostream& out, const ReturnSeries& rs);

// `scale,value` rows, values in scientific notation; extra_comments are
// emitted as leading `# ` lines after the method header.
void write_scaling_function(std::ostream& out, const ScalingFunction& sf,
                            const std::vector<std::string>& extra_comments = {});
ScalingFunction read_scaling_function(const std::string& path);

// `position,local_h` rows; invalid windows leave the field empty. The
// comment header carries mean_h, valid_fraction, and any config notices.
void write_hurst_track(std::ostream& out, const HurstTrack& track);

// `period,prominence,window_low,window_high` rows; the comment header
// carries the baseline exponent, residual MAD, raw peak scales, and any
// crossover scales supplied by the pipeline.
void write_cycle_report(std::ostream& out, const CycleReport& report);

// Text matrix: header row of translations, first column of scales.
void write_wavelet_field(std::ostream& out, const WaveletField& field);

void write_file(const std::string& path, const std::string& contents);

}  // namespace scalekit
