#include "scalekit/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace scalekit {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_sci(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::scientific, 11);
    return std::string(buf, res.ptr);
}

namespace {

[[noreturn]] void parse_fail(const std::string& origin, std::size_t line,
                             const std::string& what) {
    throw std::runtime_error(origin + ": line " + std::to_string(line) + ": " + what);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() &&
           (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

bool parse_double(std::string_view s, double& out) {
    const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc{} && res.ptr == s.data() + s.size();
}

bool parse_iso_date(std::string_view s, Date& out) {
    if (s.size() != 10 || s[4] != '-' || s[7] != '-') return false;
    int y = 0;
    unsigned mo = 0, d = 0;
    auto num = [](std::string_view t, auto& v) {
        const auto r = std::from_chars(t.data(), t.data() + t.size(), v);
        return r.ec == std::errc{} && r.ptr == t.data() + t.size();
    };
    if (!num(s.substr(0, 4), y) || !num(s.substr(5, 2), mo) || !num(s.substr(8, 2), d))
        return false;
    const std::chrono::year_month_day ymd{std::chrono::year{y},
                                          std::chrono::month{mo},
                                          std::chrono::day{d}};
    if (!ymd.ok()) return false;
    out = Date{ymd};
    return true;
}

}  // namespace

PriceSeries parse_price_csv(std::istream& in, const std::string& label,
                            const std::string& origin) {
    PriceSeries ps;
    ps.name = label;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = trim(line);
        if (row.empty() || row.front() == '#') continue;
        if (!saw_header) {
            if (row != "date,close")
                parse_fail(origin, lineno, "expected header 'date,close'");
            saw_header = true;
            continue;
        }
        const std::size_t comma = row.find(',');
        if (comma == std::string_view::npos)
            parse_fail(origin, lineno, "expected 'date,close' row");
        Date date;
        if (!parse_iso_date(trim(row.substr(0, comma)), date))
            parse_fail(origin, lineno, "malformed ISO-8601 date");
        double close = 0.0;
        if (!parse_double(trim(row.substr(comma + 1)), close))
            parse_fail(origin, lineno, "malformed close value");
        if (!(close > 0.0) || !std::isfinite(close))
            parse_fail(origin, lineno, "close must be a positive number");
        if (!ps.dates.empty()) {
            if (date == ps.dates.back())
                parse_fail(origin, lineno, "duplicate date " + format_date(date));
            if (date < ps.dates.back())
                parse_fail(origin, lineno, "dates must be strictly ascending");
        }
        ps.dates.push_back(date);
        ps.closes.push_back(close);
    }
    if (!saw_header) throw std::runtime_error(origin + ": empty file");
    validate(ps);
    return ps;
}

PriceSeries ingest(const std::string& path, const std::string& label) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    return parse_price_csv(in, label.empty() ? path : label, path);
}

void write_price_series(std::ostream& out, const PriceSeries& ps) {
    out << "date,close\n";
    for (std::size_t i = 0; i < ps.size(); ++i)
        out << format_date(ps.dates[i]) << ',' << format_sci(ps.closes[i]) << '\n';
}

void write_return_series(std::ostream& out, const ReturnSeries& rs) {
    out << "# series=" << rs.source_name << '\n';
    out << "index,log_return\n";
    for (std::size_t i = 0; i < rs.size(); ++i)
        out << i << ',' << format_sci(rs.values[i]) << '\n';
}

void write_scaling_function(std::ostream& out, const ScalingFunction& sf,
                            const std::vector<std::string>& extra_comments) {
    out << "# method=" << method_name(sf.method) << " order=" << sf.order
        << " series=" << sf.series_name << '\n';
    for (const std::string& c : extra_comments) out << "# " << c << '\n';
    out << "scale,value\n";
    for (std::size_t i = 0; i < sf.size(); ++i)
        out << format_double(sf.scales[i]) << ',' << format_sci(sf.values[i]) << '\n';
}

ScalingFunction read_scaling_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    ScalingFunction sf;
    std::string line;
    std::size_t lineno = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = trim(line);
        if (row.empty()) continue;
        if (row.front() == '#') {
            // best-effort metadata recovery from the writer's header
            const std::string s(row);
            std::istringstream meta(s.substr(1));
            std::string tok;
            while (meta >> tok) {
                if (tok.rfind("method=", 0) == 0) {
                    const std::string name = tok.substr(7);
                    for (Method m : {Method::dfa, Method::cdma, Method::scalegram,
                                     Method::rescaled_scalegram})
                        if (name == method_name(m)) sf.method = m;
                } else if (tok.rfind("order=", 0) == 0) {
                    sf.order = std::atoi(tok.c_str() + 6);
                } else if (tok.rfind("series=", 0) == 0) {
                    sf.series_name = tok.substr(7);
                }
            }
            continue;
        }
        if (!saw_header) {
            if (row != "scale,value")
                parse_fail(path, lineno, "expected header 'scale,value'");
            saw_header = true;
            continue;
        }
        const std::size_t comma = row.find(',');
        if (comma == std::string_view::npos)
            parse_fail(path, lineno, "expected 'scale,value' row");
        double scale = 0.0, value = 0.0;
        if (!parse_double(trim(row.substr(0, comma)), scale) ||
            !parse_double(trim(row.substr(comma + 1)), value))
            parse_fail(path, lineno, "malformed number");
        sf.scales.push_back(scale);
        sf.values.push_back(value);
    }
    validate(sf);
    return sf;
}

void write_hurst_track(std::ostream& out, const HurstTrack& track) {
    out << "# mean_h=" << format_double(track.mean_h)
        << " valid_fraction=" << format_double(track.valid_fraction) << '\n';
    for (const std::string& n : track.notes) out << "# note: " << n << '\n';
    out << "position,local_h\n";
    for (std::size_t i = 0; i < track.positions.size(); ++i) {
        out << track.positions[i] << ',';
        if (!std::isnan(track.local_h[i])) out << format_sci(track.local_h[i]);
        out << '\n';
    }
}

void write_cycle_report(std::ostream& out, const CycleReport& report) {
    out << "# baseline_exponent=" << format_double(report.baseline.exponent)
        << " baseline_stderr=" << format_double(report.baseline.slope_stderr)
        << " residual_mad=" << format_double(report.residual_mad) << '\n';
    if (!report.crossover_scales.empty()) {
        out << "# crossover_scales=";
        for (std::size_t i = 0; i < report.crossover_scales.size(); ++i)
            out << (i ? ";" : "") << format_double(report.crossover_scales[i]);
        out << '\n';
    }
    for (const DetectedCycle& c : report.detected_periods)
        out << "# cycle raw_scale=" << format_double(c.scale)
            << " low_order_prominence=" << format_double(c.low_order_prominence)
            << '\n';
    out << "period,prominence,window_low,window_high\n";
    for (const DetectedCycle& c : report.detected_periods)
        out << format_double(c.period) << ',' << format_double(c.prominence) << ','
            << format_double(c.window_low) << ',' << format_double(c.window_high)
            << '\n';
}

void write_wavelet_field(std::ostream& out, const WaveletField& field) {
    out << "scale\\translation";
    for (std::size_t b = 0; b < field.translations; ++b) out << ',' << b;
    out << '\n';
    for (std::size_t s = 0; s < field.scales.size(); ++s) {
        out << format_double(field.scales[s]);
        for (std::size_t b = 0; b < field.translations; ++b)
            out << ',' << format_sci(field.coefficients[s][b]);
        out << '\n';
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << contents;
    if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace scalekit
