#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "xxzsim/channel.hpp"
#include "xxzsim/errors.hpp"
#include "xxzsim/spin_model.hpp"

namespace xxzsim {

inline constexpr const char* kVersion = "0.1.0";

enum class Measure { NG, EU, LC, EN, FID1, FID2 };

enum class OutputFormat { Csv, Json };

/// One time-series run: a time grid, one varied parameter with its value
/// list, the fixed parameters, and the set of measures to evaluate.
struct SweepSpec {
    SpinParams spin;
    ChannelParams channel;
    std::string varied = "Delta_Q";  // one of Delta_Q, lambda, T, K_z, B, D_z, delta_z, J
    std::vector<double> values = {1.0, 2.0, 3.0};
    double t_max = 30.0;
    int steps = 1500;
    std::vector<Measure> measures = {Measure::NG, Measure::EU, Measure::LC, Measure::EN};
    OutputFormat format = OutputFormat::Csv;
};

/// One grid point; absent measures stay disengaged.
struct MeasureRecord {
    double t = 0.0;
    std::optional<double> ng, eu, lc, en, fid1, fid2;
};

struct Dataset {
    SweepSpec spec;      // fully resolved parameters, defaults included
    std::string preset;  // empty when the spec came from a config document
    std::string notes;   // provenance of preset value lists
    struct Row {
        double varied_value;
        MeasureRecord rec;
    };
    std::vector<Row> rows;  // varied value outer, time inner
};

/// Parse a line-oriented `key = value` document with optional [spin],
/// [channel], [sweep] sections, `#` comments and `;` statement separators.
/// Keys are unique across sections, so section headers are optional; inside
/// a section only that section's keys are accepted. Unknown keys, malformed
/// numbers and violated invariants raise parse_error naming line and key.
SweepSpec parse_config(const std::string& text);

/// Apply one `section.key=value` override (the CLI --set flag).
void apply_override(SweepSpec& spec, const std::string& assignment);

/// Check the SweepSpec invariants; throws parse_error on violation.
void validate_spec(const SweepSpec& spec);

std::vector<std::string> preset_names();

/// Sweep specification for one of the built-in figure presets
/// (fig1..fig8, fig10a, fig10b). Unknown names raise parse_error with the
/// list of valid names. The returned notes document value-list choices.
SweepSpec preset_spec(const std::string& name, std::string* notes = nullptr);

Dataset run_timeseries(const SweepSpec& spec);

Dataset run_preset(const std::string& name);

/// CSV: fixed header varied,varied_value,t,NG,EU,LC,EN,FID1,FID2 with empty
/// fields for absent measures. JSON: one object with "metadata" and "rows".
/// Both renderings are byte-deterministic.
void emit_table(const Dataset& d, OutputFormat format, std::ostream& os);
void emit_table(const Dataset& d, OutputFormat format, const std::string& path);

/// Shortest decimal rendering capped at 12 significant digits,
/// locale-independent.
std::string format_double(double v);

std::string measure_name(Measure m);

}  // namespace xxzsim
