#include "xxzsim/sweep.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "xxzsim/measures.hpp"

namespace xxzsim {

namespace {

constexpr const char* kVariedNames[] = {"Delta_Q", "lambda", "T", "K_z",
                                        "B",       "D_z",    "delta_z", "J"};

bool is_varied_name(const std::string& s) {
    for (const char* n : kVariedNames)
        if (s == n) return true;
    return false;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t pos = 0;
    while (pos <= s.size()) {
        const size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            break;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

double parse_double(const std::string& value, int line, const std::string& key) {
    const std::string v = trim(value);
    double out = 0.0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw parse_error(line, key, "expected a number, got '" + v + "'");
    if (!std::isfinite(out)) throw parse_error(line, key, "value must be finite");
    return out;
}

int parse_int(const std::string& value, int line, const std::string& key) {
    const std::string v = trim(value);
    int out = 0;
    const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc{} || res.ptr != v.data() + v.size())
        throw parse_error(line, key, "expected an integer, got '" + v + "'");
    return out;
}

std::vector<double> parse_value_list(const std::string& value, int line, const std::string& key) {
    std::vector<double> out;
    for (const std::string& item : split(value, ',')) {
        if (trim(item).empty()) throw parse_error(line, key, "empty entry in value list");
        out.push_back(parse_double(item, line, key));
    }
    if (out.empty()) throw parse_error(line, key, "value list is empty");
    return out;
}

Measure measure_from_name(const std::string& name, int line, const std::string& key) {
    if (name == "NG") return Measure::NG;
    if (name == "EU") return Measure::EU;
    if (name == "LC") return Measure::LC;
    if (name == "EN") return Measure::EN;
    if (name == "FID1") return Measure::FID1;
    if (name == "FID2") return Measure::FID2;
    throw parse_error(line, key, "unknown measure '" + name + "'");
}

std::vector<Measure> parse_measures(const std::string& value, int line, const std::string& key) {
    std::vector<Measure> out;
    for (const std::string& item : split(value, ',')) {
        const std::string name = trim(item);
        if (name.empty()) throw parse_error(line, key, "empty entry in measure list");
        const Measure m = measure_from_name(name, line, key);
        bool seen = false;
        for (Measure have : out) seen = seen || have == m;
        if (!seen) out.push_back(m);
    }
    if (out.empty()) throw parse_error(line, key, "measure list is empty");
    return out;
}

enum class Section { None, Spin, Channel, Sweep };

Section section_of_key(const std::string& key) {
    if (key == "J" || key == "delta_z" || key == "D_z" || key == "K_z" || key == "B" || key == "T")
        return Section::Spin;
    if (key == "lambda" || key == "Delta_Q" || key == "delta_o" || key == "epsilon")
        return Section::Channel;
    if (key == "varied" || key == "values" || key == "t_max" || key == "steps" ||
        key == "measures" || key == "format")
        return Section::Sweep;
    return Section::None;
}

const char* section_name(Section s) {
    switch (s) {
        case Section::Spin: return "spin";
        case Section::Channel: return "channel";
        case Section::Sweep: return "sweep";
        default: return "";
    }
}

void apply_statement(SweepSpec& spec, Section section, const std::string& key,
                     const std::string& value, int line) {
    const Section home = section_of_key(key);
    if (home == Section::None) throw parse_error(line, key, "unknown key '" + key + "'");
    if (section != Section::None && section != home)
        throw parse_error(line, key, "key '" + key + "' does not belong to section [" +
                                         section_name(section) + "]");

    if (key == "J") spec.spin.J = parse_double(value, line, key);
    else if (key == "delta_z") spec.spin.delta_z = parse_double(value, line, key);
    else if (key == "D_z") spec.spin.D_z = parse_double(value, line, key);
    else if (key == "K_z") spec.spin.K_z = parse_double(value, line, key);
    else if (key == "B") spec.spin.B = parse_double(value, line, key);
    else if (key == "T") spec.spin.T = parse_double(value, line, key);
    else if (key == "lambda") spec.channel.lambda = parse_double(value, line, key);
    else if (key == "Delta_Q") spec.channel.Delta_Q = parse_double(value, line, key);
    else if (key == "delta_o") spec.channel.delta_o = parse_double(value, line, key);
    else if (key == "epsilon") spec.channel.epsilon = parse_double(value, line, key);
    else if (key == "varied") {
        const std::string name = trim(value);
        if (!is_varied_name(name))
            throw parse_error(line, key, "unknown parameter '" + name + "'");
        spec.varied = name;
    } else if (key == "values") spec.values = parse_value_list(value, line, key);
    else if (key == "t_max") spec.t_max = parse_double(value, line, key);
    else if (key == "steps") spec.steps = parse_int(value, line, key);
    else if (key == "measures") spec.measures = parse_measures(value, line, key);
    else if (key == "format") {
        const std::string f = trim(value);
        if (f == "csv") spec.format = OutputFormat::Csv;
        else if (f == "json") spec.format = OutputFormat::Json;
        else throw parse_error(line, key, "format must be csv or json");
    }
}

void substitute_varied(SpinParams& sp, ChannelParams& ch, const std::string& name, double v) {
    if (name == "Delta_Q") ch.Delta_Q = v;
    else if (name == "lambda") ch.lambda = v;
    else if (name == "T") sp.T = v;
    else if (name == "K_z") sp.K_z = v;
    else if (name == "B") sp.B = v;
    else if (name == "D_z") sp.D_z = v;
    else if (name == "delta_z") sp.delta_z = v;
    else if (name == "J") sp.J = v;
    else throw std::invalid_argument("unknown varied parameter '" + name + "'");
}

bool wants(const SweepSpec& spec, Measure m) {
    for (Measure have : spec.measures)
        if (have == m) return true;
    return false;
}

std::string csv_field(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string{};
}

void emit_csv(const Dataset& d, std::ostream& os) {
    os << "varied,varied_value,t,NG,EU,LC,EN,FID1,FID2\n";
    for (const Dataset::Row& row : d.rows) {
        os << d.spec.varied << ',' << format_double(row.varied_value) << ','
           << format_double(row.rec.t) << ',' << csv_field(row.rec.ng) << ','
           << csv_field(row.rec.eu) << ',' << csv_field(row.rec.lc) << ','
           << csv_field(row.rec.en) << ',' << csv_field(row.rec.fid1) << ','
           << csv_field(row.rec.fid2) << '\n';
    }
}

void emit_json(const Dataset& d, std::ostream& os) {
    using json = nlohmann::ordered_json;
    json meta;
    meta["version"] = kVersion;
    if (!d.preset.empty()) meta["preset"] = d.preset;
    meta["varied"] = d.spec.varied;
    meta["values"] = d.spec.values;
    meta["t_max"] = d.spec.t_max;
    meta["steps"] = d.spec.steps;
    json measures = json::array();
    for (Measure m : d.spec.measures) measures.push_back(measure_name(m));
    meta["measures"] = measures;
    meta["spin"] = {{"J", d.spec.spin.J},     {"delta_z", d.spec.spin.delta_z},
                    {"D_z", d.spec.spin.D_z}, {"K_z", d.spec.spin.K_z},
                    {"B", d.spec.spin.B},     {"T", d.spec.spin.T}};
    meta["channel"] = {{"lambda", d.spec.channel.lambda},
                       {"Delta_Q", d.spec.channel.Delta_Q},
                       {"delta_o", d.spec.channel.delta_o},
                       {"epsilon", d.spec.channel.epsilon}};
    if (!d.notes.empty()) meta["notes"] = d.notes;

    json rows = json::array();
    for (const Dataset::Row& row : d.rows) {
        json r;
        r["varied_value"] = row.varied_value;
        r["t"] = row.rec.t;
        if (row.rec.ng) r["NG"] = *row.rec.ng;
        if (row.rec.eu) r["EU"] = *row.rec.eu;
        if (row.rec.lc) r["LC"] = *row.rec.lc;
        if (row.rec.en) r["EN"] = *row.rec.en;
        if (row.rec.fid1) r["FID1"] = *row.rec.fid1;
        if (row.rec.fid2) r["FID2"] = *row.rec.fid2;
        rows.push_back(std::move(r));
    }

    json doc;
    doc["metadata"] = std::move(meta);
    doc["rows"] = std::move(rows);
    os << doc.dump(2) << '\n';
}

}  // namespace

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::NG: return "NG";
        case Measure::EU: return "EU";
        case Measure::LC: return "LC";
        case Measure::EN: return "EN";
        case Measure::FID1: return "FID1";
        case Measure::FID2: return "FID2";
    }
    return "?";
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

void validate_spec(const SweepSpec& spec) {
    if (!is_varied_name(spec.varied))
        throw parse_error(0, "varied", "unknown parameter '" + spec.varied + "'");
    if (spec.values.empty()) throw parse_error(0, "values", "value list is empty");
    for (double v : spec.values)
        if (!std::isfinite(v)) throw parse_error(0, "values", "values must be finite");
    if (!(spec.t_max > 0.0)) throw parse_error(0, "t_max", "t_max must be positive");
    if (spec.steps < 2) throw parse_error(0, "steps", "steps must be at least 2");
    if (spec.measures.empty()) throw parse_error(0, "measures", "measure list is empty");
    if (spec.channel.Delta_Q < 0.0)
        throw parse_error(0, "Delta_Q", "Delta_Q must be non-negative");
}

SweepSpec parse_config(const std::string& text) {
    SweepSpec spec;
    Section section = Section::None;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        for (const std::string& piece : split(raw, ';')) {
            const std::string stmt = trim(piece);
            if (stmt.empty()) continue;
            if (stmt.front() == '[') {
                if (stmt.back() != ']')
                    throw parse_error(line_no, stmt, "malformed section header");
                const std::string name = trim(stmt.substr(1, stmt.size() - 2));
                if (name == "spin") section = Section::Spin;
                else if (name == "channel") section = Section::Channel;
                else if (name == "sweep") section = Section::Sweep;
                else throw parse_error(line_no, name, "unknown section [" + name + "]");
                continue;
            }
            const size_t eq = stmt.find('=');
            if (eq == std::string::npos)
                throw parse_error(line_no, stmt, "expected key = value");
            const std::string key = trim(stmt.substr(0, eq));
            const std::string value = stmt.substr(eq + 1);
            if (key.empty()) throw parse_error(line_no, stmt, "missing key before '='");
            apply_statement(spec, section, key, value, line_no);
        }
    }
    validate_spec(spec);
    return spec;
}

void apply_override(SweepSpec& spec, const std::string& assignment) {
    const size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw parse_error(0, assignment, "override must look like section.key=value");
    const std::string dotted = trim(assignment.substr(0, eq));
    const std::string value = assignment.substr(eq + 1);
    const size_t dot = dotted.find('.');
    if (dot == std::string::npos)
        throw parse_error(0, dotted, "override must name section.key");
    const std::string sec = dotted.substr(0, dot);
    const std::string key = dotted.substr(dot + 1);
    Section section = Section::None;
    if (sec == "spin") section = Section::Spin;
    else if (sec == "channel") section = Section::Channel;
    else if (sec == "sweep") section = Section::Sweep;
    else throw parse_error(0, sec, "unknown section '" + sec + "'");
    apply_statement(spec, section, key, value, 0);
    validate_spec(spec);
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig3", "fig4", "fig5", "fig6", "fig7", "fig8", "fig10a", "fig10b"};
}

SweepSpec preset_spec(const std::string& name, std::string* notes) {
    SweepSpec spec;  // defaults: J = delta_z = D_z = B = 1, K_z = 5, T = 1,
                     // lambda = 1, Delta_Q = 1, delta_o = 1, epsilon = 1
    std::string note =
        "delta_o = 1 and epsilon = 1 are defaults; the NG/EU/LC/EN columns do "
        "not depend on them.";

    if (name == "fig1") {
        spec.channel.lambda = 0.1;
        spec.varied = "Delta_Q";
        spec.values = {1.0, 2.0, 3.0};
        note += " Disorder widths 1, 2, 3.";
    } else if (name == "fig2") {
        spec.channel.Delta_Q = 2.0;
        spec.varied = "lambda";
        spec.values = {0.1, 0.5, 1.0};
        note += " Coupling values span the weak and strong regimes.";
    } else if (name == "fig3") {
        spec.channel.Delta_Q = 2.0;
        spec.channel.lambda = 0.1;
        spec.varied = "T";
        spec.values = {0.1, 1.0, 7.0};
        note += " Temperatures cover the low and high ends.";
    } else if (name == "fig4") {
        spec.channel.Delta_Q = 2.0;
        spec.channel.lambda = 0.1;
        spec.varied = "K_z";
        spec.values = {1.0, 3.0, 5.0};
    } else if (name == "fig5") {
        spec.channel.Delta_Q = 2.0;
        spec.channel.lambda = 0.1;
        spec.varied = "B";
        spec.values = {1.0, 5.0, 9.0};
        note += " Field strengths 1, 5, 9 span the weak-to-strong range.";
    } else if (name == "fig6") {
        spec.channel.Delta_Q = 2.0;
        spec.channel.lambda = 0.1;
        spec.varied = "D_z";
        spec.values = {1.0, 3.5, 5.0, 6.0};
        note += " D_z values include the crossover points 3.5 and 6.";
    } else if (name == "fig7") {
        spec.channel.Delta_Q = 2.0;
        spec.channel.lambda = 0.1;
        spec.varied = "delta_z";
        spec.values = {1.0, 3.5, 6.0};
        note += " Anisotropy values include the crossover points 3.5 and 6.";
    } else if (name == "fig8") {
        spec.channel.Delta_Q = 2.0;
        spec.channel.lambda = 0.1;
        spec.spin.T = 0.5;
        spec.varied = "J";
        spec.values = {-6.0, -4.5, -3.5, -1.0, 1.0, 3.5, 4.5, 6.0};
        note += " Both exchange signs, magnitudes 1, 3.5, 4.5, 6.";
    } else if (name == "fig10a" || name == "fig10b") {
        spec.channel.lambda = 0.1;
        spec.spin.T = 0.5;
        spec.varied = "Delta_Q";
        spec.values = {1.0, 2.0, 5.0};
        spec.measures = {name == "fig10a" ? Measure::FID1 : Measure::FID2};
        note += " Disorder widths 1, 2, 5; fidelity only.";
    } else {
        std::string valid;
        for (const std::string& n : preset_names()) {
            if (!valid.empty()) valid += ", ";
            valid += n;
        }
        throw parse_error(0, name, "unknown preset '" + name + "'; valid presets: " + valid);
    }

    if (notes) *notes = note;
    return spec;
}

Dataset run_timeseries(const SweepSpec& spec) {
    validate_spec(spec);
    Dataset d;
    d.spec = spec;
    d.rows.reserve(spec.values.size() * static_cast<size_t>(spec.steps));

    const bool want_state_measures = wants(spec, Measure::NG) || wants(spec, Measure::EU) ||
                                     wants(spec, Measure::LC) || wants(spec, Measure::EN);
    const bool want_fid1 = wants(spec, Measure::FID1);
    const bool want_fid2 = wants(spec, Measure::FID2);

    for (double v : spec.values) {
        SpinParams sp = spec.spin;
        ChannelParams ch = spec.channel;
        substitute_varied(sp, ch, spec.varied, v);
        XState initial;
        try {
            initial = thermal_state(sp);
            if (ch.Delta_Q < 0.0)
                throw std::invalid_argument("static_average requires Delta_Q >= 0");
        } catch (const std::invalid_argument& e) {
            throw std::domain_error("varied " + spec.varied + " = " + format_double(v) + ": " +
                                    e.what());
        }
        for (int k = 0; k < spec.steps; ++k) {
            const double t = spec.t_max * k / (spec.steps - 1);
            MeasureRecord rec;
            rec.t = t;
            if (want_state_measures) {
                const StateMeasures m = x_state_measures(static_average(initial, ch, t));
                if (wants(spec, Measure::NG)) rec.ng = m.ng;
                if (wants(spec, Measure::EU)) rec.eu = m.eu;
                if (wants(spec, Measure::LC)) rec.lc = m.lc;
                if (wants(spec, Measure::EN)) rec.en = m.en;
            }
            if (want_fid1) rec.fid1 = fidelity_to_initial(sp, ch, t);
            if (want_fid2) rec.fid2 = fidelity_to_bell(sp, ch, t);
            d.rows.push_back({v, rec});
        }
    }
    return d;
}

Dataset run_preset(const std::string& name) {
    std::string notes;
    const SweepSpec spec = preset_spec(name, &notes);
    Dataset d = run_timeseries(spec);
    d.preset = name;
    d.notes = notes;
    return d;
}

void emit_table(const Dataset& d, OutputFormat format, std::ostream& os) {
    if (format == OutputFormat::Csv) emit_csv(d, os);
    else emit_json(d, os);
    if (!os.good()) throw io_error("write failed");
}

void emit_table(const Dataset& d, OutputFormat format, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path + "' for writing");
    try {
        emit_table(d, format, out);
    } catch (const io_error&) {
        throw io_error("write failed for '" + path + "'");
    }
    out.flush();
    if (!out.good()) throw io_error("write failed for '" + path + "'");
}

}  // namespace xxzsim
