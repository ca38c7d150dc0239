#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xxzsim/sweep.hpp"

namespace {

// exit codes: 0 ok, 2 usage/parse, 3 numeric/domain, 4 I/O
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitIo = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw xxzsim::io_error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw xxzsim::io_error("read failed for '" + path + "'");
    return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Time-series sweeps of entanglement, coherence, entropic uncertainty, entropy and "
        "fidelity for a thermal two-qubit XXZ pair under a classical dephasing field with "
        "static disorder."};

    std::string preset, config_path, out_path, format;
    double tmax = 0.0;
    int steps = 0;
    std::vector<std::string> overrides;
    bool list_presets = false;

    auto* preset_opt = app.add_option("--preset", preset, "built-in figure preset (see --list-presets)");
    auto* config_opt = app.add_option("--config", config_path, "sweep configuration file");
    preset_opt->excludes(config_opt);
    app.add_option("--out", out_path, "output path (default: standard output)");
    auto* format_opt = app.add_option("--format", format, "output format (default: csv)")
                           ->check(CLI::IsMember({"csv", "json"}));
    auto* tmax_opt = app.add_option("--tmax", tmax, "override the end of the time grid");
    auto* steps_opt = app.add_option("--steps", steps, "override the number of grid points");
    app.add_option("--set", overrides, "override one parameter, e.g. --set channel.delta_o=5")
        ->take_all();
    app.add_flag("--list-presets", list_presets, "list preset names and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (list_presets) {
            for (const std::string& name : xxzsim::preset_names()) std::cout << name << '\n';
            return 0;
        }
        if (preset.empty() == config_path.empty()) {
            std::cerr << "exactly one of --preset or --config is required (see --help)\n";
            return kExitUsage;
        }

        std::string notes;
        xxzsim::SweepSpec spec = preset.empty() ? xxzsim::parse_config(read_file(config_path))
                                                : xxzsim::preset_spec(preset, &notes);
        for (const std::string& assignment : overrides) xxzsim::apply_override(spec, assignment);
        if (*tmax_opt) {
            spec.t_max = tmax;
            xxzsim::validate_spec(spec);
        }
        if (*steps_opt) {
            spec.steps = steps;
            xxzsim::validate_spec(spec);
        }

        xxzsim::OutputFormat fmt = spec.format;
        if (*format_opt)
            fmt = format == "json" ? xxzsim::OutputFormat::Json : xxzsim::OutputFormat::Csv;

        xxzsim::Dataset data = xxzsim::run_timeseries(spec);
        data.preset = preset;
        data.notes = notes;

        if (out_path.empty()) {
            xxzsim::emit_table(data, fmt, std::cout);
        } else {
            xxzsim::emit_table(data, fmt, out_path);
        }
        return 0;
    } catch (const xxzsim::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const xxzsim::io_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const xxzsim::numeric_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}
