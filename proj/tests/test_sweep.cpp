#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "xxzsim/measures.hpp"
#include "xxzsim/sweep.hpp"

using namespace xxzsim;

namespace {

std::string emit_to_string(const Dataset& d, OutputFormat f) {
    std::ostringstream os;
    emit_table(d, f, os);
    return os.str();
}

}  // namespace

TEST_CASE("empty config yields the documented defaults") {
    const SweepSpec spec = parse_config("");
    CHECK(spec.varied == "Delta_Q");
    CHECK(spec.values == std::vector<double>{1.0, 2.0, 3.0});
    CHECK(spec.t_max == 30.0);
    CHECK(spec.steps == 1500);
    CHECK(spec.spin.J == 1.0);
    CHECK(spec.spin.delta_z == 1.0);
    CHECK(spec.spin.D_z == 1.0);
    CHECK(spec.spin.K_z == 5.0);
    CHECK(spec.spin.B == 1.0);
    CHECK(spec.spin.T == 1.0);
    CHECK(spec.channel.lambda == 1.0);
    CHECK(spec.channel.Delta_Q == 1.0);
    CHECK(spec.channel.delta_o == 1.0);
    CHECK(spec.channel.epsilon == 1.0);
    CHECK(spec.measures ==
          std::vector<Measure>{Measure::NG, Measure::EU, Measure::LC, Measure::EN});
    CHECK(spec.format == OutputFormat::Csv);
}

TEST_CASE("config statements") {
    SUBCASE("semicolon-separated assignments without sections") {
        const SweepSpec spec = parse_config("varied = K_z; values = 1, 3, 5");
        CHECK(spec.varied == "K_z");
        CHECK(spec.values == std::vector<double>{1.0, 3.0, 5.0});
    }
    SUBCASE("sections, comments and blank lines") {
        const std::string text =
            "# sweep over the coupling\n"
            "[channel]\n"
            "lambda = 0.1\n"
            "Delta_Q = 2   # fixed width\n"
            "\n"
            "[sweep]\n"
            "varied = T\n"
            "values = 0.1, 1, 7\n"
            "steps = 100\n"
            "format = json\n";
        const SweepSpec spec = parse_config(text);
        CHECK(spec.channel.lambda == 0.1);
        CHECK(spec.channel.Delta_Q == 2.0);
        CHECK(spec.varied == "T");
        CHECK(spec.steps == 100);
        CHECK(spec.format == OutputFormat::Json);
    }
}

TEST_CASE("config rejection paths name line and key") {
    SUBCASE("unknown varied parameter") {
        CHECK_THROWS_WITH_AS(parse_config("varied = Q_z"),
                             doctest::Contains("unknown parameter 'Q_z'"), parse_error);
    }
    SUBCASE("unknown key") {
        try {
            parse_config("J = 1\nQ_z = 3\n");
            FAIL("expected parse_error");
        } catch (const parse_error& e) {
            CHECK(e.line() == 2);
            CHECK(e.key() == "Q_z");
        }
    }
    SUBCASE("non-numeric value") {
        CHECK_THROWS_AS(parse_config("J = fast"), parse_error);
    }
    SUBCASE("key outside its section") {
        CHECK_THROWS_WITH_AS(parse_config("[spin]\nlambda = 1\n"),
                             doctest::Contains("does not belong"), parse_error);
    }
    SUBCASE("unknown section") {
        CHECK_THROWS_AS(parse_config("[field]\nB = 2\n"), parse_error);
    }
    SUBCASE("violated invariants") {
        CHECK_THROWS_AS(parse_config("steps = 1"), parse_error);
        CHECK_THROWS_AS(parse_config("t_max = 0"), parse_error);
        CHECK_THROWS_AS(parse_config("values = "), parse_error);
        CHECK_THROWS_AS(parse_config("measures = NG, XX"), parse_error);
        CHECK_THROWS_AS(parse_config("Delta_Q = -1"), parse_error);
    }
}

TEST_CASE("overrides") {
    SweepSpec spec = parse_config("");
    apply_override(spec, "channel.delta_o=5");
    CHECK(spec.channel.delta_o == 5.0);
    apply_override(spec, "spin.K_z=3");
    CHECK(spec.spin.K_z == 3.0);
    apply_override(spec, "sweep.steps=10");
    CHECK(spec.steps == 10);
    CHECK_THROWS_AS(apply_override(spec, "spin.K_z"), parse_error);
    CHECK_THROWS_AS(apply_override(spec, "K_z=3"), parse_error);
    CHECK_THROWS_AS(apply_override(spec, "bath.K_z=3"), parse_error);
    CHECK_THROWS_AS(apply_override(spec, "channel.J=3"), parse_error);
}

TEST_CASE("time series layout and the t = 0 row") {
    SweepSpec spec = parse_config("steps = 2; t_max = 1; values = 2");
    const Dataset d = run_timeseries(spec);
    REQUIRE(d.rows.size() == 2);
    CHECK(d.rows[0].rec.t == 0.0);
    CHECK(d.rows[1].rec.t == 1.0);

    // at t = 0 the state is the plain thermal state
    const double ng0 = negativity(thermal_state(spec.spin).to_density_matrix());
    CHECK(*d.rows[0].rec.ng == testutil::near(ng0, 1e-12));
}

TEST_CASE("rows are ordered varied-outer, time strictly increasing") {
    SweepSpec spec = parse_config("steps = 4; t_max = 2; values = 1, 2");
    const Dataset d = run_timeseries(spec);
    REQUIRE(d.rows.size() == 8);
    for (size_t i = 0; i < 4; ++i) CHECK(d.rows[i].varied_value == 1.0);
    for (size_t i = 4; i < 8; ++i) CHECK(d.rows[i].varied_value == 2.0);
    for (size_t i = 1; i < 4; ++i) CHECK(d.rows[i].rec.t > d.rows[i - 1].rec.t);
}

TEST_CASE("domain errors identify the varied value") {
    SweepSpec spec = parse_config("varied = T; values = 1, -3; steps = 2");
    CHECK_THROWS_WITH_AS(run_timeseries(spec), doctest::Contains("varied T = -3"),
                         std::domain_error);
}

TEST_CASE("presets") {
    SUBCASE("fig1 pins the caption parameters") {
        const SweepSpec spec = preset_spec("fig1");
        CHECK(spec.channel.lambda == 0.1);
        CHECK(spec.spin.K_z == 5.0);
        CHECK(spec.varied == "Delta_Q");
        CHECK(spec.channel.delta_o == 1.0);
        CHECK(spec.channel.epsilon == 1.0);
    }
    SUBCASE("fig8 sweeps both exchange signs") {
        const SweepSpec spec = preset_spec("fig8");
        CHECK(spec.varied == "J");
        CHECK(spec.spin.T == 0.5);
        bool has_minus6 = false, has_plus6 = false;
        for (double v : spec.values) {
            has_minus6 = has_minus6 || v == -6.0;
            has_plus6 = has_plus6 || v == 6.0;
        }
        CHECK(has_minus6);
        CHECK(has_plus6);
    }
    SUBCASE("fig10 presets are fidelity-only") {
        CHECK(preset_spec("fig10a").measures == std::vector<Measure>{Measure::FID1});
        CHECK(preset_spec("fig10b").measures == std::vector<Measure>{Measure::FID2});
        CHECK(preset_spec("fig10a").spin.T == 0.5);
    }
    SUBCASE("unknown preset lists the valid names") {
        CHECK_THROWS_WITH_AS(preset_spec("fig99"), doctest::Contains("fig10b"), parse_error);
    }
    SUBCASE("there are ten presets") { CHECK(preset_names().size() == 10); }
}

TEST_CASE("records stay inside the measure ranges on a preset grid") {
    SweepSpec spec = preset_spec("fig1");
    spec.steps = 120;
    spec.measures = {Measure::NG, Measure::EU, Measure::LC, Measure::EN,
                     Measure::FID1, Measure::FID2};
    const Dataset d = run_timeseries(spec);
    REQUIRE(d.rows.size() == 3 * 120);
    for (const Dataset::Row& row : d.rows) {
        CHECK(*row.rec.ng >= -1e-12);
        CHECK(*row.rec.ng <= 1.0 + 1e-12);
        CHECK(*row.rec.lc >= 0.0);
        CHECK(*row.rec.eu >= -1e-9);
        CHECK(*row.rec.eu <= 2.0 + 1e-9);
        CHECK(*row.rec.en >= -1e-12);
        CHECK(*row.rec.en <= 2.0 + 1e-12);
        CHECK(std::isfinite(*row.rec.fid1));
        CHECK(std::isfinite(*row.rec.fid2));
    }
}

TEST_CASE("csv rendering") {
    SweepSpec spec = parse_config("steps = 2; t_max = 1; values = 2; measures = NG, EN");
    const Dataset d = run_timeseries(spec);
    const std::string csv = emit_to_string(d, OutputFormat::Csv);

    std::istringstream lines(csv);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "varied,varied_value,t,NG,EU,LC,EN,FID1,FID2");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        // EU, LC, FID1, FID2 were not requested: empty fields
        CHECK(line.find(",,") != std::string::npos);
        CHECK(line.substr(0, 8) == "Delta_Q,");
        CHECK(line.back() == ',');  // FID2 column is empty
        CHECK(std::count(line.begin(), line.end(), ',') == 8);
    }
    CHECK(rows == 2);

    SUBCASE("repeated emission is byte-identical") {
        CHECK(emit_to_string(d, OutputFormat::Csv) == csv);
        CHECK(emit_to_string(run_timeseries(spec), OutputFormat::Csv) == csv);
    }
}

TEST_CASE("numeric rendering is capped at 12 significant digits") {
    CHECK(format_double(0.0) == "0");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(-2.5) == "-2.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(30.0 / 1499.0) == "0.0200133422282");  // 12 significant digits
}

TEST_CASE("json rendering round-trips every row value exactly") {
    SweepSpec spec = parse_config("steps = 5; t_max = 3; values = 1, 2; measures = NG, EU, LC, EN");
    spec.channel.lambda = 0.1;
    Dataset d = run_timeseries(spec);
    d.preset = "fig1";
    d.notes = "check";
    const std::string text = emit_to_string(d, OutputFormat::Json);

    const nlohmann::json doc = nlohmann::json::parse(text);
    CHECK(doc.at("metadata").at("preset") == "fig1");
    CHECK(doc.at("metadata").at("channel").at("lambda").get<double>() == 0.1);
    CHECK(doc.at("metadata").at("steps").get<int>() == 5);
    const auto& rows = doc.at("rows");
    REQUIRE(rows.size() == d.rows.size());
    for (size_t i = 0; i < d.rows.size(); ++i) {
        CHECK(rows[i].at("t").get<double>() == d.rows[i].rec.t);
        CHECK(rows[i].at("varied_value").get<double>() == d.rows[i].varied_value);
        CHECK(rows[i].at("NG").get<double>() == *d.rows[i].rec.ng);
        CHECK(rows[i].at("EU").get<double>() == *d.rows[i].rec.eu);
        CHECK(rows[i].at("LC").get<double>() == *d.rows[i].rec.lc);
        CHECK(rows[i].at("EN").get<double>() == *d.rows[i].rec.en);
    }

    CHECK(emit_to_string(d, OutputFormat::Json) == text);
}

TEST_CASE("file emission") {
    SweepSpec spec = parse_config("steps = 2; t_max = 1; values = 1");
    const Dataset d = run_timeseries(spec);

    const auto path = std::filesystem::temp_directory_path() / "xxzsim_sweep_test.csv";
    emit_table(d, OutputFormat::Csv, path.string());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "varied,varied_value,t,NG,EU,LC,EN,FID1,FID2");
    in.close();
    std::filesystem::remove(path);

    CHECK_THROWS_AS(emit_table(d, OutputFormat::Csv, "/nonexistent-dir/out.csv"), io_error);
}
