#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "biped_commands.hpp"
#include "oracles.hpp"

namespace cli = biped::cli;
using nlohmann::json;

namespace {

cli::RunConfig config(const std::string& cmd) {
    cli::RunConfig c;
    c.command = cmd;
    return c;
}

json run_json(cli::RunConfig c) {
    c.format = cli::Format::kJson;
    return json::parse(cli::run(c).body);
}

std::vector<std::vector<std::string>> csv_rows(const std::string& body) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

}  // namespace

TEST(Format, ShortestRoundTrip) {
    for (double v : {0.1, 1.0 / 3.0, -66.84197766808387, 1e-300, 3.812091795092966}) {
        EXPECT_EQ(std::strtod(cli::fmt(v).c_str(), nullptr), v);
    }
    EXPECT_EQ(cli::fmt(0.1), "0.1");
    EXPECT_EQ(cli::csv_field("a,b"), "\"a,b\"");
}

TEST(Roots, DefaultAndIntervals) {
    const auto j = run_json(config("roots"));
    EXPECT_EQ(j["schema_version"], cli::kSchemaVersion);
    ASSERT_EQ(j["roots"].size(), 2u);
    EXPECT_NEAR(j["T1"].get<double>(), std::numbers::pi, 1e-8);
    EXPECT_NEAR(j["T2"].get<double>(), oracle::kPubT2, 1e-5);
    EXPECT_NEAR(j["alpha_T2"].get<double>(), oracle::kPubAlphaT2, 1e-4);
    EXPECT_TRUE(j["roots"][0]["non_anthropomorphic"].get<bool>());
    EXPECT_FALSE(j["roots"][1]["non_anthropomorphic"].get<bool>());

    auto c = config("roots");
    c.interval = {0.1, 6.28};
    EXPECT_EQ(run_json(c)["roots"], j["roots"]);
    c.interval = {4.0, 6.0};
    const auto empty = run_json(c);
    EXPECT_TRUE(empty["roots"].empty());
    EXPECT_TRUE(empty["T2"].is_null());
}

TEST(Verify, DefaultReport) {
    const auto r = run_json(config("verify"))["report"];
    EXPECT_NEAR(r["theta0"].get<double>(), oracle::kPubTheta0, 1e-3);
    EXPECT_NEAR(r["rho"].get<double>(), oracle::kPubRho, 1e-3);
    EXPECT_NEAR(r["melnikov_slope"].get<double>(), oracle::kRefMelnikovSlope, 1e-8);
    for (const char* v : {"stab1", "necessary", "sufficient", "stab2"}) EXPECT_TRUE(r["verdicts"][v].get<bool>()) << v;
    EXPECT_TRUE(r["failures"].empty());
}

TEST(Verify, TolScaleRobust) {
    auto c = config("verify");
    const auto a = run_json(c)["report"];
    c.tol_scale = 0.5;
    const auto b = run_json(c)["report"];
    EXPECT_EQ(a["theta0"], b["theta0"]);
    EXPECT_NEAR(a["melnikov_slope_fd"].get<double>(), b["melnikov_slope_fd"].get<double>(),
                1e-3 * std::abs(a["melnikov_slope"].get<double>()));
}

TEST(Verify, JsonAndCsvCarrySameNumbers) {
    auto c = config("verify");
    c.fd_oracle = false;
    const auto j = run_json(c);
    c.format = cli::Format::kCsv;
    const auto rows = csv_rows(cli::run(c).body);
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < rows.size(); ++i) kv[rows[i][0]] = rows[i].size() > 1 ? rows[i][1] : "";
    c.format = cli::Format::kJson;
    std::size_t compared = 0;
    const auto flat = j.flatten();
    for (const auto& [k, v] : flat.items()) {
        if (!v.is_number_float()) continue;
        std::string key = k.substr(1);
        std::replace(key.begin(), key.end(), '/', '.');
        ASSERT_TRUE(kv.count(key)) << key;
        EXPECT_EQ(std::strtod(kv[key].c_str(), nullptr), v.get<double>()) << key;
        ++compared;
    }
    EXPECT_GT(compared, 30u);
}

TEST(Verify, BadBracketIsReported) {
    auto c = config("verify");
    c.theta0_bracket = {1.5, 2.0};
    const auto res = cli::run(c);
    ASSERT_TRUE(res.failure.has_value());
    EXPECT_EQ(res.failure->stage, "necessary");
    const auto r = json::parse(res.body)["report"];
    EXPECT_TRUE(r["theta0"].is_null());
    EXPECT_FALSE(r["verdicts"]["necessary"].get<bool>());
    EXPECT_TRUE(r["incomplete"].get<bool>());
}

TEST(Map, FamilyPointReturns) {
    auto c = config("map");
    c.theta = 1.0;
    c.omega = -1.0452;
    const auto j = run_json(c);
    EXPECT_NEAR(j["image"]["theta"].get<double>(), 1.0, 1e-4);
    EXPECT_NEAR(j["image"]["omega"].get<double>(), -1.0452, 1e-4);
    EXPECT_NEAR(j["period"].get<double>(), oracle::kPubT2, 1e-3);
    EXPECT_EQ(j["config"]["omega"].get<double>(), -1.0452);
}

TEST(Map, ErrorsCarryKind) {
    auto c = config("map");
    c.theta = 0.0;
    c.omega = 0.0;
    try {
        cli::run(c);
        FAIL();
    } catch (const biped::Error& e) {
        EXPECT_EQ(cli::exit_code_for(e.kind()), 2);
    }
    c.tol_scale = -1.0;
    EXPECT_THROW(cli::run(c), biped::PreconditionError);
    EXPECT_EQ(cli::exit_code_for("no_heelstrike"), 3);
    const auto e = json::parse(cli::error_json("poincare", "no_heelstrike", "x"));
    EXPECT_EQ(e["error"]["stage"], "poincare");
}

TEST(Continue, SequentialAndIndependentAgree) {
    auto c = config("continue");
    c.grid = {1e-3, 3e-3, 1e-2};
    const auto seq = run_json(c);
    c.independent = true;
    c.threads = 3;
    const auto par = run_json(c);
    ASSERT_EQ(seq["points"].size(), 3u);
    ASSERT_EQ(par["points"].size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(par["points"][i]["delta"], seq["points"][i]["delta"]);
        EXPECT_NEAR(par["points"][i]["fixed_point"]["theta"].get<double>(),
                    seq["points"][i]["fixed_point"]["theta"].get<double>(), 1e-9);
    }
    EXPECT_TRUE(seq["failure"].is_null());
    EXPECT_EQ(par["config"]["threads"], 3);
}

TEST(Continue, CsvHasHeaderAndRows) {
    auto c = config("continue");
    c.grid = {1e-3, 2e-3};
    const auto rows = csv_rows(cli::run(c).body);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0][0], "delta");
    EXPECT_EQ(rows[0].size(), rows[1].size());
}

TEST(Gait, ConvergesAtComputedRadius) {
    auto c = config("gait");
    const auto j = run_json(c);
    const auto& s = j["summary"];
    EXPECT_FALSE(s["fell"].get<bool>());
    EXPECT_EQ(s["steps_completed"], 30);
    EXPECT_NEAR(s["contraction_ratio"].get<double>(), s["spectral_radius"].get<double>(), 0.1);
}

TEST(Traj, StanceAngleCrossesZeroMidStep) {
    auto c = config("traj");
    c.theta = 1.0;
    c.omega = -1.0452;
    c.t_end = 3.81209;
    c.samples = 400;
    const auto rows = csv_rows(cli::run(c).body);
    ASSERT_EQ(rows.size(), 401u);
    EXPECT_EQ(rows[0][1], "theta");
    const double first = std::stod(rows[1][1]);
    const double mid = std::stod(rows[200][1]);
    const double last = std::stod(rows[400][1]);
    EXPECT_GT(first, 0.0);
    EXPECT_LT(last, 0.0);
    EXPECT_LT(std::abs(mid), 0.02);
}

TEST(Determinism, RerunsAreByteIdentical) {
    for (const char* cmd : {"roots", "map", "gait", "traj"}) {
        const auto c = config(cmd);
        EXPECT_EQ(cli::run(c).body, cli::run(c).body) << cmd;
    }
}
