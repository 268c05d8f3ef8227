#include "shadowaudit/report.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "shadowaudit/errors.hpp"

namespace shadowaudit {
namespace {

namespace fs = std::filesystem;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

double parse_double(const std::string& s) {
  double v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  EXPECT_EQ(res.ptr, s.data() + s.size()) << s;
  return v;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("shadowaudit_report_test_" + name);
  fs::remove_all(dir);
  return dir;
}

class PaperReport : public ::testing::Test {
 protected:
  static void SetUpTestSuite() { report_ = new AuditReport(reproduce_paper()); }
  static void TearDownTestSuite() { delete report_; }
  static std::string csv() {
    std::ostringstream out;
    export_csv(*report_, out);
    return out.str();
  }
  static std::string json() {
    std::ostringstream out;
    export_json(*report_, out);
    return out.str();
  }
  static AuditReport* report_;
};

AuditReport* PaperReport::report_ = nullptr;

TEST(FormatBinary64Test, SeventeenDigitsRoundTrip) {
  EXPECT_EQ(format_binary64(0.4), "0.40000000000000002");
  EXPECT_EQ(format_binary64(0.0), "0");
  EXPECT_EQ(format_binary64(0.5), "0.5");
  std::mt19937_64 rng(1);
  for (int i = 0; i < 5000; ++i) {
    const double v = std::bit_cast<double>(rng() & 0x7fefffffffffffffULL);
    EXPECT_EQ(std::bit_cast<std::uint64_t>(parse_double(format_binary64(v))),
              std::bit_cast<std::uint64_t>(v));
  }
}

TEST_F(PaperReport, CsvLayout) {
  const std::string text = csv();
  EXPECT_EQ(text.find('\r'), std::string::npos);
  ASSERT_EQ(text.back(), '\n');
  auto lines = split(text.substr(0, text.size() - 1), '\n');
  ASSERT_EQ(lines.size(), 102u);
  EXPECT_EQ(lines[0],
            "n,x_G,x_H,x_P,delta_alpha,delta_GP,delta_HP,log10_delta_alpha,log10_delta_GP,"
            "log10_delta_HP");
  const auto row0 = split(lines[1], ',');
  ASSERT_EQ(row0.size(), 10u);
  EXPECT_EQ(row0[0], "0");
  EXPECT_EQ(row0[1], "0.40000000000000002");
  EXPECT_EQ(row0[2], "0.40000000000000002");
  EXPECT_EQ(row0[3], "0.400000000000000000000000000000");
  EXPECT_EQ(row0[4], "0");
  EXPECT_EQ(row0[7], "");  // log10(0)
  EXPECT_NEAR(parse_double(row0[5]), 2.2204e-17, 0.0001e-17);

  const auto row50 = split(lines[51], ',');  // published label n = 51
  EXPECT_EQ(row50[0], "50");
  EXPECT_NEAR(parse_double(row50[7]), -7.638, 1e-3);
  const auto row42 = split(lines[43], ',');
  EXPECT_NEAR(parse_double(row42[8]), -7.921, 1e-3);
  EXPECT_NEAR(parse_double(row42[9]), -7.954, 1e-3);
}

TEST_F(PaperReport, CsvRoundTripsBinary64Orbits) {
  const auto lines = split(csv(), '\n');
  for (std::size_t n = 0; n <= 100; ++n) {
    const auto fields = split(lines[n + 1], ',');
    EXPECT_EQ(std::bit_cast<std::uint64_t>(parse_double(fields[1])),
              std::bit_cast<std::uint64_t>(report_->orbit_g[n]));
    EXPECT_EQ(std::bit_cast<std::uint64_t>(parse_double(fields[2])),
              std::bit_cast<std::uint64_t>(report_->orbit_h[n]));
    EXPECT_EQ(parse_double(fields[4]), report_->lower_bound.values[n]);
  }
}

TEST_F(PaperReport, JsonContent) {
  const auto j = nlohmann::json::parse(json());
  EXPECT_EQ(j["version"], kReportFormatVersion);
  EXPECT_EQ(j["params"]["r"], "3.8");
  EXPECT_EQ(j["params"]["x0"], "0.4");
  EXPECT_EQ(j["params"]["iterates"], 100);
  EXPECT_EQ(j["environment"]["reference_digits"], 1000);
  EXPECT_EQ(j["environment"]["fused_multiply_add"], false);
  EXPECT_EQ(j["crossings"]["lower_bound"]["threshold"], "1e-8");
  EXPECT_EQ(j["crossings"]["lower_bound"]["iterate"], 50);
  for (const char* key : {"G", "H", "P"}) EXPECT_EQ(j["orbits"][key].size(), 101u);
  for (const char* key : {"lower_bound", "deviation_G", "deviation_H"}) {
    EXPECT_EQ(j["series"][key].size(), 101u);
    EXPECT_EQ(j["log10"][key].size(), 101u);
  }
  EXPECT_TRUE(j["log10"]["lower_bound"][0].is_null());
  for (std::size_t n = 0; n <= 100; ++n) {
    EXPECT_EQ(parse_double(j["orbits"]["G"][n].get<std::string>()), report_->orbit_g[n]);
    EXPECT_EQ(parse_double(j["orbits"]["H"][n].get<std::string>()), report_->orbit_h[n]);
  }
  EXPECT_NEAR(parse_double(j["series"]["deviation_G"][42].get<std::string>()),
              std::pow(10.0, -7.921), std::pow(10.0, -7.921) * 0.003);
}

TEST_F(PaperReport, MatchesStoredFixturesByteForByte) {
  EXPECT_EQ(json(), read_file(fs::path(SHADOWAUDIT_TEST_DATA) / "paper_preset_audit.json"));
  EXPECT_EQ(csv(), read_file(fs::path(SHADOWAUDIT_TEST_DATA) / "paper_preset_audit.csv"));
}

TEST_F(PaperReport, RebuildIsByteIdentical) {
  const AuditReport again = reproduce_paper();
  std::ostringstream c, j;
  export_csv(again, c);
  export_json(again, j);
  EXPECT_EQ(c.str(), csv());
  EXPECT_EQ(j.str(), json());
}

TEST_F(PaperReport, Headlines) {
  const auto h = paper_headlines(*report_);
  ASSERT_EQ(h.size(), 3u);
  EXPECT_EQ(h[0].label, 51u);
  EXPECT_EQ(h[1].label, 43u);
  for (const auto& line : h) EXPECT_NEAR(line.value, line.published, 1e-3) << line.quantity;
}

TEST_F(PaperReport, PlotsFollowPublishedWindows) {
  const auto dir = scratch_dir("plots");
  const auto files = emit_plots(*report_, dir);
  ASSERT_EQ(files.size(), 4u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(files[i].filename(), "fig" + std::to_string(i + 1) + ".svg");
  }
  const std::string fig1 = read_file(files[0]);
  const std::string fig2 = read_file(files[1]);
  const std::string fig3 = read_file(files[2]);
  const std::string fig4 = read_file(files[3]);
  EXPECT_NE(fig1.find("data-x-first=\"41\" data-x-last=\"101\""), std::string::npos);
  EXPECT_NE(fig3.find("id=\"series2\" data-x-first=\"41\" data-x-last=\"101\""), std::string::npos);
  EXPECT_NE(fig2.find("data-x-first=\"31\" data-x-last=\"70\""), std::string::npos);
  EXPECT_NE(fig2.find("class=\"reference\" data-y=\"-8.000000\""), std::string::npos);
  EXPECT_NE(fig4.find("class=\"reference\" data-y=\"-8.000000\""), std::string::npos);
  EXPECT_NE(fig1.find("G(X<tspan"), std::string::npos);
  EXPECT_NE(fig2.find("log<tspan"), std::string::npos);
  EXPECT_EQ(fig1.find("class=\"reference\""), std::string::npos);
  // Deterministic output.
  const auto again = emit_plots(*report_, scratch_dir("plots_again"));
  for (int i = 0; i < 4; ++i) EXPECT_EQ(read_file(files[i]), read_file(again[i]));
}

TEST_F(PaperReport, FailingStreamIsIoError) {
  std::ostringstream out;
  out.setstate(std::ios::badbit);
  EXPECT_THROW(export_csv(*report_, out), IoError);
  EXPECT_THROW(export_json(*report_, out), IoError);
}

TEST_F(PaperReport, UnwritablePlotDirectoryIsIoError) {
  const auto base = scratch_dir("blocked");
  fs::create_directories(base);
  write_file(base / "file", "x");
  EXPECT_THROW(emit_plots(*report_, base / "file" / "sub"), IoError);
}

TEST(AuditReportTest, ZeroIterateRun) {
  const AuditReport report = build_audit_report(MapParameters("3.8", "0.4", 0));
  std::ostringstream out;
  export_json(report, out);
  const auto j = nlohmann::json::parse(out.str());
  EXPECT_EQ(j["series"]["lower_bound"].size(), 1u);
  EXPECT_TRUE(j["crossings"]["lower_bound"]["iterate"].is_null());
  EXPECT_TRUE(j["crossings"]["lower_bound"]["delta"].is_null());
  try {
    emit_plots(report, scratch_dir("empty"));
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("insufficient data"), std::string::npos);
  }
  EXPECT_THROW(paper_headlines(report), UsageError);
}

TEST(AuditReportTest, FixedPointHasZeroLowerBound) {
  const AuditReport report = build_audit_report(MapParameters("2.0", "0.5", 100));
  for (double v : report.lower_bound.values) EXPECT_EQ(v, 0.0);
  EXPECT_FALSE(report.crossing_lower_bound.iterate.has_value());
}

TEST(AuditReportTest, ShortRunPlotsUseWholeRange) {
  const AuditReport report = build_audit_report(MapParameters("3.8", "0.4", 10));
  const auto files = emit_plots(report, scratch_dir("short"));
  EXPECT_NE(read_file(files[0]).find("data-x-first=\"1\" data-x-last=\"11\""), std::string::npos);
}

TEST(AuditReportTest, InvalidOptions) {
  const MapParameters params("3.8", "0.4", 5);
  AuditOptions bad_threshold;
  bad_threshold.threshold = "0";
  EXPECT_THROW(build_audit_report(params, bad_threshold), ConfigError);
  bad_threshold.threshold = "-1e-8";
  EXPECT_THROW(build_audit_report(params, bad_threshold), ConfigError);
  bad_threshold.threshold = "ten";
  EXPECT_THROW(build_audit_report(params, bad_threshold), ParseError);
  AuditOptions bad_digits;
  bad_digits.digits = 49;
  EXPECT_THROW(build_audit_report(params, bad_digits), ConfigError);
}

TEST(AuditReportTest, ThresholdIsCanonicalized) {
  AuditOptions options;
  options.threshold = "0.00000001";
  options.digits = 100;
  const AuditReport report = build_audit_report(MapParameters("3.8", "0.4", 60), options);
  EXPECT_EQ(report.environment.threshold, "1e-8");
  EXPECT_EQ(report.crossing_lower_bound.iterate, std::optional<std::size_t>(50));
}

TEST(OrbitExportTest, CsvAndJson) {
  const MapParameters params("3.8", "0.4", 0);
  const std::vector<FixedOrbit> orbits{iterate_fixed(EvaluationForm::G, params),
                                       iterate_fixed(EvaluationForm::H, params)};
  std::ostringstream csv;
  export_orbits_csv(orbits, csv);
  EXPECT_EQ(csv.str(), "n,x_G,x_H\n0,0.40000000000000002,0.40000000000000002\n");
  std::ostringstream json;
  export_orbits_json(orbits, json);
  const auto j = nlohmann::json::parse(json.str());
  EXPECT_EQ(j["version"], kReportFormatVersion);
  EXPECT_EQ(j["orbits"]["H"][0], "0.40000000000000002");
  EXPECT_THROW(export_orbits_csv(std::vector<FixedOrbit>{}, csv), UsageError);
  EXPECT_THROW(emit_orbit_plot(orbits, scratch_dir("orbits_empty")), UsageError);
}

}  // namespace
}  // namespace shadowaudit
