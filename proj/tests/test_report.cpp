#include "qdissect/named_series.hpp"
#include "qdissect/report.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace qdissect;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "qdissect-tests";
  fs::create_directories(dir);
  return dir / name;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  fs::path capture = temp_file("cli-out.txt");
  std::string cmd = std::string("env -u QDISSECT_CACHE ") + QDISSECT_CLI + " " + args + " > " + capture.string() + " 2>&1";
  int status = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(capture);
    *out = std::string(std::istreambuf_iterator<char>(in), {});
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
  std::vector<VerifyReport> reports{
      {"wr1", Status::Pass, 500, std::nullopt, 1.25, "three-term theta relation"},
      {"q-3-3", Status::Fail, 330, FailurePoint{4, "-3/11", "2"}, 10.5, "label with \"quotes\", commas"},
      {"qtheta-34", Status::EmendedPass, 330, std::nullopt, 0.0, "row [relabelled]"},
  };
  std::string text = emit_json(reports);
  EXPECT_EQ(parse_json_reports(text), reports);
  auto j = json::parse(text);
  EXPECT_TRUE(j[0]["first_failure"].is_null());
  EXPECT_EQ(j[1]["first_failure"]["lhs"], "-3/11");
  for (const auto& key : {"id", "status", "order", "first_failure", "elapsed_ms", "paper_label"}) EXPECT_TRUE(j[0].contains(key));
  EXPECT_EQ(j[0].size(), 6u);
  EXPECT_THROW(report_from_json(json{{"id", "x"}, {"status", "maybe"}}), std::exception);
}

TEST(Report, CsvQuoting) {
  std::vector<VerifyReport> reports{{"x", Status::Fail, 3, FailurePoint{1, "1", "0"}, 0.5, "a, \"b\""}};
  std::string csv = emit_csv(reports);
  EXPECT_NE(csv.find("x,fail,3,1,1,0,0.500,\"a, \"\"b\"\"\""), std::string::npos);
}

TEST(Report, TextSummary) {
  std::vector<VerifyReport> reports{{"x", Status::Pass, 3, std::nullopt, 0.5, "ok"}, {"y", Status::EmendedPass, 3, std::nullopt, 0.5, "e"}};
  EXPECT_NE(emit_text(reports).find("2 checks: 1 pass, 1 emended-pass, 0 fail"), std::string::npos);
}

TEST(Cache, RoundTripAndInvalidation) {
  StatTables t = gf_stats(40);
  auto j = tables_to_json(t);
  EXPECT_EQ(j["format_version"], kCacheFormatVersion);
  auto back = tables_from_json(j, 40);
  ASSERT_TRUE(back);
  EXPECT_EQ(*back, t);
  EXPECT_TRUE(tables_from_json(j, 30));
  EXPECT_FALSE(tables_from_json(j, 41));
  j["format_version"] = kCacheFormatVersion + 1;
  EXPECT_FALSE(tables_from_json(j, 40));
}

TEST(Cache, WarmAndColdRunsAgree) {
  fs::path path = temp_file("tables.json");
  fs::remove(path);
  bool hit = true;
  StatTables cold = load_or_build_tables(path, 120, &hit);
  EXPECT_FALSE(hit);
  StatTables warm = load_or_build_tables(path, 120, &hit);
  EXPECT_TRUE(hit);
  EXPECT_EQ(cold, warm);
  // a corrupt file is rebuilt
  { std::ofstream(path) << "{not json"; }
  StatTables rebuilt = load_or_build_tables(path, 120, &hit);
  EXPECT_FALSE(hit);
  EXPECT_EQ(rebuilt, cold);

  Context a(120), b(120);
  b.set_tables(warm);
  auto checks = select_checks({"thm-5.1-*", "thm-5.3-*", "oracle-agreement"});
  auto ra = run_checks(checks, a, std::nullopt, 2), rb = run_checks(checks, b, std::nullopt, 2);
  ASSERT_EQ(ra.size(), rb.size());
  for (std::size_t i = 0; i < ra.size(); ++i) {
    EXPECT_EQ(ra[i].status, rb[i].status);
    EXPECT_EQ(ra[i].first_failure, rb[i].first_failure);
    EXPECT_EQ(ra[i].paper_label, rb[i].paper_label);
  }
}

TEST(NamedSeries, Lookup) {
  Series j1 = named_series("J1", 8);
  EXPECT_EQ(coefficients(j1, 0, 8), (std::vector<mpq_class>{1, -1, -1, 0, 0, 1, 0, 1}));
  EXPECT_EQ(coefficients(named_series("E4", 3), 0, 3), (std::vector<mpq_class>{1, 240, 2160}));
  EXPECT_TRUE(named_series("zero", 5).is_exact_zero());
  ProductBasis B(20);
  EXPECT_TRUE(eq_to_order(named_series("Theta(-1,1,1,1,1)", 20), theta(B, {-1, 1, 1, 1, 1}), 20));
  EXPECT_TRUE(eq_to_order(named_series("[1,-1,-1,-1,-1]", 20), B.eval(parse_monomial("J11^2")), 20));
  EXPECT_TRUE(eq_to_order(named_series("[0,0,1,0,0;0]_3", 20), residue_bracket(B, 3, {0, 0, 1, 0, 0, 0}), 20));
  EXPECT_TRUE(eq_to_order(named_series("q_table(2,5)", 20), q_table(B, 2, 5), 20));
  EXPECT_TRUE(eq_to_order(named_series("J11^2/P1", 20), B.eval(parse_monomial("J11^2 / P1")), 20));
  EXPECT_THROW(named_series("Theta(1,2)", 10), SeriesError);
  EXPECT_THROW(named_series("q_table(2,11)", 10), std::out_of_range);
  EXPECT_THROW(named_series("nonsense", 10), SeriesError);
}

TEST(Cli, ExitCodes) {
  std::string out;
  EXPECT_EQ(run_cli("verify --suite wr-all --order 500", &out), 0);
  EXPECT_NE(out.find("10 checks: 10 pass"), std::string::npos);
  EXPECT_EQ(run_cli("verify --suite nope", &out), 64);
  EXPECT_NE(out.find("nope"), std::string::npos);
  EXPECT_EQ(run_cli("verify --suite qtheta-34", &out), 2);
  EXPECT_EQ(run_cli("verify --suite thm-1.2-a0 --oracle-ceiling 100", &out), 64);
  EXPECT_NE(out.find("329"), std::string::npos);
  EXPECT_EQ(run_cli("verify --format xml", &out), 64);
  EXPECT_EQ(run_cli("series J1 --order 0", &out), 64);
  EXPECT_EQ(run_cli("tables spt --max-n 400", &out), 64);
  EXPECT_NE(out.find("361"), std::string::npos);
}

TEST(Cli, JsonOutputParses) {
  std::string out;
  EXPECT_EQ(run_cli("verify --suite structural --format json --jobs 2", &out), 0);
  auto reports = parse_json_reports(out);
  EXPECT_EQ(reports.size(), select_checks({"structural"}).size());
}

TEST(Cli, SeriesAndTables) {
  std::string out;
  EXPECT_EQ(run_cli("series zero", &out), 0);
  EXPECT_TRUE(out.empty());
  EXPECT_EQ(run_cli("series E4 --order 3 --format csv", &out), 0);
  EXPECT_EQ(out, "exponent,numerator,denominator\n0,1,1\n1,240,1\n2,2160,1\n");
  EXPECT_EQ(run_cli("tables crank --max-n 1", &out), 0);
  EXPECT_EQ(out, "0: 0=1\n1: -1=1 0=-1 1=1\n");
  EXPECT_EQ(run_cli("scan conj-6.2 --ceiling 30", &out), 0);
  EXPECT_NE(out.find("violations {2}"), std::string::npos);
  EXPECT_EQ(run_cli("scan wr1", &out), 64);
}

TEST(Cli, CacheEnvironmentOverride) {
  fs::path path = temp_file("env-cache.json"), ignored = temp_file("ignored.json");
  fs::remove(path);
  fs::remove(ignored);
  std::string cmd = "QDISSECT_CACHE=" + path.string() + " " + QDISSECT_CLI + " verify --suite thm-5.1-m0 --oracle-ceiling 60 --cache " + ignored.string() +
                    " > /dev/null";
  EXPECT_EQ(WEXITSTATUS(std::system(cmd.c_str())), 0);
  EXPECT_TRUE(fs::exists(path));
  EXPECT_FALSE(fs::exists(ignored));
  std::ifstream in(path);
  auto j = json::parse(in);
  EXPECT_EQ(j["oracle_ceiling"], 60);
}
