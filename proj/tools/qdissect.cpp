// qdissect: run verification suites, print series and oracle tables, scan conjectures.
#include "qdissect/named_series.hpp"
#include "qdissect/report.hpp"
#include "qdissect/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <thread>

namespace {

using namespace qdissect;

constexpr int kUsage = 64;

struct VerifyOptions {
  std::vector<std::string> suites{"all"};
  std::optional<long> order;
  long oracle_ceiling = 350;
  std::string format = "text";
  std::string cache;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

std::string cache_path(const std::string& flag) {
  if (const char* env = std::getenv("QDISSECT_CACHE"); env && *env) return env;
  return flag;
}

void attach_tables(Context& ctx, const std::string& flag) {
  std::string path = cache_path(flag);
  if (!path.empty()) ctx.set_tables(load_or_build_tables(path, ctx.oracle_ceiling()));
}

void print_reports(const std::vector<VerifyReport>& reports, const std::string& format) {
  if (format == "json") std::cout << emit_json(reports) << '\n';
  else if (format == "csv") std::cout << emit_csv(reports);
  else std::cout << emit_text(reports);
}

int cmd_verify(const VerifyOptions& o) {
  Context ctx(o.oracle_ceiling);
  auto checks = select_checks(o.suites);
  attach_tables(ctx, o.cache);
  auto reports = run_checks(checks, ctx, o.order, o.jobs);
  print_reports(reports, o.format);
  return exit_code(reports);
}

int cmd_series(const std::string& name, long order, const std::string& format) {
  Series s = named_series(name, order);
  std::vector<std::tuple<long, std::string, std::string>> rows;
  if (!s.is_exact_zero())
    for (long e = s.valuation(); e < order; ++e) {
      mpq_class c = s.coeff(e);
      rows.emplace_back(e, c.get_num().get_str(), c.get_den().get_str());
    }
  if (format == "json") {
    json arr = json::array();
    for (const auto& [e, n, d] : rows) arr.push_back({{"exponent", e}, {"numerator", n}, {"denominator", d}});
    std::cout << arr.dump(2) << '\n';
  } else {
    if (format == "csv") std::cout << "exponent,numerator,denominator\n";
    for (const auto& [e, n, d] : rows) std::cout << e << (format == "csv" ? "," : " ") << n << (format == "csv" ? "," : " ") << d << '\n';
  }
  return 0;
}

int cmd_tables(const std::string& stat, long max_n, const std::string& format, const std::string& cache) {
  std::string path = cache_path(cache);
  StatTables t = path.empty() ? gf_stats(max_n) : load_or_build_tables(path, max_n);
  if (stat == "p" || stat == "spt") {
    const auto& v = stat == "p" ? t.p : t.spt;
    if (format == "json") {
      json arr = json::array();
      for (long n = 0; n <= max_n; ++n) arr.push_back({{"n", n}, {stat, std::to_string(v[static_cast<std::size_t>(n)])}});
      std::cout << arr.dump(2) << '\n';
      return 0;
    }
    if (format == "csv") std::cout << "n," << stat << '\n';
    for (long n = 0; n <= max_n; ++n) std::cout << n << (format == "csv" ? "," : " ") << v[static_cast<std::size_t>(n)] << '\n';
    return 0;
  }
  Stat s = stat == "rank" ? Stat::Rank : Stat::Crank;
  if (format == "json") {
    json arr = json::array();
    for (long n = 0; n <= max_n; ++n) {
      json counts = json::object();
      for (long m = -n; m <= n; ++m)
        if (auto c = t.count(s, m, n)) counts[std::to_string(m)] = std::to_string(c);
      arr.push_back({{"n", n}, {"counts", counts}});
    }
    std::cout << arr.dump(2) << '\n';
    return 0;
  }
  if (format == "csv") std::cout << "n,m,count\n";
  for (long n = 0; n <= max_n; ++n) {
    if (format != "csv") std::cout << n << ':';
    for (long m = -n; m <= n; ++m) {
      auto c = t.count(s, m, n);
      if (c == 0) continue;
      if (format == "csv") std::cout << n << ',' << m << ',' << c << '\n';
      else std::cout << ' ' << m << '=' << c;
    }
    if (format != "csv") std::cout << '\n';
  }
  return 0;
}

int cmd_scan(const std::vector<std::string>& ids, long ceiling, const std::string& format, int jobs) {
  Context ctx(11 * ceiling + 10);
  ctx.set_scan_limit(ceiling);
  auto checks = select_checks(ids);
  for (const auto* c : checks)
    if (c->kind != Kind::ConjectureScan) throw std::invalid_argument(c->id + " is not a conjecture scan");
  auto reports = run_checks(checks, ctx, std::nullopt, jobs);
  print_reports(reports, format);
  return exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-series engine and 11-dissection verification harness"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"text", "json", "csv"};

  VerifyOptions vo;
  auto* verify = app.add_subcommand("verify", "run verification suites or single checks");
  verify->add_option("--suite", vo.suites, "suite names, check ids, or id prefixes ending in '*'")->capture_default_str();
  verify->add_option("--order", vo.order, "series order for order-driven checks");
  verify->add_option("--oracle-ceiling", vo.oracle_ceiling, "largest n in the partition oracle")->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--format", vo.format)->check(CLI::IsMember(formats))->capture_default_str();
  verify->add_option("--cache", vo.cache, "oracle table cache file (QDISSECT_CACHE overrides)");
  verify->add_option("--jobs", vo.jobs)->check(CLI::PositiveNumber)->capture_default_str();
  auto* list = verify->add_flag("--list", "print check ids and suites instead of running");

  std::string series_name;
  long series_order = 20;
  std::string series_format = "text";
  auto* series = app.add_subcommand("series", "print a named series as exponent numerator denominator");
  series->add_option("name", series_name)->required();
  series->add_option("--order", series_order)->capture_default_str()->check(CLI::PositiveNumber);
  series->add_option("--format", series_format)->check(CLI::IsMember(formats))->capture_default_str();

  std::string stat;
  long max_n = 20;
  std::string tables_format = "text", tables_cache;
  auto* tables = app.add_subcommand("tables", "dump oracle tables");
  tables->add_option("stat", stat)->required()->check(CLI::IsMember({"p", "spt", "rank", "crank"}));
  tables->add_option("--max-n", max_n)->capture_default_str()->check(CLI::NonNegativeNumber);
  tables->add_option("--format", tables_format)->check(CLI::IsMember(formats))->capture_default_str();
  tables->add_option("--cache", tables_cache);

  std::vector<std::string> scan_ids;
  long scan_ceiling = 30;
  std::string scan_format = "text";
  int scan_jobs = 1;
  auto* scan = app.add_subcommand("scan", "scan conjectures over n <= ceiling");
  scan->add_option("id", scan_ids)->required();
  scan->add_option("--ceiling", scan_ceiling)->capture_default_str()->check(CLI::NonNegativeNumber);
  scan->add_option("--format", scan_format)->check(CLI::IsMember(formats))->capture_default_str();
  scan->add_option("--jobs", scan_jobs)->check(CLI::PositiveNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) {
      if (*list) {
        for (const auto& c : registry()) std::cout << c.id << '\t' << to_string(c.kind) << '\t' << detail::join(c.suites, ",") << '\n';
        return 0;
      }
      return cmd_verify(vo);
    }
    if (*series) return cmd_series(series_name, series_order, series_format);
    if (*tables) return cmd_tables(stat, max_n, tables_format, tables_cache);
    if (*scan) return cmd_scan(scan_ids, scan_ceiling, scan_format, scan_jobs);
  } catch (const UnknownCheckError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleRangeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const SeriesError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
