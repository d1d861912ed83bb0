// Report serialization (json, csv, text) and the oracle table cache.
#pragma once

#include "qdissect/partitions.hpp"
#include "qdissect/verify.hpp"

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qdissect {

using nlohmann::json;

inline json to_json(const VerifyReport& r) {
  json j;
  j["id"] = r.id;
  j["status"] = to_string(r.status);
  j["order"] = r.order;
  if (r.first_failure)
    j["first_failure"] = {{"n", r.first_failure->n}, {"lhs", r.first_failure->lhs}, {"rhs", r.first_failure->rhs}};
  else
    j["first_failure"] = nullptr;
  j["elapsed_ms"] = r.elapsed_ms;
  j["paper_label"] = r.paper_label;
  return j;
}

inline VerifyReport report_from_json(const json& j) {
  VerifyReport r;
  r.id = j.at("id").get<std::string>();
  auto st = parse_status(j.at("status").get<std::string>());
  if (!st) throw std::invalid_argument("bad status in report " + r.id);
  r.status = *st;
  r.order = j.at("order").get<long>();
  const json& f = j.at("first_failure");
  if (!f.is_null()) r.first_failure = FailurePoint{f.at("n").get<long>(), f.at("lhs").get<std::string>(), f.at("rhs").get<std::string>()};
  r.elapsed_ms = j.at("elapsed_ms").get<double>();
  r.paper_label = j.at("paper_label").get<std::string>();
  return r;
}

inline std::string emit_json(const std::vector<VerifyReport>& reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2);
}

inline std::vector<VerifyReport> parse_json_reports(const std::string& text) {
  std::vector<VerifyReport> out;
  for (const auto& j : json::parse(text)) out.push_back(report_from_json(j));
  return out;
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string emit_csv(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  os << "id,status,order,failure_n,failure_lhs,failure_rhs,elapsed_ms,paper_label\n";
  for (const auto& r : reports) {
    os << detail::csv_field(r.id) << ',' << to_string(r.status) << ',' << r.order << ',';
    if (r.first_failure)
      os << r.first_failure->n << ',' << detail::csv_field(r.first_failure->lhs) << ',' << detail::csv_field(r.first_failure->rhs);
    else
      os << ",,";
    os << ',' << std::fixed << std::setprecision(3) << r.elapsed_ms << ',' << detail::csv_field(r.paper_label) << '\n';
  }
  return os.str();
}

inline std::string emit_text(const std::vector<VerifyReport>& reports) {
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, emended = 0;
  for (const auto& r : reports) {
    os << std::left << std::setw(14) << to_string(r.status) << std::setw(22) << r.id << " order " << std::setw(5) << r.order;
    os << std::right << std::fixed << std::setprecision(1) << std::setw(9) << r.elapsed_ms << " ms  " << r.paper_label << '\n';
    if (r.first_failure)
      os << "    first failure at n=" << r.first_failure->n << ": " << r.first_failure->lhs << " vs " << r.first_failure->rhs << '\n';
    (r.status == Status::Pass ? pass : r.status == Status::Fail ? fail : emended)++;
  }
  os << reports.size() << " checks: " << pass << " pass, " << emended << " emended-pass, " << fail << " fail\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Cache: {"format_version", "oracle_ceiling", "rows": [{"n", "p", "spt", "rank", "crank"}]}
// with every count a signed decimal string; rank/crank map m -> count for nonzero counts.

inline constexpr int kCacheFormatVersion = 1;

inline json tables_to_json(const StatTables& t) {
  json rows = json::array();
  for (long n = 0; n <= t.max_n; ++n) {
    json rank = json::object(), crank = json::object();
    for (long m = -n; m <= n; ++m) {
      if (auto c = t.N(m, n)) rank[std::to_string(m)] = std::to_string(c);
      if (auto c = t.M(m, n)) crank[std::to_string(m)] = std::to_string(c);
    }
    auto idx = static_cast<std::size_t>(n);
    rows.push_back({{"n", n}, {"p", std::to_string(t.p[idx])}, {"spt", std::to_string(t.spt[idx])}, {"rank", rank}, {"crank", crank}});
  }
  return {{"format_version", kCacheFormatVersion}, {"oracle_ceiling", t.max_n}, {"rows", rows}};
}

/// nullopt on version mismatch or a ceiling below `need`.
inline std::optional<StatTables> tables_from_json(const json& j, long need) {
  if (!j.contains("format_version") || j.at("format_version") != kCacheFormatVersion) return std::nullopt;
  long ceiling = j.at("oracle_ceiling").get<long>();
  if (ceiling < need) return std::nullopt;
  StatTables t;
  t.resize(ceiling);
  t.provenance = "cache";
  const json& rows = j.at("rows");
  if (static_cast<long>(rows.size()) != ceiling + 1) return std::nullopt;
  for (const auto& row : rows) {
    long n = row.at("n").get<long>();
    if (n < 0 || n > ceiling) return std::nullopt;
    auto idx = static_cast<std::size_t>(n);
    t.p[idx] = std::stoll(row.at("p").get<std::string>());
    t.spt[idx] = std::stoll(row.at("spt").get<std::string>());
    for (auto [key, table] : {std::pair{"rank", &t.rank}, std::pair{"crank", &t.crank}})
      for (const auto& [m, c] : row.at(key).items()) {
        long mm = std::stol(m);
        if (mm < -n || mm > n) return std::nullopt;
        (*table)[idx][static_cast<std::size_t>(mm + n)] = std::stoll(c.get<std::string>());
      }
  }
  return t;
}

/// Loads tables covering `ceiling` from the cache, recomputing (and rewriting the file)
/// when it is missing, unreadable, of another version, or too short.
inline StatTables load_or_build_tables(const std::filesystem::path& path, long ceiling, bool* hit = nullptr) {
  if (hit) *hit = false;
  {
    std::ifstream in(path);
    if (in) {
      try {
        json j = json::parse(in);
        if (auto t = tables_from_json(j, ceiling)) {
          if (hit) *hit = true;
          return *t;
        }
      } catch (const std::exception&) {
        // unreadable cache: recompute below
      }
    }
  }
  StatTables t = gf_stats(ceiling);
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write cache " + path.string());
  out << tables_to_json(t).dump();
  return t;
}

}  // namespace qdissect
