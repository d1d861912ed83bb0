// Series addressed by name on the command line: "J1", "J11^2/P1", "E4",
// "Theta(-1,1,1,1,1)", "[1,-1,-1,-1,-1]", "[0,0,1,0,0;0]_3", "q_table(2,5)",
// "qc_table(0,1)", "mock(0,0)", "g(2,11)", "zero".
#pragma once

#include "qdissect/dissection.hpp"
#include "qdissect/monomial_parse.hpp"

#include <cctype>
#include <regex>
#include <string>
#include <vector>

namespace qdissect {

namespace detail {

inline std::vector<long> parse_args(const std::string& s, const std::string& name) {
  std::vector<long> out;
  std::string tok;
  auto flush = [&] {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (tok.empty() || used != tok.size()) throw SeriesError("bad argument '" + tok + "' in " + name);
    out.push_back(v);
    tok.clear();
  };
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') flush();
    else tok += c;
  }
  flush();
  return out;
}

inline void need_args(const std::vector<long>& v, std::size_t n, const std::string& name) {
  if (v.size() != n) throw SeriesError(name + " takes " + std::to_string(n) + " arguments");
}

}  // namespace detail

/// Evaluates a named series, valid below `order` at least.
inline Series named_series(const std::string& raw, long order) {
  if (order < 1) throw SeriesError("order must be at least 1");
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) name += c;
  if (name == "zero" || name == "0") return Series();
  std::smatch mt;
  static const std::regex eis(R"(E(\d+))");
  static const std::regex call(R"((\w+)\(([^()]*)\))");
  static const std::regex brk(R"(\[([^\];]*)(?:;([^\]]*))?\](?:_(\d+))?)");
  ProductBasis B(order);
  if (std::regex_match(name, mt, eis)) return eisenstein(std::stol(mt[1]), order);
  if (std::regex_match(name, mt, brk)) {
    auto c = detail::parse_args(mt[1], name);
    detail::need_args(c, 5, "bracket");
    if (!mt[3].matched) {
      if (mt[2].matched) throw SeriesError("residue bracket needs a residue: [c1,..,c5;c6]_m");
      return bracket(B, {c[0], c[1], c[2], c[3], c[4]});
    }
    long c6 = mt[2].matched ? detail::parse_args(mt[2], name).at(0) : 0;
    int m = std::stoi(mt[3]);
    check_residue(m, false);
    return residue_bracket(B, m, {c[0], c[1], c[2], c[3], c[4], c6});
  }
  if (std::regex_match(name, mt, call)) {
    std::string f = mt[1];
    auto a = detail::parse_args(mt[2], name);
    if (f == "Theta") {
      detail::need_args(a, 5, f);
      return theta(B, {a[0], a[1], a[2], a[3], a[4]});
    }
    if (f == "g") {
      detail::need_args(a, 2, f);
      return mock_g(a[0], a[1], order);
    }
    if (f == "q_table" || f == "qc_table" || f == "mock") {
      detail::need_args(a, 2, f);
      if (a[0] < 0 || a[0] > 5) throw SeriesError(f + ": class must be in 0..5");
      int cls = static_cast<int>(a[0]), m = static_cast<int>(a[1]);
      check_residue(m, true);
      if (f == "q_table") return q_table(B, cls, m);
      if (f == "qc_table") return qc_table(B, cls, m);
      return mock_part(B, cls, m);
    }
    throw SeriesError("unknown series function " + f);
  }
  return B.eval(parse_monomial(name));
}

}  // namespace qdissect
