// Verification checks: identities, congruences, positivity, certificates and
// conjecture scans, all measured against the partition oracles.
#pragma once

#include "qdissect/dissection.hpp"
#include "qdissect/partitions.hpp"
#include "qdissect/verify_data.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace qdissect {

enum class Status { Pass, Fail, EmendedPass };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::EmendedPass: return "emended-pass";
  }
  return "?";
}

inline std::optional<Status> parse_status(std::string_view s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "emended-pass") return Status::EmendedPass;
  return std::nullopt;
}

enum class Kind { Identity, Congruence, Nonnegativity, Certificate, ConjectureScan };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::Identity: return "identity";
    case Kind::Congruence: return "congruence";
    case Kind::Nonnegativity: return "nonnegativity";
    case Kind::Certificate: return "certificate";
    case Kind::ConjectureScan: return "conjecture-scan";
  }
  return "?";
}

struct FailurePoint {
  long n = 0;
  std::string lhs;
  std::string rhs;
  friend bool operator==(const FailurePoint&, const FailurePoint&) = default;
};

struct VerifyReport {
  std::string id;
  Status status = Status::Pass;
  long order = 0;
  std::optional<FailurePoint> first_failure;
  double elapsed_ms = 0;
  std::string paper_label;
  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

class OracleRangeError : public std::runtime_error {
 public:
  OracleRangeError(const std::string& id, long needed, long have)
      : std::runtime_error("check " + id + " needs oracle ceiling >= " + std::to_string(needed) + " (have " +
                           std::to_string(have) + ")"),
        needed_(needed) {}
  long needed() const { return needed_; }

 private:
  long needed_;
};

class UnknownCheckError : public std::invalid_argument {
 public:
  explicit UnknownCheckError(const std::string& name) : std::invalid_argument("unknown suite or check id: " + name) {}
};

/// Oracle tables and product bases shared by every check of one run.
class Context {
 public:
  static constexpr long kAgreementCeiling = 50;

  explicit Context(long oracle_ceiling = 350) : ceiling_(oracle_ceiling) {
    if (oracle_ceiling < 0) throw std::invalid_argument("oracle ceiling must be nonnegative");
    if (oracle_ceiling > kTableCeiling) throw std::invalid_argument("oracle ceiling is limited to " + std::to_string(kTableCeiling));
  }

  long oracle_ceiling() const { return ceiling_; }

  /// Conjecture scans cover n <= scan_limit in the dissected variable.
  long scan_limit() const { return scan_limit_; }
  void set_scan_limit(long n) {
    if (n < 0) throw std::invalid_argument("scan limit must be nonnegative");
    scan_limit_ = n;
  }

  /// Installs tables loaded elsewhere (the cache); they must cover the ceiling.
  void set_tables(StatTables t) {
    if (t.max_n < ceiling_) throw std::invalid_argument("supplied tables stop below the oracle ceiling");
    std::call_once(tables_once_, [&] { install(std::move(t)); });
  }

  const StatTables& tables() {
    std::call_once(tables_once_, [&] { install(gf_stats(ceiling_)); });
    return tables_;
  }

  const StatTables& enumerated() {
    std::call_once(enum_once_, [&] { enumerated_ = enumerate_stats(std::min(ceiling_, kAgreementCeiling)); });
    return enumerated_;
  }

  /// N(a,11,n) or M(a,11,n).
  long long count(Stat s, long a, long n) {
    tables();
    tables_.check_n(n);
    long r = ((a % 11) + 11) % 11;
    return (s == Stat::Rank ? rank11_ : crank11_)[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
  }

  long long p(long n) {
    tables().check_n(n);
    return tables_.p[static_cast<std::size_t>(n)];
  }

  std::shared_ptr<const ProductBasis> basis(long order) { return pool_.get(order); }

 private:
  void install(StatTables t) {
    tables_ = std::move(t);
    rank11_.assign(static_cast<std::size_t>(tables_.max_n + 1), {});
    crank11_.assign(static_cast<std::size_t>(tables_.max_n + 1), {});
    for (long n = 0; n <= tables_.max_n; ++n)
      for (long m = -n; m <= n; ++m) {
        auto r = static_cast<std::size_t>(((m % 11) + 11) % 11);
        rank11_[static_cast<std::size_t>(n)][r] += tables_.N(m, n);
        crank11_[static_cast<std::size_t>(n)][r] += tables_.M(m, n);
      }
  }

  long ceiling_;
  long scan_limit_ = 30;
  std::once_flag tables_once_, enum_once_;
  StatTables tables_, enumerated_;
  std::vector<std::array<long long, 11>> rank11_, crank11_;
  BasisPool pool_;
};

/// What a check body returns; the runner adds id, order and timing.
struct Outcome {
  Status status = Status::Pass;
  std::optional<FailurePoint> failure;
  std::vector<std::string> notes;

  void fail(long n, const std::string& lhs, const std::string& rhs, const std::string& note = {}) {
    if (status != Status::Fail) {
      status = Status::Fail;
      failure = FailurePoint{n, lhs, rhs};
    }
    if (!note.empty()) notes.push_back(note);
  }
  void emend(const std::string& note) {
    if (status == Status::Pass) status = Status::EmendedPass;
    notes.push_back(note);
  }
  void note(const std::string& s) { notes.push_back(s); }
  void merge(const Outcome& o) {
    if (o.status == Status::Fail && o.failure) fail(o.failure->n, o.failure->lhs, o.failure->rhs);
    else if (o.status == Status::EmendedPass && status == Status::Pass) status = Status::EmendedPass;
    notes.insert(notes.end(), o.notes.begin(), o.notes.end());
  }
  bool ok() const { return status != Status::Fail; }
};

struct CheckSpec {
  std::string id;
  Kind kind = Kind::Identity;
  long default_order = 0;
  std::string label;
  std::vector<std::string> suites;
  /// Largest partition size the check reads from the oracle at a given order (-1: none).
  std::function<long(const Context&, long order)> oracle_need;
  std::function<Outcome(Context&, long order)> run;
};

// ---------------------------------------------------------------------------
// Comparison helpers

namespace detail {

inline Outcome compare(const Series& lhs, const Series& rhs, long order) {
  Outcome o;
  if (auto e = first_difference(lhs, rhs, order)) o.fail(*e, to_string(lhs.coeff(*e)), to_string(rhs.coeff(*e)));
  return o;
}

/// lhs == rhs (mod p) coefficientwise below order.
inline Outcome compare_mod(const Series& lhs, const Series& rhs, long order, long p = 11) {
  Outcome o;
  Series d = reduce_mod(sub(lhs, rhs).truncated(order), p);
  for (long e = d.valuation(); e < order; ++e)
    if (d.numerator(e) != 0) {
      o.fail(e, to_string(lhs.coeff(e)), to_string(rhs.coeff(e)), "difference is not divisible by " + std::to_string(p));
      break;
    }
  return o;
}

inline Outcome nonneg(const Series& s, long order) {
  Outcome o;
  if (auto e = first_negative(s, order)) o.fail(*e, to_string(s.coeff(*e)), "0");
  return o;
}

/// Dissected-variable length covering every 11n + m < order.
inline long dissected_order(long order, int m) { return std::max(0L, ceil_div(order - m, 11)); }

/// Number of n with 11n + m <= ceiling.
inline long dissected_count(long ceiling, int m) { return ceiling < m ? 0 : (ceiling - m) / 11 + 1; }

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

template <class T, std::size_t N>
std::string vec_string(const std::array<T, N>& v, std::size_t split = N) {
  std::ostringstream os;
  for (std::size_t i = 0; i < N; ++i) {
    if (i) os << (i == split ? ";" : ",");
    if constexpr (std::is_same_v<T, mpq_class>)
      os << to_string(v[i]);
    else
      os << v[i];
  }
  return os.str();
}

inline std::string form_string(const LinearForm& f) {
  std::string pos, neg;
  auto add = [](std::string& s, long c, const std::string& name) {
    if (c == 0) return;
    if (!s.empty()) s += "+";
    if (c != 1) s += std::to_string(c);
    s += name;
  };
  for (int i = 0; i < 6; ++i) {
    long c = f.N[static_cast<std::size_t>(i)];
    add(c > 0 ? pos : neg, std::labs(c), "N" + std::to_string(i));
  }
  for (int i = 0; i < 6; ++i) {
    long c = f.M[static_cast<std::size_t>(i)];
    add(c > 0 ? pos : neg, std::labs(c), "M" + std::to_string(i));
  }
  add(f.P > 0 ? pos : neg, std::labs(f.P), "P");
  return (pos.empty() ? "0" : pos) + " >= " + (neg.empty() ? "0" : neg);
}

}  // namespace detail

/// Value of a linear form at 11n + m from the oracle (P contributes p/11).
inline mpq_class evaluate_form(Context& ctx, const LinearForm& f, long n, int m) {
  long N = 11 * n + m;
  mpz_class total = 0;
  for (int i = 0; i < 6; ++i) {
    if (f.N[static_cast<std::size_t>(i)]) total += mpz_class(f.N[static_cast<std::size_t>(i)]) * mpz_class(static_cast<long>(ctx.count(Stat::Rank, i, N)));
    if (f.M[static_cast<std::size_t>(i)]) total += mpz_class(f.M[static_cast<std::size_t>(i)]) * mpz_class(static_cast<long>(ctx.count(Stat::Crank, i, N)));
  }
  mpq_class v(total);
  if (f.P) v += mpq_class(mpz_class(f.P) * mpz_class(static_cast<long>(ctx.p(N))), 11);
  v.canonicalize();
  return v;
}

/// Rank part plus crank part of a certificate as a series in the dissected variable.
inline Series combination_series(const ProductBasis& B, const LinearForm& f, int m) {
  Series s;
  for (int i = 0; i < 6; ++i) {
    if (long c = f.N[static_cast<std::size_t>(i)]) s = add(s, scale(q_table(B, i, m), mpq_class(c)));
    if (long c = f.M[static_cast<std::size_t>(i)]) s = add(s, scale(qc_table(B, i, m), mpq_class(c)));
  }
  if (s.is_exact_zero()) s = Series::zero_to(B.inner_order());
  return s;
}

/// The same combination computed on coefficient vectors: a residue bracket
/// (or Theta at m = 6). nullopt when the mock parts do not cancel.
inline std::optional<std::array<mpq_class, 6>> symbolic_combination(const LinearForm& f, int m) {
  std::array<mpq_class, 6> v{};
  if (m == 6) {
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t k = 0; k < 5; ++k) v[k] += mpq_class(f.N[i] * theta6_rows()[i][k]);
    return v;
  }
  long mock = 0;
  for (const auto& t : mock_terms())
    if (t.m == m) mock += f.N[static_cast<std::size_t>(t.a)] * t.coef;
  if (mock != 0) return std::nullopt;
  const std::array<long, 6> unit{1, -1, -1, -1, -1, 0};
  for (int i = 0; i < 6; ++i) {
    const auto& e = q_entry(i, m);
    for (std::size_t k = 0; k < 6; ++k) {
      v[k] += mpq_class(f.N[static_cast<std::size_t>(i)] * e.full[k], 11);
      v[k] += mpq_class(f.M[static_cast<std::size_t>(i)] * crank_rows()[static_cast<std::size_t>(i)].at(m) * unit[k], 11);
    }
  }
  for (auto& x : v) x.canonicalize();
  return v;
}

inline Series certificate_rhs(const ProductBasis& B, int m, bool theta_form, const ResidueCoeffs& c) {
  if (theta_form) return theta(B, {c[0], c[1], c[2], c[3], c[4]});
  return residue_bracket(B, m, c);
}

inline Series congruence_rhs(const ProductBasis& B, int m, const CongruenceRhs& r) {
  Series s;
  switch (r.kind) {
    case CongruenceRhs::Kind::Zero: s = Series::zero_to(B.inner_order()); break;
    case CongruenceRhs::Kind::Residue: s = residue_bracket(B, m, r.c); break;
    case CongruenceRhs::Kind::Theta: s = theta(B, {r.c[0], r.c[1], r.c[2], r.c[3], r.c[4]}); break;
    case CongruenceRhs::Kind::Unit: s = scale(unit_residue(B, m), mpq_class(r.c[0])); break;
  }
  if (r.mock != 0)
    s = add(s, scale(shift(mock_g(2, 11, B.inner_order() - 2), 2), mpq_class(r.mock)));
  return s;
}

/// sum_{n < len} f(11n + m) q^n.
template <class F>
Series oracle_series(long len, int m, F f) {
  std::vector<mpq_class> c;
  c.reserve(static_cast<std::size_t>(len));
  for (long n = 0; n < len; ++n) c.push_back(mpq_class(f(11 * n + m)));
  return Series::from_rationals(0, len, c);
}

// ---------------------------------------------------------------------------
// Registry

namespace detail {

inline long no_oracle(const Context&, long) { return -1; }
inline long oracle_to_order(const Context&, long order) { return order - 1; }
inline long oracle_to_ceiling(const Context& ctx, long) { return ctx.oracle_ceiling(); }

inline std::string monomial_text(const std::pair<long, std::string>& t) { return std::to_string(t.first) + "*" + t.second; }

inline Series relation_sum(const ProductBasis& B, const ProductRelation& r) {
  Series s;
  for (const auto& [c, text] : r.terms) s = add(s, scale(B.eval(parse_monomial(text)), mpq_class(c)));
  return s;
}

inline void add_structural(std::vector<CheckSpec>& out) {
  const std::vector<std::string> suite{"structural"};
  auto relation = [&](const ProductRelation& r, const std::string& label, std::vector<std::string> suites) {
    out.push_back({r.id, Kind::Identity, 500, label, std::move(suites), no_oracle, [r](Context& ctx, long order) {
                     auto B = ctx.basis(order);
                     return compare(relation_sum(*B, r), Series(), order);
                   }});
  };
  relation(product_of_blocks(), "P1 P2 P3 P4 P5 = J1 J11^4", suite);
  relation(cube_decomposition(), "J1^3 = P5^2 P4 - q^2 P1^2 P3 - q P4^2 P1 - q P2^2 P5 - q P3^2 P2", suite);
  for (const auto& r : weierstrass_relations()) {
    std::string label = "three-term theta relation: ";
    for (const auto& t : r.terms) label += monomial_text(t) + " ";
    label += "= 0";
    relation(r, label, {"structural", "wr-all"});
  }
  out.push_back({"j11sq-bracket", Kind::Identity, 500, "J11^2 = [1,-1,-1,-1,-1]", suite, no_oracle, [](Context& ctx, long order) {
                   auto B = ctx.basis(order);
                   return compare(bracket(*B, {1, -1, -1, -1, -1}), B->eval(parse_monomial("J11^2")), order);
                 }});
  for (int a = 1; a <= 3; ++a) {
    out.push_back({"quintuple-a" + std::to_string(a), Kind::Identity, 500,
                   "quintuple product: J11^2 P_2a/(P_a P_3a) = J33^3/(J_{3a,33} J_{11-3a,33}) + q^a J33^3/(J_{3a,33} J_{22-3a,33}), a=" +
                       std::to_string(a),
                   suite, no_oracle, [a](Context& ctx, long order) {
                     auto B = ctx.basis(order);
                     Monomial lhs_m = parse_monomial("J11^2") * Monomial::P(fold_p_index(2 * a)) /
                                      (Monomial::P(fold_p_index(a)) * Monomial::P(fold_p_index(3 * a)));
                     const long inner = order + 1;
                     Series j33c = pow(euler_J(33, inner), 3);
                     Series inv3a = invert(theta_j(3 * a, 33, inner));
                     Series rhs = add(mul(mul(j33c, inv3a), invert(theta_j(11 - 3 * a, 33, inner))),
                                      shift(mul(mul(j33c, inv3a), invert(theta_j(22 - 3 * a, 33, inner))), a));
                     return compare(B->eval(lhs_m), rhs, order);
                   }});
  }
  struct Family {
    long modulus;
    std::vector<long> indices;
  };
  const std::vector<Family> families{{11, {1, 2, 3, 4, 5}},
                                     {33, {2, 3, 5, 6, 8, 9, 13, 16, 19}},
                                     {121, {11, 22, 33, 44, 55}}};
  for (const auto& f : families) {
    out.push_back({"triple-product-" + std::to_string(f.modulus), Kind::Identity, 500,
                   "Jacobi triple product: bilateral sum = (x;q)(q/x;q)(q;q) for J_{a," + std::to_string(f.modulus) + "}",
                   suite, no_oracle, [f](Context&, long order) {
                     Outcome o;
                     for (long a : f.indices) {
                       Outcome one = compare(theta_j(a, f.modulus, order), theta_j_product(a, f.modulus, order), order);
                       if (!one.ok()) one.notes.push_back("index a=" + std::to_string(a));
                       o.merge(one);
                     }
                     return o;
                   }});
  }
  out.push_back({"frobenius-j1", Kind::Congruence, 500, "J1^13 == J1^2 J11 (mod 11)", {"structural", "congruences"}, no_oracle,
                 [](Context& ctx, long order) {
                   auto B = ctx.basis(order);
                   return compare_mod(B->eval(parse_monomial("J1^13")), B->eval(parse_monomial("J1^2 J11")), order);
                 }});
}

inline void add_dissections(std::vector<CheckSpec>& out) {
  for (int a = 0; a <= 5; ++a) {
    out.push_back({"thm-1.2-a" + std::to_string(a), Kind::Identity, 330,
                   "crank deviation D_C(" + std::to_string(a) + ",11) equals its v11 row", {"crank-dissection"}, oracle_to_order,
                   [a](Context& ctx, long order) {
                     return compare(deviation_crank(ctx.tables(), a, 11, order), build_v11(crank_rows()[static_cast<std::size_t>(a)], order), order);
                   }});
    out.push_back({"thm-1.3-a" + std::to_string(a), Kind::Identity, 330,
                   "rank deviation D(" + std::to_string(a) + ",11) = G11 + v11 + sum_m q^m Theta_{a,m}(q^11)", {"rank-dissection"},
                   oracle_to_order, [a](Context& ctx, long order) {
                     auto B = ctx.basis(ceil_div(order, 11) + 1);
                     std::array<Series, 11> parts;
                     for (int m = 0; m < 11; ++m) parts[static_cast<std::size_t>(m)] = theta_part_integral(*B, a, m);
                     Series rhs = add(add(build_g11(rank_g11_rows()[static_cast<std::size_t>(a)], order),
                                          build_v11(rank_v11_rows()[static_cast<std::size_t>(a)], order)),
                                      undissect(parts, order));
                     return compare(deviation_rank(ctx.tables(), a, 11, order), rhs, order);
                   }});
    out.push_back({"reassembly-a" + std::to_string(a), Kind::Identity, 330,
                   "sum_m q^m Q_{" + std::to_string(a) + ",m}(q^11) reassembles D(" + std::to_string(a) + ",11)", {"rank-dissection"},
                   oracle_to_order, [a](Context& ctx, long order) {
                     auto B = ctx.basis(ceil_div(order, 11) + 1);
                     std::array<Series, 11> parts;
                     for (int m = 0; m < 11; ++m) parts[static_cast<std::size_t>(m)] = q_table(*B, a, m);
                     return compare(deviation_rank(ctx.tables(), a, 11, order), undissect(parts, order), order);
                   }});
  }
  for (int a = 0; a <= 5; ++a)
    for (int m = 0; m <= 10; ++m) {
      std::string tag = std::to_string(a) + "-" + std::to_string(m);
      out.push_back({"q-" + tag, Kind::Identity, 330,
                     "Q_{" + std::to_string(a) + "," + std::to_string(m) + "}: dissected rank deviation equals the table entry" +
                         (m == 6 ? std::string(" Theta_{a,6}") : std::string(" (full and split forms)")),
                     {"q-tables", "rank-dissection"}, oracle_to_order, [a, m](Context& ctx, long order) {
                       long len = dissected_order(order, m);
                       auto B = ctx.basis(len + 1);
                       Series oracle = dissect(deviation_rank(ctx.tables(), a, 11, order), 11, m);
                       Outcome o = compare(oracle, q_table(*B, a, m), len);
                       if (m != 6) {
                         Outcome split = compare(oracle, q_table_split(*B, a, m), len);
                         if (!split.ok()) split.notes.push_back("split form differs");
                         o.merge(split);
                       }
                       return o;
                     }});
      out.push_back({"qc-" + tag, Kind::Identity, 330,
                     "Q^C_{" + std::to_string(a) + "," + std::to_string(m) + "}: dissected crank deviation equals (v/11) J11^2 prefix",
                     {"crank-dissection"}, oracle_to_order, [a, m](Context& ctx, long order) {
                       long len = dissected_order(order, m);
                       auto B = ctx.basis(len + 1);
                       return compare(dissect(deviation_crank(ctx.tables(), a, 11, order), 11, m), qc_table(*B, a, m), len);
                     }});
    }
  const auto& forms = theta_form_entries();
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const auto e = forms[i];
    char buf[32];
    std::snprintf(buf, sizeof buf, "qtheta-%02zu", i + 1);
    out.push_back({buf, Kind::Identity, 330,
                   "theta-quotient form of Q_{" + std::to_string(e.a) + "," + std::to_string(e.m) + "} (row " + std::to_string(i + 1) + ")",
                   {"theta-forms", "rank-dissection"}, oracle_to_order, [e](Context& ctx, long order) {
                     long len = dissected_order(order, e.m);
                     auto B = ctx.basis(len + 1);
                     Series value = q_theta_form(*B, e);
                     Outcome printed = compare(dissect(deviation_rank(ctx.tables(), e.a, 11, order), 11, e.m), value, len);
                     if (printed.ok() || (e.a == e.true_a && e.m == e.true_m)) return printed;
                     long tlen = dissected_order(order, e.true_m);
                     Outcome relabeled = compare(dissect(deviation_rank(ctx.tables(), e.true_a, 11, order), 11, e.true_m), value, tlen);
                     if (!relabeled.ok()) return printed;
                     relabeled.emend("row is printed as Q_{" + std::to_string(e.a) + "," + std::to_string(e.m) + "} but equals Q_{" +
                                     std::to_string(e.true_a) + "," + std::to_string(e.true_m) + "}");
                     return relabeled;
                   }});
  }
}

inline void add_counts(std::vector<CheckSpec>& out) {
  for (int m = 0; m <= 10; ++m) {
    std::string label;
    for (const auto& s : crank_equalities()[static_cast<std::size_t>(m)]) label += (label.empty() ? "" : ", ") + s;
    out.push_back({"thm-5.1-m" + std::to_string(m), Kind::Identity, 0, "crank equalities at 11n+" + std::to_string(m) + ": " + label,
                   {"counts"}, oracle_to_ceiling, [m](Context& ctx, long) {
                     Outcome o;
                     long len = dissected_count(ctx.oracle_ceiling(), m);
                     for (const auto& chain : crank_equalities()[static_cast<std::size_t>(m)]) {
                       auto parts = detail::split(chain, '=');
                       for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
                         LinearForm l = parse_linear(parts[j]), r = parse_linear(parts[j + 1]);
                         for (long n = 0; n < len && o.ok(); ++n) {
                           mpq_class x = evaluate_form(ctx, l, n, m), y = evaluate_form(ctx, r, n, m);
                           if (x != y) o.fail(n, to_string(x), to_string(y), std::string(parts[j]) + " = " + std::string(parts[j + 1]));
                         }
                       }
                     }
                     return o;
                   }});
    if (m != 6) {
      long c = kPartitionCongruence[static_cast<std::size_t>(m)];
      out.push_back({"thm-5.2-m" + std::to_string(m), Kind::Congruence, 0,
                     "sum p(11n+" + std::to_string(m) + ") q^n == " + std::to_string(c) + " J11^2 " + residue_shape(m).prefix + " (mod 11)",
                     {"counts"}, oracle_to_ceiling, [m, c](Context& ctx, long) {
                       long len = dissected_count(ctx.oracle_ceiling(), m);
                       auto B = ctx.basis(len + 1);
                       Series lhs = oracle_series(len, m, [&](long N) { return mpz_class(static_cast<long>(ctx.p(N))); });
                       return compare_mod(lhs, scale(unit_residue(*B, m), mpq_class(c)), len);
                     }});
    }
    const auto& w = kRankCongruence[static_cast<std::size_t>(m)];
    LinearForm f;
    for (std::size_t i = 0; i < 6; ++i) f.N[i] = w[i];
    std::string flabel = form_string(f);
    flabel = flabel.substr(0, flabel.find(" >= ")) + " - (" + flabel.substr(flabel.find(" >= ") + 4) + ")";
    out.push_back({"thm-5.3-m" + std::to_string(m), Kind::Congruence, 0,
                   "linear rank congruence at 11n+" + std::to_string(m) + ": " + flabel + " == 0 (mod 11)", {"counts"}, oracle_to_ceiling,
                   [m, f](Context& ctx, long) {
                     Outcome o;
                     if (f.weight() != 0) o.fail(-1, std::to_string(f.weight()), "0", "coefficient sum is nonzero");
                     long len = dissected_count(ctx.oracle_ceiling(), m);
                     for (long n = 0; n < len && o.ok(); ++n) {
                       mpq_class v = evaluate_form(ctx, f, n, m);
                       mpz_class r;
                       mpz_fdiv_r_ui(r.get_mpz_t(), v.get_num().get_mpz_t(), 11);
                       if (r != 0) o.fail(n, to_string(v), "0 mod 11");
                     }
                     return o;
                   }});
  }
  out.push_back({"thm-5.3-witness", Kind::Identity, 330, "Q_{2,0} - 5Q_{3,0} - 2Q_{4,0} + 6Q_{5,0} = 11[0,-1,0,1,-1;0]_0", {"counts"},
                 no_oracle, [](Context& ctx, long order) {
                   auto B = ctx.basis(order);
                   LinearForm f;
                   f.N = {0, 0, 1, -5, -2, 6};
                   return compare(combination_series(*B, f, 0), residue_bracket(*B, 0, kRankCongruenceWitness), order);
                 }});
}

inline void add_positivity(std::vector<CheckSpec>& out) {
  const std::vector<std::string> suite{"positivity"};
  for (int a = 1; a <= 5; ++a) {
    std::string s = "J11^2 / P" + std::to_string(a);
    out.push_back({"lemma-6.3-a" + std::to_string(a), Kind::Nonnegativity, 500, s + " >= 0", suite, no_oracle, [s](Context& ctx, long order) {
                     return nonneg(ctx.basis(order)->eval(parse_monomial(s)), order);
                   }});
    out.push_back({"lemma-6.3-sum-a" + std::to_string(a), Kind::Identity, 500,
                   s + " = sum_{n>=0} q^{11 n(n-1)/2 + " + (a == 1 ? "" : std::to_string(a)) + "n} / ((q^" + std::to_string(2 * a) + ";q^22)(q^" +
                       std::to_string(22 - 2 * a) + ";q^22))", suite, no_oracle,
                   [s, a](Context& ctx, long order) {
                     const long inner = order + 1;
                     Series den = invert(mul(pochhammer(2 * a, 22, std::nullopt, inner), pochhammer(22 - 2 * a, 22, std::nullopt, inner)));
                     auto sum_from = [&](long kmin) {
                       std::vector<Series::Int> c(static_cast<std::size_t>(inner));
                       for (long k = kmin;; ++k) {
                         long e = 11 * (k * (k - 1) / 2) + a * k;
                         if (k > 0 && e >= inner) break;
                         if (e >= 0 && e < inner) c[static_cast<std::size_t>(e)] += 1;
                       }
                       return Series(0, inner, std::move(c));
                     };
                     Series lhs = ctx.basis(order)->eval(parse_monomial(s));
                     Outcome printed = compare(lhs, mul(den, sum_from(0)), order);
                     if (printed.ok()) return printed;
                     // the triple product needs the bilateral sum over all integers n
                     long kmin = 0;
                     while (11 * ((kmin - 1) * (kmin - 2) / 2) + a * (kmin - 1) < inner) --kmin;
                     Outcome bilateral = compare(lhs, mul(den, sum_from(kmin)), order);
                     if (!bilateral.ok()) return printed;
                     bilateral.emend("holds with the sum over all integers n; the one-sided sum n >= 0 fails at q^" +
                                     std::to_string(printed.failure->n));
                     return bilateral;
                   }});
  }
  for (int a = 1; a <= 4; ++a) {
    Monomial mono = parse_monomial("J11^2") * Monomial::P(fold_p_index(2 * a)) / (Monomial::P(fold_p_index(a)) * Monomial::P(fold_p_index(3 * a)));
    out.push_back({"lemma-6.3-quot-a" + std::to_string(a), Kind::Nonnegativity, 500,
                   "J11^2 P_" + std::to_string(2 * a) + " / (P_" + std::to_string(a) + " P_" + std::to_string(3 * a) + ") >= 0", suite,
                   no_oracle, [mono](Context& ctx, long order) { return nonneg(ctx.basis(order)->eval(mono), order); }});
  }
  out.push_back({"lemma-6.4", Kind::Nonnegativity, 500,
                 "J11^a prod (P_i/J11)^alpha_i >= 0 for alpha_i <= 0, sum alpha = r, 0 <= a <= -r (all blocks with sum |alpha| <= 3)", suite,
                 no_oracle, [](Context& ctx, long order) {
                   Outcome o;
                   auto B = ctx.basis(order);
                   std::array<int, 5> alpha{};
                   std::function<void(int, int)> rec = [&](int i, int left) {
                     if (!o.ok()) return;
                     if (i == 5) {
                       int r = 0;
                       for (int x : alpha) r += x;
                       for (int a : {0, -r}) {
                         // J11^a prod (P_i / J11)^alpha_i = J11^(a - r) prod P_i^alpha_i
                         Monomial m = Monomial::atom(Atom::J11, a - r);
                         for (int k = 0; k < 5; ++k)
                           if (alpha[static_cast<std::size_t>(k)]) m = m * Monomial::P(k + 1, alpha[static_cast<std::size_t>(k)]);
                         Outcome one = nonneg(B->eval(m), order);
                         if (!one.ok()) {
                           one.notes.push_back("block alpha=(" + vec_string(alpha) + "), a=" + std::to_string(a));
                           o.merge(one);
                           return;
                         }
                       }
                       return;
                     }
                     for (int x = 0; x <= left; ++x) {
                       alpha[static_cast<std::size_t>(i)] = -x;
                       rec(i + 1, left - x);
                     }
                     alpha[static_cast<std::size_t>(i)] = 0;
                   };
                   rec(0, 3);
                   return o;
                 }});
  for (const auto& cf : closed_forms()) {
    std::string lhs_text = cf.kind == ClosedForm::Kind::Theta ? "Theta(" + vec_string(std::array<long, 5>{cf.c[0], cf.c[1], cf.c[2], cf.c[3], cf.c[4]}) + ")"
                           : cf.kind == ClosedForm::Kind::Bracket
                               ? "[" + vec_string(std::array<long, 5>{cf.c[0], cf.c[1], cf.c[2], cf.c[3], cf.c[4]}) + "]"
                               : "[" + vec_string(cf.c, 5) + "]_" + std::to_string(cf.m);
    out.push_back({cf.id, Kind::Nonnegativity, 500, lhs_text + " = " + cf.product + " >= 0", suite, no_oracle, [cf](Context& ctx, long order) {
                     auto B = ctx.basis(order);
                     Series lhs = cf.kind == ClosedForm::Kind::Theta     ? theta(*B, {cf.c[0], cf.c[1], cf.c[2], cf.c[3], cf.c[4]})
                                  : cf.kind == ClosedForm::Kind::Bracket ? bracket(*B, {cf.c[0], cf.c[1], cf.c[2], cf.c[3], cf.c[4]})
                                                                         : residue_bracket(*B, cf.m, cf.c);
                     Series rhs = B->eval(parse_monomial(cf.product));
                     Outcome o = compare(lhs, rhs, order);
                     if (!o.ok()) {
                       // the product may be printed against a sibling bracket of the same group
                       const std::string group = cf.id.substr(0, cf.id.rfind('-'));
                       for (const auto& other : closed_forms()) {
                         if (other.id == cf.id || other.id.rfind(group + "-", 0) != 0) continue;
                         Series alt = B->eval(parse_monomial(other.product));
                         if (!compare(lhs, alt, order).ok()) continue;
                         o = Outcome{};
                         o.emend("bracket equals the product printed with " + other.id + ": " + other.product);
                         rhs = alt;
                         break;
                       }
                       if (!o.ok()) o.notes.push_back("closed form differs");
                     }
                     o.merge(nonneg(rhs, order));
                     return o;
                   }});
  }
  for (int i = 1; i <= 3; ++i) {
    BracketCoeffs d{};
    d[static_cast<std::size_t>(i)] = -1;
    d[static_cast<std::size_t>(i + 1)] = 1;
    out.push_back({"remark-6.7-" + std::to_string(i), Kind::Nonnegativity, 500, "J1 [" + vec_string(d) + "] >= 0", suite, no_oracle,
                   [d](Context& ctx, long order) {
                     auto B = ctx.basis(order);
                     return nonneg(bracket(*B, d, Monomial::atom(Atom::J1)), order);
                   }});
  }
  for (int m = 0; m <= 10; ++m) {
    if (m == 6) continue;
    out.push_back({"prop-6.8-m" + std::to_string(m), Kind::Nonnegativity, 500,
                   "[0,1,0,0,0;0]_" + std::to_string(m) + " <= [0,0,1,0,0;0]_" + std::to_string(m) + " <= [0,0,0,1,0;0]_" + std::to_string(m) +
                       " <= [0,0,0,0,1;0]_" + std::to_string(m),
                   suite, no_oracle, [m](Context& ctx, long order) {
                     auto B = ctx.basis(order);
                     Outcome o;
                     for (std::size_t i = 1; i <= 3 && o.ok(); ++i) {
                       ResidueCoeffs d{};
                       d[i] = -1;
                       d[i + 1] = 1;
                       o.merge(nonneg(residue_bracket(*B, m, d), order));
                     }
                     return o;
                   }});
  }
  out.push_back({"exception-block", Kind::Nonnegativity, 500,
                 std::string(kExceptionBlock) + " = q - q^2 + q^5 + ...: the only negative coefficient is at q^2", {"positivity", "conjectures"},
                 no_oracle, [](Context& ctx, long order) {
                   Outcome o;
                   Series s = ctx.basis(order)->eval(parse_monomial(kExceptionBlock));
                   for (std::size_t e = 0; e < kExceptionPrefix.size() && o.ok(); ++e)
                     if (s.coeff(static_cast<long>(e)) != kExceptionPrefix[e])
                       o.fail(static_cast<long>(e), to_string(s.coeff(static_cast<long>(e))), std::to_string(kExceptionPrefix[e]), "leading coefficients");
                   for (long e = s.valuation(); e < order && o.ok(); ++e)
                     if ((s.numerator(e) < 0) != (e == 2)) o.fail(e, to_string(s.coeff(e)), e == 2 ? "< 0" : ">= 0");
                   return o;
                 }});
}

inline void add_inequalities(std::vector<CheckSpec>& out) {
  for (const auto& row : inequality_rows()) {
    out.push_back({row.id(), Kind::Certificate, 330, row.text + " at 11n+" + std::to_string(row.m) + "; certificate " + row.certificate_text,
                   {"inequalities"}, oracle_to_ceiling, [row](Context& ctx, long order) {
                     Outcome o;
                     std::optional<Certificate> cert = row.certificate;
                     if (!cert) {
                       // rebuild the left vector from the inequality, keep the printed right side
                       auto eq = row.certificate_text.find('=');
                       std::string rebuilt = "(" + vec_string(row.form.N);
                       const auto& classes = crank_classes(row.m);
                       if (!classes.empty()) {
                         rebuilt += ";";
                         for (std::size_t j = 0; j < classes.size(); ++j)
                           rebuilt += (j ? "," : "") + std::to_string(row.form.M[static_cast<std::size_t>(classes[j])]);
                       }
                       rebuilt += ")_" + std::to_string(row.m) + row.certificate_text.substr(eq);
                       cert = parse_certificate(rebuilt);
                       if (!cert) {
                         o.fail(-1, row.certificate_text, "", "certificate does not parse");
                         return o;
                       }
                       o.emend("printed certificate is malformed; rebuilt as " + rebuilt);
                     }
                     // the certificate's deviation combination must be the printed inequality
                     LinearForm claimed = row.form;
                     claimed.P = 0;
                     const bool matches = cert->form == claimed && row.form.P == -cert->form.weight();
                     if (!matches) {
                       auto text_sym = symbolic_combination(claimed, row.m);
                       std::array<mpq_class, 6> printed_rhs;
                       for (std::size_t k = 0; k < 6; ++k) printed_rhs[k] = cert->rhs[k];
                       if (text_sym && *text_sym == printed_rhs) {
                         o.emend("certificate vector encodes " + form_string(cert->form) + "; the printed right side belongs to " + row.text);
                         cert->form = claimed;
                       } else {
                         o.emend("certificate encodes " + form_string(cert->form) + " rather than the printed " + row.text);
                       }
                     }
                     auto sym = symbolic_combination(cert->form, row.m);
                     if (!sym) {
                       o.fail(-1, "mock parts", "0", "mock parts of the combination do not cancel");
                       return o;
                     }
                     ResidueCoeffs rhs = cert->rhs;
                     std::array<mpq_class, 6> printed;
                     for (std::size_t k = 0; k < 6; ++k) printed[k] = rhs[k];
                     if (*sym != printed) {
                       bool integral = true;
                       for (std::size_t k = 0; k < 6; ++k) {
                         integral = integral && (*sym)[k].get_den() == 1;
                         if (integral) rhs[k] = (*sym)[k].get_num().get_si();
                       }
                       if (!integral) {
                         o.fail(-1, vec_string(*sym, 5), vec_string(printed, 5), "combination is not an integer bracket");
                         return o;
                       }
                       std::string v = vec_string(*sym, 5);
                       if (cert->theta) v = "Theta(" + v.substr(0, v.find(';')) + ")";
                       else v = "[" + v + "]";
                       o.emend("combination equals " + v + ", not the printed right side");
                     }
                     auto B = ctx.basis(order);
                     Series rhs_series = certificate_rhs(*B, row.m, cert->theta, rhs);
                     Outcome eq = compare(combination_series(*B, cert->form, row.m), rhs_series, order);
                     if (!eq.ok()) eq.notes.push_back("certificate identity fails");
                     o.merge(eq);
                     Outcome pos = nonneg(rhs_series, order);
                     if (!pos.ok()) pos.notes.push_back("certificate right side has a negative coefficient");
                     o.merge(pos);
                     // oracle path: integers for every 11n+m <= ceiling
                     LinearForm cert_form = cert->form;
                     cert_form.P = -cert->form.weight();
                     long len = dissected_count(ctx.oracle_ceiling(), row.m);
                     for (long n = 0; n < len; ++n) {
                       mpq_class v = evaluate_form(ctx, cert_form, n, row.m);
                       if (v < 0) {
                         o.fail(n, to_string(v), ">= 0", "certified inequality fails on the oracle");
                         break;
                       }
                     }
                     if (!(cert->form == claimed))
                       for (long n = 0; n < len; ++n) {
                         mpq_class v = evaluate_form(ctx, row.form, n, row.m);
                         if (v < 0) {
                           o.note("printed inequality " + row.text + " fails at n=" + std::to_string(n));
                           break;
                         }
                       }
                     return o;
                   }});
  }
  for (const auto& chain : crank_inequality_chains()) {
    out.push_back({chain.id, Kind::Certificate, 330, chain.text + " at 11n+" + std::to_string(chain.m) + " (P = p/11)", {"inequalities"},
                   oracle_to_ceiling, [chain](Context& ctx, long order) {
                     Outcome o;
                     auto B = ctx.basis(order);
                     long len = dissected_count(ctx.oracle_ceiling(), chain.m);
                     for (const auto& link : parse_chain(chain.text)) {
                       LinearForm d = link.left - link.right;
                       LinearForm dev = d;
                       dev.P = 0;
                       Outcome s = nonneg(combination_series(*B, dev, chain.m), order);
                       if (!s.ok()) s.notes.push_back(link.text + ": crank block has a negative coefficient");
                       o.merge(s);
                       for (long n = 0; n < len; ++n) {
                         mpq_class v = evaluate_form(ctx, d, n, chain.m);
                         if (v < 0) {
                           o.fail(n, to_string(v), ">= 0", link.text + " fails on the oracle");
                           break;
                         }
                       }
                     }
                     return o;
                   }});
  }
}

inline void add_congruences(std::vector<CheckSpec>& out) {
  auto moment_check = [&](const MomentCongruence& c, Stat stat, const std::string& label) {
    out.push_back({c.id, Kind::Congruence, 330, label, {"congruences"}, oracle_to_order, [c, stat](Context& ctx, long order) {
                     long len = dissected_order(order, c.m);
                     auto B = ctx.basis(len + 1);
                     const StatTables& t = ctx.tables();
                     Series lhs = oracle_series(len, c.m, [&](long N) {
                       return c.k == 0 ? mpz_class(static_cast<long>(t.spt[static_cast<std::size_t>(N)])) : moment(t, stat, c.k, N);
                     });
                     return compare_mod(lhs, congruence_rhs(*B, c.m, c.rhs), len);
                   }});
  };
  auto rhs_text = [](const MomentCongruence& c) {
    std::string s;
    switch (c.rhs.kind) {
      case CongruenceRhs::Kind::Zero: s = "0"; break;
      case CongruenceRhs::Kind::Residue: s = "[" + vec_string(c.rhs.c, 5) + "]_" + std::to_string(c.m); break;
      case CongruenceRhs::Kind::Theta:
        s = "Theta(" + vec_string(std::array<long, 5>{c.rhs.c[0], c.rhs.c[1], c.rhs.c[2], c.rhs.c[3], c.rhs.c[4]}) + ")";
        break;
      case CongruenceRhs::Kind::Unit: s = std::to_string(c.rhs.c[0]) + " J11^2 prefix"; break;
    }
    if (c.rhs.mock) s = std::to_string(c.rhs.mock) + " q^2 g(q^2;q^11) + " + s;
    return s;
  };
  for (const auto& c : spt_congruences())
    moment_check(c, Stat::Rank, "sum spt(11n+" + std::to_string(c.m) + ") q^n == " + rhs_text(c) + " (mod 11)");
  for (const auto& c : rank_moment_congruences())
    moment_check(c, Stat::Rank, "T_{" + std::to_string(c.k) + "," + std::to_string(c.m) + "} == " + rhs_text(c) + " (mod 11)");
  for (const auto& c : residue0_mock_congruences())
    moment_check(c, Stat::Rank,
                 (c.k == 0 ? std::string("sum spt(11n) q^n") : "T_{" + std::to_string(c.k) + ",0}") + " == " + rhs_text(c) + " (mod 11)");
  for (const auto& row : crank_moment_rows()) {
    std::string label = "crank moments at 11n+" + std::to_string(row.m) + ": ";
    for (std::size_t i = 0; i < 4; ++i) label += std::to_string(row.multiplier[i]) + " T^C_{" + std::to_string(2 * i + 2) + "} == ";
    label += std::to_string(row.unit) + " J11^2 " + residue_shape(row.m).prefix + " (mod 11)";
    out.push_back({"thm-2.9-m" + std::to_string(row.m), Kind::Congruence, 330, label, {"congruences"}, oracle_to_order,
                   [row](Context& ctx, long order) {
                     long len = dissected_order(order, row.m);
                     auto B = ctx.basis(len + 1);
                     const StatTables& t = ctx.tables();
                     Series rhs = row.unit ? scale(unit_residue(*B, row.m), mpq_class(row.unit)) : Series::zero_to(B->inner_order());
                     Outcome o;
                     for (std::size_t i = 0; i < 4 && o.ok(); ++i) {
                       long k = 2 * static_cast<long>(i) + 2;
                       Series lhs = oracle_series(len, row.m, [&](long N) { return mpz_class(row.multiplier[i] * moment(t, Stat::Crank, k, N)); });
                       Outcome one = compare_mod(lhs, rhs, len);
                       if (!one.ok()) one.notes.push_back("moment k=" + std::to_string(k));
                       o.merge(one);
                     }
                     return o;
                   }});
  }
  struct Eis {
    std::string id;
    int j;
    ThetaCoeffs a;
  };
  for (const auto& e : {Eis{"cor-2.10-E4", 4, {-1, 1, 1, 1, 1}}, Eis{"cor-2.10-E6", 6, {-3, 1, 5, 4, -2}}}) {
    out.push_back({e.id, Kind::Congruence, 30,
                   "E" + std::to_string(e.j) + " == Theta(" + vec_string(e.a) + ") / (J1^2 J11) (mod 11)", {"congruences"}, no_oracle,
                   [e](Context& ctx, long order) {
                     auto B = ctx.basis(order);
                     return compare_mod(eisenstein(e.j, order), theta(*B, e.a, parse_monomial("1 / J1^2 J11")), order);
                   }});
  }
  struct Input {
    std::string id;
    int k;
    std::array<long, 3> c;  // c0 + c4 E4 + c6 E6
  };
  for (const auto& in : {Input{"eisenstein-input-k2", 2, {3, 0, 0}}, Input{"eisenstein-input-k6", 6, {4, 1, 0}},
                         Input{"eisenstein-input-k8", 8, {5, 6, 6}}}) {
    out.push_back({in.id, Kind::Congruence, 330,
                   "T_{" + std::to_string(in.k) + ",6} == J1^13 (" + std::to_string(in.c[0]) + " + " + std::to_string(in.c[1]) + " E4 + " +
                       std::to_string(in.c[2]) + " E6) (mod 11)",
                   {"congruences"}, oracle_to_order, [in](Context& ctx, long order) {
                     long len = dissected_order(order, 6);
                     auto B = ctx.basis(len + 1);
                     const StatTables& t = ctx.tables();
                     Series lhs = oracle_series(len, 6, [&](long N) { return moment(t, Stat::Rank, in.k, N); });
                     Series poly = add(Series::monomial(0, in.c[0]),
                                       add(scale(eisenstein(4, len + 1), mpq_class(in.c[1])), scale(eisenstein(6, len + 1), mpq_class(in.c[2]))));
                     return compare_mod(lhs, mul(B->eval(parse_monomial("J1^13")), poly), len);
                   }});
  }
  out.push_back({"moment-reduction", Kind::Congruence, 0,
                 "rank and crank moments k=2,4,6,8 reduce mod 11 to 2 sum_{i=1}^{5} i^k count(i,11,n)", {"congruences"}, oracle_to_ceiling,
                 [](Context& ctx, long) {
                   Outcome o;
                   const StatTables& t = ctx.tables();
                   for (Stat s : {Stat::Rank, Stat::Crank})
                     for (std::size_t ki = 0; ki < 4 && o.ok(); ++ki)
                       for (long n = 0; n <= ctx.oracle_ceiling() && o.ok(); ++n) {
                         mpz_class lhs = moment(t, s, 2 * static_cast<long>(ki) + 2, n);
                         mpz_class rhs = 0;
                         for (long i = 1; i <= 5; ++i) rhs += mpz_class(kMomentReduction[ki][static_cast<std::size_t>(i - 1)]) * mpz_class(static_cast<long>(ctx.count(s, i, n)));
                         mpz_class d = lhs - rhs, r;
                         mpz_fdiv_r_ui(r.get_mpz_t(), d.get_mpz_t(), 11);
                         if (r != 0) o.fail(n, lhs.get_str(), rhs.get_str(), std::string(to_string(s)) + " moment k=" + std::to_string(2 * ki + 2));
                       }
                   return o;
                 }});
  out.push_back({"spt-identity", Kind::Identity, 0, "spt(n) = n p(n) - N_2(n)/2 for every n up to the oracle ceiling", {"congruences", "oracles"},
                 oracle_to_ceiling, [](Context& ctx, long) {
                   Outcome o;
                   const StatTables& t = ctx.tables();
                   for (long n = 0; n <= ctx.oracle_ceiling() && o.ok(); ++n) {
                     mpz_class x = spt_via_identity(t, n), y(static_cast<long>(t.spt[static_cast<std::size_t>(n)]));
                     if (x != y) o.fail(n, x.get_str(), y.get_str());
                   }
                   return o;
                 }});
  out.push_back({"spt-4", Kind::Identity, 0, "spt(4) = 10 (smallest parts of 4, 3+1, 2+2, 2+1+1, 1+1+1+1)", {"congruences", "oracles"},
                 [](const Context&, long) { return 4L; }, [](Context& ctx, long) {
                   Outcome o;
                   long a = static_cast<long>(ctx.tables().spt[4]), b = static_cast<long>(ctx.enumerated().spt[4]);
                   if (a != 10) o.fail(4, std::to_string(a), "10", "generating function");
                   if (b != 10) o.fail(4, std::to_string(b), "10", "enumeration");
                   return o;
                 }});
}

/// Smallest t such that the link holds for every n in [t, len), plus every violating n.
struct LinkScan {
  long threshold = 0;
  std::vector<long> violations;
};

inline LinkScan scan_link(Context& ctx, const ChainLink& link, int m, long len) {
  LinkScan s;
  LinearForm d = link.left - link.right;
  for (long n = 0; n < len; ++n)
    if (evaluate_form(ctx, d, n, m) < 0) {
      s.violations.push_back(n);
      s.threshold = n + 1;
    }
  return s;
}

inline std::string list_string(const std::vector<long>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline void add_conjectures(std::vector<CheckSpec>& out) {
  const auto scan_need = [](const Context& ctx, long) { return 11 * ctx.scan_limit() + 10; };
  const auto scan_len = [](Context& ctx, int) { return ctx.scan_limit() + 1; };
  {
    const auto& chain = crank_chain_residue8();
    out.push_back({chain.id, Kind::ConjectureScan, 0, chain.text + " at 11n+8 for n != 2", {"conjectures"}, scan_need,
                   [chain, scan_len](Context& ctx, long) {
                     Outcome o;
                     long len = scan_len(ctx, chain.m);
                     std::set<long> bad;
                     for (const auto& link : parse_chain(chain.text))
                       for (long n : scan_link(ctx, link, chain.m, len).violations) bad.insert(n);
                     std::vector<long> v(bad.begin(), bad.end());
                     o.note("violations " + list_string(v) + " for n < " + std::to_string(len));
                     if (v != std::vector<long>{2}) {
                       long n = v.empty() ? -1 : (v[0] == 2 && v.size() > 1 ? v[1] : v[0]);
                       o.fail(n, list_string(v), "{2}", "expected the single exception n=2");
                     }
                     return o;
                   }});
  }
  for (const auto& chain : rank_crank_chains()) {
    out.push_back({chain.id, Kind::ConjectureScan, 0, chain.text + " at 11n+" + std::to_string(chain.m), {"conjectures"},
                   scan_need, [chain, scan_len](Context& ctx, long) {
                     Outcome o;
                     long len = scan_len(ctx, chain.m);
                     std::vector<std::string> diffs;
                     for (const auto& link : parse_chain(chain.text)) {
                       LinkScan s = scan_link(ctx, link, chain.m, len);
                       if (s.threshold != link.from)
                         diffs.push_back(link.text + " printed from n=" + std::to_string(link.from) + ", observed from n=" +
                                         std::to_string(s.threshold));
                     }
                     o.note(diffs.empty() ? "all printed thresholds match" : "threshold differences: " + join(diffs, "; "));
                     return o;
                   }});
  }
  out.push_back({"conj-6.6", Kind::ConjectureScan, 330,
                 "every difference of two basis brackets [e_i - e_j;]_m (m != 6) and Theta(e_i - e_j) is eventually signed", {"conjectures"},
                 no_oracle, [](Context& ctx, long order) {
                   Outcome o;
                   auto B = ctx.basis(order);
                   long total = 0, signed_late = 0, unsettled = 0, worst = 0;
                   auto classify = [&](const Series& s) {
                     ++total;
                     // last sign change below order
                     int last_sign = 0;
                     long last_change = 0;
                     for (long e = 0; e < order; ++e) {
                       int sg = sgn(s.numerator(e));
                       if (sg == 0) continue;
                       if (last_sign != 0 && sg != last_sign) last_change = e;
                       last_sign = sg;
                     }
                     if (last_change > 0) ++signed_late;
                     if (last_change > order / 2) ++unsettled;
                     worst = std::max(worst, last_change);
                   };
                   for (int m = 0; m <= 10; ++m)
                     for (std::size_t i = 0; i < 6; ++i)
                       for (std::size_t j = i + 1; j < 6; ++j) {
                         if (m == 6) {
                           if (j >= 5) continue;
                           ThetaCoeffs d{};
                           d[i] = 1;
                           d[j] = -1;
                           classify(theta(*B, d));
                         } else {
                           ResidueCoeffs d{};
                           d[i] = 1;
                           d[j] = -1;
                           classify(residue_bracket(*B, m, d));
                         }
                       }
                   o.note(std::to_string(total) + " differences, " + std::to_string(signed_late) + " change sign at least once, latest change at q^" +
                          std::to_string(worst) + ", " + std::to_string(unsettled) + " still changing in the upper half of the window");
                   return o;
                 }});
  out.push_back({"conj-6.7", Kind::ConjectureScan, 0,
                 "every balanced two-term comparison of N_a, M_b at 11n+m is eventually signed (oracle range)", {"conjectures"},
                 oracle_to_ceiling, [](Context& ctx, long) {
                   Outcome o;
                   long total = 0, worst = 0, unsettled = 0;
                   for (int m = 0; m <= 10; ++m) {
                     long len = dissected_count(ctx.oracle_ceiling(), m);
                     std::vector<LinearForm> terms;
                     for (std::size_t i = 0; i < 6; ++i) {
                       LinearForm f;
                       f.N[i] = 1;
                       terms.push_back(f);
                       LinearForm g;
                       g.M[i] = 1;
                       terms.push_back(g);
                     }
                     for (std::size_t i = 0; i < terms.size(); ++i)
                       for (std::size_t j = i + 1; j < terms.size(); ++j) {
                         LinearForm d = terms[i] - terms[j];
                         int last_sign = 0;
                         long last_change = 0;
                         bool nonzero = false;
                         for (long n = 0; n < len; ++n) {
                           int sg = sgn(evaluate_form(ctx, d, n, m));
                           if (sg == 0) continue;
                           nonzero = true;
                           if (last_sign != 0 && sg != last_sign) last_change = n;
                           last_sign = sg;
                         }
                         if (!nonzero) continue;
                         ++total;
                         worst = std::max(worst, last_change);
                         if (last_change > len / 2) ++unsettled;
                       }
                   }
                   o.note(std::to_string(total) + " comparisons not identically zero, latest sign change at n=" + std::to_string(worst) + ", " +
                          std::to_string(unsettled) + " still changing in the upper half of the range");
                   return o;
                 }});
}

inline void add_oracles(std::vector<CheckSpec>& out) {
  out.push_back({"oracle-agreement", Kind::Identity, 0, "enumeration and generating-function oracles agree on N(m,n), M(m,n), p(n), spt(n) for n <= 50",
                 {"oracles"}, [](const Context& ctx, long) { return std::min(ctx.oracle_ceiling(), Context::kAgreementCeiling); }, [](Context& ctx, long) {
                   Outcome o;
                   const StatTables& e = ctx.enumerated();
                   const StatTables& g = ctx.tables();
                   for (long n = 0; n <= e.max_n && o.ok(); ++n) {
                     auto idx = static_cast<std::size_t>(n);
                     if (e.p[idx] != g.p[idx]) o.fail(n, std::to_string(e.p[idx]), std::to_string(g.p[idx]), "p(n)");
                     if (e.spt[idx] != g.spt[idx]) o.fail(n, std::to_string(e.spt[idx]), std::to_string(g.spt[idx]), "spt(n)");
                     for (long m = -n; m <= n && o.ok(); ++m) {
                       if (e.N(m, n) != g.N(m, n)) o.fail(n, std::to_string(e.N(m, n)), std::to_string(g.N(m, n)), "N(" + std::to_string(m) + ",n)");
                       if (e.M(m, n) != g.M(m, n)) o.fail(n, std::to_string(e.M(m, n)), std::to_string(g.M(m, n)), "M(" + std::to_string(m) + ",n)");
                     }
                   }
                   return o;
                 }});
}

}  // namespace detail

inline const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> checks = [] {
    std::vector<CheckSpec> out;
    detail::add_structural(out);
    detail::add_dissections(out);
    detail::add_counts(out);
    detail::add_positivity(out);
    detail::add_inequalities(out);
    detail::add_congruences(out);
    detail::add_conjectures(out);
    detail::add_oracles(out);
    std::set<std::string> seen;
    for (const auto& c : out)
      if (!seen.insert(c.id).second) throw std::logic_error("duplicate check id " + c.id);
    return out;
  }();
  return checks;
}

inline std::vector<std::string> suite_names() {
  std::set<std::string> s;
  for (const auto& c : registry()) s.insert(c.suites.begin(), c.suites.end());
  return {s.begin(), s.end()};
}

inline const CheckSpec& find_check(const std::string& id) {
  for (const auto& c : registry())
    if (c.id == id) return c;
  throw UnknownCheckError(id);
}

/// Resolves names to checks: "all", a suite name, an exact id, or a prefix ending in '*'.
inline std::vector<const CheckSpec*> select_checks(const std::vector<std::string>& names) {
  std::vector<bool> chosen(registry().size(), false);
  for (const auto& name : names) {
    bool any = false;
    for (std::size_t i = 0; i < registry().size(); ++i) {
      const auto& c = registry()[i];
      bool hit = name == "all" || c.id == name || std::find(c.suites.begin(), c.suites.end(), name) != c.suites.end() ||
                 (name.size() > 1 && name.back() == '*' && c.id.rfind(name.substr(0, name.size() - 1), 0) == 0);
      if (hit) chosen[i] = any = true;
    }
    if (!any) throw UnknownCheckError(name);
  }
  std::vector<const CheckSpec*> out;
  for (std::size_t i = 0; i < chosen.size(); ++i)
    if (chosen[i]) out.push_back(&registry()[i]);
  return out;
}

/// Order used by a check: the explicit override when the check is order-driven,
/// otherwise one past the oracle range (or the scan range) it reads.
inline long effective_order(const CheckSpec& c, Context& ctx, std::optional<long> order) {
  if (c.default_order == 0) return c.kind == Kind::ConjectureScan ? ctx.scan_limit() + 1 : ctx.oracle_ceiling() + 1;
  return order.value_or(c.default_order);
}

inline void require_oracle(const CheckSpec& c, Context& ctx, long order) {
  long need = c.oracle_need(ctx, order);
  if (need > ctx.oracle_ceiling()) throw OracleRangeError(c.id, need, ctx.oracle_ceiling());
}

inline VerifyReport run_check(const CheckSpec& c, Context& ctx, std::optional<long> order = std::nullopt) {
  long ord = effective_order(c, ctx, order);
  if (ord < 1) throw std::invalid_argument("order must be at least 1");
  require_oracle(c, ctx, ord);
  auto t0 = std::chrono::steady_clock::now();
  Outcome o = c.run(ctx, ord);
  auto t1 = std::chrono::steady_clock::now();
  VerifyReport r;
  r.id = c.id;
  r.status = o.status;
  r.order = ord;
  r.first_failure = o.failure;
  if (r.status == Status::Fail && !r.first_failure) r.first_failure = FailurePoint{-1, "", ""};
  r.elapsed_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  r.paper_label = c.label;
  if (!o.notes.empty()) r.paper_label += " [" + detail::join(o.notes, "; ") + "]";
  return r;
}

inline VerifyReport run_check(const std::string& id, Context& ctx, std::optional<long> order = std::nullopt) {
  return run_check(find_check(id), ctx, order);
}

/// Orders ids with embedded numbers numerically ("q-2-10" after "q-2-9").
inline bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i])), db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      long x = std::stol(a.substr(i, i2 - i)), y = std::stol(b.substr(j, j2 - j));
      if (x != y) return x < y;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

/// Runs checks on up to `jobs` threads; reports come back sorted by id.
inline std::vector<VerifyReport> run_checks(const std::vector<const CheckSpec*>& checks, Context& ctx, std::optional<long> order, int jobs) {
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  for (const auto* c : checks) require_oracle(*c, ctx, effective_order(*c, ctx, order));
  std::vector<VerifyReport> reports(checks.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr error;
  auto worker = [&] {
    for (std::size_t i; (i = next++) < checks.size();) {
      try {
        reports[i] = run_check(*checks[i], ctx, order);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < std::min<int>(jobs, static_cast<int>(checks.size())); ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
  std::sort(reports.begin(), reports.end(), [](const VerifyReport& a, const VerifyReport& b) { return natural_less(a.id, b.id); });
  return reports;
}

/// Exit status for a batch: 1 if anything failed, 2 if only emendations, else 0.
inline int exit_code(const std::vector<VerifyReport>& reports) {
  bool emended = false;
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return 1;
    emended = emended || r.status == Status::EmendedPass;
  }
  return emended ? 2 : 0;
}

}  // namespace qdissect
