// Partition statistics oracles: rank and crank counts, p(n), spt(n).
//
// Two independent constructions produce the same StatTables: brute-force
// enumeration of partitions (small n only) and coefficient extraction from
// the bivariate generating functions.
#pragma once

#include "qdissect/series.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdissect {

enum class Stat { Rank, Crank };

inline const char* to_string(Stat s) { return s == Stat::Rank ? "rank" : "crank"; }

struct StatTables {
  long max_n = -1;
  std::string provenance;
  std::vector<std::int64_t> p;
  std::vector<std::int64_t> spt;
  // rank[n][m + n] = N(m, n), crank[n][m + n] = M(m, n); |m| <= n
  std::vector<std::vector<std::int64_t>> rank;
  std::vector<std::vector<std::int64_t>> crank;

  std::int64_t count(Stat s, long m, long n) const {
    check_n(n);
    if (m < -n || m > n) return 0;
    const auto& row = (s == Stat::Rank ? rank : crank)[static_cast<std::size_t>(n)];
    return row[static_cast<std::size_t>(m + n)];
  }
  std::int64_t N(long m, long n) const { return count(Stat::Rank, m, n); }
  std::int64_t M(long m, long n) const { return count(Stat::Crank, m, n); }

  void check_n(long n) const {
    if (n < 0 || n > max_n)
      throw std::out_of_range("n = " + std::to_string(n) + " is outside the oracle range 0.." + std::to_string(max_n));
  }

  void resize(long n_max) {
    max_n = n_max;
    p.assign(static_cast<std::size_t>(n_max + 1), 0);
    spt.assign(static_cast<std::size_t>(n_max + 1), 0);
    rank.assign(static_cast<std::size_t>(n_max + 1), {});
    crank.assign(static_cast<std::size_t>(n_max + 1), {});
    for (long n = 0; n <= n_max; ++n) {
      rank[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(2 * n + 1), 0);
      crank[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(2 * n + 1), 0);
    }
  }

  friend bool operator==(const StatTables& a, const StatTables& b) {
    return a.max_n == b.max_n && a.p == b.p && a.spt == b.spt && a.rank == b.rank && a.crank == b.crank;
  }
};

namespace detail {

/// Crank counts for n <= 1 follow the generating-function convention
/// M(0,0) = 1, M(0,1) = -1, M(+-1,1) = 1.
inline void set_small_crank(StatTables& t) {
  if (t.max_n >= 0) t.crank[0] = {1};
  if (t.max_n >= 1) t.crank[1] = {1, -1, 1};
}

}  // namespace detail

inline constexpr long kEnumerationCeiling = 60;
// spt(362) is the first stored count past 2^63
inline constexpr long kTableCeiling = 361;

/// Walks every partition of every n <= n_max.
inline StatTables enumerate_stats(long n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (n_max > kEnumerationCeiling)
    throw std::invalid_argument("enumeration is limited to n <= " + std::to_string(kEnumerationCeiling));
  StatTables t;
  t.resize(n_max);
  t.provenance = "enumeration";
  t.p[0] = 1;
  t.rank[0][0] = 1;
  for (long n = 1; n <= n_max; ++n) {
    // parts in non-increasing order; generate in reverse lexicographic order
    std::vector<long> parts{n};
    auto& rrow = t.rank[static_cast<std::size_t>(n)];
    auto& crow = t.crank[static_cast<std::size_t>(n)];
    while (true) {
      const long len = static_cast<long>(parts.size());
      const long largest = parts.front();
      const long smallest = parts.back();
      ++t.p[static_cast<std::size_t>(n)];
      long rk = largest - len;
      ++rrow[static_cast<std::size_t>(rk + n)];
      long ones = 0;
      for (long x : parts) ones += (x == 1);
      long ck;
      if (ones == 0) {
        ck = largest;
      } else {
        long mu = 0;
        for (long x : parts) mu += (x > ones);
        ck = mu - ones;
      }
      ++crow[static_cast<std::size_t>(ck + n)];
      long s = 0;
      for (long x : parts) s += (x == smallest);
      t.spt[static_cast<std::size_t>(n)] += s;

      // next partition: find the rightmost part > 1
      long ones_tail = 0;
      while (!parts.empty() && parts.back() == 1) {
        parts.pop_back();
        ++ones_tail;
      }
      if (parts.empty()) break;
      long k = parts.back() - 1;
      parts.back() = k;
      long rem = ones_tail + 1;
      while (rem > 0) {
        long x = std::min(k, rem);
        parts.push_back(x);
        rem -= x;
      }
    }
  }
  detail::set_small_crank(t);
  return t;
}

namespace detail {

using Wide = __int128;

/// Dense bivariate array a[n][m + off] with |m| <= off.
struct Bivariate {
  long order;
  long off;
  std::vector<Wide> data;
  Bivariate(long order_, long off_) : order(order_), off(off_), data(static_cast<std::size_t>(order_ * (2 * off_ + 1)), 0) {}
  Wide& at(long n, long m) { return data[static_cast<std::size_t>(n * (2 * off + 1) + m + off)]; }
  Wide get(long n, long m) const {
    if (m < -off || m > off) return 0;
    return data[static_cast<std::size_t>(n * (2 * off + 1) + m + off)];
  }
};

/// In place division by (1 - z^dz q^k); only |m| <= n is populated.
inline void divide_bivariate(Bivariate& a, long k, long dz) {
  for (long n = k; n < a.order; ++n)
    for (long m = -n; m <= n; ++m) a.at(n, m) += a.get(n - k, m - dz);
}

inline std::int64_t narrow(Wide x, const char* what) {
  if (x > static_cast<Wide>(INT64_MAX) || x < static_cast<Wide>(INT64_MIN))
    throw std::overflow_error(std::string(what) + " count exceeds 64 bits");
  return static_cast<std::int64_t>(x);
}

}  // namespace detail

/// Coefficient extraction from
///   crank: (q;q)_oo / ((zq;q)_oo (q/z;q)_oo)
///   rank:  sum_{j>=0} q^{j^2} / ((zq;q)_j (q/z;q)_j)
///   spt:   sum_{k>=1} q^k / ((1-q^k)^2 (q^{k+1};q)_oo)
inline StatTables gf_stats(long n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  if (n_max > kTableCeiling)
    throw std::invalid_argument("stored counts fit 64 bits only for n <= " + std::to_string(kTableCeiling));
  const long order = n_max + 1;
  StatTables t;
  t.resize(n_max);
  t.provenance = "generating-function";

  {
    detail::Bivariate c(order, n_max);
    // (q;q)_oo in z-degree 0
    std::vector<detail::Wide> euler(static_cast<std::size_t>(order), 0);
    euler[0] = 1;
    for (long k = 1; k < order; ++k)
      for (long n = order - 1; n >= k; --n) euler[static_cast<std::size_t>(n)] -= euler[static_cast<std::size_t>(n - k)];
    for (long n = 0; n < order; ++n) c.at(n, 0) = euler[static_cast<std::size_t>(n)];
    for (long k = 1; k < order; ++k) {
      detail::divide_bivariate(c, k, 1);
      detail::divide_bivariate(c, k, -1);
    }
    for (long n = 0; n <= n_max; ++n)
      for (long m = -n; m <= n; ++m)
        t.crank[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)] = detail::narrow(c.get(n, m), "crank");
  }
  detail::set_small_crank(t);

  {
    detail::Bivariate r(order, n_max);
    detail::Bivariate term(order, n_max);  // 1 / ((zq;q)_j (q/z;q)_j)
    term.at(0, 0) = 1;
    for (long j = 0; j * j < order; ++j) {
      if (j > 0) {
        detail::divide_bivariate(term, j, 1);
        detail::divide_bivariate(term, j, -1);
      }
      long s = j * j;
      for (long n = s; n < order; ++n)
        for (long m = -(n - s); m <= n - s; ++m) r.at(n, m) += term.get(n - s, m);
    }
    for (long n = 0; n <= n_max; ++n)
      for (long m = -n; m <= n; ++m)
        t.rank[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)] = detail::narrow(r.get(n, m), "rank");
  }

  for (long n = 0; n <= n_max; ++n) {
    detail::Wide s = 0;
    for (long m = -n; m <= n; ++m) s += t.rank[static_cast<std::size_t>(n)][static_cast<std::size_t>(m + n)];
    t.p[static_cast<std::size_t>(n)] = detail::narrow(s, "partition");
  }

  {
    // S_k = 1 / (q^{k+1};q)_oo, built downward from k = order - 1 where it is 1
    std::vector<detail::Wide> S(static_cast<std::size_t>(order), 0), total(static_cast<std::size_t>(order), 0), w(static_cast<std::size_t>(order));
    S[0] = 1;
    for (long k = order - 1; k >= 1; --k) {
      // S currently equals 1/(q^{k+1};q)_oo
      w = S;
      for (int rep = 0; rep < 2; ++rep)
        for (long n = k; n < order; ++n) w[static_cast<std::size_t>(n)] += w[static_cast<std::size_t>(n - k)];
      for (long n = k; n < order; ++n) total[static_cast<std::size_t>(n)] += w[static_cast<std::size_t>(n - k)];
      for (long n = k; n < order; ++n) S[static_cast<std::size_t>(n)] += S[static_cast<std::size_t>(n - k)];
    }
    for (long n = 0; n <= n_max; ++n) t.spt[static_cast<std::size_t>(n)] = detail::narrow(total[static_cast<std::size_t>(n)], "spt");
  }
  return t;
}

/// Number of partitions of n whose statistic is congruent to a mod r.
inline mpz_class class_count(const StatTables& t, Stat s, long a, long r, long n) {
  t.check_n(n);
  if (r < 1) throw std::invalid_argument("modulus must be positive");
  mpz_class total = 0;
  for (long m = -n; m <= n; ++m)
    if (detail::floor_div(m - a, r) * r == m - a) total += static_cast<long>(t.count(s, m, n));
  return total;
}

/// sum_m m^k count(m, n).
inline mpz_class moment(const StatTables& t, Stat s, long k, long n) {
  t.check_n(n);
  mpz_class total = 0, pw;
  for (long m = -n; m <= n; ++m) {
    std::int64_t c = t.count(s, m, n);
    if (c == 0) continue;
    mpz_class mm = m;
    mpz_pow_ui(pw.get_mpz_t(), mm.get_mpz_t(), static_cast<unsigned long>(k));
    total += pw * mpz_class(static_cast<long>(c));
  }
  return total;
}

/// spt(n) = n p(n) - N_2(n) / 2.
inline mpz_class spt_via_identity(const StatTables& t, long n) {
  t.check_n(n);
  mpz_class n2 = moment(t, Stat::Rank, 2, n);
  return mpz_class(n) * mpz_class(static_cast<long>(t.p[static_cast<std::size_t>(n)])) - n2 / 2;
}

/// sum_{n < order} (count(a mod r, n) - p(n)/r) q^n.
inline Series deviation(const StatTables& t, Stat s, long a, long r, long order) {
  if (order - 1 > t.max_n)
    throw std::out_of_range("order " + std::to_string(order) + " exceeds the oracle ceiling " + std::to_string(t.max_n));
  std::vector<mpz_class> num(static_cast<std::size_t>(std::max(order, 0L)));
  for (long n = 0; n < order; ++n)
    num[static_cast<std::size_t>(n)] = mpz_class(r) * class_count(t, s, a, r, n) - mpz_class(static_cast<long>(t.p[static_cast<std::size_t>(n)]));
  return Series(0, std::max(order, 0L), std::move(num), r);
}

inline Series deviation_rank(const StatTables& t, long a, long r, long order) { return deviation(t, Stat::Rank, a, r, order); }
inline Series deviation_crank(const StatTables& t, long a, long r, long order) { return deviation(t, Stat::Crank, a, r, order); }

}  // namespace qdissect
