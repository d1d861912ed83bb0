// q-Pochhammer symbols, theta functions, the mock theta function g(x;q),
// Eisenstein series, and a memoizing evaluator for eta-quotient monomials
// in J_1, J_11 and P_1..P_5 = J_{1,11}..J_{5,11}.
#pragma once

#include "qdissect/series.hpp"

#include <array>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace qdissect {

namespace detail {

/// In place multiplication of a dense window by (1 - q^e), e >= 1.
inline void times_one_minus(std::vector<Series::Int>& c, long e) {
  for (long n = static_cast<long>(c.size()) - 1; n >= e; --n) c[static_cast<std::size_t>(n)] -= c[static_cast<std::size_t>(n - e)];
}

/// In place division of a dense window by (1 - q^e), e >= 1.
inline void divide_one_minus(std::vector<Series::Int>& c, long e) {
  for (long n = e; n < static_cast<long>(c.size()); ++n) c[static_cast<std::size_t>(n)] += c[static_cast<std::size_t>(n - e)];
}

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

/// (q^a; q^m)_n. With n == nullopt the product is infinite and truncated at
/// `order`; a finite product is returned as an exact polynomial.
inline Series pochhammer(long a, long m, std::optional<long> n, long order) {
  if (m < 1) throw SeriesError("pochhammer step must be positive");
  if (n) {
    if (*n < 0) throw SeriesError("pochhammer length must be nonnegative");
    Series r = Series::one();
    for (long i = 0; i < *n; ++i) {
      long e = a + m * i;
      Series f = (e == 0) ? Series() : Series::one() - Series::monomial(e);
      r = mul(r, f);
      if (r.is_exact_zero()) break;
    }
    return r;
  }
  if (a <= 0) throw SeriesError("infinite pochhammer needs a positive base exponent");
  if (order <= 0) return Series::zero_to(order);
  std::vector<Series::Int> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (long e = a; e < order; e += m) detail::times_one_minus(c, e);
  return Series(0, order, std::move(c));
}

/// J_m = (q^m; q^m)_oo from the pentagonal number series.
inline Series euler_J(long m, long order) {
  if (m < 1) throw SeriesError("J_m needs m >= 1");
  if (order <= 0) return Series::zero_to(order);
  std::vector<Series::Int> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (long k = 1;; ++k) {
    long e1 = m * (k * (3 * k - 1) / 2), e2 = m * (k * (3 * k + 1) / 2);
    if (e1 >= order) break;
    int sign = (k % 2 == 0) ? 1 : -1;
    c[static_cast<std::size_t>(e1)] += sign;
    if (e2 < order) c[static_cast<std::size_t>(e2)] += sign;
  }
  return Series(0, order, std::move(c));
}

/// J_{a,m} = (q^a, q^{m-a}, q^m; q^m)_oo from the bilateral sum
/// sum_k (-1)^k q^{m k(k-1)/2 + a k}. Any integer a is accepted.
inline Series theta_j(long a, long m, long order) {
  if (m < 1) throw SeriesError("theta modulus must be positive");
  // exponent e(k) = m k(k-1)/2 + a k is convex in k; find its range below order
  auto ex = [&](long k) { return m * (k * (k - 1) / 2) + a * k; };
  // vertex near k = 1/2 - a/m
  long k0 = detail::floor_div(m - 2 * a, 2 * m);
  long kmin = k0, kmax = k0 + 1;
  while (ex(kmin - 1) < order) --kmin;
  while (ex(kmax) < order) ++kmax;
  long lo = ex(k0);
  for (long k = kmin; k < kmax; ++k) lo = std::min(lo, ex(k));
  lo = std::min(lo, std::min(ex(k0), ex(k0 + 1)));
  if (lo >= order) return Series::zero_to(order);
  std::vector<Series::Int> c(static_cast<std::size_t>(order - lo));
  for (long k = kmin; k < kmax; ++k) {
    long e = ex(k);
    if (e < order) c[static_cast<std::size_t>(e - lo)] += (std::labs(k) % 2 == 0) ? 1 : -1;
  }
  return Series(lo, order, std::move(c));
}

/// J_{a,m} as the literal triple product; reference form for 0 < a < m.
inline Series theta_j_product(long a, long m, long order) {
  if (a <= 0 || a >= m) throw SeriesError("product form needs 0 < a < m");
  return mul(mul(pochhammer(a, m, std::nullopt, order), pochhammer(m - a, m, std::nullopt, order)),
             pochhammer(m, m, std::nullopt, order));
}

namespace detail {

/// sum_{n>=0} q^{p n^2} / ((q^a;q^p)_{n+1} (q^{p-a};q^p)_n) on [0, order).
inline Series mock_inner_sum(long a, long p, long order) {
  if (p < 1 || a <= 0 || a % p == 0 || a >= p)
    throw SeriesError("mock theta index needs 0 < a < p");
  std::vector<Series::Int> total(static_cast<std::size_t>(std::max(order, 0L)));
  if (order <= 0) return Series::zero_to(order);
  // inv = 1 / ((q^a;q^p)_{n+1} (q^{p-a};q^p)_n), updated as n grows
  std::vector<Series::Int> inv(static_cast<std::size_t>(order));
  inv[0] = 1;
  detail::divide_one_minus(inv, a);
  for (long n = 0; p * n * n < order; ++n) {
    if (n > 0) {
      detail::divide_one_minus(inv, a + p * n);
      detail::divide_one_minus(inv, p - a + p * (n - 1));
    }
    long s = p * n * n;
    for (long e = s; e < order; ++e) total[static_cast<std::size_t>(e)] += inv[static_cast<std::size_t>(e - s)];
  }
  return Series(0, order, std::move(total));
}

}  // namespace detail

/// g(q^a; q^p) = q^{-a} (-1 + sum_{n>=0} q^{p n^2} / ((q^a;q^p)_{n+1} (q^{p-a};q^p)_n)).
inline Series mock_g(long a, long p, long order) {
  Series inner = detail::mock_inner_sum(a, p, order + a);
  return shift(sub(inner, Series::one()), -a);
}

/// Phi_{p,a}(q) for a prime p > 3 and 1 <= a <= (p-1)/2. The first branch
/// (6a < p) is the bare sum, the second (p < 6a < 3p) subtracts 1.
inline Series phi(long p, long a, long order) {
  if (p <= 3 || !detail::is_prime(p)) throw SeriesError("Phi needs a prime p > 3");
  if (a < 1 || 2 * a > p - 1) throw SeriesError("Phi needs 1 <= a <= (p-1)/2");
  Series sum = detail::mock_inner_sum(a, p, order);
  if (6 * a < p) return sum;
  return sub(sum, Series::one());
}

/// Bernoulli number B_n with B_1 = -1/2.
inline mpq_class bernoulli(long n) {
  if (n < 0) throw SeriesError("Bernoulli index must be nonnegative");
  std::vector<mpq_class> B(static_cast<std::size_t>(n + 1));
  B[0] = 1;
  for (long m = 1; m <= n; ++m) {
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    mpq_class acc = 0;
    mpz_class binom = 1;  // C(m+1, 0)
    for (long k = 0; k < m; ++k) {
      acc += mpq_class(binom) * B[static_cast<std::size_t>(k)];
      binom = binom * (m + 1 - k) / (k + 1);
    }
    B[static_cast<std::size_t>(m)] = -acc / mpq_class(m + 1);
  }
  return B[static_cast<std::size_t>(n)];
}

/// E_j = 1 - (2j / B_j) sum_{n>=1} sigma_{j-1}(n) q^n for even j >= 2.
inline Series eisenstein(long j, long order) {
  if (j < 2 || j % 2 != 0) throw SeriesError("Eisenstein weight must be even and at least 2");
  if (order <= 0) return Series::zero_to(order);
  mpq_class f = mpq_class(-2 * j) / bernoulli(j);
  std::vector<mpz_class> sigma(static_cast<std::size_t>(order));
  for (long d = 1; d < order; ++d) {
    mpz_class dp;
    mpz_ui_pow_ui(dp.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(j - 1));
    for (long n = d; n < order; n += d) sigma[static_cast<std::size_t>(n)] += dp;
  }
  std::vector<mpq_class> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (long n = 1; n < order; ++n) c[static_cast<std::size_t>(n)] = f * mpq_class(sigma[static_cast<std::size_t>(n)]);
  return Series::from_rationals(0, order, c);
}

/// The building blocks J_1, J_11, P_1..P_5 (P_i = J_{i,11}).
enum class Atom : int { J1 = 0, J11 = 1, P1 = 2, P2 = 3, P3 = 4, P4 = 5, P5 = 6 };
inline constexpr int kAtomCount = 7;

/// q^qpow * prod atom^exp.
struct Monomial {
  long qpow = 0;
  std::array<int, kAtomCount> exp{};

  static Monomial q(long e) {
    Monomial m;
    m.qpow = e;
    return m;
  }
  static Monomial atom(Atom a, int e = 1) {
    Monomial m;
    m.exp[static_cast<int>(a)] = e;
    return m;
  }
  static Monomial P(int i, int e = 1) {
    if (i < 1 || i > 5) throw SeriesError("P index must be in 1..5");
    return atom(static_cast<Atom>(static_cast<int>(Atom::P1) + i - 1), e);
  }

  friend Monomial operator*(Monomial a, const Monomial& b) {
    a.qpow += b.qpow;
    for (int i = 0; i < kAtomCount; ++i) a.exp[static_cast<std::size_t>(i)] += b.exp[static_cast<std::size_t>(i)];
    return a;
  }
  friend Monomial operator/(Monomial a, const Monomial& b) {
    a.qpow -= b.qpow;
    for (int i = 0; i < kAtomCount; ++i) a.exp[static_cast<std::size_t>(i)] -= b.exp[static_cast<std::size_t>(i)];
    return a;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.qpow != b.qpow) return a.qpow < b.qpow;
    return a.exp < b.exp;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.qpow == b.qpow && a.exp == b.exp; }
};

inline Monomial pow(Monomial m, int e) {
  m.qpow *= e;
  for (auto& x : m.exp) x *= e;
  return m;
}

/// Residue representative in 1..5 of a P index, using J_{a,11} = J_{11-a,11}
/// and treating indices above 11 by their residue mod 11.
inline int fold_p_index(long i) {
  long r = ((i % 11) + 11) % 11;
  if (r == 0) throw SeriesError("P_i with 11 | i vanishes");
  return static_cast<int>(r <= 5 ? r : 11 - r);
}

/// Memoizing evaluator for monomials. Atoms are computed to order + kSlack
/// so that monomials with a small negative q-shift still cover `order`.
class ProductBasis {
 public:
  static constexpr long kSlack = 16;

  explicit ProductBasis(long order) : order_(order), inner_(order + kSlack) {
    atoms_[0] = euler_J(1, inner_);
    atoms_[1] = euler_J(11, inner_);
    for (int i = 1; i <= 5; ++i) atoms_[static_cast<std::size_t>(1 + i)] = theta_j(i, 11, inner_);
  }

  long order() const { return order_; }
  long inner_order() const { return inner_; }

  const Series& atom(Atom a) const { return atoms_[static_cast<std::size_t>(a)]; }

  /// Value of the monomial, known at least on (-inf, order + kSlack + qpow).
  Series eval(const Monomial& m) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(m);
      if (it != memo_.end()) return it->second;
    }
    Series r = Series::one();
    for (int i = 0; i < kAtomCount; ++i) {
      int e = m.exp[static_cast<std::size_t>(i)];
      if (e != 0) r = mul(r, atom_power(i, e)).truncated(inner_);
    }
    if (r.exact()) r = r.truncated(inner_);
    r = shift(r, m.qpow);
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(m, r);
    return r;
  }

  /// Memoized named series computed by `make` on first use.
  template <class F>
  Series cached(const std::string& key, F make) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = named_.find(key);
      if (it != named_.end()) return it->second;
    }
    Series s = make();
    std::lock_guard<std::mutex> lock(mu_);
    named_.emplace(key, s);
    return s;
  }

 private:
  Series atom_power(int i, int e) const {
    std::pair<int, int> key{i, e};
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = powers_.find(key);
      if (it != powers_.end()) return it->second;
    }
    Series r;
    if (e == 1) {
      r = atoms_[static_cast<std::size_t>(i)];
    } else if (e == -1) {
      r = invert(atoms_[static_cast<std::size_t>(i)]);
    } else {
      int half = e / 2;
      Series h = atom_power(i, half);
      r = mul(h, h).truncated(inner_);
      if (e % 2 != 0) r = mul(r, atom_power(i, e > 0 ? 1 : -1)).truncated(inner_);
    }
    std::lock_guard<std::mutex> lock(mu_);
    powers_.emplace(key, r);
    return r;
  }

  long order_;
  long inner_;
  std::array<Series, kAtomCount> atoms_;
  mutable std::mutex mu_;
  mutable std::map<Monomial, Series> memo_;
  mutable std::map<std::pair<int, int>, Series> powers_;
  mutable std::map<std::string, Series> named_;
};

/// Shared ProductBasis instances keyed by order.
class BasisPool {
 public:
  std::shared_ptr<const ProductBasis> get(long order) {
    std::lock_guard<std::mutex> lock(mu_);
    auto& slot = pool_[order];
    if (!slot) slot = std::make_shared<ProductBasis>(order);
    return slot;
  }

 private:
  std::mutex mu_;
  std::map<long, std::shared_ptr<const ProductBasis>> pool_;
};

}  // namespace qdissect
