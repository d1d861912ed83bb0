// Truncated Laurent series in q with exact rational coefficients.
//
// Coefficients are stored as integer numerators over one shared positive
// denominator. A series is either windowed (coefficients known on
// [valuation, trunc), everything below valuation is zero, nothing is known
// at or above trunc) or exact (a Laurent polynomial, known everywhere).
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdissect {

class SeriesError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace detail

class Series {
 public:
  using Int = mpz_class;
  static constexpr long kExact = std::numeric_limits<long>::max() / 4;

  /// The exact zero series.
  Series() = default;

  /// Windowed series on [valuation, trunc); num.size() must equal the width.
  Series(long valuation, long trunc, std::vector<Int> num, Int den = 1)
      : val_(valuation), trunc_(trunc), exact_(false), num_(std::move(num)), den_(std::move(den)) {
    if (trunc < valuation) throw SeriesError("series window has trunc below valuation");
    if (static_cast<long>(num_.size()) != trunc - valuation)
      throw SeriesError("coefficient count does not match window width");
    normalize();
  }

  /// Exact Laurent polynomial sum_i num[i] q^(valuation+i) / den.
  static Series polynomial(long valuation, std::vector<Int> num, Int den = 1) {
    Series s;
    s.val_ = valuation;
    s.exact_ = true;
    s.trunc_ = kExact;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
  }

  static Series monomial(long exponent, Int c = 1) {
    return polynomial(exponent, std::vector<Int>{std::move(c)});
  }

  static Series one() { return monomial(0); }

  /// Windowed series from rational coefficients on [valuation, trunc).
  static Series from_rationals(long valuation, long trunc, const std::vector<mpq_class>& c) {
    if (static_cast<long>(c.size()) != trunc - valuation)
      throw SeriesError("coefficient count does not match window width");
    Int den = 1;
    for (const auto& x : c) den = lcm(den, Int(x.get_den()));
    std::vector<Int> num(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) num[i] = c[i].get_num() * (den / c[i].get_den());
    return Series(valuation, trunc, std::move(num), den);
  }

  /// Windowed all-zero series known on (-inf, trunc).
  static Series zero_to(long trunc) { return Series(trunc, trunc, {}); }

  long valuation() const { return val_; }
  long trunc() const { return trunc_; }
  bool exact() const { return exact_; }
  bool is_exact_zero() const { return exact_ && num_.empty(); }
  const Int& denominator() const { return den_; }
  /// Stored numerators, index i is the exponent valuation()+i.
  const std::vector<Int>& numerators() const { return num_; }
  /// One past the last stored exponent.
  long stored_end() const { return val_ + static_cast<long>(num_.size()); }

  bool known(long n) const { return n < trunc_; }

  /// Numerator at exponent n (zero below the valuation or past an exact tail).
  Int numerator(long n) const {
    if (!known(n)) throw SeriesError("coefficient q^" + std::to_string(n) + " lies beyond the truncation order " + std::to_string(trunc_));
    if (n < val_ || n >= stored_end()) return 0;
    return num_[static_cast<std::size_t>(n - val_)];
  }

  mpq_class coeff(long n) const {
    mpq_class r(numerator(n), den_);
    r.canonicalize();
    return r;
  }

  /// True when every coefficient is an integer.
  bool integral() const { return den_ == 1; }

  /// Same series with the window cut down to (-inf, t).
  Series truncated(long t) const {
    if (t >= trunc_) return *this;
    Series s;
    s.exact_ = false;
    s.trunc_ = t;
    s.den_ = den_;
    s.val_ = std::min(val_, t);
    long end = std::min(stored_end(), t);
    for (long n = s.val_; n < t; ++n) s.num_.push_back(n < end && n >= val_ ? num_[static_cast<std::size_t>(n - val_)] : Int(0));
    s.normalize();
    return s;
  }

  /// Divides the shared denominator out of the numerators when possible.
  void normalize() {
    if (den_ == 0) throw SeriesError("zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      for (auto& x : num_) x = -x;
    }
    std::size_t lead = 0;
    while (lead < num_.size() && num_[lead] == 0) ++lead;
    if (lead == num_.size()) {
      num_.clear();
      if (!exact_) val_ = trunc_;
      den_ = 1;
      return;
    }
    if (lead > 0) {
      num_.erase(num_.begin(), num_.begin() + static_cast<std::ptrdiff_t>(lead));
      val_ += static_cast<long>(lead);
    }
    if (exact_) {
      while (!num_.empty() && num_.back() == 0) num_.pop_back();
    } else {
      // keep the window explicit: pad to trunc
      num_.resize(static_cast<std::size_t>(trunc_ - val_));
    }
    if (den_ != 1) {
      Int g = den_;
      for (const auto& x : num_) {
        if (g == 1) break;
        if (x != 0) g = gcd(g, x);
      }
      if (g != 1) {
        den_ /= g;
        for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
      }
    }
  }

  friend bool operator==(const Series& a, const Series& b) {
    return a.val_ == b.val_ && a.trunc_ == b.trunc_ && a.exact_ == b.exact_ && a.den_ == b.den_ &&
           a.num_ == b.num_;
  }

 private:
  long val_ = 0;
  long trunc_ = kExact;
  bool exact_ = true;
  std::vector<Int> num_;
  Int den_ = 1;

  friend Series scale(const Series&, const mpq_class&);
  friend Series add(const Series&, const Series&);
  friend Series mul(const Series&, const Series&);
  friend Series shift(const Series&, long);
  friend Series dilate(const Series&, long);
  friend Series dissect(const Series&, long, long);
};

namespace detail {

inline long sat_add(long a, long b) {
  if (a >= Series::kExact || b >= Series::kExact) return Series::kExact;
  return a + b;
}

}  // namespace detail

inline Series scale(const Series& a, const mpq_class& c) {
  if (c == 0) return a.exact() ? Series() : Series::zero_to(a.trunc());
  Series s = a;
  mpz_class n = c.get_num(), d = c.get_den();
  for (auto& x : s.num_) x *= n;
  s.den_ *= d;
  s.normalize();
  return s;
}

inline Series neg(const Series& a) { return scale(a, mpq_class(-1)); }

/// Sum; the window is [min valuation, min trunc).
inline Series add(const Series& a, const Series& b) {
  if (a.is_exact_zero()) return b;
  if (b.is_exact_zero()) return a;
  bool exact = a.exact_ && b.exact_;
  long lo = std::min(a.val_, b.val_);
  long hi = exact ? std::max(a.stored_end(), b.stored_end()) : std::min(a.trunc_, b.trunc_);
  if (!exact && hi < lo) {
    // one operand is known only below the other's valuation; nothing survives but zeros
    lo = hi;
  }
  Series::Int den = a.den_ == b.den_ ? a.den_ : lcm(a.den_, b.den_);
  Series::Int fa = den / a.den_, fb = den / b.den_;
  std::vector<Series::Int> num(static_cast<std::size_t>(hi - lo));
  auto accumulate = [&](const Series& s, const Series::Int& f) {
    long end = std::min(s.stored_end(), hi);
    for (long n = std::max(s.val_, lo); n < end; ++n) {
      const auto& x = s.num_[static_cast<std::size_t>(n - s.val_)];
      if (x == 0) continue;
      if (f == 1)
        num[static_cast<std::size_t>(n - lo)] += x;
      else
        mpz_addmul(num[static_cast<std::size_t>(n - lo)].get_mpz_t(), x.get_mpz_t(), f.get_mpz_t());
    }
  };
  accumulate(a, fa);
  accumulate(b, fb);
  if (exact) return Series::polynomial(lo, std::move(num), den);
  return Series(lo, hi, std::move(num), den);
}

inline Series sub(const Series& a, const Series& b) { return add(a, neg(b)); }

/// Product; valuation v_a+v_b, trunc min(v_a+T_b, v_b+T_a).
inline Series mul(const Series& a, const Series& b) {
  if (a.is_exact_zero() || b.is_exact_zero()) return Series();
  bool exact = a.exact_ && b.exact_;
  long lo = a.val_ + b.val_;
  long hi;
  if (exact) {
    hi = a.stored_end() + b.stored_end() - 1;
  } else {
    hi = std::min(detail::sat_add(a.val_, b.trunc_), detail::sat_add(b.val_, a.trunc_));
  }
  std::size_t width = static_cast<std::size_t>(std::max(0L, hi - lo));
  std::vector<Series::Int> num(width);
  // sparse outer loop over the operand with fewer nonzero terms
  const Series* outer = &a;
  const Series* inner = &b;
  auto nnz = [](const Series& s) {
    return std::count_if(s.num_.begin(), s.num_.end(), [](const Series::Int& x) { return x != 0; });
  };
  if (nnz(a) > nnz(b)) std::swap(outer, inner);
  const long ilen = static_cast<long>(inner->num_.size());
  for (std::size_t j = 0; j < outer->num_.size(); ++j) {
    const auto& x = outer->num_[j];
    if (x == 0) continue;
    long off = static_cast<long>(j);  // index offset of x relative to lo
    long kmax = std::min(ilen, static_cast<long>(width) - off);
    for (long k = 0; k < kmax; ++k) {
      const auto& y = inner->num_[static_cast<std::size_t>(k)];
      if (y == 0) continue;
      mpz_addmul(num[static_cast<std::size_t>(off + k)].get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    }
  }
  Series::Int den = a.den_ * b.den_;
  if (exact) return Series::polynomial(lo, std::move(num), den);
  return Series(lo, hi, std::move(num), den);
}

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator-(const Series& a) { return neg(a); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }
inline Series operator*(const mpq_class& c, const Series& a) { return scale(a, c); }
inline Series operator*(long c, const Series& a) { return scale(a, mpq_class(c)); }

/// Multiplies by q^d.
inline Series shift(const Series& a, long d) {
  Series s = a;
  if (a.is_exact_zero()) return s;
  s.val_ += d;
  if (!s.exact_) s.trunc_ += d;
  return s;
}

/// Substitutes q -> q^k. The window becomes [k v, k(T-1)+1).
inline Series dilate(const Series& a, long k) {
  if (k < 1) throw SeriesError("dilation factor must be positive");
  if (a.is_exact_zero()) return a;
  long lo = k * a.val_;
  long hi = a.exact_ ? k * (a.stored_end() - 1) + 1 : k * (a.trunc_ - 1) + 1;
  std::vector<Series::Int> num(static_cast<std::size_t>(std::max(0L, hi - lo)));
  for (std::size_t i = 0; i < a.num_.size(); ++i) {
    long e = static_cast<long>(i) * k;
    if (e < hi - lo) num[static_cast<std::size_t>(e)] = a.num_[i];
  }
  if (a.exact_) return Series::polynomial(lo, std::move(num), a.den_);
  if (hi < lo) return Series::zero_to(hi);
  return Series(lo, hi, std::move(num), a.den_);
}

/// b_n = a_{r n + m}.
inline Series dissect(const Series& a, long r, long m) {
  if (r < 1) throw SeriesError("dissection modulus must be positive");
  if (m < 0 || m >= r) throw SeriesError("dissection residue out of range");
  if (a.is_exact_zero()) return a;
  long lo = detail::ceil_div(a.val_ - m, r);
  long end = a.exact_ ? a.stored_end() : a.trunc_;
  long hi = detail::ceil_div(end - m, r);
  if (hi < lo) hi = lo;
  std::vector<Series::Int> num(static_cast<std::size_t>(hi - lo));
  for (long n = lo; n < hi; ++n) {
    long e = r * n + m;
    if (e >= a.val_ && e < a.stored_end()) num[static_cast<std::size_t>(n - lo)] = a.num_[static_cast<std::size_t>(e - a.val_)];
  }
  if (a.exact_) return Series::polynomial(lo, std::move(num), a.den_);
  return Series(lo, hi, std::move(num), a.den_);
}

/// Reciprocal b with a*b = 1 on [0, order). The result has `order` terms
/// starting at -valuation(a), clipped to what the window of a determines.
inline Series invert(const Series& a, std::optional<long> order = std::nullopt) {
  if (a.numerators().empty()) throw SeriesError("series is not a unit: every known coefficient is zero");
  const auto& A = a.numerators();
  const long v = a.valuation();
  long terms;
  if (a.exact()) {
    if (!order) throw SeriesError("inverting a polynomial needs an explicit order");
    terms = *order;
  } else {
    terms = a.trunc() - v;
    if (order) terms = std::min(terms, *order);
  }
  if (terms < 0) terms = 0;
  const Series::Int& c = A[0];
  const bool unit_lead = (c == 1 || c == -1);
  std::vector<long> nz;
  for (std::size_t k = 1; k < A.size() && static_cast<long>(k) < terms; ++k)
    if (A[k] != 0) nz.push_back(static_cast<long>(k));
  std::vector<Series::Int> b(static_cast<std::size_t>(terms));
  Series::Int den = 1;
  if (unit_lead) {
    // b_n = -c * sum_k A_k b_{n-k}
    if (terms > 0) b[0] = c;
    Series::Int acc;
    for (long n = 1; n < terms; ++n) {
      acc = 0;
      for (long k : nz) {
        if (k > n) break;
        mpz_addmul(acc.get_mpz_t(), A[static_cast<std::size_t>(k)].get_mpz_t(), b[static_cast<std::size_t>(n - k)].get_mpz_t());
      }
      b[static_cast<std::size_t>(n)] = (c == 1) ? Series::Int(-acc) : acc;
    }
  } else {
    // beta_0 = 1, beta_n = -sum_k A_k beta_{n-k} c^(k-1); b_n = beta_n / c^(n+1)
    std::vector<Series::Int> cpow(static_cast<std::size_t>(std::max(terms, 1L) + 1));
    cpow[0] = 1;
    for (std::size_t i = 1; i < cpow.size(); ++i) cpow[i] = cpow[i - 1] * c;
    if (terms > 0) b[0] = 1;
    Series::Int acc, t;
    for (long n = 1; n < terms; ++n) {
      acc = 0;
      for (long k : nz) {
        if (k > n) break;
        t = A[static_cast<std::size_t>(k)] * cpow[static_cast<std::size_t>(k - 1)];
        mpz_addmul(acc.get_mpz_t(), t.get_mpz_t(), b[static_cast<std::size_t>(n - k)].get_mpz_t());
      }
      b[static_cast<std::size_t>(n)] = -acc;
    }
    // bring to common denominator c^terms
    for (long n = 0; n < terms; ++n) b[static_cast<std::size_t>(n)] *= cpow[static_cast<std::size_t>(terms - 1 - n)];
    den = cpow[static_cast<std::size_t>(terms)];
  }
  for (auto& x : b) x *= a.denominator();
  return Series(-v, -v + terms, std::move(b), den);
}

inline Series div(const Series& a, const Series& b) { return mul(a, invert(b)); }

/// a^e for integer e; negative powers go through invert.
inline Series pow(const Series& a, long e) {
  if (e < 0) return invert(pow(a, -e));
  Series result = Series::one();
  Series base = a;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

inline mpq_class coeff(const Series& a, long n) { return a.coeff(n); }

/// Coefficientwise residues in [0, p). Requires the denominator prime to p.
inline Series reduce_mod(const Series& a, long p) {
  if (p < 2) throw SeriesError("modulus must be at least 2");
  Series::Int P = p;
  Series::Int inv;
  if (mpz_invert(inv.get_mpz_t(), a.denominator().get_mpz_t(), P.get_mpz_t()) == 0)
    throw SeriesError("denominator is not invertible modulo " + std::to_string(p));
  std::vector<Series::Int> num = a.numerators();
  for (auto& x : num) {
    x *= inv;
    mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), P.get_mpz_t());
  }
  if (a.exact()) return Series::polynomial(a.valuation(), std::move(num));
  return Series(a.valuation(), a.trunc(), std::move(num));
}

/// First exponent below n where a and b differ, or nullopt if they agree.
inline std::optional<long> first_difference(const Series& a, const Series& b, long n) {
  if (n > a.trunc() || n > b.trunc())
    throw SeriesError("comparison order " + std::to_string(n) + " exceeds a truncation order");
  long lo = std::min(a.valuation(), b.valuation());
  const bool same_den = a.denominator() == b.denominator();
  for (long e = lo; e < n; ++e) {
    Series::Int x = a.numerator(e), y = b.numerator(e);
    if (same_den) {
      if (x != y) return e;
    } else if (x * b.denominator() != y * a.denominator()) {
      return e;
    }
  }
  return std::nullopt;
}

inline bool eq_to_order(const Series& a, const Series& b, long n) { return !first_difference(a, b, n); }

/// First exponent below n with a negative coefficient, or nullopt.
inline std::optional<long> first_negative(const Series& a, long n) {
  if (n > a.trunc()) throw SeriesError("order " + std::to_string(n) + " exceeds the truncation order");
  for (long e = a.valuation(); e < n; ++e)
    if (a.numerator(e) < 0) return e;
  return std::nullopt;
}

inline bool is_nonneg_to_order(const Series& a, long n) { return !first_negative(a, n); }

/// Coefficients on [from, to) as rationals.
inline std::vector<mpq_class> coefficients(const Series& a, long from, long to) {
  std::vector<mpq_class> out;
  for (long n = from; n < to; ++n) out.push_back(a.coeff(n));
  return out;
}

inline std::string to_string(const mpq_class& x) {
  mpq_class y = x;
  y.canonicalize();
  return y.get_den() == 1 ? y.get_num().get_str() : y.get_num().get_str() + "/" + y.get_den().get_str();
}

}  // namespace qdissect
