// 11-dissection elements of the rank and crank deviations.
//
// Series in this header live in the dissected variable unless the function
// name says otherwise: q_table(a, m) is the generating function of
// N(a,11,11n+m) - p(11n+m)/11 in powers of q^n.
#pragma once

#include "qdissect/monomial_parse.hpp"
#include "qdissect/products.hpp"
#include "qdissect/series.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace qdissect {

/// Residue tags carried by v11 coefficient vectors (6 is absent).
inline constexpr std::array<int, 10> kV11Tags{0, 1, 2, 3, 4, 5, 7, 8, 9, 10};
/// Residue tags carried by G11 coefficient vectors.
inline constexpr std::array<int, 5> kG11Tags{0, 4, 7, 9, 10};

struct V11Coeffs {
  std::array<long, 10> c{};
  long at(int tag) const {
    for (std::size_t i = 0; i < kV11Tags.size(); ++i)
      if (kV11Tags[i] == tag) return c[i];
    if (tag == 6) return 0;
    throw std::out_of_range("v11 tag must be one of 0..10");
  }
};

struct G11Coeffs {
  std::array<long, 5> c{};
  long at(int tag) const {
    for (std::size_t i = 0; i < kG11Tags.size(); ++i)
      if (kG11Tags[i] == tag) return c[i];
    return 0;
  }
};

using ThetaCoeffs = std::array<long, 5>;
using BracketCoeffs = std::array<long, 5>;
using ResidueCoeffs = std::array<long, 6>;

inline void check_residue(int m, bool allow_six = false) {
  if (m < 0 || m > 10 || (!allow_six && m == 6))
    throw std::out_of_range("residue " + std::to_string(m) + (allow_six ? " is outside 0..10" : " must be in 0..10 and not 6"));
}

/// Per-residue monomials: the bracket prefactor, the extra sixth term, and
/// the two prefactors of the theta-function form of Q_{a,m}.
struct ResidueShape {
  const char* prefix;
  const char* extra;
  const char* theta_first;
  const char* theta_second;
};

inline const ResidueShape& residue_shape(int m) {
  check_residue(m);
  static const std::array<ResidueShape, 11> shapes{{
      {"1/P1", "q P1 P3 P4 P5 / P2^2", "q P2 / P4", "P5 / P2"},
      {"P5 / P2 P3", "q P2^2 P4 / P1", "q P2 / P5", "P4 / P2"},
      {"P3 / P1 P4", "q^3 P1^2 P2 / P5", "q P1 / P3", "P2 / P1"},
      {"P2 / P1 P3", "q P3^2 P5 / P4", "P3 / P2", "P5 / P3"},
      {"1/P2", "q^2 P1 P2 P3 P5 / P4^2", "P4 / P3", "q P1 / P4"},
      {"P4 / P2 P5", "q P1 P5^2 / P3", "P5 / P4", "q P1 / P5"},
      {"", "", "", ""},
      {"1/P3", "q^2 P1 P2 P3 P4 / P5^2", "q^-1 P5 / P1", "P4 / P5"},
      {"q P1 / P4 P5", "P3 P4^2 / P2", "q^-1 P4 / P1", "P3 / P4"},
      {"1/P4", "q P1 P2 P4 P5 / P3^2", "P3 / P5", "P2 / P3"},
      {"1/P5", "q^-1 P2 P3 P4 P5 / P1^2", "P1 / P2", "q^-1 P3 / P1"},
  }};
  return shapes[static_cast<std::size_t>(m)];
}

inline const std::array<Monomial, 5>& theta_terms() {
  static const std::array<Monomial, 5> t{
      parse_monomial("q^2 J11^6 / J1^2 P4 P5^2"), parse_monomial("J11^6 / J1^2 P1^2 P3"),
      parse_monomial("q J11^6 / J1^2 P1 P4^2"), parse_monomial("q J11^6 / J1^2 P2^2 P5"),
      parse_monomial("q J11^6 / J1^2 P2 P3^2")};
  return t;
}

inline const std::array<Monomial, 5>& theta_alt_terms() {
  static const std::array<Monomial, 5> t{
      parse_monomial("q^2 J11^2 P1 P2 P3 / J1^3 P5"), parse_monomial("J11^2 P2 P4 P5 / J1^3 P1"),
      parse_monomial("q J11^2 P2 P3 P5 / J1^3 P4"), parse_monomial("q J11^2 P1 P3 P4 / J1^3 P2"),
      parse_monomial("q J11^2 P1 P4 P5 / J1^3 P3")};
  return t;
}

inline const std::array<Monomial, 5>& bracket_terms() {
  static const std::array<Monomial, 5> t{
      parse_monomial("J11^2 P5^2 P4 / J1^3"), parse_monomial("q^2 J11^2 P1^2 P3 / J1^3"),
      parse_monomial("q J11^2 P4^2 P1 / J1^3"), parse_monomial("q J11^2 P2^2 P5 / J1^3"),
      parse_monomial("q J11^2 P3^2 P2 / J1^3")};
  return t;
}

namespace detail {

template <std::size_t N>
Series combine(const ProductBasis& B, const std::array<Monomial, N>& terms, const std::array<long, N>& c,
               const Monomial& factor = Monomial{}) {
  Series s;
  for (std::size_t i = 0; i < N; ++i)
    if (c[i] != 0) s = add(s, scale(B.eval(terms[i] * factor), mpq_class(c[i])));
  if (s.is_exact_zero()) s = Series::zero_to(B.inner_order());
  return s;
}

}  // namespace detail

/// Theta(a1..a5) = J11^6/J1^2 [a1 q^2/(P4 P5^2) + a2/(P1^2 P3) + a3 q/(P1 P4^2) + a4 q/(P2^2 P5) + a5 q/(P2 P3^2)].
inline Series theta(const ProductBasis& B, const ThetaCoeffs& a, const Monomial& factor = Monomial{}) {
  return detail::combine(B, theta_terms(), a, factor);
}

/// The same Theta written over J11^2/J1^3.
inline Series theta_alt(const ProductBasis& B, const ThetaCoeffs& a) { return detail::combine(B, theta_alt_terms(), a); }

/// [c1..c5] = J11^2/J1^3 (c1 P5^2 P4 + c2 q^2 P1^2 P3 + c3 q P4^2 P1 + c4 q P2^2 P5 + c5 q P3^2 P2).
inline Series bracket(const ProductBasis& B, const BracketCoeffs& c, const Monomial& factor = Monomial{}) {
  return detail::combine(B, bracket_terms(), c, factor);
}

/// [c1..c5; c6]_m = prefix_m [c1..c5] + c6 J11^2/J1^3 extra_m.
inline Series residue_bracket(const ProductBasis& B, int m, const ResidueCoeffs& c) {
  const auto& shape = residue_shape(m);
  Series s = bracket(B, {c[0], c[1], c[2], c[3], c[4]}, parse_monomial(shape.prefix));
  if (c[5] != 0) s = add(s, scale(B.eval(parse_monomial(shape.extra) * parse_monomial("J11^2 / J1^3")), mpq_class(c[5])));
  return s;
}

/// J11^2 * prefix_m, the series multiplying the v11 coefficient of residue m.
inline Series unit_residue(const ProductBasis& B, int m) {
  return B.eval(parse_monomial(residue_shape(m).prefix) * parse_monomial("J11^2"));
}

// ---------------------------------------------------------------------------
// Tables

/// Crank deviation rows D_C(a, 11) = v11(row_a), a = 0..5.
inline const std::array<V11Coeffs, 6>& crank_rows() {
  static const std::array<V11Coeffs, 6> rows{{
      {{10, -12, -2, 8, 6, 4, -4, -6, -8, 2}},
      {{-1, 10, -2, -3, -5, 4, 7, 5, 3, 2}},
      {{-1, -1, 9, -3, 6, -7, -4, -6, 3, 2}},
      {{-1, -1, -2, 8, -5, 4, -4, 5, 3, -9}},
      {{-1, -1, -2, -3, 6, -7, 7, 5, -8, 2}},
      {{-1, -1, -2, -3, -5, 4, -4, -6, 3, 2}},
  }};
  return rows;
}

/// Rank deviation rows: D(a,11) = G11(g_a) + v11(v_a) + sum_m q^m Theta_{a,m}(q^11).
inline const std::array<G11Coeffs, 6>& rank_g11_rows() {
  static const std::array<G11Coeffs, 6> rows{{
      {{-2, 0, 0, 0, 0}},
      {{1, 0, -1, 0, 0}},
      {{0, 0, 1, 0, -1}},
      {{0, 0, 0, 1, 1}},
      {{0, 1, 0, -1, 0}},
      {{0, -1, 0, 0, 0}},
  }};
  return rows;
}

inline const std::array<V11Coeffs, 6>& rank_v11_rows() {
  static const std::array<V11Coeffs, 6> rows{{
      {{10, -12, -2, 8, 6, 4, 18, -6, -8, 2}},
      {{-1, 10, -2, -3, -5, 4, -4, -6, 3, 2}},
      {{-1, -1, 9, -3, 6, -7, -4, 5, 3, 2}},
      {{-1, -1, -2, -3, 17, -7, -4, 5, 3, -9}},
      {{-1, -1, -2, -3, 6, 4, -4, 5, -8, 13}},
      {{-1, -1, -2, -3, -5, 4, -4, -6, 3, -9}},
  }};
  return rows;
}

/// Theta_{a,6} = Q_{a,6}.
inline const std::array<ThetaCoeffs, 6>& theta6_rows() {
  static const std::array<ThetaCoeffs, 6> rows{{
      {0, 0, 2, 2, -2},
      {-1, 1, -1, -2, 1},
      {1, 0, -1, 2, 0},
      {1, 0, 1, -1, -1},
      {0, -1, 1, 0, 2},
      {-1, 0, -1, 0, -1},
  }};
  return rows;
}

/// Q_{a,m} for m != 6 in two equivalent printed forms:
///   theta part = (1/11) [full]_m = (split/11) J11^2 prefix_m + [rest]_m.
struct QEntry {
  int a;
  int m;
  ResidueCoeffs full;
  long split;
  ResidueCoeffs rest;
};

inline const std::vector<QEntry>& q_entries() {
  static const std::vector<QEntry> t{
      {0, 0, {10, 56, -32, -10, -10, 22}, 10, {0, 6, -2, 0, 0, 2}},
      {1, 0, {-1, -10, 23, 1, 1, -11}, -1, {0, -1, 2, 0, 0, -1}},
      {2, 0, {-1, -32, 1, 12, 1, 0}, -1, {0, -3, 0, 1, 0, 0}},
      {3, 0, {-1, 23, -21, 1, 12, 0}, -1, {0, 2, -2, 0, 1, 0}},
      {4, 0, {-1, -10, 23, -21, 1, 0}, -1, {0, -1, 2, -2, 0, 0}},
      {5, 0, {-1, 1, -10, 12, -10, 0}, -1, {0, 0, -1, 1, -1, 0}},
      {0, 1, {10, 12, 12, 12, -10, -22}, -12, {2, 0, 0, 0, -2, -2}},
      {1, 1, {-1, -10, -10, 1, 23, 0}, 10, {-1, 0, 0, 1, 3, 0}},
      {2, 1, {-1, 12, 1, -10, 1, 11}, -1, {0, 1, 0, -1, 0, 1}},
      {3, 1, {-1, -10, 12, 1, -21, 11}, -1, {0, -1, 1, 0, -2, 1}},
      {4, 1, {-1, 1, -10, 12, -10, 0}, -1, {0, 0, -1, 1, -1, 0}},
      {5, 1, {-1, 1, 1, -10, 12, -11}, -1, {0, 0, 0, -1, 1, -1}},
      {0, 2, {-2, -20, 24, 2, 2, -22}, -2, {0, -2, 2, 0, 0, -2}},
      {1, 2, {9, 13, -31, 2, 2, 11}, -2, {1, 1, -3, 0, 0, 1}},
      {2, 2, {-2, -9, 24, -9, 2, 11}, 9, {-1, 0, 3, 0, 1, 1}},
      {3, 2, {-2, 13, 13, 2, -9, -22}, -2, {0, 1, 1, 0, -1, -2}},
      {4, 2, {-2, -9, -20, 13, 2, 22}, -2, {0, -1, -2, 1, 0, 2}},
      {5, 2, {-2, 2, 2, -9, 2, -11}, -2, {0, 0, 0, -1, 0, -1}},
      {0, 3, {8, 36, -8, -8, 14, -22}, 8, {0, 4, 0, 0, 2, -2}},
      {1, 3, {-3, -30, 3, 3, 3, 22}, -3, {0, -3, 0, 0, 0, 2}},
      {2, 3, {8, 14, 3, 3, -8, -22}, -3, {1, 1, 0, 0, -1, -2}},
      {3, 3, {-3, 3, -8, 3, -8, 22}, -3, {0, 0, -1, 0, -1, 2}},
      {4, 3, {-3, 14, 14, -8, 3, -11}, -3, {0, 1, 1, -1, 0, -1}},
      {5, 3, {-3, -19, -8, 3, 3, 0}, -3, {0, -2, -1, 0, 0, 0}},
      {0, 4, {6, -6, 16, -28, 16, 0}, 6, {0, 0, 2, -2, 2, 0}},
      {1, 4, {6, 5, -17, 5, 5, 0}, -5, {1, 0, -2, 0, 0, 0}},
      {2, 4, {-5, -6, 5, 27, -6, 0}, 6, {-1, 0, 1, 3, 0, 0}},
      {3, 4, {6, 5, 16, -17, -17, 0}, 17, {-1, 2, 3, 0, 0, 0}},
      {4, 4, {-5, -6, -17, 27, -6, -11}, 6, {-1, 0, -1, 3, 0, -1}},
      {5, 4, {-5, 5, 5, -28, 16, 11}, -5, {0, 0, 0, -3, 1, 1}},
      {0, 5, {4, 18, -4, -4, -4, 22}, 4, {0, 2, 0, 0, 0, 2}},
      {1, 5, {4, -15, 7, 7, -4, 0}, 4, {0, -1, 1, 1, 0, 0}},
      {2, 5, {4, 7, -4, 7, 7, -22}, -7, {1, 0, -1, 0, 0, -2}},
      {3, 5, {-7, -4, -4, 7, 7, 11}, -7, {0, -1, -1, 0, 0, 1}},
      {4, 5, {4, 7, 7, -37, -4, 11}, 4, {0, 1, 1, -3, 0, 1}},
      {5, 5, {-7, -4, -4, 18, -4, -11}, 4, {-1, 0, 0, 2, 0, -1}},
      {0, 7, {18, 26, 4, -18, -18, 0}, 18, {0, 4, 2, 0, 0, 0}},
      {1, 7, {-4, -29, -7, 4, 37, 11}, -4, {0, -3, -1, 0, 3, 1}},
      {2, 7, {7, 26, 4, 15, -29, -11}, -4, {1, 2, 0, 1, -3, -1}},
      {3, 7, {-4, -18, 4, -7, 15, 0}, -4, {0, -2, 0, -1, 1, 0}},
      {4, 7, {-4, 15, -7, -7, 4, 0}, -4, {0, 1, -1, -1, 0, 0}},
      {5, 7, {-4, -7, 4, 4, -18, 0}, -4, {0, -1, 0, 0, -2, 0}},
      {0, 8, {38, 6, 6, -16, 6, 0}, -6, {4, 0, 0, -2, 0, 0}},
      {1, 8, {-17, -5, -5, 6, 6, 11}, -6, {-1, -1, -1, 0, 0, 1}},
      {2, 8, {16, 6, -5, 6, -5, 0}, 5, {1, 1, 0, 1, 0, 0}},
      {3, 8, {-6, -5, 17, -5, -5, 0}, 5, {-1, 0, 2, 0, 0, 0}},
      {4, 8, {-17, 6, -16, -5, -5, 0}, 5, {-2, 1, -1, 0, 0, 0}},
      {5, 8, {5, -5, 6, 6, 6, -11}, -6, {1, -1, 0, 0, 0, -1}},
      {0, 9, {14, 8, -36, 8, 8, 0}, -8, {2, 0, -4, 0, 0, 0}},
      {1, 9, {3, -14, 19, -3, 8, 0}, 3, {0, -1, 2, 0, 1, 0}},
      {2, 9, {3, 19, 8, -3, -3, 0}, 3, {0, 2, 1, 0, 0, 0}},
      {3, 9, {3, -14, 19, -3, -14, -11}, 3, {0, -1, 2, 0, -1, -1}},
      {4, 9, {-8, 8, -14, 8, -3, 11}, -8, {0, 0, -2, 0, -1, 1}},
      {5, 9, {-8, -3, -14, -3, 8, 0}, 3, {-1, 0, -1, 0, 1, 0}},
      {0, 10, {2, -24, 20, 20, -2, 0}, 2, {0, -2, 2, 2, 0, 0}},
      {1, 10, {13, 20, -13, -2, -2, 0}, 2, {1, 2, -1, 0, 0, 0}},
      {2, 10, {-42, -13, -2, -24, -2, 11}, 2, {-4, -1, 0, -2, 0, 1}},
      {3, 10, {46, 9, 9, 9, 9, -11}, -9, {5, 0, 0, 0, 0, -1}},
      {4, 10, {-9, -13, -13, 20, -2, 0}, 13, {-2, 0, 0, 3, 1, 0}},
      {5, 10, {-9, 9, 9, -13, -2, 0}, -9, {0, 0, 0, -2, -1, 0}},
  };
  return t;
}

inline const QEntry& q_entry(int a, int m) {
  check_residue(m);
  if (a < 0 || a > 5) throw std::out_of_range("rank class a must be in 0..5 for the printed tables");
  for (const auto& e : q_entries())
    if (e.a == a && e.m == m) return e;
  throw std::out_of_range("no table entry");
}

/// Q_{a,m} written with two theta quotients:
///   mock + (1/11) (first_m Theta(A) + second_m Theta(B)).
/// `a`, `m` is the label as printed; `true_a`, `true_m` the element the row
/// actually represents when the printed label is a duplicate.
struct ThetaFormEntry {
  int a;
  int m;
  ThetaCoeffs first;
  ThetaCoeffs second;
  int true_a;
  int true_m;
};

inline const std::vector<ThetaFormEntry>& theta_form_entries() {
  static const std::vector<ThetaFormEntry> t{
      {0, 7, {-18, 0, -18, 26, 10}, {0, 0, 0, 0, 4}, 0, 7},
      {1, 7, {37, 0, 4, -29, 21}, {11, 0, 0, 0, -7}, 1, 7},
      {2, 7, {-29, 0, 15, 26, -34}, {-11, 0, 0, 0, 4}, 2, 7},
      {3, 7, {15, 0, -7, -18, 21}, {0, 0, 0, 0, 4}, 3, 7},
      {4, 7, {4, 0, -7, 15, -12}, {0, 0, 0, 0, -7}, 4, 7},
      {5, 7, {-18, 0, 4, -7, -1}, {0, 0, 0, 0, 4}, 5, 7},
      {0, 8, {6, 0, 42, -36, -6}, {0, 0, -16, 6, 0}, 0, 8},
      {1, 8, {6, 0, -24, 30, 5}, {0, 0, 6, -5, 0}, 1, 8},
      {2, 8, {-5, 0, 9, -14, 5}, {0, 0, 6, 6, 0}, 2, 8},
      {3, 8, {-5, 0, 9, 8, -17}, {0, 0, -5, -5, 0}, 3, 8},
      {4, 8, {-5, 0, -13, -3, 16}, {0, 0, -5, 6, 0}, 4, 8},
      {5, 8, {6, 0, -2, -3, -6}, {0, 0, 6, -5, 0}, 5, 8},
      {0, 0, {-10, -52, 0, 56, 32}, {0, 10, 0, 22, 0}, 0, 0},
      {1, 0, {1, 25, 0, -10, -23}, {0, -1, 0, -11, 0}, 1, 0},
      {2, 0, {1, 14, 0, -32, -1}, {0, -1, 0, 0, 0}, 2, 0},
      {3, 0, {12, -8, 0, 23, 21}, {0, -1, 0, 0, 0}, 3, 0},
      {4, 0, {1, 3, 0, -10, -23}, {0, -1, 0, 0, 0}, 4, 0},
      {5, 0, {-10, -8, 0, 1, 10}, {0, -1, 0, 0, 0}, 5, 0},
      {0, 1, {0, -6, -12, -4, -12}, {0, 10, 0, -12, 0}, 0, 1},
      {1, 1, {0, 5, -1, -4, 10}, {0, -1, 0, 10, 0}, 1, 1},
      {2, 1, {0, 16, 10, -15, -1}, {0, -1, 0, -12, 0}, 2, 1},
      {3, 1, {0, -6, -1, 18, -12}, {0, -1, 0, 10, 0}, 3, 1},
      {4, 1, {0, -6, -12, 18, 10}, {0, -1, 0, -1, 0}, 4, 1},
      {5, 1, {0, -6, 10, -15, -1}, {0, -1, 0, -1, 0}, 5, 1},
      {0, 2, {-12, 30, 2, -20, 0}, {2, -2, 0, 0, 0}, 0, 2},
      {1, 2, {-12, -36, 2, 13, 0}, {2, 9, 0, 0, 0}, 1, 2},
      {2, 2, {21, 19, -9, -9, 0}, {2, -2, 0, 0, 0}, 2, 2},
      {3, 2, {-1, 8, 2, 13, 0}, {-9, -2, 0, 0, 0}, 3, 2},
      {4, 2, {10, -3, 13, -9, 0}, {2, -2, 0, 0, 0}, 4, 2},
      {5, 2, {-12, -3, -9, 2, 0}, {2, -2, 0, 0, 0}, 5, 2},
      {0, 3, {14, 8, 4, 0, -12}, {0, 0, -8, 0, -8}, 0, 3},
      {1, 3, {3, -3, 4, 0, 21}, {0, 0, 3, 0, 3}, 1, 3},
      {2, 3, {-8, 8, -18, 0, -12}, {0, 0, 3, 0, 3}, 2, 3},
      // the last three rows of this block carry duplicated labels
      {2, 3, {-8, -3, 15, 0, -1}, {0, 0, 3, 0, -8}, 3, 3},
      {2, 4, {3, -3, 15, 0, -23}, {0, 0, -8, 0, 14}, 4, 3},
      {2, 5, {3, -3, -18, 0, 21}, {0, 0, 3, 0, -8}, 5, 3},
      {0, 4, {16, 6, -28, 26, 0}, {0, 0, 0, -6, 0}, 0, 4},
      {1, 4, {5, 6, 5, -18, 0}, {0, 0, 0, 5, 0}, 1, 4},
      {2, 4, {-6, -5, 27, 4, 0}, {0, 0, 0, -6, 0}, 2, 4},
      {3, 4, {-17, 6, -17, -7, 0}, {0, 0, 0, 5, 0}, 3, 4},
      {4, 4, {-6, -5, 27, -18, 0}, {0, 0, -11, -6, 0}, 4, 4},
      {5, 4, {16, -5, -28, 26, 0}, {0, 0, 11, 5, 0}, 5, 4},
      {0, 5, {6, 4, 0, -18, 24}, {-4, 0, 0, 0, 4}, 0, 5},
      {1, 5, {-5, 4, 0, 15, -9}, {-4, 0, 0, 0, -7}, 1, 5},
      {2, 5, {17, 4, 0, -7, -9}, {7, 0, 0, 0, 4}, 2, 5},
      {3, 5, {6, -7, 0, 4, 24}, {7, 0, 0, 0, 4}, 3, 5},
      {4, 5, {-27, 4, 0, -7, -20}, {-4, 0, 0, 0, -7}, 4, 5},
      {5, 5, {6, -7, 0, 4, 2}, {-4, 0, 0, 0, 4}, 5, 5},
      {0, 9, {0, 14, 2, -8, -36}, {0, 0, 8, 0, 0}, 0, 9},
      {1, 9, {0, 3, -9, 14, 19}, {0, 0, -3, 0, 0}, 1, 9},
      {2, 9, {0, 3, 13, -19, 8}, {0, 0, -3, 0, 0}, 2, 9},
      {3, 9, {0, 3, -31, 14, 19}, {0, 0, -3, 0, -11}, 3, 9},
      {4, 9, {0, -8, 13, -8, -14}, {0, 0, 8, 0, 11}, 4, 9},
      {5, 9, {0, -8, 13, 3, -14}, {0, 0, -3, 0, 0}, 5, 9},
      {0, 10, {16, 2, 20, 0, 20}, {-2, 0, 0, 0, 0}, 0, 10},
      {1, 10, {5, 13, -2, 0, -13}, {-2, 0, 0, 0, 0}, 1, 10},
      {2, 10, {-39, -42, -24, 0, -2}, {-2, 11, 0, 0, 0}, 2, 10},
      {3, 10, {27, 46, 9, 0, 9}, {9, -11, 0, 0, 0}, 3, 10},
      {4, 10, {-6, -9, 20, 0, -13}, {-2, 0, 0, 0, 0}, 4, 10},
      {5, 10, {5, -9, -13, 0, 9}, {-2, 0, 0, 0, 0}, 5, 10},
  };
  return t;
}

/// Mock part of Q_{a,m}: coef * (q^qshift g(q^arg; q^11) [+ q^-1]).
struct MockTerm {
  int a;
  int m;
  int coef;
  int arg;
  int qshift;
  bool with_pole;
};

inline const std::array<MockTerm, 10>& mock_terms() {
  static const std::array<MockTerm, 10> t{{
      {0, 0, -2, 2, 2, false},
      {1, 0, 1, 2, 2, false},
      {4, 4, 1, 4, 3, false},
      {5, 4, -1, 4, 3, false},
      {1, 7, -1, 5, 3, false},
      {2, 7, 1, 5, 3, false},
      {3, 9, 1, 3, 2, false},
      {4, 9, -1, 3, 2, false},
      {2, 10, -1, 1, 0, true},
      {3, 10, 1, 1, 0, true},
  }};
  return t;
}

/// Q^mck_{a,m}; exact zero for pairs without a mock part.
inline Series mock_part(const ProductBasis& B, int a, int m) {
  if (a > 5) a = 11 - a;
  for (const auto& t : mock_terms()) {
    if (t.a != a || t.m != m) continue;
    return B.cached("mock:" + std::to_string(a) + ":" + std::to_string(m), [&] {
      Series g = shift(mock_g(t.arg, 11, B.inner_order() - t.qshift), t.qshift);
      if (t.with_pole) g = add(g, Series::monomial(-1));
      return scale(g, mpq_class(t.coef));
    });
  }
  return Series();
}

namespace detail {
inline int fold_class(int a) {
  int r = ((a % 11) + 11) % 11;
  return r <= 5 ? r : 11 - r;
}
}  // namespace detail

/// Q_{a,m} from the (1/11)[..;..]_m table (theta part) plus the mock part;
/// Q_{a,6} = Theta_{a,6}. Classes a = 6..10 use the symmetry a -> 11 - a.
inline Series q_table(const ProductBasis& B, int a, int m) {
  check_residue(m, true);
  a = detail::fold_class(a);
  return B.cached("q:" + std::to_string(a) + ":" + std::to_string(m), [&] {
    if (m == 6) return theta(B, theta6_rows()[static_cast<std::size_t>(a)]);
    const auto& e = q_entry(a, m);
    return add(mock_part(B, a, m), scale(residue_bracket(B, m, e.full), mpq_class(1, 11)));
  });
}

/// Q_{a,m} from the split form (k/11) J11^2 prefix_m + [..;..]_m plus mock.
inline Series q_table_split(const ProductBasis& B, int a, int m) {
  check_residue(m);
  a = detail::fold_class(a);
  const auto& e = q_entry(a, m);
  return add(mock_part(B, a, m),
             add(scale(unit_residue(B, m), mpq_class(e.split, 11)), residue_bracket(B, m, e.rest)));
}

/// The integer bracket Theta_{a,m} appearing in the full rank dissection.
inline Series theta_part_integral(const ProductBasis& B, int a, int m) {
  check_residue(m, true);
  a = detail::fold_class(a);
  if (m == 6) return theta(B, theta6_rows()[static_cast<std::size_t>(a)]);
  return residue_bracket(B, m, q_entry(a, m).rest);
}

/// Q_{a,m} evaluated from one row of the theta-function form table.
inline Series q_theta_form(const ProductBasis& B, const ThetaFormEntry& e) {
  const auto& shape = residue_shape(e.true_m);
  Series s = add(theta(B, e.first, parse_monomial(shape.theta_first)), theta(B, e.second, parse_monomial(shape.theta_second)));
  return add(mock_part(B, e.true_a, e.true_m), scale(s, mpq_class(1, 11)));
}

/// Q^C_{a,m} = (a_m / 11) J11^2 prefix_m where a_m is the v11 coefficient.
inline Series qc_table(const ProductBasis& B, int a, int m) {
  check_residue(m, true);
  a = detail::fold_class(a);
  if (m == 6) return Series::zero_to(B.inner_order());
  long c = crank_rows()[static_cast<std::size_t>(a)].at(m);
  if (c == 0) return Series::zero_to(B.inner_order());
  return scale(unit_residue(B, m), mpq_class(c, 11));
}

// ---------------------------------------------------------------------------
// Builders in the undissected variable q

/// v11(a_0..a_10) built directly from X_i = J_{11i,121} and J_121, on [0, order).
inline Series build_v11(const V11Coeffs& c, long order) {
  const long inner = order + 1;
  std::array<Series, 6> X;
  std::array<Series, 6> Xinv;
  for (int i = 1; i <= 5; ++i) {
    X[static_cast<std::size_t>(i)] = theta_j(11 * i, 121, inner);
    Xinv[static_cast<std::size_t>(i)] = invert(X[static_cast<std::size_t>(i)]);
  }
  Series j121sq = pow(euler_J(121, inner), 2);
  auto x = [&](int i) { return X[static_cast<std::size_t>(i)]; };
  auto xi = [&](int i) { return Xinv[static_cast<std::size_t>(i)]; };
  std::array<Series, 10> terms{
      xi(1),
      shift(x(5) * xi(2) * xi(3), 1),
      shift(x(3) * xi(1) * xi(4), 2),
      shift(x(2) * xi(1) * xi(3), 3),
      shift(xi(2), 4),
      shift(x(4) * xi(2) * xi(5), 5),
      shift(xi(3), 7),
      shift(x(1) * xi(4) * xi(5), 19),
      shift(xi(4), 9),
      shift(xi(5), 10),
  };
  Series sum = Series::zero_to(inner);
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (c.c[i] != 0) sum = add(sum, scale(terms[i], mpq_class(c.c[i])));
  return scale(mul(j121sq, sum), mpq_class(1, 11)).truncated(order);
}

/// G11(b_0, b_4, b_7, b_9, b_10) on [0, order) (with the q^-1 pole when b_10 != 0).
inline Series build_g11(const G11Coeffs& b, long order) {
  struct Term {
    long coef;
    long arg;
    long qshift;
  };
  const std::array<Term, 5> terms{{{b.c[0], 22, 22}, {b.c[1], 44, 37}, {b.c[2], 55, 40}, {b.c[3], 33, 31}, {b.c[4], 11, 10}}};
  Series sum = Series::zero_to(order);
  for (const auto& t : terms) {
    if (t.coef == 0) continue;
    Series g = shift(mock_g(t.arg, 121, std::max(order - t.qshift, 0L)), t.qshift);
    sum = add(sum, scale(g, mpq_class(t.coef)));
  }
  if (b.c[4] != 0) sum = add(sum, Series::monomial(-1, b.c[4]));
  return sum;
}

/// sum_m q^m F_m(q^11) for dissected-variable parts F_m known on [0, ceil(order/11)+1).
inline Series undissect(const std::array<Series, 11>& parts, long order) {
  Series sum = Series::zero_to(order);
  for (int m = 0; m < 11; ++m) sum = add(sum, shift(dilate(parts[static_cast<std::size_t>(m)], 11), m));
  return sum.truncated(order);
}

/// Weighted class sum: sum_{a=0}^{10} Q_{a,m} = Q_{0,m} + 2 sum_{a=1}^{5} Q_{a,m}.
inline constexpr std::array<long, 6> kClassWeights{1, 2, 2, 2, 2, 2};

}  // namespace qdissect
