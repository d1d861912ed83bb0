// Parser for eta-quotient monomials written as text, e.g.
// "q^2 J11^2 P1^2 P3 / J1^3 P4 P5". Tokens after '/' go to the denominator.
#pragma once

#include "qdissect/products.hpp"

#include <cctype>
#include <string>
#include <string_view>

namespace qdissect {

inline Monomial parse_monomial(std::string_view text) {
  Monomial m;
  int side = 1;
  std::size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw SeriesError("bad monomial '" + std::string(text) + "': " + why);
  };
  auto read_int = [&]() {
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
      negative = true;
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) fail("expected a number");
    long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return negative ? -v : v;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
      ++i;
      continue;
    }
    if (c == '1' && (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      continue;
    }
    if (c == '/') {
      if (side < 0) fail("more than one '/'");
      side = -1;
      ++i;
      continue;
    }
    Monomial factor;
    if (c == 'q') {
      ++i;
      long e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        e = read_int();
      }
      factor = Monomial::q(e);
    } else if (c == 'J' || c == 'P') {
      ++i;
      long idx = read_int();
      if (c == 'J') {
        if (idx == 1)
          factor = Monomial::atom(Atom::J1);
        else if (idx == 11)
          factor = Monomial::atom(Atom::J11);
        else
          fail("only J1 and J11 are supported");
      } else {
        if (idx < 1 || idx > 5) fail("P index must be in 1..5");
        factor = Monomial::P(static_cast<int>(idx));
      }
      if (i < text.size() && text[i] == '^') {
        ++i;
        factor = pow(factor, static_cast<int>(read_int()));
      }
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
    m = (side > 0) ? m * factor : m / factor;
  }
  return m;
}

}  // namespace qdissect
