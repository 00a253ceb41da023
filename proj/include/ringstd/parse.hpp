#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ringstd/poly.hpp"

namespace ringstd {

/// One problem per file. Statements end with ';', '#' starts a comment:
///
///   ring ZZ;                      # ZZ, QQ or ZZ/m
///   vars t | x, y;                # t-block | x-block; "vars x, y;" without t
///   rank 1;
///   order w(-1,3,3):lex(x>y);     # also lex, deglex, degrevlex, m((..),(..))
///   position top;                 # or pot
///   prime 2;
///   weights 3, 3;
///   gens: 2 - t, 1 + t^6*x;       # vectors as [f1, f2] or f*gen(2)
///   query: 2*x;
struct Problem {
  Ring ring = Ring::integers();
  std::vector<std::string> t_vars;
  std::vector<std::string> x_vars;
  std::uint32_t rank = 1;
  Position position = Position::Top;
  SpacePtr space;
  std::vector<Poly> gens;
  std::optional<Poly> query;
  std::optional<mpz_class> prime;
  std::optional<std::vector<Coeff>> weights;
};

/// ParseError (with line and column) or UsageError on malformed input.
Problem parse_problem(std::string_view text);

/// Ordering spec over the given variables; names or 1-based x-indices in lex(..).
OrderingPtr parse_ordering(std::string_view spec, const std::vector<std::string>& names, std::size_t nt,
                           std::uint32_t rank = 1, Position pos = Position::Top);

/// Expression over space's variables.
Poly parse_poly(std::string_view text, const SpacePtr& space);

/// Comma-separated rationals, e.g. "3, -1/2".
std::vector<Coeff> parse_rationals(std::string_view text);

std::string format_coeff(const Coeff& c);
/// "2*x^2*y + 1"; "[f1, f2]" for rank > 1; "0".
std::string format_poly(const Poly& f);
/// A ring polynomial (component 0) of any space.
std::string format_scalar(const Poly& f);
/// Leading term alone.
std::string format_lead(const Poly& f);

}  // namespace ringstd
