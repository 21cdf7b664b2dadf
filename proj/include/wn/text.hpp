#pragma once

// Text syntax shared by the CLI and reports.
//
//   deriv := ["+"|"-"] term (("+"|"-") term)*  |  "0"
//   term  := [product ["*"]] "d" INT
//   poly  := ["+"|"-"] product (("+"|"-") product)*
//   product := factor (["*"] factor)*        (juxtaposition multiplies)
//   factor  := atom ["^" INT]
//   atom    := INT | INT "/" INT | "x" INT | "(" poly ")"
//
// A term's coefficient is a product, so sums must be parenthesized:
// "(x1 + 1) d1". Whitespace is ignored between tokens.

#include "wn/derivation.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace wn {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

Polynomial parse_polynomial(std::string_view text, std::size_t n);
Derivation parse_derivation(std::string_view text, std::size_t n);

// "p/q" in lowest terms, or "p" for integers.
std::string format_rational(const Rational& q);
// Terms in graded-lex order, greatest first: "-x2^3 + 1/2 x1".
std::string format_polynomial(const Polynomial& f);
// Terms by slot: "(x1^2) d1 + (-2 x1 x2) d2"; unit coefficients print as "d1".
std::string format_derivation(const Derivation& d);
std::string format_exponents(std::span<const std::uint32_t> alpha);

}  // namespace wn
