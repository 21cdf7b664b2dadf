#pragma once

#include "wn/sampling.hpp"
#include "wn/text.hpp"

#include <doctest.h>

namespace wn::test {

inline Polynomial P(const char* text, std::size_t n) { return parse_polynomial(text, n); }
inline Derivation D(const char* text, std::size_t n) { return parse_derivation(text, n); }

inline constexpr std::uint64_t kSeed = 20240611;

}  // namespace wn::test

namespace doctest {
template <>
struct StringMaker<wn::Polynomial> {
    static String convert(const wn::Polynomial& p) { return wn::format_polynomial(p).c_str(); }
};
template <>
struct StringMaker<wn::Derivation> {
    static String convert(const wn::Derivation& d) { return wn::format_derivation(d).c_str(); }
};
}  // namespace doctest
