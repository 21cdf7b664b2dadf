#pragma once

// Seeded random polynomials and derivations. Only the raw mt19937_64 stream
// is used (never std:: distributions), so samples are identical across
// standard libraries for a given seed.

#include "wn/derivation.hpp"

#include <cstdint>
#include <random>
#include <span>

namespace wn {

struct SampleShape {
    unsigned max_degree = 4;
    unsigned max_terms = 4;  // per polynomial
    unsigned max_numerator = 9;
    unsigned max_denominator = 9;
};

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
    // Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    Rational rational(const SampleShape& shape, bool nonzero = true);
    Monomial monomial(std::size_t n, unsigned max_degree);
    Polynomial polynomial(std::size_t n, const SampleShape& shape);
    // Total degree >= 1, so constant_extraction applies.
    Polynomial nonconstant_polynomial(std::size_t n, const SampleShape& shape);
    Derivation derivation(std::size_t n, const SampleShape& shape);
    // Random rational combination of a random nonempty subset of gens.
    Derivation combination(std::span<const Derivation> gens, unsigned max_terms, const SampleShape& shape);

private:
    std::mt19937_64 engine_;
};

}  // namespace wn
