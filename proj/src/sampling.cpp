#include "wn/sampling.hpp"

#include "wn/errors.hpp"

namespace wn {

Rational Sampler::rational(const SampleShape& shape, bool nonzero) {
    const auto lo = nonzero ? 1u : 0u;
    mpz_class num(static_cast<unsigned long>(between(lo, shape.max_numerator)));
    if (below(2)) num = -num;
    mpz_class den(static_cast<unsigned long>(between(1, shape.max_denominator)));
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Monomial Sampler::monomial(std::size_t n, unsigned max_degree) {
    std::vector<std::uint32_t> exps(n, 0);
    const auto d = below(max_degree + 1);
    for (std::uint64_t k = 0; k < d; ++k) ++exps[below(n)];
    return Monomial(std::move(exps));
}

Polynomial Sampler::polynomial(std::size_t n, const SampleShape& shape) {
    Polynomial p(n);
    const auto terms = between(1, std::max(1u, shape.max_terms));
    for (std::uint64_t t = 0; t < terms; ++t) p.add_term(monomial(n, shape.max_degree), rational(shape));
    return p;
}

Polynomial Sampler::nonconstant_polynomial(std::size_t n, const SampleShape& shape) {
    if (shape.max_degree < 1) throw PreconditionError("nonconstant sample needs max_degree >= 1");
    while (true) {
        Polynomial p = polynomial(n, shape);
        if (auto d = p.total_degree(); d && *d >= 1) return p;
    }
}

Derivation Sampler::derivation(std::size_t n, const SampleShape& shape) {
    Derivation d(n);
    for (std::size_t i = 1; i <= n; ++i)
        if (below(4) != 0) d.set_coeff(i, polynomial(n, shape));
    return d;
}

Derivation Sampler::combination(std::span<const Derivation> gens, unsigned max_terms, const SampleShape& shape) {
    if (gens.empty()) throw PreconditionError("combination needs at least one generator");
    Derivation d(gens.front().ambient());
    const auto terms = between(1, std::max(1u, max_terms));
    for (std::uint64_t t = 0; t < terms; ++t) d += gens[below(gens.size())] * rational(shape);
    return d;
}

}  // namespace wn
