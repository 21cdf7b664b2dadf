#include "support.hpp"

#include "wn/errors.hpp"
#include "wn/verify.hpp"

using namespace wn;
using wn::test::P;

TEST_CASE("fixed products and partials") {
    CHECK(P("x1 + 1", 1) * P("x1 - 1", 1) == P("x1^2 - 1", 1));
    CHECK(partial(P("x1 x2^2 + x2 + x1", 2), 2) == P("2 x1 x2 + 1", 2));
    const std::vector<std::uint32_t> alpha{2, 1};
    CHECK(apply_diff_multi(P("x1^2 x2", 2), alpha) == P("2", 2));
    CHECK(partial(P("7", 3), 2).is_zero());
}

TEST_CASE("grlex order puts higher degree first, then x1 before x2") {
    const auto f = P("x2 + x1 + x2^2 + x1 x2 + 1", 2);
    std::vector<std::string> order;
    for (const auto& [m, c] : f.terms()) order.push_back(format_exponents(m.exponents()));
    CHECK(order == std::vector<std::string>{"(1,1)", "(0,2)", "(1,0)", "(0,1)", "(0,0)"});
    CHECK(f.leading_term().first == Monomial({1, 1}));
    CHECK(f.top_component() == P("x1 x2 + x2^2", 2));
}

TEST_CASE("degrees and index") {
    const auto f = P("x1^3 x2 - x2^4", 3);
    CHECK(*degree_in(f, 1) == 3);
    CHECK(*degree_in(f, 2) == 4);
    CHECK(*degree_in(f, 3) == 0);
    CHECK_FALSE(degree_in(Polynomial(3), 1).has_value());
    CHECK(*f.total_degree() == 4);
    CHECK(*poly_index(f) == 2);
    CHECK_FALSE(poly_index(P("5", 3)).has_value());
    CHECK(f.coefficient(Monomial({0, 4, 0})) == -1);
    CHECK(P("3 + x1", 1).constant_term() == 3);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(partial(P("x1", 2), 3), IndexOutOfRange);
    CHECK_THROWS_AS(partial(P("x1", 2), 0), IndexOutOfRange);
    CHECK_THROWS_AS(P("x1", 2) + P("x1", 3), DimensionMismatch);
    CHECK_THROWS_AS(P("x1", 2) * P("x1", 1), DimensionMismatch);
}

TEST_CASE("ring axioms on samples") {
    Sampler rng(wn::test::kSeed);
    const SampleShape shape{3, 4, 9, 9};
    for (int t = 0; t < 150; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 3));
        const auto a = rng.polynomial(n, shape), b = rng.polynomial(n, shape), c = rng.polynomial(n, shape);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
        CHECK(a + Polynomial(n) == a);
        CHECK(a * Polynomial(n, 1) == a);
        if (!a.is_zero() && !b.is_zero()) CHECK(*(a * b).total_degree() == *a.total_degree() + *b.total_degree());
    }
}

TEST_CASE("partial is a derivation and commutes") {
    Sampler rng(wn::test::kSeed + 1);
    const SampleShape shape{4, 3, 9, 9};
    for (int t = 0; t < 150; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 3));
        const auto a = rng.polynomial(n, shape), b = rng.polynomial(n, shape);
        const auto i = static_cast<std::size_t>(rng.between(1, n)), j = static_cast<std::size_t>(rng.between(1, n));
        CHECK(partial(a * b, i) == partial(a, i) * b + a * partial(b, i));
        CHECK(partial(partial(a, i), j) == partial(partial(a, j), i));
    }
}

TEST_CASE("multi-index differentiation agrees with sequential partials") {
    Sampler rng(wn::test::kSeed + 2);
    const SampleShape shape{5, 4, 9, 9};
    for (int t = 0; t < 150; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 3));
        const auto f = rng.polynomial(n, shape);
        std::vector<std::uint32_t> alpha(n);
        for (auto& a : alpha) a = static_cast<std::uint32_t>(rng.below(4));
        CHECK(apply_diff_multi(f, alpha) == differentiate_sequentially(f, alpha));
    }
}

TEST_CASE("expansion in one variable round-trips") {
    Sampler rng(wn::test::kSeed + 3);
    const SampleShape shape{5, 5, 9, 9};
    for (int t = 0; t < 100; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 3));
        const auto f = rng.polynomial(n, shape);
        const auto var = static_cast<std::size_t>(rng.between(1, n));
        const auto parts = expand_in_variable(f, var);
        if (f.is_zero()) {
            CHECK(parts.empty());
            continue;
        }
        CHECK(parts.size() == *degree_in(f, var) + 1);
        CHECK_FALSE(parts.back().is_zero());
        for (const auto& h : parts) CHECK((h.is_zero() || *degree_in(h, var) == 0));
        CHECK(assemble_in_variable(parts, n, var) == f);
    }
}

TEST_CASE("pow") {
    CHECK(pow(P("x1 + x2", 2), 3) == P("x1^3 + 3 x1^2 x2 + 3 x1 x2^2 + x2^3", 2));
    CHECK(pow(P("x1", 1), 0) == P("1", 1));
}
