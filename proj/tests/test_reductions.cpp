#include "support.hpp"

#include "wn/errors.hpp"
#include "wn/reductions.hpp"
#include "wn/verify.hpp"

using namespace wn;
using wn::test::D;
using wn::test::P;

TEST_CASE("constant extraction fixtures") {
    const auto a = constant_extraction(P("x1^2 x2 + x1", 2));
    CHECK(a.alpha == std::vector<std::uint32_t>{2, 1});
    CHECK(a.gamma == 2);
    const auto b = constant_extraction(P("3 x2^3", 2));
    CHECK(b.alpha == std::vector<std::uint32_t>{0, 3});
    CHECK(b.gamma == 18);
    CHECK_THROWS_AS(constant_extraction(P("5", 2)), PreconditionError);
    CHECK_THROWS_AS(constant_extraction(Polynomial(2)), PreconditionError);
}

TEST_CASE("linear extraction fixtures") {
    const auto a = linear_extraction(P("x1 x2^2 + x2 + x1", 2), 2);
    CHECK(a.beta == std::vector<std::uint32_t>{1, 1});
    CHECK(a.lambda == 2);
    CHECK(a.g.is_zero());
    CHECK(a.result == P("2 x2", 2));
    const auto b = linear_extraction(P("x1^2 x2 + x1", 2), 1);
    CHECK(b.result == P("2 x1", 2));
    CHECK(b.lambda == 2);
    const auto c = linear_extraction(P("x1 + x2^2", 2), 1);
    CHECK(c.beta == std::vector<std::uint32_t>{0, 0});
    CHECK(c.g == P("x2^2", 2));
    CHECK_THROWS_AS(linear_extraction(P("x2", 2), 1), PreconditionError);
}

TEST_CASE("extractions on samples") {
    Sampler rng(wn::test::kSeed + 50);
    const SampleShape shape{5, 4, 9, 9};
    for (int t = 0; t < 80; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 3));
        const auto f = rng.nonconstant_polynomial(n, shape);
        const auto ce = constant_extraction(f);
        CHECK(ce.gamma != 0);
        CHECK(differentiate_sequentially(f, ce.alpha) == Polynomial(n, ce.gamma));
        for (std::size_t i = 1; i <= n; ++i) {
            if (*degree_in(f, i) == 0) continue;
            const auto le = linear_extraction(f, i);
            CHECK(le.lambda != 0);
            CHECK((le.g.is_zero() || *degree_in(le.g, i) == 0));
            CHECK(differentiate_sequentially(f, le.beta) == Polynomial::variable(n, i) * le.lambda + le.g);
        }
    }
}

TEST_CASE("flatten fixtures") {
    CHECK(flatten_in_variable(D("x2^3 d1", 2), 2, 1) == D("6 x2 d1", 2));
    CHECK(flatten_in_variable(D("x1^3 d1", 2), 1, 2) == D("3 x1^2 d1", 2));
    CHECK(flatten_in_variable(D("x1 d1", 1), 1, 1) == D("x1 d1", 1));
    CHECK_THROWS_AS(flatten_in_variable(D("x1 d1", 1), 1, 2), PreconditionError);
    CHECK_THROWS_AS(flatten_in_variable(D("x1 d1", 1), 1, 3), PreconditionError);
    CHECK_THROWS_AS(flatten_in_variable(Derivation(1), 1, 1), PreconditionError);
}

TEST_CASE("strip splits off the subalgebra part") {
    const auto d = D("(x1 + x2) d1 + (x1 x2 + x2^2) d2", 2);
    const auto s = strip_canonical_part(d, Subalgebra::sn);
    CHECK(s.stripped == D("x1 d1 + x1 x2 d2", 2));
    CHECK(s.remainder == D("x2 d1 + x2^2 d2", 2));
    const auto u = strip_canonical_part(d, Subalgebra::un);
    CHECK(u.stripped.is_zero());
    Sampler rng(wn::test::kSeed + 51);
    const SampleShape shape{3, 4, 9, 9};
    for (int t = 0; t < 50; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 3));
        const auto e = rng.derivation(n, shape);
        for (auto which : {Subalgebra::un, Subalgebra::sn}) {
            const auto r = strip_canonical_part(e, which);
            CHECK(r.remainder + r.stripped == e);
            CHECK(in_subalgebra(r.stripped, which));
            CHECK(strip_canonical_part(r.remainder, which).stripped.is_zero());
        }
    }
}

TEST_CASE("eigenvector certificates") {
    const auto a = eigenvector_certificate(D("2 x1 d1 + 5 x2 d2", 2), D("x1 d2", 2));
    REQUIRE(a);
    CHECK(a->scalar == -3);
    CHECK(a->relation == EigenRelation::adD_E_eq_cE);
    CHECK(a->verify());
    const auto b = eigenvector_certificate(Derivation::euler(2), D("x1^2 d2", 2));
    REQUIRE(b);
    CHECK(b->scalar == 1);
    // [x2 d1, x1 d2] is not proportional to x1 d2, but the double bracket is.
    const auto c = eigenvector_certificate(D("x2 d1", 2), D("x1 d2", 2));
    REQUIRE(c);
    CHECK(c->relation == EigenRelation::double_bracket_eq_cE);
    CHECK(c->scalar == 2);
    CHECK(c->verify());
    CHECK_FALSE(eigenvector_certificate(D("d1", 2), D("d2", 2)));
    CHECK_THROWS_AS(eigenvector_certificate(D("d1", 2), Derivation(2)), PreconditionError);
    EigenvectorCertificate forged = *a;
    forged.scalar = 4;
    CHECK_FALSE(forged.verify());
}

TEST_CASE("sl2 fixtures") {
    auto r = sl2_check(D("d1", 1), D("-x1^2 d1", 1), D("-2 x1 d1", 1), 1);
    REQUIRE(std::holds_alternative<Sl2Certificate>(r));
    const auto& c = std::get<Sl2Certificate>(r);
    CHECK(c.projection_brackets[0] == P("-2 x1", 1));
    CHECK(c.projection_brackets[1] == P("2", 1));
    CHECK(c.projection_brackets[2] == P("2 x1^2", 1));
    CHECK(c.series_report.outcome == SeriesOutcome::stabilized_nonzero);

    auto r2 = sl2_check(D("x1 d1 + d2", 2), D("-x2^2 d2", 2), D("-2 x2 d2", 2), 2);
    REQUIRE(std::holds_alternative<Sl2Certificate>(r2));
    const auto& c2 = std::get<Sl2Certificate>(r2);
    CHECK(c2.projection_brackets[0] == P("-2 x2", 2));
    CHECK(c2.projection_brackets[1] == P("2", 2));
    CHECK(c2.projection_brackets[2] == P("2 x2^2", 2));

    CHECK(std::holds_alternative<Sl2Mismatch>(sl2_check(D("d1", 1), D("x1^2 d1", 1), D("-2 x1 d1", 1), 1)));
    CHECK(std::holds_alternative<Sl2Mismatch>(sl2_check(D("d1 + d2", 2), D("-x1^2 d1", 2), D("-2 x1 d1", 2), 1)));
}

TEST_CASE("case 2 triple") {
    const auto t = case2_witness(D("x1 d1 + x2^2 d2", 2), 2);
    CHECK(t.t1 == D("d2", 2));
    CHECK(t.t2 == D("-x1 d1 - x2^2 d2", 2));
    CHECK(t.t3 == D("-2 x2 d2", 2));
    CHECK(std::holds_alternative<Sl2Certificate>(sl2_check(t.t1, t.t2, t.t3, 2)));
    CHECK_THROWS_AS(case2_witness(D("2 x2^2 d2", 2), 2), PreconditionError);
    CHECK_THROWS_AS(case2_witness(D("x1^2 d1 + d2", 2), 1), PreconditionError);
}

TEST_CASE("u_n extension certificates") {
    const auto e = un_extension_certificate(Derivation::euler(2));
    CHECK(e.certificate.verify());
    CHECK(e.certificate.e == D("x1^2 d2", 2));
    CHECK(e.steps.front().value == Derivation::euler(2));
    CHECK(un_extension_certificate(Derivation::euler(1)).certificate.verify());
    CHECK_THROWS_AS(un_extension_certificate(D("d1 + x1 d2", 2)), PreconditionError);

    Sampler rng(wn::test::kSeed + 52);
    const SampleShape shape{3, 3, 9, 9};
    int done = 0;
    for (int t = 0; t < 200 && done < 40; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 3));
        const auto d = rng.derivation(n, shape);
        if (in_subalgebra(d, Subalgebra::un)) continue;
        const auto c = un_extension_certificate(d);
        CHECK(c.certificate.verify());
        CHECK(c.certificate.scalar != 0);
        const auto cls = linear_classify(c.linear);
        REQUIRE(cls);
        CHECK(cls->upper_triangular);
        // Brackets with partials were the only non-subtraction steps.
        for (std::size_t s = 1; s + 1 < c.steps.size(); ++s) CHECK_FALSE(in_subalgebra(c.steps[s].value, Subalgebra::un));
        ++done;
    }
    CHECK(done == 40);
}

TEST_CASE("s_n extension certificates") {
    const auto a = sn_extension_certificate(D("x2 d1", 2));
    CHECK(a.certificate.series_report.outcome == SeriesOutcome::stabilized_nonzero);
    const auto b = sn_extension_certificate(D("x1^3 d1", 1));
    CHECK(b.certificate.k == 1);
    CHECK_THROWS_AS(sn_extension_certificate(D("x1 d1 + x1 x2 d2", 2)), PreconditionError);

    Sampler rng(wn::test::kSeed + 53);
    const SampleShape shape{3, 3, 9, 9};
    int done = 0;
    for (int t = 0; t < 200 && done < 40; ++t) {
        const auto n = static_cast<std::size_t>(rng.between(1, 3));
        const auto d = rng.derivation(n, shape);
        if (in_subalgebra(d, Subalgebra::sn)) continue;
        const auto c = sn_extension_certificate(d);
        const auto& cert = c.certificate;
        auto again = sl2_check(cert.t1, cert.t2, cert.t3, cert.k);
        CHECK(std::holds_alternative<Sl2Certificate>(again));
        CHECK(c.steps.front().value == d);
        ++done;
    }
    CHECK(done == 40);
}
