#include "wn/verify.hpp"

#include "wn/errors.hpp"
#include "wn/sampling.hpp"
#include "wn/text.hpp"

#include <algorithm>
#include <functional>

namespace wn {

using report::Json;

Polynomial differentiate_sequentially(const Polynomial& f, std::span<const std::uint32_t> alpha) {
    Polynomial g = f;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        for (std::uint32_t k = 0; k < alpha[i]; ++k) g = partial(g, i + 1);
    return g;
}

bool VerifyReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

Json VerifyReport::to_json() const {
    Json list = Json::array();
    for (const auto& c : checks)
        list.push_back({{"name", c.name}, {"passed", c.passed}, {"samples", c.samples}, {"details", c.details}});
    return {{"schema", report::kSchemaVersion},
            {"command", "verify-paper"},
            {"n_max", options.n_max},
            {"seed", options.seed},
            {"passed", all_passed()},
            {"checks", list}};
}

namespace {

std::size_t pick_n(Sampler& rng, std::size_t n_max) { return static_cast<std::size_t>(rng.between(1, n_max)); }

Derivation var_field(std::size_t slot, std::initializer_list<std::uint32_t> exps, const Rational& c) {
    return Derivation::monomial_field(Polynomial::term(c, Monomial(std::vector<std::uint32_t>(exps))), slot);
}

CheckResult fail_sample(CheckResult r, const std::string& what) {
    r.passed = false;
    r.details["first_failure"] = what;
    return r;
}

CheckResult product_rule(const VerifyOptions& o, Sampler& rng) {
    CheckResult r{"bracket_product_rule", true, 0};
    const SampleShape shape{4, 3, 9, 9};
    for (int t = 0; t < 200; ++t, ++r.samples) {
        const auto n = pick_n(rng, o.n_max);
        const auto a = rng.polynomial(n, shape), b = rng.polynomial(n, shape);
        const auto d1 = rng.derivation(n, shape), d2 = rng.derivation(n, shape);
        const auto lhs = bracket(a * d1, b * d2);
        const auto rhs = (a * b) * bracket(d1, d2) + (a * apply(d1, b)) * d2 - (b * apply(d2, a)) * d1;
        if (lhs != rhs) return fail_sample(r, format_derivation(d1) + " ; " + format_derivation(d2));
    }
    // Commuting partials: the ab[D1,D2] summand vanishes.
    for (std::size_t n = 1; n <= o.n_max; ++n)
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j, ++r.samples) {
                const auto a = rng.polynomial(n, shape), b = rng.polynomial(n, shape);
                const auto di = Derivation::partial(n, i), dj = Derivation::partial(n, j);
                if (!bracket(di, dj).is_zero() ||
                    bracket(a * di, b * dj) != (a * apply(di, b)) * dj - (b * apply(dj, a)) * di)
                    return fail_sample(r, "commuting case d" + std::to_string(i) + ", d" + std::to_string(j));
            }
    return r;
}

CheckResult bracket_oracle(const VerifyOptions& o, Sampler& rng) {
    CheckResult r{"bracket_composition_jacobi", true, 0};
    const SampleShape shape{3, 3, 9, 9};
    for (int t = 0; t < 200; ++t, ++r.samples) {
        const auto n = pick_n(rng, o.n_max);
        const auto d = rng.derivation(n, shape), e = rng.derivation(n, shape), f = rng.derivation(n, shape);
        const auto de = bracket(d, e);
        for (std::size_t i = 1; i <= n; ++i) {
            const auto x = Polynomial::variable(n, i);
            if (apply(de, x) != apply(d, apply(e, x)) - apply(e, apply(d, x)))
                return fail_sample(r, "composition on x" + std::to_string(i));
        }
        const auto p = rng.polynomial(n, shape);
        if (apply(de, p) != apply(d, apply(e, p)) - apply(e, apply(d, p)))
            return fail_sample(r, "composition on a random polynomial");
        if (de != -bracket(e, d)) return fail_sample(r, "anticommutativity");
        if (!(bracket(d, bracket(e, f)) + bracket(e, bracket(f, d)) + bracket(f, bracket(d, e))).is_zero())
            return fail_sample(r, "Jacobi");
    }
    return r;
}

CheckResult extraction_checks(const VerifyOptions& o, Sampler& rng) {
    CheckResult r{"constant_and_linear_extraction", true, 0};
    const SampleShape shape{5, 4, 9, 9};
    std::size_t linear_cases = 0;
    for (int t = 0; t < 50; ++t, ++r.samples) {
        const auto n = pick_n(rng, o.n_max);
        const auto f = rng.nonconstant_polynomial(n, shape);
        const auto ce = constant_extraction(f);
        const auto g = differentiate_sequentially(f, ce.alpha);
        if (ce.gamma == 0 || g != Polynomial(n, ce.gamma)) return fail_sample(r, "constant: " + format_polynomial(f));
        for (std::size_t i = 1; i <= n; ++i) {
            if (*degree_in(f, i) < 1) continue;
            ++linear_cases;
            const auto le = linear_extraction(f, i);
            const auto h = differentiate_sequentially(f, le.beta);
            const auto target = Polynomial::variable(n, i) * le.lambda + le.g;
            const auto gd = degree_in(le.g, i);
            if (le.lambda == 0 || h != target || (gd && *gd != 0))
                return fail_sample(r, "linear in x" + std::to_string(i) + ": " + format_polynomial(f));
        }
    }
    r.details["linear_cases"] = linear_cases;
    return r;
}

CheckResult bracket_fixtures(const VerifyOptions& o) {
    CheckResult r{"displayed_bracket_fixtures", true, 0};
    auto expect = [&](const std::string& label, const Derivation& got, const Derivation& want) {
        ++r.samples;
        r.details[label] = format_derivation(got);
        if (got != want) r.passed = false;
    };
    const Rational one(1);
    // [x1^2 d2, x2 d1] = x1^2 d1 - 2 x1 x2 d2
    expect("[x1^2 d2, x2 d1]", bracket(var_field(2, {2, 0}, one), var_field(1, {0, 1}, one)),
           var_field(1, {2, 0}, one) + var_field(2, {1, 1}, Rational(-2)));
    expect("[E_2, x1^2 d2]", bracket(Derivation::euler(2), var_field(2, {2, 0}, one)), var_field(2, {2, 0}, one));
    expect("[2 x1 d1 + 5 x2 d2, x1 d2]",
           bracket(var_field(1, {1, 0}, Rational(2)) + var_field(2, {0, 1}, Rational(5)),
                   var_field(2, {1, 0}, one)),
           var_field(2, {1, 0}, Rational(-3)));
    // The k-indexed identity for every k < n.
    const auto nn = std::max<std::size_t>(o.n_max, 2);
    for (std::size_t k = 1; k < nn; ++k) {
        const auto xk = Polynomial::variable(nn, k), xk1 = Polynomial::variable(nn, k + 1);
        const auto got = bracket(Derivation::monomial_field(xk * xk, k + 1), Derivation::monomial_field(xk1, k));
        const auto want = Derivation::monomial_field(xk * xk, k) - Derivation::monomial_field(xk * xk1 * Rational(2), k + 1);
        expect("[x" + std::to_string(k) + "^2 d" + std::to_string(k + 1) + ", x" + std::to_string(k + 1) + " d" +
                   std::to_string(k) + "] (n=" + std::to_string(nn) + ")",
               got, want);
    }
    // Diagonal eigenvalue mu_i - mu_j and the Euler eigenvalue mu.
    const auto cert = eigenvector_certificate(var_field(1, {1, 0}, Rational(2)) + var_field(2, {0, 1}, Rational(5)),
                                              var_field(2, {1, 0}, one));
    ++r.samples;
    r.details["diagonal_eigenvalue"] = cert ? format_rational(cert->scalar) : "none";
    if (!cert || cert->scalar != -3 || cert->relation != EigenRelation::adD_E_eq_cE) r.passed = false;
    return r;
}

CheckResult solvability_fixtures() {
    CheckResult r{"solvability_fixtures", true, 0};
    const Rational one(1);
    const std::vector<Derivation> affine{Derivation::partial(1, 1), var_field(1, {1}, one)};
    const auto s1 = derived_series(SpanBasis::coordinatize(1, affine), default_max_iter(1));
    r.details["span{d1, x1 d1}"] = report::series_json(s1);
    r.passed = r.passed && s1.solvable() && s1.step == 2 && s1.dims == std::vector<std::size_t>{2, 1, 0};

    const std::vector<Derivation> sl2{Derivation::partial(1, 1), var_field(1, {1}, one), var_field(1, {2}, one)};
    const auto s2 = derived_series(SpanBasis::coordinatize(1, sl2), default_max_iter(1));
    r.details["span{d1, x1 d1, x1^2 d1}"] = report::series_json(s2);
    r.passed = r.passed && s2.outcome == SeriesOutcome::stabilized_nonzero && s2.dims == std::vector<std::size_t>{3, 3};

    auto res = sl2_check(Derivation::partial(1, 1), var_field(1, {2}, Rational(-1)), var_field(1, {1}, Rational(-2)), 1);
    const bool ok = std::holds_alternative<Sl2Certificate>(res);
    r.details["sl2_check(d1, -x1^2 d1, -2 x1 d1, k=1)"] = ok ? "certificate" : std::get<Sl2Mismatch>(res).reason;
    r.passed = r.passed && ok;
    r.samples = 3;
    return r;
}

CheckResult chain_witnesses(const VerifyOptions& o) {
    CheckResult r{"derived_chain_witnesses", true, 0};
    for (std::size_t n = 1; n <= std::min<std::size_t>(o.n_max, 2); ++n, ++r.samples) {
        const auto w = derived_chain_witness(n);
        r.details["n=" + std::to_string(n)] = report::witness_json(w);
        const bool ok = w.found && !w.value->is_zero() && w.expression->evaluate(w.generators) == *w.value &&
                        w.expression->depth() == 2 * n - 1;
        r.passed = r.passed && ok;
    }
    // s_1 = span{d1, x1 d1} is finite dimensional: its derived length is exactly 2.
    const auto s1 = derived_series(SpanBasis::coordinatize(1, generators(Subalgebra::sn, 1, 4)), default_max_iter(1));
    r.details["s_1 derived length"] = s1.solvable() ? Json(s1.step) : Json(nullptr);
    r.passed = r.passed && s1.solvable() && s1.step == 2;
    return r;
}

CheckResult local_nilpotency(const VerifyOptions& o, Sampler& rng) {
    CheckResult r{"local_nilpotency", true, 0};
    const auto n = o.n_max;
    const auto gens = generators(Subalgebra::un, n, 3);
    const SampleShape shape{3, 3, 9, 9};
    unsigned longest = 0;
    for (int t = 0; t < 50; ++t, ++r.samples) {
        const auto d = rng.combination(gens, 4, shape);
        const auto res = lnd_check(d, 64);
        if (res.verdict != LndVerdict::witness || !res.witness->verify(d)) return fail_sample(r, format_derivation(d));
        longest = std::max(longest, *std::max_element(res.witness->lengths.begin(), res.witness->lengths.end()));
    }
    r.details["longest_chain"] = longest;
    for (std::size_t m = 1; m <= o.n_max; ++m, ++r.samples) {
        const auto res = lnd_check(Derivation::euler(m), 16);
        if (res.verdict != LndVerdict::not_nilpotent) return fail_sample(r, "E_" + std::to_string(m));
        r.details["E_" + std::to_string(m)] = report::lnd_json(res);
    }
    return r;
}

CheckResult membership_check(const VerifyOptions& o, Sampler& rng) {
    CheckResult r{"membership", true, 0};
    for (std::size_t n = 1; n <= o.n_max; ++n)
        for (unsigned deg = 0; deg <= 3; ++deg) {
            for (const auto& g : generators(Subalgebra::un, n, deg)) {
                ++r.samples;
                if (!membership(g).in_un) return fail_sample(r, "u_n generator " + format_derivation(g));
            }
            for (const auto& g : generators(Subalgebra::sn, n, deg)) {
                ++r.samples;
                if (!membership(g).in_sn) return fail_sample(r, "s_n generator " + format_derivation(g));
            }
        }
    const Rational one(1);
    const auto a = membership(var_field(1, {0, 1}, one));
    const auto b = membership(var_field(2, {1, 1}, one));
    const auto c = membership(var_field(1, {1, 0}, one));
    r.samples += 3;
    if (a.in_sn || a.in_un) return fail_sample(r, "x2 d1 must lie outside s_2");
    if (!b.in_sn || b.in_un) return fail_sample(r, "x1 x2 d2 must lie in s_2 minus u_2");
    if (!c.in_sn || c.in_un) return fail_sample(r, "x1 d1 must lie in s_2 minus u_2");
    const auto n = o.n_max;
    for (auto which : {Subalgebra::un, Subalgebra::sn}) {
        const auto gens = generators(which, n, 3);
        for (int t = 0; t < 100; ++t, ++r.samples) {
            const auto& g = gens[rng.below(gens.size())];
            const auto& h = gens[rng.below(gens.size())];
            if (!in_subalgebra(bracket(g, h), which))
                return fail_sample(r, std::string("bracket left ") + to_string(which));
        }
    }
    return r;
}

CheckResult round_trip(const VerifyOptions& o, Sampler& rng) {
    CheckResult r{"parse_format_round_trip", true, 0};
    const SampleShape shape{4, 4, 9, 9};
    for (int t = 0; t < 50; ++t, ++r.samples) {
        const auto n = pick_n(rng, o.n_max);
        const auto d = rng.derivation(n, shape);
        const auto text = format_derivation(d);
        if (parse_derivation(text, n) != d || format_derivation(parse_derivation(text, n)) != text)
            return fail_sample(r, text);
    }
    return r;
}

CheckResult extension_reductions(const VerifyOptions& o, Sampler& rng) {
    CheckResult r{"extension_reductions", true, 0};
    const SampleShape shape{3, 3, 9, 9};
    int un_done = 0, sn_done = 0;
    for (int t = 0; t < 400 && (un_done < 20 || sn_done < 20); ++t) {
        const auto n = pick_n(rng, o.n_max);
        const auto d = rng.derivation(n, shape);
        const auto v = membership(d);
        if (!v.in_un && un_done < 20) {
            const auto cert = un_extension_certificate(d);
            if (!cert.certificate.verify()) return fail_sample(r, "u_n extension: " + format_derivation(d));
            if (un_done == 0) r.details["u_n example"] = {{"steps", report::steps_json(cert.steps)},
                                                         {"certificate", report::eigen_json(cert.certificate)}};
            ++un_done;
            ++r.samples;
        }
        if (!v.in_sn && sn_done < 20) {
            const auto cert = sn_extension_certificate(d);
            if (cert.certificate.series_report.outcome != SeriesOutcome::stabilized_nonzero)
                return fail_sample(r, "s_n extension: " + format_derivation(d));
            if (sn_done == 0) r.details["s_n example"] = {{"steps", report::steps_json(cert.steps)},
                                                         {"certificate", report::sl2_json(cert.certificate)}};
            ++sn_done;
            ++r.samples;
        }
    }
    r.passed = r.passed && un_done == 20 && sn_done == 20;
    return r;
}

}  // namespace

VerifyReport verify_paper(const VerifyOptions& options) {
    if (options.n_max < 1) throw PreconditionError("n_max must be >= 1");
    VerifyReport rep{options, {}};
    // One stream per check, so adding samples to one check leaves the others unchanged.
    auto stream = [&](std::uint64_t salt) { return Sampler(options.seed * 1000003ULL + salt); };
    auto s1 = stream(1), s2 = stream(2), s3 = stream(3), s7 = stream(7), s8 = stream(8), s9 = stream(9), s10 = stream(10);
    auto guarded = [&](const char* name, const std::function<CheckResult()>& fn) {
        try {
            rep.checks.push_back(fn());
        } catch (const std::exception& e) {
            rep.checks.push_back(CheckResult{name, false, 0, {{"exception", e.what()}}});
        }
    };
    guarded("bracket_product_rule", [&] { return product_rule(options, s1); });
    guarded("bracket_composition_jacobi", [&] { return bracket_oracle(options, s2); });
    guarded("constant_and_linear_extraction", [&] { return extraction_checks(options, s3); });
    guarded("displayed_bracket_fixtures", [&] { return bracket_fixtures(options); });
    guarded("solvability_fixtures", [&] { return solvability_fixtures(); });
    guarded("derived_chain_witnesses", [&] { return chain_witnesses(options); });
    guarded("local_nilpotency", [&] { return local_nilpotency(options, s7); });
    guarded("membership", [&] { return membership_check(options, s8); });
    guarded("parse_format_round_trip", [&] { return round_trip(options, s9); });
    guarded("extension_reductions", [&] { return extension_reductions(options, s10); });
    return rep;
}

}  // namespace wn
