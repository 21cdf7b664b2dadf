#include "wn/reductions.hpp"

#include "wn/errors.hpp"

#include <algorithm>

namespace wn {

ConstantExtraction constant_extraction(const Polynomial& f) {
    const auto deg = f.total_degree();
    if (!deg || *deg < 1) throw PreconditionError("constant_extraction needs a nonconstant polynomial");
    const auto& [mono, coeff] = f.leading_term();
    ConstantExtraction out;
    out.alpha.assign(mono.exponents().begin(), mono.exponents().end());
    out.gamma = coeff;
    for (auto a : out.alpha)
        for (std::uint32_t k = 2; k <= a; ++k) out.gamma *= k;
    return out;
}

LinearExtraction linear_extraction(const Polynomial& f, std::size_t var) {
    const auto deg = degree_in(f, var);
    if (!deg || *deg < 1) throw PreconditionError("linear_extraction needs dependence on the chosen variable");
    const auto n = f.ambient();
    std::vector<std::uint32_t> lower(n, 0);
    lower[var - 1] = *deg - 1;
    const auto parts = expand_in_variable(apply_diff_multi(f, lower), var);
    const Polynomial& t1 = parts.at(1);

    LinearExtraction out{std::vector<std::uint32_t>(n, 0), t1.constant_term(), Polynomial(n), Polynomial(n)};
    if (!t1.is_constant()) {
        auto ce = constant_extraction(t1);
        out.beta = std::move(ce.alpha);
        out.lambda = ce.gamma;
    }
    out.beta[var - 1] = *deg - 1;
    out.result = apply_diff_multi(f, out.beta);
    out.g = out.result - Polynomial::variable(n, var) * out.lambda;
    return out;
}

Derivation flatten_in_variable(const Derivation& d, std::size_t s, unsigned target_deg) {
    if (target_deg != 1 && target_deg != 2) throw PreconditionError("target degree must be 1 or 2");
    check_var(s, d.ambient());
    const auto k = deriv_index(d);
    if (!k) throw PreconditionError("cannot flatten the zero derivation");
    const auto l = *degree_in(d.coeff(*k), s);
    if (l < target_deg) throw PreconditionError("coefficient degree is already below the target");
    const auto ds = Derivation::partial(d.ambient(), s);
    Derivation out = d;
    for (unsigned step = 0; step < l - target_deg; ++step) out = bracket(ds, out);
    return out;
}

StripResult strip_canonical_part(const Derivation& d, Subalgebra which) {
    const auto n = d.ambient();
    StripResult out{Derivation(n), Derivation(n)};
    for (std::size_t i = 1; i <= n; ++i) {
        Polynomial keep(n), take(n);
        for (const auto& [m, c] : d.coeff(i).terms())
            (monomial_allowed(m, i, which) ? take : keep).add_term(m, c);
        out.remainder.set_coeff(i, std::move(keep));
        out.stripped.set_coeff(i, std::move(take));
    }
    return out;
}

namespace {

// c with b = c * e, when it exists. e must be nonzero.
std::optional<Rational> proportionality(const Derivation& b, const Derivation& e) {
    for (std::size_t i = 1; i <= e.ambient(); ++i) {
        const auto& fe = e.coeff(i);
        if (fe.is_zero()) continue;
        const auto& [m, ce] = fe.leading_term();
        const Rational c = b.coeff(i).coefficient(m) / ce;
        if (b == e * c) return c;
        return std::nullopt;
    }
    return std::nullopt;
}

}  // namespace

std::optional<EigenvectorCertificate> eigenvector_certificate(const Derivation& d, const Derivation& e) {
    check_same_ambient(d.ambient(), e.ambient());
    if (e.is_zero()) throw PreconditionError("eigenvector candidate must be nonzero");
    if (auto c = proportionality(bracket(d, e), e); c && *c != 0)
        return EigenvectorCertificate{d, e, *c, EigenRelation::adD_E_eq_cE};
    if (auto c = proportionality(bracket(bracket(e, d), e), e); c && *c != 0)
        return EigenvectorCertificate{d, e, *c, EigenRelation::double_bracket_eq_cE};
    return std::nullopt;
}

std::variant<Sl2Certificate, Sl2Mismatch> sl2_check(const Derivation& t1, const Derivation& t2, const Derivation& t3,
                                                    std::size_t k) {
    const auto n = t1.ambient();
    check_same_ambient(n, t2.ambient());
    check_same_ambient(n, t3.ambient());
    check_var(k, n);
    const auto xk = Polynomial::variable(n, k);
    const Polynomial one(n, Rational(1));

    const std::array<std::pair<const Derivation*, Polynomial>, 3> shapes{{
        {&t1, one},
        {&t2, -(xk * xk)},
        {&t3, xk * Rational(-2)},
    }};
    const char* names[] = {"T1", "T2", "T3"};
    const char* expected[] = {"1", "-x_k^2", "-2 x_k"};
    for (std::size_t t = 0; t < 3; ++t) {
        const auto& [d, want] = shapes[t];
        for (std::size_t i = k + 1; i <= n; ++i)
            if (!d->coeff(i).is_zero())
                return Sl2Mismatch{std::string(names[t]) + " has a nonzero coefficient at index " + std::to_string(i) +
                                   " > k"};
        if (d->coeff(k) != want)
            return Sl2Mismatch{std::string(names[t]) + "'s k-th coefficient is not " + expected[t]};
    }

    std::array<Polynomial, 3> proj{bracket(t1, t2).coeff(k), bracket(t3, t1).coeff(k), bracket(t3, t2).coeff(k)};
    const std::array<Polynomial, 3> want{xk * Rational(-2), Polynomial(n, Rational(2)), xk * xk * Rational(2)};
    const char* labels[] = {"[T1,T2]", "[T3,T1]", "[T3,T2]"};
    for (std::size_t t = 0; t < 3; ++t)
        if (proj[t] != want[t]) return Sl2Mismatch{std::string(labels[t]) + " has the wrong d_k-component"};

    const std::vector<Derivation> line{Derivation::partial(n, k), Derivation::monomial_field(xk, k),
                                       Derivation::monomial_field(xk * xk, k)};
    auto series = derived_series(SpanBasis::coordinatize(n, line), default_max_iter(n), kernels::Exec::serial);
    if (series.outcome != SeriesOutcome::stabilized_nonzero)
        return Sl2Mismatch{"the d_k-line image does not stabilize at a nonzero term"};
    return Sl2Certificate{t1, t2, t3, k, std::move(proj), std::move(series)};
}

Sl2Triple case2_witness(const Derivation& d2, std::size_t k) {
    const auto n = d2.ambient();
    check_var(k, n);
    for (std::size_t i = k + 1; i <= n; ++i)
        if (!d2.coeff(i).is_zero()) throw PreconditionError("coefficients above index k must vanish");
    const auto xk = Polynomial::variable(n, k);
    if (d2.coeff(k) != xk * xk) throw PreconditionError("k-th coefficient must be exactly x_k^2");
    return {Derivation::partial(n, k), -d2, Derivation::monomial_field(xk * Rational(-2), k)};
}

namespace {

Derivation field(const Polynomial& f, std::size_t slot) { return Derivation::monomial_field(f, slot); }

std::string var_name(std::size_t i) { return "x" + std::to_string(i); }

}  // namespace

UnExtensionCertificate un_extension_certificate(const Derivation& d) {
    if (in_subalgebra(d, Subalgebra::un)) throw PreconditionError("derivation already lies in u_n");
    const auto n = d.ambient();
    std::vector<ReductionStep> steps{{"input", d}};

    // Lower the degree while staying outside u_n.
    Derivation cur = d;
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 1; i <= n; ++i) {
            auto b = bracket(Derivation::partial(n, i), cur);
            if (!in_subalgebra(b, Subalgebra::un)) {
                cur = std::move(b);
                steps.push_back({"[d" + std::to_string(i) + ", D]", cur});
                changed = true;
                break;
            }
        }
    }
    Derivation lin = strip_canonical_part(cur, Subalgebra::un).remainder;
    steps.push_back({"subtract u_n part", lin});
    const auto cls = linear_classify(lin);
    if (!cls || !cls->upper_triangular || lin.is_zero())
        throw std::logic_error("reduction did not reach an upper-triangular linear derivation");

    const auto& a = cls->linear.matrix;
    std::optional<Derivation> e;
    if (!cls->diagonal) {
        for (std::size_t i = 0; i < n && !e; ++i)
            for (std::size_t j = i + 1; j < n && !e; ++j)
                if (a[i][j] != 0) e = field(Polynomial::variable(n, i + 1), j + 1);
    } else if (!cls->euler_multiple) {
        for (std::size_t i = 0; i < n && !e; ++i)
            for (std::size_t j = i + 1; j < n && !e; ++j)
                if (a[i][i] != a[j][j]) e = field(Polynomial::variable(n, i + 1), j + 1);
    } else if (n >= 2) {
        const auto x1 = Polynomial::variable(n, 1);
        e = field(x1 * x1, 2);
    } else {
        e = Derivation::partial(n, 1);
    }
    auto cert = eigenvector_certificate(lin, *e);
    if (!cert) throw std::logic_error("no eigenvector certificate for the linear element");
    return {std::move(steps), std::move(lin), std::move(*cert)};
}

SnExtensionCertificate sn_extension_certificate(const Derivation& d) {
    if (in_subalgebra(d, Subalgebra::sn)) throw PreconditionError("derivation already lies in s_n");
    const auto n = d.ambient();
    std::vector<ReductionStep> steps{{"input", d}};

    auto finish = [&](const Derivation& normalized, std::size_t k) -> SnExtensionCertificate {
        const auto triple = case2_witness(normalized, k);
        auto res = sl2_check(triple.t1, triple.t2, triple.t3, k);
        if (auto* mm = std::get_if<Sl2Mismatch>(&res)) throw std::logic_error("sl2 check failed: " + mm->reason);
        return {std::move(steps), std::get<Sl2Certificate>(std::move(res))};
    };
    auto differentiate_to_constant = [&](const Derivation& d0, const Polynomial& lead) {
        if (lead.is_constant()) return d0;
        const auto ce = constant_extraction(lead);
        auto d1 = differentiate_coefficients(d0, ce.alpha);
        steps.push_back({"differentiate coefficients", d1});
        return d1;
    };

    Derivation cur = d;
    // Each pass either finishes or lowers the index of f_k by one.
    for (std::size_t pass = 0; pass <= n; ++pass) {
        Derivation r = strip_canonical_part(cur, Subalgebra::sn).remainder;
        steps.push_back({"subtract s_n part", r});
        const std::size_t k = *deriv_index(r);
        const std::size_t s = *poly_index(r.coeff(k));

        if (s == k) {
            auto d0 = flatten_in_variable(r, k, 2);
            steps.push_back({"flatten in " + var_name(k) + " to degree 2", d0});
            auto d1 = differentiate_to_constant(d0, expand_in_variable(d0.coeff(k), k).at(2));
            const Rational lambda = expand_in_variable(d1.coeff(k), k).at(2).constant_term();
            auto d2 = strip_canonical_part(d1, Subalgebra::sn).remainder * (Rational(1) / lambda);
            steps.push_back({"subtract s_n part and normalize", d2});
            return finish(d2, k);
        }

        auto d0 = flatten_in_variable(r, s, 1);
        steps.push_back({"flatten in " + var_name(s) + " to degree 1", d0});
        auto d1 = differentiate_to_constant(d0, expand_in_variable(d0.coeff(k), s).at(1));
        const Rational lambda = expand_in_variable(d1.coeff(k), s).at(1).constant_term();
        if (s - 1 > k) {
            cur = bracket(field(Polynomial::variable(n, s - 1), s), d1);
            steps.push_back({"[" + var_name(s - 1) + " d" + std::to_string(s) + ", D]", cur});
            continue;
        }
        const auto xs = Polynomial::variable(n, s);
        const auto xk = Polynomial::variable(n, k);
        auto d2 = bracket(field(xs * (Rational(1) / lambda), s), d1);
        steps.push_back({"[(1/lambda) " + var_name(s) + " d" + std::to_string(s) + ", D]", d2});
        auto e = bracket(field(xk * xk, k + 1), d2);
        steps.push_back({"[" + var_name(k) + "^2 d" + std::to_string(k + 1) + ", D]", e});
        auto r2 = strip_canonical_part(e, Subalgebra::sn).remainder;
        steps.push_back({"subtract s_n part", r2});
        return finish(r2, k);
    }
    throw std::logic_error("reduction did not terminate");
}

}  // namespace wn
