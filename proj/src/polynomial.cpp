#include "wn/polynomial.hpp"

#include "wn/errors.hpp"

#include <algorithm>
#include <numeric>

namespace wn {

void check_var(std::size_t var, std::size_t n) {
    if (var < 1 || var > n) throw IndexOutOfRange(var, n);
}

void check_same_ambient(std::size_t a, std::size_t b) {
    if (a != b) throw DimensionMismatch(a, b);
}

Monomial Monomial::variable(std::size_t n, std::size_t var) {
    check_var(var, n);
    Monomial m(n);
    m.exps_[var - 1] = 1;
    return m;
}

std::uint32_t Monomial::total_degree() const {
    return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::operator*(const Monomial& other) const {
    check_same_ambient(size(), other.size());
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
    return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
    const auto da = a.total_degree();
    const auto db = b.total_degree();
    if (da != db) return da > db;
    // Lexicographic with x1 most significant.
    const auto ea = a.exponents();
    const auto eb = b.exponents();
    return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

Polynomial::Polynomial(std::size_t n) : n_(n) {
    if (n == 0) throw PreconditionError("polynomial ring needs at least one variable");
}

Polynomial::Polynomial(std::size_t n, const Rational& constant) : Polynomial(n) {
    add_term(Monomial::one(n), constant);
}

Polynomial Polynomial::variable(std::size_t n, std::size_t var) {
    Polynomial p(n);
    p.add_term(Monomial::variable(n, var), Rational(1));
    return p;
}

Polynomial Polynomial::term(const Rational& coeff, Monomial m) {
    Polynomial p(m.size());
    p.add_term(m, coeff);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    check_same_ambient(n_, m.size());
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0);
}

Rational Polynomial::constant_term() const { return coefficient(Monomial::one(n_)); }

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::uint32_t> Polynomial::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.total_degree();
}

Polynomial Polynomial::top_component() const {
    Polynomial r(n_);
    if (terms_.empty()) return r;
    const auto d = terms_.begin()->first.total_degree();
    for (const auto& [m, c] : terms_) {
        if (m.total_degree() != d) break;
        r.terms_.emplace_hint(r.terms_.end(), m, c);
    }
    return r;
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
    if (terms_.empty()) throw PreconditionError("zero polynomial has no leading term");
    return *terms_.begin();
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_ambient(n_, other.n_);
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_ambient(n_, other.n_);
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [m, v] : r.terms_) v = -v;
    return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same_ambient(a.n_, b.n_);
    Polynomial r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial pow(const Polynomial& f, std::uint32_t e) {
    Polynomial r(f.ambient(), Rational(1));
    for (std::uint32_t i = 0; i < e; ++i) r = r * f;
    return r;
}

Polynomial partial(const Polynomial& f, std::size_t var) {
    check_var(var, f.ambient());
    Polynomial r(f.ambient());
    for (const auto& [m, c] : f.terms()) {
        const auto e = m.exponent(var);
        if (e == 0) continue;
        std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
        exps[var - 1] -= 1;
        r.add_term(Monomial(std::move(exps)), c * e);
    }
    return r;
}

Polynomial apply_diff_multi(const Polynomial& f, std::span<const std::uint32_t> alpha) {
    check_same_ambient(f.ambient(), alpha.size());
    Polynomial r(f.ambient());
    // Termwise: d^alpha x^m = prod m_i!/(m_i - a_i)! x^(m - alpha).
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
        Rational coeff = c;
        bool killed = false;
        for (std::size_t i = 0; i < exps.size() && !killed; ++i) {
            if (alpha[i] > exps[i]) {
                killed = true;
                break;
            }
            for (std::uint32_t k = 0; k < alpha[i]; ++k) coeff *= exps[i] - k;
            exps[i] -= alpha[i];
        }
        if (!killed) r.add_term(Monomial(std::move(exps)), coeff);
    }
    return r;
}

std::optional<std::uint32_t> degree_in(const Polynomial& f, std::size_t var) {
    check_var(var, f.ambient());
    if (f.is_zero()) return std::nullopt;
    std::uint32_t d = 0;
    for (const auto& [m, c] : f.terms()) d = std::max(d, m.exponent(var));
    return d;
}

std::optional<std::size_t> poly_index(const Polynomial& f) {
    std::optional<std::size_t> s;
    for (const auto& [m, c] : f.terms())
        for (std::size_t i = m.size(); i >= 1; --i)
            if (m.exponent(i) > 0) {
                if (!s || i > *s) s = i;
                break;
            }
    return s;
}

std::vector<Polynomial> expand_in_variable(const Polynomial& f, std::size_t var) {
    const auto deg = degree_in(f, var);
    if (!deg) return {};
    std::vector<Polynomial> out(*deg + 1, Polynomial(f.ambient()));
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::uint32_t> exps(m.exponents().begin(), m.exponents().end());
        const auto k = exps[var - 1];
        exps[var - 1] = 0;
        out[k].add_term(Monomial(std::move(exps)), c);
    }
    return out;
}

Polynomial assemble_in_variable(std::span<const Polynomial> coeffs, std::size_t n, std::size_t var) {
    check_var(var, n);
    Polynomial r(n);
    const auto x = Polynomial::variable(n, var);
    Polynomial power(n, Rational(1));
    for (const auto& h : coeffs) {
        r += h * power;
        power = power * x;
    }
    return r;
}

}  // namespace wn
