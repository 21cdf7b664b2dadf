#include "wn/derivation.hpp"

#include "wn/errors.hpp"

#include <algorithm>

namespace wn {

Derivation::Derivation(std::size_t n) : coeffs_(n, Polynomial(n)) {
    if (n == 0) throw PreconditionError("derivation needs at least one variable");
}

Derivation::Derivation(std::vector<Polynomial> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw PreconditionError("derivation needs at least one variable");
    for (const auto& f : coeffs_) check_same_ambient(coeffs_.size(), f.ambient());
}

Derivation Derivation::partial(std::size_t n, std::size_t var) {
    return monomial_field(Polynomial(n, Rational(1)), var);
}

Derivation Derivation::monomial_field(const Polynomial& f, std::size_t var) {
    Derivation d(f.ambient());
    d.set_coeff(var, f);
    return d;
}

Derivation Derivation::euler(std::size_t n) {
    Derivation d(n);
    for (std::size_t i = 1; i <= n; ++i) d.set_coeff(i, Polynomial::variable(n, i));
    return d;
}

const Polynomial& Derivation::coeff(std::size_t var) const {
    check_var(var, ambient());
    return coeffs_[var - 1];
}

void Derivation::set_coeff(std::size_t var, Polynomial f) {
    check_var(var, ambient());
    check_same_ambient(ambient(), f.ambient());
    coeffs_[var - 1] = std::move(f);
}

bool Derivation::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& f) { return f.is_zero(); });
}

std::optional<std::uint32_t> Derivation::max_degree() const {
    std::optional<std::uint32_t> d;
    for (const auto& f : coeffs_)
        if (auto fd = f.total_degree(); fd && (!d || *fd > *d)) d = fd;
    return d;
}

Derivation& Derivation::operator+=(const Derivation& other) {
    check_same_ambient(ambient(), other.ambient());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Derivation& Derivation::operator-=(const Derivation& other) {
    check_same_ambient(ambient(), other.ambient());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
    for (auto& f : coeffs_) f *= c;
    return *this;
}

Derivation Derivation::operator-() const {
    Derivation r(*this);
    for (auto& f : r.coeffs_) f = -f;
    return r;
}

Derivation operator*(const Polynomial& p, const Derivation& d) {
    check_same_ambient(p.ambient(), d.ambient());
    Derivation r(d.ambient());
    for (std::size_t i = 0; i < d.coeffs_.size(); ++i) r.coeffs_[i] = p * d.coeffs_[i];
    return r;
}

Polynomial apply(const Derivation& d, const Polynomial& f) {
    check_same_ambient(d.ambient(), f.ambient());
    Polynomial r(f.ambient());
    for (std::size_t i = 1; i <= d.ambient(); ++i) {
        const auto& fi = d.coeff(i);
        if (fi.is_zero()) continue;
        r += fi * partial(f, i);
    }
    return r;
}

Derivation bracket(const Derivation& d1, const Derivation& d2) {
    check_same_ambient(d1.ambient(), d2.ambient());
    const auto n = d1.ambient();
    std::vector<Polynomial> out;
    out.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) out.push_back(apply(d1, d2.coeff(i)) - apply(d2, d1.coeff(i)));
    return Derivation(std::move(out));
}

Derivation iterated_bracket(const Derivation& d1, unsigned k, const Derivation& d2) {
    if (k == 0) throw PreconditionError("iterated bracket needs k >= 1");
    Derivation r = bracket(d1, d2);
    for (unsigned step = 1; step < k; ++step) r = bracket(d1, r);
    return r;
}

std::optional<std::size_t> deriv_index(const Derivation& d) {
    for (std::size_t i = d.ambient(); i >= 1; --i)
        if (!d.coeff(i).is_zero()) return i;
    return std::nullopt;
}

Derivation differentiate_coefficients(const Derivation& d, std::span<const std::uint32_t> beta) {
    check_same_ambient(d.ambient(), beta.size());
    std::vector<Polynomial> out;
    out.reserve(d.ambient());
    for (const auto& f : d.coeffs()) out.push_back(apply_diff_multi(f, beta));
    return Derivation(std::move(out));
}

Derivation LinearDerivation::to_derivation() const {
    Derivation d(n);
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial f(n);
        for (std::size_t j = 0; j < n; ++j) f.add_term(Monomial::variable(n, j + 1), matrix[i][j]);
        d.set_coeff(i + 1, std::move(f));
    }
    return d;
}

std::optional<LinearClassification> linear_classify(const Derivation& d) {
    const auto n = d.ambient();
    LinearClassification out;
    out.linear.n = n;
    out.linear.matrix.assign(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& [m, c] : d.coeffs()[i].terms()) {
            if (m.total_degree() != 1) return std::nullopt;
            for (std::size_t j = 0; j < n; ++j)
                if (m[j] == 1) out.linear.matrix[i][j] = c;
        }
    const auto& a = out.linear.matrix;
    out.upper_triangular = true;
    out.diagonal = true;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j] == 0) continue;
            if (i > j) out.upper_triangular = false;
            if (i != j) out.diagonal = false;
        }
    if (out.diagonal) {
        bool scalar = true;
        for (std::size_t i = 1; i < n; ++i) scalar = scalar && a[i][i] == a[0][0];
        if (scalar) out.euler_multiple = a[0][0];
    }
    return out;
}

RationalMatrix matrix_multiply(const RationalMatrix& a, const RationalMatrix& b) {
    const auto rows = a.size();
    const auto inner = b.size();
    const auto cols = inner == 0 ? 0 : b[0].size();
    RationalMatrix r(rows, std::vector<Rational>(cols, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

bool is_zero_matrix(const RationalMatrix& a) {
    for (const auto& row : a)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace wn
