#pragma once

// Sparse multivariate polynomials over Q in a fixed number of variables.
//
// Variable indices in the public API are 1-based (x1..xn). Terms are kept
// in graded lexicographic order with x1 > x2 > ... > xn, greatest first.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

namespace wn {

using Rational = mpq_class;

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t n) : exps_(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    static Monomial one(std::size_t n) { return Monomial(n); }
    static Monomial variable(std::size_t n, std::size_t var);  // var is 1-based

    std::size_t size() const { return exps_.size(); }
    std::uint32_t operator[](std::size_t pos) const { return exps_[pos]; }  // 0-based
    std::uint32_t exponent(std::size_t var) const { return exps_[var - 1]; }  // 1-based
    std::span<const std::uint32_t> exponents() const { return exps_; }
    std::uint32_t total_degree() const;

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    friend class Polynomial;
    std::vector<std::uint32_t> exps_;
};

// Strict "greater first" graded-lex ordering; used as the map comparator so
// that iteration runs from the leading term down.
struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, GrlexGreater>;

    explicit Polynomial(std::size_t n);
    Polynomial(std::size_t n, const Rational& constant);

    static Polynomial zero(std::size_t n) { return Polynomial(n); }
    static Polynomial constant(std::size_t n, const Rational& c) { return Polynomial(n, c); }
    static Polynomial variable(std::size_t n, std::size_t var);
    static Polynomial term(const Rational& coeff, Monomial m);

    std::size_t ambient() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Constant term (zero when absent).
    Rational constant_term() const;
    Rational coefficient(const Monomial& m) const;

    // Total degree; nullopt for the zero polynomial.
    std::optional<std::uint32_t> total_degree() const;
    // Sum of the terms of maximal total degree.
    Polynomial top_component() const;
    // Leading term in grlex order; requires nonzero.
    const std::pair<const Monomial, Rational>& leading_term() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    // Adds c*m, dropping the term if the coefficient cancels.
    void add_term(const Monomial& m, const Rational& c);

private:
    std::size_t n_;
    TermMap terms_;
};

Polynomial pow(const Polynomial& f, std::uint32_t e);

Polynomial partial(const Polynomial& f, std::size_t var);

// Iterated partial derivative d1^a1 ... dn^an (f).
Polynomial apply_diff_multi(const Polynomial& f, std::span<const std::uint32_t> alpha);

// Max exponent of x_var; nullopt marks the zero polynomial.
std::optional<std::uint32_t> degree_in(const Polynomial& f, std::size_t var);

// Largest s with df/dx_s != 0; nullopt for constants.
std::optional<std::size_t> poly_index(const Polynomial& f);

// Coefficients h_0..h_t with f = sum h_k x_var^k and t = degree_in(f, var).
// The zero polynomial expands to the empty sequence.
std::vector<Polynomial> expand_in_variable(const Polynomial& f, std::size_t var);

// Inverse of expand_in_variable.
Polynomial assemble_in_variable(std::span<const Polynomial> coeffs, std::size_t n, std::size_t var);

void check_var(std::size_t var, std::size_t n);
void check_same_ambient(std::size_t a, std::size_t b);

}  // namespace wn
