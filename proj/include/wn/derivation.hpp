#pragma once

#include "wn/polynomial.hpp"

#include <optional>
#include <vector>

namespace wn {

// D = f_1 d_1 + ... + f_n d_n, stored as its values D(x_i) = f_i.
class Derivation {
public:
    explicit Derivation(std::size_t n);
    explicit Derivation(std::vector<Polynomial> coeffs);

    static Derivation zero(std::size_t n) { return Derivation(n); }
    // The partial derivative d_var.
    static Derivation partial(std::size_t n, std::size_t var);
    // f * d_var.
    static Derivation monomial_field(const Polynomial& f, std::size_t var);
    // Euler field x_1 d_1 + ... + x_n d_n.
    static Derivation euler(std::size_t n);

    std::size_t ambient() const { return coeffs_.size(); }
    const std::vector<Polynomial>& coeffs() const { return coeffs_; }
    // 1-based: coefficient of d_var.
    const Polynomial& coeff(std::size_t var) const;
    void set_coeff(std::size_t var, Polynomial f);
    bool is_zero() const;
    // Largest total degree of any coefficient; nullopt for the zero field.
    std::optional<std::uint32_t> max_degree() const;

    Derivation& operator+=(const Derivation& other);
    Derivation& operator-=(const Derivation& other);
    Derivation& operator*=(const Rational& c);
    Derivation operator-() const;

    friend Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
    friend Derivation operator-(Derivation a, const Derivation& b) { return a -= b; }
    friend Derivation operator*(Derivation a, const Rational& c) { return a *= c; }
    friend Derivation operator*(const Rational& c, Derivation a) { return a *= c; }
    // p * D scales every coefficient by the polynomial p.
    friend Derivation operator*(const Polynomial& p, const Derivation& d);
    friend bool operator==(const Derivation&, const Derivation&) = default;

private:
    std::vector<Polynomial> coeffs_;
};

// D(f) = sum f_i df/dx_i.
Polynomial apply(const Derivation& d, const Polynomial& f);

// [D1, D2] computed from its values on the variables:
// [D1, D2](x_i) = D1(D2(x_i)) - D2(D1(x_i)).
Derivation bracket(const Derivation& d1, const Derivation& d2);

// [D1^k, D2] = [D1, [D1, ... [D1, D2]...]] with k >= 1 brackets.
Derivation iterated_bracket(const Derivation& d1, unsigned k, const Derivation& d2);

// Largest k with f_k != 0; nullopt for the zero field.
std::optional<std::size_t> deriv_index(const Derivation& d);

// Applies d_1^b1 ... d_n^bn to every coefficient. Equivalent to iterated
// brackets with the partials, so the result stays in any subalgebra that
// contains d_1..d_n.
Derivation differentiate_coefficients(const Derivation& d, std::span<const std::uint32_t> beta);

using RationalMatrix = std::vector<std::vector<Rational>>;

// Row i holds the coefficients of f_i: D(x_i) = sum_j matrix[i][j] x_j.
struct LinearDerivation {
    std::size_t n = 0;
    RationalMatrix matrix;

    Derivation to_derivation() const;
};

struct LinearClassification {
    LinearDerivation linear;
    bool upper_triangular = false;
    bool diagonal = false;
    // Set when matrix = mu * identity.
    std::optional<Rational> euler_multiple;
};

// nullopt when some coefficient is not homogeneous linear (constant terms
// and higher degrees both disqualify).
std::optional<LinearClassification> linear_classify(const Derivation& d);

RationalMatrix matrix_multiply(const RationalMatrix& a, const RationalMatrix& b);
bool is_zero_matrix(const RationalMatrix& a);

}  // namespace wn
