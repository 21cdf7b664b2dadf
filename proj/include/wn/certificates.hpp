#pragma once

#include "wn/derivation.hpp"
#include "wn/span.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace wn {

enum class EigenRelation {
    adD_E_eq_cE,          // [D, E] = c E
    double_bracket_eq_cE  // [[E, D], E] = c E
};

// An exact ad-eigenvector relation with nonzero scalar. Either form shows an
// adjoint operator with a nonzero eigenvalue on E, so no span containing D
// and E is a nilpotent Lie algebra.
struct EigenvectorCertificate {
    Derivation d;
    Derivation e;
    Rational scalar;
    EigenRelation relation = EigenRelation::adD_E_eq_cE;

    // Recomputes the relation from the stored fields.
    bool verify() const;
};

// The per-variable orbits x_i, D(x_i), D^2(x_i), ..., 0.
struct NilpotencyWitness {
    std::vector<std::vector<Polynomial>> chains;
    // lengths[i] = number of applications of D that kill x_(i+1).
    std::vector<unsigned> lengths;

    bool verify(const Derivation& d) const;
};

// For linear D with matrix A, D^m(x_i) = sum_j (A^m)_ij x_j, so A^n != 0
// means D^m(x_i) != 0 for all m and some i: D is not locally nilpotent.
struct LinearNonNilpotency {
    RationalMatrix matrix;
    RationalMatrix power;  // matrix^n
    std::size_t row = 0;   // a nonzero entry of power (0-based)
    std::size_t col = 0;
    std::optional<EigenvectorCertificate> eigen;
};

// Three derivations whose d_k-components mirror d_k, -x_k^2 d_k, -2 x_k d_k.
struct Sl2Certificate {
    Derivation t1;
    Derivation t2;
    Derivation t3;
    std::size_t k = 1;
    // d_k-components of [T1,T2], [T3,T1], [T3,T2].
    std::array<Polynomial, 3> projection_brackets;
    DerivedSeriesReport series_report;
};

}  // namespace wn
