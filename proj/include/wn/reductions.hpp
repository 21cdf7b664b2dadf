#pragma once

// Constructive steps that push a polynomial or a derivation towards a
// normal form whose brackets are easy to read: extracting a nonzero
// constant or a linear polynomial by differentiation, lowering the degree
// in one variable with ad d_s, splitting off the part lying in u_n or s_n,
// and producing eigenvector and sl2 certificates.

#include "wn/canonical.hpp"

#include <string>
#include <variant>

namespace wn {

struct ConstantExtraction {
    std::vector<std::uint32_t> alpha;
    Rational gamma;  // d^alpha f
};

// alpha is the exponent of the grlex-greatest monomial of the top-degree
// component, so d^alpha f = coeff * prod alpha_i!. Throws on constants.
ConstantExtraction constant_extraction(const Polynomial& f);

struct LinearExtraction {
    std::vector<std::uint32_t> beta;
    Rational lambda;
    Polynomial g;       // free of x_i
    Polynomial result;  // d^beta f = lambda x_i + g
};

// Throws when f does not depend on x_var.
LinearExtraction linear_extraction(const Polynomial& f, std::size_t var);

// Applies ad d_s (l - target_deg) times, where D has index k and
// l = deg_{x_s} f_k, leaving f_k of degree exactly target_deg in x_s.
Derivation flatten_in_variable(const Derivation& d, std::size_t s, unsigned target_deg);

struct StripResult {
    Derivation remainder;
    Derivation stripped;  // lies in the chosen subalgebra
};

// Term-by-term split D = remainder + stripped.
StripResult strip_canonical_part(const Derivation& d, Subalgebra which);

// Single-bracket relation first, then the double bracket. Throws on E = 0.
std::optional<EigenvectorCertificate> eigenvector_certificate(const Derivation& d, const Derivation& e);

struct Sl2Mismatch {
    std::string reason;
};

std::variant<Sl2Certificate, Sl2Mismatch> sl2_check(const Derivation& t1, const Derivation& t2, const Derivation& t3,
                                                    std::size_t k);

struct Sl2Triple {
    Derivation t1;
    Derivation t2;
    Derivation t3;
};

// (d_k, -D2, -2 x_k d_k). D2 must have index <= k and d_k-coefficient
// exactly x_k^2.
Sl2Triple case2_witness(const Derivation& d2, std::size_t k);

// One labelled intermediate derivation of a reduction pipeline.
struct ReductionStep {
    std::string action;
    Derivation value;
};

struct UnExtensionCertificate {
    std::vector<ReductionStep> steps;
    Derivation linear;  // upper-triangular linear element reached
    EigenvectorCertificate certificate;
};

// For D outside u_n: brackets with partials and subtractions of u_n
// elements lead to a nonzero upper-triangular linear derivation, and then to
// an ad-eigenvector with nonzero eigenvalue. Every step stays in the
// subalgebra generated by u_n and D, so that subalgebra is not locally
// nilpotent. Throws PreconditionError when D lies in u_n.
UnExtensionCertificate un_extension_certificate(const Derivation& d);

struct SnExtensionCertificate {
    std::vector<ReductionStep> steps;
    Sl2Certificate certificate;
};

// For D outside s_n: brackets with s_n elements, differentiation of the
// coefficients and subtraction of s_n elements lead to an sl2 triple inside
// the subalgebra generated by s_n and D, so that subalgebra is not
// solvable. Throws PreconditionError when D lies in s_n.
SnExtensionCertificate sn_extension_certificate(const Derivation& d);

}  // namespace wn
