#pragma once

// Finite-dimensional spans of derivations: coordinatization, Lie closure,
// derived and lower central series, and adjoint nilpotency.

#include "wn/echelon.hpp"
#include "wn/kernels.hpp"

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace wn {

inline constexpr unsigned kDefaultDegreeCap = 12;
inline constexpr std::size_t kDefaultDimCap = 512;
inline unsigned default_max_iter(std::size_t n) { return static_cast<unsigned>(2 * n + 4); }

class SpanBasis {
public:
    explicit SpanBasis(std::size_t n) : n_(n) {}

    static SpanBasis coordinatize(std::size_t n, std::span<const Derivation> gens);

    std::size_t ambient() const { return n_; }
    std::size_t dim() const { return echelon_.dim(); }
    // Reduced basis in pivot order.
    const std::vector<Derivation>& basis() const { return basis_; }
    // Sorted (slot, monomial) pairs covering the support of the basis.
    std::vector<CoordKey> coordinate_index() const;

    bool contains(const Derivation& d) const;
    bool contains(const SpanBasis& other) const;
    // Coordinates of d with respect to basis(); throws when d is outside.
    std::vector<Rational> coordinates(const Derivation& d) const;
    // Adds d; returns true when the dimension grew.
    bool insert(const Derivation& d);

    const EchelonBasis& echelon() const { return echelon_; }

    friend bool operator==(const SpanBasis& a, const SpanBasis& b) {
        return a.n_ == b.n_ && a.echelon_ == b.echelon_;
    }

private:
    void refresh_basis();

    std::size_t n_;
    EchelonBasis echelon_;
    std::vector<Derivation> basis_;
};

enum class ClosureStatus { closed, degree_cap_exceeded, dim_cap_exceeded };

struct LieClosureResult {
    ClosureStatus status = ClosureStatus::closed;
    SpanBasis basis;
    // Spanning elements in the order they were produced: the independent
    // generators first, then each new bracket.
    std::vector<Derivation> elements;
    // Indices into `elements` of the bracket that broke a cap.
    std::optional<std::pair<std::size_t, std::size_t>> offending_bracket;
};

LieClosureResult lie_closure(std::size_t n, std::span<const Derivation> gens, unsigned degree_cap = kDefaultDegreeCap,
                             std::size_t dim_cap = kDefaultDimCap, kernels::Exec exec = kernels::Exec::parallel);

// True when every pairwise bracket of basis elements lies in the span.
bool is_bracket_closed(const SpanBasis& b, kernels::Exec exec = kernels::Exec::parallel);

enum class SeriesKind { derived, lower_central };
enum class SeriesOutcome { reaches_zero, stabilized_nonzero, cap_hit };

struct DerivedSeriesReport {
    SeriesKind kind = SeriesKind::derived;
    std::vector<std::size_t> dims;
    SeriesOutcome outcome = SeriesOutcome::cap_hit;
    // reaches_zero: index of the first zero term (derived length or
    // nilpotency class). stabilized_nonzero: index of the first term equal
    // to its predecessor. cap_hit: number of steps taken.
    std::size_t step = 0;
    std::vector<SpanBasis> terms;

    bool solvable() const { return kind == SeriesKind::derived && outcome == SeriesOutcome::reaches_zero; }
    bool nilpotent() const { return kind == SeriesKind::lower_central && outcome == SeriesOutcome::reaches_zero; }
};

// L^(0) = L, L^(m+1) = [L^(m), L^(m)]. Throws PreconditionError when b is
// not bracket-closed.
DerivedSeriesReport derived_series(const SpanBasis& b, unsigned max_iter, kernels::Exec exec = kernels::Exec::parallel);

// L_0 = L, L_(m+1) = [L, L_m].
DerivedSeriesReport lower_central_series(const SpanBasis& b, unsigned max_iter,
                                         kernels::Exec exec = kernels::Exec::parallel);

struct AdNilpotency {
    bool nilpotent = false;
    // First k with (ad D)^k = 0 on the span; equals the bound when not
    // nilpotent.
    unsigned step = 0;
    RationalMatrix matrix;  // column j = coordinates of [D, basis_j]
};

// Throws PreconditionError when [D, b] is not contained in b.
AdNilpotency ad_nilpotent(const Derivation& d, const SpanBasis& b, unsigned bound);

}  // namespace wn
