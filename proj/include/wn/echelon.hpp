#pragma once

// Exact sparse row reduction over Q for derivations viewed as coordinate
// vectors indexed by (slot, monomial).

#include "wn/derivation.hpp"

#include <map>
#include <vector>

namespace wn {

struct CoordKey {
    std::size_t var;  // 1-based slot: the d_var coefficient
    Monomial monomial;

    friend bool operator==(const CoordKey&, const CoordKey&) = default;
};

// Slot ascending, then graded-lex greatest monomial first. The first key of
// a nonzero vector under this order is its pivot.
struct CoordKeyLess {
    bool operator()(const CoordKey& a, const CoordKey& b) const {
        if (a.var != b.var) return a.var < b.var;
        return GrlexGreater{}(a.monomial, b.monomial);
    }
};

using SparseVector = std::map<CoordKey, Rational, CoordKeyLess>;

SparseVector to_vector(const Derivation& d);
Derivation from_vector(const SparseVector& v, std::size_t n);

// Reduced row echelon form maintained incrementally: every row has pivot
// entry 1 and zeros in all other rows' pivot columns, so the basis of a
// span is unique regardless of insertion order.
class EchelonBasis {
public:
    std::size_t dim() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    // v minus its projection onto the pivot columns.
    SparseVector reduce(SparseVector v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    // Returns true when v was independent and the dimension grew.
    bool insert(const SparseVector& v);

    // Coordinates of v in the row basis (row order). Requires v in the span.
    std::vector<Rational> coordinates(const SparseVector& v) const;

    // Rows in pivot order.
    std::vector<SparseVector> rows() const;

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) { return a.rows_ == b.rows_; }

private:
    std::map<CoordKey, SparseVector, CoordKeyLess> rows_;  // pivot -> row
};

}  // namespace wn
