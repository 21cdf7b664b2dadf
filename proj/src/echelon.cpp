#include "wn/echelon.hpp"

#include "wn/errors.hpp"

namespace wn {

namespace {

// v -= c * row
void axpy(SparseVector& v, const Rational& c, const SparseVector& row) {
    for (const auto& [k, x] : row) {
        auto [it, inserted] = v.try_emplace(k, -c * x);
        if (!inserted) {
            it->second -= c * x;
            if (it->second == 0) v.erase(it);
        }
    }
}

}  // namespace

SparseVector to_vector(const Derivation& d) {
    SparseVector v;
    for (std::size_t i = 1; i <= d.ambient(); ++i)
        for (const auto& [m, c] : d.coeff(i).terms()) v.emplace(CoordKey{i, m}, c);
    return v;
}

Derivation from_vector(const SparseVector& v, std::size_t n) {
    std::vector<Polynomial> coeffs(n, Polynomial(n));
    for (const auto& [k, c] : v) {
        check_var(k.var, n);
        coeffs[k.var - 1].add_term(k.monomial, c);
    }
    return Derivation(std::move(coeffs));
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
    for (const auto& [pivot, row] : rows_) {
        auto it = v.find(pivot);
        if (it == v.end()) continue;
        const Rational c = it->second;
        axpy(v, c, row);
    }
    return v;
}

bool EchelonBasis::insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    const CoordKey pivot = r.begin()->first;
    const Rational lead = r.begin()->second;
    if (lead != 1)
        for (auto& [k, x] : r) x /= lead;
    for (auto& [p, row] : rows_) {
        auto it = row.find(pivot);
        if (it == row.end()) continue;
        const Rational c = it->second;
        axpy(row, c, r);
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<Rational> EchelonBasis::coordinates(const SparseVector& v) const {
    if (!contains(v)) throw PreconditionError("vector is not in the span");
    std::vector<Rational> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) {
        auto it = v.find(pivot);
        out.push_back(it == v.end() ? Rational(0) : it->second);
    }
    return out;
}

std::vector<SparseVector> EchelonBasis::rows() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [pivot, row] : rows_) out.push_back(row);
    return out;
}

}  // namespace wn
