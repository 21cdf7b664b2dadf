#include "wn/span.hpp"

#include "wn/errors.hpp"

#include <set>

namespace wn {

using kernels::Exec;
using kernels::IndexPair;

SpanBasis SpanBasis::coordinatize(std::size_t n, std::span<const Derivation> gens) {
    SpanBasis b(n);
    for (const auto& g : gens) {
        check_same_ambient(n, g.ambient());
        b.echelon_.insert(to_vector(g));
    }
    b.refresh_basis();
    return b;
}

void SpanBasis::refresh_basis() {
    basis_.clear();
    for (const auto& row : echelon_.rows()) basis_.push_back(from_vector(row, n_));
}

std::vector<CoordKey> SpanBasis::coordinate_index() const {
    std::set<CoordKey, CoordKeyLess> keys;
    for (const auto& row : echelon_.rows())
        for (const auto& [k, c] : row) keys.insert(k);
    return {keys.begin(), keys.end()};
}

bool SpanBasis::contains(const Derivation& d) const {
    check_same_ambient(n_, d.ambient());
    return echelon_.contains(to_vector(d));
}

bool SpanBasis::contains(const SpanBasis& other) const {
    check_same_ambient(n_, other.n_);
    for (const auto& row : other.echelon_.rows())
        if (!echelon_.contains(row)) return false;
    return true;
}

std::vector<Rational> SpanBasis::coordinates(const Derivation& d) const {
    check_same_ambient(n_, d.ambient());
    return echelon_.coordinates(to_vector(d));
}

bool SpanBasis::insert(const Derivation& d) {
    check_same_ambient(n_, d.ambient());
    if (!echelon_.insert(to_vector(d))) return false;
    refresh_basis();
    return true;
}

LieClosureResult lie_closure(std::size_t n, std::span<const Derivation> gens, unsigned degree_cap,
                             std::size_t dim_cap, Exec exec) {
    if (degree_cap < 1 || dim_cap < 1) throw PreconditionError("closure caps must be >= 1");
    LieClosureResult res{ClosureStatus::closed, SpanBasis(n), {}, std::nullopt};
    EchelonBasis ech;
    for (const auto& g : gens) {
        check_same_ambient(n, g.ambient());
        if (ech.insert(to_vector(g))) res.elements.push_back(g);
    }
    auto finish = [&](ClosureStatus status) {
        res.status = status;
        res.basis = SpanBasis::coordinatize(n, res.elements);
        return res;
    };
    if (ech.dim() > dim_cap) return finish(ClosureStatus::dim_cap_exceeded);

    // Each round brackets the elements added in the previous round with
    // everything before them; the merge is sequential in pair order.
    std::size_t frontier = 0;
    while (frontier < res.elements.size()) {
        const std::size_t end = res.elements.size();
        std::vector<IndexPair> pairs;
        for (std::size_t j = frontier; j < end; ++j)
            for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
        const auto products = kernels::bracket_pairs(res.elements, pairs, exec);
        for (std::size_t k = 0; k < products.size(); ++k) {
            const auto& p = products[k];
            if (auto deg = p.max_degree(); deg && *deg > degree_cap) {
                res.offending_bracket = pairs[k];
                return finish(ClosureStatus::degree_cap_exceeded);
            }
            if (!ech.insert(to_vector(p))) continue;
            res.elements.push_back(p);
            if (ech.dim() > dim_cap) {
                res.offending_bracket = pairs[k];
                return finish(ClosureStatus::dim_cap_exceeded);
            }
        }
        frontier = end;
    }
    return finish(ClosureStatus::closed);
}

bool is_bracket_closed(const SpanBasis& b, Exec exec) {
    const auto pairs = kernels::upper_pairs(b.dim());
    const auto products = kernels::bracket_pairs(b.basis(), pairs, exec);
    for (const auto& p : products)
        if (!b.contains(p)) return false;
    return true;
}

namespace {

DerivedSeriesReport run_series(const SpanBasis& b, unsigned max_iter, Exec exec, SeriesKind kind) {
    if (!is_bracket_closed(b, exec)) throw PreconditionError("span is not closed under the bracket");
    DerivedSeriesReport rep;
    rep.kind = kind;
    rep.dims.push_back(b.dim());
    rep.terms.push_back(b);
    if (b.dim() == 0) {
        rep.outcome = SeriesOutcome::reaches_zero;
        rep.step = 0;
        return rep;
    }
    for (unsigned step = 1; step <= max_iter; ++step) {
        const SpanBasis& cur = rep.terms.back();
        std::vector<Derivation> products;
        if (kind == SeriesKind::derived) {
            products = kernels::bracket_pairs(cur.basis(), kernels::upper_pairs(cur.dim()), exec);
        } else {
            std::vector<IndexPair> pairs;
            for (std::size_t i = 0; i < b.dim(); ++i)
                for (std::size_t j = 0; j < cur.dim(); ++j) pairs.emplace_back(i, j);
            products = kernels::bracket_cross(b.basis(), cur.basis(), pairs, exec);
        }
        SpanBasis next = SpanBasis::coordinatize(b.ambient(), products);
        const bool same = next == cur;
        rep.dims.push_back(next.dim());
        rep.terms.push_back(std::move(next));
        if (rep.dims.back() == 0) {
            rep.outcome = SeriesOutcome::reaches_zero;
            rep.step = step;
            return rep;
        }
        if (same) {
            rep.outcome = SeriesOutcome::stabilized_nonzero;
            rep.step = step;
            return rep;
        }
    }
    rep.outcome = SeriesOutcome::cap_hit;
    rep.step = max_iter;
    return rep;
}

}  // namespace

DerivedSeriesReport derived_series(const SpanBasis& b, unsigned max_iter, Exec exec) {
    return run_series(b, max_iter, exec, SeriesKind::derived);
}

DerivedSeriesReport lower_central_series(const SpanBasis& b, unsigned max_iter, Exec exec) {
    return run_series(b, max_iter, exec, SeriesKind::lower_central);
}

AdNilpotency ad_nilpotent(const Derivation& d, const SpanBasis& b, unsigned bound) {
    check_same_ambient(d.ambient(), b.ambient());
    const auto dim = b.dim();
    AdNilpotency out;
    out.matrix.assign(dim, std::vector<Rational>(dim, Rational(0)));
    const auto images = kernels::adjoint_images(d, b.basis());
    for (std::size_t j = 0; j < dim; ++j) {
        if (!b.contains(images[j])) throw PreconditionError("derivation does not normalize the span");
        const auto coords = b.coordinates(images[j]);
        for (std::size_t i = 0; i < dim; ++i) out.matrix[i][j] = coords[i];
    }
    RationalMatrix power = out.matrix;
    for (unsigned k = 1; k <= bound; ++k) {
        if (is_zero_matrix(power)) {
            out.nilpotent = true;
            out.step = k;
            return out;
        }
        power = matrix_multiply(out.matrix, power);
    }
    out.step = bound;
    return out;
}

}  // namespace wn
