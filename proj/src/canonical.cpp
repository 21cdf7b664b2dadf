#include "wn/canonical.hpp"

#include "wn/errors.hpp"
#include "wn/reductions.hpp"

#include <algorithm>
#include <functional>

namespace wn {

const char* to_string(Violation v) {
    switch (v) {
        case Violation::depends_on_xj_with_j_gt_i: return "depends_on_xj_with_j_gt_i";
        case Violation::xi_degree_exceeds_1: return "xi_degree_exceeds_1";
        case Violation::xi_degree_exceeds_0_for_un: return "xi_degree_exceeds_0_for_un";
    }
    return "?";
}

const char* to_string(Subalgebra s) { return s == Subalgebra::un ? "un" : "sn"; }

bool monomial_allowed(const Monomial& m, std::size_t slot, Subalgebra which) {
    for (std::size_t j = slot + 1; j <= m.size(); ++j)
        if (m.exponent(j) > 0) return false;
    const auto own = m.exponent(slot);
    return which == Subalgebra::un ? own == 0 : own <= 1;
}

MembershipVerdict membership(const Derivation& d) {
    MembershipVerdict out;
    for (std::size_t i = 1; i <= d.ambient(); ++i) {
        bool later = false, over1 = false, over0 = false;
        for (const auto& [m, c] : d.coeff(i).terms()) {
            for (std::size_t j = i + 1; j <= d.ambient(); ++j) later = later || m.exponent(j) > 0;
            over1 = over1 || m.exponent(i) >= 2;
            over0 = over0 || m.exponent(i) >= 1;
        }
        if (later) out.violations.emplace_back(i, Violation::depends_on_xj_with_j_gt_i);
        if (over1) out.violations.emplace_back(i, Violation::xi_degree_exceeds_1);
        if (over0) out.violations.emplace_back(i, Violation::xi_degree_exceeds_0_for_un);
    }
    out.in_un = out.violations.empty();
    out.in_sn = std::none_of(out.violations.begin(), out.violations.end(),
                             [](const auto& v) { return v.second != Violation::xi_degree_exceeds_0_for_un; });
    return out;
}

bool in_subalgebra(const Derivation& d, Subalgebra which) {
    const auto v = membership(d);
    return which == Subalgebra::un ? v.in_un : v.in_sn;
}

namespace {

// All exponent vectors on the first `vars` variables of total degree <= cap.
void enumerate(std::size_t n, std::size_t vars, unsigned cap, std::vector<std::uint32_t>& cur, std::size_t pos,
               unsigned used, std::vector<Monomial>& out) {
    if (pos == vars) {
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = 0; used + e <= cap; ++e) {
        cur[pos] = e;
        enumerate(n, vars, cap, cur, pos + 1, used + e, out);
    }
    cur[pos] = 0;
}

bool degree_then_grlex(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return GrlexGreater{}(a, b);
}

}  // namespace

std::vector<Derivation> generators(Subalgebra which, std::size_t n, unsigned degree_cap) {
    if (n == 0) throw PreconditionError("n must be >= 1");
    std::vector<Derivation> out;
    for (std::size_t slot = 1; slot <= n; ++slot) {
        std::vector<Monomial> monos;
        std::vector<std::uint32_t> cur(n, 0);
        enumerate(n, slot - 1, degree_cap, cur, 0, 0, monos);
        if (which == Subalgebra::sn) {
            const std::size_t base = monos.size();
            for (std::size_t k = 0; k < base; ++k) {
                if (monos[k].total_degree() + 1 > degree_cap) continue;
                monos.push_back(monos[k] * Monomial::variable(n, slot));
            }
        }
        std::sort(monos.begin(), monos.end(), degree_then_grlex);
        for (const auto& m : monos)
            out.push_back(Derivation::monomial_field(Polynomial::term(Rational(1), m), slot));
    }
    return out;
}

bool NilpotencyWitness::verify(const Derivation& d) const {
    if (chains.size() != d.ambient() || lengths.size() != d.ambient()) return false;
    for (std::size_t i = 0; i < chains.size(); ++i) {
        const auto& ch = chains[i];
        if (ch.size() != lengths[i] + 1 || ch.front() != Polynomial::variable(d.ambient(), i + 1)) return false;
        if (!ch.back().is_zero()) return false;
        for (std::size_t k = 0; k + 1 < ch.size(); ++k) {
            if (ch[k].is_zero() || apply(d, ch[k]) != ch[k + 1]) return false;
        }
    }
    return true;
}

bool EigenvectorCertificate::verify() const {
    if (scalar == 0 || e.is_zero()) return false;
    const Derivation lhs = relation == EigenRelation::adD_E_eq_cE ? bracket(d, e) : bracket(bracket(e, d), e);
    return lhs == e * scalar;
}

namespace {

std::optional<EigenvectorCertificate> search_monomial_eigenvector(const Derivation& d) {
    const auto n = d.ambient();
    for (int deg = 2; deg >= 0; --deg) {
        std::vector<Monomial> monos;
        std::vector<std::uint32_t> cur(n, 0);
        enumerate(n, n, static_cast<unsigned>(deg), cur, 0, 0, monos);
        std::erase_if(monos, [&](const Monomial& m) { return m.total_degree() != static_cast<unsigned>(deg); });
        std::sort(monos.begin(), monos.end(), GrlexGreater{});
        for (std::size_t slot = 1; slot <= n; ++slot)
            for (const auto& m : monos) {
                auto cert = eigenvector_certificate(d, Derivation::monomial_field(Polynomial::term(Rational(1), m), slot));
                if (cert) return cert;
            }
    }
    return std::nullopt;
}

}  // namespace

LndResult lnd_check(const Derivation& d, unsigned bound) {
    if (bound < 1) throw PreconditionError("lnd bound must be >= 1");
    const auto n = d.ambient();
    LndResult out;
    out.bound = bound;
    NilpotencyWitness w;
    bool all_terminate = true;
    for (std::size_t i = 1; i <= n && all_terminate; ++i) {
        std::vector<Polynomial> chain{Polynomial::variable(n, i)};
        unsigned len = 0;
        for (unsigned step = 1; step <= bound; ++step) {
            chain.push_back(apply(d, chain.back()));
            if (chain.back().is_zero()) {
                len = step;
                break;
            }
        }
        if (len == 0) {
            all_terminate = false;
            break;
        }
        w.chains.push_back(std::move(chain));
        w.lengths.push_back(len);
    }
    if (all_terminate) {
        out.verdict = LndVerdict::witness;
        out.witness = std::move(w);
        return out;
    }
    if (auto lin = linear_classify(d)) {
        const auto& a = lin->linear.matrix;
        RationalMatrix p = a;
        for (std::size_t k = 1; k < n; ++k) p = matrix_multiply(a, p);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (p[r][c] != 0) {
                    out.verdict = LndVerdict::not_nilpotent;
                    out.certificate = LinearNonNilpotency{a, p, r, c, search_monomial_eigenvector(d)};
                    return out;
                }
    }
    out.verdict = LndVerdict::inconclusive;
    return out;
}

BracketExpression BracketExpression::leaf(std::size_t generator) {
    BracketExpression e;
    e.node_ = std::make_shared<const Node>(Node{generator, nullptr, nullptr});
    return e;
}

BracketExpression BracketExpression::node(BracketExpression lhs, BracketExpression rhs) {
    BracketExpression e;
    e.node_ = std::make_shared<const Node>(Node{0, std::make_shared<const BracketExpression>(std::move(lhs)),
                                                std::make_shared<const BracketExpression>(std::move(rhs))});
    return e;
}

unsigned BracketExpression::depth() const {
    return is_leaf() ? 0 : 1 + std::max(lhs().depth(), rhs().depth());
}

Derivation BracketExpression::evaluate(std::span<const Derivation> gens) const {
    if (is_leaf()) {
        if (generator() >= gens.size()) throw std::out_of_range("generator reference out of range");
        return gens[generator()];
    }
    return bracket(lhs().evaluate(gens), rhs().evaluate(gens));
}

std::string BracketExpression::to_string() const {
    if (is_leaf()) return "g" + std::to_string(generator() + 1);
    return "[" + lhs().to_string() + "," + rhs().to_string() + "]";
}

DerivedChainWitness derived_chain_witness(std::size_t n, const WitnessCaps& caps, kernels::Exec exec) {
    if (n == 0) throw PreconditionError("n must be >= 1");
    const unsigned gdeg = caps.generator_degree == 0 ? static_cast<unsigned>(2 * n) : caps.generator_degree;
    DerivedChainWitness out;
    out.term = caps.term.value_or(static_cast<unsigned>(2 * n - 1));
    out.generators = generators(Subalgebra::sn, n, gdeg);

    struct Entry {
        BracketExpression expr;
        Derivation value;
    };
    std::vector<Entry> level;
    {
        EchelonBasis ech;
        for (std::size_t g = 0; g < out.generators.size() && level.size() < caps.beam; ++g)
            if (ech.insert(to_vector(out.generators[g])))
                level.push_back({BracketExpression::leaf(g), out.generators[g]});
    }
    out.level_sizes.push_back(level.size());

    constexpr std::size_t kChunk = 2048;
    for (unsigned m = 1; m <= out.term && !level.empty(); ++m) {
        std::vector<Derivation> values;
        values.reserve(level.size());
        for (const auto& e : level) values.push_back(e.value);
        // Pairs in lexicographic order so the least expression is kept first.
        std::vector<kernels::IndexPair> pairs;
        for (std::size_t i = 0; i < level.size(); ++i)
            for (std::size_t j = i + 1; j < level.size(); ++j) pairs.emplace_back(i, j);

        std::vector<Entry> next;
        EchelonBasis ech;
        for (std::size_t start = 0; start < pairs.size() && next.size() < caps.beam; start += kChunk) {
            const auto count = std::min(kChunk, pairs.size() - start);
            std::span<const kernels::IndexPair> chunk(pairs.data() + start, count);
            const auto products = kernels::bracket_pairs(values, chunk, exec);
            for (std::size_t k = 0; k < count && next.size() < caps.beam; ++k) {
                if (products[k].is_zero() || !ech.insert(to_vector(products[k]))) continue;
                next.push_back({BracketExpression::node(level[chunk[k].first].expr, level[chunk[k].second].expr),
                                products[k]});
            }
        }
        level = std::move(next);
        out.level_sizes.push_back(level.size());
    }
    if (out.level_sizes.size() == out.term + 1 && !level.empty()) {
        out.found = true;
        out.expression = level.front().expr;
        out.value = level.front().value;
    }
    return out;
}

}  // namespace wn
