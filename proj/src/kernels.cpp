#include "wn/kernels.hpp"

#include "wn/errors.hpp"

#include <omp.h>

namespace wn::kernels {

namespace {

template <typename Eval>
std::vector<Derivation> run(std::size_t count, std::size_t n, Exec exec, Eval eval) {
    std::vector<Derivation> out(count, Derivation(n));
    const auto total = static_cast<std::ptrdiff_t>(count);
    if (exec == Exec::serial || count < 2) {
        for (std::ptrdiff_t k = 0; k < total; ++k) out[k] = eval(static_cast<std::size_t>(k));
        return out;
    }
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t k = 0; k < total; ++k) out[k] = eval(static_cast<std::size_t>(k));
    return out;
}

// Exceptions must not escape an OpenMP region, so validate up front.
void check_ambient(std::size_t n, std::span<const Derivation> elems) {
    for (const auto& e : elems) check_same_ambient(n, e.ambient());
}

}  // namespace

std::vector<Derivation> bracket_pairs(std::span<const Derivation> elems, std::span<const IndexPair> pairs,
                                      Exec exec) {
    return bracket_cross(elems, elems, pairs, exec);
}

std::vector<Derivation> bracket_cross(std::span<const Derivation> lhs, std::span<const Derivation> rhs,
                                      std::span<const IndexPair> pairs, Exec exec) {
    if (pairs.empty()) return {};
    for (const auto& [i, j] : pairs)
        if (i >= lhs.size() || j >= rhs.size()) throw std::out_of_range("bracket pair index out of range");
    const auto n = lhs.front().ambient();
    check_ambient(n, lhs);
    check_ambient(n, rhs);
    return run(pairs.size(), n, exec, [&](std::size_t k) { return bracket(lhs[pairs[k].first], rhs[pairs[k].second]); });
}

std::vector<Derivation> adjoint_images(const Derivation& d, std::span<const Derivation> elems, Exec exec) {
    check_ambient(d.ambient(), elems);
    return run(elems.size(), d.ambient(), exec, [&](std::size_t k) { return bracket(d, elems[k]); });
}

std::vector<IndexPair> upper_pairs(std::size_t count) {
    std::vector<IndexPair> out;
    out.reserve(count * (count > 0 ? count - 1 : 0) / 2);
    for (std::size_t j = 1; j < count; ++j)
        for (std::size_t i = 0; i < j; ++i) out.emplace_back(i, j);
    return out;
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace wn::kernels
