#pragma once

// Batched bracket evaluation. Every closure, series and witness search in
// the library reduces to evaluating many independent brackets and then
// merging them in a fixed order; these kernels do the evaluation.
//
// `Exec::serial` is the reference implementation. `Exec::parallel` splits
// the batch across OpenMP threads; output slot k always holds the k-th
// requested bracket, so results are identical to the serial path.

#include "wn/derivation.hpp"

#include <span>
#include <utility>
#include <vector>

namespace wn::kernels {

enum class Exec { serial, parallel };

using IndexPair = std::pair<std::size_t, std::size_t>;

// out[k] = [elems[pairs[k].first], elems[pairs[k].second]]
std::vector<Derivation> bracket_pairs(std::span<const Derivation> elems, std::span<const IndexPair> pairs,
                                      Exec exec = Exec::parallel);

// out[k] = [lhs[pairs[k].first], rhs[pairs[k].second]]
std::vector<Derivation> bracket_cross(std::span<const Derivation> lhs, std::span<const Derivation> rhs,
                                      std::span<const IndexPair> pairs, Exec exec = Exec::parallel);

// out[k] = [d, elems[k]]
std::vector<Derivation> adjoint_images(const Derivation& d, std::span<const Derivation> elems,
                                       Exec exec = Exec::parallel);

// All pairs (i, j) with i < j < count, ordered by j then i.
std::vector<IndexPair> upper_pairs(std::size_t count);

// Threads the parallel path will use.
int max_threads();

}  // namespace wn::kernels
