#pragma once

// The triangular subalgebra u_n = P_0 d_1 + ... + P_(n-1) d_n and the
// solvable subalgebra s_n = (P_0 + x_1 P_0) d_1 + ... + (P_(n-1) + x_n P_(n-1)) d_n,
// where P_i = Q[x_1..x_i].

#include "wn/certificates.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace wn {

enum class Subalgebra { un, sn };

enum class Violation {
    depends_on_xj_with_j_gt_i,
    xi_degree_exceeds_1,
    xi_degree_exceeds_0_for_un,
};

struct MembershipVerdict {
    bool in_un = false;
    bool in_sn = false;
    // (slot, reason), each pair listed once, ordered by slot.
    std::vector<std::pair<std::size_t, Violation>> violations;
};

MembershipVerdict membership(const Derivation& d);
bool in_subalgebra(const Derivation& d, Subalgebra which);

// Whether the monomial m may appear in slot `slot` of an element of `which`.
bool monomial_allowed(const Monomial& m, std::size_t slot, Subalgebra which);

// All m d_i with m an allowed monomial of total degree <= degree_cap.
// Ordered by slot, then by ascending degree, then grlex descending.
std::vector<Derivation> generators(Subalgebra which, std::size_t n, unsigned degree_cap);

enum class LndVerdict { witness, not_nilpotent, inconclusive };

struct LndResult {
    LndVerdict verdict = LndVerdict::inconclusive;
    std::optional<NilpotencyWitness> witness;
    std::optional<LinearNonNilpotency> certificate;
    unsigned bound = 0;
};

// Semi-decision: iterate D on each variable up to `bound` times, and for
// linear D test nilpotency of the matrix exactly.
LndResult lnd_check(const Derivation& d, unsigned bound);

// Binary tree of brackets over generator references.
class BracketExpression {
public:
    static BracketExpression leaf(std::size_t generator);
    static BracketExpression node(BracketExpression lhs, BracketExpression rhs);

    bool is_leaf() const { return !node_->lhs; }
    std::size_t generator() const { return node_->generator; }
    const BracketExpression& lhs() const { return *node_->lhs; }
    const BracketExpression& rhs() const { return *node_->rhs; }
    unsigned depth() const;

    Derivation evaluate(std::span<const Derivation> gens) const;
    // Nested s-expression with 1-based generator names: [[g1,g2],[g3,g4]].
    std::string to_string() const;

private:
    BracketExpression() = default;

    struct Node {
        std::size_t generator = 0;
        std::shared_ptr<const BracketExpression> lhs;
        std::shared_ptr<const BracketExpression> rhs;
    };
    std::shared_ptr<const Node> node_;
};

struct WitnessCaps {
    unsigned generator_degree = 0;  // 0 selects 2n
    std::optional<unsigned> term;   // default 2n - 1
    std::size_t beam = 10000;       // kept expressions per level
};

struct DerivedChainWitness {
    bool found = false;
    unsigned term = 0;
    std::vector<Derivation> generators;  // legend for the expression
    std::optional<BracketExpression> expression;
    std::optional<Derivation> value;
    // Independent kept values per level.
    std::vector<std::size_t> level_sizes;
};

// Level 0 holds the generators of s_n up to the degree cap; level m holds
// brackets of pairs from level m-1 that are independent modulo the values
// already kept at level m. Returns the first kept expression at the target
// level, which is a nonzero element of the term-th derived algebra of s_n.
DerivedChainWitness derived_chain_witness(std::size_t n, const WitnessCaps& caps = {},
                                          kernels::Exec exec = kernels::Exec::parallel);

const char* to_string(Violation v);
const char* to_string(Subalgebra s);

}  // namespace wn
