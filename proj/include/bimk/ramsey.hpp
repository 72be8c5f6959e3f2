#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "bimk/codes.hpp"

namespace bimk {

// predicates receive strictly increasing value tuples
using SetPredicate = std::function<bool(const FiniteSeq&)>;

// default cap on colorings examined per sweep; CLI --budget overrides
inline constexpr std::uint64_t kDefaultBudget = 1u << 20;

bool is_strictly_increasing(const FiniteSeq& s);

Nat binomial(std::uint64_t n, std::uint64_t k);

// rank of a strictly increasing k-tuple in colex order: sum of C(t(i), i+1)
std::size_t colex_rank(const FiniteSeq& t);

// extension homogeneity: for every index k-subset t of s and every two
// extension positions above t's top index, membership of the composed value
// tuple in A (and in B) does not depend on the position chosen
bool is_homogeneous_node(const FiniteSeq& s, const SetPredicate& A,
                         const SetPredicate& B, std::uint64_t k);

struct ERTree {
    std::vector<FiniteSeq> nodes;  // phi(0..steps), phi(0) the empty node
    std::uint64_t k = 1;
};

// each new natural n attaches to the node of largest index whose extension by
// n stays homogeneous; the empty root always accepts, so growth never stalls
ERTree er_tree_grow(const SetPredicate& A, const SetPredicate& B, std::uint64_t k,
                    std::uint64_t steps);

// gamma recursion: gamma(0) = 1, gamma(n+1) = gamma(n) * 4^C(n,k)
Nat er_width_bound(std::uint64_t n, std::uint64_t k);

// none iff every strictly increasing L-tuple from {0..N-1} contains a
// k-subtuple in X; otherwise the lexicographically least escaping tuple
std::optional<FiniteSeq> almostfull_upto(const SetPredicate& X, std::uint64_t k,
                                         std::uint64_t N, std::uint64_t L);

// lexicographically least k-subset of {0..N-1} in both X and Y
std::optional<FiniteSeq> intersection_witness(const SetPredicate& X,
                                              const SetPredicate& Y, std::uint64_t k,
                                              std::uint64_t N);

// total coloring of the k-subsets of {0..M-1}, flat in colex order
struct ColoringTable {
    std::uint64_t universe = 0;  // M
    std::uint64_t arity = 1;     // k
    std::uint64_t colors = 1;    // r
    std::vector<std::uint64_t> assignment;

    std::uint64_t color_of(const FiniteSeq& values) const;
};

ColoringTable make_coloring(std::uint64_t M, std::uint64_t k, std::uint64_t r,
                            std::vector<std::uint64_t> assignment);

// smallest-first search for s in [M]^l, l from n upward, with every k-subtuple
// monochromatic; large additionally demands l >= s(0)
std::optional<FiniteSeq> homog_search(const ColoringTable& c, std::uint64_t n,
                                      bool large);

// exhaustive run over all r^C(M,k) colorings in odometer order (last colex
// slot fastest); stops at the first coloring without a witness
struct ColoringSweep {
    bool all_admit = true;
    std::vector<std::uint64_t> counterexample;  // assignment that fails, if any
    Nat colorings_checked = 0;
};

ColoringSweep sweep_colorings(std::uint64_t M, std::uint64_t n, std::uint64_t k,
                              std::uint64_t r, bool large, const Nat& budget);

// every coloring admits a relatively large homogeneous set
bool ph_check(std::uint64_t M, std::uint64_t n, std::uint64_t k, std::uint64_t r,
              const Nat& budget);

// least M passing ph_check, scanning upward within the budget
std::uint64_t ph_min_witness(std::uint64_t n, std::uint64_t k, std::uint64_t r,
                             const Nat& budget);

}  // namespace bimk
