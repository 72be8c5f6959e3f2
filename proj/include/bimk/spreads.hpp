#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bimk/numbers.hpp"
#include "bimk/orders.hpp"

namespace bimk {

// admission law given as an explicit admitted-code table, total within the
// (depth, width) box: all sequences with length <= depth and entries < width
struct LawTable {
    std::vector<FiniteSeq> admitted;  // shortlex-sorted, duplicate-free
    std::uint64_t depth = 0;
    std::uint64_t width = 0;

    bool in_box(const FiniteSeq& s) const;
    // membership in the admitted table; querying outside the box is an error
    bool admits(const FiniteSeq& s) const;
};

LawTable make_law(std::vector<FiniteSeq> admitted, std::uint64_t depth,
                  std::uint64_t width);

// box-relative classification: every spread law is a fan law inside a finite
// box, so the verdicts collapse to "fan with explicit bounds" or a
// counterexample node where the spread condition fails
struct LawVerdict {
    enum class Kind { not_spread, fan };
    Kind kind = Kind::fan;
    FiniteSeq witness;                         // violating node, when not_spread
    std::uint64_t child_bound = 0;             // admitted children sit below this
    std::vector<std::uint64_t> level_counts;   // admitted nodes per length 0..depth
};

LawVerdict law_classify(const LawTable& law);

// every admitted sequence of exactly the bar's horizon length has a prefix in
// the bar; requires bar horizon <= law depth
bool bar_check(const LawTable& law, const BarTable& bar);

// members pairwise incomparable under the initial-segment order
bool thin_check(const BarTable& bar);

// unary-style binary encoding: each entry n becomes n zeros then a one
FiniteSeq embed_fan_to_cantor(const FiniteSeq& s);

// like embed_fan_to_cantor, but each entry j contributes one zero per
// admitted younger sibling; defined on nodes all of whose prefixes are
// admitted
FiniteSeq embed_sibling_count(const LawTable& law, const FiniteSeq& s);

// entry n becomes n+1 zeros then a one; output never has consecutive ones
FiniteSeq tau_embed(const FiniteSeq& s);

// length-n binary a with sum(a(i)/2^{i+1}) <= q <= sum + 1/2^n, the
// lexicographically least such a; requires 0 <= q <= 1
FiniteSeq bin_approx(const Rat& q, std::uint64_t n);

// exact value of sum (2a(i)+1)/5^{i+1}, or /5^i under the alternate
// convention
enum class RatOfBinBase { i, i_plus_1 };

Rat rat_of_bin(const FiniteSeq& a, RatOfBinBase base = RatOfBinBase::i_plus_1);

// least n whose scheduled value pair jumps by more than 1/2^n, or nullopt
std::optional<std::uint64_t> find_jump(const std::vector<Rat>& values,
                                       const std::vector<std::uint64_t>& schedule);

// sequence-space variant: least n whose scheduled pair differs at a position
// below n (inside both lengths), or nullopt
std::optional<std::uint64_t> find_mod_jump(const std::vector<FiniteSeq>& seqs,
                                           const std::vector<std::uint64_t>& schedule);

}  // namespace bimk
