#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bimk/codes.hpp"

namespace bimk {

// KB comparisons never produce Incomparable; lex may (prefix pairs)
enum class OrderVerdict { LessThan, Equal, GreaterThan, Incomparable };

enum class ChainOrder { lex, kb };

// shortlex: by length first, then entrywise; the canonical member order for
// every serialized bar
bool shortlex_less(const FiniteSeq& a, const FiniteSeq& b);

// finite truncation of a bar: the members seen up to a depth horizon
struct BarTable {
    std::vector<FiniteSeq> members;  // shortlex-sorted, duplicate-free
    std::uint64_t depth_horizon = 0;
    std::optional<bool> thin;
};

// sorts, dedupes, and rejects members longer than the horizon
BarTable make_bar(std::vector<FiniteSeq> members, std::uint64_t depth_horizon);

bool bar_member(const BarTable& bar, const FiniteSeq& s);

// no member is a proper initial of another member
bool bar_is_thin(const BarTable& bar);

OrderVerdict lex_cmp(const FiniteSeq& a, const FiniteSeq& b);

// total: extension sorts below its prefix, otherwise lex decides
OrderVerdict kb_cmp(const FiniteSeq& a, const FiniteSeq& b);

// s has no prefix (itself included) in the bar; length must fit the horizon
bool below(const BarTable& bar, const FiniteSeq& s);

// least index where the chain stops descending strictly, or where it leaves
// Below(bar) when a bar is given; nullopt for a clean descent
std::optional<std::size_t> check_descending(const std::vector<FiniteSeq>& chain,
                                            ChainOrder order,
                                            const std::optional<BarTable>& bar);

// one step of the thin-bar tower: members <n>*t with n < out_horizon and t a
// concatenation of exactly n input members, total length <= out_horizon
BarTable thinbar_phi(const BarTable& bar, std::uint64_t out_horizon);

// n-th iterate of thinbar_phi starting from the singleton bar {<k> : k < horizon}
BarTable epsilon0_level(std::uint64_t n, std::uint64_t horizon);

// horizon-free membership in tower levels, answered lazily (level 0 is the
// singletons; level l+1 unfolds the phi step by recursion)
bool eps0_level_member(const FiniteSeq& s, std::uint64_t level);

// member of the tower's diagonal: <n>*t with t in level n
bool eps0_member(const FiniteSeq& s);

}  // namespace bimk
