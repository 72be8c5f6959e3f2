#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bimk/numbers.hpp"
#include "bimk/orders.hpp"

namespace bimk {

// finite list of segments; may be empty, may overlap arbitrarily
using SegmentCover = std::vector<Segment>;

// indices into the cover: consecutive entries overlap (touching), the first
// strictly straddles the target's left endpoint, the last its right endpoint
struct ChainWitness {
    std::vector<std::size_t> indices;
};

// decidable covering test for a closed interval: true iff a chain witness
// exists through the overlap graph
bool covers_closed(const SegmentCover& cover, const Segment& s);

// minimal-length witness (breadth-first), or nullopt when there is none
std::optional<ChainWitness> find_chain(const SegmentCover& cover, const Segment& s);

// binary codes b of length <= depth whose segment sits strictly inside some
// cover element
BarTable cover_to_cantor_bar(const SegmentCover& cover, std::uint64_t depth);

// the reverse translation: one padded segment per bar clause (left edge,
// right edge, interior boundary pair), each strictly straddling its dyadic
// boundary; requires a genuine bar over binary sequences at its horizon
SegmentCover bar_to_cover(const BarTable& bar, const Nat& pad_denominator);

// bisection driven by stage covers: step right when the stage covers the
// closed left half, left otherwise; decisions records 'L'/'R' per step
struct OiResult {
    Segment seg;
    std::string decisions;
};

OiResult oi_delta(const std::vector<SegmentCover>& covers_by_stage, const FiniteSeq& path);

// bisection driven by a decided-set membership table over rationals; the
// table answers nullopt outside its domain, which is a reportable error
std::vector<Segment> endec_bisect(
    const std::function<std::optional<bool>(const Rat&)>& member, const Rat& start_hi,
    std::uint64_t steps);

}  // namespace bimk
