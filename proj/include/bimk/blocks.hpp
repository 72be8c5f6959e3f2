#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bimk/covering.hpp"
#include "bimk/numbers.hpp"

namespace bimk {

// one piece of a block function: a domain segment mapped to a value segment
struct BlockEntry {
    Segment prime;
    Segment second;
};

using Block = std::vector<BlockEntry>;

// raw entry quadruples (p_lo, p_hi, v_lo, v_hi) before validation
using BlockCandidate = std::vector<std::array<Rat, 4>>;

// validity report: clause "i" (segment validity), "ii" (primes cover the unit
// interval), or "iii" (overlapping primes with non-overlapping seconds)
struct BlockCheck {
    bool valid = true;
    std::string clause;
    std::vector<std::size_t> indices;
};

BlockCheck check_block(const BlockCandidate& candidate);

// validates and converts; throws with the failing clause on invalid input
Block make_block(const BlockCandidate& candidate);

// (height, mesh): max value-segment length, and the largest d such that every
// closed sub-interval of [0,1] of length d fits inside one clipped prime;
// capped at 1 since longer sub-intervals do not exist in [0,1]
std::pair<Rat, Rat> block_metrics(const Block& b);

enum class BlockRel { refines, separate };

// refines: every t-entry sits inside some s-entry in both coordinates;
// separate: some cross pair of overlapping primes has apart seconds
bool block_relate(const Block& t, const Block& s, BlockRel rel);

// level n when the segment has length 1/2^n and left endpoint on the
// half-step grid z/2^{n+1}; nullopt otherwise
std::optional<std::uint64_t> canonical_level(const Segment& s);

// all primes canonical at level m and all seconds canonical at level n
bool is_cblock(const Block& b, std::uint64_t m, std::uint64_t n);

// stage i must be canonical at (modulus(i), i) with every second overlapping
// (0,1), and each stage must refine the one before it
bool cdelta_admits(const FiniteSeq& modulus, const std::vector<Block>& t);

// value segment of length <= 1/2^m containing the image of x: the first
// stage/entry whose prime strictly contains some stage of x and whose second
// is short enough; failure modes (stages too coarse, x too coarse) are
// reported explicitly
Segment apply_block_fn(const std::vector<Block>& stages, const RealPrefix& x,
                       std::uint64_t m);

}  // namespace bimk
