#include "bimk/blocks.hpp"

#include <algorithm>

namespace bimk {

BlockCheck check_block(const BlockCandidate& candidate) {
    BlockCheck report;
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        if (!rat_lt(candidate[i][0], candidate[i][1]) ||
            !rat_lt(candidate[i][2], candidate[i][3])) {
            report.valid = false;
            report.clause = "i";
            report.indices = {i};
            return report;
        }
    }
    SegmentCover primes;
    for (const auto& quad : candidate) primes.push_back(make_segment(quad[0], quad[1]));
    if (!covers_closed(primes, make_segment(rat_of(0), rat_of(1)))) {
        report.valid = false;
        report.clause = "ii";
        return report;
    }
    for (std::size_t i = 0; i < candidate.size(); ++i) {
        Segment second_i = make_segment(candidate[i][2], candidate[i][3]);
        for (std::size_t j = i + 1; j < candidate.size(); ++j) {
            Segment second_j = make_segment(candidate[j][2], candidate[j][3]);
            if (seg_relate(primes[i], primes[j], SegRel::touching) &&
                !seg_relate(second_i, second_j, SegRel::touching)) {
                report.valid = false;
                report.clause = "iii";
                report.indices = {i, j};
                return report;
            }
        }
    }
    return report;
}

Block make_block(const BlockCandidate& candidate) {
    BlockCheck report = check_block(candidate);
    if (!report.valid) fail_domain("invalid block: clause " + report.clause + " fails");
    Block b;
    for (const auto& quad : candidate) {
        b.push_back(BlockEntry{make_segment(quad[0], quad[1]),
                               make_segment(quad[2], quad[3])});
    }
    return b;
}

namespace {

Rat rat_max(const Rat& a, const Rat& b) { return rat_lt(a, b) ? b : a; }
Rat rat_min(const Rat& a, const Rat& b) { return rat_lt(a, b) ? a : b; }

// one merged component of the clipped primes shrunk by d must contain [0,1-d]
bool mesh_valid(const std::vector<std::pair<Rat, Rat>>& clipped, const Rat& d) {
    Rat target = rat_sub(rat_of(1), d);
    std::vector<std::pair<Rat, Rat>> shrunk;
    for (const auto& [a, b] : clipped) {
        Rat hi = rat_sub(b, d);
        if (rat_le(a, hi)) shrunk.emplace_back(a, hi);
    }
    std::sort(shrunk.begin(), shrunk.end(),
              [](const auto& p, const auto& q) { return rat_lt(p.first, q.first); });
    std::size_t at = 0;
    while (at < shrunk.size()) {
        Rat lo = shrunk[at].first;
        Rat hi = shrunk[at].second;
        ++at;
        while (at < shrunk.size() && rat_le(shrunk[at].first, hi)) {
            hi = rat_max(hi, shrunk[at].second);
            ++at;
        }
        if (rat_le(lo, rat_of(0)) && rat_le(target, hi)) return true;
    }
    return false;
}

}  // namespace

std::pair<Rat, Rat> block_metrics(const Block& b) {
    Rat height = rat_of(0);
    for (const BlockEntry& entry : b) height = rat_max(height, seg_length(entry.second));

    std::vector<std::pair<Rat, Rat>> clipped;
    std::vector<Rat> endpoints{rat_of(0), rat_of(1)};
    for (const BlockEntry& entry : b) {
        Rat a = rat_max(entry.prime.lo, rat_of(0));
        Rat bb = rat_min(entry.prime.hi, rat_of(1));
        if (!rat_le(a, bb)) continue;
        clipped.emplace_back(a, bb);
        endpoints.push_back(a);
        endpoints.push_back(bb);
    }
    std::vector<Rat> candidates;
    for (const Rat& e : endpoints) {
        for (const Rat& f : endpoints) {
            Rat d = rat_sub(e, f);
            if (rat_lt(rat_of(0), d) && rat_le(d, rat_of(1))) candidates.push_back(d);
        }
    }
    std::sort(candidates.begin(), candidates.end(), rat_lt);
    candidates.erase(std::unique(candidates.begin(), candidates.end(), rat_eq),
                     candidates.end());
    for (auto it = candidates.rbegin(); it != candidates.rend(); ++it) {
        if (mesh_valid(clipped, *it)) return {height, *it};
    }
    fail_domain("mesh sweep found no valid candidate");
}

bool block_relate(const Block& t, const Block& s, BlockRel rel) {
    if (rel == BlockRel::refines) {
        for (const BlockEntry& te : t) {
            bool fits = false;
            for (const BlockEntry& se : s) {
                if (seg_relate(te.prime, se.prime, SegRel::inside) &&
                    seg_relate(te.second, se.second, SegRel::inside)) {
                    fits = true;
                    break;
                }
            }
            if (!fits) return false;
        }
        return true;
    }
    for (const BlockEntry& te : t) {
        for (const BlockEntry& se : s) {
            if (seg_relate(te.prime, se.prime, SegRel::touching) &&
                seg_relate(te.second, se.second, SegRel::apart)) {
                return true;
            }
        }
    }
    return false;
}

std::optional<std::uint64_t> canonical_level(const Segment& s) {
    Rat len = rat_normalize(seg_length(s));
    if (len.num.pos != 1 || len.num.neg != 0) return std::nullopt;
    Nat den = len.den.pos;
    if ((den & (den - 1)) != 0) return std::nullopt;
    std::uint64_t level = boost::multiprecision::msb(den);
    // left endpoint must land on the grid z/2^{level+1}
    Rat scaled = rat_normalize(
        rat_mul(s.lo, pow2_rat(static_cast<std::int64_t>(level) + 1)));
    if (scaled.den.pos != 1) return std::nullopt;
    return level;
}

bool is_cblock(const Block& b, std::uint64_t m, std::uint64_t n) {
    for (const BlockEntry& entry : b) {
        auto prime_level = canonical_level(entry.prime);
        auto second_level = canonical_level(entry.second);
        if (!prime_level || *prime_level != m) return false;
        if (!second_level || *second_level != n) return false;
    }
    return true;
}

bool cdelta_admits(const FiniteSeq& modulus, const std::vector<Block>& t) {
    if (t.size() > modulus.size()) fail_domain("more stages than modulus entries");
    Segment unit = make_segment(rat_of(0), rat_of(1));
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (!is_cblock(t[i], modulus[i], i)) return false;
        for (const BlockEntry& entry : t[i]) {
            if (!seg_relate(entry.second, unit, SegRel::touching)) return false;
        }
        if (i > 0 && !block_relate(t[i], t[i - 1], BlockRel::refines)) return false;
    }
    return true;
}

Segment apply_block_fn(const std::vector<Block>& stages, const RealPrefix& x,
                       std::uint64_t m) {
    Rat bound = pow2_rat(-static_cast<std::int64_t>(m));
    bool any_short_enough = false;
    for (const Block& stage : stages) {
        for (const BlockEntry& entry : stage) {
            if (!rat_le(seg_length(entry.second), bound)) continue;
            any_short_enough = true;
            for (std::size_t j = x.stages.size(); j-- > 0;) {
                if (seg_relate(x.stages[j], entry.prime, SegRel::strictly_inside)) {
                    return entry.second;
                }
            }
        }
    }
    if (!any_short_enough) {
        fail_domain("stages too shallow: no value segment of length <= 1/2^" +
                    std::to_string(m));
    }
    fail_domain("real prefix too coarse: no stage of x sits strictly inside a prime");
}

}  // namespace bimk
