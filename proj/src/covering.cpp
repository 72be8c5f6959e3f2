#include "bimk/covering.hpp"

#include <algorithm>
#include <queue>

namespace bimk {

namespace {

bool straddles(const Segment& seg, const Rat& point) {
    return rat_lt(seg.lo, point) && rat_lt(point, seg.hi);
}

}  // namespace

std::optional<ChainWitness> find_chain(const SegmentCover& cover, const Segment& s) {
    std::vector<std::size_t> parent(cover.size(), cover.size());
    std::vector<bool> seen(cover.size(), false);
    std::queue<std::size_t> frontier;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        if (!straddles(cover[i], s.lo)) continue;
        if (straddles(cover[i], s.hi)) return ChainWitness{{i}};
        seen[i] = true;
        frontier.push(i);
    }
    while (!frontier.empty()) {
        std::size_t at = frontier.front();
        frontier.pop();
        for (std::size_t next = 0; next < cover.size(); ++next) {
            if (seen[next] || !seg_relate(cover[at], cover[next], SegRel::touching)) continue;
            parent[next] = at;
            if (straddles(cover[next], s.hi)) {
                std::vector<std::size_t> chain;
                for (std::size_t walk = next; walk != cover.size(); walk = parent[walk]) {
                    chain.push_back(walk);
                }
                std::reverse(chain.begin(), chain.end());
                return ChainWitness{std::move(chain)};
            }
            seen[next] = true;
            frontier.push(next);
        }
    }
    return std::nullopt;
}

bool covers_closed(const SegmentCover& cover, const Segment& s) {
    return find_chain(cover, s).has_value();
}

BarTable cover_to_cantor_bar(const SegmentCover& cover, std::uint64_t depth) {
    std::vector<FiniteSeq> members;
    std::vector<FiniteSeq> level{FiniteSeq{}};
    for (std::uint64_t len = 0; len <= depth; ++len) {
        std::vector<FiniteSeq> open;
        for (FiniteSeq& b : level) {
            Segment box = bin_to_segment(b);
            bool covered = false;
            for (const Segment& seg : cover) {
                if (seg_relate(box, seg, SegRel::strictly_inside)) {
                    covered = true;
                    break;
                }
            }
            // keep the bar thin: a covered code bars its whole subtree
            if (covered) {
                members.push_back(std::move(b));
            } else {
                open.push_back(std::move(b));
            }
        }
        if (len == depth) break;
        std::vector<FiniteSeq> next;
        next.reserve(open.size() * 2);
        for (const FiniteSeq& b : open) {
            next.push_back(concat(b, {0}));
            next.push_back(concat(b, {1}));
        }
        level = std::move(next);
    }
    return make_bar(std::move(members), depth);
}

namespace {

// every binary sequence of horizon length has a prefix among the members
bool bars_all_binary(const BarTable& bar, FiniteSeq& scratch) {
    if (bar_member(bar, scratch)) return true;
    if (scratch.size() == bar.depth_horizon) return false;
    for (std::uint64_t bit = 0; bit < 2; ++bit) {
        scratch.push_back(bit);
        bool barred = bars_all_binary(bar, scratch);
        scratch.pop_back();
        if (!barred) return false;
    }
    return true;
}

bool all_zeros(const FiniteSeq& s) {
    return std::all_of(s.begin(), s.end(), [](std::uint64_t e) { return e == 0; });
}

bool all_ones(const FiniteSeq& s) {
    return std::all_of(s.begin(), s.end(), [](std::uint64_t e) { return e == 1; });
}

}  // namespace

SegmentCover bar_to_cover(const BarTable& bar, const Nat& pad_denominator) {
    if (pad_denominator < 1) fail_usage("padding denominator must be a positive natural");
    for (const FiniteSeq& m : bar.members) {
        if (!is_bin(m)) fail_domain("bar members must be binary sequences");
    }
    FiniteSeq scratch;
    if (!bars_all_binary(bar, scratch)) {
        fail_domain("not a bar: some sequence at the horizon has no prefix in the members");
    }
    Rat pad = make_rat(int_of(1), Int{pad_denominator, Nat(0)});
    Rat one = rat_of(1);
    SegmentCover out;
    for (const FiniteSeq& m : bar.members) {
        if (m.empty()) {
            out.push_back(make_segment(rat_sub(rat_of(0), pad), rat_add(one, pad)));
            continue;
        }
        std::int64_t len = static_cast<std::int64_t>(m.size());
        if (all_zeros(m)) {
            out.push_back(make_segment(rat_sub(rat_of(0), pad), rat_sub(pow2_rat(-len), pad)));
        }
        if (all_ones(m)) {
            out.push_back(make_segment(rat_add(rat_sub(one, pow2_rat(-len)), pad),
                                       rat_add(one, pad)));
        }
    }
    // interior boundaries: u = c*<0>*1..1 together with v = c*<1>*0..0 pin the
    // dyadic point at the midpoint of B(c)
    for (const FiniteSeq& u : bar.members) {
        auto last_zero = std::find(u.rbegin(), u.rend(), 0u);
        if (last_zero == u.rend()) continue;
        std::size_t split = u.size() - 1 - (last_zero - u.rbegin());
        FiniteSeq stem(u.begin(), u.begin() + split);
        for (const FiniteSeq& v : bar.members) {
            if (v.size() <= split || v[split] != 1) continue;
            if (!std::equal(stem.begin(), stem.end(), v.begin())) continue;
            if (!all_zeros(FiniteSeq(v.begin() + split + 1, v.end()))) continue;
            Rat boundary = seg_mid(bin_to_segment(stem));
            Rat lo = rat_add(rat_sub(boundary, pow2_rat(-static_cast<std::int64_t>(u.size()))), pad);
            Rat hi = rat_sub(rat_add(boundary, pow2_rat(-static_cast<std::int64_t>(v.size()))), pad);
            out.push_back(make_segment(lo, hi));
        }
    }
    std::sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) {
        if (rat_lt(a.lo, b.lo)) return true;
        if (rat_lt(b.lo, a.lo)) return false;
        return rat_lt(a.hi, b.hi);
    });
    out.erase(std::unique(out.begin(), out.end(), seg_eq), out.end());
    return out;
}

OiResult oi_delta(const std::vector<SegmentCover>& covers_by_stage, const FiniteSeq& path) {
    Segment cur = make_segment(rat_of(0), rat_of(1));
    std::string decisions;
    for (std::uint64_t stage : path) {
        if (stage >= covers_by_stage.size()) fail_domain("path entry indexes a missing stage");
        Segment left = seg_geometry(SegGeom::left_half, cur);
        if (covers_closed(covers_by_stage[stage], left)) {
            cur = seg_geometry(SegGeom::right_half, cur);
            decisions.push_back('R');
        } else {
            cur = left;
            decisions.push_back('L');
        }
    }
    return OiResult{cur, decisions};
}

std::vector<Segment> endec_bisect(
    const std::function<std::optional<bool>(const Rat&)>& member, const Rat& start_hi,
    std::uint64_t steps) {
    std::vector<Segment> trajectory{make_segment(rat_of(0), start_hi)};
    for (std::uint64_t n = 0; n < steps; ++n) {
        const Segment& cur = trajectory.back();
        Rat mid = seg_mid(cur);
        std::optional<bool> inside = member(mid);
        if (!inside) {
            fail_domain("membership table does not answer midpoint " + rat_to_string(mid));
        }
        trajectory.push_back(
            seg_geometry(*inside ? SegGeom::right_half : SegGeom::left_half, cur));
    }
    return trajectory;
}

}  // namespace bimk
