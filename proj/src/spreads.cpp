#include "bimk/spreads.hpp"

#include <algorithm>

namespace bimk {

namespace {

constexpr std::uint64_t kBoxNodeCap = 1u << 20;

// number of box nodes with length <= depth, capped
std::uint64_t box_size(std::uint64_t depth, std::uint64_t width) {
    std::uint64_t total = 0;
    std::uint64_t level = 1;
    for (std::uint64_t len = 0; len <= depth; ++len) {
        total += level;
        if (total > kBoxNodeCap) fail_domain("law box too large to enumerate");
        if (len < depth) {
            if (width != 0 && level > kBoxNodeCap / width) {
                fail_domain("law box too large to enumerate");
            }
            level *= width;
        }
    }
    return total;
}

template <typename Fn>
void walk_box(std::uint64_t depth, std::uint64_t width, FiniteSeq& node, Fn&& visit) {
    visit(node);
    if (node.size() == depth) return;
    for (std::uint64_t n = 0; n < width; ++n) {
        node.push_back(n);
        walk_box(depth, width, node, visit);
        node.pop_back();
    }
}

}  // namespace

bool LawTable::in_box(const FiniteSeq& s) const {
    if (s.size() > depth) return false;
    return std::all_of(s.begin(), s.end(), [this](std::uint64_t e) { return e < width; });
}

bool LawTable::admits(const FiniteSeq& s) const {
    if (!in_box(s)) fail_domain("admission query outside the law box");
    return std::binary_search(admitted.begin(), admitted.end(), s, shortlex_less);
}

LawTable make_law(std::vector<FiniteSeq> admitted, std::uint64_t depth,
                  std::uint64_t width) {
    LawTable law;
    law.depth = depth;
    law.width = width;
    box_size(depth, width);
    for (const FiniteSeq& s : admitted) {
        if (!law.in_box(s)) fail_domain("admitted code outside the law box");
    }
    std::sort(admitted.begin(), admitted.end(), shortlex_less);
    admitted.erase(std::unique(admitted.begin(), admitted.end()), admitted.end());
    law.admitted = std::move(admitted);
    return law;
}

LawVerdict law_classify(const LawTable& law) {
    LawVerdict verdict;
    FiniteSeq root;
    if (!law.admits(root)) {
        verdict.kind = LawVerdict::Kind::not_spread;
        verdict.witness = root;
        return verdict;
    }
    std::optional<FiniteSeq> violation;
    std::uint64_t child_bound = 0;
    std::vector<std::uint64_t> level_counts(law.depth + 1, 0);
    FiniteSeq node;
    walk_box(law.depth, law.width, node, [&](const FiniteSeq& s) {
        bool here = law.admits(s);
        if (here) ++level_counts[s.size()];
        if (s.size() == law.depth) return;
        std::uint64_t children = 0;
        std::uint64_t highest = 0;
        FiniteSeq child = s;
        child.push_back(0);
        for (std::uint64_t n = 0; n < law.width; ++n) {
            child.back() = n;
            if (law.admits(child)) {
                ++children;
                highest = n + 1;
            }
        }
        if (here != (children > 0)) {
            if (!violation || shortlex_less(s, *violation)) violation = s;
        }
        if (here) child_bound = std::max(child_bound, highest);
    });
    if (violation) {
        verdict.kind = LawVerdict::Kind::not_spread;
        verdict.witness = *violation;
        return verdict;
    }
    verdict.kind = LawVerdict::Kind::fan;
    verdict.child_bound = child_bound;
    verdict.level_counts = std::move(level_counts);
    return verdict;
}

bool bar_check(const LawTable& law, const BarTable& bar) {
    if (bar.depth_horizon > law.depth) fail_domain("bar horizon exceeds law depth");
    bool escaped = false;
    FiniteSeq node;
    // depth-first over box nodes, pruning subtrees already barred
    auto dfs = [&](auto&& self, FiniteSeq& s) -> void {
        if (escaped || bar_member(bar, s)) return;
        if (s.size() == bar.depth_horizon) {
            if (law.admits(s)) escaped = true;
            return;
        }
        for (std::uint64_t n = 0; n < law.width && !escaped; ++n) {
            s.push_back(n);
            self(self, s);
            s.pop_back();
        }
    };
    dfs(dfs, node);
    return !escaped;
}

bool thin_check(const BarTable& bar) { return bar_is_thin(bar); }

FiniteSeq embed_fan_to_cantor(const FiniteSeq& s) {
    FiniteSeq out;
    for (std::uint64_t entry : s) {
        out.insert(out.end(), entry, 0);
        out.push_back(1);
    }
    return out;
}

FiniteSeq embed_sibling_count(const LawTable& law, const FiniteSeq& s) {
    FiniteSeq out;
    FiniteSeq prefix;
    if (!law.admits(prefix)) fail_domain("sequence not admitted by the law");
    for (std::uint64_t entry : s) {
        std::uint64_t siblings = 0;
        FiniteSeq probe = prefix;
        probe.push_back(0);
        for (std::uint64_t l = 0; l < entry; ++l) {
            probe.back() = l;
            if (law.admits(probe)) ++siblings;
        }
        prefix.push_back(entry);
        if (!law.admits(prefix)) fail_domain("sequence not admitted by the law");
        out.insert(out.end(), siblings, 0);
        out.push_back(1);
    }
    return out;
}

FiniteSeq tau_embed(const FiniteSeq& s) {
    FiniteSeq out;
    for (std::uint64_t entry : s) {
        out.insert(out.end(), entry + 1, 0);
        out.push_back(1);
    }
    return out;
}

FiniteSeq bin_approx(const Rat& q, std::uint64_t n) {
    if (rat_lt(q, rat_of(0)) || rat_lt(rat_of(1), q)) {
        fail_domain("dyadic approximation needs a rational in [0,1]");
    }
    FiniteSeq out;
    Rat partial = rat_of(0);
    for (std::uint64_t i = 0; i < n; ++i) {
        Rat step = pow2_rat(-static_cast<std::int64_t>(i) - 1);
        // a zero bit keeps the window satisfiable iff q <= partial + 1/2^{i+1}
        if (rat_le(q, rat_add(partial, step))) {
            out.push_back(0);
        } else {
            out.push_back(1);
            partial = rat_add(partial, step);
        }
    }
    return out;
}

Rat rat_of_bin(const FiniteSeq& a, RatOfBinBase base) {
    if (!is_bin(a)) fail_domain("binary sequence required");
    Rat sum = rat_of(0);
    Nat power = base == RatOfBinBase::i ? 1 : 5;
    for (std::uint64_t bit : a) {
        sum = rat_add(sum, make_rat(int_of(bit == 1 ? 3 : 1), Int{power, Nat(0)}));
        power *= 5;
    }
    return sum;
}

namespace {

void check_schedule(std::size_t limit, const std::vector<std::uint64_t>& schedule) {
    for (std::size_t k = 0; k < schedule.size(); ++k) {
        if (schedule[k] >= limit) fail_domain("schedule index out of range");
        if (k > 0 && schedule[k] <= schedule[k - 1]) {
            fail_domain("schedule must be strictly increasing");
        }
    }
}

}  // namespace

std::optional<std::uint64_t> find_jump(const std::vector<Rat>& values,
                                       const std::vector<std::uint64_t>& schedule) {
    check_schedule(values.size(), schedule);
    for (std::size_t n = 0; n + 1 < schedule.size(); ++n) {
        const Rat& a = values[schedule[n]];
        const Rat& b = values[schedule[n + 1]];
        Rat gap = rat_lt(a, b) ? rat_sub(b, a) : rat_sub(a, b);
        if (rat_lt(pow2_rat(-static_cast<std::int64_t>(n)), gap)) return n;
    }
    return std::nullopt;
}

std::optional<std::uint64_t> find_mod_jump(const std::vector<FiniteSeq>& seqs,
                                           const std::vector<std::uint64_t>& schedule) {
    check_schedule(seqs.size(), schedule);
    for (std::size_t n = 0; n + 1 < schedule.size(); ++n) {
        if (differ_before(seqs[schedule[n + 1]], seqs[schedule[n]], n)) return n;
    }
    return std::nullopt;
}

}  // namespace bimk
