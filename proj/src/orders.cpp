#include "bimk/orders.hpp"

#include <algorithm>

namespace bimk {

namespace {

constexpr std::size_t kBarMemberCap = 1u << 20;

}  // namespace

bool shortlex_less(const FiniteSeq& a, const FiniteSeq& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

BarTable make_bar(std::vector<FiniteSeq> members, std::uint64_t depth_horizon) {
    for (const FiniteSeq& m : members) {
        if (m.size() > depth_horizon) fail_domain("bar member longer than depth horizon");
    }
    std::sort(members.begin(), members.end(), shortlex_less);
    members.erase(std::unique(members.begin(), members.end()), members.end());
    BarTable bar;
    bar.members = std::move(members);
    bar.depth_horizon = depth_horizon;
    return bar;
}

bool bar_member(const BarTable& bar, const FiniteSeq& s) {
    return std::binary_search(bar.members.begin(), bar.members.end(), s, shortlex_less);
}

bool bar_is_thin(const BarTable& bar) {
    for (const FiniteSeq& m : bar.members) {
        for (std::size_t n = 0; n < m.size(); ++n) {
            if (bar_member(bar, FiniteSeq(m.begin(), m.begin() + n))) return false;
        }
    }
    return true;
}

OrderVerdict lex_cmp(const FiniteSeq& a, const FiniteSeq& b) {
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] < b[i]) return OrderVerdict::LessThan;
        if (a[i] > b[i]) return OrderVerdict::GreaterThan;
    }
    if (a.size() == b.size()) return OrderVerdict::Equal;
    return OrderVerdict::Incomparable;
}

OrderVerdict kb_cmp(const FiniteSeq& a, const FiniteSeq& b) {
    if (proper_initial(b, a)) return OrderVerdict::LessThan;
    if (proper_initial(a, b)) return OrderVerdict::GreaterThan;
    return lex_cmp(a, b);
}

bool below(const BarTable& bar, const FiniteSeq& s) {
    if (s.size() > bar.depth_horizon) fail_domain("sequence longer than bar horizon");
    for (std::size_t n = 0; n <= s.size(); ++n) {
        if (bar_member(bar, FiniteSeq(s.begin(), s.begin() + n))) return false;
    }
    return true;
}

std::optional<std::size_t> check_descending(const std::vector<FiniteSeq>& chain,
                                            ChainOrder order,
                                            const std::optional<BarTable>& bar) {
    for (std::size_t n = 0; n < chain.size(); ++n) {
        if (bar && !below(*bar, chain[n])) return n;
        if (n + 1 < chain.size()) {
            OrderVerdict v = order == ChainOrder::kb ? kb_cmp(chain[n + 1], chain[n])
                                                     : lex_cmp(chain[n + 1], chain[n]);
            if (v != OrderVerdict::LessThan) return n;
        }
    }
    return std::nullopt;
}

namespace {

// all concatenations of exactly `pieces` members onto acc, capped by max_len
void extend_with_pieces(const BarTable& bar, std::uint64_t pieces, std::size_t max_len,
                        FiniteSeq& acc, std::vector<FiniteSeq>& out) {
    if (pieces == 0) {
        out.push_back(acc);
        if (out.size() > kBarMemberCap) fail_domain("thin-bar step exceeds member cap");
        return;
    }
    for (const FiniteSeq& piece : bar.members) {
        if (acc.size() + piece.size() > max_len) continue;
        std::size_t before = acc.size();
        acc.insert(acc.end(), piece.begin(), piece.end());
        extend_with_pieces(bar, pieces - 1, max_len, acc, out);
        acc.resize(before);
    }
}

}  // namespace

BarTable thinbar_phi(const BarTable& bar, std::uint64_t out_horizon) {
    if (!bar_is_thin(bar)) fail_domain("phi step requires a thin bar");
    std::vector<FiniteSeq> out;
    for (std::uint64_t n = 0; n < out_horizon; ++n) {
        FiniteSeq acc{n};
        extend_with_pieces(bar, n, out_horizon, acc, out);
    }
    BarTable result = make_bar(std::move(out), out_horizon);
    result.thin = bar_is_thin(result);
    if (!*result.thin) fail_domain("phi step produced a non-thin bar");
    return result;
}

BarTable epsilon0_level(std::uint64_t n, std::uint64_t horizon) {
    if (n > 3) fail_domain("tower level too deep to materialize");
    std::vector<FiniteSeq> singletons;
    for (std::uint64_t k = 0; k < horizon; ++k) singletons.push_back({k});
    BarTable level = make_bar(std::move(singletons), std::max<std::uint64_t>(horizon, 1));
    level.thin = true;
    for (std::uint64_t step = 0; step < n; ++step) level = thinbar_phi(level, horizon);
    return level;
}

namespace {

// can t[from..] split into exactly `pieces` level-`level` members?
bool splits_into(const FiniteSeq& t, std::size_t from, std::uint64_t pieces,
                 std::uint64_t level) {
    if (pieces == 0) return from == t.size();
    if (from == t.size()) return false;
    for (std::size_t end = from + 1; end <= t.size(); ++end) {
        if (eps0_level_member(FiniteSeq(t.begin() + from, t.begin() + end), level) &&
            splits_into(t, end, pieces - 1, level)) {
            return true;
        }
    }
    return false;
}

}  // namespace

bool eps0_level_member(const FiniteSeq& s, std::uint64_t level) {
    if (level == 0) return s.size() == 1;
    if (s.empty()) return false;
    return splits_into(s, 1, s[0], level - 1);
}

bool eps0_member(const FiniteSeq& s) {
    if (s.empty()) return false;
    return eps0_level_member(FiniteSeq(s.begin() + 1, s.end()), s[0]);
}

}  // namespace bimk
