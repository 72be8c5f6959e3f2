#include "bimk/ramsey.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace bimk {

namespace {

// first strictly increasing size-count tuple from {0..limit-1}, or nullopt
std::optional<FiniteSeq> first_combination(std::uint64_t count, std::uint64_t limit) {
    if (count > limit) return std::nullopt;
    FiniteSeq t(count);
    for (std::uint64_t i = 0; i < count; ++i) t[i] = i;
    return t;
}

// lexicographic successor among strictly increasing tuples below limit
bool next_combination(FiniteSeq& t, std::uint64_t limit) {
    std::size_t count = t.size();
    for (std::size_t i = count; i-- > 0;) {
        if (t[i] < limit - count + i) {
            ++t[i];
            for (std::size_t j = i + 1; j < count; ++j) t[j] = t[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

bool is_strictly_increasing(const FiniteSeq& s) {
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] >= s[i + 1]) return false;
    }
    return true;
}

Nat binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    Nat result = 1;
    for (std::uint64_t i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return result;
}

std::size_t colex_rank(const FiniteSeq& t) {
    Nat rank = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        rank += binomial(t[i], static_cast<std::uint64_t>(i) + 1);
    }
    if (rank > std::numeric_limits<std::size_t>::max()) {
        fail_domain("colex rank exceeds addressable range");
    }
    return static_cast<std::size_t>(rank);
}

bool is_homogeneous_node(const FiniteSeq& s, const SetPredicate& A,
                         const SetPredicate& B, std::uint64_t k) {
    if (k == 0) fail_domain("homogeneity arity must be at least 1");
    if (!is_strictly_increasing(s)) fail_domain("node must be strictly increasing");
    if (s.size() < k + 2) return true;
    auto t = first_combination(k, s.size());
    if (!t) return true;
    do {
        FiniteSeq& indices = *t;
        std::uint64_t top = indices[k - 1];
        if (top + 2 > s.size()) continue;  // fewer than two extension positions
        FiniteSeq probe = indices;
        probe.push_back(top + 1);
        FiniteSeq values = compose_along(s, probe);
        bool in_a = A(values);
        bool in_b = B(values);
        for (std::uint64_t i = top + 2; i < s.size(); ++i) {
            probe.back() = i;
            values = compose_along(s, probe);
            if (A(values) != in_a || B(values) != in_b) return false;
        }
    } while (next_combination(*t, s.size()));
    return true;
}

ERTree er_tree_grow(const SetPredicate& A, const SetPredicate& B, std::uint64_t k,
                    std::uint64_t steps) {
    if (steps > (1u << 10)) fail_domain("tree growth cap exceeded");
    ERTree tree;
    tree.k = k;
    tree.nodes.push_back({});
    for (std::uint64_t n = 0; n < steps; ++n) {
        for (std::size_t i = static_cast<std::size_t>(n) + 1; i-- > 0;) {
            FiniteSeq candidate = tree.nodes[i];
            candidate.push_back(n);
            if (is_homogeneous_node(candidate, A, B, k)) {
                tree.nodes.push_back(std::move(candidate));
                break;
            }
        }
    }
    return tree;
}

Nat er_width_bound(std::uint64_t n, std::uint64_t k) {
    Nat gamma = 1;
    for (std::uint64_t step = 0; step < n; ++step) {
        Nat exponent = binomial(step, k);
        if (exponent > 0xffffffffull) fail_domain("width bound exponent too large");
        gamma *= boost::multiprecision::pow(Nat(4),
                                            static_cast<unsigned>(exponent));
    }
    return gamma;
}

std::optional<FiniteSeq> almostfull_upto(const SetPredicate& X, std::uint64_t k,
                                         std::uint64_t N, std::uint64_t L) {
    if (L < k) fail_domain("window length must be at least the arity");
    auto window = first_combination(L, N);
    if (!window) return std::nullopt;
    do {
        bool hit = false;
        auto sub = first_combination(k, L);
        if (sub) {
            do {
                if (X(compose_along(*window, *sub))) {
                    hit = true;
                    break;
                }
            } while (next_combination(*sub, L));
        }
        if (!hit) return *window;
    } while (next_combination(*window, N));
    return std::nullopt;
}

std::optional<FiniteSeq> intersection_witness(const SetPredicate& X,
                                              const SetPredicate& Y, std::uint64_t k,
                                              std::uint64_t N) {
    auto s = first_combination(k, N);
    if (!s) return std::nullopt;
    do {
        if (X(*s) && Y(*s)) return *s;
    } while (next_combination(*s, N));
    return std::nullopt;
}

std::uint64_t ColoringTable::color_of(const FiniteSeq& values) const {
    if (values.size() != arity) fail_domain("coloring lookup with wrong arity");
    if (!is_strictly_increasing(values) ||
        (!values.empty() && values.back() >= universe)) {
        fail_domain("coloring lookup outside the universe");
    }
    return assignment[colex_rank(values)];
}

ColoringTable make_coloring(std::uint64_t M, std::uint64_t k, std::uint64_t r,
                            std::vector<std::uint64_t> assignment) {
    if (k == 0 || r == 0) fail_domain("coloring needs arity and colors at least 1");
    Nat expected = binomial(M, k);
    if (Nat(assignment.size()) != expected) {
        fail_domain("assignment length must be C(M,k) = " + expected.str());
    }
    for (std::uint64_t color : assignment) {
        if (color >= r) fail_domain("assignment value outside the color range");
    }
    ColoringTable c;
    c.universe = M;
    c.arity = k;
    c.colors = r;
    c.assignment = std::move(assignment);
    return c;
}

std::optional<FiniteSeq> homog_search(const ColoringTable& c, std::uint64_t n,
                                      bool large) {
    for (std::uint64_t l = n; l <= c.universe; ++l) {
        auto s = first_combination(l, c.universe);
        if (!s) continue;
        do {
            if (large && l < (*s)[0]) continue;
            bool mono = true;
            auto sub = first_combination(c.arity, l);
            if (sub) {
                std::optional<std::uint64_t> color;
                do {
                    std::uint64_t here = c.color_of(compose_along(*s, *sub));
                    if (!color) {
                        color = here;
                    } else if (*color != here) {
                        mono = false;
                        break;
                    }
                } while (next_combination(*sub, l));
            }
            if (mono) return *s;
        } while (next_combination(*s, c.universe));
    }
    return std::nullopt;
}

ColoringSweep sweep_colorings(std::uint64_t M, std::uint64_t n, std::uint64_t k,
                              std::uint64_t r, bool large, const Nat& budget) {
    if (k == 0 || r == 0) fail_domain("sweep needs arity and colors at least 1");
    Nat subsets = binomial(M, k);
    if (subsets > (1u << 20)) fail_domain("too many k-subsets to tabulate");
    std::size_t slots = static_cast<std::size_t>(subsets);
    // exact count of colorings, compared against the budget before any work
    Nat total = 1;
    for (std::size_t i = 0; i < slots; ++i) {
        total *= r;
        if (total > budget) {
            fail_domain("coloring budget exceeded: M=" + std::to_string(M) +
                        " needs more than " + budget.str() + " colorings");
        }
    }
    ColoringSweep sweep;
    std::vector<std::uint64_t> assignment(slots, 0);
    while (true) {
        sweep.colorings_checked += 1;
        ColoringTable table = make_coloring(M, k, r, assignment);
        if (!homog_search(table, n, large)) {
            sweep.all_admit = false;
            sweep.counterexample = assignment;
            return sweep;
        }
        // odometer increment, last slot fastest
        std::size_t at = slots;
        while (at-- > 0) {
            if (++assignment[at] < r) break;
            assignment[at] = 0;
            if (at == 0) return sweep;
        }
        if (slots == 0) return sweep;
    }
}

bool ph_check(std::uint64_t M, std::uint64_t n, std::uint64_t k, std::uint64_t r,
              const Nat& budget) {
    return sweep_colorings(M, n, k, r, true, budget).all_admit;
}

std::uint64_t ph_min_witness(std::uint64_t n, std::uint64_t k, std::uint64_t r,
                             const Nat& budget) {
    for (std::uint64_t M = 1;; ++M) {
        if (ph_check(M, n, k, r, budget)) return M;
    }
}

}  // namespace bimk
