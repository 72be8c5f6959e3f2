#include <doctest.h>

#include <algorithm>

#include "bimk/codes.hpp"
#include "bimk/error.hpp"
#include "bimk/orders.hpp"

using namespace bimk;

TEST_CASE("lex comparison decides at the first differing common position") {
    CHECK(lex_cmp({0, 1}, {0, 2}) == OrderVerdict::LessThan);
    CHECK(lex_cmp({0, 2}, {0, 1}) == OrderVerdict::GreaterThan);
    CHECK(lex_cmp({0}, {0, 1}) == OrderVerdict::Incomparable);
    CHECK(lex_cmp({0, 1}, {0}) == OrderVerdict::Incomparable);
    CHECK(lex_cmp({}, {}) == OrderVerdict::Equal);
    CHECK(lex_cmp({3, 4}, {3, 4}) == OrderVerdict::Equal);
}

TEST_CASE("KB comparison sorts extensions below their prefixes") {
    CHECK(kb_cmp({0, 1}, {0}) == OrderVerdict::LessThan);
    CHECK(kb_cmp({0}, {1}) == OrderVerdict::LessThan);
    CHECK(kb_cmp({}, {5}) == OrderVerdict::GreaterThan);
    CHECK(kb_cmp({2}, {2}) == OrderVerdict::Equal);
}

TEST_CASE("KB is a total order on the first 300 codes") {
    std::vector<FiniteSeq> seqs;
    for (std::uint64_t a = 0; a < 300; ++a) seqs.push_back(decode_seq(Nat(a)));
    for (const FiniteSeq& a : seqs) {
        for (const FiniteSeq& b : seqs) {
            OrderVerdict ab = kb_cmp(a, b);
            OrderVerdict ba = kb_cmp(b, a);
            CHECK(ab != OrderVerdict::Incomparable);
            if (ab == OrderVerdict::Equal) {
                CHECK(a == b);
                CHECK(ba == OrderVerdict::Equal);
            } else if (ab == OrderVerdict::LessThan) {
                CHECK(ba == OrderVerdict::GreaterThan);
            } else {
                CHECK(ba == OrderVerdict::LessThan);
            }
        }
    }
}

TEST_CASE("KB is transitive on the first 120 codes") {
    std::vector<FiniteSeq> seqs;
    for (std::uint64_t a = 0; a < 120; ++a) seqs.push_back(decode_seq(Nat(a)));
    for (const FiniteSeq& a : seqs) {
        for (const FiniteSeq& b : seqs) {
            if (kb_cmp(a, b) != OrderVerdict::LessThan) continue;
            for (const FiniteSeq& c : seqs) {
                if (kb_cmp(b, c) == OrderVerdict::LessThan) {
                    CHECK(kb_cmp(a, c) == OrderVerdict::LessThan);
                }
            }
        }
    }
}

TEST_CASE("bar tables sort members and reject overlong ones") {
    BarTable bar = make_bar({{1, 0}, {0}, {1, 1}}, 2);
    CHECK(bar.members == std::vector<FiniteSeq>{{0}, {1, 0}, {1, 1}});
    CHECK(bar.depth_horizon == 2);
    CHECK(bar_member(bar, {1, 0}));
    CHECK_FALSE(bar_member(bar, {1}));
    CHECK_THROWS_AS(make_bar({{0, 0, 0}}, 2), Error);
}

TEST_CASE("below holds exactly when no prefix lies in the bar") {
    BarTable bar = make_bar({{1}}, 2);
    CHECK(below(bar, {0, 0}));
    CHECK_FALSE(below(bar, {1, 0}));
    BarTable root = make_bar({FiniteSeq{}}, 2);
    CHECK_FALSE(below(root, {0}));
    CHECK_FALSE(below(root, {}));
    CHECK_THROWS_AS(below(bar, {0, 0, 0}), Error);
}

TEST_CASE("descent checking reports the first broken step") {
    CHECK(check_descending({{2}, {1}, {0}}, ChainOrder::kb, std::nullopt) ==
          std::nullopt);
    CHECK(check_descending({{0}, {0, 0}, {0, 0, 0}}, ChainOrder::kb, std::nullopt) ==
          std::nullopt);
    CHECK(check_descending({{0}, {1}}, ChainOrder::kb, std::nullopt) == 0);
    CHECK(check_descending({{2}, {1}, {1}}, ChainOrder::kb, std::nullopt) == 1);
    // an empty or singleton chain descends vacuously
    CHECK(check_descending({}, ChainOrder::kb, std::nullopt) == std::nullopt);
    CHECK(check_descending({{5}}, ChainOrder::kb, std::nullopt) == std::nullopt);
}

TEST_CASE("descent checking also polices the bar fence") {
    BarTable bar = make_bar({{0}}, 3);
    // <1,2> and <1,1> stay below the bar, <0> does not
    CHECK(check_descending({{1, 2}, {1, 1}, {0}}, ChainOrder::kb, bar) == 2);
    CHECK(check_descending({{1, 2}, {1, 1}}, ChainOrder::kb, bar) == std::nullopt);
}

TEST_CASE("one tower step over singleton bars produces the pinned members") {
    std::vector<FiniteSeq> omega;
    for (std::uint64_t k = 0; k < 8; ++k) omega.push_back({k});
    BarTable step = thinbar_phi(make_bar(omega, 1), 3);
    // members <n>*t with t a concatenation of n singletons, total length <= 3
    CHECK(step.members.size() == 73);
    CHECK(bar_member(step, {0}));
    CHECK(bar_member(step, {1, 5}));
    CHECK(bar_member(step, {2, 5, 7}));
    CHECK_FALSE(bar_member(step, {2, 5}));
    CHECK(step.thin.has_value());
    CHECK(*step.thin);
}

TEST_CASE("a root bar steps to the pure length-one fan") {
    BarTable step = thinbar_phi(make_bar({FiniteSeq{}}, 0), 4);
    std::vector<FiniteSeq> expected{{0}, {1}, {2}, {3}};
    CHECK(step.members == expected);
}

TEST_CASE("tower steps preserve thinness") {
    BarTable mixed = make_bar({{0}, {1, 0}, {1, 1}}, 2);
    CHECK(bar_is_thin(mixed));
    BarTable step = thinbar_phi(mixed, 4);
    CHECK(bar_is_thin(step));
}

TEST_CASE("materialized tower levels match the lazy membership test") {
    BarTable level1 = epsilon0_level(1, 4);
    CHECK(level1.members.size() == 85);
    for (const FiniteSeq& s : level1.members) {
        CHECK(eps0_level_member(s, 1));
    }
    CHECK_FALSE(eps0_level_member({2, 5}, 1));
    CHECK(eps0_level_member({2, 5, 7}, 1));
    CHECK_THROWS_AS(epsilon0_level(4, 2), Error);
}

TEST_CASE("lazy level membership follows the split rule") {
    CHECK(eps0_level_member({0}, 1));
    CHECK(eps0_level_member({1, 9}, 1));
    CHECK_FALSE(eps0_level_member({2, 5}, 1));
    CHECK(eps0_level_member({0}, 2));
    CHECK(eps0_level_member({1, 0}, 2));
    CHECK_FALSE(eps0_level_member({1, 1}, 2));
    CHECK(eps0_level_member({2, 0, 1, 9}, 2));
    CHECK(eps0_level_member({1, 2, 5, 7}, 2));
}

TEST_CASE("diagonal membership peels the head as the level") {
    CHECK(eps0_member({0, 7}));
    CHECK(eps0_member({1, 1, 0}));
    CHECK_FALSE(eps0_member({2, 5, 7}));
    CHECK_FALSE(eps0_member({0}));
    CHECK_FALSE(eps0_member({}));
}
