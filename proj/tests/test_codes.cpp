#include <doctest.h>

#include "bimk/codes.hpp"
#include "bimk/error.hpp"

using namespace bimk;

TEST_CASE("encode maps pinned sequences to pinned numerals") {
    CHECK(encode_seq({}) == 0);
    CHECK(encode_seq({0}) == 1);
    CHECK(encode_seq({1}) == 3);
    CHECK(encode_seq({0, 1}) == 8);
    CHECK(encode_seq({1, 2}) == 53);
    CHECK(encode_seq({1, 2, 3}) == 11249);
    CHECK(encode_seq({2, 5, 7}) == 379687499);
}

TEST_CASE("decode maps pinned numerals to pinned sequences") {
    CHECK(decode_seq(0) == FiniteSeq{});
    CHECK(decode_seq(8) == FiniteSeq{0, 1});
    CHECK(decode_seq(4) == FiniteSeq{0, 0, 0});
    CHECK(decode_seq(53) == FiniteSeq{1, 2});
    CHECK(decode_seq(13) == FiniteSeq{1, 0, 0, 0});
}

TEST_CASE("every natural below 10^4 decodes and re-encodes to itself") {
    for (std::uint64_t a = 0; a < 10000; ++a) {
        CHECK(encode_seq(decode_seq(Nat(a))) == a);
    }
}

TEST_CASE("every short sequence encodes and re-decodes to itself") {
    // all lengths <= 4 with entries <= 4
    std::vector<FiniteSeq> pool{FiniteSeq{}};
    for (int len = 0; len < 4; ++len) {
        std::vector<FiniteSeq> next;
        for (const FiniteSeq& s : pool) {
            if (s.size() == static_cast<std::size_t>(len)) {
                for (std::uint64_t e = 0; e <= 4; ++e) {
                    FiniteSeq t = s;
                    t.push_back(e);
                    next.push_back(t);
                }
            }
        }
        pool.insert(pool.end(), next.begin(), next.end());
    }
    for (const FiniteSeq& s : pool) {
        CHECK(decode_seq(encode_seq(s)) == s);
    }
}

TEST_CASE("seq_at reads entries and defaults to zero past the end") {
    FiniteSeq s{7, 0, 3};
    CHECK(seq_at(s, 0) == 7);
    CHECK(seq_at(s, 2) == 3);
    CHECK(seq_at(s, 3) == 0);
    CHECK(seq_at(s, 100) == 0);
}

TEST_CASE("concat and initial follow the list operations") {
    CHECK(concat({1}, {2, 3}) == FiniteSeq{1, 2, 3});
    CHECK(concat({}, {}) == FiniteSeq{});
    CHECK(initial({1, 2, 3}, 2) == FiniteSeq{1, 2});
    CHECK(initial({1, 2, 3}, 0) == FiniteSeq{});
    CHECK(initial({1, 2, 3}, 3) == FiniteSeq{1, 2, 3});
    CHECK_THROWS_AS(initial({1, 2, 3}, 4), Error);
}

TEST_CASE("prefix relations distinguish proper prefixes") {
    CHECK(is_initial({1}, {1, 2}));
    CHECK(is_initial({1, 2}, {1, 2}));
    CHECK_FALSE(is_initial({2}, {1, 2}));
    CHECK(proper_initial({1}, {1, 2}));
    CHECK_FALSE(proper_initial({1, 2}, {1, 2}));
}

TEST_CASE("differ_before needs a differing position inside both sequences") {
    CHECK(differ_before({1, 2}, {1, 3}, 2));
    CHECK(differ_before({1}, {2, 3}, 1));
    // position 1 is outside the length of <1>, so no witness below 2
    CHECK_FALSE(differ_before({1}, {1, 3}, 2));
    CHECK_FALSE(differ_before({1, 2}, {1, 3}, 1));
    CHECK(agree_to({1, 2}, {1, 3}, 1));
    CHECK_FALSE(agree_to({1, 2}, {1, 3}, 2));
}

TEST_CASE("pairing follows the diagonal walk and inverts") {
    CHECK(pair_code(0, 0) == 0);
    CHECK(pair_code(1, 2) == 8);
    CHECK(pair_code(3, 4) == 32);
    CHECK(unpair_code(8) == std::pair<Nat, Nat>(1, 2));
    CHECK(unpair_code(24) == std::pair<Nat, Nat>(3, 3));
    for (std::uint64_t c = 0; c < 10000; ++c) {
        auto [m, n] = unpair_code(Nat(c));
        CHECK(pair_code(m, n) == c);
    }
}

TEST_CASE("is_bin accepts exactly the 0/1 sequences") {
    CHECK(is_bin({0, 1, 1}));
    CHECK(is_bin({}));
    CHECK_FALSE(is_bin({2}));
    CHECK_FALSE(is_bin({0, 1, 2}));
}

TEST_CASE("compose_along picks table entries by index") {
    CHECK(compose_along({5, 7, 9}, {2, 0}) == FiniteSeq{9, 5});
    CHECK(compose_along({5, 7, 9}, {}) == FiniteSeq{});
    CHECK_THROWS_AS(compose_along({5, 7, 9}, {3}), Error);
}

TEST_CASE("decided prefixes answer inside the horizon and refuse outside") {
    SetPrefix p;
    p.mode = SetPrefix::Mode::decided;
    p.table = {1, 0, 1};
    CHECK(p.horizon() == 3);
    CHECK(p.contains(0));
    CHECK_FALSE(p.contains(1));
    CHECK(p.contains(2));
    CHECK_THROWS_AS(p.contains(3), Error);
}

TEST_CASE("enumerated prefixes list members shifted by one, zero for gaps") {
    SetPrefix p;
    p.mode = SetPrefix::Mode::enumerated;
    p.table = {3, 0, 1};  // enumerates members 2 and 0
    CHECK(p.contains(2));
    CHECK(p.contains(0));
    CHECK_FALSE(p.contains(1));
    CHECK_FALSE(p.contains(5));
}
