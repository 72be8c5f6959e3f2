#include <doctest.h>

#include <random>
#include <string>

#include "bimk/error.hpp"
#include "bimk/spreads.hpp"

using namespace bimk;

namespace {

Rat rq(long long num, long long den) { return rat_of(num, den); }

LawTable full_binary_law(std::uint64_t depth) {
    std::vector<FiniteSeq> admitted{FiniteSeq{}};
    std::vector<FiniteSeq> frontier{FiniteSeq{}};
    for (std::uint64_t level = 0; level < depth; ++level) {
        std::vector<FiniteSeq> next;
        for (const FiniteSeq& s : frontier) {
            for (std::uint64_t b = 0; b < 2; ++b) {
                FiniteSeq t = s;
                t.push_back(b);
                admitted.push_back(t);
                next.push_back(t);
            }
        }
        frontier = std::move(next);
    }
    return make_law(std::move(admitted), depth, 2);
}

}  // namespace

TEST_CASE("the full binary table classifies as a fan with doubling levels") {
    LawVerdict v = law_classify(full_binary_law(3));
    CHECK(v.kind == LawVerdict::Kind::fan);
    CHECK(v.child_bound == 2);
    CHECK(v.level_counts == std::vector<std::uint64_t>{1, 2, 4, 8});
}

TEST_CASE("a childless admitted node breaks the spread condition") {
    LawTable stub = make_law({FiniteSeq{}, {0}}, 2, 2);
    LawVerdict v = law_classify(stub);
    CHECK(v.kind == LawVerdict::Kind::not_spread);
    CHECK(v.witness == FiniteSeq{0});

    LawTable rootless = make_law({{0}}, 1, 2);
    LawVerdict r = law_classify(rootless);
    CHECK(r.kind == LawVerdict::Kind::not_spread);
    CHECK(r.witness == FiniteSeq{});
}

TEST_CASE("an orphan child also breaks the spread biconditional") {
    // <1,0> is admitted but its parent <1> is not
    LawTable orphan = make_law({FiniteSeq{}, {0}, {0, 0}, {1, 0}}, 2, 2);
    LawVerdict v = law_classify(orphan);
    CHECK(v.kind == LawVerdict::Kind::not_spread);
    CHECK(v.witness == FiniteSeq{1});
}

TEST_CASE("everything-within-width tables are fans with that child bound") {
    std::vector<FiniteSeq> admitted{FiniteSeq{}};
    for (std::uint64_t a = 0; a < 3; ++a) {
        admitted.push_back({a});
        for (std::uint64_t b = 0; b < 3; ++b) admitted.push_back({a, b});
    }
    LawVerdict v = law_classify(make_law(std::move(admitted), 2, 3));
    CHECK(v.kind == LawVerdict::Kind::fan);
    CHECK(v.child_bound == 3);
    CHECK(v.level_counts == std::vector<std::uint64_t>{1, 3, 9});
}

TEST_CASE("bar checking walks every admitted path to the horizon") {
    LawTable law = full_binary_law(2);
    CHECK(bar_check(law, make_bar({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, 2)));
    CHECK(bar_check(law, make_bar({{0}, {1}}, 1)));
    CHECK_FALSE(bar_check(law, make_bar({{0}}, 1)));  // <1,...> escapes
    CHECK(bar_check(law, make_bar({FiniteSeq{}}, 0)));
    CHECK_THROWS_AS(bar_check(law, make_bar({{0, 0, 0}}, 3)), Error);
}

TEST_CASE("thinness rejects prefix pairs among members") {
    CHECK(thin_check(make_bar({{0}, {1, 0}}, 2)));
    CHECK_FALSE(thin_check(make_bar({{0}, {0, 1}}, 2)));
    CHECK(thin_check(make_bar({FiniteSeq{}}, 1)));
}

TEST_CASE("the fan embedding turns entries into zero runs") {
    CHECK(embed_fan_to_cantor({2}) == FiniteSeq{0, 0, 1});
    CHECK(embed_fan_to_cantor({1, 0}) == FiniteSeq{0, 1, 1});
    CHECK(embed_fan_to_cantor({}) == FiniteSeq{});
}

TEST_CASE("the fan embedding is injective and monotone on prefixes") {
    std::vector<FiniteSeq> pool{FiniteSeq{}};
    for (int len = 0; len < 4; ++len) {
        std::size_t from = 0, to = pool.size();
        for (std::size_t i = from; i < to; ++i) {
            if (pool[i].size() != static_cast<std::size_t>(len)) continue;
            for (std::uint64_t e = 0; e < 4; ++e) {
                FiniteSeq t = pool[i];
                t.push_back(e);
                pool.push_back(t);
            }
        }
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        FiniteSeq ei = embed_fan_to_cantor(pool[i]);
        for (std::size_t j = i + 1; j < pool.size(); ++j) {
            CHECK(ei != embed_fan_to_cantor(pool[j]));
        }
        FiniteSeq extended = pool[i];
        extended.push_back(1);
        FiniteSeq img = embed_fan_to_cantor(extended);
        CHECK(std::equal(ei.begin(), ei.end(), img.begin()));
    }
}

TEST_CASE("the fan embedding reverses the lex order on comparable pairs") {
    std::vector<FiniteSeq> pool;
    for (std::uint64_t a = 0; a < 4; ++a) {
        for (std::uint64_t b = 0; b < 4; ++b) {
            pool.push_back({a, b});
            for (std::uint64_t c = 0; c < 4; ++c) pool.push_back({a, b, c});
        }
    }
    for (const FiniteSeq& s : pool) {
        for (const FiniteSeq& t : pool) {
            if (lex_cmp(s, t) != OrderVerdict::LessThan) continue;
            FiniteSeq es = embed_fan_to_cantor(s);
            FiniteSeq et = embed_fan_to_cantor(t);
            OrderVerdict image = lex_cmp(es, et);
            if (image == OrderVerdict::Incomparable) continue;
            CHECK(image == OrderVerdict::GreaterThan);
        }
    }
}

TEST_CASE("sibling-count embedding counts admitted younger siblings") {
    std::vector<FiniteSeq> evens{FiniteSeq{}};
    for (std::uint64_t a = 0; a < 5; ++a) {
        if (a % 2 == 0) evens.push_back({a});
    }
    LawTable law = make_law(std::move(evens), 1, 5);
    CHECK(embed_sibling_count(law, {4}) == FiniteSeq{0, 0, 1});
    CHECK(embed_sibling_count(law, {0}) == FiniteSeq{1});
    CHECK(embed_sibling_count(law, {}) == FiniteSeq{});
    CHECK_THROWS_AS(embed_sibling_count(law, {3}), Error);
}

TEST_CASE("on the full binary law the sibling embedding is the fan embedding") {
    LawTable law = full_binary_law(3);
    std::vector<FiniteSeq> samples{{0}, {1}, {0, 1}, {1, 1, 0}, {1, 0, 1}};
    for (const FiniteSeq& s : samples) {
        CHECK(embed_sibling_count(law, s) == embed_fan_to_cantor(s));
    }
}

TEST_CASE("the shift embedding pads every run and never doubles a one") {
    CHECK(tau_embed({0}) == FiniteSeq{0, 1});
    CHECK(tau_embed({1, 0}) == FiniteSeq{0, 0, 1, 0, 1});
    FiniteSeq image = tau_embed({1, 1, 1});
    CHECK(image == FiniteSeq{0, 0, 1, 0, 0, 1, 0, 0, 1});
    for (std::size_t i = 0; i + 1 < image.size(); ++i) {
        CHECK((image[i] == 0 || image[i + 1] == 0));
    }
    // binary inputs stretch by at most a factor of three
    std::vector<FiniteSeq> bins{{0}, {1}, {0, 1}, {1, 1}, {0, 0, 1}, {1, 1, 1, 0}};
    for (const FiniteSeq& s : bins) {
        CHECK(tau_embed(s).size() <= 3 * s.size());
    }
}

TEST_CASE("dyadic approximation picks the least code in the window") {
    CHECK(bin_approx(rq(1, 3), 2) == FiniteSeq{0, 1});
    CHECK(bin_approx(rq(1, 2), 1) == FiniteSeq{0});
    CHECK(bin_approx(rq(0, 1), 3) == FiniteSeq{0, 0, 0});
    CHECK(bin_approx(rq(2, 3), 4) == FiniteSeq{1, 0, 1, 0});
    CHECK(bin_approx(rq(1, 1), 2) == FiniteSeq{1, 1});
    CHECK_THROWS_AS(bin_approx(rq(3, 2), 2), Error);
    CHECK_THROWS_AS(bin_approx(rq(-1, 2), 2), Error);
}

TEST_CASE("dyadic approximations stay within the shrinking window") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long long> num(0, 16);
    for (int trial = 0; trial < 100; ++trial) {
        long long n = num(rng);
        Rat q = rq(n, 16);
        FiniteSeq a = bin_approx(q, 5);
        Rat partial = rq(0, 1);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 1) partial = rat_add(partial, pow2_rat(-(long long)(i + 1)));
        }
        CHECK(rat_le(partial, q));
        CHECK(rat_le(q, rat_add(partial, pow2_rat(-5))));
    }
}

TEST_CASE("the one-fifth sum separates binary codes") {
    CHECK(rat_eq(rat_of_bin({}), rq(0, 1)));
    CHECK(rat_eq(rat_of_bin({1}), rq(3, 5)));
    CHECK(rat_eq(rat_of_bin({0, 1}), rq(8, 25)));
    CHECK(rat_eq(rat_of_bin({0, 1}, RatOfBinBase::i), rq(8, 5)));
    // distinct codes of one length land at least 1/5^len apart
    for (std::uint64_t len = 1; len <= 5; ++len) {
        std::vector<Rat> values;
        for (std::uint64_t code = 0; code < (std::uint64_t(1) << len); ++code) {
            FiniteSeq s;
            for (std::uint64_t bit = len; bit-- > 0;) s.push_back((code >> bit) & 1);
            values.push_back(rat_of_bin(s));
        }
        Rat gap = make_rat(int_of(1), int_of(1));
        for (std::uint64_t i = 0; i < len; ++i) gap = rat_mul(gap, rq(1, 5));
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = i + 1; j < values.size(); ++j) {
                Rat diff = rat_sub(values[i], values[j]);
                if (rat_lt(diff, rq(0, 1))) diff = rat_sub(values[j], values[i]);
                CHECK(rat_le(gap, diff));
            }
        }
    }
}

TEST_CASE("jump search returns the least strict threshold crossing") {
    std::vector<Rat> alternating{rq(0, 1), rq(1, 1), rq(0, 1), rq(1, 1), rq(0, 1)};
    CHECK(find_jump(alternating, {0, 1, 2, 3, 4}) == 1);

    std::vector<Rat> constant{rq(1, 2), rq(1, 2), rq(1, 2)};
    CHECK(find_jump(constant, {0, 1, 2}) == std::nullopt);

    std::vector<Rat> halving{rq(1, 1), rq(1, 2), rq(1, 4), rq(1, 8)};
    CHECK(find_jump(halving, {0, 1, 2, 3}) == std::nullopt);
}

TEST_CASE("schedules must increase strictly and stay in range") {
    std::vector<Rat> values{rq(0, 1), rq(1, 1), rq(0, 1)};
    CHECK_THROWS_AS(find_jump(values, {0, 0, 1}), Error);
    CHECK_THROWS_AS(find_jump(values, {0, 1, 5}), Error);
    CHECK_THROWS_AS(find_jump(values, {2, 1}), Error);
}

TEST_CASE("modulus jumps need a disagreement before the step index") {
    // a jump at n wants positions below n to disagree, so n = 0 is vacuous
    std::vector<FiniteSeq> seqs{{0, 0}, {1, 0}, {0, 0}};
    CHECK(find_mod_jump(seqs, {0, 1, 2}) == 1);
    // disagreements that arrive at position n or later never count
    std::vector<FiniteSeq> stable{{0, 0, 0}, {0, 0, 1}, {0, 1, 1}};
    CHECK(find_mod_jump(stable, {0, 1, 2}) == std::nullopt);
}
