#include <doctest.h>

#include <random>
#include <set>
#include <string>

#include "bimk/error.hpp"
#include "bimk/ramsey.hpp"

using namespace bimk;

namespace {

bool even_sum(const FiniteSeq& t) {
    std::uint64_t sum = 0;
    for (std::uint64_t v : t) sum += v;
    return sum % 2 == 0;
}

SetPredicate everything = [](const FiniteSeq&) { return true; };
SetPredicate nothing = [](const FiniteSeq&) { return false; };

}  // namespace

TEST_CASE("binomials and colex ranks walk the subset order") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(4, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    // colex order on 2-subsets of {0..4}
    std::vector<FiniteSeq> colex{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
                                 {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
    for (std::size_t rank = 0; rank < colex.size(); ++rank) {
        CHECK(colex_rank(colex[rank]) == rank);
    }
    CHECK(colex_rank({}) == 0);
    CHECK(colex_rank({7}) == 7);
}

TEST_CASE("homogeneity compares the first eligible extension with later ones") {
    CHECK(is_homogeneous_node({0, 1, 2}, everything, everything, 2));
    // k=1, A = even-sum pairs: extending <0,1,2> by 3 vs 4 flips membership
    SetPredicate A = even_sum;
    CHECK_FALSE(is_homogeneous_node({0, 1, 2}, A, everything, 1));
    // short nodes are vacuously homogeneous
    CHECK(is_homogeneous_node({0, 1}, A, everything, 1));
    CHECK(is_homogeneous_node({}, A, everything, 1));
    CHECK_THROWS_AS(is_homogeneous_node({0, 1, 2}, A, everything, 0), Error);
}

TEST_CASE("the tree grows a single branch when every extension fits") {
    ERTree tree = er_tree_grow(everything, everything, 1, 3);
    std::vector<FiniteSeq> expected{{}, {0}, {0, 1}, {0, 1, 2}};
    CHECK(tree.nodes == expected);
}

TEST_CASE("the even-sum predicate forces the pinned branching") {
    ERTree tree = er_tree_grow(even_sum, everything, 1, 4);
    std::vector<FiniteSeq> expected{{}, {0}, {0, 1}, {0, 2}, {0, 1, 3}};
    CHECK(tree.nodes == expected);
}

TEST_CASE("grown trees stay homogeneous and within the width bound") {
    std::mt19937 rng(160817);
    for (int trial = 0; trial < 10; ++trial) {
        std::uint64_t k = 1 + (trial % 2);
        std::uint64_t salt_a = rng();
        std::uint64_t salt_b = rng();
        SetPredicate A = [salt_a](const FiniteSeq& t) {
            std::uint64_t h = salt_a;
            for (std::uint64_t v : t) h = h * 1099511628211ull + v + 1;
            return (h >> 7) % 2 == 0;
        };
        SetPredicate B = [salt_b](const FiniteSeq& t) {
            std::uint64_t h = salt_b;
            for (std::uint64_t v : t) h = h * 1099511628211ull + v + 1;
            return (h >> 9) % 2 == 0;
        };
        ERTree tree = er_tree_grow(A, B, k, 20);
        std::vector<std::size_t> level_counts(7, 0);
        for (const FiniteSeq& node : tree.nodes) {
            CHECK(is_homogeneous_node(node, A, B, k));
            if (node.size() <= 6) ++level_counts[node.size()];
        }
        for (std::size_t d = 0; d <= 6; ++d) {
            CHECK(Nat(level_counts[d]) <= er_width_bound(d, k));
        }
    }
}

TEST_CASE("width bounds repeat the gamma recursion") {
    std::vector<Nat> k1{1, 1, 4, 64, 4096, 1048576, 1073741824};
    for (std::size_t n = 0; n < k1.size(); ++n) {
        CHECK(er_width_bound(n, 1) == k1[n]);
    }
    std::vector<Nat> k2{1, 1, 1, 4, 256, 1048576, Nat("1099511627776")};
    for (std::size_t n = 0; n < k2.size(); ++n) {
        CHECK(er_width_bound(n, 2) == k2[n]);
    }
}

TEST_CASE("almost-fullness scans windows for escaping tuples") {
    CHECK(almostfull_upto(everything, 2, 4, 3) == std::nullopt);
    CHECK(almostfull_upto(nothing, 2, 4, 3) == FiniteSeq{0, 1, 2});
    // pairs with gap >= 2 catch every 3-window from {0..3}
    SetPredicate gap2 = [](const FiniteSeq& t) {
        return t.size() == 2 && t[1] >= t[0] + 2;
    };
    CHECK(almostfull_upto(gap2, 2, 4, 3) == std::nullopt);
    CHECK_THROWS_AS(almostfull_upto(everything, 3, 4, 2), Error);
}

TEST_CASE("almost-fullness is monotone in the window length") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 20; ++trial) {
        std::uint64_t salt = rng();
        SetPredicate X = [salt](const FiniteSeq& t) {
            std::uint64_t h = salt;
            for (std::uint64_t v : t) h = h * 2654435761ull + v + 17;
            return (h >> 5) % 3 == 0;
        };
        if (almostfull_upto(X, 2, 6, 3) == std::nullopt) {
            CHECK(almostfull_upto(X, 2, 6, 4) == std::nullopt);
        }
    }
}

TEST_CASE("intersection witnesses take the least common subset") {
    CHECK(intersection_witness(everything, everything, 2, 3) == FiniteSeq{0, 1});
    SetPredicate contains0 = [](const FiniteSeq& t) {
        return !t.empty() && t[0] == 0;
    };
    CHECK(intersection_witness(even_sum, contains0, 2, 3) == FiniteSeq{0, 2});
    CHECK(intersection_witness(everything, nothing, 2, 4) == std::nullopt);
}

TEST_CASE("coloring tables validate their shape and answer by colex rank") {
    ColoringTable c = make_coloring(5, 2, 2, {0, 1, 0, 1, 1, 0, 0, 1, 1, 0});
    CHECK(c.color_of({0, 1}) == 0);
    CHECK(c.color_of({0, 2}) == 1);
    CHECK(c.color_of({3, 4}) == 0);
    CHECK_THROWS_AS(c.color_of({1, 0}), Error);
    CHECK_THROWS_AS(c.color_of({0, 5}), Error);
    CHECK_THROWS_AS(c.color_of({0}), Error);
    CHECK_THROWS_AS(make_coloring(5, 2, 2, {0, 1}), Error);
    CHECK_THROWS_AS(make_coloring(5, 2, 2, {0, 1, 0, 1, 1, 0, 0, 1, 1, 2}), Error);
    try {
        make_coloring(4, 2, 2, {0});
        FAIL("expected a domain error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("6") != std::string::npos);
    }
}

TEST_CASE("the pentagon coloring defeats the search for a mono 3-set") {
    ColoringTable pentagon = make_coloring(5, 2, 2, {0, 1, 0, 1, 1, 0, 0, 1, 1, 0});
    CHECK(homog_search(pentagon, 3, false) == std::nullopt);
}

TEST_CASE("single-color tables admit the least tuple immediately") {
    ColoringTable mono = make_coloring(4, 2, 1, std::vector<std::uint64_t>(6, 0));
    CHECK(homog_search(mono, 4, false) == FiniteSeq{0, 1, 2, 3});
    // largeness pushes past tuples shorter than their first entry
    CHECK(homog_search(mono, 2, true) == FiniteSeq{0, 1});
}

TEST_CASE("found witnesses really are monochromatic") {
    ColoringTable c =
        make_coloring(6, 2, 2, {0, 1, 1, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 1});
    auto witness = homog_search(c, 3, false);
    REQUIRE(witness.has_value());
    CHECK(witness->size() >= 3);
    std::uint64_t color = c.color_of({(*witness)[0], (*witness)[1]});
    for (std::size_t i = 0; i < witness->size(); ++i) {
        for (std::size_t j = i + 1; j < witness->size(); ++j) {
            CHECK(c.color_of({(*witness)[i], (*witness)[j]}) == color);
        }
    }
}

TEST_CASE("the sweep confirms six points and refutes five") {
    ColoringSweep six = sweep_colorings(6, 3, 2, 2, false, Nat(1) << 20);
    CHECK(six.all_admit);
    CHECK(six.colorings_checked == 32768);

    ColoringSweep five = sweep_colorings(5, 3, 2, 2, false, Nat(1) << 20);
    CHECK_FALSE(five.all_admit);
    CHECK(five.counterexample ==
          std::vector<std::uint64_t>{0, 0, 1, 1, 0, 1, 1, 1, 0, 0});
    CHECK(five.colorings_checked == 221);
}

TEST_CASE("the sweep refuses budgets it would overrun") {
    try {
        sweep_colorings(6, 3, 2, 2, false, Nat(1000));
        FAIL("expected a domain error");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("budget exceeded") != std::string::npos);
        CHECK(std::string(e.what()).find("M=6") != std::string::npos);
    }
}

TEST_CASE("the large-set threshold scan lands on the pinned witness") {
    CHECK(ph_check(3, 2, 1, 2, Nat(1) << 20));
    CHECK_FALSE(ph_check(2, 2, 1, 2, Nat(1) << 20));
    CHECK_FALSE(ph_check(1, 2, 1, 2, Nat(1) << 20));
    CHECK(ph_check(4, 2, 1, 2, Nat(1) << 20));
    CHECK(ph_min_witness(2, 1, 2, Nat(1) << 20) == 3);
}
