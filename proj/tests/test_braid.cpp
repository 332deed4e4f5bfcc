#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>

#include "braidtrace/braid.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace braidtrace;

TEST_CASE("parse and print round trip") {
    CHECK(to_string(parse_word("1 -2 3")) == "1 -2 3");
    CHECK(to_string(parse_word("  1   -2\t3 ")) == "1 -2 3");
    CHECK(parse_word("2 -1").n() == 3);     // inferred: max index + 1
    CHECK(parse_word("2 -1", 5).n() == 5);  // explicit strand count kept
    CHECK(parse_word("1 -2 3").length() == 3);
    const BraidWord w = parse_word("-2");
    CHECK(w.at(0).index == 2);
    CHECK(w.at(0).sign == -1);
}

TEST_CASE("parse rejects malformed words") {
    CHECK_THROWS_AS(parse_word("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("1 x 2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("3", 3), std::invalid_argument);  // index needs n >= 4
    CHECK_THROWS_AS(parse_word("", 0), std::invalid_argument);   // no letters, no n
    CHECK_THROWS_AS(parse_word("1", 1), std::invalid_argument);  // n too small
}

TEST_CASE("permutation matches the strand-by-strand oracle") {
    std::mt19937 rng(1001);
    for (int trial = 0; trial < 200; ++trial) {
        const BraidWord w = corpus::random_knot_word(rng, 6, 12);
        CHECK(permutation(w) == oracles::permutation_oracle(w));
    }
}

TEST_CASE("knot detection") {
    CHECK(is_knot(parse_word("1", 2)));
    CHECK_FALSE(is_knot(parse_word("1 1", 2)));  // two-component closure
    CHECK(is_knot(parse_word("1 2", 3)));
    CHECK(is_knot(parse_word("2 -1", 3)));
    CHECK_FALSE(is_knot(parse_word("1 -1", 3)));  // trivial strand splits off
    CHECK(is_knot(parse_word("-1 2 -1 -1 -1 2 2 2", 3)));
}

TEST_CASE("half twist word") {
    CHECK(to_string(garside_word(2)) == "1");
    CHECK(to_string(garside_word(3)) == "1 2 1");
    CHECK(to_string(garside_word(4)) == "1 2 1 3 2 1");
    for (int n = 2; n <= 7; ++n) {
        const BraidWord half = garside_word(n);
        CHECK(half.length() == n * (n - 1) / 2);
        // Its permutation is the order reversal.
        const std::vector<int> perm = permutation(half);
        for (int k = 0; k < n; ++k) CHECK(perm[static_cast<size_t>(k)] == n - 1 - k);
    }
}

TEST_CASE("word transforms") {
    const BraidWord w = parse_word("1 -2", 3);
    CHECK(to_string(transform(w, Transform::flip)) == "2 -1");
    CHECK(to_string(transform(w, Transform::reverse)) == "-2 1");
    CHECK(to_string(transform(w, Transform::inverse)) == "2 -1");

    std::mt19937 rng(1002);
    for (int trial = 0; trial < 50; ++trial) {
        const BraidWord word = corpus::random_knot_word(rng, 6, 10);
        for (Transform t : {Transform::flip, Transform::reverse, Transform::inverse})
            CHECK(to_string(transform(transform(word, t), t)) == to_string(word));
        // flip and reverse commute; their composite is the inverse of
        // the inverse-transform's flip-reverse, so sanity-check length.
        CHECK(transform(word, Transform::flip).length() == word.length());
    }
}

TEST_CASE("cyclic shift") {
    const BraidWord w = parse_word("1 2 3");
    CHECK(to_string(cyclic_shift(w, 1)) == "2 3 1");
    CHECK(to_string(cyclic_shift(w, 2)) == "3 1 2");
    CHECK(to_string(cyclic_shift(w, 0)) == "1 2 3");
    CHECK_THROWS_AS(cyclic_shift(w, 3), std::invalid_argument);  // offsets run 0..length-1
    CHECK_THROWS_AS(cyclic_shift(w, -1), std::invalid_argument);
}

TEST_CASE("cable words") {
    // Frozen base case of the two-cable family.
    CHECK(to_string(cable(parse_word("1", 2), 2, 1)) == "2 3 1 2 1");
    CHECK(to_string(cable(parse_word("1", 2), 2, 0)) == "2 3 1 2");
    const BraidWord cabled = cable(parse_word("1", 2), 2, 1);
    CHECK(cabled.n() == 4);
    CHECK(is_knot(cabled));
    // A two-cable of a knot closes to a knot exactly for odd twist counts.
    CHECK_FALSE(is_knot(cable(parse_word("1", 2), 2, 2)));
    CHECK(is_knot(cable(parse_word("2 -1", 3), 2, -1)));
}
