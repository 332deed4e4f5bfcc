#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>

#include "braidtrace/loop.hpp"
#include "corpus.hpp"
#include "doctest.h"

using namespace braidtrace;

namespace {

int count_kind(const LoopTranscript& tr, MoveKind kind) {
    int count = 0;
    for (const MoveEvent& ev : tr.events) count += ev.kind == kind ? 1 : 0;
    return count;
}

}  // namespace

TEST_CASE("triple move count law") {
    std::mt19937 rng(3001);
    for (int trial = 0; trial < 25; ++trial) {
        const BraidWord w = corpus::random_knot_word(rng, 6, 10);
        for (int l = 1; l <= 2; ++l) {
            const LoopTranscript tr = canonical_loop(w, l);
            CHECK(count_kind(tr, MoveKind::r3) == 2 * w.length() * (w.n() - 2) * l);
        }
    }
    CHECK(count_kind(canonical_loop(parse_word("1", 2), 1), MoveKind::r3) == 0);
    CHECK(count_kind(canonical_loop(parse_word("2 -1", 3), 1), MoveKind::r3) == 4);
    CHECK(count_kind(canonical_loop(parse_word("-1 2 -1 -1 -1 2 2 2", 3), 3), MoveKind::r3) == 48);
}

TEST_CASE("birth and death budgets") {
    std::mt19937 rng(3002);
    for (int trial = 0; trial < 20; ++trial) {
        const BraidWord w = corpus::random_knot_word(rng, 5, 9);
        const int l = 1 + trial % 2;
        const LoopTranscript tr = canonical_loop(w, l);
        const int L = w.n() * (w.n() - 1) / 2;
        int negatives = 0;
        for (int p = 0; p < w.length(); ++p) negatives += w.at(p).sign < 0 ? 1 : 0;
        const int births = count_kind(tr, MoveKind::r2birth);
        CHECK(births == count_kind(tr, MoveKind::r2death));  // exactly c crossings survive
        CHECK(births == l * (2 * L + 2 * negatives));
        CHECK(tr.id_count == w.length() + 2 * births);
    }
}

TEST_CASE("triple moves only ever touch positive letters") {
    std::mt19937 rng(3003);
    for (int trial = 0; trial < 15; ++trial) {
        const BraidWord w = corpus::random_knot_word(rng, 6, 9);
        const LoopTranscript tr = canonical_loop(w, 1 + trial % 2);
        for (const MoveEvent& ev : tr.events) {
            if (ev.kind != MoveKind::r3) continue;
            for (int k = 0; k < 3; ++k)
                CHECK(ev.word_before.letters[static_cast<size_t>(ev.position + k)].sign == +1);
        }
    }
}

TEST_CASE("events chain and the word returns after every rotation") {
    std::mt19937 rng(3004);
    for (int trial = 0; trial < 10; ++trial) {
        const BraidWord w = corpus::random_knot_word(rng, 5, 8);
        const int l = 1 + trial % 3;
        const LoopTranscript tr = canonical_loop(w, l);
        CHECK(static_cast<int>(tr.boundary_words.size()) == l + 1);
        for (const IdWord& bw : tr.boundary_words)
            CHECK(to_string(values_of(bw)) == to_string(w));
        for (size_t k = 0; k < tr.initial.letters.size(); ++k)
            CHECK(tr.initial.letters[k].id == static_cast<int>(k));
        for (size_t k = 0; k + 1 < tr.events.size(); ++k)
            CHECK(tr.events[k].word_after == tr.events[k + 1].word_before);
        // Length bound: the working word never exceeds c + n(n-1).
        for (const MoveEvent& ev : tr.events)
            CHECK(static_cast<int>(ev.word_after.letters.size()) <=
                  w.length() + w.n() * (w.n() - 1));
    }
}

TEST_CASE("seam passage totals") {
    std::mt19937 rng(3005);
    for (int trial = 0; trial < 10; ++trial) {
        const BraidWord w = corpus::random_knot_word(rng, 5, 8);
        const int l = 1 + trial % 3;
        const LoopTranscript tr = canonical_loop(w, l);
        const int L = w.n() * (w.n() - 1) / 2;
        long total = 0;
        for (const auto& [id, passes] : tr.seam_passes) {
            (void)id;
            total += passes;
        }
        CHECK(total == 2L * L * l);
    }
}

TEST_CASE("transcripts are deterministic") {
    const BraidWord w = parse_word("1 -2 3 -4 2 3");
    CHECK(dump_transcript(canonical_loop(w, 2)) == dump_transcript(canonical_loop(w, 2)));
}

TEST_CASE("rotation bookkeeping") {
    const BraidWord w = parse_word("2 -1", 3);
    const LoopTranscript tr = canonical_loop(w, 2);
    CHECK(tr.l == 2);
    CHECK(tr.rotation_boundaries.size() == 2);
    CHECK(tr.half_boundaries.size() == 4);
    CHECK(tr.rotation_boundaries.back() == static_cast<int>(tr.events.size()));
    // Events carry their 1-based rotation.
    for (const MoveEvent& ev : tr.events) {
        const int boundary = tr.rotation_boundaries[static_cast<size_t>(ev.rotation) - 1];
        CHECK(ev.time < boundary);
        if (ev.rotation >= 2)
            CHECK(ev.time >= tr.rotation_boundaries[static_cast<size_t>(ev.rotation) - 2]);
    }
    std::map<int, BirthInfo> births = tr.births;
    CHECK(static_cast<int>(births.size()) == tr.id_count);
    CHECK_THROWS_AS(canonical_loop(w, 0), std::invalid_argument);
}
