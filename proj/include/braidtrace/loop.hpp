// The canonical rotation loop of a closed braid: rotating the solid
// torus once around its core is realised combinatorially, per half
// rotation, as
//
//   gamma  ->  D D^{-1} gamma   (half-twist pair born at the front)
//          ->  D^{-1} gamma D   (cyclic shift; D's letters pass the seam)
//          ->  D^{-1} D gamma'  (each letter of gamma pushed through D)
//          ->  gamma'           (the D^{-1} D pair dies innermost-out)
//
// where gamma' is the flipped word (s_i -> s_{n-i}).  Two half rotations
// return to gamma.  Every crossing keeps a persistent id through the
// moves; one full rotation of a c-letter word on n strands emits exactly
// 2c(n-2) triple-point (R3) events, and no intermediate diagram ever has
// more than c + n^2 - n crossings.
#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "braidtrace/braid.hpp"

namespace braidtrace {

// A letter with a persistent crossing id.
struct IdLetter {
    int index = 0;
    int sign = +1;
    int id = -1;
    bool operator==(const IdLetter&) const = default;
};

struct IdWord {
    int n = 1;
    std::vector<IdLetter> letters;
    bool operator==(const IdWord&) const = default;
};

// Forget the ids.
BraidWord values_of(const IdWord& word);
// Attach ids 0..length-1.
IdWord with_ids(const BraidWord& word);

enum class MoveKind { r2birth, r2death, r3, cyclic_shift, distant_commute };

// The two local letter patterns an R3 move can start from.
enum class TrianglePattern {
    ascending,   // indices (i, i+1, i)
    descending,  // indices (i+1, i, i+1)
};

struct MoveEvent {
    int time = 0;  // index in the transcript event list
    MoveKind kind{};
    // r2birth/r2death: the two paired ids; r3: the three ids left to
    // right in word_before; distant_commute: the two swapped ids.
    std::array<int, 3> ids{-1, -1, -1};
    int position = -1;              // leftmost word position of the move site
    int offset = 0;                 // cyclic_shift only
    TrianglePattern pattern{};      // r3 only: pattern of word_before
    int rotation = 0;               // 1-based rotation containing the event
    IdWord word_before, word_after;
};

// Where (and as what) a crossing id came into being.
struct BirthInfo {
    int rotation = 0;  // 1-based; 0 for the c initial crossings
    int seq = 0;       // ordinal of the birth event within its rotation
    int slot = 0;      // 0 = positive letter of the pair, 1 = negative
};

struct LoopTranscript {
    BraidWord input;
    int n = 1;
    int c = 0;
    int l = 1;
    IdWord initial;                      // ids 0..c-1
    std::vector<MoveEvent> events;
    std::vector<IdWord> boundary_words;  // after r rotations, r = 0..l
    std::vector<int> half_boundaries;    // events completed at each half-rotation end
    std::vector<int> rotation_boundaries;  // events completed at each rotation end
    std::map<int, int> seam_passes;      // id -> times it passed the seam
    std::map<int, BirthInfo> births;     // id -> origin (initial ids included)
    int id_count = 0;                    // ids are 0..id_count-1
};

// Push the letter at `position` through the half twist written literally
// to its right, appending the emitted events (times continue from
// `first_time`).  The word is modified in place; the letter re-emerges
// flipped on the far side.  For internal and test use.
std::vector<MoveEvent> push_letter(IdWord& word, int position, int first_time = 0);

// Run the canonical loop for l >= 1 full rotations.  Requires a knot
// closure.
LoopTranscript canonical_loop(const BraidWord& word, int l);

// Positional identification of crossings: pairs (id after, id before)
// per rotation, and cumulatively over the whole transcript.
std::vector<std::pair<int, int>> monodromy(const LoopTranscript& transcript);
std::vector<std::vector<std::pair<int, int>>> monodromy_per_rotation(const LoopTranscript& transcript);

// Debug dump, one line per event: "t kind ids word_after".
std::string dump_transcript(const LoopTranscript& transcript);

}  // namespace braidtrace
