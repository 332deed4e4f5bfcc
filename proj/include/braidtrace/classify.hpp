// Classification of the triple-point events of a rotation loop.
//
// At a triple move three strands cross pairwise; labelling them A, B, C
// by increasing entering position, the three crossings are AB, AC, BC
// and the distinguished one is AC (between the extreme strands, the
// middle letter of the triple).  The homological markings always
// satisfy either
//
//   marking(AB) + marking(BC) = marking(AC)       ("minus" type), or
//   marking(AB) + marking(BC) - n = marking(AC)   ("plus" type);
//
// a sum of exactly n cannot occur on a knot.  The event type is written
// (a, b)- or (a, b)+ where (a, b) = (marking(AB), marking(BC)), and each
// event carries a sign recording in which direction it crosses the
// triple-point stratum.
#pragma once

#include <array>
#include <string>
#include <vector>

#include "braidtrace/diagram.hpp"
#include "braidtrace/loop.hpp"
#include "braidtrace/trace.hpp"

namespace braidtrace {

enum class TripleType { minus, plus };

char type_symbol(TripleType type);  // '-' or '+'

struct TripleEvent {
    int time = 0;      // transcript event time
    int rotation = 0;  // 1-based rotation
    TrianglePattern pattern{};
    int sign = +1;
    TripleType type{};
    int a = 0;              // marking of the slot-a crossing (AB)
    int b = 0;              // marking of the slot-b crossing (BC)
    int dist_marking = 0;   // marking of the distinguished crossing (AC)
    std::array<int, 3> role_ids{};    // crossing ids: slot-a, slot-b, distinguished
    std::array<std::string, 3> role_names{};  // circle names (empty without a TraceSet)
    GaussDiagram snapshot;            // diagram at word_before, arrows carry ids
    std::array<int, 3> role_arrows{};  // snapshot arrow indices: slot-a, slot-b, distinguished
};

// Classify every triple move of the transcript, in event order.  The
// overload with a TraceSet also fills the circle names.
std::vector<TripleEvent> classify_transcript(const LoopTranscript& transcript);
std::vector<TripleEvent> classify_transcript(const LoopTranscript& transcript,
                                             const TraceSet& trace);

// The stratum-crossing sign of one triple move (event_time indexes the
// transcript's event list).
int stratum_sign(const LoopTranscript& transcript, int event_time);

// Canonical code of the cyclic order of the six triangle endpoints
// around the knot (tags a/A, b/B, c/C for the under/over ends of the
// slot-a, slot-b and distinguished crossings).  Four codes occur in
// practice, two per braid-relation direction, and the code determines
// the direction.
std::string triangle_pattern_code(const TripleEvent& event);

}  // namespace braidtrace
