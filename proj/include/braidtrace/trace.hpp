// The trace graph of a rotation loop: every crossing id that ever
// exists along the loop is an edge of a 1-complex whose vertices are the
// birth events, the death events, and the end-of-loop positional
// identification of crossings.  Its connected components ("trace
// circles") are closed curves in (diagram) x (loop time); each carries
//
//   - a homological marking (shared by all member crossings),
//   - a homology class (phi, t): t >= 1 counts the rotation periods the
//     circle spans before it closes (the covering multiplicity over the
//     one-rotation structure, so t = 1 whenever l = 1), and phi is the
//     net number of seam passages along one traversal of the circle,
//     reported as a magnitude because the traversal orientation is a
//     convention.
//
// Circles receive canonical names x1, x2, ... ordered by (marking, t,
// phi, first appearance).  Running the loop l times instead of once
// deck-transforms the l-fold cover: shifting every birth event by one
// rotation induces a permutation of the circles (the local system
// action), which is the identity at l = 1.
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidtrace/loop.hpp"

namespace braidtrace {

struct TraceCircle {
    std::string name;
    std::vector<int> members;  // crossing ids, ascending
    int marking = 0;
    int phi = 0;
    int t = 1;
};

struct TraceSet {
    std::vector<TraceCircle> circles;       // in canonical name order
    std::map<int, std::string> id_to_name;  // crossing id -> circle name
    std::map<int, int> id_marking;          // crossing id -> marking
};

TraceSet trace_circles(const LoopTranscript& transcript);
TraceSet trace_circles(const BraidWord& word, int l);

// The homology class (phi, t) of a circle.
std::pair<int, int> homology_class(const TraceCircle& circle);

// The permutation of circle names induced by shifting every rotation of
// the loop by one (cyclically).  Identity when l = 1.
std::map<std::string, std::string> local_system_action(const LoopTranscript& transcript,
                                                       const TraceSet& trace);
std::map<std::string, std::string> local_system_action(const BraidWord& word, int l);

}  // namespace braidtrace
