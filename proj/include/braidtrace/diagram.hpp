// Closed-braid knot diagrams: the traversal of the closure, Gauss
// diagrams with homological markings, and the marking-weighted writhes.
//
// The diagram of a word with c letters is drawn in the solid torus with
// the seam (closure line) between the last and the first letter.  The
// knot traversal starts at strand position 1 just after the seam and
// visits every crossing twice; visits are timestamped 0..2c-1.
//
// Over/under convention: for s_i^{+1} the strand entering the crossing
// at position i passes over; for s_i^{-1} it passes under.
//
// The homological marking of a crossing is the winding number in the
// solid torus of the loop that runs from the under-passage to the
// over-passage along the knot and closes up through the crossing; in
// this combinatorial model that is the number of seam passages on the
// traversal arc from the under-visit to the over-visit.  For a knot it
// always lies in 1..n-1.
#pragma once

#include <vector>

#include "braidtrace/braid.hpp"

namespace braidtrace {

// One passage of the knot through a crossing.
struct CrossingVisit {
    int letter = 0;       // which word letter (0-based position in the word)
    int timestamp = 0;    // 0..2c-1 in traversal order
    bool over = false;    // does the knot pass over at this visit?
    int enter_pos = 0;    // strand position (1-based) entering the crossing
    int seam_before = 0;  // seam passages that happened before this visit
};

// The traversed diagram of a knot closure.
struct Diagram {
    int n = 1;
    int c = 0;
    std::vector<CrossingVisit> visits;  // in timestamp order, size 2c
    int seam_passes = 0;                // total seam passages (= n for a knot)
};

// One arrow of a Gauss diagram: foot at the under-visit, head at the
// over-visit, decorated with the writhe and the homological marking.
struct GaussArrow {
    int letter = 0;      // word letter of the crossing
    int id = 0;          // persistent crossing id (= letter for plain words)
    int index = 0;       // generator index of the letter
    int writhe = +1;     // letter sign
    int under_time = 0;  // foot timestamp
    int over_time = 0;   // head timestamp
    int marking = 0;     // homological marking, 1..n-1
};

struct GaussDiagram {
    int n = 1;
    int c = 0;
    std::vector<GaussArrow> arrows;  // in word-letter order
};

// Traverse the closure.  Throws std::invalid_argument("closure is a
// link, not a knot") when the word does not close to a knot.
Diagram build_diagram(const BraidWord& word);

// The Gauss diagram of the closure (markings included).  Same knot
// precondition as build_diagram.  The id-labelled overload attaches the
// given per-letter ids to the arrows (labels.size() == word length).
GaussDiagram gauss_diagram(const BraidWord& word);
GaussDiagram gauss_diagram(const BraidWord& word, const std::vector<int>& labels);

// Marking of one crossing (0-based letter position).
int homological_marking(const BraidWord& word, int letter_pos);

// W_a: the sum of writhes over all crossings of marking a.
int w_invariant(const BraidWord& word, int a);

}  // namespace braidtrace
