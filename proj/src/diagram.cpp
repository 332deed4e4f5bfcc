#include "braidtrace/diagram.hpp"

#include <stdexcept>

namespace braidtrace {

Diagram build_diagram(const BraidWord& word) {
    if (!is_knot(word)) throw std::invalid_argument("closure is a link, not a knot");
    Diagram d;
    d.n = word.n();
    d.c = word.length();
    d.visits.reserve(static_cast<size_t>(2 * d.c));

    // Walk the knot from strand position 1 just after the seam.  Each
    // sweep runs left to right through the word; wrapping back to the
    // first letter is one seam passage.  The circuit closes after n
    // sweeps (each end position is used exactly once by a knot).
    int pos = 1;
    int timestamp = 0;
    int seam = 0;
    do {
        for (int j = 0; j < d.c; ++j) {
            const Letter& l = word.at(j);
            if (pos != l.index && pos != l.index + 1) continue;
            CrossingVisit v;
            v.letter = j;
            v.timestamp = timestamp++;
            v.enter_pos = pos;
            // s_i^+ : the strand entering at position i goes over.
            bool lower_over = l.sign > 0;
            v.over = (pos == l.index) ? lower_over : !lower_over;
            v.seam_before = seam;
            d.visits.push_back(v);
            pos = (pos == l.index) ? l.index + 1 : l.index;
        }
        ++seam;
    } while (pos != 1);
    d.seam_passes = seam;

    if (seam != d.n || timestamp != 2 * d.c)
        throw std::logic_error("knot traversal did not close as expected");
    return d;
}

namespace {

GaussDiagram gauss_from_diagram(const BraidWord& word, const Diagram& d, const std::vector<int>* labels) {
    GaussDiagram g;
    g.n = d.n;
    g.c = d.c;
    g.arrows.resize(static_cast<size_t>(d.c));
    std::vector<int> under_seam(static_cast<size_t>(d.c)), over_seam(static_cast<size_t>(d.c));
    for (const CrossingVisit& v : d.visits) {
        GaussArrow& a = g.arrows[static_cast<size_t>(v.letter)];
        a.letter = v.letter;
        a.id = labels ? (*labels)[static_cast<size_t>(v.letter)] : v.letter;
        a.index = word.at(v.letter).index;
        a.writhe = word.at(v.letter).sign;
        if (v.over) {
            a.over_time = v.timestamp;
            over_seam[static_cast<size_t>(v.letter)] = v.seam_before;
        } else {
            a.under_time = v.timestamp;
            under_seam[static_cast<size_t>(v.letter)] = v.seam_before;
        }
    }
    for (int j = 0; j < d.c; ++j) {
        GaussArrow& a = g.arrows[static_cast<size_t>(j)];
        // Seam passages along the traversal arc from the under-visit to
        // the over-visit (cyclically, total passes = n).
        int m = (a.under_time < a.over_time)
                    ? over_seam[static_cast<size_t>(j)] - under_seam[static_cast<size_t>(j)]
                    : d.seam_passes - under_seam[static_cast<size_t>(j)] + over_seam[static_cast<size_t>(j)];
        if (m < 1 || m > d.n - 1) throw std::logic_error("homological marking out of range 1..n-1");
        a.marking = m;
    }
    return g;
}

}  // namespace

GaussDiagram gauss_diagram(const BraidWord& word) {
    Diagram d = build_diagram(word);
    return gauss_from_diagram(word, d, nullptr);
}

GaussDiagram gauss_diagram(const BraidWord& word, const std::vector<int>& labels) {
    if (labels.size() != static_cast<size_t>(word.length()))
        throw std::invalid_argument("label count does not match word length");
    Diagram d = build_diagram(word);
    return gauss_from_diagram(word, d, &labels);
}

int homological_marking(const BraidWord& word, int letter_pos) {
    if (letter_pos < 0 || letter_pos >= word.length())
        throw std::invalid_argument("letter position out of range");
    return gauss_diagram(word).arrows[static_cast<size_t>(letter_pos)].marking;
}

int w_invariant(const BraidWord& word, int a) {
    GaussDiagram g = gauss_diagram(word);
    int sum = 0;
    for (const GaussArrow& arrow : g.arrows)
        if (arrow.marking == a) sum += arrow.writhe;
    return sum;
}

}  // namespace braidtrace
