#include "braidtrace/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace braidtrace {

namespace {

// Orientation constants for the stratum-crossing sign.  A triple move
// and its reverse cross the same stratum in opposite directions, so the
// sign is the pattern direction times a per-type constant.  The two
// constants are pinned by the degree-one invariant values of the
// canonical one-rotation loop of "1 -2 -3" and must not change.
constexpr int sign_constant_minus = -1;
constexpr int sign_constant_plus = +1;

TripleEvent classify_event(const MoveEvent& ev, const TraceSet* trace) {
    if (ev.kind != MoveKind::r3)
        throw std::logic_error("classify: event is not a triple move");

    TripleEvent out;
    out.time = ev.time;
    out.rotation = ev.rotation;
    out.pattern = ev.pattern;

    std::vector<int> ids;
    ids.reserve(ev.word_before.letters.size());
    for (const IdLetter& letter : ev.word_before.letters) ids.push_back(letter.id);
    out.snapshot = gauss_diagram(values_of(ev.word_before), ids);

    // The three letters at positions p, p+1, p+2 are the crossings AB,
    // AC, BC in that order when the triple ascends (i, i+1, i), and in
    // the reverse order when it descends (i+1, i, i+1); AC is always the
    // middle letter.
    const int p = ev.position;
    const bool ascending = ev.pattern == TrianglePattern::ascending;
    const int arrow_ab = ascending ? p : p + 2;
    const int arrow_ac = p + 1;
    const int arrow_bc = ascending ? p + 2 : p;
    out.role_arrows = {arrow_ab, arrow_bc, arrow_ac};

    const GaussArrow& ab = out.snapshot.arrows.at(arrow_ab);
    const GaussArrow& ac = out.snapshot.arrows.at(arrow_ac);
    const GaussArrow& bc = out.snapshot.arrows.at(arrow_bc);
    out.a = ab.marking;
    out.b = bc.marking;
    out.dist_marking = ac.marking;
    out.role_ids = {ab.id, bc.id, ac.id};

    const int n = ev.word_before.n;
    const int sum = out.a + out.b;
    if (sum == n)
        throw std::logic_error("classify: marking sum equals the strand count");
    out.type = sum < n ? TripleType::minus : TripleType::plus;
    const int expected = out.type == TripleType::minus ? sum : sum - n;
    if (out.dist_marking != expected)
        throw std::logic_error("classify: distinguished marking breaks the sum rule");

    const int direction = ascending ? +1 : -1;
    out.sign = direction * (out.type == TripleType::minus ? sign_constant_minus
                                                          : sign_constant_plus);

    if (trace != nullptr) {
        for (int slot = 0; slot < 3; ++slot) {
            auto it = trace->id_to_name.find(out.role_ids[slot]);
            if (it == trace->id_to_name.end())
                throw std::logic_error("classify: crossing id has no trace circle");
            out.role_names[slot] = it->second;
        }
    }
    return out;
}

std::vector<TripleEvent> classify_impl(const LoopTranscript& transcript,
                                       const TraceSet* trace) {
    std::vector<TripleEvent> out;
    for (const MoveEvent& ev : transcript.events)
        if (ev.kind == MoveKind::r3) out.push_back(classify_event(ev, trace));
    return out;
}

}  // namespace

char type_symbol(TripleType type) { return type == TripleType::minus ? '-' : '+'; }

std::vector<TripleEvent> classify_transcript(const LoopTranscript& transcript) {
    return classify_impl(transcript, nullptr);
}

std::vector<TripleEvent> classify_transcript(const LoopTranscript& transcript,
                                             const TraceSet& trace) {
    return classify_impl(transcript, &trace);
}

int stratum_sign(const LoopTranscript& transcript, int event_time) {
    for (const MoveEvent& ev : transcript.events)
        if (ev.time == event_time) return classify_event(ev, nullptr).sign;
    throw std::invalid_argument("stratum_sign: no event with the given time");
}

std::string triangle_pattern_code(const TripleEvent& event) {
    // Tag the six endpoints (lower case = undercrossing end, upper case
    // = overcrossing end; a/b are the slot crossings, c distinguished),
    // order them by traversal time, and canonicalise the cyclic word by
    // taking the smallest rotation.
    const char under_tags[3] = {'a', 'b', 'c'};
    const char over_tags[3] = {'A', 'B', 'C'};
    std::vector<std::pair<int, char>> ends;
    for (int slot = 0; slot < 3; ++slot) {
        const GaussArrow& arrow = event.snapshot.arrows.at(event.role_arrows[slot]);
        ends.emplace_back(arrow.under_time, under_tags[slot]);
        ends.emplace_back(arrow.over_time, over_tags[slot]);
    }
    std::sort(ends.begin(), ends.end());
    std::string word;
    for (const auto& [time, tag] : ends) word.push_back(tag);
    std::string best = word;
    for (std::size_t k = 1; k < word.size(); ++k) {
        std::rotate(word.begin(), word.begin() + 1, word.end());
        best = std::min(best, word);
    }
    return best;
}

}  // namespace braidtrace
