#include "braidtrace/loop.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "braidtrace/diagram.hpp"

namespace braidtrace {

BraidWord values_of(const IdWord& word) {
    std::vector<Letter> letters;
    letters.reserve(word.letters.size());
    for (const IdLetter& l : word.letters) letters.push_back({l.index, l.sign});
    return BraidWord(word.n, std::move(letters));
}

IdWord with_ids(const BraidWord& word) {
    IdWord out;
    out.n = word.n();
    out.letters.reserve(static_cast<size_t>(word.length()));
    for (int i = 0; i < word.length(); ++i)
        out.letters.push_back({word.at(i).index, word.at(i).sign, i});
    return out;
}

namespace {

// Mutates an IdWord through validated elementary moves, recording every
// move as a MoveEvent.  Each primitive checks its own applicability so a
// scripting bug surfaces as a logic_error at the exact offending move.
struct Engine {
    IdWord& word;
    std::vector<MoveEvent>& events;
    int& next_id;
    int time = 0;
    int rotation = 0;
    int max_len = -1;  // crossing-count bound; -1 = unchecked
    int* birth_seq = nullptr;
    std::map<int, int>* seam = nullptr;
    std::map<int, BirthInfo>* births = nullptr;

    int len() const { return static_cast<int>(word.letters.size()); }

    void need(bool ok, const std::string& what) const {
        if (!ok) throw std::logic_error("move engine: " + what);
    }

    MoveEvent& record(MoveKind kind, int position, IdWord before) {
        MoveEvent ev;
        ev.time = time++;
        ev.kind = kind;
        ev.position = position;
        ev.rotation = rotation;
        ev.word_before = std::move(before);
        ev.word_after = word;
        if (max_len >= 0 && len() > max_len)
            throw std::logic_error("move engine: crossing-count bound exceeded");
        events.push_back(std::move(ev));
        return events.back();
    }

    // Equal-marking sanity check for a same-index, opposite-sign pair at
    // (pos, pos+1); only meaningful when the word closes to a knot.
    void check_pair_markings(int pos) const {
        BraidWord values = values_of(word);
        if (!is_knot(values)) return;
        if (homological_marking(values, pos) != homological_marking(values, pos + 1))
            throw std::logic_error("move engine: paired crossings have unequal markings");
    }

    void commute(int pos) {
        need(pos >= 0 && pos + 1 < len(), "commute position out of range");
        IdWord before = word;
        IdLetter& a = word.letters[static_cast<size_t>(pos)];
        IdLetter& b = word.letters[static_cast<size_t>(pos) + 1];
        need(std::abs(a.index - b.index) >= 2, "commuting letters are not distant");
        std::swap(a, b);
        MoveEvent& ev = record(MoveKind::distant_commute, pos, std::move(before));
        ev.ids = {ev.word_before.letters[static_cast<size_t>(pos)].id,
                  ev.word_before.letters[static_cast<size_t>(pos) + 1].id, -1};
    }

    void r3(int pos) {
        need(pos >= 0 && pos + 2 < len(), "triple move position out of range");
        IdWord before = word;
        IdLetter a = word.letters[static_cast<size_t>(pos)];
        IdLetter b = word.letters[static_cast<size_t>(pos) + 1];
        IdLetter c = word.letters[static_cast<size_t>(pos) + 2];
        TrianglePattern pattern;
        if (a.index == c.index && b.index == a.index + 1)
            pattern = TrianglePattern::ascending;
        else if (a.index == c.index && b.index + 1 == a.index)
            pattern = TrianglePattern::descending;
        else {
            throw std::logic_error("move engine: triple site does not match a braid relation");
        }
        need(b.sign == a.sign || b.sign == c.sign, "triple move blocked by crossing signs");
        // s_i s_{i+1} s_i = s_{i+1} s_i s_{i+1}: the three crossings
        // survive in reversed order, with reversed signs and ids.
        word.letters[static_cast<size_t>(pos)] = {b.index, c.sign, c.id};
        word.letters[static_cast<size_t>(pos) + 1] = {a.index, b.sign, b.id};
        word.letters[static_cast<size_t>(pos) + 2] = {b.index, a.sign, a.id};
        MoveEvent& ev = record(MoveKind::r3, pos, std::move(before));
        ev.ids = {a.id, b.id, c.id};
        ev.pattern = pattern;
    }

    void birth(int pos, int index) {
        need(pos >= 0 && pos <= len(), "birth position out of range");
        need(index >= 1 && index <= word.n - 1, "birth generator index out of range");
        IdWord before = word;
        IdLetter plus{index, +1, next_id++};
        IdLetter minus{index, -1, next_id++};
        word.letters.insert(word.letters.begin() + pos, {plus, minus});
        MoveEvent& ev = record(MoveKind::r2birth, pos, std::move(before));
        ev.ids = {plus.id, minus.id, -1};
        if (births) {
            int seq = birth_seq ? (*birth_seq)++ : 0;
            (*births)[plus.id] = BirthInfo{rotation, seq, 0};
            (*births)[minus.id] = BirthInfo{rotation, seq, 1};
        }
        check_pair_markings(pos);
    }

    void death(int pos) {
        need(pos >= 0 && pos + 1 < len(), "death position out of range");
        IdLetter a = word.letters[static_cast<size_t>(pos)];
        IdLetter b = word.letters[static_cast<size_t>(pos) + 1];
        need(a.index == b.index && a.sign == -b.sign, "dying pair is not an inverse pair");
        check_pair_markings(pos);
        IdWord before = word;
        word.letters.erase(word.letters.begin() + pos, word.letters.begin() + pos + 2);
        MoveEvent& ev = record(MoveKind::r2death, pos, std::move(before));
        ev.ids = {a.id, b.id, -1};
    }

    void shift(int offset) {
        need(offset >= 0 && offset < len(), "cyclic shift offset out of range");
        IdWord before = word;
        if (seam)
            for (int i = 0; i < offset; ++i) (*seam)[word.letters[static_cast<size_t>(i)].id] += 1;
        std::rotate(word.letters.begin(), word.letters.begin() + offset, word.letters.end());
        MoveEvent& ev = record(MoveKind::cyclic_shift, 0, std::move(before));
        ev.offset = offset;
    }

    // The move script (commute positions / triple positions) that absorbs
    // a letter s_j at position 0 into a literal j+1-strand half twist at
    // positions 1..j(j+1)/2, ending with the twist rebuilt literally at
    // 0..j(j+1)/2-1 and the expelled letter s_1 (the old twist tail,
    // which the script never touches) at position j(j+1)/2.  Exactly j-1
    // triple moves.
    static std::vector<std::pair<bool, int>> head_absorption_ops(int j) {
        std::vector<std::pair<bool, int>> ops;  // (is_triple, position)
        const int t_a = (j >= 3) ? (j - 2) * (j - 1) / 2 : 0;
        for (int t = 0; t < t_a; ++t) ops.emplace_back(false, t);
        const int q = t_a;
        if (j >= 2) {
            for (int t = 0; t < j - 2; ++t) ops.emplace_back(false, q + j - 1 - t);
            ops.emplace_back(true, q);
            for (int x = j - 1; x >= 2; --x) {
                const int s = q + 2 * j - x;
                for (int t = 0; t < x - 2; ++t) ops.emplace_back(false, s - 1 - t);
                ops.emplace_back(true, q + 2 * (j - x));
            }
            for (int i = 0; i + 3 <= j; ++i) {
                const int s = q + 2 + 2 * i;
                for (int t = 0; t <= i; ++t) ops.emplace_back(false, s - 1 - t);
            }
        }
        return ops;
    }

    // Push the letter at p through the literal half twist at p+1..p+L.
    // The letter re-emerges flipped (s_j -> s_{n-j}) at p+L, leaving a
    // literal half twist at p..p+L-1.  Emits exactly n-2 triple moves,
    // every one of them on three positive crossings.  A negative letter
    // instead dies against the twist (which first exposes s_j as its
    // literal head) and a fresh inverse pair born at the twist's right
    // end provides the emerging letter; the death precedes the birth, so
    // the word length never grows during a push.
    void push(int p) {
        const int n = word.n;
        const int L = n * (n - 1) / 2;
        need(n >= 2, "push needs at least two strands");
        need(p >= 0 && p + L < len(), "push position out of range");
        const BraidWord delta = garside_word(n);
        for (int k = 0; k < L; ++k) {
            const IdLetter& u = word.letters[static_cast<size_t>(p + 1 + k)];
            need(u.index == delta.at(k).index && u.sign == +1,
                 "push target is not followed by a literal half twist");
        }
        const int j = word.letters[static_cast<size_t>(p)].index;
        const int eps = word.letters[static_cast<size_t>(p)].sign;

        if (eps > 0) {
            // Phases A and B: commute the letter right past the runs it
            // fully clears, then absorb it into the runs of index j-1
            // and j, rebuilding them as a literal block.  For j == 1 the
            // script is empty: the letter itself becomes the head of the
            // new twist and the old head continues.
            for (const auto& [is_triple, pos] : head_absorption_ops(j)) {
                if (is_triple)
                    r3(p + pos);
                else
                    commute(p + pos);
            }
            int cur = (j >= 2) ? p + (j - 2) * (j - 1) / 2 + 2 * j - 1 : p + 1;

            // Phase C: the emerged letter climbs through the remaining
            // runs, gaining one generator index per run.
            int m = 1;
            for (int k = j + 1; k <= n - 1; ++k) {
                for (int t = 0; t < k - m - 1; ++t) {
                    commute(cur);
                    ++cur;
                }
                r3(cur);
                cur += 2;
                for (int t = 0; t < m - 1; ++t) {
                    commute(cur);
                    ++cur;
                }
                ++m;
            }
            need(cur == p + L, "push did not end at the expected position");
        } else {
            // Exposure: the prefix run block D_1..D_j is the half twist
            // on the first j+1 strands; rewrite it (reversed absorption
            // script) into the literal form s_j . D_1..D_{j-1} . (D_j
            // minus its tail), so the negative letter faces its inverse.
            const auto ops = head_absorption_ops(j);
            for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
                if (it->first)
                    r3(p + 1 + it->second);
                else
                    commute(p + 1 + it->second);
            }
            death(p);
            // The emerging letter and its twist-completing partner are
            // born at the right end of the twist region.
            birth(p + L - 1, n - j);
            // Descent: the partner crosses the runs D_{n-1}..D_{j+1}
            // leftward, losing one generator index per run, and lands as
            // the tail letter the exposure removed.
            int beta = p + L - 1;
            for (int k = n - 1; k >= j + 1; --k) {
                const int x = k + 1 - j;
                for (int t = 0; t < x - 2; ++t) commute(beta - 1 - t);
                r3(beta - x);
                for (int t = 0; t < k - x; ++t) commute(beta - x - 1 - t);
                beta -= k;
            }
            need(beta == p + (j + 1) * j / 2 - 1, "descent did not end at the expected position");
        }

        for (int k = 0; k < L; ++k) {
            const IdLetter& u = word.letters[static_cast<size_t>(p + k)];
            need(u.index == delta.at(k).index && u.sign == +1,
                 "push did not rebuild a literal half twist");
        }
        const IdLetter& out = word.letters[static_cast<size_t>(p + L)];
        need(out.index == n - j && out.sign == eps, "pushed letter emerged wrong");
    }
};

}  // namespace

std::vector<MoveEvent> push_letter(IdWord& word, int position, int first_time) {
    const int L = word.n * (word.n - 1) / 2;
    if (position < 0 || position + L >= static_cast<int>(word.letters.size()))
        throw std::invalid_argument("push position out of range");
    std::vector<MoveEvent> events;
    int next_id = 0;
    for (const IdLetter& l : word.letters) next_id = std::max(next_id, l.id + 1);
    Engine engine{word, events, next_id};
    engine.time = first_time;
    engine.push(position);
    return events;
}

LoopTranscript canonical_loop(const BraidWord& word, int l) {
    if (l < 1) throw std::invalid_argument("rotation count must be at least 1");
    if (!is_knot(word)) throw std::invalid_argument("closure is a link, not a knot");
    const int n = word.n();
    const int c = word.length();
    const int L = n * (n - 1) / 2;

    LoopTranscript tr;
    tr.input = word;
    tr.n = n;
    tr.c = c;
    tr.l = l;
    tr.initial = with_ids(word);
    tr.id_count = c;
    tr.boundary_words.push_back(tr.initial);
    for (int id = 0; id < c; ++id) tr.births[id] = BirthInfo{0, id, 0};

    IdWord current = tr.initial;
    int birth_seq = 0;
    Engine engine{current, tr.events, tr.id_count};
    engine.max_len = c + 2 * L;
    engine.birth_seq = &birth_seq;
    engine.seam = &tr.seam_passes;
    engine.births = &tr.births;

    for (int r = 1; r <= l; ++r) {
        engine.rotation = r;
        birth_seq = 0;
        for (int half = 0; half < 2; ++half) {
            const BraidWord at_half_start = values_of(current);
            if (n >= 2) {
                const BraidWord delta = garside_word(n);
                for (int k = 0; k < L; ++k) engine.birth(k, delta.at(k).index);
                engine.shift(L);
            }
            for (int t = 0; t < c; ++t) engine.push(L + (c - 1 - t));
            for (int k = 0; k < L; ++k) engine.death(L - 1 - k);
            if (values_of(current) != transform(at_half_start, Transform::flip))
                throw std::logic_error("rotation loop: half-rotation flip checkpoint failed");
            tr.half_boundaries.push_back(static_cast<int>(tr.events.size()));
        }
        if (values_of(current) != word)
            throw std::logic_error("rotation loop: full rotation did not return to the input word");
        tr.boundary_words.push_back(current);
        tr.rotation_boundaries.push_back(static_cast<int>(tr.events.size()));
    }

    long r3_count = 0;
    for (const MoveEvent& ev : tr.events)
        if (ev.kind == MoveKind::r3) ++r3_count;
    if (r3_count != 2L * c * (n - 2) * l)
        throw std::logic_error("rotation loop: triple-move budget violated");
    return tr;
}

std::vector<std::pair<int, int>> monodromy(const LoopTranscript& transcript) {
    std::vector<std::pair<int, int>> pairs;
    const IdWord& last = transcript.boundary_words.back();
    const IdWord& first = transcript.boundary_words.front();
    for (size_t i = 0; i < last.letters.size(); ++i)
        pairs.emplace_back(last.letters[i].id, first.letters[i].id);
    return pairs;
}

std::vector<std::vector<std::pair<int, int>>> monodromy_per_rotation(const LoopTranscript& transcript) {
    std::vector<std::vector<std::pair<int, int>>> out;
    for (int r = 1; r <= transcript.l; ++r) {
        std::vector<std::pair<int, int>> pairs;
        const IdWord& after = transcript.boundary_words[static_cast<size_t>(r)];
        const IdWord& before = transcript.boundary_words[static_cast<size_t>(r) - 1];
        for (size_t i = 0; i < after.letters.size(); ++i)
            pairs.emplace_back(after.letters[i].id, before.letters[i].id);
        out.push_back(std::move(pairs));
    }
    return out;
}

namespace {

const char* kind_name(MoveKind kind) {
    switch (kind) {
        case MoveKind::r2birth: return "r2birth";
        case MoveKind::r2death: return "r2death";
        case MoveKind::r3: return "r3";
        case MoveKind::cyclic_shift: return "cyclic_shift";
        case MoveKind::distant_commute: return "distant_commute";
    }
    return "?";
}

}  // namespace

std::string dump_transcript(const LoopTranscript& transcript) {
    std::ostringstream out;
    for (const MoveEvent& ev : transcript.events) {
        out << ev.time << ' ' << kind_name(ev.kind) << ' ';
        if (ev.kind == MoveKind::cyclic_shift) {
            out << "offset=" << ev.offset;
        } else {
            out << ev.ids[0] << ',' << ev.ids[1];
            if (ev.kind == MoveKind::r3) out << ',' << ev.ids[2];
        }
        for (const IdLetter& l : ev.word_after.letters)
            out << ' ' << l.sign * l.index << '[' << l.id << ']';
        out << '\n';
    }
    return out.str();
}

}  // namespace braidtrace
