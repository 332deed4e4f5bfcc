// Braid words on n strands: parsing, permutations, the half-twist word,
// word transforms (flip / reverse / inverse / cyclic shift) and cabling.
//
// A word is a sequence of letters s_i^{+1} or s_i^{-1}, 1 <= i <= n-1,
// written in text form as whitespace-separated signed integers, e.g.
// "1 -2 -3" for s_1 s_2^{-1} s_3^{-1}.  Its closure is a link in the
// solid torus; most of this library cares about the case where the
// closure is a knot (the strand permutation is a single n-cycle).
#pragma once

#include <string>
#include <vector>

namespace braidtrace {

// One crossing letter: generator index (1..n-1) and sign (+1 or -1).
struct Letter {
    int index = 0;
    int sign = +1;
    bool operator==(const Letter&) const = default;
};

// A braid word together with its strand count.
class BraidWord {
public:
    BraidWord() = default;
    BraidWord(int n, std::vector<Letter> letters);

    int n() const { return n_; }
    int length() const { return static_cast<int>(letters_.size()); }
    const std::vector<Letter>& letters() const { return letters_; }
    const Letter& at(int i) const { return letters_.at(static_cast<size_t>(i)); }

    bool operator==(const BraidWord&) const = default;

private:
    int n_ = 1;
    std::vector<Letter> letters_;
};

// Render as whitespace-separated signed generator indices ("1 -2 -3").
std::string to_string(const BraidWord& word);

// Parse a word from text.  Tokens must be nonzero integers.  With an
// explicit strand count, every |token| must be <= n-1; without one, n is
// inferred as max|token| + 1 (n = 1 for the empty word).  Errors name the
// offending token.
BraidWord parse_word(const std::string& text);
BraidWord parse_word(const std::string& text, int n);

// The strand permutation of the closure: result[p] is the 0-based end
// position of the strand entering at 0-based position p.  Signs are
// irrelevant (each letter acts as the transposition (i, i+1)).
std::vector<int> permutation(const BraidWord& word);

// True iff the closure is a knot, i.e. the permutation is one n-cycle.
bool is_knot(const BraidWord& word);

// The positive half twist on n strands in the fixed normal form
// (s_1)(s_2 s_1)(s_3 s_2 s_1)...(s_{n-1} ... s_1); n(n-1)/2 letters.
// Requires n >= 2.
BraidWord garside_word(int n);

enum class Transform {
    flip,     // s_i -> s_{n-i}, order and signs kept
    reverse,  // letter order reversed, indices and signs kept
    inverse,  // letter order reversed and signs negated
};

BraidWord transform(const BraidWord& word, Transform op);

// Rotate left: the first `offset` letters move to the back.  Requires
// 0 <= offset < length (offset 0 is allowed for the empty word).
BraidWord cyclic_shift(const BraidWord& word, int offset);

// The k-strand cable: each strand is replaced by a bundle of k parallel
// strands, each letter by the k*k block of bundle crossings (same sign),
// and |half_twists| copies of the k-strand half twist (sign of
// half_twists) are appended, twisting the first bundle.  cable(w, 1, 0)
// returns w unchanged.  Requires k >= 1.
BraidWord cable(const BraidWord& word, int k, int half_twists);

}  // namespace braidtrace
