#include "braidtrace/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace braidtrace {

BraidWord::BraidWord(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
    if (n_ < 1) throw std::invalid_argument("strand count must be at least 1");
    for (const Letter& l : letters_) {
        if (l.index < 1 || l.index > n_ - 1)
            throw std::invalid_argument("letter index " + std::to_string(l.index) +
                                        " out of range for " + std::to_string(n_) + " strands");
        if (l.sign != 1 && l.sign != -1)
            throw std::invalid_argument("letter sign must be +1 or -1");
    }
}

std::string to_string(const BraidWord& word) {
    std::string out;
    for (const Letter& l : word.letters()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(l.sign * l.index);
    }
    return out;
}

namespace {

std::vector<int> parse_tokens(const std::string& text) {
    std::vector<int> values;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad word token \"" + token + "\": not an integer");
        }
        if (used != token.size())
            throw std::invalid_argument("bad word token \"" + token + "\": not an integer");
        if (value == 0)
            throw std::invalid_argument("bad word token \"" + token + "\": generator index 0 does not exist");
        values.push_back(value);
    }
    return values;
}

std::vector<Letter> to_letters(const std::vector<int>& values) {
    std::vector<Letter> letters;
    letters.reserve(values.size());
    for (int v : values) letters.push_back({std::abs(v), v > 0 ? +1 : -1});
    return letters;
}

}  // namespace

BraidWord parse_word(const std::string& text) {
    std::vector<int> values = parse_tokens(text);
    int n = 1;
    for (int v : values) n = std::max(n, std::abs(v) + 1);
    return BraidWord(n, to_letters(values));
}

BraidWord parse_word(const std::string& text, int n) {
    if (n < 1) throw std::invalid_argument("strand count must be at least 1");
    std::vector<int> values = parse_tokens(text);
    for (int v : values) {
        if (std::abs(v) > n - 1)
            throw std::invalid_argument("bad word token \"" + std::to_string(v) + "\": index exceeds " +
                                        std::to_string(n) + " strands");
    }
    return BraidWord(n, to_letters(values));
}

std::vector<int> permutation(const BraidWord& word) {
    // positions[p] tracks the current position of the strand that entered at p.
    std::vector<int> positions(static_cast<size_t>(word.n()));
    std::iota(positions.begin(), positions.end(), 0);
    for (const Letter& l : word.letters()) {
        // The letter swaps the strands currently at 0-based positions i-1, i.
        for (int& pos : positions) {
            if (pos == l.index - 1)
                pos = l.index;
            else if (pos == l.index)
                pos = l.index - 1;
        }
    }
    return positions;
}

bool is_knot(const BraidWord& word) {
    std::vector<int> perm = permutation(word);
    int seen = 0;
    int p = 0;
    do {
        p = perm[static_cast<size_t>(p)];
        ++seen;
    } while (p != 0 && seen <= word.n());
    return seen == word.n();
}

BraidWord garside_word(int n) {
    if (n < 2) throw std::invalid_argument("half twist needs at least 2 strands");
    std::vector<Letter> letters;
    letters.reserve(static_cast<size_t>(n * (n - 1) / 2));
    for (int k = 1; k <= n - 1; ++k)
        for (int i = k; i >= 1; --i) letters.push_back({i, +1});
    return BraidWord(n, letters);
}

BraidWord transform(const BraidWord& word, Transform op) {
    std::vector<Letter> letters = word.letters();
    switch (op) {
        case Transform::flip:
            for (Letter& l : letters) l.index = word.n() - l.index;
            break;
        case Transform::reverse:
            std::reverse(letters.begin(), letters.end());
            break;
        case Transform::inverse:
            std::reverse(letters.begin(), letters.end());
            for (Letter& l : letters) l.sign = -l.sign;
            break;
    }
    return BraidWord(word.n(), std::move(letters));
}

BraidWord cyclic_shift(const BraidWord& word, int offset) {
    if (offset == 0 && word.length() == 0) return word;
    if (offset < 0 || offset >= word.length())
        throw std::invalid_argument("cyclic shift offset " + std::to_string(offset) +
                                    " out of range for word of length " + std::to_string(word.length()));
    std::vector<Letter> letters = word.letters();
    std::rotate(letters.begin(), letters.begin() + offset, letters.end());
    return BraidWord(word.n(), std::move(letters));
}

BraidWord cable(const BraidWord& word, int k, int half_twists) {
    if (k < 1) throw std::invalid_argument("cable width must be at least 1");
    if (k == 1 && half_twists == 0) return word;
    std::vector<Letter> letters;
    for (const Letter& l : word.letters()) {
        // Bundle crossing block: the k strands of bundle i cross the k
        // strands of bundle i+1 one by one, outermost strand first.  For
        // k = 2, i = 1 this is s_2 s_3 s_1 s_2.
        int p = k * (l.index - 1) + 1;  // first strand of bundle i (1-based)
        for (int r = 1; r <= k; ++r)
            for (int s = p + k - r; s <= p + 2 * k - r - 1; ++s) letters.push_back({s, l.sign});
    }
    if (half_twists != 0 && k >= 2) {
        BraidWord twist = garside_word(k);
        int sign = half_twists > 0 ? +1 : -1;
        for (int copy = 0; copy < std::abs(half_twists); ++copy)
            for (const Letter& l : twist.letters()) letters.push_back({l.index, sign});
    }
    return BraidWord(k * word.n(), std::move(letters));
}

}  // namespace braidtrace
