// Comparison of loop invariants between two closed braids.
//
// Circle names are only canonical up to a marking- and homology-
// preserving relabelling, so character tables are compared through a
// bijection search.  A failed comparison at some rotation count is a
// certificate that the closures are not conjugate (respectively, that
// the closure together with its axis is not invertible); success at
// every level proves nothing.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/invariants.hpp"

namespace braidtrace {

// A circle-name bijection (first table's names to the second's) that
// preserves marking and homology class and carries every character
// entry onto an equal entry; std::nullopt when none exists.
std::optional<std::map<std::string, std::string>> tables_equivalent(
    const CharacterTable& first, const CharacterTable& second);

struct Verdict {
    bool distinguished = false;
    int level = 0;                     // rotation count of the first failure, or l_max
    std::string witness;               // non-empty exactly when distinguished
    std::vector<std::string> details;  // one comparison record per rotation count
};

// Compare the two closures for rotation counts 1..l_max, cheapest data
// first: circle counts per (marking, homology) class, the axis winding
// numbers W_a, degree-one invariants up to the role-order symmetry, and
// finally the character tables up to circle bijection.
Verdict distinguish(const BraidWord& first, const BraidWord& second, int l_max);

// distinguish against the reversed word; Distinguished means the
// closure together with its braid axis is a non-invertible link.
Verdict invertibility_test(const BraidWord& word, int l_max);

}  // namespace braidtrace
