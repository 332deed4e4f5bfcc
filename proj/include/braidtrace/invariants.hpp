// Invariants extracted from a rotation-loop transcript.
//
// Degree-one invariants count the signed triple moves of a fixed type
// (a, b)+/-; character tables refine the count by the trace-circle
// names of the three crossings involved.  The general evaluator sums a
// degree-d Gauss-diagram cochain over the transcript: each cochain
// entry is a configuration (the event triangle plus d-1 abstract
// arrows in a prescribed cyclic order), and every order- and
// marking-preserving embedding of its extra arrows into an event
// snapshot contributes the product of the matched writhes.
#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidtrace/braid.hpp"
#include "braidtrace/classify.hpp"
#include "braidtrace/loop.hpp"
#include "braidtrace/trace.hpp"

namespace braidtrace {

// Transcript, trace circles, and classified triple events of one
// canonical rotation loop, computed together.
struct LoopAnalysis {
    LoopTranscript transcript;
    TraceSet trace;
    std::vector<TripleEvent> triples;
};

LoopAnalysis analyze(const BraidWord& word, int rotations);

// ---------------------------------------------------------------------
// Degree-one invariants.

// Signed count of the triple events of ordered type (a, b)+/-.
long long gamma_deg1(const std::vector<TripleEvent>& triples, int a, int b,
                     TripleType type, int n);
long long gamma_deg1(const LoopTranscript& transcript, int a, int b, TripleType type);

struct GammaEntry {
    TripleType type{};
    int a = 0;
    int b = 0;
    long long value = 0;
};

// Full table over both types and all role markings 1..n-1.
std::vector<GammaEntry> gamma_table(const std::vector<TripleEvent>& triples, int n);

// ---------------------------------------------------------------------
// Character tables of degree one.

struct CharacterKey {
    TripleType type{};
    int a = 0;
    int b = 0;
    std::array<std::string, 3> names{};  // circle names: slot-a, slot-b, distinguished

    bool operator<(const CharacterKey& other) const;
    bool operator==(const CharacterKey& other) const;
};

struct CharacterTable {
    int n = 0;
    int rotations = 0;
    std::vector<TraceCircle> circles;            // context for name bijections
    std::map<CharacterKey, long long> entries;   // nonzero signed counts only
};

CharacterTable character_table_deg1(const LoopAnalysis& analysis);

// ---------------------------------------------------------------------
// Cochains of general degree.

struct ConfigArrow {
    int marking = 0;  // taken mod n
    int foot = 0;     // layout position of the undercrossing end
    int head = 0;     // layout position of the overcrossing end
};

// One configuration: the six triangle endpoints (reserved layout tokens
// a a' b b' c c', the unprimed token being the undercrossing end of the
// slot-a, slot-b and distinguished crossings) plus degree-1 extra
// arrows, all in one cyclic order.
struct Configuration {
    int degree = 1;
    TripleType type{};
    int a = 0;
    int b = 0;
    std::vector<std::string> layout;          // 2*(degree+2) distinct tokens
    std::vector<ConfigArrow> arrows;          // degree-1 extra arrows
    std::array<std::string, 3> role_names{};  // optional; empty = unnamed

    bool has_names() const { return !role_names[0].empty(); }
};

// Throws std::invalid_argument when the layout or arrows are malformed.
void validate_configuration(const Configuration& config, int n);

// Canonical text encoding, invariant under layout rotation and renaming
// of the extra-arrow tokens; equal encodings mean equal configurations.
std::string configuration_code(const Configuration& config, int n);

struct Cochain {
    int degree = 1;
    int n = 0;
    TripleType type{};
    int a = 0;
    int b = 0;
    std::vector<std::pair<int, Configuration>> entries;  // (coefficient, configuration)
};

// Strict parser for the text format (see README): a `cochain-v1` line,
// a header `degree <d>; n <n>; type <+|->; <a> <b>`, then one block per
// entry: `eps <+1|-1>`, `layout <tokens>`, `arrow <k> marking <m> from
// <pos> to <pos>` for k = 1..d-1, and an optional `names <3 tokens>`.
Cochain parse_cochain(std::istream& in);
Cochain parse_cochain(const std::string& text);
std::string emit_cochain(const Cochain& cochain);

// Sum of the cochain over all matching triple events of the loop.
long long evaluate_cochain(const LoopAnalysis& analysis, const Cochain& cochain);
long long evaluate_cochain(const LoopTranscript& transcript, const Cochain& cochain);

// The injective, order- and marking-preserving embeddings of one
// configuration's extra arrows into one event snapshot, summed with
// writhe products.  Exposed for the evaluator tests.
long long configuration_count(const TripleEvent& event, const Configuration& config, int n);

// ---------------------------------------------------------------------
// Configuration moves and cochain conditions.

enum class SlideMode { triangle_only, any_arrow };

// All configurations reachable by sliding one endpoint of one extra
// arrow over one cyclically adjacent endpoint (of the triangle only, or
// of any other arrow), deduplicated canonically.
std::vector<Configuration> adjacent_configs(const Configuration& config, SlideMode mode);

struct ConditionsReport {
    bool tri_pass = true;
    std::vector<std::string> tri_witnesses;
    bool tan_pass = true;
    std::vector<std::string> tan_witnesses;
    std::string t_status = "unchecked";
};

// tri: every slide-adjacent configuration of every entry must itself be
// an entry with the same coefficient.  tan: no entry may contain two
// equal-marking extra arrows whose four endpoints form two adjacent
// cyclic pairs.  The t-condition needs externally supplied associated
// configurations and is reported unchecked.
ConditionsReport check_conditions(const Cochain& cochain);

// ---------------------------------------------------------------------
// Lower bounds for the *-length of the loop class.

long long star_length_lower_bound(const CharacterTable& table);
long long star_length_lower_bound(const std::vector<GammaEntry>& gamma);

}  // namespace braidtrace
