#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "braidtrace/invariants.hpp"
#include "corpus.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace braidtrace;

namespace {

// The degree-one configuration whose layout is the endpoint order
// observed at one event (any rotation of the cyclic order works).
Configuration degree1_config(const TripleEvent& ev, bool with_names) {
    Configuration config;
    config.degree = 1;
    config.type = ev.type;
    config.a = ev.a;
    config.b = ev.b;
    const char* feet[3] = {"a", "b", "c"};
    const char* heads[3] = {"a'", "b'", "c'"};
    std::vector<std::pair<int, std::string>> timed;
    for (int r = 0; r < 3; ++r) {
        const GaussArrow& arrow =
            ev.snapshot.arrows[static_cast<size_t>(ev.role_arrows[static_cast<size_t>(r)])];
        timed.push_back({arrow.under_time, feet[r]});
        timed.push_back({arrow.over_time, heads[r]});
    }
    std::sort(timed.begin(), timed.end());
    for (const auto& [time, token] : timed) {
        (void)time;
        config.layout.push_back(token);
    }
    if (with_names) config.role_names = ev.role_names;
    return config;
}

// One cochain per (type, a, b): every observed endpoint order as an
// entry with coefficient +1.
Cochain observed_cochain(const LoopAnalysis& analysis, TripleType type, int a, int b,
                         bool with_names, const std::array<std::string, 3>* names) {
    const int n = analysis.transcript.n;
    Cochain cochain;
    cochain.degree = 1;
    cochain.n = n;
    cochain.type = type;
    cochain.a = a;
    cochain.b = b;
    std::set<std::string> seen;
    for (const TripleEvent& ev : analysis.triples) {
        if (ev.type != type || ev.a != a || ev.b != b) continue;
        if (names && ev.role_names != *names) continue;
        Configuration config = degree1_config(ev, with_names);
        if (names) config.role_names = *names;
        if (seen.insert(configuration_code(config, n)).second)
            cochain.entries.emplace_back(+1, std::move(config));
    }
    return cochain;
}

Cochain random_cochain(std::mt19937& rng, int n, int degree) {
    Cochain cochain;
    cochain.degree = degree;
    cochain.n = n;
    std::uniform_int_distribution<int> pick_mark(1, n - 1);
    std::uniform_int_distribution<int> pick_type(0, 1);
    cochain.type = pick_type(rng) ? TripleType::plus : TripleType::minus;
    cochain.a = pick_mark(rng);
    cochain.b = pick_mark(rng);
    std::uniform_int_distribution<int> pick_entries(1, 2);
    const int entries = pick_entries(rng);
    for (int e = 0; e < entries; ++e) {
        Configuration config;
        config.degree = degree;
        config.type = cochain.type;
        config.a = cochain.a;
        config.b = cochain.b;
        config.layout = {"a", "b", "c", "a'", "b'", "c'"};
        std::vector<std::pair<std::string, std::string>> tokens;
        for (int k = 1; k < degree; ++k) {
            const std::string u = "u" + std::to_string(k);
            const std::string v = "v" + std::to_string(k);
            std::uniform_int_distribution<size_t> pos(0, config.layout.size());
            config.layout.insert(config.layout.begin() + static_cast<long>(pos(rng)), u);
            std::uniform_int_distribution<size_t> pos2(0, config.layout.size());
            config.layout.insert(config.layout.begin() + static_cast<long>(pos2(rng)), v);
            tokens.push_back({u, v});
        }
        std::uniform_int_distribution<int> pick_any_mark(0, n - 1);
        for (const auto& [u, v] : tokens) {
            ConfigArrow arrow;
            arrow.marking = pick_any_mark(rng);
            arrow.foot = static_cast<int>(
                std::find(config.layout.begin(), config.layout.end(), u) - config.layout.begin());
            arrow.head = static_cast<int>(
                std::find(config.layout.begin(), config.layout.end(), v) - config.layout.begin());
            config.arrows.push_back(arrow);
        }
        validate_configuration(config, n);
        cochain.entries.emplace_back(pick_type(rng) ? +1 : -1, std::move(config));
    }
    return cochain;
}

Configuration sample_degree2(int marking) {
    Configuration config;
    config.degree = 2;
    config.type = TripleType::minus;
    config.a = 1;
    config.b = 1;
    config.layout = {"a", "x", "b", "c", "a'", "y", "b'", "c'"};
    config.arrows.push_back({marking, 1, 5});
    return config;
}

}  // namespace

TEST_CASE("a degree-one cochain over the observed patterns recovers gamma") {
    std::mt19937 rng(6001);
    for (int trial = 0; trial < 8; ++trial) {
        const BraidWord w = corpus::random_knot_word(rng, 5, 8);
        const LoopAnalysis analysis = analyze(w, 1 + trial % 2);
        for (TripleType type : {TripleType::minus, TripleType::plus})
            for (int a = 1; a <= w.n() - 1; ++a)
                for (int b = 1; b <= w.n() - 1; ++b) {
                    const Cochain cochain = observed_cochain(analysis, type, a, b, false, nullptr);
                    if (cochain.entries.empty()) continue;
                    CHECK(evaluate_cochain(analysis, cochain) ==
                          gamma_deg1(analysis.triples, a, b, type, w.n()));
                }
    }
}

TEST_CASE("a named degree-one cochain recovers one character entry") {
    const LoopAnalysis analysis = analyze(parse_word("2 -1", 3), 2);
    const CharacterTable table = character_table_deg1(analysis);
    REQUIRE(!table.entries.empty());
    for (const auto& [key, value] : table.entries) {
        const Cochain cochain =
            observed_cochain(analysis, key.type, key.a, key.b, true, &key.names);
        REQUIRE(!cochain.entries.empty());
        CHECK(evaluate_cochain(analysis, cochain) == value);
    }
}

TEST_CASE("evaluator agrees with the brute-force matcher") {
    std::mt19937 rng(6002);
    int done = 0;
    while (done < 20) {
        const BraidWord w = corpus::random_knot_word(rng, 4, 6);
        const LoopAnalysis analysis = analyze(w, 1);
        const Cochain cochain = random_cochain(rng, w.n(), 2 + done % 2);
        CHECK(evaluate_cochain(analysis, cochain) ==
              oracles::naive_cochain_evaluation(analysis.triples, cochain, w.n()));
        ++done;
    }
}

TEST_CASE("cochains of degree beyond the diagram size evaluate to zero") {
    std::mt19937 rng(6003);
    for (int trial = 0; trial < 20; ++trial) {
        const BraidWord w = corpus::random_knot_word(rng, 4, 6);
        const int degree = w.length() + w.n() * w.n() - w.n() - 1 + trial % 2;
        const Cochain cochain = random_cochain(rng, w.n(), degree);
        CHECK(evaluate_cochain(analyze(w, 1), cochain) == 0);
    }
}

TEST_CASE("character tables refine the degree-one invariants") {
    std::mt19937 rng(6004);
    for (int trial = 0; trial < 10; ++trial) {
        const BraidWord w = corpus::random_knot_word(rng, 5, 8);
        const LoopAnalysis analysis = analyze(w, 1 + trial % 2);
        const CharacterTable table = character_table_deg1(analysis);
        std::map<std::tuple<int, int, int>, long long> marginals;
        for (const auto& [key, value] : table.entries) {
            CHECK(value != 0);  // zero entries are pruned
            marginals[{key.type == TripleType::plus, key.a, key.b}] += value;
        }
        for (TripleType type : {TripleType::minus, TripleType::plus})
            for (int a = 1; a <= w.n() - 1; ++a)
                for (int b = 1; b <= w.n() - 1; ++b) {
                    const auto it =
                        marginals.find({type == TripleType::plus, a, b});
                    const long long sum = it == marginals.end() ? 0 : it->second;
                    CHECK(sum == gamma_deg1(analysis.triples, a, b, type, w.n()));
                }
    }
}

TEST_CASE("frozen character tables of the two-crossing word") {
    const LoopAnalysis at_1 = analyze(parse_word("2 -1", 3), 1);
    CHECK(character_table_deg1(at_1).entries.empty());

    const LoopAnalysis at_2 = analyze(parse_word("2 -1", 3), 2);
    const CharacterTable table = character_table_deg1(at_2);
    REQUIRE(table.entries.size() == 8);
    auto value = [&](TripleType type, int a, const char* r1, const char* r2, const char* r3) {
        CharacterKey key{type, a, a, {r1, r2, r3}};
        return table.entries.at(key);
    };
    CHECK(value(TripleType::minus, 1, "x1", "x1", "x3") == +1);
    CHECK(value(TripleType::minus, 1, "x1", "x1", "x4") == -1);
    CHECK(value(TripleType::minus, 1, "x2", "x2", "x3") == -1);
    CHECK(value(TripleType::minus, 1, "x2", "x2", "x4") == +1);
    CHECK(value(TripleType::plus, 2, "x3", "x3", "x1") == -1);
    CHECK(value(TripleType::plus, 2, "x3", "x3", "x2") == +1);
    CHECK(value(TripleType::plus, 2, "x4", "x4", "x1") == +1);
    CHECK(value(TripleType::plus, 2, "x4", "x4", "x2") == -1);
    CHECK(star_length_lower_bound(table) == 8);
}

TEST_CASE("star-length bound from the worked example's gamma table") {
    const LoopAnalysis analysis = analyze(parse_word("1 -2 -3"), 1);
    CHECK(star_length_lower_bound(gamma_table(analysis.triples, 4)) == 4);
    CHECK(star_length_lower_bound(character_table_deg1(analysis)) >= 4);
}

TEST_CASE("configuration slides") {
    // No extra arrows: nothing to slide.
    const LoopAnalysis analysis = analyze(parse_word("2 -1", 3), 1);
    const Configuration deg1 = degree1_config(analysis.triples.front(), false);
    CHECK(adjacent_configs(deg1, SlideMode::triangle_only).empty());
    CHECK(adjacent_configs(deg1, SlideMode::any_arrow).empty());

    // A lone extra arrow between triangle endpoints has four slides.
    const Configuration deg2 = sample_degree2(1);
    validate_configuration(deg2, 3);
    CHECK(adjacent_configs(deg2, SlideMode::triangle_only).size() == 4);
    CHECK(adjacent_configs(deg2, SlideMode::any_arrow).size() == 4);

    // Slides over other extra arrows appear only in any_arrow mode.
    Configuration deg3;
    deg3.degree = 3;
    deg3.type = TripleType::minus;
    deg3.a = 1;
    deg3.b = 1;
    deg3.layout = {"a", "x", "u", "b", "c", "a'", "y", "v", "b'", "c'"};
    deg3.arrows.push_back({1, 1, 6});  // x -> y
    deg3.arrows.push_back({2, 2, 7});  // u -> v
    validate_configuration(deg3, 3);
    std::set<std::string> tri_codes, any_codes;
    for (const Configuration& c : adjacent_configs(deg3, SlideMode::triangle_only))
        tri_codes.insert(configuration_code(c, 3));
    for (const Configuration& c : adjacent_configs(deg3, SlideMode::any_arrow))
        any_codes.insert(configuration_code(c, 3));
    CHECK(tri_codes.size() < any_codes.size());
    for (const std::string& code : tri_codes) CHECK(any_codes.count(code) == 1);
}

TEST_CASE("cochain conditions") {
    // Degree one: no extra arrows, trivially closed under slides.
    const LoopAnalysis analysis = analyze(parse_word("2 -1", 3), 1);
    Cochain closed = observed_cochain(analysis, analysis.triples.front().type,
                                      analysis.triples.front().a, analysis.triples.front().b,
                                      false, nullptr);
    const ConditionsReport ok = check_conditions(closed);
    CHECK(ok.tri_pass);
    CHECK(ok.tan_pass);
    CHECK(ok.t_status == "unchecked");

    // A lone degree-two entry misses all four neighbours.
    Cochain open_cochain;
    open_cochain.degree = 2;
    open_cochain.n = 3;
    open_cochain.type = TripleType::minus;
    open_cochain.a = 1;
    open_cochain.b = 1;
    open_cochain.entries.emplace_back(+1, sample_degree2(1));
    const ConditionsReport bad = check_conditions(open_cochain);
    CHECK_FALSE(bad.tri_pass);
    CHECK(!bad.tri_witnesses.empty());

    // Two equal-marking arrows with doubly adjacent endpoints.
    Configuration tangle;
    tangle.degree = 3;
    tangle.type = TripleType::minus;
    tangle.a = 1;
    tangle.b = 1;
    tangle.layout = {"a", "x", "u", "b", "c", "a'", "y", "v", "b'", "c'"};
    tangle.arrows.push_back({1, 1, 6});  // x -> y
    tangle.arrows.push_back({1, 2, 7});  // u -> v, same marking, parallel
    validate_configuration(tangle, 3);
    Cochain tangled;
    tangled.degree = 3;
    tangled.n = 3;
    tangled.type = TripleType::minus;
    tangled.a = 1;
    tangled.b = 1;
    tangled.entries.emplace_back(+1, tangle);
    const ConditionsReport tan = check_conditions(tangled);
    CHECK_FALSE(tan.tan_pass);
    CHECK(!tan.tan_witnesses.empty());
}

TEST_CASE("cochain text format round trip") {
    std::mt19937 rng(6005);
    for (int trial = 0; trial < 20; ++trial) {
        const Cochain cochain = random_cochain(rng, 4, 1 + trial % 3);
        const std::string text = emit_cochain(cochain);
        CHECK(emit_cochain(parse_cochain(text)) == text);
    }
}

TEST_CASE("cochain parser rejects malformed input") {
    CHECK_THROWS_AS(parse_cochain("not-a-cochain\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_cochain("cochain-v1\n"), std::invalid_argument);
    const std::string header = "cochain-v1\ndegree 1; n 3; type -; 1 1\n";
    CHECK_THROWS_AS(parse_cochain(header), std::invalid_argument);  // no entries
    CHECK_THROWS_AS(parse_cochain(header + "eps +1\nlayout a b c a' b'\n"),
                    std::invalid_argument);  // five tokens only
    CHECK_THROWS_AS(parse_cochain(header + "eps 2\nlayout a b c a' b' c'\n"),
                    std::invalid_argument);  // bad coefficient
    // An arrow endpoint may not sit on a triangle token.
    CHECK_THROWS_AS(
        parse_cochain("cochain-v1\ndegree 2; n 3; type -; 1 1\n"
                      "eps +1\nlayout a x b c a' y b' c'\narrow 1 marking 1 from 0 to 5\n"),
        std::invalid_argument);
    // Valid two-entry file with comments parses.
    const Cochain parsed = parse_cochain(
        "# comment\ncochain-v1\n\ndegree 2; n 3; type +; 2 1\n"
        "eps -1\nlayout a x b c a' y b' c'\narrow 1 marking 2 from 1 to 5\n\n"
        "eps +1\nlayout a b x c a' b' y c'\narrow 1 marking 0 from 2 to 6\nnames x1 x2 x3\n");
    CHECK(parsed.entries.size() == 2);
    CHECK(parsed.type == TripleType::plus);
    CHECK(parsed.entries[1].second.has_names());
}
