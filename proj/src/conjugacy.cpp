#include "braidtrace/conjugacy.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "braidtrace/diagram.hpp"

namespace braidtrace {

std::optional<std::map<std::string, std::string>> tables_equivalent(
    const CharacterTable& first, const CharacterTable& second) {
    if (first.n != second.n) return std::nullopt;

    using ClassKey = std::tuple<int, int, int>;  // (marking, phi, t)
    std::map<ClassKey, std::vector<std::string>> groups_a, groups_b;
    for (const TraceCircle& circle : first.circles)
        groups_a[{circle.marking, circle.phi, circle.t}].push_back(circle.name);
    for (const TraceCircle& circle : second.circles)
        groups_b[{circle.marking, circle.phi, circle.t}].push_back(circle.name);
    if (groups_a.size() != groups_b.size()) return std::nullopt;
    for (const auto& [key, names] : groups_a) {
        auto it = groups_b.find(key);
        if (it == groups_b.end() || it->second.size() != names.size()) return std::nullopt;
    }

    std::vector<std::string> order;                        // first table's names
    std::vector<const std::vector<std::string>*> pools;    // candidate images
    for (const auto& [key, names] : groups_a)
        for (const std::string& name : names) {
            order.push_back(name);
            pools.push_back(&groups_b.at(key));
        }

    std::map<std::string, std::string> sigma;
    std::set<std::string> used;
    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == order.size()) {
            std::map<CharacterKey, long long> renamed;
            for (const auto& [key, value] : first.entries) {
                CharacterKey image = key;
                for (std::string& name : image.names) name = sigma.at(name);
                renamed.emplace(image, value);
            }
            return renamed == second.entries;
        }
        for (const std::string& candidate : *pools[i]) {
            if (used.count(candidate)) continue;
            used.insert(candidate);
            sigma[order[i]] = candidate;
            if (search(i + 1)) return true;
            used.erase(candidate);
            sigma.erase(order[i]);
        }
        return false;
    };
    if (search(0)) return sigma;
    return std::nullopt;
}

namespace {

using ClassCount = std::map<std::tuple<int, int, int>, int>;

ClassCount circle_classes(const TraceSet& trace) {
    ClassCount counts;
    for (const TraceCircle& circle : trace.circles)
        ++counts[{circle.marking, circle.phi, circle.t}];
    return counts;
}

// Degree-one values grouped by type and unordered marking pair; the
// role-slot order is conventional, so only these multisets are
// comparable across words.
std::map<std::tuple<int, int, int>, std::multiset<long long>> gamma_classes(
    const std::vector<GammaEntry>& table) {
    std::map<std::tuple<int, int, int>, std::multiset<long long>> classes;
    for (const GammaEntry& entry : table) {
        const int lo = std::min(entry.a, entry.b);
        const int hi = std::max(entry.a, entry.b);
        classes[{entry.type == TripleType::minus ? 0 : 1, lo, hi}].insert(entry.value);
    }
    return classes;
}

}  // namespace

Verdict distinguish(const BraidWord& first, const BraidWord& second, int l_max) {
    if (first.n() != second.n())
        throw std::invalid_argument("distinguish: braids have different strand counts");
    if (l_max < 1)
        throw std::invalid_argument("distinguish: rotation bound must be at least 1");
    const int n = first.n();

    Verdict verdict;
    for (int l = 1; l <= l_max; ++l) {
        const LoopAnalysis analysis_a = analyze(first, l);
        const LoopAnalysis analysis_b = analyze(second, l);
        std::ostringstream record;
        record << "l=" << l << ":";

        if (circle_classes(analysis_a.trace) != circle_classes(analysis_b.trace)) {
            verdict.distinguished = true;
            verdict.level = l;
            verdict.witness = "trace circle (marking, homology) classes differ at l=" +
                              std::to_string(l);
            verdict.details.push_back(record.str() + " circle classes differ");
            return verdict;
        }
        record << " circles match";

        for (int a = 1; a <= n - 1; ++a) {
            if (w_invariant(first, a) != w_invariant(second, a)) {
                verdict.distinguished = true;
                verdict.level = l;
                verdict.witness = "axis winding invariant W_" + std::to_string(a) +
                                  " differs";
                verdict.details.push_back(record.str() + " W_" + std::to_string(a) +
                                          " differs");
                return verdict;
            }
        }
        record << ", W match";

        const auto gammas_a = gamma_classes(gamma_table(analysis_a.triples, n));
        const auto gammas_b = gamma_classes(gamma_table(analysis_b.triples, n));
        if (gammas_a != gammas_b) {
            verdict.distinguished = true;
            verdict.level = l;
            verdict.witness = "degree-one invariants differ at l=" + std::to_string(l);
            verdict.details.push_back(record.str() + ", degree-one invariants differ");
            return verdict;
        }
        record << ", degree-one invariants match";

        const CharacterTable table_a = character_table_deg1(analysis_a);
        const CharacterTable table_b = character_table_deg1(analysis_b);
        if (!tables_equivalent(table_a, table_b)) {
            verdict.distinguished = true;
            verdict.level = l;
            verdict.witness =
                "character tables admit no marking- and homology-preserving "
                "circle bijection at l=" +
                std::to_string(l);
            verdict.details.push_back(record.str() + ", character tables inequivalent");
            return verdict;
        }
        record << ", character tables equivalent";
        verdict.details.push_back(record.str());
    }
    verdict.distinguished = false;
    verdict.level = l_max;
    return verdict;
}

Verdict invertibility_test(const BraidWord& word, int l_max) {
    return distinguish(word, transform(word, Transform::reverse), l_max);
}

}  // namespace braidtrace
