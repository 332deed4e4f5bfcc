// Plain-data report emitted by the command-line tool, with JSON and
// text renderings.  The JSON layout is fixed: top-level keys `input`,
// `circles`, `events`, `gamma`, `characters`, `verdict`, `meta`, always
// in that order, so identical invocations produce identical bytes
// except for `meta.timing_ms`.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "braidtrace/classify.hpp"
#include "braidtrace/conjugacy.hpp"
#include "braidtrace/invariants.hpp"
#include "braidtrace/trace.hpp"

namespace braidtrace {

std::string version_string();

struct ReportCircle {
    std::string name;
    int marking = 0;
    int phi = 0;
    int t = 0;
    bool operator==(const ReportCircle&) const = default;
};

struct ReportEvent {
    int time = 0;
    int rotation = 0;
    int sign = 0;
    std::string type;
    int a = 0;
    int b = 0;
    std::array<std::string, 3> names{};
    bool operator==(const ReportEvent&) const = default;
};

struct ReportGamma {
    std::string type;
    int a = 0;
    int b = 0;
    int degree = 1;
    long long value = 0;
    bool operator==(const ReportGamma&) const = default;
};

struct ReportCharacter {
    std::string type;
    int a = 0;
    int b = 0;
    std::array<std::string, 3> names{};
    long long value = 0;
    bool operator==(const ReportCharacter&) const = default;
};

struct ReportVerdict {
    std::string outcome;  // "distinguished" or "inconclusive"
    int level = 0;
    std::string witness;
    std::vector<std::string> details;
    bool operator==(const ReportVerdict&) const = default;
};

struct ReportMeta {
    std::string version;
    double timing_ms = 0.0;
    bool operator==(const ReportMeta&) const = default;
};

struct Report {
    std::string command;
    std::string word;
    std::string word2;        // distinguish only
    std::string cochain;      // evaluate only: the cochain file path
    std::string result_word;  // cable only
    int n = 0;
    int l_min = 0;
    int l_max = 0;
    std::vector<ReportCircle> circles;
    std::vector<ReportEvent> events;
    std::vector<ReportGamma> gamma;
    std::vector<ReportCharacter> characters;
    std::optional<ReportVerdict> verdict;
    ReportMeta meta;
    bool operator==(const Report&) const = default;
};

// Conversions from the library's domain objects.
ReportCircle circle_row(const TraceCircle& circle);
ReportEvent event_row(const TripleEvent& event);
ReportGamma gamma_row(const GammaEntry& entry);
std::vector<ReportCharacter> character_rows(const CharacterTable& table);
ReportVerdict verdict_row(const Verdict& verdict);

std::string emit_report_json(const Report& report);
Report parse_report_json(const std::string& text);
std::string render_report_text(const Report& report);

}  // namespace braidtrace
