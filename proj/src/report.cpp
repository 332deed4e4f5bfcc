#include "braidtrace/report.hpp"

#include <sstream>

#include "json.hpp"

namespace braidtrace {

using ordered_json = nlohmann::ordered_json;

std::string version_string() { return "braidtrace 1.0"; }

ReportCircle circle_row(const TraceCircle& circle) {
    return {circle.name, circle.marking, circle.phi, circle.t};
}

ReportEvent event_row(const TripleEvent& event) {
    return {event.time,
            event.rotation,
            event.sign,
            std::string(1, type_symbol(event.type)),
            event.a,
            event.b,
            event.role_names};
}

ReportGamma gamma_row(const GammaEntry& entry) {
    return {std::string(1, type_symbol(entry.type)), entry.a, entry.b, 1, entry.value};
}

std::vector<ReportCharacter> character_rows(const CharacterTable& table) {
    std::vector<ReportCharacter> rows;
    for (const auto& [key, value] : table.entries)
        rows.push_back({std::string(1, type_symbol(key.type)), key.a, key.b, key.names,
                        value});
    return rows;
}

ReportVerdict verdict_row(const Verdict& verdict) {
    return {verdict.distinguished ? "distinguished" : "inconclusive", verdict.level,
            verdict.witness, verdict.details};
}

std::string emit_report_json(const Report& report) {
    ordered_json input;
    input["command"] = report.command;
    input["word"] = report.word;
    if (!report.word2.empty()) input["word2"] = report.word2;
    if (!report.cochain.empty()) input["cochain"] = report.cochain;
    if (!report.result_word.empty()) input["result_word"] = report.result_word;
    input["n"] = report.n;
    input["l_min"] = report.l_min;
    input["l_max"] = report.l_max;

    ordered_json doc;
    doc["input"] = input;
    doc["circles"] = ordered_json::array();
    for (const ReportCircle& row : report.circles)
        doc["circles"].push_back({{"name", row.name},
                                  {"marking", row.marking},
                                  {"phi", row.phi},
                                  {"t", row.t}});
    doc["events"] = ordered_json::array();
    for (const ReportEvent& row : report.events)
        doc["events"].push_back({{"time", row.time},
                                 {"rotation", row.rotation},
                                 {"sign", row.sign},
                                 {"type", row.type},
                                 {"a", row.a},
                                 {"b", row.b},
                                 {"names", row.names}});
    doc["gamma"] = ordered_json::array();
    for (const ReportGamma& row : report.gamma)
        doc["gamma"].push_back({{"type", row.type},
                                {"a", row.a},
                                {"b", row.b},
                                {"degree", row.degree},
                                {"value", row.value}});
    doc["characters"] = ordered_json::array();
    for (const ReportCharacter& row : report.characters)
        doc["characters"].push_back({{"type", row.type},
                                     {"a", row.a},
                                     {"b", row.b},
                                     {"names", row.names},
                                     {"value", row.value}});
    if (report.verdict) {
        doc["verdict"] = {{"outcome", report.verdict->outcome},
                          {"level", report.verdict->level},
                          {"witness", report.verdict->witness},
                          {"details", report.verdict->details}};
    } else {
        doc["verdict"] = nullptr;
    }
    doc["meta"] = {{"version", report.meta.version},
                   {"timing_ms", report.meta.timing_ms}};
    return doc.dump(2) + "\n";
}

Report parse_report_json(const std::string& text) {
    const ordered_json doc = ordered_json::parse(text);
    Report report;
    const ordered_json& input = doc.at("input");
    report.command = input.at("command").get<std::string>();
    report.word = input.at("word").get<std::string>();
    report.word2 = input.value("word2", std::string());
    report.cochain = input.value("cochain", std::string());
    report.result_word = input.value("result_word", std::string());
    report.n = input.at("n").get<int>();
    report.l_min = input.at("l_min").get<int>();
    report.l_max = input.at("l_max").get<int>();
    for (const ordered_json& row : doc.at("circles"))
        report.circles.push_back({row.at("name").get<std::string>(),
                                  row.at("marking").get<int>(), row.at("phi").get<int>(),
                                  row.at("t").get<int>()});
    for (const ordered_json& row : doc.at("events"))
        report.events.push_back({row.at("time").get<int>(), row.at("rotation").get<int>(),
                                 row.at("sign").get<int>(),
                                 row.at("type").get<std::string>(), row.at("a").get<int>(),
                                 row.at("b").get<int>(),
                                 row.at("names").get<std::array<std::string, 3>>()});
    for (const ordered_json& row : doc.at("gamma"))
        report.gamma.push_back({row.at("type").get<std::string>(), row.at("a").get<int>(),
                                row.at("b").get<int>(), row.at("degree").get<int>(),
                                row.at("value").get<long long>()});
    for (const ordered_json& row : doc.at("characters"))
        report.characters.push_back({row.at("type").get<std::string>(),
                                     row.at("a").get<int>(), row.at("b").get<int>(),
                                     row.at("names").get<std::array<std::string, 3>>(),
                                     row.at("value").get<long long>()});
    if (!doc.at("verdict").is_null()) {
        const ordered_json& v = doc.at("verdict");
        report.verdict = ReportVerdict{v.at("outcome").get<std::string>(),
                                       v.at("level").get<int>(),
                                       v.at("witness").get<std::string>(),
                                       v.at("details").get<std::vector<std::string>>()};
    }
    report.meta.version = doc.at("meta").at("version").get<std::string>();
    report.meta.timing_ms = doc.at("meta").at("timing_ms").get<double>();
    return report;
}

std::string render_report_text(const Report& report) {
    std::ostringstream out;
    out << report.meta.version << " — " << report.command << '\n';
    out << "word: " << report.word << "  (n=" << report.n << ")\n";
    if (!report.word2.empty()) out << "word2: " << report.word2 << '\n';
    if (!report.cochain.empty()) out << "cochain: " << report.cochain << '\n';
    if (report.l_min == report.l_max) {
        if (report.l_min > 0) out << "rotations: l=" << report.l_min << '\n';
    } else {
        out << "rotations: l=" << report.l_min << ".." << report.l_max << '\n';
    }
    if (!report.result_word.empty()) out << "result: " << report.result_word << '\n';

    if (!report.circles.empty()) {
        out << "circles:\n";
        for (const ReportCircle& row : report.circles)
            out << "  " << row.name << "  marking " << row.marking << "  phi " << row.phi
                << "  t " << row.t << '\n';
    }
    if (!report.events.empty()) {
        out << "events:\n";
        for (const ReportEvent& row : report.events) {
            out << "  time " << row.time << "  rotation " << row.rotation << "  sign "
                << (row.sign > 0 ? "+1" : "-1") << "  type (" << row.a << "," << row.b
                << ")" << row.type;
            if (!row.names[0].empty())
                out << "  circles [" << row.names[0] << ' ' << row.names[1] << ' '
                    << row.names[2] << "]";
            out << '\n';
        }
    }
    if (!report.gamma.empty()) {
        out << "gamma:\n";
        for (const ReportGamma& row : report.gamma) {
            out << "  (" << row.a << "," << row.b << ")" << row.type;
            if (row.degree != 1) out << "  degree " << row.degree;
            out << "  = " << row.value << '\n';
        }
    }
    if (!report.characters.empty()) {
        out << "characters:\n";
        for (const ReportCharacter& row : report.characters)
            out << "  (" << row.a << "," << row.b << ")" << row.type << " [" << row.names[0]
                << ' ' << row.names[1] << ' ' << row.names[2] << "]  = " << row.value
                << '\n';
    }
    if (report.verdict) {
        out << "verdict: " << report.verdict->outcome;
        if (report.verdict->outcome == "distinguished")
            out << " at l=" << report.verdict->level << " — " << report.verdict->witness;
        else
            out << " up to l=" << report.verdict->level;
        out << '\n';
        for (const std::string& detail : report.verdict->details)
            out << "  " << detail << '\n';
    }
    return out.str();
}

}  // namespace braidtrace
