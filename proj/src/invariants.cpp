#include "braidtrace/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <istream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace braidtrace {

namespace {

const std::array<std::string, 6> reserved_tokens = {"a", "a'", "b", "b'", "c", "c'"};

bool is_reserved(const std::string& token) {
    return std::find(reserved_tokens.begin(), reserved_tokens.end(), token) !=
           reserved_tokens.end();
}

int normalize_marking(int marking, int n) { return ((marking % n) + n) % n; }

int type_rank(TripleType type) { return type == TripleType::minus ? 0 : 1; }

}  // namespace

LoopAnalysis analyze(const BraidWord& word, int rotations) {
    LoopAnalysis out;
    out.transcript = canonical_loop(word, rotations);
    out.trace = trace_circles(out.transcript);
    out.triples = classify_transcript(out.transcript, out.trace);
    return out;
}

// ---------------------------------------------------------------------
// Degree-one invariants.

long long gamma_deg1(const std::vector<TripleEvent>& triples, int a, int b,
                     TripleType type, int n) {
    if (a < 1 || a > n - 1 || b < 1 || b > n - 1)
        throw std::invalid_argument("gamma: role markings must lie in 1..n-1");
    long long total = 0;
    for (const TripleEvent& ev : triples)
        if (ev.type == type && ev.a == a && ev.b == b) total += ev.sign;
    return total;
}

long long gamma_deg1(const LoopTranscript& transcript, int a, int b, TripleType type) {
    return gamma_deg1(classify_transcript(transcript), a, b, type, transcript.n);
}

std::vector<GammaEntry> gamma_table(const std::vector<TripleEvent>& triples, int n) {
    std::vector<GammaEntry> table;
    for (TripleType type : {TripleType::minus, TripleType::plus})
        for (int a = 1; a <= n - 1; ++a)
            for (int b = 1; b <= n - 1; ++b)
                table.push_back({type, a, b, gamma_deg1(triples, a, b, type, n)});
    return table;
}

// ---------------------------------------------------------------------
// Character tables.

bool CharacterKey::operator<(const CharacterKey& other) const {
    return std::make_tuple(type_rank(type), a, b, names) <
           std::make_tuple(type_rank(other.type), other.a, other.b, other.names);
}

bool CharacterKey::operator==(const CharacterKey& other) const {
    return type == other.type && a == other.a && b == other.b && names == other.names;
}

CharacterTable character_table_deg1(const LoopAnalysis& analysis) {
    CharacterTable table;
    table.n = analysis.transcript.n;
    table.rotations = analysis.transcript.l;
    table.circles = analysis.trace.circles;
    for (const TripleEvent& ev : analysis.triples) {
        if (ev.role_names[0].empty())
            throw std::logic_error("character table: events lack circle names");
        CharacterKey key{ev.type, ev.a, ev.b, ev.role_names};
        table.entries[key] += ev.sign;
    }
    for (auto it = table.entries.begin(); it != table.entries.end();)
        it = it->second == 0 ? table.entries.erase(it) : std::next(it);
    return table;
}

// ---------------------------------------------------------------------
// Configuration validation and canonical encoding.

void validate_configuration(const Configuration& config, int n) {
    if (n < 2) throw std::invalid_argument("configuration: strand count must be at least 2");
    if (config.degree < 1)
        throw std::invalid_argument("configuration: degree must be at least 1");
    const int m = 2 * (config.degree + 2);
    if (static_cast<int>(config.layout.size()) != m)
        throw std::invalid_argument("configuration: layout must have 2*(degree+2) tokens");
    std::set<std::string> seen(config.layout.begin(), config.layout.end());
    if (static_cast<int>(seen.size()) != m)
        throw std::invalid_argument("configuration: layout tokens must be distinct");
    for (const std::string& token : reserved_tokens)
        if (seen.count(token) == 0)
            throw std::invalid_argument("configuration: layout must contain the tokens "
                                        "a a' b b' c c'");
    if (static_cast<int>(config.arrows.size()) != config.degree - 1)
        throw std::invalid_argument("configuration: expected degree-1 extra arrows");

    std::vector<int> use(m, 0);
    for (int i = 0; i < m; ++i)
        if (is_reserved(config.layout[i])) use[i] = 1;
    for (const ConfigArrow& arrow : config.arrows) {
        for (int pos : {arrow.foot, arrow.head}) {
            if (pos < 0 || pos >= m)
                throw std::invalid_argument("configuration: arrow position out of range");
            if (is_reserved(config.layout[pos]))
                throw std::invalid_argument(
                    "configuration: arrow endpoint collides with a triangle token");
            if (use[pos]++)
                throw std::invalid_argument("configuration: layout position used twice");
        }
        if (arrow.foot == arrow.head)
            throw std::invalid_argument("configuration: arrow endpoints must differ");
    }
    for (int i = 0; i < m; ++i)
        if (use[i] == 0)
            throw std::invalid_argument("configuration: layout token not used by any arrow");
    // Any cyclic order of the triangle tokens is legal; orders that no
    // triple move realizes simply never match anything.

    const bool named = !config.role_names[0].empty();
    for (const std::string& name : config.role_names)
        if (name.empty() == named)
            throw std::invalid_argument(
                "configuration: role names must be all present or all absent");
}

std::string configuration_code(const Configuration& config, int n) {
    const int m = static_cast<int>(config.layout.size());
    const int start = static_cast<int>(
        std::find(config.layout.begin(), config.layout.end(), "a") -
        config.layout.begin());
    if (start == m) throw std::logic_error("configuration code: missing token a");

    // Which extra arrow owns each layout position, and which end.
    std::vector<int> owner(m, -1), is_head(m, 0);
    for (std::size_t k = 0; k < config.arrows.size(); ++k) {
        owner[config.arrows[k].foot] = static_cast<int>(k);
        owner[config.arrows[k].head] = static_cast<int>(k);
        is_head[config.arrows[k].head] = 1;
    }

    std::ostringstream out;
    out << type_symbol(config.type) << ' ' << config.a << ' ' << config.b << ' '
        << config.degree;
    if (config.has_names())
        out << " [" << config.role_names[0] << ' ' << config.role_names[1] << ' '
            << config.role_names[2] << ']';
    std::vector<int> renumber(config.arrows.size(), -1);
    int next = 0;
    for (int i = 0; i < m; ++i) {
        const int pos = (start + i) % m;
        out << '|';
        if (owner[pos] < 0) {
            out << config.layout[pos];
            continue;
        }
        int& label = renumber[owner[pos]];
        if (label < 0) label = next++;
        const int marking = n >= 2 ? normalize_marking(config.arrows[owner[pos]].marking, n)
                                   : config.arrows[owner[pos]].marking;
        out << 'k' << label << (is_head[pos] ? 'h' : 'f') << ':' << marking;
    }
    return out.str();
}

// ---------------------------------------------------------------------
// Cochain text format.

namespace {

std::string trim(const std::string& line) {
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = line.find_last_not_of(" \t\r\n");
    return line.substr(first, last - first + 1);
}

struct LineReader {
    std::istream& in;
    int number = 0;

    // Next non-empty, non-comment line, or empty string at end of input.
    std::string next() {
        std::string line;
        while (std::getline(in, line)) {
            ++number;
            line = trim(line);
            if (!line.empty() && line[0] != '#') return line;
        }
        return "";
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw std::invalid_argument("cochain parse: line " + std::to_string(number) +
                                    ": " + message);
    }
};

int parse_int(const std::string& token, LineReader& reader) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception&) {
        reader.fail("expected an integer, got '" + token + "'");
    }
    if (used != token.size()) reader.fail("expected an integer, got '" + token + "'");
    return value;
}

}  // namespace

Cochain parse_cochain(std::istream& in) {
    LineReader reader{in};
    if (reader.next() != "cochain-v1") reader.fail("missing cochain-v1 version line");

    const std::string header = reader.next();
    std::vector<std::string> parts;
    std::stringstream split(header);
    std::string piece;
    while (std::getline(split, piece, ';')) parts.push_back(trim(piece));
    if (parts.size() != 4)
        reader.fail("header must read 'degree <d>; n <n>; type <+|->; <a> <b>'");

    Cochain cochain;
    std::istringstream head0(parts[0]), head1(parts[1]), head2(parts[2]), head3(parts[3]);
    std::string keyword, value;
    if (!(head0 >> keyword >> value) || keyword != "degree") reader.fail("expected 'degree <d>'");
    cochain.degree = parse_int(value, reader);
    if (!(head1 >> keyword >> value) || keyword != "n") reader.fail("expected 'n <n>'");
    cochain.n = parse_int(value, reader);
    if (!(head2 >> keyword >> value) || keyword != "type" || (value != "+" && value != "-"))
        reader.fail("expected 'type +' or 'type -'");
    cochain.type = value == "-" ? TripleType::minus : TripleType::plus;
    std::string second;
    if (!(head3 >> value >> second)) reader.fail("expected the role markings '<a> <b>'");
    cochain.a = parse_int(value, reader);
    cochain.b = parse_int(second, reader);
    if (cochain.degree < 1) reader.fail("degree must be at least 1");
    if (cochain.n < 2) reader.fail("strand count must be at least 2");

    std::string line = reader.next();
    while (!line.empty()) {
        std::istringstream eps_line(line);
        std::string eps_token;
        if (!(eps_line >> keyword >> eps_token) || keyword != "eps" ||
            (eps_token != "+1" && eps_token != "-1"))
            reader.fail("expected 'eps +1' or 'eps -1'");
        Configuration config;
        config.degree = cochain.degree;
        config.type = cochain.type;
        config.a = cochain.a;
        config.b = cochain.b;
        const int eps = eps_token == "+1" ? +1 : -1;

        std::istringstream layout_line(reader.next());
        if (!(layout_line >> keyword) || keyword != "layout")
            reader.fail("expected a 'layout' line");
        std::string token;
        while (layout_line >> token) config.layout.push_back(token);

        config.arrows.resize(cochain.degree - 1);
        std::vector<bool> have(cochain.degree - 1, false);
        for (int k = 1; k < cochain.degree; ++k) {
            std::istringstream arrow_line(reader.next());
            std::string marking_kw, from_kw, to_kw, index, marking, from, to;
            if (!(arrow_line >> keyword >> index >> marking_kw >> marking >> from_kw >>
                  from >> to_kw >> to) ||
                keyword != "arrow" || marking_kw != "marking" || from_kw != "from" ||
                to_kw != "to")
                reader.fail("expected 'arrow <k> marking <m> from <pos> to <pos>'");
            const int which = parse_int(index, reader);
            if (which < 1 || which >= cochain.degree || have[which - 1])
                reader.fail("arrow indices must cover 1..degree-1 exactly once");
            have[which - 1] = true;
            ConfigArrow& arrow = config.arrows[which - 1];
            arrow.marking = normalize_marking(parse_int(marking, reader), cochain.n);
            arrow.foot = parse_int(from, reader);
            arrow.head = parse_int(to, reader);
        }

        line = reader.next();
        std::istringstream names_line(line);
        if (names_line >> keyword && keyword == "names") {
            if (!(names_line >> config.role_names[0] >> config.role_names[1] >>
                  config.role_names[2]))
                reader.fail("expected 'names <slot-a> <slot-b> <distinguished>'");
            std::string extra;
            if (names_line >> extra) reader.fail("names line takes exactly three tokens");
            line = reader.next();
        }

        try {
            validate_configuration(config, cochain.n);
        } catch (const std::invalid_argument& err) {
            reader.fail(err.what());
        }
        cochain.entries.emplace_back(eps, std::move(config));
    }
    if (cochain.entries.empty()) reader.fail("cochain has no configurations");
    return cochain;
}

Cochain parse_cochain(const std::string& text) {
    std::istringstream in(text);
    return parse_cochain(in);
}

std::string emit_cochain(const Cochain& cochain) {
    std::ostringstream out;
    out << "cochain-v1\n";
    out << "degree " << cochain.degree << "; n " << cochain.n << "; type "
        << type_symbol(cochain.type) << "; " << cochain.a << ' ' << cochain.b << '\n';
    for (const auto& [eps, config] : cochain.entries) {
        out << "eps " << (eps > 0 ? "+1" : "-1") << '\n';
        out << "layout";
        for (const std::string& token : config.layout) out << ' ' << token;
        out << '\n';
        for (std::size_t k = 0; k < config.arrows.size(); ++k)
            out << "arrow " << k + 1 << " marking " << config.arrows[k].marking
                << " from " << config.arrows[k].foot << " to " << config.arrows[k].head
                << '\n';
        if (config.has_names())
            out << "names " << config.role_names[0] << ' ' << config.role_names[1] << ' '
                << config.role_names[2] << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------
// Cochain evaluation.

long long configuration_count(const TripleEvent& event, const Configuration& config,
                              int n) {
    if (event.type != config.type ||
        event.a != normalize_marking(config.a, n) ||
        event.b != normalize_marking(config.b, n))
        return 0;
    if (config.has_names()) {
        if (event.role_names[0].empty())
            throw std::logic_error(
                "configuration count: named configuration needs circle names");
        if (event.role_names != config.role_names) return 0;
    }

    const int m = static_cast<int>(config.layout.size());
    // Traversal times of every layout position: the six triangle tokens
    // are fixed by the event; extra-arrow endpoints get filled per
    // matching.
    std::vector<int> times(m, -1);
    for (int slot = 0; slot < 3; ++slot) {
        const GaussArrow& arrow = event.snapshot.arrows.at(event.role_arrows[slot]);
        const std::string foot(1, "abc"[slot]);
        const auto foot_it = std::find(config.layout.begin(), config.layout.end(), foot);
        const auto head_it =
            std::find(config.layout.begin(), config.layout.end(), foot + "'");
        times[foot_it - config.layout.begin()] = arrow.under_time;
        times[head_it - config.layout.begin()] = arrow.over_time;
    }

    std::vector<int> candidates;
    for (std::size_t i = 0; i < event.snapshot.arrows.size(); ++i) {
        const int idx = static_cast<int>(i);
        if (idx != event.role_arrows[0] && idx != event.role_arrows[1] &&
            idx != event.role_arrows[2])
            candidates.push_back(idx);
    }

    auto order_matches = [&]() {
        std::vector<std::pair<int, int>> ends;  // (time, layout position)
        ends.reserve(m);
        for (int i = 0; i < m; ++i) ends.emplace_back(times[i], i);
        std::sort(ends.begin(), ends.end());
        const int first = ends[0].second;
        for (int i = 1; i < m; ++i)
            if (ends[i].second != (first + i) % m) return false;
        return true;
    };

    const int extra = static_cast<int>(config.arrows.size());
    if (extra > static_cast<int>(candidates.size())) return 0;
    std::vector<bool> used(event.snapshot.arrows.size(), false);
    long long total = 0;
    std::function<void(int, long long)> assign = [&](int k, long long writhe_product) {
        if (k == extra) {
            if (order_matches()) total += writhe_product;
            return;
        }
        const ConfigArrow& wanted = config.arrows[k];
        for (int idx : candidates) {
            if (used[idx]) continue;
            const GaussArrow& arrow = event.snapshot.arrows[idx];
            if (arrow.marking != normalize_marking(wanted.marking, n)) continue;
            used[idx] = true;
            times[wanted.foot] = arrow.under_time;
            times[wanted.head] = arrow.over_time;
            assign(k + 1, writhe_product * arrow.writhe);
            times[wanted.foot] = times[wanted.head] = -1;
            used[idx] = false;
        }
    };
    assign(0, 1);
    return total;
}

namespace {

long long evaluate_impl(const std::vector<TripleEvent>& triples, const Cochain& cochain,
                        int n) {
    if (cochain.n != n)
        throw std::invalid_argument("cochain strand count differs from the braid");
    for (const auto& [eps, config] : cochain.entries) {
        if (eps != 1 && eps != -1)
            throw std::invalid_argument("cochain coefficients must be +1 or -1");
        if (config.type != cochain.type || config.a != cochain.a || config.b != cochain.b ||
            config.degree != cochain.degree)
            throw std::invalid_argument("cochain entries must share the header data");
        validate_configuration(config, n);
    }
    long long total = 0;
    for (const TripleEvent& ev : triples) {
        if (ev.type != cochain.type || ev.a != normalize_marking(cochain.a, n) ||
            ev.b != normalize_marking(cochain.b, n))
            continue;
        long long inner = 0;
        for (const auto& [eps, config] : cochain.entries)
            inner += eps * configuration_count(ev, config, n);
        total += ev.sign * inner;
    }
    return total;
}

}  // namespace

long long evaluate_cochain(const LoopAnalysis& analysis, const Cochain& cochain) {
    return evaluate_impl(analysis.triples, cochain, analysis.transcript.n);
}

long long evaluate_cochain(const LoopTranscript& transcript, const Cochain& cochain) {
    const TraceSet trace = trace_circles(transcript);
    return evaluate_impl(classify_transcript(transcript, trace), cochain, transcript.n);
}

// ---------------------------------------------------------------------
// Configuration slides and cochain conditions.

std::vector<Configuration> adjacent_configs(const Configuration& config, SlideMode mode) {
    const int m = static_cast<int>(config.layout.size());
    std::vector<Configuration> out;
    std::set<std::string> seen;

    auto slide = [&](int endpoint, int over) {
        Configuration next = config;
        std::swap(next.layout[endpoint], next.layout[over]);
        for (ConfigArrow& arrow : next.arrows) {
            for (int* pos : {&arrow.foot, &arrow.head}) {
                if (*pos == endpoint)
                    *pos = over;
                else if (*pos == over)
                    *pos = endpoint;
            }
        }
        // Raw markings: slides never change them, so the code is
        // comparison-safe within one call.
        if (seen.insert(configuration_code(next, 0)).second) out.push_back(std::move(next));
    };

    for (const ConfigArrow& arrow : config.arrows) {
        for (int endpoint : {arrow.foot, arrow.head}) {
            for (int step : {1, m - 1}) {
                const int over = (endpoint + step) % m;
                if (over == arrow.foot || over == arrow.head) continue;
                if (mode == SlideMode::triangle_only && !is_reserved(config.layout[over]))
                    continue;
                slide(endpoint, over);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Configuration& x, const Configuration& y) {
        return configuration_code(x, 0) < configuration_code(y, 0);
    });
    return out;
}

ConditionsReport check_conditions(const Cochain& cochain) {
    ConditionsReport report;

    std::map<std::string, int> coefficient;
    for (std::size_t k = 0; k < cochain.entries.size(); ++k) {
        const auto& [eps, config] = cochain.entries[k];
        const std::string code = configuration_code(config, cochain.n);
        auto [it, fresh] = coefficient.emplace(code, eps);
        if (!fresh && it->second != eps)
            report.tri_witnesses.push_back(
                "entry " + std::to_string(k + 1) +
                " repeats a configuration with the opposite coefficient");
    }

    for (std::size_t k = 0; k < cochain.entries.size(); ++k) {
        const auto& [eps, config] = cochain.entries[k];
        for (const Configuration& adj : adjacent_configs(config, SlideMode::any_arrow)) {
            const std::string code = configuration_code(adj, cochain.n);
            auto it = coefficient.find(code);
            if (it == coefficient.end())
                report.tri_witnesses.push_back("entry " + std::to_string(k + 1) +
                                               ": adjacent configuration missing: " + code);
            else if (it->second != eps)
                report.tri_witnesses.push_back(
                    "entry " + std::to_string(k + 1) +
                    ": adjacent configuration has the wrong coefficient: " + code);
        }
    }
    report.tri_pass = report.tri_witnesses.empty();

    const int m = 2 * (cochain.degree + 2);
    auto adjacent_positions = [&](int x, int y) {
        return (x + 1) % m == y || (y + 1) % m == x;
    };
    for (std::size_t k = 0; k < cochain.entries.size(); ++k) {
        const auto& config = cochain.entries[k].second;
        for (std::size_t i = 0; i < config.arrows.size(); ++i)
            for (std::size_t j = i + 1; j < config.arrows.size(); ++j) {
                const ConfigArrow& first = config.arrows[i];
                const ConfigArrow& second = config.arrows[j];
                if (normalize_marking(first.marking, cochain.n) !=
                    normalize_marking(second.marking, cochain.n))
                    continue;
                const bool parallel = adjacent_positions(first.foot, second.foot) &&
                                      adjacent_positions(first.head, second.head);
                const bool reversed = adjacent_positions(first.foot, second.head) &&
                                      adjacent_positions(first.head, second.foot);
                if (parallel || reversed)
                    report.tan_witnesses.push_back(
                        "entry " + std::to_string(k + 1) + ": extra arrows " +
                        std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                        " form an equal-marking tangency pair");
            }
    }
    report.tan_pass = report.tan_witnesses.empty();
    report.t_status = "unchecked";
    return report;
}

// ---------------------------------------------------------------------
// *-length lower bounds.

long long star_length_lower_bound(const CharacterTable& table) {
    long long total = 0;
    for (const auto& [key, value] : table.entries) total += std::llabs(value);
    return total;
}

long long star_length_lower_bound(const std::vector<GammaEntry>& gamma) {
    long long total = 0;
    for (const GammaEntry& entry : gamma)
        if (entry.a <= entry.b) total += std::llabs(entry.value);
    return 2 * total;
}

}  // namespace braidtrace
