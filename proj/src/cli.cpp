#include "braidtrace/cli.hpp"

#include <chrono>
#include <exception>
#include <fstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "braidtrace/braid.hpp"
#include "braidtrace/conjugacy.hpp"
#include "braidtrace/invariants.hpp"
#include "braidtrace/report.hpp"

namespace braidtrace {

namespace {

struct Options {
    std::string word;
    std::string word2;
    std::string cochain;
    std::string out_path;
    int n = 0;  // 0 = inferred from the word
    int l = 1;
    int l_max = 3;
    int k = 2;
    int half_twists = 0;
    bool json = false;
};

BraidWord read_word(const std::string& text, int n) {
    return n > 0 ? parse_word(text, n) : parse_word(text);
}

void fill_loop_data(Report& report, const LoopAnalysis& analysis, bool with_events) {
    for (const TraceCircle& circle : analysis.trace.circles)
        report.circles.push_back(circle_row(circle));
    if (with_events)
        for (const TripleEvent& event : analysis.triples)
            report.events.push_back(event_row(event));
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Isotopy invariants of closed braids in the solid torus"};
    app.name("braidtrace");
    app.require_subcommand(1);
    Options opt;

    auto add_word = [&](CLI::App* cmd) {
        cmd->add_option("--word", opt.word, "braid word, e.g. \"1 -2 -3\"")->required();
        cmd->add_option("--n", opt.n, "strand count (default: inferred from the word)");
        cmd->add_flag("--json", opt.json, "emit the report as JSON");
        cmd->add_option("--out", opt.out_path, "write the report to this file");
    };

    CLI::App* cmd_trace = app.add_subcommand(
        "trace", "trace circles of the canonical rotation loop");
    add_word(cmd_trace);
    cmd_trace->add_option("--l", opt.l, "number of full rotations (default 1)");

    CLI::App* cmd_invariants = app.add_subcommand(
        "invariants", "degree-one loop invariants for all types (a,b)+/-");
    add_word(cmd_invariants);
    cmd_invariants->add_option("--l", opt.l, "number of full rotations (default 1)");

    CLI::App* cmd_characters = app.add_subcommand(
        "characters", "degree-one character table over named trace circles");
    add_word(cmd_characters);
    cmd_characters->add_option("--l", opt.l, "number of full rotations (default 1)");

    CLI::App* cmd_distinguish = app.add_subcommand(
        "distinguish", "try to certify that two closures are not conjugate");
    add_word(cmd_distinguish);
    cmd_distinguish->add_option("--word2", opt.word2, "second braid word")->required();
    cmd_distinguish->add_option("--l-max", opt.l_max,
                                "compare rotation counts 1..l-max (default 3)");

    CLI::App* cmd_invert = app.add_subcommand(
        "invert", "test the closure against its reverse (invertibility)");
    add_word(cmd_invert);
    cmd_invert->add_option("--l-max", opt.l_max,
                           "compare rotation counts 1..l-max (default 3)");

    CLI::App* cmd_cable = app.add_subcommand("cable",
                                             "replace every strand by a parallel bundle");
    add_word(cmd_cable);
    cmd_cable->add_option("--k", opt.k, "strands per bundle (default 2)");
    cmd_cable->add_option("--half-twists", opt.half_twists,
                          "signed half twists added to the first bundle (default 0)");

    CLI::App* cmd_evaluate = app.add_subcommand(
        "evaluate", "evaluate a cochain file on the canonical loop");
    add_word(cmd_evaluate);
    cmd_evaluate->add_option("--l", opt.l, "number of full rotations (default 1)");
    cmd_evaluate->add_option("--cochain", opt.cochain, "cochain file to evaluate")
        ->required();

    std::vector<const char*> argv;
    argv.push_back("braidtrace");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& parse_error) {
        const int code = app.exit(parse_error, out, err);
        return code == 0 ? 0 : 2;
    }

    const auto started = std::chrono::steady_clock::now();
    Report report;
    int status = 0;
    try {
        if (cmd_trace->parsed()) {
            const BraidWord word = read_word(opt.word, opt.n);
            const LoopAnalysis analysis = analyze(word, opt.l);
            report.command = "trace";
            report.word = to_string(word);
            report.n = word.n();
            report.l_min = report.l_max = opt.l;
            fill_loop_data(report, analysis, false);
        } else if (cmd_invariants->parsed()) {
            const BraidWord word = read_word(opt.word, opt.n);
            const LoopAnalysis analysis = analyze(word, opt.l);
            report.command = "invariants";
            report.word = to_string(word);
            report.n = word.n();
            report.l_min = report.l_max = opt.l;
            fill_loop_data(report, analysis, true);
            for (const GammaEntry& entry : gamma_table(analysis.triples, word.n()))
                report.gamma.push_back(gamma_row(entry));
        } else if (cmd_characters->parsed()) {
            const BraidWord word = read_word(opt.word, opt.n);
            const LoopAnalysis analysis = analyze(word, opt.l);
            report.command = "characters";
            report.word = to_string(word);
            report.n = word.n();
            report.l_min = report.l_max = opt.l;
            fill_loop_data(report, analysis, true);
            report.characters = character_rows(character_table_deg1(analysis));
        } else if (cmd_distinguish->parsed() || cmd_invert->parsed()) {
            const BraidWord word = read_word(opt.word, opt.n);
            Verdict verdict;
            if (cmd_distinguish->parsed()) {
                const BraidWord word2 = read_word(opt.word2, opt.n > 0 ? opt.n : word.n());
                verdict = distinguish(word, word2, opt.l_max);
                report.command = "distinguish";
                report.word2 = to_string(word2);
            } else {
                verdict = invertibility_test(word, opt.l_max);
                report.command = "invert";
                report.word2 = to_string(transform(word, Transform::reverse));
            }
            report.word = to_string(word);
            report.n = word.n();
            report.l_min = 1;
            report.l_max = opt.l_max;
            report.verdict = verdict_row(verdict);
            status = verdict.distinguished ? 1 : 0;
        } else if (cmd_cable->parsed()) {
            const BraidWord word = read_word(opt.word, opt.n);
            const BraidWord result = cable(word, opt.k, opt.half_twists);
            report.command = "cable";
            report.word = to_string(word);
            report.n = word.n();
            report.result_word = to_string(result);
        } else if (cmd_evaluate->parsed()) {
            const BraidWord word = read_word(opt.word, opt.n);
            std::ifstream file(opt.cochain);
            if (!file)
                throw std::invalid_argument("cannot read cochain file: " + opt.cochain);
            const Cochain cochain = parse_cochain(file);
            const LoopAnalysis analysis = analyze(word, opt.l);
            const long long value = evaluate_cochain(analysis, cochain);
            report.command = "evaluate";
            report.word = to_string(word);
            report.cochain = opt.cochain;
            report.n = word.n();
            report.l_min = report.l_max = opt.l;
            report.gamma.push_back({std::string(1, type_symbol(cochain.type)), cochain.a,
                                    cochain.b, cochain.degree, value});
        }
    } catch (const std::invalid_argument& error) {
        err << "error: " << error.what() << '\n';
        return 2;
    } catch (const std::exception& error) {
        err << "internal error: " << error.what() << '\n';
        return 2;
    }

    report.meta.version = version_string();
    report.meta.timing_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                  started)
            .count();

    const std::string rendered =
        opt.json ? emit_report_json(report) : render_report_text(report);
    if (!opt.out_path.empty()) {
        std::ofstream file(opt.out_path);
        if (!file) {
            err << "error: cannot write to " << opt.out_path << '\n';
            return 2;
        }
        file << rendered;
    } else {
        out << rendered;
    }
    return status;
}

}  // namespace braidtrace
