#include "symfix/cli.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "symfix/aut_group.hpp"
#include "symfix/caps.hpp"
#include "symfix/constructions.hpp"
#include "symfix/distance_transitive.hpp"
#include "symfix/errors.hpp"
#include "symfix/fixing.hpp"
#include "symfix/fixing_graph.hpp"
#include "symfix/graph.hpp"
#include "symfix/graph6.hpp"
#include "symfix/survey.hpp"
#include "symfix/util.hpp"

namespace symfix {

namespace {

std::string trimmed(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return s.substr(b, e - b);
}

std::string slurp(const std::string& path, std::istream& stdin_stream) {
    std::ostringstream buf;
    if (path == "-") {
        buf << stdin_stream.rdbuf();
    } else {
        std::ifstream f(path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot read '" + path + "'");
        buf << f.rdbuf();
    }
    return std::move(buf).str();
}

std::vector<std::string> graph6_lines(const std::string& path, std::istream& stdin_stream) {
    std::istringstream in(slurp(path, stdin_stream));
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trimmed(line);
        if (!t.empty()) lines.push_back(std::move(t));
    }
    return lines;
}

Graph single_graph(const std::string& path, std::istream& stdin_stream) {
    const auto lines = graph6_lines(path, stdin_stream);
    if (lines.empty()) throw ParseError("expected one graph6 line, got none");
    if (lines.size() > 1)
        throw ParseError("expected one graph6 line, got " + std::to_string(lines.size()));
    return parse_graph6(lines.front());
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
}

std::map<std::string, int> parse_params(const std::string& spec) {
    std::map<std::string, int> params;
    std::istringstream in(spec);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw DomainError("parameter '" + item + "' is not of the form name=value");
        const std::string name = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        int parsed = 0;
        const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
        if (ec != std::errc{} || ptr != value.data() + value.size())
            throw DomainError("parameter '" + name + "' has non-integer value '" + value + "'");
        params[name] = parsed;
    }
    return params;
}

struct SurveyArgs {
    int max_n = 6;
    std::string input;
    std::string report;
    bool allow_disconnected = false;
    bool allow_n7 = false;
};

int run_analyze(const std::string& input, bool with_beta, bool with_polynomial, const Caps& caps,
                std::istream& in, std::ostream& out) {
    const ReportOptions opt{.with_polynomial = with_polynomial, .with_beta = with_beta};
    for (const std::string& line : graph6_lines(input, in)) {
        const Graph g = parse_graph6(line);
        nlohmann::ordered_json j;
        j["tool_version"] = tool_version;
        j["input_digest"] = fnv1a64_hex(line);
        nlohmann::ordered_json report = to_json(compute_fixing_report(g, opt, caps));
        for (auto& [key, value] : report.items()) j[key] = std::move(value);
        out << j.dump() << '\n';
    }
    return 0;
}

int run_fixing_graph(const std::string& input, const std::string& dot_path,
                     const std::string& json_path, std::istream& in, std::ostream& out) {
    const Graph g = single_graph(input, in);
    const FixingGraph d = FixingGraph::build(g);
    if (!dot_path.empty()) write_text(dot_path, d.to_dot(), out);
    if (!json_path.empty()) write_text(json_path, d.to_json().dump() + "\n", out);
    if (dot_path.empty() && json_path.empty()) out << d.to_json().dump() << '\n';
    return 0;
}

int run_generate(const std::string& family, const std::string& params, const std::string& out_path,
                 std::ostream& out) {
    const Graph g = generate_family(family, parse_params(params));
    write_text(out_path, encode_graph6(g) + "\n", out);
    return 0;
}

int run_construct_fix_fxd(int p, int q, const Caps& caps, std::ostream& out) {
    const Graph g = construct_fix_fxd(p, q);
    const AutGroup a = AutGroup::of_graph(g, {.search_cap = caps.search_cap});
    const int fix = fixing_number(g, a, caps).value;
    const int fxd = fixed_number(g, a, caps).value;
    nlohmann::ordered_json j;
    j["fix"] = fix;
    j["fxd"] = fxd;
    j["verified"] = fix == p && fxd == q;
    out << encode_graph6(g) << '\n' << j.dump() << '\n';
    return 0;
}

int run_construct_extend(const std::string& input, const Caps& caps, std::istream& in,
                         std::ostream& out) {
    const Graph g = single_graph(input, in);
    const ExtendResult r = extend_fxd(g, caps);
    out << encode_graph6(r.graph()) << '\n' << to_json(r).dump() << '\n';
    return 0;
}

int run_dt(const std::string& input, const Caps& caps, std::istream& in, std::ostream& out) {
    for (const std::string& line : graph6_lines(input, in)) {
        const Graph g = parse_graph6(line);
        out << to_json(compute_dt_report(g, caps)).dump() << '\n';
    }
    return 0;
}

int run_survey(const SurveyArgs& args, const Caps& caps, std::istream& in, std::ostream& out,
               std::ostream& err) {
    std::vector<Graph> catalog;
    std::string provenance;
    if (!args.input.empty()) {
        const std::string bytes = slurp(args.input, in);
        std::istringstream stream(bytes);
        IngestResult ingested = ingest_graph6_lines(stream);
        for (const std::string& note : ingested.diagnostics) err << args.input << ": " << note << '\n';
        std::size_t dropped = 0;
        for (Graph& g : ingested.graphs) {
            if (!args.allow_disconnected && !g.connected()) {
                ++dropped;
                continue;
            }
            catalog.push_back(std::move(g));
        }
        if (dropped > 0)
            err << "dropped " << dropped
                << " disconnected graph(s); rerun with --allow-disconnected to include them\n";
        provenance = "input " + args.input + " fnv1a64=" + fnv1a64_hex(bytes);
    } else {
        const int cap = args.allow_n7 ? 7 : 6;
        for (int n = 1; n <= args.max_n; ++n)
            for (Graph& g : enumerate_graphs(n, !args.allow_disconnected, cap))
                catalog.push_back(std::move(g));
        provenance = "enumeration n<=" + std::to_string(args.max_n) +
                     (args.allow_disconnected ? " all" : " connected");
    }

    const SurveyReport rep = verify_all(catalog, provenance, caps);
    write_text(args.report, to_csv(rep), out);
    if (args.report != "-") out << to_json(rep).dump() << '\n';
    return rep.pass() ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"symmetry-fixing invariants of small graphs"};
    app.name("symfix");
    app.require_subcommand(1);

    Caps caps;
    app.add_option("--aut-cap", caps.aut_enum_cap, "group element streaming ceiling")
        ->envname("SYMFIX_AUT_CAP");
    app.add_option("--subset-cap", caps.subset_cap, "max n for 2^n subset sweeps");
    app.add_flag("--seed-none", "algorithms are deterministic; reserved")->disable_flag_override();

    std::string analyze_input = "-";
    std::string analyze_format = "graph6";
    bool analyze_beta = false;
    bool analyze_polynomial = false;
    CLI::App* analyze = app.add_subcommand("analyze", "per-graph invariant report as JSON lines");
    analyze->add_option("--input", analyze_input, "graph6 file or -");
    analyze->add_option("--format", analyze_format)->check(CLI::IsMember({"graph6"}));
    analyze->add_flag("--beta", analyze_beta, "include the metric dimension");
    analyze->add_flag("--polynomial", analyze_polynomial, "include the fixing polynomial");

    std::string fg_input = "-";
    std::string fg_dot;
    std::string fg_json;
    CLI::App* fixing_graph = app.add_subcommand("fixing-graph", "bipartite fixing graph exports");
    fixing_graph->add_option("--input", fg_input, "graph6 file or -");
    fixing_graph->add_option("--dot", fg_dot, "write DOT here (- for stdout)");
    fixing_graph->add_option("--json", fg_json, "write JSON here (- for stdout)");

    std::string gen_family;
    std::string gen_params;
    std::string gen_out = "-";
    CLI::App* generate = app.add_subcommand("generate", "emit a named-family graph as graph6");
    generate->add_option("--family", gen_family, "path|cycle|complete|star|complete_bipartite|petersen|johnson")
        ->required();
    generate->add_option("--params", gen_params, "comma-separated name=value parameters");
    generate->add_option("--out", gen_out, "output path or -");

    CLI::App* construct = app.add_subcommand("construct", "build graphs with prescribed invariants");
    construct->require_subcommand(1);
    int thm5_p = 0;
    int thm5_q = 0;
    CLI::App* thm5 = construct->add_subcommand("thm5", "graph with fixing number p and fixed number q");
    thm5->add_option("--p", thm5_p)->required();
    thm5->add_option("--q", thm5_q)->required();
    std::string extend_input = "-";
    CLI::App* extend = construct->add_subcommand("extend", "one-vertex extension raising the fixed number");
    extend->add_option("--input", extend_input, "graph6 file or -");

    SurveyArgs survey_args;
    CLI::App* survey = app.add_subcommand("survey", "verify the whole check battery over a catalog");
    survey->add_option("--max-n", survey_args.max_n, "enumerate orders 1..max-n (default 6)");
    survey->add_option("--input", survey_args.input, "verify a graph6 file instead of enumerating");
    survey->add_option("--report", survey_args.report, "CSV output path or -")->required();
    survey->add_flag("--allow-disconnected", survey_args.allow_disconnected,
                     "include disconnected graphs; their connectivity-bound checks skip");
    survey->add_flag("--allow-n7", survey_args.allow_n7, "permit the minutes-long n=7 enumeration");

    std::string dt_input = "-";
    CLI::App* dt = app.add_subcommand("dt", "distance-transitivity report as JSON lines");
    dt->add_option("--input", dt_input, "graph6 file or -");

    for (CLI::App* sub : {analyze, fixing_graph, generate, construct, survey, dt})
        sub->fallthrough();
    extend->fallthrough();
    thm5->fallthrough();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*analyze)
            return run_analyze(analyze_input, analyze_beta, analyze_polynomial, caps, in, out);
        if (*fixing_graph) return run_fixing_graph(fg_input, fg_dot, fg_json, in, out);
        if (*generate) return run_generate(gen_family, gen_params, gen_out, out);
        if (*thm5) return run_construct_fix_fxd(thm5_p, thm5_q, caps, out);
        if (*extend) return run_construct_extend(extend_input, caps, in, out);
        if (*survey) return run_survey(survey_args, caps, in, out, err);
        if (*dt) return run_dt(dt_input, caps, in, out);
    } catch (const CapError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace symfix
