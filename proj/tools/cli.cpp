#include "cli.hpp"

#include "sombor/canonical.hpp"
#include "sombor/enumeration.hpp"
#include "sombor/families.hpp"
#include "sombor/indices.hpp"
#include "sombor/matching.hpp"
#include "sombor/report.hpp"
#include "sombor/transforms.hpp"
#include "sombor/verify.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace sombor::cli {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    return s.substr(i);
}

std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
    const std::string text = read_all(path);
    if (format == "edge-list") return {parse_edge_list(text)};
    std::vector<Graph> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = trim(line);
        if (line.empty()) continue;
        out.push_back(parse_graph6(line));
    }
    return out;
}

std::string serialize(const Graph& g, const std::string& format) {
    return format == "edge-list" ? write_edge_list(g) : write_graph6(g) + "\n";
}

// Writes to `path`, or to `out` for "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot write " + path);
    file << text;
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("SOMBOR_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string value_line(const std::string& label, const Graph& g) {
    const auto exact = sombor_exact(g);
    return label + "\t" + format_real(exact.value()) + "\t" + exact.to_string() + "\n";
}

ExitCode run_compute(const RunConfig& c, std::ostream& out) {
    std::string text;
    for (const Graph& g : read_graphs(c.input, c.format)) {
        const auto exact = sombor_exact(g);
        text += write_graph6(g) + "\t" + format_real(exact.value()) + "\t" + exact.to_string() + "\n";
    }
    emit(c.output, text, out);
    return ExitCode::Ok;
}

ExitCode run_construct(const RunConfig& c, std::ostream& out) {
    auto family = parse_family(c.family);
    if (!family) throw CLI::ValidationError("--family", "unknown family '" + c.family + "'");
    FamilySpec spec{*family, c.n, c.m};
    if (*family == Family::Sun) spec = {*family, 2 * c.m, c.m};
    emit(c.output, serialize(build(spec), c.format), out);
    return ExitCode::Ok;
}

ExitCode run_enumerate(const RunConfig& c, std::ostream& out) {
    std::string text;
    auto visit = [&](const Graph& g) {
        if (c.matching && matching_number(g) != static_cast<std::size_t>(*c.matching)) return;
        text += serialize(g, c.format);
    };
    if (c.graph_class == "tree")
        for_each_tree(c.n, visit);
    else
        for_each_unicyclic(c.n, visit);
    emit(c.output, text, out);
    return ExitCode::Ok;
}

ExitCode run_transform(const RunConfig& c, std::ostream& out) {
    auto graphs = read_graphs(c.input, c.format);
    if (graphs.size() != 1) throw InputError("transform expects exactly one input graph");
    const Graph& before = graphs.front();
    const Graph after =
        c.op == "shift" ? neighbor_shift(before, ShiftSpec{c.u0, c.v0}) : cycle_rewire(before, c.position);
    emit(c.output, serialize(after, c.format) + value_line("before", before) + value_line("after", after), out);
    return ExitCode::Ok;
}

ExitCode run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const bool all = !(c.trees || c.unicyclic || c.perfect || c.structural || c.lemma21 || c.shift);
    const int workers = resolve_workers(c.workers);
    VerificationReport report;
    auto note_lemma = [&](const LemmaReport& l) {
        err << l.lemma << ": " << l.instances << " instances, " << l.counterexamples.size() << " counterexamples, "
            << (l.pass() ? "pass" : "FAIL") << "\n";
        report.lemmas.push_back(l);
    };
    auto note_theorem = [&](const char* name, const TheoremReport& t) {
        std::size_t failed = 0;
        for (const auto& r : t.records) {
            failed += r.pass ? 0 : 1;
            if (c.verbosity > 0 || !r.pass)
                err << "  " << name << " n=" << r.n << " m=" << r.m << " size=" << r.class_size
                    << " max=" << r.max_value.to_string() << " " << (r.pass ? "pass" : "FAIL") << "\n";
        }
        err << name << ": " << t.records.size() << " cells, " << failed << " failed, "
            << (t.pass() ? "pass" : "FAIL") << "\n";
        report.add(t);
    };

    if (all || c.trees) note_theorem("tree-theorem", verify_tree_theorem(c.n_max, workers));
    if (all || c.unicyclic) note_theorem("unicyclic-theorem", verify_unicyclic_theorem(c.unicyclic_n_max, workers));
    if (all || c.perfect) {
        for (const auto& l : verify_perfect_matching_bounds(c.m_max, workers)) note_lemma(l);
        note_lemma(verify_sun_checkpoint(c.sun_m_max));
    }
    if (all || c.structural)
        for (const auto& l : verify_structural_lemmas(c.structural_n_max, workers)) note_lemma(l);
    if (all || c.lemma21) note_lemma(verify_lemma21(c.a_max, c.b_max, c.x_max));
    if (all || c.shift) note_lemma(verify_neighbor_shift(c.trials, c.seed));

    if (c.report_format == "csv") {
        if (c.output == "-") {
            out << extremal_csv(report.records) << "\n" << lemma_csv(report.lemmas);
        } else {
            std::filesystem::path p(c.output);
            std::filesystem::path lemmas = p.parent_path() / (p.stem().string() + "_lemmas" + p.extension().string());
            emit(c.output, extremal_csv(report.records), out);
            emit(lemmas.string(), lemma_csv(report.lemmas), out);
        }
    } else {
        emit(c.output, to_json(report).dump(2) + "\n", out);
    }
    return report.pass() ? ExitCode::Ok : ExitCode::Failed;
}

}  // namespace

ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    if (config.subcommand == "compute") return run_compute(config, out);
    if (config.subcommand == "construct") return run_construct(config, out);
    if (config.subcommand == "enumerate") return run_enumerate(config, out);
    if (config.subcommand == "transform") return run_transform(config, out);
    if (config.subcommand == "verify") return run_verify(config, out, err);
    err << "unknown subcommand '" << config.subcommand << "'\n";
    return ExitCode::Usage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    CLI::App app{"Sombor index toolkit: compute, construct extremal graphs, enumerate, transform, verify", "sombor"};
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"graph6", "edge-list"});

    auto* compute = app.add_subcommand("compute", "Sombor index (float and exact) of every input graph");
    compute->add_option("-i,--input", c.input, "graph file, '-' for stdin")->capture_default_str();
    compute->add_option("-f,--format", c.format, "input format")->check(formats)->capture_default_str();
    compute->add_option("-o,--output", c.output, "output file, '-' for stdout")->capture_default_str();

    auto* construct = app.add_subcommand("construct", "build a named graph family member");
    construct->add_option("--family", c.family, "T, U, path, cycle, star or sun")
        ->required()
        ->check(CLI::IsMember({"T", "U", "path", "cycle", "star", "sun"}));
    construct->add_option("--n", c.n, "order (ignored for sun)");
    construct->add_option("--m", c.m, "matching number (T, U) or cycle length (sun)");
    construct->add_option("-f,--format", c.format, "output format")->check(formats)->capture_default_str();
    construct->add_option("-o,--output", c.output, "output file, '-' for stdout")->capture_default_str();

    auto* enumerate = app.add_subcommand("enumerate", "emit one graph per isomorphism class");
    enumerate->add_option("--class", c.graph_class, "tree or unicyclic")
        ->check(CLI::IsMember({"tree", "unicyclic"}))
        ->capture_default_str();
    enumerate->add_option("--n", c.n, "order")->required()->check(CLI::Range(1, kMaxTreeOrder));
    enumerate->add_option("--matching", c.matching, "keep only graphs with this matching number");
    enumerate->add_option("-f,--format", c.format, "output format")->check(formats)->capture_default_str();
    enumerate->add_option("-o,--output", c.output, "output file, '-' for stdout")->capture_default_str();

    auto* transform = app.add_subcommand("transform", "apply a Sombor-increasing surgery to one graph");
    transform->add_option("-i,--input", c.input, "graph file, '-' for stdin")->capture_default_str();
    transform->add_option("-f,--format", c.format, "input and output format")->check(formats)->capture_default_str();
    transform->add_option("--op", c.op, "shift or rewire")
        ->check(CLI::IsMember({"shift", "rewire"}))
        ->capture_default_str();
    transform->add_option("--u0", c.u0, "shift: vertex receiving the neighbors");
    transform->add_option("--v0", c.v0, "shift: vertex giving up its neighbors");
    transform->add_option("--position", c.position, "rewire: cycle position i")->capture_default_str();
    transform->add_option("-o,--output", c.output, "output file, '-' for stdout")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "exhaustive theorem and lemma checks; no selection runs all");
    verify->add_flag("--trees", c.trees, "tree theorem");
    verify->add_flag("--unicyclic", c.unicyclic, "unicyclic theorem");
    verify->add_flag("--perfect", c.perfect, "perfect-matching bounds and the sun checkpoint");
    verify->add_flag("--structural", c.structural, "pendant-vertex lemmas");
    verify->add_flag("--lemma21", c.lemma21, "monotonicity grids of h1 and h2");
    verify->add_flag("--shift", c.shift, "random neighbor-shift trials");
    verify->add_option("--n-max", c.n_max, "largest tree order")->check(CLI::Range(4, 16))->capture_default_str();
    verify->add_option("--unicyclic-n-max", c.unicyclic_n_max, "largest unicyclic order")
        ->check(CLI::Range(4, 13))
        ->capture_default_str();
    verify->add_option("--m-max", c.m_max, "largest m for perfect-matching bounds")
        ->check(CLI::Range(2, 7))
        ->capture_default_str();
    verify->add_option("--sun-m-max", c.sun_m_max, "largest cycle length for the sun checkpoint")
        ->check(CLI::Range(3, 1000))
        ->capture_default_str();
    verify->add_option("--structural-n-max", c.structural_n_max, "largest order for structural lemmas")
        ->check(CLI::Range(2, 12))
        ->capture_default_str();
    verify->add_option("--a-max", c.a_max, "h1 grid: largest a")->check(CLI::Range(1, 100000))->capture_default_str();
    verify->add_option("--b-max", c.b_max, "h2 grid: largest b")->check(CLI::Range(1, 100000))->capture_default_str();
    verify->add_option("--x-max", c.x_max, "h1/h2 grid: largest x")->check(CLI::Range(2, 100000))->capture_default_str();
    verify->add_option("--trials", c.trials, "neighbor-shift trials")->capture_default_str();
    verify->add_option("--seed", c.seed, "neighbor-shift seed")->capture_default_str();
    verify->add_option("-j,--workers", c.workers, "worker threads (default: $SOMBOR_WORKERS or all cores)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--report-format", c.report_format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    verify->add_option("-o,--output", c.output, "report file, '-' for stdout")->capture_default_str();
    verify->add_flag("-v,--verbose", c.verbosity, "print every cell to stderr");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();  // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return static_cast<int>(ExitCode::Usage);
    }
    for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();

    if (c.subcommand == "enumerate" && c.graph_class == "unicyclic" && (c.n < 3 || c.n > kMaxUnicyclicOrder)) {
        err << "usage error: --n: unicyclic enumeration needs 3 <= n <= " << kMaxUnicyclicOrder << "\n";
        return static_cast<int>(ExitCode::Usage);
    }
    if (c.subcommand == "transform" && c.op == "shift" && (c.u0 < 0 || c.v0 < 0)) {
        err << "usage error: --u0 and --v0 are required for --op shift\n";
        return static_cast<int>(ExitCode::Usage);
    }

    try {
        return static_cast<int>(run(c, out, err));
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const ParameterError& e) {
        err << "usage error: " << e.what() << "\n";
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    return static_cast<int>(ExitCode::Usage);
}

}  // namespace sombor::cli
