#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sombor::cli {

enum class ExitCode : int { Ok = 0, Failed = 1, Usage = 2 };

struct RunConfig {
    std::string subcommand;

    std::string input = "-";
    std::string output = "-";
    std::string format = "graph6";  // graph6 | edge-list

    // construct / enumerate
    std::string family;
    std::string graph_class = "tree";
    int n = 0;
    int m = 0;
    std::optional<int> matching;

    // transform
    std::string op = "shift";
    int u0 = -1;
    int v0 = -1;
    int position = 0;

    // verify
    bool trees = false;
    bool unicyclic = false;
    bool perfect = false;
    bool structural = false;
    bool lemma21 = false;
    bool shift = false;
    int n_max = 12;
    int unicyclic_n_max = 11;
    int m_max = 6;
    int structural_n_max = 12;
    int sun_m_max = 10;
    int a_max = 100;
    int b_max = 100;
    int x_max = 200;
    std::size_t trials = 10000;
    std::uint64_t seed = 42;
    int workers = 0;  // 0: SOMBOR_WORKERS or hardware concurrency
    std::string report_format = "json";
    int verbosity = 0;
};

/// Executes an already validated configuration.
ExitCode run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sombor::cli
