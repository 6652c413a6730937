#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ncnat/term.hpp"

namespace testutil {

inline std::filesystem::path fixture_dir() {
#ifdef NCNAT_FIXTURE_DIR
    return NCNAT_FIXTURE_DIR;
#else
    return "tests/fixtures";
#endif
}

// name -> term from a "name<TAB>term" fixture file.
inline std::map<std::string, ncnat::Term> load_named(const std::string& file) {
    std::map<std::string, ncnat::Term> out;
    std::ifstream in(fixture_dir() / file);
    if (!in) throw std::runtime_error("missing fixture: " + file);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::runtime_error("bad fixture line: " + line);
        out.emplace(line.substr(0, tab), ncnat::Term::parse(line.substr(tab + 1)));
    }
    return out;
}

inline const std::map<std::string, ncnat::Term>& named_elements() {
    static const auto table = load_named("named_elements.txt");
    return table;
}

inline ncnat::Term named(const std::string& name) {
    auto it = named_elements().find(name);
    if (it == named_elements().end()) throw std::runtime_error("unknown element name: " + name);
    return it->second;
}

// Uniform random tree of magnitude n: split sizes weighted by the number of
// shapes on each side.
inline ncnat::Term random_term(std::mt19937_64& rng, int n) {
    if (n == 1) return ncnat::Term::leaf();
    std::uint64_t total = ncnat::stratum_size(n);
    std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
    std::uint64_t pick = dist(rng);
    for (int k = 1; k < n; ++k) {
        std::uint64_t block = ncnat::stratum_size(k) * ncnat::stratum_size(n - k);
        if (pick < block)
            return ncnat::Term::node(random_term(rng, k), random_term(rng, n - k));
        pick -= block;
    }
    throw std::logic_error("random_term: split selection fell through");
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Run the CLI with the given arguments, capturing stdout.
inline CommandResult run_cli(const std::string& args) {
#ifdef NCNAT_CLI_PATH
    std::string cmd = std::string(NCNAT_CLI_PATH) + " " + args + " 2>/dev/null";
#else
    std::string cmd = "./ncnat " + args + " 2>/dev/null";
#endif
    CommandResult result;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) result.output.append(buf, got);
    int status = ::pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

} // namespace testutil
