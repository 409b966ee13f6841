#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gssp/reduction.hpp"

namespace gssp {

enum class Command { gen_zoe, reduce, solve, verify, table, plan, collect, bench, selftest };

struct RunConfig {
    Command command = Command::selftest;
    std::string output;       // empty means stdout
    std::string matrix_path;  // reduce, verify, table, plan, bench
    std::string zoe_path;     // reduce, verify
    std::string ssp_path;     // solve
    std::string dir;          // bench over an existing corpus
    std::size_t k = 0;
    std::size_t count = 0;
    std::int64_t kmax = 0;
    unsigned rank = 0;
    unsigned cls = 0;
    std::uint64_t seed = 0;
    double density = 0.5;
    std::optional<std::uint64_t> lambda;
    std::string word;
    std::string gen_mode = "random";    // random | planted
    std::string plan_mode = "minimal";  // minimal | analytic
    std::string solver = "brute";       // brute | mitm
    std::optional<int> criterion;       // selftest
};

/// Executes one command. Returns 0 on successful execution (verdicts live in
/// the output, not the exit code), 3 on data errors (malformed input,
/// dimension mismatches, guard violations). Usage errors are the argument
/// parser's job and exit with 2.
int cli_dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Argument-vector front end (argv without the program name).
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// One CSV row per SSP JSON file in dir (sorted by filename):
/// file,k,verdict,nodes,wall_ms. Unreadable files become error rows.
std::string corpus_run(const std::string& dir, SspStrategy solver);

/// Seeded generate-reduce-solve corpus; same CSV schema with synthetic names.
std::string bench_run(const IntMatrix& X, std::size_t k, std::size_t count, ZoeGenMode mode,
                      double density, std::uint64_t seed, SspStrategy solver);

}  // namespace gssp
