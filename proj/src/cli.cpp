#include "gssp/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gssp/acceptance.hpp"
#include "gssp/json_io.hpp"

namespace gssp {

namespace {

SspStrategy parse_solver(const std::string& s) {
    if (s == "brute") return SspStrategy::brute;
    if (s == "mitm") return SspStrategy::mitm;
    throw std::invalid_argument("unknown solver '" + s + "' (use brute or mitm)");
}

GapMode parse_plan_mode(const std::string& s) {
    if (s == "minimal") return GapMode::minimal;
    if (s == "analytic") return GapMode::analytic;
    throw std::invalid_argument("unknown mode '" + s + "' (use minimal or analytic)");
}

ZoeGenMode parse_gen_mode(const std::string& s) {
    if (s == "random") return ZoeGenMode::random;
    if (s == "planted") return ZoeGenMode::planted;
    throw std::invalid_argument("unknown mode '" + s + "' (use random or planted)");
}

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.output.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.output);
    if (!f) throw std::runtime_error("cannot write '" + cfg.output + "'");
    f << text;
}

std::string csv_row_for(const std::string& name, const SspInstance& inst, SspStrategy solver) {
    std::ostringstream os;
    try {
        const SolveResult res = solve_ssp(inst, solver);
        os << name << ',' << inst.items.size() << ','
           << (res.positive ? "positive" : "negative") << ',' << res.stats.nodes << ','
           << res.stats.wall_ms;
    } catch (const std::exception&) {
        os << name << ",,error,,";
    }
    return os.str();
}

}  // namespace

std::string corpus_run(const std::string& dir, SspStrategy solver) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());

    std::ostringstream os;
    os << "file,k,verdict,nodes,wall_ms\n";
    for (const auto& f : files) {
        const std::string name = std::filesystem::path(f).filename().string();
        try {
            const SspInstance inst = ssp_from_json(load_json_file(f));
            os << csv_row_for(name, inst, solver) << '\n';
        } catch (const std::exception&) {
            os << name << ",,error,,\n";
        }
    }
    return os.str();
}

std::string bench_run(const IntMatrix& X, std::size_t k, std::size_t count, ZoeGenMode mode,
                      double density, std::uint64_t seed, SspStrategy solver) {
    std::ostringstream os;
    os << "file,k,verdict,nodes,wall_ms\n";
    for (std::size_t i = 0; i < count; ++i) {
        const std::uint64_t s = seed + i;
        const ZoeInstance zoe = gen_zoe(k, mode, density, s);
        const SspInstance inst = reduce_zoe(zoe, X);
        std::ostringstream name;
        name << (mode == ZoeGenMode::planted ? "planted" : "random") << "-k" << k << "-seed" << s;
        os << csv_row_for(name.str(), inst, solver) << '\n';
    }
    return os.str();
}

int cli_dispatch(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.command) {
            case Command::gen_zoe: {
                const ZoeInstance zoe =
                    gen_zoe(cfg.k, parse_gen_mode(cfg.gen_mode), cfg.density, cfg.seed);
                emit(cfg, out, dump_json(zoe_to_json(zoe)));
                return 0;
            }
            case Command::reduce: {
                const ZoeInstance zoe = zoe_from_json(load_json_file(cfg.zoe_path));
                const IntMatrix X = matrix_from_json(load_json_file(cfg.matrix_path));
                const SspInstance inst =
                    reduce_zoe(zoe, X, cfg.lambda, parse_plan_mode(cfg.plan_mode));
                emit(cfg, out, dump_json(ssp_to_json(inst)));
                return 0;
            }
            case Command::solve: {
                const SspInstance inst = ssp_from_json(load_json_file(cfg.ssp_path));
                const SolveResult res = solve_ssp(inst, parse_solver(cfg.solver));
                emit(cfg, out, dump_json(solve_result_to_json(res)));
                return 0;
            }
            case Command::verify: {
                const ZoeInstance zoe = zoe_from_json(load_json_file(cfg.zoe_path));
                const IntMatrix X = matrix_from_json(load_json_file(cfg.matrix_path));
                emit(cfg, out, dump_json(equivalence_report_to_json(verify_equivalence(zoe, X))));
                return 0;
            }
            case Command::table: {
                const IntMatrix X = matrix_from_json(load_json_file(cfg.matrix_path));
                emit(cfg, out, distortion_table_csv(distortion_table(X, cfg.kmax)));
                return 0;
            }
            case Command::plan: {
                const IntMatrix X = matrix_from_json(load_json_file(cfg.matrix_path));
                const DistortionPlan plan = build_plan(X, cfg.lambda.value_or(1), cfg.count,
                                                       parse_plan_mode(cfg.plan_mode));
                emit(cfg, out, dump_json(plan_to_json(plan)));
                return 0;
            }
            case Command::collect: {
                const Collector engine(cfg.rank, cfg.cls);
                const Word w = Word::parse(engine.basis().generator_alphabet(), cfg.word);
                emit(cfg, out, dump_json(exponent_vector_to_json(engine.collect(w))));
                return 0;
            }
            case Command::bench: {
                std::string csv;
                if (!cfg.dir.empty()) {
                    csv = corpus_run(cfg.dir, parse_solver(cfg.solver));
                } else {
                    const IntMatrix X = matrix_from_json(load_json_file(cfg.matrix_path));
                    csv = bench_run(X, cfg.k, cfg.count, parse_gen_mode(cfg.gen_mode),
                                    cfg.density, cfg.seed, parse_solver(cfg.solver));
                }
                emit(cfg, out, csv);
                return 0;
            }
            case Command::selftest: {
                const auto results = run_acceptance(cfg.criterion);
                bool all = true;
                std::ostringstream os;
                for (const auto& r : results) {
                    os << format_criterion_line(r) << '\n';
                    all = all && r.pass;
                }
                emit(cfg, out, os.str());
                return all ? 0 : 1;
            }
        }
        err << "error: unknown command\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"subset sum instances over abelian-by-cyclic and nilpotent groups"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* gen = app.add_subcommand("gen-zoe", "generate a zero-one equation instance");
    gen->add_option("--k", cfg.k, "dimension")->required();
    gen->add_option("--mode", cfg.gen_mode, "random | planted");
    gen->add_option("--density", cfg.density, "fill probability");
    gen->add_option("--seed", cfg.seed, "RNG seed");
    gen->add_option("-o,--output", cfg.output, "output path (stdout if omitted)");

    auto* red = app.add_subcommand("reduce", "reduce a ZOE instance to SSP over F");
    red->add_option("--zoe", cfg.zoe_path, "ZOE JSON")->required();
    red->add_option("--matrix", cfg.matrix_path, "action matrix JSON")->required();
    red->add_option("--lambda", cfg.lambda, "growth factor (default: k)");
    red->add_option("--mode", cfg.plan_mode, "minimal | analytic");
    red->add_option("-o,--output", cfg.output, "output path");

    auto* sol = app.add_subcommand("solve", "solve an SSP instance");
    sol->add_option("--ssp", cfg.ssp_path, "SSP JSON")->required();
    sol->add_option("--solver", cfg.solver, "brute | mitm");
    sol->add_option("-o,--output", cfg.output, "output path");

    auto* ver = app.add_subcommand("verify", "check ZOE/SSP verdict equivalence");
    ver->add_option("--zoe", cfg.zoe_path, "ZOE JSON")->required();
    ver->add_option("--matrix", cfg.matrix_path, "action matrix JSON")->required();
    ver->add_option("-o,--output", cfg.output, "output path");

    auto* tab = app.add_subcommand("table", "column-norm growth table (CSV)");
    tab->add_option("--matrix", cfg.matrix_path, "action matrix JSON")->required();
    tab->add_option("--kmax", cfg.kmax, "largest power")->required();
    tab->add_option("-o,--output", cfg.output, "output path");

    auto* pln = app.add_subcommand("plan", "build a distortion witness plan");
    pln->add_option("--matrix", cfg.matrix_path, "action matrix JSON")->required();
    pln->add_option("--lambda", cfg.lambda, "growth factor")->required();
    pln->add_option("--count", cfg.count, "number of witnesses")->required();
    pln->add_option("--mode", cfg.plan_mode, "minimal | analytic");
    pln->add_option("-o,--output", cfg.output, "output path");

    auto* col = app.add_subcommand("collect", "Malcev normal form in a free nilpotent group");
    col->add_option("--r", cfg.rank, "rank")->required();
    col->add_option("--c", cfg.cls, "nilpotency class")->required();
    col->add_option("--word", cfg.word, "word over x1..xr")->required();
    col->add_option("-o,--output", cfg.output, "output path");

    auto* ben = app.add_subcommand("bench", "timing CSV over a corpus");
    ben->add_option("--dir", cfg.dir, "directory of SSP JSON files");
    ben->add_option("--matrix", cfg.matrix_path, "action matrix JSON (generated corpus)");
    ben->add_option("--k", cfg.k, "dimension (generated corpus)");
    ben->add_option("--count", cfg.count, "instances (generated corpus)");
    ben->add_option("--mode", cfg.gen_mode, "random | planted");
    ben->add_option("--density", cfg.density, "fill probability");
    ben->add_option("--seed", cfg.seed, "base RNG seed");
    ben->add_option("--solver", cfg.solver, "brute | mitm");
    ben->add_option("-o,--output", cfg.output, "output path");

    auto* self = app.add_subcommand("selftest", "run the acceptance criteria");
    self->add_option("--criterion", cfg.criterion, "run a single criterion");
    self->add_option("-o,--output", cfg.output, "output path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    if (gen->parsed()) cfg.command = Command::gen_zoe;
    else if (red->parsed()) cfg.command = Command::reduce;
    else if (sol->parsed()) cfg.command = Command::solve;
    else if (ver->parsed()) cfg.command = Command::verify;
    else if (tab->parsed()) cfg.command = Command::table;
    else if (pln->parsed()) cfg.command = Command::plan;
    else if (col->parsed()) cfg.command = Command::collect;
    else if (ben->parsed()) cfg.command = Command::bench;
    else cfg.command = Command::selftest;

    if (cfg.command == Command::bench && cfg.dir.empty() && cfg.matrix_path.empty()) {
        err << "usage error: bench needs either --dir or --matrix with --k/--count\n";
        return 2;
    }
    return cli_dispatch(cfg, out, err);
}

}  // namespace gssp
