#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "tfp/commands.hpp"

int main(int argc, char** argv) {
    using namespace tfp;
    CLI::App app{"Tournament fixing toolkit: exact solving, parameters, sufficient conditions, reductions"};
    app.require_subcommand(1);

    const std::map<std::string, cli::Method> methods{{"dp", cli::Method::Dp}, {"enum", cli::Method::Enum}};
    const std::map<std::string, cli::ReduceTarget> targets{{"sfasv", cli::ReduceTarget::SfasV},
                                                           {"sfasin", cli::ReduceTarget::SfasIn}};
    const std::map<std::string, cli::GenKind> kinds{{"random", cli::GenKind::Random},
                                                    {"neighbor-acyclic", cli::GenKind::NeighborAcyclic},
                                                    {"tight", cli::GenKind::Tight},
                                                    {"special-sfasv", cli::GenKind::SpecialSfasV},
                                                    {"special-sfasin", cli::GenKind::SpecialSfasIn}};
    const std::map<std::string, Enforce> enforcements{
        {"none", Enforce::None}, {"thm7", Enforce::Thm7}, {"thm9", Enforce::Thm9}};

    int exit_code = cli::kExitError;

    cli::SolveOptions solve;
    std::string witness_out;
    auto* solve_cmd = app.add_subcommand("solve", "Decide whether the favorite can be made champion");
    solve_cmd->add_option("file", solve.instance, "Instance file")->required();
    solve_cmd->add_option("--method", solve.method, "dp (subset DP) or enum (all brackets, n <= 8)")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    solve_cmd->add_flag("--witness", solve.witness, "Print a winning bracket and its rounds");
    solve_cmd->add_option("-o,--witness-out", witness_out, "Write the winning bracket to a file");
    solve_cmd->callback([&] {
        if (!witness_out.empty()) solve.witness_out = witness_out;
        exit_code = cli::cmd_solve(solve, std::cout, std::cerr);
    });

    std::string params_file;
    auto* params_cmd = app.add_subcommand("params", "Print the acyclicity parameters of an instance");
    params_cmd->add_option("file", params_file, "Instance file")->required();
    params_cmd->callback([&] { exit_code = cli::cmd_params(params_file, std::cout, std::cerr); });

    std::string cond_file;
    bool cond_bracket = false;
    auto* cond_cmd = app.add_subcommand("conditions", "Evaluate the sufficient winning conditions");
    cond_cmd->add_option("file", cond_file, "Instance file")->required();
    cond_cmd->add_flag("--bracket", cond_bracket, "Also print a winning bracket when a condition holds");
    cond_cmd->callback([&] { exit_code = cli::cmd_conditions(cond_file, cond_bracket, std::cout, std::cerr); });

    std::string reduce_file;
    std::string reduce_out;
    cli::ReduceTarget reduce_target = cli::ReduceTarget::SfasV;
    auto* reduce_cmd = app.add_subcommand("reduce", "Build the hardness gadget of an instance");
    reduce_cmd->add_option("file", reduce_file, "Instance file")->required();
    reduce_cmd->add_option("--target", reduce_target, "sfasv or sfasin")
        ->required()
        ->transform(CLI::CheckedTransformer(targets, CLI::ignore_case));
    reduce_cmd->add_option("-o,--output", reduce_out, "Output instance file")->required();
    reduce_cmd->callback(
        [&] { exit_code = cli::cmd_reduce(reduce_file, reduce_target, reduce_out, std::cout, std::cerr); });

    cli::GenOptions gen;
    int gen_a_size = -1;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
    gen_cmd->add_option("--kind", gen.kind, "random|neighbor-acyclic|tight|special-sfasv|special-sfasin")
        ->required()
        ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
    gen_cmd->add_option("--n", gen.n, "Player count (core size for special kinds)")->required();
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
    gen_cmd->add_option("--a-size", gen_a_size, "Out-degree of the favorite (neighbor-acyclic)");
    gen_cmd->add_option("--enforce", gen.enforce, "none|thm7|thm9 (neighbor-acyclic)")
        ->transform(CLI::CheckedTransformer(enforcements, CLI::ignore_case));
    gen_cmd->add_option("-o,--output", gen_out, "Output instance file")->required();
    gen_cmd->callback([&] {
        if (gen_a_size >= 0) gen.a_size = gen_a_size;
        gen.output = gen_out;
        exit_code = cli::cmd_gen(gen, std::cout, std::cerr);
    });

    std::string check_file;
    std::string check_bracket;
    auto* check_cmd = app.add_subcommand("check", "Replay a bracket and report its winner");
    check_cmd->add_option("file", check_file, "Instance file")->required();
    check_cmd->add_option("bracket", check_bracket, "Bracket file (one line of leaf indices)")->required();
    check_cmd->callback([&] { exit_code = cli::cmd_check(check_file, check_bracket, std::cout, std::cerr); });

    std::string bench_dir;
    int bench_jobs = 1;
    auto* bench_cmd = app.add_subcommand("bench", "Time dp and enum over a directory of *.tfp files (CSV)");
    bench_cmd->add_option("corpus", bench_dir, "Corpus directory")->required();
    bench_cmd->add_option("--jobs", bench_jobs, "Instances solved in parallel")->check(CLI::PositiveNumber);
    bench_cmd->callback([&] { exit_code = cli::cmd_bench(bench_dir, bench_jobs, std::cout, std::cerr); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kExitError;
    }
    return exit_code;
}
