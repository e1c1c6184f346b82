#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"B-spline copulas: correlation tables, evaluation, sampling, exact moments, "
                 "numerical verification"};
    app.require_subcommand(1);

    std::string out_path;

    bsc::cli::TableOptions table;
    CLI::App* cmd_table = app.add_subcommand("table", "Maximum-correlation table");
    cmd_table->add_option("--out", out_path, "Write output to this file instead of stdout");
    cmd_table->add_option("--n-max", table.n_max, "Largest basis count n")->capture_default_str();
    cmd_table->add_option("--d", table.degrees, "Degrees (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    cmd_table->add_option("--format", table.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    bsc::cli::EvalOptions eval;
    CLI::App* cmd_eval = app.add_subcommand("eval", "CDF/density values on a grid");
    cmd_eval->add_option("--out", out_path, "Write output to this file instead of stdout");
    cmd_eval->add_option("--d", eval.degree, "Spline degree")->capture_default_str();
    CLI::Option* eval_m = cmd_eval->add_option("--m", eval.spans, "Number of spans");
    eval_m->capture_default_str();
    cmd_eval->add_option("--n", eval.spans, "Basis count (n = m + d; sets m = n - d)")
        ->excludes(eval_m);
    cmd_eval->add_option("--copula", eval.copula, "maxcorr, indep or file")
        ->check(CLI::IsMember({"maxcorr", "indep", "file"}))
        ->capture_default_str();
    cmd_eval->add_option("--R", eval.matrix_path, "CSV file with the parameter matrix");
    cmd_eval->add_option("--grid", eval.grid, "Grid subdivisions per axis")->capture_default_str();
    cmd_eval->add_option("--format", eval.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    bsc::cli::SampleOptions sample;
    CLI::App* cmd_sample = app.add_subcommand("sample", "Draw pairs from a copula");
    cmd_sample->add_option("--out", out_path, "Write output to this file instead of stdout");
    cmd_sample->add_option("--d", sample.degree, "Spline degree")->capture_default_str();
    CLI::Option* sample_m = cmd_sample->add_option("--m", sample.spans, "Number of spans");
    sample_m->capture_default_str();
    cmd_sample->add_option("--n", sample.spans, "Basis count (sets m = n - d)")
        ->excludes(sample_m);
    cmd_sample->add_option("--copula", sample.copula, "maxcorr, indep or file")
        ->check(CLI::IsMember({"maxcorr", "indep", "file"}))
        ->capture_default_str();
    cmd_sample->add_option("--R", sample.matrix_path, "CSV file with the parameter matrix");
    cmd_sample->add_option("--count", sample.count, "Number of pairs")->capture_default_str();
    cmd_sample->add_option("--seed", sample.seed, "RNG seed")->capture_default_str();
    cmd_sample->add_option("--format", sample.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    bsc::cli::MomentsOptions moments;
    CLI::App* cmd_moments = app.add_subcommand("moments", "Exact h-moment of a basis function");
    cmd_moments->add_option("--out", out_path, "Write output to this file instead of stdout");
    cmd_moments->set_help_flag("--help", "Print this help message and exit");  // frees -h / --h
    cmd_moments->add_option("--d", moments.degree, "Spline degree")->capture_default_str();
    cmd_moments->add_option("--i", moments.index, "Basis index (>= -d)")->capture_default_str();
    cmd_moments->add_option("--h", moments.power, "Moment order")->capture_default_str();
    cmd_moments->add_option("--format", moments.format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    bsc::cli::VerifyOptions verify;
    CLI::App* cmd_verify = app.add_subcommand("verify", "Run a named verification suite");
    cmd_verify->add_option("--out", out_path, "Write output to this file instead of stdout");
    cmd_verify
        ->add_option("--suite", verify.suite,
                     "tp, fh-convergence, identities, lemma31 or conjecture")
        ->required();
    cmd_verify->add_option("--seed", verify.seed, "RNG seed")->capture_default_str();
    cmd_verify->add_option("--d", verify.degree, "Degree override");
    cmd_verify->add_option("--m", verify.spans,
                           "Span counts: fh-convergence/conjecture use the list; tp and "
                           "lemma31 sweep up to the largest")
        ->delimiter(',');
    cmd_verify->add_option("--grid", verify.grid, "Grid override");
    cmd_verify->add_option("--trials", verify.trials, "Trials override");
    cmd_verify->add_option("--n-max", verify.n_max, "Identity range override");
    cmd_verify->add_option("--instances", verify.instances, "Random instance count override");
    cmd_verify->add_option("--format", verify.format, "json or csv")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    // Flags for eval/sample: --n wins over --m when both are given.
    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_eval->parsed() && cmd_eval->count("--n")) eval.spans -= eval.degree;
        if (cmd_sample->parsed() && cmd_sample->count("--n")) sample.spans -= sample.degree;

        if (cmd_table->parsed()) {
            emit(bsc::cli::run_table(table), out_path);
        } else if (cmd_eval->parsed()) {
            emit(bsc::cli::run_eval(eval), out_path);
        } else if (cmd_sample->parsed()) {
            emit(bsc::cli::run_sample(sample), out_path);
        } else if (cmd_moments->parsed()) {
            emit(bsc::cli::run_moments(moments), out_path);
        } else if (cmd_verify->parsed()) {
            bsc::cli::VerifyOutcome outcome = bsc::cli::run_verify(verify);
            emit(outcome.text, out_path);
            return outcome.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
