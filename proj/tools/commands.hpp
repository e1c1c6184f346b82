#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bsc::cli {

struct TableOptions {
    int n_max = 10;
    std::vector<int> degrees{0, 1, 2, 3};
    std::string format = "csv";
};
std::string run_table(const TableOptions& options);

struct EvalOptions {
    int degree = 0;
    int spans = 1;
    std::string copula = "maxcorr";  // maxcorr | indep | file
    std::string matrix_path;         // required for copula = file
    int grid = 10;
    std::string format = "csv";
};
std::string run_eval(const EvalOptions& options);

struct SampleOptions {
    int degree = 0;
    int spans = 1;
    std::string copula = "maxcorr";
    std::string matrix_path;
    std::int64_t count = 0;
    std::uint64_t seed = 0;
    std::string format = "csv";
};
std::string run_sample(const SampleOptions& options);

struct MomentsOptions {
    int degree = 0;
    int index = 0;
    int power = 0;
    std::string format = "json";
};
std::string run_moments(const MomentsOptions& options);

struct VerifyOptions {
    std::string suite;  // tp | fh-convergence | identities | lemma31 | conjecture
    std::uint64_t seed = 0;
    // Optional overrides; negative/empty means suite default.
    int degree = -1;
    std::vector<int> spans;
    int grid = -1;
    int trials = -1;
    int n_max = -1;
    int instances = -1;
    std::string format = "json";
};
struct VerifyOutcome {
    std::string text;
    bool pass = false;
};
VerifyOutcome run_verify(const VerifyOptions& options);

}  // namespace bsc::cli
