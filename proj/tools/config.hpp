#pragma once

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "qwalk/coin.hpp"

namespace qwalk::cli {

// Resolved run parameters. Flags override file values; unknown keys are
// rejected at parse time.
struct RunConfig {
    std::string command;

    nlohmann::json coin = {{"kind", "hadamard"}};
    std::array<double, 4> init = {1.0, 0.0, 0.0, 0.0}; // re_L, im_L, re_R, im_R

    long steps = 100;
    std::vector<long> checkpoints;

    std::array<double, 2> gamma = {1.0, 0.0};
    double time = 10.0;
    double dt = 0.005;
    std::string method = "exact";

    std::string walk = "hadamard";
    std::string law = "auto";
    std::vector<double> times;

    std::vector<double> alphas;
    double alpha = 0.0;
    double r = 0.5;
    double p = 0.5;
    long final_time = 1000; // "T" in configs

    std::vector<double> eps_list;
    double sigma = 0.35;

    long sample = 0;
    unsigned long long seed = 1;

    std::string out = "qwalk_out";
    std::string format = "csv";
};

// Merge file values and flag values (flags win), validate, normalize the
// initial state (warning to warnings when the norm is off by less than 1e-3,
// rejection beyond).
RunConfig parse_config(const nlohmann::json& file_values, const nlohmann::json& flag_values,
                       std::vector<std::string>* warnings = nullptr);

// Build the coin from a config's coin block. needs_T: final time for the
// "ftd" kind, whose rate is (r / T^alpha)^2.
Coin2 coin_from_json(const nlohmann::json& spec, long final_time);

CoinState init_state(const RunConfig& cfg);

// Executes the command and writes the artifact files. Throws config_error or
// numeric_error; returns the list of files written.
std::vector<std::string> run(const RunConfig& cfg);

} // namespace qwalk::cli
