#include "config.hpp"

#include <cmath>
#include <set>

#include "qwalk/errors.hpp"

namespace qwalk::cli {

namespace {

const std::set<std::string> known_commands = {"dtqw",      "ctqw",      "classical",
                                              "limit-check", "crossover", "dirac-compare"};

const std::set<std::string> known_keys = {
    "command", "coin",   "init",   "steps",  "checkpoints", "gamma",  "time",
    "dt",      "method", "walk",   "law",    "times",       "alphas", "alpha",
    "r",       "p",      "T",      "eps_list", "sigma",     "sample", "seed",
    "out",     "format",
};

void reject_unknown(const nlohmann::json& j, const char* where)
{
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (known_keys.find(key) == known_keys.end())
            throw config_error(std::string(where) + ": unknown key '" + key + "'");
    }
}

template <class T>
void take(const nlohmann::json& j, const char* key, T& into)
{
    if (j.contains(key)) {
        try {
            into = j.at(key).get<T>();
        } catch (const nlohmann::json::exception&) {
            throw config_error(std::string("config key '") + key + "' has the wrong type");
        }
    }
}

void apply(const nlohmann::json& j, RunConfig& cfg)
{
    take(j, "command", cfg.command);
    if (j.contains("coin")) {
        if (!j.at("coin").is_object() || !j.at("coin").contains("kind"))
            throw config_error("coin spec must be an object with a 'kind'");
        cfg.coin = j.at("coin");
    }
    if (j.contains("init")) {
        const auto& v = j.at("init");
        if (v.is_array() && v.size() == 2 && v[0].is_array()) {
            // [[re,im],[re,im]]
            cfg.init = {v[0][0].get<double>(), v[0][1].get<double>(), v[1][0].get<double>(),
                        v[1][1].get<double>()};
        } else if (v.is_array() && v.size() == 4) {
            cfg.init = {v[0].get<double>(), v[1].get<double>(), v[2].get<double>(),
                        v[3].get<double>()};
        } else {
            throw config_error("init must be [[re,im],[re,im]] or [re,im,re,im]");
        }
    }
    take(j, "steps", cfg.steps);
    take(j, "checkpoints", cfg.checkpoints);
    if (j.contains("gamma")) {
        const auto& v = j.at("gamma");
        if (!v.is_array() || v.size() != 2)
            throw config_error("gamma must be [re,im]");
        cfg.gamma = {v[0].get<double>(), v[1].get<double>()};
    }
    take(j, "time", cfg.time);
    take(j, "dt", cfg.dt);
    take(j, "method", cfg.method);
    take(j, "walk", cfg.walk);
    take(j, "law", cfg.law);
    take(j, "times", cfg.times);
    take(j, "alphas", cfg.alphas);
    take(j, "alpha", cfg.alpha);
    take(j, "r", cfg.r);
    take(j, "p", cfg.p);
    take(j, "T", cfg.final_time);
    take(j, "eps_list", cfg.eps_list);
    take(j, "sigma", cfg.sigma);
    take(j, "sample", cfg.sample);
    take(j, "seed", cfg.seed);
    take(j, "out", cfg.out);
    take(j, "format", cfg.format);
}

} // namespace

RunConfig parse_config(const nlohmann::json& file_values, const nlohmann::json& flag_values,
                       std::vector<std::string>* warnings)
{
    reject_unknown(file_values, "config file");
    reject_unknown(flag_values, "flags");

    RunConfig cfg;
    apply(file_values, cfg);
    apply(flag_values, cfg); // flags win

    if (known_commands.find(cfg.command) == known_commands.end())
        throw config_error("unknown command '" + cfg.command + "'");
    if (cfg.format != "csv" && cfg.format != "json")
        throw config_error("format must be csv or json");

    const double n2 = cfg.init[0] * cfg.init[0] + cfg.init[1] * cfg.init[1]
                      + cfg.init[2] * cfg.init[2] + cfg.init[3] * cfg.init[3];
    const double off = std::abs(n2 - 1.0);
    if (off > 1e-3)
        throw config_error("initial coin state violates |q_L|^2+|q_R|^2 = 1 (norm^2 = "
                           + std::to_string(n2) + ")");
    if (off > 1e-9) {
        if (warnings != nullptr)
            warnings->push_back("initial state renormalized (|q|^2 was "
                                + std::to_string(n2) + ")");
        const double inv = 1.0 / std::sqrt(n2);
        for (double& v : cfg.init)
            v *= inv;
    }
    return cfg;
}

Coin2 coin_from_json(const nlohmann::json& spec, long final_time)
{
    const std::string kind = spec.value("kind", "hadamard");
    if (kind == "hadamard") {
        return hadamard();
    }
    if (kind == "matrix") {
        const auto pair = [&](const char* key) -> cplx {
            if (!spec.contains(key))
                throw config_error(std::string("matrix coin needs '") + key + "'");
            const auto& v = spec.at(key);
            return {v[0].get<double>(), v[1].get<double>()};
        };
        const cplx det = spec.contains("det_phase") ? pair("det_phase") : cplx(1.0, 0.0);
        return make_coin(pair("a"), pair("b"), det);
    }
    if (kind == "dirac_eps")
        return dirac_coin(spec.value("eps", 0.01));
    if (kind == "ftd") {
        const double alpha = spec.value("alpha", 0.0);
        const double r = spec.value("r", 0.5);
        const double sqrt_rate = r / std::pow(static_cast<double>(final_time), alpha);
        return ftd_coin(sqrt_rate * sqrt_rate);
    }
    throw config_error("unknown coin kind '" + kind + "'");
}

CoinState init_state(const RunConfig& cfg)
{
    return make_coin_state(cplx(cfg.init[0], cfg.init[1]), cplx(cfg.init[2], cfg.init[3]));
}

} // namespace qwalk::cli
