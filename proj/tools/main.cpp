#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "config.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace {

using nlohmann::json;

// Comma-separated doubles.
std::vector<double> parse_list(const std::string& s)
{
    std::vector<double> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t next = s.find(',', pos);
        if (next == std::string::npos)
            next = s.size();
        out.push_back(std::stod(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

struct FlagSpec {
    std::string config_path;
    std::string init, coin_kind, coin_a, coin_b, det_phase, gamma, checkpoints, times, alphas,
        eps_list, method, walk, law, out, format;
    double eps = -1.0, time = -1.0, dt = -1.0, alpha = -1.0, r = -1.0, p = -1.0, sigma = -1.0;
    long steps = -1, final_time = -1, sample = -1;
    long long seed = -1;
};

void add_common(CLI::App* cmd, FlagSpec& f)
{
    cmd->add_option("--config", f.config_path, "JSON config file; flags override its values");
    cmd->add_option("--init", f.init, "initial coin state re_L,im_L,re_R,im_R");
    cmd->add_option("--out", f.out, "output path prefix");
    cmd->add_option("--format", f.format, "report format: csv or json");
}

void add_coin(CLI::App* cmd, FlagSpec& f)
{
    cmd->add_option("--coin", f.coin_kind, "coin kind: hadamard, matrix, dirac_eps, ftd");
    cmd->add_option("--eps", f.eps, "dirac_eps coin parameter");
    cmd->add_option("--coin-a", f.coin_a, "matrix coin a as re,im");
    cmd->add_option("--coin-b", f.coin_b, "matrix coin b as re,im");
    cmd->add_option("--det-phase", f.det_phase, "matrix coin determinant phase as re,im");
    cmd->add_option("--alpha", f.alpha, "ftd coin exponent");
    cmd->add_option("--r", f.r, "ftd/lazy base rate");
}

// Gather only the flags the user actually passed.
json flags_to_json(const CLI::App& cmd, const FlagSpec& f)
{
    json j;
    const auto passed = [&](const char* name) {
        const CLI::Option* o = cmd.get_option_no_throw(name);
        return o != nullptr && o->count() > 0;
    };
    if (passed("--init")) {
        const auto v = parse_list(f.init);
        if (v.size() != 4)
            throw qwalk::config_error("--init needs four comma-separated numbers");
        j["init"] = v;
    }
    if (passed("--out"))
        j["out"] = f.out;
    if (passed("--format"))
        j["format"] = f.format;
    if (passed("--coin")) {
        json coin;
        coin["kind"] = f.coin_kind;
        if (passed("--eps"))
            coin["eps"] = f.eps;
        if (passed("--coin-a"))
            coin["a"] = parse_list(f.coin_a);
        if (passed("--coin-b"))
            coin["b"] = parse_list(f.coin_b);
        if (passed("--det-phase"))
            coin["det_phase"] = parse_list(f.det_phase);
        if (f.coin_kind == "ftd") {
            if (passed("--alpha"))
                coin["alpha"] = f.alpha;
            if (passed("--r"))
                coin["r"] = f.r;
        }
        j["coin"] = coin;
    } else if (passed("--eps") || passed("--coin-a") || passed("--coin-b")
               || passed("--det-phase")) {
        throw qwalk::config_error("coin flags need --coin <kind>");
    }
    if (passed("--alpha"))
        j["alpha"] = f.alpha;
    if (passed("--r"))
        j["r"] = f.r;
    if (passed("--steps"))
        j["steps"] = f.steps;
    if (passed("--checkpoints"))
        j["checkpoints"] = parse_list(f.checkpoints);
    if (passed("--gamma"))
        j["gamma"] = parse_list(f.gamma);
    if (passed("--time"))
        j["time"] = f.time;
    if (passed("--dt"))
        j["dt"] = f.dt;
    if (passed("--method"))
        j["method"] = f.method;
    if (passed("--walk"))
        j["walk"] = f.walk;
    if (passed("--law"))
        j["law"] = f.law;
    if (passed("--times"))
        j["times"] = parse_list(f.times);
    if (passed("--alphas"))
        j["alphas"] = parse_list(f.alphas);
    if (passed("--p"))
        j["p"] = f.p;
    if (passed("--T"))
        j["T"] = f.final_time;
    if (passed("--eps-list"))
        j["eps_list"] = parse_list(f.eps_list);
    if (passed("--sigma"))
        j["sigma"] = f.sigma;
    if (passed("--sample"))
        j["sample"] = f.sample;
    if (passed("--seed"))
        j["seed"] = f.seed;
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    qwalk::apply_thread_cap();

    CLI::App app{"one-dimensional quantum/classical walk simulator and limit-law checker"};
    app.require_subcommand(1);
    FlagSpec f;

    CLI::App* dtqw = app.add_subcommand("dtqw", "discrete-time quantum walk state evolution");
    add_common(dtqw, f);
    add_coin(dtqw, f);
    dtqw->add_option("--steps", f.steps, "number of steps");
    dtqw->add_option("--checkpoints", f.checkpoints, "comma-separated checkpoint steps");
    dtqw->add_option("--sample", f.sample, "also draw N positions from the final distribution");
    dtqw->add_option("--seed", f.seed, "sampling seed");

    CLI::App* ctqw = app.add_subcommand("ctqw", "continuous-time quantum walk");
    add_common(ctqw, f);
    ctqw->add_option("--gamma", f.gamma, "hopping parameter re,im");
    ctqw->add_option("--time", f.time, "evolution time");
    ctqw->add_option("--method", f.method, "exact or integrate");
    ctqw->add_option("--dt", f.dt, "integrator step (<= 0.01)");

    CLI::App* classical = app.add_subcommand("classical", "classical random/lazy walks");
    add_common(classical, f);
    classical->add_option("--walk", f.walk, "rw, lazy or ctrw");
    classical->add_option("--p", f.p, "rw right-step probability");
    classical->add_option("--steps", f.steps, "rw steps");
    classical->add_option("--alpha", f.alpha, "lazy rate exponent");
    classical->add_option("--r", f.r, "lazy base rate");
    classical->add_option("--T", f.final_time, "lazy final time");
    classical->add_option("--time", f.time, "ctrw time");

    CLI::App* limit = app.add_subcommand("limit-check", "convergence sweep against a limit law");
    add_common(limit, f);
    add_coin(limit, f);
    limit->add_option("--walk", f.walk, "hadamard, dtqw, ctqw, rw or lazy");
    limit->add_option("--law", f.law, "auto, konno, arcsine, normal, modbessel, delta");
    limit->add_option("--times", f.times, "comma-separated sweep times");
    limit->add_option("--gamma", f.gamma, "ctqw hopping re,im");
    limit->add_option("--p", f.p, "rw probability");
    limit->add_option("--T", f.final_time, "final time for coin construction");

    CLI::App* crossover = app.add_subcommand("crossover", "FTD-DTQW crossover table");
    add_common(crossover, f);
    crossover->add_option("--alphas", f.alphas, "comma-separated exponents");
    crossover->add_option("--r", f.r, "base rate");
    crossover->add_option("--T", f.final_time, "final time");

    CLI::App* dirac = app.add_subcommand("dirac-compare", "DTQW vs Dirac continuum limit");
    add_common(dirac, f);
    dirac->add_option("--eps-list", f.eps_list, "decreasing lattice spacings");
    dirac->add_option("--time", f.time, "comparison time");
    dirac->add_option("--sigma", f.sigma, "packet width");

    CLI11_PARSE(app, argc, argv);

    try {
        CLI::App* active = app.get_subcommands().front();
        json file_values;
        if (!f.config_path.empty()) {
            std::ifstream in(f.config_path);
            if (!in)
                throw qwalk::config_error("cannot read config file " + f.config_path);
            try {
                in >> file_values;
            } catch (const nlohmann::json::exception& e) {
                throw qwalk::config_error(std::string("malformed JSON config: ") + e.what());
            }
        }
        json flag_values = flags_to_json(*active, f);
        flag_values["command"] = active->get_name();
        if (!file_values.contains("command"))
            file_values["command"] = active->get_name();

        std::vector<std::string> warnings;
        const qwalk::cli::RunConfig cfg =
            qwalk::cli::parse_config(file_values, flag_values, &warnings);
        for (const auto& w : warnings)
            std::cerr << "warning: " << w << "\n";

        for (const auto& path : qwalk::cli::run(cfg))
            std::cout << path << "\n";
        return 0;
    } catch (const qwalk::config_error& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const qwalk::numeric_error& e) {
        std::cerr << "error: numeric: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 3;
    }
}
