#include <cmath>
#include <cstdio>
#include <random>

#include "config.hpp"
#include "qwalk/classical.hpp"
#include "qwalk/ctqw.hpp"
#include "qwalk/dirac.hpp"
#include "qwalk/dtqw.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/io.hpp"
#include "qwalk/limit_laws.hpp"
#include "qwalk/momentum.hpp"
#include "qwalk/stats.hpp"

namespace qwalk::cli {

namespace {

using nlohmann::json;

void write_meta(const RunConfig& cfg, std::vector<std::string>& files)
{
    json meta;
    meta["command"] = cfg.command;
    meta["coin"] = cfg.coin;
    meta["init"] = {{cfg.init[0], cfg.init[1]}, {cfg.init[2], cfg.init[3]}};
    meta["outputs"] = files;
    const std::string path = cfg.out + ".meta.json";
    io::atomic_write(path, meta.dump(2) + "\n");
    files.push_back(path);
}

std::string emit(const std::string& path, const std::string& content,
                 std::vector<std::string>& files)
{
    io::atomic_write(path, content);
    files.push_back(path);
    return path;
}

// Inverse-CDF sampling from an exact distribution; CLI convenience only.
std::string sample_csv(const Distribution& d, long n_samples, unsigned long long seed)
{
    std::vector<double> cum(d.p.size());
    double acc = 0.0;
    for (size_t i = 0; i < d.p.size(); ++i) {
        acc += d.p[i];
        cum[i] = acc;
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    std::string out = "sample\n";
    for (long s = 0; s < n_samples; ++s) {
        const double u = uni(rng) * acc;
        const auto it = std::lower_bound(cum.begin(), cum.end(), u);
        const long n = d.lo + static_cast<long>(it - cum.begin());
        out += std::to_string(n);
        out += '\n';
    }
    return out;
}

std::vector<std::string> run_dtqw(const RunConfig& cfg)
{
    if (cfg.steps < 0)
        throw config_error("dtqw: steps must be non-negative");
    const Coin2 coin = coin_from_json(cfg.coin, cfg.steps);
    const CoinField field = CoinField::homogeneous(coin);
    const CoinState init = init_state(cfg);

    std::vector<long> checkpoints = cfg.checkpoints;
    if (checkpoints.empty())
        checkpoints = {cfg.steps};
    for (size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 0 || checkpoints[i] > cfg.steps)
            throw config_error("dtqw: checkpoint outside [0, steps]");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw config_error("dtqw: checkpoints must increase");
    }

    std::vector<std::string> files;
    dtqw::WalkerState state = dtqw::point_mass(init);
    long done = 0;
    for (long cp : checkpoints) {
        state = dtqw::evolve_state(std::move(state), field, cp - done);
        done = cp;
        emit(cfg.out + "_t" + std::to_string(cp) + ".csv", io::walker_csv(state), files);
    }
    if (cfg.sample > 0)
        emit(cfg.out + "_samples.csv",
             sample_csv(dtqw::distribution(state), cfg.sample, cfg.seed), files);
    write_meta(cfg, files);
    return files;
}

std::vector<std::string> run_ctqw(const RunConfig& cfg)
{
    const cplx gamma(cfg.gamma[0], cfg.gamma[1]);
    ctqw::CtqwState state;
    if (cfg.method == "exact")
        state = ctqw::ctqw_exact(gamma, cfg.time);
    else if (cfg.method == "integrate")
        state = ctqw::ctqw_integrate(gamma, cfg.time, cfg.dt);
    else
        throw config_error("ctqw: method must be exact or integrate");

    std::vector<std::string> files;
    emit(cfg.out + ".csv", io::ctqw_csv(state, cfg.method), files);
    write_meta(cfg, files);
    return files;
}

std::vector<std::string> run_classical(const RunConfig& cfg)
{
    Distribution d;
    if (cfg.walk == "rw") {
        d = classical::rw_distribution(cfg.p, cfg.steps);
    } else if (cfg.walk == "lazy") {
        d = classical::lazy_rw({cfg.final_time, cfg.alpha, cfg.r});
    } else if (cfg.walk == "ctrw") {
        const long radius = ctqw::default_radius(cfg.time) + 20;
        d.lo = -radius;
        d.p.resize(static_cast<size_t>(2 * radius + 1));
        for (long x = -radius; x <= radius; ++x)
            d.p[static_cast<size_t>(x + radius)] = classical::ctrw_pmf(cfg.time, x);
    } else {
        throw config_error("classical: walk must be rw, lazy or ctrw");
    }

    std::vector<std::string> files;
    emit(cfg.out + ".csv", io::distribution_csv(d), files);
    write_meta(cfg, files);
    return files;
}

std::vector<std::string> run_limit_check(const RunConfig& cfg)
{
    if (cfg.times.size() < 2)
        throw config_error("limit-check: need at least two times");
    const CoinState init = init_state(cfg);

    std::function<Distribution(double)> builder;
    stats::ScalingRule scaling = stats::scale_t();
    laws::LimitLaw law = laws::make_normal(0.0, 1.0);

    if (cfg.walk == "hadamard" || cfg.walk == "dtqw") {
        const Coin2 coin = cfg.walk == "hadamard"
                               ? hadamard()
                               : coin_from_json(cfg.coin, cfg.final_time);
        const CoinField field = CoinField::homogeneous(coin);
        builder = [field, init](double t) {
            return dtqw::distribution(dtqw::evolve(init, field, static_cast<long>(t)));
        };
        law = laws::konno_for(coin, init);
    } else if (cfg.walk == "ctqw") {
        const cplx gamma(cfg.gamma[0], cfg.gamma[1]);
        builder = [gamma](double t) { return ctqw::distribution(ctqw::ctqw_exact(gamma, t)); };
        law = laws::make_arcsine(gamma);
    } else if (cfg.walk == "rw") {
        if (std::abs(cfg.p - 0.5) > 1e-12)
            throw config_error("limit-check rw: only the unbiased walk (p = 0.5) rescales "
                               "to N(0,1) without a shift");
        builder = [](double t) {
            return classical::rw_distribution(0.5, static_cast<long>(t));
        };
        scaling = stats::scale_sqrt_t();
        law = laws::make_normal(0.0, 1.0);
    } else if (cfg.walk == "lazy") {
        const double alpha = cfg.alpha, r = cfg.r;
        builder = [alpha, r](double t) {
            return classical::lazy_rw({static_cast<long>(t), alpha, r});
        };
        if (alpha < 1.0) {
            scaling = {"sqrt(T r(T))", [alpha, r](double t) {
                           return std::sqrt(t * r / std::pow(t, alpha));
                       }};
            law = laws::make_normal(0.0, 1.0);
        } else if (alpha == 1.0) {
            scaling = stats::scale_fixed(1.0, "1");
            law = laws::make_mod_bessel(r);
        } else {
            scaling = stats::scale_fixed(1.0, "1");
            law = laws::make_delta(0.0);
        }
    } else {
        throw config_error("limit-check: walk must be hadamard, dtqw, ctqw, rw or lazy");
    }

    // Explicit --law overrides the auto-selected one where it is parameter-free.
    if (cfg.law != "auto") {
        if (cfg.law == "normal")
            law = laws::make_normal(0.0, 1.0);
        else if (cfg.law == "arcsine")
            law = laws::make_arcsine(cplx(cfg.gamma[0], cfg.gamma[1]));
        else if (cfg.law == "modbessel")
            law = laws::make_mod_bessel(cfg.r);
        else if (cfg.law == "delta")
            law = laws::make_delta(0.0);
        else if (cfg.law != "konno")
            throw config_error("limit-check: unknown law '" + cfg.law + "'");
    }

    const stats::ConvergenceReport rep =
        stats::convergence_sweep(builder, cfg.times, scaling, law);

    std::vector<std::string> files;
    if (cfg.format == "json")
        emit(cfg.out + ".json", io::report_json(rep, law).dump(2) + "\n", files);
    else
        emit(cfg.out + ".csv", io::report_csv(rep), files);
    write_meta(cfg, files);
    return files;
}

std::vector<std::string> run_crossover(const RunConfig& cfg)
{
    if (cfg.alphas.empty())
        throw config_error("crossover: need at least one alpha");
    const CoinState init = init_state(cfg);

    std::vector<std::string> files;
    json table = json::array();
    for (double alpha : cfg.alphas) {
        const ctqw::FtdRun run{cfg.final_time, alpha, cfg.r};
        const Distribution d = ctqw::ftd_run(run, init);
        char label[32];
        std::snprintf(label, sizeof(label), "%g", alpha);
        emit(cfg.out + "_alpha" + label + ".csv", io::distribution_csv(d, "ftd"), files);
        json row;
        row["alpha"] = alpha;
        row["t_eff"] = run.t_eff();
        if (alpha == 0.0) {
            const laws::LimitLaw law = laws::konno_for(ftd_coin(run.rate()), init);
            row["law"] = io::law_json(law);
            row["metric"] = "ks";
            row["scale"] = static_cast<double>(cfg.final_time);
            row["value"] = stats::ks_distance(d, static_cast<double>(cfg.final_time), law);
        } else if (alpha < 1.0) {
            const laws::LimitLaw law = laws::make_ftda(cfg.r, init);
            const double scale = std::pow(static_cast<double>(cfg.final_time), 1.0 - alpha);
            row["law"] = io::law_json(law);
            row["metric"] = "ks";
            row["scale"] = scale;
            row["value"] = stats::ks_distance(d, scale, law);
        } else if (alpha == 1.0) {
            const laws::LimitLaw law =
                laws::make_bessel_parity(run.t_eff(), init, static_cast<int>(cfg.final_time % 2));
            row["law"] = io::law_json(law);
            row["metric"] = "l1";
            row["value"] = stats::l1_distance(d, law);
        } else {
            row["law"] = io::law_json(laws::make_delta(0.0));
            row["metric"] = "pr0";
            row["value"] = d.at(0);
        }
        table.push_back(row);
    }

    json out;
    out["T"] = cfg.final_time;
    out["r"] = cfg.r;
    out["cells"] = table;

    emit(cfg.out + ".json", out.dump(2) + "\n", files);
    write_meta(cfg, files);
    return files;
}

std::vector<std::string> run_dirac_compare(const RunConfig& cfg)
{
    if (cfg.eps_list.empty())
        throw config_error("dirac-compare: need eps_list");
    dirac::CompareOptions opt;
    opt.sigma = cfg.sigma;
    const dirac::OrderReport rep =
        dirac::continuum_compare(cfg.eps_list, cfg.time, init_state(cfg), opt);

    std::vector<std::string> files;
    emit(cfg.out + ".json", io::order_report_json(rep).dump(2) + "\n", files);
    write_meta(cfg, files);
    return files;
}

} // namespace

std::vector<std::string> run(const RunConfig& cfg)
{
    if (cfg.command == "dtqw")
        return run_dtqw(cfg);
    if (cfg.command == "ctqw")
        return run_ctqw(cfg);
    if (cfg.command == "classical")
        return run_classical(cfg);
    if (cfg.command == "limit-check")
        return run_limit_check(cfg);
    if (cfg.command == "crossover")
        return run_crossover(cfg);
    if (cfg.command == "dirac-compare")
        return run_dirac_compare(cfg);
    throw config_error("unknown command '" + cfg.command + "'");
}

} // namespace qwalk::cli
