#include "qwalk/classical.hpp"

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/specfun.hpp"

namespace qwalk::classical {

namespace {

// Tri-diagonal pushforward out(n) = c_left p(n-1) + c_stay p(n) + c_right p(n+1)
// applied "steps" times from a point mass at the origin. Edge sites whose mass
// stays at or below trim_cutoff are dropped.
Distribution tridiag_walk(long steps, double c_left, double c_stay, double c_right,
                          double trim_cutoff)
{
    Distribution d;
    d.lo = 0;
    d.p = {1.0};
    std::vector<double> next;
    next.reserve(64);
    for (long m = 0; m < steps; ++m) {
        const long n_in = static_cast<long>(d.p.size());
        const long n_out = n_in + 2;
        next.resize(static_cast<size_t>(n_out));
#pragma omp parallel for if (n_out > omp_threshold)
        for (long i = 0; i < n_out; ++i) {
            // output site lo - 1 + i; input index of the same site is i - 1
            const double left = i >= 2 && i - 2 < n_in ? d.p[static_cast<size_t>(i - 2)] : 0.0;
            const double stay = i >= 1 && i - 1 < n_in ? d.p[static_cast<size_t>(i - 1)] : 0.0;
            const double right = i < n_in ? d.p[static_cast<size_t>(i)] : 0.0;
            next[static_cast<size_t>(i)] = c_left * left + c_stay * stay + c_right * right;
        }
        std::swap(d.p, next);
        d.lo -= 1;
        if (trim_cutoff > 0.0) {
            size_t lo_cut = 0, hi_cut = d.p.size();
            while (lo_cut + 1 < hi_cut && d.p[lo_cut] <= trim_cutoff)
                ++lo_cut;
            while (hi_cut > lo_cut + 1 && d.p[hi_cut - 1] <= trim_cutoff)
                --hi_cut;
            if (lo_cut > 0 || hi_cut < d.p.size()) {
                d.p.erase(d.p.begin() + static_cast<long>(hi_cut), d.p.end());
                d.p.erase(d.p.begin(), d.p.begin() + static_cast<long>(lo_cut));
                d.lo += static_cast<long>(lo_cut);
            }
        }
    }
    detect_parity(d);
    return d;
}

} // namespace

Distribution rw_distribution(double p, long t)
{
    if (!(p >= 0.0) || !(p <= 1.0))
        throw config_error("rw_distribution: p must lie in [0,1]");
    if (t < 0)
        throw config_error("rw_distribution: negative step count");
    // Pr[X_{t+1} = x] = p Pr[X_t = x-1] + (1-p) Pr[X_t = x+1]
    return tridiag_walk(t, p, 0.0, 1.0 - p, 0.0);
}

double LazyRun::rate() const
{
    return r / std::pow(static_cast<double>(final_time), alpha);
}

Distribution lazy_rw(const LazyRun& run)
{
    if (run.final_time < 1)
        throw config_error("lazy_rw: final time must be >= 1");
    const double rate = run.rate();
    if (!(rate > 0.0) || rate > 1.0)
        throw config_error("lazy_rw: rate r(T) = " + std::to_string(rate)
                           + " outside (0,1]");
    // p_m(x) = (1-r) p_{m-1}(x) + r/2 (p_{m-1}(x-1) + p_{m-1}(x+1))
    return tridiag_walk(run.final_time, 0.5 * rate, 1.0 - rate, 0.5 * rate, 1e-320);
}

double ctrw_pmf(double t, long x)
{
    if (!(t >= 0.0) || !std::isfinite(t))
        throw config_error("ctrw_pmf: bad time");
    return specfun::bessel_i_scaled(static_cast<int>(std::labs(x)), t);
}

stats::ConvergenceReport clt_report(double p, long t)
{
    if (!(p > 0.0) || !(p < 1.0))
        throw config_error("clt_report: p must lie in (0,1)");
    if (t < 10)
        throw config_error("clt_report: need t >= 10");
    const Distribution d = rw_distribution(p, t);
    const double shift = static_cast<double>(t) * (2.0 * p - 1.0);
    const double scale = std::sqrt(4.0 * static_cast<double>(t) * p * (1.0 - p));
    const laws::LimitLaw law = laws::make_normal(0.0, 1.0);

    stats::ConvergenceReport rep;
    rep.scaling = "sqrt(Var[X_t])";
    rep.times = {static_cast<double>(t)};
    rep.ks = {stats::ks_distance_affine(d, shift, scale, law)};
    rep.moment_orders = {1, 2, 4};
    for (int j : rep.moment_orders)
        rep.moment_deltas.push_back(
            {std::abs(stats::scaled_moment(d, shift, scale, j) - laws::law_moment(law, j))});
    return rep;
}

} // namespace qwalk::classical
