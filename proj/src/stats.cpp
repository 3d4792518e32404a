#include "qwalk/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qwalk/errors.hpp"

namespace qwalk::stats {

double ks_distance_affine(const Distribution& d, double shift, double scale,
                          const laws::LimitLaw& law)
{
    if (!(scale > 0.0))
        throw config_error("ks_distance: scale must be positive");

    const size_t n = d.p.size();
    if (n == 0)
        throw config_error("ks_distance: empty distribution");

    std::vector<double> pos(n);
    std::vector<double> cum(n);
    long double acc = 0.0L;
    for (size_t i = 0; i < n; ++i) {
        pos[i] = (static_cast<double>(d.lo + static_cast<long>(i)) - shift) / scale;
        acc += d.p[i];
        cum[i] = static_cast<double>(acc);
    }

    std::vector<double> eval = pos;
    for (const auto& [x, mass] : laws::atoms(law)) {
        (void)mass;
        eval.push_back(x);
    }
    const double edge = laws::support_radius(law);
    if (std::isfinite(edge) && edge > 0.0) {
        eval.push_back(-edge);
        eval.push_back(edge);
    }
    std::sort(eval.begin(), eval.end());
    eval.erase(std::unique(eval.begin(), eval.end()), eval.end());

    const auto emp_right = [&](double x) {
        // mass at positions <= x
        const auto it = std::upper_bound(pos.begin(), pos.end(), x);
        return it == pos.begin() ? 0.0 : cum[static_cast<size_t>(it - pos.begin()) - 1];
    };
    const auto emp_left = [&](double x) {
        // mass at positions < x
        const auto it = std::lower_bound(pos.begin(), pos.end(), x);
        return it == pos.begin() ? 0.0 : cum[static_cast<size_t>(it - pos.begin()) - 1];
    };

    double dist = 0.0;
    for (double x : eval) {
        dist = std::max(dist, std::abs(emp_right(x) - laws::cdf(law, x)));
        dist = std::max(dist, std::abs(emp_left(x) - laws::cdf_left(law, x)));
    }
    return dist;
}

double ks_distance(const Distribution& d, double scale, const laws::LimitLaw& law)
{
    return ks_distance_affine(d, 0.0, scale, law);
}

double l1_distance(const Distribution& d, const laws::LimitLaw& law)
{
    if (!laws::is_discrete(law))
        throw config_error("l1_distance: law is continuous");
    std::map<long, double> q;
    for (const auto& [x, mass] : laws::atoms(law))
        q[static_cast<long>(std::llround(x))] = mass;
    long double l1 = 0.0L;
    for (size_t i = 0; i < d.p.size(); ++i) {
        const long x = d.lo + static_cast<long>(i);
        const auto it = q.find(x);
        const double lm = it == q.end() ? 0.0 : it->second;
        l1 += std::abs(d.p[i] - lm);
        if (it != q.end())
            q.erase(it);
    }
    for (const auto& [x, mass] : q) {
        (void)x;
        l1 += mass;
    }
    return static_cast<double>(l1);
}

double tv_distance(const Distribution& d, const laws::LimitLaw& law)
{
    return 0.5 * l1_distance(d, law);
}

double scaled_moment(const Distribution& d, double shift, double scale, int j)
{
    if (j < 0 || j > 8)
        throw config_error("scaled_moment: order must lie in [0,8]");
    long double s = 0.0L;
    for (size_t i = 0; i < d.p.size(); ++i) {
        const long double x = (static_cast<long double>(d.lo + static_cast<long>(i)) - shift) / scale;
        long double w = 1.0L;
        for (int m = 0; m < j; ++m)
            w *= x;
        s += w * d.p[i];
    }
    return static_cast<double>(s);
}

ScalingRule scale_t()
{
    return {"t", [](double t) { return t; }};
}

ScalingRule scale_sqrt_t()
{
    return {"sqrt(t)", [](double t) { return std::sqrt(t); }};
}

ScalingRule scale_power(double exponent)
{
    return {"t^" + std::to_string(exponent),
            [exponent](double t) { return std::pow(t, exponent); }};
}

ScalingRule scale_fixed(double s, std::string name)
{
    return {std::move(name), [s](double) { return s; }};
}

ConvergenceReport convergence_sweep(const std::function<Distribution(double)>& builder,
                                    const std::vector<double>& times, const ScalingRule& scaling,
                                    const laws::LimitLaw& law)
{
    if (!std::is_sorted(times.begin(), times.end())
        || std::adjacent_find(times.begin(), times.end()) != times.end())
        throw config_error("convergence_sweep: times must be strictly increasing");

    ConvergenceReport rep;
    rep.scaling = scaling.name;
    rep.moment_orders = {1, 2, 4};
    rep.moment_deltas.assign(rep.moment_orders.size(), {});
    for (double t : times) {
        Distribution d;
        try {
            d = builder(t);
        } catch (const error& e) {
            throw numeric_error("convergence_sweep: builder failed at t = "
                                + std::to_string(t) + ": " + e.what());
        }
        const double s = scaling.scale_at(t);
        rep.times.push_back(t);
        rep.ks.push_back(ks_distance(d, s, law));
        for (size_t m = 0; m < rep.moment_orders.size(); ++m) {
            const int j = rep.moment_orders[m];
            rep.moment_deltas[m].push_back(
                std::abs(scaled_moment(d, 0.0, s, j) - laws::law_moment(law, j)));
        }
    }
    return rep;
}

} // namespace qwalk::stats
