#pragma once

#include <functional>
#include <string>
#include <vector>

#include "qwalk/distribution.hpp"
#include "qwalk/limit_laws.hpp"

namespace qwalk::stats {

// Kolmogorov distance between the empirical CDF of the rescaled support
// points x/scale and the law CDF, evaluated at both one-sided limits of every
// atom (law atoms and band edges included).
double ks_distance(const Distribution& d, double scale, const laws::LimitLaw& law);

// Same with an affine rescaling (x - shift)/scale (CLT standardization).
double ks_distance_affine(const Distribution& d, double shift, double scale,
                          const laws::LimitLaw& law);

// sum_n |p(n) - pmf(n)| over the union of supports; discrete laws only.
double l1_distance(const Distribution& d, const laws::LimitLaw& law);

// Total variation = L1/2.
double tv_distance(const Distribution& d, const laws::LimitLaw& law);

// E[((X - shift)/scale)^j].
double scaled_moment(const Distribution& d, double shift, double scale, int j);

struct ScalingRule {
    std::string name;
    std::function<double(double)> scale_at;
};

ScalingRule scale_t();
ScalingRule scale_sqrt_t();
ScalingRule scale_power(double exponent); // t^exponent
ScalingRule scale_fixed(double s, std::string name);

struct ConvergenceReport {
    std::string scaling;
    std::vector<double> times;
    std::vector<double> ks;
    std::vector<int> moment_orders;                 // {1, 2, 4}
    std::vector<std::vector<double>> moment_deltas; // [order][time]
};

ConvergenceReport convergence_sweep(const std::function<Distribution(double)>& builder,
                                    const std::vector<double>& times, const ScalingRule& scaling,
                                    const laws::LimitLaw& law);

} // namespace qwalk::stats
