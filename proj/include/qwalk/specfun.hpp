#pragma once

#include <vector>

namespace qwalk::specfun {

// Truncation control for the ascending series evaluations.
struct OrderedSeriesConfig {
    int max_terms = 400;
    double abs_tol = 1e-14;
};

// Bessel function of the first kind, integer order. Negative orders go
// through J_{-n}(z) = (-1)^n J_n(z). Ascending series for z <= 15, Miller's
// downward recurrence normalized with J_0^2 + 2 sum J_m^2 = 1 above that.
// Absolute error <= 1e-12 for 0 <= z <= 1e4.
double bessel_j(int n, double z, const OrderedSeriesConfig& cfg = {});

// J_0(z) .. J_{n_max}(z) in one downward-recurrence pass.
std::vector<double> bessel_j_array(int n_max, double z);

// Modified Bessel function of the first kind, integer order; I_{-n} = I_n.
double bessel_i(int n, double z, const OrderedSeriesConfig& cfg = {});

// e^{-z} I_n(z), stable for z up to a few hundred.
double bessel_i_scaled(int n, double z);

// Gamma function on the positive axis. Exact factorials for integer
// arguments <= 23, Lanczos (g = 7, 9 coefficients) otherwise.
double gamma_fn(double x);

} // namespace qwalk::specfun
