#pragma once

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"

namespace qwalk::ctqw {

// Scalar lattice amplitudes of -i dPsi/dt = (gamma Psi(x-1) + conj(gamma) Psi(x+1))/2.
struct CtqwState {
    double t = 0.0;
    cplx gamma = 1.0;
    long lo = 0;
    std::vector<cplx> amp;

    long hi() const { return lo + static_cast<long>(amp.size()) - 1; }
    double norm2() const;
};

// Window padding beyond |gamma| t; Bessel tails decay faster than
// exponentially past the wavefront.
long default_radius(double gamma_abs_t);

// Closed-form solution from a point mass at the origin:
// Psi_t(x) = i^x e^{i x arg(gamma)} J_x(|gamma| t).
// radius 0 picks the default window; an explicit radius that leaves tail mass
// above 1e-12 raises a window_error naming the required size.
CtqwState ctqw_exact(cplx gamma, double t, long radius = 0);

// Classical 4th-order time stepping of the lattice ODE (dt <= 0.01).
CtqwState ctqw_integrate(cplx gamma, double t, double dt, long radius = 0);

Distribution distribution(const CtqwState& state);

// L2 distance between two states on the union of their windows.
double l2_distance(const CtqwState& a, const CtqwState& b);

// Final-time-dependent DTQW: coin rate r(T) defined through
// sqrt(r(T)) = r / T^alpha, effective CTQW time t_eff = T sqrt(r(T)).
struct FtdRun {
    long final_time;
    double alpha;
    double r;

    double sqrt_rate() const;
    double rate() const { return sqrt_rate() * sqrt_rate(); }
    double t_eff() const { return static_cast<double>(final_time) * sqrt_rate(); }
};

// DTQW evolution for T steps with the homogeneous coin ftd_coin(r(T)).
Distribution ftd_run(const FtdRun& run, const CoinState& init);

// The two CTQW components (gamma = +-i) of the Lemma-style decomposition and
// their recombination (Psi+ + (-1)^T Psi-)/2.
struct FtdDecomposition {
    long lo;
    std::vector<cplx> plus_l, plus_r;   // gamma = +i component
    std::vector<cplx> minus_l, minus_r; // gamma = -i component
    Distribution recombined;
    double l1_to_direct;
};

// Requires the asymptotic regime T r(T) < 0.1.
FtdDecomposition ftd_decomposition(const FtdRun& run, const CoinState& init);

} // namespace qwalk::ctqw
