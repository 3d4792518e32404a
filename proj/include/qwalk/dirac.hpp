#pragma once

#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk::dirac {

// 2-spinor field on the uniform grid x_j = j eps, j in [-half_extent, half_extent].
struct SpinorField {
    double eps = 0.0;
    long half_extent = 0;
    double time = 0.0;
    std::vector<cplx> l, r;

    size_t index(long j) const { return static_cast<size_t>(j + half_extent); }
    // Discrete L2 norm squared, eps sum (|l|^2 + |r|^2).
    double norm2() const;
};

// Gaussian amplitude envelope exp(-x^2 / (2 sigma^2)) times a fixed coin
// state, normalized in the discrete L2 norm. grid_extent is the physical
// half-width of the grid.
SpinorField gaussian_packet(double eps, double grid_extent, double sigma,
                            const CoinState& spin);

// Evolution by the momentum-space propagator exp(-i t H(k)) with
// H(k) = sigma_x - k sigma_z, applied at the DFT frequencies of the grid.
// Exactly unitary. Raises a window_error when the light cone of the initial
// support comes within 5 cells of the boundary.
SpinorField dirac_spectral(const SpinorField& init, double t);

struct OrderReport {
    std::vector<double> eps;
    std::vector<double> l2_error;
    double fitted_order = 0.0;
};

struct CompareOptions {
    double sigma = 0.35;    // packet width in physical units
    double x_extent = 3.0;  // initial-data region; the grid adds t plus margin
};

// Per eps: DTQW with coin C(eps) for t/eps steps on lattice spacing eps,
// compared against dirac_spectral at time t in discrete L2; fits the
// convergence order.
OrderReport continuum_compare(const std::vector<double>& eps_list, double t,
                              const CoinState& init, const CompareOptions& opt = {});

} // namespace qwalk::dirac
