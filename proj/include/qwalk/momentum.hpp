#pragma once

#include <array>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk::momentum {

struct Mat2 {
    cplx m00, m01, m10, m11;

    std::pair<cplx, cplx> apply(cplx v0, cplx v1) const
    {
        return {m00 * v0 + m01 * v1, m10 * v0 + m11 * v1};
    }
};

// U(k) = diag(e^{ik}, e^{-ik}) C.
Mat2 symbol(const Coin2& coin, double k);

struct EigenBranch {
    cplx lambda;
    cplx v0, v1; // unit eigenvector
};

// Numeric eigendecomposition of a 2x2 unitary. Branches come out ordered by
// the principal argument of lambda; grid users re-label by eigenvector
// overlap (see branch_grid). Throws on non-unitary input.
std::array<EigenBranch, 2> eig2(const Mat2& m);

// Eigenpairs over a uniform k grid on [-pi, pi), labeled continuously by
// maximal eigenvector overlap between adjacent samples.
struct BranchGrid {
    std::vector<double> k;
    std::array<std::vector<EigenBranch>, 2> branch;
};
BranchGrid branch_grid(const Coin2& coin, int n_points = 4096);

// Group velocity i lambda'(k)/lambda(k) of the given analytic branch.
// Branch 0 carries eigenphase theta/2 + beta(k), branch 1 the conjugate.
double group_velocity(const Coin2& coin, double k, int branch);

// Analytic eigenpair of U(k) for the given branch.
EigenBranch analytic_branch(const Coin2& coin, double k, int branch);

// lim E[(X_t/t)^j]: quadrature of sum_b v_b(k)^j |<v_b|psi0>|^2 dk/2pi
// to absolute error 1e-8.
double limit_moment(const Coin2& coin, const CoinState& init, int j);

// Limit density at interior grid points, built by numerically inverting the
// group velocity on its monotone sub-intervals. Independent of the
// closed-form Konno density; used as its oracle.
std::vector<double> limit_density_numeric(const Coin2& coin, const CoinState& init,
                                          const std::vector<double>& grid);

// E[X_t^j] through the momentum representation: U(k)^t with derivative
// propagation, trapezoid over a uniform k grid (>= 4096 points). j <= 4.
double finite_time_moment(const Coin2& coin, const CoinState& init, long t, int j);

} // namespace qwalk::momentum
