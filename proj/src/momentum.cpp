#include "qwalk/momentum.hpp"

#include <algorithm>
#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/quadrature.hpp"

namespace qwalk::momentum {

namespace {

constexpr double pi = 3.14159265358979323846;

// Spectral data of U(k) in closed form. With a = r e^{i alpha} and
// det = e^{i theta}, the eigenvalues are
//   lambda_b(k) = e^{i theta/2} (r cos phi +- i sqrt(1 - r^2 cos^2 phi)),
//   phi = k + alpha - theta/2,
// and the branch velocities i lambda'/lambda are -+ beta'(k) with
// beta = arccos(r cos phi).
struct Spectral {
    Coin2 coin;
    double r;
    double alpha;
    double theta;
    cplx half_phase;

    explicit Spectral(const Coin2& c)
        : coin(c),
          r(std::abs(c.a)),
          alpha(std::arg(c.a)),
          theta(std::arg(c.det())),
          half_phase(std::polar(1.0, 0.5 * std::arg(c.det())))
    {
    }

    double phi(double k) const { return k + alpha - 0.5 * theta; }

    // Velocity of branch 0 as a function of phi.
    double w0(double p) const
    {
        const double c = std::cos(p);
        return -r * std::sin(p) / std::sqrt(1.0 - r * r * c * c);
    }

    double w0_prime(double p) const
    {
        const double c = std::cos(p);
        const double den = 1.0 - r * r * c * c;
        return -r * c * (1.0 - r * r) / (den * std::sqrt(den));
    }

    cplx lambda(double k, int b) const
    {
        const double rc = r * std::cos(phi(k));
        const double s = std::sqrt(std::max(0.0, 1.0 - rc * rc));
        return half_phase * cplx(rc, b == 0 ? s : -s);
    }

    double velocity(double k, int b) const
    {
        const double v = w0(phi(k));
        return b == 0 ? v : -v;
    }

    double velocity_prime(double k, int b) const
    {
        const double v = w0_prime(phi(k));
        return b == 0 ? v : -v;
    }

    EigenBranch eigenpair(double k, int b) const
    {
        const cplx lam = lambda(k, b);
        const cplx eik = std::polar(1.0, k);
        if (std::abs(coin.b) < 1e-15) {
            // Diagonal coin: basis eigenvectors, matched by eigenvalue.
            const cplx la = coin.a * eik;
            if (std::abs(lam - la) <= std::abs(lam - coin.d * std::conj(eik)))
                return {lam, 1.0, 0.0};
            return {lam, 0.0, 1.0};
        }
        cplx u0 = coin.b * eik;
        cplx u1 = lam - coin.a * eik;
        const double n = std::sqrt(std::norm(u0) + std::norm(u1));
        u0 /= n;
        u1 /= n;
        return {lam, u0, u1};
    }

    double overlap2(double k, int b, const CoinState& init) const
    {
        const EigenBranch e = eigenpair(k, b);
        return std::norm(std::conj(e.v0) * init.l + std::conj(e.v1) * init.r);
    }
};

void require_nondegenerate(const Coin2& coin)
{
    if (std::abs(coin.a) < 1e-14)
        throw degenerate_coin("coin with a = 0: the walk is a deterministic mover; "
                              "use a Delta limit law");
}

double unitarity_residual(const Mat2& m)
{
    // || m^dagger m - I ||_max
    const cplx g00 = std::conj(m.m00) * m.m00 + std::conj(m.m10) * m.m10;
    const cplx g01 = std::conj(m.m00) * m.m01 + std::conj(m.m10) * m.m11;
    const cplx g11 = std::conj(m.m01) * m.m01 + std::conj(m.m11) * m.m11;
    return std::max({std::abs(g00 - 1.0), std::abs(g01), std::abs(g11 - 1.0)});
}

} // namespace

Mat2 symbol(const Coin2& coin, double k)
{
    const cplx eik = std::polar(1.0, k);
    const cplx emk = std::conj(eik);
    return {eik * coin.a, eik * coin.b, emk * coin.c, emk * coin.d};
}

std::array<EigenBranch, 2> eig2(const Mat2& m)
{
    if (unitarity_residual(m) > 1e-10)
        throw config_error("eig2: input matrix not unitary");
    const cplx tr = m.m00 + m.m11;
    const cplx det = m.m00 * m.m11 - m.m01 * m.m10;
    const cplx disc = std::sqrt(tr * tr - 4.0 * det);
    std::array<cplx, 2> lams{0.5 * (tr + disc), 0.5 * (tr - disc)};
    if (std::arg(lams[0]) > std::arg(lams[1]))
        std::swap(lams[0], lams[1]);

    std::array<EigenBranch, 2> out;
    for (int i = 0; i < 2; ++i) {
        const cplx lam = lams[i];
        // Null vector of (m - lam): pick the better-conditioned row.
        cplx u0 = m.m01;
        cplx u1 = lam - m.m00;
        const cplx w0 = lam - m.m11;
        const cplx w1 = m.m10;
        if (std::norm(w0) + std::norm(w1) > std::norm(u0) + std::norm(u1)) {
            u0 = w0;
            u1 = w1;
        }
        const double n = std::sqrt(std::norm(u0) + std::norm(u1));
        if (n < 1e-150) {
            // Degenerate pair (scalar matrix): any orthonormal basis works.
            out[i] = {lam, i == 0 ? 1.0 : 0.0, i == 0 ? 0.0 : 1.0};
            continue;
        }
        out[i] = {lam, u0 / n, u1 / n};
    }
    return out;
}

BranchGrid branch_grid(const Coin2& coin, int n_points)
{
    if (n_points < 2)
        throw config_error("branch_grid: need at least two samples");
    BranchGrid g;
    g.k.resize(static_cast<size_t>(n_points));
    g.branch[0].resize(static_cast<size_t>(n_points));
    g.branch[1].resize(static_cast<size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        const double k = -pi + 2.0 * pi * i / n_points;
        g.k[static_cast<size_t>(i)] = k;
        auto pair = eig2(symbol(coin, k));
        if (i > 0) {
            // Continuity: keep the labeling that maximizes eigenvector overlap
            // with the previous sample.
            const EigenBranch& prev = g.branch[0][static_cast<size_t>(i - 1)];
            const double keep = std::norm(std::conj(prev.v0) * pair[0].v0
                                          + std::conj(prev.v1) * pair[0].v1);
            const double swap = std::norm(std::conj(prev.v0) * pair[1].v0
                                          + std::conj(prev.v1) * pair[1].v1);
            if (swap > keep)
                std::swap(pair[0], pair[1]);
        }
        g.branch[0][static_cast<size_t>(i)] = pair[0];
        g.branch[1][static_cast<size_t>(i)] = pair[1];
    }
    return g;
}

double group_velocity(const Coin2& coin, double k, int branch)
{
    require_nondegenerate(coin);
    if (branch != 0 && branch != 1)
        throw config_error("group_velocity: branch must be 0 or 1");
    return Spectral(coin).velocity(k, branch);
}

EigenBranch analytic_branch(const Coin2& coin, double k, int branch)
{
    if (branch != 0 && branch != 1)
        throw config_error("analytic_branch: branch must be 0 or 1");
    return Spectral(coin).eigenpair(k, branch);
}

double limit_moment(const Coin2& coin, const CoinState& init, int j)
{
    if (j < 0 || j > 8)
        throw config_error("limit_moment: order must lie in [0,8]");
    require_nondegenerate(coin);
    const Spectral sp(coin);
    const auto integrand = [&](double k) {
        double s = 0.0;
        for (int b = 0; b < 2; ++b) {
            const double v = sp.velocity(k, b);
            double w = 1.0;
            for (int m = 0; m < j; ++m)
                w *= v;
            s += w * sp.overlap2(k, b, init);
        }
        return s;
    };
    return integrate(integrand, -pi, pi, 1e-8 * 2.0 * pi) / (2.0 * pi);
}

std::vector<double> limit_density_numeric(const Coin2& coin, const CoinState& init,
                                          const std::vector<double>& grid)
{
    require_nondegenerate(coin);
    const Spectral sp(coin);
    const double r = sp.r;
    for (double x : grid)
        if (!(std::abs(x) < r))
            throw singular_endpoint("limit_density_numeric: grid point at or beyond the band edge");

    // Monotone sub-intervals of w0: decreasing on (-pi/2, pi/2), increasing on
    // (pi/2, 3pi/2); the extrema sit exactly at phi = +-pi/2.
    const auto solve = [&](double target, double lo, double hi) {
        double flo = sp.w0(lo) - target;
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = sp.w0(mid) - target;
            if ((fm > 0.0) == (flo > 0.0)) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };

    std::vector<double> density(grid.size(), 0.0);
#pragma omp parallel for
    for (long gi = 0; gi < static_cast<long>(grid.size()); ++gi) {
        const double x = grid[static_cast<size_t>(gi)];
        double f = 0.0;
        for (int b = 0; b < 2; ++b) {
            const double target = b == 0 ? x : -x; // v_1 = -w0
            const double roots[2] = {
                solve(target, -0.5 * pi, 0.5 * pi),
                solve(target, 1.5 * pi, 0.5 * pi), // increasing piece, reversed bounds
            };
            for (double p : roots) {
                double k = p - sp.alpha + 0.5 * sp.theta;
                k = std::remainder(k, 2.0 * pi);
                f += sp.overlap2(k, b, init) / (2.0 * pi * std::abs(sp.w0_prime(p)));
            }
        }
        density[static_cast<size_t>(gi)] = f;
    }
    return density;
}

double finite_time_moment(const Coin2& coin, const CoinState& init, long t, int j)
{
    if (j < 0 || j > 4)
        throw config_error("finite_time_moment: order must lie in [0,4]");
    if (t < 0)
        throw config_error("finite_time_moment: negative time");

    const long n_grid = std::max<long>(4096, 2 * t + 64);
    static const double binom[5][5] = {
        {1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};

    long double acc = 0.0L;
    for (long m = 0; m < n_grid; ++m) {
        const double k = -pi + 2.0 * pi * m / n_grid;
        const cplx eik = std::polar(1.0, k);
        const cplx emk = std::conj(eik);

        // U^(i)(k) = diag(i^i e^{ik}, (-i)^i e^{-ik}) C
        Mat2 deriv[5];
        cplx ip = 1.0; // i^i
        for (int i = 0; i <= j; ++i) {
            const cplx dl = ip * eik;
            const cplx dr = std::conj(ip) * emk;
            deriv[i] = {dl * coin.a, dl * coin.b, dr * coin.c, dr * coin.d};
            ip *= cplx(0.0, 1.0);
        }

        // psi[d] = d-th k-derivative of U(k)^step psi0
        std::array<std::pair<cplx, cplx>, 5> psi{};
        psi[0] = {init.l, init.r};
        std::array<std::pair<cplx, cplx>, 5> next{};
        for (long step = 0; step < t; ++step) {
            for (int d = j; d >= 0; --d) {
                cplx n0 = 0.0, n1 = 0.0;
                for (int i = 0; i <= d; ++i) {
                    const auto [a0, a1] = deriv[i].apply(psi[d - i].first, psi[d - i].second);
                    n0 += binom[d][i] * a0;
                    n1 += binom[d][i] * a1;
                }
                next[d] = {n0, n1};
            }
            std::swap(psi, next);
        }

        // <psi | (i d/dk)^j psi> = i^j <psi^(0), psi^(j)>
        cplx ij = 1.0;
        for (int i = 0; i < j; ++i)
            ij *= cplx(0.0, 1.0);
        const cplx val = ij
                         * (std::conj(psi[0].first) * psi[j].first
                            + std::conj(psi[0].second) * psi[j].second);
        acc += static_cast<long double>(val.real());
    }
    return static_cast<double>(acc / n_grid);
}

} // namespace qwalk::momentum
