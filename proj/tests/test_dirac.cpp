#include <doctest.h>

#include <cmath>

#include "qwalk/dirac.hpp"
#include "qwalk/errors.hpp"

using namespace qwalk;
using namespace qwalk::dirac;

namespace {

const CoinState state_sym = make_coin_state(1.0 / std::sqrt(2.0),
                                            cplx(0.0, 1.0 / std::sqrt(2.0)));

} // namespace

TEST_CASE("gaussian packet is normalized")
{
    const SpinorField f = gaussian_packet(0.02, 2.0, 0.35, state_sym);
    CHECK(f.norm2() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dirac_spectral at t = 0 is the identity")
{
    const SpinorField f = gaussian_packet(0.02, 3.0, 0.35, state_sym);
    const SpinorField g = dirac_spectral(f, 0.0);
    for (size_t i = 0; i < f.l.size(); ++i) {
        CHECK(std::abs(f.l[i] - g.l[i]) < 1e-13);
        CHECK(std::abs(f.r[i] - g.r[i]) < 1e-13);
    }
}

TEST_CASE("dirac_spectral preserves the norm to 1e-12")
{
    const SpinorField f = gaussian_packet(0.02, 4.0, 0.35, state_sym);
    const SpinorField g = dirac_spectral(f, 1.0);
    CHECK(std::abs(g.norm2() - 1.0) < 1e-12);
}

TEST_CASE("plane waves pick up the dispersion phase e^{-iE t}")
{
    // Grid-filling data is periodic-exact; build an eigen-spinor of H(k0).
    const double eps = 0.05;
    const long half = 100;
    SpinorField f;
    f.eps = eps;
    f.half_extent = half;
    const long n = 2 * half + 1;
    f.l.resize(static_cast<size_t>(n));
    f.r.resize(static_cast<size_t>(n));
    const long m0 = 17;
    const double k0 = 2.0 * M_PI * static_cast<double>(m0)
                      / (static_cast<double>(n) * eps);
    const double e0 = std::sqrt(1.0 + k0 * k0);
    // H(k0) (v0, v1) = E (v0, v1) with H = [[-k, 1], [1, k]]
    cplx v0(1.0, 0.0), v1(k0 + e0, 0.0);
    const double vn = std::sqrt(std::norm(v0) + std::norm(v1));
    v0 /= vn;
    v1 /= vn;
    for (long j = -half; j <= half; ++j) {
        const cplx phase = std::polar(1.0, k0 * static_cast<double>(j) * eps);
        f.l[f.index(j)] = phase * v0;
        f.r[f.index(j)] = phase * v1;
    }
    const double norm = std::sqrt(f.norm2());
    for (size_t i = 0; i < f.l.size(); ++i) {
        f.l[i] /= norm;
        f.r[i] /= norm;
    }

    const double t = 0.8;
    const SpinorField g = dirac_spectral(f, t);
    const cplx expect = std::polar(1.0, -e0 * t);
    for (size_t i = 0; i < f.l.size(); i += 37) {
        CHECK(std::abs(g.l[i] - expect * f.l[i]) < 1e-9);
        CHECK(std::abs(g.r[i] - expect * f.r[i]) < 1e-9);
    }
}

TEST_CASE("dirac_spectral raises a window error when the cone escapes")
{
    const SpinorField f = gaussian_packet(0.05, 1.0, 0.2, state_sym);
    CHECK_THROWS_AS(dirac_spectral(f, 5.0), window_error);
}

TEST_CASE("continuum_compare: decreasing errors, first-order fit")
{
    const OrderReport rep = continuum_compare({0.04, 0.02, 0.01}, 1.0, state_sym);
    REQUIRE(rep.l2_error.size() == 3);
    CHECK(rep.l2_error[1] < rep.l2_error[0]);
    CHECK(rep.l2_error[2] < rep.l2_error[1]);
    CHECK(rep.fitted_order > 0.7);
    CHECK(rep.fitted_order < 1.3);
}

TEST_CASE("continuum_compare at t = 0 reports zero error")
{
    const OrderReport rep = continuum_compare({0.04, 0.02, 0.01}, 0.0, state_sym);
    for (double e : rep.l2_error)
        CHECK(e < 1e-12); // DFT round-trip noise only
    CHECK(rep.fitted_order == 0.0);
}

TEST_CASE("continuum_compare validates its grid of eps values")
{
    CHECK_THROWS_AS(continuum_compare({0.04, 0.02}, 1.0, state_sym), config_error);
    CHECK_THROWS_AS(continuum_compare({0.02, 0.04, 0.01}, 1.0, state_sym), config_error);
    CHECK_THROWS_AS(continuum_compare({0.04, 0.02, 0.015}, 1.0, state_sym), config_error);
}

TEST_CASE("probability mass respects the light cone")
{
    const double eps = 0.02;
    const double t = 1.0;
    const SpinorField f = gaussian_packet(eps, 3.0 + t + 0.5, 0.35, state_sym);
    // Initial data radius: everything but 1e-8 of the mass.
    double tail = 0.0;
    long x0 = f.half_extent;
    for (long r = f.half_extent; r >= 0; --r) {
        tail += eps * (std::norm(f.l[f.index(r)]) + std::norm(f.r[f.index(r)]));
        if (r > 0)
            tail += eps * (std::norm(f.l[f.index(-r)]) + std::norm(f.r[f.index(-r)]));
        if (tail > 1e-8) {
            x0 = r;
            break;
        }
    }
    const SpinorField g = dirac_spectral(f, t);
    const long cone = x0 + static_cast<long>(std::ceil(t / eps)) + 5;
    double outside = 0.0;
    for (long j = cone + 1; j <= g.half_extent; ++j)
        outside += eps
                   * (std::norm(g.l[g.index(j)]) + std::norm(g.r[g.index(j)])
                      + std::norm(g.l[g.index(-j)]) + std::norm(g.r[g.index(-j)]));
    CHECK(outside < 1e-6);
}
