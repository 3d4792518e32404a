#include <doctest.h>

#include <cmath>

#include "qwalk/classical.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/limit_laws.hpp"
#include "qwalk/reference.hpp"
#include "qwalk/specfun.hpp"
#include "qwalk/stats.hpp"

using namespace qwalk;
using namespace qwalk::classical;

TEST_CASE("rw_distribution: small cases and degenerate p")
{
    const Distribution d2 = rw_distribution(0.5, 2);
    CHECK(d2.at(-2) == doctest::Approx(0.25));
    CHECK(d2.at(0) == doctest::Approx(0.5));
    CHECK(d2.at(2) == doctest::Approx(0.25));
    CHECK(d2.at(1) == 0.0);

    const Distribution d5 = rw_distribution(1.0, 5);
    CHECK(d5.at(5) == doctest::Approx(1.0));

    CHECK_THROWS_AS(rw_distribution(1.5, 3), config_error);
}

TEST_CASE("rw_distribution matches the binomial formula")
{
    const double p = 0.3;
    const long t = 10;
    const Distribution d = rw_distribution(p, t);
    for (long k = 0; k <= t; ++k) {
        double binom = 1.0;
        for (long i = 0; i < k; ++i)
            binom = binom * static_cast<double>(t - i) / static_cast<double>(i + 1);
        const double expect = binom * std::pow(p, static_cast<double>(k))
                              * std::pow(1.0 - p, static_cast<double>(t - k));
        CHECK(d.at(2 * k - t) == doctest::Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("rw_distribution at t = 1000: exact mean and variance")
{
    const Distribution d = rw_distribution(0.5, 1000);
    CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(moment(d, 1)) < 1e-12);
    CHECK(moment(d, 2) == doctest::Approx(1000.0).epsilon(1e-9));
}

TEST_CASE("lazy_rw: one step and the r(T) = 1 reduction")
{
    const Distribution d = lazy_rw(LazyRun{1, 0.0, 0.3});
    CHECK(d.at(-1) == doctest::Approx(0.15));
    CHECK(d.at(0) == doctest::Approx(0.7));
    CHECK(d.at(1) == doctest::Approx(0.15));

    const Distribution lazy = lazy_rw(LazyRun{200, 0.0, 1.0});
    const Distribution rw = rw_distribution(0.5, 200);
    for (long n = rw.lo; n <= rw.hi(); ++n)
        CHECK(lazy.at(n) == rw.at(n));
}

TEST_CASE("lazy_rw stays normalized throughout")
{
    for (const auto& run : {LazyRun{500, 0.5, 0.5}, LazyRun{500, 1.0, 1.0}}) {
        const Distribution d = lazy_rw(run);
        CHECK(d.total() == doctest::Approx(1.0).epsilon(1e-12));
        for (double v : d.p)
            CHECK(v >= 0.0);
    }
}

TEST_CASE("lazy_rw crossover to the modified-Bessel law at alpha = 1")
{
    const Distribution d = lazy_rw(LazyRun{10000, 1.0, 1.0});
    CHECK(stats::tv_distance(d, laws::make_mod_bessel(1.0)) < 0.01);
}

TEST_CASE("lazy_rw matches ctrw_pmf in total variation (continuum consistency)")
{
    const double r = 1.0;
    const Distribution d = lazy_rw(LazyRun{10000, 1.0, r});
    long double tv = 0.0L;
    for (long n = -60; n <= 60; ++n)
        tv += std::abs(d.at(n) - ctrw_pmf(r, n));
    CHECK(static_cast<double>(tv) / 2.0 < 0.01);
}

TEST_CASE("ctrw_pmf values and normalization")
{
    CHECK(ctrw_pmf(0.0, 0) == doctest::Approx(1.0));
    CHECK(ctrw_pmf(1.0, 0) == doctest::Approx(0.4657596075936404365).epsilon(1e-12));
    for (double t : {1.0, 5.0, 20.0}) {
        const int n_max = 60 + static_cast<int>(t) * 3;
        long double sum = 0.0L;
        for (int n = -n_max; n <= n_max; ++n)
            sum += ctrw_pmf(t, n);
        CHECK(static_cast<double>(sum) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("CLT reports: fair and biased walks")
{
    const auto fair = clt_report(0.5, 10000);
    CHECK(fair.ks[0] < 0.01);

    const auto fair_small = clt_report(0.5, 10);
    CHECK(fair_small.ks[0] > fair.ks[0]);

    const auto biased = clt_report(0.9, 10000);
    CHECK(biased.ks[0] < 0.02);

    CHECK_THROWS_AS(clt_report(0.0, 100), config_error);
    CHECK_THROWS_AS(clt_report(0.5, 5), config_error);
}

TEST_CASE("OpenMP classical kernels reproduce the serial references bit for bit")
{
    const Distribution rw_par = rw_distribution(0.3, 400);
    const Distribution rw_ser = reference::rw_distribution(0.3, 400);
    REQUIRE(rw_par.lo == rw_ser.lo);
    for (long n = rw_ser.lo; n <= rw_ser.hi(); ++n)
        CHECK(rw_par.at(n) == rw_ser.at(n));

    // Reference keeps the full window; the engine trims denormal edge sites,
    // so compare where the mass is representable.
    const Distribution lz_par = lazy_rw(LazyRun{400, 0.5, 0.8});
    const Distribution lz_ser = reference::lazy_rw(400, LazyRun{400, 0.5, 0.8}.rate());
    for (long n = lz_par.lo; n <= lz_par.hi(); ++n)
        if (lz_ser.at(n) > 1e-280)
            CHECK(lz_par.at(n) == lz_ser.at(n));
}
