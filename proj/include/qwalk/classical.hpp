#pragma once

#include "qwalk/distribution.hpp"
#include "qwalk/stats.hpp"

namespace qwalk::classical {

// Exact binomial pushforward of the simple random walk:
// Pr[X_t = 2k - t] = C(t,k) p^k (1-p)^{t-k}, computed by the step recursion.
Distribution rw_distribution(double p, long t);

// Lazy walk: stay with probability 1 - r(T), move +-1 with r(T)/2 each,
// r(T) = r / T^alpha.
struct LazyRun {
    long final_time;
    double alpha;
    double r;

    double rate() const;
};

Distribution lazy_rw(const LazyRun& run);

// Continuum CTRW law e^{-t} I_{|x|}(t).
double ctrw_pmf(double t, long x);

// KS distance of the exactly standardized binomial against N(0,1).
stats::ConvergenceReport clt_report(double p, long t);

} // namespace qwalk::classical
