#pragma once

#include "qwalk/ctqw.hpp"
#include "qwalk/distribution.hpp"
#include "qwalk/dtqw.hpp"

// Plain serial implementations of the hot kernels. The OpenMP paths must
// reproduce these bit for bit (the per-site arithmetic is identical; only the
// loop scheduling differs); tests assert that and tools/bench times both.
namespace qwalk::reference {

dtqw::WalkerState dtqw_step(const dtqw::WalkerState& in, const CoinField& field);

dtqw::WalkerState dtqw_evolve(const CoinState& init, const CoinField& field, long steps);

Distribution rw_distribution(double p, long t);

Distribution lazy_rw(long final_time, double rate);

ctqw::CtqwState ctqw_integrate(cplx gamma, double t, double dt, long radius);

} // namespace qwalk::reference
