#pragma once

#include <vector>

#include "qwalk/coin.hpp"
#include "qwalk/distribution.hpp"

namespace qwalk::dtqw {

// Position-indexed 2-spinor amplitudes over a contiguous site window.
struct WalkerState {
    long t = 0;  // steps taken
    long lo = 0; // site index of amp_l[0]
    std::vector<cplx> amp_l, amp_r;

    long hi() const { return lo + static_cast<long>(amp_l.size()) - 1; }
    long origin_offset() const { return -lo; }

    double norm2() const;
};

// |0> x (q_L |L> + q_R |R>).
WalkerState point_mass(const CoinState& init);

// Arbitrary initial data; must be normalized to 1e-9.
WalkerState from_amplitudes(long lo, std::vector<cplx> l, std::vector<cplx> r);

struct EvolveOptions {
    // Trim window edges whose |amp_L|^2 + |amp_R|^2 stays at or below this.
    // 0 keeps the full light-cone window.
    double window_cutoff = 0.0;
};

// One application of U_t = W C_t. The window grows by one site on each side.
WalkerState step(const WalkerState& state, const CoinField& field);

// steps-fold composition of step. The per-step coin index is zero-based:
// the m-th application queries the field at step m-1.
WalkerState evolve(const CoinState& init, const CoinField& field, long steps,
                   const EvolveOptions& opt = {});
WalkerState evolve_state(WalkerState state, const CoinField& field, long steps,
                         const EvolveOptions& opt = {});

// Pr[n;t] = |amp_L(n)|^2 + |amp_R(n)|^2 with parity sites retained.
Distribution distribution(const WalkerState& state);

} // namespace qwalk::dtqw
