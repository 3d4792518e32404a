#include "qwalk/dtqw.hpp"

#include <cmath>

#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk::dtqw {

namespace {

// newL(n) = a_{n+1,t} L(n+1) + b_{n+1,t} R(n+1)
// newR(n) = c_{n-1,t} L(n-1) + d_{n-1,t} R(n-1)
// With out.lo = in.lo - 1, the input site n+1 lives at output index i and the
// input site n-1 at output index i-2.
void step_into(const WalkerState& in, const CoinField& field, WalkerState& out)
{
    const long n_in = static_cast<long>(in.amp_l.size());
    const long n_out = n_in + 2;
    out.t = in.t + 1;
    out.lo = in.lo - 1;
    out.amp_l.resize(static_cast<size_t>(n_out));
    out.amp_r.resize(static_cast<size_t>(n_out));

    if (field.spatially_uniform()) {
        const Coin2 c = field.at_step(in.t);
#pragma omp parallel for if (n_out > omp_threshold)
        for (long i = 0; i < n_out; ++i) {
            out.amp_l[i] = i < n_in ? c.a * in.amp_l[i] + c.b * in.amp_r[i] : cplx{};
            out.amp_r[i] = i >= 2 ? c.c * in.amp_l[i - 2] + c.d * in.amp_r[i - 2] : cplx{};
        }
    } else {
#pragma omp parallel for if (n_out > omp_threshold)
        for (long i = 0; i < n_out; ++i) {
            const long n = out.lo + i;
            if (i < n_in) {
                const Coin2 c = field.at(n + 1, in.t);
                out.amp_l[i] = c.a * in.amp_l[i] + c.b * in.amp_r[i];
            } else {
                out.amp_l[i] = cplx{};
            }
            if (i >= 2) {
                const Coin2 c = field.at(n - 1, in.t);
                out.amp_r[i] = c.c * in.amp_l[i - 2] + c.d * in.amp_r[i - 2];
            } else {
                out.amp_r[i] = cplx{};
            }
        }
    }
}

void trim_window(WalkerState& s, double cutoff)
{
    const auto mass = [&](size_t i) {
        return std::norm(s.amp_l[i]) + std::norm(s.amp_r[i]);
    };
    size_t lo_cut = 0;
    size_t hi_cut = s.amp_l.size();
    while (lo_cut + 1 < hi_cut && mass(lo_cut) <= cutoff)
        ++lo_cut;
    while (hi_cut > lo_cut + 1 && mass(hi_cut - 1) <= cutoff)
        --hi_cut;
    if (lo_cut == 0 && hi_cut == s.amp_l.size())
        return;
    s.amp_l.erase(s.amp_l.begin() + static_cast<long>(hi_cut), s.amp_l.end());
    s.amp_r.erase(s.amp_r.begin() + static_cast<long>(hi_cut), s.amp_r.end());
    s.amp_l.erase(s.amp_l.begin(), s.amp_l.begin() + static_cast<long>(lo_cut));
    s.amp_r.erase(s.amp_r.begin(), s.amp_r.begin() + static_cast<long>(lo_cut));
    s.lo += static_cast<long>(lo_cut);
}

} // namespace

double WalkerState::norm2() const
{
    long double s = 0.0L;
    for (size_t i = 0; i < amp_l.size(); ++i)
        s += std::norm(amp_l[i]) + std::norm(amp_r[i]);
    return static_cast<double>(s);
}

WalkerState point_mass(const CoinState& init)
{
    WalkerState s;
    s.t = 0;
    s.lo = 0;
    s.amp_l = {init.l};
    s.amp_r = {init.r};
    return s;
}

WalkerState from_amplitudes(long lo, std::vector<cplx> l, std::vector<cplx> r)
{
    if (l.size() != r.size() || l.empty())
        throw config_error("from_amplitudes: spinor arrays must be non-empty and equal-sized");
    WalkerState s;
    s.t = 0;
    s.lo = lo;
    s.amp_l = std::move(l);
    s.amp_r = std::move(r);
    if (std::abs(s.norm2() - 1.0) > 1e-9)
        throw config_error("from_amplitudes: state not normalized");
    return s;
}

WalkerState step(const WalkerState& state, const CoinField& field)
{
    WalkerState out;
    step_into(state, field, out);
    return out;
}

WalkerState evolve_state(WalkerState state, const CoinField& field, long steps,
                         const EvolveOptions& opt)
{
    if (steps < 0)
        throw config_error("evolve: negative step count");
    WalkerState scratch;
    const size_t cap = state.amp_l.size() + 2 * static_cast<size_t>(steps) + 2;
    state.amp_l.reserve(cap);
    state.amp_r.reserve(cap);
    scratch.amp_l.reserve(cap);
    scratch.amp_r.reserve(cap);
    for (long m = 0; m < steps; ++m) {
        step_into(state, field, scratch);
        std::swap(state, scratch);
        if (opt.window_cutoff > 0.0)
            trim_window(state, opt.window_cutoff);
    }
    return state;
}

WalkerState evolve(const CoinState& init, const CoinField& field, long steps,
                   const EvolveOptions& opt)
{
    return evolve_state(point_mass(init), field, steps, opt);
}

Distribution distribution(const WalkerState& state)
{
    Distribution d;
    d.lo = state.lo;
    d.p.resize(state.amp_l.size());
    for (size_t i = 0; i < d.p.size(); ++i)
        d.p[i] = std::norm(state.amp_l[i]) + std::norm(state.amp_r[i]);
    detect_parity(d);
    return d;
}

} // namespace qwalk::dtqw
