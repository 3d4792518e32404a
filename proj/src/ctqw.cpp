#include "qwalk/ctqw.hpp"

#include <cmath>

#include "qwalk/dtqw.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/specfun.hpp"

namespace qwalk::ctqw {

namespace {

cplx ipow(long x)
{
    switch (((x % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

// dPsi/dt = i/2 (gamma Psi(x-1) + conj(gamma) Psi(x+1))
void rhs(const std::vector<cplx>& in, std::vector<cplx>& out, cplx gamma)
{
    const long n = static_cast<long>(in.size());
    const cplx hl = cplx(0.0, 0.5) * gamma;
    const cplx hr = cplx(0.0, 0.5) * std::conj(gamma);
#pragma omp parallel for if (n > omp_threshold)
    for (long i = 0; i < n; ++i) {
        const cplx left = i > 0 ? in[i - 1] : cplx{};
        const cplx right = i + 1 < n ? in[i + 1] : cplx{};
        out[i] = hl * left + hr * right;
    }
}

void check_tail(const CtqwState& s, long radius, double tail)
{
    if (tail > 1e-12) {
        const long needed = default_radius(std::abs(s.gamma) * s.t);
        throw window_error("ctqw window radius " + std::to_string(radius)
                           + " leaves tail mass " + std::to_string(tail) + "; need >= "
                           + std::to_string(needed));
    }
}

// Mass parked on the outer three sites of each edge; measures truncation
// without conflating it with time-stepping norm decay.
double edge_mass(const CtqwState& s)
{
    double m = 0.0;
    const size_t n = s.amp.size();
    for (size_t i = 0; i < std::min<size_t>(3, n); ++i)
        m += std::norm(s.amp[i]) + std::norm(s.amp[n - 1 - i]);
    return m;
}

// Amplitudes of a gamma = +-i CTQW started from a sum of point masses,
// Psi_t(x) = sum_j c_j G_t(x - x_j), with G_t(y) = (-1)^y J_y(t) for +i and
// G_t(y) = J_y(t) for -i.
std::vector<cplx> green_superposition(int sign, double t, long radius, long lo,
                                      const std::vector<std::pair<long, cplx>>& sources)
{
    const int n_bessel = static_cast<int>(radius) + 2;
    const std::vector<double> j = specfun::bessel_j_array(n_bessel, t);
    const auto green = [&](long y) {
        const size_t a = static_cast<size_t>(std::labs(y));
        double v = a < j.size() ? j[a] : 0.0;
        if (y < 0 && (y % 2) != 0)
            v = -v; // J_{-n} = (-1)^n J_n
        if (sign > 0 && ((y % 2) + 2) % 2 != 0)
            v = -v; // (-1)^y factor of the +i walk
        return v;
    };
    std::vector<cplx> amp(static_cast<size_t>(2 * radius + 1));
    for (long i = 0; i < static_cast<long>(amp.size()); ++i) {
        const long x = lo + i;
        cplx v{};
        for (const auto& [x0, c] : sources)
            v += c * green(x - x0);
        amp[static_cast<size_t>(i)] = v;
    }
    return amp;
}

} // namespace

double CtqwState::norm2() const
{
    long double s = 0.0L;
    for (const cplx& v : amp)
        s += std::norm(v);
    return static_cast<double>(s);
}

long default_radius(double gamma_abs_t)
{
    const long pad = std::max<long>(40, static_cast<long>(std::ceil(10.0 * std::cbrt(gamma_abs_t))));
    return static_cast<long>(std::ceil(gamma_abs_t)) + pad;
}

CtqwState ctqw_exact(cplx gamma, double t, long radius)
{
    if (t < 0.0 || !std::isfinite(t))
        throw config_error("ctqw_exact: bad time");
    const double z = std::abs(gamma) * t;
    const bool user_radius = radius > 0;
    if (!user_radius)
        radius = default_radius(z);

    CtqwState s;
    s.t = t;
    s.gamma = gamma;
    s.lo = -radius;
    s.amp.resize(static_cast<size_t>(2 * radius + 1));

    const std::vector<double> j = specfun::bessel_j_array(static_cast<int>(radius), z);
    const double phase = std::arg(gamma);
    const long n = static_cast<long>(s.amp.size());
#pragma omp parallel for if (n > omp_threshold)
    for (long i = 0; i < n; ++i) {
        const long x = s.lo + i;
        double jx = j[static_cast<size_t>(std::labs(x))];
        if (x < 0 && (x % 2) != 0)
            jx = -jx;
        s.amp[static_cast<size_t>(i)] = ipow(x) * std::polar(1.0, phase * static_cast<double>(x)) * jx;
    }
    if (user_radius)
        check_tail(s, radius, 1.0 - s.norm2());
    return s;
}

CtqwState ctqw_integrate(cplx gamma, double t, double dt, long radius)
{
    if (t < 0.0 || !std::isfinite(t))
        throw config_error("ctqw_integrate: bad time");
    if (!(dt > 0.0) || dt > 0.01)
        throw config_error("ctqw_integrate: dt must lie in (0, 0.01]");
    const bool user_radius = radius > 0;
    if (!user_radius)
        radius = default_radius(std::abs(gamma) * t);

    CtqwState s;
    s.t = t;
    s.gamma = gamma;
    s.lo = -radius;
    s.amp.assign(static_cast<size_t>(2 * radius + 1), cplx{});
    s.amp[static_cast<size_t>(radius)] = 1.0;

    const long n_steps = std::max<long>(1, static_cast<long>(std::ceil(t / dt - 1e-12)));
    const double h = t / static_cast<double>(n_steps);
    const size_t n = s.amp.size();
    std::vector<cplx> k1(n), k2(n), k3(n), k4(n), tmp(n);

    for (long step = 0; step < n_steps; ++step) {
        rhs(s.amp, k1, gamma);
        const long ln = static_cast<long>(n);
#pragma omp parallel for if (ln > omp_threshold)
        for (long i = 0; i < ln; ++i)
            tmp[i] = s.amp[i] + 0.5 * h * k1[i];
        rhs(tmp, k2, gamma);
#pragma omp parallel for if (ln > omp_threshold)
        for (long i = 0; i < ln; ++i)
            tmp[i] = s.amp[i] + 0.5 * h * k2[i];
        rhs(tmp, k3, gamma);
#pragma omp parallel for if (ln > omp_threshold)
        for (long i = 0; i < ln; ++i)
            tmp[i] = s.amp[i] + h * k3[i];
        rhs(tmp, k4, gamma);
#pragma omp parallel for if (ln > omp_threshold)
        for (long i = 0; i < ln; ++i)
            s.amp[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }

    const double drift = std::abs(s.norm2() - 1.0);
    if (drift > 1e-6)
        throw numeric_error("ctqw_integrate: norm drift " + std::to_string(drift)
                            + " exceeds 1e-6; reduce dt");
    if (user_radius)
        check_tail(s, radius, edge_mass(s));
    return s;
}

Distribution distribution(const CtqwState& state)
{
    Distribution d;
    d.lo = state.lo;
    d.p.resize(state.amp.size());
    for (size_t i = 0; i < d.p.size(); ++i)
        d.p[i] = std::norm(state.amp[i]);
    detect_parity(d);
    return d;
}

double l2_distance(const CtqwState& a, const CtqwState& b)
{
    const long lo = std::min(a.lo, b.lo);
    const long hi = std::max(a.hi(), b.hi());
    const auto at = [](const CtqwState& s, long x) {
        const long i = x - s.lo;
        return i >= 0 && i < static_cast<long>(s.amp.size()) ? s.amp[static_cast<size_t>(i)]
                                                             : cplx{};
    };
    long double acc = 0.0L;
    for (long x = lo; x <= hi; ++x)
        acc += std::norm(at(a, x) - at(b, x));
    return std::sqrt(static_cast<double>(acc));
}

double FtdRun::sqrt_rate() const
{
    return r / std::pow(static_cast<double>(final_time), alpha);
}

Distribution ftd_run(const FtdRun& run, const CoinState& init)
{
    if (run.final_time < 1)
        throw config_error("ftd_run: final time must be >= 1");
    const double rate = run.rate();
    if (!(rate > 0.0) || !(rate < 1.0))
        throw config_error("ftd_run: rate r(T) = " + std::to_string(rate)
                           + " outside (0,1)");
    const CoinField field = CoinField::ftd(run.final_time, rate);
    dtqw::EvolveOptions opt;
    opt.window_cutoff = 1e-280; // keeps the window near the occupied sites
    return dtqw::distribution(dtqw::evolve(init, field, run.final_time, opt));
}

FtdDecomposition ftd_decomposition(const FtdRun& run, const CoinState& init)
{
    const double t_rate = static_cast<double>(run.final_time) * run.rate();
    if (!(t_rate < 0.1))
        throw precondition_error("ftd_decomposition: requires T r(T) < 0.1, got "
                                 + std::to_string(t_rate));

    const double t = run.t_eff();
    const long radius = default_radius(t) + 1;

    // Component initial data: the L spinor starts as q_L delta_0 +- q_R delta_{-1},
    // the R spinor as q_R delta_0 +- q_L delta_{+1}; each component evolves as a
    // CTQW with gamma = +-i acting on the coin components independently.
    FtdDecomposition out;
    out.lo = -radius;
    const std::vector<std::pair<long, cplx>> l_plus = {{0, init.l}, {-1, init.r}};
    const std::vector<std::pair<long, cplx>> l_minus = {{0, init.l}, {-1, -init.r}};
    const std::vector<std::pair<long, cplx>> r_plus = {{0, init.r}, {1, init.l}};
    const std::vector<std::pair<long, cplx>> r_minus = {{0, init.r}, {1, -init.l}};
    out.plus_l = green_superposition(+1, t, radius, out.lo, l_plus);
    out.minus_l = green_superposition(-1, t, radius, out.lo, l_minus);
    out.plus_r = green_superposition(+1, t, radius, out.lo, r_plus);
    out.minus_r = green_superposition(-1, t, radius, out.lo, r_minus);

    const double parity_sign = (run.final_time % 2 == 0) ? 1.0 : -1.0;
    Distribution rec;
    rec.lo = out.lo;
    rec.p.resize(out.plus_l.size());
    for (size_t i = 0; i < rec.p.size(); ++i) {
        const cplx l = 0.5 * (out.plus_l[i] + parity_sign * out.minus_l[i]);
        const cplx r = 0.5 * (out.plus_r[i] + parity_sign * out.minus_r[i]);
        rec.p[i] = std::norm(l) + std::norm(r);
    }
    detect_parity(rec);
    out.recombined = rec;

    const Distribution direct = ftd_run(run, init);
    const long lo = std::min(direct.lo, rec.lo);
    const long hi = std::max(direct.hi(), rec.hi());
    long double l1 = 0.0L;
    for (long x = lo; x <= hi; ++x)
        l1 += std::abs(direct.at(x) - rec.at(x));
    out.l1_to_direct = static_cast<double>(l1);
    return out;
}

} // namespace qwalk::ctqw
