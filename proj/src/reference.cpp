#include "qwalk/reference.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk::reference {

dtqw::WalkerState dtqw_step(const dtqw::WalkerState& in, const CoinField& field)
{
    dtqw::WalkerState out;
    out.t = in.t + 1;
    out.lo = in.lo - 1;
    const long n_in = static_cast<long>(in.amp_l.size());
    const long n_out = n_in + 2;
    out.amp_l.assign(static_cast<size_t>(n_out), cplx{});
    out.amp_r.assign(static_cast<size_t>(n_out), cplx{});
    for (long i = 0; i < n_out; ++i) {
        const long n = out.lo + i;
        if (i < n_in) {
            const Coin2 c = field.at(n + 1, in.t);
            out.amp_l[static_cast<size_t>(i)] = c.a * in.amp_l[static_cast<size_t>(i)]
                                                + c.b * in.amp_r[static_cast<size_t>(i)];
        }
        if (i >= 2) {
            const Coin2 c = field.at(n - 1, in.t);
            out.amp_r[static_cast<size_t>(i)] = c.c * in.amp_l[static_cast<size_t>(i - 2)]
                                                + c.d * in.amp_r[static_cast<size_t>(i - 2)];
        }
    }
    return out;
}

dtqw::WalkerState dtqw_evolve(const CoinState& init, const CoinField& field, long steps)
{
    dtqw::WalkerState s = dtqw::point_mass(init);
    for (long m = 0; m < steps; ++m)
        s = dtqw_step(s, field);
    return s;
}

namespace {

Distribution serial_tridiag(long steps, double c_left, double c_stay, double c_right)
{
    Distribution d;
    d.lo = 0;
    d.p = {1.0};
    for (long m = 0; m < steps; ++m) {
        std::vector<double> next(d.p.size() + 2, 0.0);
        for (size_t i = 0; i < next.size(); ++i) {
            const double left = i >= 2 && i - 2 < d.p.size() ? d.p[i - 2] : 0.0;
            const double stay = i >= 1 && i - 1 < d.p.size() ? d.p[i - 1] : 0.0;
            const double right = i < d.p.size() ? d.p[i] : 0.0;
            next[i] = c_left * left + c_stay * stay + c_right * right;
        }
        d.p = std::move(next);
        d.lo -= 1;
    }
    detect_parity(d);
    return d;
}

} // namespace

Distribution rw_distribution(double p, long t)
{
    return serial_tridiag(t, p, 0.0, 1.0 - p);
}

Distribution lazy_rw(long final_time, double rate)
{
    return serial_tridiag(final_time, 0.5 * rate, 1.0 - rate, 0.5 * rate);
}

ctqw::CtqwState ctqw_integrate(cplx gamma, double t, double dt, long radius)
{
    if (radius <= 0)
        radius = ctqw::default_radius(std::abs(gamma) * t);
    ctqw::CtqwState s;
    s.t = t;
    s.gamma = gamma;
    s.lo = -radius;
    s.amp.assign(static_cast<size_t>(2 * radius + 1), cplx{});
    s.amp[static_cast<size_t>(radius)] = 1.0;

    const long n_steps = std::max<long>(1, static_cast<long>(std::ceil(t / dt - 1e-12)));
    const double h = t / static_cast<double>(n_steps);
    const size_t n = s.amp.size();
    const cplx hl = cplx(0.0, 0.5) * gamma;
    const cplx hr = cplx(0.0, 0.5) * std::conj(gamma);
    const auto rhs = [&](const std::vector<cplx>& in, std::vector<cplx>& out) {
        for (size_t i = 0; i < n; ++i) {
            const cplx left = i > 0 ? in[i - 1] : cplx{};
            const cplx right = i + 1 < n ? in[i + 1] : cplx{};
            out[i] = hl * left + hr * right;
        }
    };
    std::vector<cplx> k1(n), k2(n), k3(n), k4(n), tmp(n);
    for (long step = 0; step < n_steps; ++step) {
        rhs(s.amp, k1);
        for (size_t i = 0; i < n; ++i)
            tmp[i] = s.amp[i] + 0.5 * h * k1[i];
        rhs(tmp, k2);
        for (size_t i = 0; i < n; ++i)
            tmp[i] = s.amp[i] + 0.5 * h * k2[i];
        rhs(tmp, k3);
        for (size_t i = 0; i < n; ++i)
            tmp[i] = s.amp[i] + h * k3[i];
        rhs(tmp, k4);
        for (size_t i = 0; i < n; ++i)
            s.amp[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    }
    return s;
}

} // namespace qwalk::reference
