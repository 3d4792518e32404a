#include "qwalk/dirac.hpp"

#include <cmath>

#include "qwalk/dtqw.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/parallel.hpp"

namespace qwalk::dirac {

namespace {

constexpr double pi = 3.14159265358979323846;

// Direct DFT pair on 2N+1 points with signed frequency indices. O(N^2) is
// fine at the grid sizes the comparisons use.
struct Dft {
    long half;          // N
    long n;             // 2N+1
    std::vector<cplx> w; // w[idx] = exp(-2 pi i idx / n), idx in [0, n)

    explicit Dft(long half_extent)
        : half(half_extent), n(2 * half_extent + 1), w(static_cast<size_t>(n))
    {
        for (long i = 0; i < n; ++i)
            w[static_cast<size_t>(i)] = std::polar(1.0, -2.0 * pi * static_cast<double>(i)
                                                            / static_cast<double>(n));
    }

    size_t idx(long j, long m) const
    {
        const long p = (j * m) % n;
        return static_cast<size_t>(p < 0 ? p + n : p);
    }

    // out(m) = sum_j in(j) e^{-2 pi i j m / n}
    void forward(const std::vector<cplx>& in, std::vector<cplx>& out) const
    {
        out.resize(static_cast<size_t>(n));
#pragma omp parallel for
        for (long m = -half; m <= half; ++m) {
            cplx acc{};
            for (long j = -half; j <= half; ++j)
                acc += in[static_cast<size_t>(j + half)] * w[idx(j, m)];
            out[static_cast<size_t>(m + half)] = acc;
        }
    }

    // out(j) = (1/n) sum_m in(m) e^{+2 pi i j m / n}
    void inverse(const std::vector<cplx>& in, std::vector<cplx>& out) const
    {
        out.resize(static_cast<size_t>(n));
        const double scale = 1.0 / static_cast<double>(n);
#pragma omp parallel for
        for (long j = -half; j <= half; ++j) {
            cplx acc{};
            for (long m = -half; m <= half; ++m)
                acc += in[static_cast<size_t>(m + half)] * std::conj(w[idx(j, m)]);
            out[static_cast<size_t>(j + half)] = scale * acc;
        }
    }
};

// Radius containing all but 1e-12 of the field's mass.
long support_radius(const SpinorField& f)
{
    const double total = f.norm2();
    double tail = 0.0;
    for (long r = f.half_extent; r >= 0; --r) {
        double shell = std::norm(f.l[f.index(r)]) + std::norm(f.r[f.index(r)]);
        if (r > 0)
            shell += std::norm(f.l[f.index(-r)]) + std::norm(f.r[f.index(-r)]);
        tail += f.eps * shell;
        if (tail > 1e-12 * total)
            return r;
    }
    return 0;
}

} // namespace

double SpinorField::norm2() const
{
    long double s = 0.0L;
    for (size_t i = 0; i < l.size(); ++i)
        s += std::norm(l[i]) + std::norm(r[i]);
    return eps * static_cast<double>(s);
}

SpinorField gaussian_packet(double eps, double grid_extent, double sigma,
                            const CoinState& spin)
{
    if (!(eps > 0.0) || !(grid_extent > 0.0) || !(sigma > 0.0))
        throw config_error("gaussian_packet: eps, extent and sigma must be positive");
    SpinorField f;
    f.eps = eps;
    f.half_extent = static_cast<long>(std::ceil(grid_extent / eps));
    const size_t n = static_cast<size_t>(2 * f.half_extent + 1);
    f.l.resize(n);
    f.r.resize(n);
    long double acc = 0.0L;
    for (long j = -f.half_extent; j <= f.half_extent; ++j) {
        const double x = static_cast<double>(j) * eps;
        const double g = std::exp(-x * x / (2.0 * sigma * sigma));
        f.l[f.index(j)] = g * spin.l;
        f.r[f.index(j)] = g * spin.r;
        acc += g * g;
    }
    const double norm = std::sqrt(eps * static_cast<double>(acc));
    for (size_t i = 0; i < n; ++i) {
        f.l[i] /= norm;
        f.r[i] /= norm;
    }
    return f;
}

SpinorField dirac_spectral(const SpinorField& init, double t)
{
    if (t < 0.0 || !std::isfinite(t))
        throw config_error("dirac_spectral: bad time");
    // Wavefront check applies to localized data; grid-filling (plane-wave)
    // fields are periodic-exact and carry no wavefront.
    double boundary = 0.0;
    for (long j = 0; j < std::min<long>(3, init.half_extent); ++j) {
        boundary = std::max(boundary, init.eps
                                          * (std::norm(init.l[init.index(init.half_extent - j)])
                                             + std::norm(init.r[init.index(init.half_extent - j)])));
        boundary = std::max(boundary, init.eps
                                          * (std::norm(init.l[init.index(j - init.half_extent)])
                                             + std::norm(init.r[init.index(j - init.half_extent)])));
    }
    if (boundary < 1e-7) {
        const long needed =
            support_radius(init) + static_cast<long>(std::ceil(t / init.eps)) + 5;
        if (needed > init.half_extent)
            throw window_error("dirac_spectral: wavefront reaches the boundary; need half extent >= "
                               + std::to_string(needed));
    }

    const Dft dft(init.half_extent);
    std::vector<cplx> fl, fr;
    dft.forward(init.l, fl);
    dft.forward(init.r, fr);

    // exp(-i t H(k)) = cos(Et) I - i sin(Et)/E * [[-k, 1], [1, k]], E = sqrt(1+k^2)
    const long half = init.half_extent;
    const double dk = 2.0 * pi / (static_cast<double>(dft.n) * init.eps);
#pragma omp parallel for
    for (long m = -half; m <= half; ++m) {
        const double k = dk * static_cast<double>(m);
        const double e = std::sqrt(1.0 + k * k);
        const double c = std::cos(e * t);
        const double s = std::sin(e * t) / e;
        const cplx u00(c, s * k);
        const cplx u01(0.0, -s);
        const cplx u11(c, -s * k);
        const size_t i = static_cast<size_t>(m + half);
        const cplx a = fl[i], b = fr[i];
        fl[i] = u00 * a + u01 * b;
        fr[i] = u01 * a + u11 * b;
    }

    SpinorField out;
    out.eps = init.eps;
    out.half_extent = init.half_extent;
    out.time = init.time + t;
    dft.inverse(fl, out.l);
    dft.inverse(fr, out.r);
    return out;
}

OrderReport continuum_compare(const std::vector<double>& eps_list, double t,
                              const CoinState& init, const CompareOptions& opt)
{
    if (eps_list.size() < 3)
        throw config_error("continuum_compare: need at least three eps values");
    for (size_t i = 1; i < eps_list.size(); ++i)
        if (!(eps_list[i] < eps_list[i - 1]))
            throw config_error("continuum_compare: eps values must decrease");

    OrderReport rep;
    for (double eps : eps_list) {
        const double steps_real = t / eps;
        const long steps = static_cast<long>(std::llround(steps_real));
        if (std::abs(steps_real - static_cast<double>(steps)) > 1e-9)
            throw config_error("continuum_compare: t/eps = " + std::to_string(steps_real)
                               + " is not an integer");

        const SpinorField start = gaussian_packet(eps, opt.x_extent + t + 0.5, opt.sigma, init);
        const SpinorField cont = dirac_spectral(start, t);

        // Same initial data on the lattice, amplitudes carrying sqrt(eps).
        const double root_eps = std::sqrt(eps);
        std::vector<cplx> al(start.l.size()), ar(start.r.size());
        for (size_t i = 0; i < al.size(); ++i) {
            al[i] = start.l[i] * root_eps;
            ar[i] = start.r[i] * root_eps;
        }
        const CoinField field = CoinField::homogeneous(dirac_coin(eps));
        const dtqw::WalkerState walked =
            dtqw::evolve_state(dtqw::from_amplitudes(-start.half_extent, std::move(al),
                                                     std::move(ar)),
                               field, steps);

        long double acc = 0.0L;
        for (long j = -start.half_extent; j <= start.half_extent; ++j) {
            const long wi = j - walked.lo;
            cplx wl{}, wr{};
            if (wi >= 0 && wi < static_cast<long>(walked.amp_l.size())) {
                wl = walked.amp_l[static_cast<size_t>(wi)];
                wr = walked.amp_r[static_cast<size_t>(wi)];
            }
            const size_t ci = cont.index(j);
            acc += std::norm(wl - cont.l[ci] * root_eps) + std::norm(wr - cont.r[ci] * root_eps);
        }
        rep.eps.push_back(eps);
        rep.l2_error.push_back(std::sqrt(static_cast<double>(acc)));
    }

    // Least-squares slope of log(error) against log(eps). Errors at rounding
    // level (t = 0) carry no order information.
    const size_t n = rep.eps.size();
    for (double e : rep.l2_error)
        if (e < 1e-12)
            return rep; // fitted_order stays 0
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        const double x = std::log(rep.eps[i]);
        const double y = std::log(rep.l2_error[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    rep.fitted_order = (static_cast<double>(n) * sxy - sx * sy)
                       / (static_cast<double>(n) * sxx - sx * sx);
    return rep;
}

} // namespace qwalk::dirac
