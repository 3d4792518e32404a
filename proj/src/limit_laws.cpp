#include "qwalk/limit_laws.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qwalk/errors.hpp"
#include "qwalk/quadrature.hpp"
#include "qwalk/specfun.hpp"

namespace qwalk::laws {

namespace {

constexpr double pi = 3.14159265358979323846;

double drift_of(const CoinState& q)
{
    return 2.0 * (q.l * std::conj(q.r)).real();
}

// Jcal(x; t) of the Bessel-parity law, through the J_0..J_{|x|+1} array.
double bessel_mass(const BesselParity& law, long x, const std::vector<double>& j_table)
{
    const auto j2 = [&](long n) {
        const size_t i = static_cast<size_t>(std::labs(n));
        return i < j_table.size() ? j_table[i] * j_table[i] : 0.0;
    };
    const double drift = 2.0 * (law.q_l * std::conj(law.q_r)).real();
    return (1.0 - drift * 2.0 * static_cast<double>(x) / law.t_eff) * j2(x)
           + std::norm(law.q_l) * j2(x - 1) + std::norm(law.q_r) * j2(x + 1);
}

std::vector<double> bessel_table(const BesselParity& law)
{
    const int n_max = static_cast<int>(std::ceil(law.t_eff))
                      + static_cast<int>(std::ceil(10.0 * std::cbrt(std::max(law.t_eff, 1.0)))) + 40;
    return specfun::bessel_j_array(n_max + 1, law.t_eff);
}

int mod_bessel_extent(double r)
{
    int n = 8;
    while (specfun::bessel_i_scaled(n, r) > 1e-18 && n < 4000)
        n += 8;
    return n;
}

} // namespace

LimitLaw make_konno(double r, double drift)
{
    if (!(r > 0.0) || !(r < 1.0))
        throw config_error("Konno law: parameter r must lie in (0,1)");
    if (std::abs(drift) > 1.0 + 1e-12)
        throw config_error("Konno law: |drift| > 1 would make the density negative");
    return Konno{r, std::clamp(drift, -1.0, 1.0)};
}

double konno_drift(const Coin2& coin, const CoinState& init)
{
    const double a2 = std::norm(coin.a);
    if (a2 < 1e-28)
        throw degenerate_coin("konno_drift: coin with a = 0");
    const cplx cross = coin.a * init.l * std::conj(coin.b * init.r);
    return std::norm(init.l) - std::norm(init.r) + 2.0 * cross.real() / a2;
}

LimitLaw konno_for(const Coin2& coin, const CoinState& init)
{
    return make_konno(std::abs(coin.a), konno_drift(coin, init));
}

LimitLaw make_arcsine(cplx gamma)
{
    const double radius = std::abs(gamma);
    if (!(radius > 0.0))
        throw config_error("Arcsine law: gamma must be nonzero");
    return Arcsine{radius};
}

LimitLaw make_ftda(double y, const CoinState& q)
{
    if (!(y > 0.0))
        throw config_error("FtdA law: y must be positive");
    return FtdA{y, q.l, q.r, drift_of(q)};
}

LimitLaw make_normal(double mu, double nu)
{
    if (!(nu > 0.0))
        throw config_error("Normal law: variance must be positive");
    return Normal{mu, nu};
}

LimitLaw make_bessel_parity(double t_eff, const CoinState& q, int parity)
{
    if (!(t_eff > 0.0))
        throw config_error("BesselParity law: t_eff must be positive");
    return BesselParity{t_eff, q.l, q.r, ((parity % 2) + 2) % 2};
}

LimitLaw make_mod_bessel(double r)
{
    if (!(r > 0.0))
        throw config_error("ModBessel law: r must be positive");
    return ModBessel{r};
}

LimitLaw make_delta(double at)
{
    return Delta{at};
}

bool is_discrete(const LimitLaw& law)
{
    return std::holds_alternative<BesselParity>(law) || std::holds_alternative<ModBessel>(law)
           || std::holds_alternative<Delta>(law);
}

double support_radius(const LimitLaw& law)
{
    if (const auto* k = std::get_if<Konno>(&law))
        return k->r;
    if (const auto* a = std::get_if<Arcsine>(&law))
        return a->radius;
    if (const auto* f = std::get_if<FtdA>(&law))
        return f->y;
    if (std::holds_alternative<Normal>(law))
        return std::numeric_limits<double>::infinity();
    return 0.0;
}

double pdf(const LimitLaw& law, double x)
{
    if (!std::isfinite(x))
        throw config_error("pdf: non-finite point");

    if (const auto* k = std::get_if<Konno>(&law)) {
        if (std::abs(x) == k->r)
            throw singular_endpoint("Konno pdf at the band edge");
        if (std::abs(x) > k->r)
            return 0.0;
        return std::sqrt(1.0 - k->r * k->r) * (1.0 - k->drift * x)
               / (pi * (1.0 - x * x) * std::sqrt(k->r * k->r - x * x));
    }
    if (const auto* a = std::get_if<Arcsine>(&law)) {
        if (std::abs(x) == a->radius)
            throw singular_endpoint("Arcsine pdf at the band edge");
        if (std::abs(x) > a->radius)
            return 0.0;
        return 1.0 / (pi * std::sqrt(a->radius * a->radius - x * x));
    }
    if (const auto* f = std::get_if<FtdA>(&law)) {
        if (std::abs(x) == f->y)
            throw singular_endpoint("FtdA pdf at the band edge");
        if (std::abs(x) > f->y)
            return 0.0;
        return (1.0 - f->drift * x / f->y) / (pi * std::sqrt(f->y * f->y - x * x));
    }
    if (const auto* n = std::get_if<Normal>(&law)) {
        const double z = (x - n->mu) / std::sqrt(n->nu);
        return std::exp(-0.5 * z * z) / std::sqrt(2.0 * pi * n->nu);
    }
    if (const auto* b = std::get_if<BesselParity>(&law)) {
        const double nearest = std::round(x);
        if (std::abs(x - nearest) > 1e-9)
            return 0.0;
        const long n = static_cast<long>(nearest);
        if (((n + b->parity) % 2 + 2) % 2 != 0)
            return 0.0; // parity mask
        return bessel_mass(*b, n, bessel_table(*b));
    }
    if (const auto* m = std::get_if<ModBessel>(&law)) {
        const double nearest = std::round(x);
        if (std::abs(x - nearest) > 1e-9)
            return 0.0;
        return specfun::bessel_i_scaled(static_cast<int>(std::labs(static_cast<long>(nearest))),
                                        m->r);
    }
    const auto& d = std::get<Delta>(law);
    return std::abs(x - d.at) <= 1e-12 ? 1.0 : 0.0;
}

double cdf(const LimitLaw& law, double x)
{
    if (!std::isfinite(x))
        throw config_error("cdf: non-finite point");

    if (const auto* k = std::get_if<Konno>(&law)) {
        if (x <= -k->r)
            return 0.0;
        if (x >= k->r)
            return 1.0;
        // x = r sin(theta) turns the inverse-square-root edge into a smooth
        // integrand.
        const double r = k->r, drift = k->drift;
        const double pref = std::sqrt(1.0 - r * r) / pi;
        const auto g = [=](double th) {
            const double s = std::sin(th);
            return pref * (1.0 - drift * r * s) / (1.0 - r * r * s * s);
        };
        const double v = integrate(g, -0.5 * pi, std::asin(x / r), 1e-10);
        return std::clamp(v, 0.0, 1.0);
    }
    if (const auto* a = std::get_if<Arcsine>(&law)) {
        if (x <= -a->radius)
            return 0.0;
        if (x >= a->radius)
            return 1.0;
        return std::asin(x / a->radius) / pi + 0.5;
    }
    if (const auto* f = std::get_if<FtdA>(&law)) {
        if (x <= -f->y)
            return 0.0;
        if (x >= f->y)
            return 1.0;
        const double drift = f->drift;
        const auto g = [=](double th) { return (1.0 - drift * std::sin(th)) / pi; };
        const double v = integrate(g, -0.5 * pi, std::asin(x / f->y), 1e-10);
        return std::clamp(v, 0.0, 1.0);
    }
    if (const auto* n = std::get_if<Normal>(&law))
        return 0.5 * std::erfc(-(x - n->mu) / std::sqrt(2.0 * n->nu));

    // Discrete tags: right-continuous step sums.
    double s = 0.0;
    for (const auto& [pos, mass] : atoms(law))
        if (pos <= x + 1e-12)
            s += mass;
    return std::min(s, 1.0);
}

double cdf_left(const LimitLaw& law, double x)
{
    if (!is_discrete(law))
        return cdf(law, x);
    double s = 0.0;
    for (const auto& [pos, mass] : atoms(law))
        if (pos < x - 1e-12)
            s += mass;
    return std::min(s, 1.0);
}

double law_moment(const LimitLaw& law, int j)
{
    if (j < 0 || j > 8)
        throw config_error("law_moment: order must lie in [0,8]");
    if (j == 0)
        return 1.0;

    if (const auto* k = std::get_if<Konno>(&law)) {
        const double r = k->r, drift = k->drift;
        const double pref = std::sqrt(1.0 - r * r) / pi;
        const auto g = [=](double th) {
            const double s = std::sin(th);
            double w = 1.0;
            for (int m = 0; m < j; ++m)
                w *= r * s;
            return w * pref * (1.0 - drift * r * s) / (1.0 - r * r * s * s);
        };
        return integrate(g, -0.5 * pi, 0.5 * pi, 1e-9);
    }
    if (const auto* a = std::get_if<Arcsine>(&law)) {
        const double r = a->radius;
        const auto g = [=](double th) {
            double w = 1.0;
            for (int m = 0; m < j; ++m)
                w *= r * std::sin(th);
            return w / pi;
        };
        return integrate(g, -0.5 * pi, 0.5 * pi, 1e-9);
    }
    if (const auto* f = std::get_if<FtdA>(&law)) {
        const double y = f->y, drift = f->drift;
        const auto g = [=](double th) {
            const double s = std::sin(th);
            double w = 1.0;
            for (int m = 0; m < j; ++m)
                w *= y * s;
            return w * (1.0 - drift * s) / pi;
        };
        return integrate(g, -0.5 * pi, 0.5 * pi, 1e-9);
    }
    if (const auto* n = std::get_if<Normal>(&law)) {
        // m_j = mu m_{j-1} + (j-1) nu m_{j-2}
        double m0 = 1.0, m1 = n->mu;
        if (j == 1)
            return m1;
        for (int i = 2; i <= j; ++i) {
            const double m2 = n->mu * m1 + (i - 1) * n->nu * m0;
            m0 = m1;
            m1 = m2;
        }
        return m1;
    }

    long double s = 0.0L;
    for (const auto& [pos, mass] : atoms(law)) {
        long double w = 1.0L;
        for (int m = 0; m < j; ++m)
            w *= pos;
        s += w * mass;
    }
    return static_cast<double>(s);
}

std::vector<std::pair<double, double>> atoms(const LimitLaw& law)
{
    std::vector<std::pair<double, double>> out;
    if (const auto* b = std::get_if<BesselParity>(&law)) {
        const auto table = bessel_table(*b);
        const long n_max = static_cast<long>(table.size()) - 1;
        for (long n = -n_max; n <= n_max; ++n) {
            if (((n + b->parity) % 2 + 2) % 2 != 0)
                continue;
            out.emplace_back(static_cast<double>(n), bessel_mass(*b, n, table));
        }
        return out;
    }
    if (const auto* m = std::get_if<ModBessel>(&law)) {
        const int n_max = mod_bessel_extent(m->r);
        for (int n = -n_max; n <= n_max; ++n)
            out.emplace_back(static_cast<double>(n), specfun::bessel_i_scaled(std::abs(n), m->r));
        return out;
    }
    if (const auto* d = std::get_if<Delta>(&law)) {
        out.emplace_back(d->at, 1.0);
        return out;
    }
    return out;
}

std::string law_name(const LimitLaw& law)
{
    if (std::holds_alternative<Konno>(law))
        return "konno";
    if (std::holds_alternative<Arcsine>(law))
        return "arcsine";
    if (std::holds_alternative<FtdA>(law))
        return "ftda";
    if (std::holds_alternative<Normal>(law))
        return "normal";
    if (std::holds_alternative<BesselParity>(law))
        return "bessel_parity";
    if (std::holds_alternative<ModBessel>(law))
        return "mod_bessel";
    return "delta";
}

} // namespace qwalk::laws
