#include "qwalk/coin.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

void validate_or_throw(const Coin2& c, const std::string& where)
{
    const UnitaryReport rep = validate_unitary(c);
    if (rep.ok())
        return;
    for (const auto& rel : rep.relations)
        if (!(rel.residual < rep.tolerance))
            throw invalid_coin(where + ": violated relation '" + rel.name
                               + "' (residual " + std::to_string(rel.residual) + ")");
}

} // namespace

CoinState make_coin_state(cplx l, cplx r)
{
    const double n2 = std::norm(l) + std::norm(r);
    if (std::abs(n2 - 1.0) > 1e-9)
        throw config_error("coin state not normalized: |q_L|^2+|q_R|^2 = " + std::to_string(n2));
    const double inv = 1.0 / std::sqrt(n2);
    return {l * inv, r * inv};
}

Coin2 make_coin(cplx a, cplx b, cplx det_phase)
{
    if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-10)
        throw invalid_coin("make_coin: violated relation '|a|^2+|b|^2 = 1'");
    if (std::abs(std::abs(det_phase) - 1.0) > 1e-10)
        throw invalid_coin("make_coin: violated relation '|det| = 1'");
    Coin2 c{a, b, -det_phase * std::conj(b), det_phase * std::conj(a)};
    validate_or_throw(c, "make_coin");
    return c;
}

Coin2 hadamard()
{
    const double s = 1.0 / std::sqrt(2.0);
    return {s, s, s, -s};
}

Coin2 ftd_coin(double r)
{
    if (!(r > 0.0) || !(r < 1.0))
        throw config_error("ftd_coin: rate must lie in (0,1)");
    const double p = std::sqrt(r);
    const double q = std::sqrt(1.0 - r);
    return {p, q, q, -p};
}

Coin2 dirac_coin(double eps)
{
    const cplx off(0.0, -std::sin(eps));
    return {std::cos(eps), off, off, std::cos(eps)};
}

UnitaryReport validate_unitary(const Coin2& c)
{
    UnitaryReport rep;
    const cplx det = c.det();
    rep.relations = {
        {"|a|^2 + |c|^2 = 1", std::abs(std::norm(c.a) + std::norm(c.c) - 1.0)},
        {"a conj(b) + c conj(d) = 0", std::abs(c.a * std::conj(c.b) + c.c * std::conj(c.d))},
        {"|ad - bc| = 1", std::abs(std::abs(det) - 1.0)},
        {"c = -det conj(b)", std::abs(c.c + det * std::conj(c.b))},
        {"d = det conj(a)", std::abs(c.d - det * std::conj(c.a))},
    };
    return rep;
}

CoinField CoinField::homogeneous(const Coin2& coin)
{
    validate_or_throw(coin, "CoinField::homogeneous");
    return CoinField(Homogeneous{coin});
}

CoinField CoinField::time_dependent(std::function<Coin2(long)> schedule)
{
    if (!schedule)
        throw config_error("CoinField::time_dependent: empty schedule");
    return CoinField(TimeDependent{std::move(schedule)});
}

CoinField CoinField::site_dependent(std::map<long, Coin2> by_site)
{
    for (const auto& [site, coin] : by_site)
        validate_or_throw(coin, "CoinField::site_dependent (site " + std::to_string(site) + ")");
    return CoinField(SiteDependent{std::move(by_site)});
}

CoinField CoinField::ftd(long final_time, double rate)
{
    if (final_time < 1)
        throw config_error("CoinField::ftd: final time must be positive");
    if (!(rate > 0.0) || !(rate < 1.0))
        throw config_error("CoinField::ftd: rate must lie in (0,1)");
    return CoinField(Ftd{final_time, rate, ftd_coin(rate)});
}

bool CoinField::spatially_uniform() const
{
    return !std::holds_alternative<SiteDependent>(scheme_);
}

Coin2 CoinField::at(long site, long step) const
{
    if (const auto* sd = std::get_if<SiteDependent>(&scheme_)) {
        const auto it = sd->by_site.find(site);
        if (it == sd->by_site.end())
            throw config_error("coin field undefined at site " + std::to_string(site)
                               + ", step " + std::to_string(step));
        return it->second;
    }
    return at_step(step);
}

Coin2 CoinField::at_step(long step) const
{
    if (const auto* h = std::get_if<Homogeneous>(&scheme_))
        return h->coin;
    if (const auto* f = std::get_if<Ftd>(&scheme_))
        return f->coin;
    if (const auto* td = std::get_if<TimeDependent>(&scheme_)) {
        const Coin2 c = td->schedule(step);
        validate_or_throw(c, "time-dependent schedule (step " + std::to_string(step) + ")");
        return c;
    }
    throw config_error("coin field is site-dependent; no per-step coin");
}

long CoinField::ftd_final_time() const
{
    if (const auto* f = std::get_if<Ftd>(&scheme_))
        return f->final_time;
    throw config_error("coin field is not FTD");
}

double CoinField::ftd_rate() const
{
    if (const auto* f = std::get_if<Ftd>(&scheme_))
        return f->rate;
    throw config_error("coin field is not FTD");
}

} // namespace qwalk
