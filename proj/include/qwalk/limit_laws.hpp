#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qwalk/coin.hpp"

namespace qwalk::laws {

// K(r): sqrt(1-r^2) 1_{(-r,r)}(x) / (pi (1-x^2) sqrt(r^2-x^2)) * (1 - drift x).
struct Konno {
    double r;
    double drift;
};

// Z(gamma): 1_{(-radius,radius)}(x) / (pi sqrt(radius^2 - x^2)).
struct Arcsine {
    double radius;
};

// A^{phi_0}(y): arcsine band with linear drift
// (1 - drift x / y) / (pi sqrt(y^2 - x^2)), drift = conj(q_R) q_L + q_R conj(q_L).
struct FtdA {
    double y;
    cplx q_l, q_r;
    double drift;
};

struct Normal {
    double mu, nu;
};

// Parity-masked Bessel masses (1 + (-1)^{parity + x})/2 * Jcal(x; t_eff) with
// Jcal(x;t) = {1 - drift 2x/t} J_x(t)^2 + |q_L|^2 J_{x-1}(t)^2 + |q_R|^2 J_{x+1}(t)^2.
struct BesselParity {
    double t_eff;
    cplx q_l, q_r;
    int parity; // final time mod 2
};

// e^{-r} I_{|n|}(r) on the integers.
struct ModBessel {
    double r;
};

struct Delta {
    double at;
};

using LimitLaw = std::variant<Konno, Arcsine, FtdA, Normal, BesselParity, ModBessel, Delta>;

LimitLaw make_konno(double r, double drift);
// Theorem-1 parameters from a coin and an initial coin state:
// r = |a|, drift = |q_L|^2 - |q_R|^2 + 2 Re(a q_L conj(b q_R)) / |a|^2.
double konno_drift(const Coin2& coin, const CoinState& init);
LimitLaw konno_for(const Coin2& coin, const CoinState& init);
LimitLaw make_arcsine(cplx gamma);
LimitLaw make_ftda(double y, const CoinState& q);
LimitLaw make_normal(double mu, double nu);
LimitLaw make_bessel_parity(double t_eff, const CoinState& q, int parity);
LimitLaw make_mod_bessel(double r);
LimitLaw make_delta(double at);

bool is_discrete(const LimitLaw& law);

// Band edge of the continuous laws (infinity for Normal, 0 for discrete tags).
double support_radius(const LimitLaw& law);

// Density for continuous laws, point mass for discrete ones (x is snapped to
// the nearest atom within 1e-9). Throws singular_endpoint exactly at a band
// edge.
double pdf(const LimitLaw& law, double x);

// Right-continuous CDF.
double cdf(const LimitLaw& law, double x);

// Left limit of the CDF (differs from cdf only for discrete laws).
double cdf_left(const LimitLaw& law, double x);

// int x^j dLaw to 1e-8.
double law_moment(const LimitLaw& law, int j);

// Atoms (position, mass) of a discrete law, ascending; empty for continuous.
std::vector<std::pair<double, double>> atoms(const LimitLaw& law);

std::string law_name(const LimitLaw& law);

} // namespace qwalk::laws
