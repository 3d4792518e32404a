#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qwalk {

using cplx = std::complex<double>;

// A 2x2 unitary coin. Entries satisfy |a|^2 + |c|^2 = 1,
// a conj(b) + c conj(d) = 0, c = -det conj(b), d = det conj(a), |det| = 1.
struct Coin2 {
    cplx a, b, c, d;

    cplx det() const { return a * d - b * c; }

    std::pair<cplx, cplx> apply(cplx l, cplx r) const
    {
        return {a * l + b * r, c * l + d * r};
    }
};

// Internal coin state q_L |L> + q_R |R> with |q_L|^2 + |q_R|^2 = 1.
struct CoinState {
    cplx l, r;
};

// Validates normalization to 1e-9 and then scales the residual away.
CoinState make_coin_state(cplx l, cplx r);

// Builds the full coin from its first row and the determinant phase:
// c = -det conj(b), d = det conj(a).
Coin2 make_coin(cplx a, cplx b, cplx det_phase);

Coin2 hadamard();

// [[sqrt(r), sqrt(1-r)], [sqrt(1-r), -sqrt(r)]] with 0 < r < 1.
Coin2 ftd_coin(double r);

// [[cos eps, -i sin eps], [-i sin eps, cos eps]].
Coin2 dirac_coin(double eps);

struct UnitaryReport {
    struct Relation {
        std::string name;
        double residual;
    };
    std::vector<Relation> relations;
    double tolerance = 1e-12;

    bool ok() const
    {
        for (const auto& rel : relations)
            if (!(rel.residual < tolerance))
                return false;
        return true;
    }
};

UnitaryReport validate_unitary(const Coin2& c);

// A coin assignment over (site, step). Schemes are total over the simulated
// window; a site-dependent map with a missing entry is a configuration error,
// not an identity coin.
class CoinField {
public:
    static CoinField homogeneous(const Coin2& coin);
    static CoinField time_dependent(std::function<Coin2(long)> schedule);
    static CoinField site_dependent(std::map<long, Coin2> by_site);
    static CoinField ftd(long final_time, double rate);

    // True when the coin at a given step does not vary with the site.
    bool spatially_uniform() const;

    Coin2 at(long site, long step) const;
    Coin2 at_step(long step) const; // spatially uniform schemes only

    long ftd_final_time() const; // FTD scheme only
    double ftd_rate() const;     // FTD scheme only

private:
    struct Homogeneous {
        Coin2 coin;
    };
    struct TimeDependent {
        std::function<Coin2(long)> schedule;
    };
    struct SiteDependent {
        std::map<long, Coin2> by_site;
    };
    struct Ftd {
        long final_time;
        double rate;
        Coin2 coin;
    };

    using Scheme = std::variant<Homogeneous, TimeDependent, SiteDependent, Ftd>;
    explicit CoinField(Scheme s) : scheme_(std::move(s)) {}

    Scheme scheme_;
};

} // namespace qwalk
