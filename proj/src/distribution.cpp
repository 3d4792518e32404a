#include "qwalk/distribution.hpp"

#include <cmath>

#include "qwalk/errors.hpp"

namespace qwalk {

double Distribution::total() const
{
    long double s = 0.0L;
    for (double v : p)
        s += v;
    return static_cast<double>(s);
}

double moment(const Distribution& d, int j)
{
    if (j < 0 || j > 8)
        throw config_error("moment: order must lie in [0,8]");
    long double s = 0.0L;
    for (size_t i = 0; i < d.p.size(); ++i) {
        const long double n = static_cast<long double>(d.lo + static_cast<long>(i));
        long double w = 1.0L;
        for (int m = 0; m < j; ++m)
            w *= n;
        s += w * d.p[i];
    }
    return static_cast<double>(s);
}

void detect_parity(Distribution& d)
{
    bool even = false, odd = false;
    for (size_t i = 0; i < d.p.size(); ++i) {
        if (d.p[i] > 1e-30) {
            const long n = d.lo + static_cast<long>(i);
            (((n % 2) + 2) % 2 == 0 ? even : odd) = true;
        }
    }
    if (even != odd)
        d.parity = even ? 0 : 1;
    else
        d.parity.reset();
}

} // namespace qwalk
