#pragma once

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

// Adaptive Simpson with absolute tolerance. When the panel depth limit is
// exhausted the unmet local error is accumulated; if the total exceeds the
// requested tolerance the call throws a numeric_error carrying the achieved
// tolerance.
template <class F>
double integrate(F&& f, double a, double b, double abs_tol, int max_depth = 40)
{
    struct Ctx {
        const F& f;
        double slack = 0.0; // error accepted beyond per-panel tolerance
    };
    Ctx ctx{f};

    struct Rec {
        static double go(Ctx& ctx, double a, double m, double b, double fa, double fm,
                         double fb, double whole, double tol, int depth)
        {
            const double lm = 0.5 * (a + m);
            const double rm = 0.5 * (m + b);
            const double flm = ctx.f(lm);
            const double frm = ctx.f(rm);
            const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
            const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
            const double delta = left + right - whole;
            if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
                if (std::abs(delta) > 15.0 * tol)
                    ctx.slack += std::abs(delta) / 15.0;
                return left + right + delta / 15.0;
            }
            return go(ctx, a, lm, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
                   + go(ctx, m, rm, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
        }
    };

    const double fa = f(a);
    const double fb = f(b);
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double result = Rec::go(ctx, a, m, b, fa, fm, fb, whole, abs_tol, max_depth);
    if (ctx.slack > abs_tol)
        throw numeric_error("quadrature did not reach tolerance "
                            + std::to_string(abs_tol) + "; achieved "
                            + std::to_string(ctx.slack));
    return result;
}

} // namespace qwalk
