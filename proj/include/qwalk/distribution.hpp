#pragma once

#include <optional>
#include <vector>

namespace qwalk {

// Probabilities over a contiguous integer window. Zero-mass parity sites are
// kept so CDFs are well-defined on every integer in the window.
struct Distribution {
    long lo = 0; // site of p[0]
    std::vector<double> p;
    // Set when all mass sits on sites with n == parity (mod 2).
    std::optional<int> parity;

    long hi() const { return lo + static_cast<long>(p.size()) - 1; }

    double at(long n) const
    {
        const long i = n - lo;
        if (i < 0 || i >= static_cast<long>(p.size()))
            return 0.0;
        return p[static_cast<size_t>(i)];
    }

    double total() const;
};

// sum_n n^j p(n). Accumulated in extended precision; j <= 8.
double moment(const Distribution& d, int j);

// Flags parity support when one residue class carries no mass.
void detect_parity(Distribution& d);

} // namespace qwalk
