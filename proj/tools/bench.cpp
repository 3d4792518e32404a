// Times the OpenMP kernels against their serial reference twins and checks
// that the results agree. Thread count follows QWALK_THREADS (0 = runtime
// default).

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qwalk/classical.hpp"
#include "qwalk/ctqw.hpp"
#include "qwalk/dtqw.hpp"
#include "qwalk/parallel.hpp"
#include "qwalk/reference.hpp"

using namespace qwalk;
using clk = std::chrono::steady_clock;

namespace {

template <class F>
double time_ms(F&& fn)
{
    const auto t0 = clk::now();
    fn();
    const auto t1 = clk::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const char* name, double serial_ms, double parallel_ms, double max_diff)
{
    std::printf("%-22s serial %9.1f ms   parallel %9.1f ms   speedup %5.2fx   max|diff| %.3g\n",
                name, serial_ms, parallel_ms, serial_ms / parallel_ms, max_diff);
}

} // namespace

int main()
{
    apply_thread_cap();
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serial code\n");
#endif

    const CoinState init = make_coin_state(1.0 / std::sqrt(2.0),
                                           cplx(0.0, 1.0 / std::sqrt(2.0)));
    const CoinField field = CoinField::homogeneous(hadamard());

    {
        const long t = 5000;
        dtqw::WalkerState par, ser;
        const double pm = time_ms([&] { par = dtqw::evolve(init, field, t); });
        const double sm = time_ms([&] { ser = reference::dtqw_evolve(init, field, t); });
        double diff = 0.0;
        for (size_t i = 0; i < par.amp_l.size(); ++i)
            diff = std::max(diff, std::abs(par.amp_l[i] - ser.amp_l[i]));
        report("dtqw evolve t=5000", sm, pm, diff);
    }

    {
        const long t = 20000;
        const double rate = 0.3;
        Distribution par, ser;
        const double pm = time_ms([&] { par = classical::lazy_rw({t, 0.0, rate}); });
        const double sm = time_ms([&] { ser = reference::lazy_rw(t, rate); });
        double diff = 0.0;
        for (long n = par.lo; n <= par.hi(); ++n)
            if (ser.at(n) > 1e-280)
                diff = std::max(diff, std::abs(par.at(n) - ser.at(n)));
        report("lazy rw T=20000", sm, pm, diff);
    }

    {
        const long radius = 8192; // window chosen to exercise the kernel
        ctqw::CtqwState par, ser;
        const double pm = time_ms([&] { par = ctqw::ctqw_integrate(1.0, 2.0, 0.005, radius); });
        const double sm =
            time_ms([&] { ser = reference::ctqw_integrate(1.0, 2.0, 0.005, radius); });
        double diff = 0.0;
        for (size_t i = 0; i < par.amp.size(); ++i)
            diff = std::max(diff, std::abs(par.amp[i] - ser.amp[i]));
        report("ctqw rk4 N=16385", sm, pm, diff);
    }

    return 0;
}
