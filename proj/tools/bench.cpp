// Compares the serial reference implementations against the OpenMP kernels:
// the two grid runners and the raw Gram matvec used by the spectral
// estimator. Outputs must agree exactly; timings are wall clock.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "seqmat/kernels.hpp"
#include "seqmat/verify.hpp"

using namespace seqmat;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-24s serial %8.3fs   omp %8.3fs   speedup %5.2fx   outputs %s\n", name, serial,
                parallel, serial / parallel, identical ? "identical" : "DIFFER");
}

}  // namespace

int main() {
    std::printf("omp max threads: %d\n\n", omp_get_max_threads());

    {
        IdentityGridConfig cfg = IdentityGridConfig::preset_default();
        auto t0 = Clock::now();
        auto serial = run_identity_grid(cfg, ExecMode::Serial);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto parallel = run_identity_grid(cfg, ExecMode::Parallel);
        double tp = seconds_since(t0);
        bool same = serial.size() == parallel.size();
        for (size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].anchor == parallel[i].anchor &&
                   serial[i].failures == parallel[i].failures &&
                   serial[i].points == parallel[i].points;
        report("identity grid", ts, tp, same);
    }

    {
        BoundGridConfig cfg = BoundGridConfig::preset_default();
        auto ids = run_identity_grid(IdentityGridConfig::preset_default(), ExecMode::Serial);
        auto t0 = Clock::now();
        auto serial = run_bound_grid(cfg, ExecMode::Serial);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        auto parallel = run_bound_grid(cfg, ExecMode::Parallel);
        double tp = seconds_since(t0);
        bool same = ledger_to_json(emit_ledger(ids, serial)) ==
                    ledger_to_json(emit_ledger(ids, parallel));
        report("bound grid", ts, tp, same);
    }

    {
        const long n = 1024;
        const int reps = 200;
        std::mt19937 rng(99);
        std::uniform_real_distribution<double> dist(-1.0, 1.0);
        std::vector<double> m(static_cast<size_t>(n) * n);
        std::vector<double> v(static_cast<size_t>(n));
        for (double& x : m) x = dist(rng);
        for (double& x : v) x = dist(rng);
        std::vector<double> out_s(static_cast<size_t>(n)), out_p(static_cast<size_t>(n));

        auto t0 = Clock::now();
        for (int i = 0; i < reps; ++i) kernels::matvec_serial(m, n, v, out_s);
        double ts = seconds_since(t0);
        t0 = Clock::now();
        for (int i = 0; i < reps; ++i) kernels::matvec_omp(m, n, v, out_p);
        double tp = seconds_since(t0);
        report("matvec 1024^2 x200", ts, tp, out_s == out_p);
    }

    return 0;
}
