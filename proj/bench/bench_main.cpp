// Timing comparison of the serial reference paths against the OpenMP paths
// for the two hot loops: the pulled-back volume integral and a bound sweep.
// Build target only; not part of the test suite.

#include <chrono>
#include <cstdio>

#include "biharm/bounds.hpp"
#include "biharm/parallel.hpp"
#include "biharm/quadrature.hpp"

using namespace biharm;

namespace {

template <typename F>
double time_ms(F&& fn, int reps) {
    const auto t0 = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
    const quad::DiskRule rule = quad::DiskRule::make();
    const Complex z{0.4, 0.3};
    auto g = [](Complex w) { return Complex{abs2(w), 0.0}; };

    std::printf("OpenMP compiled in: %s\n", openmp_enabled() ? "yes" : "no");
    std::printf("rule nodes: %zu\n\n", rule.node_count());
    std::printf("%-28s %12s %12s %9s\n", "workload", "serial ms", "parallel ms", "speedup");

    {
        const double ts =
            time_ms([&] { (void)quad::disk_integrate_green(z, g, rule, Exec::serial); }, 20);
        const double tp =
            time_ms([&] { (void)quad::disk_integrate_green(z, g, rule, Exec::parallel); }, 20);
        std::printf("%-28s %12.3f %12.3f %8.2fx\n", "volume integral", ts, tp, ts / tp);
    }
    {
        const double ts = time_ms(
            [&] {
                (void)bounds::grid_verify(bounds::BoundId::grad_green_mass, nullptr, 6, 12, 0.9,
                                          rule, Exec::serial);
            },
            1);
        const double tp = time_ms(
            [&] {
                (void)bounds::grid_verify(bounds::BoundId::grad_green_mass, nullptr, 6, 12, 0.9,
                                          rule, Exec::parallel);
            },
            1);
        std::printf("%-28s %12.3f %12.3f %8.2fx\n", "gradient-mass sweep 6x12", ts, tp, ts / tp);
    }
    return 0;
}
