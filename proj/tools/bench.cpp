#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "qcorr/contextuality.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/leggett_garg.hpp"
#include "qcorr/random.hpp"

namespace {

using namespace qcorr;
using clock_type = std::chrono::steady_clock;

double run_ms(const std::function<double(Exec)>& kernel, Exec exec, double* result) {
    const auto start = clock_type::now();
    *result = kernel(exec);
    const auto stop = clock_type::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void bench(const std::string& name, const std::function<double(Exec)>& kernel) {
    double serial_result = 0.0, parallel_result = 0.0;
    const double serial_ms = run_ms(kernel, Exec::Serial, &serial_result);
    const double parallel_ms = run_ms(kernel, Exec::Parallel, &parallel_result);
    const double diff = std::abs(serial_result - parallel_result);
    std::printf("%-28s %10.1f ms %10.1f ms %7.2fx   |serial-parallel| = %g\n", name.c_str(),
                serial_ms, parallel_ms, serial_ms / parallel_ms, diff);
}

}  // namespace

int main(int argc, char** argv) {
    const bool smoke = argc > 1 && std::strcmp(argv[1], "--smoke") == 0;

    const int chsh_grid = smoke ? 60 : 360;
    const int bd_states = smoke ? 2 : 16;
    const int map_points = smoke ? 512 : 4096;
    const int trials = smoke ? 10000 : 1000000;
    const int elgi_points = smoke ? 25 : 181;

    std::printf("threads available: %d\n", max_threads());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    bench("chsh-scan " + std::to_string(chsh_grid) + "^2 x4", [&](Exec exec) {
        return qho_chsh_scan(pseudo_spin_bell_states(), chsh_grid, exec).value;
    });

    Rng rng(20240917);
    std::vector<DensityMatrix> states;
    for (int i = 0; i < bd_states; ++i) states.push_back(bell_diagonal(random_bell_diagonal(rng)));
    bench("classical-corr 64x128 x" + std::to_string(bd_states), [&](Exec exec) {
        SearchParams params;
        params.exec = exec;
        double sum = 0.0;
        for (const auto& s : states) sum += classical_correlation(s, Side::A, params).value;
        return sum;
    });

    bench("violation-map 6x" + std::to_string(map_points), [&](Exec exec) {
        double sum = 0.0;
        for (const auto& row : violation_map(3, 8, map_points, exec)) sum += row.margin;
        return sum;
    });

    bench("macrorealist " + std::to_string(trials) + " trials", [&](Exec exec) {
        return macrorealist_kn(8, {0.1, 0.25, 0.5, 0.3, 0.05, 0.4, 0.2}, trials, 42, exec);
    });

    bench("elgi-sweep n=3 " + std::to_string(elgi_points), [&](Exec exec) {
        double sum = 0.0;
        for (const auto& row : elgi_sweep(3, elgi_points, exec)) sum += row.deficit;
        return sum;
    });

    return 0;
}
