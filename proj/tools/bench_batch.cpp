// Benchmark: serial reference kernels vs the OpenMP ones on the batch
// membership and grid erosion oracles.
#include <chrono>
#include <cstring>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "convexsg/batch.hpp"
#include "convexsg/random_sets.hpp"

using namespace convexsg;
namespace chrono = std::chrono;

namespace {

double time_ms(auto&& fn) {
    auto t0 = chrono::high_resolution_clock::now();
    fn();
    auto t1 = chrono::high_resolution_clock::now();
    return chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    int pairs = quick ? 3 : 30;
    Rational step = quick ? Rational(1, 2) : Rational(1, 4);

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (OpenMP disabled)\n";
#endif

    RandomSets rng(7);
    double serial_total = 0, parallel_total = 0;
    std::size_t verdicts = 0;
    for (int i = 0; i < pairs; ++i) {
        Vec lo = {Rational(rng.range(-3, 0)), Rational(rng.range(-3, 0))};
        Vec hi = {lo[0] + Rational(rng.range(2, 5)), lo[1] + Rational(rng.range(2, 5))};
        Polyhedron a = Polyhedron::box(lo, hi);
        Polyhedron b = Polyhedron::box({Rational(0), Rational(0)},
                                       {Rational(rng.range(0, 2)), Rational(rng.range(0, 2))});
        Vec glo = lo, ghi = hi;
        for (auto& x : glo) x -= Rational(1);
        for (auto& x : ghi) x += Rational(1);
        Mat grid = grid_points(glo, ghi, step);
        verdicts += grid.size();

        std::vector<std::uint8_t> ref, par;
        serial_total += time_ms([&] { ref = erosion_oracle_serial(a, b, grid); });
        parallel_total += time_ms([&] { par = erosion_oracle(a, b, grid); });
        if (ref != par) {
            std::cerr << "MISMATCH between serial and parallel oracle\n";
            return 1;
        }

        serial_total += time_ms([&] { ref = contains_many_serial(a, grid); });
        parallel_total += time_ms([&] { par = contains_many(a, grid); });
        if (ref != par) {
            std::cerr << "MISMATCH between serial and parallel membership\n";
            return 1;
        }
    }

    std::cout << "pairs " << pairs << ", grid verdicts " << verdicts << "\n";
    std::cout << "serial   " << serial_total << " ms\n";
    std::cout << "parallel " << parallel_total << " ms\n";
    if (parallel_total > 0)
        std::cout << "speedup  " << serial_total / parallel_total << "x\n";
    return 0;
}
