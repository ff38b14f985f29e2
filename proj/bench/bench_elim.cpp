// Times the serial fraction-free elimination against the OpenMP variant on
// random rational matrices, plus the sparse span builder on the same input.
#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "blowup/linalg.hpp"

using namespace blowup;
using Clock = std::chrono::steady_clock;

namespace {

QMatrix random_matrix(std::size_t n, std::size_t m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    QMatrix a(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) a.at(i, j) = Rational(num(rng), den(rng));
    return a;
}

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: disabled at build time\n";
#endif
    std::cout << "size        serial(ms)   openmp(ms)   speedup   rank\n";
    for (std::size_t n : {64, 96, 128, 192}) {
        QMatrix a = random_matrix(n, n + n / 2, 12345 + n);

        auto t0 = Clock::now();
        EchelonForm es = eliminate_serial(a);
        const double serial = ms_since(t0);

        t0 = Clock::now();
        EchelonForm ep = eliminate_omp(a);
        const double par = ms_since(t0);

        if (es.rank != ep.rank || !(es.m == ep.m)) {
            std::cerr << "MISMATCH between serial and openmp elimination at n=" << n << "\n";
            return 1;
        }
        std::printf("%4zux%-6zu %10.2f %12.2f %9.2fx %6zu\n", n, n + n / 2, serial, par,
                    serial / par, es.rank);
    }

    // The sparse builder on a structured instance, for context.
    {
        const std::size_t n = 192, m = n + n / 2;
        QMatrix a = random_matrix(n, m, 999);
        auto t0 = Clock::now();
        SpanBuilder sb;
        for (std::size_t i = 0; i < n; ++i) {
            SparseVec v;
            for (std::size_t j = 0; j < m; ++j)
                if (!a.at(i, j).is_zero()) v.emplace_back(static_cast<long>(j), a.at(i, j));
            sb.add(std::move(v));
        }
        std::printf("sparse span on %zux%zu: %.2f ms, rank %zu\n", n, m, ms_since(t0), sb.rank());
    }
    return 0;
}
