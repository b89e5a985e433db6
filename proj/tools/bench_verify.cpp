#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "springer/json_io.hpp"
#include "springer/theorem.hpp"

using namespace springer;

// Times the serial and parallel verification paths and checks that they agree
// byte for byte. Usage: bench_verify [max_rank] (default 8).
int main(int argc, char** argv) {
    int max_rank = argc > 1 ? std::atoi(argv[1]) : 8;
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads=%d\n%-6s %4s %10s %10s %8s %s\n", threads, "family", "n", "serial_s", "parallel_s", "speedup",
                "agree");
    bool all_agree = true;
    for (ClassFamily f : {ClassFamily::A, ClassFamily::B, ClassFamily::C, ClassFamily::D}) {
        for (int n = rank_floor(f); n <= max_rank; ++n) {
            using clock = std::chrono::steady_clock;
            auto t0 = clock::now();
            auto serial = verify_serial(f, n);
            auto t1 = clock::now();
            auto parallel = verify(f, n, {true, 0});
            auto t2 = clock::now();
            double s = std::chrono::duration<double>(t1 - t0).count();
            double p = std::chrono::duration<double>(t2 - t1).count();
            bool agree = to_json(serial).dump() == to_json(parallel).dump();
            all_agree = all_agree && agree;
            std::printf("%-6s %4d %10.3f %10.3f %8.2f %s\n", class_family_name(f), n, s, p, p > 0 ? s / p : 0.0,
                        agree ? "yes" : "NO");
        }
    }
    return all_agree ? 0 : 1;
}
