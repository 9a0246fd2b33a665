// Benchmark: serial reference vs the OpenMP character-table kernel.

#include <chrono>
#include <cstdio>

#include "brep/verification.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

double time_table(const brep::BraidQuotient& group, brep::Threading threading) {
    auto t0 = std::chrono::steady_clock::now();
    auto table = brep::compute_character_table(group, threading);
    auto t1 = std::chrono::steady_clock::now();
    if (table.rows.empty()) std::puts("unexpected empty table");
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both runs are serial\n");
#endif
    for (auto [n, q] : {std::pair{3, 3}, {3, 5}, {4, 3}}) {
        brep::BraidQuotient group(n, q);
        double ts = time_table(group, brep::Threading::Serial);
        double tp = time_table(group, brep::Threading::Parallel);
        std::printf("(n=%d, q=%d) |G|=%lld  serial %.3fs  parallel %.3fs  speedup %.2fx\n",
                    n, q, static_cast<long long>(group.order()), ts, tp,
                    tp > 0 ? ts / tp : 0.0);
    }
    return 0;
}
