#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sptlab/crank_bijections.hpp"
#include "sptlab/doubly_marked.hpp"
#include "sptlab/rank_stats.hpp"
#include "sptlab/spt_objects.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn) {
    auto start = Clock::now();
    fn();
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

/* The reference implementations are the single-threaded routes the tests
 * trust; the doubly-marked one is also algorithmically naive, so its gap is
 * larger than the thread count. */
void report(const std::string& kernel, int n, double serial_ms, double parallel_ms, bool match) {
    std::printf("%-22s n=%-4d reference %9.1f ms   openmp %9.1f ms   speedup %5.2fx   %s\n",
                kernel.c_str(), n, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0, match ? "ok" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compare the serial reference kernels against the OpenMP ones"};
    int rank_n = 58;
    int spt_n = 58;
    int spart_n = 24;
    int dmp_n = 46;
    int classes_n = 28;
    app.add_option("--rank-n", rank_n, "weight for the rank table kernel");
    app.add_option("--spt-n", spt_n, "weight for the weighted spt kernel");
    app.add_option("--spart-n", spart_n, "weight for the signed S-partition kernel");
    app.add_option("--dmp-n", dmp_n, "weight for the doubly-marked count kernel");
    app.add_option("--classes-n", classes_n, "weight for the crank class kernel");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP with up to %d threads\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; both columns run serially\n");
#endif

    {
        sptlab::RankTable serial, parallel;
        double s = time_ms([&] { serial = sptlab::rank_counts_serial(rank_n); });
        double p = time_ms([&] { parallel = sptlab::rank_counts(rank_n); });
        report("rank_table", rank_n, s, p, serial.counts == parallel.counts);
    }
    {
        long long serial = 0, parallel = 0;
        double s = time_ms([&] { serial = sptlab::spt_weighted_serial(spt_n); });
        double p = time_ms([&] { parallel = sptlab::spt_weighted(spt_n); });
        report("spt_weighted", spt_n, s, p, serial == parallel);
    }
    {
        sptlab::NetCrankTable serial, parallel;
        double s = time_ms([&] { serial = sptlab::s_partition_net_counts_serial(spart_n, spart_n); });
        double p = time_ms([&] { parallel = sptlab::s_partition_net_counts(spart_n, spart_n); });
        report("s_partition_net", spart_n, s, p, serial.counts == parallel.counts);
    }
    {
        sptlab::NetCrankTable serial, parallel;
        double s = time_ms([&] { serial = sptlab::doubly_marked_crank_counts_serial(dmp_n); });
        double p = time_ms([&] { parallel = sptlab::doubly_marked_crank_counts(dmp_n); });
        report("doubly_marked_counts", dmp_n, s, p, serial.counts == parallel.counts);
    }
    {
        sptlab::CrankClassReport serial, parallel;
        double s = time_ms([&] { serial = sptlab::crank_classes_serial(classes_n, 5); });
        double p = time_ms([&] { parallel = sptlab::crank_classes(classes_n, 5); });
        report("crank_classes", classes_n, s, p, serial.sizes() == parallel.sizes());
    }
    return 0;
}
