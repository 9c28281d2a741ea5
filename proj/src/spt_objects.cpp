#include "sptlab/spt_objects.hpp"

#include "sptlab/rank_stats.hpp"

namespace sptlab {

namespace {

int smallest_run(const std::vector<int>& parts) {
    int run = 1;
    int last = static_cast<int>(parts.size()) - 1;
    while (run < static_cast<int>(parts.size()) && parts[static_cast<std::size_t>(last - run)] == parts.back())
        ++run;
    return run;
}

NetCrankTable table_from_offsets(int n, const std::vector<long long>& acc) {
    NetCrankTable table;
    table.n = n;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) table.counts[static_cast<int>(i) - (n - 1)] = acc[i];
    return table;
}

void check_cap(int n, int cap) {
    if (n > cap)
        throw CapacityError("weight " + std::to_string(n) +
                            " exceeds the S-partition enumeration cap (" + std::to_string(cap) +
                            "); raise --s-partition-cap, or use the recurrence or the "
                            "doubly-marked counts instead");
}

}  // namespace

long long spt_weighted(int n) {
    if (n < 1) throw std::domain_error("spt needs a positive weight");
    long long total = 0;
#pragma omp parallel
    {
        long long local = 0;
#pragma omp for schedule(dynamic) nowait
        for (int first = 1; first <= n; ++first)
            for_each_partition_first(n, first,
                                     [&](const std::vector<int>& parts) { local += smallest_run(parts); });
#pragma omp critical
        total += local;
    }
    return total;
}

long long spt_weighted_serial(int n) {
    if (n < 1) throw std::domain_error("spt needs a positive weight");
    long long total = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) { total += smallest_run(parts); });
    return total;
}

std::vector<MarkedPartition> enumerate_marked(int n) {
    if (n < 1) throw std::domain_error("marked partitions need a positive weight");
    std::vector<MarkedPartition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        Partition base(parts);
        int run = smallest_run(parts);
        for (int k = base.length() - run + 1; k <= base.length(); ++k)
            out.emplace_back(base, k);
    });
    return out;
}

long long marked_count(int n) {
    if (n < 1) throw std::domain_error("marked partitions need a positive weight");
    long long total = 0;
    for_each_partition(n, [&](const std::vector<int>& parts) { total += smallest_run(parts); });
    return total;
}

NetCrankTable s_partition_net_counts(int n, int cap) {
    if (n < 1) throw std::domain_error("S-partitions need a positive weight");
    check_cap(n, cap);
    std::vector<long long> acc(static_cast<std::size_t>(2 * n - 1), 0);
#pragma omp parallel
    {
        std::vector<long long> local(acc.size(), 0);
#pragma omp for schedule(dynamic) nowait
        for (int w1 = 1; w1 <= n; ++w1) {
            for_each_distinct_partition(w1, [&](const std::vector<int>& p1) {
                int sign = p1.size() % 2 == 1 ? 1 : -1;
                int min_allowed = p1.back();
                for (int w2 = 0; w2 <= n - w1; ++w2) {
                    for_each_partition_min(w2, min_allowed, [&](const std::vector<int>& p2) {
                        int len2 = static_cast<int>(p2.size());
                        for_each_partition_min(n - w1 - w2, min_allowed,
                                               [&](const std::vector<int>& p3) {
                                                   int crank = len2 - static_cast<int>(p3.size());
                                                   local[static_cast<std::size_t>(crank + n - 1)] += sign;
                                               });
                    });
                }
            });
        }
#pragma omp critical
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += local[i];
    }
    return table_from_offsets(n, acc);
}

NetCrankTable s_partition_net_counts_serial(int n, int cap) {
    if (n < 1) throw std::domain_error("S-partitions need a positive weight");
    check_cap(n, cap);
    std::vector<long long> acc(static_cast<std::size_t>(2 * n - 1), 0);
    for_each_s_partition(n, [&](const std::vector<int>& p1, const std::vector<int>& p2,
                                const std::vector<int>& p3) {
        int sign = p1.size() % 2 == 1 ? 1 : -1;
        int crank = static_cast<int>(p2.size()) - static_cast<int>(p3.size());
        acc[static_cast<std::size_t>(crank + n - 1)] += sign;
    });
    return table_from_offsets(n, acc);
}

long long net_count_mod(const NetCrankTable& table, int k, int t) {
    if (t < 1 || k < 0 || k >= t) throw std::domain_error("crank residue out of range");
    long long total = 0;
    for (const auto& [m, c] : table.counts)
        if (canonical_mod(m, t) == k) total += c;
    return total;
}

long long net_count_mod(int k, int t, int n, int cap) {
    return net_count_mod(s_partition_net_counts(n, cap), k, t);
}

Bigint net_count_recurrence(int m, int n) {
    if (n < 1) throw std::domain_error("net counts need a positive weight");
    Bigint total = 0;
    for (long long k = 1;; ++k) {
        long long tri = k * (k + 1) / 2;
        // the j = 0 argument dominates; once it is negative every term is
        if (n - k * m - tri < 0) break;
        int sign = (k % 2 == 1) ? 1 : -1;
        for (long long j = 0; j < k; ++j) {
            long long arg = n - k * (m + j) - tri;
            if (arg < 0) break;
            if (sign > 0)
                total += partition_count(static_cast<int>(arg));
            else
                total -= partition_count(static_cast<int>(arg));
        }
    }
    return total;
}

}  // namespace sptlab
