#include "sptlab/rank_stats.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace sptlab {

namespace {

RankTable table_from_offsets(int n, const std::vector<long long>& acc) {
    // acc is indexed by m + (n-1); ranks of weight n lie in [-(n-1), n-1]
    RankTable table;
    table.n = n;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) table.counts[static_cast<int>(i) - (n - 1)] = acc[i];
    return table;
}

}  // namespace

RankTable rank_counts(int n) {
    if (n < 1) throw std::domain_error("rank table needs a positive weight");
    std::vector<long long> acc(static_cast<std::size_t>(2 * n - 1), 0);
#pragma omp parallel
    {
        std::vector<long long> local(acc.size(), 0);
#pragma omp for schedule(dynamic) nowait
        for (int first = 1; first <= n; ++first) {
            for_each_partition_first(n, first, [&](const std::vector<int>& parts) {
                int m = parts.front() - static_cast<int>(parts.size());
                ++local[static_cast<std::size_t>(m + n - 1)];
            });
        }
#pragma omp critical
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += local[i];
    }
    return table_from_offsets(n, acc);
}

RankTable rank_counts_serial(int n) {
    if (n < 1) throw std::domain_error("rank table needs a positive weight");
    std::vector<long long> acc(static_cast<std::size_t>(2 * n - 1), 0);
    for_each_partition(n, [&](const std::vector<int>& parts) {
        int m = parts.front() - static_cast<int>(parts.size());
        ++acc[static_cast<std::size_t>(m + n - 1)];
    });
    return table_from_offsets(n, acc);
}

long long rank_count_mod(const RankTable& table, int i, int t) {
    if (t < 1 || i < 0 || i >= t) throw std::domain_error("rank residue out of range");
    long long total = 0;
    for (const auto& [m, c] : table.counts)
        if (canonical_mod(m, t) == i) total += c;
    return total;
}

long long rank_count_mod(int i, int t, int n) {
    return rank_count_mod(rank_counts(n), i, t);
}

long long rank_moment(const RankTable& table, int k) {
    if (k < 0) throw std::domain_error("rank moment order must be nonnegative");
    long long total = 0;
    for (const auto& [m, c] : table.counts) {
        long long power = 1;
        for (int it = 0; it < k; ++it) power *= m;
        total += power * c;
    }
    return total;
}

long long rank_moment(int k, int n) { return rank_moment(rank_counts(n), k); }

Bigint partition_count(int n) {
    if (n < 0) throw std::domain_error("p(n) needs n >= 0");
    static std::mutex mu;
    static std::vector<Bigint> cache{1};  // p(0) = 1
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= n) {
        int w = static_cast<int>(cache.size());
        Bigint value = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2;
            int g2 = k * (3 * k + 1) / 2;
            if (g1 > w) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (sign > 0) {
                value += cache[static_cast<std::size_t>(w - g1)];
                if (g2 <= w) value += cache[static_cast<std::size_t>(w - g2)];
            } else {
                value -= cache[static_cast<std::size_t>(w - g1)];
                if (g2 <= w) value -= cache[static_cast<std::size_t>(w - g2)];
            }
        }
        cache.push_back(value);
    }
    return cache[static_cast<std::size_t>(n)];
}

long long partition_count_by_enumeration(int n) {
    long long count = 0;
    for_each_partition(n, [&](const std::vector<int>&) { ++count; });
    return count;
}

Bigint spt_via_moments(int n) {
    if (n < 1) throw std::domain_error("spt needs a positive weight");
    long long second = rank_moment(2, n);
    if (second % 2 != 0)
        throw std::logic_error("second rank moment must be even");
    return Bigint(n) * partition_count(n) - to_bigint(second / 2);
}

ObrienValues obrien_check(int n_index) {
    if (n_index < 0) throw std::domain_error("coefficient index must be nonnegative");
    ObrienValues out;
    out.n_index = n_index;
    out.weight = 13 * n_index + 6;
    RankTable table = rank_counts(out.weight);
    std::array<long long, 7> mod_counts{};
    for (int i = 0; i <= 6; ++i) mod_counts[static_cast<std::size_t>(i)] = rank_count_mod(table, i, 13);
    for (int i = 0; i <= 5; ++i)
        out.r[static_cast<std::size_t>(i)] =
            mod_counts[static_cast<std::size_t>(i)] - mod_counts[static_cast<std::size_t>(i + 1)];
    for (int i = 1; i <= 5; ++i)
        out.s[static_cast<std::size_t>(i - 1)] =
            out.r[static_cast<std::size_t>(i - 1)] - (7 - i) * out.r[5];
    long long first = out.s[0] + 2 * out.s[1] - 5 * out.s[4];
    long long second = out.s[1] + 5 * out.s[2] + 3 * out.s[3] + 3 * out.s[4];
    out.first_holds = canonical_mod(first, 13) == 0;
    out.second_holds = canonical_mod(second, 13) == 0;
    return out;
}

}  // namespace sptlab
