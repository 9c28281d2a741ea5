#pragma once

#include <array>
#include <map>

#include "sptlab/bigint.hpp"
#include "sptlab/partition.hpp"

namespace sptlab {

/* Rank counts of a fixed weight: counts[m] is the number of partitions of n
 * whose largest part exceeds the number of parts by m. */
struct RankTable {
    int n = 0;
    std::map<int, long long> counts;

    long long at(int m) const {
        auto it = counts.find(m);
        return it == counts.end() ? 0 : it->second;
    }
    long long total() const {
        long long t = 0;
        for (const auto& [m, c] : counts) t += c;
        return t;
    }
};

// Full rank table by enumeration; OpenMP over the largest part.
RankTable rank_counts(int n);

// Single-threaded reference enumeration, kept for testing the kernel.
RankTable rank_counts_serial(int n);

// Number of partitions of n with rank congruent to i mod t.
long long rank_count_mod(const RankTable& table, int i, int t);
long long rank_count_mod(int i, int t, int n);

// k-th rank moment: sum of m^k * N(m, n).
long long rank_moment(const RankTable& table, int k);
long long rank_moment(int k, int n);

// p(n) by the pentagonal-number recurrence (cached, thread-safe).
Bigint partition_count(int n);

// Independent oracle for p(n): plain enumeration count.
long long partition_count_by_enumeration(int n);

// spt(n) = n p(n) - N_2(n)/2; the halving must be exact.
Bigint spt_via_moments(int n);

/* Rank-residue differences mod 13 at weight 13*n_index + 6, and the five
 * aggregates they combine into. r[i] = N(i,13,w) - N(i+1,13,w) for i = 0..5;
 * s[i] = r[i] - (6-i) * r[5] for i = 0..4. */
struct ObrienValues {
    int n_index = 0;
    int weight = 0;
    std::array<long long, 6> r{};
    std::array<long long, 5> s{};
    bool first_holds = false;   // s1 + 2 s2 - 5 s5 == 0 (mod 13)
    bool second_holds = false;  // s2 + 5 s3 + 3 s4 + 3 s5 == 0 (mod 13)
};

ObrienValues obrien_check(int n_index);

}  // namespace sptlab
