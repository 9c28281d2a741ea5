#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "sptlab/bigint.hpp"
#include "sptlab/partition.hpp"

namespace sptlab {

/* A partition with one occurrence of its smallest part marked by its 1-based
 * index k; the valid k are exactly the indices holding the smallest part. */
struct MarkedPartition {
    Partition base;
    int k = 0;

    MarkedPartition(Partition base_in, int k_in) : base(std::move(base_in)), k(k_in) {
        if (base.empty()) throw std::invalid_argument("marked partition must be nonempty");
        if (k < 1 || k > base.length())
            throw std::invalid_argument("mark index out of range");
        if (base.part(k) != base.part(base.length()))
            throw std::invalid_argument("mark must point at a smallest part");
    }

    bool operator==(const MarkedPartition&) const = default;
    bool operator<(const MarkedPartition& o) const {
        if (!(base == o.base)) return base < o.base;
        return k < o.k;
    }
    std::string to_string() const { return "(" + base.to_string() + "," + std::to_string(k) + ")"; }
};

/* Triple (pi1, pi2, pi3) with pi1 nonempty into distinct parts and
 * s(pi1) <= min(s(pi2), s(pi3)); carries a sign and a crank. */
struct SPartition {
    Partition pi1, pi2, pi3;

    SPartition(Partition p1, Partition p2, Partition p3)
        : pi1(std::move(p1)), pi2(std::move(p2)), pi3(std::move(p3)) {
        if (pi1.empty()) throw std::invalid_argument("first component must be nonempty");
        for (int i = 2; i <= pi1.length(); ++i)
            if (pi1.part(i) == pi1.part(i - 1))
                throw std::invalid_argument("first component must have distinct parts");
        int s1 = pi1.part(pi1.length());
        if (!(s1 <= min(smallest_part(pi2), smallest_part(pi3))))
            throw std::invalid_argument("smallest-part condition violated");
    }

    int weight() const { return pi1.weight() + pi2.weight() + pi3.weight(); }
    int sign() const { return pi1.length() % 2 == 1 ? 1 : -1; }
    int crank() const { return pi2.length() - pi3.length(); }

    bool operator==(const SPartition&) const = default;
    std::string to_string() const {
        return "(" + pi1.to_string() + "," + pi2.to_string() + "," + pi3.to_string() + ")";
    }
};

/* Net counts of a signed set keyed by crank; also reused for the unsigned
 * doubly-marked counts, where every entry is a plain cardinality. */
struct NetCrankTable {
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

// Raised when an enumeration is asked to run past its configured cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultSPartitionCap = 18;

// spt(n) as the weighted count of smallest-part occurrences.
long long spt_weighted(int n);
long long spt_weighted_serial(int n);

// All marked partitions of n: base in enumeration order, then k increasing.
std::vector<MarkedPartition> enumerate_marked(int n);

// |enumerate_marked(n)| without materializing.
long long marked_count(int n);

/* Visit every S-partition of weight n: |pi1| ascending, pi1 reverse-lex,
 * |pi2| ascending, pi2 reverse-lex, pi3 reverse-lex. */
template <class F>
void for_each_s_partition(int n, F f) {
    if (n < 1) throw std::domain_error("S-partitions need a positive weight");
    for (int w1 = 1; w1 <= n; ++w1) {
        for_each_distinct_partition(w1, [&](const std::vector<int>& p1) {
            int min_allowed = p1.back();
            for (int w2 = 0; w2 <= n - w1; ++w2) {
                for_each_partition_min(w2, min_allowed, [&](const std::vector<int>& p2) {
                    for_each_partition_min(n - w1 - w2, min_allowed,
                                           [&](const std::vector<int>& p3) { f(p1, p2, p3); });
                });
            }
        });
    }
}

/* Signed enumeration of all S-partitions of n, accumulated per crank.
 * Refuses weights above the cap; the Dyson recurrence and the doubly-marked
 * counts cover larger weights. */
NetCrankTable s_partition_net_counts(int n, int cap = kDefaultSPartitionCap);
NetCrankTable s_partition_net_counts_serial(int n, int cap = kDefaultSPartitionCap);

// Net count with crank congruent to k mod t.
long long net_count_mod(int k, int t, int n, int cap = kDefaultSPartitionCap);
long long net_count_mod(const NetCrankTable& table, int k, int t);

/* Dyson's recurrence for the net crank counts:
 * sum_{k>=1} (-1)^(k-1) sum_{j=0}^{k-1} p(n - k(m+j) - k(k+1)/2). */
Bigint net_count_recurrence(int m, int n);

}  // namespace sptlab
