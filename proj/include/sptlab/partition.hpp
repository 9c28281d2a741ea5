#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sptlab {

/* A partition is a weakly decreasing sequence of positive integers; the empty
 * partition is the unique partition of 0. Row indices are 1-based, and rows
 * beyond the last read as 0 via part_or_zero(). Values are immutable after
 * construction. */
class Partition {
public:
    Partition() = default;

    /* Zero entries may appear anywhere (the column/row folding maps produce
     * interior zeros) and are dropped; negative entries and sequences that are
     * not weakly decreasing after the drop are rejected. */
    explicit Partition(std::vector<int> parts) {
        std::erase(parts, 0);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 0)
                throw std::invalid_argument("partition part is negative");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
            weight_ += parts[i];
        }
        parts_ = std::move(parts);
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int weight() const { return weight_; }

    // 1-based row access
    int part(int i) const {
        if (i < 1 || i > length()) throw std::out_of_range("partition row index");
        return parts_[static_cast<std::size_t>(i) - 1];
    }
    int part_or_zero(int i) const {
        if (i < 1) throw std::out_of_range("partition row index");
        return i <= length() ? parts_[static_cast<std::size_t>(i) - 1] : 0;
    }

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

    // "(3,2,2)"; the empty partition renders as "()"
    std::string to_string() const;

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/* Smallest part of a partition, with the convention that the empty partition
 * has smallest part +infinity; infinity compares greater than every integer. */
struct SmallestPart {
    bool infinite = false;
    int value = 0;

    static SmallestPart infinity() { return {true, 0}; }
    static SmallestPart of(int v) { return {false, v}; }

    bool operator==(const SmallestPart&) const = default;

    friend bool operator<=(SmallestPart a, SmallestPart b) {
        if (b.infinite) return true;
        if (a.infinite) return false;
        return a.value <= b.value;
    }
    friend bool operator<=(int a, SmallestPart b) { return SmallestPart::of(a) <= b; }
    friend SmallestPart min(SmallestPart a, SmallestPart b) { return a <= b ? a : b; }

    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

SmallestPart smallest_part(const Partition& lam);

// Transpose of the Ferrers diagram: result row j counts parts >= j.
Partition conjugate(const Partition& lam);

// Largest d with lam_d >= d.
int durfee_side(const Partition& lam);

/* Width of the largest (m+j) x j rectangle contained in the Ferrers diagram.
 * j = 0 is always admissible. A rectangle with m+j <= 0 rows is empty and fits
 * vacuously, so for negative m the width is at least -m. When ell(lam) <= m no
 * rectangle with rows fits and the width is 0. */
int m_durfee_width(const Partition& lam, int m);

// Largest part minus the number of parts; undefined for the empty partition.
int rank(const Partition& lam);

/* Membership in the rank-set [-lam_1, 1-lam_2, ..., ell-1-lam_ell, ell,
 * ell+1, ...], queried lazily. */
bool rank_set_contains(const Partition& lam, int m);

namespace detail {

template <class F>
void emit_partitions(std::vector<int>& buf, int remaining, int max_part, int min_part, F& f) {
    if (remaining == 0) {
        f(const_cast<const std::vector<int>&>(buf));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= min_part; --p) {
        if (remaining - p != 0 && remaining - p < min_part) continue;
        buf.push_back(p);
        emit_partitions(buf, remaining - p, p, min_part, f);
        buf.pop_back();
    }
}

template <class F>
void emit_distinct_partitions(std::vector<int>& buf, int remaining, int max_part, F& f) {
    if (remaining == 0) {
        f(const_cast<const std::vector<int>&>(buf));
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        buf.push_back(p);
        emit_distinct_partitions(buf, remaining - p, p - 1, f);
        buf.pop_back();
    }
}

}  // namespace detail

/* Visit every partition of n in reverse-lexicographic order (largest parts
 * first): 4, 31, 22, 211, 1111. The callback receives a reused buffer of
 * parts in weakly decreasing order. */
template <class F>
void for_each_partition(int n, F f) {
    if (n < 0) throw std::domain_error("partition weight must be nonnegative");
    std::vector<int> buf;
    detail::emit_partitions(buf, n, n, 1, f);
}

// Partitions of n with every part <= max_part, reverse-lexicographic.
template <class F>
void for_each_partition_max(int n, int max_part, F f) {
    if (n < 0) throw std::domain_error("partition weight must be nonnegative");
    std::vector<int> buf;
    detail::emit_partitions(buf, n, std::min(n, max_part), 1, f);
}

/* Partitions of n whose largest part is exactly `first`; splitting on the
 * largest part partitions the enumeration space for the parallel kernels. */
template <class F>
void for_each_partition_first(int n, int first, F f) {
    if (first < 1 || first > n) return;
    std::vector<int> buf{first};
    detail::emit_partitions(buf, n - first, first, 1, f);
}

// Partitions of n with every part >= min_part (the empty one when n = 0).
template <class F>
void for_each_partition_min(int n, int min_part, F f) {
    if (n < 0) throw std::domain_error("partition weight must be nonnegative");
    if (min_part < 1) min_part = 1;
    std::vector<int> buf;
    detail::emit_partitions(buf, n, n, min_part, f);
}

// Partitions of n into distinct parts, reverse-lexicographic.
template <class F>
void for_each_distinct_partition(int n, F f) {
    if (n < 0) throw std::domain_error("partition weight must be nonnegative");
    std::vector<int> buf;
    detail::emit_distinct_partitions(buf, n, n, f);
}

// Materialized reverse-lexicographic enumeration; p(n) entries.
std::vector<Partition> all_partitions(int n);

// Canonical residue of v in [0, t).
inline int canonical_mod(long long v, int t) {
    if (t < 1) throw std::domain_error("modulus must be positive");
    long long r = v % t;
    return static_cast<int>(r < 0 ? r + t : r);
}

}  // namespace sptlab
