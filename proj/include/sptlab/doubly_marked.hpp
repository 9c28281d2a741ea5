#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sptlab/partition.hpp"
#include "sptlab/spt_objects.hpp"

namespace sptlab {

/* A partition with two distinguished columns s and t. Plain data; use
 * classify() to find out whether a triple is doubly marked, merely column
 * marked (in U_n), or out of range. */
struct ColumnMarked {
    Partition base;
    int s = 0;
    int t = 0;

    bool operator==(const ColumnMarked&) const = default;
    bool operator<(const ColumnMarked& o) const {
        if (!(base == o.base)) return base < o.base;
        if (s != o.s) return s < o.s;
        return t < o.t;
    }
    std::string to_string() const {
        return "(" + base.to_string() + "," + std::to_string(s) + "," + std::to_string(t) + ")";
    }
};

enum class MarkClass {
    invalid,        // not even a column marking: s > D(base) or t > base_1
    column_only,    // in U_n but the marked columns differ in height or t < s
    doubly_marked,  // s <= t and the two columns have equal height
};

MarkClass classify(const ColumnMarked& cm);
bool is_doubly_marked(const ColumnMarked& cm);

/* Row index g = (height of column s) - s + 1; at least 1 for doubly marked
 * input. The crank of a doubly marked partition reads the part in this row. */
int crank_row(const ColumnMarked& cm);

// c = g - base_g + t - s.
int spt_crank(const ColumnMarked& cm);

// All doubly marked partitions of n: base in enumeration order, then s, then t.
std::vector<ColumnMarked> enumerate_doubly_marked(int n);

// Doubly-marked cardinalities per crank; OpenMP over the largest part.
NetCrankTable doubly_marked_crank_counts(int n);
NetCrankTable doubly_marked_crank_counts_serial(int n);

/* A pair (alpha, beta) with beta a nonempty partition with equal parts; the
 * image representation of a doubly marked partition. */
struct PartitionPair {
    Partition alpha;
    Partition beta;

    bool operator==(const PartitionPair&) const = default;
    bool operator<(const PartitionPair& o) const {
        if (!(alpha == o.alpha)) return alpha < o.alpha;
        return beta < o.beta;
    }
    int weight() const { return alpha.weight() + beta.weight(); }
    std::string to_string() const { return "(" + alpha.to_string() + "," + beta.to_string() + ")"; }
};

bool is_rectangular(const Partition& beta);

/* Splits a doubly marked partition into (alpha, beta): the marked column
 * block, t-s+1 columns of equal height, becomes beta, and what is left of the
 * rows becomes alpha. Weight is preserved. */
PartitionPair to_pair(const ColumnMarked& cm);

/* Side of the Durfee square of the rows below the m-Durfee rectangle: the
 * largest h with alpha_{j+m+1+h} >= h (h = 0 always qualifies). */
int tail_square_side(const Partition& alpha, int j, int m);

/* Image-set membership for crank m: the rank-set of alpha contains m and
 * beta_1 = j + m + 1 + h for the pair's (j, h). */
bool in_pair_image(const PartitionPair& pair, int m);

// Inverse of to_pair on pairs passing in_pair_image; restores crank m.
ColumnMarked from_pair(const PartitionPair& pair, int m);

// Generate-and-filter enumeration of the image set at weight n.
std::vector<PartitionPair> enumerate_pairs_with_crank(int m, int n);

// Image-set cardinalities at weight n split by (j, h).
std::map<std::pair<int, int>, long long> pair_cell_counts(int m, int n);

}  // namespace sptlab
