#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sptlab/doubly_marked.hpp"
#include "sptlab/spt_objects.hpp"

namespace sptlab {

/* Membership in the image set of fold_step: a column marking (mu, a, b) with
 * the extra condition mu'_b > s(mu') whenever a = 1. Seeds (mu', 1, k) built
 * from marked partitions never satisfy it, which is what stops the unfold
 * iteration. */
bool can_unfold(const ColumnMarked& cm);

/* One folding step: cuts the equal-height column block through column s out
 * of the diagram and reinserts it as rows, moving the markings along. Defined
 * on column markings that are not doubly marked; lands in the unfoldable set.
 * Preserves weight. */
ColumnMarked fold_step(const ColumnMarked& cm);

/* Inverse of fold_step: removes the equal rows a..r and restores them as a
 * column block. Defined on the unfoldable set; lands outside the doubly
 * marked set, which is asserted at runtime. */
ColumnMarked unfold_step(const ColumnMarked& cm);

/* The visited column markings of a fold/unfold iteration, endpoints
 * included. */
struct OrbitTrace {
    std::vector<ColumnMarked> steps;
    int step_count() const { return static_cast<int>(steps.size()) - 1; }
};

/* Upper bound on the number of column markings of weight n (sum of
 * D(lambda) * lambda_1 over all partitions, plus one); the fold and unfold
 * iterations must finish within it. Cached per weight. */
long long column_marking_bound(int n);

/* Maps a marked partition to a doubly marked partition: seed with the
 * conjugate base and columns (1, k), then fold until doubly marked. */
std::pair<ColumnMarked, OrbitTrace> to_doubly_marked(const MarkedPartition& mp);

// Inverse map: unfold until the seed shape is reached, then read off the mark.
std::pair<MarkedPartition, OrbitTrace> to_marked(const ColumnMarked& dmp);

struct CrankClassEntry {
    MarkedPartition marked;
    ColumnMarked dmp;
    int crank = 0;
};

/* Marked partitions of n bucketed by the crank of their doubly marked image
 * taken mod the given modulus. */
struct CrankClassReport {
    int n = 0;
    int modulus = 0;
    std::vector<std::vector<CrankClassEntry>> classes;

    std::vector<long long> sizes() const {
        std::vector<long long> out;
        out.reserve(classes.size());
        for (const auto& cls : classes) out.push_back(static_cast<long long>(cls.size()));
        return out;
    }
    bool equal_sizes() const {
        for (const auto& cls : classes)
            if (cls.size() != classes.front().size()) return false;
        return true;
    }
};

CrankClassReport crank_classes(int n, int modulus);
CrankClassReport crank_classes_serial(int n, int modulus);

}  // namespace sptlab
