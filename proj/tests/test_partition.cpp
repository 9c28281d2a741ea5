#include <doctest.h>

#include <set>

#include "sptlab/partition.hpp"
#include "sptlab/rank_stats.hpp"

using namespace sptlab;

TEST_CASE("construction normalizes zeros and rejects bad input") {
    CHECK(Partition({4, 0}).parts() == std::vector<int>{4});
    CHECK(Partition({3, 0, 0, 1}).parts() == std::vector<int>{3, 1});
    CHECK(Partition{}.empty());
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition({3, 2, 2}).weight() == 7);
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
}

TEST_CASE("enumeration is reverse-lexicographic with p(n) entries") {
    auto p0 = all_partitions(0);
    REQUIRE(p0.size() == 1);
    CHECK(p0[0].empty());

    auto p4 = all_partitions(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition({4}));
    CHECK(p4[1] == Partition({3, 1}));
    CHECK(p4[2] == Partition({2, 2}));
    CHECK(p4[3] == Partition({2, 1, 1}));
    CHECK(p4[4] == Partition({1, 1, 1, 1}));

    CHECK(all_partitions(9).size() == 30);

    for (int n = 0; n <= 30; ++n)
        CHECK(to_bigint(partition_count_by_enumeration(n)) == partition_count(n));
}

TEST_CASE("splitting by largest part covers the enumeration exactly once") {
    for (int n : {1, 5, 9, 12}) {
        std::multiset<std::vector<int>> split;
        for (int first = 1; first <= n; ++first)
            for_each_partition_first(n, first,
                                     [&](const std::vector<int>& parts) { split.insert(parts); });
        std::multiset<std::vector<int>> plain;
        for_each_partition(n, [&](const std::vector<int>& parts) { plain.insert(parts); });
        CHECK(split == plain);
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({3, 2, 2})) == Partition({3, 3, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({2, 1, 1, 1, 1})) == Partition({5, 1}));

    for (int n = 0; n <= 30; ++n) {
        bool involution = true, invariants = true;
        for (const Partition& lam : all_partitions(n)) {
            Partition conj = conjugate(lam);
            involution = involution && conjugate(conj) == lam;
            invariants = invariants && conj.weight() == lam.weight() &&
                         (lam.empty() || (conj.length() == lam.part(1) &&
                                          rank(conj) == -rank(lam)));
        }
        CHECK(involution);
        CHECK(invariants);
    }
}

TEST_CASE("durfee square and m-durfee width") {
    CHECK(durfee_side(Partition({3, 2, 2})) == 2);
    CHECK(durfee_side(Partition{}) == 0);
    CHECK(durfee_side(Partition({1, 1, 1, 1})) == 1);

    CHECK(m_durfee_width(Partition({5, 5, 4, 3, 1}), 1) == 3);
    CHECK(m_durfee_width(Partition({3}), 2) == 0);
    CHECK(m_durfee_width(Partition({4, 4, 1, 1}), 0) == 2);

    // for negative m, zero-row rectangles make every width below -m vacuous
    CHECK(m_durfee_width(Partition({2}), -2) == 2);
    CHECK(m_durfee_width(Partition{}, -3) == 3);

    for (int n = 0; n <= 12; ++n)
        for (const Partition& lam : all_partitions(n))
            CHECK(durfee_side(lam) == m_durfee_width(lam, 0));
}

TEST_CASE("rank") {
    CHECK(rank(Partition({4})) == 3);
    CHECK(rank(Partition({2, 2})) == 0);
    CHECK(rank(Partition({1, 1, 1, 1})) == -3);
    CHECK_THROWS_AS(rank(Partition{}), std::domain_error);
}

TEST_CASE("rank-set membership") {
    Partition lam({5, 5, 4, 3, 1});
    // entries -5, -4, -2, 0, 3 and then the tail 5, 6, ...
    CHECK(rank_set_contains(lam, -2));
    CHECK_FALSE(rank_set_contains(lam, 1));
    CHECK_FALSE(rank_set_contains(lam, -3));
    CHECK(rank_set_contains(lam, 5));
    CHECK(rank_set_contains(lam, 100));
    CHECK_FALSE(rank_set_contains(lam, 4));

    CHECK(rank_set_contains(Partition{}, 0));
    CHECK_FALSE(rank_set_contains(Partition{}, -1));

    for (int n = 0; n <= 10; ++n)
        for (const Partition& lam2 : all_partitions(n))
            for (int k = 0; k <= 3; ++k) CHECK(rank_set_contains(lam2, lam2.length() + k));
}

TEST_CASE("smallest part with the infinity convention") {
    CHECK(smallest_part(Partition({3, 2, 2})) == SmallestPart::of(2));
    CHECK(smallest_part(Partition{}) == SmallestPart::infinity());
    CHECK(smallest_part(Partition({5, 1})) == SmallestPart::of(1));
    CHECK(SmallestPart::of(7) <= SmallestPart::infinity());
    CHECK_FALSE(SmallestPart::infinity() <= SmallestPart::of(7));
    CHECK(min(SmallestPart::infinity(), SmallestPart::of(3)) == SmallestPart::of(3));
}
