#include <doctest.h>

#include "sptlab/rank_stats.hpp"

using namespace sptlab;

TEST_CASE("rank tables from enumeration") {
    RankTable t4 = rank_counts(4);
    CHECK(t4.counts == std::map<int, long long>{{3, 1}, {1, 1}, {0, 1}, {-1, 1}, {-3, 1}});
    CHECK(rank_counts(1).counts == std::map<int, long long>{{0, 1}});
    CHECK(rank_counts(2).counts == std::map<int, long long>{{1, 1}, {-1, 1}});
    CHECK_THROWS_AS(rank_counts(0), std::domain_error);

    for (int n = 1; n <= 25; ++n) {
        RankTable table = rank_counts(n);
        CHECK(to_bigint(table.total()) == partition_count(n));
        for (const auto& [m, c] : table.counts) CHECK(table.at(-m) == c);
    }
}

TEST_CASE("rank residue counts") {
    for (int i = 0; i < 5; ++i) CHECK(rank_count_mod(i, 5, 4) == 1);
    CHECK(rank_count_mod(0, 7, 5) == 1);
    CHECK(rank_count_mod(0, 1, 4) == 5);
    CHECK_THROWS_AS(rank_count_mod(5, 5, 4), std::domain_error);
    CHECK_THROWS_AS(rank_count_mod(-1, 5, 4), std::domain_error);
}

TEST_CASE("rank moments") {
    CHECK(rank_moment(2, 4) == 20);
    for (int n = 1; n <= 20; ++n) {
        CHECK(rank_moment(1, n) == 0);
        CHECK(to_bigint(rank_moment(0, n)) == partition_count(n));
    }
}

TEST_CASE("partition counts via the pentagonal recurrence") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(4) == 5);
    CHECK(partition_count(9) == 30);
    CHECK(partition_count(100) == Bigint("190569292"));
    CHECK_THROWS_AS(partition_count(-1), std::domain_error);
}

TEST_CASE("spt via the second moment") {
    CHECK(spt_via_moments(4) == 10);
    CHECK(spt_via_moments(5) == 14);
    CHECK(spt_via_moments(1) == 1);
    CHECK_THROWS_AS(spt_via_moments(0), std::domain_error);
}

TEST_CASE("rank residue identities mod 13 at weight 6") {
    ObrienValues v = obrien_check(0);
    CHECK(v.weight == 6);
    CHECK(v.s == std::array<long long, 5>{-7, -4, -4, -2, -3});
    CHECK(v.first_holds);
    CHECK(v.second_holds);
    // first aggregate combination vanishes outright, the second is -39
    CHECK(v.s[0] + 2 * v.s[1] - 5 * v.s[4] == 0);
    CHECK(v.s[1] + 5 * v.s[2] + 3 * v.s[3] + 3 * v.s[4] == -39);

    ObrienValues v1 = obrien_check(1);
    CHECK(v1.weight == 19);
    CHECK(v1.first_holds);
    CHECK(v1.second_holds);

    for (int i = 1; i <= 5; ++i)
        CHECK(v.s[static_cast<std::size_t>(i - 1)] ==
              v.r[static_cast<std::size_t>(i - 1)] - (7 - i) * v.r[5]);
}
