#include <doctest.h>

#include "sptlab/doubly_marked.hpp"
#include "sptlab/qseries.hpp"
#include "sptlab/rank_stats.hpp"
#include "sptlab/spt_objects.hpp"

using namespace sptlab;

TEST_CASE("series arithmetic") {
    int order = 12;
    TruncatedSeries ones(order);
    for (int k = 0; k <= order; ++k) ones.set_coeff(k, 1);

    TruncatedSeries telescoped = ones;
    telescoped.mul_one_minus_power(1);
    CHECK(telescoped == TruncatedSeries::one(order));

    TruncatedSeries cancel = ones;
    cancel.scale(-1);
    cancel += ones;
    CHECK(cancel.is_zero());

    CHECK((ones * ones).coeff(5) == 6);

    CHECK_THROWS_AS(TruncatedSeries(4) + TruncatedSeries(5), std::invalid_argument);
}

TEST_CASE("pochhammer products") {
    TruncatedSeries two = pochhammer(2, 1, 6);
    CHECK(two.coeff(0) == 1);
    CHECK(two.coeff(1) == -1);
    CHECK(two.coeff(2) == -1);
    CHECK(two.coeff(3) == 1);
    CHECK(two.coeff(4) == 0);

    CHECK(pochhammer(0, 1, 6) == TruncatedSeries::one(6));
    CHECK_THROWS_AS(pochhammer(2, 0, 6), std::domain_error);

    TruncatedSeries euler_inv = series_inverse(pochhammer(kAllFactors, 1, 40));
    CHECK(euler_inv.coeff(4) == 5);
    for (int n = 0; n <= 40; ++n) CHECK(euler_inv.coeff(n) == partition_count(n));
}

TEST_CASE("series inversion") {
    int order = 10;
    TruncatedSeries one_minus_q = TruncatedSeries::one(order);
    one_minus_q.mul_one_minus_power(1);
    CHECK(series_inverse(one_minus_q) == geometric(1, order));
    CHECK(series_inverse(TruncatedSeries::one(order)) == TruncatedSeries::one(order));

    for (int shift = 1; shift <= 3; ++shift) {
        TruncatedSeries f = pochhammer(kAllFactors, shift, order);
        CHECK(f * series_inverse(f) == TruncatedSeries::one(order));
    }

    TruncatedSeries no_unit(order);
    no_unit.set_coeff(0, 2);
    CHECK_THROWS_AS(series_inverse(no_unit), std::domain_error);
}

TEST_CASE("gaussian binomials") {
    TruncatedSeries two_one = gaussian_binomial(2, 1, 4);
    CHECK(two_one.coeff(0) == 1);
    CHECK(two_one.coeff(1) == 1);
    CHECK(two_one.coeff(2) == 0);

    CHECK(gaussian_binomial(5, 0, 4) == TruncatedSeries::one(4));

    TruncatedSeries four_two = gaussian_binomial(4, 2, 6);
    CHECK(four_two.coeff(0) == 1);
    CHECK(four_two.coeff(1) == 1);
    CHECK(four_two.coeff(2) == 2);
    CHECK(four_two.coeff(3) == 1);
    CHECK(four_two.coeff(4) == 1);
    CHECK(four_two.coeff(5) == 0);

    CHECK_THROWS_AS(gaussian_binomial(3, 4, 5), std::domain_error);
    CHECK_THROWS_AS(gaussian_binomial(3, -1, 5), std::domain_error);

    // quotient route agrees with the q-Pascal construction
    for (int top = 0; top <= 7; ++top)
        for (int bottom = 0; bottom <= top; ++bottom) {
            int order = 12;
            TruncatedSeries quotient = pochhammer(top, 1, order);
            quotient *= series_inverse(pochhammer(bottom, 1, order));
            quotient *= series_inverse(pochhammer(top - bottom, 1, order));
            CHECK(quotient == gaussian_binomial(top, bottom, order));
        }
}

TEST_CASE("spt generating functions") {
    TruncatedSeries direct = spt_series(40);
    TruncatedSeries alt = spt_series_alt(40);
    CHECK(direct == alt);
    CHECK(direct.coeff(1) == 1);
    CHECK(direct.coeff(2) == 3);
    CHECK(direct.coeff(4) == 10);
    CHECK(direct.coeff(5) == 14);
    for (int n = 1; n <= 40; ++n) CHECK(direct.coeff(n) == to_bigint(spt_weighted(n)));
}

TEST_CASE("net crank series") {
    CHECK(net_crank_series(3, 10).coeff(4) == 1);
    CHECK(net_crank_series(0, 10).coeff(4) == 2);
    for (int m = -6; m <= 6; ++m) {
        TruncatedSeries series = net_crank_series(m, 12);
        int first = std::abs(m) + 1;
        CHECK(series.coeff(first) == 1);
        for (int n = 1; n < first; ++n) CHECK(series.coeff(n) == 0);
    }

    for (int m = -8; m <= 8; ++m) {
        TruncatedSeries series = net_crank_series(m, 24);
        for (int n = 1; n <= 24; ++n)
            CHECK(series.coeff(n) == net_count_recurrence(m, n));
    }
}

TEST_CASE("net crank cells") {
    TruncatedSeries base_cell = net_crank_series_cell(0, 0, 0, 12);
    for (int n = 1; n <= 12; ++n) CHECK(base_cell.coeff(n) == 1);
    CHECK(base_cell.coeff(0) == 0);

    CHECK_THROWS_AS(net_crank_series_cell(0, 1, 2, 10), std::domain_error);
    CHECK(net_crank_series_cell(-3, 1, 0, 10).is_zero());

    // cell sums reassemble the full series
    for (int m : {-2, 0, 1, 3}) {
        int order = 18;
        TruncatedSeries sum(order);
        for (int j = std::max(0, -m); j <= order; ++j)
            for (int h = 0; h <= j; ++h) sum += net_crank_series_cell(m, j, h, order);
        CHECK(sum == net_crank_series(m, order));
    }

    // coefficientwise, each cell counts its own pairs
    for (int m : {-2, -1, 0, 1, 2}) {
        int order = 12;
        std::vector<std::map<std::pair<int, int>, long long>> counted(
            static_cast<std::size_t>(order) + 1);
        for (int n = 1; n <= order; ++n) counted[static_cast<std::size_t>(n)] = pair_cell_counts(m, n);
        for (int j = std::max(0, -m); j <= 4; ++j)
            for (int h = 0; h <= j; ++h) {
                TruncatedSeries cell = net_crank_series_cell(m, j, h, order);
                for (int n = 1; n <= order; ++n) {
                    auto& cells = counted[static_cast<std::size_t>(n)];
                    auto it = cells.find({j, h});
                    long long expected = it == cells.end() ? 0 : it->second;
                    CHECK(cell.coeff(n) == to_bigint(expected));
                }
            }
    }
}
