#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sptlab/bigint.hpp"

namespace sptlab {

/* Formal power series in q over exact integers, truncated at a fixed order:
 * coefficients for q^0 .. q^N. All arithmetic stays closed at the order;
 * multiplication discards higher degrees. Operands must share the order. */
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order) : order_(order) {
        if (order < 0) throw std::domain_error("series order must be nonnegative");
        coeffs_.assign(static_cast<std::size_t>(order) + 1, Bigint(0));
    }

    static TruncatedSeries one(int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = 1;
        return s;
    }
    static TruncatedSeries monomial(int order, int exponent, const Bigint& coeff = Bigint(1)) {
        TruncatedSeries s(order);
        if (exponent < 0) throw std::domain_error("monomial exponent must be nonnegative");
        if (exponent <= order) s.coeffs_[static_cast<std::size_t>(exponent)] = coeff;
        return s;
    }

    int order() const { return order_; }
    const Bigint& coeff(int k) const {
        if (k < 0 || k > order_) throw std::out_of_range("series coefficient index");
        return coeffs_[static_cast<std::size_t>(k)];
    }
    void set_coeff(int k, const Bigint& v) {
        if (k < 0 || k > order_) throw std::out_of_range("series coefficient index");
        coeffs_[static_cast<std::size_t>(k)] = v;
    }
    const std::vector<Bigint>& coeffs() const { return coeffs_; }

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    TruncatedSeries& operator*=(const TruncatedSeries& other);
    TruncatedSeries& scale(const Bigint& factor);

    // in-place multiplication by (1 - q^e); a no-op for e > order
    TruncatedSeries& mul_one_minus_power(int e);

    // multiplication by q^k, dropping what leaves the window
    TruncatedSeries shifted(int k) const;

    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(TruncatedSeries a, const TruncatedSeries& b) { return a *= b; }

    bool operator==(const TruncatedSeries&) const = default;

    bool is_zero() const {
        for (const Bigint& c : coeffs_)
            if (c != 0) return false;
        return true;
    }

private:
    int order_;
    std::vector<Bigint> coeffs_;
};

// Multiplicative inverse; the constant term must be 1 or -1.
TruncatedSeries series_inverse(const TruncatedSeries& f);

// k_terms sentinel: keep multiplying factors until they fall past the order.
inline constexpr int kAllFactors = -1;

/* (q^shift; q)_{k_terms} = prod (1 - q^{shift+i}), i = 0 .. k_terms-1. With
 * k_terms = kAllFactors the product is exact at the truncation order because
 * later factors are congruent to 1. */
TruncatedSeries pochhammer(int k_terms, int shift, int order);

// 1 / (1 - q^e) expanded as a geometric series.
TruncatedSeries geometric(int e, int order);

/* Gaussian binomial [top choose bottom]: the generating polynomial of
 * partitions fitting in a bottom x (top-bottom) box, truncated at the order. */
TruncatedSeries gaussian_binomial(int top, int bottom, int order);

// sum_{n>=1} q^n / ((1-q^n)^2 (q^{n+1};q)_inf)
TruncatedSeries spt_series(int order);

// sum_{n>=1} q^n (q^{n+1};q)_inf / (q^n;q)_inf^2; equals spt_series termwise
TruncatedSeries spt_series_alt(int order);

/* Generating function of the doubly-marked counts at crank m (equivalently
 * the net S-partition counts), assembled cell by cell. */
TruncatedSeries net_crank_series(int m, int order);

/* One (j, h) cell of net_crank_series: the pairs whose m-Durfee rectangle of
 * alpha has width j and whose tail square has side h. Cells with j < -m are
 * empty. Requires 0 <= h <= j. */
TruncatedSeries net_crank_series_cell(int m, int j, int h, int order);

}  // namespace sptlab
