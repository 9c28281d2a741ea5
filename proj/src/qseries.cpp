#include "sptlab/qseries.hpp"

namespace sptlab {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("series truncation orders differ");
}

}  // namespace

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other) {
    require_same_order(*this, other);
    for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] += other.coeff(k);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other) {
    require_same_order(*this, other);
    for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] -= other.coeff(k);
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(const TruncatedSeries& other) {
    require_same_order(*this, other);
    std::vector<Bigint> product(coeffs_.size(), Bigint(0));
    for (int i = 0; i <= order_; ++i) {
        if (coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (other.coeff(j) == 0) continue;
            product[static_cast<std::size_t>(i + j)] +=
                coeffs_[static_cast<std::size_t>(i)] * other.coeff(j);
        }
    }
    coeffs_ = std::move(product);
    return *this;
}

TruncatedSeries& TruncatedSeries::scale(const Bigint& factor) {
    for (Bigint& c : coeffs_) c *= factor;
    return *this;
}

TruncatedSeries& TruncatedSeries::mul_one_minus_power(int e) {
    if (e <= 0) throw std::domain_error("factor exponent must be positive");
    for (int k = order_; k >= e; --k)
        coeffs_[static_cast<std::size_t>(k)] -= coeffs_[static_cast<std::size_t>(k - e)];
    return *this;
}

TruncatedSeries TruncatedSeries::shifted(int k) const {
    if (k < 0) throw std::domain_error("shift must be nonnegative");
    TruncatedSeries out(order_);
    for (int i = 0; i + k <= order_; ++i) out.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
    return out;
}

TruncatedSeries series_inverse(const TruncatedSeries& f) {
    const Bigint& head = f.coeff(0);
    if (head != 1 && head != -1)
        throw std::domain_error("series inverse needs constant term 1 or -1");
    TruncatedSeries out(f.order());
    out.set_coeff(0, head);  // 1/head == head for a unit
    for (int n = 1; n <= f.order(); ++n) {
        Bigint acc = 0;
        for (int k = 1; k <= n; ++k) acc += f.coeff(k) * out.coeff(n - k);
        out.set_coeff(n, -head * acc);
    }
    return out;
}

TruncatedSeries pochhammer(int k_terms, int shift, int order) {
    if (shift <= 0) throw std::domain_error("pochhammer shift must be positive");
    if (k_terms < 0 && k_terms != kAllFactors)
        throw std::domain_error("factor count must be nonnegative or kAllFactors");
    TruncatedSeries out = TruncatedSeries::one(order);
    for (int i = 0; k_terms == kAllFactors || i < k_terms; ++i) {
        int e = shift + i;
        if (e > order) break;  // remaining factors are 1 mod q^(order+1)
        out.mul_one_minus_power(e);
    }
    return out;
}

TruncatedSeries geometric(int e, int order) {
    if (e <= 0) throw std::domain_error("geometric exponent must be positive");
    TruncatedSeries out(order);
    for (int k = 0; k <= order; k += e) out.set_coeff(k, 1);
    return out;
}

TruncatedSeries gaussian_binomial(int top, int bottom, int order) {
    if (bottom < 0 || bottom > top)
        throw std::domain_error("gaussian binomial bottom out of range");
    // q-Pascal: [n, k] = [n-1, k-1] + q^k [n-1, k]
    std::vector<TruncatedSeries> row(static_cast<std::size_t>(bottom) + 1, TruncatedSeries(order));
    row[0] = TruncatedSeries::one(order);
    for (int n = 1; n <= top; ++n) {
        for (int k = std::min(n, bottom); k >= 1; --k) {
            TruncatedSeries shifted = row[static_cast<std::size_t>(k)].shifted(k);
            row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] + shifted;
        }
    }
    return row[static_cast<std::size_t>(bottom)];
}

TruncatedSeries spt_series(int order) {
    if (order < 1) throw std::domain_error("series order must be positive");
    TruncatedSeries out(order);
    for (int n = 1; n <= order; ++n) {
        TruncatedSeries denom = pochhammer(kAllFactors, n + 1, order);
        denom.mul_one_minus_power(n);
        denom.mul_one_minus_power(n);
        out += series_inverse(denom).shifted(n);
    }
    return out;
}

TruncatedSeries spt_series_alt(int order) {
    if (order < 1) throw std::domain_error("series order must be positive");
    TruncatedSeries out(order);
    for (int n = 1; n <= order; ++n) {
        TruncatedSeries tail = pochhammer(kAllFactors, n + 1, order);
        TruncatedSeries inv_full = series_inverse(pochhammer(kAllFactors, n, order));
        out += (tail * inv_full * inv_full).shifted(n);
    }
    return out;
}

namespace {

// (m+j)j for the rectangle, j for the row under it, h^2 + h for the tail
// square and the first column of beta's block, and j+m+1 for beta's base part
long long cell_base_exponent(int m, int j, int h) {
    return static_cast<long long>(j) * j + static_cast<long long>(m) * j + 2LL * j + m + 1 +
           static_cast<long long>(h) * h + h;
}

}  // namespace

TruncatedSeries net_crank_series_cell(int m, int j, int h, int order) {
    if (h < 0 || h > j) throw std::domain_error("cell tail side must satisfy 0 <= h <= j");
    TruncatedSeries zero(order);
    if (j < -m) return zero;  // no alpha has an m-Durfee width below -m
    long long exponent = cell_base_exponent(m, j, h);
    if (exponent > order) return zero;
    int rect_rows = j + m;
    int beta_part = j + m + 1 + h;
    TruncatedSeries cell = TruncatedSeries::monomial(order, static_cast<int>(exponent));
    cell *= gaussian_binomial(j, h, order);
    cell *= series_inverse(pochhammer(rect_rows, 1, order));
    cell *= series_inverse(pochhammer(h, 1, order));
    cell *= geometric(beta_part, order);
    return cell;
}

TruncatedSeries net_crank_series(int m, int order) {
    if (order < 1) throw std::domain_error("series order must be positive");
    TruncatedSeries out(order);
    for (int j = std::max(0, -m);; ++j) {
        if (cell_base_exponent(m, j, 0) > order) break;
        for (int h = 0; h <= j; ++h) {
            if (cell_base_exponent(m, j, h) > order) break;
            out += net_crank_series_cell(m, j, h, order);
        }
    }
    return out;
}

}  // namespace sptlab
