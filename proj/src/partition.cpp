#include "sptlab/partition.hpp"

namespace sptlab {

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    out += ')';
    return out;
}

SmallestPart smallest_part(const Partition& lam) {
    if (lam.empty()) return SmallestPart::infinity();
    return SmallestPart::of(lam.part(lam.length()));
}

Partition conjugate(const Partition& lam) {
    if (lam.empty()) return Partition{};
    std::vector<int> cols(static_cast<std::size_t>(lam.part(1)));
    int rows = lam.length();
    for (int j = 1; j <= lam.part(1); ++j) {
        while (rows > 0 && lam.part(rows) < j) --rows;
        cols[static_cast<std::size_t>(j) - 1] = rows;
    }
    return Partition(std::move(cols));
}

int durfee_side(const Partition& lam) {
    int d = 0;
    while (lam.part_or_zero(d + 1) >= d + 1) ++d;
    return d;
}

int m_durfee_width(const Partition& lam, int m) {
    // every j with m + j <= 0 is vacuously admissible
    int j = std::max(0, -m);
    while (lam.part_or_zero(m + j + 1) >= j + 1) ++j;
    return j;
}

int rank(const Partition& lam) {
    if (lam.empty()) throw std::domain_error("rank of the empty partition is undefined");
    return lam.part(1) - lam.length();
}

bool rank_set_contains(const Partition& lam, int m) {
    if (m >= lam.length()) return true;
    // entries i - lam_{i+1} are strictly increasing in i
    for (int i = 0; i < lam.length(); ++i) {
        int entry = i - lam.part(i + 1);
        if (entry == m) return true;
        if (entry > m) return false;
    }
    return false;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        out.push_back(Partition(parts));
    });
    return out;
}

}  // namespace sptlab
