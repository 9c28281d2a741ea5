#include "sptlab/doubly_marked.hpp"

#include <stdexcept>

namespace sptlab {

MarkClass classify(const ColumnMarked& cm) {
    const Partition& lam = cm.base;
    if (lam.empty() || cm.s < 1 || cm.t < 1) return MarkClass::invalid;
    if (cm.s > durfee_side(lam) || cm.t > lam.part(1)) return MarkClass::invalid;
    if (cm.t < cm.s) return MarkClass::column_only;
    Partition conj = conjugate(lam);
    return conj.part(cm.s) == conj.part(cm.t) ? MarkClass::doubly_marked
                                              : MarkClass::column_only;
}

bool is_doubly_marked(const ColumnMarked& cm) {
    return classify(cm) == MarkClass::doubly_marked;
}

int crank_row(const ColumnMarked& cm) {
    if (!is_doubly_marked(cm)) throw std::domain_error("not a doubly marked partition");
    return conjugate(cm.base).part(cm.s) - cm.s + 1;
}

int spt_crank(const ColumnMarked& cm) {
    int g = crank_row(cm);
    return g - cm.base.part(g) + cm.t - cm.s;
}

std::vector<ColumnMarked> enumerate_doubly_marked(int n) {
    if (n < 1) throw std::domain_error("doubly marked partitions need a positive weight");
    std::vector<ColumnMarked> out;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        Partition base(parts);
        Partition conj = conjugate(base);
        int dside = durfee_side(base);
        for (int s = 1; s <= dside; ++s)
            for (int t = s; t <= base.part(1); ++t)
                if (conj.part(s) == conj.part(t)) out.push_back({base, s, t});
    });
    return out;
}

namespace {

/* For a fixed base and column s, the admissible t form the run s..p where p
 * is the last column with the same height; the cranks over that run are
 * consecutive integers starting at g - base_g. */
void count_base(const Partition& base, std::vector<long long>& acc, int offset) {
    Partition conj = conjugate(base);
    int dside = durfee_side(base);
    for (int s = 1; s <= dside; ++s) {
        int height = conj.part(s);
        int p = s;
        while (conj.part_or_zero(p + 1) == height) ++p;
        int g = height - s + 1;
        int first_crank = g - base.part(g);
        for (int t = s; t <= p; ++t)
            ++acc[static_cast<std::size_t>(first_crank + (t - s) + offset)];
    }
}

}  // namespace

NetCrankTable doubly_marked_crank_counts(int n) {
    if (n < 1) throw std::domain_error("doubly marked partitions need a positive weight");
    std::vector<long long> acc(static_cast<std::size_t>(2 * n - 1), 0);
#pragma omp parallel
    {
        std::vector<long long> local(acc.size(), 0);
#pragma omp for schedule(dynamic) nowait
        for (int first = 1; first <= n; ++first)
            for_each_partition_first(n, first, [&](const std::vector<int>& parts) {
                count_base(Partition(parts), local, n - 1);
            });
#pragma omp critical
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += local[i];
    }
    NetCrankTable table;
    table.n = n;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i] != 0) table.counts[static_cast<int>(i) - (n - 1)] = acc[i];
    return table;
}

NetCrankTable doubly_marked_crank_counts_serial(int n) {
    if (n < 1) throw std::domain_error("doubly marked partitions need a positive weight");
    NetCrankTable table;
    table.n = n;
    for (const ColumnMarked& cm : enumerate_doubly_marked(n)) ++table.counts[spt_crank(cm)];
    return table;
}

bool is_rectangular(const Partition& beta) {
    return beta.empty() || beta.part(1) == beta.part(beta.length());
}

PartitionPair to_pair(const ColumnMarked& cm) {
    if (!is_doubly_marked(cm)) throw std::domain_error("not a doubly marked partition");
    Partition conj = conjugate(cm.base);
    int height = conj.part(cm.s);
    int width = cm.t - cm.s + 1;
    std::vector<int> alpha;
    alpha.reserve(static_cast<std::size_t>(cm.base.length()));
    for (int i = 1; i <= cm.base.length(); ++i)
        alpha.push_back(i <= height ? cm.base.part(i) - width : cm.base.part(i));
    return {Partition(std::move(alpha)), Partition(std::vector<int>(static_cast<std::size_t>(width), height))};
}

int tail_square_side(const Partition& alpha, int j, int m) {
    int h = 0;
    while (alpha.part_or_zero(j + m + 1 + (h + 1)) >= h + 1) ++h;
    return h;
}

bool in_pair_image(const PartitionPair& pair, int m) {
    if (pair.beta.empty() || !is_rectangular(pair.beta)) return false;
    if (!rank_set_contains(pair.alpha, m)) return false;
    int j = m_durfee_width(pair.alpha, m);
    int h = tail_square_side(pair.alpha, j, m);
    return pair.beta.part(1) == j + m + 1 + h;
}

ColumnMarked from_pair(const PartitionPair& pair, int m) {
    if (!in_pair_image(pair, m)) throw std::domain_error("pair is not in the crank-m image set");
    int j = m_durfee_width(pair.alpha, m);
    int h = tail_square_side(pair.alpha, j, m);
    int rows = pair.beta.length();
    int widen = pair.beta.part(1);
    std::vector<int> lam;
    for (int i = 1; i <= widen; ++i) lam.push_back(pair.alpha.part_or_zero(i) + rows);
    for (int i = widen + 1; i <= pair.alpha.length(); ++i) lam.push_back(pair.alpha.part(i));
    ColumnMarked out{Partition(std::move(lam)), h + 1, h + rows};
    if (!is_doubly_marked(out) || spt_crank(out) != m)
        throw std::logic_error("pair inversion produced a wrong marking");
    return out;
}

std::vector<PartitionPair> enumerate_pairs_with_crank(int m, int n) {
    if (n < 1) throw std::domain_error("pairs need a positive weight");
    std::vector<PartitionPair> out;
    for (int wb = 1; wb <= n; ++wb) {
        for (int side = 1; side <= wb; ++side) {
            if (wb % side != 0) continue;
            Partition beta(std::vector<int>(static_cast<std::size_t>(wb / side), side));
            for_each_partition(n - wb, [&](const std::vector<int>& aparts) {
                PartitionPair pair{Partition(aparts), beta};
                if (in_pair_image(pair, m)) out.push_back(std::move(pair));
            });
        }
    }
    return out;
}

std::map<std::pair<int, int>, long long> pair_cell_counts(int m, int n) {
    std::map<std::pair<int, int>, long long> cells;
    for (const PartitionPair& pair : enumerate_pairs_with_crank(m, n)) {
        int j = m_durfee_width(pair.alpha, m);
        int h = tail_square_side(pair.alpha, j, m);
        ++cells[{j, h}];
    }
    return cells;
}

}  // namespace sptlab
