#include "sptlab/crank_bijections.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace sptlab {

bool can_unfold(const ColumnMarked& cm) {
    if (classify(cm) == MarkClass::invalid) return false;
    if (cm.s != 1) return true;
    Partition conj = conjugate(cm.base);
    // conj_b >= conj_last always holds for b <= base_1, so this tests equality
    return conj.part(cm.t) > conj.part(conj.length());
}

ColumnMarked fold_step(const ColumnMarked& cm) {
    if (classify(cm) != MarkClass::column_only)
        throw std::domain_error("fold_step needs a column marking that is not doubly marked");
    const Partition& lam = cm.base;
    Partition conj = conjugate(lam);
    int block_height = conj.part(cm.s);
    int p = cm.s;
    while (conj.part_or_zero(p + 1) == block_height) ++p;
    int block_width = p - cm.s + 1;

    // remove the block's columns from the rows that cross it
    std::vector<int> body_parts;
    body_parts.reserve(static_cast<std::size_t>(lam.length()));
    for (int i = 1; i <= lam.length(); ++i)
        body_parts.push_back(i <= block_height ? lam.part(i) - block_width : lam.part(i));
    Partition body(std::move(body_parts));

    int a = 1;
    while (body.part_or_zero(a) >= block_height) ++a;

    // reinsert the block as rows of length block_height before row a
    std::vector<int> folded;
    folded.reserve(static_cast<std::size_t>(body.length() + block_width));
    for (int i = 1; i < a; ++i) folded.push_back(body.part(i));
    folded.insert(folded.end(), static_cast<std::size_t>(block_width), block_height);
    for (int i = a; i <= body.length(); ++i) folded.push_back(body.part(i));

    int b = cm.t < cm.s ? cm.t : cm.t - block_width;
    return {Partition(std::move(folded)), a, b};
}

ColumnMarked unfold_step(const ColumnMarked& cm) {
    if (!can_unfold(cm)) throw std::domain_error("unfold_step needs an unfoldable marking");
    const Partition& mu = cm.base;
    int row_len = mu.part(cm.s);
    int r = cm.s;
    while (mu.part_or_zero(r + 1) == row_len) ++r;
    int block_rows = r - cm.s + 1;

    std::vector<int> body_parts;
    body_parts.reserve(static_cast<std::size_t>(mu.length() - block_rows));
    for (int i = 1; i < cm.s; ++i) body_parts.push_back(mu.part(i));
    for (int i = r + 1; i <= mu.length(); ++i) body_parts.push_back(mu.part(i));
    Partition body(std::move(body_parts));

    Partition body_conj = conjugate(body);
    int s = 1;
    while (body_conj.part_or_zero(s) >= row_len) ++s;

    // widen the first row_len rows by the removed block, padding with new rows
    std::vector<int> unfolded;
    unfolded.reserve(static_cast<std::size_t>(std::max(row_len, body.length())));
    for (int i = 1; i <= row_len; ++i) unfolded.push_back(body.part_or_zero(i) + block_rows);
    for (int i = row_len + 1; i <= body.length(); ++i) unfolded.push_back(body.part(i));

    int t = cm.t < s ? cm.t : cm.t + block_rows;
    ColumnMarked out{Partition(std::move(unfolded)), s, t};
    if (classify(out) != MarkClass::column_only)
        throw std::logic_error("unfold_step left the column-only set");
    return out;
}

long long column_marking_bound(int n) {
    static std::mutex mu;
    static std::map<int, long long> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    long long bound = 1;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        Partition lam(parts);
        bound += static_cast<long long>(durfee_side(lam)) * lam.part(1);
    });
    cache[n] = bound;
    return bound;
}

std::pair<ColumnMarked, OrbitTrace> to_doubly_marked(const MarkedPartition& mp) {
    ColumnMarked cur{conjugate(mp.base), 1, mp.k};
    OrbitTrace trace;
    trace.steps.push_back(cur);
    long long cap = column_marking_bound(mp.base.weight());
    while (classify(cur) == MarkClass::column_only) {
        if (--cap < 0) throw std::logic_error("fold iteration exceeded the column-marking bound");
        cur = fold_step(cur);
        trace.steps.push_back(cur);
    }
    if (classify(cur) != MarkClass::doubly_marked)
        throw std::logic_error("fold iteration left the column-marking set");
    return {cur, std::move(trace)};
}

std::pair<MarkedPartition, OrbitTrace> to_marked(const ColumnMarked& dmp) {
    if (!is_doubly_marked(dmp)) throw std::domain_error("not a doubly marked partition");
    ColumnMarked cur = dmp;
    OrbitTrace trace;
    trace.steps.push_back(cur);
    long long cap = column_marking_bound(dmp.base.weight());
    while (can_unfold(cur)) {
        if (--cap < 0) throw std::logic_error("unfold iteration exceeded the column-marking bound");
        cur = unfold_step(cur);
        trace.steps.push_back(cur);
    }
    return {MarkedPartition(conjugate(cur.base), cur.t), std::move(trace)};
}

namespace {

CrankClassReport bucket_classes(int n, int modulus,
                                const std::vector<MarkedPartition>& marked,
                                const std::vector<std::pair<ColumnMarked, int>>& images) {
    CrankClassReport report;
    report.n = n;
    report.modulus = modulus;
    report.classes.assign(static_cast<std::size_t>(modulus), {});
    for (std::size_t i = 0; i < marked.size(); ++i) {
        int residue = canonical_mod(images[i].second, modulus);
        report.classes[static_cast<std::size_t>(residue)].push_back(
            {marked[i], images[i].first, images[i].second});
    }
    return report;
}

}  // namespace

CrankClassReport crank_classes(int n, int modulus) {
    if (n < 1) throw std::domain_error("crank classes need a positive weight");
    if (modulus < 1) throw std::domain_error("modulus must be positive");
    std::vector<MarkedPartition> marked = enumerate_marked(n);
    std::vector<std::pair<ColumnMarked, int>> images(
        marked.size(), {ColumnMarked{Partition{}, 0, 0}, 0});
    column_marking_bound(n);  // warm the cache outside the parallel region
    bool failed = false;
#pragma omp parallel for schedule(dynamic, 16)
    for (std::size_t i = 0; i < marked.size(); ++i) {
        try {
            ColumnMarked dmp = to_doubly_marked(marked[i]).first;
            images[i] = {dmp, spt_crank(dmp)};
        } catch (...) {
#pragma omp critical
            failed = true;
        }
    }
    if (failed) throw std::logic_error("fold iteration failed while bucketing crank classes");
    return bucket_classes(n, modulus, marked, images);
}

CrankClassReport crank_classes_serial(int n, int modulus) {
    if (n < 1) throw std::domain_error("crank classes need a positive weight");
    if (modulus < 1) throw std::domain_error("modulus must be positive");
    std::vector<MarkedPartition> marked = enumerate_marked(n);
    std::vector<std::pair<ColumnMarked, int>> images;
    images.reserve(marked.size());
    for (const MarkedPartition& mp : marked) {
        ColumnMarked dmp = to_doubly_marked(mp).first;
        images.emplace_back(dmp, spt_crank(dmp));
    }
    return bucket_classes(n, modulus, marked, images);
}

}  // namespace sptlab
