#include "sptlab/json_io.hpp"

namespace sptlab {

Json encode(const Partition& lam) { return Json(lam.parts()); }

Json encode(const MarkedPartition& mp) {
    return Json{{"parts", mp.base.parts()}, {"k", mp.k}};
}

Json encode(const SPartition& sp) {
    return Json{{"pi1", sp.pi1.parts()}, {"pi2", sp.pi2.parts()}, {"pi3", sp.pi3.parts()}};
}

Json encode(const ColumnMarked& cm) {
    return Json{{"parts", cm.base.parts()}, {"s", cm.s}, {"t", cm.t}};
}

Json encode(const PartitionPair& pair) {
    return Json{{"alpha", pair.alpha.parts()}, {"beta", pair.beta.parts()}};
}

namespace {

Json encode_counts(int n, const std::map<int, long long>& counts) {
    Json by_key = Json::object();
    for (const auto& [m, c] : counts) by_key[std::to_string(m)] = c;
    return Json{{"n", n}, {"counts", by_key}};
}

}  // namespace

Json encode(const RankTable& table) { return encode_counts(table.n, table.counts); }

Json encode(const NetCrankTable& table) { return encode_counts(table.n, table.counts); }

Json encode(const OrbitTrace& trace) {
    Json steps = Json::array();
    for (const ColumnMarked& cm : trace.steps) steps.push_back(encode(cm));
    return Json{{"steps", steps}};
}

Json encode(const CrankClassReport& report) {
    Json classes = Json::object();
    for (int residue = 0; residue < report.modulus; ++residue) {
        Json members = Json::array();
        for (const CrankClassEntry& entry : report.classes[static_cast<std::size_t>(residue)])
            members.push_back(Json{{"marked", encode(entry.marked)},
                                   {"dmp", encode(entry.dmp)},
                                   {"crank", entry.crank}});
        classes[std::to_string(residue)] = members;
    }
    return Json{{"n", report.n}, {"modulus", report.modulus}, {"classes", classes}};
}

Json encode(const TruncatedSeries& series) {
    Json coeffs = Json::array();
    for (int k = 0; k <= series.order(); ++k) coeffs.push_back(to_string(series.coeff(k)));
    return Json{{"order", series.order()}, {"coeffs", coeffs}};
}

Partition decode_partition(const Json& j) {
    return Partition(j.get<std::vector<int>>());
}

MarkedPartition decode_marked(const Json& j) {
    return MarkedPartition(decode_partition(j.at("parts")), j.at("k").get<int>());
}

ColumnMarked decode_column_marked(const Json& j) {
    return ColumnMarked{decode_partition(j.at("parts")), j.at("s").get<int>(),
                        j.at("t").get<int>()};
}

PartitionPair decode_pair(const Json& j) {
    PartitionPair pair{decode_partition(j.at("alpha")), decode_partition(j.at("beta"))};
    if (pair.beta.empty() || !is_rectangular(pair.beta))
        throw std::invalid_argument("beta must be nonempty with equal parts");
    return pair;
}

}  // namespace sptlab
