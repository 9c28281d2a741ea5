#pragma once

#include <json.hpp>

#include "sptlab/crank_bijections.hpp"
#include "sptlab/doubly_marked.hpp"
#include "sptlab/qseries.hpp"
#include "sptlab/rank_stats.hpp"
#include "sptlab/spt_objects.hpp"

namespace sptlab {

using Json = nlohmann::json;

// partitions encode as plain arrays: (3,2,2) -> [3,2,2], () -> []
Json encode(const Partition& lam);
Json encode(const MarkedPartition& mp);       // {"parts": [...], "k": int}
Json encode(const SPartition& sp);            // {"pi1": [...], "pi2": [...], "pi3": [...]}
Json encode(const ColumnMarked& cm);          // {"parts": [...], "s": int, "t": int}
Json encode(const PartitionPair& pair);       // {"alpha": [...], "beta": [...]}
Json encode(const RankTable& table);          // {"n": int, "counts": {"m": count}}
Json encode(const NetCrankTable& table);      // mirrors RankTable
Json encode(const OrbitTrace& trace);         // {"steps": [{...}, ...]}
Json encode(const CrankClassReport& report);  // {"n":..., "modulus":..., "classes": {...}}
Json encode(const TruncatedSeries& series);   // {"order": N, "coeffs": ["...", ...]}

/* Decoders validate both the schema and the domain invariants; schema errors
 * surface as Json exceptions, domain errors as std::invalid_argument. */
Partition decode_partition(const Json& j);
MarkedPartition decode_marked(const Json& j);
ColumnMarked decode_column_marked(const Json& j);
PartitionPair decode_pair(const Json& j);

}  // namespace sptlab
