#pragma once

#include <string>
#include <vector>

#include "sptlab/crank_bijections.hpp"
#include "sptlab/doubly_marked.hpp"
#include "sptlab/spt_objects.hpp"

namespace sptlab {

enum class Format { tsv, json, pretty };

Format parse_format(const std::string& name);

/* Catalog table "2.1": the signed S-partitions of 4 next to the doubly
 * marked partitions of 4, both listed by descending crank. */
struct SignedTableRow {
    SPartition sp;
    int sign;
    int crank;
};
struct MarkingTableRow {
    ColumnMarked dmp;
    int crank;
};
std::vector<SignedTableRow> table21_s_partitions();
std::vector<MarkingTableRow> table21_doubly_marked();

/* Catalog tables "3.1" and "3.2": every marked partition of n with its doubly
 * marked image, the crank, and the crank mod the modulus; n = 4 with modulus
 * 5 and n = 5 with modulus 7. Rows follow marked-partition enumeration
 * order. */
struct MapTableRow {
    MarkedPartition marked;
    ColumnMarked dmp;
    int crank;
    int residue;
};
std::vector<MapTableRow> marked_map_table(int n, int modulus);

// ids: "2.1", "3.1", "3.2"; throws std::domain_error for anything else
std::string render_table(const std::string& id, Format format);

std::string render_classes(const CrankClassReport& report, Format format);

}  // namespace sptlab
