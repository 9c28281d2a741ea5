#include "sptlab/tables.hpp"

#include <algorithm>

#include "sptlab/json_io.hpp"

namespace sptlab {

Format parse_format(const std::string& name) {
    if (name == "tsv") return Format::tsv;
    if (name == "json") return Format::json;
    if (name == "pretty") return Format::pretty;
    throw std::domain_error("unknown format: " + name);
}

std::vector<SignedTableRow> table21_s_partitions() {
    std::vector<SignedTableRow> rows;
    for_each_s_partition(4, [&](const std::vector<int>& p1, const std::vector<int>& p2,
                                const std::vector<int>& p3) {
        SPartition sp{Partition(p1), Partition(p2), Partition(p3)};
        rows.push_back({sp, sp.sign(), sp.crank()});
    });
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SignedTableRow& a, const SignedTableRow& b) { return a.crank > b.crank; });
    return rows;
}

std::vector<MarkingTableRow> table21_doubly_marked() {
    std::vector<MarkingTableRow> rows;
    for (const ColumnMarked& cm : enumerate_doubly_marked(4)) rows.push_back({cm, spt_crank(cm)});
    std::stable_sort(rows.begin(), rows.end(),
                     [](const MarkingTableRow& a, const MarkingTableRow& b) { return a.crank > b.crank; });
    return rows;
}

std::vector<MapTableRow> marked_map_table(int n, int modulus) {
    std::vector<MapTableRow> rows;
    for (const MarkedPartition& mp : enumerate_marked(n)) {
        ColumnMarked dmp = to_doubly_marked(mp).first;
        int crank = spt_crank(dmp);
        rows.push_back({mp, dmp, crank, canonical_mod(crank, modulus)});
    }
    return rows;
}

namespace {

std::string join_tsv(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += '\t';
        line += cells[i];
    }
    line += '\n';
    return line;
}

std::string render_table21(Format format) {
    auto signed_rows = table21_s_partitions();
    auto marking_rows = table21_doubly_marked();
    if (format == Format::json) {
        Json sparts = Json::array();
        for (const auto& row : signed_rows)
            sparts.push_back(Json{{"s_partition", encode(row.sp)}, {"sign", row.sign}, {"crank", row.crank}});
        Json markings = Json::array();
        for (const auto& row : marking_rows)
            markings.push_back(Json{{"dmp", encode(row.dmp)}, {"crank", row.crank}});
        return Json{{"s_partitions", sparts}, {"doubly_marked", markings}}.dump(2) + "\n";
    }
    std::string out;
    out += join_tsv({"pi1", "pi2", "pi3", "sign", "crank"});
    for (const auto& row : signed_rows)
        out += join_tsv({row.sp.pi1.to_string(), row.sp.pi2.to_string(), row.sp.pi3.to_string(),
                         (row.sign > 0 ? "+1" : "-1"), std::to_string(row.crank)});
    out += '\n';
    out += join_tsv({"lambda", "s", "t", "crank"});
    for (const auto& row : marking_rows)
        out += join_tsv({row.dmp.base.to_string(), std::to_string(row.dmp.s),
                         std::to_string(row.dmp.t), std::to_string(row.crank)});
    if (format == Format::pretty) {
        out.insert(0, "S-partitions of 4 and doubly marked partitions of 4\n\n");
    }
    return out;
}

std::string render_map_table(int n, int modulus, Format format) {
    auto rows = marked_map_table(n, modulus);
    if (format == Format::json) {
        Json out = Json::array();
        for (const auto& row : rows)
            out.push_back(Json{{"marked", encode(row.marked)},
                               {"dmp", encode(row.dmp)},
                               {"crank", row.crank},
                               {"residue", row.residue}});
        return out.dump(2) + "\n";
    }
    std::string out;
    if (format == Format::pretty)
        out += "marked partitions of " + std::to_string(n) + " and their doubly marked images (mod " +
               std::to_string(modulus) + ")\n\n";
    out += join_tsv({"mu", "k", "lambda", "s", "t", "crank", "residue"});
    for (const auto& row : rows)
        out += join_tsv({row.marked.base.to_string(), std::to_string(row.marked.k),
                         row.dmp.base.to_string(), std::to_string(row.dmp.s),
                         std::to_string(row.dmp.t), std::to_string(row.crank),
                         std::to_string(row.residue)});
    return out;
}

}  // namespace

std::string render_table(const std::string& id, Format format) {
    if (id == "2.1") return render_table21(format);
    if (id == "3.1") return render_map_table(4, 5, format);
    if (id == "3.2") return render_map_table(5, 7, format);
    throw std::domain_error("unknown table id: " + id + " (expected 2.1, 3.1 or 3.2)");
}

std::string render_classes(const CrankClassReport& report, Format format) {
    if (format == Format::json) return encode(report).dump(2) + "\n";
    std::string out;
    if (format == Format::pretty) {
        out += "weight " + std::to_string(report.n) + " mod " + std::to_string(report.modulus) + ": sizes [";
        auto sizes = report.sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(sizes[i]);
        }
        out += "]\n\n";
    }
    out += join_tsv({"residue", "mu", "k", "lambda", "s", "t", "crank"});
    for (int residue = 0; residue < report.modulus; ++residue)
        for (const CrankClassEntry& entry : report.classes[static_cast<std::size_t>(residue)])
            out += join_tsv({std::to_string(residue), entry.marked.base.to_string(),
                             std::to_string(entry.marked.k), entry.dmp.base.to_string(),
                             std::to_string(entry.dmp.s), std::to_string(entry.dmp.t),
                             std::to_string(entry.crank)});
    return out;
}

}  // namespace sptlab
