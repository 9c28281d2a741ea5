#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

#include "sptlab/json_io.hpp"
#include "sptlab/qseries.hpp"
#include "sptlab/rank_stats.hpp"
#include "sptlab/verify.hpp"

namespace {

using namespace sptlab;

// exit codes: 0 ok, 1 verification failure, 2 parse error, 3 domain error
constexpr int kExitVerifyFailure = 1;
constexpr int kExitParseError = 2;
constexpr int kExitDomainError = 3;

int default_series_order() {
    if (const char* env = std::getenv("SPTLAB_SERIES_ORDER")) {
        int value = std::atoi(env);
        if (value >= 1) return value;
    }
    return 40;
}

int run_spt(int n, const std::string& method, int s_partition_cap, int series_order) {
    if (method == "weighted") {
        std::cout << spt_weighted(n) << "\n";
    } else if (method == "marked") {
        std::cout << enumerate_marked(n).size() << "\n";
    } else if (method == "s-partitions") {
        std::cout << s_partition_net_counts(n, s_partition_cap).total() << "\n";
    } else if (method == "moments") {
        std::cout << spt_via_moments(n).get_str() << "\n";
    } else if (method == "series") {
        int order = std::max(n, series_order);
        std::cout << spt_series(order).coeff(n).get_str() << "\n";
    } else {
        throw std::domain_error("unknown method: " + method);
    }
    return 0;
}

int run_classes(int n, int modulus, Format format) {
    CrankClassReport report = crank_classes(n, modulus);
    std::cout << render_classes(report, format);
    bool must_be_equal = (modulus == 5 && n % 5 == 4) || (modulus == 7 && n % 7 == 5);
    if (must_be_equal && !report.equal_sizes()) {
        std::cerr << "error: class sizes are unequal where equinumerosity is guaranteed\n";
        return kExitVerifyFailure;
    }
    return 0;
}

int run_map(const std::string& direction, const std::string& payload, bool with_trace,
            Format format) {
    Json input = Json::parse(payload);  // throws Json parse_error with position
    Json output;
    if (direction == "delta") {
        MarkedPartition mp = decode_marked(input);
        auto [dmp, trace] = to_doubly_marked(mp);
        output = encode(dmp);
        if (with_trace) output = Json{{"result", encode(dmp)}, {"trace", encode(trace)}};
    } else if (direction == "lambda") {
        ColumnMarked dmp = decode_column_marked(input);
        auto [mp, trace] = to_marked(dmp);
        output = encode(mp);
        if (with_trace) output = Json{{"result", encode(mp)}, {"trace", encode(trace)}};
    } else {
        throw std::domain_error("unknown direction: " + direction);
    }
    std::cout << (format == Format::pretty ? output.dump(2) : output.dump()) << "\n";
    return 0;
}

int run_verify(const std::string& suite, const VerifyOptions& options, Format format) {
    VerificationReport report = run_suite(suite, options);
    std::cout << render_report(report, format);
    return report.overall() ? 0 : kExitVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact spt-function laboratory: cranks, bijections and q-series checks"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "pretty";
    app.add_option("--format", format_name, "output format: tsv, json or pretty")
        ->check(CLI::IsMember({"tsv", "json", "pretty"}));

    int spt_n = 0;
    std::string method = "weighted";
    int s_partition_cap = sptlab::kDefaultSPartitionCap;
    int series_order = default_series_order();
    CLI::App* spt_cmd = app.add_subcommand("spt", "compute spt(n) by a chosen route");
    spt_cmd->add_option("n", spt_n, "weight")->required();
    spt_cmd->add_option("--method", method, "weighted, marked, s-partitions, moments or series")
        ->check(CLI::IsMember({"weighted", "marked", "s-partitions", "moments", "series"}));
    spt_cmd->add_option("--s-partition-cap", s_partition_cap, "signed enumeration weight cap");
    spt_cmd->add_option("--series-order", series_order, "series truncation order");

    std::string table_id;
    CLI::App* table_cmd = app.add_subcommand("table", "render a catalog table (2.1, 3.1, 3.2)");
    table_cmd->add_option("id", table_id, "table id")->required();

    int classes_n = 0;
    int modulus = 5;
    CLI::App* classes_cmd =
        app.add_subcommand("classes", "bucket marked partitions by crank residue");
    classes_cmd->add_option("n", classes_n, "weight")->required();
    classes_cmd->add_option("--modulus", modulus, "residue modulus");

    std::string direction;
    std::string payload;
    bool with_trace = false;
    CLI::App* map_cmd = app.add_subcommand("map", "apply the marking bijection to a JSON object");
    map_cmd->add_option("direction", direction, "delta (marked -> doubly marked) or lambda (back)")
        ->required()
        ->check(CLI::IsMember({"delta", "lambda"}));
    map_cmd->add_option("object", payload, "JSON input object")->required();
    map_cmd->add_flag("--trace", with_trace, "also emit the visited markings");

    std::string suite = "all";
    int max_n = 0;
    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    verify_cmd->add_option("--suite", suite,
                           "all, gf, bijections, congruences, recurrence, dyson or obrien")
        ->check(CLI::IsMember({"all", "gf", "bijections", "congruences", "recurrence", "dyson",
                               "obrien"}));
    verify_cmd->add_option("--max-n", max_n, "override the default weight ranges");
    verify_cmd->add_option("--series-order", series_order, "series truncation order");
    verify_cmd->add_option("--s-partition-cap", s_partition_cap, "signed enumeration weight cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitParseError;
    }

    try {
        sptlab::Format format = sptlab::parse_format(format_name);
        if (spt_cmd->parsed()) return run_spt(spt_n, method, s_partition_cap, series_order);
        if (table_cmd->parsed()) {
            std::cout << sptlab::render_table(table_id, format);
            return 0;
        }
        if (classes_cmd->parsed()) return run_classes(classes_n, modulus, format);
        if (map_cmd->parsed()) return run_map(direction, payload, with_trace, format);
        if (verify_cmd->parsed()) {
            sptlab::VerifyOptions options;
            options.max_n = max_n;
            options.series_order = series_order;
            options.s_partition_cap = s_partition_cap;
            return run_verify(suite, options, format);
        }
    } catch (const sptlab::Json::exception& e) {
        // parse errors carry the byte position; schema violations the key
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const sptlab::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return 0;
}
