#pragma once

#include <string>
#include <vector>

#include "sptlab/tables.hpp"

namespace sptlab {

struct VerifyCheck {
    std::string name;
    std::string range;
    bool pass = false;
    std::string counterexample;  // empty iff pass
};

struct VerificationReport {
    std::vector<VerifyCheck> checks;

    bool overall() const {
        for (const VerifyCheck& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct VerifyOptions {
    int max_n = 0;          // 0: every check uses its default range
    int series_order = 40;  // truncation order for the series checks
    int s_partition_cap = kDefaultSPartitionCap;
};

/* Runs one named suite ("gf", "bijections", "congruences", "recurrence",
 * "dyson", "obrien") or "all". Checks come back sorted by name. */
VerificationReport run_suite(const std::string& suite, const VerifyOptions& options = {});

std::string render_report(const VerificationReport& report, Format format);

}  // namespace sptlab
