#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "propcount/rational.hpp"

namespace propcount::harness {

// Parameter bounds for a suite run; unset fields fall back to the
// suite's default ranges.
struct SuiteRanges {
    std::optional<int> n_max;
    std::optional<int> k;
    std::optional<int> c;
    std::optional<int> order;
};

struct VerificationRecord {
    std::string suite;
    std::map<std::string, std::string> params;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    double elapsed_ms = 0.0;

    std::string key() const;
};

// The verification suites, in canonical order ("all" runs every one).
const std::vector<std::string>& suite_names();

// Runs one suite (or "all") over the given ranges; never stops at the
// first failure. Unknown names and out-of-range parameters throw.
std::vector<VerificationRecord> run_suite(const std::string& name,
                                          const SuiteRanges& ranges = {});

bool all_pass(const std::vector<VerificationRecord>& records);

enum class EmitFormat { Table, Json, Csv };

EmitFormat parse_format(const std::string& name);

// Records are emitted sorted by key; elapsed times are included but are
// no part of any comparison.
void emit(std::vector<VerificationRecord> records, EmitFormat format, std::ostream& out);

}  // namespace propcount::harness
