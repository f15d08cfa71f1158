#pragma once

#include <string>
#include <vector>

#include "erdos/erdos_check.hpp"

namespace erdos {

struct EnumerationReport {
    int n = 0;
    long admissible_classes = 0;
    long erdos_count = 0;
    long shrink_count = 0;
    long negative_count = 0;      // negative entry only
    long outer_excess_count = 0;  // outer-trace excess only
    long both_count = 0;          // negative entry and outer-trace excess
    long simplicial_admissible = 0;
    long simplicial_failures = 0;
    std::vector<ErdosRecord> records;  // sorted by canonical skeleton bits

    long negative_total() const { return negative_count + both_count; }
    long excess_total() const { return outer_excess_count + both_count; }
    long failure_classes() const { return admissible_classes - erdos_count; }

    std::string summary_line() const;  // "n=3 erdos=6 admissible=6"
    std::string stats_table() const;
    std::string summary_json() const;
    std::string csv_row() const;  // matches header "n,count,total"
};

struct EnumerateOptions {
    bool fix_identity = false;
    int workers = 1;
    std::string checkpoint_path;  // resumed if it exists, written as scanning proceeds
    bool allow_n6 = false;
    // Stop after this many newly scanned chunks (negative = run to completion);
    // used to exercise checkpoint resume.
    long stop_after_chunks = -1;
};

struct EnumerationResult {
    bool complete = false;
    EnumerationReport report;
};

// Full pipeline: scan the skeleton bitmask space for canonical class
// representatives, keep the admissible ones, run the per-skeleton candidate
// construction, and classify every class.
EnumerationResult enumerate_erdos(int n, const EnumerateOptions& options = {});

// Records whose nonzero entries are pairwise distinct, sorted by
// (zeros ascending, denominator descending).
std::vector<ErdosRecord> query_distinct_entries(const EnumerationReport& report);

// Record with the maximal lcm-of-entry-denominators; ties broken by
// canonical skeleton key. Throws EmptyReport.
const ErdosRecord& max_denominator(const EnumerationReport& report);

void write_records_jsonl(const EnumerationReport& report, const std::string& path);

// Loads a records file into a query-ready report (records only; class
// counters reflect just the loaded records). Every record is re-verified.
EnumerationReport load_records_jsonl(const std::string& path);

}  // namespace erdos
