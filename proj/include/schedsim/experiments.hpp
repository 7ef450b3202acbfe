#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schedsim/metrics.hpp"
#include "schedsim/workload.hpp"

namespace schedsim {

/// One (sample, policy) cell of the comparison matrix.
struct ComparisonRow {
    std::size_t sample_index = 0;
    std::string policy;           // "an", "rr", "median-rr", ...
    std::optional<Time> quantum;  // set for rr rows
    Time avg_turnaround;
    Time avg_waiting;
    std::size_t switches = 0;     // slice-boundary convention

    friend bool operator==(const ComparisonRow&, const ComparisonRow&) = default;
};

/// AN-vs-RR statistics for one swept quantum. Improvements and successes are
/// percentages; mean_diff_* is the plain mean of per-sample differences
/// (AN - RR) in milliseconds, negative when AN is lower.
struct QuantumStats {
    Time quantum;
    Rational improvement_tat;
    Rational improvement_wt;
    Rational success_tat;
    Rational success_wt;
    Rational mean_diff_tat;
    Rational mean_diff_wt;

    friend bool operator==(const QuantumStats&, const QuantumStats&) = default;
};

struct ComparisonReport {
    std::vector<Time> quanta;
    std::vector<ComparisonRow> per_sample; // grouped by sample, input order
    std::vector<QuantumStats> stats;       // one entry per quantum

    friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

/// Simulates every sample under AN, under fixed RR once per quantum, and
/// under any extra policies, then fills the matrix and the per-quantum
/// statistics. Simulation errors are rethrown annotated with the sample name.
ComparisonReport run_comparison(const std::vector<Workload>& samples,
                                const std::vector<Time>& quanta,
                                const std::vector<PolicyDescriptor>& extra_policies = {});

/// 100 * mean_i((base_i - alt_i) / base_i): mean per-sample relative
/// reduction; positive when alt is lower. Throws LengthMismatch /
/// NonPositiveBase.
Rational improvement_percent(const std::vector<Rational>& base, const std::vector<Rational>& alt);

/// 100 * |{i : alt_i < base_i}| / n. Ties are not successes.
Rational success_percent(const std::vector<Rational>& base, const std::vector<Rational>& alt);

/// mean_i(alt_i - base_i): a signed difference in the metric's own unit.
Rational mean_difference(const std::vector<Rational>& base, const std::vector<Rational>& alt);

struct ReportFiles {
    std::string series;  // sample_index,policy,quantum,avg_tat,avg_wt,switches
    std::string summary; // quantum,improvement_tat,improvement_wt,success_tat,success_wt
};

/// Renders the report. format is "csv" or "tsv" (UnknownFormat otherwise);
/// include_literal appends mean_diff_tat/mean_diff_wt columns to the summary.
/// Numbers print as exact decimals when terminating, else as "p/q".
ReportFiles emit_report(const ComparisonReport& report, std::string_view format,
                        bool include_literal = false);

/// Writes series.<ext> and summary.<ext> into out_dir (created if missing).
/// Returns the two paths written.
std::pair<std::filesystem::path, std::filesystem::path>
write_report_files(const ComparisonReport& report, std::string_view format,
                   const std::filesystem::path& out_dir, bool include_literal = false);

} // namespace schedsim
