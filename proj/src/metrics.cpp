#include "schedsim/metrics.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "schedsim/errors.hpp"

namespace schedsim {

std::string_view to_string(CsConvention convention) {
    return convention == CsConvention::SliceBoundary ? "slice-boundary" : "process-change";
}

std::optional<CsConvention> parse_cs_convention(std::string_view name) {
    if (name == "slice-boundary") return CsConvention::SliceBoundary;
    if (name == "process-change") return CsConvention::ProcessChange;
    return std::nullopt;
}

RunMetrics compute_metrics(const Trace& t) {
    const std::vector<ProcessSpec>& procs = t.workload.processes;
    const std::size_t n = procs.size();
    if (n == 0) throw ValidationError("EmptyWorkload: trace has no processes");

    std::unordered_map<std::string_view, std::size_t> index;
    index.reserve(n);
    for (std::size_t i = 0; i < n; ++i) index.emplace(procs[i].id, i);

    std::vector<std::optional<Time>> completion(n);
    std::vector<std::optional<Time>> first_start(n);
    std::vector<std::size_t> slice_count(n, 0);

    for (const Slice& s : t.slices) {
        auto it = index.find(s.pid);
        if (it == index.end())
            throw ValidationError("IncompleteTrace: slice for unknown process '" + s.pid + "'");
        const std::size_t i = it->second;
        ++slice_count[i];
        if (!first_start[i]) first_start[i] = s.start;
        if (s.reason == SliceReason::Completed) {
            if (completion[i])
                throw ValidationError("IncompleteTrace: process '" + s.pid +
                                      "' completed more than once");
            completion[i] = s.end;
        }
    }

    RunMetrics m;
    m.per_process.reserve(n);
    Time tat_sum;
    Time wt_sum;
    for (std::size_t i = 0; i < n; ++i) {
        if (!completion[i])
            throw ValidationError("IncompleteTrace: process '" + procs[i].id +
                                  "' never completed");
        const Time turnaround = *completion[i] - procs[i].arrival;
        const Time waiting = turnaround - procs[i].burst;
        const Time response = *first_start[i] - procs[i].arrival;
        tat_sum += turnaround;
        wt_sum += waiting;
        m.per_process.push_back({procs[i].id, *completion[i], turnaround, waiting, response});
    }
    m.avg_turnaround = tat_sum.divided_by(n);
    m.avg_waiting = wt_sum.divided_by(n);

    m.switches_slice_boundary = t.slices.empty() ? 0 : t.slices.size() - 1;
    for (std::size_t k = 1; k < t.slices.size(); ++k)
        if (t.slices[k].pid != t.slices[k - 1].pid) ++m.switches_process_change;

    // K_r = processes with at least r slices; the profile ends at the last
    // nonzero K_r. q_t is computed from the profile, independently of the
    // slice count above.
    const std::size_t max_rounds = *std::max_element(slice_count.begin(), slice_count.end());
    std::size_t total = 0;
    for (std::size_t r = 1; r <= max_rounds; ++r) {
        const std::size_t k_r = static_cast<std::size_t>(
            std::count_if(slice_count.begin(), slice_count.end(),
                          [r](std::size_t c) { return c >= r; }));
        m.rounds.push_back(k_r);
        total += k_r;
    }
    m.q_t = total - 1;

    return m;
}

} // namespace schedsim
