#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "schedsim/trace.hpp"

namespace schedsim {

/// Which slice boundaries count as a context switch: every boundary, or only
/// those where the occupying process changes.
enum class CsConvention { SliceBoundary, ProcessChange };

std::string_view to_string(CsConvention convention);
std::optional<CsConvention> parse_cs_convention(std::string_view name);

struct ProcessMetrics {
    std::string pid;
    Time completion;
    Time turnaround; // completion - arrival
    Time waiting;    // turnaround - burst
    Time response;   // first dispatch - arrival

    friend bool operator==(const ProcessMetrics&, const ProcessMetrics&) = default;
};

struct RunMetrics {
    std::vector<ProcessMetrics> per_process; // workload input order
    Time avg_turnaround;
    Time avg_waiting;
    std::size_t switches_slice_boundary = 0; // slices - 1
    std::size_t switches_process_change = 0; // adjacent slice pairs with differing pids
    std::vector<std::size_t> rounds;         // rounds[r-1] = processes with >= r slices
    std::size_t q_t = 0;                     // sum of rounds - 1

    std::size_t switches(CsConvention convention) const {
        return convention == CsConvention::SliceBoundary ? switches_slice_boundary
                                                         : switches_process_change;
    }

    friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

/// Per-process and aggregate metrics for a trace in which every process
/// completed. Throws IncompleteTrace (a ValidationError) otherwise.
RunMetrics compute_metrics(const Trace& t);

} // namespace schedsim
