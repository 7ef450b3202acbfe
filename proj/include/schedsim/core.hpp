#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "schedsim/rational.hpp"

namespace schedsim {

/// One process: identity, arrival instant, total CPU demand.
struct ProcessSpec {
    std::string id;
    Time arrival;
    Time burst;

    friend bool operator==(const ProcessSpec&, const ProcessSpec&) = default;
};

/// Named, ordered set of processes. Input order is significant: it breaks
/// ties between simultaneous arrivals.
struct Workload {
    std::string name;
    std::vector<ProcessSpec> processes;

    friend bool operator==(const Workload&, const Workload&) = default;
};

/// Throws ValidationError: EmptyWorkload, EmptyId, NonPositiveBurst(id),
/// DuplicateId(id). Negative arrivals cannot be represented by Time and are
/// rejected where raw integers enter (file parsing, bindings).
void validate_workload(const Workload& w);

enum class SliceReason { Completed, QuantumExpired };

/// "completed" or "quantum-expired".
std::string_view to_string(SliceReason reason);

/// One contiguous interval of CPU occupancy by one process.
struct Slice {
    std::string pid;
    Time start;
    Time end;
    SliceReason reason;

    Time duration() const { return end - start; }

    friend bool operator==(const Slice&, const Slice&) = default;
};

std::ostream& operator<<(std::ostream& os, const Slice& s);

} // namespace schedsim
