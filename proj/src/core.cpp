#include "schedsim/core.hpp"

#include <ostream>
#include <unordered_set>

#include "schedsim/errors.hpp"

namespace schedsim {

void validate_workload(const Workload& w) {
    if (w.processes.empty())
        throw ValidationError("EmptyWorkload: '" + w.name + "' has no processes");

    std::unordered_set<std::string_view> seen;
    for (const ProcessSpec& p : w.processes) {
        if (p.id.empty())
            throw ValidationError("EmptyId: workload '" + w.name + "' has a process without an id");
        if (p.burst.is_zero())
            throw ValidationError("NonPositiveBurst: process '" + p.id + "'");
        if (!seen.insert(p.id).second)
            throw ValidationError("DuplicateId: '" + p.id + "'");
    }
}

std::string_view to_string(SliceReason reason) {
    return reason == SliceReason::Completed ? "completed" : "quantum-expired";
}

std::ostream& operator<<(std::ostream& os, const Slice& s) {
    return os << s.pid << "[" << s.start << "," << s.end << ") " << to_string(s.reason);
}

} // namespace schedsim
