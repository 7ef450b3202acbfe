#pragma once

#include <vector>

#include "schedsim/core.hpp"
#include "schedsim/policies.hpp"

namespace schedsim {

/// The full schedule produced by one simulation run. Slices are in time
/// order, non-overlapping; gaps appear only while no admitted, unfinished
/// process exists.
struct Trace {
    Workload workload;
    PolicyDescriptor policy;
    std::vector<Slice> slices;

    friend bool operator==(const Trace&, const Trace&) = default;
};

} // namespace schedsim
