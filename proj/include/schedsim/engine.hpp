#pragma once

#include "schedsim/trace.hpp"

namespace schedsim {

/// Deterministic event-driven simulation of one workload under one policy.
///
/// The clock starts at 0. Whenever the CPU is free, every process with
/// arrival <= clock is admitted to the queue tail (earlier arrival first,
/// input order on ties), then one process is dispatched: the queue head for
/// an/rr/median-rr, the pick-rule winner for fcfs/sjf/srtf. The policy sees
/// the dispatched process's remaining time plus a snapshot of the rest of the
/// queue and grants a quantum; the process runs min(quantum, remaining)
/// without interruption. Arrivals during a slice are admitted at the slice
/// boundary, ahead of the preempted process. An empty queue with arrivals
/// still pending advances the clock to the next arrival without emitting a
/// slice.
///
/// Throws ValidationError for invalid workloads or policy parameters.
Trace simulate(const Workload& w, const PolicyDescriptor& policy);

} // namespace schedsim
