#include "schedsim/engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "schedsim/errors.hpp"

namespace schedsim {

namespace {

// Admission order: by arrival time, input order on ties.
std::vector<std::size_t> arrival_order(const Workload& w) {
    std::vector<std::size_t> order(w.processes.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return w.processes[a].arrival < w.processes[b].arrival;
    });
    return order;
}

bool uses_pick_rule(PolicyKind kind) {
    return kind == PolicyKind::Fcfs || kind == PolicyKind::Sjf || kind == PolicyKind::Srtf;
}

} // namespace

Trace simulate(const Workload& w, const PolicyDescriptor& policy) {
    validate_workload(w);
    validate_policy(policy);

    const std::vector<ProcessSpec>& procs = w.processes;
    const std::size_t n = procs.size();

    std::vector<Time> remaining(n);
    for (std::size_t i = 0; i < n; ++i) remaining[i] = procs[i].burst;

    const std::vector<std::size_t> order = arrival_order(w);
    std::size_t next_arrival = 0;

    std::deque<std::size_t> ready;
    Time clock;
    std::size_t finished = 0;
    std::vector<Slice> slices;

    // median-rr holds one quantum per round; a round ends at a dispatch where
    // every process still in the system has run since the last recomputation.
    std::optional<Time> round_quantum;
    std::vector<bool> ran_this_round(n, false);

    auto admit_up_to = [&](const Time& t) {
        while (next_arrival < n && procs[order[next_arrival]].arrival <= t)
            ready.push_back(order[next_arrival++]);
    };

    auto select_position = [&]() -> std::size_t {
        if (!uses_pick_rule(policy.kind)) return 0; // FIFO head
        std::vector<PickCandidate> candidates;
        candidates.reserve(ready.size());
        for (std::size_t idx : ready)
            candidates.push_back({procs[idx].id, remaining[idx], procs[idx].arrival, idx});
        return policy.kind == PolicyKind::Fcfs ? arrival_order_index(candidates)
                                               : shortest_remaining_index(candidates);
    };

    auto decide = [&](std::size_t p, const ReadyQueueSnapshot& snapshot) -> PolicyDecision {
        switch (policy.kind) {
        case PolicyKind::An:
            return an_quantum(remaining[p], snapshot);
        case PolicyKind::FixedRR:
            return fixed_quantum(*policy.fixed_quantum);
        case PolicyKind::MedianRR: {
            bool round_complete = round_quantum.has_value() && ran_this_round[p];
            if (round_complete)
                for (std::size_t idx : ready)
                    if (!ran_this_round[idx]) { round_complete = false; break; }
            if (!round_quantum || round_complete) {
                std::vector<Time> system;
                system.reserve(ready.size() + 1);
                system.push_back(remaining[p]);
                for (std::size_t idx : ready) system.push_back(remaining[idx]);
                round_quantum = median_round_quantum(system, policy.median_floor);
                std::fill(ran_this_round.begin(), ran_this_round.end(), false);
            }
            ran_this_round[p] = true;
            return PolicyDecision::bounded(*round_quantum);
        }
        case PolicyKind::Fcfs:
        case PolicyKind::Sjf:
        case PolicyKind::Srtf:
            return PolicyDecision::run_to_completion();
        }
        throw ValidationError("PolicyParameterError: unknown policy kind");
    };

    while (finished < n) {
        admit_up_to(clock);
        if (ready.empty()) {
            clock = procs[order[next_arrival]].arrival; // idle gap, no slice
            continue;
        }

        const std::size_t pos = select_position();
        const std::size_t p = ready[pos];
        ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pos));

        ReadyQueueSnapshot snapshot;
        snapshot.reserve(ready.size());
        for (std::size_t idx : ready) snapshot.push_back({procs[idx].id, remaining[idx]});

        const PolicyDecision decision = decide(p, snapshot);
        Time run = decision.is_run_to_completion()
                       ? remaining[p]
                       : std::min(decision.quantum(), remaining[p]);

        if (policy.kind == PolicyKind::Srtf) {
            // Preempt at the first arrival whose burst undercuts what is left.
            for (std::size_t a = next_arrival; a < n; ++a) {
                const ProcessSpec& spec = procs[order[a]];
                if (!(spec.arrival < clock + run)) break;
                if (spec.burst < remaining[p] - (spec.arrival - clock)) {
                    run = spec.arrival - clock;
                    break;
                }
            }
        }

        const Time start = clock;
        clock += run;
        remaining[p] -= run;

        const bool done = remaining[p].is_zero();
        slices.push_back(
            {procs[p].id, start, clock, done ? SliceReason::Completed : SliceReason::QuantumExpired});

        if (done) {
            ++finished;
        } else {
            // Arrivals at or before the expiry instant queue ahead of the
            // preempted process.
            admit_up_to(clock);
            ready.push_back(p);
        }
    }

    return Trace{w, policy, std::move(slices)};
}

} // namespace schedsim
