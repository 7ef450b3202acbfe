#include "schedsim/policies.hpp"

#include <algorithm>
#include <tuple>

#include "schedsim/errors.hpp"

namespace schedsim {

std::string_view policy_name(PolicyKind kind) {
    switch (kind) {
    case PolicyKind::An: return "an";
    case PolicyKind::FixedRR: return "rr";
    case PolicyKind::MedianRR: return "median-rr";
    case PolicyKind::Fcfs: return "fcfs";
    case PolicyKind::Sjf: return "sjf";
    case PolicyKind::Srtf: return "srtf";
    }
    return "?";
}

std::optional<PolicyKind> parse_policy_name(std::string_view name) {
    if (name == "an") return PolicyKind::An;
    if (name == "rr") return PolicyKind::FixedRR;
    if (name == "median-rr") return PolicyKind::MedianRR;
    if (name == "fcfs") return PolicyKind::Fcfs;
    if (name == "sjf") return PolicyKind::Sjf;
    if (name == "srtf") return PolicyKind::Srtf;
    return std::nullopt;
}

PolicyDescriptor PolicyDescriptor::an() { return {PolicyKind::An, std::nullopt, Time(25)}; }

PolicyDescriptor PolicyDescriptor::fixed_rr(Time quantum) {
    return {PolicyKind::FixedRR, quantum, Time(25)};
}

PolicyDescriptor PolicyDescriptor::median_rr(Time floor) {
    return {PolicyKind::MedianRR, std::nullopt, floor};
}

PolicyDescriptor PolicyDescriptor::fcfs() { return {PolicyKind::Fcfs, std::nullopt, Time(25)}; }
PolicyDescriptor PolicyDescriptor::sjf() { return {PolicyKind::Sjf, std::nullopt, Time(25)}; }
PolicyDescriptor PolicyDescriptor::srtf() { return {PolicyKind::Srtf, std::nullopt, Time(25)}; }

std::string PolicyDescriptor::label() const {
    std::string s{policy_name(kind)};
    if (kind == PolicyKind::FixedRR && fixed_quantum)
        s += " quantum=" + fixed_quantum->str();
    if (kind == PolicyKind::MedianRR)
        s += " floor=" + median_floor.str();
    return s;
}

void validate_policy(const PolicyDescriptor& policy) {
    if (policy.kind == PolicyKind::FixedRR) {
        if (!policy.fixed_quantum)
            throw ValidationError("PolicyParameterError: rr requires a fixed quantum");
        if (policy.fixed_quantum->is_zero())
            throw ValidationError("PolicyParameterError: fixed quantum must be positive");
    }
    if (policy.kind == PolicyKind::MedianRR && policy.median_floor.is_zero())
        throw ValidationError("PolicyParameterError: median floor must be positive");
}

PolicyDecision PolicyDecision::bounded(Time quantum) {
    if (quantum.is_zero())
        throw ValidationError("PolicyParameterError: quantum must be positive");
    PolicyDecision d;
    d.quantum_ = std::move(quantum);
    return d;
}

PolicyDecision an_quantum(const Time& remaining_p, const ReadyQueueSnapshot& ready) {
    (void)remaining_p; // the empty-queue grant equals remaining_p by construction
    if (ready.empty()) return PolicyDecision::run_to_completion();
    Time sum;
    for (const QueueEntry& e : ready) sum += e.remaining;
    return PolicyDecision::bounded(sum.divided_by(ready.size()));
}

Time median_round_quantum(const std::vector<Time>& round_remaining, const Time& floor) {
    if (round_remaining.empty())
        throw ValidationError("EmptyRound: no remaining bursts to take a median of");
    if (floor.is_zero())
        throw ValidationError("PolicyParameterError: median floor must be positive");

    std::vector<Time> sorted = round_remaining;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    const Time median = n % 2 == 1 ? sorted[n / 2]
                                   : (sorted[n / 2 - 1] + sorted[n / 2]).divided_by(2);
    return std::max(floor, median);
}

PolicyDecision fixed_quantum(const Time& q) {
    if (q.is_zero())
        throw ValidationError("PolicyParameterError: fixed quantum must be positive");
    return PolicyDecision::bounded(q);
}

namespace {

std::size_t pick_min(std::span<const PickCandidate> candidates, bool by_remaining) {
    if (candidates.empty())
        throw ValidationError("EmptyCandidates: nothing to pick from");
    std::size_t best = 0;
    for (std::size_t i = 1; i < candidates.size(); ++i) {
        const PickCandidate& a = candidates[i];
        const PickCandidate& b = candidates[best];
        const bool better =
            by_remaining ? std::tie(a.remaining, a.arrival, a.input_index) <
                               std::tie(b.remaining, b.arrival, b.input_index)
                         : std::tie(a.arrival, a.input_index) <
                               std::tie(b.arrival, b.input_index);
        if (better) best = i;
    }
    return best;
}

} // namespace

std::size_t shortest_remaining_index(std::span<const PickCandidate> candidates) {
    return pick_min(candidates, true);
}

std::size_t arrival_order_index(std::span<const PickCandidate> candidates) {
    return pick_min(candidates, false);
}

std::string sjf_pick(std::span<const PickCandidate> candidates) {
    return candidates[shortest_remaining_index(candidates)].pid;
}

} // namespace schedsim
