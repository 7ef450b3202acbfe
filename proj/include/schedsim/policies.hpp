#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "schedsim/core.hpp"

namespace schedsim {

enum class PolicyKind { An, FixedRR, MedianRR, Fcfs, Sjf, Srtf };

/// CLI-facing names: "an", "rr", "median-rr", "fcfs", "sjf", "srtf".
std::string_view policy_name(PolicyKind kind);
std::optional<PolicyKind> parse_policy_name(std::string_view name);

struct PolicyDescriptor {
    PolicyKind kind = PolicyKind::An;
    std::optional<Time> fixed_quantum; // FixedRR only
    Time median_floor = Time(25);      // MedianRR only

    static PolicyDescriptor an();
    static PolicyDescriptor fixed_rr(Time quantum);
    static PolicyDescriptor median_rr(Time floor = Time(25));
    static PolicyDescriptor fcfs();
    static PolicyDescriptor sjf();
    static PolicyDescriptor srtf();

    /// "an", "rr quantum=20", "median-rr floor=25", ...
    std::string label() const;

    friend bool operator==(const PolicyDescriptor&, const PolicyDescriptor&) = default;
};

/// Throws PolicyParameterError (a ValidationError) on bad parameters.
void validate_policy(const PolicyDescriptor& policy);

struct QueueEntry {
    std::string pid;
    Time remaining;

    friend bool operator==(const QueueEntry&, const QueueEntry&) = default;
};

/// Ready-queue contents at a dispatch instant, in queue order, excluding the
/// process being dispatched. Every entry has remaining > 0.
using ReadyQueueSnapshot = std::vector<QueueEntry>;

/// A quantum grant: either a bounded slice or run-to-completion.
class PolicyDecision {
public:
    static PolicyDecision run_to_completion() { return PolicyDecision{}; }
    static PolicyDecision bounded(Time quantum); // quantum > 0

    bool is_run_to_completion() const { return !quantum_.has_value(); }
    const Time& quantum() const { return *quantum_; }

    friend bool operator==(const PolicyDecision&, const PolicyDecision&) = default;

private:
    std::optional<Time> quantum_;
};

/// Mean-of-remaining rule: run-to-completion on an empty queue, otherwise the
/// arithmetic mean of the remaining bursts in `ready` (the dispatched process
/// is not part of the snapshot).
PolicyDecision an_quantum(const Time& remaining_p, const ReadyQueueSnapshot& ready);

/// max(floor, median of round_remaining); an even-sized median is the mean of
/// the two middle values. Throws EmptyRound / PolicyParameterError.
Time median_round_quantum(const std::vector<Time>& round_remaining, const Time& floor);

/// Constant quantum, regardless of queue contents. Throws PolicyParameterError
/// if q is not positive.
PolicyDecision fixed_quantum(const Time& q);

struct PickCandidate {
    std::string pid;
    Time remaining;
    Time arrival;
    std::size_t input_index = 0;
};

/// Index of the shortest-remaining candidate; ties by earlier arrival, then
/// smaller input index. Throws EmptyCandidates.
std::size_t shortest_remaining_index(std::span<const PickCandidate> candidates);

/// Index of the earliest-arrival candidate; ties by smaller input index.
/// Throws EmptyCandidates.
std::size_t arrival_order_index(std::span<const PickCandidate> candidates);

/// pid of the shortest-remaining pick.
std::string sjf_pick(std::span<const PickCandidate> candidates);

} // namespace schedsim
