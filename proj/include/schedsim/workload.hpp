#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "schedsim/core.hpp"

namespace schedsim {

/// Parameters of the seeded uniform workload generator.
struct GeneratorConfig {
    std::size_t n_samples = 50;
    std::size_t n_procs = 4;
    std::int64_t at_min = 10;
    std::int64_t at_max = 100;
    std::int64_t bt_min = 10;
    std::int64_t bt_max = 100;
    std::uint64_t seed = 0;
};

/// n_samples workloads of n_procs processes each, ids "P1".."Pn", arrivals
/// and bursts drawn uniformly from the closed integer ranges. A pure function
/// of the config: the PRNG is std::mt19937_64 seeded with cfg.seed, reduced
/// onto each range by modulo (bias is below 2^-50 for these range widths).
/// Throws InvalidRange (a ValidationError) when a bound is out of order or
/// not positive.
std::vector<Workload> generate_samples(const GeneratorConfig& cfg);

/// One JSON object per workload per line:
///   {"name": "...", "processes": [{"id": "...", "arrival": 10, "burst": 31}, ...]}
/// arrival/burst are integer milliseconds, arrival >= 0, burst >= 1.
std::string workloads_to_jsonl(const std::vector<Workload>& samples);

/// Inverse of workloads_to_jsonl. Blank lines are skipped; errors report the
/// 1-based physical line. Throws ParseError for malformed lines and
/// ValidationError for well-formed lines that violate workload invariants.
std::vector<Workload> workloads_from_jsonl(std::string_view text);

void write_workloads(const std::vector<Workload>& samples, const std::filesystem::path& path);
std::vector<Workload> read_workloads(const std::filesystem::path& path);

} // namespace schedsim
