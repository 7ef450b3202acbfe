#pragma once

#include <random>
#include <string>

#include "schedsim/core.hpp"

namespace schedsim::test {

/// Random workload for property tests. Arrivals include 0 and deliberate
/// collisions (every third workload draws arrivals from a coarse grid) so the
/// tie-break rules get exercised.
inline Workload random_workload(std::mt19937_64& rng, std::size_t serial,
                                std::size_t max_procs = 16) {
    const std::size_t n = 1 + rng() % max_procs;
    const bool coarse = serial % 3 == 0;
    Workload w;
    w.name = "rand-" + std::to_string(serial);
    w.processes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long long arrival = coarse ? static_cast<long long>(rng() % 4) * 10
                                         : static_cast<long long>(rng() % 121);
        const long long burst = 1 + static_cast<long long>(rng() % 100);
        w.processes.push_back({"P" + std::to_string(i + 1), Time(arrival), Time(burst)});
    }
    return w;
}

inline Workload random_zero_arrival_workload(std::mt19937_64& rng, std::size_t serial,
                                             std::size_t n_procs, long long bt_min = 10,
                                             long long bt_max = 100) {
    Workload w;
    w.name = "zero-" + std::to_string(serial);
    w.processes.reserve(n_procs);
    const auto span = static_cast<unsigned long long>(bt_max - bt_min) + 1;
    for (std::size_t i = 0; i < n_procs; ++i) {
        const long long burst = bt_min + static_cast<long long>(rng() % span);
        w.processes.push_back({"P" + std::to_string(i + 1), Time(0), Time(burst)});
    }
    return w;
}

} // namespace schedsim::test
