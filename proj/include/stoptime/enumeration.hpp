#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "stoptime/filtration.hpp"
#include "stoptime/processes.hpp"

namespace stoptime {

struct EnumerationLimits {
    /// Upper bound on candidate states an enumeration may visit.
    std::uint64_t max_candidates = 10'000'000;
};

/// (|grid| + 1)^(blocks of the last level), saturating. Every stopping time
/// is constant on last-level blocks, so this bounds both enumerations.
std::uint64_t candidate_bound(const Filtration& filtration);

/// Every stopping time exactly once, sorted lexicographically by atom
/// (infinity greatest). Built from increasing chains {tau <= t} of
/// F_t-measurable events. Throws DomainError for an invalid filtration and
/// ResourceError when candidate_bound exceeds the cap.
std::vector<RandomTime> enumerate_stopping_times(const Filtration& filtration,
                                                 const EnumerationLimits& limits = {});

/// Every stopping process exactly once, sorted by the time-major value
/// table. Built from decreasing chains {X_t = 1} of F_t-measurable events.
std::vector<BinaryProcess> enumerate_stopping_processes(const Filtration& filtration,
                                                        const EnumerationLimits& limits = {});

enum class Comparison { exact, almost_sure };

struct EnumerationReport {
    std::size_t stopping_time_count = 0;
    std::size_t stopping_process_count = 0;
    std::vector<std::string> roundtrip_failures;

    bool ok() const {
        return roundtrip_failures.empty() && stopping_time_count == stopping_process_count;
    }
};

/// Enumerates both sides, runs both round trips over every object and checks
/// that X -> tau^X maps the process list onto the time list.
EnumerationReport check_bijection(const Filtration& filtration,
                                  Comparison comparison = Comparison::exact,
                                  const EnumerationLimits& limits = {});

std::string describe(const RandomTime& tau, const Filtration& filtration);
std::string describe(const BinaryProcess& process, const Filtration& filtration);

}  // namespace stoptime
