#pragma once

#include <string>
#include <vector>

#include "stoptime/time_point.hpp"

namespace stoptime {

/// Outcome of a verification predicate. On failure, `diagnostic` describes
/// the first violation in grid order and `times` holds the grid times
/// involved (one, or two for a pair of filtration levels).
struct Verdict {
    bool holds = true;
    std::string diagnostic;
    std::vector<TimePoint> times;

    explicit operator bool() const { return holds; }

    static Verdict pass() { return {}; }
    static Verdict fail(std::string diagnostic, std::vector<TimePoint> times) {
        return {false, std::move(diagnostic), std::move(times)};
    }
};

}  // namespace stoptime
