#pragma once

#include <compare>
#include <cstddef>
#include <limits>

namespace stoptime {

/// Index into a TimeGrid, or +infinity. Ordering follows the grid, with
/// infinity greatest.
class TimePoint {
public:
    constexpr explicit TimePoint(std::size_t index) : index_(index) {}
    static constexpr TimePoint infinity() { return TimePoint(kInfinity); }

    constexpr bool is_infinite() const { return index_ == kInfinity; }
    /// Grid position; only meaningful when finite.
    constexpr std::size_t index() const { return index_; }

    constexpr auto operator<=>(const TimePoint&) const = default;

private:
    static constexpr std::size_t kInfinity = std::numeric_limits<std::size_t>::max();
    std::size_t index_;
};

}  // namespace stoptime
