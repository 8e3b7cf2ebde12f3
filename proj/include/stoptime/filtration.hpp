#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stoptime/probability.hpp"
#include "stoptime/rational.hpp"
#include "stoptime/time_point.hpp"
#include "stoptime/verdict.hpp"

namespace stoptime {

/// A time value in T u {+inf}, independent of any grid.
class ExtendedTime {
public:
    explicit ExtendedTime(Rational value) : value_(value) {}
    static ExtendedTime infinity() { return ExtendedTime(); }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const { return value_.value(); }

    bool operator==(const ExtendedTime&) const = default;

private:
    ExtendedTime() = default;
    std::optional<Rational> value_;
};

/// Finite, strictly increasing set of exact time points.
class TimeGrid {
public:
    explicit TimeGrid(std::vector<Rational> times);

    std::size_t size() const { return times_.size(); }
    const std::vector<Rational>& times() const { return times_; }
    const Rational& at(TimePoint t) const { return times_.at(t.index()); }
    TimePoint first() const { return TimePoint(0); }

    /// Throws DomainError when a finite value is not a grid point.
    TimePoint locate(const ExtendedTime& time) const;
    std::optional<TimePoint> find(const Rational& time) const;

    ExtendedTime value(TimePoint t) const;
    /// "inf" or the canonical rational.
    std::string format(TimePoint t) const;

    bool operator==(const TimeGrid&) const = default;

private:
    std::vector<Rational> times_;
};

/// A filtration on a finite space: one partition per grid time plus the
/// terminal sigma-algebra. Construction checks only shape (one level per
/// grid time, every partition over the space's atoms); monotonicity is
/// reported by validate_filtration.
class Filtration {
public:
    Filtration(SampleSpace space, TimeGrid grid, std::vector<Partition> levels,
               std::optional<Partition> terminal = std::nullopt);

    const SampleSpace& space() const { return space_; }
    const TimeGrid& grid() const { return grid_; }
    const std::vector<Partition>& levels() const { return levels_; }
    const Partition& terminal() const { return terminal_; }
    std::size_t atom_count() const { return space_.size(); }
    std::size_t time_count() const { return grid_.size(); }

    const Partition& level(TimePoint t) const;

    bool operator==(const Filtration&) const = default;

private:
    SampleSpace space_;
    TimeGrid grid_;
    std::vector<Partition> levels_;
    Partition terminal_;
};

/// Each level refines its predecessor and the terminal refines every level.
/// Diagnostic names the first failing adjacent pair, then (t_last, inf).
Verdict validate_filtration(const Filtration& filtration);

const Partition& level_at(const Filtration& filtration, const ExtendedTime& time);

}  // namespace stoptime
