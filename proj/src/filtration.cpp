#include "stoptime/filtration.hpp"

#include <algorithm>

namespace stoptime {

TimeGrid::TimeGrid(std::vector<Rational> times) : times_(std::move(times)) {
    if (times_.empty()) throw DomainError("time grid must contain at least one time");
    for (std::size_t i = 1; i < times_.size(); ++i) {
        if (!(times_[i - 1] < times_[i])) {
            throw DomainError("time grid must be strictly increasing");
        }
    }
}

std::optional<TimePoint> TimeGrid::find(const Rational& time) const {
    const auto it = std::lower_bound(times_.begin(), times_.end(), time);
    if (it == times_.end() || *it != time) return std::nullopt;
    return TimePoint(static_cast<std::size_t>(it - times_.begin()));
}

TimePoint TimeGrid::locate(const ExtendedTime& time) const {
    if (time.is_infinite()) return TimePoint::infinity();
    if (auto t = find(time.value())) return *t;
    throw DomainError("time " + format_rational(time.value()) + " is not on the grid");
}

ExtendedTime TimeGrid::value(TimePoint t) const {
    if (t.is_infinite()) return ExtendedTime::infinity();
    return ExtendedTime(at(t));
}

std::string TimeGrid::format(TimePoint t) const {
    if (t.is_infinite()) return "inf";
    return format_rational(at(t));
}

Filtration::Filtration(SampleSpace space, TimeGrid grid, std::vector<Partition> levels,
                       std::optional<Partition> terminal)
    : space_(std::move(space)),
      grid_(std::move(grid)),
      levels_(std::move(levels)),
      terminal_(terminal ? std::move(*terminal) : Partition::discrete(space_.size())) {
    if (levels_.size() != grid_.size()) {
        throw DomainError("filtration has " + std::to_string(levels_.size()) +
                          " levels for " + std::to_string(grid_.size()) + " grid times");
    }
    for (const auto& level : levels_) {
        if (level.atom_count() != space_.size()) {
            throw DomainError("filtration level is not a partition of the sample space");
        }
    }
    if (terminal_.atom_count() != space_.size()) {
        throw DomainError("terminal sigma-algebra is not a partition of the sample space");
    }
}

const Partition& Filtration::level(TimePoint t) const {
    if (t.is_infinite()) return terminal_;
    if (t.index() >= levels_.size()) throw DomainError("time index outside the grid");
    return levels_[t.index()];
}

Verdict validate_filtration(const Filtration& filtration) {
    const auto& grid = filtration.grid();
    const auto& space = filtration.space();
    const auto& levels = filtration.levels();
    for (std::size_t i = 1; i < levels.size(); ++i) {
        if (!refines(levels[i], levels[i - 1])) {
            const TimePoint s(i - 1), t(i);
            return Verdict::fail("F_" + grid.format(t) + " = " + describe(levels[i], space) +
                                     " does not refine F_" + grid.format(s) + " = " +
                                     describe(levels[i - 1], space) + " (times " +
                                     grid.format(s) + ", " + grid.format(t) + ")",
                                 {s, t});
        }
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
        if (!refines(filtration.terminal(), levels[i])) {
            const TimePoint s(i);
            return Verdict::fail("F_inf = " + describe(filtration.terminal(), space) +
                                     " does not refine F_" + grid.format(s) + " = " +
                                     describe(levels[i], space) + " (times " +
                                     grid.format(s) + ", inf)",
                                 {s, TimePoint::infinity()});
        }
    }
    return Verdict::pass();
}

const Partition& level_at(const Filtration& filtration, const ExtendedTime& time) {
    return filtration.level(filtration.grid().locate(time));
}

}  // namespace stoptime
