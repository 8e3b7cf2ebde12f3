#include "stoptime/processes.hpp"

namespace stoptime {

RealProcess to_real(const BinaryProcess& process) {
    std::vector<Rational> values;
    values.reserve(process.values().size());
    for (auto v : process.values()) values.emplace_back(v);
    return RealProcess(process.time_count(), process.atom_count(), std::move(values));
}

bool Interval::contains(const Rational& v) const {
    if (lo && (lo_open ? !(*lo < v) : !(*lo <= v))) return false;
    if (hi && (hi_open ? !(v < *hi) : !(v <= *hi))) return false;
    return true;
}

BorelSet::BorelSet(std::vector<Interval> intervals, std::vector<Rational> points)
    : intervals_(std::move(intervals)), points_(std::move(points)) {
    for (auto& interval : intervals_) {
        if (!interval.lo) interval.lo_open = true;
        if (!interval.hi) interval.hi_open = true;
        if (interval.lo && interval.hi) {
            if (*interval.hi < *interval.lo) {
                throw DomainError("interval lower end exceeds upper end");
            }
            if (*interval.lo == *interval.hi && (interval.lo_open || interval.hi_open)) {
                throw DomainError("degenerate interval must be closed on both ends");
            }
        }
    }
}

bool member(const Rational& value, const BorelSet& set) {
    for (const auto& interval : set.intervals()) {
        if (interval.contains(value)) return true;
    }
    for (const auto& point : set.points()) {
        if (point == value) return true;
    }
    return false;
}

void check_shape(const RandomTime& tau, const Filtration& filtration) {
    if (tau.atom_count() != filtration.atom_count()) {
        throw DomainError("random time is not defined on every atom of the space");
    }
    for (TimePoint t : tau.values()) {
        if (!t.is_infinite() && t.index() >= filtration.time_count()) {
            throw DomainError("random time takes a value off the grid");
        }
    }
}

EventSet stopped_by(const RandomTime& tau, TimePoint t) {
    EventSet event(tau.atom_count());
    for (AtomIndex atom = 0; atom < tau.atom_count(); ++atom) {
        if (tau[atom] <= t) event.insert(atom);
    }
    return event;
}

Verdict is_stopping_time(const RandomTime& tau, const Filtration& filtration) {
    check_shape(tau, filtration);
    const auto& grid = filtration.grid();
    const auto& space = filtration.space();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const TimePoint t(i);
        const auto event = stopped_by(tau, t);
        if (!is_measurable(event, filtration.level(t))) {
            return Verdict::fail("{tau <= " + grid.format(t) + "} = " + describe(event, space) +
                                     " is not measurable w.r.t. F_" + grid.format(t) + " = " +
                                     describe(filtration.level(t), space) + " (t=" +
                                     grid.format(t) + ")",
                                 {t});
        }
    }
    return Verdict::pass();
}

Verdict is_stopping_process(const BinaryProcess& process, const Filtration& filtration) {
    check_shape(process, filtration);
    const auto& grid = filtration.grid();
    const auto& space = filtration.space();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const TimePoint t(i);
        if (i > 0) {
            const TimePoint s(i - 1);
            for (AtomIndex atom = 0; atom < process.atom_count(); ++atom) {
                if (process(s, atom) < process(t, atom)) {
                    return Verdict::fail("path of " + space.label(atom) + " increases from 0 at " +
                                             grid.format(s) + " to 1 at " + grid.format(t) +
                                             " (not non-increasing, t=" + grid.format(t) + ")",
                                         {t});
                }
            }
        }
        if (!is_constant_on_blocks(process.section(t), filtration.level(t))) {
            EventSet alive(process.atom_count());
            for (AtomIndex atom = 0; atom < process.atom_count(); ++atom) {
                if (process(t, atom) == 1) alive.insert(atom);
            }
            return Verdict::fail("{X_" + grid.format(t) + " = 1} = " + describe(alive, space) +
                                     " is not measurable w.r.t. F_" + grid.format(t) + " = " +
                                     describe(filtration.level(t), space) +
                                     " (not adapted, t=" + grid.format(t) + ")",
                                 {t});
        }
    }
    return Verdict::pass();
}

bool times_equal_as(const RandomTime& lhs, const RandomTime& rhs, const SampleSpace& space) {
    if (lhs.atom_count() != space.size() || rhs.atom_count() != space.size()) {
        throw DomainError("random times are not defined on the sample space");
    }
    EventSet differ(space.size());
    for (AtomIndex atom = 0; atom < space.size(); ++atom) {
        if (lhs[atom] != rhs[atom]) differ.insert(atom);
    }
    return null_event(differ, space);
}

bool processes_equal_as(const BinaryProcess& lhs, const BinaryProcess& rhs,
                        const SampleSpace& space) {
    if (lhs.atom_count() != space.size() || rhs.atom_count() != space.size() ||
        lhs.time_count() != rhs.time_count()) {
        throw DomainError("processes are not defined on the same grid and sample space");
    }
    EventSet differ(space.size());
    for (AtomIndex atom = 0; atom < space.size(); ++atom) {
        if (lhs.path(atom) != rhs.path(atom)) differ.insert(atom);
    }
    return null_event(differ, space);
}

}  // namespace stoptime
