#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "stoptime/filtration.hpp"
#include "stoptime/probability.hpp"
#include "stoptime/rational.hpp"
#include "stoptime/verdict.hpp"

namespace stoptime {

/// A map from atoms to T u {+inf}. Candidate stopping time.
class RandomTime {
public:
    explicit RandomTime(std::vector<TimePoint> values) : values_(std::move(values)) {}
    static RandomTime constant(std::size_t atom_count, TimePoint value) {
        return RandomTime(std::vector<TimePoint>(atom_count, value));
    }

    std::size_t atom_count() const { return values_.size(); }
    TimePoint operator[](AtomIndex atom) const { return values_[atom]; }
    TimePoint at(AtomIndex atom) const { return values_.at(atom); }
    const std::vector<TimePoint>& values() const { return values_; }

    /// Lexicographic by atom, infinity greatest.
    auto operator<=>(const RandomTime&) const = default;

private:
    std::vector<TimePoint> values_;
};

/// A (grid time x atom) table of values, stored time-major. Binary processes
/// (`Value` = std::uint8_t) only admit 0 and 1.
template <typename Value>
class Process {
public:
    Process(std::size_t time_count, std::size_t atom_count, std::vector<Value> values)
        : time_count_(time_count), atom_count_(atom_count), values_(std::move(values)) {
        if (values_.size() != time_count_ * atom_count_) {
            throw DomainError("process table is not total on grid x atoms");
        }
        if constexpr (std::is_same_v<Value, std::uint8_t>) {
            for (Value v : values_) {
                if (v > 1) throw DomainError("binary process value outside {0,1}");
            }
        }
    }

    static Process constant(std::size_t time_count, std::size_t atom_count, Value value) {
        return Process(time_count, atom_count,
                       std::vector<Value>(time_count * atom_count, value));
    }

    std::size_t time_count() const { return time_count_; }
    std::size_t atom_count() const { return atom_count_; }

    const Value& operator()(TimePoint t, AtomIndex atom) const {
        return values_[t.index() * atom_count_ + atom];
    }
    const Value& at(TimePoint t, AtomIndex atom) const {
        if (t.index() >= time_count_ || atom >= atom_count_) {
            throw DomainError("process index out of range");
        }
        return (*this)(t, atom);
    }

    /// omega -> X_t(omega)
    std::span<const Value> section(TimePoint t) const {
        return std::span<const Value>(values_).subspan(t.index() * atom_count_, atom_count_);
    }

    std::vector<Value> path(AtomIndex atom) const {
        std::vector<Value> out;
        out.reserve(time_count_);
        for (std::size_t i = 0; i < time_count_; ++i) out.push_back((*this)(TimePoint(i), atom));
        return out;
    }

    const std::vector<Value>& values() const { return values_; }

    bool operator==(const Process&) const = default;

private:
    std::size_t time_count_;
    std::size_t atom_count_;
    std::vector<Value> values_;
};

using BinaryProcess = Process<std::uint8_t>;
using RealProcess = Process<Rational>;

/// Lexicographic on the time-major value table (canonical enumeration order).
inline bool operator<(const BinaryProcess& lhs, const BinaryProcess& rhs) {
    return lhs.values() < rhs.values();
}

RealProcess to_real(const BinaryProcess& process);

/// One interval of the real line. A missing endpoint is -inf (lower) or
/// +inf (upper) and is always open.
struct Interval {
    std::optional<Rational> lo;
    bool lo_open = true;
    std::optional<Rational> hi;
    bool hi_open = true;

    bool contains(const Rational& v) const;
    bool operator==(const Interval&) const = default;
};

/// Finite union of intervals and points.
class BorelSet {
public:
    BorelSet() = default;
    /// Throws DomainError for lo > hi, or lo == hi with an open end.
    BorelSet(std::vector<Interval> intervals, std::vector<Rational> points);

    static BorelSet point(const Rational& value) { return BorelSet({}, {value}); }

    const std::vector<Interval>& intervals() const { return intervals_; }
    const std::vector<Rational>& points() const { return points_; }

    bool operator==(const BorelSet&) const = default;

private:
    std::vector<Interval> intervals_;
    std::vector<Rational> points_;
};

bool member(const Rational& value, const BorelSet& set);

/// {omega : tau(omega) <= t}
EventSet stopped_by(const RandomTime& tau, TimePoint t);

/// {tau <= t} in F_t for every grid time t. Precondition: `filtration` is valid.
Verdict is_stopping_time(const RandomTime& tau, const Filtration& filtration);

/// Adapted and pathwise non-increasing. Grid times are scanned in order; at
/// each time the step into it is checked before adaptedness of the section.
/// No cadlag check: on a finite grid every path is cadlag.
Verdict is_stopping_process(const BinaryProcess& process, const Filtration& filtration);

/// The times differ at most on a null event.
bool times_equal_as(const RandomTime& lhs, const RandomTime& rhs, const SampleSpace& space);

/// The paths differ at most on a null event.
bool processes_equal_as(const BinaryProcess& lhs, const BinaryProcess& rhs,
                        const SampleSpace& space);

/// Throws DomainError unless `tau` has one finite-on-grid value per atom.
void check_shape(const RandomTime& tau, const Filtration& filtration);
template <typename Value>
void check_shape(const Process<Value>& process, const Filtration& filtration) {
    if (process.atom_count() != filtration.atom_count() ||
        process.time_count() != filtration.time_count()) {
        throw DomainError("process does not match the filtration's grid and atoms");
    }
}

}  // namespace stoptime
