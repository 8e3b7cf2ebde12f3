#pragma once

// Test-only fixtures and independent oracles. Nothing here calls the
// enumeration code it is used to check.

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "stoptime/filtration.hpp"
#include "stoptime/processes.hpp"

namespace stoptime::testing {

using Blocks = std::vector<std::vector<std::string>>;

inline Partition partition_of(const SampleSpace& space, const Blocks& blocks) {
    std::vector<std::vector<AtomIndex>> indices;
    for (const auto& block : blocks) {
        auto& out = indices.emplace_back();
        for (const auto& label : block) out.push_back(space.find(label).value());
    }
    return Partition(space.size(), std::move(indices));
}

inline EventSet event_of(const SampleSpace& space, const std::vector<std::string>& labels) {
    EventSet event(space.size());
    for (const auto& label : labels) event.insert(space.find(label).value());
    return event;
}

inline TimeGrid integer_grid(std::size_t n) {
    std::vector<Rational> times;
    for (std::size_t i = 0; i < n; ++i) times.emplace_back(static_cast<std::int64_t>(i));
    return TimeGrid(std::move(times));
}

inline SampleSpace abcd() { return SampleSpace::uniform({"a", "b", "c", "d"}); }

/// Omega = {a,b,c,d}, grid {0,1,2}: {Omega} -> {{a,b},{c,d}} -> singletons.
inline Filtration reference_filtration() {
    const auto space = abcd();
    return Filtration(space, integer_grid(3),
                      {Partition::trivial(4), partition_of(space, {{"a", "b"}, {"c", "d"}}),
                       Partition::discrete(4)});
}

/// "w0", "w1", ...
inline std::vector<std::string> atom_labels(std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("w" + std::to_string(i));
    return labels;
}

inline Filtration trivial_filtration(std::size_t atoms, std::size_t times) {
    return Filtration(SampleSpace::uniform(atom_labels(atoms)), integer_grid(times),
                      std::vector<Partition>(times, Partition::trivial(atoms)));
}

/// The sigma-algebra generated by `p`, listed event by event as bitmasks.
inline std::set<std::uint64_t> sigma_algebra_events(const Partition& p) {
    std::set<std::uint64_t> events;
    const std::uint64_t unions = std::uint64_t{1} << p.block_count();
    for (std::uint64_t choice = 0; choice < unions; ++choice) {
        std::uint64_t mask = 0;
        for (std::size_t b = 0; b < p.block_count(); ++b) {
            if (choice >> b & 1U) {
                for (AtomIndex atom : p.block(b)) mask |= std::uint64_t{1} << atom;
            }
        }
        events.insert(mask);
    }
    return events;
}

inline EventSet event_from_mask(std::size_t atoms, std::uint64_t mask) {
    EventSet event(atoms);
    for (AtomIndex atom = 0; atom < atoms; ++atom) {
        if (mask >> atom & 1U) event.insert(atom);
    }
    return event;
}

/// Every partition of n atoms, via restricted growth strings.
inline std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<std::size_t> key(n, 0);
    std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            out.push_back(Partition::from_labels(key));
            return;
        }
        for (std::size_t k = 0; k <= used && k < n; ++k) {
            key[i] = k;
            grow(i + 1, std::max(used, k + 1));
        }
    };
    grow(0, 0);
    return out;
}

/// All (|grid|+1)^|Omega| random times, lexicographic (infinity greatest),
/// filtered through is_stopping_time.
inline std::vector<RandomTime> brute_force_stopping_times(const Filtration& f) {
    const auto atoms = f.atom_count();
    const auto choices = f.time_count() + 1;
    std::vector<std::size_t> digits(atoms, 0);
    std::vector<RandomTime> out;
    for (;;) {
        std::vector<TimePoint> values;
        for (auto d : digits) {
            values.push_back(d == f.time_count() ? TimePoint::infinity() : TimePoint(d));
        }
        RandomTime tau(std::move(values));
        if (is_stopping_time(tau, f)) out.push_back(std::move(tau));
        std::size_t pos = atoms;
        while (pos > 0 && ++digits[pos - 1] == choices) digits[--pos] = 0;
        if (pos == 0) break;
    }
    return out;
}

/// All 2^(|grid| |Omega|) binary tables in lexicographic (time-major) order,
/// filtered through is_stopping_process.
inline std::vector<BinaryProcess> brute_force_stopping_processes(const Filtration& f) {
    const auto cells = f.time_count() * f.atom_count();
    std::vector<BinaryProcess> out;
    const std::uint64_t total = std::uint64_t{1} << cells;
    for (std::uint64_t code = 0; code < total; ++code) {
        std::vector<std::uint8_t> values(cells);
        for (std::size_t i = 0; i < cells; ++i) {
            values[i] = static_cast<std::uint8_t>(code >> (cells - 1 - i) & 1U);
        }
        BinaryProcess x(f.time_count(), f.atom_count(), std::move(values));
        if (is_stopping_process(x, f)) out.push_back(std::move(x));
    }
    return out;
}

}  // namespace stoptime::testing

namespace stoptime::testing {

/// Atom i becomes atom perm[i] everywhere (labels and weights travel along).
inline Partition relabel(const Partition& p, const std::vector<AtomIndex>& perm) {
    std::vector<std::vector<AtomIndex>> blocks;
    for (const auto& block : p.blocks()) {
        auto& out = blocks.emplace_back();
        for (AtomIndex atom : block) out.push_back(perm[atom]);
    }
    return Partition(p.atom_count(), std::move(blocks));
}

inline Filtration relabel(const Filtration& f, const std::vector<AtomIndex>& perm) {
    const auto n = f.atom_count();
    std::vector<std::string> labels(n);
    std::vector<Rational> weights(n);
    for (AtomIndex atom = 0; atom < n; ++atom) {
        labels[perm[atom]] = f.space().label(atom);
        weights[perm[atom]] = f.space().weight(atom);
    }
    std::vector<Partition> levels;
    for (const auto& level : f.levels()) levels.push_back(relabel(level, perm));
    return Filtration(SampleSpace(labels, weights), f.grid(), std::move(levels),
                      relabel(f.terminal(), perm));
}

inline RandomTime relabel(const RandomTime& tau, const std::vector<AtomIndex>& perm) {
    std::vector<TimePoint> values(tau.atom_count(), TimePoint::infinity());
    for (AtomIndex atom = 0; atom < tau.atom_count(); ++atom) values[perm[atom]] = tau[atom];
    return RandomTime(std::move(values));
}

inline BinaryProcess relabel(const BinaryProcess& x, const std::vector<AtomIndex>& perm) {
    std::vector<std::uint8_t> values(x.values().size());
    for (std::size_t t = 0; t < x.time_count(); ++t) {
        for (AtomIndex atom = 0; atom < x.atom_count(); ++atom) {
            values[t * x.atom_count() + perm[atom]] = x(TimePoint(t), atom);
        }
    }
    return BinaryProcess(x.time_count(), x.atom_count(), std::move(values));
}

/// Deterministic permutation of n atoms for a seed (Fisher-Yates on Rng).
std::vector<AtomIndex> permutation(std::uint64_t seed, std::size_t n);

}  // namespace stoptime::testing
