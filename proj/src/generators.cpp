#include "stoptime/generators.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace stoptime {

Rng::Rng(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq sequence{static_cast<std::uint32_t>(seed),
                           static_cast<std::uint32_t>(seed >> 32), stream};
    engine_.seed(sequence);
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("Rng::below needs a positive bound");
    // Reject the low values that would bias x % bound.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        const std::uint64_t x = engine_();
        if (x >= threshold) return x % bound;
    }
}

namespace {

enum Stream : std::uint32_t {
    kFiltration = 0,
    kStoppingTime = 1,
    kStoppingProcess = 2,
    kRealProcess = 3,
    kBorelSet = 4,
};

std::string atom_label(std::size_t i) {
    if (i < 26) return std::string(1, static_cast<char>('a' + i));
    return "w" + std::to_string(i);
}

Partition split_blocks(const Partition& coarse, Rng& rng) {
    std::vector<std::size_t> key(coarse.atom_count());
    for (std::size_t b = 0; b < coarse.block_count(); ++b) {
        const bool split = rng.chance(1, 2);
        for (AtomIndex atom : coarse.block(b)) {
            key[atom] = 2 * b + (split ? rng.below(2) : 0);
        }
    }
    return Partition::from_labels(key);
}

Rational lattice_value(const ValueRange& range, std::uint64_t k) {
    return range.lo + (range.hi - range.lo) * Rational(static_cast<std::int64_t>(k),
                                                       static_cast<std::int64_t>(range.steps));
}

void check_range(const ValueRange& range) {
    if (range.steps == 0 || range.hi < range.lo) throw DomainError("empty value range");
}

}  // namespace

Filtration gen_filtration(std::uint64_t seed, std::size_t max_atoms, std::size_t max_times) {
    if (max_atoms == 0 || max_times == 0) throw DomainError("generator bounds must be at least 1");
    Rng rng(seed, kFiltration);
    const auto atoms = static_cast<std::size_t>(rng.between(1, max_atoms));
    const auto times = static_cast<std::size_t>(rng.between(1, max_times));

    std::vector<std::string> labels;
    std::vector<std::int64_t> raw(atoms);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < atoms; ++i) {
        labels.push_back(atom_label(i));
        raw[i] = static_cast<std::int64_t>(rng.below(5));
        total += raw[i];
    }
    if (total == 0) {
        raw[rng.below(atoms)] = 1;
        total = 1;
    }
    std::vector<Rational> weights;
    for (auto w : raw) weights.emplace_back(w, total);

    std::vector<Rational> grid;
    Rational t(static_cast<std::int64_t>(rng.below(3)));
    for (std::size_t i = 0; i < times; ++i) {
        grid.push_back(t);
        t += Rational(static_cast<std::int64_t>(rng.between(1, 4)),
                      static_cast<std::int64_t>(rng.between(1, 3)));
    }

    std::vector<std::size_t> key(atoms);
    const auto first_blocks = rng.between(1, atoms);
    for (auto& k : key) k = rng.below(first_blocks);
    std::vector<Partition> levels{Partition::from_labels(key)};
    while (levels.size() < times) levels.push_back(split_blocks(levels.back(), rng));
    auto terminal = rng.chance(1, 2) ? Partition::discrete(atoms) : split_blocks(levels.back(), rng);

    return Filtration(SampleSpace(std::move(labels), std::move(weights)), TimeGrid(std::move(grid)),
                      std::move(levels), std::move(terminal));
}

RandomTime gen_stopping_time(std::uint64_t seed, const Filtration& filtration) {
    Rng rng(seed, kStoppingTime);
    const auto rate = rng.below(8);
    std::vector<TimePoint> values(filtration.atom_count(), TimePoint::infinity());
    for (std::size_t i = 0; i < filtration.time_count(); ++i) {
        const auto& level = filtration.level(TimePoint(i));
        for (const auto& block : level.blocks()) {
            if (!values[block.front()].is_infinite()) continue;
            if (rng.chance(rate, 8)) {
                for (AtomIndex atom : block) values[atom] = TimePoint(i);
            }
        }
    }
    return RandomTime(std::move(values));
}

BinaryProcess gen_stopping_process(std::uint64_t seed, const Filtration& filtration) {
    Rng rng(seed, kStoppingProcess);
    const auto rate = rng.below(8);
    const auto atoms = filtration.atom_count();
    std::vector<std::uint8_t> table(filtration.time_count() * atoms, 0);
    for (std::size_t i = 0; i < filtration.time_count(); ++i) {
        const auto& level = filtration.level(TimePoint(i));
        for (const auto& block : level.blocks()) {
            const bool alive = i == 0 || table[(i - 1) * atoms + block.front()] == 1;
            const std::uint8_t value = alive && !rng.chance(rate, 8) ? 1 : 0;
            for (AtomIndex atom : block) table[i * atoms + atom] = value;
        }
    }
    return BinaryProcess(filtration.time_count(), atoms, std::move(table));
}

RealProcess gen_adapted_real_process(std::uint64_t seed, const Filtration& filtration,
                                     const ValueRange& range) {
    check_range(range);
    Rng rng(seed, kRealProcess);
    const auto atoms = filtration.atom_count();
    std::vector<Rational> table(filtration.time_count() * atoms);
    for (std::size_t i = 0; i < filtration.time_count(); ++i) {
        for (const auto& block : filtration.level(TimePoint(i)).blocks()) {
            const auto value = lattice_value(range, rng.below(range.steps + 1));
            for (AtomIndex atom : block) table[i * atoms + atom] = value;
        }
    }
    return RealProcess(filtration.time_count(), atoms, std::move(table));
}

BorelSet gen_borel_set(std::uint64_t seed, const ValueRange& range) {
    check_range(range);
    Rng rng(seed, kBorelSet);
    std::vector<Rational> points;
    const auto point_count = rng.between(0, 3);
    for (std::uint64_t i = 0; i < point_count; ++i) {
        points.push_back(lattice_value(range, rng.below(range.steps + 1)));
    }
    std::vector<Interval> intervals;
    const auto interval_count = rng.between(0, 2);
    for (std::uint64_t i = 0; i < interval_count; ++i) {
        Interval interval;
        const auto lo_k = rng.below(range.steps + 1);
        const auto hi_k = rng.between(lo_k, range.steps);
        if (!rng.chance(1, 4)) {
            interval.lo = lattice_value(range, lo_k);
            interval.lo_open = rng.chance(1, 2);
        }
        if (!rng.chance(1, 4)) {
            interval.hi = lattice_value(range, hi_k);
            interval.hi_open = rng.chance(1, 2);
        }
        if (interval.lo && interval.hi && *interval.lo == *interval.hi) {
            interval.lo_open = interval.hi_open = false;
        }
        intervals.push_back(interval);
    }
    return BorelSet(std::move(intervals), std::move(points));
}

}  // namespace stoptime
