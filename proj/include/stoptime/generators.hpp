#pragma once

#include <cstdint>
#include <random>

#include "stoptime/filtration.hpp"
#include "stoptime/processes.hpp"

namespace stoptime {

/// Seeded generator with a reproducible stream on every platform:
/// std::mt19937_64 seeded through std::seed_seq{seed low word, seed high
/// word, stream}, with bounded draws by rejection sampling. Different
/// `stream` values give independent streams for the same seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint32_t stream = 0);

    /// Uniform on [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform on [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    /// True with probability numerator / denominator.
    bool chance(std::uint64_t numerator, std::uint64_t denominator) {
        return below(denominator) < numerator;
    }

private:
    std::mt19937_64 engine_;
};

/// A valid filtration with 1..max_atoms atoms and 1..max_times grid times:
/// a random first level, then each block of the previous level is split
/// with probability 1/2. The terminal is either discrete or one further
/// split of the last level. Atom labels are "a", "b", ... (then "w26", ...),
/// weights are random small integers normalised to sum 1 (zeros allowed).
Filtration gen_filtration(std::uint64_t seed, std::size_t max_atoms, std::size_t max_times);

/// Walks the grid; at each time every still-running F_t block is stopped
/// with a per-call probability drawn from {0, 1/8, ..., 7/8}.
RandomTime gen_stopping_time(std::uint64_t seed, const Filtration& filtration);

/// Same walk, written directly as a non-increasing adapted 0/1 table.
BinaryProcess gen_stopping_process(std::uint64_t seed, const Filtration& filtration);

/// Values lie on the lattice lo + k (hi - lo) / steps, k = 0..steps.
struct ValueRange {
    Rational lo{-2};
    Rational hi{2};
    std::uint32_t steps = 8;
};

/// Each section is drawn block-constant on its level.
RealProcess gen_adapted_real_process(std::uint64_t seed, const Filtration& filtration,
                                     const ValueRange& range = {});

/// One to three lattice points and up to two intervals with random ends
/// (possibly unbounded) inside `range`.
BorelSet gen_borel_set(std::uint64_t seed, const ValueRange& range = {});

}  // namespace stoptime
