#include "support.hpp"

#include "stoptime/generators.hpp"

namespace stoptime::testing {

std::vector<AtomIndex> permutation(std::uint64_t seed, std::size_t n) {
    Rng rng(seed, 99);
    std::vector<AtomIndex> perm(n);
    for (AtomIndex i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    return perm;
}

}  // namespace stoptime::testing
