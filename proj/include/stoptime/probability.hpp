#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stoptime/errors.hpp"
#include "stoptime/rational.hpp"

namespace stoptime {

using AtomIndex = std::size_t;

/// A finite sample space: ordered, distinct outcome labels with exact
/// probability weights summing to one. Zero-weight atoms are allowed.
class SampleSpace {
public:
    SampleSpace(std::vector<std::string> labels, std::vector<Rational> weights);

    /// Equal weights 1/n on the given labels.
    static SampleSpace uniform(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(AtomIndex atom) const { return labels_.at(atom); }
    const Rational& weight(AtomIndex atom) const { return weights_.at(atom); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Rational>& weights() const { return weights_; }
    std::optional<AtomIndex> find(std::string_view label) const;

    bool operator==(const SampleSpace&) const = default;

private:
    std::vector<std::string> labels_;
    std::vector<Rational> weights_;
};

/// A subset of the atoms of a sample space with `atom_count` atoms.
class EventSet {
public:
    explicit EventSet(std::size_t atom_count) : members_(atom_count, false) {}
    EventSet(std::size_t atom_count, std::span<const AtomIndex> atoms);

    static EventSet empty(std::size_t atom_count) { return EventSet(atom_count); }
    static EventSet full(std::size_t atom_count);

    std::size_t atom_count() const { return members_.size(); }
    bool contains(AtomIndex atom) const { return members_.at(atom); }
    void insert(AtomIndex atom) { members_.at(atom) = true; }
    std::size_t count() const;
    bool is_empty() const { return count() == 0; }
    std::vector<AtomIndex> atoms() const;

    bool operator==(const EventSet&) const = default;

private:
    std::vector<bool> members_;
};

/// A partition of {0, ..., n-1} in canonical form: atoms ascending inside
/// each block, blocks ordered by their least atom. On a finite sample space
/// this is the same thing as a sigma-algebra (its atoms are the blocks).
class Partition {
public:
    /// Throws DomainError unless the blocks are nonempty, disjoint and cover
    /// every atom. Input order is irrelevant; the stored form is canonical.
    Partition(std::size_t atom_count, std::vector<std::vector<AtomIndex>> blocks);

    /// {Omega}
    static Partition trivial(std::size_t atom_count);
    /// {{w} : w in Omega}
    static Partition discrete(std::size_t atom_count);
    /// Blocks are the level sets of `key` (one entry per atom).
    static Partition from_labels(std::span<const std::size_t> key);

    std::size_t atom_count() const { return block_of_.size(); }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::vector<AtomIndex>>& blocks() const { return blocks_; }
    const std::vector<AtomIndex>& block(std::size_t index) const { return blocks_.at(index); }
    std::size_t block_of(AtomIndex atom) const { return block_of_.at(atom); }

    bool operator==(const Partition& other) const { return blocks_ == other.blocks_; }

private:
    std::vector<std::vector<AtomIndex>> blocks_;
    std::vector<std::size_t> block_of_;
};

/// True iff `event` is a union of blocks of `sigma`.
bool is_measurable(const EventSet& event, const Partition& sigma);

/// True iff every block of `fine` sits inside a block of `coarse`
/// (sigma(coarse) is a sub-sigma-algebra of sigma(fine)).
bool refines(const Partition& fine, const Partition& coarse);

/// True iff `values` (indexed by atom) is constant on every block.
template <typename T>
bool is_constant_on_blocks(std::span<const T> values, const Partition& sigma) {
    if (values.size() != sigma.atom_count()) {
        throw DomainError("function is not defined on every atom of the partition");
    }
    for (const auto& block : sigma.blocks()) {
        for (AtomIndex atom : block) {
            if (!(values[atom] == values[block.front()])) return false;
        }
    }
    return true;
}

template <typename T>
bool is_constant_on_blocks(const std::vector<T>& values, const Partition& sigma) {
    return is_constant_on_blocks(std::span<const T>(values), sigma);
}

Rational probability(const EventSet& event, const SampleSpace& space);

/// True iff the event has probability exactly zero.
bool null_event(const EventSet& event, const SampleSpace& space);

/// Human-readable "{a,b}" using the space's labels.
std::string describe(const EventSet& event, const SampleSpace& space);
std::string describe(const Partition& sigma, const SampleSpace& space);

}  // namespace stoptime
