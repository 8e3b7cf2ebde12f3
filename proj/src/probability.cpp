#include "stoptime/probability.hpp"

#include <algorithm>
#include <unordered_set>

namespace stoptime {

SampleSpace::SampleSpace(std::vector<std::string> labels, std::vector<Rational> weights)
    : labels_(std::move(labels)), weights_(std::move(weights)) {
    if (labels_.empty()) throw DomainError("sample space must have at least one atom");
    if (labels_.size() != weights_.size()) {
        throw DomainError("sample space needs exactly one weight per atom");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : labels_) {
        if (!seen.insert(label).second) throw DomainError("duplicate atom label \"" + label + "\"");
    }
    Rational total(0);
    for (const auto& w : weights_) {
        if (w < Rational(0)) throw DomainError("negative probability weight");
        total += w;
    }
    if (total != Rational(1)) {
        throw DomainError("probability weights sum to " + format_rational(total) + ", not 1");
    }
}

SampleSpace SampleSpace::uniform(std::vector<std::string> labels) {
    const auto n = static_cast<std::int64_t>(labels.size());
    std::vector<Rational> weights(labels.size(), n == 0 ? Rational(0) : Rational(1, n));
    return SampleSpace(std::move(labels), std::move(weights));
}

std::optional<AtomIndex> SampleSpace::find(std::string_view label) const {
    const auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<AtomIndex>(it - labels_.begin());
}

EventSet::EventSet(std::size_t atom_count, std::span<const AtomIndex> atoms)
    : members_(atom_count, false) {
    for (AtomIndex atom : atoms) {
        if (atom >= atom_count) throw DomainError("event refers to an atom outside the space");
        members_[atom] = true;
    }
}

EventSet EventSet::full(std::size_t atom_count) {
    EventSet out(atom_count);
    out.members_.assign(atom_count, true);
    return out;
}

std::size_t EventSet::count() const {
    return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

std::vector<AtomIndex> EventSet::atoms() const {
    std::vector<AtomIndex> out;
    for (AtomIndex i = 0; i < members_.size(); ++i) {
        if (members_[i]) out.push_back(i);
    }
    return out;
}

Partition::Partition(std::size_t atom_count, std::vector<std::vector<AtomIndex>> blocks)
    : blocks_(std::move(blocks)), block_of_(atom_count, atom_count) {
    for (auto& block : blocks_) {
        if (block.empty()) throw DomainError("partition has an empty block");
        std::sort(block.begin(), block.end());
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const auto& lhs, const auto& rhs) { return lhs.front() < rhs.front(); });
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        for (AtomIndex atom : blocks_[b]) {
            if (atom >= atom_count) throw DomainError("partition refers to an atom outside the space");
            if (block_of_[atom] != atom_count) throw DomainError("partition blocks overlap");
            block_of_[atom] = b;
        }
    }
    if (std::find(block_of_.begin(), block_of_.end(), atom_count) != block_of_.end()) {
        throw DomainError("partition blocks do not cover every atom");
    }
}

Partition Partition::trivial(std::size_t atom_count) {
    std::vector<AtomIndex> all(atom_count);
    for (AtomIndex i = 0; i < atom_count; ++i) all[i] = i;
    return Partition(atom_count, {std::move(all)});
}

Partition Partition::discrete(std::size_t atom_count) {
    std::vector<std::vector<AtomIndex>> blocks;
    for (AtomIndex i = 0; i < atom_count; ++i) blocks.push_back({i});
    return Partition(atom_count, std::move(blocks));
}

Partition Partition::from_labels(std::span<const std::size_t> key) {
    std::vector<std::vector<AtomIndex>> blocks;
    std::vector<std::size_t> seen_keys;
    for (AtomIndex atom = 0; atom < key.size(); ++atom) {
        const auto it = std::find(seen_keys.begin(), seen_keys.end(), key[atom]);
        if (it == seen_keys.end()) {
            seen_keys.push_back(key[atom]);
            blocks.push_back({atom});
        } else {
            blocks[static_cast<std::size_t>(it - seen_keys.begin())].push_back(atom);
        }
    }
    return Partition(key.size(), std::move(blocks));
}

bool is_measurable(const EventSet& event, const Partition& sigma) {
    if (event.atom_count() != sigma.atom_count()) {
        throw DomainError("event and partition live on different sample spaces");
    }
    for (const auto& block : sigma.blocks()) {
        const bool first = event.contains(block.front());
        for (AtomIndex atom : block) {
            if (event.contains(atom) != first) return false;
        }
    }
    return true;
}

bool refines(const Partition& fine, const Partition& coarse) {
    if (fine.atom_count() != coarse.atom_count()) {
        throw DomainError("partitions live on different sample spaces");
    }
    for (const auto& block : fine.blocks()) {
        const auto target = coarse.block_of(block.front());
        for (AtomIndex atom : block) {
            if (coarse.block_of(atom) != target) return false;
        }
    }
    return true;
}

Rational probability(const EventSet& event, const SampleSpace& space) {
    if (event.atom_count() != space.size()) {
        throw DomainError("event does not belong to the sample space");
    }
    Rational total(0);
    for (AtomIndex atom : event.atoms()) total += space.weight(atom);
    return total;
}

bool null_event(const EventSet& event, const SampleSpace& space) {
    return probability(event, space) == Rational(0);
}

namespace {

std::string join_labels(const std::vector<AtomIndex>& atoms, const SampleSpace& space) {
    std::string out = "{";
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (i) out += ",";
        out += space.label(atoms[i]);
    }
    return out + "}";
}

}  // namespace

std::string describe(const EventSet& event, const SampleSpace& space) {
    return join_labels(event.atoms(), space);
}

std::string describe(const Partition& sigma, const SampleSpace& space) {
    std::string out = "{";
    for (std::size_t b = 0; b < sigma.block_count(); ++b) {
        if (b) out += ",";
        out += join_labels(sigma.block(b), space);
    }
    return out + "}";
}

}  // namespace stoptime
