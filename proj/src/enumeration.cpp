#include "stoptime/enumeration.hpp"

#include <algorithm>
#include <limits>

#include "stoptime/bijection.hpp"

namespace stoptime {
namespace {

void require_enumerable(const Filtration& filtration, const EnumerationLimits& limits) {
    if (auto verdict = validate_filtration(filtration); !verdict) {
        throw DomainError("cannot enumerate over an invalid filtration: " + verdict.diagnostic);
    }
    const auto bound = candidate_bound(filtration);
    if (bound > limits.max_candidates) {
        throw ResourceError("enumeration needs up to " + std::to_string(bound) +
                            " candidate states, cap is " + std::to_string(limits.max_candidates));
    }
}

// Blocks of level `t` whose atoms satisfy `keep`; for a valid filtration
// every level-t block lies entirely inside or outside an F_{t-1} event.
std::vector<std::size_t> blocks_where(const Partition& level, const auto& keep) {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < level.block_count(); ++b) {
        if (keep(level.block(b).front())) out.push_back(b);
    }
    if (out.size() >= 64) throw ResourceError("too many blocks at one level to enumerate");
    return out;
}

void extend_times(const Filtration& filtration, std::size_t level,
                  std::vector<TimePoint>& current, std::vector<RandomTime>& out) {
    if (level == filtration.time_count()) {
        out.emplace_back(current);
        return;
    }
    const TimePoint t(level);
    const auto& partition = filtration.level(t);
    const auto running = blocks_where(
        partition, [&](AtomIndex atom) { return current[atom].is_infinite(); });
    const std::uint64_t subsets = std::uint64_t{1} << running.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        for (std::size_t k = 0; k < running.size(); ++k) {
            if (mask >> k & 1U) {
                for (AtomIndex atom : partition.block(running[k])) current[atom] = t;
            }
        }
        extend_times(filtration, level + 1, current, out);
        for (std::size_t k = 0; k < running.size(); ++k) {
            if (mask >> k & 1U) {
                for (AtomIndex atom : partition.block(running[k])) {
                    current[atom] = TimePoint::infinity();
                }
            }
        }
    }
}

void extend_processes(const Filtration& filtration, std::size_t level,
                      std::vector<std::uint8_t>& table, std::vector<BinaryProcess>& out) {
    const auto atoms = filtration.atom_count();
    if (level == filtration.time_count()) {
        out.emplace_back(filtration.time_count(), atoms, table);
        return;
    }
    const auto& partition = filtration.level(TimePoint(level));
    const auto alive = blocks_where(partition, [&](AtomIndex atom) {
        return level == 0 || table[(level - 1) * atoms + atom] == 1;
    });
    const std::uint64_t subsets = std::uint64_t{1} << alive.size();
    auto* section = table.data() + level * atoms;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        std::fill(section, section + atoms, std::uint8_t{0});
        for (std::size_t k = 0; k < alive.size(); ++k) {
            if (mask >> k & 1U) {
                for (AtomIndex atom : partition.block(alive[k])) section[atom] = 1;
            }
        }
        extend_processes(filtration, level + 1, table, out);
    }
    std::fill(section, section + atoms, std::uint8_t{0});
}

}  // namespace

std::uint64_t candidate_bound(const Filtration& filtration) {
    const auto base = static_cast<std::uint64_t>(filtration.time_count()) + 1;
    const auto exponent = filtration.levels().back().block_count();
    std::uint64_t bound = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (bound > std::numeric_limits<std::uint64_t>::max() / base) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        bound *= base;
    }
    return bound;
}

std::vector<RandomTime> enumerate_stopping_times(const Filtration& filtration,
                                                 const EnumerationLimits& limits) {
    require_enumerable(filtration, limits);
    std::vector<TimePoint> current(filtration.atom_count(), TimePoint::infinity());
    std::vector<RandomTime> out;
    extend_times(filtration, 0, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<BinaryProcess> enumerate_stopping_processes(const Filtration& filtration,
                                                        const EnumerationLimits& limits) {
    require_enumerable(filtration, limits);
    std::vector<std::uint8_t> table(filtration.time_count() * filtration.atom_count(), 0);
    std::vector<BinaryProcess> out;
    extend_processes(filtration, 0, table, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::string describe(const RandomTime& tau, const Filtration& filtration) {
    std::string out = "tau(";
    for (AtomIndex atom = 0; atom < tau.atom_count(); ++atom) {
        if (atom) out += ", ";
        out += filtration.space().label(atom) + "=" + filtration.grid().format(tau[atom]);
    }
    return out + ")";
}

std::string describe(const BinaryProcess& process, const Filtration& filtration) {
    std::string out = "X(";
    for (AtomIndex atom = 0; atom < process.atom_count(); ++atom) {
        if (atom) out += ", ";
        out += filtration.space().label(atom) + "=";
        for (auto v : process.path(atom)) out += static_cast<char>('0' + v);
    }
    return out + ")";
}

EnumerationReport check_bijection(const Filtration& filtration, Comparison comparison,
                                  const EnumerationLimits& limits) {
    const auto times = enumerate_stopping_times(filtration, limits);
    const auto processes = enumerate_stopping_processes(filtration, limits);
    const auto& space = filtration.space();

    EnumerationReport report;
    report.stopping_time_count = times.size();
    report.stopping_process_count = processes.size();
    auto& failures = report.roundtrip_failures;

    for (const auto& tau : times) {
        const auto back = roundtrip_time(tau, filtration);
        const bool same = comparison == Comparison::exact ? back == tau
                                                          : times_equal_as(back, tau, space);
        if (!same) {
            failures.push_back("time round trip changed " + describe(tau, filtration) +
                               " into " + describe(back, filtration));
        }
    }
    std::vector<RandomTime> image;
    image.reserve(processes.size());
    for (const auto& process : processes) {
        const auto back = roundtrip_process(process, filtration);
        const bool same = comparison == Comparison::exact
                              ? back == process
                              : processes_equal_as(back, process, space);
        if (!same) {
            failures.push_back("process round trip changed " + describe(process, filtration) +
                               " into " + describe(back, filtration));
        }
        image.push_back(time_from_process(process, filtration));
    }
    std::sort(image.begin(), image.end());
    if (image != times) {
        failures.push_back("stopping processes do not map onto the enumerated stopping times");
    }
    return report;
}

}  // namespace stoptime
