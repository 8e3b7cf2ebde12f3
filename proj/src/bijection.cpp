#include "stoptime/bijection.hpp"

namespace stoptime {

RandomTime time_from_process(const BinaryProcess& process, const Filtration& filtration) {
    if (auto verdict = is_stopping_process(process, filtration); !verdict) {
        throw RejectedInputError("not a stopping process: " + verdict.diagnostic);
    }
    std::vector<TimePoint> values(process.atom_count(), TimePoint::infinity());
    for (AtomIndex atom = 0; atom < process.atom_count(); ++atom) {
        for (std::size_t i = 0; i < process.time_count(); ++i) {
            if (process(TimePoint(i), atom) == 0) {
                values[atom] = TimePoint(i);
                break;
            }
        }
    }
    return RandomTime(std::move(values));
}

BinaryProcess process_from_time(const RandomTime& tau, const Filtration& filtration) {
    if (auto verdict = is_stopping_time(tau, filtration); !verdict) {
        throw RejectedInputError("not a stopping time: " + verdict.diagnostic);
    }
    const auto times = filtration.time_count();
    const auto atoms = filtration.atom_count();
    std::vector<std::uint8_t> values(times * atoms);
    for (std::size_t i = 0; i < times; ++i) {
        for (AtomIndex atom = 0; atom < atoms; ++atom) {
            values[i * atoms + atom] = tau[atom] > TimePoint(i) ? 1 : 0;
        }
    }
    return BinaryProcess(times, atoms, std::move(values));
}

HittingResult hitting_time(const RealProcess& process, const BorelSet& target,
                           const Filtration& filtration) {
    check_shape(process, filtration);
    std::vector<TimePoint> values(process.atom_count(), TimePoint::infinity());
    for (AtomIndex atom = 0; atom < process.atom_count(); ++atom) {
        for (std::size_t i = 0; i < process.time_count(); ++i) {
            if (member(process(TimePoint(i), atom), target)) {
                values[atom] = TimePoint(i);
                break;
            }
        }
    }
    RandomTime time(std::move(values));
    auto verdict = is_stopping_time(time, filtration);
    return {std::move(time), std::move(verdict)};
}

RandomTime roundtrip_time(const RandomTime& tau, const Filtration& filtration) {
    return time_from_process(process_from_time(tau, filtration), filtration);
}

BinaryProcess roundtrip_process(const BinaryProcess& process, const Filtration& filtration) {
    return process_from_time(time_from_process(process, filtration), filtration);
}

}  // namespace stoptime
