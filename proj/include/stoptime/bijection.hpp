#pragma once

#include "stoptime/filtration.hpp"
#include "stoptime/processes.hpp"
#include "stoptime/verdict.hpp"

namespace stoptime {

/// tau^X(omega): the first grid time with X = 0, or +inf if the path stays
/// at 1. Throws RejectedInputError unless `process` is a stopping process.
RandomTime time_from_process(const BinaryProcess& process, const Filtration& filtration);

/// X^tau_t = 1{tau > t} on the grid. Throws RejectedInputError unless `tau`
/// is a stopping time.
BinaryProcess process_from_time(const RandomTime& tau, const Filtration& filtration);

struct HittingResult {
    RandomTime time;
    /// is_stopping_time verdict for `time`.
    Verdict stopping;
};

/// First grid time at which the path lies in `target`, +inf if never.
/// Defined for any total process; adaptedness is reflected in the verdict.
HittingResult hitting_time(const RealProcess& process, const BorelSet& target,
                           const Filtration& filtration);

RandomTime roundtrip_time(const RandomTime& tau, const Filtration& filtration);
BinaryProcess roundtrip_process(const BinaryProcess& process, const Filtration& filtration);

}  // namespace stoptime
