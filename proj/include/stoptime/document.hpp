#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "stoptime/filtration.hpp"
#include "stoptime/processes.hpp"

namespace stoptime {

using ProcessSection = std::variant<BinaryProcess, RealProcess>;

/// An instance file. Every section is optional, but sections that refer to
/// atoms or times need "space" and "grid". When present, `filtration` holds
/// the same space and grid as the document.
struct InstanceDocument {
    std::optional<SampleSpace> space;
    std::optional<TimeGrid> grid;
    std::optional<Filtration> filtration;
    std::optional<RandomTime> time;
    std::optional<ProcessSection> process;
    std::optional<BorelSet> borel_set;

    bool operator==(const InstanceDocument&) const = default;
};

inline constexpr std::string_view kDocumentVersion = "1";

/// Throws ParseError naming the offending field (or the byte offset for
/// malformed JSON), unknown versions and dangling atom/time references.
InstanceDocument parse_document(std::string_view text);

/// Canonical form: sorted keys, no insignificant whitespace, atoms in space
/// order, grid ascending, trailing newline.
std::string serialize_document(const InstanceDocument& document);

/// Just the canonical "time" value, e.g. {"a":"1","b":"inf"} (no newline).
std::string serialize_time_section(const RandomTime& tau, const SampleSpace& space,
                                   const TimeGrid& grid);
/// Just the canonical binary "process" value (no newline).
std::string serialize_process_section(const BinaryProcess& process, const SampleSpace& space,
                                      const TimeGrid& grid);

}  // namespace stoptime
