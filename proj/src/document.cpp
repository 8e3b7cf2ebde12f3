#include "stoptime/document.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

namespace stoptime {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
    throw ParseError(field + ": " + message);
}

const json& require(const json& object, const char* key, const std::string& field) {
    const auto it = object.find(key);
    if (it == object.end()) fail(field, std::string("missing \"") + key + "\"");
    return *it;
}

void expect(bool condition, const std::string& field, const char* what) {
    if (!condition) fail(field, std::string("expected ") + what);
}

void only_keys(const json& object, std::initializer_list<std::string_view> allowed,
               const std::string& field) {
    for (const auto& item : object.items()) {
        bool known = false;
        for (auto key : allowed) known = known || item.key() == key;
        if (!known) fail(field, "unknown key \"" + item.key() + "\"");
    }
}

Rational rational_at(const json& value, const std::string& field) {
    expect(value.is_string(), field, "a rational string such as \"1/4\"");
    try {
        return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
        fail(field, e.what());
    }
}

AtomIndex atom_at(const json& value, const SampleSpace& space, const std::string& field) {
    expect(value.is_string(), field, "an atom label");
    const auto label = value.get<std::string>();
    if (auto atom = space.find(label)) return *atom;
    fail(field, "unknown atom \"" + label + "\"");
}

TimePoint grid_time(const std::string& text, const TimeGrid& grid, const std::string& field) {
    if (text == "inf") return TimePoint::infinity();
    Rational value;
    try {
        value = parse_rational(text);
    } catch (const ParseError& e) {
        fail(field, e.what());
    }
    if (auto t = grid.find(value)) return *t;
    fail(field, "time " + text + " is not on the grid");
}

SampleSpace parse_space(const json& node) {
    const std::string field = "space";
    expect(node.is_object(), field, "an object");
    only_keys(node, {"atoms", "weights"}, field);
    const auto& atoms = require(node, "atoms", field);
    expect(atoms.is_array(), field + ".atoms", "an array of labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        expect(atoms[i].is_string(), field + ".atoms[" + std::to_string(i) + "]", "a string");
        labels.push_back(atoms[i].get<std::string>());
    }
    const auto& weights = require(node, "weights", field);
    expect(weights.is_object(), field + ".weights", "an object");
    std::map<std::string, Rational> by_label;
    for (const auto& item : weights.items()) {
        const auto key = field + ".weights." + item.key();
        if (std::find(labels.begin(), labels.end(), item.key()) == labels.end()) {
            fail(key, "unknown atom \"" + item.key() + "\"");
        }
        by_label[item.key()] = rational_at(item.value(), key);
    }
    std::vector<Rational> values;
    for (const auto& label : labels) {
        const auto it = by_label.find(label);
        if (it == by_label.end()) fail(field + ".weights", "no weight for atom \"" + label + "\"");
        values.push_back(it->second);
    }
    try {
        return SampleSpace(std::move(labels), std::move(values));
    } catch (const DomainError& e) {
        fail(field, e.what());
    }
}

TimeGrid parse_grid(const json& node) {
    expect(node.is_array(), "grid", "an array of rational strings");
    std::vector<Rational> times;
    for (std::size_t i = 0; i < node.size(); ++i) {
        times.push_back(rational_at(node[i], "grid[" + std::to_string(i) + "]"));
    }
    try {
        return TimeGrid(std::move(times));
    } catch (const DomainError& e) {
        fail("grid", e.what());
    }
}

Partition parse_partition(const json& node, const SampleSpace& space, const std::string& field) {
    expect(node.is_array(), field, "an array of blocks");
    std::vector<std::vector<AtomIndex>> blocks;
    for (std::size_t b = 0; b < node.size(); ++b) {
        const auto block_field = field + "[" + std::to_string(b) + "]";
        expect(node[b].is_array(), block_field, "an array of atom labels");
        std::vector<AtomIndex> block;
        for (std::size_t i = 0; i < node[b].size(); ++i) {
            block.push_back(atom_at(node[b][i], space, block_field + "[" + std::to_string(i) + "]"));
        }
        blocks.push_back(std::move(block));
    }
    try {
        return Partition(space.size(), std::move(blocks));
    } catch (const DomainError& e) {
        fail(field, e.what());
    }
}

Filtration parse_filtration(const json& node, const SampleSpace& space, const TimeGrid& grid) {
    const std::string field = "filtration";
    expect(node.is_object(), field, "an object");
    only_keys(node, {"levels", "terminal"}, field);
    const auto& levels_node = require(node, "levels", field);
    expect(levels_node.is_array(), field + ".levels", "an array of partitions");
    std::vector<Partition> levels;
    for (std::size_t i = 0; i < levels_node.size(); ++i) {
        levels.push_back(
            parse_partition(levels_node[i], space, field + ".levels[" + std::to_string(i) + "]"));
    }
    std::optional<Partition> terminal;
    if (auto it = node.find("terminal"); it != node.end()) {
        terminal = parse_partition(*it, space, field + ".terminal");
    }
    try {
        return Filtration(space, grid, std::move(levels), std::move(terminal));
    } catch (const DomainError& e) {
        fail(field, e.what());
    }
}

RandomTime parse_time(const json& node, const SampleSpace& space, const TimeGrid& grid) {
    expect(node.is_object(), "time", "an object mapping atoms to times");
    std::vector<std::optional<TimePoint>> values(space.size());
    for (const auto& item : node.items()) {
        const auto key = "time." + item.key();
        const auto atom = atom_at(json(item.key()), space, key);
        expect(item.value().is_string(), key, "a time string or \"inf\"");
        values[atom] = grid_time(item.value().get<std::string>(), grid, key);
    }
    std::vector<TimePoint> out;
    for (AtomIndex atom = 0; atom < space.size(); ++atom) {
        if (!values[atom]) fail("time", "no value for atom \"" + space.label(atom) + "\"");
        out.push_back(*values[atom]);
    }
    return RandomTime(std::move(out));
}

ProcessSection parse_process(const json& node, const SampleSpace& space, const TimeGrid& grid) {
    const std::string field = "process";
    expect(node.is_object(), field, "an object keyed by grid time");
    const auto atoms = space.size();
    std::vector<std::optional<json>> cells(grid.size() * atoms);
    std::size_t integers = 0;
    std::size_t strings = 0;
    for (const auto& row : node.items()) {
        const auto row_field = field + "." + row.key();
        const auto t = grid_time(row.key(), grid, row_field);
        if (t.is_infinite()) fail(row_field, "process is indexed by grid times only");
        expect(row.value().is_object(), row_field, "an object mapping atoms to values");
        for (const auto& cell : row.value().items()) {
            const auto key = row_field + "." + cell.key();
            const auto atom = atom_at(json(cell.key()), space, key);
            auto& slot = cells[t.index() * atoms + atom];
            if (slot) fail(key, "duplicate value");
            if (cell.value().is_number_integer()) {
                ++integers;
            } else if (cell.value().is_string()) {
                ++strings;
            } else {
                fail(key, "expected 0, 1 or a rational string");
            }
            slot = cell.value();
        }
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (!cells[i]) {
            fail(field, "no value at time " + grid.format(TimePoint(i / atoms)) + " for atom \"" +
                            space.label(i % atoms) + "\"");
        }
    }
    if (integers && strings) fail(field, "mixes binary (0/1) and rational values");
    if (strings) {
        std::vector<Rational> values;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            values.push_back(rational_at(*cells[i], field + "." + grid.format(TimePoint(i / atoms)) +
                                                        "." + space.label(i % atoms)));
        }
        return RealProcess(grid.size(), atoms, std::move(values));
    }
    std::vector<std::uint8_t> values;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const auto v = cells[i]->get<std::int64_t>();
        if (v != 0 && v != 1) {
            fail(field + "." + grid.format(TimePoint(i / atoms)) + "." + space.label(i % atoms),
                 "binary value must be 0 or 1");
        }
        values.push_back(static_cast<std::uint8_t>(v));
    }
    return BinaryProcess(grid.size(), atoms, std::move(values));
}

std::optional<Rational> endpoint(const json& node, bool lower, const std::string& field) {
    expect(node.is_string(), field, "a rational string or infinity");
    const auto text = node.get<std::string>();
    if (lower && text == "-inf") return std::nullopt;
    if (!lower && (text == "inf" || text == "+inf")) return std::nullopt;
    if (text == "inf" || text == "+inf" || text == "-inf") {
        fail(field, lower ? "lower end cannot be +inf" : "upper end cannot be -inf");
    }
    return rational_at(node, field);
}

BorelSet parse_borel_set(const json& node) {
    const std::string field = "borel_set";
    expect(node.is_object(), field, "an object");
    only_keys(node, {"intervals", "points"}, field);
    std::vector<Interval> intervals;
    if (auto it = node.find("intervals"); it != node.end()) {
        expect(it->is_array(), field + ".intervals", "an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const auto item_field = field + ".intervals[" + std::to_string(i) + "]";
            const auto& item = (*it)[i];
            expect(item.is_object(), item_field, "an object");
            only_keys(item, {"lo", "lo_open", "hi", "hi_open"}, item_field);
            Interval interval;
            interval.lo = endpoint(require(item, "lo", item_field), true, item_field + ".lo");
            interval.hi = endpoint(require(item, "hi", item_field), false, item_field + ".hi");
            const auto& lo_open = require(item, "lo_open", item_field);
            const auto& hi_open = require(item, "hi_open", item_field);
            expect(lo_open.is_boolean(), item_field + ".lo_open", "a boolean");
            expect(hi_open.is_boolean(), item_field + ".hi_open", "a boolean");
            interval.lo_open = lo_open.get<bool>();
            interval.hi_open = hi_open.get<bool>();
            intervals.push_back(interval);
        }
    }
    std::vector<Rational> points;
    if (auto it = node.find("points"); it != node.end()) {
        expect(it->is_array(), field + ".points", "an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            points.push_back(rational_at((*it)[i], field + ".points[" + std::to_string(i) + "]"));
        }
    }
    try {
        return BorelSet(std::move(intervals), std::move(points));
    } catch (const DomainError& e) {
        fail(field, e.what());
    }
}

json partition_json(const Partition& partition, const SampleSpace& space) {
    json out = json::array();
    for (const auto& block : partition.blocks()) {
        json labels = json::array();
        for (AtomIndex atom : block) labels.push_back(space.label(atom));
        out.push_back(std::move(labels));
    }
    return out;
}

json time_json(const RandomTime& tau, const SampleSpace& space, const TimeGrid& grid) {
    json out = json::object();
    for (AtomIndex atom = 0; atom < space.size(); ++atom) {
        out[space.label(atom)] = grid.format(tau.at(atom));
    }
    return out;
}

template <typename Value>
json process_json(const Process<Value>& process, const SampleSpace& space, const TimeGrid& grid) {
    json out = json::object();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        json row = json::object();
        for (AtomIndex atom = 0; atom < space.size(); ++atom) {
            const auto& v = process.at(TimePoint(i), atom);
            if constexpr (std::is_same_v<Value, Rational>) {
                row[space.label(atom)] = format_rational(v);
            } else {
                row[space.label(atom)] = static_cast<int>(v);
            }
        }
        out[grid.format(TimePoint(i))] = std::move(row);
    }
    return out;
}

json borel_json(const BorelSet& set) {
    json intervals = json::array();
    for (const auto& interval : set.intervals()) {
        intervals.push_back({
            {"lo", interval.lo ? format_rational(*interval.lo) : "-inf"},
            {"lo_open", interval.lo_open},
            {"hi", interval.hi ? format_rational(*interval.hi) : "inf"},
            {"hi_open", interval.hi_open},
        });
    }
    json points = json::array();
    for (const auto& p : set.points()) points.push_back(format_rational(p));
    return {{"intervals", std::move(intervals)}, {"points", std::move(points)}};
}

void require_context(const InstanceDocument& doc, const char* section) {
    if (!doc.space || !doc.grid) {
        fail(section, "needs both \"space\" and \"grid\" sections");
    }
}

}  // namespace

InstanceDocument parse_document(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    expect(root.is_object(), "document", "a JSON object");
    only_keys(root, {"version", "space", "grid", "filtration", "time", "process", "borel_set"},
              "document");
    const auto& version = require(root, "version", "document");
    if (!version.is_string() || version.get<std::string>() != kDocumentVersion) {
        fail("version", "unsupported version " + version.dump());
    }

    InstanceDocument doc;
    if (auto it = root.find("space"); it != root.end()) doc.space = parse_space(*it);
    if (auto it = root.find("grid"); it != root.end()) doc.grid = parse_grid(*it);
    if (auto it = root.find("filtration"); it != root.end()) {
        require_context(doc, "filtration");
        doc.filtration = parse_filtration(*it, *doc.space, *doc.grid);
    }
    if (auto it = root.find("time"); it != root.end()) {
        require_context(doc, "time");
        doc.time = parse_time(*it, *doc.space, *doc.grid);
    }
    if (auto it = root.find("process"); it != root.end()) {
        require_context(doc, "process");
        doc.process = parse_process(*it, *doc.space, *doc.grid);
    }
    if (auto it = root.find("borel_set"); it != root.end()) doc.borel_set = parse_borel_set(*it);
    return doc;
}

std::string serialize_document(const InstanceDocument& doc) {
    json root = json::object();
    root["version"] = kDocumentVersion;
    if (doc.space) {
        json weights = json::object();
        for (AtomIndex atom = 0; atom < doc.space->size(); ++atom) {
            weights[doc.space->label(atom)] = format_rational(doc.space->weight(atom));
        }
        root["space"] = {{"atoms", doc.space->labels()}, {"weights", std::move(weights)}};
    }
    if (doc.grid) {
        json times = json::array();
        for (const auto& t : doc.grid->times()) times.push_back(format_rational(t));
        root["grid"] = std::move(times);
    }
    if (doc.filtration) {
        const auto& space = doc.filtration->space();
        json levels = json::array();
        for (const auto& level : doc.filtration->levels()) {
            levels.push_back(partition_json(level, space));
        }
        root["filtration"] = {{"levels", std::move(levels)},
                              {"terminal", partition_json(doc.filtration->terminal(), space)}};
    }
    if (doc.time) {
        require_context(doc, "time");
        root["time"] = time_json(*doc.time, *doc.space, *doc.grid);
    }
    if (doc.process) {
        require_context(doc, "process");
        root["process"] = std::visit(
            [&](const auto& process) { return process_json(process, *doc.space, *doc.grid); },
            *doc.process);
    }
    if (doc.borel_set) root["borel_set"] = borel_json(*doc.borel_set);
    return root.dump() + "\n";
}

std::string serialize_time_section(const RandomTime& tau, const SampleSpace& space,
                                   const TimeGrid& grid) {
    return time_json(tau, space, grid).dump();
}

std::string serialize_process_section(const BinaryProcess& process, const SampleSpace& space,
                                      const TimeGrid& grid) {
    return process_json(process, space, grid).dump();
}

}  // namespace stoptime
