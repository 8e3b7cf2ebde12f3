#include "stoptime/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stoptime/bijection.hpp"
#include "stoptime/document.hpp"
#include "stoptime/enumeration.hpp"
#include "stoptime/errors.hpp"
#include "stoptime/generators.hpp"

namespace stoptime::cli {
namespace {

/// Thrown for missing sections, unreadable files and violated preconditions.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string in_path;
    std::string out_path;
    bool almost_sure = false;
    std::uint64_t seed = 0;
    std::size_t max_atoms = 4;
    std::size_t max_times = 3;
    std::string section = "time";
    std::string kind = "times";
    std::uint64_t cap = EnumerationLimits{}.max_candidates;
};

class Session {
public:
    Session(const Options& options, std::istream& in, std::ostream& out)
        : options_(options), in_(in), out_(out) {}

    InstanceDocument read() const {
        std::ostringstream buffer;
        if (options_.in_path.empty()) {
            buffer << in_.rdbuf();
        } else {
            std::ifstream file(options_.in_path, std::ios::binary);
            if (!file) throw InputError("cannot open input file " + options_.in_path);
            buffer << file.rdbuf();
        }
        return parse_document(buffer.str());
    }

    void write(const std::string& text) const {
        if (options_.out_path.empty()) {
            out_ << text;
            return;
        }
        std::ofstream file(options_.out_path, std::ios::binary);
        if (!file) throw InputError("cannot open output file " + options_.out_path);
        file << text;
    }

    /// Diagnostics and verdicts always go to standard output.
    std::ostream& report() const { return out_; }
    const Options& options() const { return options_; }

private:
    const Options& options_;
    std::istream& in_;
    std::ostream& out_;
};

const Filtration& need_filtration(const InstanceDocument& doc) {
    if (!doc.filtration) throw InputError("document has no \"filtration\" section");
    return *doc.filtration;
}

const Filtration& need_valid_filtration(const InstanceDocument& doc) {
    const auto& filtration = need_filtration(doc);
    if (auto verdict = validate_filtration(filtration); !verdict) {
        throw InputError("invalid filtration: " + verdict.diagnostic);
    }
    return filtration;
}

const RandomTime& need_time(const InstanceDocument& doc) {
    if (!doc.time) throw InputError("document has no \"time\" section");
    return *doc.time;
}

const BinaryProcess& need_binary_process(const InstanceDocument& doc) {
    if (!doc.process) throw InputError("document has no \"process\" section");
    if (const auto* binary = std::get_if<BinaryProcess>(&*doc.process)) return *binary;
    throw InputError("\"process\" section is not a 0/1 process");
}

int verify_filtration(const Session& session) {
    const auto doc = session.read();
    const auto verdict = validate_filtration(need_filtration(doc));
    if (!verdict) {
        session.report() << "not a filtration: " << verdict.diagnostic << "\n";
        return kPredicateFalse;
    }
    session.report() << "valid filtration\n";
    return kSuccess;
}

int verify_time(const Session& session) {
    const auto doc = session.read();
    const auto& filtration = need_valid_filtration(doc);
    const auto verdict = is_stopping_time(need_time(doc), filtration);
    if (!verdict) {
        session.report() << "not a stopping time: " << verdict.diagnostic << "\n";
        return kPredicateFalse;
    }
    session.report() << "stopping time\n";
    return kSuccess;
}

int verify_process(const Session& session) {
    const auto doc = session.read();
    const auto& filtration = need_valid_filtration(doc);
    const auto verdict = is_stopping_process(need_binary_process(doc), filtration);
    if (!verdict) {
        session.report() << "not a stopping process: " << verdict.diagnostic << "\n";
        return kPredicateFalse;
    }
    session.report() << "stopping process\n";
    return kSuccess;
}

int to_process(const Session& session) {
    auto doc = session.read();
    const auto& filtration = need_valid_filtration(doc);
    auto process = process_from_time(need_time(doc), filtration);
    doc.time.reset();
    doc.process = std::move(process);
    session.write(serialize_document(doc));
    return kSuccess;
}

int to_time(const Session& session) {
    auto doc = session.read();
    const auto& filtration = need_valid_filtration(doc);
    auto tau = time_from_process(need_binary_process(doc), filtration);
    doc.process.reset();
    doc.time = std::move(tau);
    session.write(serialize_document(doc));
    return kSuccess;
}

int hit(const Session& session) {
    auto doc = session.read();
    const auto& filtration = need_valid_filtration(doc);
    if (!doc.process) throw InputError("document has no \"process\" section");
    if (!doc.borel_set) throw InputError("document has no \"borel_set\" section");
    const auto real = std::visit(
        [](const auto& process) -> RealProcess {
            if constexpr (std::is_same_v<std::decay_t<decltype(process)>, BinaryProcess>) {
                return to_real(process);
            } else {
                return process;
            }
        },
        *doc.process);
    auto result = hitting_time(real, *doc.borel_set, filtration);
    doc.time = result.time;
    session.write(serialize_document(doc));
    if (!result.stopping) {
        session.report() << "hitting time is not a stopping time: " << result.stopping.diagnostic
                         << "\n";
        return kPredicateFalse;
    }
    return kSuccess;
}

int enumerate(const Session& session) {
    const auto doc = session.read();
    const auto& filtration = need_filtration(doc);
    const EnumerationLimits limits{session.options().cap};
    std::string text;
    if (session.options().kind == "times") {
        for (const auto& tau : enumerate_stopping_times(filtration, limits)) {
            text += serialize_time_section(tau, filtration.space(), filtration.grid()) + "\n";
        }
    } else {
        for (const auto& process : enumerate_stopping_processes(filtration, limits)) {
            text += serialize_process_section(process, filtration.space(), filtration.grid()) + "\n";
        }
    }
    session.write(text);
    return kSuccess;
}

int check(const Session& session) {
    const auto doc = session.read();
    const auto report = check_bijection(
        need_filtration(doc),
        session.options().almost_sure ? Comparison::almost_sure : Comparison::exact,
        EnumerationLimits{session.options().cap});
    std::string text = "stopping_times " + std::to_string(report.stopping_time_count) +
                       "\nstopping_processes " + std::to_string(report.stopping_process_count) +
                       "\nfailures " + std::to_string(report.roundtrip_failures.size()) + "\n";
    for (const auto& failure : report.roundtrip_failures) text += "failure: " + failure + "\n";
    session.write(text);
    return report.ok() ? kSuccess : kPredicateFalse;
}

int gen(const Session& session) {
    const auto& options = session.options();
    if (options.max_atoms == 0 || options.max_times == 0) {
        throw InputError("--max-atoms and --max-times must be at least 1");
    }
    auto filtration = gen_filtration(options.seed, options.max_atoms, options.max_times);
    InstanceDocument doc;
    doc.space = filtration.space();
    doc.grid = filtration.grid();
    if (options.section == "time") {
        doc.time = gen_stopping_time(options.seed, filtration);
    } else if (options.section == "process") {
        doc.process = gen_stopping_process(options.seed, filtration);
    } else {
        doc.process = gen_adapted_real_process(options.seed, filtration);
        doc.borel_set = gen_borel_set(options.seed);
    }
    doc.filtration = std::move(filtration);
    session.write(serialize_document(doc));
    return kSuccess;
}

std::string pad(const std::string& text, std::size_t width) {
    return text + std::string(width > text.size() ? width - text.size() : 0, ' ');
}

int render(const Session& session) {
    const auto doc = session.read();
    const auto& filtration = need_valid_filtration(doc);
    const auto tau = doc.time ? *doc.time : time_from_process(need_binary_process(doc), filtration);
    if (auto verdict = is_stopping_time(tau, filtration); !verdict) {
        session.report() << "not a stopping time: " << verdict.diagnostic << "\n";
        return kPredicateFalse;
    }
    const auto& space = filtration.space();
    const auto& grid = filtration.grid();
    std::size_t label_width = 4;
    for (const auto& label : space.labels()) label_width = std::max(label_width, label.size());
    std::vector<std::size_t> widths;
    std::string text = pad("time", label_width);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto label = grid.format(TimePoint(i));
        widths.push_back(label.size());
        text += "  " + label;
    }
    text += "\n";
    for (AtomIndex atom = 0; atom < space.size(); ++atom) {
        std::string row = pad(space.label(atom), label_width);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            row += "  " + pad(TimePoint(i) < tau[atom] ? "G" : "R", widths[i]);
        }
        text += row + "  tau=" + grid.format(tau[atom]) + "\n";
    }
    session.write(text);
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    Options options;
    CLI::App app{"Stopping times and stopping processes on finite filtered spaces", "stoptime"};
    app.require_subcommand(1);

    std::vector<std::pair<CLI::App*, std::function<int(const Session&)>>> commands;
    auto add = [&](const char* name, const char* help, std::function<int(const Session&)> body) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("--in", options.in_path, "Input document (default: standard input)");
        sub->add_option("--out", options.out_path, "Output file (default: standard output)");
        sub->add_flag("--as", options.almost_sure,
                      "Compare round trips almost surely (modulo null events)");
        commands.emplace_back(sub, std::move(body));
        return sub;
    };

    add("verify-filtration", "Check that the levels form a refinement chain", verify_filtration);
    add("verify-time", "Check that the time section is a stopping time", verify_time);
    add("verify-process", "Check that the process section is a stopping process", verify_process);
    add("to-process", "Replace the stopping time by its 0/1 stopping process", to_process);
    add("to-time", "Replace the stopping process by its stopping time", to_time);
    add("hit", "First time the process enters borel_set", hit);
    auto* enumerate_cmd = add("enumerate", "List every stopping time (or process)", enumerate);
    enumerate_cmd->add_option("--kind", options.kind, "times or processes")
        ->check(CLI::IsMember({"times", "processes"}));
    enumerate_cmd->add_option("--cap", options.cap, "Maximum candidate states");
    auto* check_cmd = add("check-bijection", "Enumerate both sides and run both round trips", check);
    check_cmd->add_option("--cap", options.cap, "Maximum candidate states");
    auto* gen_cmd = add("gen", "Generate a random valid instance", gen);
    gen_cmd->add_option("--seed", options.seed, "Random seed");
    gen_cmd->add_option("--max-atoms", options.max_atoms, "Largest sample space");
    gen_cmd->add_option("--max-times", options.max_times, "Longest grid");
    gen_cmd->add_option("--section", options.section, "time, process or real")
        ->check(CLI::IsMember({"time", "process", "real"}));
    add("render", "Traffic-light timeline per atom (G before tau, R from tau on)", render);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    for (const auto& [sub, body] : commands) {
        if (!sub->parsed()) continue;
        try {
            return body(Session(options, in, out));
        } catch (const RejectedInputError& e) {
            out << e.what() << "\n";
            return kPredicateFalse;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kInputError;
        }
    }
    return kInputError;
}

}  // namespace stoptime::cli
