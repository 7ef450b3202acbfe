#include "schedsim/workload.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "schedsim/errors.hpp"

namespace schedsim {

namespace {

using nlohmann::json;

std::int64_t time_as_int(const Time& t, const std::string& what) {
    if (!t.is_integer())
        throw ValidationError("NonIntegerTime: " + what + " = " + t.str() +
                              " cannot be written as integer milliseconds");
    return t.value().numerator().convert_to<std::int64_t>();
}

Workload workload_from_json(const json& j, std::size_t line) {
    if (!j.is_object()) throw ParseError(line, "expected a JSON object");
    if (!j.contains("name") || !j["name"].is_string())
        throw ParseError(line, "missing string field 'name'");
    if (!j.contains("processes") || !j["processes"].is_array())
        throw ParseError(line, "missing array field 'processes'");

    Workload w;
    w.name = j["name"].get<std::string>();
    for (const json& pj : j["processes"]) {
        if (!pj.is_object()) throw ParseError(line, "process entries must be objects");
        if (!pj.contains("id") || !pj["id"].is_string())
            throw ParseError(line, "process missing string field 'id'");
        if (!pj.contains("arrival") || !pj["arrival"].is_number_integer())
            throw ParseError(line, "process missing integer field 'arrival'");
        if (!pj.contains("burst") || !pj["burst"].is_number_integer())
            throw ParseError(line, "process missing integer field 'burst'");

        const std::string id = pj["id"].get<std::string>();
        const std::int64_t arrival = pj["arrival"].get<std::int64_t>();
        const std::int64_t burst = pj["burst"].get<std::int64_t>();
        if (arrival < 0)
            throw ValidationError("NegativeArrival: process '" + id + "' (line " +
                                  std::to_string(line) + ")");
        if (burst <= 0)
            throw ValidationError("NonPositiveBurst: process '" + id + "' (line " +
                                  std::to_string(line) + ")");
        w.processes.push_back({id, Time(arrival), Time(burst)});
    }

    try {
        validate_workload(w);
    } catch (const ValidationError& e) {
        throw ValidationError(std::string(e.what()) + " (line " + std::to_string(line) + ")");
    }
    return w;
}

} // namespace

std::vector<Workload> generate_samples(const GeneratorConfig& cfg) {
    if (cfg.n_procs < 1)
        throw ValidationError("InvalidRange: n_procs must be >= 1");
    if (cfg.at_min < 1 || cfg.at_min > cfg.at_max)
        throw ValidationError("InvalidRange: arrival range [" + std::to_string(cfg.at_min) +
                              ", " + std::to_string(cfg.at_max) + "]");
    if (cfg.bt_min < 1 || cfg.bt_min > cfg.bt_max)
        throw ValidationError("InvalidRange: burst range [" + std::to_string(cfg.bt_min) +
                              ", " + std::to_string(cfg.bt_max) + "]");

    std::mt19937_64 rng(cfg.seed);
    const auto at_span = static_cast<std::uint64_t>(cfg.at_max - cfg.at_min) + 1;
    const auto bt_span = static_cast<std::uint64_t>(cfg.bt_max - cfg.bt_min) + 1;

    std::vector<Workload> samples;
    samples.reserve(cfg.n_samples);
    for (std::size_t s = 0; s < cfg.n_samples; ++s) {
        Workload w;
        w.name = "sample-" + std::to_string(s);
        w.processes.reserve(cfg.n_procs);
        for (std::size_t i = 0; i < cfg.n_procs; ++i) {
            const auto arrival = cfg.at_min + static_cast<std::int64_t>(rng() % at_span);
            const auto burst = cfg.bt_min + static_cast<std::int64_t>(rng() % bt_span);
            w.processes.push_back(
                {"P" + std::to_string(i + 1), Time(arrival), Time(burst)});
        }
        samples.push_back(std::move(w));
    }
    return samples;
}

std::string workloads_to_jsonl(const std::vector<Workload>& samples) {
    std::string out;
    for (const Workload& w : samples) {
        json procs = json::array();
        for (const ProcessSpec& p : w.processes) {
            procs.push_back({{"id", p.id},
                             {"arrival", time_as_int(p.arrival, "arrival of '" + p.id + "'")},
                             {"burst", time_as_int(p.burst, "burst of '" + p.id + "'")}});
        }
        out += json{{"name", w.name}, {"processes", std::move(procs)}}.dump();
        out += '\n';
    }
    return out;
}

std::vector<Workload> workloads_from_jsonl(std::string_view text) {
    std::vector<Workload> samples;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw ParseError(line_no, e.what());
        }
        samples.push_back(workload_from_json(j, line_no));
    }
    return samples;
}

void write_workloads(const std::vector<Workload>& samples, const std::filesystem::path& path) {
    const std::string content = workloads_to_jsonl(samples);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    out << content;
    out.flush();
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::vector<Workload> read_workloads(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
    return workloads_from_jsonl(buf.str());
}

} // namespace schedsim
