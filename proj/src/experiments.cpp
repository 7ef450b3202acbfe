#include "schedsim/experiments.hpp"

#include <fstream>

#include "schedsim/engine.hpp"
#include "schedsim/errors.hpp"

namespace schedsim {

namespace {

void check_lengths(const std::vector<Rational>& base, const std::vector<Rational>& alt) {
    if (base.size() != alt.size())
        throw ValidationError("LengthMismatch: " + std::to_string(base.size()) + " vs " +
                              std::to_string(alt.size()));
    if (base.empty()) throw ValidationError("LengthMismatch: empty series");
}

char separator(std::string_view format) {
    if (format == "csv") return ',';
    if (format == "tsv") return '\t';
    throw ValidationError("UnknownFormat: '" + std::string(format) + "' (expected csv or tsv)");
}

} // namespace

Rational improvement_percent(const std::vector<Rational>& base, const std::vector<Rational>& alt) {
    check_lengths(base, alt);
    Rational acc;
    for (std::size_t i = 0; i < base.size(); ++i) {
        if (!(base[i] > Rational(0)))
            throw ValidationError("NonPositiveBase: sample " + std::to_string(i) + " is " +
                                  base[i].str());
        acc += (base[i] - alt[i]) / base[i];
    }
    return Rational(100) * acc / Rational(static_cast<long long>(base.size()));
}

Rational success_percent(const std::vector<Rational>& base, const std::vector<Rational>& alt) {
    check_lengths(base, alt);
    long long wins = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
        if (alt[i] < base[i]) ++wins;
    return Rational(100 * wins, static_cast<long long>(base.size()));
}

Rational mean_difference(const std::vector<Rational>& base, const std::vector<Rational>& alt) {
    check_lengths(base, alt);
    Rational acc;
    for (std::size_t i = 0; i < base.size(); ++i) acc += alt[i] - base[i];
    return acc / Rational(static_cast<long long>(base.size()));
}

ComparisonReport run_comparison(const std::vector<Workload>& samples,
                                const std::vector<Time>& quanta,
                                const std::vector<PolicyDescriptor>& extra_policies) {
    if (samples.empty()) throw ValidationError("EmptySamples: nothing to compare");
    for (const Time& q : quanta)
        if (q.is_zero())
            throw ValidationError("PolicyParameterError: swept quantum must be positive");

    ComparisonReport report;
    report.quanta = quanta;

    std::vector<Rational> an_tat, an_wt;
    std::vector<std::vector<Rational>> rr_tat(quanta.size()), rr_wt(quanta.size());
    an_tat.reserve(samples.size());
    an_wt.reserve(samples.size());

    for (std::size_t i = 0; i < samples.size(); ++i) {
        const Workload& w = samples[i];
        auto run_one = [&](const PolicyDescriptor& policy) -> RunMetrics {
            try {
                return compute_metrics(simulate(w, policy));
            } catch (const ValidationError& e) {
                throw ValidationError("sample '" + w.name + "': " + e.what());
            }
        };

        const RunMetrics an = run_one(PolicyDescriptor::an());
        report.per_sample.push_back({i, "an", std::nullopt, an.avg_turnaround, an.avg_waiting,
                                     an.switches_slice_boundary});
        an_tat.push_back(an.avg_turnaround.value());
        an_wt.push_back(an.avg_waiting.value());

        for (std::size_t qi = 0; qi < quanta.size(); ++qi) {
            const RunMetrics rr = run_one(PolicyDescriptor::fixed_rr(quanta[qi]));
            report.per_sample.push_back({i, "rr", quanta[qi], rr.avg_turnaround, rr.avg_waiting,
                                         rr.switches_slice_boundary});
            rr_tat[qi].push_back(rr.avg_turnaround.value());
            rr_wt[qi].push_back(rr.avg_waiting.value());
        }

        for (const PolicyDescriptor& extra : extra_policies) {
            const RunMetrics m = run_one(extra);
            report.per_sample.push_back({i, std::string(policy_name(extra.kind)),
                                         extra.fixed_quantum, m.avg_turnaround, m.avg_waiting,
                                         m.switches_slice_boundary});
        }
    }

    for (std::size_t qi = 0; qi < quanta.size(); ++qi) {
        report.stats.push_back({quanta[qi],
                                improvement_percent(rr_tat[qi], an_tat),
                                improvement_percent(rr_wt[qi], an_wt),
                                success_percent(rr_tat[qi], an_tat),
                                success_percent(rr_wt[qi], an_wt),
                                mean_difference(rr_tat[qi], an_tat),
                                mean_difference(rr_wt[qi], an_wt)});
    }
    return report;
}

ReportFiles emit_report(const ComparisonReport& report, std::string_view format,
                        bool include_literal) {
    const char sep = separator(format);
    if (report.per_sample.empty())
        throw ValidationError("EmptyReport: no per-sample rows to emit");

    ReportFiles files;

    files.series = "sample_index";
    for (const char* col : {"policy", "quantum", "avg_tat", "avg_wt", "switches"})
        files.series += sep + std::string(col);
    files.series += '\n';
    for (const ComparisonRow& row : report.per_sample) {
        files.series += std::to_string(row.sample_index);
        files.series += sep + row.policy;
        files.series += sep + (row.quantum ? row.quantum->str() : std::string());
        files.series += sep + row.avg_turnaround.str();
        files.series += sep + row.avg_waiting.str();
        files.series += sep + std::to_string(row.switches);
        files.series += '\n';
    }

    files.summary = "quantum";
    for (const char* col : {"improvement_tat", "improvement_wt", "success_tat", "success_wt"})
        files.summary += sep + std::string(col);
    if (include_literal)
        for (const char* col : {"mean_diff_tat", "mean_diff_wt"})
            files.summary += sep + std::string(col);
    files.summary += '\n';
    for (const QuantumStats& s : report.stats) {
        files.summary += s.quantum.str();
        files.summary += sep + s.improvement_tat.str();
        files.summary += sep + s.improvement_wt.str();
        files.summary += sep + s.success_tat.str();
        files.summary += sep + s.success_wt.str();
        if (include_literal) {
            files.summary += sep + s.mean_diff_tat.str();
            files.summary += sep + s.mean_diff_wt.str();
        }
        files.summary += '\n';
    }
    return files;
}

std::pair<std::filesystem::path, std::filesystem::path>
write_report_files(const ComparisonReport& report, std::string_view format,
                   const std::filesystem::path& out_dir, bool include_literal) {
    const ReportFiles files = emit_report(report, format, include_literal);
    const std::string ext = format == "tsv" ? ".tsv" : ".csv";

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());

    auto write = [](const std::filesystem::path& path, const std::string& content) {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
        out << content;
        out.flush();
        if (!out) throw IoError("failed writing '" + path.string() + "'");
    };

    const std::filesystem::path series_path = out_dir / ("series" + ext);
    const std::filesystem::path summary_path = out_dir / ("summary" + ext);
    write(series_path, files.series);
    write(summary_path, files.summary);
    return {series_path, summary_path};
}

} // namespace schedsim
