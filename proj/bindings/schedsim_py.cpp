#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "schedsim/engine.hpp"
#include "schedsim/experiments.hpp"
#include "schedsim/metrics.hpp"
#include "schedsim/workload.hpp"

namespace py = pybind11;

namespace {

using namespace schedsim;

py::object to_fraction(const Rational& r) {
    return py::module_::import("fractions").attr("Fraction")(r.fraction_str());
}

py::object to_fraction(const Time& t) { return to_fraction(t.value()); }

Rational rational_from_py(py::handle h) {
    if (py::isinstance<py::int_>(h)) return Rational(py::cast<long long>(h));
    if (py::isinstance<py::str>(h)) {
        const auto text = py::cast<std::string>(h);
        if (auto r = Rational::parse(text)) return *r;
        throw py::value_error("cannot parse '" + text + "' as an exact number");
    }
    if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator")) {
        return Rational(py::cast<long long>(h.attr("numerator")),
                        py::cast<long long>(h.attr("denominator")));
    }
    throw py::type_error("expected int, Fraction, or exact numeric string");
}

Time time_from_py(py::handle h) {
    const Rational r = rational_from_py(h);
    if (r.is_negative()) throw py::value_error("time must be non-negative");
    return Time::of(r);
}

std::vector<Rational> rationals_from_py(const py::sequence& seq) {
    std::vector<Rational> out;
    out.reserve(py::len(seq));
    for (py::handle h : seq) out.push_back(rational_from_py(h));
    return out;
}

PolicyDescriptor descriptor_from_args(const std::string& policy, py::object quantum,
                                      py::object median_floor) {
    const auto kind = parse_policy_name(policy);
    if (!kind) throw py::value_error("unknown policy '" + policy + "'");
    if (*kind != PolicyKind::FixedRR && !quantum.is_none())
        throw py::value_error("quantum only applies to policy 'rr'");
    if (*kind != PolicyKind::MedianRR && !median_floor.is_none())
        throw py::value_error("median_floor only applies to policy 'median-rr'");

    switch (*kind) {
    case PolicyKind::FixedRR:
        if (quantum.is_none()) throw py::value_error("policy 'rr' requires quantum=");
        return PolicyDescriptor::fixed_rr(time_from_py(quantum));
    case PolicyKind::MedianRR:
        return median_floor.is_none() ? PolicyDescriptor::median_rr()
                                      : PolicyDescriptor::median_rr(time_from_py(median_floor));
    default: {
        PolicyDescriptor d;
        d.kind = *kind;
        return d;
    }
    }
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Deterministic CPU scheduling simulator: mean-quantum dynamic round robin, "
              "fixed RR, median RR, FCFS, SJF, SRTF";

    py::register_exception<Error>(m, "SchedsimError", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<IoError>(m, "IoError", PyExc_OSError);

    py::class_<ProcessSpec>(m, "ProcessSpec")
        .def(py::init([](std::string id, py::object arrival, py::object burst) {
                 return ProcessSpec{std::move(id), time_from_py(arrival), time_from_py(burst)};
             }),
             py::arg("id"), py::arg("arrival"), py::arg("burst"))
        .def_readonly("id", &ProcessSpec::id)
        .def_property_readonly("arrival", [](const ProcessSpec& p) { return to_fraction(p.arrival); })
        .def_property_readonly("burst", [](const ProcessSpec& p) { return to_fraction(p.burst); })
        .def(py::self == py::self)
        .def("__repr__", [](const ProcessSpec& p) {
            return "ProcessSpec('" + p.id + "', arrival=" + p.arrival.str() +
                   ", burst=" + p.burst.str() + ")";
        });

    py::class_<Workload>(m, "Workload")
        .def(py::init<std::string, std::vector<ProcessSpec>>(), py::arg("name"),
             py::arg("processes"))
        .def_readonly("name", &Workload::name)
        .def_readonly("processes", &Workload::processes)
        .def(py::self == py::self)
        .def("__repr__", [](const Workload& w) {
            return "Workload('" + w.name + "', " + std::to_string(w.processes.size()) +
                   " processes)";
        });

    py::class_<Slice>(m, "Slice")
        .def_readonly("pid", &Slice::pid)
        .def_property_readonly("start", [](const Slice& s) { return to_fraction(s.start); })
        .def_property_readonly("end", [](const Slice& s) { return to_fraction(s.end); })
        .def_property_readonly("reason",
                               [](const Slice& s) { return std::string(to_string(s.reason)); })
        .def(py::self == py::self)
        .def("__repr__", [](const Slice& s) {
            return s.pid + "[" + s.start.str() + "," + s.end.str() + ") " +
                   std::string(to_string(s.reason));
        });

    py::class_<Trace>(m, "Trace")
        .def_readonly("workload", &Trace::workload)
        .def_readonly("slices", &Trace::slices)
        .def_property_readonly("policy", [](const Trace& t) { return t.policy.label(); })
        .def(py::self == py::self);

    py::class_<ProcessMetrics>(m, "ProcessMetrics")
        .def_readonly("pid", &ProcessMetrics::pid)
        .def_property_readonly("completion",
                               [](const ProcessMetrics& p) { return to_fraction(p.completion); })
        .def_property_readonly("turnaround",
                               [](const ProcessMetrics& p) { return to_fraction(p.turnaround); })
        .def_property_readonly("waiting",
                               [](const ProcessMetrics& p) { return to_fraction(p.waiting); })
        .def_property_readonly("response",
                               [](const ProcessMetrics& p) { return to_fraction(p.response); });

    py::class_<RunMetrics>(m, "RunMetrics")
        .def_readonly("per_process", &RunMetrics::per_process)
        .def_property_readonly("avg_turnaround",
                               [](const RunMetrics& r) { return to_fraction(r.avg_turnaround); })
        .def_property_readonly("avg_waiting",
                               [](const RunMetrics& r) { return to_fraction(r.avg_waiting); })
        .def_readonly("switches_slice_boundary", &RunMetrics::switches_slice_boundary)
        .def_readonly("switches_process_change", &RunMetrics::switches_process_change)
        .def_readonly("rounds", &RunMetrics::rounds)
        .def_readonly("q_t", &RunMetrics::q_t);

    py::class_<ComparisonRow>(m, "ComparisonRow")
        .def_readonly("sample_index", &ComparisonRow::sample_index)
        .def_readonly("policy", &ComparisonRow::policy)
        .def_property_readonly("quantum",
                               [](const ComparisonRow& r) -> py::object {
                                   return r.quantum ? to_fraction(*r.quantum) : py::none();
                               })
        .def_property_readonly("avg_turnaround",
                               [](const ComparisonRow& r) { return to_fraction(r.avg_turnaround); })
        .def_property_readonly("avg_waiting",
                               [](const ComparisonRow& r) { return to_fraction(r.avg_waiting); })
        .def_readonly("switches", &ComparisonRow::switches);

    py::class_<QuantumStats>(m, "QuantumStats")
        .def_property_readonly("quantum",
                               [](const QuantumStats& s) { return to_fraction(s.quantum); })
        .def_property_readonly("improvement_tat",
                               [](const QuantumStats& s) { return to_fraction(s.improvement_tat); })
        .def_property_readonly("improvement_wt",
                               [](const QuantumStats& s) { return to_fraction(s.improvement_wt); })
        .def_property_readonly("success_tat",
                               [](const QuantumStats& s) { return to_fraction(s.success_tat); })
        .def_property_readonly("success_wt",
                               [](const QuantumStats& s) { return to_fraction(s.success_wt); })
        .def_property_readonly("mean_diff_tat",
                               [](const QuantumStats& s) { return to_fraction(s.mean_diff_tat); })
        .def_property_readonly("mean_diff_wt",
                               [](const QuantumStats& s) { return to_fraction(s.mean_diff_wt); });

    py::class_<ComparisonReport>(m, "ComparisonReport")
        .def_property_readonly("quanta",
                               [](const ComparisonReport& r) {
                                   py::list out;
                                   for (const Time& q : r.quanta) out.append(to_fraction(q));
                                   return out;
                               })
        .def_readonly("per_sample", &ComparisonReport::per_sample)
        .def_readonly("stats", &ComparisonReport::stats);

    m.def("validate_workload", &validate_workload, py::arg("workload"));

    m.def(
        "simulate",
        [](const Workload& w, const std::string& policy, py::object quantum,
           py::object median_floor) {
            return simulate(w, descriptor_from_args(policy, quantum, median_floor));
        },
        py::arg("workload"), py::arg("policy"), py::kw_only(), py::arg("quantum") = py::none(),
        py::arg("median_floor") = py::none());

    m.def("compute_metrics", &compute_metrics, py::arg("trace"));

    m.def(
        "generate_samples",
        [](std::size_t n_samples, std::size_t n_procs, std::int64_t at_min, std::int64_t at_max,
           std::int64_t bt_min, std::int64_t bt_max, std::uint64_t seed) {
            return generate_samples({n_samples, n_procs, at_min, at_max, bt_min, bt_max, seed});
        },
        py::arg("n_samples"), py::kw_only(), py::arg("n_procs") = 4, py::arg("at_min") = 10,
        py::arg("at_max") = 100, py::arg("bt_min") = 10, py::arg("bt_max") = 100,
        py::arg("seed") = 0);

    m.def("read_workloads", &read_workloads, py::arg("path"));
    m.def("write_workloads", &write_workloads, py::arg("workloads"), py::arg("path"));
    m.def("workloads_to_jsonl", &workloads_to_jsonl, py::arg("workloads"));
    m.def("workloads_from_jsonl",
          [](const std::string& text) { return workloads_from_jsonl(text); }, py::arg("text"));

    m.def(
        "run_comparison",
        [](const std::vector<Workload>& samples, const py::sequence& quanta,
           const std::vector<std::string>& extra_policies) {
            std::vector<Time> qs;
            qs.reserve(py::len(quanta));
            for (py::handle h : quanta) qs.push_back(time_from_py(h));
            std::vector<PolicyDescriptor> extras;
            for (const std::string& name : extra_policies)
                extras.push_back(descriptor_from_args(name, py::none(), py::none()));
            return run_comparison(samples, qs, extras);
        },
        py::arg("samples"), py::arg("quanta"), py::arg("extra_policies") = std::vector<std::string>{});

    m.def(
        "improvement_percent",
        [](const py::sequence& base, const py::sequence& alt) {
            return to_fraction(improvement_percent(rationals_from_py(base), rationals_from_py(alt)));
        },
        py::arg("base"), py::arg("alt"));

    m.def(
        "success_percent",
        [](const py::sequence& base, const py::sequence& alt) {
            return to_fraction(success_percent(rationals_from_py(base), rationals_from_py(alt)));
        },
        py::arg("base"), py::arg("alt"));

    m.def(
        "mean_difference",
        [](const py::sequence& base, const py::sequence& alt) {
            return to_fraction(mean_difference(rationals_from_py(base), rationals_from_py(alt)));
        },
        py::arg("base"), py::arg("alt"));

    m.def(
        "emit_report",
        [](const ComparisonReport& report, const std::string& format, bool include_literal) {
            const ReportFiles files = emit_report(report, format, include_literal);
            return py::make_tuple(files.series, files.summary);
        },
        py::arg("report"), py::arg("format") = "csv", py::arg("include_literal") = false);
}
