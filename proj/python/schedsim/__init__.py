"""Deterministic CPU scheduling simulator.

Thin wrapper over the C++ core. Policies: "an" (dynamic quantum = mean of the
remaining bursts in the ready queue), "rr" (fixed quantum), "median-rr"
(per-round median with a floor), "fcfs", "sjf", "srtf". All times are exact
`fractions.Fraction` values in milliseconds.
"""

from schedsim._core import (
    ComparisonReport,
    ComparisonRow,
    IoError,
    ParseError,
    ProcessMetrics,
    ProcessSpec,
    QuantumStats,
    RunMetrics,
    SchedsimError,
    Slice,
    Trace,
    ValidationError,
    Workload,
    compute_metrics,
    emit_report,
    generate_samples,
    improvement_percent,
    mean_difference,
    read_workloads,
    run_comparison,
    simulate,
    success_percent,
    validate_workload,
    workloads_from_jsonl,
    workloads_to_jsonl,
    write_workloads,
)

__all__ = [
    "ComparisonReport",
    "ComparisonRow",
    "IoError",
    "ParseError",
    "ProcessMetrics",
    "ProcessSpec",
    "QuantumStats",
    "RunMetrics",
    "SchedsimError",
    "Slice",
    "Trace",
    "ValidationError",
    "Workload",
    "compute_metrics",
    "emit_report",
    "generate_samples",
    "improvement_percent",
    "mean_difference",
    "read_workloads",
    "run_comparison",
    "simulate",
    "success_percent",
    "validate_workload",
    "workloads_from_jsonl",
    "workloads_to_jsonl",
    "write_workloads",
]
