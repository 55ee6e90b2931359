"""
Search monitoring for the resolution, decision and certificate searches.

Tracks blow-ups, charts, arc limits and verdicts, keeps timing samples of the
decisions, and prints a summary line on demand. Discrete events (BLOWUP, CHART,
ARC, VERDICT, CERT) are logged when enable_event_logging=True.
"""

import sys
import time
from collections import Counter, deque

import numpy as np


class SearchMonitor:
    """
    Monitor for the exact searches of the toolkit.

    The summary line contains:
    - Blow-ups: Number of point blow-ups performed (each creates two charts).
    - Charts: Charts whose pullback was computed.
    - Arcs: One-sided arc limits evaluated (refutation batteries, witness synthesis).
    - Verdicts: Count per verdict tag (Regulous / NotRegulous / Unknown).
    - Decide: Average and peak wall time of a single k-regulous decision in ms.

    Output goes to stderr so JSON on stdout stays clean.
    """

    def __init__(self, enable_event_logging: bool = False, stream=None):
        """
        Initializes the monitor.

        Args:
            enable_event_logging: Whether to log discrete events (BLOWUP, VERDICT, ...).
            stream: Text stream for log lines, stderr by default.
        """
        self.enable_event_logging = enable_event_logging
        self.stream = stream if stream is not None else sys.stderr
        self.start_time = time.time()

        self.blowups = 0
        self.charts = 0
        self.arcs = 0
        self.verdicts: Counter[str] = Counter()
        self.certificates = 0
        self.decide_times = deque(maxlen=256)  # Rolling buffer of decision times in ms

    def log_event(self, event_type: str, message: str) -> None:
        """
        Logs a discrete event (only if enabled).

        Args:
            event_type: Category of event (e.g., "BLOWUP", "VERDICT", "CERT").
            message: Event details.
        """
        if not self.enable_event_logging:
            return
        elapsed = time.time() - self.start_time
        print(f"[{elapsed:05.1f}s] {event_type:8s} | {message}", file=self.stream)

    def record_blowup(self, chart_id: int, center, depth: int) -> None:
        self.blowups += 1
        self.charts += 2
        self.log_event("BLOWUP", f"chart {chart_id} at {_fmt_point(center)} (depth {depth})")

    def record_arc(self, arc_text: str, limit_text: str) -> None:
        self.arcs += 1
        self.log_event("ARC", f"({arc_text}) -> {limit_text}")

    def record_verdict(self, tag: str, detail: str, elapsed_ms: float) -> None:
        self.verdicts[tag] += 1
        self.decide_times.append(elapsed_ms)
        self.log_event("VERDICT", f"{tag} {detail} [{elapsed_ms:.1f}ms]")

    def record_certificate(self, kind: str, detail: str) -> None:
        self.certificates += 1
        self.log_event("CERT", f"{kind} {detail}")

    def summary(self) -> str:
        """Formats the counters of this run as a single line."""
        if self.decide_times:
            avg_ms = float(np.mean(self.decide_times))
            max_ms = float(np.max(self.decide_times))
        else:
            avg_ms = 0.0
            max_ms = 0.0
        verdicts = " ".join(f"{tag}:{count}" for tag, count in sorted(self.verdicts.items())) or "-"
        return (
            f"Blow-ups: {self.blowups} | Charts: {self.charts} | Arcs: {self.arcs} | "
            f"Verdicts: {verdicts} | Certs: {self.certificates} | "
            f"Decide: {avg_ms:.1f}ms (max {max_ms:.1f}ms)"
        )

    def print_summary(self) -> None:
        print(self.summary(), file=self.stream)


def _fmt_point(point) -> str:
    return "(" + ", ".join(str(c) for c in point) + ")"
