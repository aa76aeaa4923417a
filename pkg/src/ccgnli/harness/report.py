"""Evaluation over a problem list and its two renderings."""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from ..prover import LABELS
from .pipeline import Config, Outcome, run_problem


@dataclass
class Report:
    outcomes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def total(self) -> int:
        return len(self.outcomes)

    @property
    def accuracy(self) -> Optional[float]:
        if not self.outcomes:
            return None
        return sum(o.correct for o in self.outcomes) / len(self.outcomes)

    def tag_accuracy(self) -> dict:
        groups: dict = {}
        for o in self.outcomes:
            for tag in o.problem.tags:
                groups.setdefault(tag, []).append(o.correct)
        return {t: (sum(v) / len(v), len(v)) for t, v in sorted(groups.items())}

    def confusion(self) -> dict:
        """Rows are gold labels, columns predicted labels."""
        m = {g: {p: 0 for p in LABELS} for g in LABELS}
        for o in self.outcomes:
            m[o.problem.gold][o.label] += 1
        return m

    def stage_times(self) -> dict:
        totals: dict = {}
        for o in self.outcomes:
            for stage, t in o.timings.items():
                totals[stage] = totals.get(stage, 0.0) + t
        return dict(sorted(totals.items()))

    def passed(self, threshold: float) -> bool:
        # an empty report scores zero here, so only a zero threshold passes it
        return (self.accuracy or 0.0) >= threshold

    # rendering ----------------------------------------------------------

    def records(self, dump_lf: bool = False, dump_proof: bool = False, timing: bool = False) -> list[dict]:
        out = []
        for o in self.outcomes:
            rec = {
                "id": o.problem.id,
                "gold": o.problem.gold,
                "predicted": o.label,
                "correct": o.correct,
                "tags": sorted(o.problem.tags),
                "diagnostics": list(o.diagnostics),
            }
            if dump_lf:
                rec["logical_forms"] = o.trace.get("logical_forms", [])
                rec["lexical_axioms"] = o.trace.get("lexical_axioms", [])
            if dump_proof and "proof" in o.trace:
                rec["proof"] = o.trace["proof"]
            if "tptp" in o.trace:
                rec["tptp"] = o.trace["tptp"]
            if timing:
                rec["timings"] = {k: round(v, 6) for k, v in sorted(o.timings.items())}
            out.append(rec)
        return out

    def to_jsonl(self, **kw) -> str:
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in self.records(**kw))

    def table(self, timing: bool = False) -> str:
        acc = self.accuracy
        lines = [f"problems: {self.total}",
                 f"accuracy: {'n/a' if acc is None else f'{acc:.4f}'}", "", "per tag:"]
        for tag, (a, n) in self.tag_accuracy().items():
            lines.append(f"  {tag:<26} {a:.4f}  (n={n})")
        lines += ["", "confusion (rows gold, columns predicted):",
                  "  " + " " * 9 + "".join(f"{p:>9}" for p in LABELS)]
        for g, row in self.confusion().items():
            lines.append(f"  {g:<9}" + "".join(f"{row[p]:>9}" for p in LABELS))
        wrong = [o for o in self.outcomes if not o.correct]
        if wrong:
            lines += ["", "errors:"]
            lines += [f"  {o.problem.id}: gold {o.problem.gold}, predicted {o.label}"
                      + (f" [{'; '.join(o.diagnostics)}]" if o.diagnostics else "") for o in wrong]
        if timing:
            lines += ["", f"elapsed: {self.elapsed:.2f}s"]
            lines += [f"  {stage:<14} {t:.3f}s" for stage, t in self.stage_times().items()]
        return "\n".join(lines) + "\n"


def evaluate(problems, config: Optional[Config] = None, workers: int = 1) -> Report:
    """Run every problem; the outcome order follows problem id."""
    config = config or Config()
    config.load()
    ordered = sorted(problems, key=lambda p: p.id)
    t0 = time.perf_counter()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            outcomes = list(pool.map(lambda p: run_problem(p, config), ordered))
    else:
        outcomes = [run_problem(p, config) for p in ordered]
    return Report(outcomes, time.perf_counter() - t0)


__all__ = ["Report", "evaluate"]
