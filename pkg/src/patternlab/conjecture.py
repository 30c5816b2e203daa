"""Bounded check that F of a layered pattern ignores the order of its layers."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, permutations
from typing import Any

from .errors import DomainError
from .genfun import FTEngine, default_engine
from .permcore import layered


@dataclass
class ConjectureReport:
    m: int
    l_max: int
    order: int
    checked: int = 0
    counterexamples: list[dict[str, Any]] = field(default_factory=list)

    @property
    def symmetric(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict[str, Any]:
        return {"m": self.m, "l_max": self.l_max, "order": self.order,
                "multisets_checked": self.checked, "symmetric": self.symmetric,
                "counterexamples": self.counterexamples}

    def to_text(self) -> str:
        head = (f"layer-order symmetry, m = {self.m}, layers <= {self.l_max}, "
                f"order {self.order}: {self.checked} multisets")
        if self.symmetric:
            return head + "\nall symmetric"
        lines = [head]
        for c in self.counterexamples:
            lines.append(f"  {c['base']} vs {c['other']}: differ at n = {c['n']} "
                         f"({c['base_value']} vs {c['other_value']})")
        return "\n".join(lines)


def conjecture_sweep(m: int = 3, l_max: int = 5, order: int = 15,
                     engine: FTEngine | None = None) -> ConjectureReport:
    """Compare series over every reordering of each multiset of m layer lengths.

    Violations are collected, never raised.
    """
    if m < 1 or l_max < 1 or order < 0:
        raise DomainError("need m >= 1, l_max >= 1 and order >= 0")
    engine = engine or default_engine()
    report = ConjectureReport(m, l_max, order)
    for base in combinations_with_replacement(range(1, l_max + 1), m):
        ref = engine.coefficients([layered(*base)], order)
        for other in sorted(set(permutations(base))):
            if other == base:
                continue
            got = engine.coefficients([layered(*other)], order)
            if got != ref:
                n = next(i for i, (a, b) in enumerate(zip(ref, got)) if a != b)
                report.counterexamples.append({
                    "base": list(base), "other": list(other), "n": n,
                    "base_value": str(ref[n]), "other_value": str(got[n]),
                })
        report.checked += 1
    return report
