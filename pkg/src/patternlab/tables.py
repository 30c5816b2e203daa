"""
Cross-check of the shipped enumeration tables against the brute-force
oracle and the F_T engine.

A row passes when engine and oracle agree for every listed pattern.  A
printed value that disagrees with the oracle is reported as an erratum of
the table, never as a failure of the run.
"""

from __future__ import annotations

import ast
import json
import operator
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Any, Callable

from .errors import DomainError
from .genfun import FTEngine, decreasing_closed, default_engine, family_closed
from .motzkin import motzkin_numbers
from .oracle import count_avoiders
from .permcore import Permutation, parse_perm
from .polyalg import X, IntPoly, RatFunc

__all__ = ["load_tables", "evaluate_formula", "evaluate_poly", "fibonacci", "pell",
           "RowReport", "TableReport", "verify_tables"]


def load_tables() -> dict[str, Any]:
    text = resources.files("patternlab").joinpath("data/tables.json").read_text(encoding="utf-8")
    return json.loads(text)


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    if n < 0:
        return (-1) ** (n + 1) * fibonacci(-n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@lru_cache(maxsize=None)
def pell(n: int) -> int:
    if n < 0:
        return (-1) ** (n + 1) * pell(-n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, 2 * b + a
    return a


def _motzkin(n: int) -> int:
    if n < 0:
        raise DomainError("Motzkin numbers need n >= 0")
    return motzkin_numbers(n)[n]


_BINOPS: dict[type, Callable] = {
    ast.Add: operator.add, ast.Sub: operator.sub, ast.Mult: operator.mul,
    ast.Div: operator.truediv, ast.Pow: operator.pow,
}
_FUNCS = {"F": fibonacci, "P": pell, "M": _motzkin}


def _eval(node: ast.AST, env: dict[str, Any]):
    if isinstance(node, ast.Expression):
        return _eval(node.body, env)
    if isinstance(node, ast.Constant) and isinstance(node.value, int):
        return node.value
    if isinstance(node, ast.Name):
        if node.id not in env:
            raise DomainError(f"unknown name {node.id!r} in formula")
        return env[node.id]
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _eval(node.operand, env)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
        left, right = _eval(node.left, env), _eval(node.right, env)
        if isinstance(node.op, ast.Pow):
            if not isinstance(right, int):
                raise DomainError("exponents must be integers")
            if right < 0 and not isinstance(left, IntPoly):
                return Fraction(left) ** right
        if isinstance(node.op, ast.Div):
            if isinstance(left, IntPoly) or isinstance(right, IntPoly):
                raise DomainError("division is not allowed in a polynomial")
            return Fraction(left) / Fraction(right)
        return _BINOPS[type(node.op)](left, right)
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCS:
        args = [_eval(a, env) for a in node.args]
        if len(args) != 1 or not isinstance(args[0], int):
            raise DomainError(f"{node.func.id}() takes one integer argument")
        return _FUNCS[node.func.id](args[0])
    raise DomainError(f"unsupported syntax in formula: {ast.dump(node)}")


def evaluate_formula(expr: str, n: int) -> Fraction:
    """Exact value of a printed closed formula at n."""
    return Fraction(_eval(ast.parse(expr, mode="eval"), {"n": n}))


def evaluate_poly(expr: str) -> IntPoly:
    """Expand a printed polynomial in x (no division)."""
    v = _eval(ast.parse(expr, mode="eval"), {"x": X})
    if isinstance(v, int):
        return IntPoly([v])
    if not isinstance(v, IntPoly):
        raise DomainError(f"{expr!r} is not an integer polynomial in x")
    return v


@dataclass
class RowReport:
    row_id: str
    patterns: list[str]
    printed: str
    engine_ok: bool
    oracle: list[int]
    engine_mismatches: list[str] = field(default_factory=list)
    errata: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "PASS" if self.engine_ok else "FAIL"


@dataclass
class TableReport:
    n_max: int
    rows: list[RowReport]

    @property
    def ok(self) -> bool:
        return all(r.engine_ok for r in self.rows)

    @property
    def errata(self) -> list[tuple[str, str]]:
        return [(r.row_id, e) for r in self.rows for e in r.errata]

    def to_json(self) -> dict[str, Any]:
        return {
            "n_max": self.n_max,
            "ok": self.ok,
            "rows": [
                {"id": r.row_id, "status": r.status, "patterns": r.patterns,
                 "printed": r.printed, "oracle": [str(v) for v in r.oracle],
                 "engine_mismatches": r.engine_mismatches, "errata": r.errata}
                for r in self.rows
            ],
            "errata": [{"row": rid, "finding": msg} for rid, msg in self.errata],
        }

    def to_text(self) -> str:
        lines = [f"table verification, n = 0..{self.n_max}"]
        for r in self.rows:
            pats = " ".join(r.patterns)
            lines.append(f"{r.status}  {r.row_id:<12} {pats}")
            lines.extend(f"      engine: {m}" for m in r.engine_mismatches)
        lines.append("")
        lines.append("errata (printed value disagrees with oracle):")
        if not self.errata:
            lines.append("  none")
        lines.extend(f"  {rid}: {msg}" for rid, msg in self.errata)
        lines.append("")
        lines.append("engine = oracle on all rows" if self.ok else "ENGINE/ORACLE MISMATCH")
        return "\n".join(lines)


def _closed_of(spec: dict[str, Any]) -> RatFunc:
    if "decreasing" in spec:
        return decreasing_closed(spec["decreasing"])
    return family_closed(spec["family"], spec["k"])


def _check_row(row: dict[str, Any], n_max: int, engine: FTEngine,
               limit: int | None) -> RowReport:
    groups = row["groups"]
    names = [p for g in groups for p in g]
    perms: list[Permutation] = [parse_perm(p) for p in names]
    if "formula" in row:
        printed = row["formula"]
    else:
        printed = f"gf = ({row['gf']['num']}) / ({row['gf']['den']})"

    oracle_rows = [[count_avoiders([p], n, limit) for n in range(n_max + 1)] for p in perms]
    engine_ok, mismatches = True, []
    for name, p, want in zip(names, perms, oracle_rows):
        got = engine.coefficients([p], n_max)
        if got != want:
            engine_ok = False
            n = next(i for i, (a, b) in enumerate(zip(got, want)) if a != b)
            mismatches.append(f"{name}: engine {got[n]} vs oracle {want[n]} at n = {n}")

    ref = oracle_rows[0]
    errata = []
    for name, counts in zip(names[1:], oracle_rows[1:]):
        if counts != ref:
            errata.append(f"{name} is not equinumerous with {names[0]} (oracle {counts} vs {ref})")

    if "formula" in row:
        lo = row.get("n_min", 0)
        for n in range(lo, n_max + 1):
            v = evaluate_formula(row["formula"], n)
            if v != ref[n]:
                errata.append(f"printed formula gives {v} at n = {n}; oracle count is {ref[n]}")
                break
    else:
        printed_gf = RatFunc(evaluate_poly(row["gf"]["num"]), evaluate_poly(row["gf"]["den"]))
        series = list(printed_gf.series(n_max).coefficients)
        if series != ref:
            n = next(i for i, (a, b) in enumerate(zip(series, ref)) if a != b)
            msg = (f"printed gf reduces to {printed_gf} with coefficient {series[n]} "
                   f"at n = {n}; oracle count is {ref[n]}")
            if "closed" in row:
                closed = _closed_of(row["closed"])
                if list(closed.series(n_max).coefficients) == ref:
                    msg += f"; correct gf is {closed}"
            errata.append(msg)

    if "closed" in row:
        closed = _closed_of(row["closed"])
        if list(closed.series(n_max).coefficients) != ref:
            engine_ok = False
            mismatches.append(f"closed form {closed} disagrees with oracle")

    return RowReport(row["id"], names, printed, engine_ok, ref, mismatches, errata)


def verify_tables(n_max: int = 10, engine: FTEngine | None = None,
                  limit: int | None = None) -> TableReport:
    engine = engine or default_engine()
    rows = [_check_row(row, n_max, engine, limit) for row in load_tables()["rows"]]
    return TableReport(n_max, rows)
