"""One test per acceptance criterion.

Each test records a PASS/FAIL line that the terminal summary prints at the
end of the run (see conftest.py); the same line is echoed to stdout.
"""

from __future__ import annotations

import random
import time
from contextlib import contextmanager
from itertools import permutations, product

from conftest import ACCEPTANCE
from patternlab.conjecture import conjecture_sweep
from patternlab.genfun import (
    FAMILIES, OccurrenceSpec, avoid_decreasing_cf, cf_series, decreasing_closed,
    family_closed, family_pattern, fixed_points_cf, ft_series, inversions_cf,
    kiT1i_closed, kT1_closed, layered_closed, lrmax_cf, multivariate_tau_check,
    occurrence_gf, total_decreasing_cf,
)
from patternlab.motzkin import generate_paths, phi, rc_path, tau_k_path
from patternlab.oracle import (
    brute_bounded_paths, count_avoiders, count_with_occurrences, enumerate_involutions,
    statistic_distribution,
)
from patternlab.permcore import (
    classic_stats, decreasing, kT1, kT1_iter, layered, reverse_complement, tau_k,
)
from patternlab.polyalg import IntPoly, RatFunc, bounded_path_gf, det, p_cheb, q_cheb, tri_matrix
from patternlab.tables import verify_tables


@contextmanager
def criterion(num: int, desc: str, budget: float | None = None):
    start = time.perf_counter()
    verdict = "FAIL"
    try:
        yield
        verdict = "PASS"
    finally:
        secs = time.perf_counter() - start
        if verdict == "PASS" and budget is not None and secs > budget:
            verdict = "FAIL"
            desc += f" [over {budget:.0f} s budget]"
        ACCEPTANCE[num] = (verdict, desc, secs)
        print(f"[{verdict}] criterion {num}: {desc} ({secs:.1f} s)")
    assert secs <= (budget or float("inf")), f"criterion {num} took {secs:.1f} s"


def series(f, order):
    return list(f.series(order).coefficients)


def engine(ts, order):
    return list(ft_series(ts, order).coefficients)


def test_01_bijection():
    with criterion(1, "phi: M_n -> I_n(3412) bijective, tau_k preserved, rc commutes, n <= 10", 30):
        for n in range(11):
            seen = set()
            for p in generate_paths(n):
                q = phi(p)
                seen.add(q)
                assert phi(rc_path(p)) == reverse_complement(q)
                assert all(tau_k(q, k) == tau_k_path(p, k) for k in range(1, 2 * n + 1))
            assert seen == set(enumerate_involutions(n))


def test_02_counts():
    with criterion(2, "|I_n(3412)| = 1,1,2,4,9,21,51,127,323,835,2188 for n = 0..10"):
        want = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188]
        assert [sum(1 for _ in enumerate_involutions(n)) for n in range(11)] == want


def test_03_statistic_identities():
    with criterion(3, "lrmax = rlmin = sum (-1)^(k-1) tau_k and fix = sum (-2)^(k-1) tau_k, n <= 10"):
        for n in range(11):
            for p in enumerate_involutions(n):
                taus = [tau_k(p, k) for k in range(1, n + 1)]
                s = classic_stats(p)
                assert s.lrmax == s.rlmin == sum((-1) ** k * t for k, t in enumerate(taus))
                assert s.fix == sum((-2) ** k * t for k, t in enumerate(taus))


def test_04_continued_fractions():
    with criterion(4, "CF series = oracle for inv, m, lrmax, rlmin, fix (order 10); "
                      "avoidance CFs = engine (k <= 4); multivariate tau check n <= 5"):
        for stat, spec in [("inv", inversions_cf()), ("m", total_decreasing_cf()),
                           ("lrmax", lrmax_cf()), ("rlmin", lrmax_cf()), ("fix", fixed_points_cf())]:
            assert cf_series(spec, 10) == [statistic_distribution(stat, n) for n in range(11)], stat
        for k in range(1, 5):
            for m in (2 * k, 2 * k + 1):
                got = [c(1) for c in cf_series(avoid_decreasing_cf(m), 20)]
                assert got == engine([decreasing(m)], 20), m
        assert all(multivariate_tau_check(n) for n in range(6))


def test_05_occurrences():
    with criterion(5, "occurrence gf = oracle to order 10, lengths 2..5, r in {1,2}; "
                      "321 values at n = 4, 5"):
        for length in range(2, 6):
            for r in (1, 2):
                got = series(occurrence_gf(OccurrenceSpec.for_length(length, r)), 10)
                want = [count_with_occurrences(decreasing(length), r, n) for n in range(11)]
                assert got == want, (length, r)
        one = series(occurrence_gf(OccurrenceSpec(1, 1, "odd")), 5)
        two = series(occurrence_gf(OccurrenceSpec(1, 2, "odd")), 5)
        assert (one[4], one[5], two[4], two[5]) == (2, 5, 1, 2)


def test_06_determinants():
    with criterion(6, "det(I-A_k) = p_{k+1}, det(I-B_k) = det(I-C_k) = q_{k+1} (k <= 10); "
                      "bounded-path gf = brute force (r, s <= k <= 4, length <= 12)"):
        for k in range(11):
            assert det(tri_matrix("A", k).i_minus()) == p_cheb(k + 1)
            assert det(tri_matrix("B", k).i_minus()) == q_cheb(k + 1)
            assert det(tri_matrix("C", k).i_minus()) == q_cheb(k + 1)
        for fam in "MNO":
            for k in range(5):
                for r, s in product(range(k + 1), repeat=2):
                    got = series(bounded_path_gf(fam, r, s, k), 12)
                    assert got == [brute_bounded_paths(fam, r, s, k, n) for n in range(13)]


def test_07_engine():
    with criterion(7, "F_T engine = oracle to order 10 for all 153 patterns of length <= 5 "
                      "and 20 random 2-pattern sets", 300):
        singles = [p for k in range(1, 6) for p in permutations(range(1, k + 1))]
        assert len(singles) == 153
        for p in singles:
            assert engine([p], 10) == [count_avoiders([p], n) for n in range(11)], p
        rng = random.Random(20240601)
        pool = [p for k in range(1, 5) for p in permutations(range(1, k + 1))]
        pairs = [tuple(rng.sample(pool, 2)) for _ in range(20)]
        for ts in pairs:
            assert engine(ts, 10) == [count_avoiders(ts, n) for n in range(11)], ts


def test_08_closed_forms():
    with criterion(8, "closed forms = engine to order 20 (decreasing, families, 2- and "
                      "3-layered, kT1, kiT1i; k, l <= 5, i <= 4)"):
        for m in range(1, 11):
            assert series(decreasing_closed(m), 20) == engine([decreasing(m)], 20), m
        for name in FAMILIES:
            for k in range(3, 6):
                assert series(family_closed(name, k), 20) == engine([family_pattern(name, k)], 20)
        for k, l in product(range(1, 6), repeat=2):
            assert series(layered_closed(k, l), 20) == engine([layered(k, l)], 20)
            assert series(decreasing_closed(k + l), 20) == engine([layered(k, l)], 20)
        for ks in product(range(1, 6), repeat=3):
            ls = [2 * k for k in ks]
            assert series(layered_closed(*ls), 20) == engine([layered(*ls)], 20), ls
        # F_{12,21} = 1 + x is a polynomial, read straight off the engine
        bases = [
            ([(2, 1), (1, 2)], RatFunc(IntPoly(engine([(2, 1), (1, 2)], 20)))),
            ([(3, 2, 1)], decreasing_closed(3)),
            ([(2, 1, 4, 3)], decreasing_closed(4)),
            ([(1, 3, 2)], family_closed("k...4132", 3)),
        ]
        for ts, f in bases:
            assert series(kT1_closed(f), 20) == engine(kT1(ts), 20)
            for i in range(1, 5):
                assert series(kiT1i_closed(f.num, f.den, i), 20) == engine(kT1_iter(ts, i), 20)


def test_09_tables():
    with criterion(9, "verify-tables n_max = 10: engine = oracle on every row; "
                      "34521/54123 erratum adjudicated"):
        report = verify_tables(10)
        assert report.ok
        errata = dict(report.errata)
        assert "t3-34521" in errata and "correct gf is" in errata["t3-34521"]
        for rid, msg in report.errata:
            print(f"    erratum {rid}: {msg}")


def test_10_conjecture():
    with criterion(10, "layer-order symmetry, m = 3, l_i <= 5, order 15", 600):
        report = conjecture_sweep(3, 5, 15)
        print("    " + report.to_text().replace("\n", "\n    "))
        assert report.checked == 35
        assert report.symmetric, report.counterexamples
