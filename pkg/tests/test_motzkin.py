from __future__ import annotations

from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from patternlab.errors import DomainError, LimitError
from patternlab.motzkin import (
    MotzkinPath, generate_paths, heights, motzkin_numbers, phi, phi_inverse,
    rc_path, tau_k_path,
)
from patternlab.oracle import enumerate_involutions
from patternlab.permcore import identity, parse_perm, reverse_complement, tau_k

MOTZKIN = [1, 1, 2, 4, 9, 21, 51, 127, 323, 835, 2188, 5798, 15511, 41835, 113634]


def test_numbers():
    assert motzkin_numbers(14) == MOTZKIN


@pytest.mark.parametrize("bad", ["X", "D", "UUD", "DU", "ULL"])
def test_invalid_paths(bad):
    with pytest.raises(DomainError):
        MotzkinPath(bad)


def test_heights():
    assert heights(MotzkinPath("ULUDDLUD")) == [0, 1, 1, 2, 1, 0, 0, 1]


class TestGeneration:
    def test_small(self):
        assert [p.steps for p in generate_paths(0)] == [""]
        assert sorted(p.steps for p in generate_paths(3)) == ["LLL", "LUD", "UDL", "ULD"]
        assert sum(1 for _ in generate_paths(4)) == 9

    def test_counts(self):
        for n in range(13):
            paths = [p.steps for p in generate_paths(n)]
            assert len(paths) == len(set(paths)) == MOTZKIN[n]

    def test_limit(self, monkeypatch):
        with pytest.raises(LimitError):
            next(generate_paths(5, limit=4))
        monkeypatch.setenv("PATTERNLAB_LIMIT", "3")
        with pytest.raises(LimitError):
            next(generate_paths(4))


class TestTau:
    def test_example(self):
        p = MotzkinPath("ULUUDLDDLUD")
        assert [tau_k_path(p, k) for k in range(1, 7)] == [11, 22, 27, 19, 7, 1]
        assert tau_k_path(p, 7) == 0

    def test_trivial(self):
        flat = MotzkinPath("L" * 6)
        assert tau_k_path(flat, 1) == 6
        assert tau_k_path(flat, 2) == 0
        assert tau_k_path(MotzkinPath("UD"), 2) == 1

    def test_prefix_recurrences(self):
        for n in range(9):
            for p in generate_paths(n):
                for k in range(1, 17):
                    assert tau_k_path(MotzkinPath("L" + p.steps), k) == comb(0, k - 1) + tau_k_path(p, k)
        for n1 in range(5):
            for n2 in range(4):
                for p1 in generate_paths(n1):
                    for p2 in generate_paths(n2):
                        s = MotzkinPath("U" + p1.steps + "D" + p2.steps)
                        for k in range(1, 17):
                            want = (comb(0, k - 1) + comb(1, k - 1) + tau_k_path(p1, k - 2)
                                    + 2 * tau_k_path(p1, k - 1) + tau_k_path(p1, k)
                                    + tau_k_path(p2, k))
                            assert tau_k_path(s, k) == want


class TestBijection:
    def test_examples(self):
        assert phi(MotzkinPath("ULUDDLUD")) == parse_perm("52431687")
        assert phi(MotzkinPath("L" * 5)) == identity(5)
        assert phi(MotzkinPath("UD")) == (2, 1)
        assert phi_inverse(parse_perm("52431687")).steps == "ULUDDLUD"
        assert phi_inverse(identity(4)).steps == "LLLL"
        assert phi_inverse((2, 1)).steps == "UD"

    def test_inverse_rejects(self):
        with pytest.raises(DomainError):
            phi_inverse((3, 4, 1, 2))
        with pytest.raises(DomainError):
            phi_inverse((2, 3, 1))

    def test_rc_examples(self):
        assert rc_path(MotzkinPath("ULUUDLUUDDLLDDLUD")).steps == "UDLUULLUUDDLUDDLD"
        assert rc_path(MotzkinPath("LLL")).steps == "LLL"
        assert rc_path(MotzkinPath("UD")).steps == "UD"

    def test_bijective_and_tau_preserving(self):
        for n in range(9):
            images = {}
            for p in generate_paths(n):
                q = phi(p)
                images[q] = p
                assert phi_inverse(q) == p
                assert phi(rc_path(p)) == reverse_complement(q)
                for k in range(1, 2 * n + 1):
                    assert tau_k(q, k) == tau_k_path(p, k)
            assert set(images) == set(enumerate_involutions(n))

    @given(st.integers(0, 9).flatmap(lambda n: st.sampled_from([p.steps for p in generate_paths(n)])))
    @settings(max_examples=100, deadline=None)
    def test_rc_is_involution(self, steps):
        p = MotzkinPath(steps)
        assert rc_path(rc_path(p)) == p
