"""Exact enumeration of pattern-avoiding 3412-avoiding involutions."""

from __future__ import annotations

from .errors import DomainError, ExpansionError, LimitError, PatternLabError
from .genfun import ft_series
from .motzkin import MotzkinPath, phi, phi_inverse
from .oracle import count_avoiders, enumerate_involutions
from .permcore import PatternSet, format_perm, parse_pattern_set, parse_perm

__version__ = "0.1.0"
