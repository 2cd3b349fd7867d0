"""Exact integer conversions among the c-, b-, f- and h-vectors.

Conventions:

* ``c = (c_1, ..., c_d)`` counts cliques by size; it equals the f-vector of
  the clique complex shifted by one.
* ``b = (b_1, ..., b_d)`` is defined by the polynomial identity
  ``sum b_i (x+1)^(i-1) == sum c_i x^(i-1)``.
* f-vectors are passed as ``(f_-1, f_0, ..., f_(d-1))`` with ``f_-1 = 1``
  for honest complexes; h-vectors as ``(h_0, ..., h_d)``.

All maps are triangular integer-linear bijections, computed with arbitrary
precision; no positivity is assumed, so probing non-realizable vectors is
allowed (diagnosis is the caller's job).
"""

from __future__ import annotations

from math import comb
from typing import Sequence

__all__ = ["b_from_c", "c_from_b", "h_from_f", "f_from_h"]


def b_from_c(c: Sequence[int]) -> tuple[int, ...]:
    """b-vector of a clique vector: substitute ``x -> x - 1``."""
    d = len(c)
    if d == 0:
        raise ValueError("empty c-vector")
    return tuple(
        sum((-1) ** (i - j) * comb(i - 1, j - 1) * c[i - 1] for i in range(j, d + 1))
        for j in range(1, d + 1)
    )


def c_from_b(b: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`b_from_c`: ``c_i = sum_j C(j-1, j-i) b_j``."""
    d = len(b)
    if d == 0:
        raise ValueError("empty b-vector")
    return tuple(
        sum(comb(j - 1, j - i) * b[j - 1] for j in range(i, d + 1))
        for i in range(1, d + 1)
    )


def h_from_f(f: Sequence[int], d: int) -> tuple[int, ...]:
    """h-vector from an f-vector ``(f_-1, ..., f_(d-1))`` of length d+1."""
    if len(f) != d + 1:
        raise ValueError(f"f-vector must have length d+1={d + 1}, got {len(f)}")
    return tuple(
        sum((-1) ** (j - i) * comb(d - i, j - i) * f[i] for i in range(j + 1))
        for j in range(d + 1)
    )


def f_from_h(h: Sequence[int], d: int) -> tuple[int, ...]:
    """Inverse of :func:`h_from_f`: ``f_(j-1) = sum_i C(d-i, j-i) h_i``."""
    if len(h) != d + 1:
        raise ValueError(f"h-vector must have length d+1={d + 1}, got {len(h)}")
    return tuple(
        sum(comb(d - i, j - i) * h[i] for i in range(j + 1)) for j in range(d + 1)
    )
