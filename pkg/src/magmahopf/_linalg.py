"""Exact linear algebra over QQ on sparse dict vectors (sympy DomainMatrix backend)."""

from __future__ import annotations

from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _q(c: Fraction):
    return QQ(c.numerator, c.denominator)


def _matrix(columns: list[dict], rows: list | None = None):
    if rows is None:
        seen: dict = {}
        for col in columns:
            for k in col:
                seen.setdefault(k, None)
        rows = list(seen)
    index = {k: r for r, k in enumerate(rows)}
    data: dict[int, dict[int, object]] = {}
    for j, col in enumerate(columns):
        for k, c in col.items():
            if c:
                data.setdefault(index[k], {})[j] = _q(Fraction(c))
    return DomainMatrix.from_dod(data, (len(rows), len(columns)), QQ), rows


def rank(columns: list[dict]) -> int:
    """Rank of the span of sparse vectors (dicts key -> rational)."""
    if not columns:
        return 0
    m, rows = _matrix(columns)
    if not rows:
        return 0
    return m.rank()


def solve(columns: list[dict], target: dict) -> list[Fraction] | None:
    """A solution ``a`` of ``sum_j a_j columns[j] = target`` or None.

    Among all solutions, the one from the reduced row echelon form is
    returned: non-pivot coordinates are zero and pivots are taken as far
    left as possible in the given column order.
    """
    keys: dict = {}
    for col in columns + [target]:
        for k in col:
            keys.setdefault(k, None)
    rows = list(keys)
    if not rows:
        return [Fraction(0)] * len(columns)
    m, _ = _matrix(columns + [target], rows)
    rref, pivots = m.rref()
    n = len(columns)
    if n in pivots:
        return None
    dense = rref.to_Matrix()
    sol = [Fraction(0)] * n
    for r, p in enumerate(pivots):
        v = dense[r, n]
        sol[p] = Fraction(int(v.p), int(v.q))
    return sol
