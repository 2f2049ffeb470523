"""Classical (associative) Hausdorff series on words, used as an independent oracle.

Words are tuples of variable indices (x = 1, y = 2).  Nothing here touches
magma trees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

Word = tuple[int, ...]


@dataclass
class AssocSeries:
    cap: int
    coeffs: dict[Word, Fraction]

    def __getitem__(self, w) -> Fraction:
        return self.coeffs.get(tuple(w), Fraction(0))

    def component(self, n: int) -> dict[Word, Fraction]:
        return {w: c for w, c in self.coeffs.items() if len(w) == n}


def _mul(a: dict, b: dict, cap: int) -> dict:
    out: dict[Word, Fraction] = {}
    for u, c in a.items():
        for v, d in b.items():
            if len(u) + len(v) <= cap:
                w = u + v
                out[w] = out.get(w, 0) + c * d
    return {w: c for w, c in out.items() if c}


def assoc_exp_product(cap: int) -> dict[Word, Fraction]:
    """``e^x e^y - 1``: coefficient ``1/(p! q!)`` on ``x^p y^q``."""
    return {
        (1,) * p + (2,) * q: Fraction(1, factorial(p) * factorial(q))
        for p in range(cap + 1) for q in range(cap + 1 - p) if p + q > 0
    }


def assoc_bch(cap: int) -> AssocSeries:
    """``log(e^x e^y) = sum_m (-1)^(m-1) u^m / m`` with ``u = e^x e^y - 1``."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    u = assoc_exp_product(cap)
    total: dict[Word, Fraction] = {}
    power = dict(u)
    for m in range(1, cap + 1):
        sign = Fraction((-1) ** (m - 1), m)
        for w, c in power.items():
            total[w] = total.get(w, 0) + sign * c
        power = _mul(power, u, cap)
    return AssocSeries(cap, {w: c for w, c in total.items() if c})


def word_str(w: Word) -> str:
    names = {1: "x", 2: "y"}
    return "".join(names.get(i, f"[x{i}]") for i in w)
