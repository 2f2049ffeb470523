"""Derivations, left multiplications, Taylor expansions and the constants projector.

For a variable ``x_i`` every ``f`` has a unique expansion
``f = sum_j L_i^j(a_j)`` with ``D_i(a_j) = 0``; ``phi1`` returns ``a_0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .algebra import Basis, Poly
from .hopf import TensorPoly
from .magma import ONE, graft, leaf


@lru_cache(maxsize=None)
def _derive_monomial(m: Basis, i: int) -> Poly:
    if m is ONE:
        return Poly.zero()
    if m.is_leaf:
        return Poly.one() if m.var == i else Poly.zero()
    t1, t2 = m.left, m.right
    d1 = _derive_monomial(t1, i)
    d2 = _derive_monomial(t2, i)
    return d1 * Poly.monomial(t2) + Poly.monomial(t1) * d2


def derive(f: Poly, i: int = 1) -> Poly:
    """The derivation ``D_i`` with ``D_i(x_i) = 1`` and ``D_i(x_j) = 0``."""
    return f.map_monomials(lambda m: _derive_monomial(m, i))


def derive_n(f: Poly, i: int, n: int) -> Poly:
    for _ in range(n):
        if not f:
            break
        f = derive(f, i)
    return f


def lmul(f: Poly, i: int = 1, j: int = 1) -> Poly:
    """``L_i^j(f)``: left-multiply ``j`` times by ``x_i``."""
    x = leaf(i)
    terms = f.terms
    for _ in range(j):
        terms = {(x if m is ONE else graft(x, m)): c for m, c in terms.items()}
    return Poly._raw(dict(terms))


@dataclass
class TaylorExpansion1:
    variable: int
    coeffs: dict[int, Poly] = field(default_factory=dict)

    def __getitem__(self, j: int) -> Poly:
        return self.coeffs.get(j, Poly.zero())

    def reconstruct(self) -> Poly:
        out = Poly.zero()
        for j, a in self.coeffs.items():
            out = out + lmul(a, self.variable, j)
        return out


@dataclass
class TaylorExpansionTotal:
    order: tuple[int, ...]
    coeffs: dict[tuple[int, ...], Poly] = field(default_factory=dict)

    def __getitem__(self, idx) -> Poly:
        return self.coeffs.get(tuple(idx), Poly.zero())

    def reconstruct(self) -> Poly:
        out = Poly.zero()
        for idx, a in self.coeffs.items():
            # x^j.a = L_1^{j1} ... L_r^{jr}(a): innermost is the last variable
            g = a
            for v, j in reversed(list(zip(self.order, idx))):
                g = lmul(g, v, j)
            out = out + g
        return out


def taylor1(f: Poly, i: int = 1) -> TaylorExpansion1:
    """Top-down peeling: ``a_n = D^n f / n!`` for the largest ``n`` with ``D^n f != 0``,
    then recurse on ``f - L^n(a_n)``."""
    derivs = [f]
    while derivs[-1]:
        derivs.append(derive(derivs[-1], i))
    n = len(derivs) - 2
    coeffs: dict[int, Poly] = {}
    rest = f
    while n >= 0 and rest:
        dn = derive_n(rest, i, n)
        if dn:
            a = dn.scale(Fraction(1, factorial(n)))
            coeffs[n] = a
            rest = rest - lmul(a, i, n)
        n -= 1
    return TaylorExpansion1(i, coeffs)


def taylor1_bottom_up(f: Poly, i: int = 1) -> TaylorExpansion1:
    """Expansion via the derivative's expansion: ``a_{j+1} = b_j/(j+1)``, ``a_0 = f - g``."""
    if not f:
        return TaylorExpansion1(i, {})
    df = derive(f, i)
    inner = taylor1_bottom_up(df, i) if df else TaylorExpansion1(i, {})
    coeffs = {j + 1: b.scale(Fraction(1, j + 1)) for j, b in inner.coeffs.items() if b}
    g = Poly.zero()
    for j, a in coeffs.items():
        g = g + lmul(a, i, j)
    a0 = f - g
    if a0:
        coeffs[0] = a0
    return TaylorExpansion1(i, coeffs)


@lru_cache(maxsize=None)
def _phi_monomial(m: Basis, i: int) -> Poly:
    f = Poly.monomial(m)
    out = Poly.zero()
    k = 0
    while f:
        out = out + lmul(f, i, k).scale(Fraction((-1) ** k, factorial(k)))
        k += 1
        f = derive(f, i)
    return out


def phi1(f: Poly, i: int = 1) -> Poly:
    """``a_0(f)`` for ``x_i``: ``sum_k (-1)^k/k! L_i^k D_i^k f``."""
    return f.map_monomials(lambda m: _phi_monomial(m, i))


def integral(f: Poly, i: int = 1) -> Poly:
    """``sum_{k=1}^{n+1} (-1)^{k-1}/k! L^k(D^{k-1} f)`` per homogeneous component."""
    out = Poly.zero()
    for n, part in f.components().items():
        g = part
        for k in range(1, n + 2):
            if not g:
                break
            out = out + lmul(g, i, k).scale(Fraction((-1) ** (k - 1), factorial(k)))
            g = derive(g, i)
    return out


def integral_taylor(f: Poly, i: int = 1) -> Poly:
    """``sum_j x^{j+1}.a_j(f)/(j+1)``."""
    out = Poly.zero()
    for j, a in taylor1(f, i).coeffs.items():
        out = out + lmul(a, i, j + 1).scale(Fraction(1, j + 1))
    return out


def _check_vars(f: Poly, order) -> tuple[int, ...]:
    order = tuple(order)
    extra = f.variables() - set(order)
    if extra:
        raise ValueError(f"polynomial uses variables {sorted(extra)} not in order {list(order)}")
    return order


def taylor_total(f: Poly, order=None) -> TaylorExpansionTotal:
    """Expand in ``order[0]``, then each coefficient in ``order[1]``, and so on."""
    if order is None:
        order = sorted(f.variables()) or [1]
    order = _check_vars(f, order)
    level: dict[tuple[int, ...], Poly] = {(): f}
    for v in order:
        nxt: dict[tuple[int, ...], Poly] = {}
        for idx, g in level.items():
            for j, a in taylor1(g, v).coeffs.items():
                if a:
                    nxt[idx + (j,)] = a
        level = nxt
    return TaylorExpansionTotal(order, level)


def phi_total(f: Poly, order=None) -> Poly:
    """``a_(0,...,0)(f) = Phi_r(...Phi_1(f))`` for the given variable order."""
    if order is None:
        order = sorted(f.variables()) or [1]
    order = _check_vars(f, order)
    for v in order:
        f = phi1(f, v)
    return f


def phi_tensor(F: TensorPoly, i: int = 1) -> TensorPoly:
    """``Phi (x) Phi`` applied slotwise."""
    p = lambda m: _phi_monomial(m, i)  # noqa: E731
    return F.map_slots(p, p)
