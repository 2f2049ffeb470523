"""Non-associative exp, log and the Hausdorff series ``H(x, y) = log(exp(x) exp(y))``.

Coefficients of ``exp`` satisfy ``a(t1 t2) = a(t1) a(t2) / (2^n - 2)``.
The Hausdorff coefficients come from the mutual recursion

    c(tau)      = d(tau) - sum_{k=2}^{deg tau} c_k(tau)
    c_k(tau)    = sum_{l} c_l(tau1) c_{k-l}(tau2) / (2^k - 2),   2 <= k < deg tau
    c_deg(tau)  = a(|tau|),   c_1 = c

where ``d`` is the coefficient in ``exp(x) exp(y)``.  Variables: x = 1, y = 2.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import Poly, Series, compose
from .hopf import bar
from .magma import ONE, Monomial, enumerate_monomials, leaf, underlying

X, Y = 1, 2

DEFAULT_EXP_CAP = 8
DEFAULT_H_CAP = 7


@lru_cache(maxsize=None)
def exp_coeff(t: Monomial) -> Fraction:
    """``a(t)``; only the shape of ``t`` matters."""
    if t.is_leaf:
        return Fraction(1)
    n = t.degree
    return exp_coeff(t.left) * exp_coeff(t.right) / (2 ** n - 2)


def exp_coeffs(cap: int = DEFAULT_EXP_CAP, var: int = X) -> dict[Monomial, Fraction]:
    """``a(t)`` for every one-variable ``t`` of degree ``<= cap``."""
    if cap < 1:
        raise ValueError("cap must be >= 1")
    return {t: exp_coeff(t) for n in range(1, cap + 1) for t in enumerate_monomials(n, (var,))}


def exp_series(cap: int = DEFAULT_EXP_CAP, var: int = X) -> Series:
    terms = dict(exp_coeffs(cap, var))
    terms[ONE] = Fraction(1)
    return Series.from_poly(Poly(terms), cap)


def log_coeffs(cap: int = DEFAULT_EXP_CAP) -> dict[Monomial, Fraction]:
    """``b(t)`` of ``log(1+x)``, the composition inverse of ``exp(x) - 1``.

    Degree by degree: with ``b`` known below ``n``, the degree-``n`` part of
    ``(exp - 1)(log)`` is ``log_n`` plus terms in lower components only, and
    it must vanish for ``n >= 2``.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    a = exp_coeffs(cap)
    x = leaf(X)
    b: dict[Monomial, Fraction] = {x: Fraction(1)}
    for n in range(2, cap + 1):
        log_so_far = Series.from_poly(Poly(b), n)
        higher = {t: c for t, c in a.items() if 2 <= t.degree <= n}
        comp = compose(log_so_far, higher)[n]
        for t, c in comp.terms.items():
            b[t] = -c
    return {t: c for t, c in b.items() if c}


def log_series(cap: int = DEFAULT_EXP_CAP) -> Series:
    return Series.from_poly(Poly(log_coeffs(cap)), cap)


def _in_single_var(t: Monomial, v: int) -> bool:
    return all(b == 0 or b == v for b in t.code)


def d_coeff(tau: Monomial) -> Fraction:
    """Coefficient of ``tau`` in ``exp(x) exp(y)``."""
    if _in_single_var(tau, X) or _in_single_var(tau, Y):
        return exp_coeff(tau)
    if tau.is_leaf:
        return Fraction(0)
    t1, t2 = tau.left, tau.right
    if _in_single_var(t1, X) and _in_single_var(t2, Y):
        return exp_coeff(t1) * exp_coeff(t2)
    return Fraction(0)


@lru_cache(maxsize=None)
def hausdorff_coeff(tau: Monomial) -> Fraction:
    """``c(tau)``, the coefficient of ``tau`` in ``H(x, y)``."""
    if tau.is_leaf:
        return Fraction(1)
    total = d_coeff(tau)
    for k in range(2, tau.degree + 1):
        total -= c_k(tau, k)
    return total


@lru_cache(maxsize=None)
def c_k(tau: Monomial, k: int) -> Fraction:
    """Sum over ``tau = t(s_1..s_k)``, ``deg t = k``, of ``a(t) c(s_1)...c(s_k)``."""
    n = tau.degree
    if k < 1 or k > n:
        return Fraction(0)
    if k == 1:
        return hausdorff_coeff(tau)
    if k == n:
        return exp_coeff(underlying(tau))
    t1, t2 = tau.left, tau.right
    total = Fraction(0)
    for l in range(max(1, k - t2.degree), min(k - 1, t1.degree) + 1):
        total += c_k(t1, l) * c_k(t2, k - l)
    return total / (2 ** k - 2)


def hausdorff_component(n: int) -> Poly:
    """``H_n = sum_{deg tau = n} c(tau) tau``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Poly({tau: hausdorff_coeff(tau) for tau in enumerate_monomials(n, (X, Y))})


def hausdorff_series(cap: int = DEFAULT_H_CAP) -> Series:
    return Series(cap, [Poly.zero()] + [hausdorff_component(n) for n in range(1, cap + 1)])


def exp_product_series(cap: int) -> Series:
    """``exp(x) exp(y)`` truncated at ``cap``."""
    return exp_series(cap, X) * exp_series(cap, Y)


def hausdorff_by_composition(cap: int = 6) -> Series:
    """``log(1 + Z)`` with ``Z = exp(x) exp(y) - 1``, by series composition."""
    Z = exp_product_series(cap)
    Z.parts[0] = Poly.zero()
    return compose(Z, log_coeffs(cap))


def swap_xy(f: Poly) -> Poly:
    """The automorphism exchanging ``x`` and ``y`` (shape preserved)."""
    return Poly._raw({_swap_monomial(m): c for m, c in f.terms.items()})


def _swap_monomial(t):
    if t is ONE:
        return ONE
    return Monomial.from_code(bytes({X: Y, Y: X}.get(b, b) for b in t.code))


def star(f: Poly) -> Poly:
    """The involution ``*`` with ``x* = y``, ``y* = x`` and ``(fg)* = g* f*``.

    It reverses products, so ``(xy)* = xy`` and ``(x,x,y)* = -(x,y,y)``;
    that is what makes ``H(x, y)* = H(x, y)`` hold.
    """
    return bar(swap_xy(f))


def foliage_sums(n: int) -> dict[tuple[int, ...], Fraction]:
    """``sum c(tau)`` over degree-``n`` monomials grouped by foliage word."""
    out: dict[tuple[int, ...], Fraction] = {}
    for tau, c in hausdorff_component(n).terms.items():
        w = tau.foliage()
        out[w] = out.get(w, Fraction(0)) + c
    return out
