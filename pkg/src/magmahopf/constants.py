"""The algebra ``A_0 = ker D`` of constants in one variable (and a basis in two).

``Gamma = M - (xM u {x})`` indexes a vector-space basis ``Phi(s)`` of ``A_0``;
``Omega = Gamma - Gamma.Gamma`` indexes free algebra generators ``Phi(w)``.
From degree 6 on those generators need not be primitive; ``primitivize``
subtracts a polynomial in lower primitive generators to fix that.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache

from . import _linalg
from .algebra import Poly, leading, mul
from .calculus import phi1, phi_total
from .hopf import TensorPoly, deviation, is_primitive
from .magma import (ONE, Monomial, binomial, enumerate_monomials, graft, leaf,
                    power)


def in_gamma(t: Monomial) -> bool:
    """One-variable ``t`` is in Gamma iff it is a product whose left factor is not ``x``."""
    return not t.is_leaf and not t.left.is_leaf


def gamma_n(n: int) -> list[Monomial]:
    return [t for t in enumerate_monomials(n, (1,)) if in_gamma(t)]


def in_omega(t: Monomial) -> bool:
    if not in_gamma(t):
        return False
    return not (in_gamma(t.left) and in_gamma(t.right))


def omega_n(n: int) -> list[Monomial]:
    """Degree-``n`` free generators of the magma Gamma."""
    return [t for t in enumerate_monomials(n, (1,)) if in_omega(t)]


def constants_basis(n: int) -> list[Poly]:
    """``Phi(s)`` for ``s`` in ``Gamma_n``: a basis of the degree-``n`` constants."""
    return [phi1(Poly.monomial(s)) for s in gamma_n(n)]


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    leading: Monomial
    value: Poly = field(compare=False)
    primitive: bool
    # polynomial in lower generators subtracted by primitivize, as
    # {product expression: coefficient}; expressions are nested index pairs
    correction: dict = field(default_factory=dict, compare=False)


class GeneratorTable:
    """Ordered free generators ``y_{n,i}`` of ``A_0``."""

    def __init__(self, entries):
        self.entries: list[Generator] = list(entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def by_name(self, name: str) -> Generator:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def by_leading(self, t: Monomial) -> Generator:
        for e in self.entries:
            if e.leading == t:
                return e
        raise KeyError(str(t))

    def of_degree(self, n: int) -> list[Generator]:
        return [e for e in self.entries if e.degree == n]

    @property
    def max_degree(self) -> int:
        return max((e.degree for e in self.entries), default=0)


def free_generators(max_degree: int) -> GeneratorTable:
    """``Phi(w)`` for ``w`` in ``Omega_n``, ``3 <= n <= max_degree``, by leading monomial."""
    if max_degree < 3:
        raise ValueError("max_degree must be >= 3")
    entries = []
    for n in range(3, max_degree + 1):
        for i, w in enumerate(omega_n(n), start=1):
            value = phi1(Poly.monomial(w))
            lead, c = leading(value)
            if lead != w or c != 1:
                raise AssertionError(f"Phi changed the leading term of {w}")
            entries.append(Generator(f"y_{n},{i}", n, w, value, is_primitive(value)))
    return GeneratorTable(entries)


def z(n: int, k: int) -> Poly:
    """``z_{n,k} = a_0(x^k x^{n-k})``."""
    if n < 3 or not 2 <= k <= n - 1:
        raise ValueError(f"z(n, k) needs n >= 3 and 2 <= k <= n-1, got ({n}, {k})")
    return phi1(Poly.monomial(graft(power(k), power(n - k))))


_z_cached = lru_cache(maxsize=None)(z)


def delta_z(n: int, k: int) -> TensorPoly:
    """Closed form of ``Delta(z_{n,k})``:
    ``z (x) 1 + 1 (x) z + sum C(k,m) C(n-k,l-m) z_{l,m} (x) z_{n-l,k-m}``."""
    zz = _z_cached(n, k)
    out = TensorPoly._raw({(m, ONE): c for m, c in zz.terms.items()})
    out = out + TensorPoly._raw({(ONE, m): c for m, c in zz.terms.items()})
    for m in range(2, k - 1):
        for l in range(m + 1, m + n - k):
            c = binomial(k, m) * binomial(n - k, l - m)
            if c:
                out = out + TensorPoly.tensor(_z_cached(l, m), _z_cached(n - l, k - m)).scale(c)
    return out


# products of generators -------------------------------------------------

def _expr_key(expr):
    if isinstance(expr, int):
        return (1, expr)
    return (_nfactors(expr), _expr_key(expr[0]), _expr_key(expr[1]))


def _nfactors(expr) -> int:
    return 1 if isinstance(expr, int) else _nfactors(expr[0]) + _nfactors(expr[1])


def format_expr(expr, table: GeneratorTable) -> str:
    if isinstance(expr, int):
        return table[expr].name
    return f"({format_expr(expr[0], table)} {format_expr(expr[1], table)})"


def products(table: GeneratorTable, degree: int, indices=None):
    """All bracketed products of generators with total degree ``degree``.

    Yields ``(expr, Poly)``; ``expr`` is a table index or a nested pair of
    expressions.  Single generators are included.
    """
    if indices is None:
        indices = range(len(table))
    indices = list(indices)
    memo: dict[int, list] = {}

    def build(d):
        if d in memo:
            return memo[d]
        out = [(i, table[i].value) for i in indices if table[i].degree == d]
        for a in range(3, d - 2):
            for ea, pa in build(a):
                for eb, pb in build(d - a):
                    out.append(((ea, eb), mul(pa, pb)))
        memo[d] = out
        return out

    return sorted(build(degree), key=lambda e: _expr_key(e[0]))


def primitivize(table: GeneratorTable, r: int) -> GeneratorTable:
    """Make every degree-``r`` generator primitive.

    For a non-primitive ``y`` with deviation ``E = Delta(y) - y(x)1 - 1(x)y``,
    solve ``E = deviation(alpha)`` for ``alpha`` in the span of products of
    lower (primitive) generators and replace ``y`` by ``y - alpha``.
    """
    lower = [i for i, e in enumerate(table) if e.degree < r]
    bad = [table[i].name for i in lower if not table[i].primitive]
    if bad:
        raise ValueError(f"generators below degree {r} are not primitive: {bad[:5]}")
    targets = [i for i, e in enumerate(table) if e.degree == r and not e.primitive]
    if not targets:
        return GeneratorTable(table.entries)

    basis_exprs, basis_polys, seen = [], [], set()
    for expr, p in products(table, r, lower):
        if isinstance(expr, int) or not p:
            continue
        key = frozenset(p.terms.items())
        if key in seen:
            continue
        seen.add(key)
        basis_exprs.append(expr)
        basis_polys.append(p)
    columns = [deviation(p).terms for p in basis_polys]

    entries = list(table.entries)
    for i in targets:
        e = entries[i]
        sol = _linalg.solve(columns, deviation(e.value).terms)
        if sol is None:
            raise RuntimeError(f"no correction found for {e.name}")
        alpha = Poly.zero()
        correction = {}
        for expr, p, c in zip(basis_exprs, basis_polys, sol):
            if c:
                alpha = alpha + p.scale(c)
                correction[expr] = c
        value = e.value - alpha
        if not is_primitive(value):
            raise RuntimeError(f"correction of {e.name} is not primitive")
        entries[i] = replace(e, value=value, primitive=True, correction=correction)
    return GeneratorTable(entries)


def primitive_generators(max_degree: int) -> GeneratorTable:
    """Free generators of ``A_0`` made primitive degree by degree."""
    table = free_generators(max_degree)
    for r in range(6, max_degree + 1):
        table = primitivize(table, r)
    return table


# two variables ------------------------------------------------------------

def in_gamma_two_var(t: Monomial) -> bool:
    """``{s1 s2: deg s1 >= 2, deg s2 >= 1} u {y(x t)}`` with ``x = x_1``, ``y = x_2``."""
    if t.is_leaf:
        return False
    s1, s2 = t.left, t.right
    if s1.degree >= 2:
        return True
    if s1 == leaf(2):
        return s2 == leaf(1) or (not s2.is_leaf and s2.left == leaf(1))
    return False


def gamma_two_var(n: int) -> list[Monomial]:
    return [t for t in enumerate_monomials(n, (1, 2)) if in_gamma_two_var(t)]


def constants_basis_two_var(n: int) -> list[Poly]:
    return [phi_total(Poly.monomial(s), (1, 2)) for s in gamma_two_var(n)]


def span_rank(polys) -> int:
    return _linalg.rank([p.terms for p in polys])


def dim_constants(n: int) -> int:
    from .magma import catalan

    return catalan(n) - catalan(n - 1) if n >= 2 else 0


__all__ = [
    "gamma_n", "omega_n", "constants_basis", "free_generators", "z", "delta_z",
    "primitivize", "primitive_generators", "gamma_two_var", "constants_basis_two_var",
    "Generator", "GeneratorTable", "products", "span_rank", "in_gamma", "in_omega",
    "format_expr", "dim_constants",
]
