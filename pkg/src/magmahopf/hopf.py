"""The co-addition Hopf structure on ``K{X}``.

``delta`` is the algebra homomorphism with ``x_i -> x_i (x) 1 + 1 (x) x_i``.
On a tree it is the subset sum ``sum_I t|I (x) t|I^c``, computed by the
tree kernels.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from . import _kernels
from .algebra import Basis, Poly, _rat, mul
from .magma import ONE, Monomial, from_code, graft, leaf

__all__ = [
    "TensorPoly", "delta", "delta_s", "deviation", "is_primitive", "antipode",
    "right_antipode", "bar", "commutator", "associator", "substitute",
    "lie_right_normed", "expand_lie",
]


def _graft(a: Basis, b: Basis) -> Basis:
    if a is ONE:
        return b
    if b is ONE:
        return a
    return graft(a, b)


class TensorPoly:
    """An element of ``K{X} (x) K{X}``, keyed by ordered (left, right) pairs."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[tuple[Basis, Basis], Fraction] = {}
        if terms:
            for k, c in dict(terms).items():
                c = _rat(c)
                if c:
                    self.terms[k] = c

    @classmethod
    def _raw(cls, terms):
        t = object.__new__(cls)
        t.terms = terms
        return t

    @classmethod
    def tensor(cls, f: Poly, g: Poly) -> "TensorPoly":
        return cls._raw({(a, b): c * d for a, c in f.terms.items() for b, d in g.terms.items()})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __iter__(self):
        return iter(sorted(self.terms, key=lambda k: (k[0].sort_key(), k[1].sort_key())))

    def items(self):
        return [(k, self.terms[k]) for k in self]

    def __repr__(self):
        from .parsing import format_tensor

        return f"TensorPoly({format_tensor(self)!r})"

    def __add__(self, other):
        if not isinstance(other, TensorPoly):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return TensorPoly._raw(out)

    def __neg__(self):
        return TensorPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorPoly":
        c = _rat(c)
        if not c:
            return TensorPoly()
        return TensorPoly._raw({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        if not isinstance(other, TensorPoly):
            return NotImplemented
        out: dict = {}
        for (a, b), c in self.terms.items():
            for (p, q), d in other.terms.items():
                k = (_graft(a, p), _graft(b, q))
                out[k] = out.get(k, 0) + c * d
        return TensorPoly._raw({k: v for k, v in out.items() if v})

    def swap(self) -> "TensorPoly":
        return TensorPoly._raw({(b, a): c for (a, b), c in self.terms.items()})

    def right_coefficient(self, s: Basis) -> Poly:
        """The Poly ``P`` with ``self = sum_s P_s (x) s`` at slot ``s``."""
        return Poly._raw({a: c for (a, b), c in self.terms.items() if b == s})

    def map_slots(self, left=None, right=None) -> "TensorPoly":
        """Apply linear maps (monomial -> Poly) in each slot independently."""
        out: dict = {}
        lcache: dict = {}
        rcache: dict = {}
        for (a, b), c in self.terms.items():
            fa = lcache.get(a)
            if fa is None:
                fa = lcache[a] = left(a) if left else Poly.monomial(a)
            fb = rcache.get(b)
            if fb is None:
                fb = rcache[b] = right(b) if right else Poly.monomial(b)
            for p, u in fa.terms.items():
                for q, v in fb.terms.items():
                    out[(p, q)] = out.get((p, q), 0) + c * u * v
        return TensorPoly._raw({k: v for k, v in out.items() if v})


def iota(f: Poly, slot: int) -> TensorPoly:
    """``f (x) 1`` (slot 1) or ``1 (x) f`` (slot 2)."""
    if slot == 1:
        return TensorPoly._raw({(m, ONE): c for m, c in f.terms.items()})
    return TensorPoly._raw({(ONE, m): c for m, c in f.terms.items()})


@lru_cache(maxsize=4096)
def _delta_tree(m: Basis, max_right: int = -1) -> tuple:
    raw = _kernels.coproduct(m.code, max_right)
    return tuple(((from_code(a), from_code(b)), k) for (a, b), k in raw.items())


def _accumulate(f: Poly, max_right: int = -1) -> dict:
    out: dict = {}
    for m, c in f.terms.items():
        for key, k in _delta_tree(m, max_right):
            out[key] = out.get(key, 0) + c * k
    return {k: v for k, v in out.items() if v}


def delta(f: Poly) -> TensorPoly:
    """The co-addition of ``f``."""
    return TensorPoly._raw(_accumulate(f))


def delta_s(f: Poly, s: Basis) -> Poly:
    """Coefficient ``Delta_s(f)`` in ``Delta(f) = sum_s Delta_s(f) (x) s``."""
    out: dict = {}
    for m, c in f.terms.items():
        if m.degree < s.degree:
            continue
        for (a, b), k in _delta_tree(m, s.degree):
            if b == s:
                out[a] = out.get(a, 0) + c * k
    return Poly._raw({k: v for k, v in out.items() if v})


def deviation(f: Poly) -> TensorPoly:
    """``Delta(f) - f (x) 1 - 1 (x) f``; zero exactly for primitive ``f``."""
    return delta(f) - iota(f, 1) - iota(f, 2)


def proper_part(f: Poly) -> TensorPoly:
    """Terms of ``Delta(f)`` with both slots nonempty."""
    return TensorPoly._raw({k: c for k, c in _accumulate(f).items()
                            if k[0] is not ONE and k[1] is not ONE})


def _is_primitive_homogeneous(f: Poly, n: int) -> bool:
    # Delta_s(f) = 0 for all 1 <= deg s < (n+1)/2
    half = n // 2
    if half == 0:
        return True
    acc: dict = {}
    for m, c in f.terms.items():
        for (a, b), k in _delta_tree(m, half):
            if b is ONE:
                continue
            key = (a, b)
            acc[key] = acc.get(key, 0) + c * k
    return not any(acc.values())


def is_primitive(f: Poly, *, fast: bool = True) -> bool:
    """True iff ``Delta(f) = f (x) 1 + 1 (x) f``.

    With ``fast`` each homogeneous component is tested with the half-degree
    criterion; otherwise the full deviation is computed.
    """
    if not fast:
        return not deviation(f)
    for n, part in f.components().items():
        if n == 0:
            return False
        if not _is_primitive_homogeneous(part, n):
            return False
    return True


def _bar_monomial(m: Basis) -> Basis:
    if m is ONE or m.is_leaf:
        return m
    return graft(_bar_monomial(m.right), _bar_monomial(m.left))


def bar(f: Poly) -> Poly:
    """Reverse every product: ``bar(t1 t2) = bar(t2) bar(t1)``."""
    return Poly._raw({_bar_monomial(m): c for m, c in f.terms.items()})


@lru_cache(maxsize=None)
def _antipode_monomial(w: Basis) -> Poly:
    if w is ONE:
        return Poly.one()
    acc = Poly.monomial(w, -1)
    for (a, b), k in _delta_tree(w):
        if a is ONE or b is ONE:
            continue
        acc = acc - mul(_antipode_monomial(a), Poly.monomial(b)).scale(k)
    return acc


def antipode(f: Poly) -> Poly:
    """Left antipode: ``sigma(w) + w + sum sigma(w_(1)) w_(2) = 0``."""
    return f.map_monomials(_antipode_monomial)


def right_antipode(f: Poly) -> Poly:
    """``sigmabar(bar t) = bar(sigma(t))``."""
    return f.map_monomials(lambda m: bar(_antipode_monomial(_bar_monomial(m))))


def commutator(f: Poly, g: Poly) -> Poly:
    return mul(f, g) - mul(g, f)


def associator(f: Poly, g: Poly, h: Poly) -> Poly:
    return mul(mul(f, g), h) - mul(f, mul(g, h))


def substitute(f: Poly, images) -> Poly:
    """Algebra homomorphism ``x_i -> images[i-1]`` applied to ``f``."""
    images = list(images)
    cache: dict[Basis, Poly] = {}

    def image(m: Basis) -> Poly:
        hit = cache.get(m)
        if hit is not None:
            return hit
        if m is ONE:
            out = Poly.one()
        elif m.is_leaf:
            if m.var > len(images):
                raise ValueError(f"variable x{m.var} has no substitute (only {len(images)} given)")
            out = images[m.var - 1]
        else:
            out = mul(image(m.left), image(m.right))
        cache[m] = out
        return out

    return f.map_monomials(image)


def expand_lie(expr) -> dict[tuple[int, ...], int]:
    """Expand a nested bracket expression into associative words.

    ``expr`` is a variable index or a pair ``(a, b)`` meaning ``[a, b]``.
    """
    if isinstance(expr, int):
        return {(expr,): 1}
    a, b = expand_lie(expr[0]), expand_lie(expr[1])
    out: dict[tuple[int, ...], int] = {}
    for u, c in a.items():
        for v, d in b.items():
            out[u + v] = out.get(u + v, 0) + c * d
            out[v + u] = out.get(v + u, 0) - c * d
    return {w: c for w, c in out.items() if c}


def right_normed(word) -> Monomial:
    """``x_{i1}(x_{i2}(...x_{ir}))``."""
    t = leaf(word[-1])
    for i in reversed(word[:-1]):
        t = graft(leaf(i), t)
    return t


def lie_right_normed(expr) -> Poly:
    """Insert right-normed brackets into the associative expansion of a Lie polynomial."""
    return Poly({right_normed(w): c for w, c in expand_lie(expr).items()})
