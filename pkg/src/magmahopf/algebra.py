"""Polynomials and truncated series over the free magma, with exact rational coefficients."""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational

from .magma import ONE, Monomial, Unit, graft, leaf

Basis = Monomial | Unit

DEFAULT_CAP = 8


def _rat(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    raise TypeError(f"exact rational coefficient required, got {type(c).__name__}")


class Poly:
    """An element of ``K{X}``: a finite map from monomials (or ONE) to rationals.

    Zero coefficients are never stored.  Iteration follows the monomial order.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict[Basis, Fraction] = {}
        if terms:
            for m, c in dict(terms).items():
                c = _rat(c)
                if c:
                    self.terms[m] = c

    @classmethod
    def _raw(cls, terms: dict) -> "Poly":
        # trusts that terms has Fraction values and no zeros
        p = object.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, m: Basis, c=1) -> "Poly":
        return cls({m: c})

    @classmethod
    def var(cls, i: int) -> "Poly":
        return cls._raw({leaf(i): Fraction(1)})

    @classmethod
    def one(cls) -> "Poly":
        return cls._raw({ONE: Fraction(1)})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw({})

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __iter__(self):
        return iter(sorted(self.terms, key=lambda m: m.sort_key()))

    def items(self):
        return [(m, self.terms[m]) for m in self]

    def coeff(self, m: Basis) -> Fraction:
        return self.terms.get(m, Fraction(0))

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.terms == other.terms
        if isinstance(other, (int, Rational)):
            return self == Poly.one() * other if other else not self.terms
        return NotImplemented

    __hash__ = None

    def __repr__(self):
        from .parsing import format_poly

        return f"Poly({format_poly(self)!r})"

    def __str__(self):
        from .parsing import format_poly

        return format_poly(self)

    def copy(self) -> "Poly":
        return Poly._raw(dict(self.terms))

    # linear structure

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "Poly":
        c = _rat(c)
        if not c:
            return Poly.zero()
        return Poly._raw({m: c * v for m, v in self.terms.items()})

    # multiplication: Poly * Poly is grafting, Poly * scalar is scaling

    def __mul__(self, other):
        if isinstance(other, Poly):
            return mul(self, other)
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(Fraction(1) / _rat(other))
        return NotImplemented

    # grading

    def degrees(self) -> list[int]:
        return sorted({m.degree for m in self.terms})

    def component(self, n: int) -> "Poly":
        return Poly._raw({m: c for m, c in self.terms.items() if m.degree == n})

    def components(self) -> dict[int, "Poly"]:
        out: dict[int, dict] = {}
        for m, c in self.terms.items():
            out.setdefault(m.degree, {})[m] = c
        return {n: Poly._raw(t) for n, t in sorted(out.items())}

    def is_homogeneous(self) -> bool:
        return len({m.degree for m in self.terms}) <= 1

    def degree(self) -> int:
        """Largest degree present (-1 for the zero polynomial)."""
        return max((m.degree for m in self.terms), default=-1)

    def variables(self) -> set[int]:
        out: set[int] = set()
        for m in self.terms:
            if m is not ONE:
                out |= m.variables()
        return out

    def map_monomials(self, fn) -> "Poly":
        """Linear extension of ``fn: monomial -> Poly``; ``fn`` must handle ONE."""
        acc: dict[Basis, Fraction] = {}
        for m, c in self.terms.items():
            for k, v in fn(m).terms.items():
                acc[k] = acc.get(k, 0) + c * v
        return Poly._raw({k: v for k, v in acc.items() if v})


def _coerce(x):
    if isinstance(x, Poly):
        return x
    if isinstance(x, (int, Rational)):
        return Poly.one().scale(x) if x else Poly.zero()
    return None


def add(f: Poly, g: Poly) -> Poly:
    return f + g


def scale(c, f: Poly) -> Poly:
    return f.scale(c)


def mul(f: Poly, g: Poly) -> Poly:
    """Bilinear extension of grafting; ONE is the identity."""
    out: dict[Basis, Fraction] = {}
    for s, a in f.terms.items():
        for t, b in g.terms.items():
            if s is ONE:
                m = t
            elif t is ONE:
                m = s
            else:
                m = graft(s, t)
            out[m] = out.get(m, 0) + a * b
    return Poly._raw({m: c for m, c in out.items() if c})


def leading(f: Poly) -> tuple[Basis, Fraction]:
    """The maximal monomial of ``f`` under the monomial order, with its coefficient."""
    if not f:
        raise ValueError("leading() of the zero polynomial")
    m = max(f.terms, key=lambda t: t.sort_key())
    return m, f.terms[m]


class Series:
    """A truncation of ``K{{X}}``: homogeneous components 0..cap."""

    __slots__ = ("cap", "parts")

    def __init__(self, cap: int, parts=None):
        if cap < 0:
            raise ValueError("cap must be >= 0")
        self.cap = cap
        self.parts = [Poly.zero() for _ in range(cap + 1)]
        if parts is not None:
            items = parts.items() if isinstance(parts, dict) else enumerate(parts)
            for n, p in items:
                if n > cap:
                    continue
                if any(m.degree != n for m in p.terms):
                    raise ValueError(f"component {n} is not homogeneous of degree {n}")
                self.parts[n] = p

    @classmethod
    def from_poly(cls, f: Poly, cap: int = DEFAULT_CAP) -> "Series":
        comps = f.components()
        return cls(cap, {n: p for n, p in comps.items() if n <= cap})

    def __getitem__(self, n: int) -> Poly:
        return self.parts[n] if 0 <= n <= self.cap else Poly.zero()

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.cap == other.cap and self.parts == other.parts

    __hash__ = None

    def __repr__(self):
        return f"Series(cap={self.cap}, {self.to_poly()!s})"

    def to_poly(self) -> Poly:
        out = Poly.zero()
        for p in self.parts:
            out = out + p
        return out

    def order(self) -> int:
        """Lowest degree with a nonzero component (cap + 1 if all vanish)."""
        for n, p in enumerate(self.parts):
            if p:
                return n
        return self.cap + 1

    def _check(self, other):
        if not isinstance(other, Series):
            raise TypeError("expected a Series")
        if other.cap != self.cap:
            raise ValueError(f"cap mismatch: {self.cap} vs {other.cap}")

    def __add__(self, other):
        self._check(other)
        return Series(self.cap, [a + b for a, b in zip(self.parts, other.parts)])

    def __sub__(self, other):
        self._check(other)
        return Series(self.cap, [a - b for a, b in zip(self.parts, other.parts)])

    def __neg__(self):
        return Series(self.cap, [-a for a in self.parts])

    def scale(self, c) -> "Series":
        return Series(self.cap, [p.scale(c) for p in self.parts])

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return series_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        return NotImplemented


def series_add(F: Series, G: Series) -> Series:
    return F + G


def series_scale(c, F: Series) -> Series:
    return F.scale(c)


def series_mul(F: Series, G: Series) -> Series:
    """Graded convolution, truncated at the common cap."""
    F._check(G)
    parts = []
    for n in range(F.cap + 1):
        acc = Poly.zero()
        for k in range(n + 1):
            if F.parts[k] and G.parts[n - k]:
                acc = acc + mul(F.parts[k], G.parts[n - k])
        parts.append(acc)
    return Series(F.cap, parts)


class _Insertion:
    """Degree-n components of ``t(F, ..., F)`` for one-variable trees ``t``, memoized.

    ``t(F,...,F)_n = sum_i t1(F,...)_i * t2(F,...)_{n-i}`` for ``t = t1 t2``.
    Each value only reads components of ``F`` up to degree ``n - deg t + 1``.
    """

    def __init__(self, F: Series):
        self.F = F
        self.memo: dict[tuple[Monomial, int], Poly] = {}

    def __call__(self, t: Monomial, n: int) -> Poly:
        if n < t.degree or n > self.F.cap:
            return Poly.zero()
        if t.is_leaf:
            return self.F[n]
        key = (t, n)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        t1, t2 = t.left, t.right
        acc = Poly.zero()
        for i in range(t1.degree, n - t2.degree + 1):
            a = self(t1, i)
            if a:
                b = self(t2, n - i)
                if b:
                    acc = acc + mul(a, b)
        self.memo[key] = acc
        return acc


def compose(F: Series, outer) -> Series:
    """Substitute ``F`` into the one-variable series ``sum_t outer[t] t``.

    ``outer`` maps one-variable monomials to rationals; ONE is not allowed
    as a key.  ``F`` must have no constant term.
    """
    if F[0]:
        raise ValueError("compose() needs a series without constant term")
    ins = _Insertion(F)
    by_degree: dict[int, list] = {}
    for t, c in outer.items():
        if t is ONE:
            raise ValueError("outer series must have no constant term")
        if len(t.variables()) != 1:
            raise ValueError("outer series must be in one variable")
        if c and t.degree <= F.cap:
            by_degree.setdefault(t.degree, []).append((t, _rat(c)))
    parts = [Poly.zero()]
    for n in range(1, F.cap + 1):
        acc = Poly.zero()
        for k in range(1, n + 1):
            for t, c in by_degree.get(k, ()):
                piece = ins(t, n)
                if piece:
                    acc = acc + piece.scale(c)
        parts.append(acc)
    return Series(F.cap, parts)
