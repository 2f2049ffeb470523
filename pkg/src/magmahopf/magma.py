"""Magma monomials: labeled planar binary rooted trees.

A :class:`Monomial` is an interned immutable value built on a preorder byte
code (``0`` for an internal node, ``i`` for a leaf labeled ``x_i``).  The
empty tree ``t|{}`` is the separate singleton :data:`ONE`.

Leaf positions are 1-based, left to right.  ``power(j)`` is ``L^j(1)``, so
``x^3 = x(xx)``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb, factorial

from . import _kernels

MAX_VARIABLE = 255


class Unit:
    """The empty tree; neutral for grafting and degree 0 in every grading."""

    __slots__ = ()
    code = b""
    degree = 0
    is_leaf = False

    def __new__(cls):
        return ONE

    def sort_key(self):
        return (0,)

    def foliage(self):
        return ()

    def __repr__(self):
        return "ONE"

    def __reduce__(self):
        return (Unit, ())


ONE = object.__new__(Unit)

_interned: dict[bytes, "Monomial"] = {}


class Monomial:
    """A nonempty tree.  Create with :func:`leaf`, :func:`graft` or :meth:`from_code`."""

    __slots__ = ("code", "_hash", "_children", "_key")

    def __new__(cls, code):
        return cls.from_code(bytes(code))

    @classmethod
    def from_code(cls, code: bytes) -> "Monomial":
        m = _interned.get(code)
        if m is None:
            if not code:
                raise ValueError("empty code is the unit, not a Monomial")
            m = object.__new__(cls)
            m.code = code
            m._hash = hash(code)
            m._children = None
            m._key = None
            m = _interned.setdefault(code, m)
        return m

    def __reduce__(self):
        return (Monomial.from_code, (self.code,))

    def __eq__(self, other):
        return self is other or (isinstance(other, Monomial) and self.code == other.code)

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        return self.sort_key() >= other.sort_key()

    @property
    def degree(self) -> int:
        return (len(self.code) + 1) // 2

    @property
    def is_leaf(self) -> bool:
        return len(self.code) == 1

    @property
    def var(self) -> int:
        if not self.is_leaf:
            raise ValueError("not a leaf")
        return self.code[0]

    def _split(self):
        if self._children is None:
            left, right = _kernels.split(self.code)
            self._children = (Monomial.from_code(left), Monomial.from_code(right))
        return self._children

    @property
    def left(self) -> "Monomial":
        return self._split()[0]

    @property
    def right(self) -> "Monomial":
        return self._split()[1]

    def sort_key(self):
        if self._key is None:
            if self.is_leaf:
                self._key = (1, self.code[0])
            else:
                left, right = self._split()
                self._key = (self.degree, left.sort_key(), right.sort_key())
        return self._key

    def foliage(self) -> tuple[int, ...]:
        return tuple(b for b in self.code if b)

    def variables(self) -> set[int]:
        return {b for b in self.code if b}

    def __repr__(self):
        return f"Monomial({format_monomial(self)!r})"

    def __str__(self):
        return format_monomial(self)


def leaf(i: int) -> Monomial:
    if not 1 <= i <= MAX_VARIABLE:
        raise ValueError(f"variable index must be in 1..{MAX_VARIABLE}, got {i}")
    return Monomial.from_code(bytes((i,)))


def graft(t1: Monomial, t2: Monomial) -> Monomial:
    """The product ``t1 t2`` of the free magma."""
    return Monomial.from_code(b"\x00" + t1.code + t2.code)


def from_code(code: bytes) -> Monomial | Unit:
    return Monomial.from_code(code) if code else ONE


def power(j: int, var: int = 1) -> Monomial | Unit:
    """``x^j = L^j(1)``, the right comb ``x(x(...x))``; ``power(0)`` is ONE."""
    if j < 0:
        raise ValueError("negative power")
    x = leaf(var)
    t = ONE
    for _ in range(j):
        t = x if t is ONE else graft(x, t)
    return t


def from_nested(obj) -> Monomial:
    """Build a monomial from nested pairs of variable indices, e.g. ``((1, 1), 2)``."""
    if isinstance(obj, int):
        return leaf(obj)
    left, right = obj
    return graft(from_nested(left), from_nested(right))


def to_nested(t: Monomial):
    if t.is_leaf:
        return t.var
    return (to_nested(t.left), to_nested(t.right))


def check_leaf_set(t: Monomial | Unit, leaves) -> int:
    """Validate 1-based leaf positions of ``t`` and return them as a bitmask."""
    mask = 0
    for p in leaves:
        if not 1 <= p <= t.degree:
            raise ValueError(f"leaf position {p} out of range 1..{t.degree}")
        mask |= 1 << (p - 1)
    return mask


def contract(t: Monomial | Unit, leaves) -> Monomial | Unit:
    """``t|I``: keep the leaves at positions ``I`` and collapse unary nodes."""
    return from_code(_kernels.contract(t.code, check_leaf_set(t, leaves)))


def compare(s: Monomial | Unit, t: Monomial | Unit) -> int:
    """-1, 0 or 1.  Degree first, then leaf index, then left factor, then right."""
    a, b = s.sort_key(), t.sort_key()
    return (a > b) - (a < b)


@lru_cache(maxsize=None)
def mu(s: Monomial | Unit, t: Monomial | Unit) -> int:
    """Number of leaf subsets ``I`` of ``t`` with ``t|I = s``."""
    if s is ONE:
        return 1
    if s.degree > t.degree:
        return 0
    if t.is_leaf:
        return 1 if s == t else 0
    t1, t2 = t.left, t.right
    total = mu(s, t1) + mu(s, t2)
    if not s.is_leaf:
        total += mu(s.left, t1) * mu(s.right, t2)
    return total


def mu_bruteforce(s: Monomial | Unit, t: Monomial | Unit) -> int:
    n = t.degree
    return sum(1 for mask in range(1 << n) if _kernels.contract(t.code, mask) == s.code)


def catalan(n: int) -> int:
    """Number of planar binary trees with ``n`` leaves, ``(2(n-1))!/(n!(n-1)!)``."""
    if n < 1:
        raise ValueError("catalan(n) needs n >= 1")
    return factorial(2 * (n - 1)) // (factorial(n) * factorial(n - 1))


@lru_cache(maxsize=None)
def _shapes(n: int) -> tuple[bytes, ...]:
    # unlabeled preorder codes with leaves marked 1
    if n == 1:
        return (b"\x01",)
    out = []
    for k in range(1, n):
        for a in _shapes(k):
            for b in _shapes(n - k):
                out.append(b"\x00" + a + b)
    return tuple(out)


@lru_cache(maxsize=64)
def _enumerate(n: int, variables: tuple[int, ...]) -> tuple[Monomial, ...]:
    out = []
    for shape in _shapes(n):
        slots = [i for i, b in enumerate(shape) if b]
        for labels in itertools.product(variables, repeat=n):
            code = bytearray(shape)
            for i, v in zip(slots, labels):
                code[i] = v
            out.append(Monomial.from_code(bytes(code)))
    out.sort(key=Monomial.sort_key)
    return tuple(out)


def enumerate_monomials(n: int, variables=(1,)) -> list[Monomial]:
    """All degree-``n`` monomials over ``variables`` in increasing order."""
    if n < 1:
        raise ValueError("degree must be >= 1")
    variables = tuple(sorted(set(variables)))
    for v in variables:
        leaf(v)
    return list(_enumerate(n, variables))


def foliage(t: Monomial | Unit) -> tuple[int, ...]:
    return t.foliage()


def underlying(t: Monomial | Unit, z: int = 1) -> Monomial | Unit:
    """Relabel every leaf with the single variable ``z`` (default ``x_1``)."""
    if t is ONE:
        return ONE
    return Monomial.from_code(bytes(z if b else 0 for b in t.code))


def graft_onto_leaves(t: Monomial, pieces) -> Monomial:
    """``t(s_1, ..., s_n)``: substitute ``s_i`` at the ``i``-th leaf of ``t``."""
    pieces = list(pieces)
    if len(pieces) != t.degree:
        raise ValueError(f"expected {t.degree} subtrees, got {len(pieces)}")
    it = iter(pieces)
    return Monomial.from_code(b"".join(next(it).code if b else b"\x00" for b in t.code))


def binomial(n: int, k: int) -> int:
    return comb(n, k) if 0 <= k <= n else 0


VARIABLE_NAMES = {1: "x", 2: "y"}


def variable_name(i: int) -> str:
    return VARIABLE_NAMES.get(i, f"x{i}")


def format_monomial(t: Monomial | Unit) -> str:
    """S-expression text: ``x``, ``(x y)``, ``((x x) x)``; the unit prints as ``1``."""
    if t is ONE:
        return "1"
    stack = []
    # build bottom-up from the reversed preorder code
    for b in reversed(t.code):
        if b:
            stack.append(variable_name(b))
        else:
            left = stack.pop()
            right = stack.pop()
            stack.append(f"({left} {right})")
    return stack[0]
