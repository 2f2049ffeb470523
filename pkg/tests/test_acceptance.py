"""Acceptance criteria, one test each, exact rational comparisons throughout.

Every test prints a single ``criterion N: PASS|FAIL`` line.  Run with
``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import random
import sys
from fractions import Fraction
from math import comb, factorial

import pytest

from oracles import coassoc_sides, delta_homomorphism
from magmahopf import _linalg
from magmahopf.algebra import Poly, mul
from magmahopf.assoc import assoc_bch, word_str
from magmahopf.calculus import derive, derive_n, lmul, taylor1, taylor_total
from magmahopf.constants import (delta_z, dim_constants, free_generators, gamma_n, omega_n,
                                 primitive_generators, z)
from magmahopf.hausdorff import foliage_sums, hausdorff_component, star
from magmahopf.hopf import (antipode, associator, commutator, delta, delta_s, is_primitive,
                            substitute)
from magmahopf.magma import catalan, enumerate_monomials, graft, leaf, mu, mu_bruteforce, power
from magmahopf.parsing import parse

X, Y = Poly.var(1), Poly.var(2)
x = leaf(1)


_capture = {}


@pytest.fixture(autouse=True)
def _uncaptured(capsys):
    _capture["capsys"] = capsys
    yield


def report(n, ok, detail=""):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'}" + (f"  ({detail})" if detail else "")
    with _capture["capsys"].disabled():
        print("\n" + line)
    assert ok, line


def test_criterion_01_low_components():
    ok = hausdorff_component(1) == X + Y
    ok &= hausdorff_component(2) == (mul(X, Y) - mul(Y, X)).scale(Fraction(1, 2))
    report(1, ok, "H1 = x + y, H2 = (xy - yx)/2")


def stated_h3() -> Poly:
    """The explicit bracket form of H_3, expanded on monomials."""
    sym = lambda f: f + star(f)  # noqa: E731
    return (sym(commutator(X, commutator(X, Y))).scale(Fraction(1, 12))
            + sym(associator(Y, X, X)).scale(Fraction(1, 12))
            + sym(associator(X, X, Y)).scale(Fraction(5, 12))
            + sym(associator(X, Y, X)).scale(Fraction(1, 4)))


def test_criterion_02_explicit_h3():
    h3, stated = hausdorff_component(3), stated_h3()
    diff = h3 - stated
    detail = "recursion H3 == stated formula" if diff == 0 else f"H3 - stated = {diff}"
    report(2, diff == 0, detail)


def test_criterion_03_primitive_components():
    bad = [n for n in range(1, 8) if not is_primitive(hausdorff_component(n))]
    report(3, not bad, "H1..H7 primitive" if not bad else f"not primitive: {bad}")


def test_criterion_04_star_invariance():
    bad = [n for n in range(1, 7) if star(hausdorff_component(n)) != hausdorff_component(n)]
    report(4, not bad, "H_n* = H_n for n <= 6" if not bad else f"fails at {bad}")


def test_criterion_05_foliage_sums():
    classical = assoc_bch(6)
    bad = []
    for n in range(1, 7):
        sums = foliage_sums(n)
        for w in set(sums) | set(classical.component(n)):
            if sums.get(w, 0) != classical[w]:
                bad.append(word_str(w))
    report(5, not bad, "all words of length <= 6" if not bad else f"mismatch on {bad[:5]}")


def test_criterion_06_antipode_values():
    ok = antipode(X) == -X
    ok &= antipode(parse("x*x")) == parse("x*x")
    ok &= antipode(parse("x*x^2")) == parse("2*(x*x^2) - 3*(x^2*x)")
    ok &= antipode(parse("x^2*x")) == parse("3*(x*x^2) - 4*(x^2*x)")
    report(6, ok, "sigma on x, x^2, xx^2, x^2x")


def test_criterion_07_dimension_counts():
    ok = all(len(gamma_n(n)) == catalan(n) - catalan(n - 1) for n in range(2, 11))
    ok &= all(len(omega_n(n)) == 3 * (catalan(n - 1) - catalan(n - 2)) for n in range(4, 11))
    ok &= dim_constants(4) == len(gamma_n(4)) == 3 and dim_constants(5) == len(gamma_n(5)) == 9
    report(7, ok, "#Gamma_n, #Omega_n for n <= 10; dim 3 and 9 in degrees 4, 5")


# degree-5 Taylor coefficients as stated: tree -> (a_2 in y_{3,1}, a_1 in y_{4,i})
STATED_DEGREE_FIVE = {
    "x^2*(x^2*x)": (4, {1: 3}),
    "(x^2*x)*x^2": (7, {1: 3, 3: 2}),
    "(x*(x^2*x))*x": (7, {2: 3, 3: 1}),
    "(x^2*x^2)*x": (8, {1: 1, 2: 2, 3: 2}),
    "(x^3*x)*x": (1, {2: 2}),
    "((x^2*x)*x)*x": (10, {3: 5}),
}


def test_criterion_08_taylor_one_variable():
    failures = []
    golden = {
        "x^2*x": "x^2*x - x*x^2",
        "x^2*x^2": "x^2*x^2 - 2*(x*(x^2*x)) + x^4",
        "x^3*x": "x^3*x - 3*(x*(x^2*x)) + 2*x^4",
        "(x^2*x)*x": "(x^2*x)*x - 4*(x*(x^2*x)) + 3*x^4",
    }
    for t, a0 in golden.items():
        if taylor1(parse(t))[0] != parse(a0):
            failures.append(f"a0({t})")
    T = free_generators(4)
    y3 = T.by_name("y_3,1").value
    y4 = {i: T.by_name(f"y_4,{i}").value for i in (1, 2, 3)}
    for t, (c2, c1) in STATED_DEGREE_FIVE.items():
        te = taylor1(parse(t))
        a1 = Poly.zero()
        for i, c in c1.items():
            a1 = a1 + y4[i].scale(c)
        if te[2] != y3.scale(c2) or te[1] != a1:
            failures.append(f"{t}: got a2 = {_coords(te[2], [y3])}*y_3,1, "
                            f"a1 = {_coords(te[1], list(y4.values()))} in y_4,1..3")
    report(8, not failures, "degree 4 and the six degree-5 lists" if not failures
           else "; ".join(failures))


def _coords(p, basis):
    sol = _linalg.solve([b.terms for b in basis], p.terms)
    return [str(c) for c in sol] if sol is not None else "outside span"


def test_criterion_09_taylor_two_variables():
    cases = {
        "y*x": "y*x - x*y",
        "y*(x*y)": "2*(y*(x*y)) - x*y^2 - y*(y*x)",
        "y*(y*(y*x))": "y*(y*(y*x)) - 3*(y*(y*(x*y))) + 3*(y*(x*y^2)) - x*(y*y^2)",
    }
    bad = [t for t, a in cases.items() if taylor_total(parse(t), [1, 2])[(0, 0)] != parse(a)]
    report(9, not bad, "a_(0,0) of yx, y(xy), y(y(yx))" if not bad else f"fails: {bad}")


def test_criterion_10_delta_z():
    bad = []
    for n in range(3, 9):
        for k in range(2, n):
            if delta_z(n, k) != delta(z(n, k)):
                bad.append(f"delta_z({n},{k})")
        for k in {n - 1, 2, 3} & set(range(2, n)):
            if not is_primitive(z(n, k)):
                bad.append(f"z({n},{k}) not primitive")
    report(10, not bad, "closed form == direct Delta, n <= 8" if not bad else ", ".join(bad))


def test_criterion_11_primitivization():
    T = primitive_generators(7)
    y31 = T.by_name("y_3,1").value
    sq = mul(y31, y31)
    t = graft(graft(graft(graft(graft(x, x), x), x), x), x)
    ok = T.by_leading(graft(power(4), power(2))).value == z(6, 4) - sq.scale(6)
    ok &= T.by_leading(t).value == free_generators(6).by_leading(t).value - sq.scale(10)
    ok &= is_primitive(z(6, 4) - sq.scale(6))
    unchanged = [graft(power(5), x), graft(power(3), power(3)), graft(power(2), power(4)),
                 graft(power(3), graft(graft(x, x), x)), graft(graft(graft(x, x), x), power(3))]
    F = free_generators(6)
    for w in unchanged:
        g = T.by_leading(w)
        ok &= not g.correction and g.value == F.by_leading(w).value and is_primitive(g.value)
    ok &= all(g.primitive and is_primitive(g.value) for g in T.of_degree(7))
    report(11, ok, "degree-6 corrections as stated; all degree-7 generators primitive")


def _random_poly(rng, variables=(1, 2), max_degree=5, terms=4):
    pool = [t for n in range(1, max_degree + 1) for t in enumerate_monomials(n, variables)]
    return Poly({rng.choice(pool): Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(terms)})


def test_criterion_12_property_suites():
    rng = random.Random(20261015)
    failures = []
    # Delta: coassociative, cocommutative, multiplicative, equal to the homomorphism route
    for n in range(1, 6):
        for t in enumerate_monomials(n, (1, 2) if n <= 4 else (1,)):
            f = Poly.monomial(t)
            left, right = coassoc_sides(f, delta)
            if left != right or delta(f).swap() != delta(f) or delta(f) != delta_homomorphism(f):
                failures.append(f"Delta at {t}")
    for _ in range(40):
        f, g = _random_poly(rng, max_degree=3), _random_poly(rng, max_degree=2)
        if delta(mul(f, g)) != delta(f) * delta(g):
            failures.append("Delta not multiplicative")
    # D L - L D = id and D^k L - L D^k = k D^(k-1)
    for _ in range(50):
        f = _random_poly(rng)
        for k in range(1, 5):
            if derive_n(lmul(f), 1, k) - lmul(derive_n(f, 1, k)) != derive_n(f, 1, k - 1).scale(k):
                failures.append(f"commutation k={k}")
    # Taylor reconstruction
    for _ in range(200):
        f = _random_poly(rng, max_degree=6)
        te = taylor1(f)
        if te.reconstruct() != f or any(derive(a) for a in te.coeffs.values()):
            failures.append("Taylor reconstruction")
    # sum of Delta_s over M_n = D^n / n!
    for _ in range(20):
        f = _random_poly(rng, max_degree=6)
        for n in range(1, 7):
            total = Poly.zero()
            for s in enumerate_monomials(n):
                total = total + delta_s(f, s)
            if total != derive_n(f, 1, n).scale(Fraction(1, factorial(n))):
                failures.append(f"divided power n={n}")
    # mu recursion against brute-force subset counting, degree <= 7
    for n in range(1, 8):
        for t in enumerate_monomials(n):
            for d in range(1, n + 1):
                for s in enumerate_monomials(d):
                    if mu(s, t) != mu_bruteforce(s, t):
                        failures.append(f"mu({s}, {t})")
    # primitives are closed under commutators, associators and substitution
    prims = [X, Y, parse("x*y - y*x"), parse("x^2*x - x*x^2"), parse("y^2*y - y*y^2")]
    for f in prims:
        for g in prims:
            if f.degree() + g.degree() <= 6 and not is_primitive(commutator(f, g)):
                failures.append("commutator")
            for h in prims:
                if f.degree() + g.degree() + h.degree() <= 6 and not is_primitive(associator(f, g, h)):
                    failures.append("associator")
            if 3 * max(f.degree(), g.degree()) <= 6:
                if not is_primitive(substitute(parse("x^2*x - x*x^2"), [f])):
                    failures.append("substitution")
                if not is_primitive(substitute(parse("(x*y)*x - x*(y*x)"), [f, g])):
                    failures.append("substitution")
    report(12, not failures, "all property suites" if not failures else ", ".join(sorted(set(failures))[:6]))


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-v"]))
