"""Independent brute-force oracle for frozen test values.

Tables are built by enumerating monomials directly (no Groebner machinery,
no inclusion-exclusion); closed forms are evaluated with mpmath.
Run: python3 tests/oracles/derive_expected.py
"""
import cmath
import itertools
from fractions import Fraction

import mpmath as mp


def monomial_table(gens, weights, box):
    counts = {}
    for e in itertools.product(*[range(b) for b in box]):
        if any(all(e[i] >= g[i] for i in range(len(e))) for g in gens):
            continue
        d = sum(a * w for a, w in zip(e, weights))
        counts[d] = counts.get(d, 0) + 1
    return counts


def plane(q):
    return monomial_table([(q, 0), (0, q)], (1, 1), (q, q))


def xxy(q):
    return monomial_table([(2 * q, 0), (q, q), (0, 3 * q)], (1, 1), (2 * q, 3 * q))


def cusp(q):
    # k[X,Y]/(Y^2-X^3), weights (2,3), I=(X): basis X^a Y^b, a<q, b<2
    counts = {}
    for a in range(q):
        for b in range(2):
            d = 2 * a + 3 * b
            counts[d] = counts.get(d, 0) + 1
    return counts


def fn(table, q, d, y):
    return sum(c * cmath.exp(-1j * y * j / q) for j, c in table.items()) / q**d


def phi(y, a=1.0):
    return (1 - cmath.exp(-1j * a * y)) / (1j * y)


def limit_protocol(tablefn, p, d, y, nmax):
    vals = [fn(tablefn(p**m), p**m, d, y) for m in range(nmax + 1)]
    D = max(p**m * abs(vals[m + 1] - vals[m]) for m in range(nmax))
    return vals[-1], D * p ** (-nmax) * p / (p - 1)


if __name__ == "__main__":
    print("plane n=1 table", sorted(plane(2).items()))
    print("xxy n=1 total", sum(xxy(2).values()))
    print("cusp n=1 table", sorted(cusp(2).items()))
    y = 1.0
    v = fn(plane(2), 2, 2, y)
    print("F_1 plane y=1", repr(v.real), repr(v.imag))
    for name, tf, d, model in [
        ("plane", plane, 2, lambda y: phi(y) ** 2),
        ("xxy", xxy, 2, lambda y: phi(y, 2.0) ** 2),
        ("cusp", cusp, 1, lambda y: phi(y, 2.0)),
    ]:
        for yy in [0.5, 1.0, 2.0, 4.0]:
            val, bound = limit_protocol(tf, 2, d, yy, 10)
            dev = abs(val - model(yy))
            print(f"{name} y={yy} dev={dev:.3e} bound={bound:.3e} ok={dev <= bound + 1e-6}")
    # (1-t^6)/((1-t^2)(1-t^3)) at 0.5
    z = 0.5
    print("cusp series at 0.5", repr((1 - z**6) / ((1 - z**2) * (1 - z**3))))
    # tent moment: plane m=1 at n=10
    q = 1024
    t = plane(q)
    m1 = sum(j * c for j, c in t.items())
    print("plane moment1/q^3 n=10", Fraction(m1, q**3), float(Fraction(m1, q**3)))
    # density quadrature n=1, y=1
    q = 2
    t = plane(q)
    quad = sum((c / q) * (cmath.exp(-1j * (j + 1) / q) - cmath.exp(-1j * j / q)) / (-1j) for j, c in t.items())
    print("quadrature g1 y=1", repr(quad.real), repr(quad.imag))
