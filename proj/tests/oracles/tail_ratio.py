"""Tail ratio P(X > mu + s) / (1 - Phi(1)) for inversions on A_N, exact counts.

Prints N, literal ratio, and the ratio for X + U with U ~ U(-1/2, 1/2).
Requires mpmath.
"""
from fractions import Fraction

from mpmath import erfc, floor, mp, mpf, sqrt

mp.dps = 40


def mahonian(n):
    c = [1]
    for d in range(2, n + 2):
        out = [0] * (len(c) + d - 1)
        run = 0
        for k in range(len(out)):
            if k < len(c):
                run += c[k]
            if k - d >= 0:
                run -= c[k - d]
            out[k] = run
        c = out
    return c


for n in (100, 200, 500):
    c = mahonian(n)
    total = sum(c)
    degs = range(2, n + 2)
    mu = Fraction(sum(d - 1 for d in degs), 2)
    var = Fraction(sum(d * d - 1 for d in degs), 12)
    s = sqrt(mpf(var.numerator) / var.denominator)
    t = mpf(mu.numerator) / mu.denominator + s
    k = int(floor(t))
    tail = mpf(sum(c[k + 1:])) / total
    normal_tail = erfc(1 / sqrt(2)) / 2
    frac = t - k
    if frac <= 0.5:
        smooth = tail + mpf(c[k]) / total * (mpf(0.5) - frac)
    else:
        smooth = tail - mpf(c[k + 1]) / total * (frac - mpf(0.5))
    print(n, mp.nstr(tail / normal_tail, 17), mp.nstr(smooth / normal_tail, 17))
