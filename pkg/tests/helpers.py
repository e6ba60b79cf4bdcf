"""Shared constants and small utilities for the test suite."""

import random
from fractions import Fraction

from gradedlie import AlgebraSpec, Polynomial, parse_poly
from gradedlie.algebras import elements_in_window

WITT = AlgebraSpec("Witt")
WITT_POS = AlgebraSpec("WittPositive")
W1 = AlgebraSpec("CartanW1")
VIR = AlgebraSpec("Virasoro")
W2 = AlgebraSpec("CartanW", 2)
W3 = AlgebraSpec("CartanW", 3)
W4 = AlgebraSpec("CartanW", 4)
S2 = AlgebraSpec("SpecialS", 2)
S3 = AlgebraSpec("SpecialS", 3)
S4 = AlgebraSpec("SpecialS", 4)
H2 = AlgebraSpec("HamiltonianH", 2)
H4 = AlgebraSpec("HamiltonianH", 4)
K3 = AlgebraSpec("ContactK", 3)
SL2 = AlgebraSpec("LoopSl2")
EXD = AlgebraSpec("ExampleD")

ALL_ALGEBRAS = (WITT, WITT_POS, W1, VIR, W2, S2, H2, K3, SL2, EXD)

# A degree window per algebra inside which components are small enough
# for exhaustive enumeration.
WINDOWS = {
    WITT: (-4, 6),
    WITT_POS: (1, 6),
    W1: (-1, 6),
    VIR: (-4, 6),
    W2: (-1, 4),
    W3: (-1, 3),
    W4: (-1, 2),
    S2: (-1, 4),
    S3: (-1, 3),
    S4: (-1, 2),
    H2: (-1, 4),
    H4: (-1, 2),
    K3: (-2, 4),
    SL2: (-4, 6),
    EXD: (1, 6),
}


def P(alg, s):
    """Parse a polynomial over the given algebra."""
    return parse_poly(alg, s)


def window_basis(alg, window=None):
    lo, hi = window if window is not None else WINDOWS[alg]
    return list(elements_in_window(alg, lo, hi))


def random_fraction(rng):
    num = rng.choice([n for n in range(-9, 10) if n != 0])
    return Fraction(num, rng.randint(1, 9))


def random_poly(alg, rng, pool=None, max_support=5, max_exp=3, max_vars=3):
    """Random nonzero polynomial with small support over a basis pool."""
    if pool is None:
        pool = window_basis(alg)
    out = Polynomial.zero(alg)
    for _ in range(rng.randint(1, max_support)):
        term = Polynomial.const(alg, random_fraction(rng))
        for b in rng.sample(pool, rng.randint(1, min(max_vars, len(pool)))):
            term = term * Polynomial.var(alg, b, exp=rng.randint(1, max_exp))
        out = out + term
    if out.is_zero():
        out = Polynomial.var(alg, rng.choice(pool))
    return out
