"""Shared generators for the local-symbol property suites.

Each suite_* function draws `n` seeded random instances, checks one
identity exactly, and returns a list of human-readable failure strings
(empty = suite passed).  Used by both the unit tests and the acceptance
gate, so the two always agree on what was checked.
"""
import random

import numpy as np

from quatsym.local_symbols import hilbert_odd, hilbert_real, hilbert_two
from quatsym.rational import factor, squarefree_part

SMALL_ODD_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43)
PLACES = SMALL_ODD_PRIMES + (2, "real")

_RANGE = 10**5


def hilbert_at(a, b, place):
    if place == "real":
        return hilbert_real(a, b)
    if place == 2:
        return hilbert_two(a, b)
    return hilbert_odd(a, b, place)


def places_of(a, b):
    """2, every odd prime of the square-free parts, and the real place."""
    out = [2]
    out += [p for p in factor(squarefree_part(a) * squarefree_part(b)).primes() if p != 2]
    out.append("real")
    return out


def _nonzero(rng, lo=-_RANGE, hi=_RANGE):
    while True:
        n = rng.randint(lo, hi)
        if n != 0:
            return n


def _collect(n, check):
    failures = []
    for i in range(n):
        f = check(i)
        if f is not None:
            failures.append(f)
            if len(failures) >= 5:
                failures.append("... (stopping after 5)")
                break
    return failures


def suite_symmetry(n=1000, seed=0x51):
    rng = random.Random(seed)

    def check(_):
        a, b = _nonzero(rng), _nonzero(rng)
        place = rng.choice(PLACES)
        if hilbert_at(a, b, place) != hilbert_at(b, a, place):
            return f"symmetry fails: ({a},{b}) at {place}"

    return _collect(n, check)


def suite_bimultiplicative(n=1000, seed=0x52):
    rng = random.Random(seed)

    def check(_):
        a1, a2, b = _nonzero(rng), _nonzero(rng), _nonzero(rng)
        place = rng.choice(PLACES)
        lhs = hilbert_at(a1 * a2, b, place)
        rhs = hilbert_at(a1, b, place) * hilbert_at(a2, b, place)
        if lhs != rhs:
            return f"bimultiplicativity fails: ({a1}*{a2},{b}) at {place}"

    return _collect(n, check)


def suite_square_class(n=1000, seed=0x53):
    rng = random.Random(seed)

    def check(_):
        a, b = _nonzero(rng), _nonzero(rng)
        c = _nonzero(rng, -300, 300)
        place = rng.choice(PLACES)
        if hilbert_at(a * c * c, b, place) != hilbert_at(a, b, place):
            return f"square-class invariance fails: ({a}*{c}^2,{b}) at {place}"

    return _collect(n, check)


def suite_hilbert_identities(n=1000, seed=0x54):
    rng = random.Random(seed)

    def check(_):
        a = _nonzero(rng)
        for place in places_of(a, -a):
            if hilbert_at(a, -a, place) != 1:
                return f"(a,-a) fails: a={a} at {place}"
        if a != 1:
            for place in places_of(a, 1 - a):
                if hilbert_at(a, 1 - a, place) != 1:
                    return f"(a,1-a) fails: a={a} at {place}"

    return _collect(n, check)


def suite_product_formula(n=1000, seed=0x55):
    rng = random.Random(seed)

    def check(_):
        a, b = _nonzero(rng), _nonzero(rng)
        prod = 1
        for place in places_of(a, b):
            prod *= hilbert_at(a, b, place)
        if prod != 1:
            return f"product formula fails: ({a},{b})"

    return _collect(n, check)


# --- solvability of a*x^2 + b*y^2 = z^2 modulo p^3, primitive solutions ---

_P3_CACHE = {}


def _p3_tables(p):
    if p not in _P3_CACHE:
        p3 = p**3
        w = np.arange(p3, dtype=np.int64)
        squares = np.zeros(p3, dtype=bool)
        squares[(w * w) % p3] = True
        y_sq = (w * w) % p3
        k = np.arange(p * p, dtype=np.int64)
        pk_sq = (k * k * (p * p)) % p3
        _P3_CACHE[p] = (p3, squares, y_sq, pk_sq)
    return _P3_CACHE[p]


def mod_p3_solvable(a, b, p):
    """Primitive solvability of a*x^2 + b*y^2 = z^2 mod p^3 (odd p).

    Any primitive solution has x or y a unit (z alone being a unit is
    impossible), so scaling reduces to x = 1 (y free) or y = 1, x = p*k.
    """
    p3, squares, y_sq, pk_sq = _p3_tables(p)
    a, b = a % p3, b % p3
    quick = y_sq[: min(1024, p3)]
    if squares[(a + b * quick) % p3].any():
        return True
    if squares[(a + b * y_sq) % p3].any():
        return True
    return bool(squares[(a * pk_sq + b) % p3].any())
