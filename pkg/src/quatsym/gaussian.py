"""Arithmetic in Z[i]: division, gcd, prime splitting, residue symbols.

Z[i] is Euclidean for the norm re**2 + im**2, so everything reduces to the
rounding division implemented by ``divmod``.  Primes are kept in a canonical
associate form (re > 0, im >= 0) so factorizations and ramified-place lists
are deterministic and conjugate pairs are visually obvious (5+2i vs 2+5i).
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass
from functools import lru_cache

from . import rational


@dataclass(frozen=True)
class GaussianInt:
    """a + bi with integer coordinates.

    Arithmetic never checks magnitudes (intermediates may grow); the public
    entry points that would become unreasonable on huge inputs (parsing,
    factoring, residue symbols) enforce the 2**63 component bound.
    """

    re: int = 0
    im: int = 0

    # -- ring operations ----------------------------------------------------
    def __add__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __mul__(self, other: "GaussianInt") -> "GaussianInt":
        return GaussianInt(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    def __neg__(self) -> "GaussianInt":
        return GaussianInt(-self.re, -self.im)

    def conjugate(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    def __divmod__(self, other: "GaussianInt") -> tuple["GaussianInt", "GaussianInt"]:
        """Euclidean division: a = q*b + r with norm(r) <= norm(b)/2.

        The quotient rounds each coordinate of a/b to the nearest integer
        (ties toward +inf), which is what makes Z[i] Euclidean.
        """
        if other.is_zero():
            raise ZeroDivisionError("division by zero in Z[i]")
        nb = other.norm()
        prod = self * other.conjugate()
        q = GaussianInt(
            (2 * prod.re + nb) // (2 * nb),
            (2 * prod.im + nb) // (2 * nb),
        )
        return q, self - q * other

    def __floordiv__(self, other: "GaussianInt") -> "GaussianInt":
        return divmod(self, other)[0]

    def __mod__(self, other: "GaussianInt") -> "GaussianInt":
        return divmod(self, other)[1]

    def divides(self, other: "GaussianInt") -> bool:
        return (other % self).is_zero()

    def __str__(self) -> str:
        return format_gaussian(self)

    def __repr__(self) -> str:
        return f"GaussianInt({self.re}, {self.im})"


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, -ONE, -I)


def norm(z: GaussianInt) -> int:
    return z.norm()


def format_gaussian(z: GaussianInt) -> str:
    """Compact a+bi form with no spaces: 3, -2+5i, 5-2i, i, -2i."""
    if z.im == 0:
        return str(z.re)
    imag = {1: "i", -1: "-i"}.get(z.im, f"{z.im}i")
    if z.re == 0:
        return imag
    sign = "+" if z.im > 0 else "-"
    mag = abs(z.im)
    return f"{z.re}{sign}{'i' if mag == 1 else f'{mag}i'}"


_GAUSSIAN_RE = _re.compile(
    r"^\s*(?P<re>[+-]?\d+)?\s*(?P<im>[+-]?\d*)\s*(?P<unit>i)?\s*$"
)


def parse_gaussian(text: str) -> GaussianInt:
    """Parse the a+bi grammar produced by format_gaussian."""
    m = _GAUSSIAN_RE.match(text)
    if not m or (m.group("re") is None and m.group("unit") is None):
        raise ValueError(f"not a Gaussian integer: {text!r}")
    for g in ("re", "im"):
        if m.group(g) and m.group(g) not in ("+", "-"):
            rational.check_magnitude(int(m.group(g)))
    if m.group("unit") is None:
        if m.group("im"):
            raise ValueError(f"not a Gaussian integer: {text!r}")
        return GaussianInt(int(m.group("re")), 0)
    imtext = m.group("im")
    if m.group("re") is not None and imtext == "":
        # "7i" tokenizes with re=7: the digits belong to the imaginary part
        return GaussianInt(0, int(m.group("re")))
    re_part = int(m.group("re")) if m.group("re") is not None else 0
    if imtext in ("", "+"):
        im_part = 1
    elif imtext == "-":
        im_part = -1
    else:
        im_part = int(imtext)
    return GaussianInt(re_part, im_part)


def normalize_associate(z: GaussianInt) -> GaussianInt:
    """The unique associate (times 1, i, -1, -i) with re > 0 and im >= 0."""
    if z.is_zero():
        raise ValueError("zero has no canonical associate")
    for u in UNITS:
        w = z * u
        if w.re > 0 and w.im >= 0:
            return w
    raise AssertionError("unreachable")  # pragma: no cover


def gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """Greatest common divisor, returned as the canonical associate."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, a % b
    return normalize_associate(a)


@dataclass(frozen=True)
class GaussianPrime:
    """A canonical Gaussian prime together with its splitting data."""

    element: GaussianInt
    residue_char: int
    kind: str  # "split" | "inert" | "ramified"
    residue_degree: int

    def sort_key(self) -> tuple[int, int, int]:
        return (self.residue_char, self.element.re, self.element.im)

    def __str__(self) -> str:
        return format_gaussian(self.element)


@lru_cache(maxsize=8192)
def split_prime(p: int) -> tuple[tuple[GaussianPrime, int], ...]:
    """How the rational prime p decomposes in Z[i].

    Returns ((prime, ramification_exponent), ...): 2 is ramified as (1+i)**2,
    p = 3 (mod 4) stays inert, p = 1 (mod 4) splits into a conjugate pair
    found from a square root of -1 via gcd(p, r + i).
    """
    if not rational.is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return ((GaussianPrime(GaussianInt(1, 1), 2, "ramified", 1), 2),)
    if p % 4 == 3:
        return ((GaussianPrime(GaussianInt(p, 0), p, "inert", 2), 1),)
    r = rational.sqrt_mod(-1, p)
    assert r is not None
    pi = gcd(GaussianInt(p, 0), GaussianInt(r, 1))
    pibar = normalize_associate(pi.conjugate())
    pair = sorted(
        (
            GaussianPrime(pi, p, "split", 1),
            GaussianPrime(pibar, p, "split", 1),
        ),
        key=GaussianPrime.sort_key,
    )
    return tuple((g, 1) for g in pair)


def factor_gaussian(z: GaussianInt) -> tuple[GaussianInt, tuple[tuple[GaussianPrime, int], ...]]:
    """Factor z as unit * product(pi**e), primes sorted by (char, re, im).

    Works through the factorization of norm(z), so inputs with norms above
    2**63 are rejected by the integer layer.
    """
    if z.is_zero():
        raise ValueError("cannot factor 0")
    out: list[tuple[GaussianPrime, int]] = []
    rest = z
    for p, _ in rational.factor(z.norm()).factors:
        for gp, _ in split_prime(p):
            e = 0
            while gp.element.divides(rest):
                rest = rest // gp.element
                e += 1
            if e:
                out.append((gp, e))
    assert rest.is_unit()
    out.sort(key=lambda ge: ge[0].sort_key())
    return rest, tuple(out)


def _i_image(pi: GaussianPrime) -> int:
    """The rational residue of i modulo a split prime: i = -re/im (mod p)."""
    p = pi.residue_char
    return (-pi.element.re * pow(pi.element.im, -1, p)) % p


def gaussian_legendre(a: GaussianInt, pi: GaussianPrime) -> int:
    """Quadratic residue symbol [a / pi] in {-1, 0, +1}.

    Euler criterion in the residue field of pi: a^((N(pi)-1)/2).  Split
    primes reduce to a rational Legendre symbol through the residue map
    i -> -re/im (mod p); inert primes have residue field F_{p**2}, where any
    rational unit is automatically a square.
    """
    if pi.kind == "ramified":
        raise ValueError("no quadratic residue symbol at the even prime 1+i")
    p = pi.residue_char
    if pi.kind == "split":
        r = _i_image(pi)
        return rational.legendre((a.re + a.im * r) % p, p)
    x, y = a.re % p, a.im % p
    if x == 0 and y == 0:
        return 0
    if y == 0:
        return 1  # rational unit: (p**2 - 1)/2 is a multiple of p - 1
    # genuine F_{p**2} element: square-and-multiply with mod-p components
    result = (1, 0)
    base = (x, y)
    e = (p * p - 1) // 2
    while e:
        if e & 1:
            result = (
                (result[0] * base[0] - result[1] * base[1]) % p,
                (result[0] * base[1] + result[1] * base[0]) % p,
            )
        base = (
            (base[0] * base[0] - base[1] * base[1]) % p,
            (2 * base[0] * base[1]) % p,
        )
        e >>= 1
    assert result[1] == 0, "Euler criterion must land in the prime field"
    return 1 if result[0] == 1 else -1
