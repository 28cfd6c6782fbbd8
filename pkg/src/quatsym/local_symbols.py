"""Local symbols: Hilbert symbols over Q, Hasse invariants over Q(i), and
tame degree-q norm-residue symbols over cyclotomic fields.

All symbols are computed by the tame formulas on square-free reduced input,
entirely in exact integer arithmetic.  A quadratic symbol value is +1 exactly
when the corresponding quaternion algebra splits locally; a QTriviality is
the analogous statement for a degree-q symbol algebra, together with the
residue witness that proves it.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import rational
from .gaussian import GaussianInt, GaussianPrime, gaussian_legendre, split_prime

# A quadratic local symbol: always -1 or +1.
QuadSymbol = int


@dataclass(frozen=True)
class Place:
    """A place of Q, Q(i) or Q(zeta_q), tagged by kind.

    Serialized forms: "p=3", "p=2", "real", "pi=5+2i", "pi=1+i",
    "ell=7,f=1".
    """

    kind: str
    p: int | None = None
    pi: GaussianPrime | None = None
    ell: int | None = None
    f: int | None = None

    @classmethod
    def q_odd(cls, p: int) -> "Place":
        return cls("q_odd", p=p)

    @classmethod
    def q_two(cls) -> "Place":
        return cls("q_two", p=2)

    @classmethod
    def q_real(cls) -> "Place":
        return cls("q_real")

    @classmethod
    def qi_odd(cls, pi: GaussianPrime) -> "Place":
        return cls("qi_odd", pi=pi)

    @classmethod
    def qi_dyadic(cls) -> "Place":
        return cls("qi_dyadic")

    @classmethod
    def cyclo(cls, ell: int, f: int) -> "Place":
        return cls("cyclo", ell=ell, f=f)

    def sort_key(self) -> tuple[int, ...]:
        if self.kind in ("q_odd", "q_two"):
            return (0, self.p or 0)
        if self.kind == "q_real":
            return (1, 0)
        if self.kind == "qi_odd":
            assert self.pi is not None
            return self.pi.sort_key()
        if self.kind == "qi_dyadic":
            return (2, 1, 1)
        return (self.ell or 0,)

    def __str__(self) -> str:
        if self.kind in ("q_odd", "q_two"):
            return f"p={self.p}"
        if self.kind == "q_real":
            return "real"
        if self.kind == "qi_odd":
            return f"pi={self.pi}"
        if self.kind == "qi_dyadic":
            return "pi=1+i"
        return f"ell={self.ell},f={self.f}"


@dataclass(frozen=True)
class QTriviality:
    """Triviality of a degree-q symbol at the places over one rational prime.

    witness is t**((ell**f - 1)/q) mod ell; the symbol is trivial exactly
    when the witness is 1.
    """

    trivial: bool
    witness: int


def _split_off(n: int, p: int) -> tuple[int, int]:
    """n = p**e * u with p not dividing u; returns (e, u)."""
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e, n


def _check_nonzero(a: int, b: int) -> None:
    rational.check_magnitude(a, b)
    if a == 0 or b == 0:
        raise ValueError("symbol arguments must be nonzero")


def hilbert_odd(a: int, b: int, p: int) -> QuadSymbol:
    """Hilbert symbol (a, b)_p at an odd prime, by the tame formula.

    With a = p**alpha * u and b = p**beta * v reduced square-free:
    (a,b)_p = (-1)^(alpha*beta*(p-1)/2) * (u/p)^beta * (v/p)^alpha.
    """
    _check_nonzero(a, b)
    if p == 2 or not rational.is_prime(p):
        raise ValueError(f"hilbert_odd needs an odd prime, got {p}")
    alpha, u = _split_off(rational.squarefree_part(a), p)
    beta, v = _split_off(rational.squarefree_part(b), p)
    s = 1
    if alpha and beta and p % 4 == 3:
        s = -s
    if beta:
        s *= rational.legendre(u, p)
    if alpha:
        s *= rational.legendre(v, p)
    return s


def hilbert_two(a: int, b: int) -> QuadSymbol:
    """Hilbert symbol (a, b)_2.

    With odd parts u, v: (-1)^(eps(u)eps(v) + alpha*omega(v) + beta*omega(u)),
    where eps(u) = (u-1)/2 and omega(u) = (u^2-1)/8 taken mod 2.
    """
    _check_nonzero(a, b)
    alpha, u = _split_off(rational.squarefree_part(a), 2)
    beta, v = _split_off(rational.squarefree_part(b), 2)
    eps = lambda w: ((w - 1) // 2) % 2
    omega = lambda w: ((w * w - 1) // 8) % 2
    exponent = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u)
    return -1 if exponent % 2 else 1


def hilbert_real(a: int, b: int) -> QuadSymbol:
    """Hilbert symbol at the real place: -1 only for two negatives."""
    _check_nonzero(a, b)
    return -1 if (a < 0 and b < 0) else 1


def hasse_qi_odd(a: int, b: int, pi: GaussianPrime) -> QuadSymbol:
    """Hasse invariant of (a, b) over Q(i) at an odd Gaussian prime.

    Tame rule: with m = v_pi(a), n = v_pi(b) and the unit
    t = (-1)^(mn) * a^n * b^(-m), the invariant is [t / pi].  For rational
    a, b the inert case is always +1 (rational units are squares in
    F_{p**2}); split primes reduce to a Legendre symbol mod p.
    """
    _check_nonzero(a, b)
    if pi.kind == "ramified":
        raise ValueError("use hasse_qi_dyadic for the place over 2")
    p = pi.residue_char
    m, u = _split_off(rational.squarefree_part(a), p)
    n, v = _split_off(rational.squarefree_part(b), p)
    t = p - 1 if (m * n) % 2 else 1
    if n:
        t = t * (u % p) % p
    if m:
        t = t * pow(v % p, -1, p) % p
    return gaussian_legendre(GaussianInt(t, 0), pi)


def hasse_qi_dyadic(a: int, b: int) -> QuadSymbol:
    """Hasse invariant of (a, b) over Q(i) at the prime 1+i.

    The archimedean place of Q(i) is complex, so the product formula pins
    the dyadic invariant as the product of the odd-place invariants; only
    odd primes dividing a*b can contribute.
    """
    _check_nonzero(a, b)
    product = 1
    ab = rational.squarefree_part(a) * rational.squarefree_part(b)
    for p in rational.factor(ab).primes():
        if p == 2:
            continue
        for gp, _ in split_prime(p):
            product *= hasse_qi_odd(a, b, gp)
    return product


def tame_q_symbol(alpha: int, p: int, q: int, ell: int) -> QTriviality:
    """Triviality of the degree-q symbol (alpha, p) at the primes over ell.

    ell != q is unramified in Q(zeta_q) with residue degree
    f = ord(ell mod q), so the residue field is F_{ell**f} and the symbol is
    trivial iff the tame unit t = (-1)^(mn) * alpha^n * p^(-m) is a q-th
    power there, i.e. iff t^((ell**f - 1)/q) = 1.  Rational t lives in the
    prime field, so the exponent reduces mod ell - 1 and the witness is an
    ordinary residue mod ell.  One computation decides every prime of
    Q(zeta_q) over ell at once: rational data is Galois-invariant.
    """
    rational.check_magnitude(alpha, p, q, ell)
    if alpha == 0:
        raise ValueError("alpha must be nonzero")
    if q == 2 or not rational.is_prime(q):
        raise ValueError(f"degree must be an odd prime, got {q}")
    if not rational.is_prime(p) or not rational.is_prime(ell):
        raise ValueError("p and ell must be prime")
    if ell == q:
        raise ValueError("the place over q is wild; only tame places are computed")
    if alpha % q == 0:
        raise ValueError(f"{q} divides alpha: the symbol is not tame at q")
    if alpha % p == 0:
        raise ValueError("alpha and p must be coprime")
    f = rational.multiplicative_order(ell, q)
    m, u = _split_off(alpha, ell)
    n = 1 if ell == p else 0
    v = 1 if ell == p else p
    # (ell**f - 1)/q mod (ell - 1), without forming ell**f
    modulus = q * (ell - 1) if ell > 2 else q
    e = ((pow(ell, f, modulus) - 1) % modulus) // q
    if ell > 2:
        e %= ell - 1
    t = ell - 1 if (m * n) % 2 else 1
    if n:
        t = t * (u % ell) % ell
    if m:
        t = t * pow(v % ell, -1, ell) % ell
    witness = pow(t, e, ell)
    return QTriviality(witness == 1, witness)
