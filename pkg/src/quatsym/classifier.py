"""Global split/division verdicts from local symbols.

A quaternion algebra presented by a pair (a, b) over Q or Q(i), or a
degree-q symbol algebra presented by (alpha, p) over the q-th cyclotomic
field, splits exactly when every local symbol is trivial.  The classifiers
compute all (finitely many) possibly-nontrivial local symbols, report the
ramified places, and attach a fast-path tag when one of the implemented
sufficient criteria already decides the verdict.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Union

from . import rational
from .gaussian import split_prime
from .local_symbols import (
    Place,
    hasse_qi_dyadic,
    hasse_qi_odd,
    hilbert_odd,
    hilbert_real,
    hilbert_two,
    tame_q_symbol,
)

SPLIT = "Split"
DIVISION = "Division"
UNDETERMINED = "Undetermined"

# Fast-path tags, named for the sufficient condition they implement.
FP_QI_NONRESIDUE_DIVISION = "qi-nonresidue-division"
FP_QI_RESIDUE_SPLIT = "qi-residue-split"
FP_QI_CLASS_NUMBER_ONE_SPLIT = "qi-class-number-one-split"
FP_Q_ALL_DIVISORS_RESIDUES_SPLIT = "q-all-divisors-residues-split"
FP_CYCLO_NONRESIDUE_DIVISION = "cyclotomic-nonresidue-division"

_ZERO_MSG = "parameters must be nonzero"


@dataclass(frozen=True)
class QuaternionQ:
    """Quaternion algebra over Q presented by the pair (a, b)."""

    a: int
    b: int

    def __post_init__(self) -> None:
        rational.check_magnitude(self.a, self.b)
        if self.a == 0 or self.b == 0:
            raise ValueError(_ZERO_MSG)


@dataclass(frozen=True)
class QuaternionQi:
    """Quaternion algebra over Q(i) presented by a rational pair (a, b)."""

    a: int
    b: int

    def __post_init__(self) -> None:
        rational.check_magnitude(self.a, self.b)
        if self.a == 0 or self.b == 0:
            raise ValueError(_ZERO_MSG)


@dataclass(frozen=True)
class SymbolAlgebra:
    """Degree-q symbol algebra over the q-th cyclotomic field.

    q must be an odd prime and alpha nonzero; softer preconditions
    (p prime, p != q, gcd(alpha, p) = 1, q not dividing alpha) are checked
    by the classifier, which reports violations as Undetermined verdicts
    rather than exceptions.
    """

    q: int
    alpha: int
    p: int

    def __post_init__(self) -> None:
        rational.check_magnitude(self.q, self.alpha, self.p)
        if self.alpha == 0:
            raise ValueError(_ZERO_MSG)
        if self.q == 2 or self.q < 2 or not rational.is_prime(self.q):
            raise ValueError(f"degree must be an odd prime, got {self.q}")


AlgebraSpec = Union[QuaternionQ, QuaternionQi, SymbolAlgebra]


@dataclass(frozen=True)
class Verdict:
    """Classification result.

    ramified lists the places with nontrivial symbol, sorted; Split means
    the list is empty.  For symbol algebras only the tame places are
    listed (the wild place over q is never computed directly).
    discriminant is reported over Q only: the product of the finite
    ramified primes, 1 for a split algebra.  fast_path names the
    sufficient criterion that decided the verdict, when one applied.
    certificate carries the reduced parameters and every computed symbol.
    """

    status: str
    ramified: tuple[Place, ...] = ()
    discriminant: int | None = None
    fast_path: str | None = None
    certificate: dict | None = None


def brown_parry_alpha_set() -> tuple[int, ...]:
    """The 22 values d with Q(i, sqrt(d)) of class number one."""
    magnitudes = (2, 3, 5, 7, 11, 13, 19, 37, 43, 67, 163)
    return tuple(sorted([m for m in magnitudes] + [-m for m in magnitudes]))


def _is_prime(n: int) -> bool:
    return n >= 2 and rational.is_prime(n)


def _odd_prime_divisors(n: int) -> list[int]:
    return [p for p in rational.factor(n).primes() if p != 2]


def _classify_q_full(a: int, b: int) -> Verdict:
    a_sf = rational.squarefree_part(a)
    b_sf = rational.squarefree_part(b)
    symbols: list[tuple[Place, int]] = [(Place.q_two(), hilbert_two(a, b))]
    for p in _odd_prime_divisors(a_sf * b_sf):
        symbols.append((Place.q_odd(p), hilbert_odd(a, b, p)))
    symbols.sort(key=lambda ps: ps[0].sort_key())
    symbols.append((Place.q_real(), hilbert_real(a, b)))
    ramified = tuple(pl for pl, s in symbols if s == -1)
    disc = 1
    for pl in ramified:
        if pl.kind != "q_real":
            disc *= pl.p or 1
    status = SPLIT if not ramified else DIVISION
    certificate = {
        "reduced": [a_sf, b_sf],
        "symbols": {str(pl): s for pl, s in symbols},
    }
    return Verdict(status, ramified, disc, None, certificate)


def _classify_qi_full(a: int, b: int) -> Verdict:
    a_sf = rational.squarefree_part(a)
    b_sf = rational.squarefree_part(b)
    symbols: list[tuple[Place, int]] = [(Place.qi_dyadic(), hasse_qi_dyadic(a, b))]
    for p in _odd_prime_divisors(a_sf * b_sf):
        for gp, _ in split_prime(p):
            symbols.append((Place.qi_odd(gp), hasse_qi_odd(a, b, gp)))
    symbols.sort(key=lambda ps: ps[0].sort_key())
    ramified = tuple(pl for pl, s in symbols if s == -1)
    status = SPLIT if not ramified else DIVISION
    certificate = {
        "reduced": [a_sf, b_sf],
        "symbols": {str(pl): s for pl, s in symbols},
    }
    return Verdict(status, ramified, None, None, certificate)


def _classify_symbol_full(q: int, alpha: int, p: int) -> Verdict:
    reason = None
    if p < 2 or not rational.is_prime(p):
        reason = f"p = {p} is not prime"
    elif p == q:
        reason = f"p = q = {q}: the place over q is wild and is not computed"
    elif alpha % p == 0:
        reason = f"p = {p} divides alpha = {alpha}"
    elif alpha % q == 0:
        reason = f"q = {q} divides alpha = {alpha}"
    if reason is not None:
        return Verdict(UNDETERMINED, (), None, None, {"reason": reason})

    # alpha matters only up to q-th powers (and -1 is a q-th power).
    reduced = 1
    for prime, exp in rational.factor(alpha).factors:
        reduced *= prime ** (exp % q)
    candidates = sorted({p} | set(rational.factor(reduced).primes() if reduced > 1 else []))
    witnesses: dict[str, int] = {}
    ramified = []
    for ell in candidates:
        tri = tame_q_symbol(reduced, p, q, ell)
        place = Place.cyclo(ell, rational.multiplicative_order(ell, q))
        witnesses[str(place)] = tri.witness
        if not tri.trivial:
            ramified.append(place)
    ramified.sort(key=lambda pl: pl.sort_key())
    status = SPLIT if not ramified else DIVISION
    certificate = {"reduced_alpha": reduced, "witnesses": witnesses}
    return Verdict(status, tuple(ramified), None, None, certificate)


def _full(spec: AlgebraSpec) -> Verdict:
    if isinstance(spec, QuaternionQ):
        return _classify_q_full(spec.a, spec.b)
    if isinstance(spec, QuaternionQi):
        return _classify_qi_full(spec.a, spec.b)
    return _classify_symbol_full(spec.q, spec.alpha, spec.p)


def _fast_path_rule(spec: AlgebraSpec) -> tuple[str, str] | None:
    """The first applicable sufficient criterion: (tag, predicted status).

    Each rule is restricted to a subdomain on which it is actually sound;
    a spec outside every subdomain simply gets no tag.
    """
    if isinstance(spec, QuaternionQi):
        a, p = spec.a, spec.b
        if not (_is_prime(p) and p % 2 == 1):
            return None
        if p % 4 == 1:
            sym = rational.legendre(a, p)
            if sym == -1:
                # a is a non-residue mod a split p: the places over p ramify.
                return (FP_QI_NONRESIDUE_DIVISION, DIVISION)
            if sym == 1:
                # a is a residue mod a split p: the places over p are clean,
                # so split holds provided no split prime of a obstructs.
                if all(
                    rational.legendre(p, ell) == 1
                    for ell in _odd_prime_divisors(rational.squarefree_part(a))
                    if ell % 4 == 1
                ):
                    return (FP_QI_RESIDUE_SPLIT, SPLIT)
        if (
            a in brown_parry_alpha_set()
            and rational.legendre(a, p) == 1
            and not (a in (-5, -13, -37) and p % 4 == 3)
        ):
            # Class-number-one pairs: every prime of a is either even,
            # inert, or forced clean by reciprocity.  The excluded corner
            # (negative split discriminant, p = 3 mod 4) always ramifies
            # at the primes over |a|.
            return (FP_QI_CLASS_NUMBER_ONE_SPLIT, SPLIT)
        return None
    if isinstance(spec, QuaternionQ):
        a, p = spec.a, spec.b
        if (
            _is_prime(p)
            and p % 4 == 1
            and all(rational.legendre(ell, p) == 1 for ell in rational.factor(a).primes())
        ):
            return (FP_Q_ALL_DIVISORS_RESIDUES_SPLIT, SPLIT)
        return None
    q, alpha, p = spec.q, spec.alpha, spec.p
    if (
        _is_prime(p)
        and p != q
        and p % q == 1
        and alpha % p != 0
        and alpha % q != 0
        and not rational.qth_power_residue(alpha, p, q)
    ):
        # alpha is not a q-th power in the residue field at p, so the
        # tame symbol at p is already nontrivial.
        return (FP_CYCLO_NONRESIDUE_DIVISION, DIVISION)
    return None


def fast_path(spec: AlgebraSpec) -> Verdict | None:
    """Verdict tagged by the first applicable sufficient criterion.

    Returns None when no criterion applies.  The ramified places and
    certificate always come from the full local computation; the criterion
    contributes the status prediction and the tag.
    """
    rule = _fast_path_rule(spec)
    if rule is None:
        return None
    tag, predicted = rule
    verdict = _full(spec)
    if verdict.status != predicted:
        raise AssertionError(
            f"fast path {tag} predicted {predicted} but symbols say {verdict.status}"
        )
    return replace(verdict, fast_path=tag)


def _with_tag(spec: AlgebraSpec, verdict: Verdict) -> Verdict:
    rule = _fast_path_rule(spec)
    if rule is None:
        return verdict
    tag, predicted = rule
    if verdict.status != predicted:
        raise AssertionError(
            f"fast path {tag} predicted {predicted} but symbols say {verdict.status}"
        )
    return replace(verdict, fast_path=tag)


def classify_quaternion_q(a: int, b: int) -> Verdict:
    """Split/division verdict of the pair (a, b) over Q.

    Hilbert symbols are evaluated at 2, at every odd prime dividing the
    square-free parts, and at the real place; all other places are
    automatically trivial.
    """
    spec = QuaternionQ(a, b)
    return _with_tag(spec, _classify_q_full(a, b))


def classify_quaternion_qi(a: int, b: int) -> Verdict:
    """Split/division verdict of the rational pair (a, b) over Q(i).

    Hasse invariants are evaluated at every odd Gaussian prime dividing
    a*b and at 1+i (forced by the product formula; the archimedean place
    is complex, hence trivial).
    """
    spec = QuaternionQi(a, b)
    return _with_tag(spec, _classify_qi_full(a, b))


def classify_symbol(q: int, alpha: int, p: int) -> Verdict:
    """Split/division verdict of the degree-q pair (alpha, p) over Q(zeta_q).

    Tame norm-residue symbols are evaluated at p and at every prime of the
    q-th-power-reduced alpha.  If all of them are trivial the symbol at the
    wild place over q is trivial too (reciprocity: all remaining places are
    complex), so the algebra splits.  Violated preconditions produce an
    Undetermined verdict whose certificate names the failure.
    """
    spec = SymbolAlgebra(q, alpha, p)
    return _with_tag(spec, _classify_symbol_full(q, alpha, p))


def classify(spec: AlgebraSpec) -> Verdict:
    """Classify any AlgebraSpec (dispatch helper for batch callers)."""
    if isinstance(spec, QuaternionQ):
        return classify_quaternion_q(spec.a, spec.b)
    if isinstance(spec, QuaternionQi):
        return classify_quaternion_qi(spec.a, spec.b)
    return classify_symbol(spec.q, spec.alpha, spec.p)
