"""Local invariants of rational quadratic forms.

Hilbert symbols over the reals and over the p-adic numbers, discriminants
modulo squares, Hasse-Witt invariants, and the invariants of the standard
diagonal form with r plus-ones and s minus-ones.  All operations are pure
and stateless.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

__all__ = [
    "Place",
    "INFINITE_PLACE",
    "DiagonalForm",
    "LocalInvariants",
    "Signature",
    "hilbert_symbol",
    "discriminant",
    "hasse_witt",
    "signature_form",
    "signature_invariants",
    "is_split_odd",
    "squarefree_part",
]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    for q in range(3, isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class Place:
    """A place of the rationals: a prime p, or the real place (p is None)."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @classmethod
    def prime(cls, p: int) -> Place:
        return cls(p)

    @classmethod
    def real(cls) -> Place:
        return cls(None)

    @property
    def is_real(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "infinity" if self.p is None else str(self.p)


INFINITE_PLACE = Place.real()


def _as_place(v: Place | int | str) -> Place:
    if isinstance(v, Place):
        return v
    if isinstance(v, int):
        return Place.prime(v)
    if isinstance(v, str) and v in ("inf", "infinity", "oo"):
        return INFINITE_PLACE
    raise ValueError(f"not a place: {v!r}")


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization of |n| by trial division (small inputs only)."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    q = 7
    while q * q <= n:
        while n % q == 0:
            out[q] = out.get(q, 0) + 1
            n //= q
        q += 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def squarefree_part(x: Fraction | int) -> int:
    """The square-free integer representing x modulo rational squares (sign kept)."""
    x = Fraction(x)
    if x == 0:
        raise ValueError("0 has no square class")
    sign = -1 if x < 0 else 1
    exps: dict[int, int] = {}
    for n in (x.numerator, x.denominator):
        for p, e in _factorize(n).items():
            exps[p] = exps.get(p, 0) + e
    out = sign
    for p, e in exps.items():
        if e % 2:
            out *= p
    return out


def _strip_squares(x: Fraction) -> Fraction:
    """Strip square factors from numerator and denominator separately."""
    if x == 0:
        return x
    sign = -1 if x < 0 else 1

    def sqfree(n: int) -> int:
        out = 1
        for p, e in _factorize(n).items():
            if e % 2:
                out *= p
        return out

    return Fraction(sign * sqfree(x.numerator), sqfree(x.denominator))


def _padic_split(x: Fraction, p: int) -> tuple[int, int, int]:
    """Return (valuation, unit numerator, unit denominator) of x at p."""
    num, den = x.numerator, x.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v, num, den


def _unit_residue(num: int, den: int, mod: int) -> int:
    """num/den mod `mod`, both prime to `mod`."""
    return num * pow(den, -1, mod) % mod


def hilbert_symbol(a: Fraction | int, b: Fraction | int, v: Place | int | str) -> int:
    """The Hilbert symbol (a, b)_v in {+1, -1}.

    +1 exactly when z^2 = a x^2 + b y^2 has a nontrivial solution over the
    completion at v.  Real place: -1 iff both arguments are negative.  Odd p:
    Legendre symbols of the unit parts.  p = 2: the standard mod-8 formula
    with eps(u) = (u-1)/2 and omega(u) = (u^2-1)/8 taken mod 2.
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0 or b == 0:
        raise ValueError("Hilbert symbol arguments must be nonzero")
    place = _as_place(v)
    if place.is_real:
        return -1 if (a < 0 and b < 0) else 1
    p = place.p
    assert p is not None
    alpha, anum, aden = _padic_split(a, p)
    beta, bnum, bden = _padic_split(b, p)
    if p == 2:
        u = _unit_residue(anum, aden, 8)
        w = _unit_residue(bnum, bden, 8)
        eps_u = (u - 1) // 2 % 2
        eps_w = (w - 1) // 2 % 2
        om_u = (u * u - 1) // 8 % 2
        om_w = (w * w - 1) // 8 % 2
        e = eps_u * eps_w + alpha * om_w + beta * om_u
        return -1 if e % 2 else 1

    def legendre(num: int, den: int) -> int:
        r = pow(_unit_residue(num, den, p), (p - 1) // 2, p)
        return 1 if r == 1 else -1

    e = alpha * beta * ((p - 1) // 2)
    sym = -1 if e % 2 else 1
    if beta % 2:
        sym *= legendre(anum, aden)
    if alpha % 2:
        sym *= legendre(bnum, bden)
    return sym


@dataclass(frozen=True)
class DiagonalForm:
    """A nondegenerate diagonal quadratic form sum a_i x_i^2 over the rationals."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a diagonal form needs at least one coefficient")
        if any(c == 0 for c in coeffs):
            raise ValueError("diagonal coefficients must be nonzero")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def dim(self) -> int:
        return len(self.coefficients)


@dataclass(frozen=True)
class LocalInvariants:
    """The classifying triple (dimension, discriminant class, Hasse-Witt sign)."""

    dim: int
    disc_class: Fraction
    hasse_witt: int

    def __post_init__(self) -> None:
        if self.disc_class == 0:
            raise ValueError("discriminant class must be nonzero")
        if self.hasse_witt not in (1, -1):
            raise ValueError("Hasse-Witt invariant must be +1 or -1")


@dataclass(frozen=True)
class Signature:
    """Signature (r, s) of the standard unimodular lattice; requires r + s >= 3."""

    r: int
    s: int

    def __post_init__(self) -> None:
        if self.r < 0 or self.s < 0:
            raise ValueError("signature entries must be non-negative")
        if self.r + self.s < 3:
            raise ValueError("dimension r + s must be at least 3")

    @property
    def dim(self) -> int:
        return self.r + self.s

    @property
    def residue(self) -> int:
        """(r - s) mod 8."""
        return (self.r - self.s) % 8


def discriminant(f: DiagonalForm) -> Fraction:
    """(-1)^(d(d-1)/2) * prod a_i, with square factors stripped from both
    numerator and denominator."""
    d = f.dim
    prod = Fraction(1)
    for c in f.coefficients:
        prod *= _strip_squares(c)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return _strip_squares(sign * prod)


def hasse_witt(f: DiagonalForm, v: Place | int | str) -> int:
    """prod_{i<j} (a_i, a_j)_v over all unordered pairs."""
    place = _as_place(v)
    coeffs = f.coefficients
    out = 1
    for i in range(len(coeffs)):
        for j in range(i + 1, len(coeffs)):
            out *= hilbert_symbol(coeffs[i], coeffs[j], place)
    return out


def signature_form(sig: Signature) -> DiagonalForm:
    """The explicit diagonal form with r entries +1 followed by s entries -1."""
    return DiagonalForm((Fraction(1),) * sig.r + (Fraction(-1),) * sig.s)


def signature_invariants(sig: Signature, v: Place | int | str) -> LocalInvariants:
    """Invariants of the standard form at a place, via the closed forms
    disc = (-1)^([d/2]+s) and hasse_witt = (-1,-1)_v^[s/2], cross-checked
    against direct computation on the explicit diagonal form."""
    place = _as_place(v)
    d = sig.dim
    disc = Fraction(-1 if (d // 2 + sig.s) % 2 else 1)
    eps = hilbert_symbol(-1, -1, place) ** (sig.s // 2)
    form = signature_form(sig)
    assert disc == discriminant(form)
    assert eps == hasse_witt(form, place)
    return LocalInvariants(dim=d, disc_class=disc, hasse_witt=eps)


def is_split_odd(sig: Signature) -> bool:
    """Whether the 2-adic special orthogonal group of the odd-dimensional
    standard form is split: r - s must be +-1 mod 8 (else +-3)."""
    if sig.dim % 2 == 0:
        raise ValueError("is_split_odd requires odd dimension")
    return sig.residue in (1, 7)
