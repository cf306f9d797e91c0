"""The 2-adic local factor of an odd unimodular lattice.

Two independent routes are provided: the residue-of-(r-s) dispatch used in
production, and the classification of the discriminant glue group by the
2-adic valuation of the sum-of-diagonal invariant, which the test suite
plays against the first route.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .localinv import INFINITE_PLACE, Signature, is_split_odd, signature_invariants

__all__ = [
    "LambdaCase",
    "DiscRow",
    "local_factor_odd",
    "local_factor_even",
    "glue_valuation",
    "case_from_invariants",
    "case_for_signature",
    "local_factor",
]


class LambdaCase(enum.Enum):
    """Type of the glue group of the even-part sublattice at 2."""

    CASE_A = "A"
    CASE_B = "B"
    CASE_C = "C"
    ODD_DIM = "odd"


class DiscRow(enum.Enum):
    """2-adic square class of the discriminant: 1, the unramified nontrivial
    class (5 mod 8), or a ramified class (3 mod 4)."""

    TRIVIAL = "trivial-disc"
    UNRAMIFIED = "unramified-nontrivial"
    RAMIFIED = "ramified"


def local_factor_odd(n: int, split: bool) -> Fraction:
    """Local factor at 2 for odd dimension d = 2n+1: (2^n+1)/2 if the group
    is split, (2^n-1)/2 otherwise."""
    if n < 1:
        raise ValueError("need d = 2n+1 >= 3")
    return Fraction(2**n + 1 if split else 2**n - 1, 2)


def local_factor_even(n: int, row: DiscRow, eps_matches: bool) -> Fraction:
    """Local factor at 2 for even dimension d = 2n >= 4.

    `eps_matches` means the Hasse-Witt sign equals (-1)^(n(n-1)/2), the value
    for which the space contains even unimodular lattices when the
    discriminant class is trivial.
    """
    if n < 2:
        raise ValueError("need d = 2n >= 4")
    if row is DiscRow.RAMIFIED:
        return Fraction(1, 2)
    if row is DiscRow.TRIVIAL:
        num = (2 ** (n - 1) + 1) * (2**n - 1) if eps_matches else (2 ** (n - 1) - 1) * (2**n - 1)
    elif row is DiscRow.UNRAMIFIED:
        num = (2 ** (n - 1) - 1) * (2**n + 1) if eps_matches else (2 ** (n - 1) + 1) * (2**n + 1)
    else:
        raise ValueError(f"unknown row {row!r}")
    return Fraction(num, 2)


def glue_valuation(delta: int, eps: int, d: int) -> int:
    """2-adic valuation of (-1)^(d/2) * delta + 2*eps + d - 3, capped at 3.

    This quantity classifies the quadratic form induced on the order-4 glue
    group of the even-part sublattice; only the classes {1}, {2}, {>=3}
    matter, so the valuation is capped (with 0 itself reported as >= 3).
    `eps` is the Hasse-Witt sign of the form.
    """
    if d % 2:
        raise ValueError("glue_valuation requires even dimension")
    if delta % 2 == 0:
        raise ValueError("delta must be an odd integer (a 2-adic unit)")
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    k = (-1) ** (d // 2) * delta + 2 * eps + d - 3
    if k == 0:
        return 3
    v = (k & -k).bit_length() - 1
    return min(v, 3)


def case_from_invariants(delta: int, eps: int, d: int) -> LambdaCase:
    """Case A/B/C for even d from (discriminant unit, Hasse-Witt sign)."""
    v = glue_valuation(delta, eps, d)
    if v == 1:
        return LambdaCase.CASE_A
    if v == 2:
        return LambdaCase.CASE_B
    return LambdaCase.CASE_C


def case_for_signature(sig: Signature) -> LambdaCase:
    """The glue-group case of the standard lattice; ODD_DIM for odd d."""
    if sig.dim % 2:
        return LambdaCase.ODD_DIM
    inv = signature_invariants(sig, INFINITE_PLACE)
    delta = inv.disc_class.numerator  # +-1 for the standard form
    eps2 = signature_invariants(sig, 2).hasse_witt
    return case_from_invariants(delta, eps2, sig.dim)


def local_factor(sig: Signature) -> Fraction:
    """The 2-adic local factor of the odd unimodular lattice of signature
    (r, s), dispatched on the parity of d and on (r - s) mod 8."""
    d = sig.dim
    res = sig.residue
    if d % 2:
        return local_factor_odd((d - 1) // 2, is_split_odd(sig))
    n = d // 2
    if res in (2, 6):
        return Fraction(1, 2)
    if res == 0:
        return local_factor_even(n, DiscRow.TRIVIAL, True)
    if res == 4:
        return local_factor_even(n, DiscRow.TRIVIAL, False)
    raise AssertionError(f"impossible residue {res} for even dimension")
