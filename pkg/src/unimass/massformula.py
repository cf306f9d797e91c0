"""Exact masses of unimodular lattices of signature (r, s).

The production route assembles the closed forms directly; a second route
assembles the same mass from the raw ingredients of the general parahoric
volume formula (Tamagawa number, archimedean measure ratio, L-value product,
local factor) and must agree with the first exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .exact import SymbolicValue, symbolic_beta, symbolic_zeta, zeta_even_ratio
from .localfactor import local_factor
from .localinv import Signature

__all__ = [
    "TAMAGAWA_NUMBER",
    "MassResult",
    "TableRow",
    "measure_ratio",
    "mass_odd_unimodular",
    "mass_via_parahoric_formula",
    "mass_even_unimodular",
    "table_signature",
    "generate_table",
]

# Tamagawa number of the special orthogonal group; a fixed constant of the
# normalization, not configurable.
TAMAGAWA_NUMBER = 2


@dataclass(frozen=True)
class MassResult:
    """A computed mass together with its ingredients.

    Invariants: mass == main_term scaled by lambda2, and d_E == 4 exactly
    when disc_character == "chi_minus_4".
    """

    signature: Signature
    lambda2: Fraction
    main_term: SymbolicValue
    mass: SymbolicValue
    disc_character: str  # "trivial" | "chi_minus_4"
    d_E: int

    def __post_init__(self) -> None:
        if self.disc_character not in ("trivial", "chi_minus_4"):
            raise ValueError(f"bad character tag {self.disc_character!r}")
        if (self.d_E == 4) != (self.disc_character == "chi_minus_4"):
            raise ValueError("d_E = 4 exactly for the chi_minus_4 character")
        if self.mass != self.main_term.scale(self.lambda2):
            raise ValueError("mass != lambda2 * main_term")


def measure_ratio(d: int) -> SymbolicValue:
    """Ratio between the split and compact normalizations of the archimedean
    measure: (2 pi)^(n(n+1)) / prod_{r<=n} (2r-1)! for d = 2n+1, and
    (2 pi)^(n^2) / ((n-1)! prod_{r<n} (2r-1)!) for d = 2n."""
    if d < 3:
        raise ValueError("dimension must be >= 3")
    if d % 2:
        n = (d - 1) // 2
        power = n * (n + 1)
        den = 1
        for r in range(1, n + 1):
            den *= factorial(2 * r - 1)
    else:
        n = d // 2
        power = n * n
        den = factorial(n - 1)
        for r in range(1, n):
            den *= factorial(2 * r - 1)
    return SymbolicValue(Fraction(2**power, den), power)


def _zeta_block(n: int) -> Fraction:
    """prod_{k=1..n} (2k-1)! zeta(2k) / (2 pi)^(2k), a pure rational."""
    out = Fraction(1)
    for k in range(1, n + 1):
        out *= factorial(2 * k - 1) * zeta_even_ratio(k) / 4**k
    return out


def _even_main_term(sig: Signature) -> tuple[SymbolicValue, str, int]:
    """Main term, character tag and discriminant weight for even d = 2n."""
    n = sig.dim // 2
    if sig.residue in (2, 6):
        character = "chi_minus_4"
        d_e = 4
        lvalue = symbolic_beta(n)
        disc_weight = 2 ** (2 * n - 1)  # 4^(n - 1/2), an exact integer
    else:
        character = "trivial"
        d_e = 1
        lvalue = symbolic_zeta(n)
        disc_weight = 1
    head = SymbolicValue(Fraction(factorial(n - 1), 2**n), -n)
    main = (lvalue * head).scale(_zeta_block(n - 1) * disc_weight * TAMAGAWA_NUMBER)
    return main, character, d_e


def mass_odd_unimodular(sig: Signature) -> MassResult:
    """Exact mass of the odd unimodular lattice of signature (r, s)."""
    lam = local_factor(sig)
    d = sig.dim
    if d % 2:
        n = (d - 1) // 2
        main = SymbolicValue(_zeta_block(n) * TAMAGAWA_NUMBER)
        character, d_e = "trivial", 1
    else:
        main, character, d_e = _even_main_term(sig)
    return MassResult(
        signature=sig,
        lambda2=lam,
        main_term=main,
        mass=main.scale(lam),
        disc_character=character,
        d_E=d_e,
    )


def mass_via_parahoric_formula(sig: Signature) -> SymbolicValue:
    """Same mass assembled from the general volume-formula ingredients:
    tamagawa * measure_ratio(d)^-1 * L-value product * local factor.

    Over the rationals the field discriminant and degree are 1 and the local
    factors at odd primes are 1, so only the factor at 2 remains.
    """
    d = sig.dim
    value = measure_ratio(d).inverse()
    if d % 2:
        n = (d - 1) // 2
        for r in range(1, n + 1):
            value = value * symbolic_zeta(2 * r)
    else:
        n = d // 2
        for r in range(1, n):
            value = value * symbolic_zeta(2 * r)
        if sig.residue in (2, 6):
            value = (value * symbolic_beta(n)).scale(2 ** (2 * n - 1))
        else:
            value = value * symbolic_zeta(n)
    return value.scale(TAMAGAWA_NUMBER * local_factor(sig))


def mass_even_unimodular(sig: Signature) -> MassResult:
    """Mass of the even unimodular lattice of signature (r, s).

    Extension beyond the closed forms for odd lattices: the local factor is 1
    at every place (the stabilizer is already a maximal parahoric subgroup),
    and the main term is the trivial-character branch of the even-dimension
    formula.  Validated against the automorphism-counting oracle at (8, 0).
    """
    if (sig.r - sig.s) % 8 != 0:
        raise ValueError("even unimodular lattices need r - s divisible by 8")
    if sig.dim % 2:
        raise AssertionError("r - s multiple of 8 forces even dimension")
    main, character, d_e = _even_main_term(sig)
    lam = Fraction(1)
    return MassResult(
        signature=sig,
        lambda2=lam,
        main_term=main,
        mass=main.scale(lam),
        disc_character=character,
        d_E=d_e,
    )


def table_signature(parity: str, n: int, residue: int) -> Signature:
    """Canonical signature for a table cell: the smallest s >= 0 realizing the
    residue class of r - s mod 8 with r >= s.

    Residues are column labels: 1 and 3 stand for +-1 and +-3 (odd rows);
    0, 2, 4 stand for 0, +-2 and 4 mod 8 (even rows).
    """
    if parity == "odd":
        if residue == 1:
            s = min(n % 4, (n + 1) % 4)
        elif residue == 3:
            s = min((n - 1) % 4, (n - 2) % 4)
        else:
            raise ValueError("odd-table residue must be 1 or 3")
        return Signature(2 * n + 1 - s, s)
    if parity == "even":
        if residue == 0:
            s = n % 4
        elif residue == 2:
            s = min((n - 1) % 4, (n + 1) % 4)
        elif residue == 4:
            s = (n + 2) % 4
        else:
            raise ValueError("even-table residue must be 0, 2 or 4")
        return Signature(2 * n - s, s)
    raise ValueError("parity must be 'odd' or 'even'")


ODD_COLUMNS = (1, 3)
EVEN_COLUMNS = (0, 2, 4)


@dataclass(frozen=True)
class TableRow:
    n: int
    cells: dict[int, MassResult]


def generate_table(parity: str, n_max: int) -> list[TableRow]:
    """Rows of the mass table for odd (d = 2n+1, n = 1..n_max) or even
    (d = 2n, n = 2..n_max) dimensions, keyed by residue column."""
    if not 1 <= n_max <= 30:
        raise ValueError("n_max must be between 1 and 30")
    if parity == "odd":
        columns, n_min = ODD_COLUMNS, 1
    elif parity == "even":
        columns, n_min = EVEN_COLUMNS, 2
    else:
        raise ValueError("parity must be 'odd' or 'even'")
    rows = []
    for n in range(n_min, n_max + 1):
        cells = {
            res: mass_odd_unimodular(table_signature(parity, n, res)) for res in columns
        }
        rows.append(TableRow(n=n, cells=cells))
    return rows
