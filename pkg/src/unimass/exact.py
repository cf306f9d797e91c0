"""Exact arithmetic: Bernoulli/Euler numbers, special L-value ratios, symbolic values.

Everything here is a pure function of its inputs.  The Bernoulli and Euler
caches are `lru_cache`-backed and therefore safe for concurrent readers.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

# The coefficient field for everything exact: arbitrary-precision signed
# rationals, always in lowest terms with positive denominator.
Rational = Fraction

__all__ = [
    "Rational",
    "bernoulli",
    "euler_number",
    "zeta_even_ratio",
    "beta_odd_ratio",
    "SymbolicValue",
    "symbolic_zeta",
    "symbolic_beta",
    "ONE",
]


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """Bernoulli number B_m (convention B_1 = -1/2), exact.

    Computed from the defining recurrence sum_{j<=m} C(m+1, j) B_j = 0
    with memoization; odd indices >= 3 are zero.
    """
    if m < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if m == 0:
        return Fraction(1)
    if m == 1:
        return Fraction(-1, 2)
    if m % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(m):
        bj = bernoulli(j)
        if bj:
            acc += comb(m + 1, j) * bj
    return -acc / (m + 1)


@lru_cache(maxsize=None)
def euler_number(m: int) -> int:
    """Euler number E_m (E_0 = 1, E_2 = -1, E_4 = 5, ...); zero for odd m.

    Recurrence: sum_{j<=k} C(2k, 2j) E_{2j} = 0 for k >= 1.
    """
    if m < 0:
        raise ValueError("Euler index must be non-negative")
    if m % 2 == 1:
        return 0
    if m == 0:
        return 1
    return -sum(comb(m, 2 * j) * euler_number(2 * j) for j in range(m // 2))


def zeta_even_ratio(k: int) -> Fraction:
    """zeta(2k) / pi^(2k) as an exact rational: (-1)^(k+1) B_{2k} 2^(2k-1) / (2k)!."""
    if k < 1:
        raise ValueError("k must be >= 1")
    sign = 1 if k % 2 == 1 else -1
    return sign * bernoulli(2 * k) * Fraction(2 ** (2 * k - 1), factorial(2 * k))


def beta_odd_ratio(k: int) -> Fraction:
    """L(2k+1, chi_-4) / pi^(2k+1) as an exact rational.

    Equals E_{2k} (-1)^k / (4^(k+1) (2k)!); the sign convention is pinned by
    the k = 0 and k = 1 values 1/4 and 1/32 (Leibniz and the cubic analogue).
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    sign = 1 if k % 2 == 0 else -1
    return Fraction(sign * euler_number(2 * k), 4 ** (k + 1) * factorial(2 * k))


@dataclass(frozen=True)
class SymbolicValue:
    """An exact value of the form coeff * pi^pi_power * prod zeta(s_i) * prod beta(t_j).

    Canonical form is enforced at construction: even zeta arguments fold into
    coeff * pi^s, odd beta arguments fold likewise, argument tuples are kept
    sorted, and a zero coefficient clears everything else.  Equality is
    therefore plain field-by-field dataclass equality.
    """

    coeff: Fraction
    pi_power: int = 0
    zeta_args: tuple[int, ...] = ()
    beta_args: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        coeff = Fraction(self.coeff)
        pi_power = int(self.pi_power)
        zetas: list[int] = []
        betas: list[int] = []
        for s in self.zeta_args:
            if s < 2:
                raise ValueError(f"zeta argument must be >= 2, got {s}")
            if s % 2 == 0:
                coeff *= zeta_even_ratio(s // 2)
                pi_power += s
            else:
                zetas.append(int(s))
        for s in self.beta_args:
            if s < 1:
                raise ValueError(f"beta argument must be >= 1, got {s}")
            if s % 2 == 1:
                coeff *= beta_odd_ratio((s - 1) // 2)
                pi_power += s
            else:
                betas.append(int(s))
        if coeff == 0:
            pi_power = 0
            zetas = []
            betas = []
        object.__setattr__(self, "coeff", coeff)
        object.__setattr__(self, "pi_power", pi_power)
        object.__setattr__(self, "zeta_args", tuple(sorted(zetas)))
        object.__setattr__(self, "beta_args", tuple(sorted(betas)))

    def __mul__(self, other: SymbolicValue) -> SymbolicValue:
        if not isinstance(other, SymbolicValue):
            return NotImplemented
        return SymbolicValue(
            self.coeff * other.coeff,
            self.pi_power + other.pi_power,
            self.zeta_args + other.zeta_args,
            self.beta_args + other.beta_args,
        )

    def scale(self, c: Fraction | int) -> SymbolicValue:
        """Exact product with a rational scalar."""
        return SymbolicValue(self.coeff * c, self.pi_power, self.zeta_args, self.beta_args)

    def inverse(self) -> SymbolicValue:
        """Reciprocal; only defined when no zeta/beta factors are present."""
        if self.zeta_args or self.beta_args:
            raise ValueError("cannot invert a value with symbolic zeta/beta factors")
        if self.coeff == 0:
            raise ZeroDivisionError("cannot invert zero")
        return SymbolicValue(1 / self.coeff, -self.pi_power)

    @property
    def is_rational(self) -> bool:
        return self.pi_power == 0 and not self.zeta_args and not self.beta_args

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise ValueError(f"not a pure rational: {self!r}")
        return self.coeff

    def __str__(self) -> str:
        parts = [str(self.coeff)]
        if self.pi_power:
            parts.append(f"pi^{self.pi_power}")
        parts.extend(f"zeta({s})" for s in self.zeta_args)
        parts.extend(f"beta({s})" for s in self.beta_args)
        return " * ".join(parts)


ONE = SymbolicValue(Fraction(1))


def symbolic_zeta(s: int) -> SymbolicValue:
    """zeta(s) as a SymbolicValue (even s folds to a rational times pi^s)."""
    if s < 2:
        raise ValueError("zeta argument must be >= 2")
    return SymbolicValue(Fraction(1), 0, (s,), ())


def symbolic_beta(s: int) -> SymbolicValue:
    """L(s, chi_-4) as a SymbolicValue (odd s folds to a rational times pi^s)."""
    if s < 1:
        raise ValueError("beta argument must be >= 1")
    return SymbolicValue(Fraction(1), 0, (), (s,))
