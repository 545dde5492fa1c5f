"""Unramified torus characters, modulus twists, and quadratic base change.

Characters live on the diagonal torus coordinates as formal values
r * (q^{1/2})^k with r a nonzero rational and q unspecified, so every
comparison is exact.  The conjugation twist of the half-modulus, the
base-change map on Satake data, equivalence under the relevant Weyl
groups, and the commutativity of twisting with base change are all
computed at this desk scale.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import PreconditionError, SideError


class QValue(NamedTuple):
    """r * (q^{1/2})^k in the abstract group of rationals times formal root powers."""

    r: Fraction
    k: int

    def __mul__(self, other: "QValue") -> "QValue":  # type: ignore[override]
        return QValue(self.r * other.r, self.k + other.k)

    def inv(self) -> "QValue":
        return QValue(1 / self.r, -self.k)

    def sort_key(self):
        return (self.k, self.r)


def qval(r, k: int = 0) -> QValue:
    value = Fraction(r)
    if value == 0:
        raise PreconditionError("character values must be nonzero")
    return QValue(value, k)


ONE_VALUE = qval(1, 0)


@dataclass(frozen=True, eq=True)
class USide:
    """Rank-2m (or, experimentally, rank-2m+1) quasi-split unitary side.

    ``odd_rank`` opts into the odd-rank extension, whose modulus
    exponents follow from the same Haar-measure bookkeeping but are not
    displayed anywhere; it is validated only through the well-definedness
    and commutativity invariants.
    """

    m: int
    odd_rank: bool = False

    def __post_init__(self):
        if self.m < 1:
            raise PreconditionError("half-rank must be at least 1")


@dataclass(frozen=True, eq=True)
class GLSide:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise PreconditionError("rank must be at least 1")


@dataclass(frozen=True, eq=True)
class UnramChar:
    side: USide | GLSide
    coords: tuple[QValue, ...]

    def __post_init__(self):
        expected = self.side.m if isinstance(self.side, USide) else self.side.n
        if len(self.coords) != expected:
            raise PreconditionError(
                f"character needs {expected} coordinates, got {len(self.coords)}"
            )
        if any(c.r == 0 for c in self.coords):
            raise PreconditionError("character values must be nonzero")

    def __mul__(self, other: "UnramChar") -> "UnramChar":
        if self.side != other.side:
            raise SideError("cannot multiply characters on different sides")
        return UnramChar(self.side, tuple(a * b for a, b in zip(self.coords, other.coords)))


def unitary_modulus_exponents(m: int, odd_rank: bool = False) -> tuple[Fraction, ...]:
    """Half-modulus exponents on the unitary side.

    Even rank 2m: ((2m-1)/2, (2m-3)/2, ..., 1/2).  Odd rank 2m+1
    (experimental): the same bookkeeping yields (m, m-1, ..., 1).
    """
    if m < 1:
        raise PreconditionError("half-rank must be at least 1")
    if odd_rank:
        return tuple(Fraction(m - i) for i in range(m))
    return tuple(Fraction(2 * m - 1 - 2 * i, 2) for i in range(m))


def linear_modulus_exponents(n: int) -> tuple[Fraction, ...]:
    """Half-modulus exponents ((n-1)/2, (n-3)/2, ..., -(n-1)/2) on the linear side."""
    if n < 1:
        raise PreconditionError("rank must be at least 1")
    return tuple(Fraction(n - 1 - 2 * i, 2) for i in range(n))


def modulus_exponents(side: USide | GLSide) -> tuple[Fraction, ...]:
    if isinstance(side, USide):
        return unitary_modulus_exponents(side.m, side.odd_rank)
    return linear_modulus_exponents(side.n)


@functools.lru_cache(maxsize=None)
def galois_twist(side: USide | GLSide, eps: int) -> UnramChar:
    """The character sigma(half-modulus)/half-modulus for sigma acting by eps on q^{1/2}.

    Coordinate i takes the value eps**numerator(e_i) with e_i the modulus
    exponent written over denominator 2; integral exponents give 1.
    """
    if eps not in (1, -1):
        raise PreconditionError("the twist is determined by a sign")
    coords = []
    for e in modulus_exponents(side):
        num = int(2 * e)
        coords.append(qval(eps if num % 2 else 1, 0))
    return UnramChar(side, tuple(coords))


def base_change(chi: UnramChar) -> UnramChar:
    """Quadratic base change on Satake data: (c_1..c_m) -> (c_1..c_m, c_1^-1..c_m^-1).

    For the experimental odd rank a trivial middle coordinate is inserted.
    """
    if not isinstance(chi.side, USide):
        raise SideError("base change starts from the unitary side")
    m = chi.side.m
    inv_block = tuple(c.inv() for c in chi.coords)
    if chi.side.odd_rank:
        return UnramChar(GLSide(2 * m + 1), chi.coords + (ONE_VALUE,) + inv_block)
    return UnramChar(GLSide(2 * m), chi.coords + inv_block)


@functools.lru_cache(maxsize=None)
def twist_pattern_via_base_change(side: USide) -> tuple[Fraction, ...]:
    """Half-modulus exponent pattern transported through the base-change formula."""
    exps = unitary_modulus_exponents(side.m, side.odd_rank)
    middle = (Fraction(0),) if side.odd_rank else ()
    return exps + middle + tuple(-e for e in exps)


@functools.lru_cache(maxsize=None)
def _pattern_facts(side: USide) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...], bool, bool]:
    gl_n = 2 * side.m + (1 if side.odd_rank else 0)
    direct = linear_modulus_exponents(gl_n)
    via_bc = twist_pattern_via_base_change(side)
    return direct, via_bc, direct == via_bc, sorted(direct) == sorted(via_bc)


def weyl_equivalent(x: UnramChar, y: UnramChar) -> bool:
    """Orbit equality under the relevant Weyl group.

    Linear side: coordinate multisets.  Unitary side: signed
    permutations, i.e. multisets after normalizing each coordinate
    against its inverse.
    """
    if x.side != y.side:
        return False
    if isinstance(x.side, GLSide):
        key = lambda c: c.sort_key()
        return sorted(x.coords, key=key) == sorted(y.coords, key=key)

    def normal(c: QValue) -> QValue:
        return min(c, c.inv(), key=lambda v: v.sort_key())

    key = lambda c: c.sort_key()
    return sorted(map(normal, x.coords), key=key) == sorted(map(normal, y.coords), key=key)


@dataclass(frozen=True)
class CommutativityReport:
    """Both routes from a unitary character to a twisted linear character."""

    twist_then_bc: UnramChar
    bc_then_twist: UnramChar
    values_equal_as_tuples: bool
    weyl_equivalent: bool
    pattern_direct: tuple[Fraction, ...]
    pattern_via_bc: tuple[Fraction, ...]
    patterns_equal_as_tuples: bool
    patterns_weyl_equivalent: bool


def commutativity_check(chi: UnramChar, eps: int) -> CommutativityReport:
    """Compare twisting before and after base change.

    The two induced characters must be Weyl equivalent (in fact they agree
    coordinatewise, because the sign twist squares to one); the formal
    half-exponent patterns behind the two twists agree only up to the
    linear Weyl group once the half-rank exceeds one.
    """
    if not isinstance(chi.side, USide):
        raise SideError("commutativity check starts from the unitary side")
    gl_side = GLSide(2 * chi.side.m + (1 if chi.side.odd_rank else 0))
    lhs = base_change(chi) * galois_twist(gl_side, eps)
    rhs = base_change(chi * galois_twist(chi.side, eps))
    direct, via_bc, tuples_eq, weyl_eq = _pattern_facts(chi.side)
    values_equal = lhs.coords == rhs.coords
    return CommutativityReport(
        twist_then_bc=lhs,
        bc_then_twist=rhs,
        values_equal_as_tuples=values_equal,
        weyl_equivalent=values_equal or weyl_equivalent(lhs, rhs),
        pattern_direct=direct,
        pattern_via_bc=via_bc,
        patterns_equal_as_tuples=tuples_eq,
        patterns_weyl_equivalent=weyl_eq,
    )


def small_value_set() -> tuple[QValue, ...]:
    """The fixed coordinate pool used by the exhaustive commutativity sweeps."""
    vals = [qval(s, k) for s in (1, -1) for k in range(-2, 3)]
    vals += [qval(2, 0), qval(Fraction(1, 2), 0)]
    return tuple(vals)


def sweep_commutativity(m_max: int = 4, odd_rank: bool = False):
    """Yield every commutativity report over the fixed value pool up to m_max."""
    for m in range(1, m_max + 1):
        side = USide(m, odd_rank)
        for eps in (1, -1):
            for combo in itertools.product(small_value_set(), repeat=m):
                yield commutativity_check(UnramChar(side, combo), eps)
