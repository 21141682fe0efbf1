"""Residue bookkeeping for the field of d-th roots of unity.

Nothing downstream ever needs an actual root of unity: every formula in
this package depends only on exponents mod d.  An embedding sigma_a is
therefore stored as the unit residue a, complex conjugation is the
involution a -> d - a, and the preferred CM-type picks the units in the
open interval (0, d/2).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd
from typing import Iterator


class InvalidDegreeError(ValueError):
    """Degree d < 3; the cyclotomic field is not CM."""


class InvalidEmbeddingError(ValueError):
    """Residue is not a unit mod d, so it indexes no embedding."""


@dataclass(frozen=True)
class CyclotomicData:
    """The degree d, its unit group (ascending) and the CM-type sigma0."""

    d: int
    units: tuple[int, ...]
    sigma0: frozenset[int]

    def is_unit(self, a: int) -> bool:
        return 0 < a % self.d and gcd(a, self.d) == 1

    def conjugate(self, a: int) -> int:
        return conjugate(self, a)

    def __repr__(self) -> str:
        return f"CyclotomicData(d={self.d})"


def make_cyclotomic(d: int) -> CyclotomicData:
    """Unit group and CM-type data for the d-th cyclotomic field, d >= 3."""
    if d < 3:
        raise InvalidDegreeError(f"degree must be >= 3, got {d}")
    units = tuple(a for a in range(1, d) if gcd(a, d) == 1)
    sigma0 = frozenset(a for a in units if 2 * a < d)
    data = CyclotomicData(d=d, units=units, sigma0=sigma0)
    assert len(sigma0) * 2 == len(units)
    return data


def conjugate(field: CyclotomicData, a: int) -> int:
    """Complex conjugation on embeddings: sigma_a -> sigma_{d-a}."""
    if a not in field.units:
        raise InvalidEmbeddingError(f"{a} is not a unit mod {field.d}")
    return field.d - a


def conjugate_residue(field: CyclotomicData, a: int) -> int:
    """Conjugation extended to arbitrary residues (0 is self-conjugate)."""
    return (-a) % field.d


def all_cm_types(field: CyclotomicData) -> Iterator[frozenset[int]]:
    """All 2^(phi(d)/2) CM-types, one embedding per conjugate pair.

    Deterministic order: choices iterate over the ascending elements of
    sigma0, picking the sigma0 member before its conjugate.
    """
    pairs = [(a, field.d - a) for a in sorted(field.sigma0)]
    for choice in product(*pairs):
        yield frozenset(choice)
