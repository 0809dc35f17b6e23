"""Closed-form superposition coefficients of maximal-spin Dicke states.

The amplitude attached to an occupation vector factorizes into the
square root of the permutation multiplicity N!/prod(n_m!), a per-level
weight d_m, and an M-dependent normalization prefactor

    (J - |M|)! * prod_{l=1}^{J-|M|} 1 / sqrt((2J - l + 1) l)
        == 1 / sqrt(binomial(2J, J - |M|)).

The validated weight is d_m = sqrt(binomial(2s, s - m)); with it every
squared amplitude is an exact rational and each expansion normalizes to 1
identically (see VALIDATION.md).  Everything is computed with big-integer
factorials; a single square root at the end is the only floating-point
step.  A rejected candidate weight is kept selectable as the "alt" variant
purely to document its failure against the reference tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial, sqrt

from .basis import OccupationVector, check_domain, enumerate_basis
from .species import DomainError, SpinSpecies

#: weight variants accepted by the closed-form engine
WEIGHT_VARIANTS = ("binomial", "alt")


def level_weight(species: SpinSpecies, twice_m: int) -> float:
    """Per-particle weight d_m = sqrt(binomial(2s, s - m)) of level m."""
    ts = species.twice_spin
    if abs(twice_m) > ts or (ts - twice_m) % 2 != 0:
        raise DomainError(f"no level 2m={twice_m} for spin {species.name}")
    return sqrt(comb(ts, (ts - twice_m) // 2))


def _weight_square(species: SpinSpecies, occ: OccupationVector, variant: str) -> Fraction:
    """Squared product of level weights over an occupation vector."""
    ts = species.twice_spin
    if variant == "binomial":
        w = 1
        for count, tm in zip(occ, species.twice_levels):
            w *= comb(ts, (ts - tm) // 2) ** count
        return Fraction(w)
    if variant != "alt":
        raise ValueError(f"unknown weight variant {variant!r}")
    # Rejected candidates, kept only so table verification can show they
    # fail: 2^{n_0} for spin 1 and (3/2)^{n_3/2} 3^{(n_2+n_3+n_4)/2} for
    # spin 2 (squared here).  Spin 1/2 and 3/2 have no alternative reading.
    if ts == 2:
        return Fraction(4) ** occ[1]
    if ts == 4:
        return Fraction(3, 2) ** occ[2] * Fraction(3) ** (occ[1] + occ[2] + occ[3])
    return _weight_square(species, occ, "binomial")


def coefficient_square(
    species: SpinSpecies,
    n_particles: int,
    twice_m: int,
    occ: OccupationVector,
    variant: str = "binomial",
) -> Fraction:
    """Exact squared closed-form coefficient of one occupation vector."""
    check_domain(species, n_particles, twice_m)
    if (
        len(occ) != species.n_levels
        or any(c < 0 for c in occ)
        or sum(occ) != n_particles
        or sum(c * tm for c, tm in zip(occ, species.twice_levels)) != twice_m
    ):
        raise DomainError(
            f"occupation vector {occ} not in the (N={n_particles}, "
            f"2M={twice_m}) basis for spin {species.name}"
        )
    multiplicity = factorial(n_particles)
    for count in occ:
        multiplicity //= factorial(count)
    twice_j = species.twice_spin * n_particles
    norm = comb(twice_j, (twice_j - abs(twice_m)) // 2)
    return multiplicity * _weight_square(species, occ, variant) / norm


def closed_form_coefficient(
    species: SpinSpecies,
    n_particles: int,
    twice_m: int,
    occ: OccupationVector,
    variant: str = "binomial",
) -> float:
    """Closed-form amplitude (positive square root of the exact square)."""
    return sqrt(coefficient_square(species, n_particles, twice_m, occ, variant))


@dataclass(frozen=True)
class DickeExpansion:
    """A fixed-(N, M) symmetric state written in the occupation basis.

    `terms` pairs every basis occupation vector with a real positive
    amplitude; amplitudes are normalized so the squares sum to 1.
    """

    species: SpinSpecies
    n_particles: int
    twice_j: int
    twice_m: int
    terms: tuple[tuple[OccupationVector, float], ...]

    def as_dict(self) -> dict[OccupationVector, float]:
        return dict(self.terms)

    def amplitude(self, occ: OccupationVector) -> float:
        return self.as_dict().get(occ, 0.0)

    def norm_square(self) -> float:
        return sum(a * a for _, a in self.terms)


def dicke_expansion(
    species: SpinSpecies,
    n_particles: int,
    twice_m: int,
    variant: str = "binomial",
) -> DickeExpansion:
    """Full closed-form expansion of |J = sN, M> over its occupation basis.

    The explicit final renormalization is a no-op for the validated weight
    (the exact squares already sum to 1) but protects the "alt" variant.
    """
    basis = enumerate_basis(species, n_particles, twice_m)
    amps = [
        sqrt(coefficient_square(species, n_particles, twice_m, occ, variant))
        for occ in basis
    ]
    norm = sqrt(sum(a * a for a in amps))
    return DickeExpansion(
        species,
        n_particles,
        species.twice_spin * n_particles,
        twice_m,
        tuple((occ, a / norm) for occ, a in zip(basis, amps)),
    )


def exact_coefficient_squares(
    species: SpinSpecies, n_particles: int, twice_m: int
) -> dict[OccupationVector, Fraction]:
    """Squared amplitudes of the full expansion as exact rationals."""
    return {
        occ: coefficient_square(species, n_particles, twice_m, occ)
        for occ in enumerate_basis(species, n_particles, twice_m)
    }
