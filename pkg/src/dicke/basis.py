"""Occupation-number bases of the maximal-spin subspace.

A permutation-symmetric state of N spin-s particles with total magnetization
M is supported on occupation vectors (n_{+s}, ..., n_{-s}) obeying the two
conservation laws

    sum_m n_m = N          and          sum_m m * n_m = M.

`enumerate_basis` solves this Diophantine system directly and is the
authoritative enumeration.  `enumeration_bounds`, `parametric_count` and
`parametric_basis` transcribe an alternative bound/index parametrization of
the same bases; it is retained verbatim as a cross-check because it does not
reproduce the direct enumeration everywhere (the `basis` CLI reports both
counts side by side and flags disagreements; see VALIDATION.md).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .species import DomainError, SpinSpecies

OccupationVector = tuple[int, ...]


def check_domain(species: SpinSpecies, n_particles: int, twice_m: int) -> None:
    """Reject (N, M) pairs with no occupation solutions at maximal spin."""
    if n_particles < 1:
        raise DomainError(f"need at least one particle, got N={n_particles}")
    twice_j = species.twice_spin * n_particles
    if abs(twice_m) > twice_j:
        raise DomainError(
            f"magnetization out of range: |M| = {abs(twice_m)}/2 exceeds "
            f"J = {twice_j}/2 for spin {species.name}, N={n_particles}"
        )
    if (twice_j - twice_m) % 2 != 0:
        raise DomainError(
            f"magnetization 2M={twice_m} has the wrong parity for "
            f"spin {species.name}, N={n_particles}"
        )


def enumerate_basis(
    species: SpinSpecies, n_particles: int, twice_m: int
) -> list[OccupationVector]:
    """All occupation vectors with the given totals, in descending
    lexicographic order.

    Raises DomainError when |M| > s*N or the parity of M is unreachable.
    """
    check_domain(species, n_particles, twice_m)
    levels = species.twice_levels
    d = len(levels)
    # Suffix magnetization bounds for pruning: with `rem` particles left on
    # levels[i:], the reachable twice-magnetization is [rem*min, rem*max].
    out: list[OccupationVector] = []

    def recurse(i: int, rem: int, acc: int, prefix: tuple[int, ...]) -> None:
        if i == d - 1:
            if acc + levels[i] * rem == twice_m:
                out.append(prefix + (rem,))
            return
        lo, hi = levels[-1], levels[i + 1]
        for count in range(rem, -1, -1):
            acc2 = acc + levels[i] * count
            rem2 = rem - count
            if acc2 + rem2 * lo <= twice_m <= acc2 + rem2 * hi:
                recurse(i + 1, rem2, acc2, prefix + (count,))

    recurse(0, n_particles, 0, ())
    return out


def mirror(occ: OccupationVector) -> OccupationVector:
    """Exchange every level with its opposite (m -> -m): reverse the counts."""
    return tuple(reversed(occ))


@dataclass(frozen=True)
class EnumerationParams:
    """Bound parameters of the closed-form basis parametrization.

    Not every field applies to every spin: `mk`, `gamma` and `beta` exist
    for spin 3/2 and spin 2 only, `k2_range` for spin 2 only.  `sign` is the
    factor multiplying gamma in the level-difference constraint (+1 for
    M >= 0, -1 for M < 0; the M = 0 exponent is indeterminate and pinned
    to +1 so both signs of the difference arise as gamma changes sign).
    """

    species: SpinSpecies
    n_particles: int
    twice_m: int
    parity_min: int
    k0: int
    k_max: int
    sign: int
    alpha: int | None = None
    gamma: dict[int, int] = field(default_factory=dict)
    beta: dict[int, int] = field(default_factory=dict)
    mk: dict[int, int] = field(default_factory=dict)
    k1_range: dict[int, range] = field(default_factory=dict)
    k2_range: dict[tuple[int, int], range] = field(default_factory=dict)


def enumeration_bounds(
    species: SpinSpecies, n_particles: int, twice_m: int
) -> EnumerationParams:
    """Evaluate the printed bound formulas exactly as stated.

    No consistency with `enumerate_basis` is claimed; compare the two
    through `parametric_count` / the CLI.
    """
    check_domain(species, n_particles, twice_m)
    ts = species.twice_spin
    twice_j = ts * n_particles
    j_minus_m = (twice_j - abs(twice_m)) // 2
    # parity selector: 1 when J - |M| is odd, else 0
    parity_min = ((-1) ** (j_minus_m + 1) + 1) // 2
    sign = -1 if twice_m < 0 else 1

    if ts in (1, 2):
        # spin-1/2 has a unique solution; spin-1 uses n_0 = parity_min + 2k.
        k_max = 0 if ts == 1 else (j_minus_m - parity_min) // 2
        return EnumerationParams(
            species, n_particles, twice_m, parity_min, 0, k_max, sign
        )

    if ts == 3:
        alpha = (n_particles - abs(twice_m)) // 2  # N/2 - |M|
        p = max(alpha, 0)  # (alpha + |alpha|)/2
        k0 = (p + (1 - (-1) ** p) // 2) // 2  # == ceil(p / 2)
        k_max = (j_minus_m - parity_min) // 2
        gamma, beta, mk, k1r = {}, {}, {}, {}
        for k in range(k0, k_max + 1):
            g = j_minus_m - 3 * k
            b = k - p
            x = min(b, 0) + k + 1  # (beta - |beta|)/2 + k + 1
            m_k = (x + abs(x)) // 2 + max(g, 0)
            gamma[k], beta[k], mk[k] = g, b, m_k
            k1r[k] = range(1, m_k + 1)
        return EnumerationParams(
            species, n_particles, twice_m, parity_min, k0, k_max, sign,
            alpha, gamma, beta, mk, k1r,
        )

    # spin 2
    alpha = n_particles - abs(twice_m) // 2  # N - |M|
    q = max(alpha, 0)
    k0 = 2 * (q // 3) + q % 3
    r = 2 * n_particles - abs(twice_m) // 2  # 2N - |M|
    k_max = (2 * r) // 3
    gamma, beta, mk, k1r, k2r = {}, {}, {}, {}, {}
    for k in range(k0, k_max + 1):
        g = j_minus_m - 2 * k
        b = k - q
        v = (2 * k + 3 + (-1) ** k) // 4
        x = max(b, 0) + v  # (beta + |beta|)/2 + (2k + 3 + (-1)^k)/4
        m_k = (x + abs(x)) // 2 + min(g, 0)
        gamma[k], beta[k], mk[k] = g, b, m_k
        k1r[k] = range(1, m_k + 1)
        for k1 in k1r[k]:
            k2r[(k, k1)] = range(0, m_k - k1 + 1)
    return EnumerationParams(
        species, n_particles, twice_m, parity_min, k0, k_max, sign,
        alpha, gamma, beta, mk, k1r, k2r,
    )


def parametric_count(species: SpinSpecies, n_particles: int, twice_m: int) -> int:
    """Basis size claimed by the closed-form count formulas.

    k_max + 1 for spin 1, sum of m_k for spin 3/2, sum of
    m_k (m_k + 1) / 2 for spin 2, and 1 for the unique spin-1/2 solution.
    The value is reported verbatim even where it disagrees with
    len(enumerate_basis); the CLI flags such disagreements.
    """
    params = enumeration_bounds(species, n_particles, twice_m)
    ts = species.twice_spin
    if ts == 1:
        return 1
    if ts == 2:
        return params.k_max - params.k0 + 1
    if ts == 3:
        return sum(params.mk.values())
    return sum(m * (m + 1) // 2 for m in params.mk.values())


def parametric_basis(
    species: SpinSpecies, n_particles: int, twice_m: int
) -> list[OccupationVector]:
    """Occupation vectors generated by the k/k1/k2 parametrization.

    Index combinations that solve to negative or fractional counts are
    dropped and duplicates collapsed, so the result is a set of realizable
    vectors in canonical order.  It may differ from `enumerate_basis`.
    """
    params = enumeration_bounds(species, n_particles, twice_m)
    ts = species.twice_spin
    n, tm = n_particles, twice_m
    found: set[OccupationVector] = set()

    if ts == 1:
        # unique spin-1/2 solution of n1 + n2 = N, n1 - n2 = 2M
        n1 = (n + tm) // 2
        if 0 <= n1 <= n:
            found.add((n1, n - n1))
    elif ts == 2:
        m = tm // 2
        for k in range(params.k0, params.k_max + 1):
            n0 = params.parity_min + 2 * k
            if (n - n0 + m) % 2 != 0:
                continue
            n1 = (n - n0 + m) // 2
            nm = n - n0 - n1
            if n0 >= 0 and n1 >= 0 and nm >= 0:
                found.add((n1, n0, nm))
    elif ts == 3:
        for k in range(params.k0, params.k_max + 1):
            g = params.gamma[k]
            diff23 = params.sign * g
            for k1 in params.k1_range[k]:
                sum23 = abs(g) - 2 * (k1 - 1)
                if sum23 < abs(diff23) or (sum23 + diff23) % 2 != 0:
                    continue
                n2 = (sum23 + diff23) // 2
                n3 = (sum23 - diff23) // 2
                # remaining pair from the conservation laws:
                # n1 + n4 = N - n2 - n3,  3 n1 + n2 - n3 - 3 n4 = 2M
                rest = n - n2 - n3
                num = tm - (n2 - n3)
                if num % 3 != 0 or (rest + num // 3) % 2 != 0:
                    continue
                n1 = (rest + num // 3) // 2
                n4 = rest - n1
                if min(n1, n2, n3, n4) >= 0:
                    found.add((n1, n2, n3, n4))
    else:
        m = tm // 2
        for k in range(params.k0, params.k_max + 1):
            g = params.gamma[k]
            diff24 = params.sign * g
            n3_base = (1 - (-1) ** k) // 2  # +1 on odd k
            for k1 in params.k1_range[k]:
                sum24 = g + 2 * (k1 - 1)  # printed with gamma, not |gamma|
                if sum24 < abs(diff24) or (sum24 + diff24) % 2 != 0:
                    continue
                n2 = (sum24 + diff24) // 2
                n4 = (sum24 - diff24) // 2
                for k2 in params.k2_range[(k, k1)]:
                    n3 = 2 * (k2 + 1) + n3_base - 2
                    rest = n - n2 - n3 - n4
                    num = m - (n2 - n4)  # = 2 (n1 - n5)
                    if num % 2 != 0 or (rest + num // 2) % 2 != 0:
                        continue
                    n1 = (rest + num // 2) // 2
                    n5 = rest - n1
                    if min(n1, n2, n3, n4, n5) >= 0:
                        found.add((n1, n2, n3, n4, n5))

    return sorted(found, reverse=True)
