"""Two-qudit negativity for spin-1 pairs and pair reductions of symmetric
many-particle states.

The 9-dimensional product basis is pinned, in this order, to

    ud, 00, du, u0, 0u, 0d, d0, uu, dd        (u, 0, d: the m = +1, 0, -1 levels)

for density matrices, and to the reordering

    uu, 00, dd, u0, 0d, 0u, d0, ud, du

after the partial transpose, where the pair reduction of any fixed-M
symmetric state becomes literally block diagonal: one 3x3 block, two 2x2
blocks and two scalars.  `PT_PERMUTATION` maps between the two orders.

Negativity is always evaluated on the full 9x9 partial transpose; the block
path is an optimization that is validated against it, never trusted alone.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations
from math import factorial, sqrt

from .basis import enumerate_basis
from .coefficients import DickeExpansion, dicke_expansion
from .linalg import Matrix, symmetric_eigenvalues
from .species import SPIN_ONE, DomainError, SpinSpecies

LevelPair = tuple[int, int]  # (twice-m of particle 1, twice-m of particle 2)

#: density-matrix basis order
RHO_BASIS: tuple[LevelPair, ...] = (
    (2, -2), (0, 0), (-2, 2),
    (2, 0), (0, 2), (0, -2), (-2, 0),
    (2, 2), (-2, -2),
)
#: basis order in which the partial transpose is block diagonal
PT_BASIS: tuple[LevelPair, ...] = (
    (2, 2), (0, 0), (-2, -2),
    (2, 0), (0, -2), (0, 2), (-2, 0),
    (2, -2), (-2, 2),
)
#: PT_BASIS[i] == RHO_BASIS[PT_PERMUTATION[i]]
PT_PERMUTATION: tuple[int, ...] = tuple(RHO_BASIS.index(p) for p in PT_BASIS)

_INDEX = {pair: i for i, pair in enumerate(RHO_BASIS)}

#: index blocks of the partially transposed matrix, in PT_BASIS order
PT_BLOCKS: tuple[tuple[str, tuple[int, ...]], ...] = (
    ("T1", (0, 1, 2)),
    ("T2", (3, 4)),
    ("T3", (5, 6)),
    ("a1", (7,)),
    ("a3", (8,)),
)

StateVector = tuple[float, ...]  # 9 real amplitudes in RHO_BASIS order


@dataclass(frozen=True)
class TwoQuditDensity:
    """Real symmetric trace-1 matrix on the pinned two-qutrit basis."""

    dim: int
    entries: tuple[tuple[float, ...], ...]
    basis_order: tuple[LevelPair, ...] = RHO_BASIS

    def matrix(self) -> Matrix:
        return [list(row) for row in self.entries]

    def validate(self, psd_tol: float = 1e-10, tol: float = 1e-12) -> None:
        m = self.matrix()
        trace = sum(m[i][i] for i in range(len(m)))
        if abs(trace - 1.0) > tol:
            raise DomainError(f"trace is {trace!r}, not 1")
        for i in range(len(m)):
            for j in range(i + 1, len(m)):
                if abs(m[i][j] - m[j][i]) > tol:
                    raise DomainError("density matrix is not symmetric")
        if min(symmetric_eigenvalues(m)) < -psd_tol:
            raise DomainError("density matrix is not positive semidefinite")


@dataclass(frozen=True)
class NegativityReport:
    """Sum of |negative eigenvalues| of the partial transpose, with the
    eigenvalues themselves and (when the block path applies) the block
    label each negative eigenvalue came from."""

    value: float
    negative_eigenvalues: tuple[float, ...]
    block_decomposition: tuple[tuple[str, tuple[float, ...]], ...] | None = None


def _as_density(entries: Matrix) -> TwoQuditDensity:
    rho = TwoQuditDensity(3, tuple(tuple(row) for row in entries))
    rho.validate()
    return rho


def density_of(state: StateVector) -> TwoQuditDensity:
    """Projector onto a normalized pure two-qutrit state."""
    norm_sq = sum(a * a for a in state)
    if abs(norm_sq - 1.0) > 1e-10:
        raise DomainError(f"state vector norm^2 is {norm_sq!r}, not 1")
    return _as_density([[a * b for b in state] for a in state])


def named_two_qutrit_state(name: str, params: tuple[float, ...] = ()) -> StateVector:
    """Pure two-qutrit benchmark states addressed by short names.

    bg        (uu + 00 + dd)/sqrt(3), the maximally entangled pair
    psi1      [uu + c1 (ud + du)/sqrt(2) + c2 00 + dd]/sqrt(3),
              params (c1, c2) with c1^2 + c2^2 = 1
    psie      psi1 at c1 = sqrt(1/3), c2 = sqrt(2/3)
    psi2      (ud + du)/2 + 00/sqrt(2)
    bsplus    (ud + du + 00)/sqrt(3)
    bsminus   (ud + du - 00)/sqrt(3)
    """
    vec = [0.0] * 9

    def put(pair: LevelPair, amp: float) -> None:
        vec[_INDEX[pair]] = amp

    if name == "bg":
        for pair in ((2, 2), (0, 0), (-2, -2)):
            put(pair, 1.0 / sqrt(3.0))
    elif name in ("psi1", "psie"):
        if name == "psie":
            params = (sqrt(1.0 / 3.0), sqrt(2.0 / 3.0))
        if len(params) != 2:
            raise DomainError("psi1 needs parameters c1,c2")
        c1, c2 = params
        if abs(c1 * c1 + c2 * c2 - 1.0) > 1e-10:
            raise DomainError(f"c1^2 + c2^2 = {c1 * c1 + c2 * c2!r}, not 1")
        root3 = sqrt(3.0)
        put((2, 2), 1.0 / root3)
        put((-2, -2), 1.0 / root3)
        put((2, -2), c1 / (root3 * sqrt(2.0)))
        put((-2, 2), c1 / (root3 * sqrt(2.0)))
        put((0, 0), c2 / root3)
    elif name == "psi2":
        put((2, -2), 0.5)
        put((-2, 2), 0.5)
        put((0, 0), 1.0 / sqrt(2.0))
    elif name in ("bsplus", "bsminus"):
        s = 1.0 if name == "bsplus" else -1.0
        put((2, -2), 1.0 / sqrt(3.0))
        put((-2, 2), 1.0 / sqrt(3.0))
        put((0, 0), s / sqrt(3.0))
    else:
        raise DomainError(f"unknown state name {name!r}")
    return tuple(vec)


def partial_transpose(rho: TwoQuditDensity) -> Matrix:
    """Transpose on the second factor: <ab|rho^T|a'b'> = <ab'|rho|a'b>.

    Input and output are both indexed in RHO_BASIS order.
    """
    m = rho.matrix()
    out = [[0.0] * 9 for _ in range(9)]
    for i, (a, b) in enumerate(RHO_BASIS):
        for j, (ap, bp) in enumerate(RHO_BASIS):
            out[_INDEX[(a, bp)]][_INDEX[(ap, b)]] = m[i][j]
    return out


def reorder_to_pt_basis(matrix: Matrix) -> Matrix:
    """Permute a RHO_BASIS-indexed matrix into PT_BASIS order."""
    return [
        [matrix[PT_PERMUTATION[i]][PT_PERMUTATION[j]] for j in range(9)]
        for i in range(9)
    ]


def negativity(rho: TwoQuditDensity) -> NegativityReport:
    """Sum of absolute values of negative partial-transpose eigenvalues.

    Always computed from the full 9x9 diagonalization.  When the matrix has
    the symmetric-reduction block pattern, the per-block origin of each
    negative eigenvalue is attached as provenance.
    """
    eigenvalues = symmetric_eigenvalues(partial_transpose(rho))
    negatives = tuple(e for e in eigenvalues if e < 0.0)
    blocks = None
    if has_pair_reduction_block_structure(rho):
        blocks = _pt_block_eigenvalues(rho)
    return NegativityReport(-sum(negatives), negatives, blocks)


def has_pair_reduction_block_structure(
    rho: TwoQuditDensity, tol: float = 1e-12
) -> bool:
    """True when all entries outside the fixed-M pair-reduction blocks vanish.

    In RHO_BASIS order those blocks are {0,1,2}, {3,4}, {5,6}, {7}, {8}.
    """
    groups = ((0, 1, 2), (3, 4), (5, 6), (7,), (8,))
    member = {}
    for g, idxs in enumerate(groups):
        for i in idxs:
            member[i] = g
    m = rho.matrix()
    return all(
        abs(m[i][j]) <= tol
        for i in range(9)
        for j in range(9)
        if member[i] != member[j]
    )


def _pt_block_eigenvalues(
    rho: TwoQuditDensity,
) -> tuple[tuple[str, tuple[float, ...]], ...]:
    pt = reorder_to_pt_basis(partial_transpose(rho))
    out = []
    for label, idxs in PT_BLOCKS:
        sub = [[pt[i][j] for j in idxs] for i in idxs]
        out.append((label, tuple(symmetric_eigenvalues(sub))))
    return tuple(out)


def block_negativity(rho: TwoQuditDensity) -> NegativityReport:
    """Negativity via the block decomposition of the partial transpose.

    Valid only for pair reductions of fixed-M symmetric states; cross-checked
    against the full diagonalization in the test suite.
    """
    if not has_pair_reduction_block_structure(rho):
        raise DomainError("matrix does not have the pair-reduction block pattern")
    blocks = _pt_block_eigenvalues(rho)
    negatives = tuple(
        e for _, eigenvalues in blocks for e in eigenvalues if e < 0.0
    )
    return NegativityReport(-sum(negatives), negatives, blocks)


def schmidt_negativity(state: StateVector) -> float:
    """Pure-state oracle: negativity = sum_{i<j} s_i s_j over Schmidt
    coefficients, read off the singular values of the 3x3 amplitude matrix.

    Independent of the partial-transpose code path.
    """
    levels = (2, 0, -2)
    amp = [
        [state[_INDEX[(a, b)]] for b in levels]
        for a in levels
    ]
    gram = [
        [sum(amp[k][i] * amp[k][j] for k in range(3)) for j in range(3)]
        for i in range(3)
    ]
    singular = [sqrt(max(e, 0.0)) for e in symmetric_eigenvalues(gram)]
    total = sum(singular)
    return (total * total - sum(s * s for s in singular)) / 2.0


# -- pair reductions of many-particle symmetric states ------------------------


def _require_spin_one(x: DickeExpansion) -> None:
    if x.species != SPIN_ONE:
        raise DomainError("pair reductions are implemented for spin 1 only")


def two_body_elements(x: DickeExpansion) -> dict[str, float]:
    """The 13 independent pair-reduction matrix elements of a fixed-M
    spin-1 symmetric state, from its occupation statistics.

    Keys a1..a9, b1..b3, c1, c2 name the entries of the blocks: a1, a2, a3
    and the coherences c1, c2, b3 fill the 3x3 block on (ud, 00, du); a4,
    a5, b1 the 2x2 block on (u0, 0u); a6, a7, b2 the 2x2 block on (0d, d0);
    a8 and a9 are the uu and dd populations.  a1 is fixed by the ud <-> du
    exchange symmetry of permutation-symmetric states; trace closure is
    checked downstream.
    """
    _require_spin_one(x)
    n = x.n_particles
    if n < 2:
        raise DomainError("pair reduction needs at least two particles")
    den = float(n * (n - 1))
    m = x.twice_m / 2.0
    terms = x.as_dict()

    def moment(f) -> float:
        return sum(a * a * f(*occ) for occ, a in terms.items())

    pop_out_of_zero = moment(lambda n1, n0, nm: (n - n0) / n)
    cross_pairs = moment(lambda n1, n0, nm: n1 * nm)
    up_pairs = moment(lambda n1, n0, nm: n1 * (n1 - 1))
    down_pairs = moment(lambda n1, n0, nm: nm * (nm - 1))

    a2 = 1.0 - 2.0 * pop_out_of_zero + 2.0 / den * (
        cross_pairs + 0.5 * (up_pairs + down_pairs)
    )
    a3 = cross_pairs / den
    a4 = 0.5 * pop_out_of_zero + m / (2.0 * n) - (cross_pairs + up_pairs) / den
    a6 = 0.5 * pop_out_of_zero - m / (2.0 * n) - (cross_pairs + down_pairs) / den
    a8 = up_pairs / den
    a9 = down_pairs / den
    b1 = moment(lambda n1, n0, nm: n0 * n1) / den
    b2 = moment(lambda n1, n0, nm: n0 * nm) / den

    # coherence between 00 and ud/du: pairs (n1, n0, nm) with
    # (n1 + 1, n0 - 2, nm + 1), weighted by the bosonic matrix element
    c = 0.0
    for (n1, n0, nm), amp in terms.items():
        partner = (n1 + 1, n0 - 2, nm + 1)
        if n0 >= 2 and partner in terms:
            c += amp * terms[partner] * sqrt(
                n0 * (n0 - 1) * (n1 + 1) * (nm + 1)
            )
    c /= den

    return {
        "a1": a3, "a2": a2, "a3": a3, "a4": a4, "a5": a4, "a6": a6,
        "a7": a6, "a8": a8, "a9": a9, "b1": b1, "b2": b2, "b3": a3,
        "c1": c, "c2": c,
    }


def a2_population_form(x: DickeExpansion) -> float:
    """The 00-pair population written directly as E[n0 (n0 - 1)] / N(N-1).

    Algebraically identical to the a2 returned by `two_body_elements`; both
    forms are kept and their agreement is asserted in the tests rather than
    silently substituting one for the other.
    """
    _require_spin_one(x)
    n = x.n_particles
    return sum(a * a * occ[1] * (occ[1] - 1) for occ, a in x.terms) / float(
        n * (n - 1)
    )


def dicke_two_particle_rdm(x: DickeExpansion) -> TwoQuditDensity:
    """Two-particle reduced density matrix of a fixed-M spin-1 symmetric
    state, assembled from `two_body_elements` in RHO_BASIS order."""
    e = two_body_elements(x)
    rho = [[0.0] * 9 for _ in range(9)]
    upper = {
        (0, 0): "a1", (0, 1): "c1", (0, 2): "b3",
        (1, 1): "a2", (1, 2): "c2", (2, 2): "a3",
        (3, 3): "a4", (3, 4): "b1", (4, 4): "a5",
        (5, 5): "a6", (5, 6): "b2", (6, 6): "a7",
        (7, 7): "a8", (8, 8): "a9",
    }
    for (i, j), key in upper.items():
        rho[i][j] = rho[j][i] = e[key]
    return _as_density(rho)


def brute_force_rdm(x: DickeExpansion) -> TwoQuditDensity:
    """Oracle pair reduction: expand the symmetric state into the full
    3^N tensor space and trace out all but two particles.

    Exponential in N; limited to N <= 6.  Shares no code with
    `two_body_elements`.
    """
    _require_spin_one(x)
    n = x.n_particles
    if n > 6:
        raise DomainError(f"brute-force reduction is limited to N <= 6, got {n}")
    if n < 2:
        raise DomainError("pair reduction needs at least two particles")
    levels = x.species.twice_levels

    amplitudes: dict[tuple[int, ...], float] = {}
    for occ, amp in x.terms:
        letters = [tm for tm, count in zip(levels, occ) for _ in range(count)]
        multiplicity = factorial(n)
        for count in occ:
            multiplicity //= factorial(count)
        weight = amp / sqrt(multiplicity)
        for arrangement in set(permutations(letters)):
            amplitudes[arrangement] = amplitudes.get(arrangement, 0.0) + weight

    rho = [[0.0] * 9 for _ in range(9)]
    groups: dict[tuple[int, ...], dict[LevelPair, float]] = {}
    for arrangement, amp in amplitudes.items():
        rest = arrangement[2:]
        groups.setdefault(rest, {})[arrangement[:2]] = amp
    for vec in groups.values():
        for pair_i, ai in vec.items():
            for pair_j, aj in vec.items():
                rho[_INDEX[pair_i]][_INDEX[pair_j]] += ai * aj
    return _as_density(rho)


def equal_probability_expansion(
    species: SpinSpecies, n_particles: int, twice_m: int
) -> DickeExpansion:
    """Uniform-amplitude superposition over the whole fixed-M occupation
    basis (spin 1); the comparison family for the Dicke states."""
    if species != SPIN_ONE:
        raise DomainError("equal-probability states are defined for spin 1 only")
    basis = enumerate_basis(species, n_particles, twice_m)
    amp = 1.0 / sqrt(len(basis))
    return DickeExpansion(
        species,
        n_particles,
        species.twice_spin * n_particles,
        twice_m,
        tuple((occ, amp) for occ in basis),
    )


SWEEP_FAMILIES = ("dicke", "equal")


def negativity_sweep(
    family: str,
    n_particles: int,
    twice_m_values: list[int] | None = None,
) -> list[tuple[int, float]]:
    """Pair negativity of a spin-1 state family over a range of M.

    Returns (2M, negativity) rows in ascending M order; the default range
    is M = 0 .. J.
    """
    if family not in SWEEP_FAMILIES:
        raise DomainError(f"unknown state family {family!r}")
    if twice_m_values is None:
        twice_m_values = list(range(0, 2 * n_particles + 1, 2))
    build = dicke_expansion if family == "dicke" else equal_probability_expansion
    rows = []
    for tm in sorted(twice_m_values):
        state = build(SPIN_ONE, n_particles, tm)
        rows.append((tm, negativity(dicke_two_particle_rdm(state)).value))
    return rows


def sweep_shape_violations(rows: list[tuple[int, float]]) -> list[str]:
    """Shape checks for a single-family sweep over M >= 0: the negativity
    must peak at M = 0 and never increase with |M|."""
    ordered = sorted(rows)
    problems = []
    values = [v for _, v in ordered]
    if values and max(values) > values[0] + 1e-12:
        problems.append("negativity is not maximal at M=0")
    for (tm_a, v_a), (tm_b, v_b) in zip(ordered, ordered[1:]):
        if v_b > v_a + 1e-12:
            problems.append(
                f"negativity increases from 2M={tm_a} to 2M={tm_b}"
            )
    return problems


def random_pure_state(rng: random.Random) -> StateVector:
    """Normalized real 9-component state, for randomized property tests."""
    raw = [rng.gauss(0.0, 1.0) for _ in range(9)]
    norm = sqrt(sum(a * a for a in raw))
    return tuple(a / norm for a in raw)
