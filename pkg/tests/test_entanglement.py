import random
from math import sqrt

import pytest

from dicke import (
    SPIN_ONE,
    SPIN_TWO,
    DomainError,
    brute_force_rdm,
    density_of,
    dicke_expansion,
    dicke_two_particle_rdm,
    equal_probability_expansion,
    highest_weight,
    named_two_qutrit_state,
    negativity,
    negativity_sweep,
    partial_transpose,
    schmidt_negativity,
)
from dicke.antisym import symmetric_two_particle_state
from dicke.entanglement import (
    PT_BASIS,
    PT_PERMUTATION,
    RHO_BASIS,
    TwoQuditDensity,
    a2_population_form,
    block_negativity,
    has_pair_reduction_block_structure,
    random_pure_state,
    reorder_to_pt_basis,
    sweep_shape_violations,
    two_body_elements,
)

POINT_TOLERANCE = 5e-4


def mixed_state(rng, n_pure=3):
    """Random PSD trace-1 matrix: a convex mixture of random pure states."""
    weights = [rng.random() for _ in range(n_pure)]
    total = sum(weights)
    entries = [[0.0] * 9 for _ in range(9)]
    for w in weights:
        vec = random_pure_state(rng)
        for i in range(9):
            for j in range(9):
                entries[i][j] += (w / total) * vec[i] * vec[j]
    rho = TwoQuditDensity(3, tuple(tuple(row) for row in entries))
    rho.validate()
    return rho


def test_basis_permutation_table_is_consistent():
    assert sorted(PT_PERMUTATION) == list(range(9))
    for i, pair in enumerate(PT_BASIS):
        assert RHO_BASIS[PT_PERMUTATION[i]] == pair


def test_named_state_bg():
    vec = named_two_qutrit_state("bg")
    amps = dict(zip(RHO_BASIS, vec))
    for pair in ((2, 2), (0, 0), (-2, -2)):
        assert amps[pair] == pytest.approx(1 / sqrt(3), abs=1e-15)
    assert sum(a * a for a in vec) == pytest.approx(1.0, abs=1e-12)


def test_named_state_psi1_with_trivial_parameters():
    vec = named_two_qutrit_state("psi1", (1.0, 0.0))
    amps = dict(zip(RHO_BASIS, vec))
    assert amps[(2, 2)] == pytest.approx(1 / sqrt(3), abs=1e-12)
    assert amps[(2, -2)] == pytest.approx(1 / sqrt(6), abs=1e-12)
    assert amps[(-2, 2)] == pytest.approx(1 / sqrt(6), abs=1e-12)
    assert amps[(0, 0)] == 0.0


def test_named_state_psie_is_psi1_at_the_coherent_point():
    assert named_two_qutrit_state("psie") == named_two_qutrit_state(
        "psi1", (sqrt(1 / 3), sqrt(2 / 3))
    )


def test_psi1_constraint_enforced():
    with pytest.raises(DomainError):
        named_two_qutrit_state("psi1", (1.0, 1.0))
    with pytest.raises(DomainError):
        named_two_qutrit_state("psi1", (1.0,))
    with pytest.raises(DomainError):
        named_two_qutrit_state("nope")


def test_partial_transpose_leaves_diagonal_matrices_alone():
    entries = [[0.0] * 9 for _ in range(9)]
    for i, w in enumerate((0.3, 0.2, 0.1, 0.1, 0.05, 0.05, 0.05, 0.1, 0.05)):
        entries[i][i] = w
    rho = TwoQuditDensity(3, tuple(tuple(r) for r in entries))
    assert partial_transpose(rho) == rho.matrix()


def test_partial_transpose_is_an_involution():
    rng = random.Random(42)
    for _ in range(20):
        rho = mixed_state(rng)
        once = partial_transpose(rho)
        twice = partial_transpose(
            TwoQuditDensity(3, tuple(tuple(row) for row in once))
        )
        assert max(
            abs(twice[i][j] - rho.entries[i][j]) for i in range(9) for j in range(9)
        ) < 1e-14


def test_partial_transpose_preserves_trace_and_symmetry():
    rng = random.Random(43)
    for _ in range(20):
        rho = mixed_state(rng)
        pt = partial_transpose(rho)
        assert sum(pt[i][i] for i in range(9)) == pytest.approx(1.0, abs=1e-12)
        for i in range(9):
            for j in range(9):
                assert pt[i][j] == pytest.approx(pt[j][i], abs=1e-12)


@pytest.mark.parametrize(
    "name,expected",
    [
        ("bg", 1.0),
        ("psie", 0.8221),
        ("psi2", 0.9571),
        ("bsplus", 1.0),
        ("bsminus", 1.0),
    ],
)
def test_negativity_point_values(name, expected):
    vec = named_two_qutrit_state(name)
    report = negativity(density_of(vec))
    assert report.value == pytest.approx(expected, abs=POINT_TOLERANCE)
    assert schmidt_negativity(vec) == pytest.approx(report.value, abs=1e-10)


def test_negativity_of_the_two_particle_m0_dicke_state():
    state = symmetric_two_particle_state(dicke_expansion(SPIN_ONE, 2, 0))
    vec = [0.0] * 9
    for assignment, amp in state.terms:
        vec[RHO_BASIS.index(assignment)] = amp
    report = negativity(density_of(tuple(vec)))
    assert report.value == pytest.approx(0.8333, abs=POINT_TOLERANCE)


def test_product_state_has_zero_negativity():
    vec = [0.0] * 9
    vec[RHO_BASIS.index((2, 2))] = 1.0
    report = negativity(density_of(tuple(vec)))
    assert report.value <= 1e-12
    assert schmidt_negativity(tuple(vec)) <= 1e-12


def test_negativity_report_value_is_sum_of_negatives():
    rng = random.Random(5)
    for _ in range(10):
        rho = density_of(random_pure_state(rng))
        report = negativity(rho)
        assert report.value == -sum(report.negative_eigenvalues)
        assert all(e < 0 for e in report.negative_eigenvalues)


def test_schmidt_oracle_agrees_on_random_pure_states():
    rng = random.Random(20240818)
    for _ in range(1000):
        vec = random_pure_state(rng)
        direct = negativity(density_of(vec)).value
        oracle = schmidt_negativity(vec)
        assert abs(direct - oracle) <= 1e-10


def test_rdm_of_the_top_state_is_a_pure_population():
    rho = dicke_two_particle_rdm(highest_weight(SPIN_ONE, 7))
    uu = RHO_BASIS.index((2, 2))
    for i in range(9):
        for j in range(9):
            expected = 1.0 if i == j == uu else 0.0
            assert rho.entries[i][j] == pytest.approx(expected, abs=1e-14)


def test_rdm_of_n2_equals_the_pure_projector():
    expansion = dicke_expansion(SPIN_ONE, 2, 0)
    rho = dicke_two_particle_rdm(expansion)
    state = symmetric_two_particle_state(expansion)
    vec = [0.0] * 9
    for assignment, amp in state.terms:
        vec[RHO_BASIS.index(assignment)] = amp
    projector = density_of(tuple(vec))
    assert max(
        abs(rho.entries[i][j] - projector.entries[i][j])
        for i in range(9)
        for j in range(9)
    ) <= 1e-12


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_rdm_matches_brute_force_for_all_m(n):
    for tm in range(-2 * n, 2 * n + 1, 2):
        for build in (dicke_expansion, equal_probability_expansion):
            expansion = build(SPIN_ONE, n, tm)
            fast = dicke_two_particle_rdm(expansion)
            slow = brute_force_rdm(expansion)
            assert max(
                abs(fast.entries[i][j] - slow.entries[i][j])
                for i in range(9)
                for j in range(9)
            ) <= 1e-10


def test_brute_force_rdm_rejects_large_systems():
    with pytest.raises(DomainError):
        brute_force_rdm(dicke_expansion(SPIN_ONE, 7, 0))


def test_rdm_requires_spin_one():
    with pytest.raises(DomainError):
        dicke_two_particle_rdm(dicke_expansion(SPIN_TWO, 4, 0))


def test_block_structure_and_symmetries_of_the_rdm():
    for n in (4, 9, 16):
        for tm in (0, 2, 2 * (n // 2)):
            expansion = dicke_expansion(SPIN_ONE, n, tm)
            rho = dicke_two_particle_rdm(expansion)
            assert has_pair_reduction_block_structure(rho, tol=1e-12)
            e = two_body_elements(expansion)
            assert e["a4"] == e["a5"]
            assert e["a6"] == e["a7"]
            assert e["c1"] == e["c2"]
            assert abs(e["a2"] - a2_population_form(expansion)) <= 1e-12
            trace = sum(rho.entries[i][i] for i in range(9))
            assert trace == pytest.approx(1.0, abs=1e-12)


def test_pt_block_pattern_in_the_reordered_basis():
    rho = dicke_two_particle_rdm(dicke_expansion(SPIN_ONE, 6, 2))
    pt = reorder_to_pt_basis(partial_transpose(rho))
    blocks = ((0, 1, 2), (3, 4), (5, 6), (7,), (8,))
    member = {i: g for g, idxs in enumerate(blocks) for i in idxs}
    for i in range(9):
        for j in range(9):
            if member[i] != member[j]:
                assert abs(pt[i][j]) <= 1e-12


def test_block_negativity_agrees_with_full_diagonalization():
    for n in (3, 8, 20):
        for tm in range(0, 2 * n + 1, 4):
            rho = dicke_two_particle_rdm(dicke_expansion(SPIN_ONE, n, tm))
            full = negativity(rho)
            blocked = block_negativity(rho)
            assert blocked.value == pytest.approx(full.value, abs=1e-12)
            assert full.block_decomposition is not None
            labels = [label for label, _ in blocked.block_decomposition]
            assert labels == ["T1", "T2", "T3", "a1", "a3"]


def test_block_negativity_rejects_generic_matrices():
    rng = random.Random(11)
    vec = random_pure_state(rng)
    with pytest.raises(DomainError):
        block_negativity(density_of(vec))


def test_equal_probability_expansion_examples():
    uniform = equal_probability_expansion(SPIN_ONE, 10, 0)
    assert len(uniform.terms) == 6
    for _, amp in uniform.terms:
        assert amp == pytest.approx(1 / sqrt(6), abs=1e-15)
    single = equal_probability_expansion(SPIN_ONE, 2, 4)
    assert single.terms == dicke_expansion(SPIN_ONE, 2, 4).terms
    wide = equal_probability_expansion(SPIN_ONE, 30, 0)
    assert len(wide.terms) == 16
    with pytest.raises(DomainError):
        equal_probability_expansion(SPIN_TWO, 4, 0)


def test_sweep_shapes_for_n20():
    rows = negativity_sweep("dicke", 20)
    assert rows[0][0] == 0
    assert rows[-1][1] == pytest.approx(0.0, abs=1e-12)
    values = [v for _, v in rows]
    # strictly decreasing away from M = 0
    assert all(a > b for a, b in zip(values, values[1:]))
    assert sweep_shape_violations(rows) == []


def test_equal_beats_dicke_at_m0():
    for n in (30, 80):
        dicke_value = negativity_sweep("dicke", n, [0])[0][1]
        equal_value = negativity_sweep("equal", n, [0])[0][1]
        assert equal_value > dicke_value


def test_sweep_shape_violation_detector():
    assert sweep_shape_violations([(0, 0.1), (2, 0.2)]) != []
    assert sweep_shape_violations([(0, 0.2), (2, 0.1)]) == []
    with pytest.raises(DomainError):
        negativity_sweep("bogus", 10)
