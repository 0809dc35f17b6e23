from fractions import Fraction
from math import sqrt

import pytest

from dicke import (
    ALL_SPECIES,
    SPIN_HALF,
    SPIN_ONE,
    SPIN_THREE_HALVES,
    SPIN_TWO,
    DickeExpansion,
    DomainError,
    apply_lowering,
    apply_raising,
    dicke_expansion,
    enumerate_basis,
    highest_weight,
    oracle_expansion,
    total_spin_expectation,
)
from dicke.coefficients import exact_coefficient_squares
from dicke.ladder import RawExpansion, oracle_squares_exact


def test_highest_weight_states():
    assert highest_weight(SPIN_TWO, 5).terms == (((5, 0, 0, 0, 0), 1.0),)
    assert highest_weight(SPIN_HALF, 3).terms == (((3, 0), 1.0),)
    assert highest_weight(SPIN_ONE, 1).terms == (((1, 0, 0), 1.0),)


def test_single_lowering_from_the_top_spin2():
    lowered = apply_lowering(highest_weight(SPIN_TWO, 5))
    assert set(lowered.terms) == {(4, 1, 0, 0, 0)}
    assert lowered.terms[(4, 1, 0, 0, 0)] == pytest.approx(2 * sqrt(5), abs=1e-12)


def test_lowering_annihilates_the_bottom_state():
    bottom = RawExpansion(SPIN_ONE, 4, {(0, 0, 4): 1.0})
    assert apply_lowering(bottom).terms == {}


def test_twice_lowered_spin1_matches_reference_column():
    state = apply_lowering(apply_lowering(highest_weight(SPIN_ONE, 10)))
    norm = sqrt(sum(a * a for a in state.terms.values()))
    amps = {occ: a / norm for occ, a in state.terms.items()}
    assert amps[(9, 0, 1)] == pytest.approx(0.2294, abs=5e-5)
    assert amps[(8, 2, 0)] == pytest.approx(0.9733, abs=5e-5)


def test_raising_annihilates_the_top_state():
    assert apply_raising(highest_weight(SPIN_TWO, 5)).terms == {}


def test_raise_after_lower_scales_by_twice_j():
    for species in ALL_SPECIES:
        n = 5
        top = highest_weight(species, n)
        back = apply_raising(apply_lowering(top))
        occ = (n,) + (0,) * species.twice_spin
        assert set(back.terms) == {occ}
        assert back.terms[occ] == pytest.approx(species.twice_spin * n, abs=1e-9)


def test_raising_reference_m0_reproduces_m1_column():
    m0 = dicke_expansion(SPIN_ONE, 10, 0)
    raised = apply_raising(m0)
    norm = sqrt(sum(a * a for a in raised.terms.values()))
    m1 = dicke_expansion(SPIN_ONE, 10, 2).as_dict()
    for occ, amp in raised.terms.items():
        assert amp / norm == pytest.approx(m1[occ], abs=1e-10)


def test_oracle_worked_example_spin1():
    oracle = oracle_expansion(SPIN_ONE, 10, -2)
    assert oracle.amplitude((4, 1, 5)) == pytest.approx(0.1225, abs=5e-5)
    assert oracle.amplitude((3, 3, 4)) == pytest.approx(0.4473, abs=5e-5)
    assert oracle.amplitude((0, 9, 1)) == pytest.approx(0.1746, abs=5e-5)


def test_oracle_spin2_n5_m8():
    oracle = oracle_expansion(SPIN_TWO, 5, 16)
    assert oracle.amplitude((4, 0, 1, 0, 0)) == pytest.approx(0.3974, abs=5e-5)
    assert oracle.amplitude((3, 2, 0, 0, 0)) == pytest.approx(0.9177, abs=5e-5)


def test_oracle_spin_half_coefficient_is_exactly_one():
    for n in (1, 7, 20):
        for tm in range(-n, n + 1, 2):
            oracle = oracle_expansion(SPIN_HALF, n, tm)
            assert len(oracle.terms) == 1
            assert oracle.terms[0][1] == 1.0


def test_total_spin_expectation_on_generated_states():
    assert total_spin_expectation(highest_weight(SPIN_ONE, 10)) == pytest.approx(
        110.0, abs=1e-8
    )
    assert total_spin_expectation(
        oracle_expansion(SPIN_THREE_HALVES, 6, 0)
    ) == pytest.approx(90.0, abs=1e-8)


def test_total_spin_expectation_flags_perturbed_states():
    state = oracle_expansion(SPIN_ONE, 6, 2)
    terms = dict(state.terms)
    occ = next(iter(terms))
    terms[occ] += 0.05
    norm = sqrt(sum(a * a for a in terms.values()))
    perturbed = DickeExpansion(
        SPIN_ONE, 6, 12, 2,
        tuple((o, a / norm) for o, a in terms.items()),
    )
    expected = 6 * 7.0  # sN (sN + 1)
    assert abs(total_spin_expectation(perturbed) - expected) > 1e-3


def test_oracle_support_equals_enumerated_basis():
    for species in ALL_SPECIES:
        for n in range(1, 9):
            tj = species.twice_spin * n
            for tm in range(-tj, tj + 1, 2):
                oracle = oracle_expansion(species, n, tm)
                assert set(oracle.as_dict()) == set(
                    enumerate_basis(species, n, tm)
                )


def test_oracle_matches_closed_form_to_1e10():
    for species in ALL_SPECIES:
        for n in range(1, 9):
            tj = species.twice_spin * n
            for tm in range(-tj, tj + 1, 2):
                closed = dicke_expansion(species, n, tm).as_dict()
                oracle = oracle_expansion(species, n, tm).as_dict()
                assert max(
                    abs(closed[occ] - oracle[occ]) for occ in closed
                ) <= 1e-10


def test_lowering_chain_is_self_consistent():
    for species in ALL_SPECIES:
        n = 6
        tj = species.twice_spin * n
        for tm in range(tj, -tj + 1, -2):
            lowered = apply_lowering(dicke_expansion(species, n, tm))
            norm = sqrt(sum(a * a for a in lowered.terms.values()))
            target = dicke_expansion(species, n, tm - 2).as_dict()
            for occ, amp in lowered.terms.items():
                assert amp / norm == pytest.approx(target[occ], abs=1e-10)


def test_oracle_domain_error():
    with pytest.raises(DomainError):
        oracle_expansion(SPIN_ONE, 5, 12)


def test_exact_mode_certifies_the_closed_form():
    for species in ALL_SPECIES:
        for n in (2, 4):
            tj = species.twice_spin * n
            for tm in range(-tj, tj + 1, 2):
                assert oracle_squares_exact(
                    species, n, tm
                ) == exact_coefficient_squares(species, n, tm)


def test_exact_mode_squares_sum_to_one():
    squares = oracle_squares_exact(SPIN_TWO, 5, 2)
    assert sum(squares.values()) == Fraction(1)
