import itertools
import random
from fractions import Fraction

import pytest

from intsolve import (
    AffineSolution,
    Feasibility,
    LinearRelation,
    Verdict,
    check_certificate,
    clear_denominators,
    integer_feasibility,
    linear_system,
    nonneg_enumerate,
    parity_obstruction,
    rational_solve,
    relation_implied,
    solved_relations,
)
from lefschetz import build_system
from relations import load_relations, parse_relation


def multiplicities(cfg):
    return {t.label: m for t, m in cfg.multiplicities.items()}


def test_rational_solve_unique():
    solution = rational_solve(build_system(2, 0))
    assert isinstance(solution, AffineSolution)
    assert solution.particular == (Fraction(8),)
    assert solution.homogeneous_basis == ()
    assert solution.rank == 1


def test_rational_solve_with_free_column():
    solution = rational_solve(build_system(4, 0))
    assert solution.rank == 1
    assert solution.pivot_columns == (0,)
    assert solution.free_columns == (1,)
    assert solution.particular == (Fraction(4), Fraction(0))
    assert solution.homogeneous_basis == ((Fraction(-1, 2), Fraction(1)),)


def test_rational_inconsistency():
    sys = linear_system([[1], [1]], [0, 1])
    assert rational_solve(sys) is Verdict.RATIONAL_INCONSISTENT
    assert integer_feasibility(sys).verdict is Verdict.RATIONAL_INCONSISTENT


def test_order_60_rank_and_particular_solution(system_60):
    solution = rational_solve(system_60)
    assert solution.rank == 8
    assert solution.pivot_columns == tuple(range(8))
    assert solution.particular[0] == Fraction(1, 2)


def test_order_60_is_integer_infeasible(system_60):
    result = integer_feasibility(system_60)
    assert result.verdict is Verdict.INTEGER_INFEASIBLE
    assert result.rank == 8
    assert result.witness is None
    assert len(result.certificate) == system_60.row_count
    assert check_certificate(system_60, result.certificate)

    obstruction = parity_obstruction(system_60, result.certificate)
    assert obstruction.constant % obstruction.modulus != 0
    assert all(obstruction.modulus % p for p in range(2, obstruction.modulus))


def test_order_60_obstruction_is_a_small_parity_relation(system_60):
    result = integer_feasibility(system_60)
    obstruction = parity_obstruction(system_60, result.certificate)
    assert obstruction.modulus == 2
    assert obstruction.constant % 2 == 1
    assert max(abs(c) for c in obstruction.coefficients.values()) <= 2


def test_smith_fallback_when_no_reduced_row_certifies():
    # 2x + z = 0 and 2y + z = 1: every reduced row has coefficient gcd 1
    sys = linear_system([[2, 0, 1], [0, 2, 1]], [0, 1])
    result = integer_feasibility(sys)
    assert result.verdict is Verdict.INTEGER_INFEASIBLE
    assert check_certificate(sys, result.certificate)
    assert parity_obstruction(sys, result.certificate).modulus == 2


@pytest.mark.parametrize('order', [2, 3, 4, 5, 38, 44, 48, 50, 54, 66])
def test_realizable_orders_are_feasible(order):
    system = build_system(order, 1)
    result = integer_feasibility(system)
    assert result.verdict is Verdict.FEASIBLE
    assert result.certificate is None
    assert all(isinstance(x, int) for x in result.witness)
    assert not any(system.residual(result.witness))


def test_simple_parity_certificate():
    sys = linear_system([[2]], [3])
    result = integer_feasibility(sys)
    assert result.verdict is Verdict.INTEGER_INFEASIBLE
    assert result.certificate in ((Fraction(1, 2),), (Fraction(-1, 2),))
    obstruction = parity_obstruction(sys, result.certificate)
    assert obstruction.modulus == 2
    assert obstruction.constant % 2 == 1


def test_check_certificate():
    sys = linear_system([[2]], [3])
    assert check_certificate(sys, [Fraction(1, 2)])
    assert not check_certificate(sys, [Fraction(1, 3)])
    assert not check_certificate(sys, [Fraction(1)])
    with pytest.raises(ValueError):
        check_certificate(sys, [Fraction(1, 2), Fraction(0)])


def test_parity_obstruction_rejects_non_certificate():
    with pytest.raises(ValueError):
        parity_obstruction(linear_system([[2]], [3]), [Fraction(1)])


def test_feasibility_requires_matching_evidence():
    with pytest.raises(ValueError):
        Feasibility(Verdict.FEASIBLE)
    with pytest.raises(ValueError):
        Feasibility(Verdict.INTEGER_INFEASIBLE, witness=(0,))


def test_clear_denominators_scales_rows():
    sys = linear_system([[Fraction(1, 2), Fraction(1, 3)], [1, 2]], [Fraction(1, 4), 5])
    A, b = clear_denominators(sys)
    assert A == [[6, 4], [1, 2]]
    assert b == [3, 5]


def test_linear_system_validates_shapes():
    with pytest.raises(ValueError):
        linear_system([[1, 2], [3]], [0, 0])
    with pytest.raises(ValueError):
        linear_system([[1]], [0, 1])
    with pytest.raises(ValueError):
        linear_system([[1]], [0], labels=['a', 'b'])


def test_transcribed_relations_are_implied(system_60):
    relations = load_relations()
    assert len(relations) == 8
    assert all(relation_implied(system_60, rel) for rel in relations)


def test_perturbed_relation_is_not_implied(system_60):
    assert not relation_implied(system_60, parse_relation('4*m_1 = 0'))


def test_relation_with_unknown_label(system_60):
    with pytest.raises(ValueError):
        relation_implied(system_60, LinearRelation({'m_0_1': Fraction(1)}, Fraction(0)))


def test_solved_relations_are_implied(system_60):
    relations = solved_relations(system_60)
    assert len(relations) == 8
    assert [rel.lead for rel in relations] == list(system_60.labels[:8])
    for rel in relations:
        assert all(c.denominator == 1 for c in rel.coefficients.values())
        assert relation_implied(system_60, rel)


def test_solved_relations_of_inconsistent_system():
    assert solved_relations(linear_system([[0]], [1])) == []


@pytest.mark.parametrize('order, expected', [
    (2, {'m_1_1': 8}),
    (3, {'m_1_2': 6}),
])
def test_symplectic_enumeration_is_unique(order, expected):
    configs = nonneg_enumerate(build_system(order, 0), 10)
    assert len(configs) == 1
    assert multiplicities(configs[0]) == expected
    assert configs[0].curve_n is None


def test_order_five_enumeration():
    configs = nonneg_enumerate(build_system(5, 0), 10)
    assert [multiplicities(c) for c in configs] == [{'m_1_4': 2, 'm_2_3': 2}]
    assert configs[0].total_points == 4


def test_order_four_enumeration_is_lexicographic():
    configs = nonneg_enumerate(build_system(4, 0), 8)
    vectors = [(c.as_dict().get('m_1_3', 0), c.as_dict().get('m_2_2', 0)) for c in configs]
    assert vectors == [(0, 8), (1, 6), (2, 4), (3, 2), (4, 0)]


def test_enumeration_bounds():
    assert nonneg_enumerate(build_system(2, 0), 7) == []
    with pytest.raises(ValueError):
        nonneg_enumerate(build_system(2, 0), -1)
    with pytest.raises(ValueError):
        nonneg_enumerate(build_system(6, 1), 4, (1, 0))


def test_order_60_has_no_small_configuration(system_60):
    assert nonneg_enumerate(system_60, 3, (-1, 1)) == []


def _random_system(rng, planted=False):
    rows, cols = rng.randint(1, 4), rng.randint(1, 4)
    denominators = (1, 1, 2, 3)
    matrix = [[Fraction(rng.randint(-5, 5), rng.choice(denominators)) for _ in range(cols)] for _ in range(rows)]
    if planted:
        u0 = [rng.randint(-50, 50) for _ in range(cols)]
        rhs = [sum((a * x for a, x in zip(row, u0)), Fraction(0)) for row in matrix]
    else:
        rhs = [Fraction(rng.randint(-10, 10), rng.choice(denominators)) for _ in range(rows)]
    return linear_system(matrix, rhs)


def _box_solution(sys, bound=50):
    A, b = clear_denominators(sys)
    for u in itertools.product(range(-bound, bound + 1), repeat=len(sys.labels)):
        if all(sum(a * x for a, x in zip(row, u)) == c for row, c in zip(A, b)):
            return u
    return None


def test_verdicts_are_sound_on_random_systems():
    rng = random.Random(12345)
    seen = set()
    for k in range(300):
        planted = k % 3 == 0
        sys = _random_system(rng, planted)
        result = integer_feasibility(sys)
        seen.add(result.verdict)
        if planted:
            assert result.verdict is Verdict.FEASIBLE
        if result.verdict is Verdict.FEASIBLE:
            u = [Fraction(x) for x in result.witness]
            assert [sum((a * x for a, x in zip(row, u)), Fraction(0)) for row in sys.matrix] == list(sys.rhs)
        elif result.verdict is Verdict.INTEGER_INFEASIBLE:
            assert check_certificate(sys, result.certificate)
        else:
            assert rational_solve(sys) is Verdict.RATIONAL_INCONSISTENT
        # exhaustive over [-50, 50]^cols for one and two unknowns
        if len(sys.labels) <= 2 and _box_solution(sys) is not None:
            assert result.verdict is Verdict.FEASIBLE
    assert seen == set(Verdict)


def test_zero_certificate_is_rejected(system_60):
    assert not check_certificate(system_60, [Fraction(0)] * system_60.row_count)


def test_trivial_relation_is_implied(system_60):
    assert relation_implied(system_60, LinearRelation({}, Fraction(0)))
    assert not relation_implied(system_60, LinearRelation({}, Fraction(1)))


def test_inconsistent_row():
    assert rational_solve(linear_system([[0]], [1])) is Verdict.RATIONAL_INCONSISTENT
