"""Descartes quadruples: the validated matrix identity, fourth-disk
solutions, and reflection."""

import math
import random
from fractions import Fraction

import pytest

from apollonian.descartes import (
    InvalidQuadruple,
    NotRepresentable,
    NotTangentEnough,
    Quadruple,
    descartes_scalar_ok,
    extended_ok,
    extended_residual,
    fourth_curvatures,
    reflect_fourth,
    solve_fourth_float,
)
from apollonian.disks import DiskSymbol, norm_ok
from apollonian.field import FieldElement, ONE, PHI, TAU, ZERO

TWO = FieldElement(2)
HALF = FieldElement(Fraction(1, 2))

WINDOW = Quadruple(
    (
        DiskSymbol(ZERO, ZERO, -ONE, ONE),
        DiskSymbol(ONE, ZERO, TWO, ZERO),
        DiskSymbol(-ONE, ZERO, TWO, ZERO),
        DiskSymbol(ZERO, TWO, FieldElement(3), ONE),
    )
)


def float_quadruple(q: Quadruple) -> Quadruple:
    return Quadruple(tuple(d.approx() for d in q.disks))


class TestScalarRelation:
    @pytest.mark.parametrize(
        "curvatures,ok",
        [
            ((-1, 2, 2, 3), True),
            ((0, 0, 1, 1), True),
            ((2, 2, 3, 15), True),
            ((1, 1, 1, 1), False),
            ((0, 1, 1, 4), True),
        ],
    )
    def test_integer_rows(self, curvatures, ok):
        values = tuple(FieldElement(c) for c in curvatures)
        assert descartes_scalar_ok(*values) is ok

    def test_golden_row(self):
        # consecutive powers of 1/rho solve the relation
        rho_bar = (PHI + FieldElement(0, 1)).inverse()
        assert descartes_scalar_ok(ONE, rho_bar, rho_bar**2, rho_bar**3)


class TestExtendedIdentity:
    def test_window(self):
        assert extended_ok(WINDOW)

    def test_fails_off_configuration(self):
        # moving one disk breaks the identity
        moved = list(WINDOW.disks)
        moved[3] = DiskSymbol(ONE, TWO, FieldElement(3), TWO)
        assert not extended_ok(Quadruple(tuple(moved)))

    def test_float_residual(self):
        assert extended_residual(float_quadruple(WINDOW)) < 1e-12

    def test_validate_raises_with_context(self):
        moved = list(WINDOW.disks)
        moved[0] = DiskSymbol(ZERO, ZERO, -ONE, TWO)
        with pytest.raises(InvalidQuadruple):
            Quadruple(tuple(moved)).validate()


class TestFourthCurvatures:
    @pytest.mark.parametrize(
        "triple,expected",
        [
            ((-1, 2, 2), (3, 3)),
            ((0, 0, 1), (1, 1)),
            ((2, 2, 3), (15, -1)),
            ((0, 1, 1), (4, 0)),
        ],
    )
    def test_integer_triples(self, triple, expected):
        values = tuple(FieldElement(c) for c in triple)
        want = tuple(FieldElement(c) for c in expected)
        assert fourth_curvatures(*values) == want

    def test_golden_triple(self):
        both = fourth_curvatures(ZERO, TWO, 2 * PHI**2)
        assert set(both) == {2 * PHI**4, 2 * TAU**2}

    def test_radical_outside_field(self):
        # b1 b2 + b2 b3 + b3 b1 = 3 has no square root in the field
        with pytest.raises(NotRepresentable):
            fourth_curvatures(ONE, ONE, ONE)

    def test_solutions_satisfy_scalar_relation(self):
        for triple in ((-1, 2, 2), (2, 2, 3), (3, 6, 7)):
            values = tuple(FieldElement(c) for c in triple)
            for fourth in fourth_curvatures(*values):
                assert descartes_scalar_ok(*values, fourth)


class TestReflectFourth:
    def test_window_outer_disk(self):
        mirrored = reflect_fourth(WINDOW, 0)
        assert mirrored.beta == 15
        assert norm_ok(mirrored)

    def test_involution(self):
        for i in range(4):
            mirrored = reflect_fourth(WINDOW, i)
            child = list(WINDOW.disks)
            child[i] = mirrored
            assert reflect_fourth(Quadruple(tuple(child)), i) == WINDOW.disks[i]

    def test_child_is_valid_quadruple(self):
        for i in range(4):
            child = list(WINDOW.disks)
            child[i] = reflect_fourth(WINDOW, i)
            assert extended_ok(Quadruple(tuple(child)))

    def test_component_sum_identity(self):
        # original and mirror add to twice the sum of the fixed three
        for i in range(4):
            mirrored = reflect_fourth(WINDOW, i)
            others = [d for j, d in enumerate(WINDOW.disks) if j != i]
            total = others[0] + others[1] + others[2]
            assert mirrored + WINDOW.disks[i] == total.scaled(TWO)


def random_float_quadruples(count: int, rng: random.Random):
    """Deterministic stream of valid float quadruples: random exact
    reflection walks from the window configuration, then rounded."""
    for _ in range(count):
        quad = WINDOW
        last = -1
        for _ in range(rng.randrange(1, 9)):
            i = rng.randrange(4)
            if i == last:
                continue
            child = list(quad.disks)
            child[i] = reflect_fourth(quad, i)
            quad = Quadruple(tuple(child))
            last = i
        yield float_quadruple(quad)


class TestSolveFourthFloat:
    def test_three_unit_disks(self):
        s3 = math.sqrt(3.0)
        a = DiskSymbol(0.0, 0.0, 1.0, -1.0)
        b = DiskSymbol(2.0, 0.0, 1.0, 3.0)
        c = DiskSymbol(1.0, s3, 1.0, 3.0)
        hi, lo = solve_fourth_float(a, b, c)
        assert abs(hi.beta - (3 + 2 * s3)) < 1e-9
        assert abs(lo.beta - (3 - 2 * s3)) < 1e-9

    def test_window_triple(self):
        outer, left, right, _ = float_quadruple(WINDOW).disks
        hi, lo = solve_fourth_float(outer, left, right)
        assert abs(hi.beta - 3) < 1e-9 and abs(lo.beta - 3) < 1e-9
        assert abs(hi.yr - 2) < 1e-9 and abs(lo.yr + 2) < 1e-9

    def test_not_tangent_raises(self):
        a = DiskSymbol(0.0, 0.0, 1.0, -1.0)
        b = DiskSymbol(5.0, 0.0, 1.0, 24.0)
        c = DiskSymbol(-5.0, 0.0, 1.0, 24.0)
        with pytest.raises(NotTangentEnough):
            solve_fourth_float(a, b, c)

    def test_random_triples_recover_dropped_disk(self):
        rng = random.Random(424242)
        for quad in random_float_quadruples(40, rng):
            d1, d2, d3, d4 = quad.disks
            solutions = solve_fourth_float(d1, d2, d3)
            scale = max(1.0, *(abs(v) for d in quad.disks for v in d.components()))
            gaps = [
                max(abs(a - b) for a, b in zip(s.components(), d4.components()))
                for s in solutions
            ]
            assert min(gaps) / scale < 1e-9
            total = d1 + d2 + d3
            for a, b, c in zip(
                solutions[0].components(), solutions[1].components(), total.components()
            ):
                assert abs(a + b - 2 * c) < 1e-8
