import random
from fractions import Fraction

import numpy as np
import pytest

from dualcheeger.exceptions import DimensionMismatchError, IsolatedVertexError
from dualcheeger.fields import RationalField, epsilon
from dualcheeger.graph import OFGraph, VertexSubset
from dualcheeger.spectral import (
    FunctionOnV,
    apply_laplacian,
    build_laplacian,
    green_form,
    inner_product,
    rayleigh_quotient,
    standard_part_matrix,
)

def test_single_edge(single_edge):
    laplacian = build_laplacian(single_edge)
    assert laplacian.entries == ((1, -1), (-1, 1))
    assert laplacian.labels == ('x', 'y')
    assert laplacian.trace() == 2

def test_rows_sum_to_zero(random_graph):
    rng = random.Random(11)
    for _ in range(5):
        laplacian = build_laplacian(random_graph(rng, RationalField(), rng.randint(2, 7)))
        assert all(sum(row) == 0 for row in laplacian.entries)

def test_isolated_vertex(rational):
    graph = OFGraph(['x', 'y', 'z'], [('x', 'y', Fraction(1))], rational)
    with pytest.raises(IsolatedVertexError):
        build_laplacian(graph)

def test_triangle_entries(triangle_graph, lc):
    laplacian = build_laplacian(triangle_graph(1))
    eps = epsilon()
    assert lc.compare(laplacian.row(0)[1], -lc.div(eps, 1 + eps)).is_equalish
    assert laplacian.row(2)[0] == laplacian.row(2)[1] == -Fraction(1, 2)
    assert laplacian.row(0)[0] == 1

class TestFunctionOnV:
    def test_from_mapping(self, single_edge):
        f = FunctionOnV.from_values(single_edge, {'y': 3})
        assert f.values == (0, 3)

    def test_dimension_mismatch(self, single_edge):
        with pytest.raises(DimensionMismatchError):
            FunctionOnV.from_values(single_edge, [1, 2, 3])

    def test_supports(self, complete_graph):
        graph = complete_graph(4)
        f = FunctionOnV.from_values(graph, [2, -1, 0, Fraction(1, 2)])
        assert f.positive_support() == VertexSubset(0b1001)
        assert f.negative_support() == VertexSubset(0b0010)
        assert f.positive_part().values == (2, 0, 0, Fraction(1, 2))

    def test_arithmetic(self, single_edge):
        f = FunctionOnV.from_values(single_edge, [1, 2])
        g = FunctionOnV.constant(single_edge, 1)
        assert (f - g).values == (0, 1)
        assert (f + g).scaled(Fraction(1, 3)).values == (Fraction(2, 3), 1)
        assert (g - g).is_zero()

class TestGreenFormula:
    def test_exact_identity(self, random_graph):
        rng = random.Random(3)
        field = RationalField()

        def random_function(graph):
            return FunctionOnV.from_values(graph, [Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                                                   for _ in range(graph.size)])

        for _ in range(50):
            graph = random_graph(rng, field, rng.randint(2, 7))
            laplacian = build_laplacian(graph)
            for _ in range(10):
                f, g = random_function(graph), random_function(graph)
                assert inner_product(graph, apply_laplacian(laplacian, f), g) == green_form(graph, f, g)
                assert green_form(graph, f, g) == green_form(graph, g, f)

    def test_levi_civita_identity(self, random_graph, lc):
        rng = random.Random(5)
        for _ in range(5):
            graph = random_graph(rng, lc, rng.randint(2, 5))
            laplacian = build_laplacian(graph)
            f = FunctionOnV.from_values(graph, [rng.randint(-3, 3) for _ in range(graph.size)])
            g = FunctionOnV.from_values(graph, [rng.randint(-3, 3) for _ in range(graph.size)])
            left = inner_product(graph, apply_laplacian(laplacian, f), g)
            assert lc.compare(left, green_form(graph, f, g)).is_equalish

    def test_dimension_check(self, single_edge, complete_graph):
        f = FunctionOnV.constant(complete_graph(3))
        with pytest.raises(DimensionMismatchError):
            inner_product(single_edge, f, f)

class TestRayleighQuotient:
    def test_constant_function(self, complete_graph):
        graph = complete_graph(5)
        assert rayleigh_quotient(graph, FunctionOnV.constant(graph)) == 0

    def test_eigenfunction(self, triangle_graph, lc):
        graph = triangle_graph(1)
        eps = epsilon()
        f = FunctionOnV.from_values(graph, [-1, 1, 0])
        expected = lc.div(1 + 2 * eps, 1 + eps)
        assert lc.compare(rayleigh_quotient(graph, f), expected).is_equalish

    def test_bounded_by_two(self, random_graph, rational):
        rng = random.Random(17)
        for _ in range(10):
            graph = random_graph(rng, rational, rng.randint(2, 6))
            f = FunctionOnV.from_values(graph, [rng.randint(1, 4) * rng.choice([-1, 1]) for _ in range(graph.size)])
            quotient = rayleigh_quotient(graph, f)
            assert 0 <= quotient <= 2

class TestStandardPartMatrix:
    def test_complete_graph(self, complete_graph):
        values = np.linalg.eigvalsh(standard_part_matrix(complete_graph(3)))
        assert values == pytest.approx([0, 1.5, 1.5])

    def test_triangle(self, triangle_graph):
        matrix = standard_part_matrix(triangle_graph(1))
        assert np.allclose(matrix, matrix.T)
        assert matrix[0, 1] == pytest.approx(0.0)
        assert np.linalg.eigvalsh(matrix) == pytest.approx([0, 1, 2], abs=1e-12)

    def test_float_backend(self, complete_graph):
        matrix = standard_part_matrix(complete_graph(4, 'float'))
        assert np.linalg.eigvalsh(matrix) == pytest.approx([0, 4 / 3, 4 / 3, 4 / 3])

    def test_laplacian_standard_part(self, triangle_graph):
        matrix = build_laplacian(triangle_graph(1)).standard_part()
        assert matrix[2] == pytest.approx([-0.5, -0.5, 1.0])
