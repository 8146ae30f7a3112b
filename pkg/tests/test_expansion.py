import random
from fractions import Fraction

import pytest

from dualcheeger.cheeger import Verdict, h_of_f, minimize_expansion, positive_part_bound_check
from dualcheeger.exceptions import EmptyPositiveSetError, FullPositiveSetError, IsolatedVertexError
from dualcheeger.fields import LeviCivitaField, RationalField, epsilon
from dualcheeger.graph import OFGraph, VertexSubset
from dualcheeger.spectral import FunctionOnV

@pytest.fixture
def path(rational):
    return OFGraph(['a', 'b', 'c', 'd'],
                   [('a', 'b', Fraction(1)), ('b', 'c', Fraction(2)), ('c', 'd', Fraction(3))],
                   rational)

class TestMinimizeExpansion:
    def test_path(self, path):
        f = FunctionOnV.from_values(path, [1, 1, -1, -1])
        value, subset = minimize_expansion(path, f)
        # S = {a, b}: boundary 2, volume 4
        assert value == Fraction(1, 2)
        assert subset == VertexSubset(0b11)
        assert h_of_f(path, f) == Fraction(1, 2)

    def test_ties_keep_the_smallest_mask(self, path):
        # {a}, {c} and {a, c} all have ratio 1
        f = FunctionOnV.from_values(path, [1, -1, 1, -1])
        assert minimize_expansion(path, f) == (Fraction(1), VertexSubset(0b0001))

    def test_empty_positive_set(self, path):
        with pytest.raises(EmptyPositiveSetError):
            h_of_f(path, FunctionOnV.from_values(path, [0, -1, -2, 0]))

    def test_full_positive_set(self, path):
        with pytest.raises(FullPositiveSetError):
            h_of_f(path, FunctionOnV.constant(path))

    def test_isolated_vertex(self, rational):
        graph = OFGraph(['a', 'b', 'c'], [('a', 'b', Fraction(1))], rational)
        with pytest.raises(IsolatedVertexError):
            h_of_f(graph, FunctionOnV.from_values(graph, [1, 0, 0]))

class TestBoundCheck:
    def test_single_edge(self, single_edge):
        result = positive_part_bound_check(single_edge, FunctionOnV.from_values(single_edge, [1, -1]))
        assert (result.h, result.w, result.lower, result.upper) == (1, 1, 1, 1)
        assert result.verdict is Verdict.HOLDS
        assert result.note == ''
        assert all(check.equality for check in result.checks)

    def test_irrational_root(self, path):
        result = positive_part_bound_check(path, FunctionOnV.from_values(path, [1, 1, -1, -1]))
        assert result.verdict is Verdict.HOLDS
        assert 'float' in result.note
        assert result.lower == pytest.approx(1 - (3 / 4) ** 0.5)
        assert result.to_dict()['verdict'] == 'holds'

    def test_random_graphs(self, random_graph):
        rng = random.Random(9)
        field = RationalField()
        for _ in range(15):
            graph = random_graph(rng, field, rng.randint(2, 6))
            values = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(graph.size)]
            values[0] = Fraction(1)
            values[-1] = Fraction(-1)
            result = positive_part_bound_check(graph, FunctionOnV.from_values(graph, values))
            assert result.verdict is Verdict.HOLDS

    def test_levi_civita_triangle(self, triangle_graph):
        graph = triangle_graph(1)
        field = graph.field
        result = positive_part_bound_check(graph, FunctionOnV.from_values(graph, [1, 1, -1]))
        # h(f) = W = 1 / (1 + e); 1 - h(f)^2 has leading coefficient 2
        assert field.compare(result.h, field.inverse(1 + epsilon())).is_equalish
        assert field.compare(result.w, result.h).is_equalish
        assert result.verdict is Verdict.HOLDS
        assert result.note

    def test_levi_civita_random_graphs(self, random_graph):
        rng = random.Random(12)
        field = LeviCivitaField(exact=True, budget=8)
        for _ in range(5):
            graph = random_graph(rng, field, rng.randint(3, 5))
            values = [rng.randint(-3, 3) for _ in range(graph.size)]
            values[0], values[-1] = 2, -2
            result = positive_part_bound_check(graph, FunctionOnV.from_values(graph, values))
            assert result.verdict is not Verdict.FAILS
