from fractions import Fraction

import pytest

from dualcheeger.exceptions import DivisionByZeroError
from dualcheeger.fields import LeviCivitaNumber, epsilon
from dualcheeger.graph import OFGraph
from dualcheeger.spectral import (
    Polynomial,
    build_laplacian,
    char_poly,
    polynomial_gcd,
    squarefree_decomposition,
    squarefree_part,
)

def poly(rational, *coefficients):
    return Polynomial([Fraction(c) for c in coefficients], rational)

class TestArithmetic:
    def test_trailing_zeros_stripped(self, rational):
        p = poly(rational, 1, 2, 0, 0)
        assert p.degree == 1
        assert poly(rational, 0).degree == -1

    def test_from_roots(self, rational):
        assert Polynomial.from_roots([Fraction(1), Fraction(2)], rational).coefficients == (2, -3, 1)

    def test_evaluate_and_derivative(self, rational):
        p = poly(rational, 1, 0, 3)
        assert p(Fraction(2)) == 13
        assert p.derivative().coefficients == (0, 6)

    def test_divmod(self, rational):
        quotient, remainder = poly(rational, -1, 0, 0, 1).divmod(poly(rational, -1, 1))
        assert quotient.coefficients == (1, 1, 1)
        assert remainder.is_zero()
        quotient, remainder = poly(rational, 1, 0, 1).divmod(poly(rational, 1, 1))
        assert quotient.coefficients == (-1, 1)
        assert remainder.coefficients == (2,)

    def test_division_by_zero(self, rational):
        with pytest.raises(DivisionByZeroError):
            poly(rational, 1, 1).divmod(poly(rational))
        with pytest.raises(DivisionByZeroError):
            poly(rational).monic()

    def test_gcd(self, rational):
        a = Polynomial.from_roots([Fraction(1), Fraction(2), Fraction(3)], rational)
        b = Polynomial.from_roots([Fraction(2), Fraction(3), Fraction(5)], rational).scaled(Fraction(4))
        assert polynomial_gcd(a, b).coefficients == Polynomial.from_roots([Fraction(2), Fraction(3)], rational).coefficients

class TestSquarefree:
    def test_multiplicities(self, rational):
        roots = [Fraction(0), Fraction(1, 2), Fraction(1, 2), Fraction(3), Fraction(3), Fraction(3)]
        factors = squarefree_decomposition(Polynomial.from_roots(roots, rational).scaled(Fraction(7)))
        assert [(f.coefficients, m) for f, m in factors] == [
            ((0, 1), 1),
            ((Fraction(-1, 2), 1), 2),
            ((-3, 1), 3),
        ]

    def test_squarefree_input(self, rational):
        p = poly(rational, -2, 0, 1)
        assert [(f.coefficients, m) for f, m in squarefree_decomposition(p)] == [((-2, 0, 1), 1)]

    def test_squarefree_part(self, rational):
        p = Polynomial.from_roots([Fraction(1), Fraction(1), Fraction(4)], rational)
        assert squarefree_part(p).coefficients == (4, -5, 1)

    def test_levi_civita_factors(self, lc):
        # (x - (1 + e))^2 (x - e)
        root = 1 + epsilon()
        p = Polynomial.from_roots([root, root, epsilon()], lc)
        factors = squarefree_decomposition(p)
        assert [m for _, m in factors] == [1, 2]
        linear, double = factors[0][0], factors[1][0]
        assert lc.compare(-linear[0], epsilon()).is_equalish
        assert lc.compare(-double[0], root).is_equalish

class TestCharPoly:
    def test_single_edge(self, single_edge):
        assert char_poly(build_laplacian(single_edge)).coefficients == (0, -2, 1)

    def test_complete_graph(self, complete_graph):
        p = char_poly(build_laplacian(complete_graph(3)))
        assert p.coefficients == Polynomial.from_roots([Fraction(0), Fraction(3, 2), Fraction(3, 2)], p.field).coefficients
        factors = squarefree_decomposition(p)
        assert [(f.coefficients, m) for f, m in factors] == [((0, 1), 1), ((Fraction(-3, 2), 1), 2)]

    def test_path(self, rational):
        graph = OFGraph(['a', 'b', 'c'], [('a', 'b', Fraction(1)), ('b', 'c', Fraction(1))], rational)
        # eigenvalues 0, 1, 2
        assert char_poly(build_laplacian(graph)).coefficients == (0, 2, -3, 1)

    def test_levi_civita_trace(self, triangle_graph, lc):
        laplacian = build_laplacian(triangle_graph(1))
        p = char_poly(laplacian)
        assert p.degree == 3
        assert p.leading == 1
        assert lc.compare(-p[2], laplacian.trace()).is_equalish
        assert lc.is_zero(p[0])

    def test_near_bipartite_factors(self, near_bipartite_graph, lc):
        graph = near_bipartite_graph(2, 1)
        factors = squarefree_decomposition(char_poly(build_laplacian(graph)))
        assert [(f.degree, m) for f, m in factors] == [(2, 1), (1, 2)]
        eps = epsilon()
        mu = lc.div(2 + 2 * eps, 2 + eps)
        assert lc.compare(-factors[1][0][0], mu).is_equalish
        assert isinstance(factors[1][0][0], LeviCivitaNumber)
