"""
Shared fixtures: field backends, the example families and random graphs.
"""
import random
from fractions import Fraction
from typing import Callable, List, Tuple

import pytest

from dualcheeger.cli.generators import complete_unit, near_bipartite_complete, triangle
from dualcheeger.fields import LeviCivitaField, LeviCivitaNumber, RationalField, RealField, epsilon
from dualcheeger.graph import OFGraph

BACKENDS = ('rational', 'float', 'lc-rational', 'lc-float')

@pytest.fixture
def rational():
    return RationalField()

@pytest.fixture
def real():
    return RealField()

@pytest.fixture
def lc():
    return LeviCivitaField(exact=True, budget=8)

@pytest.fixture
def lc_float():
    return LeviCivitaField(exact=False, budget=8)

@pytest.fixture
def eps():
    return epsilon(1)

@pytest.fixture
def triangle_graph():
    """Factory: triangle with b(x, y) = e^n over the exact Levi-Civita field."""
    return lambda n=1, backend=None: triangle(n, backend)

@pytest.fixture
def near_bipartite_graph():
    return lambda k=2, n=1, backend=None: near_bipartite_complete(k, n, backend)

@pytest.fixture
def complete_graph():
    return lambda n, backend=None: complete_unit(n, backend)

@pytest.fixture
def single_edge(rational):
    return OFGraph(['x', 'y'], [('x', 'y', Fraction(1))], rational)

def random_weight(rng: random.Random, field):
    """Positive weight: a small rational, or a short series with exponents in {0, 1, 2}."""
    coefficient = Fraction(rng.randint(1, 9), rng.randint(1, 4))
    if isinstance(field, LeviCivitaField):
        exponents = sorted(rng.sample([0, 1, 2], rng.randint(1, 2)))
        terms = [(exponents[0], coefficient)]
        for q in exponents[1:]:
            terms.append((q, Fraction(rng.randint(-4, 4), rng.randint(1, 3))))
        if not field.exact:
            terms = [(q, float(c)) for q, c in terms]
        return LeviCivitaNumber(terms, exact=field.exact)
    return field.from_fraction(coefficient)

def _connected_edges(rng: random.Random, vertices: List[int], density: float) -> List[Tuple[int, int]]:
    edges = set()
    for position in range(1, len(vertices)):
        anchor = vertices[rng.randrange(position)]
        edges.add((min(anchor, vertices[position]), max(anchor, vertices[position])))
    for i in vertices:
        for j in vertices:
            if i < j and rng.random() < density:
                edges.add((i, j))
    return sorted(edges)

@pytest.fixture
def random_graph() -> Callable[..., OFGraph]:
    """
    Factory for random graphs without isolated vertices.

    Args (of the returned callable):
        rng: Seeded random source
        field: Field backend instance
        n: Number of vertices
        components: Number of connected components, each with >= 2 vertices
        density: Probability of each extra edge
    """
    def build(rng: random.Random, field, n: int, components: int = 1, density: float = 0.4) -> OFGraph:
        order = list(range(n))
        rng.shuffle(order)
        sizes = [2] * components
        for _ in range(n - 2 * components):
            sizes[rng.randrange(components)] += 1
        groups = []
        start = 0
        for size in sizes:
            groups.append(order[start:start + size])
            start += size
        edges = []
        for group in groups:
            for i, j in _connected_edges(rng, sorted(group), density):
                edges.append((i, j, random_weight(rng, field)))
        return OFGraph([f"v{i}" for i in range(n)], edges, field)
    return build
