"""
JSON graph files.

A graph file is a JSON object::

    {"field": "lc-rational",
     "truncation_order": "8",
     "vertices": ["x", "y", "z"],
     "edges": [{"u": "x", "v": "y", "w": "e^1"}, ...]}

``truncation_order`` is optional; when absent, Levi-Civita graphs get a
budget of TRUNCATION_MULTIPLIER times the smallest positive exponent
occurring in any weight.
"""
import json
from fractions import Fraction
from typing import Any, Dict, Iterable, List, Optional, Union

from dualcheeger.config import DEFAULT_TRUNCATION_ORDER, TRUNCATION_MULTIPLIER
from dualcheeger.exceptions import (
    GraphFileError,
    MalformedWeightError,
    ValidationError,
    WeightSyntaxError,
)
from dualcheeger.fields import Backend, LeviCivitaField, LeviCivitaNumber, make_field
from dualcheeger.graph import OFGraph
from dualcheeger.parsing.weight_parser import format_element, parse_element, parse_expression
from dualcheeger.utils.logger import logger

def default_budget(weights: Iterable[LeviCivitaNumber]) -> Fraction:
    """TRUNCATION_MULTIPLIER x the smallest positive exponent among the weights."""
    positive = [q for w in weights for q, _ in w.terms if q > 0]
    if not positive:
        return DEFAULT_TRUNCATION_ORDER
    return TRUNCATION_MULTIPLIER * min(positive)

def _load(document: Union[bytes, str]) -> Dict[str, Any]:
    if isinstance(document, bytes):
        try:
            document = document.decode('utf-8')
        except UnicodeDecodeError as e:
            raise GraphFileError(f"Graph file is not UTF-8: {e}") from e
    try:
        data = json.loads(document)
    except json.JSONDecodeError as e:
        raise GraphFileError(f"Invalid JSON at line {e.lineno} column {e.colno}: {e.msg}") from e
    if not isinstance(data, dict):
        raise GraphFileError("Graph file must contain a JSON object")
    for key in ('field', 'vertices', 'edges'):
        if key not in data:
            raise GraphFileError(f"Graph file is missing the {key!r} entry")
    if not isinstance(data['vertices'], list) or not all(isinstance(v, str) for v in data['vertices']):
        raise GraphFileError("'vertices' must be a list of strings")
    if not isinstance(data['edges'], list):
        raise GraphFileError("'edges' must be a list")
    return data

def parse_graph(document: Union[bytes, str], backend: Optional[str] = None,
                truncation_order: Optional[Any] = None) -> OFGraph:
    """
    Parse a graph file.

    Args:
        document: JSON document
        backend: Overrides the file's field tag
        truncation_order: Overrides the file's truncation order

    Returns:
        The validated graph; isolated vertices are allowed and logged

    Raises:
        GraphFileError: On malformed JSON or missing entries
        MalformedWeightError: If a weight does not parse
        DuplicateEdgeError, SelfLoopError, NonPositiveWeightError,
        UnknownVertexError, DuplicateVertexError: On invalid graph structure
    """
    data = _load(document)
    try:
        tag = Backend.from_string(backend or data['field'])
    except ValidationError as e:
        raise GraphFileError(str(e)) from e

    edges = []
    for position, edge in enumerate(data['edges']):
        if not isinstance(edge, dict) or not {'u', 'v', 'w'} <= set(edge):
            raise GraphFileError(f"Edge #{position} must be an object with 'u', 'v' and 'w'")
        try:
            weight = parse_element(str(edge['w']), tag)
        except WeightSyntaxError as e:
            raise MalformedWeightError(f"Edge #{position} ({edge['u']}, {edge['v']}): {e}") from e
        edges.append((str(edge['u']), str(edge['v']), weight))

    order = truncation_order if truncation_order is not None else data.get('truncation_order')
    field = make_field(tag)
    if isinstance(field, LeviCivitaField):
        if order is not None:
            budget = _parse_order(str(order))
        else:
            budget = default_budget(w for _, _, w in edges)
        field = field.with_budget(budget)
        logger.debug(f"Levi-Civita truncation budget {budget}")

    graph = OFGraph(data['vertices'], edges, field)
    if graph.isolated_vertices():
        logger.info(f"Parsed graph has {len(graph.isolated_vertices())} isolated vertices")
    return graph

def _parse_order(text: str) -> Fraction:
    try:
        parsed = parse_expression(text)
    except WeightSyntaxError as e:
        raise GraphFileError(f"Invalid truncation order {text!r}: {e}") from e
    if parsed.epsilon_position is not None or len(parsed.terms) > 1:
        raise GraphFileError(f"Truncation order must be a rational number, got {text!r}")
    order = parsed.terms.get(Fraction(0), Fraction(0))
    if order <= 0:
        raise GraphFileError(f"Truncation order must be positive, got {text!r}")
    return order

def graph_to_dict(graph: OFGraph, include_truncation: bool = True) -> Dict[str, Any]:
    """Graph file object for a graph."""
    data: Dict[str, Any] = {'field': graph.field.name}
    if include_truncation and isinstance(graph.field, LeviCivitaField):
        data['truncation_order'] = str(graph.field.budget)
    data['vertices'] = list(graph.labels)
    data['edges'] = [{'u': graph.labels[i], 'v': graph.labels[j], 'w': format_element(w)}
                     for i, j, w in graph.edges()]
    return data

def dump_graph(graph: OFGraph, include_truncation: bool = True) -> bytes:
    """Deterministic JSON serialisation: edges in index order, two-space indent, trailing newline."""
    return (json.dumps(graph_to_dict(graph, include_truncation), indent=2) + '\n').encode('utf-8')
