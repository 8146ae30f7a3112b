"""
Concrete syntax for field elements and graph files.
"""

from dualcheeger.parsing.weight_parser import (
    format_element,
    parse_element,
    parse_expression,
    tokenize,
)
from dualcheeger.parsing.graph_file import default_budget, dump_graph, graph_to_dict, parse_graph

__all__ = [
    'format_element', 'parse_element', 'parse_expression', 'tokenize',
    'default_budget', 'dump_graph', 'graph_to_dict', 'parse_graph',
]
