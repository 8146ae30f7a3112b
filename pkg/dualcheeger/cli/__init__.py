"""
Command-line entry point, example generators and report rendering.
"""

from dualcheeger.cli.generators import GENERATORS, complete_unit, generate, near_bipartite_complete, triangle
from dualcheeger.cli.report import build_report, render_json, render_markdown

__all__ = [
    'GENERATORS', 'complete_unit', 'generate', 'near_bipartite_complete', 'triangle',
    'build_report', 'render_json', 'render_markdown',
]
