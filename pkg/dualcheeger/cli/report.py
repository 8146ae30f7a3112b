"""
Analysis reports.

A report is a plain dictionary with the sections ``input``,
``structure``, ``spectrum``, ``dual_cheeger``, ``verdicts``, ``overall``
and ``timing``.  Field elements appear as weight expressions, so every
value string parses back with ``parse_element`` in the report's backend.
"""
import json
from typing import Any, Dict, List, Optional

from dualcheeger.cheeger import CheegerCertificate
from dualcheeger.fields import LeviCivitaField
from dualcheeger.graph import OFGraph
from dualcheeger.utils import format_seconds

def build_report(graph: OFGraph, certificate: CheegerCertificate,
                 timing: Optional[Dict[str, float]] = None) -> Dict[str, Any]:
    """
    Assemble the report for a certified graph.

    Args:
        graph: The analyzed graph
        certificate: Result of ``certify``, carrying spectrum and verdicts
        timing: Durations in seconds by phase
    """
    field = certificate.field
    bipartite, parts = graph.is_bipartite()
    dual = certificate.to_dict()
    dual.pop('verdicts', None)
    notes = dual.pop('notes', [])
    report: Dict[str, Any] = {
        'input': {
            'vertices': graph.size,
            'edges': graph.edge_count,
            'backend': field.name,
            'truncation_order': str(field.budget) if isinstance(field, LeviCivitaField) else None,
        },
        'structure': {
            'connected': graph.is_connected(),
            'components': len(graph.connected_components()),
            'bipartite': bipartite,
            'parts': [graph.subset_labels(p) for p in parts] if parts else None,
        },
        'spectrum': certificate.spectrum.to_dict() if certificate.spectrum is not None else None,
        'dual_cheeger': dual,
        'verdicts': [v.to_dict() for v in certificate.verdicts],
        'overall': certificate.overall_verdict.value,
        'notes': notes,
        'timing': {phase: format_seconds(seconds) for phase, seconds in (timing or {}).items()},
    }
    return report

def render_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2) + '\n'

def _cell(value: Any) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'true' if value else 'false'
    return str(value).replace('|', '\\|')

def _table(header: List[str], rows: List[List[Any]]) -> List[str]:
    lines = ['| ' + ' | '.join(header) + ' |', '|' + '---|' * len(header)]
    lines.extend('| ' + ' | '.join(_cell(c) for c in row) + ' |' for row in rows)
    return lines

def render_markdown(report: Dict[str, Any]) -> str:
    """Human-readable rendering of a report."""
    source = report['input']
    structure = report['structure']
    dual = report['dual_cheeger']
    lines = [
        '# Dual Cheeger report',
        '',
        f"- Vertices: {source['vertices']}, edges: {source['edges']}",
        f"- Backend: {source['backend']}"
        + (f", truncation order {source['truncation_order']}" if source['truncation_order'] else ''),
        f"- Connected: {_cell(structure['connected'])} ({structure['components']} components)",
        f"- Bipartite: {_cell(structure['bipartite'])}",
        '',
        '## Dual Cheeger constant',
        '',
        f"h = {dual['value']}",
        '',
        f"Witness: V1 = {{{', '.join(dual['witness']['V1'])}}}, V2 = {{{', '.join(dual['witness']['V2'])}}}",
        '',
    ]
    if report['spectrum'] is not None:
        lines += ['## Spectrum', '']
        lines += _table(['value', 'multiplicity', 'status', 'approximation'],
                        [[e['value'], e['multiplicity'], e['status'], f"{e['approximation']:.12g}"]
                         for e in report['spectrum']['eigenvalues']])
        lines.append('')
    lines += ['## Verdicts', '']
    lines += _table(['check', 'left', 'relation', 'right', 'verdict', 'equality', 'note'],
                    [[v['name'], v['left'], v['relation'], v['right'], v['verdict'], v['equality'], v['note']]
                     for v in report['verdicts']])
    lines += ['', f"Overall: **{report['overall']}**"]
    for note in report['notes']:
        lines.append(f"- {note}")
    if report['timing']:
        lines += ['', '## Timing', '']
        lines += [f"- {phase}: {seconds} s" for phase, seconds in report['timing'].items()]
    return '\n'.join(lines) + '\n'

RENDERERS = {
    'json': render_json,
    'markdown': render_markdown,
}
