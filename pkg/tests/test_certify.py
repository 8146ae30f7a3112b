from fractions import Fraction

import pytest

from dualcheeger.cheeger import Verdict, certify, upper_spectral_bound
from dualcheeger.exceptions import ValidationError
from dualcheeger.fields import LeviCivitaNumber, epsilon
from dualcheeger.graph import OFGraph

def verdicts_by_name(certificate):
    return {v.name: v for v in certificate.verdicts}

class TestRational:
    def test_single_edge(self, single_edge):
        certificate = certify(single_edge)
        assert certificate.overall_verdict is Verdict.HOLDS
        verdicts = verdicts_by_name(certificate)
        assert verdicts['h = 1 iff bipartite'].verdict is Verdict.HOLDS
        assert verdicts['2h = lambda_max (bipartite)'].equality
        assert verdicts['h >= parity bound'].equality
        assert verdicts['lambda_max >= N/(N-1)'].equality
        assert certificate.spectrum.largest.value == 2

    def test_complete_four(self, complete_graph):
        certificate = certify(complete_graph(4))
        assert certificate.overall_verdict is Verdict.HOLDS
        verdicts = verdicts_by_name(certificate)
        assert verdicts['2h <= lambda_max'].equality
        assert verdicts['lambda_max >= N/(N-1)'].equality
        bound = verdicts['lambda_max <= 1 + sqrt(1 - (1 - h)^2)']
        assert bound.note == 'compared in the float backend'
        assert bound.right == pytest.approx(1 + (8 / 9) ** 0.5)
        assert '2h = lambda_max (bipartite)' not in verdicts

    def test_each_inequality_is_recorded_once(self, complete_graph):
        names = [v.name for v in certify(complete_graph(3)).verdicts]
        assert len(names) == len(set(names))

    def test_disconnected(self, rational):
        graph = OFGraph(['a', 'b', 'c', 'd'], [('a', 'b', Fraction(1)), ('c', 'd', Fraction(2))], rational)
        certificate = certify(graph)
        verdicts = verdicts_by_name(certificate)
        assert verdicts['lambda_max = 2 iff bipartite'].verdict is Verdict.SKIPPED
        assert verdicts['h = 1 iff bipartite'].verdict is Verdict.SKIPPED
        assert verdicts['lambda_max >= N/(N-1)'].verdict is Verdict.SKIPPED
        assert verdicts['multiplicity of 0 = number of components'].verdict is Verdict.HOLDS
        assert certificate.overall_verdict is Verdict.HOLDS

    def test_irrational_spectrum(self, rational):
        labels = ['p0', 'p1', 'p2', 'p3', 'p4']
        graph = OFGraph(labels, [(i, i + 1, Fraction(1)) for i in range(4)], rational)
        certificate = certify(graph)
        assert certificate.overall_verdict is Verdict.HOLDS
        assert verdicts_by_name(certificate)['lambda_max = 2 iff bipartite'].verdict is Verdict.HOLDS

class TestLeviCivita:
    @pytest.mark.parametrize('n', [1, 2])
    def test_triangle(self, triangle_graph, n):
        certificate = certify(triangle_graph(n))
        assert certificate.overall_verdict is Verdict.HOLDS
        verdicts = verdicts_by_name(certificate)
        assert not verdicts['2h <= lambda_max'].equality
        assert verdicts['lambda_max = 2 iff bipartite'].left is False
        assert certificate.notes == ()

    @pytest.mark.parametrize('n', [1, 2])
    def test_triangle_upper_bound(self, triangle_graph, n):
        graph = triangle_graph(n)
        certificate = certify(graph)
        upper = upper_spectral_bound(graph, certificate.value)
        # 2 - x^2/8 + x^3/8 + ... with x = e^n
        assert upper.coefficient(0) == 2
        assert upper.coefficient(n) == 0
        assert upper.coefficient(2 * n) == Fraction(-1, 8)
        assert upper.coefficient(3 * n) == Fraction(1, 8)
        gap = upper - 2 * certificate.value
        assert gap.leading_exponent == n

    def test_irrational_standard_parts(self, lc):
        graph = OFGraph(['a', 'b', 'c'], [('a', 'b', lc.from_int(1)), ('b', 'c', lc.from_int(2)),
                                          ('a', 'c', lc.from_int(3))], lc)
        certificate = certify(graph)
        assert certificate.overall_verdict is not Verdict.FAILS
        verdicts = verdicts_by_name(certificate)
        assert verdicts['multiplicity of 0 = number of components'].verdict is Verdict.HOLDS
        assert verdicts['lambda_max = 2 iff bipartite'].verdict is Verdict.HOLDS

    def test_near_bipartite_attains_the_lower_bound(self, near_bipartite_graph):
        certificate = certify(near_bipartite_graph(2, 1))
        assert certificate.overall_verdict is Verdict.HOLDS
        verdicts = verdicts_by_name(certificate)
        assert verdicts['2h <= lambda_max'].verdict is Verdict.HOLDS
        assert verdicts['2h <= lambda_max'].equality

    def test_retry_with_a_wider_budget(self, triangle_graph):
        graph = triangle_graph(1)
        narrow = graph.with_field(graph.field.with_budget(1), lambda w: w)
        assert certify(narrow, retry=False).overall_verdict is Verdict.INDISTINGUISHABLE
        certificate = certify(narrow)
        assert certificate.notes == ('retried with truncation budget 2',)
        assert certificate.overall_verdict is not Verdict.FAILS

class TestExpectations:
    def test_matching(self, complete_graph):
        expectations = {'h': '2/3', 'lambda_max': '4/3', 'bipartite': False,
                        'components': 1, 'zero_multiplicity': 1, 'connected': True}
        certificate = certify(complete_graph(4), expectations=expectations)
        assert certificate.overall_verdict is Verdict.HOLDS
        assert len([v for v in certificate.verdicts if v.name.startswith('expected ')]) == 6

    def test_mismatch(self, complete_graph):
        certificate = certify(complete_graph(4), expectations={'h': '1/2'})
        assert certificate.overall_verdict is Verdict.FAILS
        assert verdicts_by_name(certificate)['expected h'].verdict is Verdict.FAILS

    def test_levi_civita_expression(self, triangle_graph):
        graph = triangle_graph(1)
        certificate = certify(graph, expectations={'h': '1 - 1/2*e + 1/4*e^2 + O(e^3)'})
        assert verdicts_by_name(certificate)['expected h'].verdict is Verdict.HOLDS

    @pytest.mark.parametrize('expectations', [
        {'spectral_gap': '1'},
        {'h': '2//3'},
        {'components': 'one'},
        {'bipartite': 'yes'},
    ])
    def test_invalid(self, complete_graph, expectations):
        with pytest.raises(ValidationError):
            certify(complete_graph(3), expectations=expectations)

def test_certificate_report_fields(triangle_graph):
    certificate = certify(triangle_graph(1))
    data = certificate.to_dict()
    assert data['witness'] == {'V1': ['x', 'y'], 'V2': ['z']}
    assert data['numerator'] == '4'
    assert all(v['verdict'] in ('holds', 'skipped') for v in data['verdicts'])
    assert isinstance(certificate.value, LeviCivitaNumber)
    assert certificate.field.compare(certificate.value, certificate.field.div(LeviCivitaNumber.constant(2),
                                                                               2 + epsilon())).is_equalish
