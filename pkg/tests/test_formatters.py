import json
import logging

import pytest

from src.models.elements import NElement, PElement
from src.models.response_models import ElementDocument
from src.services.gonality_lab import dimension_table, hyperelliptic_report
from src.services.pontryagin_basis import curve_class, point_class
from src.utils.exceptions import DomainError, ElementParseError
from src.utils.formatters import ElementFormatter
from src.utils.validators import ElementDocumentValidator


def _doc(side="newton", terms=None, genus=3, gonality=None):
    return {"genus": genus, "gonality": gonality, "side": side, "terms": terms or []}


def test_serialize_point_class(genus_three):
    document = ElementFormatter.serialize_element(point_class(genus_three))
    assert document.side == "pontryagin"
    assert document.genus == 3
    assert [(t.monomial, t.coeff) for t in document.terms] == [([], "1/1")]


def test_serialize_round_trip(genus_four):
    x = curve_class(genus_four).scale(-3) + PElement.monomial(genus_four, (0, 1), "5/7")
    text = ElementFormatter.to_json(ElementFormatter.serialize_element(x))
    assert ElementFormatter.parse_element(text) == x
    assert ElementFormatter.parse_element(json.loads(text), genus_four) == x


def test_json_is_deterministic(genus_four):
    x = NElement.monomial(genus_four, (1, 2), -2) + NElement.monomial(genus_four, (1,), "1/3")
    first = ElementFormatter.to_json(ElementFormatter.serialize_element(x))
    second = ElementFormatter.to_json(ElementFormatter.serialize_element(x))
    assert first == second
    assert '"coeff": "-2/1"' in first


def test_killed_monomial_dropped_with_warning(caplog):
    """g=3: N^3 is killed, N^1 survives"""
    raw = _doc(terms=[{"monomial": [3], "coeff": "1"}, {"monomial": [1], "coeff": "2"}])
    with caplog.at_level(logging.WARNING):
        x = ElementFormatter.parse_element(raw)
    assert x.terms == {(1,): 2}
    assert "dropping killed monomial" in caplog.text


def test_duplicate_monomials_summed():
    raw = _doc(genus=4, terms=[{"monomial": [2, 1], "coeff": "1/2"}, {"monomial": [1, 2], "coeff": "1/2"}])
    assert ElementFormatter.parse_element(raw).terms == {(1, 2): 1}


@pytest.mark.parametrize("raw", [
    "{not json",
    json.dumps(_doc(side="diagonal")),
    json.dumps(_doc(terms=[{"monomial": [1], "coeff": "0.5"}])),
    json.dumps(_doc(terms=[{"monomial": [1], "coeff": "1/0"}])),
    json.dumps(_doc(terms=[{"monomial": [7], "coeff": "1"}])),
    json.dumps(_doc(side="pontryagin", terms=[{"monomial": [-1], "coeff": "1"}])),
])
def test_parse_errors(raw):
    with pytest.raises(ElementParseError):
        ElementFormatter.parse_element(raw)


@pytest.mark.parametrize("genus, gonality", [(1, None), (0, None), (3, 9)])
def test_bad_context_is_domain_error(genus, gonality):
    """Genus and gonality are checked by the context rules, not the document schema"""
    with pytest.raises(DomainError):
        ElementFormatter.parse_element(_doc(genus=genus, gonality=gonality))


def test_context_mismatch(genus_four):
    with pytest.raises(DomainError):
        ElementFormatter.parse_element(_doc(), genus_four)


def test_element_csv(genus_three):
    document = ElementFormatter.serialize_element(NElement.monomial(genus_three, (1, 1), "3/2"))
    assert ElementFormatter.element_csv(document) == "side,monomial,coeff\nnewton,1 1,3/2\n"


def test_dimension_csv(make_context):
    text = ElementFormatter.dimension_csv(dimension_table(make_context(3, 2)))
    lines = text.splitlines()
    assert lines[0] == "p,s,dim"
    assert "2,0,1" in lines
    assert len(lines) == 1 + 4 * 3


def test_text_renderers(make_context):
    assert "dim R" in ElementFormatter.dimension_text(dimension_table(make_context(3)))
    assert "match" in ElementFormatter.report_text(hyperelliptic_report(3))
    document = ElementFormatter.serialize_element(NElement.one(make_context(3)))
    assert "1/1" in ElementFormatter.element_text(document)


class TestElementDocumentValidator:

    def test_valid_document(self, genus_three):
        document = ElementDocument.model_validate(_doc(terms=[{"monomial": [1, 1], "coeff": "4"}]))
        report = ElementDocumentValidator.validate_document(document, genus_three)
        assert report['valid']
        assert report['warnings'] == []

    def test_out_of_range_newton(self, genus_three):
        report = ElementDocumentValidator.validate_monomial("newton", [0], genus_three)
        assert not report['valid']

    def test_killed_pontryagin_warns(self, genus_three):
        """<2> at g=3 sits at bidegree (2, 2)"""
        report = ElementDocumentValidator.validate_monomial("pontryagin", [2], genus_three)
        assert report['valid']
        assert report['warnings']

    def test_coefficient(self):
        assert ElementDocumentValidator.validate_coefficient("-3/4")['valid']
        assert not ElementDocumentValidator.validate_coefficient("abc")['valid']
