from __future__ import annotations

import unicodedata

import pytest

from semdisco.errors import TermError, UnknownPrefixError
from semdisco.rdf import IRI, POL, RDF_TYPE, BlankNode, Literal, Triple, TriplePattern, Variable, compact, expand
from semdisco.rdf.namespaces import STANDARD_PREFIXES
from semdisco.rdf.terms import term_key

POLITICS_PREFIX = {"Politics": "http://www.semanticweb.org/ontologies/Politics.owl#"}


def test_iri_rejects_whitespace_and_empty():
    with pytest.raises(TermError):
        IRI("")
    with pytest.raises(TermError):
        IRI("http://x/a b")
    with pytest.raises(TermError):
        IRI("http://x/<a>")


def test_literal_cannot_have_datatype_and_lang():
    with pytest.raises(TermError):
        Literal("x", datatype=IRI("http://www.w3.org/2001/XMLSchema#string"), lang="en")
    with pytest.raises(TermError):
        Literal("x", lang="not a tag")


def test_lexical_forms_are_nfc():
    decomposed = unicodedata.normalize("NFD", "Kaṉis é")
    assert decomposed != "Kaṉis é"
    assert Literal(decomposed) == Literal("Kaṉis é")
    assert IRI("http://x/" + unicodedata.normalize("NFD", "é")) == IRI("http://x/é")


def test_triple_validation():
    with pytest.raises(TermError):
        Triple(Literal("x"), RDF_TYPE, POL.Person)  # literal subject
    with pytest.raises(TermError):
        Triple(POL.labour, BlankNode("b"), POL.Person)  # non-IRI predicate


def test_literal_n3_escapes():
    assert Literal('a "b"\n').n3() == '"a \\"b\\"\\n"'
    assert Literal("x", lang="en").n3() == '"x"@en'
    assert Literal("1", datatype=IRI("http://www.w3.org/2001/XMLSchema#integer")).n3() == \
        '"1"^^<http://www.w3.org/2001/XMLSchema#integer>'


def test_pattern_unify_respects_repeated_variables():
    x = Variable("x")
    pat = TriplePattern(x, RDF_TYPE, x)
    assert pat.unify(Triple(POL.a, RDF_TYPE, POL.a)) == {"x": POL.a}
    assert pat.unify(Triple(POL.a, RDF_TYPE, POL.b)) is None


def test_expand_politics_prefix():
    assert expand(POLITICS_PREFIX, "Politics:labour").n3() == "<http://www.semanticweb.org/ontologies/Politics.owl#labour>"


def test_expand_unknown_prefix():
    with pytest.raises(UnknownPrefixError):
        expand(POLITICS_PREFIX, "dbr:Labor")


@pytest.mark.parametrize("label", sorted(STANDARD_PREFIXES))
def test_compact_inverts_expand(label):
    name = f"{label}:someThing"
    assert compact(STANDARD_PREFIXES, expand(STANDARD_PREFIXES, name)) == name


def test_compact_prefers_longest_namespace_and_passes_unknown_through():
    prefixes = {"a": "http://x/", "b": "http://x/y/"}
    assert compact(prefixes, IRI("http://x/y/z")) == "b:z"
    assert compact(prefixes, IRI("http://elsewhere/z")) == "http://elsewhere/z"


def test_term_key_orders_unbound_first():
    assert term_key(None) == ""
    assert term_key(None) < term_key(POL.a)
