from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import random_graph_triples
from semdisco.errors import RdfSyntaxError, UnknownPrefixError
from semdisco.rdf import (
    POL,
    RDF_TYPE,
    IRI,
    Graph,
    Literal,
    Namespace,
    Triple,
    parse_ntriples,
    parse_turtle,
    serialize_ntriples,
    serialize_turtle,
)

EX = Namespace("http://example.org/")


def test_a_keyword_expands_to_rdf_type():
    g = parse_turtle(b"@prefix pol: <http://www.semanticweb.org/ontologies/Politics.owl#> . pol:labour a pol:PoliticalParty .")
    assert g.triples() == [Triple(POL.labour, RDF_TYPE, POL.PoliticalParty)]
    assert g.prefixes["pol"] == "http://www.semanticweb.org/ontologies/Politics.owl#"


def test_turtle_lists_literals_and_comments():
    doc = """
    @prefix ex: <http://example.org/> .
    @base <http://example.org/base/> .
    # comment
    ex:s ex:p "one"@en, "two"^^ex:dt ;
         ex:q 42, 4.5, true, <rel> ;
         ex:r _:b1 .
    """
    g = parse_turtle(doc)
    assert len(g) == 7
    assert Triple(EX.s, EX.q, IRI("http://example.org/base/rel")) in g
    assert Triple(EX.s, EX.p, Literal("two", datatype=EX.dt)) in g


def test_turtle_unknown_prefix_has_position():
    with pytest.raises(UnknownPrefixError) as info:
        parse_turtle("@prefix ex: <http://e/> .\nex:a nope:b ex:c .")
    assert info.value.line == 2


def test_turtle_syntax_error_reports_line_and_token():
    with pytest.raises(RdfSyntaxError) as info:
        parse_turtle('@prefix ex: <http://e/> .\n\nex:a ex:b ex:c ex:d .')
    assert info.value.line == 3
    assert info.value.token is not None


def test_turtle_rejects_non_utf8():
    with pytest.raises(RdfSyntaxError):
        parse_turtle(b'<http://e/a> <http://e/b> "\xff" .')


def test_empty_graph_serializes_to_nothing():
    assert serialize_ntriples(Graph()) == b""
    assert serialize_turtle(Graph()) == b""


def test_ntriples_error_carries_line_number():
    with pytest.raises(RdfSyntaxError) as info:
        parse_ntriples(b'<http://e/a> <http://e/b> <http://e/c> .\n<http://e/a> "bad" <http://e/c> .\n')
    assert info.value.line == 2


def test_ntriples_lines_sorted_and_byte_stable():
    rng = random.Random(3)
    triples = random_graph_triples(rng, 40)
    a = serialize_ntriples(Graph(triples))
    b = serialize_ntriples(Graph(list(reversed(triples))))
    assert a == b
    assert a.decode().splitlines() == [t.n3() for t in sorted(set(triples), key=Triple.sort_key)]


def roundtrip(seed: int) -> None:
    g = Graph(random_graph_triples(random.Random(seed), 30))
    assert parse_ntriples(serialize_ntriples(g)) == g
    assert parse_turtle(serialize_turtle(g)) == g


def test_round_trip_fixed_seeds():
    for seed in range(100):
        roundtrip(seed)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_round_trip_property(seed):
    roundtrip(seed)


@settings(max_examples=100, deadline=None)
@given(st.text(alphabet=st.characters(blacklist_categories=("Cs",)), max_size=20))
def test_arbitrary_literal_text_round_trips(text):
    g = Graph([Triple(POL.a, POL.value, Literal(text))])
    assert parse_ntriples(serialize_ntriples(g)) == g
    assert parse_turtle(serialize_turtle(g)) == g


def test_bundled_ontology_round_trips(data_dir):
    g = parse_turtle((data_dir / "politics.ttl").read_bytes())
    assert parse_turtle(serialize_turtle(g)) == g
    assert parse_ntriples(serialize_ntriples(g)) == g
