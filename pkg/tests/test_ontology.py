from __future__ import annotations

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import UnionFind, bfs_reachable, iri
from semdisco.ontology import (
    ancestor_map,
    build_index,
    check_consistency,
    classify,
    materialize,
    realize,
    same_as_components,
)
from semdisco.rdf import OWL, OWL_SAMEAS, POL, RDF_TYPE, RDFS_SUBCLASSOF, Graph, Literal, Triple, parse_turtle

PREFIXES = """
@prefix pol: <http://www.semanticweb.org/ontologies/Politics.owl#> .
@prefix owl: <http://www.w3.org/2002/07/owl#> .
@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .
"""


def graph_of(body: str) -> Graph:
    return parse_turtle(PREFIXES + body)


def test_bundled_parties_and_politicians(engine):
    index = build_index(engine.asserted)
    assert index.instances_of(POL.PoliticalParty) == {POL.labour, POL.liberal, POL.greens, POL.nationals}
    for name in ("JenniferKanis", "DanielAndrews", "JoanneRyan", "KarenOverington"):
        assert getattr(POL, name) in index.instances_of(POL.Politician)


def test_empty_graph_index():
    index = build_index(Graph())
    assert not index.classes and not index.individuals and not index.labels
    assert not index.diagnostics


def test_labels_come_from_local_name_value_and_resolved_name(engine):
    labels = build_index(engine.enriched).labels
    assert {"Daniel Andrews", "danielandrewsmp"} <= labels[POL.DanielAndrews]
    assert {"labour", "Australian Labor Party", "Labor"} <= labels[POL.labour]
    assert not any(any(ch.isdigit() for ch in lab) for lab in labels[POL.labour])


def test_individual_subclass_edge_is_ignored(engine):
    index = build_index(engine.asserted)
    assert POL.DanielAndrews not in index.classes
    assert index.diagnostics["subclass-edge-from-individual"] == 1


def test_classification_politician_is_person(engine):
    closure = classify(build_index(engine.asserted))
    assert closure.is_subclass_of(POL.Politician, POL.Person)
    assert closure.is_subclass_of(POL.Person, POL.Person)
    assert not closure.is_subclass_of(POL.Person, POL.Politician)


def test_realization_of_jennifer_kanis(engine):
    r = realize(build_index(engine.asserted))[POL.JenniferKanis]
    assert r.inferred == {POL.Politician, POL.Person}
    assert r.most_specific == {POL.Politician}


def test_realization_untyped_is_empty():
    g = graph_of("pol:C a owl:Class . pol:x pol:value 'x' .")
    assert realize(build_index(g), [POL.x])[POL.x].inferred == frozenset()


def test_type_lifting_and_sameas_transitivity():
    g = graph_of("""
        pol:Politician rdfs:subClassOf pol:Person .
        pol:JenniferKanis a pol:Politician .
        pol:a owl:sameAs pol:b . pol:b owl:sameAs pol:c .
    """)
    m = materialize(g)
    assert Triple(POL.JenniferKanis, RDF_TYPE, POL.Person) in m
    assert Triple(POL.a, OWL_SAMEAS, POL.c) in m
    assert Triple(POL.c, OWL_SAMEAS, POL.a) in m
    assert not m.lookup(POL.a, OWL_SAMEAS, POL.a)


def test_sameas_property_sharing_both_directions():
    g = graph_of("pol:x owl:sameAs pol:y . pol:x pol:value 'v' . pol:s pol:memberOf pol:x .")
    m = materialize(g)
    assert Triple(POL.y, POL.value, Literal("v")) in m
    assert Triple(POL.s, POL.memberOf, POL.y) in m


def test_sameas_feeding_type_lifting_reaches_fixpoint():
    g = graph_of("pol:A rdfs:subClassOf pol:B . pol:x a pol:A . pol:x owl:sameAs pol:y .")
    m = materialize(g)
    assert Triple(POL.y, RDF_TYPE, POL.B) in m


def random_sameas_edges(rng: random.Random):
    nodes = rng.randint(1, 30)
    return [(iri(f"n{rng.randrange(nodes)}"), iri(f"n{rng.randrange(nodes)}")) for _ in range(rng.randint(0, 40))]


def check_sameas_against_union_find(seed: int) -> None:
    rng = random.Random(seed)
    edges = random_sameas_edges(rng)
    g = Graph(Triple(a, OWL_SAMEAS, b) for a, b in edges)
    uf = UnionFind()
    for a, b in edges:
        uf.union(a, b)
    expected = {grp for grp in uf.groups() if len(grp) > 1}
    m = materialize(g)
    assert {c for c in same_as_components(m) if len(c) > 1} == expected
    pairs = {(t.subject, t.object) for t in m.lookup(None, OWL_SAMEAS, None)}
    entailed = {(a, b) for grp in expected for a in grp for b in grp if a != b}
    assert pairs == entailed | set(edges)  # reflexive input edges are kept, never added


def check_closure_against_bfs(seed: int) -> None:
    rng = random.Random(seed)
    n = rng.randint(1, 15)
    edges = {(iri(f"C{rng.randrange(n)}"), iri(f"C{rng.randrange(n)}")) for _ in range(rng.randint(0, 25))}
    nodes = {x for e in edges for x in e}
    ancestors = ancestor_map(edges, nodes)
    for node in nodes:
        assert ancestors[node] == bfs_reachable(edges, node)


def test_sameas_matches_union_find_fixed_seeds():
    for seed in range(100):
        check_sameas_against_union_find(seed)


def test_closure_matches_bfs_fixed_seeds():
    for seed in range(100):
        check_closure_against_bfs(seed)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_sameas_union_find_property(seed):
    check_sameas_against_union_find(seed)


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**32 - 1))
def test_closure_bfs_property(seed):
    check_closure_against_bfs(seed)


def test_materialize_idempotent_and_monotone(engine):
    m = materialize(engine.enriched)
    assert set(engine.enriched) <= set(m)
    assert materialize(m) == m
    assert materialize(engine.enriched) == m


def test_realization_is_within_inferred_and_incomparable(engine):
    index = build_index(engine.materialized)
    closure = index.closure
    for r in realize(index).values():
        assert r.most_specific <= r.inferred
        for a in r.most_specific:
            for b in r.most_specific:
                assert a == b or not closure.is_subclass_of(a, b)


def test_bundled_ontology_is_consistent(engine):
    report = engine.consistency()
    assert report.consistent and report.violations == ()


def test_disjointness_violation_on_individual():
    g = graph_of("""
        pol:Person owl:disjointWith pol:Organization .
        pol:Person a owl:Class . pol:Organization a owl:Class .
        pol:x a pol:Person , pol:Organization .
    """)
    m = materialize(g)
    report = check_consistency(build_index(m), m)
    assert [v.kind for v in report.violations] == ["disjointness-violation"]
    assert POL.x.value in report.violations[0].iris


def test_unsatisfiable_class_is_reported():
    g = graph_of("""
        pol:A owl:disjointWith pol:B .
        pol:C rdfs:subClassOf pol:A , pol:B .
    """)
    report = check_consistency(build_index(g), g)
    assert not report.consistent
    assert any(POL.C.value in v.iris for v in report.violations)


def test_two_edge_subclass_cycle():
    g = graph_of("pol:A rdfs:subClassOf pol:B . pol:B rdfs:subClassOf pol:A .")
    report = check_consistency(build_index(g), g)
    assert report.consistent is False
    assert [v.kind for v in report.violations] == ["subclass-cycle"]


def test_self_loop_is_not_a_cycle():
    g = graph_of("pol:A rdfs:subClassOf pol:A .")
    assert check_consistency(build_index(g), g).consistent


def test_functional_property_conflict_across_sameas():
    g = graph_of("""
        pol:ResolvedName a owl:DatatypeProperty , owl:FunctionalProperty .
        pol:x pol:ResolvedName "Labor" . pol:y pol:ResolvedName "Labour" .
        pol:x owl:sameAs pol:y .
    """)
    m = materialize(g)
    kinds = [v.kind for v in check_consistency(build_index(m), m).violations]
    assert kinds == ["sameAs-literal-conflict"]


def test_no_axioms_means_consistent():
    rng = random.Random(2)
    for _ in range(50):
        n = 8
        edges = set()
        for _ in range(10):
            a, b = sorted(rng.sample(range(n), 2))  # forward edges only: acyclic
            edges.add(Triple(iri(f"C{a}"), RDFS_SUBCLASSOF, iri(f"C{b}")))
        types = {Triple(iri(f"x{i}"), RDF_TYPE, iri(f"C{rng.randrange(n)}")) for i in range(5)}
        g = materialize(Graph(edges | types))
        assert check_consistency(build_index(g), g).consistent


def test_report_json_fields():
    g = graph_of("pol:A rdfs:subClassOf pol:B . pol:B rdfs:subClassOf pol:A .")
    import json

    doc = json.loads(check_consistency(build_index(g), g).to_json())
    assert set(doc["violations"][0]) == {"kind", "iris", "explanation"}


def test_owl_namespace_constant():
    assert OWL.sameAs == OWL_SAMEAS
