from __future__ import annotations

import pytest

from semdisco.errors import AliasError
from semdisco.interlink import enrich, load_aliases, parse_aliases
from semdisco.rdf import IRI, OWL_SAMEAS, POL, RDF_TYPE, Graph, Triple

LABOUR_ALIASES = {
    IRI("http://dbpedia.org/resource/Australian_Labor_Party"),
    IRI("http://rdf.freebase.com/ns/m.0q96"),
    IRI("http://yago-knowledge.org/resource/Australian_Labor_Party"),
}
ANDREWS_ALIASES = {
    IRI("http://dbpedia.org/resource/Daniel_Andrews"),
    IRI("http://rdf.freebase.com/ns/m.0bwtx"),
    IRI("http://yago-knowledge.org/resource/Daniel_Andrews"),
}


def test_bundled_alias_table(data_dir):
    table = load_aliases(data_dir / "aliases.json")
    assert LABOUR_ALIASES <= set(table[POL.labour])
    assert ANDREWS_ALIASES <= set(table[POL.DanielAndrews])


def test_empty_table(tmp_path):
    path = tmp_path / "aliases.json"
    path.write_text("{}")
    assert load_aliases(path) == {}


def test_duplicates_dropped():
    table = parse_aliases('{"http://e/a": ["http://x/1", "http://x/1", "http://x/2"]}')
    assert table[IRI("http://e/a")] == (IRI("http://x/1"), IRI("http://x/2"))


@pytest.mark.parametrize("doc", ['{"http://e/a": ["relative/x"]}', '{"a": ["http://x"]}', "[]", "{not json"])
def test_bad_tables(doc):
    with pytest.raises(AliasError):
        parse_aliases(doc)


def test_enrich_only_touches_present_entities():
    g = Graph([Triple(POL.labour, RDF_TYPE, POL.PoliticalParty)])
    table = {POL.labour: (IRI("http://x/1"),), POL.absent: (IRI("http://x/2"),)}
    enrich(g, table)
    assert Triple(POL.labour, OWL_SAMEAS, IRI("http://x/1")) in g
    assert not g.lookup(POL.absent, None, None)
    assert len(g) == 2


def test_enrich_is_idempotent_and_adds_only_sameas(engine, data_dir):
    table = load_aliases(data_dir / "aliases.json")
    once = enrich(engine.asserted.copy(), table)
    twice = enrich(enrich(engine.asserted.copy(), table), table)
    assert once == twice
    added = set(once) - set(engine.asserted)
    assert added and all(t.predicate == OWL_SAMEAS for t in added)
    assert set(engine.asserted) <= set(once)


def test_enriched_labour_has_all_sameas_rows(engine):
    got = {t.object for t in engine.enriched.lookup(POL.labour, OWL_SAMEAS, None)}
    assert LABOUR_ALIASES | {IRI("http://www.semanticweb.org/owl/owlapi/turtle#Labor")} == got


def test_materialized_components_contain_all_aliases(engine, data_dir):
    from semdisco.ontology import same_as_components

    comps = same_as_components(engine.materialized)
    table = load_aliases(data_dir / "aliases.json")
    for local, externals in table.items():
        comp = next(c for c in comps if local in c)
        assert set(externals) <= comp
