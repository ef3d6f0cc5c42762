"""Load the configured ontology once and expose the derived views."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .annotator import Annotation, Gazetteer, InferredStatement, annotate, build_gazetteer, infer_statements, load_trigger_lexicon
from .config import AppConfig
from .interlink import enrich, load_aliases
from .nlu import FixtureProvider, LiveProvider, NluProvider
from .ontology import ConsistencyReport, OntologyIndex, build_index, check_consistency, materialize
from .rdf.graph import Graph
from .rdf.turtle import parse_turtle
from .sparql import Query, ResultTable, evaluate, parse_query


@dataclass
class Engine:
    """Asserted ontology plus aliases (``enriched``) and its closure (``materialized``)."""

    config: AppConfig
    asserted: Graph
    enriched: Graph
    materialized: Graph

    @classmethod
    def from_config(cls, config: AppConfig) -> Engine:
        asserted = parse_turtle(config.ontology_path.read_bytes())
        enriched = enrich(asserted.copy(), load_aliases(config.aliases_path))
        return cls(config, asserted, enriched, materialize(enriched))

    @property
    def query_graph(self) -> Graph:
        return self.materialized if self.config.query_materialize else self.enriched

    @cached_property
    def index(self) -> OntologyIndex:
        # gazetteer concepts come from asserted types; the enriched graph keeps
        # sameAs partner names available as labels
        return build_index(self.enriched, self.config.ontology_domain)

    @cached_property
    def gazetteer(self) -> Gazetteer:
        triggers = load_trigger_lexicon(self.config.triggers_path)
        return build_gazetteer(self.index, triggers, self.config.match_given_names)

    def query(self, text: str | Query) -> ResultTable:
        q = parse_query(text) if isinstance(text, str) else text
        return evaluate(self.query_graph, q)

    def annotate(self, text: str) -> tuple[list[Annotation], list[InferredStatement]]:
        anns = annotate(self.gazetteer, text)
        return anns, infer_statements(anns, self.index, self.materialized)

    def consistency(self) -> ConsistencyReport:
        return check_consistency(build_index(self.materialized, self.config.ontology_domain), self.materialized)

    def nlu_provider(self) -> NluProvider:
        if self.config.nlu_mode == "fixture":
            return FixtureProvider.load(self.config.nlu_fixtures)
        return LiveProvider(self.config.nlu_endpoint, api_key_env=self.config.nlu_api_key_env)
