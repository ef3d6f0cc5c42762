"""Enrich local entities with ``owl:sameAs`` links from an alias table."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Mapping
from urllib.parse import urlsplit

from .errors import AliasError, TermError
from .rdf.graph import Graph
from .rdf.namespaces import OWL_SAMEAS
from .rdf.terms import IRI, Triple

AliasTable = Mapping[IRI, tuple[IRI, ...]]


def _absolute_iri(value: object, where: str) -> IRI:
    if not isinstance(value, str) or not urlsplit(value).scheme:
        raise AliasError(f"{where}: expected an absolute IRI, got {value!r}")
    try:
        return IRI(value)
    except TermError as exc:
        raise AliasError(f"{where}: {exc}") from None


def parse_aliases(data: str | bytes) -> dict[IRI, tuple[IRI, ...]]:
    try:
        doc = json.loads(data)
    except json.JSONDecodeError as exc:
        raise AliasError(f"alias table is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise AliasError("alias table must be a JSON object of IRI -> [IRI, ...]")
    table: dict[IRI, tuple[IRI, ...]] = {}
    for key, targets in doc.items():
        local = _absolute_iri(key, "alias key")
        if not isinstance(targets, list):
            raise AliasError(f"aliases of {key} must be a list")
        seen: dict[IRI, None] = {}
        for target in targets:
            seen.setdefault(_absolute_iri(target, f"alias of {key}"), None)
        table[local] = tuple(seen)
    return table


def load_aliases(path: str | Path) -> dict[IRI, tuple[IRI, ...]]:
    """Read a ``{local IRI: [external IRI, ...]}`` file; duplicate targets are dropped."""
    return parse_aliases(Path(path).read_bytes())


def enrich(graph: Graph, table: AliasTable) -> Graph:
    """Add ``local owl:sameAs external`` for every table entry whose local IRI occurs in ``graph``.

    Mutates and returns ``graph``. Links are one-directional; symmetry comes
    from materialization.
    """
    for local, externals in table.items():
        if not graph.mentions(local):
            continue
        for ext in externals:
            if ext != local:
                graph.insert(Triple(local, OWL_SAMEAS, ext))
    return graph
