"""SPARQL 1.1 query results JSON (``application/sparql-results+json``)."""

from __future__ import annotations

import json

from ..rdf.terms import IRI, BlankNode, Literal, Term
from .evaluator import ResultTable

MEDIA_TYPE = "application/sparql-results+json"


def term_to_json(term: Term) -> dict[str, str]:
    if isinstance(term, IRI):
        return {"type": "uri", "value": term.value}
    if isinstance(term, BlankNode):
        return {"type": "bnode", "value": term.label}
    out = {"type": "literal", "value": term.lexical}
    if term.lang is not None:
        out["xml:lang"] = term.lang
    elif term.datatype is not None:
        out["datatype"] = term.datatype.value
    return out


def term_from_json(obj: dict) -> Term:
    kind = obj.get("type")
    value = obj["value"]
    if kind == "uri":
        return IRI(value)
    if kind == "bnode":
        return BlankNode(value)
    if kind in ("literal", "typed-literal"):
        dt = obj.get("datatype")
        return Literal(value, datatype=IRI(dt) if dt else None, lang=obj.get("xml:lang"))
    raise ValueError(f"unknown RDF term type in results: {kind!r}")


def to_sparql_json(result: ResultTable) -> bytes:
    bindings = [
        {name: term_to_json(t) for name, t in zip(result.header, row) if t is not None}
        for row in result.rows
    ]
    doc = {"head": {"vars": list(result.header)}, "results": {"bindings": bindings}}
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":")).encode("utf-8")


def from_sparql_json(data: bytes | str) -> ResultTable:
    doc = json.loads(data)
    header = tuple(doc["head"]["vars"])
    rows = []
    for binding in doc["results"]["bindings"]:
        rows.append(tuple(term_from_json(binding[v]) if v in binding else None for v in header))
    return ResultTable(header, tuple(rows))
