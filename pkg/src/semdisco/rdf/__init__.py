from .graph import Graph
from .namespaces import (
    OWL,
    OWL_SAMEAS,
    POL,
    POL_NS,
    RDF,
    RDF_TYPE,
    RDFS,
    RDFS_LABEL,
    RDFS_SUBCLASSOF,
    STANDARD_PREFIXES,
    XSD,
    Namespace,
    compact,
    expand,
)
from .ntriples import parse_ntriples, serialize_ntriples
from .terms import IRI, BlankNode, Literal, Term, Triple, TriplePattern, Variable
from .turtle import parse_turtle, serialize_turtle

__all__ = [
    "BlankNode",
    "Graph",
    "IRI",
    "Literal",
    "Namespace",
    "OWL",
    "OWL_SAMEAS",
    "POL",
    "POL_NS",
    "RDF",
    "RDFS",
    "RDFS_LABEL",
    "RDFS_SUBCLASSOF",
    "RDF_TYPE",
    "STANDARD_PREFIXES",
    "Term",
    "Triple",
    "TriplePattern",
    "Variable",
    "XSD",
    "compact",
    "expand",
    "parse_ntriples",
    "parse_turtle",
    "serialize_ntriples",
    "serialize_turtle",
]
