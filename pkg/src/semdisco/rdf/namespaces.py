"""Well-known vocabularies and prefix-map helpers."""

from __future__ import annotations

import re
from typing import Mapping

from ..errors import TermError, UnknownPrefixError
from .terms import IRI

RDF_NS = "http://www.w3.org/1999/02/22-rdf-syntax-ns#"
RDFS_NS = "http://www.w3.org/2000/01/rdf-schema#"
OWL_NS = "http://www.w3.org/2002/07/owl#"
XSD_NS = "http://www.w3.org/2001/XMLSchema#"
POL_NS = "http://www.semanticweb.org/ontologies/Politics.owl#"


class Namespace(str):
    """String namespace whose attributes build IRIs: ``RDF.type``."""

    def __getattr__(self, local: str) -> IRI:
        if local.startswith("__"):
            raise AttributeError(local)
        return IRI(self + local)

    def term(self, local: str) -> IRI:
        return IRI(self + local)


RDF = Namespace(RDF_NS)
RDFS = Namespace(RDFS_NS)
OWL = Namespace(OWL_NS)
XSD = Namespace(XSD_NS)
POL = Namespace(POL_NS)

RDF_TYPE = RDF.type
RDFS_SUBCLASSOF = RDFS.subClassOf
RDFS_LABEL = RDFS.label
OWL_SAMEAS = OWL.sameAs

STANDARD_PREFIXES: dict[str, str] = {
    "rdf": RDF_NS,
    "rdfs": RDFS_NS,
    "owl": OWL_NS,
    "xsd": XSD_NS,
}

PREFIX_LABEL = re.compile(r"(?:[A-Za-z][A-Za-z0-9_\-]*)?\Z")
# Conservative local-name shape; anything else is written as a full IRI.
SAFE_LOCAL = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*\Z")


def expand(prefix_map: Mapping[str, str], prefixed_name: str) -> IRI:
    """``label:local`` -> IRI using ``prefix_map``."""
    label, sep, local = prefixed_name.partition(":")
    if not sep:
        raise TermError(f"not a prefixed name: {prefixed_name!r}")
    try:
        namespace = prefix_map[label]
    except KeyError:
        raise UnknownPrefixError(label) from None
    return IRI(namespace + local)


def compact(prefix_map: Mapping[str, str], iri: IRI | str) -> str:
    """Shortest prefixed form of ``iri`` under the longest matching namespace.

    Falls back to the plain IRI string when no namespace matches or the
    remaining local part would not be a safe prefixed-name local.
    """
    value = iri.value if isinstance(iri, IRI) else iri
    best: tuple[str, str] | None = None
    for label, namespace in prefix_map.items():
        if namespace and value.startswith(namespace):
            if best is None or len(namespace) > len(best[1]) or (
                len(namespace) == len(best[1]) and label < best[0]
            ):
                best = (label, namespace)
    if best is None:
        return value
    local = value[len(best[1]):]
    if local and not SAFE_LOCAL.match(local):
        return value
    return f"{best[0]}:{local}"
