"""Canonical N-Triples reader and writer (the persistence format)."""

from __future__ import annotations

import re

from ..errors import RdfSyntaxError, TermError
from .graph import Graph
from .terms import IRI, BlankNode, Literal, Term, Triple
from .turtle import unescape_string

_IRI = r"<([^<>\"{}|^`\\\x00-\x20]*)>"
_BNODE = r"_:([\w](?:[\w\-.]*[\w\-])?)"
_LITERAL = r'"((?:[^"\\\n\r]|\\.)*)"(?:@([A-Za-z]+(?:-[A-Za-z0-9]+)*)|\^\^' + _IRI + r")?"
_LINE = re.compile(
    rf"[ \t]*(?:{_IRI}|{_BNODE})[ \t]+{_IRI}[ \t]*(?:{_IRI}|{_BNODE}|{_LITERAL})[ \t]*\.[ \t]*(?:#.*)?\Z"
)
_BLANK = re.compile(r"[ \t]*(?:#.*)?\Z")


def _parse_line(line: str, lineno: int) -> Triple:
    m = _LINE.match(line)
    if m is None:
        raise RdfSyntaxError("malformed N-Triples statement", lineno, token=line.strip()[:60])
    s_iri, s_bn, p_iri, o_iri, o_bn, lex, lang, dt = m.groups()

    def err(msg: str) -> RdfSyntaxError:
        return RdfSyntaxError(msg, lineno)

    try:
        subject = IRI(unescape_string(s_iri, err)) if s_iri is not None else BlankNode(s_bn)
        predicate = IRI(unescape_string(p_iri, err))
        obj: Term
        if o_iri is not None:
            obj = IRI(unescape_string(o_iri, err))
        elif o_bn is not None:
            obj = BlankNode(o_bn)
        else:
            obj = Literal(
                unescape_string(lex, err),
                datatype=IRI(unescape_string(dt, err)) if dt is not None else None,
                lang=lang,
            )
    except TermError as exc:
        raise RdfSyntaxError(str(exc), lineno) from None
    return Triple(subject, predicate, obj)


def parse_ntriples(data: bytes | str) -> Graph:
    if isinstance(data, bytes):
        try:
            text = data.decode("utf-8")
        except UnicodeDecodeError as exc:
            line = data[: exc.start].count(b"\n") + 1
            raise RdfSyntaxError("input is not valid UTF-8", line) from None
    else:
        text = data
    graph = Graph()
    # only \n and \r end a statement; str.splitlines would also split on U+0085 etc.
    for lineno, line in enumerate(text.replace("\r\n", "\n").replace("\r", "\n").split("\n"), start=1):
        if _BLANK.match(line):
            continue
        graph.insert(_parse_line(line, lineno))
    return graph


def serialize_ntriples(graph: Graph) -> bytes:
    """One statement per line in canonical order; equal graphs give equal bytes."""
    return "".join(t.n3() + "\n" for t in graph.triples()).encode("utf-8")
