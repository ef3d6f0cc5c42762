"""Turtle subset reader and writer.

Supported: ``@prefix``/``@base`` (and the SPARQL-style ``PREFIX``/``BASE``),
IRIs, prefixed names, ``a``, string literals (short and long quotes) with
language tags or datatypes, numeric and boolean shorthands, ``;`` and ``,``
lists, ``_:label`` blank nodes and ``#`` comments. Collections and ``[ ]``
property lists are rejected.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass
from typing import Iterator
from urllib.parse import urljoin

from ..errors import RdfSyntaxError, TermError, UnknownPrefixError
from .graph import Graph
from .namespaces import PREFIX_LABEL, RDF_TYPE, SAFE_LOCAL, XSD
from .terms import IRI, BlankNode, Literal, Term, Triple, escape_string

_PLX = r"\\[_~.\-!$&'()*+,;=/?#@%]|%[0-9A-Fa-f]{2}"
_TOKEN = re.compile(
    r"""
    (?P<ws>(?:\s+|\#[^\n]*)+)
  | (?P<iri><[^<>"{}|^`\\\x00-\x20]*>)
  | (?P<long>\"\"\"(?:[^"\\]|\\.|"(?!""))*\"\"\"|'''(?:[^'\\]|\\.|'(?!''))*''')
  | (?P<string>"(?:[^"\\\n\r]|\\.)*"|'(?:[^'\\\n\r]|\\.)*')
  | (?P<dtype>\^\^)
  | (?P<at>@[A-Za-z]+(?:-[A-Za-z0-9]+)*)
  | (?P<bnode>_:[\w][\w\-.]*)
  | (?P<number>[+-]?(?:\d*\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+))
  | (?P<pname>(?:[^\W\d_][\w\-.]*)?:(?:(?:[\w:\-]|"""
    + _PLX
    + r""")(?:[\w\-.:]|"""
    + _PLX
    + r""")*)?)
  | (?P<word>[A-Za-z]+)
  | (?P<punct>[.;,\[\]()])
    """,
    re.VERBOSE,
)

_ECHAR = {"t": "\t", "b": "\b", "n": "\n", "r": "\r", "f": "\f", '"': '"', "'": "'", "\\": "\\"}
_STRING_ESCAPE = re.compile(r"\\(?:u([0-9A-Fa-f]{4})|U([0-9A-Fa-f]{8})|(.))", re.DOTALL)


@dataclass
class _Token:
    kind: str
    text: str
    pos: int


def unescape_string(body: str, error) -> str:
    def repl(m: re.Match) -> str:
        if m.group(1) or m.group(2):
            return chr(int(m.group(1) or m.group(2), 16))
        ch = m.group(3)
        if ch not in _ECHAR:
            raise error(f"bad string escape \\{ch}")
        return _ECHAR[ch]

    return _STRING_ESCAPE.sub(repl, body)


class _Lexer:
    def __init__(self, text: str):
        self.text = text
        self._line_starts = [0] + [m.end() for m in re.finditer(r"\n", text)]

    def where(self, pos: int) -> tuple[int, int]:
        line = bisect.bisect_right(self._line_starts, pos)
        return line, pos - self._line_starts[line - 1] + 1

    def error(self, message: str, pos: int, token: str | None = None) -> RdfSyntaxError:
        line, col = self.where(pos)
        return RdfSyntaxError(message, line, col, token)

    def tokens(self) -> Iterator[_Token]:
        text, pos = self.text, 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            if m is None:
                raise self.error("unexpected character", pos, text[pos:pos + 10])
            kind = m.lastgroup
            value = m.group()
            if kind in ("pname", "bnode"):
                # A trailing '.' ends the statement, it is not part of the name.
                while value.endswith(".") and not value.endswith("\\."):
                    value = value[:-1]
            end = pos + len(value)
            if kind != "ws":
                yield _Token(kind, value, pos)
            pos = end
        yield _Token("eof", "", len(text))


class _TurtleParser:
    def __init__(self, text: str, base_iri: str | None):
        self.lexer = _Lexer(text)
        self.tokens = self.lexer.tokens()
        self.tok = next(self.tokens)
        self.base = base_iri
        self.graph = Graph()

    def error(self, message: str, tok: _Token | None = None) -> RdfSyntaxError:
        tok = tok or self.tok
        return self.lexer.error(message, tok.pos, tok.text or "<end of input>")

    def advance(self) -> _Token:
        tok = self.tok
        self.tok = next(self.tokens)
        return tok

    def expect_punct(self, ch: str) -> None:
        if self.tok.kind != "punct" or self.tok.text != ch:
            raise self.error(f"expected {ch!r}")
        self.advance()

    def parse(self) -> Graph:
        while self.tok.kind != "eof":
            self.statement()
        return self.graph

    def statement(self) -> None:
        tok = self.tok
        if tok.kind == "at" and tok.text in ("@prefix", "@base"):
            self.advance()
            if tok.text == "@prefix":
                self.prefix_body()
            else:
                self.base = self.iri_value(self.expect_iri())
            self.expect_punct(".")
            return
        if tok.kind == "word" and tok.text.upper() in ("PREFIX", "BASE"):
            self.advance()
            if tok.text.upper() == "PREFIX":
                self.prefix_body()
            else:
                self.base = self.iri_value(self.expect_iri())
            return
        self.triples()
        self.expect_punct(".")

    def prefix_body(self) -> None:
        tok = self.tok
        if tok.kind != "pname" or not tok.text.endswith(":") or tok.text.count(":") != 1:
            raise self.error("expected prefix label ending in ':'")
        label = tok.text[:-1]
        if not PREFIX_LABEL.match(label):
            raise self.error("bad prefix label")
        self.advance()
        self.graph.prefixes[label] = self.iri_value(self.expect_iri())

    def expect_iri(self) -> _Token:
        if self.tok.kind != "iri":
            raise self.error("expected IRI")
        return self.advance()

    def iri_value(self, tok: _Token) -> str:
        value = tok.text[1:-1]
        value = unescape_string(value, lambda m: self.error(m, tok))
        if self.base and not re.match(r"[A-Za-z][A-Za-z0-9+.\-]*:", value):
            value = urljoin(self.base, value)
        return value

    def make_iri(self, value: str, tok: _Token) -> IRI:
        try:
            return IRI(value)
        except TermError as exc:
            raise self.error(str(exc), tok) from None

    def pname_iri(self, tok: _Token) -> IRI:
        label, _, local = tok.text.partition(":")
        if label not in self.graph.prefixes:
            raise UnknownPrefixError(label, *self.lexer.where(tok.pos))
        local = re.sub(r"\\(.)", r"\1", local)
        return self.make_iri(self.graph.prefixes[label] + local, tok)

    def triples(self) -> None:
        subject = self.subject()
        self.predicate_object_list(subject)

    def subject(self) -> IRI | BlankNode:
        tok = self.tok
        if tok.kind == "iri":
            self.advance()
            return self.make_iri(self.iri_value(tok), tok)
        if tok.kind == "pname":
            self.advance()
            return self.pname_iri(tok)
        if tok.kind == "bnode":
            self.advance()
            return BlankNode(tok.text[2:])
        if tok.kind == "punct" and tok.text in "[(":
            raise self.error("blank node property lists and collections are not supported")
        raise self.error("expected subject")

    def verb(self) -> IRI:
        tok = self.tok
        if tok.kind == "word" and tok.text == "a":
            self.advance()
            return RDF_TYPE
        if tok.kind == "iri":
            self.advance()
            return self.make_iri(self.iri_value(tok), tok)
        if tok.kind == "pname":
            self.advance()
            return self.pname_iri(tok)
        raise self.error("expected predicate")

    def predicate_object_list(self, subject: IRI | BlankNode) -> None:
        while True:
            predicate = self.verb()
            self.object_list(subject, predicate)
            if not (self.tok.kind == "punct" and self.tok.text == ";"):
                return
            while self.tok.kind == "punct" and self.tok.text == ";":
                self.advance()
            if self.tok.kind == "punct" and self.tok.text in ".]":
                return

    def object_list(self, subject: IRI | BlankNode, predicate: IRI) -> None:
        while True:
            obj = self.object()
            self.graph.insert(Triple(subject, predicate, obj))
            if not (self.tok.kind == "punct" and self.tok.text == ","):
                return
            self.advance()

    def object(self) -> Term:
        tok = self.tok
        if tok.kind in ("iri", "pname", "bnode"):
            return self.subject()
        if tok.kind in ("string", "long"):
            self.advance()
            quote = 3 if tok.kind == "long" else 1
            lexical = unescape_string(tok.text[quote:-quote], lambda m: self.error(m, tok))
            if self.tok.kind == "at":
                lang = self.advance().text[1:]
                return Literal(lexical, lang=lang)
            if self.tok.kind == "dtype":
                self.advance()
                dtok = self.tok
                if dtok.kind not in ("iri", "pname"):
                    raise self.error("expected datatype IRI")
                return Literal(lexical, datatype=self.subject())
            return Literal(lexical)
        if tok.kind == "number":
            self.advance()
            text = tok.text
            if "e" in text or "E" in text:
                dt = XSD.double
            elif "." in text:
                dt = XSD.decimal
            else:
                dt = XSD.integer
            return Literal(text, datatype=dt)
        if tok.kind == "word" and tok.text in ("true", "false"):
            self.advance()
            return Literal(tok.text, datatype=XSD.boolean)
        if tok.kind == "punct" and tok.text in "[(":
            raise self.error("blank node property lists and collections are not supported")
        raise self.error("expected object")


def _decode(data: bytes | str) -> str:
    if isinstance(data, str):
        return data
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        text = data[: exc.start]
        line = text.count(b"\n") + 1
        raise RdfSyntaxError(f"input is not valid UTF-8 (byte offset {exc.start})", line) from None


def parse_turtle(data: bytes | str, base_iri: str | None = None) -> Graph:
    """Parse Turtle into a new :class:`Graph`; ``@prefix`` lines fill ``graph.prefixes``."""
    text = _decode(data)
    if text.startswith("\ufeff"):
        text = text[1:]
    return _TurtleParser(text, base_iri).parse()


def _write_iri(iri: IRI, prefixes: dict[str, str]) -> str:
    best = None
    for label, ns in prefixes.items():
        if ns and iri.value.startswith(ns) and (best is None or len(ns) > len(best[1])):
            local = iri.value[len(ns):]
            if local == "" or SAFE_LOCAL.match(local):
                best = (label, ns)
    if best is None:
        return f"<{iri.value}>"
    return f"{best[0]}:{iri.value[len(best[1]):]}"


def _write_term(term: Term, prefixes: dict[str, str]) -> str:
    if isinstance(term, IRI):
        return _write_iri(term, prefixes)
    if isinstance(term, Literal):
        body = f'"{escape_string(term.lexical)}"'
        if term.lang is not None:
            return f"{body}@{term.lang}"
        if term.datatype is not None:
            return f"{body}^^{_write_iri(term.datatype, prefixes)}"
        return body
    return term.n3()


def serialize_turtle(graph: Graph) -> bytes:
    """Deterministic Turtle: prefixes sorted by label, subjects and predicates canonical."""
    prefixes = graph.prefixes
    lines = [f"@prefix {label}: <{ns}> ." for label, ns in sorted(prefixes.items())]
    by_subject: dict[Term, dict[IRI, list[Term]]] = {}
    for t in graph.triples():
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)
    if lines and by_subject:
        lines.append("")
    for subject, preds in by_subject.items():
        parts = []
        for predicate, objects in preds.items():
            verb = "a" if predicate == RDF_TYPE else _write_iri(predicate, prefixes)
            objs = ", ".join(_write_term(o, prefixes) for o in objects)
            parts.append(f"{verb} {objs}")
        lines.append(f"{_write_term(subject, prefixes)} " + " ;\n    ".join(parts) + " .")
    return ("\n".join(lines) + "\n").encode("utf-8") if lines else b""
