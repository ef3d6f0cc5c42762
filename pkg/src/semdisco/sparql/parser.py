"""Parser for the SELECT / basic-graph-pattern SPARQL subset.

Grammar (keywords case-insensitive)::

    query   := (PREFIX pname_ns <iri> | BASE <iri>)* SELECT ('*' | var+)
               WHERE? '{' pattern ('.' pattern)* '.'? '}' (LIMIT int)?

Whitespace between a prefix label's colon and its local part is accepted,
so ``Politics: labour`` reads as ``Politics:labour``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from urllib.parse import urljoin

from ..errors import QueryValidationError, SparqlSyntaxError, TermError, UnknownPrefixError
from ..rdf.namespaces import RDF_TYPE, XSD
from ..rdf.terms import IRI, BlankNode, Literal, PatternTerm, TriplePattern, Variable
from ..rdf.turtle import unescape_string

_TOKEN = re.compile(
    r"""
    (?P<ws>(?:\s+|\#[^\n]*)+)
  | (?P<iri><[^<>"{}|^`\\\x00-\x20]*>)
  | (?P<var>[?$][A-Za-z_][A-Za-z0-9_]*)
  | (?P<string>"(?:[^"\\\n\r]|\\.)*"|'(?:[^'\\\n\r]|\\.)*')
  | (?P<dtype>\^\^)
  | (?P<lang>@[A-Za-z]+(?:-[A-Za-z0-9]+)*)
  | (?P<bnode>_:[\w](?:[\w\-.]*[\w\-])?)
  | (?P<number>[+-]?(?:\d*\.\d+(?:[eE][+-]?\d+)?|\d+[eE][+-]?\d+|\d+))
  | (?P<pname>(?:[^\W\d_][\w\-]*)?:(?:[\w\-]+(?:[\w\-.]*[\w\-])?)?)
  | (?P<word>[A-Za-z_][\w\-]*)
  | (?P<punct>[*{}.])
    """,
    re.VERBOSE,
)

_KEYWORDS = {"PREFIX", "BASE", "SELECT", "WHERE", "LIMIT"}


@dataclass(frozen=True)
class Query:
    prefixes: dict[str, str]
    projection: tuple[str, ...]
    patterns: tuple[TriplePattern, ...]
    star: bool = False
    limit: int | None = None
    text: str = field(default="", compare=False, repr=False)

    def variables(self) -> tuple[str, ...]:
        """All BGP variables in order of first appearance."""
        seen: list[str] = []
        for pattern in self.patterns:
            for name in pattern.variables():
                if name not in seen:
                    seen.append(name)
        return tuple(seen)


@dataclass
class _Tok:
    kind: str
    text: str
    pos: int


def _tokenize(text: str) -> list[_Tok]:
    out: list[_Tok] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise SparqlSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append(_Tok(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(_Tok("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.prefixes: dict[str, str] = {}
        self.base: str | None = None

    @property
    def tok(self) -> _Tok:
        return self.toks[self.i]

    def peek(self, offset: int = 1) -> _Tok:
        return self.toks[min(self.i + offset, len(self.toks) - 1)]

    def advance(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: _Tok | None = None) -> SparqlSyntaxError:
        tok = tok or self.tok
        shown = tok.text or "end of query"
        return SparqlSyntaxError(f"{message} (found {shown!r})", tok.pos)

    def is_keyword(self, word: str, tok: _Tok | None = None) -> bool:
        tok = tok or self.tok
        return tok.kind == "word" and tok.text.upper() == word

    def expect_keyword(self, word: str) -> None:
        if not self.is_keyword(word):
            raise self.error(f"expected {word}")
        self.advance()

    def expect_punct(self, ch: str) -> None:
        if self.tok.kind != "punct" or self.tok.text != ch:
            raise self.error(f"expected {ch!r}")
        self.advance()

    def iri(self, tok: _Tok) -> IRI:
        value = unescape_string(tok.text[1:-1], lambda msg: SparqlSyntaxError(msg, tok.pos))
        if self.base and not re.match(r"[A-Za-z][A-Za-z0-9+.\-]*:", value):
            value = urljoin(self.base, value)
        try:
            return IRI(value)
        except TermError as exc:
            raise SparqlSyntaxError(str(exc), tok.pos) from None

    def parse(self) -> Query:
        while True:
            if self.is_keyword("PREFIX"):
                self.advance()
                tok = self.tok
                if tok.kind != "pname" or not tok.text.endswith(":") or tok.text.count(":") != 1:
                    raise self.error("expected prefix label such as 'ex:'")
                self.advance()
                if self.tok.kind != "iri":
                    raise self.error("expected namespace IRI")
                self.prefixes[tok.text[:-1]] = self.iri(self.advance()).value
            elif self.is_keyword("BASE"):
                self.advance()
                if self.tok.kind != "iri":
                    raise self.error("expected base IRI")
                self.base = self.iri(self.advance()).value
            else:
                break

        self.expect_keyword("SELECT")
        star = False
        projection: list[str] = []
        if self.tok.kind == "punct" and self.tok.text == "*":
            self.advance()
            star = True
        else:
            while self.tok.kind == "var":
                name = self.advance().text[1:]
                if name not in projection:
                    projection.append(name)
            if not projection:
                raise self.error("expected '*' or at least one variable")

        if self.is_keyword("WHERE"):
            self.advance()
        self.expect_punct("{")
        patterns = [self.pattern()]
        while self.tok.kind == "punct" and self.tok.text == ".":
            self.advance()
            if self.tok.kind == "punct" and self.tok.text == "}":
                break
            patterns.append(self.pattern())
        self.expect_punct("}")

        limit = None
        if self.is_keyword("LIMIT"):
            self.advance()
            tok = self.tok
            if tok.kind != "number" or not tok.text.isdigit():
                raise self.error("LIMIT needs a non-negative integer")
            limit = int(self.advance().text)
        if self.tok.kind != "eof":
            raise self.error("unexpected trailing input")

        query = Query(self.prefixes, tuple(projection), tuple(patterns), star, limit, self.text)
        bgp_vars = query.variables()
        if star:
            return Query(self.prefixes, bgp_vars, tuple(patterns), True, limit, self.text)
        missing = [v for v in projection if v not in bgp_vars]
        if missing:
            raise QueryValidationError(
                "projected variable(s) not in the graph pattern: " + ", ".join("?" + v for v in missing)
            )
        return query

    def pattern(self) -> TriplePattern:
        subject = self.term("subject")
        predicate = self.term("predicate")
        obj = self.term("object")
        if isinstance(subject, Literal):
            raise self.error("a literal cannot be a subject")
        if isinstance(predicate, (Literal, BlankNode)):
            raise self.error("predicate must be an IRI or variable")
        return TriplePattern(subject, predicate, obj)

    def term(self, position: str) -> PatternTerm:
        tok = self.tok
        if tok.kind == "var":
            self.advance()
            return Variable(tok.text[1:])
        if tok.kind == "iri":
            self.advance()
            return self.iri(tok)
        if tok.kind == "pname":
            self.advance()
            label, _, local = tok.text.partition(":")
            nxt = self.tok
            # Tolerate "label: local" with whitespace after the colon.
            if (
                not local
                and nxt.kind == "word"
                and nxt.text != "a"
                and nxt.text.upper() not in _KEYWORDS
                and nxt.pos > tok.pos + len(tok.text)
            ):
                local = self.advance().text
            if label not in self.prefixes:
                raise UnknownPrefixError(label, 1 + self.text.count("\n", 0, tok.pos),
                                         tok.pos - self.text.rfind("\n", 0, tok.pos))
            try:
                return IRI(self.prefixes[label] + local)
            except TermError as exc:
                raise SparqlSyntaxError(str(exc), tok.pos) from None
        if tok.kind == "word" and tok.text == "a" and position == "predicate":
            self.advance()
            return RDF_TYPE
        if tok.kind == "bnode":
            self.advance()
            return BlankNode(tok.text[2:])
        if tok.kind == "string":
            self.advance()
            lexical = unescape_string(tok.text[1:-1], lambda msg: SparqlSyntaxError(msg, tok.pos))
            if self.tok.kind == "lang":
                return Literal(lexical, lang=self.advance().text[1:])
            if self.tok.kind == "dtype":
                self.advance()
                dt = self.term("datatype")
                if not isinstance(dt, IRI):
                    raise self.error("datatype must be an IRI")
                return Literal(lexical, datatype=dt)
            return Literal(lexical)
        if tok.kind == "number":
            self.advance()
            text = tok.text
            dt = XSD.double if "e" in text.lower() else XSD.decimal if "." in text else XSD.integer
            return Literal(text, datatype=dt)
        if tok.kind == "word" and tok.text in ("true", "false"):
            self.advance()
            return Literal(tok.text, datatype=XSD.boolean)
        raise self.error(f"expected {position}")


def parse_query(text: str) -> Query:
    """Parse query text; raises SparqlSyntaxError, UnknownPrefixError or QueryValidationError."""
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return _Parser(text).parse()
