"""RDF terms, triples and triple patterns.

All lexical content is NFC-normalized on construction, so plain ``==``
comparison is the string equality the data model asks for.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass
from typing import Union

from ..errors import TermError

_IRI_FORBIDDEN = re.compile(r"[\s<>]")
_VAR_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
_LANG = re.compile(r"[A-Za-z]+(-[A-Za-z0-9]+)*\Z")
_BNODE_LABEL = re.compile(r"\w(?:[\w\-.]*[\w\-])?\Z")

_ESCAPES = {"\\": "\\\\", '"': '\\"', "\n": "\\n", "\r": "\\r", "\t": "\\t"}


def _nfc(value: str) -> str:
    return unicodedata.normalize("NFC", value)


def escape_string(value: str) -> str:
    """Escape a lexical form for a double-quoted N-Triples/Turtle string."""
    out = []
    for ch in value:
        if ch in _ESCAPES:
            out.append(_ESCAPES[ch])
        elif ord(ch) < 0x20 or ord(ch) == 0x7F:
            out.append(f"\\u{ord(ch):04X}")
        else:
            out.append(ch)
    return "".join(out)


@dataclass(frozen=True, slots=True)
class IRI:
    value: str

    def __post_init__(self) -> None:
        if not isinstance(self.value, str) or not self.value:
            raise TermError("IRI must be a non-empty string")
        value = _nfc(self.value)
        if _IRI_FORBIDDEN.search(value):
            raise TermError(f"IRI contains whitespace or angle brackets: {value!r}")
        object.__setattr__(self, "value", value)

    def n3(self) -> str:
        return f"<{self.value}>"

    @property
    def local_name(self) -> str:
        """Fragment after the last ``#``, ``/`` or ``:``."""
        for sep in ("#", "/", ":"):
            idx = self.value.rfind(sep)
            if idx != -1 and idx < len(self.value) - 1:
                return self.value[idx + 1:]
        return self.value

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True, slots=True)
class Literal:
    lexical: str
    datatype: IRI | None = None
    lang: str | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.lexical, str):
            raise TermError("literal lexical form must be a string")
        if self.datatype is not None and self.lang is not None:
            raise TermError("literal cannot carry both a datatype and a language tag")
        if self.datatype is not None and not isinstance(self.datatype, IRI):
            raise TermError("literal datatype must be an IRI")
        if self.lang is not None and not _LANG.match(self.lang):
            raise TermError(f"bad language tag: {self.lang!r}")
        object.__setattr__(self, "lexical", _nfc(self.lexical))

    def n3(self) -> str:
        body = f'"{escape_string(self.lexical)}"'
        if self.lang is not None:
            return f"{body}@{self.lang}"
        if self.datatype is not None:
            return f"{body}^^{self.datatype.n3()}"
        return body

    def __str__(self) -> str:
        return self.lexical


@dataclass(frozen=True, slots=True)
class BlankNode:
    label: str

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not _BNODE_LABEL.match(self.label):
            raise TermError(f"bad blank node label: {self.label!r}")
        object.__setattr__(self, "label", _nfc(self.label))

    def n3(self) -> str:
        return f"_:{self.label}"

    def __str__(self) -> str:
        return self.n3()


Term = Union[IRI, Literal, BlankNode]


@dataclass(frozen=True, slots=True)
class Variable:
    name: str

    def __post_init__(self) -> None:
        if not isinstance(self.name, str) or not _VAR_NAME.match(self.name):
            raise TermError(f"bad variable name: {self.name!r}")

    def n3(self) -> str:
        return f"?{self.name}"

    def __str__(self) -> str:
        return self.n3()


PatternTerm = Union[IRI, Literal, BlankNode, Variable]


@dataclass(frozen=True, slots=True)
class Triple:
    subject: IRI | BlankNode
    predicate: IRI
    object: Term

    def __post_init__(self) -> None:
        if not isinstance(self.subject, (IRI, BlankNode)):
            raise TermError(f"triple subject must be an IRI or blank node, got {self.subject!r}")
        if not isinstance(self.predicate, IRI):
            raise TermError(f"triple predicate must be an IRI, got {self.predicate!r}")
        if not isinstance(self.object, (IRI, Literal, BlankNode)):
            raise TermError(f"triple object must be a term, got {self.object!r}")

    def __iter__(self):
        yield self.subject
        yield self.predicate
        yield self.object

    def n3(self) -> str:
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."

    def sort_key(self) -> tuple[str, str, str]:
        return (self.subject.n3(), self.predicate.n3(), self.object.n3())


@dataclass(frozen=True, slots=True)
class TriplePattern:
    subject: PatternTerm
    predicate: PatternTerm
    object: PatternTerm

    def __iter__(self):
        yield self.subject
        yield self.predicate
        yield self.object

    def variables(self) -> list[str]:
        """Variable names in subject, predicate, object order, without repeats."""
        seen: list[str] = []
        for t in self:
            if isinstance(t, Variable) and t.name not in seen:
                seen.append(t.name)
        return seen

    def unify(self, triple: Triple) -> dict[str, Term] | None:
        """Bindings that make this pattern equal ``triple``, or None."""
        binding: dict[str, Term] = {}
        for p, t in zip(self, triple):
            if isinstance(p, Variable):
                bound = binding.get(p.name)
                if bound is None:
                    binding[p.name] = t
                elif bound != t:
                    return None
            elif p != t:
                return None
        return binding


def term_key(term: Term | None) -> str:
    """Canonical sort key; unbound sorts first."""
    return "" if term is None else term.n3()
