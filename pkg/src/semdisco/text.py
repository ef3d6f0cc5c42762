"""Tokenization and label normalization shared by the ontology and annotator."""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

from .rdf.terms import IRI

# Word characters plus combining marks, so decomposed accents stay in-token.
_WORD = re.compile(r"[\w\u0300-\u036F\u1AB0-\u1AFF\u1DC0-\u1DFF\u20D0-\u20FF\uFE20-\uFE2F]+")


@dataclass(frozen=True, slots=True)
class Token:
    text: str
    start: int
    end: int


def normalize(text: str) -> list[Token]:
    """Lowercase NFC tokens with offsets into the original ``text``.

    Whitespace and punctuation separate tokens. ``@handle`` and ``#tag``
    lose their sigil because the sigil is punctuation; underscores stay
    inside a token.
    """
    return [
        Token(unicodedata.normalize("NFC", m.group()).lower(), m.start(), m.end())
        for m in _WORD.finditer(text)
    ]


def normalize_phrase(label: str) -> str:
    """Gazetteer key: normalized tokens joined by single spaces."""
    return " ".join(t.text for t in normalize(label))


def split_camel(name: str) -> str:
    """``DanielAndrews`` -> ``Daniel Andrews``; underscores become spaces."""
    out: list[str] = []
    chars = name.replace("_", " ")
    for i, ch in enumerate(chars):
        if i and ch != " " and out[-1] != " ":
            prev = chars[i - 1]
            nxt = chars[i + 1] if i + 1 < len(chars) else ""
            boundary = (
                (ch.isupper() and prev.islower())
                or (ch.isupper() and prev.isupper() and nxt.islower())
                or (ch.isdigit() and prev.isalpha())
                or (ch.isalpha() and prev.isdigit())
            )
            if boundary:
                out.append(" ")
        out.append(ch)
    return " ".join("".join(out).split())


def local_label(iri: IRI) -> str:
    return split_camel(iri.local_name)
