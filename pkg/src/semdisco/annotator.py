"""Gazetteer-based annotation of short texts against an ontology index."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .errors import SemdiscoError
from .ontology import OntologyIndex, realize, relation_label
from .rdf.graph import Graph
from .rdf.namespaces import OWL_SAMEAS, POL, RDF_TYPE, RDFS_SUBCLASSOF
from .rdf.terms import IRI, Term
from .text import Token, normalize, normalize_phrase

__all__ = [
    "Annotation",
    "Entry",
    "Gazetteer",
    "InferredStatement",
    "annotate",
    "build_gazetteer",
    "infer_statements",
    "load_trigger_lexicon",
    "normalize",
]

MAX_PHRASE_TOKENS = 6

DEFAULT_TRIGGERS = {"vote": POL.voteFor, "votes": POL.voteFor, "voting": POL.voteFor}

INDIVIDUAL, CLASS, RELATION = "individual", "class", "relation"


@dataclass(frozen=True)
class Entry:
    target: IRI
    kind: str
    concept: IRI | None = None
    degree: int = 0


@dataclass(frozen=True)
class Annotation:
    start: int
    end: int
    surface: str
    target: IRI
    kind: str
    concept: IRI | None = None
    alternatives: tuple[IRI, ...] = ()

    def to_dict(self) -> dict:
        out = {
            "start": self.start,
            "end": self.end,
            "surface": self.surface,
            "target": self.target.value,
            "kind": self.kind,
        }
        if self.concept is not None:
            out["concept"] = self.concept.value
        if self.alternatives:
            out["alternatives"] = [a.value for a in self.alternatives]
        return out


@dataclass(frozen=True)
class InferredStatement:
    subject: str
    relation: str
    object: str
    provenance: str  # asserted-in-ontology | derived-from-annotation
    text: str = ""

    def __post_init__(self) -> None:
        if not (self.subject and self.relation and self.object):
            raise ValueError("inferred statement labels must be non-empty")
        if not self.text:
            object.__setattr__(self, "text", f"{self.subject} {self.relation} {self.object}")

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "relation": self.relation,
            "object": self.object,
            "provenance": self.provenance,
            "text": self.text,
        }


@dataclass
class Gazetteer:
    entries: dict[str, list[Entry]] = field(default_factory=dict)
    triggers: dict[str, IRI] = field(default_factory=dict)
    # phrase -> individuals of the same concept sharing it
    ambiguities: dict[str, tuple[IRI, ...]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.entries) + len(self.triggers)

    def lookup(self, phrase: str) -> list[Entry]:
        return self.entries.get(phrase, [])


def load_trigger_lexicon(path: str | Path) -> dict[str, IRI]:
    """Read ``[{"trigger": ..., "relation": IRI}, ...]``."""
    try:
        doc = json.loads(Path(path).read_bytes())
    except json.JSONDecodeError as exc:
        raise SemdiscoError(f"trigger lexicon is not valid JSON: {exc}") from None
    if not isinstance(doc, list):
        raise SemdiscoError("trigger lexicon must be a JSON array")
    out: dict[str, IRI] = {}
    for item in doc:
        try:
            phrase = normalize_phrase(item["trigger"])
            relation = IRI(item["relation"])
        except (KeyError, TypeError, ValueError) as exc:
            raise SemdiscoError(f"bad trigger lexicon entry {item!r}: {exc}") from None
        if phrase:
            out[phrase] = relation
    return out


def _concept(index: OntologyIndex, individual: Term, realized) -> IRI | None:
    classes = realized.get(individual)
    if classes is None or not classes.most_specific:
        return None
    return min(classes.most_specific, key=lambda c: c.value)


def build_gazetteer(
    index: OntologyIndex,
    trigger_lexicon: Mapping[str, IRI] | None = None,
    match_given_names: bool = False,
) -> Gazetteer:
    """One entry per label of every individual and class, plus relation triggers.

    ``match_given_names`` additionally indexes the first token of multi-word
    labels of individuals classified under Person; it is off by default.
    """
    gaz = Gazetteer()
    realized = realize(index)
    person = POL.Person

    def add(phrase: str, entry: Entry) -> None:
        if not phrase or len(phrase.split(" ")) > MAX_PHRASE_TOKENS:
            return
        bucket = gaz.entries.setdefault(phrase, [])
        if any(e.target == entry.target for e in bucket):
            return
        bucket.append(entry)

    for ind in sorted((i for i in index.individuals if isinstance(i, IRI)), key=lambda t: t.value):
        concept = _concept(index, ind, realized)
        entry = Entry(ind, INDIVIDUAL, concept, index.degree.get(ind, 0))
        for label in index.labels.get(ind, ()):
            phrase = normalize_phrase(label)
            add(phrase, entry)
            if match_given_names and concept is not None and person in realized[ind].inferred:
                words = phrase.split(" ")
                if len(words) > 1:
                    add(words[0], entry)

    for cls in sorted(index.classes, key=lambda t: t.value):
        for label in index.class_labels.get(cls, ()):
            add(normalize_phrase(label), Entry(cls, CLASS))

    for phrase, bucket in gaz.entries.items():
        inds = [e for e in bucket if e.kind == INDIVIDUAL]
        by_concept: dict[IRI | None, list[Entry]] = {}
        for e in inds:
            by_concept.setdefault(e.concept, []).append(e)
        clashing = [e.target for group in by_concept.values() if len(group) > 1 for e in group]
        if clashing:
            gaz.ambiguities[phrase] = tuple(sorted(clashing, key=lambda t: t.value))

    triggers = DEFAULT_TRIGGERS if trigger_lexicon is None else trigger_lexicon
    for phrase, relation in triggers.items():
        key = normalize_phrase(phrase)
        if key:
            gaz.triggers[key] = relation
    return gaz


def _choose(bucket: Sequence[Entry]) -> tuple[Entry, tuple[IRI, ...]]:
    """Individuals beat classes; among individuals more triples win, then the smaller IRI."""
    ranked = sorted(bucket, key=lambda e: (e.kind != INDIVIDUAL, -e.degree, e.target.value))
    best = ranked[0]
    alternatives = tuple(e.target for e in ranked[1:] if e.kind == best.kind)
    return best, alternatives


def annotate(gazetteer: Gazetteer, text: str) -> list[Annotation]:
    """Leftmost-longest gazetteer matching; matched tokens are consumed."""
    tokens: list[Token] = normalize(text)
    out: list[Annotation] = []
    i = 0
    while i < len(tokens):
        matched = False
        for n in range(min(MAX_PHRASE_TOKENS, len(tokens) - i), 0, -1):
            phrase = " ".join(t.text for t in tokens[i:i + n])
            start, end = tokens[i].start, tokens[i + n - 1].end
            bucket = gazetteer.lookup(phrase)
            if bucket:
                entry, alternatives = _choose(bucket)
                out.append(Annotation(start, end, text[start:end], entry.target, entry.kind, entry.concept, alternatives))
            elif phrase in gazetteer.triggers:
                out.append(Annotation(start, end, text[start:end], gazetteer.triggers[phrase], RELATION))
            else:
                continue
            i += n
            matched = True
            break
        if not matched:
            i += 1
    return out


def _article(word: str) -> str:
    return "an" if word[:1].lower() in "aeiou" else "a"


def infer_statements(
    annotations: Sequence[Annotation],
    index: OntologyIndex,
    graph: Graph,
) -> list[InferredStatement]:
    """Facts implied by one text's annotations.

    In order: each individual's concept, each annotated concept's direct
    superclasses, object-property triples in ``graph`` linking two annotated
    individuals, and each relation trigger paired with the nearest
    range-compatible individual (right first, then left).
    """
    out: list[InferredStatement] = []
    seen: set[tuple[str, str, str]] = set()

    def emit(stmt: InferredStatement) -> None:
        key = (stmt.subject, stmt.relation, stmt.object)
        if key not in seen:
            seen.add(key)
            out.append(stmt)

    closure = index.closure
    individuals = [a for a in annotations if a.kind == INDIVIDUAL]

    for a in annotations:
        if a.kind == INDIVIDUAL and a.concept is not None:
            concept_label = index.label_of(a.concept)
            emit(InferredStatement(a.surface, f"is {_article(concept_label)}", concept_label, "derived-from-annotation"))
            parent_source = a.concept
        elif a.kind == CLASS:
            parent_source = a.target
        else:
            continue
        for sup in index.direct_superclasses(parent_source):
            sub_label, sup_label = index.label_of(parent_source), index.label_of(sup)
            emit(InferredStatement(sub_label, f"is {_article(sup_label)}", sup_label, "asserted-in-ontology"))

    skip = {RDF_TYPE, OWL_SAMEAS, RDFS_SUBCLASSOF}
    for a in individuals:
        for b in individuals:
            if a.target == b.target:
                continue
            for t in sorted(graph.lookup(a.target, None, b.target), key=lambda t: t.predicate.value):
                if t.predicate in skip or t.predicate not in index.object_properties:
                    continue
                emit(InferredStatement(a.surface, relation_label(index, t.predicate), b.surface, "asserted-in-ontology"))

    for pos, rel in enumerate(annotations):
        if rel.kind != RELATION:
            continue
        ranges = index.ranges.get(rel.target, frozenset())

        def compatible(ann: Annotation) -> bool:
            if ann.kind != INDIVIDUAL:
                return False
            if not ranges:
                return True
            types = index.asserted_types(ann.target) | ({ann.concept} if ann.concept else set())
            return any(closure.is_subclass_of(t, r) for t in types for r in ranges)

        target = next((a for a in annotations[pos + 1:] if compatible(a)), None)
        if target is None:
            target = next((a for a in reversed(annotations[:pos]) if compatible(a)), None)
        if target is None:
            continue
        label = relation_label(index, rel.target)
        words = label.split()
        if words and normalize_phrase(words[0]) == normalize_phrase(rel.surface):
            words = words[1:]
        phrase = " ".join(words) or label
        text = " ".join([rel.surface, *words, target.surface])
        emit(InferredStatement(rel.surface, phrase, target.surface, "derived-from-annotation", text))
    return out


def annotations_to_json(text_id: str, annotations: Iterable[Annotation], inferred: Iterable[InferredStatement]) -> str:
    """One JSON Lines record."""
    return json.dumps(
        {
            "text_id": text_id,
            "annotations": [a.to_dict() for a in annotations],
            "inferred": [s.to_dict() for s in inferred],
        },
        ensure_ascii=False,
        sort_keys=False,
    )
