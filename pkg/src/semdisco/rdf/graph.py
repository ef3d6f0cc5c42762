"""In-memory indexed triple store.

A :class:`Graph` keeps a set of triples plus one index per triple position.
It tolerates a single writer or any number of concurrent readers; callers that
share a graph across threads must not mutate it while reading.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Iterable, Iterator

from .terms import IRI, BlankNode, Term, Triple, TriplePattern, Variable


class Graph:
    def __init__(self, triples: Iterable[Triple] = (), prefixes: dict[str, str] | None = None):
        self._triples: set[Triple] = set()
        self._by_subject: dict[Term, set[Triple]] = defaultdict(set)
        self._by_predicate: dict[Term, set[Triple]] = defaultdict(set)
        self._by_object: dict[Term, set[Triple]] = defaultdict(set)
        self.prefixes: dict[str, str] = dict(prefixes or {})
        for t in triples:
            self.insert(t)

    # -- mutation ---------------------------------------------------------

    def insert(self, triple: Triple) -> bool:
        """Add ``triple``; False when it was already stored."""
        if not isinstance(triple, Triple):
            raise TypeError(f"expected Triple, got {type(triple).__name__}")
        if triple in self._triples:
            return False
        self._triples.add(triple)
        self._by_subject[triple.subject].add(triple)
        self._by_predicate[triple.predicate].add(triple)
        self._by_object[triple.object].add(triple)
        return True

    def add(self, subject: IRI | BlankNode, predicate: IRI, obj: Term) -> bool:
        return self.insert(Triple(subject, predicate, obj))

    def update(self, triples: Iterable[Triple]) -> int:
        """Insert many triples, returning how many were new."""
        return sum(self.insert(t) for t in triples)

    def remove(self, triple: Triple) -> bool:
        if triple not in self._triples:
            return False
        self._triples.discard(triple)
        for index, key in (
            (self._by_subject, triple.subject),
            (self._by_predicate, triple.predicate),
            (self._by_object, triple.object),
        ):
            bucket = index[key]
            bucket.discard(triple)
            if not bucket:
                del index[key]
        return True

    # -- lookup -----------------------------------------------------------

    def __len__(self) -> int:
        return len(self._triples)

    def size(self) -> int:
        return len(self._triples)

    def __contains__(self, triple: object) -> bool:
        return triple in self._triples

    def __iter__(self) -> Iterator[Triple]:
        return iter(self._triples)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __repr__(self) -> str:
        return f"<Graph with {len(self)} triples>"

    def triples(self) -> list[Triple]:
        """All triples in canonical order."""
        return sorted(self._triples, key=Triple.sort_key)

    def copy(self) -> Graph:
        return Graph(self._triples, self.prefixes)

    def lookup(
        self,
        subject: Term | None = None,
        predicate: Term | None = None,
        obj: Term | None = None,
    ) -> Iterable[Triple]:
        """Unordered triples matching the given positions (None is a wildcard)."""
        candidates: set[Triple] | None = None
        for index, key in (
            (self._by_subject, subject),
            (self._by_predicate, predicate),
            (self._by_object, obj),
        ):
            if key is None:
                continue
            bucket = index.get(key)
            if not bucket:
                return ()
            if candidates is None or len(bucket) < len(candidates):
                candidates = bucket
        if candidates is None:
            return list(self._triples)
        return [
            t
            for t in candidates
            if (subject is None or t.subject == subject)
            and (predicate is None or t.predicate == predicate)
            and (obj is None or t.object == obj)
        ]

    def count(self, subject: Term | None = None, predicate: Term | None = None, obj: Term | None = None) -> int:
        if subject is None and predicate is None and obj is None:
            return len(self._triples)
        if predicate is None and obj is None:
            return len(self._by_subject.get(subject, ()))
        if subject is None and obj is None:
            return len(self._by_predicate.get(predicate, ()))
        if subject is None and predicate is None:
            return len(self._by_object.get(obj, ()))
        return len(list(self.lookup(subject, predicate, obj)))

    def match(self, pattern: TriplePattern) -> list[Triple]:
        """Triples unifying with ``pattern``, in canonical order."""
        fixed = [None if isinstance(t, Variable) else t for t in pattern]
        found = self.lookup(*fixed)
        if any(isinstance(t, Variable) for t in pattern):
            found = [t for t in found if pattern.unify(t) is not None]
        return sorted(found, key=Triple.sort_key)

    def subjects(self, predicate: Term | None = None, obj: Term | None = None) -> set[Term]:
        return {t.subject for t in self.lookup(None, predicate, obj)}

    def objects(self, subject: Term | None = None, predicate: Term | None = None) -> set[Term]:
        return {t.object for t in self.lookup(subject, predicate, None)}

    def value(self, subject: Term, predicate: Term) -> Term | None:
        """One object for (subject, predicate), the canonically smallest."""
        objs = sorted(self.objects(subject, predicate), key=lambda t: t.n3())
        return objs[0] if objs else None

    def terms(self) -> set[Term]:
        """All terms occurring in any position."""
        return set(self._by_subject) | set(self._by_predicate) | set(self._by_object)

    def mentions(self, term: Term) -> bool:
        return term in self._by_subject or term in self._by_object or term in self._by_predicate

    def check_indexes(self) -> bool:
        """True iff every index agrees exactly with the triple set."""
        for attr, index in (
            ("subject", self._by_subject),
            ("predicate", self._by_predicate),
            ("object", self._by_object),
        ):
            flattened: set[Triple] = set()
            for key, bucket in index.items():
                if not bucket:
                    return False
                for t in bucket:
                    if getattr(t, attr) != key or t in flattened:
                        return False
                    flattened.add(t)
            if flattened != self._triples:
                return False
        return True
