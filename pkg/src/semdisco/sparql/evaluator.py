"""Basic-graph-pattern evaluation by nested index lookups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..rdf.graph import Graph
from ..rdf.terms import Term, TriplePattern, Variable, term_key
from .parser import Query

Row = tuple["Term | None", ...]


@dataclass(frozen=True)
class ResultTable:
    header: tuple[str, ...]
    rows: tuple[Row, ...]

    def __post_init__(self) -> None:
        for row in self.rows:
            if len(row) != len(self.header):
                raise ValueError(f"row arity {len(row)} does not match header arity {len(self.header)}")

    @classmethod
    def build(cls, header, rows, limit: int | None = None) -> ResultTable:
        """Deduplicate and canonically sort ``rows``, then apply ``limit``."""
        unique = sorted(set(map(tuple, rows)), key=lambda r: tuple(term_key(t) for t in r))
        if limit is not None:
            unique = unique[:limit]
        return cls(tuple(header), tuple(unique))

    def __len__(self) -> int:
        return len(self.rows)

    def bindings(self) -> Iterator[dict[str, Term]]:
        """Rows as dicts, unbound variables left out."""
        for row in self.rows:
            yield {name: t for name, t in zip(self.header, row) if t is not None}

    def column(self, name: str) -> list[Term | None]:
        idx = self.header.index(name)
        return [row[idx] for row in self.rows]


def _bound_count(pattern: TriplePattern, bound: set[str]) -> int:
    return sum(1 for t in pattern if not isinstance(t, Variable) or t.name in bound)


def plan(graph: Graph, patterns: tuple[TriplePattern, ...]) -> list[TriplePattern]:
    """Greedy join order: most bound positions first, then smallest index bucket."""
    remaining = list(patterns)
    ordered: list[TriplePattern] = []
    bound: set[str] = set()
    while remaining:
        def cost(item: tuple[int, TriplePattern]) -> tuple[int, int, int]:
            idx, p = item
            fixed = [None if isinstance(t, Variable) else t for t in p]
            estimate = graph.count(*fixed) if sum(x is not None for x in fixed) == 1 else 0
            return (-_bound_count(p, bound), estimate, idx)

        idx, best = min(enumerate(remaining), key=cost)
        ordered.append(best)
        bound.update(best.variables())
        del remaining[idx]
    return ordered


def solutions(graph: Graph, patterns, reorder: bool = True) -> list[dict[str, Term]]:
    """All bindings under which every pattern is a triple of ``graph``."""
    order = plan(graph, tuple(patterns)) if reorder else list(patterns)
    results: list[dict[str, Term]] = [{}]
    for pattern in order:
        extended: list[dict[str, Term]] = []
        for binding in results:
            key = []
            for t in pattern:
                if isinstance(t, Variable):
                    key.append(binding.get(t.name))
                else:
                    key.append(t)
            for triple in graph.lookup(*key):
                new = dict(binding)
                ok = True
                for p, value in zip(pattern, triple):
                    if isinstance(p, Variable):
                        seen = new.get(p.name)
                        if seen is None:
                            new[p.name] = value
                        elif seen != value:
                            ok = False
                            break
                if ok:
                    extended.append(new)
        results = extended
        if not results:
            break
    return results


def evaluate(graph: Graph, query: Query, reorder: bool = True) -> ResultTable:
    """Evaluate ``query``; rows are projected, deduplicated, sorted, then limited."""
    header = query.projection
    rows = [tuple(b.get(v) for v in header) for b in solutions(graph, query.patterns, reorder)]
    return ResultTable.build(header, rows, query.limit)
