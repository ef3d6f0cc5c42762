"""Ontology view over a graph plus a small forward-chaining reasoner.

The reasoner covers the fragment the bundled ontologies use: subclass
hierarchies, type lifting, ``owl:sameAs`` closure and property sharing,
class disjointness, and functional data properties. From those it offers
consistency checking, concept satisfiability, classification and realization.
"""

from __future__ import annotations

import json
import re
from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping

from .rdf.graph import Graph
from .rdf.namespaces import OWL, OWL_SAMEAS, POL, RDF, RDF_TYPE, RDFS, RDFS_LABEL, RDFS_SUBCLASSOF
from .rdf.terms import IRI, Literal, Term, Triple
from .text import local_label, split_camel

_WORDLIKE = re.compile(r"[^\W\d_][^\W\d]*")

DEFAULT_LABEL_PREDICATES = (RDFS_LABEL, POL.value, POL.ResolvedName)

# rdf:type objects that are vocabulary, not domain classes.
_META_TYPES = frozenset(
    {
        OWL.Class,
        RDFS.Class,
        OWL.ObjectProperty,
        OWL.DatatypeProperty,
        OWL.AnnotationProperty,
        OWL.FunctionalProperty,
        OWL.InverseFunctionalProperty,
        OWL.TransitiveProperty,
        OWL.SymmetricProperty,
        OWL.Ontology,
        OWL.NamedIndividual,
        OWL.Restriction,
        RDF.Property,
    }
)


def subclass_edges(graph: Graph, diagnostics: Counter | None = None) -> set[tuple[IRI, IRI]]:
    """Asserted subclass edges between classes.

    Edges whose subject is an individual (typed by a domain class and not
    itself declared a class) are skipped, as are anonymous superclasses.
    """
    declared = graph.subjects(RDF_TYPE, OWL.Class) | graph.subjects(RDF_TYPE, RDFS.Class)
    typed = {t.subject for t in graph.lookup(None, RDF_TYPE, None) if t.object not in _META_TYPES}
    edges = set()
    for t in graph.lookup(None, RDFS_SUBCLASSOF, None):
        if not isinstance(t.subject, IRI) or not isinstance(t.object, IRI):
            if diagnostics is not None:
                diagnostics["anonymous-subclass-edge"] += 1
            continue
        if t.subject in typed and t.subject not in declared:
            if diagnostics is not None:
                diagnostics["subclass-edge-from-individual"] += 1
            continue
        edges.add((t.subject, t.object))
    return edges


def ancestor_map(edges: Iterable[tuple[IRI, IRI]], nodes: Iterable[IRI] = ()) -> dict[IRI, frozenset[IRI]]:
    """Reflexive-transitive superclass sets, by propagation to a fixed point."""
    parents: dict[IRI, set[IRI]] = defaultdict(set)
    universe = set(nodes)
    for sub, sup in edges:
        parents[sub].add(sup)
        universe.update((sub, sup))
    up = {c: {c} | parents[c] for c in universe}
    changed = True
    while changed:
        changed = False
        for c in universe:
            acc = up[c]
            before = len(acc)
            for p in list(acc):
                if p != c:
                    acc |= up[p]
            if len(acc) != before:
                changed = True
    return {c: frozenset(s) for c, s in up.items()}


@dataclass(frozen=True)
class SubclassClosure:
    ancestors: Mapping[IRI, frozenset[IRI]]

    def is_subclass_of(self, sub: Term, sup: Term) -> bool:
        return sub == sup or sup in self.ancestors.get(sub, ())

    def superclasses(self, cls: Term) -> frozenset[Term]:
        return self.ancestors.get(cls, frozenset({cls}))

    def subclasses(self, cls: Term) -> frozenset[IRI]:
        return frozenset(c for c, ups in self.ancestors.items() if cls in ups) | {cls}

    def pairs(self) -> set[tuple[IRI, IRI]]:
        return {(c, d) for c, ups in self.ancestors.items() for d in ups}


@dataclass(frozen=True)
class OntologyIndex:
    domain: str
    classes: frozenset[IRI]
    object_properties: frozenset[IRI]
    data_properties: frozenset[IRI]
    functional_properties: frozenset[IRI]
    individuals: frozenset[Term]
    subclass_edges: frozenset[tuple[IRI, IRI]]
    type_edges: frozenset[tuple[Term, IRI]]
    same_as: frozenset[tuple[Term, Term]]
    disjoint: frozenset[tuple[IRI, IRI]]
    labels: Mapping[Term, frozenset[str]]
    class_labels: Mapping[IRI, frozenset[str]]
    display_labels: Mapping[Term, str]
    ranges: Mapping[IRI, frozenset[IRI]]
    degree: Mapping[Term, int]
    diagnostics: Counter = field(default_factory=Counter, compare=False)

    @cached_property
    def closure(self) -> SubclassClosure:
        return SubclassClosure(ancestor_map(self.subclass_edges, self.classes))

    def asserted_types(self, individual: Term) -> frozenset[IRI]:
        return frozenset(c for x, c in self.type_edges if x == individual)

    def instances_of(self, cls: IRI, inferred: bool = False) -> frozenset[Term]:
        if not inferred:
            return frozenset(x for x, c in self.type_edges if c == cls)
        return frozenset(x for x, c in self.type_edges if self.closure.is_subclass_of(c, cls))

    def direct_superclasses(self, cls: IRI) -> list[IRI]:
        return sorted((sup for sub, sup in self.subclass_edges if sub == cls and sup != cls), key=lambda t: t.value)

    def label_of(self, term: Term) -> str:
        """Human-readable label for display."""
        if term in self.display_labels:
            return self.display_labels[term]
        if isinstance(term, IRI):
            return local_label(term)
        return str(term)

    @property
    def properties(self) -> frozenset[IRI]:
        return self.object_properties | self.data_properties


def _rdfs_label(graph: Graph, term: Term) -> str | None:
    labels = sorted(o.lexical for o in graph.objects(term, RDFS_LABEL) if isinstance(o, Literal) and o.lexical.strip())
    return labels[0] if labels else None


def build_index(
    graph: Graph,
    domain_name: str = "politics",
    label_predicates: Iterable[IRI] = DEFAULT_LABEL_PREDICATES,
) -> OntologyIndex:
    """Derive classes, properties, individuals and labels from ``graph``."""
    diagnostics: Counter = Counter()
    label_predicates = tuple(label_predicates)

    edges = subclass_edges(graph, diagnostics)
    declared = graph.subjects(RDF_TYPE, OWL.Class) | graph.subjects(RDF_TYPE, RDFS.Class)
    type_edges = set()
    for t in graph.lookup(None, RDF_TYPE, None):
        if t.object in _META_TYPES:
            continue
        if isinstance(t.object, IRI):
            type_edges.add((t.subject, t.object))
        else:
            diagnostics["non-iri-type"] += 1

    disjoint = set()
    for t in graph.lookup(None, OWL.disjointWith, None):
        if isinstance(t.subject, IRI) and isinstance(t.object, IRI):
            disjoint.add(tuple(sorted((t.subject, t.object), key=lambda x: x.value)))
        else:
            diagnostics["anonymous-disjointness"] += 1

    classes = {c for c in declared if isinstance(c, IRI)}
    classes.update(c for _, c in type_edges)
    for a, b in edges | disjoint:
        classes.update((a, b))
    individuals = {x for x, _ in type_edges} - {c for c in declared}

    obj_props = {p for p in graph.subjects(RDF_TYPE, OWL.ObjectProperty) if isinstance(p, IRI)}
    data_props = {p for p in graph.subjects(RDF_TYPE, OWL.DatatypeProperty) if isinstance(p, IRI)}
    functional = {p for p in graph.subjects(RDF_TYPE, OWL.FunctionalProperty) if isinstance(p, IRI)}
    ranges = {
        p: frozenset(o for o in graph.objects(p, RDFS.range) if isinstance(o, IRI))
        for p in obj_props | data_props
    }

    same_as = set()
    for t in graph.lookup(None, OWL_SAMEAS, None):
        if isinstance(t.object, Literal):
            diagnostics["literal-sameas"] += 1
        elif t.subject != t.object:
            same_as.add((t.subject, t.object))
    partners: dict[Term, set[Term]] = defaultdict(set)
    for a, b in same_as:
        partners[a].add(b)
        partners[b].add(a)

    labels: dict[Term, frozenset[str]] = {}
    for ind in individuals:
        found: set[str] = set()
        for pred in label_predicates:
            found.update(o.lexical for o in graph.objects(ind, pred) if isinstance(o, Literal))
        if isinstance(ind, IRI):
            found.add(local_label(ind))
        # partner names only when they read as words (skips ids like m.0q96)
        for name in partners.get(ind, ()):
            if isinstance(name, IRI) and _WORDLIKE.fullmatch(name.local_name):
                found.add(local_label(name))
        labels[ind] = frozenset(s.strip() for s in found if s.strip())

    class_labels = {}
    for c in classes:
        found = {o.lexical for o in graph.objects(c, RDFS_LABEL) if isinstance(o, Literal)}
        found.add(local_label(c))
        class_labels[c] = frozenset(s.strip() for s in found if s.strip())

    display = {}
    for term in classes | individuals | obj_props | data_props:
        label = _rdfs_label(graph, term)
        if label is None and term in individuals:
            resolved = sorted(o.lexical for o in graph.objects(term, POL.ResolvedName) if isinstance(o, Literal))
            label = resolved[0] if resolved else None
        if label is not None:
            display[term] = label

    if graph.subjects(RDF_TYPE, OWL.Ontology):
        diagnostics["ontology-header"] += 1

    degree = {x: graph.count(subject=x) + graph.count(obj=x) for x in individuals}

    return OntologyIndex(
        domain=domain_name.lower(),
        classes=frozenset(classes),
        object_properties=frozenset(obj_props),
        data_properties=frozenset(data_props),
        functional_properties=frozenset(functional),
        individuals=frozenset(individuals),
        subclass_edges=frozenset(edges),
        type_edges=frozenset(type_edges),
        same_as=frozenset(same_as),
        disjoint=frozenset(disjoint),
        labels=labels,
        class_labels=class_labels,
        display_labels=display,
        ranges=ranges,
        degree=degree,
        diagnostics=diagnostics,
    )


def classify(index: OntologyIndex) -> SubclassClosure:
    """Reflexive-transitive subclass closure (classification)."""
    return index.closure


@dataclass(frozen=True)
class Realization:
    inferred: frozenset[IRI] = frozenset()
    most_specific: frozenset[IRI] = frozenset()


def _most_specific(types: frozenset[IRI], closure: SubclassClosure) -> frozenset[IRI]:
    return frozenset(
        c
        for c in types
        if not any(d != c and closure.is_subclass_of(d, c) and not closure.is_subclass_of(c, d) for d in types)
    )


def realize(index: OntologyIndex, individuals: Iterable[Term] | None = None) -> dict[Term, Realization]:
    """Inferred and most-specific classes for each individual (realization)."""
    closure = index.closure
    asserted: dict[Term, set[IRI]] = defaultdict(set)
    for x, c in index.type_edges:
        asserted[x].add(c)
    targets = index.individuals if individuals is None else individuals
    out = {}
    for x in targets:
        inferred = frozenset(d for c in asserted.get(x, ()) for d in closure.superclasses(c))
        out[x] = Realization(inferred, _most_specific(inferred, closure))
    return out


# -- materialization -----------------------------------------------------------


def same_as_components(graph: Graph) -> list[frozenset[Term]]:
    """Connected components of the undirected non-literal sameAs graph (BFS)."""
    adjacency: dict[Term, set[Term]] = defaultdict(set)
    for t in graph.lookup(None, OWL_SAMEAS, None):
        if isinstance(t.object, Literal):
            continue
        adjacency[t.subject].add(t.object)
        adjacency[t.object].add(t.subject)
    seen: set[Term] = set()
    comps = []
    for start in adjacency:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            node = queue.popleft()
            for nxt in adjacency[node]:
                if nxt not in comp:
                    comp.add(nxt)
                    queue.append(nxt)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _close_same_as(graph: Graph, comps: list[frozenset[Term]]) -> int:
    added = 0
    for comp in comps:
        for x in comp:
            if isinstance(x, Literal):
                continue
            for y in comp:
                if x != y:
                    added += graph.insert(Triple(x, OWL_SAMEAS, y))
    return added


def _share_properties(graph: Graph, comps: list[frozenset[Term]]) -> int:
    new: set[Triple] = set()
    for comp in comps:
        if len(comp) < 2:
            continue
        for x in comp:
            for t in graph.lookup(x, None, None):
                if t.predicate == OWL_SAMEAS:
                    continue
                for y in comp:
                    if y != x:
                        new.add(Triple(y, t.predicate, t.object))
            for t in graph.lookup(None, None, x):
                if t.predicate == OWL_SAMEAS:
                    continue
                for y in comp:
                    if y != x:
                        new.add(Triple(t.subject, t.predicate, y))
    return graph.update(new)


def _lift_types(graph: Graph) -> int:
    up = ancestor_map(subclass_edges(graph))
    new = set()
    for t in graph.lookup(None, RDF_TYPE, None):
        for sup in up.get(t.object, ()):
            new.add(Triple(t.subject, RDF_TYPE, sup))
    return graph.update(new)


def materialize(graph: Graph) -> Graph:
    """Input plus everything entailed by type lifting and sameAs rules, to a fixed point.

    The subclass relation is re-derived every round because sameAs sharing
    can copy subclass edges onto new subjects.
    """
    out = graph.copy()
    while True:
        comps = same_as_components(out)
        added = _close_same_as(out, comps)
        added += _share_properties(out, comps)
        added += _lift_types(out)
        if not added:
            return out


# -- consistency -----------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    kind: str  # subclass-cycle | disjointness-violation | sameAs-literal-conflict
    iris: tuple[str, ...]
    explanation: str

    def to_dict(self) -> dict:
        return {"kind": self.kind, "iris": list(self.iris), "explanation": self.explanation}


@dataclass(frozen=True)
class ConsistencyReport:
    violations: tuple[Violation, ...] = ()

    @property
    def consistent(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"consistent": self.consistent, "violations": [v.to_dict() for v in self.violations]}

    def to_json(self) -> bytes:
        return (json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n").encode("utf-8")


def _name(term: Term) -> str:
    return term.value if isinstance(term, IRI) else term.n3()


def check_consistency(index: OntologyIndex, graph: Graph) -> ConsistencyReport:
    """Cycles, disjointness clashes (individuals and unsatisfiable classes), functional conflicts.

    Run it on the materialized graph; the type closure is recomputed here
    anyway so an unmaterialized graph gives the same verdict.
    """
    violations: list[Violation] = []
    closure = index.closure

    reported: set[frozenset[IRI]] = set()
    for c in sorted(index.classes, key=_name):
        cycle = frozenset(d for d in closure.superclasses(c) if closure.is_subclass_of(d, c))
        if len(cycle) > 1 and cycle not in reported:
            reported.add(cycle)
            members = sorted(cycle, key=_name)
            path = " ⊑ ".join(local_label(m) for m in members + [members[0]])
            violations.append(
                Violation("subclass-cycle", tuple(_name(m) for m in members), f"subclass cycle: {path}")
            )

    up = ancestor_map(subclass_edges(graph) | set(index.subclass_edges), index.classes)
    pairs = sorted(index.disjoint, key=lambda p: (p[0].value, p[1].value))

    for c in sorted(index.classes, key=_name):
        ups = up.get(c, frozenset({c}))
        for a, b in pairs:
            if a in ups and b in ups:
                violations.append(
                    Violation(
                        "disjointness-violation",
                        (_name(c), a.value, b.value),
                        f"class {local_label(c)} is unsatisfiable: it is subsumed by disjoint classes "
                        f"{local_label(a)} and {local_label(b)}",
                    )
                )

    # one check per entity: sameAs partners are the same individual
    comps = {x: comp for comp in same_as_components(graph) for x in comp}
    types: dict[frozenset[Term], set[Term]] = defaultdict(set)
    for t in graph.lookup(None, RDF_TYPE, None):
        if t.object not in _META_TYPES:
            types[comps.get(t.subject, frozenset({t.subject}))] |= up.get(t.object, frozenset({t.object}))
    for comp in sorted(types, key=lambda c: min(_name(m) for m in c)):
        members = sorted(comp, key=_name)
        for a, b in pairs:
            if a in types[comp] and b in types[comp]:
                who = _name(members[0]) if len(members) == 1 else f"{_name(members[0])} (and its sameAs aliases)"
                violations.append(
                    Violation(
                        "disjointness-violation",
                        tuple(_name(m) for m in members) + (a.value, b.value),
                        f"{who} is an instance of disjoint classes {local_label(a)} and {local_label(b)}",
                    )
                )

    for prop in sorted(index.functional_properties, key=_name):
        done: set[frozenset[Term]] = set()
        for t in sorted(graph.lookup(None, prop, None), key=Triple.sort_key):
            comp = comps.get(t.subject, frozenset({t.subject}))
            if comp in done:
                continue
            done.add(comp)
            values = sorted(
                {o for m in comp for o in graph.objects(m, prop) if isinstance(o, Literal)},
                key=lambda o: o.n3(),
            )
            if len(values) > 1:
                members = sorted(comp, key=_name)
                violations.append(
                    Violation(
                        "sameAs-literal-conflict",
                        tuple(_name(m) for m in members) + (prop.value,),
                        f"functional property {local_label(prop)} has conflicting values "
                        + ", ".join(v.n3() for v in values),
                    )
                )
    return ConsistencyReport(tuple(violations))


def relation_label(index: OntologyIndex, prop: IRI) -> str:
    """Verb phrase for a property, e.g. ``memberOf`` -> ``member of``."""
    if prop in index.display_labels:
        return index.display_labels[prop]
    return split_camel(prop.local_name).lower()
