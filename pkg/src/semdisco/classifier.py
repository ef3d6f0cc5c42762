"""Fuse NLU categories with ontology annotations into tweet and user domains."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .annotator import RELATION, Annotation
from .errors import ReportFormatError
from .nlu import NluResult

NLU_ONLY = "nlu-only"
NLU_ONTOLOGY = "nlu+ontology"
MODES = (NLU_ONLY, NLU_ONTOLOGY)
UNKNOWN = "unknown"


@dataclass(frozen=True)
class TweetRecord:
    id: str
    user: str
    text: str
    created_at: str | None = None

    def __post_init__(self) -> None:
        for name in ("id", "user", "text"):
            value = getattr(self, name)
            if not isinstance(value, str) or not value:
                raise ValueError(f"tweet field {name!r} must be a non-empty string")

    @classmethod
    def from_dict(cls, doc: object) -> TweetRecord:
        if not isinstance(doc, dict):
            raise ValueError("tweet record must be a JSON object")
        created = doc.get("created_at")
        return cls(
            str(doc["id"]) if isinstance(doc.get("id"), int) else doc.get("id"),
            doc.get("user"),
            doc.get("text"),
            None if created is None else str(created),
        )


def nlu_domains(result: NluResult) -> set[str]:
    return {path.strip("/").split("/")[0].strip().lower() for path in result.categories if path.strip("/")}


def classify_tweet(
    tweet: TweetRecord,
    nlu_result: NluResult,
    annotations: Sequence[Annotation] | None,
    ontology_domain: str = "politics",
    threshold: int = 1,
    count_relations: bool = True,
) -> set[str]:
    """NLU domains, plus ``ontology_domain`` when enough ontology annotations fired.

    Pass ``annotations=None`` for NLU-only classification.
    """
    if threshold < 1:
        raise ValueError("threshold must be at least 1")
    domains = nlu_domains(nlu_result)
    if annotations:
        hits = sum(1 for a in annotations if count_relations or a.kind != RELATION)
        if hits >= threshold:
            domains.add(ontology_domain.lower())
    return domains or {UNKNOWN}


@dataclass
class UserDomains:
    counts: list[tuple[str, int]]
    total: int


@dataclass
class DomainReport:
    mode: str
    tweets: dict[str, list[str]] = field(default_factory=dict)
    users: dict[str, UserDomains] = field(default_factory=dict)

    def count(self, user: str, domain: str) -> int:
        entry = self.users.get(user)
        return dict(entry.counts).get(domain, 0) if entry else 0

    def to_dict(self) -> dict:
        return {
            "mode": self.mode,
            "tweets": {tid: list(ds) for tid, ds in self.tweets.items()},
            "users": {
                user: {"domains": {d: n for d, n in u.counts}, "total": u.total}
                for user, u in self.users.items()
            },
        }

    @classmethod
    def from_dict(cls, doc: Mapping) -> DomainReport:
        users = {
            user: UserDomains(list(u["domains"].items()), int(u["total"]))
            for user, u in doc["users"].items()
        }
        return cls(doc["mode"], {k: list(v) for k, v in doc["tweets"].items()}, users)


def aggregate(classified: Iterable[tuple[TweetRecord, set[str]]], mode: str = NLU_ONTOLOGY) -> DomainReport:
    """Per-user tweet counts per domain, ordered by descending count then name."""
    rows = sorted(classified, key=lambda pair: (pair[0].user, pair[0].id))
    per_user: dict[str, Counter[str]] = {}
    totals: Counter[str] = Counter()
    report = DomainReport(mode)
    for tweet, domains in rows:
        report.tweets[tweet.id] = sorted(domains)
        per_user.setdefault(tweet.user, Counter()).update(domains)
        totals[tweet.user] += 1
    for user in sorted(per_user):
        counts = sorted(per_user[user].items(), key=lambda kv: (-kv[1], kv[0]))
        report.users[user] = UserDomains(counts, totals[user])
    return report


def emit_report(report: DomainReport, fmt: str) -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), ensure_ascii=False, indent=2) + "\n").encode("utf-8")
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["user", "domain", "count", "total"])
        for user, entry in report.users.items():
            for domain, n in entry.counts:
                writer.writerow([user, domain, n, entry.total])
        return buf.getvalue().encode("utf-8")
    raise ReportFormatError(f"unsupported report format {fmt!r}; expected json or csv")


def read_report(data: bytes | str) -> DomainReport:
    return DomainReport.from_dict(json.loads(data))
