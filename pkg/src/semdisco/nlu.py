"""NLU providers: a recorded-fixture replayer and a live HTTP client."""

from __future__ import annotations

import base64
import hashlib
import json
import os
import threading
import unicodedata
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from pathlib import Path
from typing import Protocol

from .errors import FixtureMissError, NluResponseError, NluTransportError

__all__ = [
    "FixtureProvider",
    "LiveProvider",
    "NluProvider",
    "NluResult",
    "analyze",
    "record",
    "text_hash",
]


def text_hash(text: str) -> str:
    """SHA-256 hex of the NFC form; whitespace is not folded."""
    return hashlib.sha256(unicodedata.normalize("NFC", text).encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class NluResult:
    entities: tuple[tuple[str, str], ...] = ()  # (surface, type)
    categories: tuple[str, ...] = ()
    keywords: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "entities", tuple((str(s), str(t)) for s, t in self.entities))
        object.__setattr__(self, "categories", tuple(self.categories))
        object.__setattr__(self, "keywords", tuple(self.keywords))
        for surface, _ in self.entities:
            if not surface:
                raise NluResponseError("entity surface must be non-empty")
        for path in self.categories:
            if not path.startswith("/") or not path.strip("/"):
                raise NluResponseError(f"bad category path {path!r}")

    def to_dict(self) -> dict:
        return {
            "entities": [{"surface": s, "type": t} for s, t in self.entities],
            "categories": list(self.categories),
            "keywords": list(self.keywords),
        }

    @classmethod
    def from_dict(cls, doc: object) -> NluResult:
        if not isinstance(doc, dict):
            raise NluResponseError("NLU result must be a JSON object")
        try:
            entities = tuple((e["surface"], e["type"]) for e in doc.get("entities", ()))
            return cls(entities, tuple(doc.get("categories", ())), tuple(doc.get("keywords", ())))
        except (KeyError, TypeError) as exc:
            raise NluResponseError(f"malformed NLU result: {exc!r}") from None


class NluProvider(Protocol):
    def analyze(self, text: str) -> NluResult: ...


def _dump_fixtures(entries: dict[str, dict]) -> bytes:
    return (json.dumps(entries, ensure_ascii=False, sort_keys=True, indent=2) + "\n").encode("utf-8")


@dataclass
class FixtureProvider:
    """Replays results keyed by :func:`text_hash`."""

    path: Path | None = None
    entries: dict[str, dict] = field(default_factory=dict)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    @classmethod
    def load(cls, path: str | Path) -> FixtureProvider:
        path = Path(path)
        entries: dict[str, dict] = {}
        if path.exists():
            try:
                doc = json.loads(path.read_bytes())
            except json.JSONDecodeError as exc:
                raise NluResponseError(f"{path}: fixture file is not valid JSON: {exc}") from None
            if not isinstance(doc, dict):
                raise NluResponseError(f"{path}: fixture file must be a JSON object")
            for key, value in doc.items():
                NluResult.from_dict(value)  # validate eagerly
                entries[key] = value
        return cls(path, entries)

    def analyze(self, text: str) -> NluResult:
        key = text_hash(text)
        try:
            return NluResult.from_dict(self.entries[key])
        except KeyError:
            raise FixtureMissError(key) from None

    def record(self, text: str, result: NluResult) -> None:
        with self._lock:
            self.entries[text_hash(text)] = result.to_dict()
            if self.path is not None:
                data = _dump_fixtures(self.entries)
                if not self.path.exists() or self.path.read_bytes() != data:
                    self.path.write_bytes(data)


class LiveProvider:
    """Client for a Watson-style ``/v1/analyze`` endpoint using basic auth."""

    def __init__(self, endpoint: str, api_key: str | None = None, api_key_env: str | None = None,
                 timeout: float = 30.0, version: str = "2022-04-07"):
        if api_key is None and api_key_env:
            api_key = os.environ.get(api_key_env)
        if not api_key:
            raise NluTransportError(f"no API key; set the {api_key_env or 'configured'} environment variable")
        self.endpoint = endpoint.rstrip("/")
        self.timeout = timeout
        self.version = version
        self._auth = "Basic " + base64.b64encode(f"apikey:{api_key}".encode()).decode("ascii")

    def request_body(self, text: str) -> bytes:
        return json.dumps({
            "text": text,
            "features": {"entities": {}, "categories": {}, "keywords": {}},
        }).encode("utf-8")

    def analyze(self, text: str) -> NluResult:
        req = urllib.request.Request(
            f"{self.endpoint}/v1/analyze?version={self.version}",
            data=self.request_body(text),
            headers={"Content-Type": "application/json", "Authorization": self._auth},
            method="POST",
        )
        try:
            with urllib.request.urlopen(req, timeout=self.timeout) as resp:
                payload = resp.read()
        except urllib.error.HTTPError as exc:
            raise NluTransportError(exc.reason or "request failed", exc.code) from None
        except (urllib.error.URLError, OSError) as exc:
            raise NluTransportError(str(getattr(exc, "reason", exc))) from None
        try:
            doc = json.loads(payload)
        except json.JSONDecodeError as exc:
            raise NluResponseError(f"response is not JSON: {exc}") from None
        return map_response(doc)


def map_response(doc: object) -> NluResult:
    """Translate a Watson-shaped response into :class:`NluResult`."""
    if not isinstance(doc, dict):
        raise NluResponseError("response must be a JSON object")
    try:
        entities = tuple((e["text"], e.get("type", "")) for e in doc.get("entities", ()))
        categories = tuple(c["label"] for c in doc.get("categories", ()))
        keywords = tuple(k["text"] for k in doc.get("keywords", ()))
    except (KeyError, TypeError, AttributeError) as exc:
        raise NluResponseError(f"malformed response: {exc!r}") from None
    return NluResult(entities, categories, keywords)


def analyze(provider: NluProvider, text: str) -> NluResult:
    return provider.analyze(text)


def record(provider: FixtureProvider, text: str, result: NluResult) -> None:
    provider.record(text, result)
