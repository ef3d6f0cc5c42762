"""Application configuration: bundled defaults, a JSON file, and ``key=value`` overrides."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib.resources import files
from pathlib import Path
from typing import Iterable, Mapping

from .errors import ConfigError

DATA_DIR = Path(str(files("semdisco") / "data"))

DEFAULTS: dict[str, object] = {
    "ontology.path": str(DATA_DIR / "politics.ttl"),
    "ontology.domain": "politics",
    "interlink.aliases": str(DATA_DIR / "aliases.json"),
    "annotator.triggers": str(DATA_DIR / "triggers.json"),
    "annotator.match_given_names": False,
    "nlu.mode": "fixture",
    "nlu.fixtures": str(DATA_DIR / "nlu_fixtures.json"),
    "nlu.endpoint": "",
    "nlu.api_key_env": "NLU_API_KEY",
    "classifier.threshold": 1,
    "classifier.count_relations": True,
    "query.materialize": True,
}

_PATH_KEYS = ("ontology.path", "interlink.aliases", "annotator.triggers")
_BOOL_WORDS = {"true": True, "1": True, "yes": True, "false": False, "0": False, "no": False}


def flatten(doc: Mapping, prefix: str = "") -> dict[str, object]:
    """``{"nlu": {"mode": "x"}}`` and ``{"nlu.mode": "x"}`` both become ``{"nlu.mode": "x"}``."""
    out: dict[str, object] = {}
    for key, value in doc.items():
        full = f"{prefix}{key}"
        if isinstance(value, Mapping):
            out.update(flatten(value, full + "."))
        else:
            out[full] = value
    return out


def _coerce(key: str, value: object) -> object:
    default = DEFAULTS[key]
    if isinstance(default, bool):
        if isinstance(value, bool):
            return value
        if isinstance(value, str) and value.lower() in _BOOL_WORDS:
            return _BOOL_WORDS[value.lower()]
        raise ConfigError(f"{key}: expected a boolean, got {value!r}")
    if isinstance(default, int):
        try:
            return int(value)  # type: ignore[arg-type]
        except (TypeError, ValueError):
            raise ConfigError(f"{key}: expected an integer, got {value!r}") from None
    if not isinstance(value, str):
        raise ConfigError(f"{key}: expected a string, got {value!r}")
    return value


@dataclass(frozen=True)
class AppConfig:
    ontology_path: Path
    ontology_domain: str
    aliases_path: Path
    triggers_path: Path
    match_given_names: bool
    nlu_mode: str
    nlu_fixtures: Path
    nlu_endpoint: str
    nlu_api_key_env: str
    threshold: int
    count_relations: bool
    query_materialize: bool

    @classmethod
    def load(cls, path: str | Path | None = None, overrides: Iterable[str] = ()) -> AppConfig:
        values = dict(DEFAULTS)
        base = Path.cwd()
        if path is not None:
            path = Path(path)
            try:
                doc = json.loads(path.read_bytes())
            except FileNotFoundError:
                raise ConfigError(f"config file not found: {path}") from None
            except json.JSONDecodeError as exc:
                raise ConfigError(f"{path}: invalid JSON: {exc}") from None
            if not isinstance(doc, dict):
                raise ConfigError(f"{path}: config must be a JSON object")
            base = path.parent
            for key, value in flatten(doc).items():
                values[_check_key(key)] = _relative(key, value, base)
        for item in overrides:
            key, sep, value = item.partition("=")
            if not sep:
                raise ConfigError(f"override {item!r} is not key=value")
            values[_check_key(key.strip())] = value
        return cls.from_mapping(values)

    @classmethod
    def from_mapping(cls, values: Mapping[str, object]) -> AppConfig:
        v = {k: _coerce(k, values.get(k, DEFAULTS[k])) for k in DEFAULTS}
        if v["nlu.mode"] not in ("fixture", "live"):
            raise ConfigError(f"nlu.mode must be 'fixture' or 'live', got {v['nlu.mode']!r}")
        if v["classifier.threshold"] < 1:  # type: ignore[operator]
            raise ConfigError("classifier.threshold must be at least 1")
        for key in _PATH_KEYS:
            if not Path(v[key]).is_file():  # type: ignore[arg-type]
                raise ConfigError(f"{key}: file not found: {v[key]}")
        if v["nlu.mode"] == "live" and not v["nlu.endpoint"]:
            raise ConfigError("nlu.endpoint is required in live mode")
        return cls(
            ontology_path=Path(v["ontology.path"]),  # type: ignore[arg-type]
            ontology_domain=str(v["ontology.domain"]),
            aliases_path=Path(v["interlink.aliases"]),  # type: ignore[arg-type]
            triggers_path=Path(v["annotator.triggers"]),  # type: ignore[arg-type]
            match_given_names=bool(v["annotator.match_given_names"]),
            nlu_mode=str(v["nlu.mode"]),
            nlu_fixtures=Path(v["nlu.fixtures"]),  # type: ignore[arg-type]
            nlu_endpoint=str(v["nlu.endpoint"]),
            nlu_api_key_env=str(v["nlu.api_key_env"]),
            threshold=int(v["classifier.threshold"]),  # type: ignore[arg-type]
            count_relations=bool(v["classifier.count_relations"]),
            query_materialize=bool(v["query.materialize"]),
        )


def _check_key(key: str) -> str:
    if key not in DEFAULTS:
        raise ConfigError(f"unknown config key {key!r}; known keys: {', '.join(sorted(DEFAULTS))}")
    return key


def _relative(key: str, value: object, base: Path) -> object:
    """Paths in a config file resolve against the file's directory."""
    if key in (*_PATH_KEYS, "nlu.fixtures") and isinstance(value, str) and value:
        p = Path(value)
        return str(p if p.is_absolute() else base / p)
    return value
