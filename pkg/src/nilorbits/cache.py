"""Versioned on-disk JSON cache for per-type analysis payloads."""
from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .analysis import SCHEMA_VERSION

ENV_VAR = "ORBITS_CACHE_DIR"


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "nilorbits"


def content_hash(**inputs) -> str:
    blob = json.dumps({"schemaVersion": SCHEMA_VERSION, **inputs}, sort_keys=True).encode()
    return hashlib.blake2b(blob, digest_size=16).hexdigest()


def dumps(payload) -> str:
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


class PayloadCache:
    """Files are named ``{family}{rank}-v{schema}.json``; a stale schema or
    mismatched input hash is treated as a miss and overwritten."""

    def __init__(self, root: Path | str | None = None, enabled: bool = True):
        self.root = Path(root) if root is not None else default_cache_dir()
        self.enabled = enabled

    def path(self, family: str, rank: int) -> Path:
        return self.root / f"{family}{rank}-v{SCHEMA_VERSION}.json"

    def load(self, family: str, rank: int, digest: str):
        if not self.enabled:
            return None
        p = self.path(family, rank)
        try:
            entry = json.loads(p.read_text())
        except (OSError, ValueError):
            return None
        if entry.get("schemaVersion") != SCHEMA_VERSION or entry.get("contentHash") != digest:
            return None
        if entry.get("type") != family or entry.get("rank") != rank:
            return None
        return entry["payload"]

    def store(self, family: str, rank: int, digest: str, payload) -> None:
        if not self.enabled:
            return
        entry = {"schemaVersion": SCHEMA_VERSION, "type": family, "rank": rank, "contentHash": digest, "payload": payload}
        self.root.mkdir(parents=True, exist_ok=True)
        p = self.path(family, rank)
        tmp = p.with_suffix(f".tmp{os.getpid()}")
        tmp.write_text(dumps(entry))
        os.replace(tmp, p)

    def get_or_compute(self, family: str, rank: int, digest: str, compute):
        hit = self.load(family, rank, digest)
        if hit is not None:
            return hit
        payload = compute()
        # normalise through JSON so cold and warm runs hand out identical data
        payload = json.loads(json.dumps(payload))
        self.store(family, rank, digest, payload)
        return payload
