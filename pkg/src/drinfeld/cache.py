"""On-disk cache for series and Goss tables, keyed by content.

Keys hash the canonical JSON of ``(kind, q, modulus, name, size)``; values are
the canonical file formats from :mod:`drinfeld.io`, so a cache hit returns
exactly the bytes a cold run would have written.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .algebra import FieldParams

_active: "DiskCache | None" = None


class DiskCache:
    def __init__(self, root: str | os.PathLike):
        self.root = Path(root)
        self.root.mkdir(parents=True, exist_ok=True)

    @staticmethod
    def key(kind: str, F: FieldParams, name: str, size: int) -> str:
        blob = json.dumps(
            {"kind": kind, "q": F.q, "modulus": F.modulus_str(), "name": name, "size": size},
            sort_keys=True, separators=(",", ":"),
        )
        return hashlib.sha256(blob.encode()).hexdigest()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def read(self, kind, F, name, size) -> str | None:
        p = self._path(self.key(kind, F, name, size))
        try:
            return p.read_text()
        except FileNotFoundError:
            return None

    def write(self, kind, F, name, size, text: str) -> None:
        p = self._path(self.key(kind, F, name, size))
        p.parent.mkdir(parents=True, exist_ok=True)
        # atomic replace so concurrent writers never expose partial files
        fd, tmp = tempfile.mkstemp(dir=p.parent, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, p)


def set_cache_dir(path) -> None:
    """Enable the disk cache under ``path`` (None disables it)."""
    global _active
    _active = DiskCache(path) if path else None


def active_cache() -> DiskCache | None:
    return _active
