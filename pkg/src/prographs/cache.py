"""Newline-delimited JSON cache of enumerations, one file per (family, n).

Files are written once through a temporary file and ``os.replace``, so a
reader never sees a half-written cache.  A file that fails to parse is
ignored and rebuilt.
"""
from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

from .prograph import Prograph, enumerate_prographs
from .tableaux import StandardTableau, enumerate_tableaux

ENV_VAR = "PROGRAPHS_CACHE_DIR"

FAMILIES = {
    "prographs": (enumerate_prographs, Prograph.from_json),
    "tableaux": (enumerate_tableaux, StandardTableau.from_json),
}


def default_cache_dir() -> Path:
    if os.environ.get(ENV_VAR):
        return Path(os.environ[ENV_VAR])
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "prographs"


class EnumerationCache:
    def __init__(self, directory: str | os.PathLike | None = None):
        self.directory = Path(directory) if directory is not None else default_cache_dir()

    def path(self, family: str, n: int) -> Path:
        return self.directory / f"{family}-{n}.ndjson"

    def load(self, family: str, n: int):
        if family not in FAMILIES:
            raise KeyError(f"unknown family {family!r}")
        generate, decode = FAMILIES[family]
        path = self.path(family, n)
        if path.exists():
            try:
                with open(path, encoding="utf-8") as fh:
                    return [decode(json.loads(line)) for line in fh if line.strip()]
            except (ValueError, KeyError, TypeError):
                pass
        items = generate(n)
        self._write(path, items)
        return items

    def _write(self, path: Path, items) -> None:
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                for item in items:
                    fh.write(json.dumps(item.to_json(), sort_keys=True) + "\n")
            os.replace(tmp, path)
        except OSError:
            # an unwritable cache only costs recomputation
            pass
