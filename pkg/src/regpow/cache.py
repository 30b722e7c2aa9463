"""Content-addressed on-disk cache of Betti tables.

Keys hash the canonical form of the graph together with the ideal kind, the
power, the field characteristic and the monomial order, so relabeled copies
of a graph share one entry.  One JSON file per key; writes go through a
temporary file and an atomic rename.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
from pathlib import Path

from .graph import canonical_form
from .resolution import BettiTable

CACHE_FORMAT = 1
ENV_VAR = "REGPOW_CACHE_DIR"
DEFAULT_DIR = ".regpow-cache"


def default_cache_dir(explicit=None):
    if explicit:
        return Path(explicit)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else Path(DEFAULT_DIR)


def cache_key(g, kind, t, char, order="degrevlex"):
    n, edges = canonical_form(g)
    payload = {"format": CACHE_FORMAT, "n": n, "edges": [list(e) for e in edges],
               "kind": kind, "t": int(t), "char": int(char), "order": order}
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory=None):
        self.dir = default_cache_dir(directory)
        self.hits = 0
        self.misses = 0

    def _path(self, key):
        return self.dir / key[:2] / f"{key}.json"

    def get(self, key):
        path = self._path(key)
        try:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
            if data.get("key") != key or data.get("format") != CACHE_FORMAT:
                raise ValueError("key mismatch")
            table = BettiTable.from_json(data["betti"])
        except FileNotFoundError:
            self.misses += 1
            return None
        except (OSError, ValueError, KeyError, TypeError):
            # unreadable entry: evict and recompute
            try:
                path.unlink()
            except OSError:
                pass
            self.misses += 1
            return None
        self.hits += 1
        return table

    def put(self, key, table: BettiTable):
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        data = {"format": CACHE_FORMAT, "key": key, "betti": table.to_json()}
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(data, fh, sort_keys=True)
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise

    def get_graph(self, g, kind, t, char):
        return self.get(cache_key(g, kind, t, char))

    def put_graph(self, g, kind, t, char, table):
        self.put(cache_key(g, kind, t, char), table)


class NullCache:
    hits = 0
    misses = 0

    def get_graph(self, *args):
        return None

    def put_graph(self, *args):
        pass
