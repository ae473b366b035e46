"""File-backed result cache keyed by graph content, query and solver version.

A hit returns the stored JSON text verbatim, so cached and fresh runs are
bit-identical.  Keys hash the adjacency under the identity labeling; no
isomorphism canonization.
"""

from __future__ import annotations

import hashlib
import os

from .graphs import Graph
from .kernel import SOLVER_VERSION


def cache_key(g: Graph, r: int, op: str) -> str:
    fingerprint = f"{g.n}|" + ",".join(f"{u}-{v}" for u, v in g.edges())
    payload = f"{fingerprint}|r={r}|op={op}|{SOLVER_VERSION}"
    return hashlib.sha256(payload.encode()).hexdigest()


def load(cache_dir: str, key: str) -> str | None:
    path = os.path.join(cache_dir, key + ".json")
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError:
        return None


def store(cache_dir: str, key: str, text: str) -> None:
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, key + ".json")
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)
