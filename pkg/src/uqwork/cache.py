"""Content-addressed JSON cache for nilradical bases.

Keys hash the Cartan type, the parabolic, the side, the degree, the window and
the rule hash of the completed presentation, so a changed presentation never
reads a stale basis.
"""
from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from .finiteness import NilradicalQuantization, construct_nilradical
from .pbw import NormalMonomial, QuantumGroup, UqElement
from .qscalar import QScalar, parse_laurent
from .rootdata import ParabolicSubset

__all__ = ["cache_dir", "cached_nilradical", "nilradical_from_json", "element_from_json"]

ENV_VAR = "UQWORK_CACHE_DIR"
_MEMORY: dict = {}


def cache_dir(explicit: str | None = None) -> Path | None:
    path = explicit or os.environ.get(ENV_VAR)
    return Path(path) if path else None


def _letter(alg: QuantumGroup, name: str) -> int:
    kind, idx = name[0], int(name[1:]) - 1
    return idx if kind == "F" else alg.n + idx


def element_from_json(alg: QuantumGroup, data: list) -> UqElement:
    terms = {}
    for t in data:
        m = NormalMonomial(tuple(_letter(alg, x) for x in t["f"]), tuple(t["k"]),
                           tuple(_letter(alg, x) for x in t["e"]))
        num, den = t["coeff"]
        terms[m] = QScalar(parse_laurent(num), parse_laurent(den))
    return UqElement(alg, terms)


def nilradical_from_json(alg: QuantumGroup, data: dict) -> NilradicalQuantization:
    graded = {tuple(int(x) for x in key.split(",")): [element_from_json(alg, b) for b in bs]
              for key, bs in data["basis"].items()}
    return NilradicalQuantization(ParabolicSubset(data["parabolic"]), data["side"], graded,
                                  data["max_degree"], data["window"])


def _key(alg: QuantumGroup, P: ParabolicSubset, side: str, degree: int, window: int) -> str:
    raw = json.dumps([alg.datum.type_label, sorted(P.simple_roots), side, degree, window,
                      alg.system.rule_hash()])
    return hashlib.sha256(raw.encode()).hexdigest()[:20]


def cached_nilradical(alg: QuantumGroup, P: ParabolicSubset, side: str, degree: int,
                      directory: str | None = None, window: int = 1) -> NilradicalQuantization:
    key = _key(alg, P, side, degree, window)
    hit = _MEMORY.get(key)
    if hit is not None:
        return hit
    root = cache_dir(directory)
    path = root / f"nilradical-{key}.json" if root else None
    if path is not None and path.exists():
        N = nilradical_from_json(alg, json.loads(path.read_text()))
    else:
        N = construct_nilradical(alg, P, side, degree, window)
        if path is not None:
            root.mkdir(parents=True, exist_ok=True)
            path.write_text(json.dumps(N.to_json(), sort_keys=True))
    _MEMORY[key] = N
    return N
