"""Sparse exact linear algebra over Q(q).

Vectors are dicts ``key -> QScalar`` with no zero entries; keys must be
mutually comparable.  Echelon rows use their largest key as pivot, so
reduction only ever introduces smaller keys and terminates.
"""
from __future__ import annotations

from .qscalar import ONE, QScalar

__all__ = ["Echelon", "rank", "kernel", "in_span", "span_equal", "add_scaled", "normalize_vec"]


def add_scaled(v: dict, w: dict, c: QScalar) -> None:
    """``v += c * w`` in place."""
    for k, x in w.items():
        y = v.get(k)
        if y is None:
            v[k] = x * c
        else:
            y = y + x * c
            if y.is_zero():
                del v[k]
            else:
                v[k] = y


def normalize_vec(v: dict) -> dict:
    """Scale so the largest key has coefficient 1."""
    if not v:
        return v
    inv = v[max(v)].inverse()
    return {k: x * inv for k, x in v.items()}


class Echelon:
    """Incrementally grown echelon basis of a subspace.

    With ``track=True`` every row also records its combination of the
    inserted vectors, which makes kernels available.
    """

    def __init__(self, track: bool = False):
        self.rows: dict = {}  # pivot -> (row, combo)
        self.track = track
        self.count = 0
        self.kernel: list = []

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: dict, combo: dict | None = None):
        v = dict(v)
        rows = self.rows
        while v:
            hits = [k for k in v if k in rows]
            if not hits:
                break
            k = max(hits)
            row, rcombo = rows[k]
            c = -v[k]
            add_scaled(v, row, c)
            if combo is not None:
                add_scaled(combo, rcombo, c)
        return v, combo

    def add(self, v: dict) -> bool:
        """Insert ``v``; return True if it enlarged the span."""
        idx = self.count
        self.count += 1
        combo = {idx: ONE} if self.track else None
        r, combo = self.reduce(v, combo)
        if not r:
            if self.track:
                self.kernel.append(combo)
            return False
        p = max(r)
        inv = r[p].inverse()
        r = {k: x * inv for k, x in r.items()}
        if combo is not None:
            combo = {k: x * inv for k, x in combo.items()}
        self.rows[p] = (r, combo)
        return True

    def contains(self, v: dict) -> bool:
        r, _ = self.reduce(v)
        return not r

    def basis(self) -> list:
        return [self.rows[p][0] for p in sorted(self.rows)]


def rank(vectors) -> int:
    e = Echelon()
    for v in vectors:
        e.add(v)
    return len(e)


def kernel(images) -> list:
    """Basis of ``{c : sum_j c_j images[j] = 0}`` as dicts ``j -> coeff``."""
    e = Echelon(track=True)
    for v in images:
        e.add(v)
    return e.kernel


def in_span(vectors, v) -> bool:
    e = Echelon()
    for w in vectors:
        e.add(w)
    return e.contains(v)


def span_equal(a, b) -> bool:
    ea, eb = Echelon(), Echelon()
    for v in a:
        ea.add(v)
    for v in b:
        eb.add(v)
    return len(ea) == len(eb) and all(ea.contains(v) for v in b)
