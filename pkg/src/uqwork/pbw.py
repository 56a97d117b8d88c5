"""Rewriting presentation of U_q(g) and PBW normal forms.

Letters are integers: ``F_i`` is ``i`` and ``E_i`` is ``rank + i``, so the
letter order F_1 < ... < F_n < E_1 < ... < E_n is integer order and words
compare degree-lexicographically.  Torus factors never appear as letters.
Inside the rewriting core a term is ``(word, mu)`` meaning ``word * K_mu``
(torus pushed to the right); user-facing monomials use the triangular shape
``F-word * K_mu * E-word``.

q-Serre relations (for i != j, m = 1 - a_ij, q_i = q^{d_i})::

    sum_{k=0}^{m} (-1)^k [m choose k]_{q_i} X_i^{m-k} X_j X_i^k = 0,   X = E or F
"""
from __future__ import annotations

import hashlib
import itertools
import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .qscalar import ONE, ZERO, QScalar, qint, qpow, qs
from .rootdata import CartanDatum, cartan

logger = logging.getLogger(__name__)

__all__ = [
    "CutoffExceeded",
    "OrientationError",
    "RewriteRule",
    "RewriteSystem",
    "build_presentation",
    "complete",
    "QuantumGroup",
    "UqElement",
    "NormalMonomial",
    "quantum_group",
]

DEFAULT_CUTOFF = 8


class CutoffExceeded(RuntimeError):
    pass


class OrientationError(RuntimeError):
    pass


def qbinom(m: int, k: int, d: int = 1) -> QScalar:
    num = ONE
    for s in range(1, m + 1):
        num = num * qint(s, d)
    den = ONE
    for s in range(1, k + 1):
        den = den * qint(s, d)
    for s in range(1, m - k + 1):
        den = den * qint(s, d)
    return num / den


def _add_into(acc: dict, key, c: QScalar):
    v = acc.get(key)
    if v is None:
        acc[key] = c
    else:
        v = v + c
        if v.is_zero():
            del acc[key]
        else:
            acc[key] = v


def word_key(word):
    return (len(word), word)


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple
    rhs: tuple  # sorted tuple of ((word, mu), QScalar)

    def rhs_dict(self) -> dict:
        return dict(self.rhs)


@dataclass
class RewriteSystem:
    """Oriented rules ``word -> sum c * word' K_mu``.

    ``certificate`` lists every overlap checked, as ``(word, status)``.
    ``unbounded`` is set when every overlap of every degree was resolved, so
    normal forms are valid beyond the cutoff.
    """

    datum: CartanDatum
    rules: list
    cutoff: int
    completed: bool = False
    unbounded: bool = False
    certificate: list = field(default_factory=list)

    @property
    def rank(self) -> int:
        return self.datum.rank

    @property
    def order(self) -> str:
        return "deglex: F_1 < ... < F_n < E_1 < ... < E_n; torus out of band"

    def letter_weight(self, letter):
        n = self.rank
        if letter < n:
            return tuple(-x for x in self.datum.alpha(letter))
        return self.datum.alpha(letter - n)

    def rule_hash(self) -> str:
        h = hashlib.sha256()
        h.update(self.datum.type_label.encode())
        h.update(str(self.cutoff).encode())
        for r in sorted(self.rules, key=lambda r: word_key(r.lhs)):
            h.update(repr(r.lhs).encode())
            for (w, mu), c in r.rhs:
                h.update(repr((w, mu, c.to_strings())).encode())
        return h.hexdigest()[:16]

    def letter_name(self, letter) -> str:
        n = self.rank
        return f"F{letter + 1}" if letter < n else f"E{letter - n + 1}"

    def describe(self) -> list[str]:
        out = []
        for r in self.rules:
            lhs = " ".join(self.letter_name(x) for x in r.lhs)
            rhs = " + ".join(
                f"({c}) {' '.join(self.letter_name(x) for x in w) or '1'} K{list(mu)}" for (w, mu), c in r.rhs
            ) or "0"
            out.append(f"{lhs} -> {rhs}")
        return out


class _Reducer:
    """Generic reduction of ``(word, mu)`` combinations modulo a rule list."""

    def __init__(self, datum: CartanDatum, rules):
        self.datum = datum
        self.n = datum.rank
        self.rules = {r.lhs: r.rhs for r in rules}
        self.maxlen = max((len(l) for l in self.rules), default=0)
        # (mu, alpha_i) = d_i mu_i
        self.d = datum.symmetrizers

    def pair_word(self, mu, word) -> int:
        n, d = self.n, self.d
        s = 0
        for x in word:
            if x < n:
                s -= d[x] * mu[x]
            else:
                s += d[x - n] * mu[x - n]
        return s

    def find(self, word):
        for i in range(len(word)):
            for L in range(1, min(self.maxlen, len(word) - i) + 1):
                sub = word[i:i + L]
                if sub in self.rules:
                    return i, sub
        return None

    def reduce(self, elem: dict) -> dict:
        """Full reduction; repeatedly rewrites the deglex-largest reducible term."""
        elem = dict(elem)
        done: dict = {}
        while elem:
            key = max(elem, key=lambda k: word_key(k[0]))
            c = elem.pop(key)
            word, nu = key
            hit = self.find(word)
            if hit is None:
                _add_into(done, key, c)
                continue
            i, lhs = hit
            u, v = word[:i], word[i + len(lhs):]
            for (w2, mu2), c2 in self.rules[lhs]:
                e = self.pair_word(mu2, v)
                newkey = (u + w2 + v, tuple(a + b for a, b in zip(mu2, nu)))
                _add_into(elem, newkey, c * c2 * qpow(e))
        return done


def _orient(datum: CartanDatum, poly: dict) -> RewriteRule | None:
    """Turn a relation ``sum c (word, mu) = 0`` into a monic rule."""
    poly = {k: v for k, v in poly.items() if not v.is_zero()}
    if not poly:
        return None
    top = max(word_key(w) for (w, _) in poly)
    lead = [k for k in poly if word_key(k[0]) == top]
    if len(lead) != 1 or any(lead[0][1]):
        raise OrientationError(
            f"relation with leading word {lead[0][0]} is not orientable (torus coefficient {len(lead)} terms)"
        )
    lk = lead[0]
    inv = poly[lk].inverse()
    rhs = {k: -(v * inv) for k, v in poly.items() if k != lk}
    return RewriteRule(lk[0], tuple(sorted(rhs.items(), key=lambda kv: (word_key(kv[0][0]), kv[0][1]))))


def build_presentation(datum: CartanDatum | str, cutoff: int = DEFAULT_CUTOFF) -> RewriteSystem:
    """Uncompleted rules: E-F straightening and q-Serre among E's and among F's."""
    if isinstance(datum, str):
        datum = cartan(datum)
    n = datum.rank
    zero = (0,) * n
    rules = []
    for i in range(n):
        for j in range(n):
            rhs = {((j, n + i), zero): ONE}
            if i == j:
                di = datum.symmetrizers[i]
                c = (qpow(di) - qpow(-di)).inverse()
                a = datum.alpha(i)
                rhs[((), a)] = c
                rhs[((), tuple(-x for x in a))] = -c
            rules.append(RewriteRule((n + i, j), tuple(sorted(rhs.items(), key=lambda kv: (word_key(kv[0][0]), kv[0][1])))))
    for offset in (0, n):  # F letters then E letters
        for i in range(n):
            for j in range(n):
                if i == j:
                    continue
                m = 1 - datum.cartan_matrix[i][j]
                di = datum.symmetrizers[i]
                rel = {}
                for k in range(m + 1):
                    w = (offset + i,) * (m - k) + (offset + j,) + (offset + i,) * k
                    c = qbinom(m, k, di) * (-1) ** k
                    _add_into(rel, (w, zero), c)
                r = _orient(datum, rel)
                if r is not None and r not in rules:
                    if any(x.lhs == r.lhs for x in rules):
                        raise OrientationError(f"conflicting relations with leading word {r.lhs}")
                    rules.append(r)
    return RewriteSystem(datum, rules, cutoff)


def _overlaps(l1, l2):
    """Proper overlaps: suffix of l1 equals prefix of l2 (lengths 1..min-1) and inclusions."""
    out = []
    for k in range(1, min(len(l1), len(l2))):
        if l1[-k:] == l2[:k]:
            out.append(("overlap", l1 + l2[k:], len(l1) - k))
    if l1 != l2 and len(l2) < len(l1):
        for i in range(len(l1) - len(l2) + 1):
            if l1[i:i + len(l2)] == l2:
                out.append(("inclusion", l1, i))
    return out


def _resolve(red: _Reducer, datum, r1, r2, kind, word, pos):
    """Both one-step rewrites of the ambiguity, fully reduced."""
    n = datum.rank
    zero = (0,) * n

    def apply_at(rule_lhs, rhs, at):
        u, v = word[:at], word[at + len(rule_lhs):]
        out = {}
        for (w2, mu2), c2 in rhs:
            e = red.pair_word(mu2, v)
            _add_into(out, (u + w2 + v, mu2), c2 * qpow(e))
        return out

    left = apply_at(r1.lhs, r1.rhs, 0)
    right = apply_at(r2.lhs, r2.rhs, pos)
    a = red.reduce(left)
    b = red.reduce(right)
    diff = dict(a)
    for k, v in b.items():
        _add_into(diff, k, -v)
    return diff


def complete(sys: RewriteSystem, cutoff: int | None = None) -> RewriteSystem:
    """Degree-truncated Bergman completion.

    Processes ambiguities in increasing degree; unresolved ones become new
    rules.  Deterministic for a fixed presentation.
    """
    D = sys.cutoff if cutoff is None else cutoff
    if D < 2:
        raise ValueError("cutoff must be >= 2")
    datum = sys.datum
    rules = list(sys.rules)
    certificate = []
    added = 0
    checked = set()
    truncated = False
    while True:
        red = _Reducer(datum, rules)
        pending = []
        for r1 in rules:
            for r2 in rules:
                for kind, word, pos in _overlaps(r1.lhs, r2.lhs):
                    key = (r1.lhs, r2.lhs, kind, pos)
                    if key in checked:
                        continue
                    if len(word) > D:
                        truncated = True
                        continue
                    pending.append((len(word), word, kind, pos, r1, r2, key))
        if not pending:
            break
        pending.sort(key=lambda t: (t[0], t[1], t[2], t[3], t[4].lhs, t[5].lhs))
        deg = pending[0][0]
        new_rules = []
        for L, word, kind, pos, r1, r2, key in pending:
            if L != deg:
                break
            checked.add(key)
            diff = _resolve(red, datum, r1, r2, kind, word, pos)
            if diff:
                # reduce against rules found so far at this degree
                if new_rules:
                    diff = _Reducer(datum, rules + new_rules).reduce(diff)
                if diff:
                    r = _orient(datum, diff)
                    if word_key(r.lhs) > word_key(word):
                        raise OrientationError(f"overlap {word} produced a rule above its source")
                    new_rules.append(r)
                    certificate.append((word, "new-rule"))
                    continue
            certificate.append((word, "resolved"))
        if new_rules:
            added += len(new_rules)
            rules = _interreduce(datum, rules + new_rules)
            checked = {k for k in checked if _still_present(k, rules)}
    out = RewriteSystem(datum, rules, D, completed=True, unbounded=not truncated, certificate=certificate)
    logger.info("completed %s at D=%d: %d rules (%d new)", datum.type_label, D, len(rules), added)
    return out


def _still_present(key, rules):
    lhss = {r.lhs for r in rules}
    return key[0] in lhss and key[1] in lhss


def _interreduce(datum, rules):
    """Drop rules whose lhs contains another lhs; fully reduce right-hand sides."""
    rules = sorted(set(rules), key=lambda r: word_key(r.lhs))
    keep = []
    for r in rules:
        if any(_contains(r.lhs, k.lhs) for k in keep):
            continue
        keep.append(r)
    red = _Reducer(datum, keep)
    out = []
    for r in keep:
        others = _Reducer(datum, [k for k in keep if k.lhs != r.lhs])
        rhs = others.reduce(dict(r.rhs))
        out.append(RewriteRule(r.lhs, tuple(sorted(rhs.items(), key=lambda kv: (word_key(kv[0][0]), kv[0][1])))))
    del red
    return out


def _contains(word, sub):
    L = len(sub)
    return any(word[i:i + L] == sub for i in range(len(word) - L + 1))


def verify_certificate(sys: RewriteSystem) -> list:
    """Re-check every ambiguity within the cutoff; returns the failing words."""
    red = _Reducer(sys.datum, sys.rules)
    bad = []
    for r1 in sys.rules:
        for r2 in sys.rules:
            for kind, word, pos in _overlaps(r1.lhs, r2.lhs):
                if len(word) > sys.cutoff:
                    continue
                if _resolve(red, sys.datum, r1, r2, kind, word, pos):
                    bad.append(word)
    return bad


# ---------------------------------------------------------------------------
# triangular algebra
# ---------------------------------------------------------------------------

@dataclass(frozen=True, order=True)
class NormalMonomial:
    """``F-word * K_torus * E-word`` with both words irreducible."""

    f_word: tuple
    torus: tuple
    e_word: tuple

    def degree(self) -> int:
        return len(self.f_word) + len(self.e_word)


class QuantumGroup:
    """U_q(g) for a completed rewriting system, with cached normal forms."""

    def __init__(self, system: RewriteSystem):
        if not system.completed:
            raise ValueError("system must be completed")
        self.system = system
        self.datum = system.datum
        self.n = n = system.rank
        self.cutoff = system.cutoff
        self.zero_weight = (0,) * n
        d = self.datum.symmetrizers
        self._d = d
        self._one_sided = {r.lhs: tuple((w, c) for (w, _mu), c in r.rhs)
                           for r in system.rules if all(x < n for x in r.lhs) or all(x >= n for x in r.lhs)}
        self._maxlhs = max((len(l) for l in self._one_sided), default=0)
        self._nf_cache: dict = {}
        self._straight_cache: dict = {}
        self._mono_cache: dict = {}
        self._cartan_coef = [(qpow(d[i]) - qpow(-d[i])).inverse() for i in range(n)]

    # -- weights and pairings ---------------------------------------------
    def word_weight(self, word):
        n = self.n
        w = [0] * n
        for x in word:
            a = self.datum.alpha(x % n)
            s = -1 if x < n else 1
            for j in range(n):
                w[j] += s * a[j]
        return tuple(w)

    def pair_word(self, mu, word) -> int:
        """``(mu, wt(word))`` as an integer."""
        n, d = self.n, self._d
        s = 0
        for x in word:
            if x < n:
                s -= d[x] * mu[x]
            else:
                s += d[x - n] * mu[x - n]
        return s

    def pair(self, mu, nu) -> int:
        return int(self.datum.form(mu, nu))

    # -- one-sided normal forms -------------------------------------------
    def _check_len(self, word):
        if not self.system.unbounded and len(word) > self.cutoff:
            raise CutoffExceeded(f"word of length {len(word)} exceeds cutoff {self.cutoff}")

    def nf_word(self, word: tuple) -> dict:
        """Normal form of a one-sided (all-E or all-F) word: {normal word: coeff}."""
        hit = self._nf_cache.get(word)
        if hit is not None:
            return hit
        self._check_len(word)
        if len(word) <= 1:
            res = {word: ONE}
        else:
            res = {}
            for u, c in self.nf_word(word[:-1]).items():
                for w, c2 in self._nf_append(u, word[-1]).items():
                    _add_into(res, w, c * c2)
        self._nf_cache[word] = res
        return res

    def _nf_append(self, u, letter) -> dict:
        w = u + (letter,)
        key = ("app", w)
        hit = self._nf_cache.get(key)
        if hit is not None:
            return hit
        self._check_len(w)
        res = None
        for L in range(min(self._maxlhs, len(w)), 1, -1):
            rhs = self._one_sided.get(w[-L:])
            if rhs is not None:
                res = {}
                pre = w[:-L]
                for w2, c in rhs:
                    for w3, c3 in self.nf_word(pre + w2).items():
                        _add_into(res, w3, c * c3)
                break
        if res is None:
            res = {w: ONE}
        self._nf_cache[key] = res
        return res

    def nf_concat(self, u, v) -> dict:
        if not u:
            return {v: ONE}
        if not v:
            return {u: ONE}
        res = {u: ONE}
        for letter in v:
            nxt = {}
            for w, c in res.items():
                for w2, c2 in self._nf_append(w, letter).items():
                    _add_into(nxt, w2, c * c2)
            res = nxt
        return res

    def is_normal_word(self, word) -> bool:
        return all(word[i:i + L] not in self._one_sided
                   for L in range(2, self._maxlhs + 1) for i in range(len(word) - L + 1))

    # -- E-word past F-word ------------------------------------------------
    def straighten(self, e, f) -> dict:
        """``e * f`` as {NormalMonomial: coeff} for normal words e (E's), f (F's)."""
        key = (e, f)
        hit = self._straight_cache.get(key)
        if hit is not None:
            return hit
        zero = self.zero_weight
        if not e or not f:
            res = {NormalMonomial(f, zero, e): ONE}
            self._straight_cache[key] = res
            return res
        n = self.n
        i = e[-1] - n
        # E_i * f
        first = {NormalMonomial(f, zero, (e[-1],)): ONE}
        a = self.datum.alpha(i)
        na = tuple(-x for x in a)
        ci = self._cartan_coef[i]
        for p, letter in enumerate(f):
            if letter != i:
                continue
            pre, suf = f[:p], f[p + 1:]
            for mu, sgn in ((a, ci), (na, -ci)):
                # pre K_mu suf = q^{(mu, wt suf)} pre suf K_mu
                c = sgn * qpow(self.pair_word(mu, suf))
                for w, c2 in self.nf_concat(pre, suf).items():
                    _add_into(first, NormalMonomial(w, mu, ()), c * c2)
        e0 = e[:-1]
        if not e0:
            self._straight_cache[key] = first
            return first
        res = {}
        for m, c in first.items():
            # e0 * m.f_word * K_mu * m.e_word
            for m2, c2 in self.straighten(e0, m.f_word).items():
                # m2 = f'' K_mu'' e''; then e'' K_mu = q^{-(mu, wt e'')} K_mu e''
                s = -self.pair_word(m.torus, m2.e_word)
                mu = tuple(x + y for x, y in zip(m2.torus, m.torus))
                coef = c * c2 * qpow(s)
                for ew, c3 in self.nf_concat(m2.e_word, m.e_word).items():
                    _add_into(res, NormalMonomial(m2.f_word, mu, ew), coef * c3)
        self._straight_cache[key] = res
        return res

    def mul_monomials(self, m1: NormalMonomial, m2: NormalMonomial) -> dict:
        key = (m1, m2)
        hit = self._mono_cache.get(key)
        if hit is not None:
            return hit
        res = {}
        mu12 = tuple(x + y for x, y in zip(m1.torus, m2.torus))
        for m, c in self.straighten(m1.e_word, m2.f_word).items():
            s = self.pair_word(m1.torus, m.f_word) - self.pair_word(m2.torus, m.e_word)
            mu = tuple(x + y for x, y in zip(mu12, m.torus))
            coef = c * qpow(s)
            fs = self.nf_concat(m1.f_word, m.f_word)
            es = self.nf_concat(m.e_word, m2.e_word)
            for fw, cf in fs.items():
                for ew, ce in es.items():
                    _add_into(res, NormalMonomial(fw, mu, ew), coef * cf * ce)
        if len(self._mono_cache) < 400000:
            self._mono_cache[key] = res
        return res

    # -- constructors --------------------------------------------------------
    def element(self, terms=None) -> "UqElement":
        return UqElement(self, terms or {})

    def one(self) -> "UqElement":
        return UqElement(self, {NormalMonomial((), self.zero_weight, ()): ONE})

    def zero(self) -> "UqElement":
        return UqElement(self, {})

    def scalar(self, c) -> "UqElement":
        c = qs(c)
        return UqElement(self, {NormalMonomial((), self.zero_weight, ()): c} if c else {})

    def E(self, i: int) -> "UqElement":
        return UqElement(self, {NormalMonomial((), self.zero_weight, (self.n + i,)): ONE})

    def F(self, i: int) -> "UqElement":
        return UqElement(self, {NormalMonomial((i,), self.zero_weight, ()): ONE})

    def K(self, mu) -> "UqElement":
        mu = tuple(mu)
        if len(mu) != self.n:
            raise ValueError("torus weight has wrong length")
        return UqElement(self, {NormalMonomial((), mu, ()): ONE})

    def monomial(self, f=(), mu=None, e=()) -> "UqElement":
        """Normalized product F-letters * K_mu * E-letters (indices 0-based per kind)."""
        mu = self.zero_weight if mu is None else tuple(mu)
        fw = tuple(f)
        ew = tuple(self.n + i for i in e)
        terms = {}
        for a, ca in self.nf_word(fw).items():
            for b, cb in self.nf_word(ew).items():
                _add_into(terms, NormalMonomial(a, mu, b), ca * cb)
        return UqElement(self, terms)

    def normalize(self, word) -> "UqElement":
        """Normal form of a free word: a sequence of ('E', i), ('F', i), ('K', mu)."""
        out = self.one()
        for kind, arg in word:
            if kind == "E":
                out = out * self.E(arg)
            elif kind == "F":
                out = out * self.F(arg)
            elif kind == "K":
                out = out * self.K(arg)
            else:
                raise ValueError(f"unknown letter kind {kind!r}")
        return out

    def mono_str(self, m: NormalMonomial) -> str:
        parts = [self.system.letter_name(x) for x in m.f_word]
        if any(m.torus):
            parts.append("K[" + ",".join(str(x) for x in m.torus) + "]")
        parts += [self.system.letter_name(x) for x in m.e_word]
        return " ".join(parts) if parts else "1"

    def graded_dimension(self, part: str, degree) -> int:
        return graded_dimension(self, part, degree)


class UqElement:
    """Finite combination of normal monomials with QScalar coefficients."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg: QuantumGroup, terms: dict):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def __add__(self, other) -> "UqElement":
        if not isinstance(other, UqElement):
            other = self.alg.scalar(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(t, k, v)
        return UqElement(self.alg, t)

    __radd__ = __add__

    def __neg__(self) -> "UqElement":
        return UqElement(self.alg, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other) -> "UqElement":
        if not isinstance(other, UqElement):
            other = self.alg.scalar(other)
        return self + (-other)

    def __rsub__(self, other) -> "UqElement":
        return (-self) + other

    def scale(self, c) -> "UqElement":
        c = qs(c)
        if c.is_zero():
            return UqElement(self.alg, {})
        return UqElement(self.alg, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other) -> "UqElement":
        if not isinstance(other, UqElement):
            return self.scale(other)
        alg = self.alg
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c = c1 * c2
                for m, c3 in alg.mul_monomials(m1, m2).items():
                    _add_into(out, m, c * c3)
        return UqElement(alg, out)

    def __rmul__(self, other) -> "UqElement":
        return self.scale(other)

    def __pow__(self, k: int) -> "UqElement":
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, UqElement):
            if isinstance(other, int) and other == 0:
                return not self.terms
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((m.degree() for m in self.terms), default=0)

    def weights(self) -> set:
        return {self.weight_of(m) for m in self.terms}

    def weight_of(self, m: NormalMonomial):
        alg = self.alg
        we = alg.word_weight(m.e_word)
        wf = alg.word_weight(m.f_word)
        return tuple(a + b for a, b in zip(we, wf))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].degree(), kv[0]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            ms = self.alg.mono_str(m)
            cs = str(c)
            if ms == "1":
                parts.append(cs if c.is_laurent() and " " not in cs else f"({cs})")
            elif c == ONE:
                parts.append(ms)
            else:
                parts.append(f"({cs}) {ms}")
        return " + ".join(parts)

    __repr__ = __str__

    def to_json(self) -> list:
        return [
            {"f": [self.alg.system.letter_name(x) for x in m.f_word], "k": list(m.torus),
             "e": [self.alg.system.letter_name(x) for x in m.e_word], "coeff": list(c.to_strings())}
            for m, c in self.sorted_terms()
        ]


# ---------------------------------------------------------------------------
# graded dimensions
# ---------------------------------------------------------------------------

def normal_words(alg: QuantumGroup, part: str, length: int) -> list:
    """All irreducible one-sided words of a given length, sorted."""
    n = alg.n
    letters = list(range(n, 2 * n)) if part.upper().startswith("E") else list(range(n))
    words = [()]
    for _ in range(length):
        words = [w + (x,) for w in words for x in letters if alg.is_normal_word(w + (x,))]
    return sorted(words)


def graded_dimension(alg: QuantumGroup, part: str, degree) -> int:
    """Number of irreducible words of a total degree (int) or root-lattice degree (tuple)."""
    if isinstance(degree, int):
        if not alg.system.unbounded and degree > alg.cutoff:
            raise CutoffExceeded(f"degree {degree} beyond cutoff {alg.cutoff}")
        return len(normal_words(alg, part, degree))
    total = sum(degree)
    if not alg.system.unbounded and total > alg.cutoff:
        raise CutoffExceeded(f"degree {total} beyond cutoff {alg.cutoff}")
    n = alg.n
    cnt = 0
    for w in normal_words(alg, part, total):
        counts = [0] * n
        for x in w:
            counts[x % n] += 1
        if tuple(counts) == tuple(degree):
            cnt += 1
    return cnt


def pbw_oracle(datum: CartanDatum, degree) -> int:
    """Monomials in one variable per positive root with the given (total or root) degree."""
    roots = datum.positive_roots_root_coords()
    if isinstance(degree, int):
        hs = [sum(r) for r in roots]
        return _count_compositions(tuple(hs), degree)
    return _count_vector(tuple(roots), tuple(degree))


@lru_cache(maxsize=None)
def _count_compositions(hs, total):
    if not hs:
        return int(total == 0)
    h = hs[0]
    return sum(_count_compositions(hs[1:], total - k * h) for k in range(total // h + 1))


@lru_cache(maxsize=None)
def _count_vector(roots, target):
    if not roots:
        return int(all(t == 0 for t in target))
    r = roots[0]
    out = 0
    k = 0
    while True:
        rest = tuple(t - k * x for t, x in zip(target, r))
        if any(x < 0 for x in rest):
            break
        out += _count_vector(roots[1:], rest)
        k += 1
    return out


_GROUPS: dict = {}


def quantum_group(label: str, cutoff: int = DEFAULT_CUTOFF) -> QuantumGroup:
    """Completed U_q for a Cartan label, cached per (label, cutoff)."""
    key = (label, cutoff)
    if key not in _GROUPS:
        sys = complete(build_presentation(cartan(label), cutoff), cutoff)
        _GROUPS[key] = QuantumGroup(sys)
    return _GROUPS[key]


def random_element(alg: QuantumGroup, rng, max_degree: int = 3, window: int = 2, n_terms: int = 3,
                   letters: str = "FE") -> UqElement:
    """Seeded random element: a few normalized words with small Laurent coefficients.

    ``rng`` is a ``random.Random``; ``letters`` selects which generator kinds may appear.
    """
    n = alg.n
    pool = ([i for i in range(n)] if "F" in letters else []) + ([n + i for i in range(n)] if "E" in letters else [])
    out = alg.zero()
    for _ in range(n_terms):
        length = rng.randint(0, max_degree) if pool else 0
        word = [("F", x) if x < n else ("E", x - n) for x in (rng.choice(pool) for _ in range(length))]
        mu = tuple(rng.randint(-window, window) for _ in range(n))
        c = qs(rng.choice([1, -1, 2, 3])) * qpow(rng.randint(-2, 2))
        out = out + alg.K(mu) * alg.normalize(word).scale(c)
    return out
