"""Hopf structure on U_q and constructions built from it.

Generator values::

    Delta K_mu = K_mu (x) K_mu
    Delta E_a  = K_a (x) E_a + E_a (x) 1
    Delta F_a  = 1 (x) F_a + F_a (x) K_-a
    S(K_mu) = K_-mu,  S(E_a) = -K_-a E_a,  S(F_a) = -F_a K_a
    eps(K_mu) = 1,  eps(E_a) = eps(F_a) = 0

Tensor legs are always kept in PBW normal form.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from dataclasses import dataclass, field
from typing import Callable

from .linalg import Echelon, add_scaled, kernel
from .pbw import NormalMonomial, QuantumGroup, UqElement, _add_into
from .qscalar import ONE, ZERO, QScalar, qs

__all__ = [
    "TensorElement",
    "coproduct",
    "antipode",
    "counit",
    "verify_hopf_axioms",
    "ad",
    "ModuleAlgebraAction",
    "SmashProduct",
    "SmashElement",
    "untwist_f",
    "untwist_inverse",
    "check_untwist_properties",
    "mr_coinvariants",
    "GradedProjection",
]


class TensorElement:
    """Element of U_q^{(x) k} as {tuple of NormalMonomials: coeff}."""

    __slots__ = ("alg", "terms", "legs")

    def __init__(self, alg: QuantumGroup, terms: dict, legs: int = 2):
        self.alg = alg
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}
        self.legs = legs

    @classmethod
    def pure(cls, *elems: UqElement) -> "TensorElement":
        alg = elems[0].alg
        terms: dict = {}
        for combo in itertools.product(*(e.terms.items() for e in elems)):
            c = ONE
            for _, x in combo:
                c = c * x
            _add_into(terms, tuple(m for m, _ in combo), c)
        return cls(alg, terms, len(elems))

    def __add__(self, other: "TensorElement") -> "TensorElement":
        t = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(t, k, v)
        return TensorElement(self.alg, t, self.legs)

    def __neg__(self):
        return TensorElement(self.alg, {k: -v for k, v in self.terms.items()}, self.legs)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TensorElement":
        c = qs(c)
        return TensorElement(self.alg, {k: v * c for k, v in self.terms.items()}, self.legs)

    def __mul__(self, other: "TensorElement") -> "TensorElement":
        if not isinstance(other, TensorElement):
            return self.scale(other)
        alg = self.alg
        out: dict = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                parts = [alg.mul_monomials(a, b) for a, b in zip(k1, k2)]
                c = c1 * c2
                for combo in itertools.product(*(p.items() for p in parts)):
                    cc = c
                    for _, x in combo:
                        cc = cc * x
                    _add_into(out, tuple(m for m, _ in combo), cc)
        return TensorElement(alg, out, self.legs)

    def __eq__(self, other) -> bool:
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def map_leg(self, i: int, fn: Callable[[NormalMonomial], dict]) -> "TensorElement":
        """Apply a linear map (monomial -> {monomial: coeff}) to leg ``i``."""
        out: dict = {}
        for k, c in self.terms.items():
            for m, c2 in fn(k[i]).items():
                _add_into(out, k[:i] + (m,) + k[i + 1:], c * c2)
        return TensorElement(self.alg, out, self.legs)

    def expand_leg(self, i: int, fn: Callable[[NormalMonomial], dict]) -> "TensorElement":
        """Replace leg ``i`` by a tensor (monomial -> {tuple: coeff})."""
        out: dict = {}
        for k, c in self.terms.items():
            for t, c2 in fn(k[i]).items():
                _add_into(out, k[:i] + t + k[i + 1:], c * c2)
        legs = len(next(iter(out))) if out else self.legs + 1
        return TensorElement(self.alg, out, legs)

    def multiply_out(self, order=None) -> UqElement:
        """``a (x) b (x) ... -> a b ...`` (``order`` permutes legs before multiplying)."""
        alg = self.alg
        out = alg.zero()
        for k, c in self.terms.items():
            legs = k if order is None else tuple(k[j] for j in order)
            x = UqElement(alg, {legs[0]: c})
            for m in legs[1:]:
                x = x * UqElement(alg, {m: ONE})
            out = out + x
        return out

    def leg_elements(self):
        for k, c in self.terms.items():
            yield k, c

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        alg = self.alg
        parts = []
        for k, c in sorted(self.terms.items(), key=lambda kv: kv[0]):
            parts.append(f"({c}) * (" + " (x) ".join(alg.mono_str(m) for m in k) + ")")
        return "Sum " + " + ".join(parts)

    __repr__ = __str__


# ---------------------------------------------------------------------------
# coproduct, antipode, counit
# ---------------------------------------------------------------------------

class _HopfCache:
    def __init__(self, alg: QuantumGroup):
        self.alg = alg
        self.delta: dict = {}
        self.anti: dict = {}


_CACHES: dict = {}


def _cache(alg) -> _HopfCache:
    c = _CACHES.get(id(alg))
    if c is None or c.alg is not alg:
        c = _CACHES[id(alg)] = _HopfCache(alg)
    return c


def _letter_delta(alg: QuantumGroup, letter) -> TensorElement:
    n = alg.n
    z = alg.zero_weight
    one = NormalMonomial((), z, ())
    if letter >= n:
        i = letter - n
        a = alg.datum.alpha(i)
        e = NormalMonomial((), z, (letter,))
        return TensorElement(alg, {(NormalMonomial((), a, ()), e): ONE, (e, one): ONE})
    a = tuple(-x for x in alg.datum.alpha(letter))
    f = NormalMonomial((letter,), z, ())
    return TensorElement(alg, {(one, f): ONE, (f, NormalMonomial((), a, ())): ONE})


def _mono_delta(alg: QuantumGroup, m: NormalMonomial) -> dict:
    cache = _cache(alg).delta
    hit = cache.get(m)
    if hit is not None:
        return hit
    z = alg.zero_weight
    one = NormalMonomial((), z, ())
    out = TensorElement(alg, {(NormalMonomial((), m.torus, ()), NormalMonomial((), m.torus, ())): ONE})
    # build F-part, then torus, then E-part
    acc = TensorElement(alg, {(one, one): ONE})
    for x in m.f_word:
        acc = acc * _letter_delta(alg, x)
    acc = acc * out
    for x in m.e_word:
        acc = acc * _letter_delta(alg, x)
    cache[m] = acc.terms
    return acc.terms


def coproduct(x: UqElement) -> TensorElement:
    alg = x.alg
    out: dict = {}
    for m, c in x.terms.items():
        for k, c2 in _mono_delta(alg, m).items():
            _add_into(out, k, c * c2)
    return TensorElement(alg, out)


def _mono_antipode(alg: QuantumGroup, m: NormalMonomial) -> UqElement:
    cache = _cache(alg).anti
    hit = cache.get(m)
    if hit is not None:
        return hit
    n = alg.n
    out = alg.one()
    # S reverses order: S(f K e) = S(e) S(K) S(f)
    for x in reversed(m.e_word):
        i = x - n
        a = alg.datum.alpha(i)
        out = out * (-(alg.K(tuple(-y for y in a)) * alg.E(i)))
    out = out * alg.K(tuple(-y for y in m.torus))
    for x in reversed(m.f_word):
        out = out * (-(alg.F(x) * alg.K(alg.datum.alpha(x))))
    cache[m] = out
    return out


def antipode(x: UqElement) -> UqElement:
    alg = x.alg
    out: dict = {}
    for m, c in x.terms.items():
        for m2, c2 in _mono_antipode(alg, m).terms.items():
            _add_into(out, m2, c * c2)
    return UqElement(alg, out)


def counit(x: UqElement) -> QScalar:
    out = ZERO
    for m, c in x.terms.items():
        if not m.f_word and not m.e_word:
            out = out + c
    return out


def _mono_counit(m: NormalMonomial) -> dict:
    return {(): ONE} if not m.f_word and not m.e_word else {}


@dataclass
class HopfReport:
    status: str
    checks: list = field(default_factory=list)
    witness: str | None = None

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def verify_hopf_axioms(sample) -> HopfReport:
    """Coassociativity, counit and antipode axioms on each sample element."""
    report = HopfReport("pass")
    for x in sample:
        alg = x.alg
        d = coproduct(x)
        lhs = d.expand_leg(0, lambda m: _mono_delta(alg, m))
        rhs = d.expand_leg(1, lambda m: _mono_delta(alg, m))
        checks = [("coassociativity", lhs == rhs)]
        left_counit = _collapse(d, 0, alg)
        right_counit = _collapse(d, 1, alg)
        checks.append(("left counit", left_counit == x))
        checks.append(("right counit", right_counit == x))
        eps = alg.scalar(counit(x))
        s_left = d.map_leg(0, lambda m: _mono_antipode(alg, m).terms).multiply_out()
        s_right = d.map_leg(1, lambda m: _mono_antipode(alg, m).terms).multiply_out()
        checks.append(("m(S x id)Delta = eps", s_left == eps))
        checks.append(("m(id x S)Delta = eps", s_right == eps))
        report.checks.extend(checks)
        for name, ok in checks:
            if not ok:
                report.status = "fail"
                report.witness = f"{name} fails on {x}"
                return report
    return report


def _collapse(t: TensorElement, leg: int, alg) -> UqElement:
    """Apply eps to one leg of a 2-tensor."""
    out: dict = {}
    for k, c in t.terms.items():
        m = k[leg]
        if not m.f_word and not m.e_word:
            _add_into(out, k[1 - leg], c)
    return UqElement(alg, out)


# ---------------------------------------------------------------------------
# adjoint actions
# ---------------------------------------------------------------------------

def ad(x: UqElement, y: UqElement, side: str = "right") -> UqElement:
    """``ad_l(x)(y) = x_1 y S(x_2)``; ``ad_r(x)(y) = S(x_1) y x_2``."""
    alg = x.alg
    out = alg.zero()
    for (a, b), c in coproduct(x).terms.items():
        if side in ("left", "l"):
            term = UqElement(alg, {a: c}) * y * _mono_antipode(alg, b)
        elif side in ("right", "r"):
            term = _mono_antipode(alg, a).scale(c) * y * UqElement(alg, {b: ONE})
        else:
            raise ValueError(f"unknown side {side!r}")
        out = out + term
    return out


def ad_power(x: UqElement, y: UqElement, k: int, side: str = "right") -> UqElement:
    for _ in range(k):
        y = ad(x, y, side)
    return y


# ---------------------------------------------------------------------------
# smash products
# ---------------------------------------------------------------------------

@dataclass
class ModuleAlgebraAction:
    """Left action of a Hopf subalgebra H (membership predicate) on R = U_q."""

    alg: QuantumGroup
    act: Callable[[UqElement, UqElement], UqElement]
    in_H: Callable[[NormalMonomial], bool]
    name: str = "action"

    @classmethod
    def left_adjoint(cls, alg: QuantumGroup, in_H: Callable[[NormalMonomial], bool], name="ad_l"):
        return cls(alg, lambda h, r: ad(h, r, "left"), in_H, name)


def torus_subalgebra(m: NormalMonomial) -> bool:
    return not m.f_word and not m.e_word


def whole_algebra(m: NormalMonomial) -> bool:
    return True


class SmashElement:
    """Element of R # H as {(R-monomial, H-monomial): coeff}."""

    __slots__ = ("smash", "terms")

    def __init__(self, smash: "SmashProduct", terms: dict):
        self.smash = smash
        self.terms = {k: v for k, v in terms.items() if not v.is_zero()}

    def __add__(self, other):
        t = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(t, k, v)
        return SmashElement(self.smash, t)

    def __neg__(self):
        return SmashElement(self.smash, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return self.smash.multiply(self, other)

    def __eq__(self, other):
        return isinstance(other, SmashElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __str__(self):
        alg = self.smash.alg
        if not self.terms:
            return "0"
        return " + ".join(f"({c}) {alg.mono_str(a)} # {alg.mono_str(b)}" for (a, b), c in sorted(self.terms.items()))

    __repr__ = __str__


class SmashProduct:
    """``(r # x)(r' # x') = r x_1(r') # x_2 x'``."""

    def __init__(self, action: ModuleAlgebraAction):
        self.action = action
        self.alg = action.alg
        self._cache: dict = {}

    def element(self, r: UqElement, h: UqElement) -> SmashElement:
        for m in h.terms:
            if not self.action.in_H(m):
                raise ValueError(f"{self.alg.mono_str(m)} is not in H")
        terms: dict = {}
        for a, ca in r.terms.items():
            for b, cb in h.terms.items():
                _add_into(terms, (a, b), ca * cb)
        return SmashElement(self, terms)

    def r(self, r: UqElement) -> SmashElement:
        return self.element(r, self.alg.one())

    def h(self, h: UqElement) -> SmashElement:
        return self.element(self.alg.one(), h)

    def one(self) -> SmashElement:
        return self.element(self.alg.one(), self.alg.one())

    def _mono_product(self, x: NormalMonomial, r2: NormalMonomial) -> dict:
        """``(1 # x)(r2 # 1) = x_1(r2) # x_2`` as {(R-mono, H-mono): coeff}."""
        key = (x, r2)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        out: dict = {}
        r2e = UqElement(alg, {r2: ONE})
        for (a, b), c in _mono_delta(alg, x).items():
            acted = self.action.act(UqElement(alg, {a: ONE}), r2e)
            for m, c2 in acted.terms.items():
                _add_into(out, (m, b), c * c2)
        self._cache[key] = out
        return out

    def multiply(self, u: SmashElement, v: SmashElement) -> SmashElement:
        alg = self.alg
        out: dict = {}
        for (r1, x1), c1 in u.terms.items():
            for (r2, x2), c2 in v.terms.items():
                c = c1 * c2
                for (ra, xb), c3 in self._mono_product(x1, r2).items():
                    for rm, c4 in alg.mul_monomials(r1, ra).items():
                        for hm, c5 in alg.mul_monomials(xb, x2).items():
                            _add_into(out, (rm, hm), c * c3 * c4 * c5)
        return SmashElement(self, out)


def untwist_f(smash: SmashProduct, x: UqElement) -> SmashElement:
    """``f(x) = S(x_1) # x_2``."""
    alg = x.alg
    for m in x.terms:
        if not smash.action.in_H(m):
            raise ValueError(f"{alg.mono_str(m)} is not in H")
    out: dict = {}
    for (a, b), c in coproduct(x).terms.items():
        for m, c2 in _mono_antipode(alg, a).terms.items():
            _add_into(out, (m, b), c * c2)
    return SmashElement(smash, out)


def untwist_inverse(smash: SmashProduct, s: SmashElement) -> dict:
    """``r # x -> r x_1 (x) x_2`` into R (x) H, as {(mono, mono): coeff}."""
    alg = smash.alg
    out: dict = {}
    for (r, x), c in s.terms.items():
        for (a, b), c2 in _mono_delta(alg, x).items():
            for m, c3 in alg.mul_monomials(r, a).items():
                _add_into(out, (m, b), c * c2 * c3)
    return out


def check_untwist_properties(alg: QuantumGroup, window: int = 2, samples: int = 50, seed: int = 0,
                             central: UqElement | None = None, r_degree: int = 2):
    """Untwisting lemma on a torus-window H inside R = U_q, plus centrality of ``f(z)``.

    With H = torus: f multiplicative, Im f commutes with R (x) 1, and the inverse
    ``r # x -> r x_1 (x) x_2`` undoes ``r (x) x -> (r # 1) f(x)``.  When ``central``
    is given, H = R and f(central) is checked to commute with the generators of R # R.
    """
    import random

    from .pbw import random_element
    from .reports import FAIL, PASS, CheckResult

    rng = random.Random(seed)
    smash = SmashProduct(ModuleAlgebraAction.left_adjoint(alg, torus_subalgebra, "ad_l|torus"))
    witnesses = []
    counts = {"multiplicative": 0, "commutes": 0, "inverse": 0, "central": 0}

    def h_sample():
        return random_element(alg, rng, 0, window, rng.randint(1, 3), letters="")

    for _ in range(samples):
        x, y = h_sample(), h_sample()
        if untwist_f(smash, x) * untwist_f(smash, y) != untwist_f(smash, x * y):
            witnesses.append(f"f(x)f(y) != f(xy) for x = {x}, y = {y}")
        counts["multiplicative"] += 1
    for _ in range(samples):
        x = h_sample()
        r = random_element(alg, rng, r_degree, window, 2)
        fx, r1 = untwist_f(smash, x), smash.r(r)
        if fx * r1 != r1 * fx:
            witnesses.append(f"f(x) does not commute with r (x) 1 for x = {x}, r = {r}")
        counts["commutes"] += 1
        back = untwist_inverse(smash, r1 * fx)
        want: dict = {}
        for a, ca in r.terms.items():
            for b, cb in x.terms.items():
                _add_into(want, (a, b), ca * cb)
        if back != want:
            witnesses.append(f"inverse of 1 (x) f fails on r = {r}, x = {x}")
        counts["inverse"] += 1
    if central is not None:
        big = SmashProduct(ModuleAlgebraAction.left_adjoint(alg, whole_algebra, "ad_l"))
        fz = untwist_f(big, central)
        gens = [alg.E(i) for i in range(alg.n)] + [alg.F(i) for i in range(alg.n)]
        gens += [alg.K(tuple(1 if j == i else 0 for j in range(alg.n))) for i in range(alg.n)]
        for g in gens:
            for s in (big.r(g), big.h(g)):
                if fz * s != s * fz:
                    witnesses.append(f"f(z) does not commute with {s}")
                counts["central"] += 1
    params = {"type": alg.datum.type_label, "window": window, "samples": samples, "seed": seed}
    return CheckResult("untwist", FAIL if witnesses else PASS, params, witnesses[:5],
                       "Lemma: untwisting f(x) = S(x_1) (x) x_2 and its Corollary on centres", counts)


# ---------------------------------------------------------------------------
# Majid-Radford coinvariants
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GradedProjection:
    """Projection onto the Levi part: kills every monomial containing a
    non-Levi E (side ``r``) or a non-Levi F (side ``rbar``)."""

    levi: frozenset
    side: str = "r"

    def degree(self, alg: QuantumGroup, m: NormalMonomial) -> int:
        n = alg.n
        if self.side == "r":
            return sum(1 for x in m.e_word if (x - n) not in self.levi)
        return sum(1 for x in m.f_word if x not in self.levi)

    def apply(self, alg: QuantumGroup, m: NormalMonomial) -> dict:
        return {m: ONE} if self.degree(alg, m) == 0 else {}


def parabolic_monomials(alg: QuantumGroup, levi, weight, max_f: int, window: int, torus=None,
                        side: str = "r"):
    """PBW monomials of U_q(p) (or U_q(pbar) for ``side="rbar"``) of a given weight,
    with at most ``max_f`` letters from the opposite Levi side.

    Torus exponents range over a box of radius ``window`` around the exponent
    forced by the leading coproduct term (``-weight`` for E-words, ``0`` for
    F-words) unless an explicit list ``torus`` is supplied.
    """
    from .pbw import normal_words

    n = alg.n
    levi = frozenset(levi)
    datum = alg.datum
    target = tuple(weight)
    minor, major = ("F", "E") if side == "r" else ("E", "F")
    minor_words = [()]
    for L in range(1, max_f + 1):
        minor_words += [w for w in normal_words(alg, minor, L) if all(x % n in levi for x in w)]
    if torus is None:
        center = tuple(-t for t in target) if side == "r" else (0,) * n
        tori = [tuple(d + c for d, c in zip(delta, center))
                for delta in itertools.product(range(-window, window + 1), repeat=n)]
    else:
        tori = torus
    out = []
    for mw in minor_words:
        need = tuple(t - x for t, x in zip(target, alg.word_weight(mw)))
        c = datum.root_coords(need if side == "r" else tuple(-x for x in need))
        if any(Fraction(x).denominator != 1 or x < 0 for x in c):
            continue
        L = int(sum(c))
        for w in normal_words(alg, major, L):
            if alg.word_weight(w) != need:
                continue
            for mu in tori:
                if side == "r":
                    out.append(NormalMonomial(mw, tuple(mu), w))
                else:
                    out.append(NormalMonomial(w, tuple(mu), mw))
    return sorted(out)


def mr_coinvariants(alg: QuantumGroup, levi, weight, max_f: int = 0, window: int = 6, torus=None,
                    side: str = "r") -> list:
    """Basis of ``{x : (pi (x) id) Delta x = 1 (x) x}`` in a weight slice of U_q(p).

    ``side="rbar"`` solves the same condition in U_q(pbar), where pi kills the
    non-Levi F's.
    """
    proj = GradedProjection(frozenset(levi), side)
    monos = parabolic_monomials(alg, levi, weight, max_f, window, torus, side)
    z = alg.zero_weight
    one = NormalMonomial((), z, ())
    images = []
    for m in monos:
        img: dict = {}
        for k, c in _mono_delta(alg, m).items():
            if proj.degree(alg, k[0]) == 0:
                _add_into(img, k, c)
        _add_into(img, (one, m), -ONE)
        images.append(img)
    ech = Echelon()
    for comb in kernel(images):
        terms = {}
        for j, c in comb.items():
            _add_into(terms, monos[j], c)
        ech.add(terms)
    return [UqElement(alg, r) for r in reduced_rows(ech)]


def reduced_rows(ech: Echelon) -> list:
    """Rows of ``ech`` in reduced echelon form (pivot coefficient 1), sorted by pivot."""
    pivots = sorted(ech.rows)
    rows = {p: dict(ech.rows[p][0]) for p in pivots}
    for p in pivots:
        r = rows[p]
        for p2 in pivots:
            if p2 < p and p2 in r:
                add_scaled(r, rows[p2], -r[p2])
    return [rows[p] for p in pivots]
