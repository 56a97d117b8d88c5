"""Root data for small-rank Cartan types.

Weights are integer tuples in the fundamental-weight basis.  The symmetric
form is normalized so short roots have square length 2, and
``d_i = (alpha_i, alpha_i) / 2``.  Characters of the weight lattice are the
computable ones ``sigma * q^mu`` with ``sigma`` a sign character.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache

__all__ = [
    "CartanDatum",
    "SignChar",
    "TorusChar",
    "ParabolicSubset",
    "ExtWeylElement",
    "BudgetExceeded",
    "cartan",
    "pairing",
    "dot_action",
    "hc_orbit",
    "weight_predicates",
    "weights_of_irrep",
    "weyl_dimension",
]

CARTAN_MATRICES = {
    "A1": ((2,),),
    "A1xA1": ((2, 0), (0, 2)),
    "A2": ((2, -1), (-1, 2)),
    # alpha_1 long, alpha_2 short; a_ij = <alpha_i^vee, alpha_j>
    "B2": ((2, -1), (-2, 2)),
}
SYMMETRIZERS = {"A1": (1,), "A1xA1": (1, 1), "A2": (1, 1), "B2": (2, 1)}


class BudgetExceeded(RuntimeError):
    pass


Weight = tuple


def _mat_inv(m):
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return tuple(tuple(row[n:]) for row in a)


@dataclass(frozen=True)
class CartanDatum:
    type_label: str
    cartan_matrix: tuple
    symmetrizers: tuple

    def __post_init__(self):
        a, d = self.cartan_matrix, self.symmetrizers
        n = len(a)
        for i in range(n):
            if a[i][i] != 2:
                raise ValueError("Cartan diagonal must be 2")
            for j in range(n):
                if i != j and a[i][j] > 0:
                    raise ValueError("off-diagonal Cartan entries must be <= 0")
                if d[i] * a[i][j] != d[j] * a[j][i]:
                    raise ValueError("d_i a_ij must be symmetric")

    @property
    def rank(self) -> int:
        return len(self.cartan_matrix)

    # -- lattices ----------------------------------------------------------
    @cached_property
    def simple_roots(self) -> tuple:
        """Fundamental-weight coordinates of the simple roots."""
        a, n = self.cartan_matrix, self.rank
        return tuple(tuple(a[j][i] for j in range(n)) for i in range(n))

    @cached_property
    def _to_root_coords(self):
        # columns of this map are the root-coordinates of omega_j
        m = [[self.simple_roots[i][j] for i in range(self.rank)] for j in range(self.rank)]
        return _mat_inv(m)

    def root_coords(self, mu) -> tuple:
        """Coordinates of ``mu`` in the simple-root basis (rationals)."""
        inv = self._to_root_coords
        return tuple(sum(inv[i][j] * mu[j] for j in range(self.rank)) for i in range(self.rank))

    def from_root_coords(self, c) -> Weight:
        n = self.rank
        return tuple(sum(c[i] * self.simple_roots[i][j] for i in range(n)) for j in range(n))

    def in_root_lattice(self, mu) -> bool:
        return all(x.denominator == 1 for x in self.root_coords(mu))

    def height(self, mu) -> Fraction:
        return sum(self.root_coords(mu))

    @cached_property
    def rho(self) -> Weight:
        return (1,) * self.rank

    def omega(self, i: int) -> Weight:
        return tuple(int(j == i) for j in range(self.rank))

    def alpha(self, i: int) -> Weight:
        return self.simple_roots[i]

    # -- forms -------------------------------------------------------------
    def form(self, mu, nu) -> Fraction:
        """W-invariant form with short roots of length 2."""
        c = self.root_coords(mu)
        return sum(c[i] * self.symmetrizers[i] * nu[i] for i in range(self.rank))

    def coroot_pair(self, mu, i: int) -> int:
        """``<mu, alpha_i^vee>`` -- just the i-th fundamental coordinate."""
        return mu[i]

    # -- Weyl group --------------------------------------------------------
    def reflect(self, i: int, mu) -> Weight:
        a = self.simple_roots[i]
        return tuple(m - mu[i] * x for m, x in zip(mu, a))

    def dot(self, word, mu) -> Weight:
        """``w . mu = w(mu + rho) - rho`` with ``w`` a word applied right to left."""
        v = tuple(m + 1 for m in mu)
        for i in reversed(word):
            v = self.reflect(i, v)
        return tuple(x - 1 for x in v)

    @cached_property
    def weyl_group(self) -> tuple:
        """All elements as (word, matrix) with shortest words, BFS order."""
        n = self.rank
        ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))

        def apply(word, v):
            for i in reversed(word):
                v = self.reflect(i, v)
            return v

        def matrix(word):
            cols = [apply(word, self.omega(j)) for j in range(n)]
            return tuple(tuple(cols[j][i] for j in range(n)) for i in range(n))

        seen = {ident: ()}
        frontier = [()]
        while frontier:
            nxt = []
            for w in frontier:
                for i in range(n):
                    w2 = (i,) + w
                    m = matrix(w2)
                    if m not in seen:
                        seen[m] = w2
                        nxt.append(w2)
            frontier = nxt
        return tuple((w, m) for m, w in seen.items())

    @cached_property
    def positive_roots(self) -> tuple:
        """Positive roots in fundamental-weight coordinates, sorted by height."""
        roots = set()
        for w, _ in self.weyl_group:
            for i in range(self.rank):
                v = self.simple_roots[i]
                for j in reversed(w):
                    v = self.reflect(j, v)
                roots.add(v)
        pos = [r for r in roots if all(c >= 0 for c in self.root_coords(r))]
        return tuple(sorted(pos, key=lambda r: (self.height(r), tuple(-c for c in self.root_coords(r)))))

    def positive_roots_root_coords(self) -> tuple:
        return tuple(tuple(int(c) for c in self.root_coords(r)) for r in self.positive_roots)

    @cached_property
    def sign_group(self) -> tuple:
        return tuple(SignChar(s) for s in itertools.product((1, -1), repeat=self.rank))


@lru_cache(maxsize=None)
def cartan(label: str) -> CartanDatum:
    if label not in CARTAN_MATRICES:
        raise ValueError(f"unsupported Cartan type {label!r}; choose from {sorted(CARTAN_MATRICES)}")
    return CartanDatum(label, CARTAN_MATRICES[label], SYMMETRIZERS[label])


@dataclass(frozen=True)
class SignChar:
    """Sign character ``mu -> prod_i signs[i]^{mu_i}`` of the weight lattice."""

    signs: tuple

    def __call__(self, mu) -> int:
        s = 1
        for e, m in zip(self.signs, mu):
            if e == -1 and m % 2:
                s = -s
        return s

    def __mul__(self, other: "SignChar") -> "SignChar":
        return SignChar(tuple(a * b for a, b in zip(self.signs, other.signs)))

    def is_trivial(self) -> bool:
        return all(s == 1 for s in self.signs)

    @classmethod
    def trivial(cls, rank: int) -> "SignChar":
        return cls((1,) * rank)

    def weyl_act(self, datum: CartanDatum, word) -> "SignChar":
        """``(w sigma)(mu) = sigma(w^{-1} mu)``."""
        inv = tuple(reversed(word))
        out = []
        for j in range(datum.rank):
            v = datum.omega(j)
            for i in reversed(inv):
                v = datum.reflect(i, v)
            out.append(self(v))
        return SignChar(tuple(out))


@dataclass(frozen=True)
class TorusChar:
    """Character ``gamma -> sign(gamma) * q^{(exponent, gamma)}``."""

    sign: SignChar
    exponent: tuple

    @classmethod
    def q_power(cls, mu) -> "TorusChar":
        mu = tuple(mu)
        return cls(SignChar.trivial(len(mu)), mu)

    def shift(self, nu) -> "TorusChar":
        return TorusChar(self.sign, tuple(a + b for a, b in zip(self.exponent, nu)))

    def on_K(self, datum: CartanDatum, gamma):
        """Value on ``K_gamma`` as (sign, integer q-exponent) when gamma is in the root lattice."""
        return self.sign(gamma), datum.form(self.exponent, gamma)

    def to_json(self) -> dict:
        return {"sign": list(self.sign.signs), "exponent": list(self.exponent)}

    def __str__(self) -> str:
        s = "" if self.sign.is_trivial() else f"sigma{list(self.sign.signs)}*"
        return f"{s}q^{list(self.exponent)}"


@dataclass(frozen=True)
class ParabolicSubset:
    simple_roots: frozenset = field(default_factory=frozenset)

    def __init__(self, roots=()):
        object.__setattr__(self, "simple_roots", frozenset(roots))

    def validate(self, datum: CartanDatum):
        if any(not 0 <= i < datum.rank for i in self.simple_roots):
            raise ValueError("parabolic index out of range")
        return self

    def __contains__(self, i) -> bool:
        return i in self.simple_roots


@dataclass(frozen=True)
class ExtWeylElement:
    """Element ``(tau, w)`` of sign characters semidirect Weyl group."""

    sign: SignChar
    weyl_word: tuple

    def compose(self, other: "ExtWeylElement", datum: CartanDatum) -> "ExtWeylElement":
        sign = self.sign * other.sign.weyl_act(datum, self.weyl_word)
        word = _reduce_word(datum, self.weyl_word + other.weyl_word)
        return ExtWeylElement(sign, word)


def _reduce_word(datum: CartanDatum, word) -> tuple:
    target = tuple(datum.dot(word, datum.omega(j)) for j in range(datum.rank))
    for w, _ in datum.weyl_group:
        if tuple(datum.dot(w, datum.omega(j)) for j in range(datum.rank)) == target:
            return w
    raise AssertionError("word not in Weyl group")


def ext_weyl_group(datum: CartanDatum) -> list[ExtWeylElement]:
    return [ExtWeylElement(s, w) for w, _ in datum.weyl_group for s in datum.sign_group]


def pairing(datum: CartanDatum, mu, nu, variant: str = "standard") -> Fraction:
    """Bilinear form on weights.

    ``variant="d"`` is ``sum_a d_a f_a <a^vee, nu>`` for ``mu = sum f_a a``,
    which is the exponent law ``K_mu E_a K_-mu = q^{<mu, a>_d} E_a``.
    """
    if variant == "standard":
        return datum.form(mu, nu)
    if variant == "d":
        f = datum.root_coords(mu)
        val = sum(datum.symmetrizers[a] * f[a] * nu[a] for a in range(datum.rank))
        if datum.in_root_lattice(nu):
            assert Fraction(val).denominator == 1
        return Fraction(val)
    raise ValueError(f"unknown pairing variant {variant!r}")


def dot_action(datum: CartanDatum, w: ExtWeylElement, lam: TorusChar) -> TorusChar:
    sign = w.sign * lam.sign.weyl_act(datum, w.weyl_word)
    return TorusChar(sign, datum.dot(w.weyl_word, lam.exponent))


def hc_orbit(datum: CartanDatum, lam: TorusChar) -> frozenset:
    return frozenset(dot_action(datum, w, lam) for w in ext_weyl_group(datum))


def is_dot_dominant(datum: CartanDatum, mu) -> bool:
    """``<mu + rho, alpha^vee> >= 0`` for every simple root."""
    return all(m + 1 >= 0 for m in mu)


@dataclass(frozen=True)
class WeightPredicates:
    is_integral_dominant: bool
    is_P_regular: bool
    is_P_character: bool
    singular_roots: frozenset


def singular_roots(datum: CartanDatum, lam: TorusChar) -> frozenset:
    return frozenset(
        i for i in range(datum.rank)
        if dot_action(datum, ExtWeylElement(SignChar.trivial(datum.rank), (i,)), lam) == lam
    )


def weight_predicates(datum: CartanDatum, lam: TorusChar, P: ParabolicSubset) -> WeightPredicates:
    sing = singular_roots(datum, lam)
    is_char = lam.sign.is_trivial() and all(
        datum.form(lam.exponent, datum.alpha(i)) == 0 for i in P.simple_roots
    )
    return WeightPredicates(
        is_integral_dominant=is_dot_dominant(datum, lam.exponent),
        is_P_regular=sing <= P.simple_roots,
        is_P_character=is_char,
        singular_roots=sing,
    )


def dominant_by_orbit(datum: CartanDatum, lam: TorusChar) -> bool:
    """Dominance via central characters: no ``lam + nu`` with ``nu`` a nonzero
    positive root-lattice vector shares the dot orbit of ``lam``."""
    # the orbit contains every sign twist, so only exponents matter
    for other in hc_orbit(datum, lam):
        diff = tuple(a - b for a, b in zip(other.exponent, lam.exponent))
        if any(diff) and datum.in_root_lattice(diff) and all(c >= 0 for c in datum.root_coords(diff)):
            return False
    return True


def weyl_dimension(datum: CartanDatum, mu) -> int:
    num = Fraction(1)
    for a in datum.positive_roots:
        num *= Fraction(datum.form(tuple(m + 1 for m in mu), a)) / datum.form(datum.rho, a)
    assert num.denominator == 1
    return int(num)


def weights_of_irrep(datum: CartanDatum, mu, budget: int = 200) -> dict:
    """Weight multiplicities of the irreducible of highest weight ``mu`` (Freudenthal)."""
    mu = tuple(mu)
    if any(m < 0 for m in mu):
        raise ValueError("highest weight must be dominant")
    dim = weyl_dimension(datum, mu)
    if dim > budget:
        raise BudgetExceeded(f"dimension {dim} exceeds budget {budget}")
    n = datum.rank
    span = max(datum.height(tuple(a - b for a, b in zip(mu, _w_apply(datum, w, mu)))) for w, _ in datum.weyl_group)
    span = int(span)
    dominant_below = _dominant_conjugate_test(datum, mu)
    candidates = {}
    for c in itertools.product(range(span + 1), repeat=n):
        if sum(c) > span:
            continue
        lam = tuple(m - x for m, x in zip(mu, datum.from_root_coords(c)))
        if dominant_below(lam):
            candidates[lam] = sum(c)
    mplus = tuple(m + 1 for m in mu)
    top = datum.form(mplus, mplus)
    mult: dict = {}
    for lam in sorted(candidates, key=lambda l: candidates[l]):
        if lam == mu:
            mult[lam] = 1
            continue
        acc = Fraction(0)
        for a in datum.positive_roots:
            k = 1
            while True:
                nxt = tuple(x + k * y for x, y in zip(lam, a))
                if nxt not in candidates:
                    break
                acc += mult.get(nxt, 0) * datum.form(nxt, a)
                k += 1
        lp = tuple(x + 1 for x in lam)
        denom = top - datum.form(lp, lp)
        m = 2 * acc / denom
        assert m.denominator == 1
        if m:
            mult[lam] = int(m)
    assert sum(mult.values()) == dim, (mult, dim)
    return mult


def _w_apply(datum, word, v):
    for i in reversed(word):
        v = datum.reflect(i, v)
    return v


def _dominant_conjugate_test(datum, mu):
    def test(lam):
        for w, _ in datum.weyl_group:
            v = _w_apply(datum, w, lam)
            if all(x >= 0 for x in v):
                diff = tuple(a - b for a, b in zip(mu, v))
                c = datum.root_coords(diff)
                return all(x.denominator == 1 and x >= 0 for x in c)
        return False
    return test


def predicates_check(datum: CartanDatum, window: int = 4, mu_window: int = 2):
    """Exhaustive comparison of the combinatorial predicates with dot-orbit membership.

    Dominance against the central-character criterion, singular roots against
    ``<lam + rho, alpha^vee> = 0``, P-characters against ``lam(K_alpha) = 1``, and
    the separation of ``chi_{lam+mu}`` from ``chi_{lam+psi}`` for P-regular dominant
    ``lam`` and dominant P-characters ``mu``.
    """
    from .reports import FAIL, PASS, CheckResult

    n = datum.rank
    subsets = [ParabolicSubset(s) for k in range(n + 1) for s in itertools.combinations(range(n), k)]
    witnesses = []
    counts = {"characters": 0, "separation_cases": 0}
    for exp in itertools.product(range(-window, window + 1), repeat=n):
        for sign in datum.sign_group:
            lam = TorusChar(sign, exp)
            counts["characters"] += 1
            if is_dot_dominant(datum, exp) != dominant_by_orbit(datum, lam):
                witnesses.append(f"dominance disagrees at {lam}")
            # s_i fixes the sign part only when sigma(alpha_i) = 1
            direct_sing = frozenset(i for i in range(n) if exp[i] + 1 == 0 and sign(datum.alpha(i)) == 1)
            if singular_roots(datum, lam) != direct_sing:
                witnesses.append(f"singular roots disagree at {lam}")
            for P in subsets:
                pred = weight_predicates(datum, lam, P)
                direct = sign.is_trivial() and all(
                    lam.on_K(datum, datum.alpha(i)) == (1, 0) for i in P.simple_roots)
                if pred.is_P_character != direct:
                    witnesses.append(f"P-character disagrees at {lam}, P = {sorted(P.simple_roots)}")
    for exp in itertools.product(range(-window, window + 1), repeat=n):
        lam = TorusChar.q_power(exp)
        for P in subsets:
            pred = weight_predicates(datum, lam, P)
            if not (pred.is_integral_dominant and pred.is_P_regular):
                continue
            for mu in itertools.product(range(mu_window + 1), repeat=n):
                if any(mu[i] for i in P.simple_roots):
                    continue
                orbit = hc_orbit(datum, lam.shift(mu))
                for psi in weights_of_irrep(datum, mu):
                    if tuple(psi) == tuple(mu):
                        continue
                    counts["separation_cases"] += 1
                    if lam.shift(psi) in orbit:
                        witnesses.append(f"chi coincide: lam={lam}, mu={list(mu)}, psi={list(psi)}, "
                                         f"P={sorted(P.simple_roots)}")
    params = {"type": datum.type_label, "window": window, "mu_window": mu_window}
    return CheckResult("dominance", FAIL if witnesses else PASS, params, witnesses[:5],
                       "Lemma: dominance via central characters (i) and P-regular separation (ii)", counts)
