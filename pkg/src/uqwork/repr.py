"""Highest-weight modules and central characters.

Torus characters ``q^lam`` pair with weights through the normalized form, which
takes values in ``(1/D) Z`` where ``D`` is the lattice denominator of the
Cartan type.  Module scalars therefore live in ``Q(v)`` with ``v = q^(1/D)``:
algebra coefficients are inflated by ``q -> v^D`` on the way in, and values
that turn out to lie in ``Q(q)`` are deflated back on the way out.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .hopf import _mono_delta, reduced_rows
from .linalg import Echelon, add_scaled, kernel
from .pbw import NormalMonomial, QuantumGroup, UqElement, _add_into, normal_words, pbw_oracle
from .qscalar import ONE, ZERO, QScalar, qint, qpow, qs, qs_deflate, qs_inflate
from .reports import FAIL, INCONCLUSIVE, PASS, CheckResult
from .rootdata import BudgetExceeded, CartanDatum, SignChar, TorusChar, weights_of_irrep, weyl_dimension

__all__ = [
    "DepthExceeded",
    "lattice_denominator",
    "ModuleElement",
    "VermaModule",
    "verma_apply",
    "CentralElement",
    "find_central_elements",
    "sl2_casimir",
    "hc_eval",
    "FiniteModule",
    "invariant_subspace_search",
    "TensorModule",
    "char_value",
    "ParabolicVermaTruncation",
    "universal_parabolic_verma",
    "parabolic_verma_check",
    "hc_orbit_check",
    "finite_dim_irrep",
    "fin_generators_sl2",
    "fin_restriction_data",
    "duflo_check",
    "tensor_annihilation_check",
]


class DepthExceeded(ValueError):
    pass


def lattice_denominator(datum: CartanDatum) -> int:
    """Least ``D`` with ``D (mu, nu)`` integral for all weights."""
    d = 1
    for i in range(datum.rank):
        for j in range(datum.rank):
            d = math.lcm(d, Fraction(datum.form(datum.omega(i), datum.omega(j))).denominator)
    return d


def char_value(datum: CartanDatum, lam: TorusChar, mu, D: int) -> QScalar:
    """``lam(K_mu)`` as an element of ``Q(q^(1/D))``."""
    e = Fraction(datum.form(lam.exponent, mu)) * D
    if e.denominator != 1:
        raise ValueError(f"pairing of {lam} with {mu} not in (1/{D})Z")
    return qpow(int(e)) * lam.sign(mu)


@dataclass
class ModuleElement:
    coords: dict = field(default_factory=dict)

    def __post_init__(self):
        self.coords = {k: v for k, v in self.coords.items() if not v.is_zero()}

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        c = dict(self.coords)
        for k, v in other.coords.items():
            _add_into(c, k, v)
        return ModuleElement(c)

    def scale(self, c) -> "ModuleElement":
        c = qs(c)
        return ModuleElement({k: v * c for k, v in self.coords.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, ModuleElement) and self.coords == other.coords

    def is_zero(self) -> bool:
        return not self.coords


class VermaModule:
    """Depth-truncated ``M_lam``: basis F-normal words applied to ``v_lam``.

    Scalars are in ``Q(q^(1/D))``; see the module docstring.
    """

    def __init__(self, alg: QuantumGroup, highest_weight: TorusChar, depth_cutoff: int):
        self.alg = alg
        self.datum = alg.datum
        self.highest_weight = highest_weight
        self.depth_cutoff = depth_cutoff
        self.D = lattice_denominator(self.datum)
        self.basis = [w for L in range(depth_cutoff + 1) for w in normal_words(alg, "F", L)]
        self.index = {w: i for i, w in enumerate(self.basis)}
        self._cache: dict = {}
        self._chars: dict = {}

    def weight(self, word):
        return tuple(a + b for a, b in zip(self.highest_weight.exponent, self.alg.word_weight(word)))

    def weight_multiplicities(self) -> dict:
        """Root-coordinate depth vector -> dimension."""
        out: dict = {}
        n = self.alg.n
        for w in self.basis:
            c = [0] * n
            for x in w:
                c[x] += 1
            out[tuple(c)] = out.get(tuple(c), 0) + 1
        return out

    def char(self, mu) -> QScalar:
        v = self._chars.get(mu)
        if v is None:
            v = self._chars[mu] = char_value(self.datum, self.highest_weight, mu, self.D)
        return v

    def act_monomial(self, m: NormalMonomial, word) -> dict:
        key = (m, word)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        alg = self.alg
        out: dict = {}
        prod = alg.mul_monomials(m, NormalMonomial(word, alg.zero_weight, ()))
        for m2, c in prod.items():
            if m2.e_word:
                continue
            if len(m2.f_word) > self.depth_cutoff:
                raise DepthExceeded(f"{alg.mono_str(m2)} beyond depth {self.depth_cutoff}")
            _add_into(out, m2.f_word, qs_inflate(c, self.D) * self.char(m2.torus))
        self._cache[key] = out
        return out

    def apply(self, x: UqElement, vec: dict) -> dict:
        out: dict = {}
        for w, cw in vec.items():
            for m, c in x.terms.items():
                cc = qs_inflate(c, self.D) * cw
                for w2, c2 in self.act_monomial(m, w).items():
                    _add_into(out, w2, cc * c2)
        return out

    def hw_vector(self) -> dict:
        return {(): ONE}


def verma_apply(M: VermaModule, x: UqElement, m: ModuleElement) -> ModuleElement:
    return ModuleElement(M.apply(x, m.coords))


# ---------------------------------------------------------------------------
# central elements
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CentralElement:
    value: UqElement
    degree: int
    window: int

    def __str__(self) -> str:
        return str(self.value)


def weight_zero_slice(alg: QuantumGroup, degree: int, window: int) -> list:
    """Weight-zero PBW monomials of total degree <= ``degree`` with ``|mu|_inf <= window``."""
    n = alg.n
    tori = list(itertools.product(range(-window, window + 1), repeat=n))
    pairs = []
    for lf in range(degree + 1):
        fws = normal_words(alg, "F", lf)
        for le in range(degree - lf + 1):
            for ew in normal_words(alg, "E", le):
                ewt = alg.word_weight(ew)
                for fw in fws:
                    if all(a + b == 0 for a, b in zip(alg.word_weight(fw), ewt)):
                        pairs.append((fw, ew))
    return sorted(NormalMonomial(f, mu, e) for f, e in pairs for mu in tori)


def find_central_elements(alg: QuantumGroup, total_degree: int, torus_window: int) -> list:
    """Basis of the weight-zero slice commuting with every E_i and F_i."""
    monos = weight_zero_slice(alg, total_degree, torus_window)
    gens = [alg.E(i) for i in range(alg.n)] + [alg.F(i) for i in range(alg.n)]
    images = []
    for m in monos:
        x = UqElement(alg, {m: ONE})
        img: dict = {}
        for j, g in enumerate(gens):
            for mm, c in (x * g - g * x).terms.items():
                img[(j, mm)] = c
        images.append(img)
    sols = []
    for comb in kernel(images):
        sols.append({monos[j]: c for j, c in comb.items()})
    # reduced echelon form keeps the output canonical
    ech = Echelon()
    for s in sols:
        ech.add(s)
    rows = reduced_rows(ech)
    return [CentralElement(UqElement(alg, r), total_degree, torus_window) for r in rows]


def sl2_casimir(alg: QuantumGroup, i: int = 0) -> UqElement:
    """``(q K + q^-1 K^-1)/(q - q^-1)^2 + F E`` for the i-th rank-one subalgebra."""
    d = alg.datum.symmetrizers[i]
    a = alg.datum.alpha(i)
    qi = qpow(d)
    den = (qi - qi.inverse()) ** 2
    k = alg.K(a).scale(qi / den) + alg.K(tuple(-x for x in a)).scale(qi.inverse() / den)
    return k + alg.F(i) * alg.E(i)


def hc_eval(z, lam: TorusChar, root: bool = False) -> QScalar:
    """Scalar by which central ``z`` acts on ``v_lam``.

    With ``root=True`` the value is returned in ``Q(q^(1/D))``; otherwise it
    must lie in ``Q(q)``.
    """
    x = z.value if isinstance(z, CentralElement) else z
    alg = x.alg
    D = lattice_denominator(alg.datum)
    val = ZERO
    for m, c in x.terms.items():
        if m.e_word:
            continue
        if m.f_word:
            raise ValueError("element does not act by a scalar on the highest weight vector")
        val = val + qs_inflate(c, D) * char_value(alg.datum, lam, m.torus, D)
    if root:
        return val
    out = qs_deflate(val, D)
    if out is None:
        raise ValueError("value needs a fractional power of q; pass root=True")
    return out


# ---------------------------------------------------------------------------
# finite-dimensional irreducibles
# ---------------------------------------------------------------------------

class FiniteModule:
    """Quotient of a truncated Verma module by a submodule, with explicit action."""

    def __init__(self, verma: VermaModule, sub: Echelon, highest: tuple):
        self.verma = verma
        self.alg = verma.alg
        self.D = verma.D
        self.highest_weight = highest
        self._sub = sub
        self.basis = [w for w in verma.basis if w not in sub.rows]
        self.index = {w: i for i, w in enumerate(self.basis)}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def weight(self, w):
        return self.verma.weight(w)

    def weights(self) -> dict:
        out: dict = {}
        for w in self.basis:
            wt = self.weight(w)
            out[wt] = out.get(wt, 0) + 1
        return out

    def reduce(self, vec: dict) -> dict:
        r, _ = self._sub.reduce(vec)
        return r

    def apply(self, x: UqElement, vec: dict) -> dict:
        return self.reduce(self.verma.apply(x, vec))

    def matrix(self, x: UqElement) -> dict:
        """Sparse matrix ``{(row, col): coeff}`` in the quotient basis."""
        out = {}
        for j, w in enumerate(self.basis):
            for w2, c in self.apply(x, {w: ONE}).items():
                out[(self.index[w2], j)] = c
        return out


def finite_dim_irrep(alg: QuantumGroup, mu, budget: int = 200) -> FiniteModule:
    """``V(mu)`` as ``M_{q^mu}`` modulo the submodule generated by ``F_i^{mu_i+1} v``."""
    datum = alg.datum
    mu = tuple(mu)
    dim = weyl_dimension(datum, mu)
    if dim > budget:
        raise BudgetExceeded(f"dimension {dim} exceeds budget {budget}")
    wts = weights_of_irrep(datum, mu, budget)
    depth = max(int(datum.height(tuple(a - b for a, b in zip(mu, w)))) for w in wts)
    M = VermaModule(alg, TorusChar.q_power(mu), depth + max(max(mu) + 1, 4))
    sub = Echelon()
    gens = []
    for i in range(alg.n):
        vec = M.hw_vector()
        try:
            for _ in range(mu[i] + 1):
                vec = M.apply(alg.F(i), vec)
        except DepthExceeded:
            continue
        gens.append(vec)
    for g in gens:
        for w in M.basis:
            try:
                v = M.apply(_fword(alg, w), g)
            except DepthExceeded:
                continue
            sub.add(v)
    # everything deeper than the top of V(mu) is in the submodule
    V = FiniteModule(M, sub, mu)
    V.basis = [w for w in V.basis if len(w) <= depth]
    V.index = {w: i for i, w in enumerate(V.basis)}
    got = {}
    for w in V.basis:
        wt = V.weight(w)
        got[wt] = got.get(wt, 0) + 1
    if V.dim != dim or got != wts:
        raise AssertionError(f"V{mu}: dimension {V.dim} vs Weyl {dim}")
    return V


def _fword(alg: QuantumGroup, w) -> UqElement:
    return UqElement(alg, {NormalMonomial(tuple(w), alg.zero_weight, ()): ONE})


def invariant_subspace_search(V: FiniteModule, gens) -> list:
    """Proper nonzero subspaces spanned by weight vectors and stable under ``gens``.

    Each weight vector generates a submodule; V is irreducible iff every one of
    them is everything (weight spaces of the generated submodule are checked via
    the cyclic span).
    """
    found = []
    basis_vecs = [{w: ONE} for w in V.basis]
    # try generic-looking combinations within each weight space as well
    by_wt: dict = {}
    for w in V.basis:
        by_wt.setdefault(V.weight(w), []).append(w)
    candidates = list(basis_vecs)
    for ws in by_wt.values():
        if len(ws) > 1:
            candidates.append({w: qpow(k) + ONE for k, w in enumerate(ws)})
    for v in candidates:
        span = Echelon()
        span.add(v)
        frontier = [v]
        while frontier:
            nxt = []
            for u in frontier:
                for g in gens:
                    r = V.apply(g, u)
                    if r and span.add(r):
                        nxt.append(r)
            frontier = nxt
        if len(span) < V.dim:
            found.append(v)
    return found


# ---------------------------------------------------------------------------
# Verma restriction to the locally finite part
# ---------------------------------------------------------------------------

def fin_generators_sl2(alg: QuantumGroup) -> dict:
    """Generators ``KF, K, E, z`` of the locally finite part for rank one (``K = K_alpha``)."""
    a = alg.datum.alpha(0)
    K = alg.K(a)
    return {"1": alg.one(), "KF": K * alg.F(0), "K": K, "E": alg.E(0), "z": sl2_casimir(alg)}


def fin_restriction_data(M: VermaModule, generators: dict | None = None) -> dict:
    """Matrices of the generators on the depth-truncated basis.

    Entries that would leave the truncation are dropped; entries are strings so
    tables from different modules compare directly.
    """
    alg = M.alg
    gens = generators if generators is not None else fin_generators_sl2(alg)
    big = VermaModule(alg, M.highest_weight, M.depth_cutoff + max(_max_f(g) for g in gens.values()))
    out = {}
    for name in sorted(gens):
        g = gens[name]
        mat = {}
        for j, w in enumerate(M.basis):
            for w2, c in big.apply(g, {w: ONE}).items():
                i = M.index.get(w2)
                if i is not None:
                    mat[(i, j)] = str(c)
        out[name] = mat
    return out


def _max_f(x: UqElement) -> int:
    return max((len(m.f_word) for m in x.terms), default=0)


# ---------------------------------------------------------------------------
# annihilators
# ---------------------------------------------------------------------------

def duflo_check(alg: QuantumGroup, lam: TorusChar, degree: int = 4, window: int = 6,
                verma_depth: int | None = None, cap: int | None = None) -> CheckResult:
    """Annihilator of ``M_lam`` vs ``U^int (z - chi_lam(z))`` on a slice of U^int (rank one)."""
    from .finiteness import integrable_part_basis

    params = {"type": alg.datum.type_label, "lambda": str(lam), "degree": degree, "window": window}
    anchor = "quantum Duflo formula for Verma annihilators"
    if alg.n != 1:
        return CheckResult("duflo", INCONCLUSIVE, params, ["only rank one is supported"], anchor)
    D = lattice_denominator(alg.datum)
    z = sl2_casimir(alg)
    chi = hc_eval(z, lam)
    zc = z - alg.scalar(chi)
    span_w = max(abs(x) for m in z.terms for x in m.torus)
    levi = tuple(range(alg.n))
    slice_basis = integrable_part_basis(alg, levi, degree, window, cap=cap)
    small = integrable_part_basis(alg, levi, degree - 2, window + span_w, cap=cap) if degree >= 2 else []
    if verma_depth is None:
        verma_depth = (2 * window + 1) + degree + 2
    M = VermaModule(alg, lam, verma_depth + degree)

    def action_vec(x: UqElement) -> dict:
        img: dict = {}
        for a in range(verma_depth + 1):
            w = tuple([0] * a)
            for w2, c in M.apply(x, {w: ONE}).items():
                img[(w, w2)] = c
        return img

    # annihilator inside the slice
    images = [action_vec(b) for b in slice_basis]
    ann = []
    for comb in kernel(images):
        vec: dict = {}
        for j, c in comb.items():
            add_scaled(vec, {k: qs_inflate(v, D) for k, v in slice_basis[j].terms.items()}, c)
        ann.append(vec)
    # ideal side: products s (z - chi), intersected with the slice
    prods = [{k: qs_inflate(v, D) for k, v in (s * zc).terms.items()} for s in small]
    slice_vecs = [{k: qs_inflate(v, D) for k, v in b.terms.items()} for b in slice_basis]
    ideal = _intersect(prods, slice_vecs)
    e_ann, e_ideal = Echelon(), Echelon()
    for v in ann:
        e_ann.add(v)
    for v in ideal:
        e_ideal.add(v)
    witnesses = []
    ok = len(e_ann) == len(e_ideal)
    for v in ideal:
        if not e_ann.contains(v):
            ok = False
            witnesses.append("ideal element outside annihilator")
            break
    for v in ann:
        if not e_ideal.contains(v):
            ok = False
            witnesses.append("annihilator element outside ideal slice")
            break
    data = {"slice_dim": len(slice_basis), "annihilator_dim": len(e_ann), "ideal_dim": len(e_ideal)}
    return CheckResult("duflo", PASS if ok else FAIL, params, witnesses, anchor, data)


def _intersect(a: list, b: list) -> list:
    """Basis of span(a) ∩ span(b)."""
    images = list(a) + [{k: -v for k, v in w.items()} for w in b]
    out = []
    for comb in kernel(images):
        vec: dict = {}
        for j, c in comb.items():
            if j < len(a):
                add_scaled(vec, a[j], c)
        if vec:
            out.append(vec)
    return out


class TensorModule:
    """``M (x) V`` with ``U_q`` acting through the coproduct."""

    def __init__(self, M: VermaModule, V: FiniteModule):
        self.M, self.V = M, V
        self.alg = M.alg
        self.D = M.D

    def apply(self, x: UqElement, vec: dict) -> dict:
        alg = self.alg
        out: dict = {}
        for (wm, wv), c0 in vec.items():
            for m, c in x.terms.items():
                for (a, b), c2 in _mono_delta(alg, m).items():
                    cc = c0 * qs_inflate(c * c2, self.D)
                    right = self.V.reduce(self.V.verma.act_monomial(b, wv))
                    if not right:
                        continue
                    left = self.M.act_monomial(a, wm)
                    for w1, x1 in left.items():
                        for w2, x2 in right.items():
                            _add_into(out, (w1, w2), cc * x1 * x2)
        return out


def tensor_annihilation_check(alg: QuantumGroup, lam: TorusChar, mu, depth: int,
                              centrals=None) -> CheckResult:
    """``prod_psi (z - chi_{lam+psi}(z))`` kills the truncated ``M_lam (x) V(mu)``."""
    params = {"type": alg.datum.type_label, "lambda": str(lam), "mu": list(mu), "depth": depth}
    anchor = "Lemma: I . (M (x) V) = 0 for finite-dimensional V"
    V = finite_dim_irrep(alg, mu)
    psis = sorted(V.weights())
    if centrals is None:
        centrals = [CentralElement(sl2_casimir(alg), 2, 2)] if alg.n == 1 else []
    centrals = [c for c in centrals if any(m.f_word or m.e_word for m in c.value.terms)]
    if not centrals:
        return CheckResult("tensor-ann", INCONCLUSIVE, params, ["no non-scalar central element supplied"], anchor)
    spread = max(int(alg.datum.height(tuple(a - b for a, b in zip(mu, p)))) for p in psis)
    M = VermaModule(alg, lam, depth + len(psis) * spread)
    T = TensorModule(M, V)
    witnesses = []
    checked = 0
    for z in centrals:
        factors = []
        for psi in psis:
            val = hc_eval(z, lam.shift(psi), root=True)
            factors.append(val)
        for wm in M.basis:
            if len(wm) > depth:
                continue
            for wv in V.basis:
                vec = {(wm, wv): ONE}
                for val in factors:
                    zv = T.apply(z.value, vec)
                    for k, c in vec.items():
                        _add_into(zv, k, -(val * c))
                    vec = zv
                    if not vec:
                        break
                checked += 1
                if vec:
                    witnesses.append(f"{wm} (x) {wv}")
    status = PASS if not witnesses else FAIL
    return CheckResult("tensor-ann", status, params, witnesses[:5], anchor,
                       {"vectors_checked": checked, "factors": len(psis), "centrals": len(centrals)})


@dataclass
class ParabolicVermaTruncation:
    """Degree-wise slice of ``U^{l-fin} / U^{l-fin} U_q(r)_{>0}``.

    ``basis[d]`` holds the U_q(pbar)^{l-int} vectors of degree <= d that map
    onto the quotient slice; ``ideal_dims[d]`` is the dimension of the
    ideal part inside the same slice.
    """

    parabolic: object
    depth: int
    window: int
    basis: dict
    slice_dims: dict
    ideal_dims: dict
    witnesses: list = field(default_factory=list)

    @property
    def bijective(self) -> bool:
        return not self.witnesses

    def dims(self) -> list:
        return [len(self.basis[d]) for d in range(self.depth + 1)]

    def torus_free_dims(self) -> list:
        """Ranks after sending every ``K_mu`` to 1, i.e. ranks over the torus."""
        out = []
        for d in range(self.depth + 1):
            e = Echelon()
            for v in self.basis[d]:
                vec: dict = {}
                for m, c in v.terms.items():
                    _add_into(vec, (m.f_word, m.e_word), c)
                if vec:
                    e.add(vec)
            out.append(len(e))
        return out


def universal_parabolic_verma(alg: QuantumGroup, P, depth: int, window: int = 1,
                              cap: int | None = None, r=None) -> ParabolicVermaTruncation:
    from .finiteness import _box, _torus, construct_nilradical, integrable_part_basis, slice_monomials

    levi = tuple(sorted(P.simple_roots))
    n = alg.n
    if r is None:
        r = construct_nilradical(alg, P, "r", depth)
    rpos = [(sum(nu), b) for nu, bs in r.graded_basis.items() if sum(nu) > 0 for b in bs]
    basis, slice_dims, ideal_dims, witnesses = {}, {}, {}, []
    for d in range(depth + 1):
        full = integrable_part_basis(alg, levi, d, window, cap)
        monos = [m for m in slice_monomials(alg, d, window) if all(x - n in levi for x in m.e_word)]
        pbar = integrable_part_basis(alg, levi, d, window, cap, monomials=monos)
        ideal = Echelon()
        for k, b in rpos:
            if k > d:
                continue
            t = _torus(b)
            # shift the window so that s * b lands back in it
            box_monos = sorted(NormalMonomial(m.f_word, tuple(x - y for x, y in zip(m.torus, t)), m.e_word)
                               for m in slice_monomials(alg, d - k, window))
            for s in integrable_part_basis(alg, levi, d - k, window, cap, monomials=box_monos):
                ideal.add((s * b).terms)
        ideal_dims[d] = len(ideal)
        slice_dims[d] = len(full)
        total = Echelon()
        for v in ideal.basis():
            total.add(v)
        kept = []
        for v in pbar:
            if total.add(v.terms):
                kept.append(v)
            else:
                witnesses.append(f"degree {d}: U_q(pbar) vector in the ideal: {v}")
                break
        for v in full:
            if not total.contains(v.terms):
                witnesses.append(f"degree {d}: slice vector not reached: {v}")
                break
        basis[d] = kept
    return ParabolicVermaTruncation(P, depth, window, basis, slice_dims, ideal_dims, witnesses)


def parabolic_verma_check(alg: QuantumGroup, P, depth: int, window: int = 1, lam: TorusChar | None = None,
                          cap: int | None = None) -> CheckResult:
    """Canonical-map bijectivity; for P = B also compare with ``M_lam`` after specialization."""
    params = {"type": alg.datum.type_label, "parabolic": sorted(P.simple_roots), "depth": depth,
              "window": window}
    anchor = "Definition: universal parabolic Verma module, canonical map from U_q(pbar)^{l-int}"
    T = universal_parabolic_verma(alg, P, depth, window, cap)
    witnesses = list(T.witnesses)
    tf = T.torus_free_dims()
    counts = _pbar_product_counts(alg, P, depth, window, cap)
    data = {"dims": T.dims(), "slice_dims": [T.slice_dims[d] for d in range(depth + 1)],
            "ideal_dims": [T.ideal_dims[d] for d in range(depth + 1)],
            "torus_free_dims": tf, "product_counts": [c for c, _ in counts]}
    if tf[0] != 1:
        witnesses.append(f"degree-0 slice has rank {tf[0]} over the torus")
    for d, (c, ok) in enumerate(counts):
        if c != T.dims()[d] or not ok:
            witnesses.append(f"degree {d}: {T.dims()[d]} quotient vectors vs {c} U_q(rbar) (x) U_q(l)^int products")
    if not P.simple_roots and lam is not None:
        params["lambda"] = str(lam)
        M = VermaModule(alg, lam, depth)
        spec: dict = {}
        for v in T.basis[depth]:
            vec: dict = {}
            for m, c in v.terms.items():
                _add_into(vec, m.f_word, qs_inflate(c, M.D) * M.char(m.torus))
            if vec:
                wt = tuple(sum(1 for x in next(iter(vec)) if x == i) for i in range(alg.n))
                spec.setdefault(wt, Echelon()).add(vec)
        got = {wt: len(e) for wt, e in spec.items()}
        want = M.weight_multiplicities()
        data["specialized_weight_dims"] = got
        if got != want:
            witnesses.append(f"specialized weight dims {got} != Verma {want}")
    return CheckResult("parabolic-verma", PASS if not witnesses else FAIL, params, witnesses[:5], anchor, data)


def _pbar_product_counts(alg: QuantumGroup, P, depth: int, window: int, cap) -> list:
    """Per degree: number of products ``rbar-basis * U_q(l)^int`` in the window and
    whether they are independent and span ``U_q(pbar)^{l-int}``."""
    from .finiteness import _box, _filtered_basis, _torus, construct_nilradical, integrable_part_basis, slice_monomials

    levi = tuple(sorted(P.simple_roots))
    rbar = construct_nilradical(alg, P, "rbar", depth)
    pieces = [(sum(nu), _torus(b), b) for nu, bs in rbar.graded_basis.items() for b in bs]
    out = []
    for d in range(depth + 1):
        e = Echelon()
        count, indep = 0, True
        for d1, t1, x in pieces:
            if d1 > d:
                continue
            box = _box(tuple(-a for a in t1), window)
            c = cap if cap is not None else 2 * max(max(map(abs, mu)) for mu in box) + 2 * (d - d1) + 2
            for _, y in _filtered_basis(alg, levi, d - d1, box, c):
                count += 1
                indep &= e.add((x * y).terms)
        monos = [m for m in slice_monomials(alg, d, window) if all(x - alg.n in levi for x in m.e_word)]
        pbar = integrable_part_basis(alg, levi, d, window, cap, monomials=monos)
        same = indep and len(e) == len(pbar) and all(e.contains(v.terms) for v in pbar)
        out.append((count, same))
    return out


def hc_orbit_check(alg: QuantumGroup, centrals=None, samples: int = 20, window: int = 4,
                   seed: int = 0) -> CheckResult:
    """Dot-orbit invariance of ``hc_eval`` on sampled characters, and separation of
    sampled pairs from distinct orbits by some detected central element."""
    import random

    from .rootdata import dot_action, ext_weyl_group, hc_orbit

    datum = alg.datum
    params = {"type": datum.type_label, "samples": samples, "window": window, "seed": seed}
    anchor = "Harish-Chandra isomorphism: chi_lambda depends only on the dot orbit"
    if centrals is None:
        centrals = [CentralElement(sl2_casimir(alg), 2, 2)] if alg.n == 1 else []
    zs = [c.value if isinstance(c, CentralElement) else c for c in centrals]
    zs = [z for z in zs if any(m.f_word or m.e_word for m in z.terms)]
    if not zs:
        return CheckResult("hc-orbit", INCONCLUSIVE, params, ["no non-scalar central element"], anchor)
    rng = random.Random(seed)
    signs = datum.sign_group

    def sample():
        mu = tuple(rng.randint(-window, window) for _ in range(alg.n))
        return TorusChar(rng.choice(signs), mu)

    group = ext_weyl_group(datum)
    witnesses = []
    for _ in range(samples):
        lam = sample()
        vals = [hc_eval(z, lam, root=True) for z in zs]
        for w in group:
            mu = dot_action(datum, w, lam)
            if [hc_eval(z, mu, root=True) for z in zs] != vals:
                witnesses.append(f"values differ on {lam} and {mu}")
    separated = 0
    while separated < samples:
        lam, other = sample(), sample()
        if other in hc_orbit(datum, lam):
            continue
        separated += 1
        if all(hc_eval(z, lam, root=True) == hc_eval(z, other, root=True) for z in zs):
            witnesses.append(f"no detected central element separates {lam} and {other}")
    data = {"centrals": len(zs), "orbit_size": len(group), "pairs_separated": separated}
    return CheckResult("hc-orbit", FAIL if witnesses else PASS, params, witnesses[:5], anchor, data)
