"""Named verification suites behind ``uqwork check``.

Each suite takes the completed algebra and a :class:`RunConfig` and returns a
list of :class:`CheckResult`.  ``None`` in a config bound means "use the
suite's own default", which is what the acceptance runs rely on.
"""
from __future__ import annotations

import itertools
import random
import re
import time
from dataclasses import dataclass, field

from .cache import cached_nilradical
from .finiteness import (big_subalgebra_identities, big_subalgebra_span_check, check_corollary_triangular,
                         check_nilradical, check_triangular, remark_b_annihilation_check,
                         remark_b_ideal_check, specialize_q1_check)
from .hopf import check_untwist_properties, mr_coinvariants, verify_hopf_axioms
from .linalg import Echelon, span_equal
from .pbw import (CutoffExceeded, QuantumGroup, UqElement, graded_dimension, pbw_oracle, qbinom, random_element,
                  verify_certificate)
from .qscalar import ONE
from .reports import INCONCLUSIVE, PASS, CheckResult, status_of
from .repr import (CentralElement, DepthExceeded, VermaModule, duflo_check, fin_restriction_data,
                   find_central_elements, hc_orbit_check, parabolic_verma_check, sl2_casimir,
                   tensor_annihilation_check)
from .rootdata import BudgetExceeded, ParabolicSubset, SignChar, TorusChar, predicates_check

__all__ = ["RunConfig", "SUITES", "default_suites", "run_suite", "parse_lambda", "default_parabolic"]


@dataclass
class RunConfig:
    cartan_type: str = "A1"
    parabolic: list | None = None
    cutoff: int = 8
    window: int | None = None
    depth: int | None = None
    seed: int = 0
    lam: str | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"type": self.cartan_type, "parabolic": self.parabolic, "cutoff": self.cutoff,
                "window": self.window, "depth": self.depth, "seed": self.seed, "lambda": self.lam}


def default_parabolic(alg: QuantumGroup) -> ParabolicSubset:
    return ParabolicSubset(() if alg.n == 1 else (0,))


def _parabolic(alg, cfg: RunConfig) -> ParabolicSubset:
    if cfg.parabolic is None:
        return default_parabolic(alg)
    return ParabolicSubset(i - 1 for i in cfg.parabolic).validate(alg.datum)


def _pick(value, default):
    return default if value is None else value


_LAMBDA = re.compile(r"^\s*(?:sigma\[([-\d,\s]+)\]\s*\*\s*)?q\^\s*\[?\s*([-\d,\s]+?)\s*\]?\s*$")


def parse_lambda(text: str, rank: int) -> TorusChar:
    """``q^3``, ``q^[1,1]`` or ``sigma[-1]*q^[3]`` (omega coordinates)."""
    m = _LAMBDA.match(text)
    if not m:
        raise ValueError(f"cannot parse character {text!r}; expected e.g. q^3 or sigma[-1,1]*q^[1,0]")
    exp = tuple(int(x) for x in m.group(2).split(","))
    signs = tuple(int(x) for x in m.group(1).split(",")) if m.group(1) else (1,) * rank
    if len(exp) != rank or len(signs) != rank or any(s not in (1, -1) for s in signs):
        raise ValueError(f"character {text!r} does not match rank {rank}")
    return TorusChar(SignChar(signs), exp)


def _lam(alg, cfg, default) -> TorusChar:
    return parse_lambda(cfg.lam, alg.n) if cfg.lam else TorusChar.q_power(default)


def _na(name: str, alg, why: str) -> list:
    return [CheckResult(name, INCONCLUSIVE, {"type": alg.datum.type_label}, [why], "not applicable")]


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def suite_serre(alg: QuantumGroup, cfg: RunConfig) -> list:
    """Completion certificate, grading, q-Serre relations, PBW dimensions, associativity."""
    sys = alg.system
    datum = alg.datum
    params = {"type": datum.type_label, "cutoff": sys.cutoff, "rule_hash": sys.rule_hash()}
    witnesses = [f"unresolved overlap {w}" for w in verify_certificate(sys)]
    for r in sys.rules:
        wl = alg.word_weight(r.lhs)
        for (w, _), _c in r.rhs:
            if alg.word_weight(w) != wl:
                witnesses.append(f"rule {r.lhs} is not homogeneous")
    n = alg.n
    for i in range(n):
        for j in range(n):
            a = datum.cartan_matrix[i][j]
            if i == j or a == 0:
                continue
            m = 1 - a
            d = datum.symmetrizers[i]
            for X in (alg.E, alg.F):
                s = alg.zero()
                for k in range(m + 1):
                    term = X(i) ** (m - k) * X(j) * X(i) ** k
                    s = s + term.scale(qbinom(m, k, d) * (-1 if k % 2 else 1))
                if not s.is_zero():
                    witnesses.append(f"q-Serre ({i + 1},{j + 1}) does not vanish")
    dims = {}
    for deg in range(sys.cutoff + 1):
        got = [graded_dimension(alg, "E", deg), graded_dimension(alg, "F", deg)]
        want = pbw_oracle(datum, deg)
        dims[deg] = got[0]
        if got != [want, want]:
            witnesses.append(f"degree {deg}: E/F dims {got} vs oracle {want}")
    rng = random.Random(cfg.seed)
    triples = cfg.extra.get("assoc_samples", 200)
    for _ in range(triples):
        a, b, c = (random_element(alg, rng, 2, 1, 2) for _ in range(3))
        if (a * b) * c != a * (b * c):
            witnesses.append(f"associativity fails on {a}, {b}, {c}")
            break
    status = FAIL if witnesses else (PASS if sys.unbounded else INCONCLUSIVE)
    if status == INCONCLUSIVE:
        witnesses.append(f"overlaps beyond degree {sys.cutoff} were not examined")
    data = {"rules": len(sys.rules), "overlaps_checked": len(sys.certificate), "unbounded": sys.unbounded,
            "E_dims": dims, "associativity_triples": triples}
    return [CheckResult("pbw-confluence", status, params, witnesses[:5],
                        "PBW theorem via a confluent rewriting presentation", data)]


def suite_hopf(alg: QuantumGroup, cfg: RunConfig) -> list:
    rng = random.Random(cfg.seed)
    n = alg.n
    gens = [alg.E(i) for i in range(n)] + [alg.F(i) for i in range(n)]
    gens += [alg.K(tuple(int(j == i) for j in range(n))) for i in range(n)]
    count = cfg.extra.get("hopf_samples", 100)
    sample = gens + [random_element(alg, rng, 3, 2, 3) for _ in range(count)]
    rep = verify_hopf_axioms(sample)
    params = {"type": alg.datum.type_label, "samples": count, "seed": cfg.seed}
    return [CheckResult("hopf-axioms", PASS if rep.status == "pass" else FAIL, params,
                        [rep.witness] if rep.witness else [],
                        "Hopf structure: coproduct, counit and antipode formulas",
                        {"identities_checked": len(rep.checks)})]


def _commutes_with_generators(alg, z: UqElement, window: int) -> list:
    out = []
    n = alg.n
    gens = [alg.E(i) for i in range(n)] + [alg.F(i) for i in range(n)]
    for g in gens:
        if z * g != g * z:
            out.append(f"does not commute with {g}")
    for mu in itertools.product(range(-window, window + 1), repeat=n):
        K = alg.K(mu)
        if z * K != K * z:
            out.append(f"does not commute with K{list(mu)}")
            break
    return out


def suite_casimir(alg: QuantumGroup, cfg: RunConfig) -> list:
    window = _pick(cfg.window, 6)
    params = {"type": alg.datum.type_label, "window": window}
    if alg.n == 1:
        z = sl2_casimir(alg)
        witnesses = _commutes_with_generators(alg, z, window)
        a = alg.datum.alpha(0)[0]
        found = find_central_elements(alg, 2, a)
        if not span_equal([c.value.terms for c in found], [alg.one().terms, z.terms]):
            witnesses.append(f"detected centre at degree 2 is not span(1, z): {[str(c.value) for c in found]}")
        data = {"z": str(z), "detected_dim": len(found)}
        return [CheckResult("casimir", status_of(not witnesses), params, witnesses,
                            "Example: rank-one Casimir (qK + q^-1 K^-1)/(q - q^-1)^2 + FE", data)]
    deg = _centre_degree(alg)
    found = find_central_elements(alg, deg, 2)
    witnesses = []
    for c in found:
        witnesses += _commutes_with_generators(alg, c.value, window)
    d0 = find_central_elements(alg, 0, 2)
    if len(d0) != 1 or d0[0].value != alg.one():
        witnesses.append("degree-0 centre is not span(1)")
    if not any(c.value == alg.one() for c in found):
        witnesses.append("1 missing from the detected centre")
    nonscalar = sum(1 for c in found if c.value != alg.one())
    if nonscalar == 0:
        witnesses.append(f"no non-scalar central element at degree {deg}")
    data = {"detected_dim": len(found), "elements": [str(c.value) for c in found]}
    return [CheckResult("casimir", status_of(not witnesses), params | {"degree": deg, "detection_window": 2},
                        witnesses, "Harish-Chandra centre: detected central elements", data)]


def suite_adjoint(alg: QuantumGroup, cfg: RunConfig) -> list:
    out = [big_subalgebra_identities(alg)]
    if alg.n == 1:
        out.append(big_subalgebra_span_check(alg, 2, _pick(cfg.window, 4)))
    else:
        out.append(big_subalgebra_span_check(alg, 1, _pick(cfg.window, 2)))
    P = _parabolic(alg, cfg)
    if 0 < len(P.simple_roots) < alg.n:
        r = _nilradical(alg, P, "r", 3, cfg)
        out.append(remark_b_ideal_check(alg, P, 3, r))
        mu = tuple(0 if i in P.simple_roots else 1 for i in range(alg.n))
        out.append(remark_b_annihilation_check(alg, P, tuple(1 for _ in range(alg.n)), r))
        out.append(remark_b_annihilation_check(alg, P, mu, r))
    return out


def _centre_degree(alg) -> int:
    """Twice the height of the highest root: enough for the quadratic Casimir."""
    return 2 * max(sum(r) for r in alg.datum.positive_roots_root_coords())


def _centrals(alg) -> list:
    if alg.n == 1:
        return [CentralElement(sl2_casimir(alg), 2, 2)]
    return find_central_elements(alg, _centre_degree(alg), 2)


def suite_hc_orbit(alg: QuantumGroup, cfg: RunConfig) -> list:
    return [hc_orbit_check(alg, _centrals(alg), 20, _pick(cfg.window, 4), cfg.seed)]


def suite_dominance(alg: QuantumGroup, cfg: RunConfig) -> list:
    return [predicates_check(alg.datum, _pick(cfg.window, 4))]


def suite_coinvariants(alg: QuantumGroup, cfg: RunConfig) -> list:
    """Coinvariants of U_q(b) over the torus against the algebra generated by K_{-a} E_a."""
    datum = alg.datum
    n = alg.n
    max_degree = _pick(cfg.depth, 4)
    window = _pick(cfg.window, 1)
    gens = [alg.K(tuple(-x for x in datum.alpha(i))) * alg.E(i) for i in range(n)]
    words = {(): alg.one()}
    witnesses, dims = [], {}
    box = list(itertools.product(range(-window, window + 1), repeat=n))
    degree_one = []
    for deg in range(1, max_degree + 1):
        words = {w + (i,): x * gens[i] for w, x in words.items() if len(w) == deg - 1 for i in range(n)}
        for rc in itertools.product(range(deg + 1), repeat=n):
            if sum(rc) != deg:
                continue
            nu = datum.from_root_coords(rc)
            B = mr_coinvariants(alg, (), nu, window=window)
            gen_span = [x.terms for w, x in words.items() if tuple(w.count(i) for i in range(n)) == rc]
            want = graded_dimension(alg, "E", rc)
            dims[rc] = len(B)
            if len(B) != want:
                witnesses.append(f"weight {rc}: {len(B)} coinvariants vs {want} PBW words")
            if not span_equal([b.terms for b in B], gen_span):
                witnesses.append(f"weight {rc}: coinvariants differ from the algebra generated by K_-a E_a")
            # H0 (x) B -> H: products K_mu b fill the torus box times the E-words of weight nu
            e = Echelon()
            for mu in box:
                for b in B:
                    e.add((alg.K(mu) * b).terms)
            if len(e) != len(box) * want:
                witnesses.append(f"weight {rc}: multiplication map has rank {len(e)} vs {len(box) * want}")
            if deg == 1:
                degree_one += [str(b) for b in B]
    params = {"type": datum.type_label, "max_degree": max_degree, "window": window}
    data = {"dims": dims, "degree_one_basis": degree_one}
    return [CheckResult("coinvariants", status_of(not witnesses), params, witnesses[:5],
                        "Remark: coinvariants of U_q(b) over the torus are generated by K_-a E_a", data)]


def _nilradical(alg, P, side, degree, cfg):
    return cached_nilradical(alg, P, side, degree, cfg.extra.get("cache_dir"))


def suite_nilradical(alg: QuantumGroup, cfg: RunConfig) -> list:
    P = _parabolic(alg, cfg)
    deg = _pick(cfg.depth, 4)
    out = []
    for side in ("r", "rbar"):
        N = _nilradical(alg, P, side, deg, cfg)
        res = check_nilradical(alg, N)
        res.params["side"] = side
        res.data["dims"] = N.dims()
        out.append(res)
    return out


def suite_triangular(alg: QuantumGroup, cfg: RunConfig) -> list:
    P = _parabolic(alg, cfg)
    deg = _pick(cfg.depth, 4 if alg.n == 1 else 3)
    r = _nilradical(alg, P, "r", deg, cfg)
    rbar = _nilradical(alg, P, "rbar", deg, cfg)
    return [check_triangular(alg, P, deg, rbar, r),
            check_corollary_triangular(alg, P, deg, _pick(cfg.window, 1), None, rbar, r)]


def suite_specialize(alg: QuantumGroup, cfg: RunConfig) -> list:
    deg = _pick(cfg.depth, 4 if alg.n > 1 else 2)
    out = []
    seen = set()
    for P in (_parabolic(alg, cfg), ParabolicSubset(())):
        if P.simple_roots in seen:
            continue
        seen.add(P.simple_roots)
        out.append(specialize_q1_check(alg, _nilradical(alg, P, "r", deg, cfg)))
    return out


def suite_untwist(alg: QuantumGroup, cfg: RunConfig) -> list:
    central = sl2_casimir(alg) if alg.n == 1 else None
    return [check_untwist_properties(alg, _pick(cfg.window, 2), 50, cfg.seed, central)]


def suite_duflo(alg: QuantumGroup, cfg: RunConfig) -> list:
    if alg.n != 1:
        return _na("duflo", alg, "the annihilator comparison is implemented in rank one only")
    lam = _lam(alg, cfg, (3,))
    return [duflo_check(alg, lam, _pick(cfg.depth, 4), _pick(cfg.window, 6))]


def suite_tensor_ann(alg: QuantumGroup, cfg: RunConfig) -> list:
    if alg.n == 1:
        return [tensor_annihilation_check(alg, _lam(alg, cfg, (5,)), (1,), _pick(cfg.depth, 6))]
    mu = tuple(int(i == 0) for i in range(alg.n))
    return [tensor_annihilation_check(alg, _lam(alg, cfg, (1,) * alg.n), mu, _pick(cfg.depth, 4), _centrals(alg))]


def suite_verma_restriction(alg: QuantumGroup, cfg: RunConfig) -> list:
    if alg.n != 1:
        return _na("verma-restriction", alg, "the U^fin generator set is only given in rank one")
    depth = _pick(cfg.depth, 6)
    lam = _lam(alg, cfg, (3,))
    twisted = TorusChar(SignChar(tuple(-s for s in lam.sign.signs)), lam.exponent)
    control = lam.shift((1,))
    tabs = {str(x): fin_restriction_data(VermaModule(alg, x, depth)) for x in (lam, twisted, control)}
    witnesses = []
    same = tabs[str(lam)] == tabs[str(twisted)]
    differs = tabs[str(lam)] != tabs[str(control)]
    if not same:
        witnesses.append(f"tables of {lam} and {twisted} differ")
    if not differs:
        witnesses.append(f"negative control {control} gives the same table")
    # U^fin . v generates: products of KF, K, E applied to v span every truncated weight space
    M = VermaModule(alg, lam, depth)
    K = alg.K(alg.datum.alpha(0))
    span = Echelon()
    v = {(): ONE}
    frontier = [v]
    span.add(v)
    while frontier:
        nxt = []
        for w in frontier:
            for g in (K * alg.F(0), K, alg.E(0)):
                try:
                    u = M.apply(g, w)
                except DepthExceeded:
                    continue
                if u and span.add(u):
                    nxt.append(u)
        frontier = nxt
    if len(span) != len(M.basis):
        witnesses.append(f"U^fin v spans {len(span)} of {len(M.basis)} basis vectors")
    params = {"type": alg.datum.type_label, "lambda": str(lam), "twisted": str(twisted),
              "control": str(control), "depth": depth}
    data = {"generators": sorted(tabs[str(lam)]), "generated_dim": len(span), "basis_dim": len(M.basis)}
    return [CheckResult("verma-restriction", status_of(not witnesses), params, witnesses,
                        "Lemma: U^fin v = M_lambda and restrictions agree for equal phi(lambda)", data)]


def suite_parabolic_verma(alg: QuantumGroup, cfg: RunConfig) -> list:
    P = _parabolic(alg, cfg)
    if not P.simple_roots:
        return [parabolic_verma_check(alg, P, _pick(cfg.depth, 4), _pick(cfg.window, 1), _lam(alg, cfg, (3,) * alg.n))]
    return [parabolic_verma_check(alg, P, _pick(cfg.depth, 3), _pick(cfg.window, 1))]


SUITES = {
    "serre": suite_serre,
    "hopf": suite_hopf,
    "casimir": suite_casimir,
    "adjoint": suite_adjoint,
    "hc-orbit": suite_hc_orbit,
    "dominance": suite_dominance,
    "coinvariants": suite_coinvariants,
    "nilradical": suite_nilradical,
    "triangular": suite_triangular,
    "specialize": suite_specialize,
    "untwist": suite_untwist,
    "duflo": suite_duflo,
    "tensor-ann": suite_tensor_ann,
    "verma-restriction": suite_verma_restriction,
    "parabolic-verma": suite_parabolic_verma,
}

_RANK_ONE_ONLY = {"duflo", "verma-restriction"}
_NO_ALGEBRA = {"serre", "dominance"}  # do not depend on normal forms beyond the cutoff


def default_suites(alg: QuantumGroup) -> list:
    """Suites run by ``check all``; rank-one-only suites are left out in higher rank."""
    return [s for s in SUITES if alg.n == 1 or s not in _RANK_ONE_ONLY]


def run_suite(alg: QuantumGroup, name: str, cfg: RunConfig) -> list:
    """Run one suite; truncation errors become inconclusive cases."""
    fn = SUITES[name]
    try:
        cases = _timed_cases(fn, alg, cfg)
    except (CutoffExceeded, DepthExceeded, BudgetExceeded) as exc:
        cases = [CheckResult(name, INCONCLUSIVE, {"type": alg.datum.type_label},
                             [f"{type(exc).__name__}: {exc}"], "truncation")]
    if not alg.system.unbounded and name not in _NO_ALGEBRA:
        for c in cases:
            if c.status == PASS:
                c.status = INCONCLUSIVE
                c.witnesses.append(f"rewriting system only certified to degree {alg.system.cutoff}")
    for c in cases:
        c.params.setdefault("suite", name)
    return cases


def _timed_cases(fn, alg, cfg) -> list:
    t = time.perf_counter()
    cases = fn(alg, cfg)
    dt = (time.perf_counter() - t) / max(len(cases), 1)
    for c in cases:
        c.timing = dt
    return cases
