"""``uqwork`` command line: normalize, check, dims.

Exit status: 0 all pass, 1 some check failed, 2 inconclusive only,
3 bad input (usage, parse or configuration errors).
"""
from __future__ import annotations

import argparse
import configparser
import json
import logging
import sys

from .cache import ENV_VAR, cache_dir
from .pbw import CutoffExceeded, graded_dimension, pbw_oracle, quantum_group
from .reports import Report
from .rootdata import BudgetExceeded
from .suites import SUITES, RunConfig, default_suites, parse_lambda, run_suite

USAGE_ERROR = 3
DIMS_OBJECTS = ("E-subalgebra", "nilradical", "verma", "integrable-slice")
_CONFIG_KEYS = {"type": str, "parabolic": str, "cutoff": int, "window": int, "depth": int, "seed": int,
                "lambda": str, "cache_dir": str}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--type", dest="cartan_type", help="Cartan type: A1, A2, A1xA1, B2 (default A1)")
    p.add_argument("--parabolic", help="comma-separated simple roots of the Levi, 1-based; '' for the Borel")
    p.add_argument("--cutoff", type=int, help="degree cutoff of the rewriting system (default 8)")
    p.add_argument("--window", type=int, help="torus window |mu|_inf <= W (suite default if omitted)")
    p.add_argument("--depth", type=int, help="degree/depth bound (suite default if omitted)")
    p.add_argument("--seed", type=int, help="seed for sampled checks (default 0)")
    p.add_argument("--lambda", dest="lam", help="torus character, e.g. q^3, q^[1,1], sigma[-1]*q^[3]")
    p.add_argument("--json", dest="json_path", help="write the JSON output to this path ('-' for stdout)")
    p.add_argument("--cache-dir", help=f"cache directory for nilradical bases (or ${ENV_VAR})")
    p.add_argument("--config", help="INI file with a [uqwork] section; flags win over file values")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="uqwork", description="Quantum group computations: PBW normal forms, "
                     "Hopf structure, integrable parts and verification suites.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    p = sub.add_parser("normalize", help="print the PBW normal form of an expression")
    p.add_argument("expr")
    _common(p)
    p = sub.add_parser("check", help="run a verification suite")
    p.add_argument("suite", choices=sorted(SUITES) + ["all"])
    _common(p)
    p = sub.add_parser("dims", help="degree -> dimension tables")
    p.add_argument("object", choices=DIMS_OBJECTS)
    _common(p)
    return parser


def _read_config(path: str | None) -> dict:
    if not path:
        return {}
    cp = configparser.ConfigParser()
    if not cp.read(path):
        raise ValueError(f"cannot read config file {path!r}")
    if "uqwork" not in cp:
        raise ValueError(f"config file {path!r} has no [uqwork] section")
    out = {}
    for key, value in cp["uqwork"].items():
        key = key.replace("-", "_")
        if key not in _CONFIG_KEYS:
            raise ValueError(f"unknown config key {key!r}")
        out[key] = _CONFIG_KEYS[key](value)
    return out


def _parse_parabolic(text: str | None):
    if text is None:
        return None
    text = text.strip()
    if text in ("", "B", "none"):
        return []
    return sorted(int(x) for x in text.split(","))


def make_config(args) -> RunConfig:
    file = _read_config(args.config)

    def pick(name, key=None, default=None):
        v = getattr(args, name)
        v = v if v is not None else file.get(key or name)
        return default if v is None else v

    cfg = RunConfig(
        cartan_type=pick("cartan_type", "type") or "A1",
        parabolic=_parse_parabolic(pick("parabolic")),
        cutoff=pick("cutoff", default=8),
        window=pick("window"),
        depth=pick("depth"),
        seed=pick("seed", default=0),
        lam=pick("lam", "lambda"),
    )
    for name in ("cutoff", "window", "depth"):
        v = getattr(cfg, name)
        if v is not None and v <= 0:
            raise ValueError(f"--{name} must be positive")
    if cfg.seed < 0:
        raise ValueError("--seed must be non-negative")
    cdir = cache_dir(pick("cache_dir"))
    if cdir is not None:
        cfg.extra["cache_dir"] = str(cdir)
    return cfg


def _emit_json(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_normalize(cfg: RunConfig, expr: str, json_path: str | None) -> int:
    from .expr import parse_expr

    alg = quantum_group(cfg.cartan_type, cfg.cutoff)
    x = parse_expr(alg, expr)
    if json_path:
        _emit_json(json_path, json.dumps({"schema": 1, "type": cfg.cartan_type, "normal_form": x.to_json()},
                                         indent=2, sort_keys=True) + "\n")
    if json_path != "-":
        print(x)
    return 0


def cmd_check(cfg: RunConfig, suite: str, json_path: str | None) -> int:
    alg = quantum_group(cfg.cartan_type, cfg.cutoff)
    if cfg.parabolic is not None and any(not 1 <= i <= alg.n for i in cfg.parabolic):
        raise ValueError(f"parabolic indices must lie in 1..{alg.n}")
    names = default_suites(alg) if suite == "all" else [suite]
    report = Report(suite, cfg.to_json())
    for name in names:
        for case in run_suite(alg, name, cfg):
            report.add(case)
            if json_path != "-":
                print(f"{case.status.upper():13s} {name:18s} {case.check:18s} {case.timing:7.2f}s  [{case.anchor}]")
                for w in case.witnesses[:3]:
                    print(f"    witness: {w}")
                for b in case.data.get("degree_one_basis", []):
                    print(f"    basis: {b}")
    if json_path:
        _emit_json(json_path, report.dumps())
    if json_path != "-":
        summary = report.to_json()["summary"]
        print(f"summary: {summary['pass']} pass, {summary['fail']} fail, {summary['inconclusive']} inconclusive")
    return report.exit_code


def _dims_table(cfg: RunConfig, obj: str) -> list:
    from .finiteness import construct_nilradical, integrable_part_basis
    from .repr import VermaModule
    from .rootdata import ParabolicSubset, TorusChar
    from .suites import default_parabolic

    alg = quantum_group(cfg.cartan_type, cfg.cutoff)
    P = default_parabolic(alg) if cfg.parabolic is None else ParabolicSubset(i - 1 for i in cfg.parabolic)
    P.validate(alg.datum)
    if obj == "E-subalgebra":
        return [{"degree": d, "dim": graded_dimension(alg, "E", d), "oracle": pbw_oracle(alg.datum, d)}
                for d in range(cfg.cutoff + 1)]
    if obj == "nilradical":
        deg = cfg.depth or 4
        r = construct_nilradical(alg, P, "r", deg)
        rbar = construct_nilradical(alg, P, "rbar", deg)
        return [{"degree": d, "r": a, "rbar": b} for d, (a, b) in enumerate(zip(r.dims(), rbar.dims()))]
    if obj == "verma":
        lam = parse_lambda(cfg.lam, alg.n) if cfg.lam else TorusChar.q_power((0,) * alg.n)
        M = VermaModule(alg, lam, cfg.depth or 6)
        return [{"weight": f"lambda - {list(k)}", "depth": sum(k), "dim": v}
                for k, v in sorted(M.weight_multiplicities().items(), key=lambda kv: (sum(kv[0]), kv[0]))]
    levi = tuple(sorted(P.simple_roots))
    window = cfg.window or 2
    out = []
    for d in range((cfg.depth or 2) + 1):
        out.append({"degree": d, "window": window, "dim": len(integrable_part_basis(alg, levi, d, window))})
    return out


def cmd_dims(cfg: RunConfig, obj: str, json_path: str | None) -> int:
    rows = _dims_table(cfg, obj)
    if json_path:
        _emit_json(json_path, json.dumps({"schema": 1, "object": obj, "config": cfg.to_json(), "table": rows},
                                         indent=2, sort_keys=True) + "\n")
    if json_path != "-":
        keys = list(rows[0]) if rows else []
        print("  ".join(f"{k:>12s}" for k in keys))
        for row in rows:
            print("  ".join(f"{str(row[k]):>12s}" for k in keys))
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    try:
        cfg = make_config(args)
        if args.command == "normalize":
            return cmd_normalize(cfg, args.expr, args.json_path)
        if args.command == "check":
            return cmd_check(cfg, args.suite, args.json_path)
        return cmd_dims(cfg, args.object, args.json_path)
    except (CutoffExceeded, BudgetExceeded) as exc:
        print(f"uqwork: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"uqwork: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
