"""Command-line front end.

Builds hypergroups and weights from specs, runs checks and scans, and
writes JSON (or CSV) reports under the "hyplab-report/1" schema.  Exit
codes: 0 all requested checks pass, 1 a check failed, 2 configuration
error.  Reports are deterministic given (config, seed).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import diagnostics as D
from . import reproduce
from . import weights as W
from .catalog import ConjugacyHypergroup, build_hypergroup
from .errors import ConfigError, HyplabError
from .hypergroups import check_axioms
from .measures import id_from_json, measure_to_json

SCHEMA = "hyplab-report/1"


@dataclass
class RunConfig:
    hypergroup: Optional[str] = None
    weight: Optional[str] = None
    truncation: int = 200
    tolerance: float = 1e-9
    kg: float = D.DEFAULT_KG
    cn: Optional[float] = None
    seed: int = 0
    workers: int = 1
    threshold: float = 1e-3
    output: Optional[str] = None
    base_dir: str = "."

    def to_json(self) -> dict:
        return {
            "hypergroup": self.hypergroup,
            "weight": self.weight,
            "truncation": self.truncation,
            "tolerance": self.tolerance,
            "K_G": self.kg,
            "C_n": self.cn,
            "seed": self.seed,
            "workers": self.workers,
        }


def _merge_config(args) -> RunConfig:
    """defaults < config file < environment (HYPLAB_KG) < flags."""
    cfg = RunConfig()
    if getattr(args, "config", None):
        with open(args.config, encoding="utf-8") as fh:
            file_cfg = json.load(fh)
        for key, value in file_cfg.items():
            if not hasattr(cfg, key):
                raise ConfigError(f"unknown config key {key!r}")
            setattr(cfg, key, value)
    env_kg = os.environ.get("HYPLAB_KG")
    if env_kg:
        cfg.kg = float(env_kg)
    for key in ("hypergroup", "weight", "truncation", "tolerance", "kg", "cn",
                "seed", "workers", "threshold", "output"):
        value = getattr(args, key, None)
        if value is not None:
            setattr(cfg, key, value)
    if cfg.truncation < 1:
        raise ConfigError("truncation must be >= 1")
    if cfg.tolerance <= 0:
        raise ConfigError("tolerance must be positive")
    return cfg


def _build(cfg: RunConfig, need_weight: bool = False):
    if not cfg.hypergroup:
        raise ConfigError("--hypergroup is required")
    H = build_hypergroup(cfg.hypergroup, cfg.base_dir)
    w = None
    if cfg.weight:
        w = W.weight_from_spec(H, cfg.weight, cfg.base_dir)
    elif need_weight:
        raise ConfigError("--weight is required")
    return H, w


def _parse_element(H, text: str):
    if text is None:
        raise ConfigError("element argument required")
    if isinstance(H, ConjugacyHypergroup):
        try:
            return H.resolve(int(text) if text.isdigit() else text)
        except HyplabError as exc:
            raise ConfigError(str(exc)) from exc
    if text.lstrip("-").isdigit():
        return int(text)
    try:
        return id_from_json(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"cannot parse element {text!r}") from exc


def _emit(cfg: RunConfig, payload: dict, fmt: str = "json", csv_text: str = "") -> None:
    if fmt == "csv":
        text = csv_text
    else:
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _report(cfg: RunConfig, command: str, results: dict) -> dict:
    return {
        "schema": SCHEMA,
        "command": command,
        "subject": {"hypergroup": cfg.hypergroup, "weight": cfg.weight},
        "config": cfg.to_json(),
        "results": results,
    }


# -- subcommands ----------------------------------------------------------------


def cmd_build(cfg: RunConfig, args) -> int:
    H, w = _build(cfg)
    info = {
        "tag": H.tag,
        "identity": repr(H.identity),
        "commutative": H.commutative,
        "finite_size": H.finite_size,
        "generator": [repr(f) for f in H.generator] if H.generator else None,
        "first_elements": [repr(x) for x in H.first_n(min(cfg.truncation, 20))],
    }
    if w is not None:
        info["weight"] = w.describe()
    _emit(cfg, _report(cfg, "build", info))
    return 0


def cmd_check_axioms(cfg: RunConfig, args) -> int:
    H, _ = _build(cfg)
    report = check_axioms(H, cfg.truncation, assoc_cap=args.assoc_cap)
    _emit(cfg, _report(cfg, "check-axioms", report.to_json()))
    return 0 if report.passed else 1


def cmd_convolve(cfg: RunConfig, args) -> int:
    H, _ = _build(cfg)
    x = _parse_element(H, args.x)
    y = _parse_element(H, args.y)
    mu = H.convolve(x, y)
    _emit(cfg, _report(cfg, "convolve", {"measure": measure_to_json(mu)}))
    return 0


def cmd_haar(cfg: RunConfig, args) -> int:
    H, _ = _build(cfg)
    x = _parse_element(H, args.x)
    _emit(cfg, _report(cfg, "haar", {"x": repr(x), "haar": D.scalar_json(H.haar(x))}))
    return 0


def cmd_tau(cfg: RunConfig, args) -> int:
    H, _ = _build(cfg)
    x = _parse_element(H, args.x)
    _emit(cfg, _report(cfg, "tau", {"x": repr(x), "tau": H.tau(x)}))
    return 0


def cmd_growth(cfg: RunConfig, args) -> int:
    H, _ = _build(cfg)
    profile = H.growth_profile(cfg.truncation)
    payload = {"samples": profile.samples, "D": profile.D, "d": profile.d,
               "certified_on_samples": profile.certified_all}
    csv_text = "n,ball_size\n" + "\n".join(f"{n},{s}" for n, s in profile.samples) + "\n"
    _emit(cfg, _report(cfg, "growth", payload), fmt=args.format, csv_text=csv_text)
    return 0


def cmd_weight_check(cfg: RunConfig, args) -> int:
    H, w = _build(cfg, need_weight=True)
    prop = args.property
    if prop == "submultiplicative":
        rep = W.check_submultiplicative(H, w, cfg.truncation, cfg.tolerance)
    elif prop == "central":
        rep = W.check_central(H, w, cfg.truncation, cfg.tolerance)
    elif prop == "weakly-additive":
        rep = W.weak_additivity_constant(H, w, cfg.truncation)
    elif prop == "equivalence":
        if not args.weight2:
            raise ConfigError("--weight2 required for equivalence")
        w2 = W.weight_from_spec(H, args.weight2, cfg.base_dir)
        rep = W.check_equivalence(H, w, w2, cfg.truncation)
    else:
        raise ConfigError(f"unknown property {prop!r}")
    _emit(cfg, _report(cfg, "weight-check", rep.to_json()))
    return 0 if rep.passed else 1


def cmd_omega_table(cfg: RunConfig, args) -> int:
    H, w = _build(cfg, need_weight=True)
    table = D.omega_table(H, w, cfg.truncation, workers=cfg.workers)
    payload = {
        "truncation": table.truncation,
        "exact": table.exact,
        "sup": float(table.sup()),
        "row_sup": [float(v) for v in table.row_sup()],
        "rows": table.float_rows(),
    }
    _emit(cfg, _report(cfg, "omega-table", payload), fmt=args.format, csv_text=table.to_csv())
    return 0


def cmd_cluster_scan(cfg: RunConfig, args) -> int:
    H, w = _build(cfg, need_weight=True)
    scan = D.cluster_scan(H, w, cfg.truncation, threshold=cfg.threshold,
                          workers=cfg.workers)
    _emit(cfg, _report(cfg, "cluster-scan", scan.to_json()))
    return 0


def cmd_summability(cfg: RunConfig, args) -> int:
    H, w = _build(cfg, need_weight=True)
    res = D.two_summability(H, w, cfg.truncation)
    _emit(cfg, _report(cfg, "summability", res.to_json()))
    return 0 if res.verdict != "UNKNOWN" else 1


def cmd_t2_bound(cfg: RunConfig, args) -> int:
    H, w = _build(cfg, need_weight=True)
    nb = D.t2_upper_bound(H, w, cfg.truncation, args.decomposition)
    _emit(cfg, _report(cfg, "t2-bound", nb.to_json()))
    return 0


def cmd_norm_bound(cfg: RunConfig, args) -> int:
    H, w = _build(cfg, need_weight=True)
    nb = D.multiplication_norm_bound(H, w, args.route, kg=cfg.kg, N=cfg.truncation)
    _emit(cfg, _report(cfg, "norm-bound", nb.to_json()))
    return 0


def cmd_exp_constants(cfg: RunConfig, args) -> int:
    alpha = Fraction(args.alpha) if "/" in args.alpha else Fraction(args.alpha).limit_denominator(10**6)
    c = Fraction(args.C) if "/" in args.C else Fraction(args.C)
    beta = None
    if args.beta is not None:
        beta = Fraction(args.beta)
        if beta.denominator == 1:
            beta = int(beta)
    consts = D.exp_lemma_constants(alpha, c, beta=beta, growth_d=args.growth_d)
    _emit(cfg, _report(cfg, "exp-constants", consts.to_json()))
    return 0


def cmd_witness(cfg: RunConfig, args) -> int:
    H, w = _build(cfg, need_weight=True)
    scan = D.non_arens_witness(H, w, args.depth)
    _emit(cfg, _report(cfg, "witness", scan.to_json()))
    return 0 if scan.verdict == D.WITNESS_AGAINST else 1


def cmd_classify(cfg: RunConfig, args) -> int:
    H, w = _build(cfg, need_weight=True)
    cls = D.classify(H, w, N=cfg.truncation, kg=cfg.kg)
    payload = cls.to_json()
    payload["truncation"] = cfg.truncation
    _emit(cfg, _report(cfg, "classify", payload))
    return 0


def cmd_reproduce(cfg: RunConfig, args) -> int:
    settings = reproduce.RunSettings(seed=cfg.seed, kg=cfg.kg, cn=cfg.cn,
                                     tolerance=cfg.tolerance)
    only = args.only.split(",") if args.only else None
    results = reproduce.run_all(settings, only=only)
    payload = reproduce.report_json(results, settings)
    _emit(cfg, payload)
    for r in results:
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.id:22s} [{r.source}]", file=sys.stderr)
    return 0 if all(r.passed for r in results) else 1


# -- parser ----------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, weight: bool = False):
    p.add_argument("--hypergroup", "-H", dest="hypergroup", help="catalog spec, e.g. chebyshev, su2hat, conj:s3, rdp:conj:s3:5")
    if weight:
        p.add_argument("--weight", "-w", dest="weight", help="weight spec, e.g. poly:beta=2, trivial, card")
    p.add_argument("--truncation", "-N", dest="truncation", type=int)
    p.add_argument("--tolerance", dest="tolerance", type=float)
    p.add_argument("--kg", dest="kg", type=float, help="Grothendieck constant to use")
    p.add_argument("--cn", dest="cn", type=float, help="Lee inequality constant C_n")
    p.add_argument("--seed", dest="seed", type=int)
    p.add_argument("--workers", dest="workers", type=int)
    p.add_argument("--threshold", dest="threshold", type=float)
    p.add_argument("--output", "-o", dest="output")
    p.add_argument("--config", dest="config", help="JSON config file (defaults < file < env < flags)")


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hyplab",
                                     description="Weighted discrete hypergroup laboratory")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="build and describe a hypergroup/weight pair")
    _add_common(p, weight=True)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("check-axioms", help="exact (H1)-(H4) + associativity verification")
    _add_common(p)
    p.add_argument("--assoc-cap", type=int, default=25)
    p.set_defaults(func=cmd_check_axioms)

    p = sub.add_parser("convolve", help="delta_x * delta_y as an exact measure")
    _add_common(p)
    p.add_argument("--x", required=True)
    p.add_argument("--y", required=True)
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("haar", help="Haar measure value at x")
    _add_common(p)
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_haar)

    p = sub.add_parser("tau", help="word length of x")
    _add_common(p)
    p.add_argument("--x", required=True)
    p.set_defaults(func=cmd_tau)

    p = sub.add_parser("growth", help="ball sizes and the (D, d) growth fit")
    _add_common(p)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_growth)

    p = sub.add_parser("weight-check", help="submultiplicative/central/weakly-additive/equivalence")
    _add_common(p, weight=True)
    p.add_argument("--property", required=True,
                   choices=("submultiplicative", "central", "weakly-additive", "equivalence"))
    p.add_argument("--weight2", help="second weight for equivalence")
    p.set_defaults(func=cmd_weight_check)

    p = sub.add_parser("omega-table", help="Omega(x,y) over the truncation")
    _add_common(p, weight=True)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.set_defaults(func=cmd_omega_table)

    p = sub.add_parser("cluster-scan", help="strong 0-cluster tail envelopes")
    _add_common(p, weight=True)
    p.set_defaults(func=cmd_cluster_scan)

    p = sub.add_parser("summability", help="sum of 1/w^2 with analytic tail")
    _add_common(p, weight=True)
    p.set_defaults(func=cmd_summability)

    p = sub.add_parser("t2-bound", help="upper bound on the T^2 norm of Omega")
    _add_common(p, weight=True)
    p.add_argument("--decomposition", default="weakly-additive")
    p.set_defaults(func=cmd_t2_bound)

    p = sub.add_parser("norm-bound", help="multiplication norm bound ||m||_eps")
    _add_common(p, weight=True)
    p.add_argument("--route", required=True,
                   choices=("2-summable", "polynomial", "exponential", "t2-general"))
    p.set_defaults(func=cmd_norm_bound)

    p = sub.add_parser("exp-constants", help="exponential-weight lemma constants p, q, K, M")
    _add_common(p)
    p.add_argument("--alpha", required=True)
    p.add_argument("--C", required=True)
    p.add_argument("--beta")
    p.add_argument("--growth-d", type=float, dest="growth_d")
    p.set_defaults(func=cmd_exp_constants)

    p = sub.add_parser("witness", help="restricted-product non-regularity witness")
    _add_common(p, weight=True)
    p.add_argument("--depth", type=int, default=10)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("classify", help="run the certificate chain")
    _add_common(p, weight=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("reproduce-paper", help="run the full reproduction suite")
    _add_common(p)
    p.add_argument("--only", help="comma-separated criterion ids")
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _merge_config(args)
        return args.func(cfg, args)
    except ConfigError as exc:
        json.dump({"schema": SCHEMA, "error": {"kind": "config", "message": str(exc)}},
                  sys.stderr, indent=2)
        sys.stderr.write("\n")
        return 2
    except HyplabError as exc:
        json.dump({"schema": SCHEMA,
                   "error": {"kind": type(exc).__name__, "message": str(exc)}},
                  sys.stderr, indent=2)
        sys.stderr.write("\n")
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
