"""Paper-reproduction suite: every worked example and bound, re-checked.

Each criterion is a pure function of the run settings returning a
CriterionResult; the registry backs both the `reproduce-paper` CLI command
(pass/fail matrix keyed by source reference) and the acceptance tests.
Report content is deterministic given (settings, seed): no timestamps or
durations are embedded.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import diagnostics as D
from . import weights as W
from .catalog import (
    chebyshev,
    conj_hypergroup,
    sl2_class_sizes,
    sl2_group,
    su2_dual,
    su_n_count_by_first,
    su_n_dominant,
    symmetric_group,
)
from .errors import RouteUnavailableError
from .hypergroups import check_axioms, restricted_power, restricted_product


@dataclass
class RunSettings:
    seed: int = 0
    kg: float = D.DEFAULT_KG
    cn: Optional[float] = None
    tolerance: float = 1e-9

    def to_json(self) -> dict:
        return {"seed": self.seed, "K_G": self.kg, "C_n": self.cn, "tolerance": self.tolerance}


@dataclass
class CriterionResult:
    id: str
    title: str
    source: str
    passed: bool
    details: dict = field(default_factory=dict)
    duration: float = 0.0


def _s3_conj(settings: RunSettings):
    return conj_hypergroup(symmetric_group(3), seed=settings.seed)


def _s3_weight_125(H3):
    # the (1, 2, 5) table on (Ce, transpositions, 3-cycles)
    t = H3.resolve("C[(1 2)]")
    r = next(c for c in range(3) if c not in (H3.identity, t))
    return W.table_weight(H3, {H3.identity: 1, t: 2, r: 5}), t, r


def crit_axioms(settings: RunSettings) -> dict:
    jobs = [
        ("conj(S3)", conj_hypergroup(symmetric_group(3), seed=settings.seed), 3, 3),
        ("conj(S4)", conj_hypergroup(symmetric_group(4), seed=settings.seed), 5, 5),
        ("conj(SL(2,2))", conj_hypergroup(sl2_group(1), seed=settings.seed), 3, 3),
        ("chebyshev", chebyshev(), 200, 25),
        ("su2hat", su2_dual(), 200, 25),
        ("rdp5(conj(S3))",
         restricted_product([conj_hypergroup(symmetric_group(3), seed=settings.seed)
                             for _ in range(5)]), 300, 25),
    ]
    t0 = time.monotonic()
    out = {}
    ok = True
    for name, H, N, A in jobs:
        rep = check_axioms(H, N, assoc_cap=A)
        out[name] = {"passed": rep.passed, "truncation": rep.truncation, "exact": rep.exact}
        ok = ok and rep.passed and rep.exact
    elapsed = time.monotonic() - t0
    return {"passed": ok and elapsed < 60.0, "hypergroups": out,
            "runtime_under_60s": elapsed < 60.0}


def _haar_pair_count_oracle(G, classes, c: int) -> Fraction:
    """h(C) from the raw pair count #{(a,b) in C-check x C : ab = e}, using
    only the group multiplication (independent of the hypergroup code)."""
    inv_class = sorted(G.inv(x) for x in classes[c])
    count = sum(1 for a in inv_class for b in classes[c] if G.mul(a, b) == G.identity)
    return Fraction(len(inv_class) * len(classes[c]), count)


def crit_haar(settings: RunSettings) -> dict:
    S = su2_dual()
    su2_ok = all(S.haar(l) == (l + 1) ** 2 for l in range(201))
    conj_ok = True
    per_group = {}
    for G in (symmetric_group(3), symmetric_group(4)):
        H = conj_hypergroup(G, seed=settings.seed)
        data = H.class_data
        checks = []
        for c in range(data.count):
            h = H.haar(c)
            oracle = _haar_pair_count_oracle(G, data.classes, c)
            checks.append(h == data.sizes[c] == oracle)
        per_group[G.name] = all(checks)
        conj_ok = conj_ok and all(checks)
    return {"passed": su2_ok and conj_ok,
            "su2_haar_(l+1)^2_l<=200": su2_ok, "conj_haar_equals_class_size": per_group}


def crit_psi(settings: RunSettings) -> dict:
    from .catalog import psi_isomorphism_check

    r3 = psi_isomorphism_check(symmetric_group(3), seed=settings.seed)
    r4 = psi_isomorphism_check(symmetric_group(4), seed=settings.seed)
    return {"passed": r3["passed"] and r4["passed"],
            "S3": {"pairs": r3["pairs_checked"], "passed": r3["passed"]},
            "S4": {"pairs": r4["pairs_checked"], "passed": r4["passed"]}}


def crit_non_central(settings: RunSettings) -> dict:
    H3 = _s3_conj(settings)
    w125, t, r = _s3_weight_125(H3)
    sub = W.check_submultiplicative(H3, w125, 3)
    cen = W.check_central(H3, w125, 3)
    has_witness = any(
        wit["lhs"] == "5" and wit["rhs"] == "4"
        and wit["triple"] == [repr(r), repr(t), repr(t)]
        for wit in cen.witnesses
    )
    return {"passed": sub.passed and sub.checked == 9 and not cen.passed and has_witness,
            "submultiplicative_pairs": sub.checked,
            "central_witness_5_gt_4": has_witness}


def crit_product_54(settings: RunSettings) -> dict:
    H3 = _s3_conj(settings)
    w125, t, r = _s3_weight_125(H3)
    RP = restricted_power(lambda i: H3)
    wprod = W.product_weight(RP, repeat=w125)
    # per-slot coefficient of delta_r in delta_t * delta_t (a 2/3 point of the
    # S3 class convolution); the coordinate-wise rule makes the coefficient of
    # D_N in E_N * E_N the N-fold product.
    slot_coeff = H3.convolve(t, t).coefficient(r)
    ok = slot_coeff == Fraction(2, 3)
    for n in range(1, 31):
        DN = tuple((i, r) for i in range(n))
        EN = tuple((i, t) for i in range(n))
        ok = ok and wprod(DN) == 5 ** n and wprod(EN) ** 2 == 4 ** n
        if n <= 10:  # full tensor expansion stays feasible here
            ok = ok and RP.convolve(EN, EN).coefficient(DN) == slot_coeff ** n
        else:
            ok = ok and slot_coeff ** n > 0
    return {"passed": ok, "N_max": 30, "full_tensor_checked_upto": 10,
            "ratio_at_30": str(Fraction(5 ** 30, 4 ** 30))}


def crit_cg_mass(settings: RunSettings) -> dict:
    ok = all(
        sum(r + 1 for r in range(abs(l - lp), l + lp + 1, 2)) == (l + 1) * (lp + 1)
        for l in range(101) for lp in range(101)
    )
    return {"passed": ok, "pairs": 101 * 101}


def crit_rearrangement(settings: RunSettings) -> dict:
    ok = True
    for beta in (1, 2):
        sigma = {r: (1 if r >= 0 else (1 - r) ** beta) for r in range(-121, 122)}
        for n in range(61):
            for m in range(n + 1):
                lhs = sum(sigma[t + s]
                          for t in range(-m, m + 1, 2)
                          for s in range(-n, n + 1, 2))
                rhs = sum(sigma[s]
                          for t in range(n - m, n + m + 1, 2)
                          for s in range(-t, t + 1, 2))
                if lhs != rhs:
                    ok = False
    S = su2_dual()
    lifted = W.lifted_su2_weight(W.sigma_beta_window(1, 130))
    sub = W.check_submultiplicative(S, lifted, 60)
    return {"passed": ok and sub.passed and sub.exact,
            "identity_pairs_per_beta": 61 * 62 // 2,
            "lifted_submultiplicative_N60": sub.passed}


def crit_equivalence(settings: RunSettings) -> dict:
    # frozen two-sided bounds for lifted(beta=1) / dimension(beta=1) on l <= 500
    LO, HI = Fraction(1, 4), Fraction(1)
    S = su2_dual()
    lifted = W.lifted_su2_weight(W.sigma_beta_window(1, 510))
    dim = W.dimension_weight(S, 1)
    ratios = []
    ok = True
    for l in range(501):
        # independent oracle: direct substitution into the step-2 average
        direct = Fraction(sum(1 if rr >= 0 else 1 - rr for rr in range(-l, l + 1, 2)), l + 1)
        val = lifted(l)
        ratio = val / dim(l)
        ok = ok and val == direct and LO <= ratio <= HI
        ratios.append(ratio)
    rep = W.check_equivalence(S, dim, lifted, 501)
    return {"passed": ok and rep.passed,
            "bounds": [str(LO), str(HI)],
            "observed": [str(min(ratios)), str(max(ratios))]}


def crit_summability(settings: RunSettings) -> dict:
    C = chebyshev()
    s = D.two_summability(C, W.polynomial_weight(C, 1), 1500)
    target = math.pi ** 2 / 6
    bracket_ok = (s.verdict == "CONVERGENT" and s.total_low <= target <= s.total_high
                  and s.total_high - s.total_low < 1e-6)
    div = D.two_summability(C, W.trivial_weight(), 200)
    return {"passed": bracket_ok and div.verdict == "DIVERGENT",
            "bracket": [s.total_low, s.total_high], "zeta2": target,
            "trivial_verdict": div.verdict}


def crit_norm_bound(settings: RunSettings) -> dict:
    C = chebyshev()
    w1 = W.polynomial_weight(C, 1)
    nb = D.multiplication_norm_bound(C, w1, "2-summable", kg=settings.kg, N=1500)
    recomputed = nb.recompute()
    self_consistent = abs(nb.value - recomputed) <= 1e-12 * abs(nb.value)
    reference = 2 * settings.kg * math.sqrt(math.pi ** 2 / 6)
    near_reference = abs(nb.value - reference) < 1e-3
    refused = False
    try:
        D.multiplication_norm_bound(C, w1, "polynomial", kg=settings.kg)
    except RouteUnavailableError:
        refused = True
    nb2 = D.multiplication_norm_bound(C, W.polynomial_weight(C, 2), "polynomial", kg=settings.kg)
    return {"passed": self_consistent and near_reference and refused and nb2.value > 0,
            "value": nb.value, "recomputed": recomputed, "reference": reference,
            "poly_route_refuses_beta1": refused, "poly_route_beta2_bound": nb2.value}


def crit_sun_data(settings: RunSettings) -> dict:
    dims = {w: d for w, d in su_n_dominant(3, 2)}
    dims_ok = (dims[(1, 0, 0)], dims[(1, 1, 0)], dims[(2, 1, 0)]) == (3, 3, 8)
    counts = su_n_count_by_first(3, 50)
    count_ok = all(counts[k] == k + 1 and counts[k] <= (1 + k) ** 2 for k in range(51))
    return {"passed": dims_ok and count_ok, "dims_3_3_8": dims_ok,
            "count_equals_k_plus_1_upto_50": count_ok}


def crit_witness(settings: RunSettings) -> dict:
    H3 = _s3_conj(settings)
    w125, _, _ = _s3_weight_125(H3)
    RP = restricted_power(lambda i: H3)
    wprod = W.product_weight(RP, repeat=w125)
    witness = D.non_arens_witness(RP, wprod, 10)
    cls = D.classify(RP, wprod, kg=settings.kg)
    return {"passed": (witness.verdict == D.WITNESS_AGAINST
                       and len(witness.witness_pairs) == 100
                       and witness.order_independent
                       and cls.arens_regular.status == D.WITNESSED_NO
                       and cls.injective.status == D.WITNESSED_NO),
            "pairs": len(witness.witness_pairs),
            "classify": [cls.arens_regular.status, cls.injective.status]}


def crit_exp_lemma(settings: RunSettings) -> dict:
    c1 = D.exp_lemma_constants(Fraction(1, 2), 1)
    floors_ok = c1.floor_lemma == 24 and c1.K == 5308416
    c2 = D.exp_lemma_constants(Fraction(1, 2), 4, beta=7)
    C = chebyshev()
    logM = math.log(c2.M)
    holds = True
    for x in range(61):
        for y in range(x, 61):
            for t in C.convolve_raw_cached(x, y)[0]:
                if t <= 60 and c2.p(t) > logM + c2.p(x) + c2.p(y) + 1e-9:
                    holds = False
    return {"passed": floors_ok and c2.K == 2401 and holds,
            "beta_floor": str(c1.floor_lemma), "K": str(c1.K),
            "K_2401": c2.K == 2401, "M": c2.M, "M_range": list(c2.m_range),
            "modified_weight_inequality_tau_le_60": holds}


def crit_cluster(settings: RunSettings) -> dict:
    S = su2_dual()
    scan = D.cluster_scan(S, W.polynomial_weight(S, 1), 200, threshold=1e-2)
    consistent = (scan.verdict == D.CONSISTENT
                  and scan.crossing_index is not None
                  and 100 < scan.crossing_index <= 190
                  and float(scan.envelope[scan.crossing_index]) < 1e-2)
    flat = D.cluster_scan(S, W.trivial_weight(), 60, threshold=1e-2)
    return {"passed": consistent and flat.verdict == D.WITNESS_AGAINST,
            "crossing_index": scan.crossing_index,
            "envelope_at_100": float(scan.envelope[100]),
            "trivial_verdict": flat.verdict}


def crit_determinism(settings: RunSettings) -> dict:
    # In-process probe: seeded constructions and report serialization are
    # reproducible.  Byte-identity of two full CLI runs is exercised by the
    # acceptance test via subprocess; the wall-clock target is asserted there.
    picks = ("haar", "non-central-weight", "psi-bridge")
    snap1 = json.dumps({c.id: c.details for c in run_all(settings, only=picks)}, sort_keys=True)
    snap2 = json.dumps({c.id: c.details for c in run_all(settings, only=picks)}, sort_keys=True)
    return {"passed": snap1 == snap2, "resampled_criteria": list(picks),
            "note": "full byte-identity of reproduce-paper runs is covered by the CLI test"}


CRITERIA: list[tuple[str, str, str, Callable]] = [
    ("axioms", "Axiom suite (exact, rational)", "hypergroup axioms (H1)-(H4)", crit_axioms),
    ("haar", "Haar values h(pi_l)=(l+1)^2 and h(C)=|C|", "discrete Haar measure", crit_haar),
    ("psi-bridge", "Class-function transport is an isometric isomorphism", "Conj(G) vs Zl1(G)", crit_psi),
    ("non-central-weight", "(1,2,5) weight is submultiplicative, not central", "non-central weight on Conj(S3)", crit_non_central),
    ("product-5-4", "(5/4)^N divergence of the product weight", "product weight on the S3 power", crit_product_54),
    ("cg-mass", "Clebsch-Gordan mass identity", "step-2 sum of (r+1)", crit_cg_mass),
    ("rearrangement", "Lifted-weight double-sum rearrangement", "step-2 double sums on Z", crit_rearrangement),
    ("equivalence", "Lifted vs dimension weight: two-sided ratio bounds", "weight equivalence on the SU(2) dual", crit_equivalence),
    ("summability", "2-summability bracket and divergence verdicts", "sum of 1/w^2", crit_summability),
    ("norm-bound", "Multiplication-norm bound composition", "2 C K_G (sum 1/w^2)^{1/2}", crit_norm_bound),
    ("sun-data", "SU(n) dimension data and weight counting", "Weyl dimension formula", crit_sun_data),
    ("witness", "Non-regularity witness on the product", "disjoint-slot pair family", crit_witness),
    ("exp-lemma", "Exponential-weight lemma constants", "p, q, K, M machinery", crit_exp_lemma),
    ("cluster", "Cluster-scan evidence", "tail-sup envelopes of Omega", crit_cluster),
    ("determinism", "Seeded reproducibility", "deterministic reports", crit_determinism),
]

_BY_ID = {c[0]: c for c in CRITERIA}


def run_criterion(cid: str, settings: RunSettings) -> CriterionResult:
    cid, title, source, func = _BY_ID[cid]
    t0 = time.monotonic()
    try:
        details = func(settings)
        passed = bool(details.pop("passed"))
    except Exception as exc:  # a crash is a failure with the error recorded
        details = {"error": f"{type(exc).__name__}: {exc}"}
        passed = False
    return CriterionResult(cid, title, source, passed, details, time.monotonic() - t0)


def run_all(settings: RunSettings, only=None) -> list:
    ids = [c[0] for c in CRITERIA]
    if only is not None:
        wanted = set(only)
        ids = [i for i in ids if i in wanted]
    return [run_criterion(i, settings) for i in ids]


def report_json(results: list, settings: RunSettings) -> dict:
    """Deterministic pass/fail matrix (durations deliberately excluded)."""
    return {
        "schema": "hyplab-report/1",
        "command": "reproduce-paper",
        "config": settings.to_json(),
        "all_passed": all(r.passed for r in results),
        "criteria": [
            {"id": r.id, "title": r.title, "source": r.source,
             "passed": r.passed, "details": r.details}
            for r in results
        ],
    }
