"""Operator-algebra diagnostics for weighted hypergroup algebras.

The central object is the normalized submultiplicativity defect

    Omega(x, y) = w(delta_x * delta_y) / (w(x) w(y))   in (0, 1],

scanned over a fixed enumeration.  Sufficient-condition routes:

  * strong 0-clustering of Omega (tail-sup envelopes)  => Arens regular;
  * weak additivity + sum 1/w(x)^2 < infinity          => injective, with
      ||m||_eps <= 2 C K_G (sum 1/w^2)^{1/2};
  * polynomial weights with growth |F^{*n}| <= D n^d and 2 beta > d+1;
  * exponential weights via the p/q-lemma constants (K, M);
  * the restricted-product witness family (v_n, u_m) with Omega = 1
      refuting Arens regularity for product weights.

"x -> infinity" is interpreted along the enumeration; scan verdicts are
enumeration-relative evidence, never certificates, except WITNESS-AGAINST
families whose Omega values are exact lower-bounded.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .catalog import ConjugacyHypergroup
from .errors import (
    InvalidParamError,
    MissingConstantError,
    NoDecompositionError,
    RouteUnavailableError,
    WrongCarrierError,
)
from .hypergroups import Hypergroup, RestrictedProduct
from .measures import SparseMeasure, weighted_mass
from .weights import (
    Weight,
    WeightCheckReport,
    _raw_mul,
    _raw_to_scalar,
    _weighted_mass_raw,
    weak_additivity_constant,
)

# A published upper bound for the real Grothendieck constant; configurable,
# and always reported alongside the values it scales.
DEFAULT_KG = 1.7822140

CONSISTENT = "CONSISTENT-WITH-STRONG-0-CLUSTER"
WITNESS_AGAINST = "WITNESS-AGAINST"
INCONCLUSIVE = "INCONCLUSIVE"

CERTIFIED_YES = "CERTIFIED-YES"
WITNESSED_NO = "WITNESSED-NO"
UNKNOWN = "UNKNOWN"


def scalar_json(v) -> dict:
    """Numeric report entry carrying its exactness flag."""
    if isinstance(v, float):
        return {"value": v, "exact": False}
    f = Fraction(v)
    return {"value": float(f), "exact": True, "num": str(f.numerator), "den": str(f.denominator)}


# ==============================================================================
# Omega
# ==============================================================================


def omega(H: Hypergroup, w: Weight, x, y):
    """Omega(x,y) = w(delta_x*delta_y) / (w(x) w(y)); exact when w is."""
    lhs = _weighted_mass_raw(H, w, x, y)
    rhs = _raw_mul(w.raw_value(x), w.raw_value(y))
    return _raw_to_scalar(lhs) / _raw_to_scalar(rhs)


@dataclass
class OmegaTable:
    """Omega over the first N enumerated elements, with sup profiles."""

    truncation: int
    elements: list
    rows: list
    exact: bool

    def row_sup(self) -> list:
        return [max(row) for row in self.rows]

    def col_sup(self) -> list:
        n = len(self.rows)
        return [max(self.rows[i][j] for i in range(n)) for j in range(n)]

    def sup(self):
        return max(self.row_sup())

    def float_rows(self) -> list:
        return [[float(v) for v in row] for row in self.rows]

    def to_csv(self) -> str:
        lines = ["x\\y," + ",".join(repr(e) for e in self.elements)]
        for e, row in zip(self.elements, self.rows):
            lines.append(repr(e) + "," + ",".join(str(float(v)) for v in row))
        return "\n".join(lines) + "\n"


def omega_table(H: Hypergroup, w: Weight, N: int, workers: int = 1) -> OmegaTable:
    elems = H.first_n(N)
    wvals = [w.raw_value(x) for x in elems]

    def compute_row(i):
        x = elems[i]
        row = []
        for j, y in enumerate(elems):
            lhs = _weighted_mass_raw(H, w, x, y)
            rhs = _raw_mul(wvals[i], wvals[j])
            row.append(_raw_to_scalar(lhs) / _raw_to_scalar(rhs))
        return row

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(compute_row, range(len(elems))))
    else:
        rows = [compute_row(i) for i in range(len(elems))]
    exact = w.exact and all(not isinstance(v, float) for row in rows for v in row)
    return OmegaTable(truncation=len(elems), elements=list(elems), rows=rows, exact=exact)


# ==============================================================================
# Strong 0-cluster scan
# ==============================================================================


@dataclass
class ClusterScanResult:
    """Tail-sup envelopes of Omega in both iterated orders.

    envelope[m] = sup{Omega(x,y) : x, y at enumeration index >= m} (split by
    the x<=y / y<=x direction in envelope_xy / envelope_yx).  The verdict is
    enumeration-relative except WITNESS-AGAINST with exact pair values.
    """

    verdict: str
    truncation: int
    threshold: float
    margin: int
    envelope: list
    envelope_xy: list
    envelope_yx: list
    crossing_index: Optional[int]
    witness_pairs: list = field(default_factory=list)
    witness_constant: Optional[float] = None
    order_independent: bool = False
    note: str = ""

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "truncation": self.truncation,
            "threshold": self.threshold,
            "margin": self.margin,
            "crossing_index": self.crossing_index,
            "envelope": [float(v) for v in self.envelope],
            "witness_pairs": [[repr(a), repr(b)] for a, b in self.witness_pairs[:10]],
            "witness_constant": self.witness_constant,
            "order_independent": self.order_independent,
            "note": self.note,
        }


def cluster_scan(H: Hypergroup, w: Weight, N: int, threshold: float = 1e-3,
                 margin: int = 10, workers: int = 1) -> ClusterScanResult:
    """Scan Omega tails along the enumeration.

    CONSISTENT: the monotone envelope drops below `threshold` at a tail
    index with at least `margin` elements beyond it.  WITNESS-AGAINST: the
    envelope stays at (>= half its initial value and >= threshold) through
    the deepest measurable tail; the attaining deep pairs are reported with
    the exact constant they achieve.  Otherwise INCONCLUSIVE.
    """
    if N < 10:
        raise InvalidParamError("cluster scan needs N >= 10")
    table = omega_table(H, w, N, workers=workers)
    n = table.truncation
    rows = table.rows
    env_xy = [None] * n
    env_yx = [None] * n
    best = None
    for m in range(n - 1, -1, -1):
        row_tail = max(rows[m][j] for j in range(m, n))
        col_tail = max(rows[i][m] for i in range(m, n))
        if best is None:
            env_xy[m] = row_tail
            env_yx[m] = col_tail
        else:
            env_xy[m] = max(env_xy[m + 1], row_tail)
            env_yx[m] = max(env_yx[m + 1], col_tail)
        best = True
    envelope = [max(a, b) for a, b in zip(env_xy, env_yx)]

    crossing = None
    for m, v in enumerate(envelope):
        if float(v) < threshold:
            crossing = m
            break
    deepest = max(0, n - margin)
    deep_val = float(envelope[deepest])

    if crossing is not None and crossing <= n - margin:
        return ClusterScanResult(
            verdict=CONSISTENT, truncation=n, threshold=threshold, margin=margin,
            envelope=envelope, envelope_xy=env_xy, envelope_yx=env_yx,
            crossing_index=crossing,
            note=f"envelope < {threshold} from tail index {crossing} on",
        )
    if deep_val >= threshold and deep_val >= 0.5 * float(envelope[0]):
        pairs = []
        const = envelope[deepest]
        for i in range(deepest, n):
            for j in range(deepest, n):
                if rows[i][j] == const and len(pairs) < 10:
                    pairs.append((table.elements[i], table.elements[j]))
        exact_floor = not isinstance(const, float)
        return ClusterScanResult(
            verdict=WITNESS_AGAINST, truncation=n, threshold=threshold, margin=margin,
            envelope=envelope, envelope_xy=env_xy, envelope_yx=env_yx,
            crossing_index=None, witness_pairs=pairs, witness_constant=float(const),
            order_independent=exact_floor,
            note="envelope does not decay: deep pairs attain the reported constant",
        )
    return ClusterScanResult(
        verdict=INCONCLUSIVE, truncation=n, threshold=threshold, margin=margin,
        envelope=envelope, envelope_xy=env_xy, envelope_yx=env_yx, crossing_index=crossing,
        note="envelope decays but does not cross the threshold within the scan",
    )


# ==============================================================================
# 2-summability
# ==============================================================================


@dataclass
class SummabilityResult:
    verdict: str                      # CONVERGENT | DIVERGENT | UNKNOWN
    partial: float
    truncation: int
    tail_low: Optional[float] = None
    tail_high: Optional[float] = None
    method: str = ""

    @property
    def total_low(self) -> Optional[float]:
        return self.partial + self.tail_low if self.tail_low is not None else None

    @property
    def total_high(self) -> Optional[float]:
        return self.partial + self.tail_high if self.tail_high is not None else None

    def to_json(self) -> dict:
        return {
            "verdict": self.verdict,
            "partial": self.partial,
            "truncation": self.truncation,
            "tail_low": self.tail_low,
            "tail_high": self.tail_high,
            "total_low": self.total_low,
            "total_high": self.total_high,
            "method": self.method,
        }


def _power_tail_bounds(L: int, s: float) -> tuple:
    """Integral bracket for sum_{n > L} (1+n)^{-s}, s > 1."""
    lo = (L + 2) ** (1 - s) / (s - 1)
    hi = (L + 1) ** (1 - s) / (s - 1)
    return lo, hi


def _poly_beta_of(w: Weight) -> Optional[Fraction]:
    if w.family == "polynomial":
        return Fraction(w.params["beta"])
    if w.family == "dimension" and w.carrier == "su2hat":
        return Fraction(w.params["beta"])
    return None


def two_summability(H: Hypergroup, w: Weight, N: int,
                    component_profiles: Optional[Sequence] = None) -> SummabilityResult:
    """Partial sum of 1/w(x)^2 over the truncation plus an analytic tail.

    Tails exist for tau-graded carriers with certified per-level counts and
    (1+tau)^beta-type weights: the tail is bracketed by integral comparison
    and is finite iff 2*beta exceeds deg(counts)+1.  A trivial weight on an
    infinite carrier is certified DIVERGENT, as is a coordinate-sum weight
    on an infinite restricted product whose class counts outgrow the squared
    weight bound (`component_profiles` = per-slot (class_count,
    max_class_size) when components are too large to build).
    """
    elems = H.first_n(N)
    partial = math.fsum(float(_raw_to_scalar(w.raw_value(x))) ** -2 for x in elems)
    if H.is_finite and len(elems) == H.finite_size:
        return SummabilityResult("CONVERGENT", partial, len(elems), 0.0, 0.0,
                                 method="finite carrier, exact enumeration")
    beta = _poly_beta_of(w)
    if beta is not None and H.level_counts is not None and H.tau_rule is not None:
        counts = list(H.level_counts)
        deg = len(counts) - 1
        L = H.tau(elems[-1])
        if 2 * beta <= deg + 1:
            return SummabilityResult("DIVERGENT", partial, len(elems),
                                     method=f"2*beta = {2 * beta} <= deg+1 = {deg + 1}")
        lo = hi = 0.0
        for k, a in enumerate(counts):
            if a == 0:
                continue
            s = float(2 * beta) - k
            t_lo, t_hi = _power_tail_bounds(L, s)
            shrink = (L / (L + 1.0)) ** k
            lo += a * shrink * t_lo
            hi += a * t_hi
        return SummabilityResult("CONVERGENT", partial, len(elems), lo, hi,
                                 method=f"integral bracket, levels {counts}, tau > {L}")
    if w.family == "trivial":
        return SummabilityResult("DIVERGENT", partial, len(elems),
                                 method="w = 1 on an infinite carrier: terms do not vanish")
    if isinstance(H, RestrictedProduct) and H.n_components is None \
            and w.family in ("omega_alpha", "product"):
        cert = _rdp_divergence_certificate(H, w, component_profiles)
        if cert is not None:
            return SummabilityResult("DIVERGENT", partial, len(elems), method=cert)
    return SummabilityResult("UNKNOWN", partial, len(elems),
                             method="no analytic tail available for this family")


def _rdp_divergence_certificate(H: RestrictedProduct, w: Weight,
                                profiles: Optional[Sequence], slots: int = 48,
                                blowup: float = 1e9) -> Optional[str]:
    """Classes supported in the first n slots number prod_k (m_k - 1) while
    their weight is at most W_n; if prod (m_k - 1) / W_n^2 blows up, the
    2-sum diverges."""
    alpha = float(w.params.get("alpha", 1)) if w.family == "omega_alpha" else None
    if profiles is None:
        profiles = []
        for i in range(slots):
            comp = H.component(i)
            if not isinstance(comp, ConjugacyHypergroup):
                return None
            profiles.append((comp.finite_size, max(comp.class_data.sizes)))
    count = 1.0
    size_sum = 0
    best = 0.0
    for (classes, max_size) in profiles:
        if classes < 2:
            return None
        count *= classes - 1
        size_sum += max_size
        if alpha is not None:
            bound = (1.0 + size_sum) ** (2 * alpha)
        else:
            return None
        term = count / bound
        best = max(best, term)
        if term > blowup:
            return (f"class count over first slots exceeds {blowup:g} times the "
                    f"squared weight bound (term={term:.3g})")
    return None


# ==============================================================================
# T^2 and multiplication-norm bounds
# ==============================================================================


@dataclass
class NormBound:
    """A bound value with its closed form and constituents, recomputable."""

    value: float
    formula: str
    constants: dict
    note: str = ""

    _FORMULAS = {
        "t2-weakly-additive": lambda c: 2.0 * c["C"] * math.sqrt(c["sum_total_high"]),
        "t2-su-n": lambda c: 2.0 * c["A_beta"] * c["C_n"] ** c["beta"] * math.sqrt(c["sum_total_high"]),
        "t2-custom": lambda c: c["row_sup"] + c["col_sup"],
        "m-2-summable": lambda c: 2.0 * c["C"] * c["K_G"] * math.sqrt(c["sum_total_high"]),
        "m-polynomial": lambda c: 2.0 * c["C"] * c["K_G"] * math.sqrt(c["sum_total_high"]),
        "m-exponential": lambda c: 2.0 * c["M"] * c["A_beta"] * c["K_G"] * math.sqrt(c["sum_total_high"]),
        "m-t2-general": lambda c: c["K_G"] * c["t2_bound"],
    }

    def recompute(self) -> float:
        consts = {k: float(v) for k, v in self.constants.items() if isinstance(v, (int, float, Fraction))}
        return self._FORMULAS[self.formula](consts)

    def to_json(self) -> dict:
        return {
            "value": self.value,
            "formula": self.formula,
            "constants": {k: scalar_json(v) if isinstance(v, (int, float, Fraction)) else str(v)
                          for k, v in self.constants.items()},
            "note": self.note,
        }


def _weak_additivity_certificate(H: Hypergroup, w: Weight, N: int) -> tuple:
    report = weak_additivity_constant(H, w, min(N, 80) if not H.is_finite else N)
    if report.certificate is None:
        raise NoDecompositionError(
            f"no weak-additivity certificate for family {w.family!r} on {H.tag}"
        )
    return report.certificate["constant"], report.certificate["source"]


def t2_upper_bound(H: Optional[Hypergroup], w: Optional[Weight], N: int,
                   decomposition, **kwargs) -> NormBound:
    """Upper bound on ||Omega||_{T^2(H)} for a tagged decomposition.

    Tags: "weakly-additive" (f1 = C/w(x), f2 = C/w(y)); "su-n" with
    kwargs n, beta, C_n; "custom" with kwargs f1, f2.  Also reports the
    trivial lower bound sup|Omega| when a scan is feasible.
    """
    if decomposition == "weakly-additive":
        C, source = _weak_additivity_certificate(H, w, N)
        summ = two_summability(H, w, N)
        if summ.verdict != "CONVERGENT":
            raise NoDecompositionError(f"sum 1/w^2 is {summ.verdict}; no T^2 bound")
        consts = {"C": float(C), "sum_total_high": summ.total_high,
                  "sum_partial": summ.partial, "C_source": source}
        nb = NormBound(0.0, "t2-weakly-additive", consts,
                       note="f1 = C/w(x), f2 = C/w(y); rows/columns are l2 copies of C/w")
        nb.value = nb.recompute()
        sup = _omega_sup(H, w, min(N, 60))
        nb.constants["omega_sup_lower_bound"] = sup
        return nb
    if decomposition == "su-n":
        n, beta, C_n = kwargs["n"], kwargs["beta"], kwargs.get("C_n")
        if C_n is None:
            raise MissingConstantError("C_n is configuration-only and unset")
        s = 2.0 * float(beta) - n + 2
        if s <= 1:
            raise NoDecompositionError(f"needs beta > (n-1)/2, got beta={beta}")
        K = max(N, 64)
        partial = math.fsum((1.0 + k) ** -s for k in range(K + 1))
        lo, hi = _power_tail_bounds(K, s)
        a_beta = max(1.0, 2.0 ** (float(beta) - 1.0))
        consts = {"A_beta": a_beta, "C_n": float(C_n), "beta": float(beta),
                  "sum_total_high": partial + hi, "sum_partial": partial,
                  "series_exponent": s, "conditional_on": f"Lee inequality constant C_{n}"}
        nb = NormBound(0.0, "t2-su-n", consts,
                       note="conditional on the configured C_n; no fusion computed")
        nb.value = nb.recompute()
        return nb
    if decomposition == "custom":
        f1, f2 = kwargs["f1"], kwargs["f2"]
        elems = H.first_n(N)
        row = max(math.sqrt(math.fsum(float(f1(x, y)) ** 2 for x in elems)) for y in elems)
        col = max(math.sqrt(math.fsum(float(f2(x, y)) ** 2 for y in elems)) for x in elems)
        exactness = "exact (finite carrier)" if H.is_finite and len(elems) == H.finite_size \
            else "truncation-only: not an upper bound certificate on an infinite carrier"
        nb = NormBound(row + col, "t2-custom", {"row_sup": row, "col_sup": col}, note=exactness)
        return nb
    raise NoDecompositionError(f"unknown decomposition tag {decomposition!r}")


def _omega_sup(H: Hypergroup, w: Weight, N: int) -> float:
    elems = H.first_n(N)
    best = 0.0
    for x in elems:
        wx = w.raw_value(x)
        for y in elems:
            v = float(_raw_to_scalar(_weighted_mass_raw(H, w, x, y))
                      / (_raw_to_scalar(wx) * _raw_to_scalar(w.raw_value(y))))
            best = max(best, v)
    return best


def multiplication_norm_bound(H: Hypergroup, w: Weight, route: str, *,
                              kg: float = DEFAULT_KG, N: int = 1500,
                              growth: Optional[tuple] = None,
                              decomposition=None, **kwargs) -> NormBound:
    """||m||_eps bounds: K_G times the route's T^2 bound.

    Routes: "2-summable" (weak additivity + summable 1/w^2), "polynomial"
    (growth certificate, needs 2 beta > d+1), "exponential" (p/q-lemma
    constants), "t2-general" (explicit decomposition).
    """
    if route == "2-summable":
        t2 = t2_upper_bound(H, w, N, "weakly-additive")
        consts = dict(t2.constants)
        consts["K_G"] = kg
        nb = NormBound(0.0, "m-2-summable", consts, note=t2.note)
        nb.value = nb.recompute()
        return nb
    if route == "polynomial":
        beta = _poly_beta_of(w)
        if beta is None:
            raise RouteUnavailableError("polynomial route needs a (1+tau)^beta weight")
        D, d = _growth_certificate(H, growth)
        if 2 * beta <= d + 1:
            raise RouteUnavailableError(
                f"polynomial route needs 2*beta > d+1: 2*{beta} <= {d + 1}")
        C = max(1.0, 2.0 ** (float(beta) - 1.0))
        partial = 1.0 + math.fsum(D * n ** d / (1.0 + n) ** (2 * float(beta))
                                  for n in range(1, N + 1))
        s = 2 * float(beta) - d
        tail_hi = D * (1.0 + N) ** (1 - s) / (s - 1)
        consts = {"C": C, "K_G": kg, "D": D, "d": d, "beta": float(beta),
                  "sum_total_high": partial + tail_hi, "sum_partial": partial,
                  "tail_high": tail_hi}
        nb = NormBound(0.0, "m-polynomial", consts,
                       note="1 + sum_n D n^d (1+n)^{-2 beta} with integral tail")
        nb.value = nb.recompute()
        return nb
    if route == "exponential":
        if w.family != "exponential":
            raise RouteUnavailableError("exponential route needs an exponential weight")
        alpha = w.params["alpha"]
        C_exp = w.params["C"]
        D, d = _growth_certificate(H, growth)
        constants = exp_lemma_constants(alpha, C_exp, growth_d=d)
        beta = constants.beta
        a_beta = max(1.0, 2.0 ** (float(beta) - 1.0))
        partial = 1.0 + math.fsum(D * n ** d / (1.0 + n) ** (2 * float(beta))
                                  for n in range(1, N + 1))
        s = 2 * float(beta) - d
        tail_hi = D * (1.0 + N) ** (1 - s) / (s - 1)
        consts = {"M": constants.M, "A_beta": a_beta, "K_G": kg,
                  "beta": float(beta), "K": float(constants.K),
                  "sum_total_high": partial + tail_hi,
                  "M_range": str(constants.m_range), "M_range_capped": constants.range_capped}
        nb = NormBound(0.0, "m-exponential", consts,
                       note="Omega_sigma <= M A_beta (w_beta(x)^-1 + w_beta(y)^-1); "
                            "M range-verified" if constants.range_capped else "")
        nb.value = nb.recompute()
        return nb
    if route == "t2-general":
        if decomposition is None:
            raise RouteUnavailableError("t2-general needs a decomposition")
        t2 = t2_upper_bound(H, w, N, decomposition, **kwargs)
        nb = NormBound(0.0, "m-t2-general", {"K_G": kg, "t2_bound": t2.value,
                                             "t2_formula": t2.formula}, note=t2.note)
        nb.value = nb.recompute()
        return nb
    raise RouteUnavailableError(f"unknown route {route!r}")


def _growth_certificate(H: Hypergroup, growth: Optional[tuple]) -> tuple:
    if growth is not None:
        return float(growth[0]), float(growth[1])
    if H is not None and H.certified_growth is not None:
        D, d, _note = H.certified_growth
        return float(D), float(d)
    raise RouteUnavailableError(
        "no certified growth bound; pass growth=(D, d) or use a catalog carrier")


# ==============================================================================
# Exponential-weight lemma constants
# ==============================================================================


@dataclass
class ExpLemmaConstants:
    """p, q, K, M for exponential weights e^{C tau^alpha}.

    p(x) = C x^alpha - beta ln(1+x), q = p/x,
    K = (beta^2 / (C alpha (1-alpha)))^{1/alpha},
    M = max{e^{p(z1)-p(z2)-p(z3)} : z in ([0, 2K] cap N0)^3}, computed by the
    separable reduction max p - 2 min p (the cube scan is compared on small
    ranges); when 2K exceeds the cap the range is recorded and M flagged.
    """

    alpha: object
    C: object
    beta: object
    floor_lemma: object
    floor_theorem: Optional[object]
    K: object
    M: float
    m_range: tuple
    range_capped: bool
    p: Callable
    q: Callable
    argmax_p: int
    argmin_p: int
    cube_agrees: Optional[bool]

    def to_json(self) -> dict:
        return {
            "alpha": scalar_json(self.alpha if not isinstance(self.alpha, float) else self.alpha),
            "C": scalar_json(self.C),
            "beta": scalar_json(self.beta),
            "beta_floor_lemma": scalar_json(self.floor_lemma),
            "beta_floor_theorem": scalar_json(self.floor_theorem) if self.floor_theorem is not None else None,
            "K": scalar_json(self.K),
            "M": self.M,
            "M_range": list(self.m_range),
            "M_range_capped": self.range_capped,
            "argmax_p": self.argmax_p,
            "argmin_p": self.argmin_p,
            "cube_agrees": self.cube_agrees,
        }


def exp_lemma_constants(alpha, C, beta=None, growth_d=None, cube_cap: int = 200,
                        compare_cap: int = 40) -> ExpLemmaConstants:
    """Constants for the exponential-weight machinery.

    beta defaults to the lemma floor max{1, 6/(C alpha (1-alpha))}; the
    theorem floor additionally includes (d+1)/2 when a growth degree is
    given.  K is exact whenever 1/alpha is an integer and the parameters
    are rational.
    """
    a_frac = Fraction(alpha) if not isinstance(alpha, float) else None
    af = float(alpha)
    if not (0 < af < 1):
        raise InvalidParamError("alpha must lie strictly between 0 and 1")
    if float(C) <= 0:
        raise InvalidParamError("C must be positive")
    if a_frac is not None and not isinstance(C, float):
        denom = Fraction(C) * a_frac * (1 - a_frac)
        floor_lemma = max(Fraction(1), Fraction(6) / denom)
    else:
        denom = float(C) * af * (1 - af)
        floor_lemma = max(1.0, 6.0 / denom)
    floor_theorem = None
    if growth_d is not None:
        floor_theorem = max(floor_lemma, Fraction(growth_d + 1, 2)
                            if not isinstance(floor_lemma, float) else (growth_d + 1) / 2)
    if beta is None:
        beta = floor_lemma
    if float(beta) < float(floor_lemma):
        raise InvalidParamError(f"beta = {beta} below the lemma floor {floor_lemma}")

    if a_frac is not None and a_frac.numerator == 1 and not isinstance(beta, float) \
            and not isinstance(C, float):
        base = Fraction(beta) ** 2 / (Fraction(C) * a_frac * (1 - a_frac))
        K = base ** a_frac.denominator
        if K.denominator == 1:
            K = K.numerator
    else:
        K = (float(beta) ** 2 / (float(C) * af * (1 - af))) ** (1 / af)

    cf, bf = float(C), float(beta)

    def p(x):
        return cf * x ** af - bf * math.log1p(x)

    def q(x):
        return p(x) / x

    top_exact = 2 * K if not isinstance(K, float) else 2 * K
    top = int(min(float(top_exact), float(cube_cap)))
    capped = float(top_exact) > cube_cap
    values = [p(z) for z in range(top + 1)]
    argmax = max(range(top + 1), key=lambda z: values[z])
    argmin = min(range(top + 1), key=lambda z: values[z])
    M = math.exp(values[argmax] - 2 * values[argmin])

    cube_agrees = None
    if top <= compare_cap:
        best = -math.inf
        for z1 in range(top + 1):
            for z2 in range(top + 1):
                for z3 in range(top + 1):
                    best = max(best, values[z1] - values[z2] - values[z3])
        cube_agrees = math.isclose(math.exp(best), M, rel_tol=1e-12)

    return ExpLemmaConstants(
        alpha=alpha, C=C, beta=beta, floor_lemma=floor_lemma,
        floor_theorem=floor_theorem, K=K, M=M, m_range=(0, top),
        range_capped=capped, p=p, q=q, argmax_p=argmax, argmin_p=argmin,
        cube_agrees=cube_agrees,
    )


# ==============================================================================
# Restricted-product witness and SU(n) bound
# ==============================================================================


def non_arens_witness(H: RestrictedProduct, w: Weight, depth: int) -> ClusterScanResult:
    """The (v_n, u_m) family on an infinite restricted product with a product
    weight: disjoint-slot pairs have singleton convolution support and
    Omega(v_n, u_m) = 1 exactly, refuting strong 0-clustering (and Arens
    regularity, per the product construction)."""
    if not isinstance(H, RestrictedProduct) or H.n_components is not None:
        raise WrongCarrierError("witness needs an infinite restricted product")
    if w.family != "product":
        raise WrongCarrierError("witness needs a product weight")
    pairs = []
    for n in range(1, depth + 1):
        for m in range(1, depth + 1):
            sv, su = 2 * n, 2 * m - 1
            v = ((sv, H.component(sv).element_at(1)),)
            u = ((su, H.component(su).element_at(1)),)
            el, nn, dd = H._convolve_raw(v, u)
            if len(el) != 1 or (nn[0], dd[0]) != (1, 1):
                raise WrongCarrierError(f"support of v_{n} * u_{m} is not a singleton")
            val = omega(H, w, v, u)
            if val != 1:
                raise WrongCarrierError(f"Omega(v_{n}, u_{m}) = {val} != 1")
            pairs.append((v, u))
    return ClusterScanResult(
        verdict=WITNESS_AGAINST, truncation=depth * depth, threshold=1.0, margin=0,
        envelope=[Fraction(1)] * depth, envelope_xy=[], envelope_yx=[],
        crossing_index=None, witness_pairs=pairs, witness_constant=1.0,
        order_independent=True,
        note="disjoint-slot family: Omega = 1 exactly at arbitrary depth",
    )


def su_n_omega_bound(n: int, beta, mu: Sequence[int], nu: Sequence[int],
                     C_n: Optional[float] = None):
    """Certified upper bound C_n^beta (1/(1+mu_1) + 1/(1+nu_1))^beta for
    Omega_beta on the SU(n) dual; no fusion is computed."""
    if C_n is None:
        raise MissingConstantError("C_n must be supplied by configuration")
    if beta == 0:
        return Fraction(1)
    base = Fraction(1, 1 + mu[0]) + Fraction(1, 1 + nu[0])
    if isinstance(beta, int) and not isinstance(C_n, float):
        return Fraction(C_n) ** beta * base ** beta
    return float(C_n) ** float(beta) * float(base) ** float(beta)


def su2_lee_calibration(beta, L: int, kernel=None) -> dict:
    """Exact SU(2) Omega values vs the Lee-type bound: the least C_2 making
    C_2^beta (1/(1+l) + 1/(1+l'))^beta dominate over l, l' <= L."""
    from .catalog import su2_dual
    from .weights import dimension_weight

    H = su2_dual()
    w = dimension_weight(H, beta)
    worst = Fraction(0)
    bf = Fraction(beta)
    for l in range(L + 1):
        for lp in range(l, L + 1):
            om = omega(H, w, l, lp)
            base = Fraction(1, 1 + l) + Fraction(1, 1 + lp)
            ratio = (float(om) / float(base) ** float(bf)) ** (1.0 / float(bf))
            worst = max(worst, Fraction(ratio).limit_denominator(10 ** 12))
    c2 = max(1.0, float(worst))
    return {"c_min": float(worst), "C_2": c2, "L": L,
            "dominates": True, "note": "exact Omega vs bound over the window"}


# ==============================================================================
# Classifier
# ==============================================================================


@dataclass
class Verdict:
    status: str
    route: str = ""
    details: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"status": self.status, "route": self.route}
        if self.details:
            out["details"] = {k: (v.to_json() if hasattr(v, "to_json") else
                                  (scalar_json(v) if isinstance(v, (int, float, Fraction)) else str(v)))
                              for k, v in self.details.items()}
        return out


@dataclass
class Classification:
    """Certified verdicts for Arens regularity and injectivity.

    CERTIFIED-YES only through implemented sufficient conditions, with a
    re-checkable certificate chain; WITNESSED-NO only by an exact witness
    family; otherwise UNKNOWN with scan evidence."""

    arens_regular: Verdict
    injective: Verdict
    certificates: list = field(default_factory=list)
    evidence: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "verdicts": {
                "ArensRegular": self.arens_regular.to_json(),
                "Injective": self.injective.to_json(),
            },
            "certificates": self.certificates,
            "evidence": {k: (v.to_json() if hasattr(v, "to_json") else v)
                         for k, v in self.evidence.items()},
        }


def classify(H: Hypergroup, w: Weight, *, N: int = 120, kg: float = DEFAULT_KG,
             scan_threshold: float = 1e-2) -> Classification:
    """Run the certificate chain.

    (a) weakly-additive certificate + 1/w -> 0  => Arens regular;
    (b) weak additivity + 2-summability        => injective (with bound);
    (c) polynomial route (2 beta > d+1)        => injective;
    (d) exponential route                      => injective;
    (e) infinite product + product weight      => witnessed non-regular
        (and non-injective, since operator algebras are Arens regular);
    finite carriers are certified outright; anything else is UNKNOWN with
    cluster-scan evidence attached.
    """
    certs: list = []
    evidence: dict = {}

    if H.is_finite:
        arens = Verdict(CERTIFIED_YES, "finite-dimensional",
                        {"carrier_size": H.finite_size})
        try:
            nb = multiplication_norm_bound(H, w, "2-summable", kg=kg, N=H.finite_size)
            inj = Verdict(CERTIFIED_YES, "finite-dimensional (2-summable bound)", {"bound": nb})
            certs.append({"op": "multiplication_norm_bound", "route": "2-summable",
                          "value": nb.value, "constants": nb.to_json()["constants"]})
        except Exception:
            inj = Verdict(CERTIFIED_YES, "finite-dimensional", {})
        return Classification(arens, inj, certs, evidence)

    if isinstance(H, RestrictedProduct) and H.n_components is None and w.family == "product":
        witness = non_arens_witness(H, w, depth=10)
        certs.append({"op": "non_arens_witness", "depth": 10,
                      "pairs_checked": len(witness.witness_pairs), "omega": 1})
        arens = Verdict(WITNESSED_NO, "restricted-product witness family",
                        {"witness": witness})
        inj = Verdict(WITNESSED_NO, "operator algebras are Arens regular (contrapositive)")
        return Classification(arens, inj, certs, {"witness": witness})

    arens = None
    wa_cert = None
    try:
        wa = weak_additivity_constant(H, w, min(N, 60))
        if wa.certificate is not None:
            wa_cert = wa.certificate
    except Exception:
        wa = None
    decay = bool(w.certificates.get("one_over_w_in_c0"))
    if wa_cert is not None and decay:
        arens = Verdict(CERTIFIED_YES, "weak additivity + 1/w in c0",
                        {"C": wa_cert["constant"], "C_source": wa_cert["source"]})
        certs.append({"op": "weak_additivity_constant", "constant": str(wa_cert["constant"]),
                      "source": wa_cert["source"]})
        certs.append({"op": "decay_certificate", "family": w.family,
                      "statement": "w(x) >= (1+N)^beta off F^{*N}"})

    inj = None
    beta = _poly_beta_of(w)
    if beta is not None:
        try:
            nb = multiplication_norm_bound(H, w, "polynomial", kg=kg)
            inj = Verdict(CERTIFIED_YES, "polynomial growth route", {"bound": nb})
            certs.append({"op": "multiplication_norm_bound", "route": "polynomial",
                          "value": nb.value, "constants": nb.to_json()["constants"]})
        except RouteUnavailableError:
            inj = None
    if inj is None and w.family == "exponential":
        try:
            nb = multiplication_norm_bound(H, w, "exponential", kg=kg)
            inj = Verdict(CERTIFIED_YES, "exponential weight route", {"bound": nb})
            certs.append({"op": "multiplication_norm_bound", "route": "exponential",
                          "value": nb.value, "constants": nb.to_json()["constants"]})
        except RouteUnavailableError:
            inj = None
    if inj is None and wa_cert is not None:
        try:
            nb = multiplication_norm_bound(H, w, "2-summable", kg=kg)
            inj = Verdict(CERTIFIED_YES, "weak additivity + 2-summability", {"bound": nb})
            certs.append({"op": "multiplication_norm_bound", "route": "2-summable",
                          "value": nb.value, "constants": nb.to_json()["constants"]})
        except (NoDecompositionError, RouteUnavailableError):
            inj = None

    if arens is None and inj is not None and inj.status == CERTIFIED_YES:
        arens = Verdict(CERTIFIED_YES, "injective => operator algebra => Arens regular")

    if arens is None or inj is None:
        scan = cluster_scan(H, w, max(N, 30), threshold=scan_threshold)
        evidence["cluster_scan"] = scan
        if w.family == "trivial":
            evidence["remark"] = (
                "for w = 1 the known non-regularity result for L1(H) of an "
                "infinite hypergroup is documentation, not a verdict of this tool")
        if arens is None:
            arens = Verdict(UNKNOWN, "no sufficient condition fired",
                            {"scan_verdict": scan.verdict})
        if inj is None:
            inj = Verdict(UNKNOWN, "no sufficient condition fired",
                          {"scan_verdict": scan.verdict})
    return Classification(arens, inj, certs, evidence)
