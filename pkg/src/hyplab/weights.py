"""Weight families on discrete hypergroups and their verification suite.

A weight is a positive function w with w(delta_x * delta_y) <= w(x) w(y),
where w(mu) = sum_t mu(t) w(t).  Stronger variants checked here:

  central          w(t) <= w(x) w(y) for every t in supp(delta_x * delta_y)
  weakly additive  w(delta_x * delta_y) <= C (w(x) + w(y))
  equivalent       C1 w1 <= w2 <= C2 w1

Families: polynomial (1+tau)^beta and exponential e^{C tau^alpha} on
finitely generated hypergroups; |C| and mean weights on conjugacy-class
hypergroups; the coordinate-sum weight and product weights on restricted
products; pushforward (quotient) weights; dimension weights d_pi^beta,
weights lifted from Z to the SU(2) dual, and weights from diagonal trace
data.  Checks are exact whenever the weight is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import _kernels as K
from .catalog import ConjugacyHypergroup, dominant_weight_dimension
from .errors import (
    DomainError,
    GroupWeightError,
    InvalidParamError,
    LengthMismatchError,
    NoGeneratorError,
    NormalizationError,
    NotAConjHypergroupError,
    UnboundedFiberError,
    WrongCarrierError,
)
from .hypergroups import Hypergroup, RestrictedProduct
from .measures import SparseMeasure

REL_TOL = 1e-9


def _to_raw(v):
    if isinstance(v, Fraction):
        return (v.numerator, v.denominator)
    if isinstance(v, int):
        return (v, 1)
    if isinstance(v, float):
        return v
    raise DomainError(f"weight value {v!r} is neither rational nor float")


def _raw_to_scalar(r):
    return r if isinstance(r, float) else Fraction(r[0], r[1])


def _raw_mul(a, b):
    if isinstance(a, float) or isinstance(b, float):
        return (a if isinstance(a, float) else a[0] / a[1]) * (b if isinstance(b, float) else b[0] / b[1])
    return K.mul_frac(a[0], a[1], b[0], b[1])


def _raw_le(a, b, tol=REL_TOL):
    """a <= b, exactly when both rational, else with relative tolerance."""
    if isinstance(a, float) or isinstance(b, float):
        fa = a if isinstance(a, float) else a[0] / a[1]
        fb = b if isinstance(b, float) else b[0] / b[1]
        return fa <= fb * (1 + tol) + tol * 1e-300
    return a[0] * b[1] <= b[0] * a[1]


class Weight:
    """Positive function on a carrier with family metadata and caching."""

    def __init__(self, family: str, rule: Callable, *, params: Optional[dict] = None,
                 exact: bool = True, carrier: Optional[str] = None,
                 certificates: Optional[dict] = None):
        self.family = family
        self.params = params or {}
        self.exact = exact
        self.carrier = carrier
        self.certificates = certificates or {}
        self._rule = rule
        self._cache: dict = {}

    def raw_value(self, x):
        hit = self._cache.get(x)
        if hit is None:
            v = _to_raw(self._rule(x))
            if not isinstance(v, float) and v[0] <= 0:
                raise DomainError(f"weight {self.family} not positive at {x!r}")
            if isinstance(v, float) and v <= 0:
                raise DomainError(f"weight {self.family} not positive at {x!r}")
            self._cache[x] = v
            hit = v
        return hit

    def __call__(self, x):
        return _raw_to_scalar(self.raw_value(x))

    def describe(self) -> dict:
        return {"family": self.family, "params": {k: str(v) for k, v in self.params.items()},
                "exact": self.exact}


# ==============================================================================
# Families
# ==============================================================================


def trivial_weight() -> Weight:
    return Weight("trivial", lambda x: 1, exact=True,
                  certificates={"weakly_additive": (Fraction(1, 2), "mass 1 vs w(x)+w(y) = 2")})


def _power(base, exponent):
    """base^exponent, exact for integral exponents and rational base."""
    if isinstance(exponent, int) or (isinstance(exponent, Fraction) and exponent.denominator == 1):
        return Fraction(base) ** int(exponent)
    return float(base) ** float(exponent)


def _weak_additivity_bound(beta) -> tuple:
    """Valid family constant max{1, 2^(beta-1)} for (1+tau)^beta-type weights."""
    c = _power(2, beta - 1) if (isinstance(beta, (int, Fraction)) and Fraction(beta) >= 1) \
        else (1 if float(beta) <= 1 else 2.0 ** (float(beta) - 1))
    const = max(Fraction(1), c) if isinstance(c, Fraction) else max(1.0, c)
    return const, "polynomial family bound C = max{1, 2^(beta-1)}"


def polynomial_weight(H: Hypergroup, beta) -> Weight:
    """omega_beta(x) = (1 + tau(x))^beta; central, exact for integer beta."""
    if isinstance(beta, float) and beta.is_integer():
        beta = int(beta)
    if Fraction(beta) < 0:
        raise InvalidParamError("beta must be >= 0")
    if H.generator is None and H.tau_rule is None:
        raise NoGeneratorError(f"{H.tag} has no generator; polynomial weight undefined")
    exact = isinstance(beta, int) or (isinstance(beta, Fraction) and beta.denominator == 1)
    return Weight(
        "polynomial",
        lambda x: _power(1 + H.tau(x), beta),
        params={"beta": beta},
        exact=exact,
        carrier=H.tag,
        certificates={"weakly_additive": _weak_additivity_bound(beta),
                      "one_over_w_in_c0": Fraction(beta) > 0 and not H.is_finite},
    )


def exponential_weight(H: Hypergroup, alpha, C) -> Weight:
    """sigma_{alpha,C}(x) = exp(C tau(x)^alpha); central, always float."""
    a, c = float(alpha), float(C)
    if not (0 <= a <= 1):
        raise InvalidParamError("alpha must lie in [0, 1]")
    if c <= 0:
        raise InvalidParamError("C must be positive")
    if H.generator is None and H.tau_rule is None:
        raise NoGeneratorError(f"{H.tag} has no generator; exponential weight undefined")
    return Weight(
        "exponential",
        lambda x: math.exp(c * H.tau(x) ** a),
        params={"alpha": alpha, "C": C},
        exact=False,
        carrier=H.tag,
    )


def cardinality_weight(H: ConjugacyHypergroup) -> Weight:
    """omega(C) = |C|; a central weight on Conj(G)."""
    if not isinstance(H, ConjugacyHypergroup):
        raise NotAConjHypergroupError("cardinality weight needs a conjugacy hypergroup")
    return Weight("cardinality", lambda c: H.class_size(c), exact=True, carrier=H.tag)


def validate_group_weight(G, sigma: dict, tol: float = REL_TOL):
    """sigma positive and sigma(xy) <= sigma(x) sigma(y), exhaustively."""
    for x in range(G.order):
        if x not in sigma:
            raise GroupWeightError(f"sigma undefined on element {x}")
        if _raw_le(_to_raw(sigma[x]), (0, 1), 0):
            raise GroupWeightError(f"sigma({x}) not positive")
    for x in range(G.order):
        for y in range(G.order):
            lhs = _to_raw(sigma[G.mul(x, y)])
            rhs = _raw_mul(_to_raw(sigma[x]), _to_raw(sigma[y]))
            if not _raw_le(lhs, rhs, tol):
                raise GroupWeightError(
                    f"sigma({G.element_name(x)}{G.element_name(y)}) = "
                    f"{_raw_to_scalar(lhs)} > {_raw_to_scalar(rhs)}"
                )


def mean_weight(H: ConjugacyHypergroup, sigma: dict) -> Weight:
    """omega_sigma(C) = |C|^{-1} sum_{t in C} sigma(t) for a group weight sigma."""
    if not isinstance(H, ConjugacyHypergroup):
        raise NotAConjHypergroupError("mean weight needs a conjugacy hypergroup")
    validate_group_weight(H.group, sigma)
    exact = all(not isinstance(v, float) for v in sigma.values())

    def rule(c):
        members = H.class_data.classes[c]
        total = sum(Fraction(v) if not isinstance(v, float) else v for v in (sigma[t] for t in members))
        if isinstance(total, float):
            return total / len(members)
        return Fraction(total, len(members)) if isinstance(total, int) else total / len(members)

    return Weight("mean", rule, params={"sigma": "group weight table"}, exact=exact, carrier=H.tag)


def sigma_from_central(H: ConjugacyHypergroup, w: Weight) -> dict:
    """Group weight sigma_w(x) = w(C_x); valid when w is central on Conj(G)."""
    if not isinstance(H, ConjugacyHypergroup):
        raise NotAConjHypergroupError("sigma_from_central needs a conjugacy hypergroup")
    table = {x: w(H.class_data.class_of[x]) for x in range(H.group.order)}
    validate_group_weight(H.group, table)
    return table


def omega_alpha_weight(H: RestrictedProduct, alpha) -> Weight:
    """omega_alpha(C) = (1 + |C_{i_1}| + ... + |C_{i_n}|)^alpha on products of
    conjugacy-class hypergroups (sum over the non-identity coordinates)."""
    if not isinstance(H, RestrictedProduct):
        raise WrongCarrierError("omega_alpha needs a restricted product")
    if isinstance(alpha, float) and alpha.is_integer():
        alpha = int(alpha)
    if Fraction(alpha) <= 0:
        raise InvalidParamError("alpha must be positive")

    def rule(x):
        total = 1
        for i, e in x:
            comp = H.component(i)
            if not isinstance(comp, ConjugacyHypergroup):
                raise WrongCarrierError(f"slot {i} is not a conjugacy hypergroup")
            total += comp.class_size(e)
        return _power(total, alpha)

    exact = isinstance(alpha, int)
    return Weight("omega_alpha", rule, params={"alpha": alpha}, exact=exact, carrier=H.tag)


def product_weight(H: RestrictedProduct, components: Optional[Sequence[Weight]] = None,
                   repeat: Optional[Weight] = None) -> Weight:
    """omega((x_i)_i) = prod_i omega_i(x_i) on a restricted product.

    All but finitely many factors must have omega_i(e_i) = 1; with `repeat`
    (one weight for every slot of an N-indexed product) that means
    repeat(e) = 1 exactly.
    """
    if not isinstance(H, RestrictedProduct):
        raise WrongCarrierError("product weight needs a restricted product")
    if (components is None) == (repeat is None):
        raise InvalidParamError("provide exactly one of components / repeat")
    if repeat is not None:
        if H.n_components is not None:
            components = [repeat] * H.n_components
        else:
            e0 = H.component(0).identity
            if repeat.raw_value(e0) != (1, 1):
                raise NormalizationError("repeat weight must satisfy omega(e) = 1")
            exceptional = {}
            comps = None
    if components is not None:
        comps = list(components)
        if H.n_components is None:
            raise NormalizationError("an N-indexed product needs `repeat`")
        if len(comps) != H.n_components:
            raise InvalidParamError("one component weight per slot required")
        exceptional = {}
        for i, wi in enumerate(comps):
            v = wi.raw_value(H.component(i).identity)
            if v != (1, 1):
                exceptional[i] = v

    def rule(x):
        val = (1, 1)
        assigned = dict(x)
        for i, e in assigned.items():
            wi = comps[i] if comps is not None else repeat
            val = _raw_mul(val, wi.raw_value(e))
        for i, ev in exceptional.items():
            if i not in assigned:
                val = _raw_mul(val, ev)
        return _raw_to_scalar(val)

    exact = all(w.exact for w in (comps if comps is not None else [repeat]))
    return Weight("product", rule, params={"factors": "per-slot weights"}, exact=exact,
                  carrier=H.tag)


def push_forward_weight(H: Hypergroup, H2: Hypergroup, phi: Callable, w: Weight,
                        delta, cap: int = 100_000) -> Weight:
    """omega'(y) = inf{w(x) : phi(x) = y}, certified by full fiber enumeration.

    Requires w >= delta > 0 (checked on the enumerated carrier) and a finite
    domain exhausted within `cap`; otherwise the infimum would only be an
    upper bound and the construction refuses.
    """
    if _raw_le(_to_raw(delta), (0, 1), 0):
        raise InvalidParamError("delta must be positive")
    elems = H.first_n(cap)
    if not H.is_finite or len(elems) >= cap:
        raise UnboundedFiberError(
            f"{H.tag} not exhausted within {cap}; fiber infima not certifiable"
        )
    fibers: dict = {}
    d_raw = _to_raw(delta)
    for x in elems:
        if not _raw_le(d_raw, w.raw_value(x), 0):
            raise DomainError(f"w({x!r}) < delta")
        y = phi(x)
        if y not in H2:
            raise WrongCarrierError(f"phi({x!r}) = {y!r} not in {H2.tag}")
        cur = fibers.get(y)
        if cur is None or _raw_le(w.raw_value(x), cur, 0):
            fibers[y] = w.raw_value(x)
    targets = H2.first_n(cap)
    missing = [y for y in targets if y not in fibers]
    if missing:
        raise UnboundedFiberError(f"phi not surjective onto {H2.tag}: missing {missing[:3]!r}")
    return Weight("pushforward", lambda y: _raw_to_scalar(fibers[y]),
                  params={"from": H.tag}, exact=w.exact, carrier=H2.tag)


def dimension_weight(target, beta) -> Weight:
    """omega_beta(pi) = d_pi^beta on a compact-group dual.

    `target` is the SU(2) dual handle (d_{pi_l} = l+1) or an integer n >= 2
    for SU(n) dominant-weight tuples via the product formula.
    """
    if isinstance(beta, float) and beta.is_integer():
        beta = int(beta)
    if Fraction(beta) < 0:
        raise InvalidParamError("beta must be >= 0")
    exact = isinstance(beta, int)
    if isinstance(target, Hypergroup):
        if target.tag != "su2hat":
            raise WrongCarrierError("dimension weight needs the SU(2) dual or an SU(n) rank")
        return Weight("dimension", lambda l: _power(l + 1, beta), params={"beta": beta},
                      exact=exact, carrier=target.tag,
                      certificates={"weakly_additive": _weak_additivity_bound(beta)})
    n = int(target)
    if n < 2:
        raise InvalidParamError("SU(n) rank must be >= 2")
    return Weight("dimension", lambda pi: _power(dominant_weight_dimension(pi), beta),
                  params={"beta": beta, "n": n}, exact=exact, carrier=f"su{n}hat")


@dataclass
class ZWeightWindow:
    """A weight table on Z over the window [-W, W], window-verified."""

    window: int
    values: dict

    def __post_init__(self):
        for r in range(-self.window, self.window + 1):
            if r not in self.values:
                raise DomainError(f"sigma undefined at {r}")
            if _raw_le(_to_raw(self.values[r]), (0, 1), 0):
                raise GroupWeightError(f"sigma({r}) not positive")

    def validate(self, tol: float = REL_TOL):
        """sigma(a+b) <= sigma(a) sigma(b) for all a, b, a+b in the window."""
        W = self.window
        for a in range(-W, W + 1):
            ra = _to_raw(self.values[a])
            for b in range(max(-W, -W - a), min(W, W - a) + 1):
                lhs = _to_raw(self.values[a + b])
                rhs = _raw_mul(ra, _to_raw(self.values[b]))
                if not _raw_le(lhs, rhs, tol):
                    raise GroupWeightError(f"sigma({a}+{b}) > sigma({a})sigma({b})")
        return True

    def to_json(self) -> dict:
        return {"window": self.window,
                "values": [str(self.values[r]) for r in range(-self.window, self.window + 1)]}

    @classmethod
    def from_json(cls, data: dict) -> "ZWeightWindow":
        W = int(data["window"])
        vals = data["values"]
        return cls(W, {r: Fraction(vals[r + W]) for r in range(-W, W + 1)})


def sigma_beta_window(beta, W: int) -> ZWeightWindow:
    """sigma(l) = 1 for l >= 0 and (1 - l)^beta for l < 0, on [-W, W]."""
    vals = {r: (Fraction(1) if r >= 0 else _power(1 - r, beta)) for r in range(-W, W + 1)}
    return ZWeightWindow(W, vals)


def lifted_su2_weight(sigma: ZWeightWindow, validated: bool = False) -> Weight:
    """omega_sigma(pi_l) = (1/(l+1)) * sum_{r=-l..l, step 2} sigma(r).

    Refuses l beyond the window (no silent extrapolation).
    """
    if not validated:
        sigma.validate()

    def rule(l):
        if l > sigma.window:
            raise DomainError(f"l={l} beyond sigma window {sigma.window}")
        total = sum(Fraction(sigma.values[r]) if not isinstance(sigma.values[r], float)
                    else sigma.values[r] for r in range(-l, l + 1, 2))
        if isinstance(total, float):
            return total / (l + 1)
        return Fraction(total, l + 1) if isinstance(total, int) else total / (l + 1)

    exact = all(not isinstance(v, float) for v in sigma.values.values())
    return Weight("lifted_su2", rule, params={"window": sigma.window}, exact=exact,
                  carrier="su2hat")


def weight_from_trace_data(data: dict) -> Weight:
    """omega_W(pi_l) = ||I_pi . W||_1 / d_pi from per-representation diagonal
    values; list lengths must equal d_{pi_l} = l + 1."""
    for l, diag in data.items():
        if len(diag) != l + 1:
            raise LengthMismatchError(f"pi_{l}: {len(diag)} diagonal values, need {l + 1}")
        for v in diag:
            if _raw_le(_to_raw(v), (0, 1), 0):
                raise DomainError(f"pi_{l}: non-positive diagonal value")

    def rule(l):
        if l not in data:
            raise DomainError(f"no trace data for pi_{l}")
        diag = data[l]
        total = sum(Fraction(v) if not isinstance(v, float) else v for v in diag)
        if isinstance(total, float):
            return total / (l + 1)
        return Fraction(total, l + 1) if isinstance(total, int) else total / (l + 1)

    exact = all(not isinstance(v, float) for diag in data.values() for v in diag)
    return Weight("trace_data", rule, exact=exact, carrier="su2hat")


def table_weight(H: Hypergroup, mapping: dict) -> Weight:
    """Explicit weight table on (part of) the carrier."""
    def rule(x):
        if x not in mapping:
            raise DomainError(f"weight table undefined at {x!r}")
        return mapping[x]

    exact = all(not isinstance(v, float) for v in mapping.values())
    return Weight("table", rule, exact=exact, carrier=H.tag)


# ==============================================================================
# Verification suite
# ==============================================================================


@dataclass
class WeightCheckReport:
    """Result of a weight property scan over a truncation."""

    prop: str
    passed: bool
    truncation: int
    checked: int
    exact: bool
    witnesses: list = field(default_factory=list)
    best_constant: Optional[object] = None
    certificate: Optional[dict] = None
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "property": self.prop,
            "passed": self.passed,
            "truncation": self.truncation,
            "checked": self.checked,
            "exact": self.exact,
            "witnesses": self.witnesses[:10],
            "note": self.note,
        }
        if self.best_constant is not None:
            out["best_constant"] = {
                "value": float(self.best_constant),
                "exact": not isinstance(self.best_constant, float),
                "repr": str(self.best_constant),
            }
        if self.certificate is not None:
            out["certificate"] = {k: str(v) for k, v in self.certificate.items()}
        return out


def _weighted_mass_raw(H: Hypergroup, w: Weight, x, y):
    el, nn, dd = H.convolve_raw_cached(x, y)
    vals = [w.raw_value(t) for t in el]
    if any(isinstance(v, float) for v in vals):
        return math.fsum((n / d) * (v if isinstance(v, float) else v[0] / v[1])
                         for n, d, v in zip(nn, dd, vals))
    n, d = K.dot_frac(nn, dd, [v[0] for v in vals], [v[1] for v in vals])
    return (n, d)


def check_submultiplicative(H: Hypergroup, w: Weight, truncation: int,
                            tol: float = REL_TOL) -> WeightCheckReport:
    """w(delta_x*delta_y) <= w(x) w(y) over all pairs in the truncation."""
    elems = H.first_n(truncation)
    report = WeightCheckReport("submultiplicative", True, len(elems), 0, w.exact)
    worst = None
    for x in elems:
        wx = w.raw_value(x)
        for y in elems:
            lhs = _weighted_mass_raw(H, w, x, y)
            rhs = _raw_mul(wx, w.raw_value(y))
            report.checked += 1
            ratio = _raw_to_scalar(lhs) / _raw_to_scalar(rhs)
            if worst is None or ratio > worst:
                worst = ratio
            if not _raw_le(lhs, rhs, tol):
                report.passed = False
                if len(report.witnesses) < 20:
                    report.witnesses.append({
                        "pair": [repr(x), repr(y)],
                        "lhs": str(_raw_to_scalar(lhs)),
                        "rhs": str(_raw_to_scalar(rhs)),
                    })
    report.best_constant = worst
    return report


def check_central(H: Hypergroup, w: Weight, truncation: int,
                  tol: float = REL_TOL) -> WeightCheckReport:
    """w(t) <= w(x) w(y) for every t in supp(delta_x * delta_y)."""
    elems = H.first_n(truncation)
    report = WeightCheckReport("central", True, len(elems), 0, w.exact)
    for x in elems:
        wx = w.raw_value(x)
        for y in elems:
            rhs = _raw_mul(wx, w.raw_value(y))
            for t in H.convolve_raw_cached(x, y)[0]:
                report.checked += 1
                lhs = w.raw_value(t)
                if not _raw_le(lhs, rhs, tol):
                    report.passed = False
                    if len(report.witnesses) < 20:
                        report.witnesses.append({
                            "triple": [repr(t), repr(x), repr(y)],
                            "lhs": str(_raw_to_scalar(lhs)),
                            "rhs": str(_raw_to_scalar(rhs)),
                        })
    return report


def weak_additivity_constant(H: Hypergroup, w: Weight, truncation: int) -> WeightCheckReport:
    """Empirically attained sup of w(delta_x*delta_y) / (w(x) + w(y)), plus a
    symbolic family certificate when one is available (or the exhaustive
    constant itself when the carrier is finite and fully scanned)."""
    elems = H.first_n(truncation)
    report = WeightCheckReport("weakly_additive", True, len(elems), 0, w.exact)
    sup = None
    for x in elems:
        wx = _raw_to_scalar(w.raw_value(x))
        for y in elems:
            lhs = _raw_to_scalar(_weighted_mass_raw(H, w, x, y))
            ratio = lhs / (wx + _raw_to_scalar(w.raw_value(y)))
            report.checked += 1
            if sup is None or ratio > sup:
                sup = ratio
    report.best_constant = sup
    cert = w.certificates.get("weakly_additive")
    if cert is not None:
        report.certificate = {"constant": cert[0], "source": cert[1]}
    elif H.is_finite and len(elems) == H.finite_size:
        report.certificate = {"constant": sup, "source": "exhaustive scan of the finite carrier"}
    else:
        report.note = "empirical constant only (no family certificate)"
    return report


def check_equivalence(H: Hypergroup, w1: Weight, w2: Weight, truncation: int,
                      elements: Optional[Sequence] = None) -> WeightCheckReport:
    """Range of w2/w1 along the enumeration (or a supplied element sequence);
    flags DIVERGENCE when the last >= 10 ratio samples strictly increase.
    The flag is a heuristic, never a proof."""
    elems = list(elements) if elements is not None else H.first_n(truncation)
    ratios = []
    for x in elems:
        ratios.append(_raw_to_scalar(w2.raw_value(x)) / _raw_to_scalar(w1.raw_value(x)))
    run = 1
    for i in range(len(ratios) - 1, 0, -1):
        if ratios[i] > ratios[i - 1]:
            run += 1
        else:
            break
    diverging = run >= 10
    report = WeightCheckReport(
        "equivalent", not diverging, len(elems), len(ratios),
        w1.exact and w2.exact,
        note="DIVERGENCE (heuristic: tail strictly increasing)" if diverging
        else "equivalent at truncation",
    )
    report.certificate = {"ratio_min": min(ratios), "ratio_max": max(ratios),
                          "increasing_tail": run}
    return report


# ==============================================================================
# Weight spec parsing (CLI / JSON surface)
# ==============================================================================


def _parse_number(s: str):
    if "/" in s:
        return Fraction(s)
    if "." in s or "e" in s or "E" in s:
        return float(s)
    return int(s)


def weight_from_spec(H: Hypergroup, spec, base_dir: str = ".") -> Weight:
    """Weight from 'family:key=value,...' or a JSON dict
    {"family": tag, "params": {...}} / {"family": "table", "values": ...}."""
    if isinstance(spec, str):
        if ":" in spec:
            fam, rest = spec.split(":", 1)
        else:
            fam, rest = spec, ""
        if fam in ("table", "lifted", "mean", "trace") and rest and rest.endswith(".json"):
            import json as _json

            path = rest if rest.startswith("/") else f"{base_dir}/{rest}"
            with open(path, encoding="utf-8") as fh:
                return weight_from_spec(H, _json.load(fh), base_dir)
        params = {}
        if rest:
            for item in rest.split(","):
                k, v = item.split("=")
                params[k] = _parse_number(v)
        spec = {"family": fam, "params": params}
    fam = spec["family"]
    params = spec.get("params", {})
    if fam == "trivial":
        return trivial_weight()
    if fam in ("poly", "polynomial"):
        return polynomial_weight(H, params["beta"])
    if fam in ("exp", "exponential"):
        return exponential_weight(H, params["alpha"], params["C"])
    if fam in ("card", "cardinality"):
        return cardinality_weight(H)
    if fam in ("omega-alpha", "omega_alpha"):
        return omega_alpha_weight(H, params["alpha"])
    if fam in ("dim", "dimension"):
        return dimension_weight(H, params["beta"])
    if fam == "lifted":
        return lifted_su2_weight(ZWeightWindow.from_json(spec["sigma"]))
    if fam == "table":
        from .measures import id_from_json

        values = {id_from_json(k if not isinstance(k, str) else _table_key(k)): Fraction(v["num"]) / Fraction(v["den"])
                  if isinstance(v, dict) else _parse_number(str(v))
                  for k, v in spec["values"].items()}
        return table_weight(H, values)
    if fam == "product":
        if "repeat" in spec:
            comp = H.component(0) if isinstance(H, RestrictedProduct) else H
            return product_weight(H, repeat=weight_from_spec(comp, spec["repeat"], base_dir))
        comps = [weight_from_spec(H.component(i), s, base_dir)
                 for i, s in enumerate(spec["components"])]
        return product_weight(H, components=comps)
    raise InvalidParamError(f"unknown weight family {fam!r}")


def _table_key(k: str):
    try:
        return int(k)
    except ValueError:
        return k
