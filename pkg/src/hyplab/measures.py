"""Exact sparse finitely-supported measures.

A measure is a finite set of (element, coefficient) pairs over a tagged
carrier.  Coefficients are exact rationals by default; a measure holding
any float coefficient is float-tagged as a whole (rational coefficients
are coerced to float, never the reverse).  Construction canonicalizes:
duplicates are merged, zeros dropped, and the support is stored sorted by
the carrier's total element order, so equality and hashing are structural.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from fractions import Fraction
from typing import Callable, Iterable

from . import _kernels as K
from .errors import CarrierError, DomainError

# Float-mode coefficients at or below this magnitude are dropped on
# construction (keeps supports canonical).
FLOAT_ZERO = 1e-15

Scalar = Fraction | float
ElementId = object


def _as_raw(value) -> tuple[int, int] | float:
    """Normalize a scalar to a reduced int pair (exact) or a float."""
    if isinstance(value, Fraction):
        return value.numerator, value.denominator
    if isinstance(value, int):
        return value, 1
    if isinstance(value, float):
        return value
    if isinstance(value, tuple) and len(value) == 2:
        return K.reduce_frac(value[0], value[1])
    raise DomainError(f"unsupported coefficient type: {type(value).__name__}")


class SparseMeasure:
    """Finitely supported measure with exact-rational or float coefficients."""

    __slots__ = ("carrier", "_elems", "_nums", "_dens", "_vals", "_hash")

    def __init__(self, carrier, elems, nums=None, dens=None, vals=None):
        # Trusted constructor: inputs must already be canonical.  Use
        # from_pairs / from_raw_terms for general data.
        self.carrier = carrier
        self._elems = tuple(elems)
        self._nums = tuple(nums) if nums is not None else None
        self._dens = tuple(dens) if dens is not None else None
        self._vals = tuple(vals) if vals is not None else None
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_pairs(cls, carrier, pairs: Iterable[tuple[ElementId, object]]) -> "SparseMeasure":
        """Canonical measure from (element, coefficient) pairs.

        Accepts Fraction, int, (num, den) or float coefficients; any float
        makes the whole measure float-tagged.
        """
        elems: list = []
        raws: list = []
        has_float = False
        for e, c in pairs:
            r = _as_raw(c)
            if isinstance(r, float):
                has_float = True
            elems.append(e)
            raws.append(r)
        if not has_float:
            me, mn, md = K.merge_terms(elems, [r[0] for r in raws], [r[1] for r in raws])
            return cls(carrier, me, mn, md)
        acc: dict = {}
        for e, r in zip(elems, raws):
            v = r if isinstance(r, float) else r[0] / r[1]
            acc[e] = acc.get(e, 0.0) + v
        out = [(e, v) for e, v in sorted(acc.items()) if abs(v) > FLOAT_ZERO]
        return cls(carrier, [e for e, _ in out], vals=[v for _, v in out])

    @classmethod
    def from_raw_terms(cls, carrier, elems, nums, dens) -> "SparseMeasure":
        """Canonical exact measure from parallel int lists."""
        me, mn, md = K.merge_terms(list(elems), list(nums), list(dens))
        return cls(carrier, me, mn, md)

    @classmethod
    def point(cls, carrier, elem) -> "SparseMeasure":
        """The point mass delta_elem."""
        return cls(carrier, (elem,), (1,), (1,))

    # -- accessors -----------------------------------------------------------

    @property
    def is_exact(self) -> bool:
        return self._vals is None

    def support(self) -> tuple:
        return self._elems

    def raw_terms(self) -> tuple[list, list, list]:
        """Parallel (elems, nums, dens) lists; exact mode only."""
        if not self.is_exact:
            raise DomainError("raw_terms is only available for exact measures")
        return list(self._elems), list(self._nums), list(self._dens)

    def items(self):
        if self.is_exact:
            for e, n, d in zip(self._elems, self._nums, self._dens):
                yield e, Fraction(n, d)
        else:
            yield from zip(self._elems, self._vals)

    def coefficient(self, elem) -> Scalar:
        """Coefficient at elem (0 when absent)."""
        i = bisect_left(self._elems, elem)
        if i < len(self._elems) and self._elems[i] == elem:
            if self.is_exact:
                return Fraction(self._nums[i], self._dens[i])
            return self._vals[i]
        return Fraction(0) if self.is_exact else 0.0

    def __len__(self) -> int:
        return len(self._elems)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMeasure):
            return NotImplemented
        return (
            self.carrier == other.carrier
            and self._elems == other._elems
            and self._nums == other._nums
            and self._dens == other._dens
            and self._vals == other._vals
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.carrier, self._elems, self._nums, self._dens, self._vals))
        return self._hash

    def __repr__(self) -> str:
        body = " + ".join(f"({c})d[{e}]" for e, c in self.items())
        return f"<measure on {self.carrier}: {body or '0'}>"


# -- operations ---------------------------------------------------------------


def total_mass(mu: SparseMeasure) -> Scalar:
    """Sum of the coefficients; exact when the measure is exact."""
    if mu.is_exact:
        n, d = K.sum_frac(list(mu._nums), list(mu._dens))
        return Fraction(n, d)
    return math.fsum(mu._vals)


def weighted_mass(mu: SparseMeasure, w) -> Scalar:
    """omega(mu) = sum_t mu(t) * w(t); exact iff both sides are exact.

    `w` is a weight handle or any callable on elements.
    """
    raw = getattr(w, "raw_value", None)
    values = []
    exact = mu.is_exact
    for e in mu.support():
        v = raw(e) if raw is not None else _as_raw(w(e))
        if isinstance(v, float):
            exact = False
        values.append(v)
    if exact:
        n, d = K.dot_frac(list(mu._nums), list(mu._dens), [v[0] for v in values], [v[1] for v in values])
        return Fraction(n, d)
    coeffs = mu._vals if not mu.is_exact else [n / d for n, d in zip(mu._nums, mu._dens)]
    floats = [v if isinstance(v, float) else v[0] / v[1] for v in values]
    return math.fsum(c * v for c, v in zip(coeffs, floats))


def scale(mu: SparseMeasure, c) -> SparseMeasure:
    """c * mu for c > 0."""
    r = _as_raw(c)
    if isinstance(r, float):
        if r <= 0:
            raise DomainError("scale factor must be positive")
        vals = mu._vals if not mu.is_exact else [n / d for n, d in zip(mu._nums, mu._dens)]
        return SparseMeasure.from_pairs(mu.carrier, zip(mu._elems, (r * v for v in vals)))
    if r[0] <= 0:
        raise DomainError("scale factor must be positive")
    if not mu.is_exact:
        f = r[0] / r[1]
        return SparseMeasure.from_pairs(mu.carrier, zip(mu._elems, (f * v for v in mu._vals)))
    nums, dens = K.scale_terms(list(mu._nums), list(mu._dens), r[0], r[1])
    return SparseMeasure(mu.carrier, mu._elems, nums, dens)


def add(mu: SparseMeasure, nu: SparseMeasure) -> SparseMeasure:
    """mu + nu (coefficient-wise)."""
    if mu.carrier != nu.carrier:
        raise CarrierError(f"cannot add measures on {mu.carrier!r} and {nu.carrier!r}")
    if mu.is_exact and nu.is_exact:
        return SparseMeasure.from_raw_terms(
            mu.carrier,
            list(mu._elems) + list(nu._elems),
            list(mu._nums) + list(nu._nums),
            list(mu._dens) + list(nu._dens),
        )
    return SparseMeasure.from_pairs(mu.carrier, list(mu.items()) + list(nu.items()))


def pushforward(mu: SparseMeasure, f: Callable) -> SparseMeasure:
    """Image measure under f; coefficients mapping to the same target merge."""
    try:
        images = [f(e) for e in mu.support()]
    except (KeyError, LookupError) as exc:
        raise DomainError(f"pushforward map undefined on support: {exc}") from exc
    if any(img is None for img in images):
        raise DomainError("pushforward map undefined on part of the support")
    if mu.is_exact:
        return SparseMeasure.from_raw_terms(mu.carrier, images, list(mu._nums), list(mu._dens))
    return SparseMeasure.from_pairs(mu.carrier, zip(images, mu._vals))


# -- JSON ---------------------------------------------------------------------


def id_to_json(elem):
    """ElementId -> JSON value (ints stay ints, tuples become lists)."""
    if isinstance(elem, tuple):
        return [id_to_json(x) for x in elem]
    if isinstance(elem, (int, str)):
        return elem
    raise DomainError(f"element {elem!r} has no JSON form")


def id_from_json(data):
    """Inverse of id_to_json (lists become tuples)."""
    if isinstance(data, list):
        return tuple(id_from_json(x) for x in data)
    return data


def measure_to_json(mu: SparseMeasure) -> dict:
    """Schema: {"carrier": tag, "terms": [{"elem": .., "num": str, "den": str}]}."""
    if not mu.is_exact:
        raise DomainError("float-tagged measures have no exact JSON form")
    return {
        "carrier": mu.carrier,
        "terms": [
            {"elem": id_to_json(e), "num": str(n), "den": str(d)}
            for e, n, d in zip(mu._elems, mu._nums, mu._dens)
        ],
    }


def measure_from_json(data: dict) -> SparseMeasure:
    terms = data["terms"]
    return SparseMeasure.from_raw_terms(
        data["carrier"],
        [id_from_json(t["elem"]) for t in terms],
        [int(t["num"]) for t in terms],
        [int(t["den"]) for t in terms],
    )
