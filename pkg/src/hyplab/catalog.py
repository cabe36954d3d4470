"""Catalog of concrete hypergroups.

Families:
  * conjugacy-class hypergroups of finite groups (table, permutation, or
    matrix backed), with exact structure constants
      delta_C * delta_D = sum_E  c_CDE |E| / (|C||D|)  delta_E,
    c_CDE = #{(c,d) in C x D : cd = e0} for a representative e0 of E;
  * the Chebyshev polynomial hypergroup on N0:
      delta_n * delta_m = 1/2 delta_|n-m| + 1/2 delta_{n+m}   (n, m >= 1);
  * the SU(2) dual via the Clebsch-Gordan rule:
      delta_l * delta_l' = sum_{r=|l-l'|..l+l', step 2} (r+1)/((l+1)(l'+1)) delta_r;
  * user-supplied polynomial hypergroups (rule-backed, verified at truncation);
  * SU(n) dominant-weight data with exact dimensions
      d_pi = prod_{i<j} (pi_i - pi_j + j - i)/(j - i);
  * restricted products of any of the above (see hypergroups module).
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

from .errors import CarrierError, DomainError, GroupValidationError, InvalidParamError
from .hypergroups import Hypergroup, RestrictedProduct, RuleHypergroup, TableHypergroup
from .measures import SparseMeasure

PERM_GROUP_ORDER_CAP = 100_000


# ==============================================================================
# Finite groups
# ==============================================================================


class FiniteGroup:
    """Finite group with elements indexed 0..order-1."""

    name: str = "G"
    order: int = 0

    def mul(self, a: int, b: int) -> int:
        raise NotImplementedError

    def inv(self, a: int) -> int:
        raise NotImplementedError

    @property
    def identity(self) -> int:
        return self._identity

    def element_name(self, a: int) -> str:
        return str(a)

    def conjugators(self) -> Sequence[int]:
        """Indices whose conjugation action generates all class orbits."""
        return range(self.order)


class TableGroup(FiniteGroup):
    """Group from an explicit multiplication table; fully validated."""

    def __init__(self, table: Sequence[Sequence[int]], names: Optional[Sequence[str]] = None,
                 name: str = "G"):
        m = len(table)
        self.order = m
        self.name = name
        self._table = [list(row) for row in table]
        for i, row in enumerate(self._table):
            if len(row) != m or any(not (0 <= v < m) for v in row):
                raise GroupValidationError(f"row {i} is not closed over 0..{m - 1}")
        identity = None
        for e in range(m):
            if all(self._table[e][x] == x and self._table[x][e] == x for x in range(m)):
                identity = e
                break
        if identity is None:
            raise GroupValidationError("no identity element")
        self._identity = identity
        self._inv = [None] * m
        for x in range(m):
            for y in range(m):
                if self._table[x][y] == identity and self._table[y][x] == identity:
                    self._inv[x] = y
                    break
            if self._inv[x] is None:
                raise GroupValidationError(f"element {x} has no inverse")
        for a in range(m):
            for b in range(m):
                ab = self._table[a][b]
                for c in range(m):
                    if self._table[ab][c] != self._table[a][self._table[b][c]]:
                        raise GroupValidationError(f"associativity fails at ({a},{b},{c})")
        self._names = list(names) if names else [str(i) for i in range(m)]
        if len(self._names) != m:
            raise GroupValidationError("names length does not match order")

    def mul(self, a, b):
        return self._table[a][b]

    def inv(self, a):
        return self._inv[a]

    def element_name(self, a):
        return self._names[a]


def _cycle_notation(perm: tuple) -> str:
    seen = [False] * len(perm)
    parts = []
    for i in range(len(perm)):
        if seen[i] or perm[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = perm[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = perm[j]
        parts.append("(" + " ".join(str(k + 1) for k in cyc) + ")")
    return "".join(parts) or "()"


class PermGroup(FiniteGroup):
    """Group generated by permutations (associativity holds by construction)."""

    def __init__(self, degree: int, generators: Sequence[Sequence[int]], name: str = "G"):
        self.degree = degree
        self.name = name
        gens = [tuple(g) for g in generators]
        for g in gens:
            if sorted(g) != list(range(degree)):
                raise GroupValidationError(f"{g} is not a permutation of 0..{degree - 1}")
        ident = tuple(range(degree))
        elements = [ident]
        index = {ident: 0}
        frontier = [ident]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = tuple(x[g[i]] for i in range(degree))
                    if y not in index:
                        if len(elements) >= PERM_GROUP_ORDER_CAP:
                            raise GroupValidationError(f"group order exceeds cap {PERM_GROUP_ORDER_CAP}")
                        index[y] = len(elements)
                        elements.append(y)
                        nxt.append(y)
            frontier = nxt
        self._elements = elements
        self._index = index
        self.order = len(elements)
        self._identity = 0
        self._gen_indices = [index[g] for g in gens if g in index]

    def mul(self, a, b):
        pa, pb = self._elements[a], self._elements[b]
        return self._index[tuple(pa[pb[i]] for i in range(self.degree))]

    def inv(self, a):
        p = self._elements[a]
        q = [0] * self.degree
        for i, v in enumerate(p):
            q[v] = i
        return self._index[tuple(q)]

    def element_name(self, a):
        return _cycle_notation(self._elements[a])

    def conjugators(self):
        return self._gen_indices


# GF(2^n) for the SL(2, 2^n) family; field elements are bit-polynomials.
_GF_IRREDUCIBLE = {1: 0b11, 2: 0b111, 3: 0b1011, 4: 0b10011}


class _GF2n:
    def __init__(self, n: int):
        if n not in _GF_IRREDUCIBLE:
            raise InvalidParamError(f"GF(2^{n}) not available (n <= 4)")
        self.n = n
        self.size = 1 << n
        self.poly = _GF_IRREDUCIBLE[n]

    def mul(self, a: int, b: int) -> int:
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a & self.size:
                a ^= self.poly
        return r


class MatrixGroup(FiniteGroup):
    """SL(2, 2^n): 2x2 matrices of determinant 1 over GF(2^n)."""

    def __init__(self, n: int):
        field = _GF2n(n)
        q = field.size
        self.field = field
        self.name = f"SL(2,{q})"
        ident = (1, 0, 0, 1)
        mats = []
        for a, b, c, d in itertools.product(range(q), repeat=4):
            if field.mul(a, d) ^ field.mul(b, c) == 1:
                mats.append((a, b, c, d))
        mats.remove(ident)
        self._elements = [ident] + sorted(mats)
        self._index = {m: i for i, m in enumerate(self._elements)}
        self.order = len(self._elements)
        self._identity = 0

    def mul(self, a, b):
        x = self._elements[a]
        y = self._elements[b]
        f = self.field.mul
        prod = (
            f(x[0], y[0]) ^ f(x[1], y[2]),
            f(x[0], y[1]) ^ f(x[1], y[3]),
            f(x[2], y[0]) ^ f(x[3], y[2]),
            f(x[2], y[1]) ^ f(x[3], y[3]),
        )
        return self._index[prod]

    def inv(self, a):
        x = self._elements[a]
        # det = 1 and char 2: inverse of [a b; c d] is [d b; c a]
        return self._index[(x[3], x[1], x[2], x[0])]

    def element_name(self, a):
        return str(self._elements[a])


def cyclic_group(n: int) -> TableGroup:
    return TableGroup([[(i + j) % n for j in range(n)] for i in range(n)], name=f"Z{n}")


def symmetric_group(n: int) -> PermGroup:
    if n < 2:
        return PermGroup(1, [[0]], name="S1")
    transposition = [1, 0] + list(range(2, n))
    cycle = list(range(1, n)) + [0]
    return PermGroup(n, [transposition, cycle], name=f"S{n}")


def sl2_group(n: int) -> MatrixGroup:
    return MatrixGroup(n)


def sl2_class_sizes(q: int) -> list[int]:
    """Conjugacy class sizes of SL(2,q) for even q, from the character table:
    identity, one unipotent class of size q^2-1, (q-2)/2 split classes of
    size q(q+1), and q/2 non-split classes of size q(q-1)."""
    if q < 2 or q & (q - 1):
        raise InvalidParamError("q must be a power of 2 with q >= 2")
    return [1, q * q - 1] + [q * (q + 1)] * ((q - 2) // 2) + [q * (q - 1)] * (q // 2)


def group_from_json(data: dict, name: str = "G") -> FiniteGroup:
    """{"order": m, "table": [[..]]} or {"degree": k, "generators": [[..]]}."""
    if "table" in data:
        return TableGroup(data["table"], names=data.get("names"), name=data.get("name", name))
    if "generators" in data:
        return PermGroup(data["degree"], data["generators"], name=data.get("name", name))
    raise GroupValidationError("group JSON needs 'table' or 'generators'")


_NAMED_GROUPS = {
    "s3": lambda: symmetric_group(3),
    "s4": lambda: symmetric_group(4),
    "s5": lambda: symmetric_group(5),
    "sl2_2": lambda: sl2_group(1),
    "sl2_4": lambda: sl2_group(2),
    "sl2_8": lambda: sl2_group(3),
}


def named_group(name: str) -> FiniteGroup:
    key = name.lower()
    if key in _NAMED_GROUPS:
        return _NAMED_GROUPS[key]()
    if key.startswith("z") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    raise GroupValidationError(f"unknown group name {name!r}")


# ==============================================================================
# Conjugacy-class hypergroups
# ==============================================================================


@dataclass
class ConjClassData:
    """Conjugacy classes with sizes and membership (indices into the group)."""

    classes: tuple          # tuple of sorted element-index tuples
    sizes: tuple
    class_of: tuple         # element index -> class index

    @property
    def count(self) -> int:
        return len(self.classes)


def conjugacy_classes(G: FiniteGroup) -> ConjClassData:
    """Classes by orbit closure under conjugation; the identity class comes
    first, the rest are ordered by least element index."""
    m = G.order
    class_of = [None] * m
    classes = []
    conjs = list(G.conjugators())
    for x in range(m):
        if class_of[x] is not None:
            continue
        orbit = {x}
        frontier = [x]
        while frontier:
            nxt = []
            for y in frontier:
                for g in conjs:
                    z = G.mul(G.mul(g, y), G.inv(g))
                    if z not in orbit:
                        orbit.add(z)
                        nxt.append(z)
            frontier = nxt
        cid = len(classes)
        classes.append(tuple(sorted(orbit)))
        for y in orbit:
            class_of[y] = cid
    order = sorted(range(len(classes)), key=lambda c: (G.identity not in classes[c], classes[c][0]))
    relabel = {old: new for new, old in enumerate(order)}
    classes = tuple(classes[old] for old in order)
    return ConjClassData(
        classes=classes,
        sizes=tuple(len(c) for c in classes),
        class_of=tuple(relabel[c] for c in class_of),
    )


class ConjugacyHypergroup(TableHypergroup):
    """Hypergroup on Conj(G) with exact rational structure constants."""

    def __init__(self, G: FiniteGroup, generator=None, seed: int = 0):
        data = conjugacy_classes(G)
        k = data.count
        table = {}
        rng = random.Random(seed)
        for ci in range(k):
            for cj in range(k):
                counts = [0] * k
                for c in data.classes[ci]:
                    for d in data.classes[cj]:
                        counts[data.class_of[G.mul(c, d)]] += 1
                denom = data.sizes[ci] * data.sizes[cj]
                terms = []
                for ce, cnt in enumerate(counts):
                    if cnt:
                        if cnt % data.sizes[ce]:
                            raise GroupValidationError(
                                f"class count {cnt} not divisible by |E|={data.sizes[ce]}"
                            )
                        terms.append((ce, cnt, denom))
                table[(ci, cj)] = terms
        inv_map = {c: data.class_of[G.inv(data.classes[c][0])] for c in range(k)}
        names = [
            "Ce" if c == data.class_of[G.identity] else f"C[{G.element_name(data.classes[c][0])}]"
            for c in range(k)
        ]
        super().__init__(
            tag=f"conj({G.name})",
            elements=list(range(k)),
            identity=data.class_of[G.identity],
            involution_map=inv_map,
            conv_table=table,
            names=names,
            commutative=True,
            generator=generator,
        )
        self.group = G
        self.class_data = data
        self.finite_size = k
        self._spot_check_representatives(rng)

    def _spot_check_representatives(self, rng: random.Random):
        # c_CDE must not depend on the chosen representative e0 of E.
        data, G = self.class_data, self.group
        k = data.count
        for _ in range(min(10, k * k)):
            ci = rng.randrange(k)
            cj = rng.randrange(k)
            ce = rng.randrange(k)
            counts = []
            for e0 in (data.classes[ce][0], rng.choice(data.classes[ce])):
                counts.append(sum(
                    1
                    for c in data.classes[ci]
                    for d in data.classes[cj]
                    if G.mul(c, d) == e0
                ))
            if counts[0] != counts[1]:
                raise GroupValidationError(
                    f"structure count depends on representative for classes ({ci},{cj},{ce})"
                )

    def class_size(self, c: int) -> int:
        return self.class_data.sizes[c]

    def resolve(self, key) -> int:
        """Class index from an index, a class name, or a member element name."""
        if isinstance(key, int):
            if 0 <= key < self.finite_size:
                return key
            raise CarrierError(f"class index {key} out of range")
        if key in self.names:
            return self.names.index(key)
        for i in range(self.group.order):
            if self.group.element_name(i) == key:
                return self.class_data.class_of[i]
        raise CarrierError(f"cannot resolve class {key!r}")


def conj_hypergroup(G: FiniteGroup, generator=None, seed: int = 0) -> ConjugacyHypergroup:
    """The commutative hypergroup on the conjugacy classes of a finite group."""
    return ConjugacyHypergroup(G, generator=generator, seed=seed)


def group_convolve(G: FiniteGroup, f: Sequence[Fraction], g: Sequence[Fraction]) -> list:
    """(f * g)(z) = sum_x f(x) g(x^{-1} z) on the group algebra, exact."""
    m = G.order
    out = [Fraction(0)] * m
    for x in range(m):
        if f[x] == 0:
            continue
        xinv = G.inv(x)
        fx = f[x]
        for z in range(m):
            gz = g[G.mul(xinv, z)]
            if gz:
                out[z] += fx * gz
    return out


def psi_isomorphism_check(G: FiniteGroup, samples: Optional[int] = None, seed: int = 0) -> dict:
    """Exact check that Psi(f)(C) = |C| f(C) intertwines the centre of the
    group algebra with the class hypergroup algebra, and preserves l1 norms.
    """
    H = conj_hypergroup(G, seed=seed)
    data = H.class_data
    k = data.count
    pairs = [(i, j) for i in range(k) for j in range(k)]
    if samples is not None and samples < len(pairs):
        pairs = random.Random(seed).sample(pairs, samples)
    failures = []
    for ci, cj in pairs:
        f = [Fraction(0)] * G.order
        g = [Fraction(0)] * G.order
        for x in data.classes[ci]:
            f[x] = Fraction(1, data.sizes[ci])
        for x in data.classes[cj]:
            g[x] = Fraction(1, data.sizes[cj])
        conv = group_convolve(G, f, g)
        for ce in range(k):
            vals = {conv[x] for x in data.classes[ce]}
            if len(vals) != 1:
                failures.append({"pair": (ci, cj), "reason": "group convolution not central"})
                break
        else:
            psi = [conv[data.classes[ce][0]] * data.sizes[ce] for ce in range(k)]
            hyper = H.convolve(ci, cj)
            if any(psi[ce] != hyper.coefficient(ce) for ce in range(k)):
                failures.append({"pair": (ci, cj), "reason": "convolutions differ"})
            group_norm = sum(abs(v) for v in conv)
            hyper_norm = sum(abs(c) for _, c in hyper.items())
            if group_norm != hyper_norm:
                failures.append({"pair": (ci, cj), "reason": "l1 norms differ"})
    return {
        "group": G.name,
        "classes": k,
        "pairs_checked": len(pairs),
        "exact": True,
        "passed": not failures,
        "failures": failures,
    }


# ==============================================================================
# Polynomial hypergroups and the SU(2) dual
# ==============================================================================


def _nat_enumerator():
    return iter(itertools.count())


def _is_nat(x) -> bool:
    return isinstance(x, int) and x >= 0


def _cheb_rule(n, m):
    if n == 0:
        return ([m], [1], [1])
    if m == 0:
        return ([n], [1], [1])
    lo, hi = abs(n - m), n + m
    return ([lo, hi], [1, 1], [2, 2])


def chebyshev() -> RuleHypergroup:
    """Chebyshev (first kind) polynomial hypergroup on N0."""
    return RuleHypergroup(
        tag="chebyshev",
        identity=0,
        rule=_cheb_rule,
        involution=lambda x: x,
        enumerator=_nat_enumerator,
        membership=_is_nat,
        commutative=True,
        generator=(0, 1),
        tau_rule=lambda x: x,
        certified_growth=(2.0, 1.0, "|F^{*n}| = n+1 <= 2n for n >= 1"),
        level_counts=(1,),
    )


def _su2_rule(l, lp):
    if l == 0:
        return ([lp], [1], [1])
    if lp == 0:
        return ([l], [1], [1])
    den = (l + 1) * (lp + 1)
    elems = []
    nums = []
    dens = []
    for r in range(abs(l - lp), l + lp + 1, 2):
        g = gcd(r + 1, den)
        elems.append(r)
        nums.append((r + 1) // g)
        dens.append(den // g)
    return (elems, nums, dens)


def su2_dual() -> RuleHypergroup:
    """The dual of SU(2): carrier {pi_l : l in N0}, Clebsch-Gordan convolution,
    trivial involution, h(pi_l) = (l+1)^2."""
    return RuleHypergroup(
        tag="su2hat",
        identity=0,
        rule=_su2_rule,
        involution=lambda x: x,
        enumerator=_nat_enumerator,
        membership=_is_nat,
        commutative=True,
        generator=(0, 1),
        tau_rule=lambda x: x,
        certified_growth=(2.0, 1.0, "|F^{*n}| = n+1 <= 2n for n >= 1"),
        level_counts=(1,),
    )


def polynomial_hypergroup(linearization, tag: str = "polynomial", generator=(0, 1),
                          commutative: bool = True) -> RuleHypergroup:
    """Wrap a user linearization rule (n, m) -> measure on N0.

    The rule may return a SparseMeasure, an iterable of (elem, coefficient)
    pairs, or a raw (elems, nums, dens) triple; output must be exact
    rational.  The library does not prove the rule defines a hypergroup:
    check_axioms at a truncation is the gatekeeper.
    """

    def rule(n, m):
        out = linearization(n, m)
        if isinstance(out, SparseMeasure):
            return out.raw_terms()
        if isinstance(out, tuple) and len(out) == 3 and isinstance(out[0], list):
            from . import _kernels as K

            return K.merge_terms(list(out[0]), list(out[1]), list(out[2]))
        mu = SparseMeasure.from_pairs(tag, out)
        if not mu.is_exact:
            raise DomainError("polynomial hypergroup rules must be exact rational")
        return mu.raw_terms()

    return RuleHypergroup(
        tag=tag,
        identity=0,
        rule=rule,
        involution=lambda x: x,
        enumerator=_nat_enumerator,
        membership=_is_nat,
        commutative=commutative,
        generator=generator,
    )


# ==============================================================================
# SU(n) dominant-weight data
# ==============================================================================


def dominant_weight_dimension(weight: Sequence[int]) -> int:
    """Exact dimension from the product formula; the product divides exactly."""
    n = len(weight)
    d = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            d *= Fraction(weight[i] - weight[j] + j - i, j - i)
    if d.denominator != 1 or d <= 0:
        raise InvalidParamError(f"dimension formula gave non-integer {d} for {weight}")
    return d.numerator


def su_n_dominant(n: int, cap: int) -> list:
    """All dominant weights (pi_1 >= ... >= pi_n = 0, pi_1 <= cap) in graded
    lexicographic order, with exact dimensions."""
    if n < 2:
        raise InvalidParamError("n must be >= 2")
    if cap < 0:
        raise InvalidParamError("cap must be >= 0")
    weights = []

    def rec(prefix, remaining_len, bound):
        if remaining_len == 1:
            weights.append(tuple(prefix) + (0,))
            return
        for v in range(min(bound, cap), -1, -1):
            rec(prefix + [v], remaining_len - 1, v)

    rec([], n, cap)
    weights = [w for w in weights if w[0] <= cap]
    weights.sort(key=lambda w: (sum(w), w))
    return [(w, dominant_weight_dimension(w)) for w in weights]


def su_n_count_by_first(n: int, cap: int) -> dict:
    """#{dominant weights with pi_1 = k} for k <= cap."""
    out = {k: 0 for k in range(cap + 1)}
    for w, _ in su_n_dominant(n, cap):
        out[w[0]] += 1
    return out


# ==============================================================================
# Table-backed hypergroup files and the registry
# ==============================================================================


def hypergroup_from_json(data: dict, validate: bool = True) -> TableHypergroup:
    """Finite hypergroup table file; eagerly validated at full size."""
    names = data["elements"]
    index = {name: i for i, name in enumerate(names)}
    identity = index[data["identity"]]
    inv_map = {index[a]: index[b] for a, b in data["involution"].items()}
    table = {}
    for key, terms in data["convolution"].items():
        a, b = key.split("|")
        table[(index[a], index[b])] = [
            (index[t["elem"]], int(t["num"]), int(t["den"])) for t in terms
        ]
    H = TableHypergroup(
        tag=data.get("tag", "table"),
        elements=list(range(len(names))),
        identity=identity,
        involution_map=inv_map,
        conv_table=table,
        names=names,
    )
    if validate:
        from .hypergroups import check_axioms

        report = check_axioms(H, len(names), assoc_cap=len(names))
        if not report.passed:
            failed = [k for k, s in report.sections.items() if not s.passed]
            raise CarrierError(f"table hypergroup fails axioms: {failed}")
    return H


def build_hypergroup(spec: str, base_dir: str = ".") -> Hypergroup:
    """Catalog registry: 'chebyshev', 'su2hat', 'conj:<group>',
    'rdp:<component>:<count|inf>', 'table:<path.json>'.

    <group> is a named group (s3, s4, z5, sl2_4, ...) or a path to a group
    JSON file.
    """
    parts = spec.split(":")
    key = parts[0]
    if key == "chebyshev":
        return chebyshev()
    if key == "su2hat":
        return su2_dual()
    if key == "conj":
        if len(parts) != 2:
            raise CarrierError("conj spec needs a group: conj:<name-or-file>")
        return conj_hypergroup(_group_from_spec(parts[1], base_dir))
    if key == "table":
        with open(f"{base_dir}/{parts[1]}" if not parts[1].startswith("/") else parts[1],
                  encoding="utf-8") as fh:
            return hypergroup_from_json(json.load(fh))
    if key == "rdp":
        if len(parts) < 3:
            raise CarrierError("rdp spec: rdp:<component spec>:<count|inf>")
        count = parts[-1]
        inner = ":".join(parts[1:-1])
        if count == "inf":
            return RestrictedProduct(factory=lambda i, s=inner: build_hypergroup(s, base_dir))
        k = int(count)
        return RestrictedProduct(components=[build_hypergroup(inner, base_dir) for _ in range(k)])
    raise CarrierError(f"unknown hypergroup spec {spec!r}")


def _group_from_spec(spec: str, base_dir: str) -> FiniteGroup:
    if spec.endswith(".json"):
        path = spec if spec.startswith("/") else f"{base_dir}/{spec}"
        with open(path, encoding="utf-8") as fh:
            return group_from_json(json.load(fh), name=spec.rsplit("/", 1)[-1][:-5])
    return named_group(spec)
