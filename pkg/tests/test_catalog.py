"""Catalog constructions against independent brute-force oracles."""

from fractions import Fraction

import pytest

from hyplab.catalog import (
    chebyshev,
    conj_hypergroup,
    cyclic_group,
    dominant_weight_dimension,
    group_convolve,
    group_from_json,
    hypergroup_from_json,
    named_group,
    polynomial_hypergroup,
    psi_isomorphism_check,
    sl2_class_sizes,
    sl2_group,
    su2_dual,
    su_n_count_by_first,
    su_n_dominant,
    symmetric_group,
)
from hyplab.errors import CarrierError, GroupValidationError, InvalidParamError
from hyplab.hypergroups import check_axioms
from hyplab.measures import measure_to_json, total_mass


def naive_class_convolution(G, H, ci, cj):
    """Oracle: convolve class indicators in the full group algebra and read
    off the class-basis coefficients via Psi."""
    data = H.class_data
    f = [Fraction(0)] * G.order
    g = [Fraction(0)] * G.order
    for x in data.classes[ci]:
        f[x] = Fraction(1, data.sizes[ci])
    for x in data.classes[cj]:
        g[x] = Fraction(1, data.sizes[cj])
    conv = group_convolve(G, f, g)
    return {ce: conv[data.classes[ce][0]] * data.sizes[ce]
            for ce in range(data.count) if conv[data.classes[ce][0]] != 0}


@pytest.mark.parametrize("group_factory", [lambda: symmetric_group(3),
                                           lambda: symmetric_group(4),
                                           lambda: sl2_group(2)])
def test_conj_structure_constants_match_group_algebra(group_factory):
    G = group_factory()
    H = conj_hypergroup(G)
    for ci in range(H.finite_size):
        for cj in range(H.finite_size):
            mu = H.convolve(ci, cj)
            assert total_mass(mu) == 1
            assert dict(mu.items()) == naive_class_convolution(G, H, ci, cj)


def test_s3_worked_values():
    H = conj_hypergroup(symmetric_group(3))
    T, R = 1, 2
    assert dict(H.convolve(T, T).items()) == {0: Fraction(1, 3), R: Fraction(2, 3)}
    assert dict(H.convolve(R, R).items()) == {0: Fraction(1, 2), R: Fraction(1, 2)}
    assert H.class_data.sizes == (1, 3, 2)
    assert [H.haar(c) for c in range(3)] == [1, 3, 2]


def test_conj_of_abelian_group_is_the_group():
    H = conj_hypergroup(cyclic_group(5))
    assert H.finite_size == 5
    for i in range(5):
        for j in range(5):
            mu = H.convolve(i, j)
            assert len(mu) == 1 and total_mass(mu) == 1
    # nontrivial involution: inverse classes
    assert H.involve(1) != 1
    assert check_axioms(H, 5, assoc_cap=5).passed


def test_conj_mass_identity():
    # sum_E c_CDE |E| = |C||D| is total_mass == 1 after normalization; check
    # the raw counts too
    G = symmetric_group(4)
    H = conj_hypergroup(G)
    data = H.class_data
    for ci in range(data.count):
        for cj in range(data.count):
            counts = {}
            for c in data.classes[ci]:
                for d in data.classes[cj]:
                    e = data.class_of[G.mul(c, d)]
                    counts[e] = counts.get(e, 0) + 1
            assert sum(counts.values()) == data.sizes[ci] * data.sizes[cj]


def test_psi_isomorphism():
    assert psi_isomorphism_check(symmetric_group(3))["passed"]
    assert psi_isomorphism_check(symmetric_group(4))["passed"]
    trivial = psi_isomorphism_check(cyclic_group(1))
    assert trivial["passed"] and trivial["pairs_checked"] == 1


def test_chebyshev_rule():
    C = chebyshev()
    assert dict(C.convolve(2, 2).items()) == {0: Fraction(1, 2), 4: Fraction(1, 2)}
    assert dict(C.convolve(5, 3).items()) == {2: Fraction(1, 2), 8: Fraction(1, 2)}
    assert list(C.convolve(0, 9).items()) == [(9, Fraction(1))]


def test_su2_rule_and_support():
    S = su2_dual()
    assert dict(S.convolve(1, 2).items()) == {1: Fraction(1, 3), 3: Fraction(2, 3)}
    for l in range(12):
        for lp in range(12):
            mu = S.convolve(l, lp)
            assert total_mass(mu) == 1
            assert mu.support() == tuple(range(abs(l - lp), l + lp + 1, 2))
            coeff = mu.coefficient(abs(l - lp))
            assert coeff == Fraction(abs(l - lp) + 1, (l + 1) * (lp + 1))


def test_su2_mass_identity_is_exact():
    for l in range(40):
        for lp in range(40):
            assert sum(r + 1 for r in range(abs(l - lp), l + lp + 1, 2)) == (l + 1) * (lp + 1)


def test_polynomial_hypergroup_wraps_chebyshev():
    C = chebyshev()
    P = polynomial_hypergroup(lambda n, m: C.convolve(n, m), tag="chebyshev")
    for n in range(8):
        for m in range(8):
            assert P._convolve_raw(n, m) == C._convolve_raw(n, m)
    assert check_axioms(P, 25, assoc_cap=8).passed


def test_su_n_dominant_dimensions():
    dims = dict(su_n_dominant(3, 2))
    assert dims[(1, 0, 0)] == 3
    assert dims[(1, 1, 0)] == 3
    assert dims[(2, 1, 0)] == 8
    assert dims[(2, 2, 0)] == 6
    assert dominant_weight_dimension((5, 0)) == 6  # SU(2): l + 1
    counts = su_n_count_by_first(3, 20)
    assert all(counts[k] == k + 1 for k in range(21))
    with pytest.raises(InvalidParamError):
        su_n_dominant(1, 3)


def test_sl2_groups_and_class_profile():
    for n, order in ((1, 6), (2, 60)):
        G = sl2_group(n)
        assert G.order == order
        H = conj_hypergroup(G)
        assert sorted(H.class_data.sizes) == sorted(sl2_class_sizes(2 ** n))
    # SL(2,2) is S3 in disguise
    a = conj_hypergroup(sl2_group(1))
    b = conj_hypergroup(symmetric_group(3))
    assert a.class_data.sizes == b.class_data.sizes


def test_sl2_class_product_inequality():
    # |D| <= 2 (|C1| + |C2|) whenever D meets C1 C2, for the small members
    for n in (1, 2):
        H = conj_hypergroup(sl2_group(n))
        sizes = H.class_data.sizes
        for c1 in range(H.finite_size):
            for c2 in range(H.finite_size):
                for d in H.convolve(c1, c2).support():
                    assert sizes[d] <= 2 * (sizes[c1] + sizes[c2])


def test_group_validation_errors():
    with pytest.raises(GroupValidationError):
        group_from_json({"order": 2, "table": [[0, 1], [1, 1]]})  # not a group
    with pytest.raises(GroupValidationError):
        named_group("nosuch")
    with pytest.raises(GroupValidationError):
        group_from_json({"degree": 2, "generators": [[0, 0]]})  # not a permutation


def test_group_from_table_json():
    G = group_from_json({"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})
    assert G.order == 3
    assert G.inv(1) == 2


def test_hypergroup_table_json_round_trip():
    H = conj_hypergroup(symmetric_group(3))
    data = {
        "elements": H.names,
        "identity": H.names[0],
        "involution": {H.names[i]: H.names[H.involve(i)] for i in range(3)},
        "convolution": {},
    }
    for i in range(3):
        for j in range(3):
            data["convolution"][f"{H.names[i]}|{H.names[j]}"] = \
                measure_to_json(H.convolve(i, j))["terms"]
            for t in data["convolution"][f"{H.names[i]}|{H.names[j]}"]:
                t["elem"] = H.names[t["elem"]]
    T = hypergroup_from_json(data)
    assert T.finite_size == 3
    for i in range(3):
        for j in range(3):
            assert T._convolve_raw(i, j) == H._convolve_raw(i, j)


def test_hypergroup_table_json_rejects_bad_mass():
    data = {
        "elements": ["e", "a"],
        "identity": "e",
        "involution": {"e": "e", "a": "a"},
        "convolution": {
            "e|e": [{"elem": "e", "num": "1", "den": "1"}],
            "e|a": [{"elem": "a", "num": "1", "den": "1"}],
            "a|e": [{"elem": "a", "num": "1", "den": "1"}],
            "a|a": [{"elem": "e", "num": "1", "den": "2"}],  # mass 1/2
        },
    }
    with pytest.raises(CarrierError):
        hypergroup_from_json(data)
