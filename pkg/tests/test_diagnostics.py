"""Omega scans, summability, norm bounds, lemma constants, and the classifier."""

import math
from fractions import Fraction

import pytest

from hyplab import diagnostics as D
from hyplab import weights as W
from hyplab.catalog import chebyshev, conj_hypergroup, su2_dual, symmetric_group
from hyplab.errors import (
    InvalidParamError,
    MissingConstantError,
    NoDecompositionError,
    RouteUnavailableError,
    WrongCarrierError,
)
from hyplab.hypergroups import restricted_power, restricted_product


@pytest.fixture(scope="module")
def s3():
    return conj_hypergroup(symmetric_group(3))


@pytest.fixture(scope="module")
def product_pair(s3):
    RP = restricted_power(lambda i: s3)
    w125 = W.table_weight(s3, {0: 1, 1: 2, 2: 5})
    return RP, W.product_weight(RP, repeat=w125)


def test_omega_trivial_weight_is_one():
    C = chebyshev()
    w = W.trivial_weight()
    assert all(D.omega(C, w, x, y) == 1 for x in range(6) for y in range(6))


def test_omega_spot_value_chebyshev():
    # omega_f(n) = f(n) + 2 with f(n) = n^2 + 1: Omega(1,1) = (3+7)/(2*16)
    C = chebyshev()
    wf = W.Weight("omega_f", lambda n: Fraction(n * n + 3), exact=True)
    assert D.omega(C, wf, 1, 1) == Fraction(5, 16)


def test_omega_closed_form_su2():
    # for the dimension weight: Omega(l,l') = 1/(l+1) + l(l+2)/(3(l+1)(l'+1)^2), l <= l'
    S = su2_dual()
    w = W.dimension_weight(S, 1)
    for l in range(8):
        for lp in range(l, 12):
            expected = Fraction(1, l + 1) + Fraction(l * (l + 2), 3 * (l + 1) * (lp + 1) ** 2)
            assert D.omega(S, w, l, lp) == expected


def test_omega_disjoint_slots_is_one(product_pair):
    RP, wprod = product_pair
    v = ((0, 1),)
    u = ((3, 2),)
    assert D.omega(RP, wprod, v, u) == 1


def test_omega_table_and_bounds(s3):
    w = W.table_weight(s3, {0: 1, 1: 2, 2: 5})
    table = D.omega_table(s3, w, 3)
    assert table.exact
    assert all(0 < v <= 1 for row in table.rows for v in row)
    assert table.rows[0][0] == 1  # identity pair
    # commutative: symmetric
    assert all(table.rows[i][j] == table.rows[j][i] for i in range(3) for j in range(3))
    csv = table.to_csv()
    assert csv.count("\n") == 4


def test_omega_table_workers_deterministic():
    S = su2_dual()
    w = W.polynomial_weight(S, 1)
    a = D.omega_table(S, w, 25, workers=1)
    b = D.omega_table(S, w, 25, workers=4)
    assert a.rows == b.rows


def test_cluster_scan_consistent_su2():
    S = su2_dual()
    scan = D.cluster_scan(S, W.polynomial_weight(S, 1), 120, threshold=2e-2)
    assert scan.verdict == D.CONSISTENT
    assert scan.crossing_index is not None
    env = [float(v) for v in scan.envelope]
    assert all(env[i] >= env[i + 1] - 1e-15 for i in range(len(env) - 1))


def test_cluster_scan_witness_trivial_weight():
    S = su2_dual()
    scan = D.cluster_scan(S, W.trivial_weight(), 40, threshold=1e-2)
    assert scan.verdict == D.WITNESS_AGAINST
    assert scan.witness_constant == 1.0
    assert scan.order_independent


def test_cluster_scan_witness_on_product(product_pair):
    RP, wprod = product_pair
    scan = D.cluster_scan(RP, wprod, 40, threshold=1e-2)
    assert scan.verdict == D.WITNESS_AGAINST


def test_cluster_scan_inconclusive_when_threshold_too_low():
    S = su2_dual()
    scan = D.cluster_scan(S, W.polynomial_weight(S, 1), 40, threshold=1e-9)
    assert scan.verdict == D.INCONCLUSIVE


def test_two_summability_zeta2_bracket():
    C = chebyshev()
    res = D.two_summability(C, W.polynomial_weight(C, 1), 1200)
    assert res.verdict == "CONVERGENT"
    assert res.total_low <= math.pi ** 2 / 6 <= res.total_high
    assert res.total_high - res.total_low < 1e-6


def test_two_summability_divergent_cases(product_pair):
    C = chebyshev()
    assert D.two_summability(C, W.trivial_weight(), 100).verdict == "DIVERGENT"
    # 2 beta <= d + 1 on the level-count scale: beta = 1/2 gives 2b = 1 <= 1
    res = D.two_summability(C, W.polynomial_weight(C, 0.5), 100)
    assert res.verdict == "DIVERGENT"
    # identical finite components: counts double per slot while weights stay
    # bounded, so the structural certificate fires
    RP, _ = product_pair
    walpha = W.omega_alpha_weight(RP, 1)
    assert D.two_summability(RP, walpha, 60).verdict == "DIVERGENT"


def test_two_summability_profile_injection():
    # SL(2, 2^n)-type tower via closed-form class profiles
    from hyplab.catalog import sl2_class_sizes

    s3 = conj_hypergroup(symmetric_group(3))
    RP = restricted_power(lambda i: s3)
    walpha = W.omega_alpha_weight(RP, 1)
    profiles = [(len(sl2_class_sizes(2 ** n)), max(sl2_class_sizes(2 ** n)))
                for n in range(1, 15)]
    res = D.two_summability(RP, walpha, 40, component_profiles=profiles)
    assert res.verdict == "DIVERGENT"


def test_two_summability_finite_carrier(s3):
    w = W.cardinality_weight(s3)
    res = D.two_summability(s3, w, 10)
    assert res.verdict == "CONVERGENT"
    assert res.total_high == res.partial == pytest.approx(1 + 1 / 9 + 1 / 4)


def test_t2_bound_weakly_additive_route():
    C = chebyshev()
    w = W.polynomial_weight(C, 1)
    nb = D.t2_upper_bound(C, w, 1200, "weakly-additive")
    assert nb.formula == "t2-weakly-additive"
    assert nb.value == pytest.approx(2 * math.sqrt(math.pi ** 2 / 6), rel=1e-4)
    # trivial lower bound: sup Omega <= T2 bound
    assert nb.constants["omega_sup_lower_bound"] <= nb.value
    with pytest.raises(NoDecompositionError):
        D.t2_upper_bound(C, W.trivial_weight(), 100, "weakly-additive")


def test_t2_bound_custom_on_finite(s3):
    w = W.trivial_weight()
    nb = D.t2_upper_bound(s3, w, 3, "custom", f1=lambda x, y: 1.0, f2=lambda x, y: 0.0)
    assert nb.value == pytest.approx(math.sqrt(3))


def test_t2_bound_su_n_route():
    nb = D.t2_upper_bound(None, None, 100, "su-n", n=2, beta=1, C_n=1.0)
    # 2 * A_1 * C_2 * sqrt(sum (1+k)^-2) = 2 sqrt(pi^2/6)
    assert nb.value == pytest.approx(2 * math.sqrt(math.pi ** 2 / 6), rel=1e-3)
    with pytest.raises(MissingConstantError):
        D.t2_upper_bound(None, None, 100, "su-n", n=2, beta=1)
    with pytest.raises(NoDecompositionError):
        D.t2_upper_bound(None, None, 100, "su-n", n=4, beta=1, C_n=1.0)


def test_norm_bound_routes_and_recompute():
    C = chebyshev()
    w1 = W.polynomial_weight(C, 1)
    nb = D.multiplication_norm_bound(C, w1, "2-summable", N=1200)
    assert nb.value == nb.recompute()
    assert nb.value == pytest.approx(2 * D.DEFAULT_KG * math.sqrt(math.pi ** 2 / 6), rel=1e-4)
    with pytest.raises(RouteUnavailableError):
        D.multiplication_norm_bound(C, w1, "polynomial")
    nb2 = D.multiplication_norm_bound(C, W.polynomial_weight(C, 2), "polynomial")
    assert nb2.value == nb2.recompute() > 0
    nbe = D.multiplication_norm_bound(C, W.exponential_weight(C, 0.5, 1.0), "exponential")
    assert nbe.value == nbe.recompute() > 0
    assert nbe.constants["M_range_capped"]
    with pytest.raises(RouteUnavailableError):
        D.multiplication_norm_bound(C, w1, "exponential")
    nbt = D.multiplication_norm_bound(C, w1, "t2-general", N=1200,
                                      decomposition="weakly-additive")
    assert nbt.value == pytest.approx(D.DEFAULT_KG * 2 * math.sqrt(math.pi ** 2 / 6), rel=1e-4)


def test_norm_bound_respects_kg():
    C = chebyshev()
    w1 = W.polynomial_weight(C, 1)
    a = D.multiplication_norm_bound(C, w1, "2-summable", kg=1.0, N=400)
    b = D.multiplication_norm_bound(C, w1, "2-summable", kg=2.0, N=400)
    assert b.value == pytest.approx(2 * a.value)


def test_exp_lemma_constants_exact_values():
    c = D.exp_lemma_constants(Fraction(1, 2), 1)
    assert c.floor_lemma == 24
    assert c.beta == 24
    assert c.K == 5308416
    assert c.range_capped
    assert c.p(0) == 0.0
    c2 = D.exp_lemma_constants(Fraction(1, 2), 4, beta=7)
    assert c2.K == 2401
    assert c2.M > 1
    with pytest.raises(InvalidParamError):
        D.exp_lemma_constants(Fraction(1, 2), 1, beta=2)  # below the floor
    with pytest.raises(InvalidParamError):
        D.exp_lemma_constants(Fraction(3, 2), 1)


def test_exp_lemma_cube_comparison_small_range():
    # K = (beta^2/(C a(1-a)))^{1/a} = 1 here, so the cube scan is feasible
    # and must agree with the separable reduction
    c = D.exp_lemma_constants(Fraction(1, 2), 16, beta=2)
    assert c.K == 1
    assert not c.range_capped
    assert c.cube_agrees is True
    assert c.floor_theorem is None
    c2 = D.exp_lemma_constants(Fraction(1, 2), 16, beta=2, growth_d=1)
    assert c2.floor_theorem >= c2.floor_lemma


def test_non_arens_witness(product_pair):
    RP, wprod = product_pair
    res = D.non_arens_witness(RP, wprod, 4)
    assert res.verdict == D.WITNESS_AGAINST
    assert len(res.witness_pairs) == 16
    assert res.order_independent
    with pytest.raises(WrongCarrierError):
        D.non_arens_witness(RP, W.omega_alpha_weight(RP, 1), 3)
    s3 = conj_hypergroup(symmetric_group(3))
    finite = restricted_product([s3, s3])
    with pytest.raises(WrongCarrierError):
        D.non_arens_witness(finite, wprod, 3)


def test_witness_on_group_like_components():
    # Z2 copies with the trivial weight degenerate to the classical fact
    from hyplab.catalog import cyclic_group

    HZ = conj_hypergroup(cyclic_group(2))
    RP = restricted_power(lambda i: HZ)
    w = W.product_weight(RP, repeat=W.trivial_weight())
    res = D.non_arens_witness(RP, w, 5)
    assert res.verdict == D.WITNESS_AGAINST and res.witness_constant == 1.0


def test_su_n_omega_bound():
    assert D.su_n_omega_bound(3, 0, (1, 0, 0), (2, 1, 0), C_n=5) == 1
    assert D.su_n_omega_bound(3, 1, (0, 0, 0), (0, 0, 0), C_n=1) == 2
    assert D.su_n_omega_bound(2, 2, (3, 0), (1, 0), C_n=1) == Fraction(9, 16)
    with pytest.raises(MissingConstantError):
        D.su_n_omega_bound(2, 1, (1, 0), (1, 0))


def test_su2_lee_calibration_dominates():
    cal = D.su2_lee_calibration(1, 40)
    assert cal["C_2"] >= cal["c_min"]
    assert cal["c_min"] < 1.0  # C_2 = 1 already dominates on the window
    S = su2_dual()
    w = W.dimension_weight(S, 1)
    for l in range(0, 40, 7):
        for lp in range(l, 40, 7):
            bound = D.su_n_omega_bound(2, 1, (l, 0), (lp, 0), C_n=cal["C_2"])
            assert D.omega(S, w, l, lp) <= bound


def test_classify_polynomial_chebyshev():
    C = chebyshev()
    cls = D.classify(C, W.polynomial_weight(C, 2), N=60)
    assert cls.arens_regular.status == D.CERTIFIED_YES
    assert cls.injective.status == D.CERTIFIED_YES
    assert "polynomial" in cls.injective.route
    assert cls.certificates


def test_classify_trivial_unknown():
    C = chebyshev()
    cls = D.classify(C, W.trivial_weight(), N=40)
    assert cls.arens_regular.status == D.UNKNOWN
    assert cls.injective.status == D.UNKNOWN
    assert "cluster_scan" in cls.evidence
    assert "remark" in cls.evidence


def test_classify_product_witnessed_no(product_pair):
    RP, wprod = product_pair
    cls = D.classify(RP, wprod)
    assert cls.arens_regular.status == D.WITNESSED_NO
    assert cls.injective.status == D.WITNESSED_NO


def test_classify_finite_carrier(s3):
    cls = D.classify(s3, W.cardinality_weight(s3))
    assert cls.arens_regular.status == D.CERTIFIED_YES
    assert cls.injective.status == D.CERTIFIED_YES
    assert "finite" in cls.arens_regular.route


def test_classify_exponential_gets_arens_via_injectivity():
    C = chebyshev()
    cls = D.classify(C, W.exponential_weight(C, 0.5, 1.0), N=40)
    assert cls.injective.status == D.CERTIFIED_YES
    assert cls.arens_regular.status == D.CERTIFIED_YES
    assert "operator algebra" in cls.arens_regular.route


def test_classification_json_round():
    C = chebyshev()
    cls = D.classify(C, W.polynomial_weight(C, 2), N=40)
    data = cls.to_json()
    assert data["verdicts"]["ArensRegular"]["status"] == D.CERTIFIED_YES
    assert isinstance(data["certificates"], list) and data["certificates"]
