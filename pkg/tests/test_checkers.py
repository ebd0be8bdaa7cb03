import itertools
import json

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from opjensen import checkers
from opjensen.errors import ConvexityError, HypothesisError
from opjensen.functions import ScalarFunction
from opjensen.generate import GenConfig, gen_instance, gen_omega_pair
from opjensen.instance import Instance, run_instance
from opjensen.maps import MapFamily, PositiveLinearMap, compression_map
from opjensen.report import InequalityReport
from opjensen.reproduce import ex26_instance, ex34_instance
from opjensen.spectral import HermitianMatrix, Ordering, loewner_compare
from strategies import seeds

SQ = ScalarFunction.power(2)
NEG_SQ = ScalarFunction.power(2, scale=-1.0)
EXP = ScalarFunction.exp()
AFFINE = ScalarFunction.affine(2.0, -1.0)


def H(x):
    return HermitianMatrix(np.atleast_2d(np.asarray(x, dtype=float)))


def scalar_values(rep, *names):
    return [float(rep.matrices[n].array[0, 0]) for n in names]


def orderings(rep):
    return [link.verdict.ordering for link in rep.chain]


# -- four-role inequalities ---------------------------------------------------------

def _scalar_midpoint_instance(f, theorem="main.X1", m=1.0, M=3.0):
    c = 0.5 * (m + M)
    ops = {"A": [H(m)], "B": [H(c)], "C": [H(c)], "D": [H(M)]}
    return Instance(theorem, m, M, f, ops)


def test_main_ex26_passes_strictly():
    rep = checkers.check_theorem_main(ex26_instance(), "X1")
    assert rep.passed and rep.strict()
    assert rep.scalars["delta_f"] == pytest.approx(2766.3854)


def test_main_scalar_equality_in_first_link():
    rep = checkers.check_theorem_main(_scalar_midpoint_instance(SQ), "X1")
    lhs, mid, rhs = scalar_values(rep, "lhs", "middle", "rhs")
    # X~ = 1, so the middle is f(m) + f(M) - delta_f = 2 f(c)
    assert lhs == pytest.approx(8.0) and mid == pytest.approx(8.0) and rhs == pytest.approx(10.0)
    assert orderings(rep)[0] is Ordering.EQUAL


@pytest.mark.parametrize("variant", ["X1", "X2", "X3"])
def test_main_affine_collapses(variant):
    inst = ex26_instance()
    inst.function = AFFINE
    rep = checkers.check_theorem_main(inst, variant)
    assert all(o is Ordering.EQUAL for o in orderings(rep))


def test_main_concave_reverses():
    rep = checkers.check_theorem_main(_scalar_midpoint_instance(NEG_SQ), "X2")
    assert rep.passed and [lk.relation for lk in rep.chain] == [">=", ">="]


def test_main_rejects_unknown_variant():
    with pytest.raises(ValueError):
        checkers.check_theorem_main(ex26_instance(), "X9")


def test_main_hypothesis_failures_are_named():
    inst = _scalar_midpoint_instance(SQ)
    inst.operators["A"] = [H(1.5)]
    with pytest.raises(HypothesisError) as info:
        checkers.check_theorem_main(inst)
    assert info.value.hypothesis == "A[0] <= m"
    inst = _scalar_midpoint_instance(SQ)
    inst.operators["D"] = [H(3.5)]
    with pytest.raises(HypothesisError) as info:
        checkers.check_theorem_main(inst)
    assert "balance" in info.value.hypothesis


def test_main_certifies_convexity_over_hull():
    cube = ScalarFunction.polynomial([0, 0, 0, 1], "convex", certify_on=(0.5, 1.0))
    inst = _scalar_midpoint_instance(cube, m=-1.0, M=1.0)
    inst.operators["A"] = [H(-1.0)]
    with pytest.raises(ConvexityError):
        checkers.check_theorem_main(inst)


@pytest.mark.parametrize("modes", [dict(zip("BCAD", combo))
                                   for combo in itertools.product(("outer", "inner"), repeat=4)])
def test_every_mode_combination_holds(modes):
    for seed in range(6):
        inst = gen_instance("main.X1", GenConfig(dim=3, m=-0.5, M=1.5, seed=seed), n=3)
        rep = checkers.check_theorem_main(inst, modes=modes)
        assert rep.passed, rep.summary()


@given(seeds, st.integers(1, 4), st.sampled_from(["X1", "X2", "X3"]),
       st.sampled_from([SQ, EXP, NEG_SQ, ScalarFunction.power(4)]))
def test_main_holds_on_generated(seed, dim, variant, f):
    inst = gen_instance(f"main.{variant}", GenConfig(dim=dim, m=0.5, M=2.0, seed=seed % 2**64), f)
    rep = run_instance(inst)
    assert rep.passed and not rep.range_violations()


def test_cor24_scalar_equality_and_concave():
    inst = _scalar_midpoint_instance(SQ)
    rep = checkers.check_corollary_single_map(SQ, *(inst.ops(r)[0] for r in "ABCD"), inst.m, inst.M)
    assert orderings(rep)[0] is Ordering.EQUAL
    rep = checkers.check_corollary_single_map(NEG_SQ, *(inst.ops(r)[0] for r in "ABCD"), inst.m, inst.M)
    assert rep.passed and orderings(rep)[0] is Ordering.EQUAL


def test_cor24_requires_unital_map():
    phi = PositiveLinearMap([np.sqrt(2.0) * np.eye(1)])
    ops = [H(x) for x in (1.0, 2.0, 2.0, 3.0)]
    with pytest.raises(HypothesisError):
        checkers.check_corollary_single_map(SQ, *ops, 1.0, 3.0, phi=phi)


def test_cor24_compression_on_ex26_fails_per_index_balance():
    inst = ex26_instance()
    a, b, c, d = (inst.ops(r)[0] for r in "ABCD")
    with pytest.raises(HypothesisError) as info:
        checkers.check_corollary_single_map(inst.function, a, b, c, d, inst.m, inst.M,
                                            phi=compression_map(3, [0, 1]))
    assert "A[0] + D[0]" in info.value.hypothesis


@given(seeds, st.integers(1, 3), st.integers(1, 3))
def test_cor25_midpoint_reduces_to_omega(seed, dim, n):
    """With ``B_i = C_i = (A_i + D_i)/2`` forms 1 and 2 are twice the two Omega forms."""
    cfg = GenConfig(dim=dim, m=0.0, M=2.0, seed=seed % 2**64)
    inst = gen_instance("omega.mid-out", cfg, EXP, n=n)
    fam = inst.families["phi"]
    pairs = list(zip(inst.ops("A"), inst.ops("D")))
    mids = [0.5 * (a + d) for a, d in pairs]
    four = Instance("cor25.1", 0.0, 2.0, EXP, {"A": inst.ops("A"), "B": mids, "C": mids, "D": inst.ops("D")},
                    {"phi": fam})
    for form, omega_form in ((1, "mid-out"), (2, "mid-in")):
        rep = checkers.check_corollary_families(four, form)
        ref = checkers.check_omega_jensen(EXP, fam, pairs, 0.0, 2.0, omega_form)
        for name in ("lhs", "middle", "rhs"):
            dev = np.max(np.abs(rep.matrices[name].array - 2 * ref.matrices[name].array))
            assert dev <= 1e-10 * max(1.0, ref.matrices[name].norm)


def test_cor25_rejects_non_unital_family():
    inst = gen_instance("cor25.1", GenConfig(dim=2, seed=1), n=2)
    inst.families["phi"] = MapFamily.identities(2, 2)
    with pytest.raises(HypothesisError):
        checkers.check_corollary_families(inst, 1)


def test_cor25_default_family_is_plain_mean():
    inst = gen_instance("cor25.3", GenConfig(dim=2, seed=4), n=2)
    del inst.families["phi"]
    assert run_instance(inst).passed


# -- sums --------------------------------------------------------------------------------

def test_cor27_two_term_example():
    A, D = [H(0.0), H(0.0)], [H(1.0), H(1.0)]
    B, C = [H(0.3), H(0.7)], [H(0.7), H(0.3)]
    rep = checkers.check_corollary_sums(SQ, A, B, C, D, 0.0, 1.0)
    assert rep.passed
    # termwise: each tilde is 1/2 - 0.2 = 0.3, delta_f = 0.5
    assert scalar_values(rep, "eq2.lhs", "eq2.middle", "eq2.rhs") == pytest.approx([1.16, 1.4, 2.0])
    # summed: delta_{f,2} = 0 + 4 - 2 = 2, X~n = 1
    assert rep.scalars["delta_f_n"] == pytest.approx(2.0)
    assert scalar_values(rep, "eq1.lhs", "eq1.middle", "eq1.rhs") == pytest.approx([2.0, 2.0, 4.0])


def test_cor27_single_term_matches_cor24():
    inst = gen_instance("cor24", GenConfig(dim=3, m=-1.0, M=1.0, seed=8), EXP)
    ops = [inst.ops(r) for r in "ABCD"]
    one = checkers.check_corollary_sums(EXP, *ops, inst.m, inst.M)
    ref = checkers.check_corollary_single_map(EXP, *(x[0] for x in ops), inst.m, inst.M)
    for eq in ("eq1", "eq2"):
        for name in ("lhs", "rhs"):
            assert one.matrices[f"{eq}.{name}"].allclose(ref.matrices[name], atol=1e-10)
    assert one.matrices["eq1.middle"].allclose(ref.matrices["middle"], atol=1e-10)


def test_cor27_affine_equalities():
    inst = gen_instance("cor27", GenConfig(dim=2, seed=3), n=3)
    rep = checkers.check_corollary_sums(AFFINE, *(inst.ops(r) for r in "ABCD"), inst.m, inst.M)
    assert all(o is Ordering.EQUAL for o in orderings(rep))


# -- Jensen-Mercer and Petrovic -----------------------------------------------------------

def test_jm_endpoint_spectrum():
    fam = MapFamily.single(compression_map(2, [0, 1]))
    rep = checkers.check_jensen_mercer(SQ, fam, [HermitianMatrix.diag([0.0, 2.0])], 0, 2)
    assert rep.matrices["lhs"].allclose(np.diag([4.0, 0.0]))
    assert rep.matrices["middle"].allclose(np.diag([4.0, 0.0]))
    assert rep.matrices["B~"].allclose(np.zeros((2, 2)))


def test_jm_midpoint_equality():
    fam = MapFamily.single(compression_map(1, [0]))
    rep = checkers.check_jensen_mercer(EXP, fam, [H(1.5)], 1.0, 2.0)
    lhs, mid, _ = scalar_values(rep, "lhs", "middle", "rhs")
    assert lhs == pytest.approx(mid)


def test_jm_affine_and_unital():
    fam = MapFamily.single(compression_map(2, [1]))
    rep = checkers.check_jensen_mercer(ScalarFunction.affine(1, 0), fam, [HermitianMatrix.diag([0.2, 0.7])], 0, 1)
    assert all(o is Ordering.EQUAL for o in orderings(rep))
    with pytest.raises(HypothesisError):
        checkers.check_jensen_mercer(SQ, MapFamily.identities(2, 1), [H(0.5), H(0.5)], 0, 1)


def test_petrovic_scalar_example():
    rep = checkers.check_petrovic(SQ, [H(1.0), H(1.0)], 2.0)
    assert rep.scalars["delta_f"] == 2.0
    assert scalar_values(rep, "lhs", "middle", "rhs") == pytest.approx([2.0, 2.0, 4.0])


def test_petrovic_endpoint_spectra():
    b1 = HermitianMatrix.diag([0.0, 3.0])
    rep = checkers.check_petrovic(EXP, [b1, 3.0 - b1], 3.0)
    assert rep.matrices["B~"].allclose(np.zeros((2, 2)))
    assert rep.matrices["middle"] == rep.matrices["rhs"]


def test_petrovic_hypotheses():
    with pytest.raises(HypothesisError):
        checkers.check_petrovic(SQ, [H(1.0), H(0.5)], 2.0)
    with pytest.raises(HypothesisError):
        checkers.check_petrovic(SQ, [H(-0.5), H(2.5)], 2.0)


# -- Omega ----------------------------------------------------------------------------------

def test_omega_membership():
    inst = ex34_instance()
    assert checkers.omega_member(inst.ops("A")[0], inst.ops("D")[0], 2, 5)
    assert checkers.omega_member(HermitianMatrix.scalar(1, 2), HermitianMatrix.scalar(4, 2), 1, 4)
    assert not checkers.omega_member(HermitianMatrix.scalar(4, 2), HermitianMatrix.scalar(1, 2), 1, 4)


@pytest.mark.parametrize("lam", [0.0, 1.0])
def test_omega_lambda_endpoint_weights(lam):
    # A + D = 2m puts the midpoint on the boundary, X~ = 0 and the chain is an equality
    rep = checkers.check_omega_jensen(SQ, None, [(H(-1.0), H(1.0))], 0.0, 1.0, "lambda", lam=lam)
    lhs, mid, rhs = scalar_values(rep, "lhs", "middle", "rhs")
    assert lhs == rhs == mid
    assert rep.passed


def test_omega_lambda_form_fails_off_the_midpoint_weight():
    # a = m = 0, d = M = 2, lam = 0: lhs f(2) = 4, X~ = 1/2, delta_f = 2, middle = 3
    rep = checkers.check_omega_jensen(SQ, None, [(H(0.0), H(2.0))], 0.0, 2.0, "lambda", lam=0.0)
    assert scalar_values(rep, "lhs", "middle", "rhs") == pytest.approx([4.0, 3.0, 4.0])
    assert not rep.passed
    half = checkers.check_omega_jensen(SQ, None, [(H(0.0), H(2.0))], 0.0, 2.0, "lambda", lam=0.5)
    assert half.passed


def test_omega_single_pair_defaults_to_identity_map():
    inst = ex34_instance()
    pair = [(inst.ops("A")[0], inst.ops("D")[0])]
    rep = checkers.check_omega_jensen(EXP, None, pair, 2, 5, "mid-in")
    assert rep.passed and rep.matrices["lhs"].dim == 3


def test_omega_errors():
    with pytest.raises(ValueError):
        checkers.check_omega_jensen(SQ, None, [(H(0.0), H(2.0))], 0, 2, "sideways")
    with pytest.raises(ValueError):
        checkers.check_omega_jensen(SQ, None, [(H(0.0), H(2.0))], 0, 2, "lambda")
    with pytest.raises(HypothesisError):
        checkers.check_omega_jensen(SQ, None, [(H(2.0), H(0.0))], 0, 2)


def test_opconvex_needs_operator_convexity():
    with pytest.raises(HypothesisError):
        checkers.check_omega_operator_convex(ScalarFunction.power(4), None, [(H(0.0), H(2.0))], 0, 2)


def test_opconvex_ex34_with_square():
    inst = ex34_instance()
    pairs = [(inst.ops("A")[0], inst.ops("D")[0])]
    rep = checkers.check_omega_operator_convex(SQ, inst.families["phi"], pairs, 2, 5)
    assert rep.passed and len(rep.chain) == 4


@given(seeds, st.integers(1, 4), st.integers(1, 3), st.sampled_from(["mid-out", "mid-in"]))
def test_omega_holds_on_generated(seed, dim, n, form):
    inst = gen_instance(f"omega.{form}", GenConfig(dim=dim, m=-1.0, M=1.0, seed=seed % 2**64), EXP, n=n)
    assert run_instance(inst).passed


# -- superadditivity -----------------------------------------------------------------------------

def test_superadd_scalar_examples():
    rep = checkers.check_superadditivity(SQ, [H(1.0), H(1.0)], 1.0)
    assert scalar_values(rep, "lhs", "middle", "rhs") == pytest.approx([2.0, 4.0, 4.0])
    rep = checkers.check_superadditivity(SQ, [H(0.6), H(0.8)], 1.0)
    # C~ = (0.4, 0.2), delta_f = 0.5
    assert scalar_values(rep, "lhs", "middle", "rhs") == pytest.approx([1.0, 1.66, 1.96])
    assert rep.strict()


def test_superadd_affine_through_origin():
    rep = checkers.check_superadditivity(ScalarFunction.affine(3, 0), [H(0.6), H(0.8)], 1.0)
    assert all(o is Ordering.EQUAL for o in orderings(rep))


def test_superadd_needs_f0_sign():
    with pytest.raises(HypothesisError) as info:
        checkers.check_superadditivity(EXP, [H(0.6), H(0.8)], 1.0)
    assert info.value.hypothesis == "f(0) <= 0"
    assert checkers.check_superadditivity(ScalarFunction.exp(offset=-1.0), [H(0.6), H(0.8)], 1.0).passed
    assert checkers.check_superadditivity(ScalarFunction.log(shift=1.0), [H(0.6), H(0.8)], 1.0).passed
    with pytest.raises(HypothesisError):
        checkers.check_superadditivity(ScalarFunction.log(shift=1.0, offset=-1.0), [H(0.6), H(0.8)], 1.0)


def test_superadd_order_hypotheses():
    with pytest.raises(HypothesisError):
        checkers.check_superadditivity(SQ, [H(0.3), H(0.3)], 1.0)
    with pytest.raises(HypothesisError):
        checkers.check_superadditivity(SQ, [H(1.2), H(0.3)], 1.0)


# -- order/monotonicity conditions ------------------------------------------------------------------

def test_monotone_scalar_equality():
    rep = checkers.check_monotone_conditions(SQ, H(0.0), H(1.0), H(1.0), H(2.0), 0.0, 2.0, "i")
    assert scalar_values(rep, "lhs", "middle") == pytest.approx([2.0, 2.0])


def test_monotone_exp_strict():
    rep = checkers.check_monotone_conditions(EXP, H(0.0), H(0.5), H(0.6), H(1.8), 0.2, 1.0, "i")
    assert rep.chain[0].strict()


def test_monotone_affine_increasing():
    rep = checkers.check_monotone_conditions(ScalarFunction.affine(1, 0), H(0.0), H(0.5), H(0.6), H(1.8),
                                             0.2, 1.0, "i")
    assert rep.passed and rep.matrices["middle"] == rep.matrices["rhs"]


def test_monotone_scalar_half_named():
    with pytest.raises(HypothesisError) as info:
        checkers.check_monotone_conditions(SQ, H(-4.0), H(-2.0), H(-2.0), H(0.0), -3.0, -1.0, "i")
    assert "scalar half" in info.value.hypothesis


def test_monotone_operator_half_named():
    with pytest.raises(HypothesisError) as info:
        checkers.check_monotone_conditions(SQ, H(0.0), H(0.5), H(0.5), H(2.0), 0.0, 2.0, "ii")
    assert "operator half" in info.value.hypothesis


def test_monotone_direction_checked():
    with pytest.raises(HypothesisError):
        checkers.check_monotone_conditions(NEG_SQ, H(0.0), H(1.0), H(1.0), H(2.0), 0.0, 2.0, "i")
    with pytest.raises(ValueError):
        checkers.check_monotone_conditions(SQ, H(0.0), H(1.0), H(1.0), H(2.0), 0.0, 2.0, "v")


@given(seeds, st.integers(1, 4), st.sampled_from([
    ("i", EXP, 0.0, 1.0), ("ii", SQ, -2.0, -1.0), ("iii", NEG_SQ, 0.5, 1.5), ("iv", ScalarFunction.log(), 2.0, 3.0),
]))
def test_monotone_holds_on_generated(seed, dim, case):
    cond, f, m, M = case
    inst = gen_instance(f"monotone.{cond}", GenConfig(dim=dim, m=m, M=M, seed=seed % 2**64), f)
    assert run_instance(inst).passed


def test_power_pairs_examples():
    rep = checkers.check_power_pairs(H(1.0), H(1.5), H(1.5), H(2.0), 1.0, 2.0, 1, 2, "i")
    assert rep.scalars["delta_p"] == 0
    assert scalar_values(rep, "lhs", "middle", "rhs") == pytest.approx([3.0, 5.0, 5.0])
    rep = checkers.check_power_pairs(H(1.0), H(1.5), H(1.6), H(2.5), 1.2, 2.0, 2, 3, "i")
    assert rep.scalars["delta_p"] == pytest.approx(0.32)
    assert float(rep.matrices["X~"].array[0, 0]) == pytest.approx(0.875)
    assert scalar_values(rep, "lhs", "middle", "rhs") == pytest.approx([4.81, 16.345, 16.625])


def test_power_pairs_hypotheses():
    ops = (H(1.0), H(1.5), H(1.6), H(2.5), 1.2, 2.0)
    with pytest.raises(HypothesisError):
        checkers.check_power_pairs(*ops, 3, 2, "i")
    with pytest.raises(HypothesisError):
        checkers.check_power_pairs(*ops, 0.5, 1, "i")
    with pytest.raises(HypothesisError):
        checkers.check_power_pairs(*ops, 1, 1, "ii")
    with pytest.raises(HypothesisError):
        checkers.check_power_pairs(H(0.5), H(1.5), H(1.6), H(2.5), 1.2, 2.0, 2, 2, "i")


# -- reports ------------------------------------------------------------------------------------------

@pytest.mark.parametrize("theorem", ["main.X2", "cor25.3", "cor27", "jm", "petrovic", "omega.mid-in",
                                     "omega.opconvex", "superadd", "monotone.i", "power-pairs.i", "lemma"])
def test_report_json_round_trip(theorem):
    inst = gen_instance(theorem, GenConfig(dim=2, m=1.5, M=3.0, seed=5))
    rep = run_instance(inst)
    back = InequalityReport.loads(rep.dumps())
    assert back.to_json() == rep.to_json()
    assert back.passed == rep.passed


def test_report_rejects_inconsistent_flag():
    rep = run_instance(gen_instance("jm", GenConfig(dim=2, seed=2)))
    d = json.loads(rep.dumps())
    d["passed"] = not d["passed"]
    with pytest.raises(ValueError):
        InequalityReport.from_json(d)


def test_range_violations_detected():
    rep = run_instance(gen_instance("monotone.i", GenConfig(dim=2, seed=2)))
    assert rep.range_violations() == []
    rep.matrices["X~"] = rep.matrices["X~"] + 2.0
    assert any("above" in msg for msg in rep.range_violations())
    rep.scalars["delta_f"] = -1.0
    assert any("delta_f" in msg for msg in rep.range_violations())


def test_verify_false_skips_hypotheses():
    inst = _scalar_midpoint_instance(SQ)
    inst.operators["A"] = [H(1.5)]
    inst.operators["D"] = [H(2.5)]
    rep = checkers.check_theorem_main(inst, verify=False)
    assert isinstance(rep, InequalityReport)
    assert loewner_compare(rep.matrices["lhs"], rep.matrices["rhs"]).ordering is not Ordering.INCOMPARABLE
