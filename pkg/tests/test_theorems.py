"""Identity suites, the closure oracle, and irreducibility verdicts."""

import pytest

from glmn.superalg import LocalizedElement, RingContext, loc_eq
from glmn.derivations import (
    derive_loc,
    derive_poly,
    det_minus,
    highest_vector,
    minor,
    y_entry,
    y_row,
)
from glmn.weights import Weight
from glmn.theorems import (
    VERIFY_TARGETS,
    VerificationReport,
    closure_oracle,
    corollary_verdicts,
    decide_irreducible,
    verify_jacobi,
    verify_laplace9,
    verify_lemma1,
    verify_lemma2,
    verify_lemma3,
    verify_lemma3_4,
    verify_lemma4,
    verify_lemma5,
    verify_lemma6,
    verify_lemma10,
    verify_lemma11,
    verify_lemma13,
    verify_prop7,
    verify_prop12,
)


SHAPES = [(1, 1), (1, 2), (2, 1), (2, 2)]


# -- report plumbing ---------------------------------------------------------

def test_report_records_failures():
    ctx = RingContext(1, 1, 0)
    rep = VerificationReport("demo", 1, 1, 0)
    rep.check("good", LocalizedElement(ctx.one(), 0), LocalizedElement(ctx.one(), 0))
    assert rep.passed and rep.instances_checked == 1
    rep.check("bad", LocalizedElement(ctx.one(), 0), LocalizedElement(ctx.zero(), 0))
    assert not rep.passed
    out = rep.to_json()
    assert out["failures"] == [{"instance": "bad", "lhs": "1", "rhs": "0"}]
    assert out["context"]["m"] == 1 and out["passed"] is False


def test_registry_contains_all_targets():
    expected = {"lemma1", "lemma2", "lemma3", "lemma4", "lemma3_4", "lemma5",
                "lemma6", "lemma9", "laplace9", "lemma10", "lemma11",
                "lemma13", "prop7", "prop12", "jacobi"}
    assert expected <= set(VERIFY_TARGETS)
    assert VERIFY_TARGETS["lemma9"] == VERIFY_TARGETS["laplace9"]


# -- pinned instance counts and single instances -----------------------------

def test_lemma1_instance_counts():
    assert verify_lemma1(1, 1).instances_checked == 1
    assert verify_lemma1(2, 1).instances_checked == 4
    assert verify_lemma1(2, 2).instances_checked == 16


def test_lemma1_smallest_instance_is_odd_square():
    ctx = RingContext(1, 1, 0)
    y = y_entry(ctx, 1, 2)
    assert derive_loc(y, 1, 2).is_zero()
    assert (y * y).is_zero()


def test_lemma2_instance_count_and_parity():
    rep = verify_lemma2(1, 2)
    assert rep.passed and rep.instances_checked == 8
    # both sides of the residue-map rule are odd classes
    ctx = RingContext(1, 2, 0)
    from glmn.derivations import phi_entry
    lhs = derive_loc(phi_entry(ctx, 2, 3), 1, 2)
    assert lhs.parity() == 1


def test_lemma3_hand_instances():
    ctx = RingContext(1, 2, 0)
    lhs = derive_loc(det_minus(ctx, (2,)), 1, 3)
    assert loc_eq(lhs, det_minus(ctx, (3,)) * y_entry(ctx, 1, 2))
    # replacing the first column collides and drops out
    lhs = derive_loc(det_minus(ctx, (2, 3)), 1, 3)
    assert loc_eq(lhs, det_minus(ctx, (2, 3)) * y_entry(ctx, 1, 3))


def test_lemma5_hand_instances():
    ctx = RingContext(1, 1, 0)
    c11, c12 = ctx.gen(1, 1), ctx.gen(1, 2)
    assert derive_poly(c11 * c11, 1, 2) == 2 * (c11 * c12)
    assert verify_lemma5(Weight((2,), (0,))).passed
    assert verify_lemma5(Weight((0,), (0,))).passed
    # negative exponent goes through the quotient rule
    assert verify_lemma5(Weight((-1,), (0,))).passed
    v = highest_vector(ctx, Weight((-1,), (0,)))
    dv = derive_loc(v, 1, 2)
    assert loc_eq(dv, -1 * (v * y_entry(ctx, 1, 2)))


def test_lemma6_split():
    rep = verify_lemma6(1, 2)
    assert rep.passed
    # l beyond the column set expands through the replacement sum
    ctx = RingContext(1, 2, 0)
    lhs = derive_loc(det_minus(ctx, (2,)), 1, 3)
    rhs = det_minus(ctx, (3,)) * y_entry(ctx, 1, 2)
    assert loc_eq(lhs, rhs)


def test_laplace9_bracket_free_case():
    # bottom-right corner: expansion has an empty correction sum
    ctx = RingContext(2, 1, 0)
    lhs = LocalizedElement(minor(ctx, (1, 2), (1, 3)), 0)
    rhs = minor(ctx, (1, 2), (1, 2)) * y_entry(ctx, 2, 3)
    assert loc_eq(lhs, rhs)


def test_lemma10_reduces_to_lemma5_at_bottom_row():
    rep = verify_lemma10(Weight((1, 0), (0,)))
    assert rep.passed
    assert any("variant" in note for note in rep.notes)
    assert verify_lemma10(Weight((0, 0), (0,))).passed


def test_lemma11_hand_instances():
    ctx = RingContext(2, 1, 0)
    lhs = derive_loc(y_row(ctx, 2), 1, 3)
    rhs = y_row(ctx, 2) * y_entry(ctx, 1, 3)
    assert loc_eq(lhs, rhs)        # coefficient 2 - 1 - 1 + 1 = 1
    assert verify_lemma11(1, 1).passed
    assert verify_lemma11(1, 2).passed


def test_lemma13_hand_instances():
    ctx = RingContext(1, 2, 0)
    lhs = derive_loc(y_entry(ctx, 1, 2), 2, 3)
    assert loc_eq(lhs, y_entry(ctx, 1, 3))
    ctx = RingContext(2, 1, 0)
    assert derive_loc(y_entry(ctx, 1, 3), 1, 2).is_zero()
    assert derive_loc(y_row(ctx, 2) * y_row(ctx, 1), 1, 2).is_zero()


def test_prop7_hand_instances():
    ctx = RingContext(1, 1, 0)
    v = highest_vector(ctx, Weight((1,), (0,)))
    from glmn.derivations import row_derivation_chain
    assert loc_eq(row_derivation_chain(v, 1), LocalizedElement(ctx.gen(1, 2), 0))
    assert verify_prop7(Weight((0,), (0,))).passed
    # omega vanishes over the rationals: the chain output is zero
    rep = verify_prop7(Weight((1,), (0, 0)))
    assert rep.passed
    ctx12 = RingContext(1, 2, 0)
    v = highest_vector(ctx12, Weight((1,), (0, 0)))
    from glmn.derivations import full_lowering_chain
    assert full_lowering_chain(v).is_zero()


def test_prop12_mod_p_instance():
    # omega = 3 at weight (2|1): the chain image vanishes over F_3 only
    assert verify_prop12(Weight((2,), (1,)), 3).passed
    ctx = RingContext(1, 1, 3)
    v = highest_vector(ctx, Weight((2,), (1,)))
    from glmn.derivations import full_lowering_chain
    assert full_lowering_chain(v).is_zero()
    ctx0 = RingContext(1, 1, 0)
    v0 = highest_vector(ctx0, Weight((2,), (1,)))
    assert not full_lowering_chain(v0).is_zero()


# -- suites over small grids -------------------------------------------------

@pytest.mark.parametrize("m,n", SHAPES)
@pytest.mark.parametrize("p", [0, 5])
def test_shape_suites_pass(m, n, p):
    for fn in (verify_lemma1, verify_lemma2, verify_lemma3, verify_lemma4,
               verify_lemma6, verify_laplace9, verify_lemma11, verify_lemma13,
               verify_jacobi):
        rep = fn(m, n, p)
        assert rep.passed, (fn.__name__, rep.failures[:1])


def test_suites_have_instances_once_blocks_are_wide():
    # lemma13 needs a two-row block, jacobi a proper minor of the even block
    assert verify_lemma13(2, 2).instances_checked > 0
    assert verify_lemma13(1, 2).instances_checked > 0
    assert verify_jacobi(2, 1).instances_checked > 0
    for fn in (verify_lemma1, verify_lemma2, verify_lemma3, verify_lemma4,
               verify_lemma6, verify_laplace9, verify_lemma11):
        assert fn(1, 2).instances_checked > 0, fn.__name__


@pytest.mark.parametrize("p", [0, 5])
def test_weight_suites_pass(p):
    weights = [Weight((2, 0), (1, 0)), Weight((1, -1), (2, 1)),
               Weight((0, 0), (0, 0))]
    for lam in weights:
        for fn in (verify_lemma5, verify_lemma10, verify_prop7, verify_prop12):
            rep = fn(lam, p)
            assert rep.passed, (fn.__name__, lam.render(), rep.failures[:1])


def test_jacobi_odd_sign_cases_mod_p():
    # (3, n) has odd-signed complementary minors; regression for reduced
    # negation
    assert verify_jacobi(3, 1, 5).passed
    assert verify_jacobi(3, 1, 3).passed


def test_combined_lemma3_4_report():
    merged = verify_lemma3_4(1, 2)
    parts = (verify_lemma3(1, 2), verify_lemma4(1, 2))
    assert merged.target == "lemma3_4"
    assert merged.instances_checked == sum(r.instances_checked for r in parts)
    assert merged.passed


def test_prop_reports_note_coefficients():
    rep = verify_prop7(Weight((1,), (0,)))
    assert any("omega" in note for note in rep.notes)


# -- closure oracle ----------------------------------------------------------

def test_closure_oracle_reducible_case():
    res = closure_oracle(Weight((0,), (0,)))
    assert (res.dim_closure, res.dim_induced) == (1, 2)
    assert not res.irreducible
    assert res.kappa_multiplicity() == 0


def test_closure_oracle_irreducible_cases():
    res = closure_oracle(Weight((1,), (0,)))
    assert (res.dim_closure, res.dim_induced) == (2, 2)
    assert res.irreducible
    assert res.kappa_multiplicity() == 1
    res = closure_oracle(Weight((1,), (1,)))
    assert res.irreducible and res.dim_closure == 2


def test_closure_oracle_json_shape():
    out = closure_oracle(Weight((1,), (0,))).to_json()
    assert out["dim_closure"] == 2 and out["irreducible"] is True
    assert out["kappa_weight"] == "0|1"


def test_closure_oracle_kappa_pinpoint():
    # multiplicity at the fully lowered weight detects typicality
    atypical = closure_oracle(Weight((1, 0), (0, 0)))
    assert atypical.kappa_multiplicity() == 0 and not atypical.irreducible
    typical = closure_oracle(Weight((1, 0), (1,)))
    assert typical.kappa_multiplicity() >= 1


def test_closure_oracle_rejects_bad_requests():
    with pytest.raises(ValueError):
        closure_oracle(Weight((1,), (0,)), max_dim_guard=1)
    with pytest.raises(ValueError):
        closure_oracle(Weight((0,), (-1,)))


# -- verdicts ----------------------------------------------------------------

def test_decide_characteristic_zero():
    assert decide_irreducible(Weight((1,), (0,))).irreducible is True
    verdict = decide_irreducible(Weight((0,), (0,)))
    assert verdict.irreducible is False
    assert "atypical" in verdict.rationale


def test_decide_atypical_mod_p_overrides_even_verdict():
    verdict = decide_irreducible(Weight((2,), (1,)), 3, even_verdict=True)
    assert verdict.irreducible is False
    assert verdict.even_part == "external(irreducible)"


def test_decide_indeterminate_without_even_verdict():
    verdict = decide_irreducible(Weight((1,), (0,)), 5)
    assert verdict.irreducible is None
    assert verdict.even_part == "unavailable"
    assert verdict.to_json()["induced_irreducible"] == "indeterminate"


def test_decide_follows_supplied_even_verdict():
    verdict = decide_irreducible(Weight((1,), (0,)), 5, even_verdict=False)
    assert verdict.irreducible is False
    verdict = decide_irreducible(Weight((1,), (0,)), 5, even_verdict=True)
    assert verdict.irreducible is True


def test_corollaries():
    out = corollary_verdicts(Weight((1,), (0,)))
    assert out["kac"].irreducible is True
    assert out["weyl"].irreducible is True
    out = corollary_verdicts(Weight((0,), (0,)))
    assert out["kac"].irreducible is False
    out = corollary_verdicts(Weight((1,), (0,)), 5, even_verdict=False)
    assert out["weyl"].irreducible is False
    assert out["kac"].irreducible is None
