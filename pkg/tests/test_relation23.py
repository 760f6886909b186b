from fractions import Fraction

import pytest

from mopsrel import (
    ContractError,
    DomainError,
    FormatError,
    Relation23,
    RelationTag,
    check_by_constants,
    check_by_equations,
    chebyshev_case,
    classify,
    generate_q,
    induced_recurrence,
    jacobi_chain,
    JacobiParams,
    moments_from_recurrence,
    mops_from_recurrence,
    regularity_criterion,
    relation_constants,
    v_moments_from_relation,
    verify_functional_relation,
)
from conftest import rel_from7, random_gated_instance


def test_convention_enforced():
    with pytest.raises(FormatError, match="convention"):
        Relation23([1], [0], [0, 0])
    with pytest.raises(FormatError, match="convention"):
        Relation23([0], [0], [0, 1])
    # a bare prefix that cannot violate anything yet is fine
    Relation23([0], [], [0])


def test_classify_all_tags():
    assert classify(rel_from7(0, 0, 0, 0, 0, 0, 0)).tag is RelationTag.TRIVIAL11
    assert classify(rel_from7(0, 2, 0, 1, 0, 2, 0)).tag is RelationTag.TYPE12
    case13 = classify(rel_from7(0, 0, 0, 0, 3, 1, 0))
    assert case13.tag is RelationTag.TYPE13
    assert case13.reduced["b"][2] == 1
    assert classify(rel_from7(0, 1, 5, 1, 2, 2, 0)).tag is RelationTag.TYPE21
    assert classify(rel_from7(0, 0, 1, 1, 0, 1, 0)).tag is RelationTag.TYPE22
    assert classify(rel_from7(0, 0, 1, 0, 0, 1, 1)).tag is RelationTag.NONDEGENERATE23


def test_classify_reduced_coefficients():
    case12 = classify(rel_from7(1, 2, 0, 3, 2, 4, 0))
    # gate: t2 - r2 (s1 - r1) = 4 - 2*2 = 0 and s1 != r1
    assert case12.tag is RelationTag.TYPE12
    assert case12.reduced["a"][1] == 2
    case22 = classify(rel_from7(0, 0, 1, 1, 1, 2, 0))
    assert case22.tag is RelationTag.TYPE22
    assert case22.reduced["c"][2] == Fraction(-2)


def test_relation_json_round_trip():
    rel = rel_from7(1, 2, 3, "1/2", 5, "2/3", 7, pad=2)
    assert Relation23.from_json(rel.to_json()).r == rel.r
    with pytest.raises(FormatError):
        Relation23.from_json({"r": [], "s": []})


def test_generate_q_unfolds_relation():
    rel = rel_from7(0, 0, 1, 0, 0, 1, 1, pad=1)
    from mopsrel import chebyshev_kind

    p = mops_from_recurrence(chebyshev_kind(2, 5), 5)
    q = generate_q(p, rel)
    for n in range(1, 5):
        lhs = q[n] + rel.r[n] * q[n - 1]
        rhs = p[n] + rel.s[n] * p[n - 1]
        if n >= 2:
            rhs = rhs + rel.t[n] * p[n - 2]
        assert lhs == rhs


def test_checkers_reject_degenerate_relation():
    from mopsrel import RecurrencePair

    rec = RecurrencePair([0] * 8, ["1/4"] * 8)
    rel = rel_from7(0, 2, 0, 1, 0, 2, 0, pad=5)  # Type12
    with pytest.raises(ContractError, match="Type12"):
        check_by_equations(rec, rel, 5)
    with pytest.raises(ContractError, match="Type12"):
        check_by_constants(rec, rel, 5)


def test_checkers_reject_zero_hypothesis_entries():
    from mopsrel import RecurrencePair

    rec = RecurrencePair([0] * 8, ["1/4"] * 8)
    r = [0, 0, 0, 1, 1, 0, 1, 1]
    s = [0] * 8
    t = [0, 0, 1, 1, 1, 1, 1, 1]
    rel = Relation23(r, s, t)
    with pytest.raises(ContractError, match="r_5"):
        check_by_equations(rec, rel, 6)


def test_positive_instance_from_worked_case():
    rep = chebyshev_case(6)
    eq = check_by_equations(rep.u_rec, rep.rel, 6)
    ct = check_by_constants(rep.u_rec, rep.rel, 6)
    assert eq.is_mops and ct.is_mops
    assert eq.failures == () and ct.failures == ()
    assert ct.constants == (Fraction(1), Fraction(0), Fraction(1))
    fr = relation_constants(rep.u_rec, rep.rel)
    assert (fr.a, fr.b, fr.c) == ct.constants
    assert fr.lam == Fraction(3, 2)


def test_perturbation_is_caught_by_both_checkers():
    rep = chebyshev_case(6)
    t = list(rep.rel.t)
    t[4] += 1
    broken = Relation23(rep.rel.r, rep.rel.s, t)
    eq = check_by_equations(rep.u_rec, broken, 6)
    ct = check_by_constants(rep.u_rec, broken, 6)
    assert not eq.is_mops and not ct.is_mops
    assert any(f.condition == "eqn2" and f.n == 4 for f in eq.failures) or any(
        f.condition in ("ci2", "ci3") for f in eq.failures
    )
    assert any(
        f.condition == "startup" or f.condition.endswith("_constant")
        for f in ct.failures
    )


def test_random_instances_agree(rng):
    for _ in range(40):
        rec, rel = random_gated_instance(rng, 6)
        eq = check_by_equations(rec, rel, 6)
        ct = check_by_constants(rec, rel, 6)
        assert eq.is_mops == ct.is_mops
        assert eq.induced == ct.induced


def test_induced_recurrence_matches_generated_family():
    """When the verdict is positive the generated family satisfies the
    induced three-term recurrence as polynomial identities."""
    rep = jacobi_chain(JacobiParams("1/2", "1/2"), 2, -2, 6)
    assert rep.ok
    p = mops_from_recurrence(rep.u_rec, 7)
    q = generate_q(p, rep.rel)
    ind = induced_recurrence(rep.u_rec, rep.rel, 5)
    from mopsrel import Polynomial

    x = Polynomial.x()
    for n in range(1, 6):
        lhs = q[n + 1]
        rhs = (x - Polynomial.constant(ind.beta[n])) * q[n] - ind.gamma[n - 1] * q[n - 1]
        assert lhs == rhs


def test_relation_constants_preconditions():
    from mopsrel import RecurrencePair

    rec = RecurrencePair([0, 0, 0], ["1/4", "1/4"])
    with pytest.raises(DomainError, match="nonzero"):
        relation_constants(rec, rel_from7(0, 0, 0, 1, 0, 0, 0))  # gate zero
    with pytest.raises(DomainError, match="r3 and t3"):
        relation_constants(rec, rel_from7(0, 0, 0, 0, 0, 1, 0))


def test_v_moments_and_verification():
    rep = chebyshev_case(6)
    u = moments_from_recurrence(rep.u_rec, 10)
    v = v_moments_from_relation(u, rep.constants, rep.q_rec.beta[0])
    ok, bad = verify_functional_relation(u, v, rep.constants, 8)
    assert ok and bad is None
    # a wrong constant must be caught at the first usable index
    from mopsrel import FunctionalRelation

    wrong = FunctionalRelation(rep.constants.lam, rep.constants.c, rep.constants.a + 1, rep.constants.b)
    v2 = v_moments_from_relation(u, wrong, rep.q_rec.beta[0])
    assert v2.moments != v.moments


def test_regularity_criterion_needs_data():
    rep = chebyshev_case(6)
    p = mops_from_recurrence(rep.u_rec, 7)
    no_root, no_index = regularity_criterion(p, 1, rep.rel, 6)
    assert no_root is False and no_index is False
