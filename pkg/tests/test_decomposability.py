"""Ass-decomposability search, certificates, and the depth and regularity reports."""
import pytest
from hypothesis import given, settings, strategies as st

from assdec.decomposability import (
    PrimaryLeaf,
    Split,
    decomposing_candidates,
    depth_report,
    is_ass_decomposable,
    regularity_report,
    split_chain,
    splitting_condition,
    unmixed_consequences,
    verify_certificate,
)
from assdec.errors import InvalidInputError, ResourceLimitError
from assdec.graphs import edge_ideal, path, star
from assdec.ideal import (
    IrreducibleComponent,
    MonomialIdeal,
    MonomialPrime,
    associated_primes,
    intersect_all,
    numeric_invariants,
    radical,
    symbolic_power,
)
from assdec.homology import homological_invariants


def comp(n, powers):
    return IrreducibleComponent(n, tuple(sorted(powers.items()))).as_ideal()


def primes(n, *var_sets):
    return intersect_all(MonomialPrime(n, tuple(vs)).as_ideal() for vs in var_sets)


FIVE = intersect_all([
    comp(5, {1: 1, 2: 1}),
    comp(5, {1: 1, 3: 1}),
    comp(5, {1: 1, 2: 2, 3: 2}),
    comp(5, {1: 1, 3: 2, 4: 1}),
    comp(5, {3: 2, 4: 1, 5: 1}),
])
THREE = intersect_all([comp(4, {1: 1, 2: 1}), comp(4, {3: 1, 4: 1}), comp(4, {1: 1, 3: 2, 4: 1})])
DISJOINT = primes(4, (1, 2), (3, 4))
OVERLAP = primes(3, (1, 2), (2, 3))


# ---------------------------------------------------------------------------
# splitting condition and candidates

def test_splitting_condition():
    assert splitting_condition(FIVE, 3, 2)
    assert not splitting_condition(DISJOINT, 1, 1)
    assert not splitting_condition(comp(3, {1: 2, 2: 1}), 3, 1)


def test_splitting_condition_rejects_bad_indices():
    with pytest.raises(InvalidInputError):
        splitting_condition(FIVE, 6, 1)
    with pytest.raises(InvalidInputError):
        splitting_condition(FIVE, 1, 0)


def test_candidates():
    assert (3, 2) in decomposing_candidates(FIVE)
    assert (1, 1) in decomposing_candidates(THREE)
    assert decomposing_candidates(DISJOINT) == []


def test_squarefree_candidates_use_exponent_one():
    assert all(k == 1 for _, k in decomposing_candidates(edge_ideal(path(5))))


# ---------------------------------------------------------------------------
# search and certificates

def test_three_components_split_on_x1_then_x2():
    result = is_ass_decomposable(THREE)
    assert result.ass_decomposable
    assert split_chain(result.certificate) == [(1, 1), (2, 1)]
    assert result.certificate.to_json() == {
        "split": {
            "var": 1,
            "k": 1,
            "plus": {"split": {"var": 2, "k": 1, "plus": {"primary": {"vars": [1, 2]}}, "colon": {"primary": {"vars": [1, 3, 4]}}}},
            "colon": {"primary": {"vars": [3, 4]}},
        }
    }


def test_five_components_are_decomposable():
    result = is_ass_decomposable(FIVE)
    assert result and verify_certificate(FIVE, result.certificate)


def test_disjoint_primes_are_refuted():
    result = is_ass_decomposable(DISJOINT)
    assert not result and result.certificate is None
    assert [(e["var"], e["k"]) for e in result.refutation] == [(1, 1), (2, 1), (3, 1), (4, 1)]
    gained = result.refutation[0]
    assert gained["side"] == "gained" and gained["witness"] == {"vars": [1, 3, 4]}


def test_small_exponents_can_deepen_the_tree():
    # (x1^3 x2) = (x1^3) ∩ (x2): k ascending splits off x1 three times
    I = MonomialIdeal(2, ((3, 1),))
    cert = is_ass_decomposable(I).certificate
    assert split_chain(cert) == [(1, 1), (1, 1), (1, 1)]
    assert cert.depth == 3 > numeric_invariants(I).index_r


def test_primary_ideal_is_a_leaf():
    cert = is_ass_decomposable(comp(3, {1: 2, 3: 1})).certificate
    assert isinstance(cert, PrimaryLeaf) and cert.prime.variables == (1, 3)


def test_forged_certificates_are_rejected():
    # x2 is not a decomposing monomial of the three-component ideal
    bad_var = {"split": {"var": 2, "k": 1, "plus": {"primary": {}}, "colon": {"primary": {}}}}
    assert not verify_certificate(THREE, bad_var)
    assert not verify_certificate(THREE, {"primary": {"vars": [1, 2]}})
    good = is_ass_decomposable(THREE).certificate.to_json()
    good["split"]["colon"] = {"primary": {"vars": [1, 2]}}  # the colon is (x3, x4)
    assert not verify_certificate(THREE, good)
    assert not verify_certificate(THREE, {"split": {"var": "x", "k": 1}})
    assert not verify_certificate(THREE, {})


def test_certificate_objects_and_json_both_verify():
    cert = is_ass_decomposable(THREE).certificate
    assert verify_certificate(THREE, cert) and verify_certificate(THREE, cert.to_json())


def test_memo_cap():
    with pytest.raises(ResourceLimitError):
        is_ass_decomposable(FIVE, max_memo=1)


def test_shared_memo_gives_same_answer():
    memo = {}
    first = is_ass_decomposable(FIVE, memo=memo)
    assert is_ass_decomposable(FIVE, memo=memo).certificate == first.certificate


@st.composite
def ideals(draw):
    n = draw(st.integers(2, 5))
    mono = st.tuples(*[st.integers(0, 3)] * n).filter(any)
    return MonomialIdeal(n, tuple(draw(st.lists(mono, min_size=1, max_size=7))))


def leaves(cert):
    if isinstance(cert, PrimaryLeaf):
        return [cert.prime]
    return leaves(cert.plus) + leaves(cert.colon)


@settings(max_examples=80, deadline=None)
@given(ideals())
def test_certificates_replay_and_cover_ass(I):
    result = is_ass_decomposable(I)
    if not result:
        assert result.refutation is not None
        return
    cert = result.certificate
    assert verify_certificate(I, cert)
    assert set(leaves(cert)) == set(associated_primes(I))
    if I.is_squarefree:
        # each split partitions the minimal primes between its two branches
        assert sorted(leaves(cert)) == sorted(associated_primes(I))
        assert cert.depth <= numeric_invariants(I).index_r - 1

    def check(node):
        if isinstance(node, Split):
            assert splitting_condition(node.ideal, node.var, node.k)
            check(node.plus)
            check(node.colon)

    check(result.certificate)


@settings(max_examples=60, deadline=None)
@given(ideals())
def test_depth_formula_on_certified_ideals(I):
    if is_ass_decomposable(I):
        report = depth_report(I)
        assert report.agree and report.proven


# ---------------------------------------------------------------------------
# reports

def test_depth_report_three_components():
    assert depth_report(THREE).to_json() == {"formula": 1, "resolution": 1, "agree": True, "status": "proven"}


def test_depth_report_five_components():
    r = depth_report(FIVE)
    assert (r.depth_formula, r.depth_resolution, r.agree) == (2, 2, True)


def test_depth_report_outside_the_hypothesis():
    r = depth_report(radical(THREE))
    assert r.to_json() == {"formula": 2, "resolution": 1, "agree": False, "status": "conjectural"}


def test_prime_depth_report():
    r = depth_report(MonomialPrime(5, (2, 4)).as_ideal())
    assert (r.depth_formula, r.depth_resolution) == (3, 3)


def test_unmixed_consequences():
    assert unmixed_consequences(OVERLAP).to_json() == {
        "is_unmixed": True,
        "cm_verdict": True,
        "radical_ass_decomposable": True,
    }
    assert unmixed_consequences(THREE).to_json()["cm_verdict"] == "not applicable"
    assert unmixed_consequences(comp(3, {1: 3, 2: 1})).cm_verdict


def test_unmixed_consequences_need_a_certificate():
    with pytest.raises(InvalidInputError):
        unmixed_consequences(DISJOINT)


def test_regularity_report_star():
    r = regularity_report(edge_ideal(star(3)))
    assert (r.r, r.d_of_I, r.reg_RmodI, r.bound_holds, r.equality) == (2, 2, 1, True, True)
    assert r.structure.prime is None and r.structure.variable == 1
    assert r.structure.J == primes(4, (2, 3, 4))


def test_regularity_report_principal():
    I = MonomialIdeal(4, ((1, 0, 0, 1),))
    r = regularity_report(I)
    assert (r.r, r.d_of_I, r.reg_RmodI, r.equality) == (2, 2, 1, True)
    assert r.structure.J == MonomialIdeal(4, ((0, 0, 0, 1),))


def test_regularity_report_path_is_strict():
    r = regularity_report(edge_ideal(path(4)))
    assert (r.r, r.reg_RmodI, r.bound_holds, r.equality, r.structure) == (3, 1, True, False, None)


def test_regularity_report_preconditions():
    with pytest.raises(InvalidInputError):
        regularity_report(THREE)
    with pytest.raises(InvalidInputError):
        regularity_report(DISJOINT)


# ---------------------------------------------------------------------------
# symbolic powers

@pytest.mark.parametrize("k", [2, 3])
def test_symbolic_powers_of_disjoint_primes_are_not_decomposable(k):
    assert not is_ass_decomposable(symbolic_power(DISJOINT, k))


def test_symbolic_square_with_overlapping_primes_splits():
    # primes sharing x2: the search finds x1 as a decomposing monomial
    S = symbolic_power(OVERLAP, 2)
    result = is_ass_decomposable(S)
    assert result and verify_certificate(S, result.certificate)


def test_symbolic_square_of_height_one_primes():
    S = symbolic_power(primes(2, (1,), (2,)), 2)
    assert S == MonomialIdeal(2, ((2, 2),))
    assert is_ass_decomposable(S)


def test_regularity_matches_resolution():
    for I in (edge_ideal(star(3)), edge_ideal(path(4)), OVERLAP):
        assert regularity_report(I).reg_RmodI == homological_invariants(I).reg_RmodI
