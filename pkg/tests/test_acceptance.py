"""Acceptance suite.

Each test carries a ``criterion`` marker; ``conftest.py`` prints one
PASS/FAIL line per criterion at the end of the run.  All arithmetic is
exact, so every comparison is an equality; runtime bounds are checked where
stated.  Homological answers are computed over GF(2).
"""
import time

import pytest

from assdec.campaigns import (
    chordal_campaign,
    decomposable_campaign,
    depth_campaign,
    radical_campaign,
    reisner_campaign,
    shedding_campaign,
    shedding_scm_campaign,
)
from assdec.complex import from_facets, simplex
from assdec.decomposability import depth_report, is_ass_decomposable, split_chain, verify_certificate
from assdec.homology import GF2, homological_invariants, reduced_homology_ranks
from assdec.ideal import (
    IrreducibleComponent,
    MonomialIdeal,
    add_power,
    associated_primes,
    colon_power,
    intersect,
    intersect_all,
    numeric_invariants,
    radical,
    symbolic_power,
)

SEED = 1


def comp(n, powers):
    return IrreducibleComponent(n, tuple(sorted(powers.items()))).as_ideal()


def leaf(*vs):
    return {"primary": {"vars": list(vs)}}


def split(var, k, plus, colon):
    return {"split": {"var": var, "k": k, "plus": plus, "colon": colon}}


@pytest.mark.criterion(1, "five-component golden example")
def test_five_component_example(note):
    start = time.perf_counter()
    q1, q2, q3, q4, q5 = (
        comp(5, {1: 1, 2: 1}),
        comp(5, {1: 1, 3: 1}),
        comp(5, {1: 1, 2: 2, 3: 2}),
        comp(5, {1: 1, 3: 2, 4: 1}),
        comp(5, {3: 2, 4: 1, 5: 1}),
    )
    I = intersect_all([q1, q2, q3, q4, q5])
    tail = intersect_all([q2, q3, q4, q5])
    assert add_power(I, 3, 2) == tail
    assert colon_power(I, 3, 2) == q1
    assert add_power(tail, 4, 1) == intersect(q4, q5)
    assert colon_power(tail, 4, 1) == intersect(q2, q3)
    assert add_power(intersect(q2, q3), 2, 2) == q3
    assert colon_power(intersect(q2, q3), 2, 2) == q2
    assert add_power(intersect(q4, q5), 5, 1) == q5
    assert colon_power(intersect(q4, q5), 5, 1) == q4

    result = is_ass_decomposable(I)
    assert result.ass_decomposable and verify_certificate(I, result.certificate)
    # the hand-written chain x3^2; x4; x2^2 and x5
    chain = split(
        3, 2,
        split(4, 1, split(5, 1, leaf(3, 4, 5), leaf(1, 3, 4)), split(2, 2, leaf(1, 2, 3), leaf(1, 3))),
        leaf(1, 2),
    )
    assert verify_certificate(I, chain)
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    note(f"{elapsed:.3f}s")


@pytest.mark.criterion(2, "three-component golden example")
def test_three_component_example(note):
    start = time.perf_counter()
    q1, q2, q3 = comp(4, {1: 1, 2: 1}), comp(4, {3: 1, 4: 1}), comp(4, {1: 1, 3: 2, 4: 1})
    I = intersect_all([q1, q2, q3])
    result = is_ass_decomposable(I)
    assert result.ass_decomposable
    assert [v for v, _ in split_chain(result.certificate)] == [1, 2]
    assert verify_certificate(I, result.certificate)
    assert {p.variables for p in associated_primes(I)} == {(1, 2), (3, 4), (1, 3, 4)}

    J = intersect(q1, q2)
    assert homological_invariants(J, GF2).depth_RmodI == 1
    assert numeric_invariants(J).krull_dim == 2

    rad = radical(I)
    assert rad == MonomialIdeal(4, ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)))
    assert not is_ass_decomposable(rad).ass_decomposable
    elapsed = time.perf_counter() - start
    assert elapsed < 1.0
    note(f"{elapsed:.3f}s")


@pytest.fixture(scope="module")
def depth_run():
    certified: list = []
    start = time.perf_counter()
    res = depth_campaign(100, SEED, GF2, collect=certified)
    return res, certified, time.perf_counter() - start


@pytest.mark.criterion(3, "depth = n - bigh on 100 certified random ideals")
def test_depth_campaign(depth_run, note):
    res, certified, elapsed = depth_run
    assert res.checked == 100 and len(certified) == 100
    assert res.failures == 0, res.details
    assert all(I.n <= 6 and len(I.gens) <= 10 and max(map(max, I.gens)) <= 3 for I in certified)
    assert elapsed < 60
    note(f"{res.stats['non_primary']} non-primary, {elapsed:.1f}s, GF(2)")


@pytest.mark.criterion(4, "shedding vertex <=> ass filter on 100 complexes")
def test_shedding_campaign(note):
    start = time.perf_counter()
    res = shedding_campaign(100, SEED, max_vertices=8)
    elapsed = time.perf_counter() - start
    assert res.checked == 100
    assert res.failures == 0, res.details
    assert elapsed < 60
    note(f"{res.stats['vertex_checks']} vertex checks, {res.stats['shedding_vertices']} shedding, {elapsed:.1f}s")


@pytest.mark.criterion(5, "vertex decomposable <=> ass-decomposable on 100 complexes")
def test_vertex_decomposable_campaign(note):
    res = decomposable_campaign(100, SEED, max_vertices=7)
    assert res.checked == 100
    assert res.failures == 0, res.details
    vd = res.stats["vertex_decomposable"]
    assert 0 < vd < 100  # both verdicts occur
    note(f"{vd} decomposable, {100 - vd} not")


@pytest.mark.criterion(6, "shedding vertex with sequentially CM link and deletion")
def test_sequentially_cm_campaign(note):
    res = shedding_scm_campaign(30, SEED, max_vertices=7)
    assert res.checked >= 30
    assert res.failures == 0, res.details
    note(f"{res.checked} qualifying in {res.stats['attempts']} attempts, GF(2)")


@pytest.mark.criterion(7, "chordal graphs and the star trichotomy")
def test_chordal_campaign(note):
    res = chordal_campaign(50, SEED, max_vertices=8)
    assert res.checked == 51  # 50 random graphs plus the four-leaf star
    assert res.failures == 0, res.details
    note(f"{res.stats['stars']} stars")


@pytest.mark.criterion(8, "radicals of unmixed certified ideals; symbolic powers")
def test_radical_and_symbolic_powers(depth_run, note):
    _, certified, _ = depth_run
    res = radical_campaign(100, SEED, GF2)
    assert res.stats["certified"] == len(certified)
    assert res.failures == 0, res.details
    for I in certified:
        if numeric_invariants(I).unmixed:
            assert is_ass_decomposable(radical(I)).ass_decomposable

    I = MonomialIdeal(4, ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)))
    for k in (2, 3):
        assert not is_ass_decomposable(symbolic_power(I, k)).ass_decomposable
    note(f"{res.checked} unmixed ideals")


@pytest.mark.criterion(9, "homology sanity and Reisner vs depth on 100 complexes")
def test_homology_sanity(note):
    assert reduced_homology_ranks(from_facets(3, [{1, 2}, {2, 3}, {1, 3}]))[2] == 1
    assert not any(reduced_homology_ranks(simplex((1, 2, 3, 4))))
    res = reisner_campaign(100, SEED, max_vertices=7)
    assert res.checked == 100
    assert res.failures == 0, res.details
    note(f"{res.stats['cohen_macaulay']} Cohen-Macaulay, GF(2)")


def test_depth_report_of_the_three_component_example():
    I = intersect_all([comp(4, {1: 1, 2: 1}), comp(4, {3: 1, 4: 1}), comp(4, {1: 1, 3: 2, 4: 1})])
    assert depth_report(I).to_json() == {"formula": 1, "resolution": 1, "agree": True, "status": "proven"}
