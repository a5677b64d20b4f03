"""Simplicial homology, Betti tables and Cohen-Macaulay tests over GF(p)."""
import os
import random
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from assdec import _kernels
from assdec.campaigns import random_complex
from assdec.complex import from_facets, simplex
from assdec.errors import InvalidInputError, ResourceLimitError
from assdec.graphs import edge_ideal, star
from assdec.homology import (
    FieldSpec,
    betti_table,
    homological_invariants,
    is_cohen_macaulay,
    is_cohen_macaulay_by_depth,
    is_sequentially_cm,
    lcm_lattice,
    reduced_homology_ranks,
)
from assdec.ideal import MonomialIdeal, MonomialPrime

import oracles

GF3 = FieldSpec(3)
HOLLOW_TRIANGLE = from_facets(3, [{1, 2}, {2, 3}, {1, 3}])
TWO_EDGES = from_facets(4, [{1, 3}, {2, 4}])
TWO_TRIANGLES = from_facets(4, [{1, 2, 3}, {2, 3, 4}])
# six-vertex triangulation of the real projective plane
RP2 = from_facets(6, [
    {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
    {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6},
])
EX35 = MonomialIdeal(4, ((0, 1, 0, 1), (0, 1, 2, 0), (1, 0, 0, 1), (1, 0, 1, 0)))


# ---------------------------------------------------------------------------
# rank kernels

def test_backend_is_reported():
    assert _kernels.BACKEND in ("cython", "python")


@settings(max_examples=80, deadline=None)
@given(
    st.integers(1, 9).flatmap(
        lambda r: st.lists(st.lists(st.integers(-20, 20), min_size=r, max_size=r), min_size=1, max_size=9)
    ),
    st.sampled_from([2, 3, 5, 7, 2147483647]),
)
def test_kernels_agree_with_row_reduction(rows, p):
    expected = oracles.rank_mod_p_fractions(rows, p)
    assert _kernels.py_rank_mod_p(np.array(rows), p) == expected
    assert _kernels.sparse_rank_mod_p([dict(enumerate(r)) for r in rows], p) == expected
    if _kernels.cy_rank_mod_p is not None:
        assert _kernels.cy_rank_mod_p(np.array(rows, dtype=np.int64), p) == expected


def test_rank_depends_on_characteristic():
    m = [[1, 1], [1, -1]]  # determinant -2
    assert _kernels.rank_mod_p(np.array(m), 2) == 1
    assert _kernels.rank_mod_p(np.array(m), 3) == 2


# ---------------------------------------------------------------------------
# simplicial homology

def test_hollow_triangle():
    assert reduced_homology_ranks(HOLLOW_TRIANGLE) == [0, 0, 1]


def test_simplex_is_acyclic():
    assert not any(reduced_homology_ranks(simplex((1, 2, 3, 4))))


def test_two_components():
    assert reduced_homology_ranks(TWO_EDGES) == [0, 1, 0]


def test_empty_face_complex():
    assert reduced_homology_ranks(from_facets(2, [set()])) == [1]


def test_projective_plane_is_field_dependent():
    assert reduced_homology_ranks(RP2) == [0, 0, 1, 1]
    assert reduced_homology_ranks(RP2, GF3) == [0, 0, 0, 0]


@pytest.mark.parametrize("p", [0, 1, 4, 2**31 + 11])
def test_field_must_be_a_small_prime(p):
    with pytest.raises(InvalidInputError):
        FieldSpec(p)


# ---------------------------------------------------------------------------
# Betti numbers; expected values from the Taylor-complex oracle

def coarse(table):
    return dict(table.coarse)


def test_koszul_on_two_variables():
    t = betti_table(MonomialIdeal(2, ((1, 0), (0, 1))))
    assert coarse(t) == {(0, 1): 2, (1, 2): 1}
    assert t.multigraded[(1, (1, 1))] == 1
    assert t.pd == 1


def test_star_with_four_leaves_is_linear():
    t = betti_table(edge_ideal(star(4)))
    assert coarse(t) == {(0, 2): 4, (1, 3): 6, (2, 4): 4, (3, 5): 1}
    assert t.is_linear()
    assert homological_invariants(edge_ideal(star(4))).reg_RmodI == 1


def test_three_component_table():
    t = betti_table(EX35)
    assert coarse(t) == {(0, 2): 3, (0, 3): 1, (1, 3): 2, (1, 4): 2, (2, 5): 1}
    inv = homological_invariants(EX35)
    assert (inv.pd_RmodI, inv.depth_RmodI, inv.reg_RmodI, inv.reg_I) == (3, 1, 2, 3)


def test_depth_of_two_disjoint_primes():
    I = MonomialIdeal(4, ((1, 0, 1, 0), (1, 0, 0, 1), (0, 1, 1, 0), (0, 1, 0, 1)))
    assert homological_invariants(I).depth_RmodI == 1


def test_prime_of_height_h():
    inv = homological_invariants(MonomialPrime(5, (1, 3, 4)).as_ideal())
    assert (inv.depth_RmodI, inv.reg_RmodI) == (2, 0)


def test_betti_table_json_and_text():
    t = betti_table(MonomialIdeal(2, ((1, 0), (0, 1))))
    assert t.to_json()["coarse"] == {"0": {"1": 2}, "1": {"2": 1}}
    assert "total:" in str(t)


def test_threaded_strands_match():
    I = edge_ideal(star(4))
    assert betti_table(I, workers=4).multigraded == betti_table(I).multigraded


def test_lattice_cap():
    I = MonomialIdeal(8, tuple(tuple(1 if j in (i, (i + 1) % 8) else 0 for j in range(8)) for i in range(8)))
    with pytest.raises(ResourceLimitError):
        lcm_lattice(I, max_size=16)
    with pytest.raises(ResourceLimitError):
        betti_table(I, max_gens=4)


@st.composite
def small_ideals(draw):
    n = draw(st.integers(1, 4))
    mono = st.tuples(*[st.integers(0, 2)] * n).filter(any)
    return MonomialIdeal(n, tuple(draw(st.lists(mono, min_size=1, max_size=6))))


@settings(max_examples=60, deadline=None)
@given(small_ideals(), st.sampled_from([2, 3]))
def test_betti_numbers_against_taylor_oracle(I, p):
    t = betti_table(I, FieldSpec(p))
    assert t.multigraded == oracles.taylor_betti(list(I.gens), p)


@settings(max_examples=60, deadline=None)
@given(small_ideals())
def test_regularity_dominates_generator_degree(I):
    inv = homological_invariants(I)
    assert inv.reg_I >= max(sum(g) for g in I.gens)
    assert 0 <= inv.depth_RmodI <= I.n


# ---------------------------------------------------------------------------
# Cohen-Macaulay and sequentially Cohen-Macaulay

def test_cohen_macaulay_examples():
    assert is_cohen_macaulay(TWO_TRIANGLES) and is_cohen_macaulay_by_depth(TWO_TRIANGLES)
    assert not is_cohen_macaulay(TWO_EDGES) and not is_cohen_macaulay_by_depth(TWO_EDGES)
    assert is_cohen_macaulay(simplex((1, 2, 3)))


def test_projective_plane_cm_only_away_from_two():
    assert not is_cohen_macaulay(RP2)
    assert is_cohen_macaulay(RP2, GF3)
    assert is_cohen_macaulay_by_depth(RP2, GF3)


def test_sequentially_cm_examples():
    assert is_sequentially_cm(TWO_TRIANGLES)
    assert not is_sequentially_cm(TWO_EDGES)
    assert is_sequentially_cm(simplex((1, 2)))
    # a triangle with a pendant edge is not pure but is shellable
    assert is_sequentially_cm(from_facets(4, [{1, 2, 3}, {3, 4}]))


def test_reisner_agrees_with_depth():
    rng = random.Random(11)
    for _ in range(40):
        delta = random_complex(rng, rng.randint(2, 6))
        assert is_cohen_macaulay(delta) == is_cohen_macaulay_by_depth(delta)


def test_environment_switch_selects_the_fallback():
    env = dict(os.environ, ASSDEC_PURE_PYTHON="1")
    code = "from assdec import _kernels; print(_kernels.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
