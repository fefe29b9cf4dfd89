from __future__ import annotations

from math import comb

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from known_codes import golay23, golay24, hamming, repetition, ternary_golay11, ternary_golay12
from qpcodes import LinearCode
from qpcodes.errors import RankDeficient, TooLarge
from qpcodes.gf import CodeMatrix
from qpcodes.radii import (
    classify_radius_class,
    coset_leader_distribution,
    coset_leader_weights_by_reps,
    coset_test_budget,
    covering_radius,
    covering_radius_by_coset_reps,
    is_quasi_perfect_fast,
    packing_radius,
)


@st.composite
def codes(draw, q, max_n=7):
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, n))
    rows = draw(st.lists(st.lists(st.integers(0, q - 1), min_size=n, max_size=n), min_size=k, max_size=k))
    try:
        return LinearCode(CodeMatrix(q, rows))
    except RankDeficient:
        assume(False)


@pytest.mark.parametrize("q,max_n", [(2, 8), (3, 5)])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_alpha_matches_space_partition(q, max_n, data):
    c = data.draw(codes(q, max_n))
    assert coset_leader_distribution(c).alpha == oracles.alpha(c.generator.array, q)
    assert covering_radius(c) == oracles.covering_radius(c.generator.array, q)


@pytest.mark.parametrize("q,max_n", [(2, 9), (3, 6)])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_two_covering_radius_methods_agree(q, max_n, data):
    c = data.draw(codes(q, max_n))
    assert covering_radius_by_coset_reps(c) == covering_radius(c)
    assert sorted(coset_leader_weights_by_reps(c).tolist()) == oracles.coset_leader_weights(c.generator.array, q)


@pytest.mark.parametrize("q,max_n", [(2, 9), (3, 6)])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_fast_qp_verdict(q, max_n, data):
    c = data.draw(codes(q, max_n))
    assume(c.k < c.n)
    assert is_quasi_perfect_fast(c) == classify_radius_class(c).is_quasi_perfect


@pytest.mark.parametrize(
    "make,params,R,perfect,qp",
    [
        (lambda: hamming(2, 3), (7, 4, 3), 1, True, False),
        (lambda: hamming(3, 3), (13, 10, 3), 1, True, False),
        (golay23, (23, 12, 7), 3, True, False),
        (golay24, (24, 12, 8), 4, False, True),
        (ternary_golay11, (11, 6, 5), 2, True, False),
        (ternary_golay12, (12, 6, 6), 3, False, True),
        (lambda: repetition(2, 5), (5, 1, 5), 2, True, False),
        (lambda: repetition(2, 6), (6, 1, 6), 3, False, True),
    ],
)
def test_classical_codes(make, params, R, perfect, qp):
    rep = classify_radius_class(make())
    assert (rep.n, rep.k, rep.d) == params
    assert (rep.R, rep.is_perfect, rep.is_quasi_perfect) == (R, perfect, qp)


def test_trivial_qp_flag():
    rep = classify_radius_class(repetition(2, 2))
    assert (rep.e, rep.R, rep.is_quasi_perfect, rep.trivial_qp) == (0, 1, True, True)
    assert not classify_radius_class(golay24()).trivial_qp


def test_report_json_fields():
    d = classify_radius_class(hamming(2, 3)).to_dict()
    for key in ("n", "k", "d", "e", "R", "weights", "alpha", "perfect", "quasi_perfect", "trivial_qp"):
        assert key in d
    assert d["alpha"] == [1, 7] and d["perfect"] is True


def test_alpha_low_weights_are_full_balls():
    rep = classify_radius_class(golay24())
    for i in range(rep.e + 1):
        assert rep.cosets[i] == comb(24, i)
    assert rep.cosets.total == 2**12


def test_packing_radius():
    assert [packing_radius(d) for d in (1, 2, 3, 4, 5, 8)] == [0, 0, 1, 1, 2, 3]
    with pytest.raises(ValueError):
        packing_radius(0)


def test_coset_test_budget():
    # r=3, e=1, q=2: weights 2 and 3 -> 3 + 1
    assert coset_test_budget(7, 4, 1, 2) == 3 + 1 + 0
    assert coset_test_budget(5, 2, 0, 3) == sum(comb(3, i) * 2**i for i in range(1, 4))
    with pytest.raises(ValueError):
        coset_test_budget(7, 4, 4, 2)


def test_oracle_guard():
    with pytest.raises(TooLarge):
        covering_radius_by_coset_reps(hamming(2, 5))
