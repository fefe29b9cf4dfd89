from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpcodes.errors import MalformedMatrix, NotSystematic, RankDeficient, UnsupportedField
from qpcodes.gf import (
    CodeMatrix,
    FieldElement,
    all_vectors,
    decode_indices,
    dual,
    encode_vectors,
    is_systematic,
    parity_check,
    rank,
    rref,
    same_row_space,
    systematize,
)


def matrices(q, max_rows=5, max_cols=8):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(r, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(0, q - 1), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


@pytest.mark.parametrize("q", [2, 3])
def test_field_axioms(q):
    els = FieldElement.elements(q)
    one = FieldElement(1, q)
    for a in els:
        assert a + (-a) == FieldElement(0, q)
        if a.value:
            assert a * a.inverse() == one
        for b in els:
            assert a * b == b * a
            assert a - b == a + (-b)


def test_unsupported_field():
    with pytest.raises(UnsupportedField):
        FieldElement(1, 5)
    with pytest.raises(UnsupportedField):
        CodeMatrix(4, [[1, 0]])


def test_entries_must_be_field_digits():
    with pytest.raises(MalformedMatrix):
        CodeMatrix(2, [[1, 2]])
    with pytest.raises(MalformedMatrix):
        CodeMatrix(3, [[1, 0], [1]])


def test_matrix_is_immutable():
    m = CodeMatrix(2, [[1, 0, 1]])
    with pytest.raises(ValueError):
        m.array[0, 0] = 0


@pytest.mark.parametrize("q", [2, 3])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_rref_properties(q, data):
    rows = data.draw(matrices(q))
    m = CodeMatrix(q, rows)
    r, pivots, rk = rref(m)
    assert rk == len(pivots) == rank(m)
    assert same_row_space(r, m)
    assert not r.array[rk:].any()
    for i, p in enumerate(pivots):
        col = r.array[:, p]
        assert col[i] == 1 and np.count_nonzero(col) == 1
    assert rref(r)[0] == r


@pytest.mark.parametrize("q", [2, 3])
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_dual_is_orthogonal_complement(q, data):
    rows = data.draw(matrices(q))
    m = CodeMatrix(q, rows)
    if rank(m) < m.rows:
        with pytest.raises(RankDeficient):
            dual(m)
        return
    if m.rows == m.cols:
        return
    h = dual(m)
    assert h.rows == m.cols - m.rows
    assert m.matmul(h.transpose()).is_zero()


def test_systematize_and_parity_check():
    g = CodeMatrix.from_rows(2, ["1110000", "1001100", "0101010", "1101001"])
    s, perm = systematize(g)
    assert is_systematic(s)
    h = parity_check(s)
    assert s.matmul(h.transpose()).is_zero()
    assert sorted(perm) == list(range(7))
    with pytest.raises(NotSystematic):
        parity_check(g)


def test_systematize_rank_deficient():
    with pytest.raises(RankDeficient):
        systematize(CodeMatrix.from_rows(3, ["120", "210"]))


@pytest.mark.parametrize("q,width", [(2, 5), (3, 4)])
def test_vector_encoding_roundtrip(q, width):
    vecs = all_vectors(width, q)
    idx = encode_vectors(vecs, q)
    assert np.array_equal(idx, np.arange(q**width))
    assert np.array_equal(decode_indices(idx, width, q), vecs)
    # first coordinate is most significant
    assert encode_vectors(np.array([[1] + [0] * (width - 1)]), q)[0] == q ** (width - 1)
