from __future__ import annotations

import dataclasses

import pytest

from qpcodes.appendix import (
    A_BLOCKS,
    B_BLOCKS,
    CHECKSUMS,
    block_checksum,
    corpus,
    verify_corpus,
)
from qpcodes.equivalence import equivalent


@pytest.mark.parametrize("name", sorted(CHECKSUMS))
def test_transcription_checksums(name):
    block = {**A_BLOCKS, **B_BLOCKS}[name]
    assert block_checksum(block) == CHECKSUMS[name]


def test_block_shapes():
    for block in A_BLOCKS.values():
        assert len(block) == 12 and all(len(r) == 12 for r in block)
    for block in B_BLOCKS.values():
        assert len(block) == 12 and all(len(r) == 13 for r in block)


def test_full_corpus_verifies():
    checks = verify_corpus()
    assert len(checks) == 13
    assert all(c.ok for c in checks), [c for c in checks if not c.ok]


def _flip(block, row, col):
    rows = list(block)
    r = rows[row]
    rows[row] = r[:col] + ("1" if r[col] == "0" else "0") + r[col + 1 :]
    return tuple(rows)


def test_mutated_entry_is_caught():
    entries = corpus()
    a1 = entries[0]
    bad = dataclasses.replace(a1, block=_flip(a1.block, 0, 0))
    checks = verify_corpus([bad, entries[1]])
    assert not checks[0].checksum_ok
    assert not checks[0].ok


def test_duplicate_entry_is_not_distinct():
    entries = corpus()
    twin = dataclasses.replace(entries[0], name="A1-copy")
    checks = verify_corpus([entries[0], twin])
    assert not checks[0].distinct and not checks[1].distinct


def test_empty_corpus_rejected():
    with pytest.raises(ValueError):
        verify_corpus([])


def test_b_codes_inequivalent():
    b1, b2 = (e.code() for e in corpus()[-2:])
    assert not equivalent(b1, b2)
