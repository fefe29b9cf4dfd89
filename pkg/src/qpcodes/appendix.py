"""
Generator matrices of the binary quasi-perfect [24,12,7] and [25,12,8] codes.

Each block ``A`` is the redundancy part of a systematic generator
``[I_12 | A]``; the identity is not stored.  The SHA-256 of every block
(rows joined with newlines) is pinned in ``CHECKSUMS`` so that an accidental
edit to a digit is caught by the test suite.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .code import LinearCode
from .equivalence import canonical_form
from .gf import CodeMatrix
from .radii import classify_radius_class

A_BLOCKS: dict[str, tuple[str, ...]] = {
    "A1": (
        "010010110101", "101000111001", "111010010010", "000110011011",
        "010101010110", "101100001110", "111111011101", "111100110100",
        "101101010011", "010101111001", "011000011111", "000011111110",
    ),
    "A2": (
        "110001001011", "001011000111", "111010010010", "100101100101",
        "010101010110", "101100001110", "011100100011", "111100110100",
        "001110101101", "110110000111", "111011100001", "000011111110",
    ),
    "A3": (
        "010101001011", "001100111001", "011110010010", "100010011011",
        "110110101000", "101100001110", "111111011101", "111011001010",
        "101010101101", "110110000111", "011000011111", "000011111110",
    ),
    "A4": (
        "100010111101", "001011010011", "101110001110", "110011101010",
        "110111010100", "111101111111", "111110100001", "011011001101",
        "111010110110", "110110011011", "001111111000", "000111100111",
    ),
    "A5": (
        "000010111101", "011100110100", "011001101001", "110100001101",
        "110000110011", "101101111111", "101110100001", "111100101010",
        "111101010001", "100110011011", "001111111000", "010111100111",
    ),
    "A6": (
        "000011011110", "101010101011", "101110010101", "010011110001",
        "010110101100", "111101111111", "111111000010", "111011001101",
        "111010110110", "010110011011", "001111111000", "000111100111",
    ),
    "A7": (
        "110001010101", "001011011001", "111010010010", "000110010111",
        "110110100100", "001111100010", "111111001111", "111100101010",
        "001110101101", "110110011001", "111011100001", "000011111110",
    ),
    "A8": (
        "000011011011", "001010101101", "001110010110", "100011100110",
        "100110110001", "101101111111", "101111001000", "101011010101",
        "101010111010", "100110001111", "001111100011", "010111111100",
    ),
    "A9": (
        "010101011101", "011011101100", "001110001111", "100001101011",
        "110111000110", "111100100001", "101010110010", "101101010111",
        "111110011100", "110011110101", "011000111011", "000111111010",
    ),
    "A10": (
        "110001101110", "111111011111", "101010111100", "010110101101",
        "100100110011", "001011100111", "011101110100", "111110100010",
        "101101101001", "010111000110", "011000111011", "000111111010",
    ),
    "A11": (
        "000111100110", "101101010101", "101100101011", "110000110111",
        "110011011100", "111011100001", "111110010010", "011010101110",
        "011001011011", "010101101101", "001111111000", "000110011111",
    ),
}

B_BLOCKS: dict[str, tuple[str, ...]] = {
    "B1": (
        "1101101100100", "1101000111001", "1110100001101", "1110110110000",
        "1011001110010", "1011010101100", "1000100111110", "0111100101010",
        "0111101010001", "0100110011011", "0001111111000", "0010111100111",
    ),
    "B2": (
        "1101101110000", "1101000100111", "1100011101001", "1100001011110",
        "1001110010110", "1001101001101", "1000100111011", "0101011010101",
        "0101010111010", "0100110001111", "0001111100011", "0010111111100",
    ),
}


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    block: tuple[str, ...]
    n: int
    k: int
    d: int
    R: int

    def code(self) -> LinearCode:
        return code_from_block(self.block)


def block_checksum(block: tuple[str, ...]) -> str:
    return hashlib.sha256("\n".join(block).encode()).hexdigest()


def code_from_block(block) -> LinearCode:
    """The code generated by [I_k | A] for a redundancy block A."""
    a = np.array([[int(ch) for ch in row] for row in block], dtype=np.uint8)
    k = a.shape[0]
    g = np.hstack([np.eye(k, dtype=np.uint8), a])
    return LinearCode(CodeMatrix(2, g))


@dataclass(frozen=True)
class EntryCheck:
    name: str
    n: int
    k: int
    d: int
    R: int
    quasi_perfect: bool
    checksum_ok: bool
    distinct: bool

    @property
    def ok(self) -> bool:
        return self.checksum_ok and self.quasi_perfect and self.distinct

    def to_dict(self) -> dict:
        return {
            "name": self.name, "n": self.n, "k": self.k, "d": self.d, "R": self.R,
            "quasi_perfect": self.quasi_perfect, "checksum_ok": self.checksum_ok,
            "distinct": self.distinct, "ok": self.ok,
        }


def verify_corpus(entries: list[CorpusEntry] | None = None) -> list[EntryCheck]:
    """Check parameters, QP status and pairwise inequivalence of every entry.

    Entries with the same (n, k) form a group; an entry is ``distinct`` when
    no other member of its group has the same canonical form.  Parameters
    must match the declared ones, otherwise ``quasi_perfect`` is reported
    False.
    """
    entries = corpus() if entries is None else list(entries)
    if not entries:
        raise ValueError("empty corpus")
    checks = []
    keys = {}
    for e in entries:
        code = e.code()
        rep = classify_radius_class(code)
        keys[e.name] = ((rep.n, rep.k), canonical_form(code).canonical_generator)
        matches = (rep.n, rep.k, rep.d, rep.R) == (e.n, e.k, e.d, e.R)
        checks.append((e, rep, matches and rep.is_quasi_perfect))
    out = []
    for e, rep, qp in checks:
        group, key = keys[e.name]
        clash = any(g == group and k == key for name, (g, k) in keys.items() if name != e.name)
        out.append(
            EntryCheck(
                name=e.name, n=rep.n, k=rep.k, d=rep.d, R=rep.R, quasi_perfect=qp,
                checksum_ok=CHECKSUMS.get(e.name) == block_checksum(e.block),
                distinct=not clash,
            )
        )
    return out


def corpus() -> list[CorpusEntry]:
    out = [CorpusEntry(name, blk, 24, 12, 7, 4) for name, blk in A_BLOCKS.items()]
    out += [CorpusEntry(name, blk, 25, 12, 8, 4) for name, blk in B_BLOCKS.items()]
    return out


CHECKSUMS: dict[str, str] = {
    "A1": "7241db766f5d3596d510ba4676ef9148f9cc5e1b5c6c36a767404c055d94e054",
    "A2": "6ded3730e84891264dafdb764d383bcd72835ada89c9196985d4b2c9ef070c0e",
    "A3": "6c55f953991a43a0e19f8937ef7f6a3428e659fa4d330e5bcdbfe692cddbb034",
    "A4": "64c56cb6925db218ef7df5458b46737e86fd8dcd3097f25310389cd858fa9445",
    "A5": "529899b60a34dd8245a1b4f28be4c7042cb894d684c94c87144f3cac137a8c0f",
    "A6": "c20d88b96136e077c8932a1bac22d3117add7533dbbf961c8b46097796f4c906",
    "A7": "8ac9bc4787bc265a685ab479268e93d674d585ac535736e11c01ed78480baa88",
    "A8": "c72db2ffd1c46c4514d9b5c143bc53c354730dde45eaf97f4a4ceca8b8883c76",
    "A9": "996d30ec67d746f928f74cc4f163ebe0b39cd49ce19d3517d56fac2f8dd31818",
    "A10": "696b858214e27a79522b0d5078e08395d191d0321681439ee2e23383deea0951",
    "A11": "e9eeaa6012dbc3d15a2154685445a7ed6f5d77fd90b0e9f77b052799410f1d17",
    "B1": "4aa4565c4c8b5ff2acec7fe7e6effefb3ca946030b5f9f381c126c11185dc6c6",
    "B2": "64836d9d04b431f7b3d87e0f2400bf76a4a8d513f18c00c7c746ecbe3fc9b6de",
}
