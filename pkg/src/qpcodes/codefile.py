"""
Plain-text code files.

    # optional comment lines
    q n k
    <k rows of n digits in 0..q-1>

Digits may be separated by spaces; blank lines are ignored.
"""

from __future__ import annotations

from pathlib import Path

from .code import LinearCode
from .errors import BadDigit, BadHeader, BadRow, CodeFileRankDeficient, RankDeficient
from .gf import CodeMatrix


def parse_code_file(text: str) -> LinearCode:
    lines = [
        (no, raw)
        for no, raw in enumerate(text.splitlines(), start=1)
        if raw.strip() and not raw.lstrip().startswith("#")
    ]
    if not lines:
        raise BadHeader("empty code file", line=1)
    header_no, header = lines[0]
    fields = header.split()
    if len(fields) != 3 or not all(f.isdigit() for f in fields):
        raise BadHeader(f"expected 'q n k', got {header.strip()!r}", line=header_no)
    q, n, k = (int(f) for f in fields)
    if q not in (2, 3):
        raise BadHeader(f"q must be 2 or 3, got {q}", line=header_no, column=1)
    if n < 1 or not 1 <= k <= n:
        raise BadHeader(f"need 1 <= k <= n, got n={n}, k={k}", line=header_no)
    body = lines[1:]
    if len(body) != k:
        where = body[k][0] if len(body) > k else (body[-1][0] if body else header_no)
        raise BadRow(f"expected {k} rows, found {len(body)}", line=where)
    rows = []
    for no, raw in body:
        row = []
        for col, ch in enumerate(raw, start=1):
            if ch.isspace():
                continue
            if not ch.isdigit() or int(ch) >= q:
                raise BadDigit(f"{ch!r} is not a digit of GF({q})", line=no, column=col)
            row.append(int(ch))
        if len(row) != n:
            raise BadRow(f"expected {n} digits, found {len(row)}", line=no)
        rows.append(row)
    try:
        return LinearCode(CodeMatrix(q, rows))
    except RankDeficient as exc:
        raise CodeFileRankDeficient(str(exc), line=body[0][0]) from None


def read_code_file(path: str | Path) -> LinearCode:
    return parse_code_file(Path(path).read_text())


def format_code_file(code: LinearCode) -> str:
    g = code.generator
    return f"{code.q} {code.n} {code.k}\n" + "\n".join(g.to_strings()) + "\n"


def write_code_file(path: str | Path, code: LinearCode) -> None:
    Path(path).write_text(format_code_file(code))
