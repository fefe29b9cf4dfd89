"""
qpc: command-line front end.

Exit status: 0 success, 1 no quasi-perfect code found under --expect-qp,
2 input error, 3 search budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .appendix import verify_corpus
from .codefile import read_code_file, write_code_file
from .equivalence import canonical_form
from .errors import BudgetExceeded, HypothesisViolated, QPCodeError, TooLarge
from .radii import classify_radius_class
from .search import AT_LEAST, EXACT, ClassificationTask, chain_run, classify, qp_scan

EXIT_OK = 0
EXIT_NO_QP = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3

# candidate codes examined per classification unless --long-running
DEFAULT_BUDGET = 1_000_000


def _budget(args) -> int | None:
    if args.budget is not None:
        return args.budget
    env = os.environ.get("QPC_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise _InputError(f"QPC_BUDGET must be an integer, got {env!r}") from None
    return None if getattr(args, "long_running", False) else DEFAULT_BUDGET


class _InputError(Exception):
    pass


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _label(rep) -> str:
    return f"[{rep.n},{rep.k},{rep.d}]_{rep.q}"


def _describe(rep) -> str:
    kind = "perfect" if rep.is_perfect else "quasi-perfect" if rep.is_quasi_perfect else "neither"
    if rep.trivial_qp:
        kind += " (trivial)"
    return (
        f"{_label(rep)}  e={rep.e}  R={rep.R}  {kind}\n"
        f"  weights: {list(rep.weights.counts)}\n"
        f"  alpha:   {list(rep.cosets.alpha)}"
    )


def cmd_analyze(args) -> int:
    code = read_code_file(args.file)
    rep = classify_radius_class(code)
    _emit(args, rep.to_dict(), _describe(rep))
    if args.expect_qp and not rep.is_quasi_perfect:
        return EXIT_NO_QP
    return EXIT_OK


def _result_payload(result) -> dict:
    t = result.task
    return {
        "q": t.q, "n": t.n, "k": t.k, "d": t.d_min,
        "mode": t.mode,
        "all": result.count_all,
        "qp": result.count_qp,
        "exhaustive": result.exhaustive,
        "candidates": result.candidates,
        "seconds": round(result.seconds, 3),
        "codes": [
            {"generator": list(c.generator.to_strings()), **rep.to_dict()}
            for c, rep in zip(result.representatives, result.reports)
        ],
    }


def _result_text(result) -> str:
    t = result.task
    lines = [
        f"{t.label}: all={result.count_all} qp={result.count_qp}"
        f" ({'exhaustive' if result.exhaustive else 'partial'}, {result.seconds:.2f}s)"
    ]
    qp = set(result.qp_subset)
    for i, rep in enumerate(result.reports):
        mark = " QP" if i in qp else ""
        lines.append(f"  #{i:<4d} d={rep.d} R={rep.R} alpha={list(rep.cosets.alpha)}{mark}")
    return "\n".join(lines)


def cmd_classify(args) -> int:
    task = ClassificationTask(
        args.q, args.n, args.k, args.d,
        mode=AT_LEAST if args.at_least_d else EXACT,
        include_degenerate=args.include_degenerate,
        max_candidates=_budget(args),
        jobs=args.jobs,
    )
    try:
        result = classify(task)
    except BudgetExceeded as exc:
        if exc.partial is not None:
            _emit(args, _result_payload(exc.partial), _result_text(exc.partial))
        print(f"qpc: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
        for i, c in enumerate(result.representatives):
            tag = "qp" if i in set(result.qp_subset) else "all"
            write_code_file(out / f"q{c.q}_n{c.n}_k{c.k}_{i:04d}_{tag}.txt", c)
    _emit(args, _result_payload(result), _result_text(result))
    if args.expect_qp and result.count_qp == 0:
        return EXIT_NO_QP
    return EXIT_OK


def cmd_scan(args) -> int:
    if args.n_min > args.n_max:
        raise _InputError("--n-min exceeds --n-max")
    rows = qp_scan(
        args.q, args.k, range(args.n_min, args.n_max + 1),
        d_min=args.d_min, max_candidates=_budget(args),
    )
    payload = [
        {"n": r.n, "k": args.k, "d": r.d, "all": r.count_all, "qp": r.count_qp, "skipped": r.skipped}
        for r in rows
    ]
    text = "\n".join(
        f"[{r.n},{args.k}]_{args.q}  skipped (budget)" if r.skipped
        else f"[{r.n},{args.k},{r.d}]_{args.q}  all={r.count_all} qp={r.count_qp}"
        for r in rows
    ) or "no quasi-perfect rows"
    _emit(args, {"q": args.q, "k": args.k, "rows": payload}, text)
    if any(r.skipped for r in rows):
        return EXIT_BUDGET
    if args.expect_qp and not any(r.count_qp for r in rows):
        return EXIT_NO_QP
    return EXIT_OK


def cmd_chain(args) -> int:
    code = read_code_file(args.file)
    result = chain_run(code, max_steps=args.steps)
    payload = [
        {"generator": list(c.generator.to_strings()), **rep.to_dict()} for c, rep in result.steps
    ]
    text = "\n".join(
        f"step {i}: {_label(rep)} R={rep.R} {'QP' if rep.is_quasi_perfect else 'not QP'}"
        for i, (_, rep) in enumerate(result.steps)
    )
    _emit(args, {"steps": payload}, text)
    return EXIT_OK


def cmd_verify_appendix(args) -> int:
    checks = verify_corpus()
    text = "\n".join(
        f"{c.name:4s} [{c.n},{c.k},{c.d}] R={c.R} qp={c.quasi_perfect} "
        f"checksum={c.checksum_ok} distinct={c.distinct}  {'PASS' if c.ok else 'FAIL'}"
        for c in checks
    )
    ok = all(c.ok for c in checks)
    _emit(args, {"entries": [c.to_dict() for c in checks], "ok": ok}, text)
    return EXIT_OK if ok else EXIT_NO_QP


def cmd_canon(args) -> int:
    code = read_code_file(args.file)
    key = canonical_form(code)
    rows = list(key.canonical_generator.to_strings())
    text = f"fingerprint {key.fingerprint}\n{code.q} {code.n} {code.k}\n" + "\n".join(rows)
    _emit(args, {"fingerprint": key.fingerprint, "q": code.q, "n": code.n, "k": code.k,
                 "canonical_generator": rows}, text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    p = argparse.ArgumentParser(prog="qpc", description=__doc__.strip().splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="distance, radii and QP status of a code")
    a.add_argument("file")
    a.add_argument("--expect-qp", action="store_true")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify", parents=[common], help="all inequivalent [n,k,d]_q codes")
    c.add_argument("--q", type=int, required=True, choices=(2, 3))
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--at-least-d", action="store_true", help="minimum distance d or more")
    c.add_argument("--include-degenerate", action="store_true")
    c.add_argument("--out", metavar="DIR", help="write representatives as code files")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--budget", type=int, metavar="NODES", help="max candidate codes examined")
    c.add_argument("--long-running", action="store_true", help="lift the default budget")
    c.add_argument("--expect-qp", action="store_true")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("scan", parents=[common], help="QP rows for fixed k over a length range")
    s.add_argument("--q", type=int, required=True, choices=(2, 3))
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--n-min", type=int, required=True)
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--d-min", type=int, default=3)
    s.add_argument("--budget", type=int, metavar="NODES")
    s.add_argument("--long-running", action="store_true")
    s.add_argument("--expect-qp", action="store_true")
    s.set_defaults(func=cmd_scan)

    ch = sub.add_parser("chain", parents=[common], help="extend a QP code with R=2 by new H columns")
    ch.add_argument("file")
    ch.add_argument("--steps", type=int)
    ch.set_defaults(func=cmd_chain)

    v = sub.add_parser("verify-appendix", parents=[common], help="check the stored [24,12,7] and [25,12,8] codes")
    v.set_defaults(func=cmd_verify_appendix)

    k = sub.add_parser("canon", parents=[common], help="canonical generator and fingerprint")
    k.add_argument("file")
    k.set_defaults(func=cmd_canon)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (BudgetExceeded, TooLarge) as exc:
        print(f"qpc: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, _InputError, HypothesisViolated, QPCodeError, ValueError) as exc:
        print(f"qpc: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
