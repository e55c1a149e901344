"""Command-line interface: ``qschur rsk | qinsert | pieri-matrix | schur | verify``.

All output is JSON. Exit status is 0 on success, 1 when a verification
fails, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .insertion import dual_rsk_word, parse_word, q_insert, rsk_word
from .pieri import pieri_matrix, wigner
from .qarith import QParam
from .schurweyl import DENSE_CAP, schur_apply, schur_transform_dense
from .tableaux import Partition, SemiStandardTableau
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _emit(obj, output: str | None = None) -> None:
    text = json.dumps(obj, indent=1)
    if output:
        Path(output).write_text(text + "\n")
    else:
        print(text)


def _q(text: str) -> QParam:
    try:
        return QParam.parse(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def cmd_rsk(args) -> int:
    w = parse_word(args.word)
    pair = dual_rsk_word(w) if args.dual else rsk_word(w)
    _emit({"word": list(w), "dual": args.dual, "P": pair.P.to_text(), "Q": pair.Q.to_text()})
    return 0


def cmd_qinsert(args) -> int:
    t = SemiStandardTableau.from_text(args.tableau)
    q = _q(args.q)
    outcomes = []
    seen = set()
    total = 0.0
    for o in q_insert(t, args.letter):
        c = wigner(o.result, t, args.letter, q)
        if o.result not in seen:
            seen.add(o.result)
            total += c * c
        outcomes.append(
            {"result": o.result.to_text(), "new_box_row": o.new_box.row, "sign": o.sign, "coefficient": c}
        )
    _emit({"tableau": t.to_text(), "letter": args.letter, "q": q.tag(), "outcomes": outcomes, "normalization": total})
    return 0


def cmd_pieri(args) -> int:
    lam = Partition.from_text(args.lam)
    doc = pieri_matrix(lam, args.d, _q(args.q)).labeled().to_document(args.format)
    _emit(doc, args.output)
    return 0


def cmd_schur(args) -> int:
    q = _q(args.q)
    if args.mode == "matrix":
        try:
            T = schur_transform_dense(args.n, args.d, q, cap=args.cap)
        except ValueError as e:
            raise UsageError(str(e)) from None
        lm = T.labeled()
        lm.metadata["tolerance"] = 1e-9
        _emit(lm.to_document(args.format), args.output)
        return 0
    if not args.state_file:
        raise UsageError("--mode apply needs --state-file")
    try:
        state = np.array(json.loads(Path(args.state_file).read_text()), dtype=float)
    except (OSError, ValueError) as e:
        raise UsageError(f"cannot read state file: {e}") from None
    if state.shape != (args.d**args.n,):
        raise UsageError(f"state has length {state.size}, expected {args.d ** args.n}")
    out = schur_apply(state, args.n, args.d, q, direction=args.direction)
    _emit([float(x) for x in out], args.output)
    return 0


def cmd_verify(args) -> int:
    qs = [s for s in args.q_list.split(",") if s]
    checks = run_suite(args.suite, args.n, args.d, qs, args.tolerance)
    ok = all(c.passed for c in checks)
    _emit({"suite": args.suite, "passed": ok, "checks": [c.as_dict() for c in checks]})
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qschur", description="Quantum Schur-Weyl transform toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("rsk", help="RSK (or dual RSK) of a comma-separated word")
    r.add_argument("word")
    r.add_argument("--dual", action="store_true", help="column insertion instead of row insertion")
    r.set_defaults(func=cmd_rsk)

    qi = sub.add_parser("qinsert", help="quantum insertion outcomes with Wigner coefficients")
    qi.add_argument("tableau", help='rows joined by "/", e.g. "1,1,2/2,3"; "" for empty')
    qi.add_argument("letter", type=int)
    qi.add_argument("--q", default="1")
    qi.set_defaults(func=cmd_qinsert)

    pm = sub.add_parser("pieri-matrix", help="Pieri transform of V^lambda (x) V")
    pm.add_argument("--lambda", dest="lam", required=True, help='e.g. "[2,1]"')
    pm.add_argument("--d", type=int, required=True)
    pm.add_argument("--q", default="1")
    pm.add_argument("--format", choices=["dense", "sparse"], default="dense")
    pm.add_argument("--output")
    pm.set_defaults(func=cmd_pieri)

    s = sub.add_parser("schur", help="Schur-Weyl transform as a matrix, or applied to a state")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.add_argument("--q", default="1")
    s.add_argument("--output")
    s.add_argument("--format", choices=["dense", "sparse"], default="dense")
    s.add_argument("--mode", choices=["matrix", "apply"], default="matrix")
    s.add_argument("--state-file", help="JSON array of length d^n (apply mode)")
    s.add_argument("--direction", choices=["forward", "inverse"], default="forward")
    s.add_argument("--cap", type=int, default=DENSE_CAP, help="largest d^n for matrix mode")
    s.set_defaults(func=cmd_schur)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--d", type=int, default=2)
    v.add_argument("--q-list", default="0.5,1,2")
    v.add_argument("--tolerance", type=float)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"qschur: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
