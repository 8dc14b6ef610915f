"""Command-line interface.

Every command reads a complex JSON document
``{"n": int, "facets": [[int, ...], ...], "mode": "strict"|"relaxed"}``
where named, writes JSON or TSV to stdout, and exits 0 exactly when no
check failed.  All commands are deterministic given flags and seed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import section4 as s4
from .complexes import (
    f_vector,
    from_json,
    ideal_degree_slice,
    minimal_nonfaces,
    to_json_dict,
)
from .exterior import gin
from .faces import degree, members_of
from .homology import betti_tsv, hochster_betti, shifted_betti
from .lexsegment import delta_lex
from .shifting import enumerate_shifted, replay, shift_to_shifted
from .verify import verify_theorems


def _load(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return from_json(fh.read())


def _cmd_fvector(args) -> int:
    cx = _load(args.complex)
    print(json.dumps(list(f_vector(cx))))
    return 0


def _cmd_betti(args) -> int:
    cx = _load(args.complex)
    if args.method == "hochster":
        table = hochster_betti(cx, args.field)
    else:
        table = shifted_betti(cx)
    print(betti_tsv(table))
    return 0


def _parse_pairs(text: str) -> list[tuple[int, int]]:
    pairs = []
    for token in text.split():
        i, j = token.split(",")
        pairs.append((int(i), int(j)))
    return pairs


def _cmd_shift(args) -> int:
    cx = _load(args.complex)
    if args.pairs is not None:
        result = replay(cx, _parse_pairs(args.pairs))
        seq = _parse_pairs(args.pairs)
    else:
        result, seq = shift_to_shifted(cx, args.auto, seed=args.seed)
    doc = to_json_dict(result)
    doc["sequence"] = [list(p) for p in seq]
    print(json.dumps(doc))
    return 0


def _cmd_enumerate(args) -> int:
    cx = _load(args.complex)
    for shifted in sorted(enumerate_shifted(cx, args.limit), key=lambda c: c.canonical_key()):
        print(json.dumps(list(shifted.canonical_key())))
    return 0


def _cmd_gin(args) -> int:
    cx = _load(args.complex)
    result = gin(cx, p=args.prime, seed=args.seed, retries=args.retries)
    gens_by_degree: dict[int, list] = {}
    for g in minimal_nonfaces(result):
        gens_by_degree.setdefault(degree(g), []).append(list(members_of(g)))
    report = [
        {
            "degree": d,
            "pivot_count": len(ideal_degree_slice(result, d).monomials),
            "new_generators": gens_by_degree.get(d, []),
        }
        for d in range(1, result.n + 1)
        if ideal_degree_slice(result, d).monomials
    ]
    print(json.dumps({"complex": to_json_dict(result), "pivot_report": report}))
    return 0


def _cmd_lex(args) -> int:
    cx = _load(args.complex)
    print(json.dumps(to_json_dict(delta_lex(f_vector(cx), cx.n))))
    return 0


def _cmd_verify(args) -> int:
    report = verify_theorems(args.n, args.trials, p=args.prime, seed=args.seed)
    print(report.to_json())
    return 0 if report.passed else 1


def _cmd_section4(args) -> int:
    if args.phase == "build":
        print(json.dumps(to_json_dict(s4.section4_build())))
        return 0
    classified = s4.section4_enumerate_and_classify()
    if args.phase == "classify":
        for q in sorted(classified):
            print("".join(q))
        ok = set(classified) == set(s4.EXPECTED_QSEQUENCES)
        return 0 if ok else 1
    report = s4.section4_negative_results(
        p=args.prime, seed=args.seed, include_gin=not args.skip_gin, classified=classified
    )
    print(report.to_json())
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="shiftlab")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fvector", help="f-vector of a complex")
    p.add_argument("complex")
    p.set_defaults(func=_cmd_fvector)

    p = sub.add_parser("betti", help="graded Betti numbers as TSV i/j/beta")
    p.add_argument("complex")
    p.add_argument("--method", choices=["hochster", "shifted"], default="hochster")
    p.add_argument("--field", type=int, default=2)
    p.set_defaults(func=_cmd_betti)

    p = sub.add_parser("shift", help="replay a shift sequence or shift to completion")
    p.add_argument("complex")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--pairs", help='sequence like "1,3 2,5"')
    g.add_argument("--auto", choices=["sweep", "random"])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_shift)

    p = sub.add_parser("enumerate", help="all reachable shifted complexes")
    p.add_argument("complex")
    p.add_argument("--limit", type=int, default=100_000)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("gin", help="exterior algebraic shifted complex")
    p.add_argument("complex")
    p.add_argument("--prime", type=int, default=32003)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--retries", type=int, default=3)
    p.set_defaults(func=_cmd_gin)

    p = sub.add_parser("lex", help="lexsegment complex with the same f-vector")
    p.add_argument("complex")
    p.set_defaults(func=_cmd_lex)

    p = sub.add_parser("verify", help="randomized inequality checks")
    p.add_argument("--n", type=int, default=6)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--prime", type=int, default=32003)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("section4", help="the 15-vertex counterexample")
    p.add_argument("--phase", choices=["build", "classify", "negatives"], required=True)
    p.add_argument("--prime", type=int, default=32003)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--skip-gin", action="store_true",
                   help="skip the slow generic-initial non-membership check")
    p.set_defaults(func=_cmd_section4)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"shiftlab: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
