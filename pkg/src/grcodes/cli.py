"""Command-line driver for building, verifying, and exporting family codes."""

from __future__ import annotations

import argparse
import json
import sys
import time

import numpy as np

from . import constructions as cons
from . import codes as codes_mod
from .constructions import (
    ConstructionError,
    FAMILY_KEYS,
    FamilySpec,
    build_element,
    claimed_params,
    family_profile,
    parse_spec,
    witness_codeword,
)
from .codes import (
    DEFAULT_SEARCH_SEED,
    DistanceCapError,
    EXHAUSTIVE_CAP,
    LinearCode,
    family_code,
    four_cycle_report,
    is_dual_containing,
    is_self_dual,
    min_distance_exhaustive,
    min_distance_search,
    quantum_params,
)
from .fields import GF2, GF4
from .linalg import FieldMatrix

EXIT_OK = 0
EXIT_CONTRACT = 1
EXIT_UNKNOWN_FAMILY = 2
EXIT_CAP = 3

_CATALOG = [
    ("class1", "C_{4n}^m x C2", "(2(4n)^m, (4n)^m, 2*3^(m/2) | 4*3^((m-1)/2))",
     "self-dual", "proven"),
    ("class2", "C_{6n}^m x C2", "(2(6n)^m, (6n)^m, 2^(m+1))",
     "self-dual", "proven"),
    ("dihedralqr", "Dih(GF(q)+), q=3 mod 8", "(2q, q, (q+1)/4+3)",
     "self-dual", "conjectured"),
    ("gendihedral", "Dih(C_q^t)", "(2q^t, q^t, -)",
     "self-dual", "conjectured"),
    ("dc34", "C_{8n}^m x C2", "(2(8n)^m, 3/4*2(8n)^m, 2^m)",
     "dual-containing", "proven"),
    ("dc34b", "C_{8n}^m x C4", "(4(8n)^m, 3(8n)^m, 2^(m+1))",
     "dual-containing", "proven"),
    ("dc78", "C_{16n}^m x C2", "(2(16n)^m, 7/8*2(16n)^m, 2^m)",
     "dual-containing", "proven"),
    ("general2t", "C_{2^(t+1)}^m x C2", "(2^((t+1)m+1), (1-2^-t)*len, -)",
     "dual-containing", "conjectured"),
    ("gf4selfdual", "C_{4n}^m x C2 over GF(4)", "(2(4n)^m, (4n)^m, 2^(m+1))",
     "self-dual", "proven"),
    ("gf4dc34", "C_{4n}^m x C2 over GF(4)", "(2(4n)^m, 3/4*len, 2^m)",
     "dual-containing (Hermitian)", "proven"),
    ("gf4dc78", "C_{8n}^m x C2 over GF(4)", "(2(8n)^m, 7/8*len, 2^m)",
     "dual-containing (Hermitian)", "proven"),
    ("dualofdc34", "C_{8n}^m x C2", "(2(8n)^m, 1/4*len, high)",
     "dual of dual-containing", "proven"),
]


def _matrix_text(m: FieldMatrix) -> str:
    f = m.field
    return "\n".join(
        " ".join(f.element_str(int(x)) for x in row) for row in m.data
    )


def _matrix_json(m: FieldMatrix) -> dict:
    f = m.field
    return {
        "cols": m.cols,
        "field": f"GF({f.q})",
        "rows": m.rows,
        "data": [[f.element_str(int(x)) for x in row] for row in m.data],
    }


def matrix_to_alist(m: FieldMatrix) -> str:
    """MacKay alist text for a binary matrix (n m header, 1-based indices)."""
    if (m.data > 1).any():
        raise ValueError("alist export requires a binary matrix")
    data = m.data
    nrows, ncols = data.shape
    col_idx = [list(np.nonzero(data[:, c])[0] + 1) for c in range(ncols)]
    row_idx = [list(np.nonzero(data[r])[0] + 1) for r in range(nrows)]
    max_col = max((len(c) for c in col_idx), default=0)
    max_row = max((len(r) for r in row_idx), default=0)
    lines = [
        f"{ncols} {nrows}",
        f"{max_col} {max_row}",
        " ".join(str(len(c)) for c in col_idx),
        " ".join(str(len(r)) for r in row_idx),
    ]
    for idx, width in [(col_idx, max_col), (row_idx, max_row)]:
        for entries in idx:
            padded = entries + [0] * (width - len(entries))
            lines.append(" ".join(str(e) for e in padded))
    return "\n".join(lines) + "\n"


def matrix_from_alist(text: str) -> FieldMatrix:
    """Parse a MacKay alist back into a GF(2) matrix."""
    tokens = text.split()
    pos = 0

    def take(count):
        nonlocal pos
        vals = [int(t) for t in tokens[pos:pos + count]]
        pos += count
        return vals

    ncols, nrows = take(2)
    max_col, max_row = take(2)
    col_w = take(ncols)
    take(nrows)  # row weights, implied by the index lists
    data = np.zeros((nrows, ncols), dtype=np.uint8)
    for c in range(ncols):
        for r in take(max_col):
            if r:
                data[r - 1, c] = 1
    # row index lists are redundant but validated
    for r in range(nrows):
        for c in take(max_row):
            if c:
                data[r, c - 1] = 1
    if [int(w) for w in data.sum(axis=0)] != col_w:
        raise ValueError("alist column weights do not match index lists")
    return FieldMatrix(GF2, data)


def _select_matrix(code: LinearCode, what: str) -> FieldMatrix:
    if what == "generator":
        return code.generator
    if what == "check":
        if code.check is None:
            raise ValueError("code has no check matrix")
        return code.check
    raise ValueError(f"unknown matrix selector {what!r}")


# ---------------------------------------------------------------------------
# subcommands


def _cmd_catalog(args):
    for key, group, params, duality, status in _CATALOG:
        print(f"{key:12s} {group:28s} {params:42s} {duality:28s} {status}")
    return EXIT_OK


def _cmd_build(args):
    spec = parse_spec(args.spec)
    built = build_element(spec)
    code = family_code(spec, built)
    print(f"# {spec}")
    print(f"# generator element: {built.element}")
    print(f"# generator matrix {code.k}x{code.n}")
    print(_matrix_text(code.generator))
    print(f"# check matrix {code.n - code.k}x{code.n}")
    print(_matrix_text(code.check))
    return EXIT_OK


def _cmd_verify(args):
    spec = parse_spec(args.spec)
    prof = family_profile(spec)
    built = build_element(spec)  # raises ConstructionError on any breach
    code = family_code(spec, built)
    ip = prof["inner_product"]
    checks = {
        "nilpotency": True,  # enforced by build_element
        "symmetry": True,
        "rank": code.k == prof["rank"],
    }
    if prof["duality"] == "self_dual":
        checks["self_dual"] = is_self_dual(code, ip)
    elif prof["duality"] == "dual_containing":
        checks["dual_containing"] = is_dual_containing(code, ip)
    else:  # dual of a dual-containing code: its dual contains it
        dual = codes_mod.dual_code(code, ip)
        checks["contained_in_dual"] = dual.generator.rowspace_contains(
            code.generator
        )
    for name, ok in sorted(checks.items()):
        print(f"{name}: {'ok' if ok else 'FAIL'}")
    if not all(checks.values()):
        return EXIT_CONTRACT
    print(f"verify {spec}: ok ({code.n},{code.k}) over GF({code.field.q})")
    return EXIT_OK


def _cmd_distance(args):
    spec = parse_spec(args.spec)
    built = build_element(spec)
    code = family_code(spec, built, with_check=False)
    claim = claimed_params(spec)
    witness = witness_codeword(spec, built)
    t0 = time.time()
    result = {
        "spec": str(spec), "n": code.n, "k": code.k,
        "claimed": claim.d, "claim_status": claim.status,
        "witness_weight": witness.support(),
    }
    try:
        result["distance"] = min_distance_exhaustive(code, args.exhaustive_cap)
        result["method"] = "exhaustive"
    except DistanceCapError:
        if not args.budget:
            print(
                f"{code.codeword_count()} codewords exceed the cap "
                f"{args.exhaustive_cap}; pass --budget for a search bound",
                file=sys.stderr,
            )
            return EXIT_CAP
        found = min_distance_search(code, args.budget, args.seed)
        result["distance_upper"] = min(found, result["witness_weight"])
        result["method"] = "witness+search"
    result["seconds"] = round(time.time() - t0, 3)
    print(json.dumps(result, sort_keys=True))
    return EXIT_OK


def _cmd_quantum(args):
    spec = parse_spec(args.spec)
    qp = quantum_params(spec)
    print(f"[[{qp.n},{qp.k_q},{qp.d_q}]]")
    return EXIT_OK


def _cmd_export(args):
    spec = parse_spec(args.spec)
    code = family_code(spec)
    matrix = _select_matrix(code, args.what)
    if args.format == "text":
        payload = _matrix_text(matrix) + "\n"
    elif args.format == "json":
        payload = json.dumps(_matrix_json(matrix), sort_keys=True) + "\n"
    elif args.format == "alist":
        payload = matrix_to_alist(matrix)
    else:
        raise ValueError(f"unknown format {args.format!r}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)
    return EXIT_OK


def _cmd_cycles(args):
    spec = parse_spec(args.spec)
    code = family_code(spec)
    rep = four_cycle_report(code.check)
    print(json.dumps({
        "spec": str(spec),
        "cycle_count": rep.cycle_count,
        "row_pairs": rep.row_pairs,
        "min_row_gap": rep.min_row_gap,
    }, sort_keys=True))
    return EXIT_OK


def _build_parser():
    p = argparse.ArgumentParser(
        prog="grcodes",
        description="Group-ring code constructions: build, verify, measure.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("catalog", help="list the code families").set_defaults(
        func=_cmd_catalog
    )

    for name, func, helptext in [
        ("build", _cmd_build, "construct and print matrices"),
        ("verify", _cmd_verify, "run the family contract suite"),
        ("quantum", _cmd_quantum, "print CSS quantum parameters"),
        ("cycles", _cmd_cycles, "print the 4-cycle report"),
    ]:
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("spec", help='family spec, e.g. "class1:m=2,n=1"')
        sp.set_defaults(func=func)

    sp = sub.add_parser("distance", help="exact or bounded minimum distance")
    sp.add_argument("spec")
    sp.add_argument("--exhaustive-cap", type=int, default=EXHAUSTIVE_CAP)
    sp.add_argument("--budget", type=int, default=0,
                    help="codeword budget for randomized search fallback")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEARCH_SEED)
    sp.set_defaults(func=_cmd_distance)

    sp = sub.add_parser("export", help="write a matrix to text/json/alist")
    sp.add_argument("spec")
    sp.add_argument("--format", choices=["text", "json", "alist"],
                    default="text")
    sp.add_argument("--what", choices=["generator", "check"],
                    default="generator")
    sp.add_argument("--out", default=None)
    sp.set_defaults(func=_cmd_export)
    return p


def cli_main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ConstructionError as exc:
        print(f"contract failure: {exc}", file=sys.stderr)
        return EXIT_CONTRACT
    except ValueError as exc:
        msg = str(exc)
        print(f"error: {msg}", file=sys.stderr)
        if "unknown family" in msg or "unknown parameter" in msg:
            return EXIT_UNKNOWN_FAMILY
        return EXIT_CONTRACT


def main():  # console-script entry point
    raise SystemExit(cli_main())


if __name__ == "__main__":
    main()
