"""Command-line front end.

Exit status: 0 success (a negative verdict is still a success), 1 I/O, schema
or argument errors, 2 validation violations, 3 data that no quasihereditary
algebra realizes or a divisibility failure in the Borel profile.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from typing import Any, Callable, Sequence

from . import catalog, engine
from .errors import (
    DivisibilityError,
    InputError,
    InvalidData,
    InvalidSpec,
    NonPositiveK,
    NotRealizable,
    ShapeError,
)
from .model import (
    QhData,
    Violation,
    encode_int,
    encode_matrix,
    from_json,
    poset_spec_from_json,
    to_json,
    validate,
)

EXIT_OK, EXIT_INPUT, EXIT_INVALID, EXIT_UNREALIZABLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- input --------------------------------------------------------------------


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _parse_json(raw: bytes, what: str) -> Any:
    try:
        return json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise InputError(f"{what} is not valid UTF-8 JSON: {exc}") from None


def _unwrap(doc: Any) -> Any:
    # a JSON report from `catalog` carries the generated data as its result
    if isinstance(doc, dict) and doc.get("command") == "catalog" and "result" in doc:
        return doc["result"]
    return doc


def load_input(path: str) -> tuple[QhData, str]:
    raw = _read_bytes(path)
    data = from_json(_unwrap(_parse_json(raw, path)))
    return data, hashlib.sha256(raw).hexdigest()


def parse_int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


# -- rendering ----------------------------------------------------------------


def _cell(x) -> str:
    return str(x)


def table_matrix(title: str, labels: Sequence[str], mat) -> str:
    cells = [[""] + list(labels)] + [[lab] + [_cell(x) for x in row] for lab, row in zip(labels, mat)]
    width = max(len(c) for row in cells for c in row)
    lines = [title]
    for row in cells:
        lines.append("  ".join(c.rjust(width) for c in row))
    return "\n".join(lines)


def _vector(title: str, labels: Sequence[str], vec) -> str:
    heads = list(labels)
    vals = [_cell(x) for x in vec]
    width = max(len(c) for c in heads + vals)
    return "\n".join(
        [title, "  ".join(h.rjust(width) for h in heads), "  ".join(v.rjust(width) for v in vals)]
    )


def _witness(x) -> Any:
    return encode_int(int(x)) if x.denominator == 1 else engine.witness_str(x)


# -- commands -----------------------------------------------------------------
# each returns (result payload, table text, violations)


def cmd_validate(data: QhData, args):
    violations = validate(data)
    result = {"labels": list(data.labels), "valid": not violations}
    if violations:
        text = "invalid: %d violation(s)\n" % len(violations) + "\n".join(f"  {v}" for v in violations)
    else:
        text = "valid: all invariants hold"
    return result, text, violations


def cmd_v_matrix(data: QhData, args):
    v = engine.compute_V(data)
    return (
        {"labels": list(data.labels), "V": encode_matrix(v.entries)},
        table_matrix("V (row i: composition factors of Res L_i)", data.labels, v.entries),
        [],
    )


def cmd_l_seq(data: QhData, args):
    l = engine.compute_l(data)
    return (
        {"labels": list(data.labels), "l": [encode_int(x) for x in l]},
        _vector("l (lengths of Res L_i)", data.labels, l.values),
        [],
    )


def cmd_borel(data: QhData, args):
    verdict = engine.borel_existence(data)
    if isinstance(verdict, engine.Good):
        result = {
            "labels": list(data.labels),
            "verdict": "good",
            "k": [encode_int(x) for x in verdict.k],
        }
        text = "\n".join(
            [
                _vector("solution of V x = dim L", data.labels, verdict.k),
                "verdict: has a regular exact Borel subalgebra (simple dimensions above)",
            ]
        )
    else:
        failing = [lab for lab in data.labels if lab in verdict.failing_indices]
        result = {
            "labels": list(data.labels),
            "verdict": "not_good",
            "witness": [_witness(x) for x in verdict.witness],
            "failing": failing,
        }
        text = "\n".join(
            [
                _vector(
                    "solution of V x = dim L",
                    data.labels,
                    [engine.witness_str(x) for x in verdict.witness],
                ),
                "failing: " + ", ".join(failing),
                "verdict: no regular exact Borel subalgebra",
            ]
        )
    return result, text, []


def _k_arg(data: QhData, args) -> list[int]:
    if args.k is None:
        return [1] * len(data)
    return parse_int_list(args.k)


def cmd_profile(data: QhData, args):
    prof = engine.borel_profile(data, _k_arg(data, args))
    labs = data.labels
    result = {
        "labels": list(labs),
        "k": [encode_int(x) for x in prof.k],
        "cartan_bop": encode_matrix(prof.cartan_bop),
        "cartan_b": encode_matrix(prof.cartan_b),
        "len_q": [encode_int(x) for x in prof.len_q],
        "len_p": [encode_int(x) for x in prof.len_p],
        "dim_q": [encode_int(x) for x in prof.dim_q],
        "dim_p": [encode_int(x) for x in prof.dim_p],
        "dim_b": encode_int(prof.dim_b),
        "n_table": encode_matrix(prof.n_table),
        "dim_w": encode_int(prof.dim_w),
    }
    text = "\n\n".join(
        [
            _vector("k = dim L^B", labs, prof.k),
            table_matrix("[Q_i^B : L_j^B]", labs, prof.cartan_bop),
            table_matrix("Cartan matrix of B, [P_i^B : L_j^B]", labs, prof.cartan_b),
            _vector("length of Q_i^B", labs, prof.len_q),
            _vector("length of P_i^B", labs, prof.len_p),
            _vector("dim Q_i^B", labs, prof.dim_q),
            _vector("dim P_i^B", labs, prof.dim_p),
            table_matrix("n_ij (row i, column j < i)", labs, prof.n_table),
            f"dim B = {prof.dim_b}\ndim W = {prof.dim_w}",
        ]
    )
    return result, text, []


def cmd_representative(data: QhData, args):
    k = _k_arg(data, args)
    m = engine.representative_multiplicities(data, k)
    name = engine.representative_name(data.labels, m)
    result = {
        "labels": list(data.labels),
        "k": [encode_int(x) for x in k],
        "m": [encode_int(x) for x in m],
        "algebra": name,
    }
    text = "\n".join([_vector("k = dim L^B", data.labels, k), _vector("m = V k", data.labels, m), name])
    return result, text, []


def cmd_flags(data: QhData, args):
    f = engine.class_flags(data)
    result = {
        "all_good": f.all_good,
        "v_is_identity": f.v_is_identity,
        "minimal_good_here": f.minimal_good_here,
        "height_shortcut": f.height_shortcut,
    }
    text = "\n".join(f"{key:<18} {str(val).lower()}" for key, val in result.items())
    return result, text, []


ANALYSES: dict[str, Callable] = {
    "validate": cmd_validate,
    "v-matrix": cmd_v_matrix,
    "l-seq": cmd_l_seq,
    "borel": cmd_borel,
    "profile": cmd_profile,
    "representative": cmd_representative,
    "flags": cmd_flags,
}


def build_catalog(args) -> QhData:
    tree = None
    if args.family == "ringel_dual_tree":
        if args.tree is not None:
            tree = poset_spec_from_json(_parse_json(_read_bytes(args.tree), args.tree))
        elif args.n is not None:
            tree = catalog.random_tree(args.n, random.Random(args.seed or 0))
        else:
            raise InvalidSpec("ringel_dual_tree needs --tree FILE or --n N")
    data = catalog.generate(
        catalog.FamilySpec(args.family, n=args.n, tree=tree, chain=args.chain)
    )
    if args.twist is not None:
        data = catalog.morita_twist(data, parse_int_list(args.twist))
    return data


# -- driver -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)

    parser = _Parser(
        prog="qhborel",
        description="Restriction matrices and regular exact Borel subalgebras of quasihereditary algebras.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ANALYSES:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("file", help="input JSON file, '-' for standard input")
        if name in ("profile", "representative"):
            sp.add_argument("--k", help="comma-separated simple dimensions over B (default all ones)")
    sp = sub.add_parser("catalog", parents=[common])
    sp.add_argument("family", choices=catalog.FAMILIES)
    sp.add_argument("--n", type=int)
    sp.add_argument("--tree", help="PosetSpec JSON file for ringel_dual_tree")
    sp.add_argument("--twist", help="comma-separated k; replaces simple dimensions by V k")
    sp.add_argument("--chain", action="store_true", help="semisimple on a chain instead of an antichain")
    return parser


def _emit(fmt: str, command: str, digest: str, result, text: str, violations: list[Violation], out):
    if fmt == "json":
        report = {
            "command": command,
            "input_sha256": digest,
            "result": result,
            "violations": [v.to_json() for v in violations],
        }
        out.write(json.dumps(report, indent=2) + "\n")
    else:
        out.write(text.rstrip("\n") + "\n")


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        err.write(f"{exc}\n")
        return EXIT_INPUT
    fmt = getattr(args, "format", "table")
    args.seed = getattr(args, "seed", None)

    try:
        if args.command == "catalog":
            data = build_catalog(args)
            doc = to_json(data)
            digest = hashlib.sha256(
                json.dumps(doc, sort_keys=True, separators=(",", ":")).encode()
            ).hexdigest()
            # table format is the bare data document so it can be piped on
            _emit(fmt, "catalog", digest, doc, json.dumps(doc, indent=2), [], out)
            return EXIT_OK
        data, digest = load_input(args.file)
        if args.command == "validate":
            result, text, violations = cmd_validate(data, args)
            _emit(fmt, args.command, digest, result, text, violations, out)
            if violations:
                err.write(f"{len(violations)} violation(s)\n")
                return EXIT_INVALID
            return EXIT_OK
        violations = validate(data)
        if violations:
            result, text, _ = cmd_validate(data, args)
            _emit(fmt, args.command, digest, result, text, violations, out)
            err.write(f"input has {len(violations)} violation(s); nothing computed\n")
            return EXIT_INVALID
        result, text, _ = ANALYSES[args.command](data, args)
        _emit(fmt, args.command, digest, result, text, [], out)
        return EXIT_OK
    except InvalidData as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except (NotRealizable, DivisibilityError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_UNREALIZABLE
    except (OSError, InputError, UsageError, ShapeError, NonPositiveK, InvalidSpec) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INPUT


def main(argv: Sequence[str] | None = None) -> None:
    sys.exit(run(argv))
