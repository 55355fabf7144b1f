"""Command-line surface: enumerate, query, translate, verify, draw.

Exit codes: 0 ok, 1 usage error, 2 invalid mathematical input,
3 verification failure.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import json
import sys

from .dictionaries import (
    InvalidAJError,
    InvalidPartitionError,
    grassmann_aj_to_partition,
    grassmann_partition_to_aj,
    lagrangian_aj_to_partition,
    lagrangian_partition_to_aj,
    quadric_descriptor,
    spinor_aj_to_partition,
    spinor_partition_to_aj,
)
from .grading import NotCominusculeError
from .rootsys import InvalidSystemError, build_root_system
from .schubert import (
    AJ,
    Marker,
    UnrealizedAJError,
    aj_of,
    ideal_of_aj,
)
from .singloc import sing_report, spinor_r
from .oracle import default_suite, verify_space
from .weyl import get_diagram, inversion_set, word_element

USAGE_ERROR = 1
MATH_ERROR = 2
VERIFY_ERROR = 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse defaults to exit code 2
        raise UsageError(message)


# -- formatting --------------------------------------------------------------


def format_aj(aj, kind: str) -> str:
    if isinstance(aj, Marker):
        return aj.value
    body = "".join(map(str, aj.J)) if kind in ("E6", "E7") else ",".join(map(str, aj.J))
    return f"{aj.a}:{body}"


def format_word(word) -> str:
    if not word:
        return "-"
    if max(word) <= 9:
        return "".join(map(str, word))
    return ",".join(map(str, word))


def format_partition(parts) -> str:
    return "(" + ",".join(map(str, parts)) + ")"


def parse_aj(text: str, kind: str, rank: int) -> AJ:
    try:
        a_part, j_part = text.split(":", 1)
        a = int(a_part)
        if "," in j_part:
            J = tuple(sorted(int(x) for x in j_part.split(",")))
        else:
            J = tuple(sorted(int(ch) for ch in j_part))
        aj = AJ(a, J)
    except (ValueError, TypeError) as exc:
        raise UnrealizedAJError(f"malformed a:J literal {text!r}: {exc}") from exc
    if any(not 1 <= j <= rank for j in aj.J):
        raise UnrealizedAJError(f"J {aj.J} out of range 1..{rank}")
    return aj


def parse_partition(text: str) -> tuple[int, ...]:
    body = text.strip().removeprefix("(").removesuffix(")")
    try:
        return tuple(int(x) for x in body.split(","))
    except ValueError as exc:
        raise InvalidPartitionError(f"malformed partition literal {text!r}") from exc


def parse_word(text: str) -> tuple[int, ...]:
    try:
        if "," in text:
            return tuple(int(x) for x in text.split(","))
        return tuple(int(ch) for ch in text)
    except ValueError as exc:
        raise UnrealizedAJError(f"malformed word literal {text!r}") from exc


# -- per-space data assembly --------------------------------------------------


def _space_rows(kind: str, rank: int, node: int):
    rs = build_root_system(kind, rank)
    diagram = get_diagram(kind, rank, node)
    rows = []
    for mask in diagram.classes:
        roots = diagram.roots_of(mask)
        report = sing_report(rs, node, roots)
        rows.append((diagram.dim_of(mask), diagram.word_of(mask), report))
    return rows


def render_list_tsv(kind: str, rank: int, node: int) -> str:
    lines = []
    for dim, word, report in _space_rows(kind, rank, node):
        if isinstance(report.aj, Marker):
            lines.append(f"{dim}\t{format_word(word)}\t-\t-")
            continue
        sing = ", ".join(format_aj(c.aj, kind) for c in report.components)
        lines.append(
            f"{dim}\t{format_word(word)}\t{format_aj(report.aj, kind)}\t{sing}"
        )
    return "\n".join(lines) + "\n"


def _aj_json(aj):
    if isinstance(aj, Marker):
        return {"a": None, "J": []}
    return {"a": aj.a, "J": list(aj.J)}


def render_list_json(kind: str, rank: int, node: int) -> str:
    classes = []
    for dim, word, report in _space_rows(kind, rank, node):
        entry = {"dim": dim, "word": list(word)}
        entry.update(_aj_json(report.aj))
        entry["sing"] = [
            {**_aj_json(c.aj), "codim": c.codim} for c in report.components
        ]
        classes.append(entry)
    doc = {
        "space": {"kind": kind, "rank": rank, "node": node},
        "classes": classes,
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def render_sing_json(kind: str, rank: int, node: int, mask: int) -> str:
    rs = build_root_system(kind, rank)
    diagram = get_diagram(kind, rank, node)
    roots = diagram.roots_of(mask)
    report = sing_report(rs, node, roots)
    doc = {
        "space": {"kind": kind, "rank": rank, "node": node},
        "class": {
            "dim": diagram.dim_of(mask),
            "word": list(diagram.word_of(mask)),
            **_aj_json(report.aj),
        },
        "pi": [list(c.epsilon) for c in report.components],
        "components": [
            {
                **_aj_json(c.aj),
                "codim": c.codim,
                "epsilon": list(c.epsilon),
                "excised": [list(r) for r in c.excised],
            }
            for c in report.components
        ],
        "predicted_count": report.predicted_count,
        "min_codim": report.min_codim,
    }
    return json.dumps(doc, separators=(",", ":")) + "\n"


def _dict_rows(kind: str, rank: int, node: int):
    rs = build_root_system(kind, rank)
    diagram = get_diagram(kind, rank, node)
    rows = []
    for mask in diagram.classes:
        aj = aj_of(rs, node, diagram.roots_of(mask))
        if kind == "A":
            rows.append((grassmann_aj_to_partition(rank, node, aj), aj, None))
        elif kind == "C" and node == rank:
            rows.append((lagrangian_aj_to_partition(rank, aj), aj, None))
        elif kind == "D" and node == rank:
            r = None if isinstance(aj, Marker) else spinor_r(rs, aj)
            rows.append((spinor_aj_to_partition(rank, aj), aj, r))
        elif node == 1 and kind in ("B", "D"):
            parity = "odd" if kind == "B" else "even"
            if isinstance(aj, Marker):
                rows.append((None, aj, None))
            else:
                rows.append((quadric_descriptor(parity, rank, aj), aj, None))
        else:
            raise InvalidAJError(f"no dictionary for {kind}{rank}/P{node}")
    return rows


def render_dict_tsv(kind: str, rank: int, node: int) -> str:
    lines = []
    for left, aj, r in _dict_rows(kind, rank, node):
        label = "-" if isinstance(aj, Marker) else format_aj(aj, kind)
        if kind in ("A", "C") or (kind == "D" and node == rank):
            cells = [format_partition(left), label]
            if kind == "D":
                cells.append("-" if r is None else str(r))
        else:  # quadrics
            cells = [label, left.tag if left is not None else "-"]
        lines.append("\t".join(cells))
    return "\n".join(lines) + "\n"


def render_dict_json(kind: str, rank: int, node: int) -> str:
    rows = []
    for left, aj, r in _dict_rows(kind, rank, node):
        entry = _aj_json(aj)
        if kind in ("A", "C") or (kind == "D" and node == rank):
            entry["partition"] = list(left)
            if kind == "D":
                entry["r"] = r
        else:
            entry["descriptor"] = None if left is None else left.tag
        rows.append(entry)
    doc = {"space": {"kind": kind, "rank": rank, "node": node}, "rows": rows}
    return json.dumps(doc, separators=(",", ":")) + "\n"


def render_dot(kind: str, rank: int, node: int) -> str:
    rs = build_root_system(kind, rank)
    diagram = get_diagram(kind, rank, node)
    label = {
        mask: format_aj(aj_of(rs, node, diagram.roots_of(mask)), kind)
        for mask in diagram.classes
    }
    lines = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    by_dim: dict[int, list[int]] = {}
    for mask in diagram.classes:
        by_dim.setdefault(diagram.dim_of(mask), []).append(mask)
    for dim in sorted(by_dim):
        names = " ".join(f'"{label[m]}"' for m in by_dim[dim])
        lines.append(f"  {{ rank=same; {names} }}")
    for lower, upper in diagram.cover_edges:
        lines.append(f'  "{label[lower]}" -> "{label[upper]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- class lookup for `sing` ---------------------------------------------------


def _resolve_class(kind: str, rank: int, node: int, args) -> int:
    rs = build_root_system(kind, rank)
    diagram = get_diagram(kind, rank, node)
    if args.aj:
        aj = parse_aj(args.aj, kind, rank)
        return diagram.mask_of(ideal_of_aj(rs, node, aj))
    if args.partition:
        parts = parse_partition(args.partition)
        if kind == "A":
            aj = grassmann_partition_to_aj(rank, node, parts)
        elif kind == "C" and node == rank:
            aj = lagrangian_partition_to_aj(rank, parts)
        elif kind == "D" and node == rank:
            aj = spinor_partition_to_aj(rank, parts)
        else:
            raise InvalidPartitionError(
                f"no partition dictionary for {kind}{rank}/P{node}"
            )
        if isinstance(aj, Marker):
            return 0 if aj is Marker.BOTTOM else diagram.full_mask
        return diagram.mask_of(ideal_of_aj(rs, node, aj))
    word = parse_word(args.word)
    roots = inversion_set(rs, word_element(rs, word))
    return diagram.mask_of(roots)  # raises ValueError if outside the space


# -- command implementations ---------------------------------------------------


def _check_space(kind: str, rank: int, node: int) -> None:
    rs = build_root_system(kind, rank)
    if not 1 <= node <= rs.rank:
        raise NotCominusculeError(f"node {node} out of range 1..{rs.rank}")
    get_diagram(kind, rank, node)  # raises NotCominusculeError


def cmd_list(args) -> int:
    _check_space(args.kind, args.rank, args.node)
    if args.format == "json":
        sys.stdout.write(render_list_json(args.kind, args.rank, args.node))
    else:
        sys.stdout.write(render_list_tsv(args.kind, args.rank, args.node))
    return 0


def cmd_sing(args) -> int:
    _check_space(args.kind, args.rank, args.node)
    mask = _resolve_class(args.kind, args.rank, args.node, args)
    sys.stdout.write(render_sing_json(args.kind, args.rank, args.node, mask))
    return 0


def cmd_dict(args) -> int:
    _check_space(args.kind, args.rank, args.node)
    if args.format == "json":
        sys.stdout.write(render_dict_json(args.kind, args.rank, args.node))
    else:
        sys.stdout.write(render_dict_tsv(args.kind, args.rank, args.node))
    return 0


def cmd_hasse(args) -> int:
    _check_space(args.kind, args.rank, args.node)
    sys.stdout.write(render_dot(args.kind, args.rank, args.node))
    return 0


def cmd_verify(args) -> int:
    if args.all:
        spaces = default_suite()
    elif args.space and len(args.space) == 3:
        kind, rank, node = args.space
        spaces = [(kind, int(rank), int(node))]
    else:
        raise UsageError("verify needs either <kind> <rank> <node> or --all")
    failures = 0
    for kind, rank, node in spaces:
        report = verify_space(kind, rank, node)
        status = "ok" if report.ok else f"{len(report.violations)} violations"
        sys.stdout.write(
            f"{report.space}\tclasses={report.class_count}"
            f"\tchecks={report.checks}\t{status}\n"
        )
        for v in report.violations:
            sys.stdout.write(f"  violation\t{v.label}\t{v.check}\t{v.detail}\n")
        for note in report.notes:
            sys.stdout.write(f"  note\t{note}\n")
        failures += len(report.violations)
    return VERIFY_ERROR if failures else 0


def build_parser() -> _Parser:
    parser = _Parser(prog="cominuscule", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_space(p):
        p.add_argument("kind", choices=["A", "B", "C", "D", "E6", "E7"])
        p.add_argument("rank", type=int)
        p.add_argument("node", type=int)

    p = sub.add_parser("list", help="full class table of one space")
    add_space(p)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_list)

    p = sub.add_parser("sing", help="singular locus of one class")
    add_space(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--aj")
    group.add_argument("--partition")
    group.add_argument("--word")
    p.set_defaults(func=cmd_sing)

    p = sub.add_parser("dict", help="partition dictionary of one space")
    add_space(p)
    p.add_argument("--format", choices=["tsv", "json"], default="tsv")
    p.set_defaults(func=cmd_dict)

    p = sub.add_parser("hasse", help="cover graph in DOT format")
    add_space(p)
    p.add_argument("--dot", action="store_true", default=True)
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="run the oracle cross-check suite")
    p.add_argument("space", nargs="*")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (
        InvalidSystemError,
        NotCominusculeError,
        UnrealizedAJError,
        InvalidPartitionError,
        InvalidAJError,
        ValueError,
    ) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return MATH_ERROR


if __name__ == "__main__":
    sys.exit(main())
