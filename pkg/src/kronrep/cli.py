"""Command-line front end.

Subcommands: ``classify``, ``construct``, ``enumerate``, ``verify``, ``region``.
JSON is the machine interface; text output is meant for people.

Exit codes: 0 success, 1 negative verdict, 2 usage error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .cover import (
    canonical_form,
    cover_thin_tree,
    default_composition,
    enumerate_subtrees,
    format_word,
    resolve_budget,
    subtree_to_dot,
)
from .errors import BudgetExceededError, DomainError, KronrepError
from .linalg import F2, FieldSpec, parse_field
from .representation import (
    DEFAULT_SEED,
    coefficient_quiver_dot,
    coefficient_quiver_report,
    module_to_dict,
    pushdown,
)
from .roots import (
    RootTag,
    classify,
    cover_thin_exists,
    cover_thin_violation,
    in_fundamental_domain,
    tits_form,
)
from .verify import verify_theorem_window

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

REGION_COLUMNS = ["x", "y", "q", "class", "in_cone", "in_F", "cover_thin"]


@dataclass
class RunConfig:
    n: int
    field: FieldSpec = F2
    seed: int = DEFAULT_SEED
    budget: int = 12
    output_format: str = "text"

    def __post_init__(self):
        if self.budget < 2:
            raise DomainError(f"budget must be >= 2, got {self.budget}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated list of integers, got {text!r}")


def _field(text: str) -> FieldSpec:
    try:
        return parse_field(text)
    except DomainError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-n", "--arrows", type=int, required=True, help="number of arrows n >= 1")
    common.add_argument("--field", type=_field, default=F2, help="f2 (default), f3, f<p> or q")
    common.add_argument("--seed", type=lambda s: int(s, 0), default=DEFAULT_SEED, help="seed for randomized steps")
    common.add_argument("--budget", type=int, default=None, help="max x+y for exhaustive enumeration (env KRONREP_BUDGET)")
    common.add_argument("--format", choices=("json", "dot", "text"), default="text")

    parser = argparse.ArgumentParser(prog="kronrep", description="Tree modules over the n-Kronecker quiver.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="classify a dimension vector")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)

    p = sub.add_parser("construct", parents=[common], help="build a cover-thin module")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)
    p.add_argument("--composition", type=_int_list, default=None, help='parts y(1),...,y(x), e.g. "1,2"')
    p.add_argument("--perm", type=_int_list, default=None, help="arrow relabelling as a comma list")
    p.add_argument("--quiver", action="store_true", help="with --format dot, draw the coefficient quiver")

    p = sub.add_parser("enumerate", parents=[common], help="list deck classes of subtrees")
    p.add_argument("x", type=int)
    p.add_argument("y", type=int)

    p = sub.add_parser("verify", parents=[common], help="check the tree-module bound on a window")
    p.add_argument("--max", type=int, default=10, dest="max_total")
    p.add_argument("--fields", default="f2,f3", help="comma list of fields for the End check")

    p = sub.add_parser("region", parents=[common], help="CSV of lattice points for plotting")
    p.add_argument("--max", type=int, default=10, dest="max_coord")
    return parser


def _dump(payload) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def cmd_classify(cfg: RunConfig, x: int, y: int) -> tuple[int, str]:
    rc = classify(cfg.n, (x, y))
    try:
        in_f = in_fundamental_domain(cfg.n, (x, y))
    except DomainError:
        in_f = None
    thin = None if (x, y) == (0, 0) or x < 0 or y < 0 else cover_thin_exists(cfg.n, (x, y))
    if cfg.output_format == "json":
        return EXIT_OK, _dump(
            {"n": cfg.n, "dim": [x, y], "class": rc.tag.value, "q": rc.q, "in_F": in_f, "cover_thin": thin}
        )
    name = {RootTag.REAL: "real root", RootTag.IMAGINARY: "imaginary root", RootTag.NOT_A_ROOT: "not a root"}[rc.tag]
    fmt = lambda v: "n/a" if v is None else str(v).lower()
    return EXIT_OK, f"({x},{y}) n={cfg.n}: {name}, q={rc.q}, in-F {fmt(in_f)}, cover-thin {fmt(thin)}\n"


def _subtree_dict(tree) -> dict:
    code, order = canonical_form(tree)
    return {
        "code": code.decode(),
        "vertices": [format_word(w) for w in order],
        "edges": [[format_word(t), format_word(s), label] for t, s, label in tree.edges],
    }


def cmd_construct(cfg: RunConfig, x: int, y: int, composition=None, perm=None, quiver=False) -> tuple[int, str]:
    violation = cover_thin_violation(cfg.n, (x, y))
    if violation is not None:
        return EXIT_NEGATIVE, f"no cover-thin module: {violation}\n"
    tree = cover_thin_tree(cfg.n, x, y, composition=composition, perm=perm)
    module = pushdown(tree, cfg.field)
    report = coefficient_quiver_report(module)
    lo, hi = min(x, y), max(x, y)
    used = list(composition) if composition is not None else (list(default_composition(cfg.n, lo, hi)) if lo >= 1 else [])
    if cfg.output_format == "dot":
        return EXIT_OK, coefficient_quiver_dot(module) if quiver else subtree_to_dot(tree)
    payload = {
        "n": cfg.n,
        "dim": [x, y],
        "composition": used,
        "perm": list(perm) if perm is not None else list(range(1, cfg.n + 1)),
        "dualized": x > y,
        "subtree": _subtree_dict(tree),
        "module": module_to_dict(module),
        "coefficientQuiver": {
            "totalNonzeros": report.total_nonzeros,
            "connected": report.connected,
            "acyclic": report.acyclic,
            "isTreePresentation": report.is_tree_presentation,
        },
    }
    if cfg.output_format == "json":
        return EXIT_OK, _dump(payload)
    lines = [
        f"cover-thin module of dimension ({x},{y}) over {cfg.field.name}, n={cfg.n}",
        f"code {payload['subtree']['code']}",
        f"composition {used}",
        f"nonzeros {report.total_nonzeros}, tree presentation {str(report.is_tree_presentation).lower()}",
    ]
    for label, m in enumerate(payload["module"]["matrices"], start=1):
        lines.append(f"alpha{label}: {m}")
    return EXIT_OK, "\n".join(lines) + "\n"


def cmd_enumerate(cfg: RunConfig, x: int, y: int) -> tuple[int, str]:
    trees = enumerate_subtrees(cfg.n, x, y, budget=cfg.budget)
    codes = [canonical_form(t)[0].decode() for t in trees]
    if cfg.output_format == "json":
        return EXIT_OK, _dump({"n": cfg.n, "dim": [x, y], "count": len(codes), "codes": codes})
    if cfg.output_format == "dot":
        return EXIT_OK, "".join(subtree_to_dot(t, name=f"t{i}") for i, t in enumerate(trees))
    return EXIT_OK, "".join(c + "\n" for c in codes) + f"{len(codes)} classes\n"


def cmd_verify(cfg: RunConfig, max_total: int, fields: tuple[FieldSpec, ...]) -> tuple[int, str]:
    report = verify_theorem_window(cfg.n, max_total, fields=fields, seed=cfg.seed, budget=cfg.budget)
    code = EXIT_OK if report.passed else EXIT_NEGATIVE
    if cfg.output_format == "json":
        return code, _dump(report.to_dict())
    lines = []
    for r in report.roots:
        x, y = r.root
        if r.status == "outside-cover-thin":
            rep = r.fundamental_representative
            lines.append(f"({x},{y}) q={r.q}: outside cover-thin region; Coxeter^{r.coxeter_power} -> ({rep[0]},{rep[1]})")
            continue
        ends = sorted({d for m in r.modules for d in m.end_dims.values()})
        lines.append(
            f"({x},{y}) q={r.q}: {r.class_count} classes (need {r.required}), "
            f"dim End {ends}, {r.status}"
        )
    lines.append(("PASS" if report.passed else "FAIL") + f" n={cfg.n} max={max_total} fields={','.join(report.fields)}")
    return code, "\n".join(lines) + "\n"


def region_rows(n: int, max_coord: int) -> list[dict]:
    rows = []
    for x in range(max_coord + 1):
        for y in range(max_coord + 1):
            if (x, y) == (0, 0):
                continue
            rc = classify(n, (x, y))
            try:
                in_f = in_fundamental_domain(n, (x, y))
            except DomainError:
                in_f = False
            rows.append(
                {
                    "x": x,
                    "y": y,
                    "q": rc.q,
                    "class": rc.tag.name.lower(),
                    "in_cone": int(rc.tag is RootTag.IMAGINARY),
                    "in_F": int(in_f),
                    "cover_thin": int(cover_thin_exists(n, (x, y))),
                }
            )
    return rows


def cmd_region(cfg: RunConfig, max_coord: int) -> tuple[int, str]:
    rows = region_rows(cfg.n, max_coord)
    if cfg.output_format == "json":
        return EXIT_OK, _dump(rows)
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REGION_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return EXIT_OK, buf.getvalue()


def run(argv: list[str] | None = None) -> tuple[int, str, str]:
    """Run a command and return ``(exit code, stdout text, stderr text)``."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), "", ""
    try:
        cfg = RunConfig(args.arrows, args.field, args.seed, resolve_budget(args.budget), args.format)
        if args.command == "classify":
            code, out = cmd_classify(cfg, args.x, args.y)
        elif args.command == "construct":
            code, out = cmd_construct(cfg, args.x, args.y, args.composition, args.perm, args.quiver)
            if code == EXIT_NEGATIVE:
                return code, "", out
        elif args.command == "enumerate":
            code, out = cmd_enumerate(cfg, args.x, args.y)
        elif args.command == "verify":
            fields = tuple(parse_field(f) for f in args.fields.split(",") if f.strip())
            code, out = cmd_verify(cfg, args.max_total, fields)
        else:
            code, out = cmd_region(cfg, args.max_coord)
    except BudgetExceededError as exc:
        return EXIT_BUDGET, "", f"error: {exc}\n"
    except (DomainError, KronrepError) as exc:
        return EXIT_USAGE, "", f"error: {exc}\n"
    return code, out, ""


def main(argv: list[str] | None = None) -> int:
    code, out, err = run(argv)
    sys.stdout.write(out)
    sys.stderr.write(err)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
