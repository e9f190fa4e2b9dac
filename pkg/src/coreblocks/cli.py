"""Command-line front end.

Every subcommand builds a JSON-ready payload; ``--format`` picks how it is
printed.  Integers too large for a JSON double are written as decimal
strings.  Exit codes: 0 ok or warning, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import cores, definingchar, glnq, selftest, symblocks, symchars
from .partitions import Partition
from .perms import PermutationGroupSpec, format_cycles

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2
SAFE_INT = 2**53
FORMATS = ["json", "csv", "plain"]


class UsageError(Exception):
    pass


@dataclass
class CommandResult:
    status: str  # "ok" | "warning" | "error"
    payload: Any = None
    diagnostics: list[str] = field(default_factory=list)
    output: str = ""
    exit_code: int = EXIT_OK

    def __post_init__(self) -> None:
        if self.status == "error" and self.exit_code == EXIT_OK:
            self.exit_code = EXIT_DOMAIN


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}")

    def exit(self, status: int = 0, message: str | None = None) -> None:  # type: ignore[override]
        # --help lands here; surface the text as a usage result
        raise UsageError(message or self.format_help())


def jsonable(obj: Any) -> Any:
    """Copy of ``obj`` with oversize integers turned into decimal strings."""
    if isinstance(obj, bool) or obj is None:
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= SAFE_INT else obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    return obj


# --- argument helpers ------------------------------------------------------------------


def _add(p: argparse.ArgumentParser, name: str, kind: Callable = int, help: str | None = None) -> None:
    """Accept an argument either positionally or as ``--name``."""
    p.add_argument(f"{name}_pos", nargs="?", type=kind, metavar=name.upper(), help=help)
    p.add_argument(f"--{name.replace('_', '-')}", dest=f"{name}_opt", type=kind, help=argparse.SUPPRESS)


def _get(args: argparse.Namespace, name: str) -> Any:
    pos, opt = getattr(args, f"{name}_pos"), getattr(args, f"{name}_opt")
    if pos is not None and opt is not None and pos != opt:
        raise UsageError(f"{name} given twice with different values")
    value = pos if pos is not None else opt
    if value is None:
        raise UsageError(f"missing argument {name.upper()}")
    return value


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


class _Subcommands:
    def __init__(self, action, parent: argparse.ArgumentParser) -> None:
        self.action, self.parent = action, parent

    def add_parser(self, name: str, **kwargs) -> argparse.ArgumentParser:
        return self.action.add_parser(name, parents=[self.parent], **kwargs)


def build_parser() -> _Parser:
    parser = _Parser(prog="coreblocks", description="Exact partition combinatorics for modular representation theory.")
    parser.add_argument("--format", choices=FORMATS, default=None)
    # also accepted after the subcommand
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    sub = _Subcommands(parser.add_subparsers(dest="command", parser_class=_Parser), fmt)

    p = sub.add_parser("chartable", help="character table of S_n")
    _add(p, "n")
    p = sub.add_parser("mn", help="character value chi_lambda(mu)")
    _add(p, "lambda", _partition)
    _add(p, "mu", _partition)
    p = sub.add_parser("blocks", help="ell-blocks of S_n")
    _add(p, "n")
    _add(p, "ell")
    p = sub.add_parser("idempotent", help="block idempotent over the rationals")
    _add(p, "n")
    _add(p, "ell")
    _add(p, "core", _partition)
    p = sub.add_parser("brauer", help="Brauer morphism of a block idempotent")
    _add(p, "n")
    _add(p, "ell")
    _add(p, "core", _partition)
    p.add_argument("cycles", nargs="*", help='generators in cycle notation, e.g. "(1,2,3)" "(4,5,6)"')

    cp = sub.add_parser("cores", help="d-core counts and constructions")
    csub = _Subcommands(cp.add_subparsers(dest="cores_command", parser_class=_Parser), fmt)
    p = csub.add_parser("count")
    _add(p, "d")
    _add(p, "nmax")
    p = csub.add_parser("kiming")
    _add(p, "d")
    _add(p, "n")
    p = csub.add_parser("defect-zero")
    _add(p, "n")
    _add(p, "ell")
    p.add_argument("--alternating", action="store_true")

    p = sub.add_parser("glblocks", help="unipotent ell-blocks of GL_n(q)")
    _add(p, "n")
    _add(p, "q")
    _add(p, "ell")
    p = sub.add_parser("dseries", help="unipotent d-series of GL_n(q)")
    _add(p, "n")
    _add(p, "d")
    p = sub.add_parser("weights", help="defining-characteristic simple modules and weights of GL_n(q)")
    _add(p, "n")
    _add(p, "q")
    p = sub.add_parser("selftest", help="run the invariant suites")
    p.add_argument("--max-n", type=int, default=8)
    return parser


# --- commands --------------------------------------------------------------------------


def cmd_chartable(args) -> CommandResult:
    return CommandResult("ok", symchars.character_table(_get(args, "n")).to_dict())


def cmd_mn(args) -> CommandResult:
    lam, mu = _get(args, "lambda"), _get(args, "mu")
    return CommandResult("ok", {"lambda": str(lam), "mu": str(mu), "value": str(symchars.mn_value(lam, mu))})


def cmd_blocks(args) -> CommandResult:
    n, ell = _get(args, "n"), _get(args, "ell")
    out = []
    for b in symblocks.blocks(n, ell):
        entry = b.to_dict()
        entry["defect_group"] = b.defect_group_label
        out.append(entry)
    return CommandResult("ok", {"n": n, "ell": ell, "blocks": out})


def _block(n: int, ell: int, core: Partition) -> symblocks.BlockDescriptor:
    for b in symblocks.blocks(n, ell):
        if b.core == core:
            return b
    raise ValueError(f"{core} is not the {ell}-core of any partition of {n}")


def cmd_idempotent(args) -> CommandResult:
    n, ell, core = _get(args, "n"), _get(args, "ell"), _get(args, "core")
    e = symblocks.block_idempotent(_block(n, ell, core))
    payload = {"core": str(core), "ell": ell, **e.to_dict()}
    payload["ell_integral"] = True
    payload["reduced"] = e.reduce_mod(ell).to_dict()["coefficients"]
    return CommandResult("ok", payload)


def cmd_brauer(args) -> CommandResult:
    n, ell, core = _get(args, "n"), _get(args, "ell"), _get(args, "core")
    group = PermutationGroupSpec.from_cycle_strings(n, args.cycles)
    block = _block(n, ell, core)
    image = symblocks.brauer_morphism(symblocks.block_idempotent(block).reduce_mod(ell), group)
    expected = symblocks.expected_brauer_image(block, group)
    payload = {
        "core": str(core),
        "ell": ell,
        "generators": [format_cycles(g) for g in group.generators],
        "fixed_points": list(group.fixed_points),
        "image": image.to_dict()["coefficients"],
        "expected": expected.to_dict()["coefficients"],
        "matches": image == expected,
    }
    return CommandResult("ok" if image == expected else "error", payload,
                         [] if image == expected else ["image differs from the closed formula"])


def cmd_cores(args) -> CommandResult:
    which = args.cores_command
    if which == "count":
        series = cores.count_cores_genfun(_get(args, "d"), _get(args, "nmax"))
        rows = [{"n": n, f"c_{series.d}(n)": str(c)} for n, c in enumerate(series.counts)]
        return CommandResult("ok", {"d": series.d, "nmax": series.nmax, "rows": rows})
    if which == "kiming":
        return CommandResult("ok", cores.kiming_construct(_get(args, "d"), _get(args, "n")).to_dict())
    if which == "defect-zero":
        n, ell = _get(args, "n"), _get(args, "ell")
        if args.alternating:
            answer, group = cores.defect_zero_alt(n, ell), f"A_{n}"
        else:
            answer, group = cores.defect_zero_sym(n, ell), f"S_{n}"
        count = cores.count_cores_genfun(ell, n)[n]
        return CommandResult("ok", {"n": n, "ell": ell, "group": group, "defect_zero": answer, "core_count": str(count)})
    raise UsageError("cores needs one of: count, kiming, defect-zero")


def cmd_glblocks(args) -> CommandResult:
    n, q, ell = _get(args, "n"), _get(args, "q"), _get(args, "ell")
    blocks = glnq.unipotent_blocks_gl(n, q, ell)
    payload = {"n": n, "q": q, "ell": ell, "d": glnq.mult_order(q, ell), "blocks": [b.to_dict() for b in blocks]}
    warnings = sorted({b.warning for b in blocks if b.warning})
    return CommandResult("warning" if warnings else "ok", payload, warnings)


def cmd_dseries(args) -> CommandResult:
    n, d = _get(args, "n"), _get(args, "d")
    series = glnq.d_series_partition(n, d)
    out = []
    for s in series:
        entry = s.to_dict()
        entry["relative_weyl_count"] = glnq.series_size_via_relative_weyl(d, s.weight)
        out.append(entry)
    return CommandResult("ok", {"n": n, "d": d, "series": out})


def cmd_weights(args) -> CommandResult:
    n, q = _get(args, "n"), _get(args, "q")
    ibr, alp = definingchar.alperin_weight_count(n, q)
    payload = {
        "ibr": str(ibr),
        "alp": str(alp),
        "steinberg": str(definingchar.steinberg_count(n, q)),
        "closed_form_check": ibr == alp == definingchar.closed_form_count(n, q),
    }
    return CommandResult("ok", payload)


def cmd_selftest(args) -> CommandResult:
    results = selftest.run_selftest(args.max_n)
    suites = [{"name": r.name, "passed": r.passed, **({"error": r.error} if r.error else {})} for r in results]
    failed = [r.name for r in results if not r.passed]
    return CommandResult("error" if failed else "ok", {"max_n": args.max_n, "suites": suites},
                         [f"suite failed: {name}" for name in failed])


COMMANDS = {
    "chartable": cmd_chartable,
    "mn": cmd_mn,
    "blocks": cmd_blocks,
    "idempotent": cmd_idempotent,
    "brauer": cmd_brauer,
    "cores": cmd_cores,
    "glblocks": cmd_glblocks,
    "dseries": cmd_dseries,
    "weights": cmd_weights,
    "selftest": cmd_selftest,
}


# --- rendering -------------------------------------------------------------------------


def _csv(rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue()


def render_csv(command: str, args, payload: dict) -> str:
    if command == "cores" and args.cores_command == "count":
        header = f"c_{payload['d']}(n)"
        return _csv([["n", header]] + [[r["n"], r[header]] for r in payload["rows"]])
    if command == "chartable":
        header = ["lambda\\mu"] + [c["type"] for c in payload["classes"]]
        return _csv([header] + [[lam] + row for lam, row in zip(payload["characters"], payload["values"])])
    if command == "blocks":
        rows = [["core", "weight", "defect", "abelian", "k", "members"]]
        rows += [
            [b["core"], b["weight"], b["defect"], str(b["abelian"]).lower(), b["k"], " ".join(b["members"])]
            for b in payload["blocks"]
        ]
        return _csv(rows)
    raise UsageError(f"--format csv is not available for {command}")


def render_plain(command: str, args, payload: Any) -> str:
    if command == "chartable":
        cols = [c["type"] for c in payload["classes"]]
        grid = [[""] + cols] + [[lam] + row for lam, row in zip(payload["characters"], payload["values"])]
        widths = [max(len(str(r[i])) for r in grid) for i in range(len(grid[0]))]
        return "\n".join("  ".join(str(v).rjust(w) for v, w in zip(r, widths)) for r in grid) + "\n"
    if command == "cores" and args.cores_command == "count":
        return render_csv(command, args, payload).replace(",", " ")
    lines = []
    for key, value in payload.items():
        text = value if isinstance(value, str) else json.dumps(jsonable(value))
        lines.append(f"{key}: {text}")
    return "\n".join(lines) + "\n"


def _default_format(command: str, args) -> str:
    return "csv" if command == "cores" and args.cores_command == "count" else "json"


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise UsageError(parser.format_usage().rstrip())
        result = COMMANDS[args.command](args)
        fmt = args.format or _default_format(args.command, args)
        if fmt == "json":
            result.output = json.dumps(jsonable(result.payload), indent=2) + "\n"
        elif fmt == "csv":
            result.output = render_csv(args.command, args, result.payload)
        else:
            result.output = render_plain(args.command, args, result.payload)
        return result
    except UsageError as exc:
        return CommandResult("error", None, [str(exc).rstrip()], exit_code=EXIT_USAGE)
    except (ValueError, ArithmeticError) as exc:
        return CommandResult("error", None, [f"{type(exc).__name__}: {exc}"])


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.output:
        sys.stdout.write(result.output)
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
