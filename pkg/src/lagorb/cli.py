"""Command-line front end: ``lagorb list | verify | flow``.

Exit codes: 0 pass, 1 verification or convergence failure, 2 usage or data error.
JSON output is deterministic for a fixed configuration; wall-clock times are
only included with ``--timing``.
"""
from __future__ import annotations

import argparse
import ast
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import jsonschema

from . import momentmap as mm
from .algebras import AlgebraUnavailableError, compact_algebra
from .classification import (
    REPORT_SCHEMA,
    MatricesUnavailableError,
    RecipeError,
    build_representation,
    case_table,
    get_case,
    resolve_n,
    root_level_result,
    verify_case,
)
from .representations import (
    Representation,
    RepresentationError,
    defining_rep,
    direct_sum,
    dual_rep,
    g2_rep,
    spin_rep,
    sym_power,
    tensor,
    wedge_power,
)
from .roots import UnsupportedTypeError

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

FLOW_SCHEMA = {
    "type": "object",
    "required": ["recipe", "seed", "dim_v", "algebra_dim", "final_norm", "final_norm_sq", "iterations",
                 "converged", "message", "norm_history"],
    "properties": {
        "recipe": {"type": "string"},
        "seed": {"type": "integer"},
        "dim_v": {"type": "integer"},
        "algebra_dim": {"type": "integer"},
        "final_norm": {"type": "number"},
        "final_norm_sq": {"type": "number"},
        "iterations": {"type": "integer"},
        "converged": {"type": "boolean"},
        "message": {"type": "string"},
        "norm_history": {"type": "array", "items": {"type": "number"}},
    },
}


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class CliConfig:
    command: str
    rows: tuple = ()
    n: int | None = None
    tol: float = 1e-9
    seed: int | None = None
    fmt: str = "json"
    e6_data: str | None = None
    jobs: int = 1
    output: str | None = None
    timing: bool = False
    recipe: str | None = None
    max_iter: int = 20000

    def __post_init__(self):
        if not self.tol > 0:
            raise UsageError(f"--tol must be positive, got {self.tol}")
        if self.jobs < 1:
            raise UsageError(f"--jobs must be >= 1, got {self.jobs}")
        for r in self.rows:
            if not 1 <= r <= 21:
                raise UsageError(f"--row must be in 1..21, got {r}")


# -- representation recipes for ``flow --recipe`` -----------------------------------------

def _literal(node):
    if isinstance(node, ast.Constant):
        return node.value
    if isinstance(node, ast.Name):
        return node.id
    if isinstance(node, (ast.Tuple, ast.List)):
        return [_literal(e) for e in node.elts]
    raise RecipeError(f"unsupported token in recipe: {ast.dump(node)}")


def _build(node) -> Representation:
    if isinstance(node, ast.Name) and node.id == "g2":
        return g2_rep()
    if not isinstance(node, ast.Call) or not isinstance(node.func, ast.Name):
        raise RecipeError("recipe must be a call such as sym(su(4), 2)")
    name, args = node.func.id, node.args
    kw = {k.arg: _literal(k.value) for k in node.keywords}
    if name in ("su", "so", "sp"):
        return defining_rep(compact_algebra(name, int(_literal(args[0]))))
    if name == "g2":
        return g2_rep()
    if name == "spin":
        chirality = str(_literal(args[1])) if len(args) > 1 else "full"
        return spin_rep(int(_literal(args[0])), chirality)
    if name in ("sym", "wedge"):
        fn = sym_power if name == "sym" else wedge_power
        return fn(_build(args[0]), int(_literal(args[1])))
    if name == "dual":
        return dual_rep(_build(args[0]))
    if name == "tensor":
        return tensor(_build(args[0]), _build(args[1]))
    if name == "sum":
        return direct_sum([_build(a) for a in args], kw.get("weights"))
    raise RecipeError(f"unknown recipe constructor {name!r}")


def parse_recipe(text: str) -> Representation:
    """Build a representation from e.g. ``sum(wedge(su(5),2), su(5), weights=(1,2))``."""
    try:
        tree = ast.parse(text, mode="eval")
    except SyntaxError as exc:
        raise RecipeError(f"cannot parse recipe {text!r}: {exc.msg}") from None
    try:
        return _build(tree.body)
    except (IndexError, TypeError) as exc:
        raise RecipeError(f"malformed recipe {text!r}: {exc}") from None


# -- commands -------------------------------------------------------------------------------

def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _emit(text: str, config: CliConfig) -> None:
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        sys.stdout.write(text + "\n")


def list_records(e6_data: str | None = None) -> list[dict]:
    out = []
    for s in case_table():
        available = s.matrix_available or (s.row == 19 and e6_data is not None)
        out.append({
            "row": s.row, "group": s.group, "rep": s.rep, "dim_P(V)": s.table_proj_dim,
            "K_p0": s.isotropy, "K_p/K_p0": s.component_group, "d": s.invariant_degree,
            "cond": s.params_constraint, "point_recipe": s.point_recipe, "matrix_available": available,
            "note": s.note,
        })
    return out


def _md_table(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join("" if c is None else str(c) for c in r) + " |" for r in rows]
    return "\n".join(lines)


def cmd_list(config: CliConfig) -> int:
    recs = list_records(config.e6_data)
    if config.fmt == "json":
        _emit(_dump(recs), config)
    else:
        header = list(recs[0].keys())
        _emit(_md_table(header, [[r[h] for h in header] for r in recs]), config)
    return EXIT_PASS


def _fmt_float(x):
    return "" if x is None else f"{x:.1e}"


def render_verify_md(records: list[dict]) -> str:
    header = ["#", "K", "ρ", "n", "dim P(V)", "orbit", "K_p0", "isotropy", "identified", "|μ|",
              "K_p/K_p0*", "d*", "pass", "s"]
    rows = []
    for r in records:
        meta = r["table_metadata"]
        rows.append([r["row"], r["group"], r["rep"], r["n"], r["expected_dim"], r["orbit_dim"],
                     f'{r["expected_isotropy"]} ({r["expected_isotropy_dim"]})', r["isotropy_dim"],
                     r["identified"], _fmt_float(r["mu_norm"]), meta["K_p/K_p0"], meta["d"],
                     {True: "yes", False: "NO", None: "n/a"}[r["pass"]],
                     "" if r["seconds"] is None else f'{r["seconds"]:.2f}'])
    return _md_table(header, rows) + "\n\n*table metadata, not verified"


def _run_one(row: int, config: CliConfig) -> dict:
    spec = get_case(row)
    if not spec.matrix_available and not (row == 19 and config.e6_data):
        return root_level_result(spec).to_record(config.timing)
    res = verify_case(spec, config.n if spec.parametric else None, config.seed, config.tol,
                      e6_data=config.e6_data, max_iter=config.max_iter)
    return res.to_record(config.timing)


def cmd_verify(config: CliConfig) -> int:
    single = len(config.rows) == 1
    if single:
        spec = get_case(config.rows[0])
        resolve_n(spec, config.n)
        if not spec.matrix_available and not (spec.row == 19 and config.e6_data):
            raise MatricesUnavailableError(f"row {spec.row}: matrices unavailable")
    elif config.n is not None:
        raise UsageError("--n requires a single --row")
    if config.jobs == 1:
        records = [_run_one(r, config) for r in config.rows]
    else:
        with ThreadPoolExecutor(max_workers=config.jobs) as pool:
            records = list(pool.map(lambda r: _run_one(r, config), config.rows))
    for rec in records:
        jsonschema.validate(rec, REPORT_SCHEMA)
    if config.fmt == "json":
        _emit(_dump(records), config)
    else:
        _emit(render_verify_md(records), config)
    verified = [r["pass"] for r in records if r["pass"] is not None]
    return EXIT_PASS if all(verified) else EXIT_FAIL


def cmd_flow(config: CliConfig) -> int:
    if config.recipe:
        rep, label = parse_recipe(config.recipe), config.recipe
    elif len(config.rows) == 1:
        spec = get_case(config.rows[0])
        n = resolve_n(spec, config.n)
        rep = build_representation(spec.row, n, config.e6_data)
        label = f"row {spec.row}" + (f", n={n}" if n is not None else "")
    else:
        raise UsageError("flow needs --recipe or a single --row")
    seed = 0 if config.seed is None else config.seed
    res = mm.kempf_ness_flow(rep, seed=seed, tol=config.tol, max_iter=config.max_iter)
    rec = {"recipe": label, "seed": seed, "dim_v": rep.dim_v, "algebra_dim": rep.algebra.dim,
           **res.summary()}
    rec["norm_history"] = [float(x) for x in rec["norm_history"]]
    jsonschema.validate(rec, FLOW_SCHEMA)
    if config.fmt == "json":
        _emit(_dump(rec), config)
    else:
        _emit(_md_table(["recipe", "seed", "dim V", "dim K", "final |μ|", "|μ|²", "iterations", "converged",
                         "message"],
                        [[label, seed, rep.dim_v, rep.algebra.dim, _fmt_float(res.final_norm),
                          _fmt_float(res.final_norm ** 2), res.iterations, res.converged, res.message]]), config)
    return EXIT_PASS if res.converged else EXIT_FAIL


# -- argument parsing ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lagorb", description="Certify Lagrangian orbits on projective space.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", dest="fmt", choices=("json", "md"), default="json")
    common.add_argument("--e6-data", metavar="PATH", help="structure-constant file with the 27-dim rep of e6")
    common.add_argument("--output", "-o", metavar="PATH", help="write the report here instead of stdout")

    sub.add_parser("list", parents=[common], help="show the classification table")

    run = argparse.ArgumentParser(add_help=False, parents=[common])
    run.add_argument("--n", type=int, help="parameter for n-dependent rows")
    run.add_argument("--tol", type=float, default=1e-9)
    run.add_argument("--seed", type=int)
    run.add_argument("--max-iter", type=int, default=20000)

    v = sub.add_parser("verify", parents=[run], help="verify rows of the table")
    sel = v.add_mutually_exclusive_group(required=True)
    sel.add_argument("--row", type=int, metavar="K")
    sel.add_argument("--all", action="store_true")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--timing", action="store_true", help="include wall-clock seconds (breaks byte-identity)")

    f = sub.add_parser("flow", parents=[run], help="run the gradient flow of |mu|^2")
    src = f.add_mutually_exclusive_group(required=True)
    src.add_argument("--row", type=int, metavar="K")
    src.add_argument("--recipe", help='e.g. "sym(su(4), 2)" or "spin(12, even)"')
    return parser


def config_from_args(args) -> CliConfig:
    rows = ()
    if getattr(args, "all", False):
        rows = tuple(range(1, 22))
    elif getattr(args, "row", None) is not None:
        rows = (args.row,)
    return CliConfig(
        command=args.command, rows=rows, n=getattr(args, "n", None), tol=getattr(args, "tol", 1e-9),
        seed=getattr(args, "seed", None), fmt=args.fmt, e6_data=args.e6_data, jobs=getattr(args, "jobs", 1),
        output=args.output, timing=getattr(args, "timing", False), recipe=getattr(args, "recipe", None),
        max_iter=getattr(args, "max_iter", 20000),
    )


COMMANDS = {"list": cmd_list, "verify": cmd_verify, "flow": cmd_flow}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
        return COMMANDS[config.command](config)
    except (UsageError, RecipeError, MatricesUnavailableError, UnsupportedTypeError, AlgebraUnavailableError,
            RepresentationError, OSError) as exc:
        print(f"lagorb: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
