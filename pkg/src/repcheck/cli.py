"""Command-line driver.

Subcommands::

    chartab <ref> [--seed S]     compute and print a character table
    hypc <ref>                   degree/indicator uniqueness check
    corb <ref>                   real-degree distinctness check
    uniq <ref>                   complex-degree distinctness check
    orbits <module-expr>         exact orbit census on F_p^n
    subsets <ref> --k K          orbits on k-subsets of the points
    partition --n N              self-associate splitting partition
    bounds {fgh,fixdim,reglb,dthreshold,b,n1,nhwh,subsetsum}
    catalog list                 the built-in group catalog

A group reference is ``catalog:NAME`` or a path to a ``.grp``/``.ctb``
file.  A module expression is a reference to a matrix-group entry or a
constructor term such as ``deleted_perm(catalog:A8,11)``, ``dual(E)``,
``tensor(E1,E2)``, or ``chop(E,i)`` (the i-th composition factor).

Exit codes: 0 = success / property holds, 1 = property fails (witnesses
printed), 2 = usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds, catalog, hypc, modfp
from .catalog import CatalogError
from .chartab import CharacterTable, TableError, dixon_schneider
from .ctformat import (FormatError, TableFile, emit_table,
                       parse_group_spec, parse_table)
from .modfp import FpModuleAction
from .permcore import PermGroup


class UsageError(ValueError):
    """Bad reference or argument; reported on one line, exit 2."""


# ---------------------------------------------------------------------------
# reference resolution


def _load_group_file(path: str) -> PermGroup | FpModuleAction:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    spec = parse_group_spec(text)
    if spec.kind == "perm":
        return PermGroup(spec.perm_generators)
    from .modfp import MatFp, matrix_group_order
    mats = [MatFp(m, spec.prime) for m in spec.mat_generators]
    return FpModuleAction(spec.prime, spec.dim, mats,
                          matrix_group_order(mats))


def resolve_group(ref: str) -> PermGroup:
    """A permutation group from ``catalog:NAME`` or a ``.grp`` path."""
    if ref.startswith("catalog:"):
        grp = catalog.build(ref[len("catalog:"):])
    else:
        grp = _load_group_file(ref)
    if not isinstance(grp, PermGroup):
        raise UsageError(f"{ref} is a matrix group, not a permutation "
                         f"group")
    return grp


def resolve_table(ref: str, seed: int = 0) -> CharacterTable:
    """A character table: shipped data for data-file catalog entries,
    a ``.ctb`` file, or an on-the-fly computation otherwise."""
    if ref.startswith("catalog:"):
        name = ref[len("catalog:"):]
        ent = catalog.entry(name)
        if ent.table_source == "data-file":
            return catalog.load_table(name)
        grp = catalog.build(name)
        if isinstance(grp, FpModuleAction):
            raise UsageError(f"{ref}: no character-table path for "
                             f"matrix-group entries")
        return dixon_schneider(grp, name=name, seed=seed)
    if ref.endswith(".ctb"):
        try:
            text = Path(ref).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {ref}: {exc.strerror}") from exc
        table = parse_table(text).to_character_table()
        table.validate()
        return table
    grp = resolve_group(ref)
    return dixon_schneider(grp, name=Path(ref).stem, seed=seed)


def _split_top_level(body: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise UsageError(f"unbalanced parentheses in {body!r}")
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if depth:
        raise UsageError(f"unbalanced parentheses in {body!r}")
    parts.append("".join(cur))
    return [p.strip() for p in parts]


def resolve_module(expr: str, seed: int = 0) -> FpModuleAction:
    """A matrix-group module from a reference or a constructor term."""
    expr = expr.strip()
    if "(" in expr and expr.endswith(")"):
        kind, body = expr.split("(", 1)
        kind = kind.strip()
        args = _split_top_level(body[:-1])
        if kind in ("perm_module", "deleted_perm"):
            if len(args) != 2:
                raise UsageError(f"{kind} takes (group-ref, prime)")
            return modfp.construct(kind, resolve_group(args[0]),
                                   _int_arg(args[1], "prime"))
        if kind == "dual":
            if len(args) != 1:
                raise UsageError("dual takes one module expression")
            return modfp.dual(resolve_module(args[0], seed))
        if kind == "tensor":
            if len(args) != 2:
                raise UsageError("tensor takes two module expressions")
            return modfp.tensor(resolve_module(args[0], seed),
                                resolve_module(args[1], seed))
        if kind == "chop":
            if len(args) != 2:
                raise UsageError("chop takes (module-expr, factor-index)")
            factors = modfp.chop(resolve_module(args[0], seed), seed=seed)
            idx = _int_arg(args[1], "factor index")
            if not 0 <= idx < len(factors):
                raise UsageError(
                    f"factor index {idx} out of range; chop found "
                    f"{len(factors)} factors of dimensions "
                    f"{[a.n for a in factors]}")
            return factors[idx]
        raise UsageError(f"unknown module constructor {kind!r}")
    if expr.startswith("catalog:"):
        mod = catalog.build(expr[len("catalog:"):])
    else:
        mod = _load_group_file(expr)
    if not isinstance(mod, FpModuleAction):
        raise UsageError(f"{expr} is a permutation group; wrap it in a "
                         f"module constructor such as deleted_perm(...)")
    return mod


def _int_arg(token: str, what: str) -> int:
    try:
        return int(token)
    except ValueError as exc:
        raise UsageError(f"{what} must be an integer, got {token!r}") \
            from exc


def _int_list_arg(token: str, what: str) -> list[int]:
    try:
        return [int(t) for t in token.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(f"{what} must be a comma-separated integer "
                         f"list, got {token!r}") from exc


# ---------------------------------------------------------------------------
# report helpers


def _emit(porcelain: bool, key: str, value, plain: str | None = None):
    if porcelain:
        print(f"{key}={value}")
    else:
        print(plain if plain is not None else f"{key}: {value}")


def _print_verdict(name: str, check: str, verdict: hypc.Verdict,
                   porcelain: bool,
                   phrase: str = "without being conjugate") -> int:
    status = "pass" if verdict.passed else "fail"
    if porcelain:
        print(f"group={name}")
        print(f"check={check}")
        print(f"verdict={status}")
        for rows, degree, ind in verdict.witnesses:
            nu = "-" if ind is None else ind
            print(f"witness=rows:{','.join(map(str, rows))}"
                  f";degree:{degree};indicator:{nu}")
    else:
        print(f"{check} on {name}: {status.upper()}")
        for rows, degree, ind in verdict.witnesses:
            nu = "" if ind is None else f" (indicator {ind:+d})"
            print(f"  witness: rows {list(rows)} share degree "
                  f"{degree}{nu} {phrase}")
    return 0 if verdict.passed else 1


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_chartab(args) -> int:
    table = resolve_table(args.ref, seed=args.seed)
    sys.stdout.write(emit_table(TableFile.from_character_table(table)))
    return 0


def _cmd_hypc(args) -> int:
    table = resolve_table(args.ref, seed=args.seed)
    return _print_verdict(table.name, "hypothesis-c",
                          hypc.check_hypothesis_c(table), args.porcelain)


def _cmd_corb(args) -> int:
    table = resolve_table(args.ref, seed=args.seed)
    degrees, verdict = hypc.real_degree_profile(table)
    if args.porcelain:
        print(f"real_degrees={','.join(map(str, degrees))}")
    else:
        print(f"real irreducible degrees of {table.name}: {degrees}")
    return _print_verdict(table.name, "real-degree-distinctness", verdict,
                          args.porcelain,
                          phrase="as real representations")


def _cmd_uniq(args) -> int:
    table = resolve_table(args.ref, seed=args.seed)
    return _print_verdict(table.name, "complex-degree-distinctness",
                          hypc.complex_degree_uniqueness(table),
                          args.porcelain, phrase="among complex rows")


def _cmd_orbits(args) -> int:
    census = modfp.orbit_census(resolve_module(args.expr, seed=args.seed))
    if args.porcelain:
        print(f"group_order={census.group_order}")
        print(f"total={census.total}")
        for length, count in census.histogram:
            print(f"orbit=length:{length};count:{count}")
        print(f"regular={census.regular_count}")
        print(f"half_regular={census.half_regular_count}")
    else:
        print(f"orbit census on {census.total} vectors "
              f"(group order {census.group_order})")
        print("  length  count")
        for length, count in census.histogram:
            print(f"  {length:>6}  {count}")
        print(f"  regular orbits: {census.regular_count}")
        print(f"  half-regular orbits: {census.half_regular_count}")
    return 0


def _cmd_subsets(args) -> int:
    group = resolve_group(args.ref)
    profile, distinct = bounds.subset_orbit_profile(group, args.k)
    if args.porcelain:
        for size, ab in profile:
            print(f"orbit=size:{size};stabilizer_ab:{ab}")
        print(f"distinct={'true' if distinct else 'false'}")
    else:
        print(f"orbits on {args.k}-subsets (size, stabilizer "
              f"abelianization order): {profile}")
        print(f"all orbit sizes distinct: {distinct}")
    if not distinct:
        sizes = [s for s, _ in profile]
        dups = sorted({s for s in sizes if sizes.count(s) > 1})
        _emit(args.porcelain, "witness", ",".join(map(str, dups)),
              f"  witness: repeated orbit sizes {dups}")
        return 1
    return 0


def _cmd_partition(args) -> int:
    part, self_assoc, diag, ok = bounds.splitting_partition(args.n)
    if args.porcelain:
        print(f"n={args.n}")
        print(f"partition={','.join(map(str, part.parts))}")
        print(f"self_associate={'true' if self_assoc else 'false'}")
        print(f"diagonal={diag}")
    else:
        print(f"splitting partition of {args.n}: {list(part.parts)}")
        print(f"self-associate: {self_assoc}; diagonal nodes: {diag}; "
              f"diagonal == n (mod 4): {ok}")
    return 0 if (self_assoc and ok) else 1


def _cmd_catalog(args) -> int:
    if args.action != "list":
        raise UsageError(f"unknown catalog action {args.action!r}")
    if args.porcelain:
        for ent in catalog.entries():
            print(f"entry=name:{ent.name};order:{ent.expected_order}"
                  f";source:{ent.table_source}"
                  f";in_l:{'true' if ent.in_script_l else 'false'}")
    else:
        print(f"{'name':<14} {'order':>18}  {'table':<9} 𝓛  description")
        for ent in catalog.entries():
            mark = "*" if ent.in_script_l else " "
            print(f"{ent.name:<14} {ent.expected_order:>18}  "
                  f"{ent.table_source:<9} {mark}  {ent.description}")
    return 0


def _spectrum_arg(token: str) -> list[tuple[int, int]]:
    out = []
    for part in token.split(","):
        try:
            count, r = part.split(":")
            out.append((int(count), int(r)))
        except ValueError as exc:
            raise UsageError(f"spectrum terms are COUNT:R, got {part!r}") \
                from exc
    return out


def _hints_arg(token: str) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {}
    if not token:
        return out
    for part in token.split(";"):
        try:
            idx, cs = part.split(":")
            out[int(idx)] = {int(c) for c in cs.split(",")}
        except ValueError as exc:
            raise UsageError(f"hints are INDEX:C1,C2;..., got {part!r}") \
                from exc
    return out


def _cmd_bounds(args) -> int:
    porcelain = args.porcelain
    if args.calc == "fgh":
        fargs = {"eq1": (args.p, args.n, args.a),
                 "f": (args.p, args.n)}.get(args.func)
        if fargs is None:  # g and h take (q, m [, l_order])
            fargs = (args.p, args.n) if args.lorder is None else \
                (args.p, args.n, args.lorder)
        if any(a is None for a in fargs):
            raise UsageError(f"{args.func} needs --p and --n"
                             + (" and --a" if args.func == "eq1" else ""))
        value = bounds.counting_functions(args.func, *fargs)
        _emit(porcelain, "value", value, str(value))
        return 0
    if args.calc == "fixdim":
        value = bounds.fix_dim_upper(args.n, args.r)
        _emit(porcelain, "value", value, str(value))
        return 0
    if args.calc == "reglb":
        value = bounds.regular_orbit_lower_bound(
            args.order, args.p, args.n, _spectrum_arg(args.spectrum))
        text = str(value) if value.denominator > 1 else str(value.numerator)
        _emit(porcelain, "value", text, text)
        return 0 if value > 0 else 1
    if args.calc == "dthreshold":
        value = bounds.dimension_threshold(args.order, args.pcount, args.r)
        _emit(porcelain, "value", value, str(value))
        return 0
    if args.calc == "b":
        value = bounds.b_of(args.order)
        _emit(porcelain, "value", value, str(value))
        return 0
    if args.calc == "n1":
        indices = _int_list_arg(args.indices, "--indices")
        raw, refined = bounds.n1_of(args.order, indices,
                                    _hints_arg(args.hints))
        _emit(porcelain, "raw", ",".join(map(str, sorted(raw))),
              f"raw N1: {sorted(raw)}")
        _emit(porcelain, "refined", ",".join(map(str, sorted(refined))),
              f"refined N1: {sorted(refined)}")
        return 0
    if args.calc == "nhwh":
        group = resolve_group(args.ref)
        n_set, w_set = bounds.nh_wh(group)
        _emit(porcelain, "n_set", ",".join(map(str, sorted(n_set))),
              f"N(H): {sorted(n_set)}")
        _emit(porcelain, "w_set", ",".join(map(str, sorted(w_set))),
              f"W(H): {sorted(w_set)}")
        return 0
    if args.calc == "subsetsum":
        pool = _int_list_arg(args.pool, "--pool")
        ok = bounds.distinct_sum_feasible(args.target, pool)
        _emit(porcelain, "feasible", "true" if ok else "false",
              f"{args.target} as a distinct sum over {sorted(set(pool))}: "
              f"{'feasible' if ok else 'infeasible'}")
        return 0 if ok else 1
    raise UsageError(f"unknown bounds calculation {args.calc!r}")


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="repcheck",
        description="exact character-table and orbit-counting checks")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--porcelain", action="store_true",
                        help="line-oriented key=value output")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for randomized internals (default 0)")
    common.add_argument("--jobs", type=int, default=1,
                        help="worker cap (accepted for compatibility)")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("chartab", parents=[common],
                       help="compute and print a character table")
    p.add_argument("ref")
    p.set_defaults(handler=_cmd_chartab)

    for name, handler, blurb in (
            ("hypc", _cmd_hypc, "degree/indicator uniqueness check"),
            ("corb", _cmd_corb, "real-degree distinctness check"),
            ("uniq", _cmd_uniq, "complex-degree distinctness check")):
        p = sub.add_parser(name, parents=[common], help=blurb)
        p.add_argument("ref")
        p.set_defaults(handler=handler)

    p = sub.add_parser("orbits", parents=[common],
                       help="orbit census of a matrix group on F_p^n")
    p.add_argument("expr")
    p.set_defaults(handler=_cmd_orbits)

    p = sub.add_parser("subsets", parents=[common],
                       help="orbits on k-subsets of the points")
    p.add_argument("ref")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(handler=_cmd_subsets)

    p = sub.add_parser("partition", parents=[common],
                       help="self-associate splitting partition of n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=_cmd_partition)

    p = sub.add_parser("catalog", parents=[common],
                       help="inspect the built-in group catalog")
    p.add_argument("action", choices=["list"])
    p.set_defaults(handler=_cmd_catalog)

    p = sub.add_parser("bounds", parents=[common],
                       help="numeric bound and index-set calculations")
    p.add_argument("calc", choices=["fgh", "fixdim", "reglb", "dthreshold",
                                    "b", "n1", "nhwh", "subsetsum"])
    p.add_argument("ref", nargs="?",
                   help="group reference (nhwh only)")
    p.add_argument("--func", choices=["eq1", "f", "g", "h"],
                   help="which counting function (fgh)")
    p.add_argument("--p", type=int, help="prime / prime power")
    p.add_argument("--n", type=int, help="dimension / exponent")
    p.add_argument("--a", type=int, help="subspace exponent (eq1)")
    p.add_argument("--lorder", type=int,
                   help="|L| override for g and h")
    p.add_argument("--r", type=int, help="fixed-space ratio parameter")
    p.add_argument("--order", type=int, help="group order")
    p.add_argument("--pcount", type=int,
                   help="number of prime-order cyclic subgroups")
    p.add_argument("--spectrum",
                   help="COUNT:R[,COUNT:R...] terms (reglb)")
    p.add_argument("--indices", help="maximal subgroup indices (n1)")
    p.add_argument("--hints", default="",
                   help="refinement hints INDEX:C1,C2;... (n1)")
    p.add_argument("--target", type=int, help="sum target (subsetsum)")
    p.add_argument("--pool", help="available summands (subsetsum)")
    p.set_defaults(handler=_cmd_bounds)
    return parser


_REQUIRED = {
    "fgh": ["func", "p", "n"],
    "fixdim": ["n", "r"],
    "reglb": ["order", "p", "n", "spectrum"],
    "dthreshold": ["order", "pcount", "r"],
    "b": ["order"],
    "n1": ["order", "indices"],
    "nhwh": ["ref"],
    "subsetsum": ["target", "pool"],
}


def _check_bounds_flags(args):
    missing = [f"--{name}" if name != "ref" else "<ref>"
               for name in _REQUIRED[args.calc]
               if getattr(args, name) is None]
    if missing:
        raise UsageError(f"bounds {args.calc} requires "
                         f"{', '.join(missing)}")


def dispatch(argv: list[str]) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse prints its own diagnostic; fold code 2 for errors,
        # 0 for --help
        return 0 if exc.code == 0 else 2
    try:
        if args.cmd == "bounds":
            _check_bounds_flags(args)
        return args.handler(args)
    except (UsageError, CatalogError, FormatError, TableError,
            ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
