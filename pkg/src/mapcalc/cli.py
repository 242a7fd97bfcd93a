"""Command-line front end.

Subcommands wrap single library calls; all human-facing edge, rectangle
and gon ids are 1-based, files store the formats described in codec.
Exit codes: 0 success or all checks hold, 1 a check is violated or the
map is invalid, 2 usage or parse error, 3 hypothesis not met or nothing
found.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import codec, gem, search, theorems, words

OK, VIOLATED, USAGE, NOT_APPLICABLE = 0, 1, 2, 3


def _read(path: str) -> str:
    with open(path, "r", encoding="ascii") as fh:
        return fh.read()


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(text)


def _load_map(path: str, strict: bool = True) -> gem.FlagMap:
    return codec.parse_gem(_read(path), strict=strict)


def _cmd_validate(args: argparse.Namespace) -> int:
    map_ = _load_map(args.file, strict=False)
    report = gem.validate(map_)
    for name, passed in report.checks():
        print(f"{name}: {'ok' if passed else 'FAIL'}")
    print(f"map: {'valid' if report.ok else 'INVALID'}")
    return OK if report.ok else VIOLATED


def _cmd_info(args: argparse.Namespace) -> int:
    map_ = _load_map(args.file)
    v, f, z = gem.gon_counts(map_)
    chi, xi = gem.euler_connectivity(map_)
    print(f"edges: {map_.m}")
    print(f"gons: v={v} f={f} z={z}")
    print(f"chi: {chi}")
    print(f"xi: {xi}")
    print(f"orientable: {'yes' if gem.orientable(map_) else 'no'}")
    balances = []
    for e in range(map_.m):
        state = gem.loop_balance(map_, e)
        if state != "not_a_loop":
            balances.append(f"{e + 1}={state}")
    print("loops: " + (" ".join(balances) if balances else "none"))
    return OK


def _parse_id_list(text: str, limit: int, what: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok.isdigit() or not 1 <= int(tok) <= limit:
            raise codec.MapFormatError(f"bad {what} id {tok!r} (want 1..{limit})")
        out.append(int(tok) - 1)
    return out


def _cmd_omega(args: argparse.Namespace) -> int:
    map_ = _load_map(args.file)
    rects = _parse_id_list(args.rects, map_.m, "rectangle") if args.rects else None
    result = gem.apply_permutation(map_, rects, args.perm)
    _write(args.output, codec.write_gem(result))
    v, f, z = gem.gon_counts(result)
    print(f"wrote {args.output} (v={v} f={f} z={z})")
    return OK


def _cmd_word(args: argparse.Namespace) -> int:
    map_ = _load_map(args.file)
    if args.kind == "z":
        w = words.zigzag_word(map_)
    else:
        w = words.vertex_word(map_, args.gon - 1)
    sys.stdout.write(codec.format_word(w))
    return OK


def _print_matrix(name: str, op) -> None:
    width = max(2, len(str(op.m)))
    print(f"{name} ({op.m}x{op.m}):")
    header = " " * (width + 1) + " ".join(f"{j + 1:>{width}}" for j in range(op.m))
    print(header)
    for i in range(op.m):
        row = " ".join(f"{(op.cols[j] >> i) & 1:>{width}}" for j in range(op.m))
        print(f"{i + 1:>{width}} {row}")


def _cmd_ops(args: argparse.Namespace) -> int:
    map_ = _load_map(args.file)
    v, f, z = gem.gon_counts(map_)
    ops = words.map_operators(map_)
    shown = 0
    for name, op, reason in (
        ("c_P", ops.zigzag, f"{z} zigzags"),
        ("c_P~", ops.zigzag_complement, f"{z} zigzags"),
        ("c_D", ops.face, f"{f} faces"),
    ):
        if op is None:
            print(f"{name}: not applicable ({reason})")
        else:
            _print_matrix(name, op)
            shown += 1
    return OK if shown else NOT_APPLICABLE


_CHECKS = {
    "1": theorems.check_absorption,
    "2": theorems.check_theorem2,
    "3": theorems.check_theorem3,
    "4": lambda m: [theorems.check_theorem4(m)],
    "all": theorems.verify_all,
}


def _cmd_verify(args: argparse.Namespace) -> int:
    map_ = _load_map(args.file)
    reports = _CHECKS[args.theorem](map_)
    if args.json:
        print(json.dumps([theorems.report_json(r) for r in reports], indent=2))
    else:
        for r in reports:
            if not r.applicable:
                print(f"theorem {r.theorem}: {r.note}")
            elif r.holds:
                dims = ", ".join(f"{k}={v}" for k, v in r.dims.items())
                print(f"theorem {r.theorem}: holds ({dims})")
            else:
                witness = ",".join(str(e + 1) for e in r.counterexample or ())
                print(f"theorem {r.theorem}: VIOLATED (counterexample: {{{witness}}})")
    if any(r.applicable and not r.holds for r in reports):
        return VIOLATED
    if not any(r.applicable for r in reports):
        return NOT_APPLICABLE
    return OK


def _cmd_from_word(args: argparse.Namespace) -> int:
    w = codec.parse_word(_read(args.file))
    map_ = codec.zigzag_map_from_word(w)
    _write(args.output, codec.write_gem(map_))
    v, f, z = gem.gon_counts(map_)
    print(f"wrote {args.output} (v={v} f={f} z={z})")
    return OK


def _cmd_search(args: argparse.Namespace) -> int:
    rs = codec.parse_rotation(_read(args.file))
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("MAPCALC_SEED", "0"))
    budget = search.SearchBudget(
        max_candidates=args.budget,
        max_subdivisions=args.subdiv,
        time_limit=args.time_limit,
    )
    outcome = search.search_embedding(rs.graph, budget, seed=seed, jobs=args.jobs)
    if outcome.status != "found":
        print(f"{outcome.status} after {outcome.candidates} candidates (seed {outcome.seed})")
        return NOT_APPLICABLE
    _write(args.output, codec.write_gem(outcome.map))
    used = [f"{e + 1}:{k}" for e, k in enumerate(outcome.subdivisions) if k]
    print(
        f"found after {outcome.candidates} candidates "
        f"(subdivisions: {' '.join(used) if used else 'none'}); wrote {args.output}"
    )
    return OK


def _cmd_enumerate(args: argparse.Namespace) -> int:
    profiles: dict[tuple[int, int, int], int] = {}
    failures = 0
    total = 0
    for map_ in search.enumerate_maps(args.size):
        total += 1
        profile = gem.gon_counts(map_)
        profiles[profile] = profiles.get(profile, 0) + 1
        if args.verify_absorption:
            if not all(r.holds for r in theorems.check_absorption(map_)):
                failures += 1
                print(f"absorption VIOLATED: {codec.write_gem(map_)!r}")
    print(f"m={args.size}: {total} connected maps")
    for (v, f, z), count in sorted(profiles.items()):
        print(f"  profile v={v} f={f} z={z}: {count}")
    if args.verify_absorption:
        if failures:
            print(f"absorption: VIOLATED on {failures} of {total} maps")
            return VIOLATED
        print(f"absorption: holds on all {total} maps")
    return OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapcalc",
        description="Maps on closed surfaces: gons, duals, zigzag words and GF(2) checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="report structural invariants of a .gem file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_validate)

    p = sub.add_parser("info", help="gon counts, surface invariants and loop balances")
    p.add_argument("file")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("omega", help="permute short/long/diagonal roles and save")
    p.add_argument("file")
    p.add_argument("--perm", required=True, metavar="WORD",
                   help="images of s,l,d in order: lsd=dual, dls=phial, sdl=antimap")
    p.add_argument("--rects", metavar="LIST", help="1-based rectangle ids, comma separated")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_omega)

    p = sub.add_parser("word", help="print the zigzag or vertex word")
    p.add_argument("file")
    p.add_argument("--kind", choices=("z", "v"), default="z")
    p.add_argument("--gon", type=int, default=1, help="1-based v-gon index")
    p.set_defaults(func=_cmd_word)

    p = sub.add_parser("ops", help="print the word operators the map admits")
    p.add_argument("file")
    p.set_defaults(func=_cmd_ops)

    p = sub.add_parser("verify", help="check the subspace statements")
    p.add_argument("file")
    p.add_argument("--theorem", choices=("1", "2", "3", "4", "all"), default="all")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("from-word", help="rebuild the single-zigzag map of a .szw word")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_from_word)

    p = sub.add_parser("search", help="hunt for a single-face-single-zigzag embedding")
    p.add_argument("file", help=".rot file naming the graph")
    p.add_argument("--budget", type=int, default=100_000, help="max candidates")
    p.add_argument("--subdiv", type=int, default=0, help="max total edge subdivisions")
    p.add_argument("--seed", type=int, default=None,
                   help="randomization seed (default: MAPCALC_SEED or 0)")
    p.add_argument("--jobs", type=int, default=1, help="worker count hint")
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("enumerate", help="census of all connected maps of a size")
    p.add_argument("--size", type=int, required=True, metavar="M")
    p.add_argument("--verify-absorption", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return OK if exc.code in (0, None) else USAGE
    try:
        return args.func(args)
    except codec.MapFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except codec.ValidationFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return VIOLATED
    except words.NotApplicableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return NOT_APPLICABLE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


def cli_entry() -> None:
    sys.exit(run())
