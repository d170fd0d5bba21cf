"""Command-line front end.

Exit codes: 0 success, 1 a verified identity failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import __version__
from .partitions import Partition
from .poly import Polynomial
from .schur import Alphabet, AlphabetDifference, SchurExpansion, schur, to_chern_monomials
from .staircase import Seed, build_staircase, verify_appendix_application
from .thom import CoefficientTable, f_part, h_part2, thom_a3, verify_restriction, verify_structure

CACHE_ENV = "SCHURTHOM_CACHE_DIR"
FORMATS = ("text", "json", "latex", "chern")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Config:
    format: str = "text"
    r_max: int = 6
    cache_dir: Path | None = None
    jobs: int = 1

    def __post_init__(self):
        if self.r_max < 1:
            raise UsageError("--r-max must be >= 1")
        if self.jobs < 1:
            raise UsageError("--jobs must be >= 1")


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "schurthom"


def _cache_path(cache_dir: Path, r: int) -> Path:
    return cache_dir / f"thom-a3-r{r}-v{__version__}.json"


def _atomic_write(path: Path, text: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def cached_thom(r: int, cache_dir: Path | None) -> SchurExpansion:
    """``thom_a3(r)``, read from / written to the on-disk cache when one is configured."""
    if cache_dir is None:
        return thom_a3(r)
    path = _cache_path(cache_dir, r)
    if path.exists():
        return SchurExpansion.from_json(path.read_text())
    T = thom_a3(r)
    _atomic_write(path, T.dumps())
    return T


def render_expansion(T: SchurExpansion, fmt: str) -> str:
    if fmt == "text":
        return T.to_text()
    if fmt == "latex":
        return T.to_latex()
    if fmt == "json":
        return json.dumps(T.to_json())
    if fmt == "chern":
        return str(to_chern_monomials(T))
    raise UsageError(f"unknown format {fmt!r}")


def _positive(name: str, value: int) -> int:
    if value < 1:
        raise UsageError(f"{name} must be >= 1, got {value}")
    return value


def _config(args: argparse.Namespace) -> Config:
    cache = None
    if not getattr(args, "no_cache", False):
        cache = Path(args.cache_dir) if getattr(args, "cache_dir", None) else default_cache_dir()
    return Config(
        format=getattr(args, "format", "text"),
        r_max=getattr(args, "r_max", 6),
        cache_dir=cache,
        jobs=getattr(args, "jobs", 1),
    )


def cmd_thom(args: argparse.Namespace) -> int:
    cfg = _config(args)
    r = _positive("--r", args.r)
    print(render_expansion(cached_thom(r, cfg.cache_dir), cfg.format))
    return 0


def _candidate(name: str, r: int, cfg: Config) -> SchurExpansion:
    if name == "full":
        return cached_thom(r, cfg.cache_dir)
    if name == "f-part-only":
        return f_part(r)
    if name == "h-part-only":
        return h_part2(r)
    path = Path(name)
    if not path.exists():
        raise UsageError(f"unknown candidate {name!r} (full, f-part-only, h-part-only or a JSON file)")
    try:
        return SchurExpansion.from_json(path.read_text())
    except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        raise UsageError(f"{path}: not a Schur expansion document ({exc})") from exc


def cmd_verify(args: argparse.Namespace) -> int:
    cfg = _config(args)
    r = _positive("--r", args.r)
    if r > cfg.r_max:
        raise UsageError(f"r={r} exceeds the verification ceiling {cfg.r_max}; raise it with --r-max")
    T = _candidate(args.candidate, r, cfg)
    if T and T.weight != 3 * r:
        raise UsageError(f"candidate is not homogeneous of weight {3 * r}")
    which = ["restriction", "structure", "staircase"] if args.which == "all" else [args.which]
    reports = {}
    for kind in which:
        if kind == "restriction":
            reports[kind] = verify_restriction(T, r, jobs=cfg.jobs)
        elif r >= 2 and kind == "structure":
            reports[kind] = verify_structure(r)
        elif r >= 2 and kind == "staircase":
            reports[kind] = verify_appendix_application(r)
    ok = all(rep.passed for rep in reports.values())
    if cfg.format == "json":
        docs = {k: rep.to_json() for k, rep in reports.items()}
        print(json.dumps(docs[which[0]] if len(which) == 1 else docs))
    else:
        for kind, rep in reports.items():
            print(f"# {kind}")
            print(rep.to_text())
        print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def cmd_etable(args: argparse.Namespace) -> int:
    table = CoefficientTable.build(_positive("--rows", args.rows))
    print(json.dumps(table.to_json()) if args.format == "json" else table.to_text())
    return 0


def _parse_poly_list(text: str) -> list[Polynomial]:
    try:
        return [Polynomial.parse(t) for t in text.split(",")]
    except ValueError as exc:
        raise UsageError(f"malformed seed: {exc}") from exc


def _seed(args: argparse.Namespace) -> Seed:
    if args.seed_rational:
        if args.seed_rational.count("/") != 1:
            raise UsageError("--seed-rational expects NUM/DEN, e.g. 5,-6/1,-6,11,-6")
        num, den = args.seed_rational.split("/")
        try:
            return Seed.rational(_parse_poly_list(num), _parse_poly_list(den))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.seed:
        return Seed.explicit(_parse_poly_list(args.seed))
    return Seed.symbolic(args.rows)


def cmd_staircase(args: argparse.Namespace) -> int:
    rows = _positive("--rows", args.rows)
    try:
        P = build_staircase(_seed(args), rows)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(json.dumps(P.to_json()) if args.format == "json" else P.to_text())
    return 0


def cmd_schur_eval(args: argparse.Namespace) -> int:
    try:
        I = Partition.parse(args.partition)
        d = AlphabetDifference(Alphabet.parse(args.plus), Alphabet.parse(args.minus))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    value = schur(I, d)
    if args.format == "json":
        print(json.dumps({"partition": I.to_json(), "plus": args.plus, "minus": args.minus, "value": str(value)}))
    else:
        print(value)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schurthom",
        description="Schur expansions of the A3 Thom polynomials and exact verification of their identities.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def cache_flags(p: argparse.ArgumentParser) -> None:
        p.add_argument("--cache-dir", help=f"expansion cache directory (default ${CACHE_ENV} or ~/.cache/schurthom)")
        p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")

    p = sub.add_parser("thom", help="print the Thom polynomial T^{A3}_r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")
    cache_flags(p)
    p.set_defaults(func=cmd_thom)

    p = sub.add_parser("verify", help="check the restriction equations and related identities")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--candidate", default="full",
                   help="full, f-part-only, h-part-only, or a Schur expansion JSON file")
    p.add_argument("--which", choices=("restriction", "structure", "staircase", "all"), default="restriction")
    p.add_argument("--jobs", type=int, default=1, help="worker processes for the restriction checks")
    p.add_argument("--r-max", type=int, default=6, help="verification ceiling (default 6)")
    p.add_argument("--format", choices=("text", "json"), default="text")
    cache_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("etable", help="print the e_{i,j} table, rows i = 2, 3, ...")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_etable)

    p = sub.add_parser("staircase", help="print a Pascal staircase")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--seed", help="explicit first column, comma separated polynomials (e.g. 1,y,y^2)")
    g.add_argument("--seed-rational", help="generating function NUM/DEN as coefficient lists")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_staircase)

    p = sub.add_parser("schur-eval", help="evaluate S_I(A - B)")
    p.add_argument("--partition", required=True, help="increasing parts, e.g. 1,2")
    p.add_argument("--plus", default="", help="letters of A, comma separated (x1+x2 is one letter)")
    p.add_argument("--minus", default="", help="letters of B")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_schur_eval)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"schurthom: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
