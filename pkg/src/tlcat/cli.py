"""Command-line front end: compute, display, verify, and manage the cache.

Exit codes: 0 success, 1 a verified identity failed, 2 malformed input,
3 a size bound was exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
from dataclasses import dataclass
from pathlib import Path

from . import skein
from .diagrams import ascii_art
from .morphisms import Morphism
from .qring import Scalar, quantum_int, series_expand
from .projectors import (
    CheckResult,
    ProjectorCache,
    all_pass,
    f_coeff,
    higher_projector,
    jones_wenzl,
    p_eps,
    q_elem,
    verify_branching,
    verify_characterization,
    verify_resolution,
    verify_slide_through,
)
from .sequences import SignSeq, enumerate_seqs
from .skein import eigenvalue_on, full_twist, markov_trace, resolve_braid, trace_pairing

CACHE_VERSION = 1
CACHE_ENV_VAR = "TLCAT_CACHE_DIR"

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_BAD_INPUT = 2
EXIT_BOUNDS = 3


@dataclass
class Config:
    max_n: int = 8
    cache_dir: Path | None = None
    output: str = "text"
    series_order: int = 0


class DiskCache(ProjectorCache):
    """Projector cache persisted as one JSON file per key."""

    def __init__(self, directory: Path):
        super().__init__()
        self.directory = directory

    def _path(self, key: str) -> Path:
        return self.directory / (key.replace(":", "_") + ".json")

    def _load(self, key: str):
        path = self._path(key)
        if not path.is_file():
            return None
        try:
            data = json.loads(path.read_text())
            if data.get("version") != CACHE_VERSION or data.get("key") != key:
                return None
            return Morphism.from_json_dict(data["morphism"])
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError):
            # unreadable entries are treated as misses and rebuilt
            return None

    def _save(self, key: str, value: Morphism) -> None:
        self.directory.mkdir(parents=True, exist_ok=True)
        payload = _dumps({"version": CACHE_VERSION, "key": key,
                          "morphism": value.to_json_dict()})
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as fh:
                fh.write(payload)
            os.replace(tmp, self._path(key))
        except OSError:
            if os.path.exists(tmp):
                os.unlink(tmp)
            raise


def _dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _make_cache(cfg: Config) -> ProjectorCache:
    if cfg.cache_dir is None:
        return ProjectorCache()
    return DiskCache(cfg.cache_dir)


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------

def _print_morphism(m: Morphism, title: str, cfg: Config) -> None:
    if cfg.output == "json":
        sys.stdout.write(_dumps(m.to_json_dict()))
        return
    print(f"{title}: {len(m)} term(s) in TL({m.n_bottom},{m.n_top})")
    if cfg.output == "ascii":
        for mat, coeff in m.terms():
            print(f"coefficient {coeff}")
            print(ascii_art(mat))
            print()
    else:
        for mat, coeff in m.terms():
            print(f"  ({coeff}) * [{mat}]")


def _print_scalar(s: Scalar, title: str, cfg: Config) -> None:
    if cfg.output == "json":
        payload = s.to_json_dict()
        if cfg.series_order > 0:
            payload["series"] = [[e, c] for e, c in series_expand(s, cfg.series_order)]
        sys.stdout.write(_dumps(payload))
        return
    print(f"{title} = {s}")
    if cfg.series_order > 0:
        terms = series_expand(s, cfg.series_order)
        print(f"  series up to q^{cfg.series_order}: {_series_str(terms)}")


def _series_str(terms: list[tuple[int, int]]) -> str:
    if not terms:
        return "0"
    parts = []
    for e, c in terms:
        body = "1" if e == 0 else ("q" if e == 1 else f"q^{e}")
        if abs(c) != 1 or e == 0:
            body = f"{abs(c)}" if e == 0 else f"{abs(c)}*{body}"
        parts.append(("- " if c < 0 else ("+ " if parts else "")) + body)
    return " ".join(parts)


def _print_reports(results: list[CheckResult], cfg: Config, params: dict) -> None:
    if cfg.output == "json":
        payload = dict(params)
        payload["pass"] = all_pass(results)
        payload["checks"] = [r.to_json_dict() for r in results]
        sys.stdout.write(_dumps(payload))
        return
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        detail = " ".join(f"{k}={v}" for k, v in r.params.items())
        line = f"[{status}] {r.check} {detail}"
        if r.witness is not None:
            line += f" witness: {r.witness}"
        print(line)
    n_fail = sum(1 for r in results if not r.passed)
    print(f"{len(results)} check(s), {n_fail} failure(s)")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _check_strands(n: int, cfg: Config) -> None:
    if n > cfg.max_n:
        raise _BoundsError(f"{n} strands exceed --max-n {cfg.max_n}")


class _BoundsError(Exception):
    pass


def _cmd_jw(args, cfg: Config) -> int:
    _check_strands(args.n, cfg)
    cache = _make_cache(cfg)
    _print_morphism(jones_wenzl(args.n, cache), f"jw {args.n}", cfg)
    return EXIT_OK


def _cmd_peps(args, cfg: Config) -> int:
    eps = SignSeq.parse(args.eps)
    _check_strands(eps.length, cfg)
    cache = _make_cache(cfg)
    _print_morphism(p_eps(eps, cache), f"peps {eps}", cfg)
    return EXIT_OK


def _cmd_qeps(args, cfg: Config) -> int:
    eps = SignSeq.parse(args.eps)
    _check_strands(eps.length, cfg)
    cache = _make_cache(cfg)
    _print_morphism(q_elem(eps, cache), f"qeps {eps}", cfg)
    return EXIT_OK


def _cmd_feps(args, cfg: Config) -> int:
    eps = SignSeq.parse(args.eps)
    _check_strands(eps.length, cfg)
    _print_scalar(f_coeff(eps), f"feps {eps}", cfg)
    return EXIT_OK


def _cmd_pnk(args, cfg: Config) -> int:
    _check_strands(args.n, cfg)
    cache = _make_cache(cfg)
    _print_morphism(higher_projector(args.n, args.k, cache),
                    f"pnk {args.n} {args.k}", cfg)
    return EXIT_OK


def _cmd_twist(args, cfg: Config) -> int:
    _check_strands(args.n, cfg)
    n = args.n
    cache = _make_cache(cfg)
    twist = resolve_braid(full_twist(n))
    rows = []
    for k in range(n % 2, n + 1, 2):
        lam = eigenvalue_on(twist, higher_projector(n, k, cache))
        rows.append((k, lam))
    if cfg.output == "json":
        payload = {"n": n, "eigenvalues": [
            {"k": k, "value": lam.to_json_dict()} for k, lam in rows]}
        sys.stdout.write(_dumps(payload))
        return EXIT_OK
    print(f"full twist on {n} strands acts on each isotypic projector by:")
    for k, lam in rows:
        print(f"  k={k}: {lam}")
    return EXIT_OK


def _element_from_args(args, cfg: Config, cache: ProjectorCache) -> tuple[str, Morphism]:
    if args.kind == "jw":
        n = _parse_int(args.args, 1, "jw")[0]
        _check_strands(n, cfg)
        return f"jw {n}", jones_wenzl(n, cache)
    if args.kind == "pnk":
        n, k = _parse_int(args.args, 2, "pnk")
        _check_strands(n, cfg)
        return f"pnk {n} {k}", higher_projector(n, k, cache)
    eps = SignSeq.parse(" ".join(args.args))
    _check_strands(eps.length, cfg)
    return f"peps {eps}", p_eps(eps, cache)


def _parse_int(parts: list[str], count: int, what: str) -> list[int]:
    if len(parts) != count:
        raise ValueError(f"{what} takes {count} integer argument(s)")
    return [int(p) for p in parts]


def _cmd_trace(args, cfg: Config) -> int:
    cache = _make_cache(cfg)
    name, elem = _element_from_args(args, cfg, cache)
    _print_scalar(markov_trace(elem), f"trace of {name}", cfg)
    return EXIT_OK


_SUITES = ("all", "resolution", "characterization", "slide", "branching",
           "twist", "trace")


def _cmd_verify(args, cfg: Config) -> int:
    n = args.n
    if n < 1 or n > cfg.max_n:
        print(f"verify needs 1 <= n <= {cfg.max_n}", file=sys.stderr)
        return EXIT_BAD_INPUT
    cache = _make_cache(cfg)
    results = run_suite(n, args.suite, cache)
    _print_reports(results, cfg, {"command": "verify", "n": n, "suite": args.suite})
    return EXIT_OK if all_pass(results) else EXIT_FAILED_CHECK


def run_suite(n: int, suite: str, cache: ProjectorCache | None = None) -> list[CheckResult]:
    """All verification results for one suite on n strands."""
    results: list[CheckResult] = []
    if suite in ("all", "resolution"):
        results += verify_resolution(n, cache)
    if suite in ("all", "characterization"):
        for k in range(n % 2, n + 1, 2):
            results += verify_characterization(n, k, cache)
    if suite in ("all", "slide"):
        for m in range(n % 2, n + 1, 2):
            for k in range(m % 2, m + 1, 2):
                ok = verify_slide_through(n, m, k, cache)
                results.append(CheckResult("slide", {"n": n, "m": m, "k": k}, ok))
    if suite in ("all", "branching"):
        for length in range(1, n):
            for eps in enumerate_seqs(length):
                ok = verify_branching(eps, cache)
                results.append(CheckResult("branching", {"eps": str(eps)}, ok))
    if suite in ("all", "twist"):
        results += _twist_suite(n, cache)
    if suite in ("all", "trace"):
        results += _trace_suite(n, cache)
    return results


def _twist_suite(n: int, cache: ProjectorCache | None) -> list[CheckResult]:
    if n < 2:
        return [CheckResult("twist.trivial", {"n": n}, True)]
    twist = resolve_braid(full_twist(n))
    results = []
    lams = {}
    for k in range(n % 2, n + 1, 2):
        p = higher_projector(n, k, cache)
        try:
            lam = eigenvalue_on(twist, p)
        except skein.NotAnEigenvectorError:
            results.append(CheckResult("twist.monomial", {"n": n, "k": k}, False,
                                       "not an eigenvector"))
            continue
        lams[k] = lam
        mono = lam.as_monomial()
        ok = mono is not None and mono[1] in (1, -1)
        results.append(CheckResult("twist.monomial", {"n": n, "k": k}, ok,
                                   None if ok else str(lam)))
    # Ratio of twist eigenvalues between isotypic pieces: q to the power
    # (k(k+2) - l(l+2))/2, the ribbon-element law; framing-independent.
    ks = sorted(lams)
    for i, l in enumerate(ks):
        for k in ks[i + 1:]:
            want = Scalar.q_power((k * (k + 2) - l * (l + 2)) // 2)
            ok = lams[k] / lams[l] == want
            results.append(CheckResult("twist.ratio", {"n": n, "k": k, "l": l}, ok,
                                       None if ok else str(lams[k] / lams[l])))
    return results


def _trace_suite(n: int, cache: ProjectorCache | None) -> list[CheckResult]:
    results = []
    tr = markov_trace(jones_wenzl(n, cache))
    ok = tr == Scalar(quantum_int(n + 1))
    results.append(CheckResult("trace.jones_wenzl", {"n": n}, ok,
                               None if ok else str(tr)))
    seqs = enumerate_seqs(n)
    ps = {eps: p_eps(eps, cache) for eps in seqs}
    for i, ei in enumerate(seqs):
        for ej in seqs[i + 1:]:
            ok = trace_pairing(ps[ei], ps[ej]).is_zero
            results.append(CheckResult(
                "trace.orthogonal_pairing",
                {"n": n, "eps": str(ei), "nu": str(ej)}, ok))
    return results


def _cmd_cache(args, cfg: Config) -> int:
    if cfg.cache_dir is None:
        print("cache commands need --cache-dir or "
              f"the {CACHE_ENV_VAR} environment variable", file=sys.stderr)
        return EXIT_BAD_INPUT
    directory = cfg.cache_dir
    if args.action == "clear":
        if directory.is_dir():
            for path in directory.iterdir():
                if path.is_file():
                    path.unlink()
        print(f"cache cleared: {directory}")
        return EXIT_OK
    if args.action == "stat":
        files = sorted(directory.glob("*.json")) if directory.is_dir() else []
        total = sum(p.stat().st_size for p in files)
        print(f"cache {directory}: {len(files)} entr(ies), {total} bytes")
        for p in files:
            print(f"  {p.name} ({p.stat().st_size} bytes)")
        return EXIT_OK
    # warm
    if args.up_to_n is None:
        print("cache warm needs an up_to_n argument", file=sys.stderr)
        return EXIT_BAD_INPUT
    n = args.up_to_n
    _check_strands(n, cfg)
    cache = _make_cache(cfg)
    count = 0
    for m in range(1, n + 1):
        jones_wenzl(m, cache)
        count += 1
    for m in range(1, n + 1):
        for eps in enumerate_seqs(m):
            p_eps(eps, cache)
            count += 1
    print(f"cache warmed through {n} strands ({count} top-level entries)")
    return EXIT_OK


# ---------------------------------------------------------------------------
# Argument parsing and entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # Global flags live on a parent so they are accepted both before and
    # after the subcommand; real defaults are set once on the root.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json", "ascii"),
                        default=argparse.SUPPRESS, help="rendering format")
    common.add_argument("--cache-dir", type=Path, default=argparse.SUPPRESS,
                        help=f"projector cache directory (or ${CACHE_ENV_VAR})")
    common.add_argument("--max-n", type=int, default=argparse.SUPPRESS,
                        help="safety bound on strand count (default 8)")
    common.add_argument("--series-order", type=int, default=argparse.SUPPRESS,
                        help="also print scalars as series up to this order")
    common.add_argument("--convention", choices=("kauffman-q",),
                        default=argparse.SUPPRESS,
                        help="crossing resolution convention (only one implemented)")

    # No set_defaults for the shared flags: the parent's actions are shared
    # objects, and set_defaults would mutate their SUPPRESS default, letting
    # the subparser clobber a value parsed before the subcommand. Defaults
    # are resolved in main() instead.
    parser = argparse.ArgumentParser(
        prog="tlcat",
        description="Exact Temperley-Lieb projector calculator and verifier.",
        parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("jw", parents=[common],
                       help="Jones-Wenzl projector on n strands")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_jw)

    for name, func, why in (("peps", _cmd_peps, "minimal idempotent"),
                            ("qeps", _cmd_qeps, "unnormalized symmetric element"),
                            ("feps", _cmd_feps, "normalizing scalar")):
        p = sub.add_parser(name, parents=[common],
                           help=f"{why} for a sign sequence like '(1,1,-1,1)'")
        p.add_argument("eps")
        p.set_defaults(func=func)

    p = sub.add_parser("pnk", parents=[common],
                       help="isotypic projector on n strands, size k")
    p.add_argument("n", type=int)
    p.add_argument("k", type=int)
    p.set_defaults(func=_cmd_pnk)

    p = sub.add_parser("twist", parents=[common],
                       help="full-twist eigenvalues on n strands")
    p.add_argument("n", type=int)
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("trace", parents=[common],
                       help="Markov trace of jw/peps/pnk elements")
    p.add_argument("kind", choices=("jw", "peps", "pnk"))
    p.add_argument("args", nargs="+")
    p.set_defaults(func=_cmd_trace)

    p = sub.add_parser("verify", parents=[common],
                       help="run identity verification suites")
    p.add_argument("n", type=int)
    p.add_argument("--suite", choices=_SUITES, default="all")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("cache", parents=[common],
                       help="manage the on-disk projector cache")
    p.add_argument("action", choices=("warm", "clear", "stat"))
    p.add_argument("up_to_n", type=int, nargs="?")
    p.set_defaults(func=_cmd_cache)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cache_dir = getattr(args, "cache_dir", None)
    if cache_dir is None and os.environ.get(CACHE_ENV_VAR):
        cache_dir = Path(os.environ[CACHE_ENV_VAR])
    cfg = Config(max_n=getattr(args, "max_n", 8), cache_dir=cache_dir,
                 output=getattr(args, "output", "text"),
                 series_order=getattr(args, "series_order", 0))
    if cfg.max_n < 1 or cfg.series_order < 0:
        print("--max-n must be >= 1 and --series-order >= 0", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        return args.func(args, cfg)
    except _BoundsError as exc:
        print(f"bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUNDS
    except (ValueError, KeyError) as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
