"""Command-line interface: ``silpath ball | verify | query``.

Exit codes: 0 success or all checks pass, 1 some check failed,
2 configuration error, 3 literal parse error.
"""

import argparse
import json
import sys

from .cartan import build_cartan
from .crystal import component_rep_search, generate_ball
from .errors import BudgetExceeded, ParseError, SilpathError, UnsupportedType
from .graphs import J_of, has_path, sib_out_edges
from .notation import (
    format_char,
    parse_element,
    parse_lambda,
    parse_path,
    parse_rational,
)
from .paths import SiLSPath
from . import verify as V

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_PARSE = 0, 1, 2, 3


class ConfigError(Exception):
    pass


def _read_config_file(path):
    """``key=value`` lines; ``#`` starts a comment."""
    out = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"bad config line: {raw.rstrip()}")
            k, v = line.split("=", 1)
            out[k.strip().replace("-", "_")] = v.strip()
    return out


def _common(p):
    p.add_argument("--config", help="key=value file with defaults; flags win")
    p.add_argument("--type", dest="type_label")
    p.add_argument("--rank", type=int)
    p.add_argument("--lambda", dest="lam", help="comma-separated varpi coordinates, e.g. 1,1")
    p.add_argument("--depth", type=int)
    p.add_argument("--output", "-o")


def build_parser():
    parser = argparse.ArgumentParser(prog="silpath", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("ball", help="write a truncated crystal ball")
    _common(b)
    b.add_argument("--format", choices=("json", "dot", "text"), default="json")
    b.add_argument("--seed", help="SiLS path literal (default eta_e)")

    v = sub.add_parser("verify", help="run verification suites")
    _common(v)
    v.add_argument("--suite", choices=tuple(V.SUITES) + ("all",), default="all")
    v.add_argument("--bound", type=int, help="partition size bound for the components suite")

    q = sub.add_parser("query", help="exact queries")
    _common(q)
    q.add_argument("--budget", type=int, default=20000)
    q.add_argument("what", choices=("edges", "path", "project", "char", "component"))
    q.add_argument("args", nargs="*")
    return parser


def _resolve(args):
    defaults = _read_config_file(args.config) if getattr(args, "config", None) else {}
    for key in ("type_label", "rank", "lam", "depth", "bound"):
        if getattr(args, key, None) is None and key in defaults:
            val = defaults[key]
            setattr(args, key, int(val) if key in ("rank", "depth", "bound") else val)
    for alias, key in (("type", "type_label"), ("lambda", "lam")):
        if getattr(args, key, None) is None and alias in defaults:
            setattr(args, key, defaults[alias])
    if args.depth is not None and args.depth < 0:
        raise ConfigError("depth must be nonnegative")
    return args


def _cartan(args, required=True):
    if args.type_label is None or args.rank is None:
        if required:
            raise ConfigError("--type and --rank are required")
        return None
    return build_cartan(args.type_label.upper(), args.rank)


def _lam(args, cartan, default_zero=False):
    if args.lam is None:
        if default_zero:
            return cartan.fundamental((0,) * cartan.rank)
        raise ConfigError("--lambda is required")
    return parse_lambda(cartan, args.lam)


def _emit(text, args):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_ball(args):
    c = _cartan(args)
    lam = _lam(args, c)
    depth = 0 if args.depth is None else args.depth
    seed = parse_path(c, args.seed, lam) if args.seed else SiLSPath.identity(c, lam)
    ball = generate_ball(seed, depth)
    if args.format == "json":
        text = json.dumps(ball.to_dict(lam), ensure_ascii=False, indent=1) + "\n"
    elif args.format == "dot":
        text = ball.to_dot()
    else:
        lines = []
        for k, b in enumerate(ball.nodes):
            flag = " boundary" if ball.boundary[k] else ""
            lines.append(f"{k}\t{b.weight()}\t{b}{flag}")
        lines.extend(f"{s} -{i}-> {d}" for s, i, d in ball.edges)
        text = "\n".join(lines) + "\n"
    _emit(text, args)
    return EXIT_OK


def _verify_checks(args):
    suite = args.suite
    c = _cartan(args, required=False)
    if c is None:
        return V.run_suite(suite)
    t, n = c.type_label, c.rank
    lam = tuple(_lam(args, c).fun) if args.lam is not None else None
    depth = 6 if args.depth is None else args.depth
    need_lam = suite not in ("appendix", "lemmas")
    if need_lam and lam is None:
        raise ConfigError(f"--lambda is required for suite {suite} with an explicit type")
    runners = {
        "iso": lambda: V.suite_iso(cases=((t, n, lam, depth),)),
        "stability": lambda: V.suite_stability(cases=((t, n, lam, depth),)),
        "components": lambda: V.suite_components(t, n, lam, 3 if args.bound is None else args.bound, depth),
        "translation": lambda: V.suite_translation(cases=((t, n, lam),)),
        "edges": lambda: V.suite_edges(_config_vertices(c, lam, depth)),
        "sigma": lambda: V.suite_sigma(t, n, lam, depth),
        "appendix": lambda: V.suite_appendix(types=((t, n),)),
        "extremal": lambda: V.suite_extremal(cases=((t, n, lam, depth),)),
        "lemmas": V.suite_lemmas,
    }
    if suite == "all":
        out = []
        for k in runners:
            out.extend(runners[k]())
        return out
    return runners[suite]()


def _config_vertices(c, lam, depth):
    lw = c.fundamental(lam)
    J = J_of(lw)
    s = set()
    for b in V.sils_ball(c.type_label, c.rank, lam, depth).nodes:
        s.update(b.elems)
    V.suite_translation(cases=((c.type_label, c.rank, lam),), visited=s)
    return {(c.type_label, c.rank, J): s}


def cmd_verify(args):
    checks = _verify_checks(args)
    for ch in checks:
        print(ch.line())
    failed = sum(1 for ch in checks if not ch.passed)
    print(f"{len(checks) - failed}/{len(checks)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_query(args):
    c = _cartan(args)
    what, rest = args.what, args.args
    if what == "edges":
        lam = _lam(args, c, default_zero=args.lam is None)
        J = J_of(lam) if args.lam is not None else frozenset()
        _nargs(rest, 1)
        x = parse_element(c, rest[0])
        for e in sib_out_edges(x, J):
            print(f"{e.beta} -> {e.target}")
    elif what == "path":
        lam = _lam(args, c)
        _nargs(rest, 3)
        x, y = parse_element(c, rest[0]), parse_element(c, rest[1])
        a = parse_rational(rest[2])
        path = has_path(x, y, J_of(lam), lam, a, return_path=True)
        if path is None:
            print("no path")
            return EXIT_FAIL
        print(f"{len(path)} edges")
        for e in path:
            print(f"{e.source} --{e.beta}--> {e.target}")
    elif what == "project":
        lam = _lam(args, c)
        _nargs(rest, 1)
        print(parse_path(c, rest[0], lam).project())
    elif what == "char":
        lam = _lam(args, c)
        depth = 0 if args.depth is None else args.depth
        seed = parse_path(c, rest[0], lam) if rest else SiLSPath.identity(c, lam)
        print(format_char(generate_ball(seed, depth).weight_counts()))
    elif what == "component":
        lam = _lam(args, c)
        _nargs(rest, 1)
        eta = parse_path(c, rest[0], lam)
        try:
            print(component_rep_search(eta, args.budget))
        except BudgetExceeded as ex:
            print(f"budget exceeded: {ex}")
            return EXIT_FAIL
    return EXIT_OK


def _nargs(rest, k):
    if len(rest) != k:
        raise ConfigError(f"expected {k} argument(s), got {len(rest)}")


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args = _resolve(args)
        handler = {"ball": cmd_ball, "verify": cmd_verify, "query": cmd_query}[args.command]
        return handler(args)
    except ParseError as ex:
        print(f"parse error: {ex}", file=sys.stderr)
        return EXIT_PARSE
    except (ConfigError, UnsupportedType, OSError, ValueError) as ex:
        print(f"configuration error: {ex}", file=sys.stderr)
        return EXIT_CONFIG
    except SilpathError as ex:
        print(f"error: {ex}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())

