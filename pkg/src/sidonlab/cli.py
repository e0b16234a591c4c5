"""Command line front end over every library capability.

Set literals accept single values and inclusive ranges: "0,5..16,20".
Game moves, scripted or interactive, are one per line as "k: m1,m2,...".
Every subcommand takes --json for machine-readable output; all output is
deterministic given identical inputs and seeds.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Optional, TextIO

from .core import (
    BoundExhaustedError,
    NaturalSet,
    Params,
    SidonlabError,
    canonical_json,
)
from .density import counting_bound_certificate, prefix_density, symdiff_density
from .game import Cylinder, GrowthFunction, audit_transcript, open_session
from .points import PointConfig, genericity_experiment, is_bhg_config
from .repcount import enumerate_representations, rep_count, rep_table
from .verify import gadget_target, greedy_bhg, is_bhg, violation_gadget


def parse_natural_set(text: str) -> NaturalSet:
    """Parse "0,5..16,20" (inclusive ranges); empty or blank text is the empty set."""
    text = text.strip()
    if not text:
        return NaturalSet([])
    elements: list[int] = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            raise ValueError(f"empty element in set literal {text!r}")
        if ".." in token:
            lo_text, hi_text = token.split("..", 1)
            lo, hi = int(lo_text), int(hi_text)
            if hi < lo:
                raise ValueError(f"descending range {token!r}")
            elements.extend(range(lo, hi + 1))
        else:
            elements.append(int(token))
    return NaturalSet(elements)


def format_natural_set(A: NaturalSet) -> str:
    """Render with runs compressed back to range syntax: {0,5..16}."""
    if not A:
        return "{}"
    runs = []
    items = list(A)
    start = prev = items[0]
    for v in items[1:]:
        if v == prev + 1:
            prev = v
            continue
        runs.append((start, prev))
        start = prev = v
    runs.append((start, prev))
    parts = [str(a) if a == b else (f"{a},{b}" if b == a + 1 else f"{a}..{b}") for a, b in runs]
    return "{" + ",".join(parts) + "}"


def parse_move_line(text: str) -> Cylinder:
    """One move as "k: m1,m2,..."; the member list may be empty."""
    if ":" not in text:
        raise ValueError(f"move {text!r} lacks the 'k:' horizon prefix")
    head, _, tail = text.partition(":")
    return Cylinder(k=int(head.strip()), members=parse_natural_set(tail))


def parse_growth(spec: str, acknowledged: bool = False) -> GrowthFunction:
    """Growth specs: sqrt | log | power:P/Q | table:v1,v2,..."""
    kind, _, arg = spec.partition(":")
    if kind == "power":
        return GrowthFunction(kind="power", exponent=Fraction(arg))
    if kind == "table":
        values = tuple(int(v) for v in arg.split(","))
        return GrowthFunction(kind="table", values=values, acknowledged=acknowledged)
    if arg:
        raise ValueError(f"growth kind {kind!r} takes no argument")
    return GrowthFunction(kind=kind)


def _params(args) -> Params:
    return Params(h=args.h, g=args.g)


def _cmd_count(args, out: TextIO) -> int:
    A = parse_natural_set(args.set)
    if args.x is not None:
        n = rep_count(A, args.h, args.x)
        if args.json:
            print(canonical_json({"h": args.h, "x": args.x, "count": str(n)}), file=out)
        else:
            print(n, file=out)
        return 0
    table = rep_table(A, args.h, args.x_max, engine=args.engine)
    if args.json:
        print(canonical_json(table.to_json()), file=out)
    else:
        for x, c in enumerate(table.counts):
            print(f"{x} {c}", file=out)
    return 0


def _cmd_verify(args, out: TextIO) -> int:
    A = parse_natural_set(args.set)
    p = _params(args)
    verdict = is_bhg(A, p)
    if args.json:
        print(canonical_json({"params": p.to_json(), "verdict": verdict.to_json()}), file=out)
        return 0
    name = f"B_{p.h}[{p.g}]"
    if verdict.is_bhg:
        print(f"{format_natural_set(A)} is {name}", file=out)
    else:
        w = verdict.witness
        reps = " ".join("(" + ",".join(map(str, r)) + ")" for r in w.representations)
        print(
            f"{format_natural_set(A)} is NOT {name}: witness x={w.x} with "
            f"{len(w.representations)} representations: {reps}",
            file=out,
        )
    return 0


def _cmd_gadget(args, out: TextIO) -> int:
    F0 = parse_natural_set(args.f0)
    p = _params(args)
    A = violation_gadget(F0, p)
    target = gadget_target(F0, p)
    reps = enumerate_representations(A, p.h, target)
    if args.json:
        print(
            canonical_json(
                {
                    "f0": F0.to_json(),
                    "params": p.to_json(),
                    "A": A.to_json(),
                    "target": target,
                    "representations": [list(r) for r in reps],
                }
            ),
            file=out,
        )
        return 0
    print(f"A = {format_natural_set(A)}", file=out)
    print(f"target x = {target}", file=out)
    reps_text = " ".join("(" + ",".join(map(str, r)) + ")" for r in reps)
    print(f"representations ({len(reps)} >= g+1 = {p.g + 1}): {reps_text}", file=out)
    return 0


def _cmd_greedy(args, out: TextIO) -> int:
    seed = parse_natural_set(args.seed)
    p = _params(args)
    result = greedy_bhg(seed, p, count=args.count, bound=args.bound)
    if args.json:
        print(canonical_json({"params": p.to_json(), "set": result.to_json()}), file=out)
    else:
        print(",".join(str(v) for v in result), file=out)
    return 0


def _cmd_density(args, out: TextIO) -> int:
    A = parse_natural_set(args.set)
    if args.symdiff is not None:
        report = symdiff_density(A, parse_natural_set(args.symdiff), args.N, args.tail_start)
    else:
        report = prefix_density(A, args.N, args.tail_start)
    payload = report.to_json()
    cert = None
    if args.cert_k is not None or args.cert_y is not None:
        if args.cert_k is None or args.cert_y is None or args.h is None or args.g is None:
            raise ValueError("certificate needs --cert-k, --cert-y, --h, and --g")
        cert = counting_bound_certificate(A, args.cert_k, args.cert_y, Params(args.h, args.g))
        payload["certificate"] = None if cert is None else cert.to_json()
    if args.json:
        print(canonical_json(payload), file=out)
        return 0
    for n, ratio in report.ratios:
        print(f"{n} {ratio.numerator}/{ratio.denominator}", file=out)
    print(f"min_tail {report.min_tail.numerator}/{report.min_tail.denominator}", file=out)
    if args.cert_k is not None:
        if cert is None:
            print("certificate: none (inconclusive)", file=out)
        else:
            print(
                f"certificate: s={cert.s}, C(s,{cert.h})={cert.subsets} > "
                f"h*g*y={cert.cap}; not B_{cert.h}[{cert.g}]",
                file=out,
            )
    return 0


def parse_point_config(text: str) -> PointConfig:
    """Semicolon-separated points, comma-separated rational coordinates."""
    vectors = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            raise ValueError("empty point in configuration literal")
        vectors.append([Fraction(c.strip()) for c in chunk.split(",")])
    if not vectors:
        raise ValueError("empty configuration")
    return PointConfig(dim=len(vectors[0]), points=vectors)


def _cmd_points(args, out: TextIO) -> int:
    config = parse_point_config(args.points)
    p = _params(args)
    verdict = is_bhg_config(config, p)
    if args.json:
        print(
            canonical_json({"config": config.to_json(), "verdict": verdict.to_json()}),
            file=out,
        )
        return 0
    name = f"B_{p.h}[{p.g}]"
    if verdict.is_bhg:
        print(f"configuration is {name}", file=out)
    elif verdict.duplicate is not None:
        i, j = verdict.duplicate
        print(f"configuration is NOT {name}: points {i} and {j} coincide", file=out)
        print(f"gamma = {list(verdict.gamma)}", file=out)
    else:
        group = " ".join(str(tuple(v.alpha)) for v in verdict.collision_group)
        print(f"configuration is NOT {name}: colliding exponent vectors {group}", file=out)
        print(f"gamma = {list(verdict.gamma)}", file=out)
    return 0


def _cmd_experiment(args, out: TextIO) -> int:
    p = _params(args)
    report = genericity_experiment(
        n=args.n,
        d=args.d,
        p=p,
        trials=args.trials,
        coord_bound=args.coord_bound,
        seed=args.seed,
    )
    if args.json:
        print(canonical_json(report.to_json()), file=out)
        return 0
    print(
        f"n={report.n} d={report.dim} h={p.h} g={p.g} trials={report.trials} "
        f"failures={report.failure_count}",
        file=out,
    )
    for failure in report.failures:
        print(f"trial {failure.trial}: gamma={list(failure.verdict.gamma)}", file=out)
    return 0


def _print_round(session, index: int, out: TextIO, as_json: bool):
    rnd = session.rounds[index]
    if as_json:
        print(canonical_json({"round": index, **rnd.to_json()}), file=out)
        return
    print(
        f"round {index}: Player I  k={rnd.player1.k} {format_natural_set(rnd.player1.members)}",
        file=out,
    )
    data = " ".join(f"{k}={v}" for k, v in sorted(rnd.data.items()))
    print(
        f"round {index}: Player II k={rnd.player2.k} {data} "
        f"{format_natural_set(rnd.player2.members)}",
        file=out,
    )


def _print_audit(session, out: TextIO, as_json: bool) -> bool:
    report = audit_transcript(session)
    if as_json:
        print(canonical_json({"audit": report.to_json()}), file=out)
        return report.all_pass
    for check in report.checks:
        if session.strategy == "A":
            print(
                f"audit m={check.m}: r({check.zero_target}) = {check.zero_count} "
                f"[{'ok' if check.zero_ok else 'FAIL'}]; r({check.t_m}) = "
                f"{check.count_at_t} >= {check.threshold} "
                f"[{'ok' if check.growth_ok else 'FAIL'}]",
                file=out,
            )
        else:
            cert = "none"
            if check.certificate is not None:
                cert = f"C({check.certificate.s},{check.certificate.h})={check.certificate.subsets} > {check.certificate.cap}"
            print(
                f"audit m={check.m}: |A cap ({check.k_m},{check.y_m}]| / {check.y_m} = "
                f"{check.window}/{check.y_m} >= {check.required.numerator}/"
                f"{check.required.denominator} [{'ok' if check.ratio_ok else 'FAIL'}]; "
                f"certificate {cert}",
                file=out,
            )
    print(f"audit: {'PASS' if report.all_pass else 'FAIL'}", file=out)
    return report.all_pass


def _cmd_game(args, out: TextIO) -> int:
    p = Params(h=args.h, g=args.g)
    f = None
    if args.strategy == "A":
        if args.f is None:
            raise ValueError("strategy A needs --f")
        f = parse_growth(args.f, acknowledged=args.acknowledge_f)
    elif args.f is not None:
        raise ValueError("strategy B takes no --f")
    opening = parse_move_line(args.opening)
    session = open_session(p, args.strategy, f=f, opening=opening)
    session.respond()
    _print_round(session, 0, out, args.json)

    if args.moves is not None:
        with open(args.moves, encoding="ascii") as fh:
            lines = [ln.strip() for ln in fh]
        for line in lines:
            if not line or line.startswith("#"):
                continue
            session.player1_move(parse_move_line(line))
            session.respond()
            _print_round(session, len(session.rounds) - 1, out, args.json)
    elif args.interactive:
        print("one move per line as 'k: m1,m2,...'; end with EOF", file=sys.stderr)
        for line in sys.stdin:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                session.player1_move(parse_move_line(line))
                session.respond()
            except (SidonlabError, ValueError) as exc:
                print(f"rejected: {exc}", file=sys.stderr)
                continue
            _print_round(session, len(session.rounds) - 1, out, args.json)

    ok = _print_audit(session, out, args.json)
    return 0 if ok else 1


def _cmd_serve(args, out: TextIO) -> int:
    import uvicorn

    from .server import SessionStore, create_app

    store = SessionStore(journal_path=args.journal, seed=args.seed)
    uvicorn.run(create_app(store), host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sidonlab", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p_sub):
        p_sub.add_argument("--json", action="store_true", help="machine-readable output")

    p_count = sub.add_parser("count", help="representation counts")
    p_count.add_argument("--set", required=True)
    p_count.add_argument("--h", type=int, required=True)
    group = p_count.add_mutually_exclusive_group(required=True)
    group.add_argument("--x", type=int)
    group.add_argument("--x-max", type=int)
    p_count.add_argument("--engine", choices=["auto", "oracle", "dp", "convolution"], default="auto")
    common(p_count)
    p_count.set_defaults(handler=_cmd_count)

    p_verify = sub.add_parser("verify", help="decide B_h[g]")
    p_verify.add_argument("--set", required=True)
    p_verify.add_argument("--h", type=int, required=True)
    p_verify.add_argument("--g", type=int, required=True)
    common(p_verify)
    p_verify.set_defaults(handler=_cmd_verify)

    p_gadget = sub.add_parser("gadget", help="interval gadget breaking B_h[g]")
    p_gadget.add_argument("--f0", required=True)
    p_gadget.add_argument("--h", type=int, required=True)
    p_gadget.add_argument("--g", type=int, required=True)
    common(p_gadget)
    p_gadget.set_defaults(handler=_cmd_gadget)

    p_greedy = sub.add_parser("greedy", help="greedy B_h[g] extension")
    p_greedy.add_argument("--seed", required=True)
    p_greedy.add_argument("--h", type=int, required=True)
    p_greedy.add_argument("--g", type=int, required=True)
    p_greedy.add_argument("--count", type=int, required=True)
    p_greedy.add_argument("--bound", type=int, default=100_000)
    common(p_greedy)
    p_greedy.set_defaults(handler=_cmd_greedy)

    p_density = sub.add_parser("density", help="prefix density and certificates")
    p_density.add_argument("--set", required=True)
    p_density.add_argument("--symdiff")
    p_density.add_argument("--N", type=int, required=True)
    p_density.add_argument("--tail-start", type=int, required=True)
    p_density.add_argument("--cert-k", type=int)
    p_density.add_argument("--cert-y", type=int)
    p_density.add_argument("--h", type=int)
    p_density.add_argument("--g", type=int)
    common(p_density)
    p_density.set_defaults(handler=_cmd_density)

    p_points = sub.add_parser("points", help="point configuration verdicts")
    p_points.add_argument("--points", required=True)
    p_points.add_argument("--h", type=int, required=True)
    p_points.add_argument("--g", type=int, required=True)
    common(p_points)
    p_points.set_defaults(handler=_cmd_points)

    p_exp = sub.add_parser("experiment", help="genericity sampling")
    p_exp.add_argument("--n", type=int, required=True)
    p_exp.add_argument("--d", type=int, required=True)
    p_exp.add_argument("--h", type=int, required=True)
    p_exp.add_argument("--g", type=int, required=True)
    p_exp.add_argument("--trials", type=int, required=True)
    p_exp.add_argument("--coord-bound", type=int, default=10**6)
    p_exp.add_argument("--seed", type=int, default=0)
    common(p_exp)
    p_exp.set_defaults(handler=_cmd_experiment)

    p_game = sub.add_parser("game", help="play against Player II's strategy")
    p_game.add_argument("--strategy", choices=["A", "B"], required=True)
    p_game.add_argument("--h", type=int, required=True)
    p_game.add_argument("--g", type=int, required=True)
    p_game.add_argument("--f", help="sqrt | log | power:P/Q | table:v1,v2,...")
    p_game.add_argument(
        "--acknowledge-f",
        action="store_true",
        help="vouch that a table growth function diverges",
    )
    p_game.add_argument("--opening", required=True, help="opening cylinder 'k: m1,m2,...'")
    p_game.add_argument("--moves", help="file of moves, one per line")
    p_game.add_argument("--interactive", action="store_true")
    common(p_game)
    p_game.set_defaults(handler=_cmd_game)

    p_serve = sub.add_parser("serve", help="run the HTTP session service")
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument("--port", type=int, default=8712)
    p_serve.add_argument("--journal")
    p_serve.add_argument("--seed", type=int)
    common(p_serve)
    p_serve.set_defaults(handler=_cmd_serve)

    return parser


def cli_dispatch(argv, out: Optional[TextIO] = None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.handler(args, out)
    except BoundExhaustedError as exc:
        print(
            f"error: {exc} (partial: {format_natural_set(exc.partial)})", file=sys.stderr
        )
        return 1
    except (SidonlabError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main():
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
