"""Command-line entry point.

Exit codes: 0 when every check passes, 1 on any failure, 2 on usage errors,
3 when nothing failed but something was inconclusive.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from ..derived.functors import fd, ltensor, rhom
from ..derived.resolution import ResolutionError, resolve
from ..homology.homology import homology_at, sup_inf_amp
from ..invariants.depth import (
    EXACT, INCONCLUSIVE, UnitIdealError, depth_at_prime, depth_ext, depth_koszul, depth_koszul_coh,
    depth_lc, width_koszul, width_tor,
)
from ..invariants.frobenius import frobenius_pushforward
from .families import FAMILIES, UnknownFamily, generate_instances
from .instance import DEFAULT_CAPS, Instance, InstanceError, dump_instances, load_instances
from .suites import SUITES, UnknownSuite, run_suite, threads

OK, FAILED, USAGE, INCONCLUSIVE_ONLY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _common(p):
    p.add_argument("--instance", help="instance JSON file")
    p.add_argument("--seed", type=int, default=0, help="seed for generated instances")
    p.add_argument("--caps", help="caps as a JSON object or a path to a JSON file")
    p.add_argument("--json-out", help="write the machine-readable report here")
    p.add_argument("--oracle-bound", type=int, help="degree bound for the linear-algebra oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="koszul-depth", description="Depth, width and derived invariants of complexes.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("depth", help="depth of a complex with respect to an ideal or at a prime")
    _common(p)
    p.add_argument("--ideal", help="ideal name from the instance or comma-separated generators")
    p.add_argument("--prime", help="prime name (local depth)")
    p.add_argument("--complex", required=True)
    p.add_argument("--method", default="all", choices=["koszul", "koszul-coh", "ext", "lc", "all"])

    p = sub.add_parser("width", help="width of a complex with respect to an ideal")
    _common(p)
    p.add_argument("--ideal", required=True)
    p.add_argument("--complex", required=True)
    p.add_argument("--method", default="all", choices=["koszul", "tor", "all"])

    p = sub.add_parser("homology", help="homology table of a complex")
    _common(p)
    p.add_argument("--complex", required=True)
    p.add_argument("--range", help="homological degrees lo:hi")
    p.add_argument("--degrees", default="0:4", help="internal degrees lo:hi for Hilbert functions")

    p = sub.add_parser("resolve", help="free resolution of a module or complex")
    _common(p)
    p.add_argument("--complex", required=True)
    p.add_argument("--length", type=int)

    for name, what in (("tor", "Tor_i(A, B)"), ("ext", "Ext^i(A, B)")):
        p = sub.add_parser(name, help=what)
        _common(p)
        p.add_argument("--a", required=True, help="first complex name")
        p.add_argument("--b", required=True, help="second complex name")
        p.add_argument("--index", type=int, required=True)

    p = sub.add_parser("amp", help="sup, inf and amplitude of a complex")
    _common(p)
    p.add_argument("--complex", required=True)

    p = sub.add_parser("fd", help="flat dimension of a complex, or of a Frobenius pushforward")
    _common(p)
    p.add_argument("--complex")
    p.add_argument("--frobenius", type=int, metavar="E", help="use the e-th Frobenius pushforward of the ring")

    p = sub.add_parser("verify", help="run property suites")
    _common(p)
    p.add_argument("--suite", default="all")
    p.add_argument("--family", help="built-in family name (e.g. builtin)")
    p.add_argument("--text-out", help="also write the text report here")

    p = sub.add_parser("generate", help="write instances of a built-in family")
    _common(p)
    p.add_argument("--family", required=True)
    p.add_argument("--out", help="output file (stdout if omitted)")
    return parser


# -- helpers ----------------------------------------------------------------------

def _parse_caps(text):
    if text is None:
        return {}
    path = Path(text)
    try:
        raw = path.read_text() if not text.lstrip().startswith("{") and path.exists() else text
        caps = json.loads(raw)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"--caps: {exc}") from exc
    if not isinstance(caps, dict):
        raise UsageError("--caps must be a JSON object")
    unknown = set(caps) - set(DEFAULT_CAPS)
    if unknown:
        raise UsageError(f"--caps: unknown keys {sorted(unknown)}")
    return caps


def _apply_caps(inst: Instance, args):
    caps = dict(inst.caps)
    caps.update(_parse_caps(args.caps))
    if args.oracle_bound is not None:
        caps["oracle_bound"] = args.oracle_bound
    inst.caps = caps
    inst.validate()
    return inst


def _one_instance(args) -> Instance:
    if not args.instance:
        raise UsageError("--instance is required")
    insts = load_instances(args.instance)
    if len(insts) != 1:
        raise UsageError("--instance must hold exactly one instance for this command")
    return _apply_caps(insts[0], args)


def _range(text, default):
    if text is None:
        return default
    try:
        lo, hi = text.split(":")
        return int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected lo:hi") from exc


def _ideal(inst: Instance, text: str):
    if text in inst.ideals:
        return inst.ideal(text)
    try:
        return [inst.ring.parse(g) for g in text.split(",") if g.strip()] or [inst.ring.zero]
    except Exception as exc:
        raise UsageError(f"unknown ideal {text!r}") from exc


def _json(v):
    return v.to_json() if hasattr(v, "to_json") else v


def _emit(args, payload: dict, lines: list[str]):
    print("\n".join(lines))
    if args.json_out:
        Path(args.json_out).write_text(json.dumps(payload, indent=2, sort_keys=True, default=_json) + "\n")


def _status_code(statuses) -> int:
    statuses = list(statuses)
    if "fail" in statuses:
        return FAILED
    if "inconclusive" in statuses:
        return INCONCLUSIVE_ONLY
    return OK


# -- commands ---------------------------------------------------------------------

def cmd_depth(args) -> int:
    inst = _one_instance(args)
    C = inst.complex(args.complex)
    caps = inst.caps
    if args.prime:
        r = depth_at_prime(inst.prime(args.prime), C)
        _emit(args, {"command": "depth", "prime": args.prime, "complex": args.complex, "result": r.to_json()},
              [f"depth_{args.prime} {args.complex} = {r.value} ({r.certainty})"])
        return OK if r.certainty != INCONCLUSIVE else INCONCLUSIVE_ONLY
    if not args.ideal:
        raise UsageError("depth needs --ideal or --prime")
    gens = _ideal(inst, args.ideal)
    routes = {
        "koszul": lambda: depth_koszul(gens, C),
        "koszul-coh": lambda: depth_koszul_coh(gens, C),
        "ext": lambda: depth_ext(gens, C, cap=caps["resolution_length"]),
        "lc": lambda: depth_lc(gens, C, n_max=caps["lc_n_max"], cap=caps["resolution_length"]),
    }
    names = list(routes) if args.method == "all" else [args.method]
    with ThreadPoolExecutor(max_workers=threads()) as pool:
        results = list(pool.map(lambda n: routes[n](), names))
    return _report_routes(args, "depth", results)


def cmd_width(args) -> int:
    inst = _one_instance(args)
    C = inst.complex(args.complex)
    gens = _ideal(inst, args.ideal)
    routes = {
        "koszul": lambda: width_koszul(gens, C),
        "tor": lambda: width_tor(gens, C, cap=inst.caps["resolution_length"]),
    }
    names = list(routes) if args.method == "all" else [args.method]
    return _report_routes(args, "width", [routes[n]() for n in names])


def _report_routes(args, kind, results) -> int:
    lines = [f"{kind}[{args.ideal},{args.complex}] {r.route:<12} {r.value} ({r.certainty})" for r in results]
    exact = {r.value for r in results if r.certainty == EXACT}
    values = {r.value for r in results}
    agree = len(exact) <= 1 and len(values) == 1
    if len(results) > 1:
        lines.append("routes agree" if agree else "ROUTES DISAGREE")
    _emit(args, {"command": kind, "ideal": args.ideal, "complex": args.complex, "agree": agree,
                 "results": [r.to_json() for r in results]}, lines)
    if not agree:
        return FAILED
    if any(r.certainty == INCONCLUSIVE for r in results):
        return INCONCLUSIVE_ONLY
    return OK


def cmd_homology(args) -> int:
    inst = _one_instance(args)
    C = inst.complex(args.complex)
    lo, hi = _range(args.range, tuple(C.window))
    dlo, dhi = _range(args.degrees, (0, 4))
    rows, lines = [], [f"{'i':>4}  {'gens':>4}  hilbert[{dlo}:{dhi}]"]
    for i in range(lo, hi + 1):
        H = homology_at(C, i).module
        graded = getattr(H, "graded", False) and H.ngens
        hf = [H.hilbert_function(d) for d in range(dlo, dhi + 1)] if graded else None
        zero = H.is_zero()
        rows.append({"degree": i, "zero": zero, "generators": H.ngens, "hilbert": hf})
        shown = "0" if zero else (" ".join(map(str, hf)) if hf is not None else "nonzero")
        lines.append(f"{i:>4}  {H.ngens:>4}  {shown}")
    _emit(args, {"command": "homology", "complex": args.complex, "range": [lo, hi], "degrees": [dlo, dhi],
                 "rows": rows}, lines)
    return OK


def cmd_resolve(args) -> int:
    inst = _one_instance(args)
    C = inst.complex(args.complex)
    length = args.length if args.length is not None else inst.caps["resolution_length"]
    res = resolve(C, length)
    F = res.complex
    ranks = {i: F.rank(i) for i in range(F.lo, F.hi + 1)}
    lines = [f"ranks {ranks}", f"complete {res.complete}"]
    _emit(args, {"command": "resolve", "complex": args.complex, "ranks": ranks, "complete": res.complete,
                 "length": res.length}, lines)
    return OK if res.complete else INCONCLUSIVE_ONLY


def _module_summary(M) -> dict:
    out = {"generators": M.ngens, "zero": M.is_zero()}
    if M.graded and M.ngens:
        out["hilbert"] = [M.hilbert_function(d) for d in range(-6, 7)]
    return out


def cmd_tor(args) -> int:
    inst = _one_instance(args)
    A, B = inst.complex(args.a), inst.complex(args.b)
    D = ltensor(A, B, (args.index, args.index), inst.caps["resolution_length"])
    M = D.module(args.index)
    s = _module_summary(M)
    _emit(args, {"command": "tor", "a": args.a, "b": args.b, "index": args.index, "module": s},
          [f"Tor_{args.index}({args.a},{args.b}): {'0' if s['zero'] else s}"])
    return OK


def cmd_ext(args) -> int:
    inst = _one_instance(args)
    A, B = inst.complex(args.a), inst.complex(args.b)
    D = rhom(A, B, (-args.index, -args.index), inst.caps["resolution_length"])
    M = D.module(-args.index)
    s = _module_summary(M)
    _emit(args, {"command": "ext", "a": args.a, "b": args.b, "index": args.index, "module": s},
          [f"Ext^{args.index}({args.a},{args.b}): {'0' if s['zero'] else s}"])
    return OK


def cmd_amp(args) -> int:
    inst = _one_instance(args)
    s = sup_inf_amp(inst.complex(args.complex))
    _emit(args, {"command": "amp", "complex": args.complex, **s.to_json()},
          [f"sup {s.sup}  inf {s.inf}  amp {s.amp}  ({s.certainty})"])
    return OK


def cmd_fd(args) -> int:
    inst = _one_instance(args)
    cap = inst.caps["fd_cap"]
    if args.frobenius is not None:
        X, label = frobenius_pushforward(inst.ring, args.frobenius), f"phi^{args.frobenius}_* R"
    elif args.complex:
        X, label = inst.complex(args.complex), args.complex
    else:
        raise UsageError("fd needs --complex or --frobenius")
    r = fd(X, cap)
    shown = str(r.value) if r.exact else f"not finite at cap ({r.value})"
    _emit(args, {"command": "fd", "target": label, "result": r.to_json()}, [f"fd {label} = {shown}"])
    return OK


def _instances_for_verify(args) -> list[Instance]:
    if args.family and args.instance:
        raise UsageError("give --family or --instance, not both")
    if args.family:
        insts = generate_instances(args.family, seed=args.seed)
    elif args.instance:
        insts = load_instances(args.instance)
    else:
        raise UsageError("verify needs --family or --instance")
    return [_apply_caps(i, args) for i in insts]


def cmd_verify(args) -> int:
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}")
    insts = _instances_for_verify(args)
    jobs = [(i, s) for i in insts for s in (i.suites if args.suite == "all" else [args.suite])
            if args.suite == "all" or s in i.suites]
    with ThreadPoolExecutor(max_workers=threads()) as pool:
        reports = list(pool.map(lambda job: run_suite(*job), jobs))
    text = [r.to_text() for r in reports]
    tally = {}
    for r in reports:
        tally[r.status] = tally.get(r.status, 0) + 1
    text.append(f"suites: {len(reports)}  " + "  ".join(f"{k}={v}" for k, v in sorted(tally.items())))
    payload = {
        "command": "verify", "seed": args.seed, "suite": args.suite,
        "reports": [r.to_json() for r in reports],
        "summary": tally,
        "timings": {f"{r.instance}::{r.suite}": r.timings for r in reports},
    }
    if args.text_out:
        Path(args.text_out).write_text("\n".join(text) + "\n")
    _emit(args, payload, text)
    return _status_code(r.status for r in reports)


def cmd_generate(args) -> int:
    insts = [_apply_caps(i, args) for i in generate_instances(args.family, seed=args.seed)]
    if args.out:
        dump_instances(insts, args.out)
    else:
        data = [i.to_json() for i in insts]
        print(json.dumps(data, indent=2, sort_keys=True))
    if args.json_out:
        Path(args.json_out).write_text(json.dumps({"command": "generate", "family": args.family,
                                                   "count": len(insts),
                                                   "names": [i.name for i in insts]}, indent=2) + "\n")
    return OK


COMMANDS = {
    "depth": cmd_depth, "width": cmd_width, "homology": cmd_homology, "resolve": cmd_resolve,
    "tor": cmd_tor, "ext": cmd_ext, "amp": cmd_amp, "fd": cmd_fd, "verify": cmd_verify,
    "generate": cmd_generate,
}


def _join_ranges(argv):
    """``--range -2:5`` would read as a flag; glue such values to their option."""
    out, it = [], iter(argv)
    for a in it:
        if a in ("--range", "--degrees"):
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def cli_main(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = parser.parse_args(_join_ranges(argv))
        return COMMANDS[args.command](args)
    except SystemExit as exc:  # --help
        return OK if not exc.code else USAGE
    except (UsageError, InstanceError, UnknownFamily, UnknownSuite, UnitIdealError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except (ResolutionError, ArithmeticError) as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return INCONCLUSIVE_ONLY


def main():
    sys.exit(cli_main())
