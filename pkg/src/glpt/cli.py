"""Command line entry point: ``glpt analyze|construct|scan|search|surgery|selftest``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path as FsPath

from . import constructions as C
from .corpus import KNOWN_COUNTS, brute_force_count, generate_connected
from .errors import GlptError
from .graph import bits, encode_graph6, parse_graph6
from .harness import THEOREMS, emit_report, resolve_jobs, scan, search_counterexample
from .params import INF, block_cut_tree, param_report
from .paths import fiber, hamiltonian
from .surgery import apply_plan, attachment_context, find_augmentation
from .transversal import transversal_report

log = logging.getLogger("glpt")


def _read_graph(arg: str):
    text = sys.stdin.read().strip() if arg == "-" else arg
    return parse_graph6(text)


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    pr = param_report(g)
    out = {
        "g6": encode_graph6(g),
        "n": g.n,
        "m": g.num_edges,
        "alpha": pr.alpha,
        "kappa": pr.kappa,
        "delta_max": pr.delta_max,
        "delta_min": pr.delta_min,
        "girth": "inf" if pr.girth is INF else pr.girth,
        "connected": g.n > 0 and g.is_connected(),
    }
    if out["connected"]:
        tr = transversal_report(g, cap=args.cap)
        p = fiber(g)
        out.update({
            "longest_path_order": tr.order,
            "fiber": list(p.verts),
            "hamiltonian_path": hamiltonian(g)[0],
            "gallai": sorted(tr.gallai),
            "lpt": tr.lpt,
            "lpt_witness": sorted(tr.witness),
            "longest_path_vertex_sets": tr.family_size,
            "blocks": [bits(b) for b in block_cut_tree(g).blocks],
            "special_blocks": list(tr.special_blocks),
        })
        if args.plot:
            from .plotting import draw_graph
            draw_graph(g, args.plot, p.verts, sorted(tr.gallai))
    print(json.dumps(out))
    return 0


BUILDERS = {
    "petersen": lambda a: C.petersen(),
    "g0": lambda a: C.g0(),
    "g1": lambda a: C.g1(a.p, a.q),
    "g2": lambda a: C.g2(a.p, a.q),
    "star_blowup": lambda a: C.star_blowup(a.k, a.t),
    "ham_reg": lambda a: C.ham_reg(a.k),
    "bipartite_gadget": lambda a: C.bipartite_gadget(a.t, a.minus_matching),
    "complete": lambda a: C.complete_graph(a.t),
    "path": lambda a: C.path_graph(a.t),
    "cycle": lambda a: C.cycle_graph(a.t),
}


def cmd_construct(args) -> int:
    g = BUILDERS[args.name](args)
    print(encode_graph6(g))
    return 0


def _params(args) -> dict:
    p = {}
    for key in ("k", "n0"):
        v = getattr(args, key, None)
        if v is not None:
            p[key] = v
    return p


def cmd_scan(args) -> int:
    rep = scan(args.theorem, args.input, _params(args), jobs=resolve_jobs(args.jobs), cap=args.cap,
               lean=args.lean)
    data = emit_report(rep, args.format)
    if args.out:
        FsPath(args.out).write_bytes(data)
    else:
        sys.stdout.buffer.write(data)
    if args.plot:
        from .plotting import plot_scan
        d = FsPath(args.plot)
        plot_scan(rep, d / f"scan_{args.theorem}.png")
    return 1 if rep.violations else 0


def cmd_search(args) -> int:
    hit = search_counterexample(args.alpha_max, args.input, jobs=resolve_jobs(args.jobs), cap=args.cap)
    print(json.dumps(None if hit is None else hit.__dict__))
    return 0


def cmd_surgery(args) -> int:
    g = _read_graph(args.graph)
    verts = tuple(int(v) for v in args.path.split(","))
    ctx = attachment_context(g, verts, args.seed)
    plan = find_augmentation(g, ctx, args.keep_ends)
    out = {
        "attach": list(ctx.attach),
        "comp": bits(ctx.comp),
        "t": ctx.t,
        "segments": [list(verts[lo:hi + 1]) for lo, hi in ctx.segments],
        "plan": None,
    }
    if plan is not None:
        res = apply_plan(verts, plan, g)
        out["plan"] = {"kind": plan.kind, "clause": plan.clause, "intervals": plan.host_intervals,
                       "patch1": plan.patch1, "patch2": plan.patch2, "result": list(res.verts)}
    print(json.dumps(out))
    return 0


def cmd_selftest(args) -> int:
    ok = True
    for n in range(1, args.n + 1):
        got = len(generate_connected(n))
        ref = brute_force_count(n)
        status = "ok" if got == ref == KNOWN_COUNTS[n] else "MISMATCH"
        ok &= status == "ok"
        print(f"n={n} generated={got} brute_force={ref} {status}")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="glpt", description="Longest paths, Gallai vertices and transversals")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="cmd", required=True)

    a = sub.add_parser("analyze", help="parameters, longest paths and transversals of one graph")
    a.add_argument("graph", help="graph6 string or - for stdin")
    a.add_argument("--plot", help="write a drawing to this file")
    a.add_argument("--cap", type=int, default=10**6)
    a.set_defaults(fn=cmd_analyze)

    c = sub.add_parser("construct", help="emit a named construction as graph6")
    c.add_argument("name", choices=sorted(BUILDERS))
    c.add_argument("--p", type=int, default=1)
    c.add_argument("--q", type=int, default=16)
    c.add_argument("--k", type=int, default=1)
    c.add_argument("--t", type=int, default=3)
    c.add_argument("--minus-matching", action="store_true")
    c.set_defaults(fn=cmd_construct)

    s = sub.add_parser("scan", help="check a theorem over a corpus")
    s.add_argument("--theorem", required=True, choices=sorted(THEOREMS))
    s.add_argument("--input", required=True, help="graph6 file, gen:N (1..N vertices) or gen:=N")
    s.add_argument("--k", type=int)
    s.add_argument("--n0", type=int, help="override the order threshold (chvatal-erdos, hamreg-corollary)")
    s.add_argument("--alpha-max", type=int, help="unused by scan; accepted for symmetry with search")
    s.add_argument("--format", choices=["jsonl", "summary"], default="jsonl")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--cap", type=int, default=10**6)
    s.add_argument("--lean", action="store_true", help="skip lpt/gallai where the hypothesis fails")
    s.add_argument("--out")
    s.add_argument("--plot", help="directory for the scan figure")
    s.set_defaults(fn=cmd_scan)

    r = sub.add_parser("search", help="first graph with alpha <= A and no Gallai vertex")
    r.add_argument("--alpha-max", type=int, required=True)
    r.add_argument("--input", required=True)
    r.add_argument("--jobs", type=int, default=1)
    r.add_argument("--cap", type=int, default=10**6)
    r.set_defaults(fn=cmd_search)

    u = sub.add_parser("surgery", help="attachment analysis and augmentation of a path")
    u.add_argument("--graph", required=True)
    u.add_argument("--path", required=True, help="comma separated vertices")
    u.add_argument("--seed", type=int, required=True)
    u.add_argument("--keep-ends", default="", choices=["", "x", "y", "xy"])
    u.set_defaults(fn=cmd_surgery)

    t = sub.add_parser("selftest", help="generator counts against the brute-force oracle")
    t.add_argument("--n", type=int, default=6)
    t.set_defaults(fn=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.fn(args)
    except GlptError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
