"""Command line entry point: ``redvar <command> [options]``.

Exit codes: 0 when every reported check passes, 1 when some check fails,
2 on malformed input.
"""
from __future__ import annotations

import argparse
import sys

from . import bb, checks, exterior, jsonio, orbits4, tangent
from .jsonio import InputError
from .lie import LieSubspace
from .polys import fmt_scalar

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class Outcome:
    """What a command produced: a JSON payload, a text rendering, and pass/fail."""

    def __init__(self, payload, text: str, ok: bool = True):
        self.payload, self.text, self.ok = payload, text, ok


def _subspace(path: str) -> LieSubspace:
    return jsonio.parse_subspace(jsonio.load_json(path), path)


def _abelian_subspace(path: str) -> LieSubspace:
    a = _subspace(path)
    if not a.is_abelian():
        raise InputError(f"{path}: subspace is not abelian")
    return a


def _need(args, name: str):
    v = getattr(args, name)
    if v is None:
        raise InputError(f"--{name.replace('_', '-')} is required for {args.command}")
    return v


# -- commands --------------------------------------------------------------------

def cmd_classify(args) -> Outcome:
    a = _abelian_subspace(_need(args, "subspace"))
    if a.n != 4 or a.dim != 3:
        raise InputError(f"{args.subspace}: expected a 3-dim subspace of sl_4, got dim {a.dim} in gl_{a.n}")
    label = orbits4.classify_orbit(a)
    sig = orbits4.signature(a)
    return Outcome({"orbit": label, "signature": sig.to_json()}, label)


def cmd_tangent_dim(args) -> Outcome:
    if args.subspace:
        a = _abelian_subspace(args.subspace)
    elif args.orbit:
        if args.orbit not in orbits4.LABELS:
            raise InputError(f"--orbit: unknown label {args.orbit!r}")
        a = orbits4.representative(args.orbit)
    else:
        a = tangent.o_bound(args.n)
    d = tangent.tangent_dim(a)
    return Outcome({"n": a.n, "tangent_dim": d}, str(d))


def cmd_theta_kernel(args) -> Outcome:
    d = exterior.theta_kernel_dim(args.n, allow_large=args.allow_large)
    return Outcome({"n": args.n, "kernel_dim": d}, str(d))


def cmd_tn_rank(args) -> Outcome:
    rep = exterior.t4_rank()
    payload = {"rank": rep.rank, "lower_bound": rep.lower_bound, "upper_bound": rep.upper_bound,
               "certified": rep.certified, "status": rep.status, "witness": rep.witness}
    text = f"rank t_4 = {rep.rank} ({rep.status}; bounds {rep.lower_bound}..{rep.upper_bound})"
    return Outcome(payload, text, rep.certified)


def cmd_tn_eval(args) -> Outcome:
    a = _subspace(_need(args, "subspace"))
    x = jsonio.parse_matrix(jsonio.load_json(_need(args, "at")), args.at, a.n)
    if a.dim != a.n - 1:
        raise InputError(f"{args.subspace}: expected {a.n - 1} basis matrices, got {a.dim}")
    if args.twisted:
        v = exterior.t_n_twisted_eval(a, x)
    else:
        v = exterior.t_n_eval(a.matrices(), x)
    return Outcome({"value": fmt_scalar(v), "twisted": args.twisted}, fmt_scalar(v))


def cmd_quadric(args) -> Outcome:
    if args.subspace:
        a = _subspace(args.subspace)
        q = exterior.killing_quadric(a.matrices())
        return Outcome({"Q": fmt_scalar(q)}, fmt_scalar(q))
    first = tangent.quadric_first_order(args.n)
    payload = {str(p): [fmt_scalar(c) for c in v] for p, v in first.items()}
    lines = [f"{p}: {fmt_scalar(v[0])} + {fmt_scalar(v[1])} s" for p, v in first.items()]
    return Outcome({"first_order": payload}, "\n".join(lines))


def cmd_degenerations(args) -> Outcome:
    results = orbits4.verify_degenerations()
    extra = orbits4.verify_degenerations(orbits4.SUPPLEMENTARY_ARROWS)
    rows = []
    lines = []
    for r, tag in [(r, "listed") for r in results] + [(r, "supplementary") for r in extra]:
        rows.append({"source": r.source, "target": r.target, "limit": r.limit_found, "ok": r.ok,
                     "method": r.method, "kind": tag, "obstruction": r.obstruction})
        mark = "ok  " if r.ok else "FAIL"
        lines.append(f"{mark} {r.source:>5} -> {r.target:<5} limit {r.limit_found:<5} [{tag}]")
        if r.obstruction:
            lines.append(f"     {r.obstruction}")
    return Outcome({"arrows": rows}, "\n".join(lines), all(r.ok for r in results))


def cmd_planes(args) -> Outcome:
    planes, transverse = orbits4.secant_planes()
    rows = [{"pair": list(p.pair), "centralizer_dim": p.centralizer_dim, "samples_abelian": p.samples_abelian}
            for p in planes]
    ok = len(planes) == 6 and transverse and all(p.samples_abelian for p in planes)
    lines = [f"plane {p.pair}: centralizer dim {p.centralizer_dim}" for p in planes]
    lines.append(f"pairwise transverse: {transverse}")
    return Outcome({"planes": rows, "transverse": transverse}, "\n".join(lines), ok)


def cmd_cone_check(args) -> Outcome:
    B = tangent.build_B(args.n)
    c = tangent.check_cone_eqs(B)
    payload = {"n": args.n, "symmetric": c.symmetric, "traceless": c.traceless, "quadratic": c.quadratic,
               "ok": c.ok}
    if args.n <= 5:
        payload["stabilizer_dim"] = tangent.stabilizer_lie_dim(B)
    text = "\n".join(f"{k}: {v}" for k, v in payload.items())
    return Outcome(payload, text, c.ok)


def cmd_canonical_order(args) -> Outcome:
    rep = tangent.canonical_vanishing_order(args.n)
    payload = {"n": args.n, "valuation": rep.valuation, "theta_identity": rep.theta_identity,
               "nu_factor": repr(rep.nu_factor), "mu_factor": repr(rep.mu_factor), "tangent_dim": rep.tangent_dim}
    ok = rep.valuation == 3 and rep.theta_identity
    return Outcome(payload, f"valuation {rep.valuation}; theta identity {rep.theta_identity}", ok)


def cmd_fixed_points(args) -> Outcome:
    pts = bb.enumerate_fixed_points()
    table = bb.fixed_point_table(pts)
    payload = {"count": len(pts), "table": table,
               "points": [{"roots": p.label(), "orbit": p.orbit} for p in pts]}
    text = bb.render_table(pts) if args.table else "\n".join(f"{p.orbit:>5}  {p.label()}" for p in pts)
    ok = tuple(table[lab] for lab in bb.ORBIT_TABLE) == bb.EXPECTED_COUNTS
    return Outcome(payload, text, ok)


def cmd_betti(args) -> Outcome:
    lam = bb.find_subgroups(1)[0]
    b = bb.betti_numbers(lam)
    chi = sum(b)
    payload = {"betti": b, "euler": chi, "subgroup": list(lam), "target": list(bb.EXPECTED_BETTI)}
    return Outcome(payload, " ".join(map(str, b)) + f"\nchi = {chi}", tuple(b) == bb.EXPECTED_BETTI)


def cmd_euler(args) -> Outcome:
    chi = bb.euler_characteristic()
    return Outcome({"euler": chi}, str(chi), chi == 193)


def cmd_chow_report(args) -> Outcome:
    rep = bb.chow_report()
    text = (f"target          {' '.join(map(str, rep.target))}\n"
            f"reconstruction  {' '.join(map(str, rep.reconstruction))}\n"
            f"method: {rep.method}" + ("\nDISCREPANCY" if rep.discrepancy else ""))
    return Outcome(rep.to_json(), text)


def cmd_reproduce_all(args) -> Outcome:
    only = set(args.only) if args.only else None
    results = checks.run_all(only, jobs=args.jobs)
    payload = {"checks": [r.to_json(args.timings) for r in results],
               "passed": sum(r.ok for r in results), "total": len(results)}
    lines = [r.line() + (f"  ({r.runtime:.1f}s)" if args.timings else "") for r in results]
    lines.append(f"{payload['passed']}/{payload['total']} checks passed")
    return Outcome(payload, "\n".join(lines), all(r.ok for r in results))


COMMANDS = {
    "classify": (cmd_classify, "orbit label of a 3-dim abelian subspace of sl_4"),
    "tangent-dim": (cmd_tangent_dim, "Zariski tangent dimension of Ab(n) at a point"),
    "theta-kernel": (cmd_theta_kernel, "dim ker Theta"),
    "tn-rank": (cmd_tn_rank, "certified rank of t_4"),
    "tn-eval": (cmd_tn_eval, "evaluate t_n (or the twisted t'_n) on a subspace at a matrix"),
    "quadric": (cmd_quadric, "Killing quadric value, or its first-order expansion"),
    "degenerations": (cmd_degenerations, "verify the degeneration arrows between sl_4 orbits"),
    "planes": (cmd_planes, "secant planes through the diagonal Cartan"),
    "cone-check": (cmd_cone_check, "tangent cone equations for the built B"),
    "canonical-order": (cmd_canonical_order, "vanishing order of the volume form along the boundary"),
    "fixed-points": (cmd_fixed_points, "torus fixed points of Red(4)"),
    "betti": (cmd_betti, "Betti numbers of the resolution"),
    "euler": (cmd_euler, "Euler characteristic of the resolution"),
    "chow-report": (cmd_chow_report, "Chow-rank bookkeeping report"),
    "reproduce-all": (cmd_reproduce_all, "run every acceptance check"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=1, metavar="K", help="bound on worker processes")
    common.add_argument("--n", type=int, default=4)
    common.add_argument("--subspace", metavar="FILE")
    common.add_argument("--at", metavar="FILE")

    parser = argparse.ArgumentParser(prog="redvar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    ps = {name: sub.add_parser(name, parents=[common], help=help_) for name, (_, help_) in COMMANDS.items()}
    ps["quadric"].add_argument("--basis", dest="subspace", metavar="FILE", help="alias of --subspace")
    ps["tangent-dim"].add_argument("--orbit", help="use the representative of this sl_4 orbit")
    ps["theta-kernel"].add_argument("--allow-large", action="store_true")
    ps["tn-eval"].add_argument("--twisted", action="store_true", help="evaluate t'_n = t_n o tau")
    ps["fixed-points"].add_argument("--table", action="store_true", help="per-orbit count table")
    ps["reproduce-all"].add_argument("--only", type=int, nargs="+", metavar="K")
    ps["reproduce-all"].add_argument("--timings", action="store_true",
                                     help="include runtimes (makes the JSON run-dependent)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.n < 2:
        print(f"error: --n must be at least 2, got {args.n}", file=sys.stderr)
        return EXIT_INPUT
    fn = COMMANDS[args.command][0]
    try:
        out = fn(args)
    except (InputError, exterior.ResourceGuardError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except orbits4.ClassificationError as exc:
        print(f"error: ClassificationError: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print(jsonio.dumps(out.payload) if args.json else out.text)
    return EXIT_OK if out.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
