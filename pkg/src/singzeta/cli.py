"""Command-line interface: singzeta <command> [options].

Exit codes: 0 success, 1 an acceptance criterion failed, 2 a resource guard
was hit, 3 the input was invalid.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys

from .enumerate import BadReduction, build_ring_model, count_standard_modules, flag_oracle
from .exactfield import prime_power
from .gamma_modules import GuardExceeded
from .polyalg import PolynomialityViolation, TriPoly
from .semigroup import (SemigroupError, SingularitySpec, check_good_reduction, hopf_spec,
                        parse_branches, parse_newton, ring_invariants)

EXIT_OK, EXIT_FAIL, EXIT_GUARD, EXIT_INPUT = 0, 1, 2, 3


class InputError(ValueError):
    """Invalid command-line input."""


# parsing helpers ---------------------------------------------------------------------

def _int_list(text, what):
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise InputError(f"{what} must be a comma-separated list of integers") from exc
    if not vals:
        raise InputError(f"empty {what}")
    return vals


def parse_fields(text):
    if text is None:
        return None
    vals = _int_list(text, "--fields")
    for q in vals:
        if not prime_power(q):
            raise InputError(f"field size {q} is not a prime power")
    return sorted(set(vals))


def load_spec(args):
    """(spec, alternates) from --spec / --newton / --branch / --hopf plus --colors."""
    given = [n for n in ("spec", "newton", "branch", "hopf") if getattr(args, n, None) is not None]
    if len(given) != 1:
        raise InputError("give exactly one of --spec, --newton, --branch, --hopf")
    colors = _int_list(args.colors, "--colors") if getattr(args, "colors", None) else None
    alternates = ()
    if args.spec is not None:
        path = args.spec
        bundled = os.path.join(os.path.dirname(__file__), "data", os.path.basename(path))
        if not os.path.exists(path) and os.path.exists(bundled):
            path = bundled  # the bundled example corpus
        try:
            with open(path) as fh:
                obj = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read spec {args.spec}: {exc}") from exc
        spec = SingularitySpec.from_json(obj)
        alternates = tuple(SingularitySpec.from_json(a) for a in obj.get("alternates", []))
    elif args.newton is not None:
        from .semigroup import cable_spec
        spec = cable_spec(parse_newton(args.newton))
    elif args.branch is not None:
        spec = SingularitySpec(parse_branches(args.branch))
    else:
        return hopf_spec(args.hopf, colors), ()
    if colors:
        spec = SingularitySpec(spec.branches, tuple(colors), spec.label)
    return spec, alternates


# output --------------------------------------------------------------------------------

def poly_rows(name, P):
    return [[name, i, j, k, str(c)] for (i, j, k), c in TriPoly.coerce(P).terms()]


def emit(payload, fmt, out, rows=None, text=None):
    """Write payload as sorted JSON, as key: value text, or as CSV rows."""
    if fmt == "json":
        out.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        for row in rows or [[k, v] for k, v in sorted(payload.items())]:
            w.writerow(row)
        out.write(buf.getvalue())
    else:
        if text is not None:
            out.write(text)
            return
        for k in sorted(payload):
            v = payload[k]
            out.write(f"{k}: {json.dumps(v) if isinstance(v, (list, dict)) else v}\n")


# commands ------------------------------------------------------------------------------

def cmd_semigroup(args, out):
    spec, _ = load_spec(args)
    if args.check_reduction is not None:
        verdict = check_good_reduction(spec, args.check_reduction)
        payload = {"p": args.check_reduction, "verdict": "GOOD" if verdict.good else "BAD",
                   "witness": verdict.witness}
        emit(payload, args.format, out,
             text=str(verdict) + "\n")
        return EXIT_OK
    inv = ring_invariants(spec)
    branches = []
    for G, d, c, m in zip(inv.semigroups, inv.deltas, inv.conductors, inv.multiplicities):
        branches.append({"generators": list(G.generators), "delta": d, "conductor": c,
                         "multiplicity": m, "gaps": list(G.gaps), "symmetric": G.is_symmetric,
                         "segments": G.num_segments})
    payload = {"label": spec.label, "kappa": spec.kappa, "delta": inv.delta,
               "branches": branches, "linking": [list(r) for r in inv.linking]}
    rows = [["branch", "generators", "delta", "conductor", "multiplicity"]]
    rows += [[n, " ".join(map(str, b["generators"])), b["delta"], b["conductor"],
              b["multiplicity"]] for n, b in enumerate(branches)]
    text = "".join(f"branch {n}: <{','.join(map(str, b['generators']))}> delta={b['delta']} "
                   f"conductor={b['conductor']}\n" for n, b in enumerate(branches))
    text += f"delta={inv.delta}\n"
    emit(payload, args.format, out, rows, text)
    return EXIT_OK


def _bundle(args):
    from .superzeta import motivic_bundle
    spec, alternates = load_spec(args)
    return motivic_bundle(spec, parse_fields(args.fields), threads=args.threads,
                          checkpoint=args.checkpoint, alternates=alternates)


def _flag_crosscheck(spec, fields, ellmax):
    """Compare the rank-product counts with the flag oracle at each field (unibranch, small)."""
    from .superzeta import assemble
    out = {}
    for q in fields:
        model = build_ring_model(spec, q)
        flags = flag_oracle(model, ellmax)
        H = assemble(count_standard_modules(model, threads=1).counts, 1, q=q)
        trunc = TriPoly({e: c for e, c in H.terms() if e[2] <= ellmax})
        out[str(q)] = trunc == TriPoly({(0, d, l): c for (d, l), c in flags.items()})
    return out


def cmd_superpoly(args, out):
    b = _bundle(args)
    payload = {"label": b.spec.label, "H": b.H.render(), "Hbold": b.Hbold.render(),
               "delta": b.delta, "kappa": b.kappa, "fields": list(b.fields),
               "provenance": b.provenance}
    if args.ellmax is not None:
        if b.kappa != 1 or not b.spec.uncolored:
            raise InputError("--ellmax (flag-oracle cross-check) needs an uncolored unibranch spec")
        payload["flag_oracle"] = _flag_crosscheck(b.spec, b.fields[:2], args.ellmax)
    emit(payload, args.format, out, poly_rows("H", b.H), f"{b.H.render()}\n")
    return EXIT_OK


def cmd_lfunc(args, out):
    from .superzeta import L_at_q, flagged_L
    spec, _ = load_spec(args)
    fields = parse_fields(args.fields)
    if fields and len(fields) == 1:
        L = L_at_q(spec, fields[0], args.trunc)
        prov = f"exact at q={fields[0]}"
    else:
        if args.trunc is not None:
            raise InputError("--trunc applies to a single field size")
        L = flagged_L(spec, fields)
        prov = "exact, interpolated in q"
    payload = {"label": spec.label, "L": L.render(), "provenance": [prov]}
    emit(payload, args.format, out, poly_rows("L", L), f"{L.render()}\n")
    return EXIT_OK


def cmd_rh(args, out):
    from .rh_scan import rh_threshold, rh_verdict
    b = _bundle(args)
    H = b.Hbold
    a = float(args.a)
    if args.threshold:
        lo, hi = rh_threshold(H, a, resolution=args.resolution, tol=args.tol)
        payload = {"label": b.spec.label, "a": a, "bracket": [lo, hi], "provenance": ["numeric"]}
        hi_text = "none below 0.999" if hi is None else f"{hi:.6f}"
        emit(payload, args.format, out, [["lo", "hi"], [lo, hi]],
             f"RH holds up to q in ({lo:.6f}, {hi_text})\n")
        return EXIT_OK
    if args.q is None:
        raise InputError("give --q or --threshold")
    v = rh_verdict(H, args.q, a, args.tol)
    payload = {"label": b.spec.label, "q": v.q, "a": a, "holds": v.holds,
               "indeterminate": v.indeterminate, "exceptional_pairs": v.exceptional_pairs,
               "max_residual": v.max_residual,
               "scaled_moduli": [round(float(s), 12) for s in v.scaled_moduli],
               "provenance": ["numeric"]}
    if args.format == "csv":
        out.write(v.to_csv())
    else:
        emit(payload, args.format, out,
             text=f"q={v.q} RH {'holds' if v.holds else 'fails'}; "
                  f"exceptional pairs {v.exceptional_pairs}\n")
    return EXIT_OK


def cmd_rho(args, out):
    from .invariants import quasi_rho
    b = _bundle(args)
    rb = quasi_rho(b)
    payload = {"label": b.spec.label, "rho_11": rb.rho_11, "rho": rb.rho.render(),
               "R": rb.R.render(), "routes": list(rb.routes)}
    emit(payload, args.format, out, poly_rows("rho", rb.rho) + poly_rows("R", rb.R),
         f"rho(1,1) = {rb.rho_11}\nrho(q,t) = {rb.rho.render()}\n")
    return EXIT_OK


def cmd_witten(args, out):
    from .invariants import refined_witten
    spec, _ = load_spec(args)
    if spec.kappa != 1:
        raise InputError("the refined Witten index is computed for unibranch specs")
    G = ring_invariants(spec).semigroups[0]
    w = refined_witten(G)
    payload = {"label": spec.label, "mu": w.mu.render(), "delta_qt": w.delta_qt.render(),
               "varrho": w.varrho.render(), "milnor": 2 * G.delta}
    emit(payload, args.format, out, poly_rows("mu", w.mu), f"mu(q,t) = {w.mu.render()}\n")
    return EXIT_OK


def cmd_verify(args, out):
    from .acceptance import CRITERIA, run_criteria
    if args.list:
        for num, title, _ in CRITERIA:
            out.write(f"{num}\t{title}\n")
        return EXIT_OK
    nums = _int_list(args.only, "--only") if args.only else None
    echo = (lambda line: (out.write(line + "\n"), out.flush())) if args.format == "text" else None
    results = run_criteria(nums, echo=echo, full=args.full)
    if args.format == "json":
        out.write(json.dumps([{"criterion": r.number, "title": r.title, "ok": r.ok,
                               "detail": r.detail} for r in results], indent=2) + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        for r in results:
            w.writerow([r.number, "PASS" if r.ok else "FAIL", r.title, r.detail])
    return EXIT_OK if all(r.ok for r in results) else EXIT_FAIL


# argument parser -------------------------------------------------------------------------

def _spec_args(p):
    p.add_argument("--spec", help="JSON spec file")
    p.add_argument("--newton", help='Newton pairs, e.g. "(2,3)(2,1)"')
    p.add_argument("--branch", help='branches, e.g. "x=z^4;y=z^6+z^7" ("|" between branches)')
    p.add_argument("--hopf", type=int, help="Hopf link with this many components")
    p.add_argument("--colors", help="row colors per branch, e.g. 2,1")


def _count_args(p):
    p.add_argument("--fields", help="field sizes, e.g. 2,3,4,5")
    p.add_argument("--threads", type=int, default=None,
                   help="worker processes (default SINGZETA_THREADS or 1)")
    p.add_argument("--checkpoint", help="checkpoint file for per-cell counts")


def build_parser():
    ap = argparse.ArgumentParser(prog="singzeta", description=__doc__.splitlines()[0])
    ap.add_argument("--format", choices=["json", "text", "csv"], default="text")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("semigroup", help="valuation semigroups, delta, linking, reduction")
    _spec_args(p)
    p.add_argument("--check-reduction", type=int, metavar="P", help="good-reduction test at prime P")

    p = sub.add_parser("superpoly", help="motivic superpolynomial from F_q counts")
    _spec_args(p)
    _count_args(p)
    p.add_argument("--ellmax", type=int, help="cross-check with the flag oracle up to this level")

    p = sub.add_parser("lfunc", help="L-function L = (1-t)^tau Z")
    _spec_args(p)
    p.add_argument("--fields", help="field sizes (one size gives L at that q)")
    p.add_argument("--trunc", type=int, help="truncation order of the module sum")

    p = sub.add_parser("rh", help="RH verdict or threshold for H(qt, t, a)")
    _spec_args(p)
    _count_args(p)
    p.add_argument("--a", default="0", help="numeric value of a (default 0)")
    p.add_argument("--q", type=float, help="numeric q for a single verdict")
    p.add_argument("--tol", type=float, default=1e-6, help="relative circle tolerance")
    p.add_argument("--threshold", action="store_true", help="bracket the RH threshold")
    p.add_argument("--resolution", type=float, default=1e-4, help="bracket width")

    p = sub.add_parser("rho", help="quasi-rho invariants R and rho")
    _spec_args(p)
    _count_args(p)

    p = sub.add_parser("witten", help="refined Witten index mu(q,t)")
    _spec_args(p)

    p = sub.add_parser("verify", help="run the acceptance criteria")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--quick", action="store_true", help="all criteria, standard field ranges")
    g.add_argument("--full", action="store_true", help="also per-cell counts up to q=13")
    g.add_argument("--list", action="store_true", help="list criterion ids")
    p.add_argument("--only", help="comma-separated criterion ids")

    # --format is also accepted after the subcommand
    for sp in sub.choices.values():
        sp.add_argument("--format", choices=["json", "text", "csv"], default=argparse.SUPPRESS)
    return ap


COMMANDS = {"semigroup": cmd_semigroup, "superpoly": cmd_superpoly, "lfunc": cmd_lfunc,
            "rh": cmd_rh, "rho": cmd_rho, "witten": cmd_witten, "verify": cmd_verify}


def main(argv=None, out=None):
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if getattr(args, "threads", None) is not None and args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    if getattr(args, "threads", None) is not None:
        os.environ["SINGZETA_THREADS"] = str(args.threads)
    try:
        return COMMANDS[args.command](args, out)
    except GuardExceeded as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except PolynomialityViolation as exc:
        print(f"polynomiality violated: {exc} {exc.detail}", file=sys.stderr)
        return EXIT_FAIL
    except (InputError, SemigroupError, BadReduction, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_exit():
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
