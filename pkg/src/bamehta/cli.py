"""Command-line front end.

    bamehta closed-form coxeter --group A2 --m 1
    bamehta verify identity --group A1 --m 1 --lambda 1 --mu 2
    bamehta construct --group A2 --m 1 --report phi.json
    bamehta acceptance --suite fast --seed 0 --report report.json

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 numerical non-convergence.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from fractions import Fraction

from . import campaign as cp
from . import closed_forms as cf
from .errors import BAMehtaError, GammaPole, NonConvergent, TermBudgetExceeded

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_NONCONVERGENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _number(text: str):
    """Parse ``3``, ``-3/2`` or ``0.37`` keeping rationals exact."""
    try:
        return Fraction(text) if "." not in text and "e" not in text.lower() else float(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _vector(text: str):
    try:
        return [float(v) for v in text.replace(";", ",").split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated vector: {text!r}")


def _plain(x):
    """Fractions with denominator one become ints so integer-only evaluators accept them."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


def fmt(x: float) -> str:
    return f"{x:.15g}"


def fmt_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return fmt(z.real)
    return f"{fmt(z.real)} {'+' if z.imag >= 0 else '-'} {fmt(abs(z.imag))}i"


def _write(args, text: str):
    """Send output to ``--report`` when given, else stdout."""
    if args.report:
        with open(args.report, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + n.replace("_", "-") for n in missing))
    return [_plain(getattr(args, n)) for n in names]


def _datum(group: str):
    from .arrangements import _datum, parse_group

    label, rank = parse_group(group)
    return _datum(label, rank)


# ---------------------------------------------------------------------------
# closed-form

CLOSED_FORMS = ("coxeter", "mm", "factor", "gw", "wm-norm", "two-param", "two-param-mm", "df", "deformed-a",
                "m1-b", "bc", "phi00-a", "phi00-c", "mm2d", "phi00-2d", "a-coeff")


def closed_form_value(args) -> cf.ClosedFormValue:
    kind = args.kind
    printed = args.as_printed
    if kind == "coxeter":
        g, m = _need(args, "group", "m")
        return cf.contour_gaussian(_datum(g), m)
    if kind == "mm":
        g, k = _need(args, "group", "k")
        return cf.mm_coxeter(_datum(g), k)
    if kind == "factor":
        g, k = _need(args, "group", "k")
        return cf.contour_factor_equal(_datum(g), k)
    if kind == "gw":
        g, m = _need(args, "group", "m")
        return cf.gw_product(_datum(g), m)
    if kind == "wm-norm":
        g, m = _need(args, "group", "m")
        return cf.wm_norm(_datum(g), m)
    if kind == "two-param":
        g, m1, m2 = _need(args, "group", "m1", "m2")
        return cf.contour_gaussian_two_param(g, m1, m2)
    if kind == "two-param-mm":
        g, m1, m2 = _need(args, "group", "m1", "m2")
        return cf.mm_two_param(g, m1, m2)
    if kind == "df":
        n, m, a, b = _need(args, "n", "m", "alpha", "beta")
        rho = _plain(args.rho) if args.rho is not None else -1
        return cf.dotsenko_fateev(n, m, a, b, rho, as_printed=printed)
    if kind == "deformed-a":
        n, m, rho = _need(args, "n", "m", "rho")
        return cf.m_deformed_a(n, m, rho, as_printed=printed)
    if kind == "m1-b":
        n, m, a, rho = _need(args, "n", "m", "alpha", "rho")
        return cf.m1_deformed_b(n, m, a, rho)
    if kind == "bc":
        n, m, a, rho = _need(args, "n", "m", "alpha", "rho")
        return cf.m_deformed_bc(n, m, a, rho, as_printed=printed)
    if kind == "phi00-a":
        m, p = _need(args, "m", "p")
        return cf.phi00_deformed_a(m, p)
    if kind == "phi00-c":
        m, r, s = _need(args, "m", "r", "s")
        return cf.phi00_deformed_c(m, r, s, as_printed=printed)
    if kind in ("mm2d", "phi00-2d", "a-coeff"):
        m, mt, l, q = _need(args, "m", "mtilde", "l", "q")
        if kind == "mm2d":
            return cf.mm_2d(m, mt, l, q)
        if kind == "phi00-2d":
            return cf.phi00_dihedral_wronskian(m, mt, l, q)
        a = Fraction(cf.a_coefficient(m, mt, l, q))
        from .gamma import ExactValue
        return cf.ClosedFormValue(complex(a), ExactValue(a), "wronskian-leading-constant")
    raise UsageError(f"unknown closed form {kind!r}")


def cmd_closed_form(args) -> int:
    val = closed_form_value(args)
    params = {k: str(v) for k, v in sorted(vars(args).items())
              if k in ("group", "m", "m1", "m2", "k", "n", "p", "r", "s", "alpha", "beta", "rho", "q", "l",
                       "mtilde") and v is not None}
    row = {"case": f"closed-form {args.kind}", "paper_ref": val.source, "params": params,
           "value": {"re": cp.sig15(val.value.real), "im": cp.sig15(val.value.imag)},
           "exact": val.exact_str()}
    if args.emit == "json":
        _write(args, cp.dumps({"version": cp.REPORT_VERSION, "config": {"command": "closed-form"}, "rows": [row]}))
    elif args.emit == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["case", "paper_ref", "re", "im", "exact"])
        w.writerow([row["case"], row["paper_ref"], fmt(val.value.real), fmt(val.value.imag), row["exact"] or ""])
        _write(args, buf.getvalue())
    else:
        lines = [f"{row['case']} [{val.source}] " + " ".join(f"{k}={v}" for k, v in params.items())]
        if val.exact_str() is not None:
            lines.append(f"  exact: {val.exact_str()}")
        lines.append(f"  value: {fmt_complex(val.value)}")
        _write(args, "\n".join(lines) + "\n")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verify

def _coxeter_key(args):
    g, m = _need(args, "group", "m")
    return ("coxeter", g, m)


def _quad_ctx(args, suite="fast") -> cp.Context:
    return cp.Context(suite, args.seed, _quad_config(args))


def _quad_config(args):
    from .quadrature import QuadConfig

    if not args.quad:
        doc = {}
    else:
        text = args.quad
        try:
            doc = json.loads(text)
        except json.JSONDecodeError:
            try:
                with open(text) as fh:
                    doc = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise UsageError(f"--quad expects JSON or a JSON file: {exc}")
    if args.tol is not None:
        doc.setdefault("tol_rel", args.tol)
    try:
        return QuadConfig.from_json(doc)
    except TypeError as exc:
        raise UsageError(f"bad quadrature config: {exc}")


def _spec_from_xi(args, arr, branch=None):
    from .arrangements import regular_shift
    from .quadrature import RATIONAL

    if args.xi is None:
        return None
    if len(args.xi) != arr.dim:
        raise UsageError(f"--xi needs {arr.dim} components")
    return regular_shift(arr, strategy="given", xi=args.xi, branch=branch or RATIONAL)


def verify_rows(args) -> list:
    case = args.case
    ctx = _quad_ctx(args)
    tol = args.tol
    if case.upper() in cp.CRITERIA:
        return cp.run_criterion(case.upper(), cp.Context(args.suite, args.seed, _quad_config(args)))
    if case == "identity":
        from .quadrature import build_integrand_identity, identity_rhs
        from .arrangements import regular_shift

        key = _coxeter_key(args)
        arr, _, phi = cp.berest(key)
        lam = args.lam if args.lam is not None else [0.0] * arr.dim
        mu = args.mu if args.mu is not None else [0.0] * arr.dim
        if len(lam) != arr.dim or len(mu) != arr.dim:
            raise UsageError(f"--lambda and --mu need {arr.dim} components for {arr.name}")
        rhs = identity_rhs(phi, lam, mu)
        zero = abs(rhs) < 1e-14
        tol = tol or (1e-10 if zero else 1e-8)
        spec = _spec_from_xi(args, arr) or regular_shift(arr)
        est = cp.integrate(ctx, build_integrand_identity(phi, lam, mu, arr), spec, tol_rel=tol,
                           tol_abs=1e-10 if zero else None)
        return [cp.numeric_row("verify", f"{cp.case_name(key)} lam={lam} mu={mu}", "identity-bilinear-gaussian",
                               rhs, est, tol, "abs" if zero else "rel")]
    if case in ("prop43", "contour-gaussian"):
        key = _coxeter_key(args)
        ctx_rows = _three_routes(ctx, key, args, tol or 1e-8)
        return ctx_rows
    if case == "xi-independence":
        from .quadrature import build_integrand_mm

        key = _coxeter_key(args)
        arr, _, _ = cp.berest(key)
        row = cp._independence_row(ctx, build_integrand_mm(arr), arr, f"{cp.case_name(key)} contour gaussian",
                                   second=_spec_from_xi(args, arr))
        row.criterion = "verify"
        return [row]
    if case == "branch-factor":
        return [r for r in cp.c5_branch_factor(ctx) if args.group is None or r.case.startswith(args.group)]
    if case == "two-param":
        return cp.c6_two_param(ctx)
    if case == "bilinear":
        return cp.c7_bilinear(ctx)
    if case == "wronskian":
        m, mt, l, q = _need(args, "m", "mtilde", "l", "q")
        saved = cp.W2D_TUPLES
        try:
            cp.W2D_TUPLES = [(m, mt, l, q)]
            return cp.c8_wronskian(cp.Context("fast", args.seed, ctx.quad))
        finally:
            cp.W2D_TUPLES = saved
    if case in ("deformed-a", "bc"):
        return _deformed_rows(ctx, args, case)
    if case == "d21":
        return cp.c10_d21(ctx)
    raise UsageError(f"unknown verification case {case!r}")


def _three_routes(ctx, key, args, tol):
    from .arrangements import regular_shift
    from .baker_akhiezer import value_at_origin
    from .quadrature import build_integrand_mm

    arr, datum, phi = cp.berest(key)
    p00 = value_at_origin(phi)
    closed = cf.contour_gaussian(datum, key[2])
    rows = [cp.exact_row("verify", f"{cp.case_name(key)} symbolic 1/phi(0,0) vs closed form", "contour-gaussian",
                         closed.exact.as_fraction(), 1 / Fraction(cp.exact_text(p00)))]
    spec = _spec_from_xi(args, arr) or regular_shift(arr)
    est = cp.integrate(ctx, build_integrand_mm(arr), spec, tol_rel=tol)
    rows.append(cp.numeric_row("verify", f"{cp.case_name(key)} closed form vs shifted integral", "contour-gaussian",
                               closed.value, est, tol, exact_a=closed.exact_str()))
    return rows


def _deformed_rows(ctx, args, case):
    from .arrangements import ordered_shift
    from .quadrature import build_integrand_deformed

    if case == "deformed-a":
        n, m, rho = _need(args, "n", "m", "rho")
        val = cf.m_deformed_a(n, m, rho)
        f = build_integrand_deformed("A", n, m, rho)
    else:
        n, m, a, rho = _need(args, "n", "m", "alpha", "rho")
        val = cf.m_deformed_bc(n, m, a, rho)
        f = build_integrand_deformed("BC", n, m, rho, alpha=a)
    tol = args.tol or 1e-6
    if args.xi is not None:
        from .quadrature import PRINCIPAL_LOG, ContourSpec, certify

        if len(args.xi) != n + m:
            raise UsageError(f"--xi needs {n + m} components")
        spec = ContourSpec(tuple(args.xi), PRINCIPAL_LOG, certify(args.xi, f.vectors) if f.vectors is not None
                           else None)
    else:
        spec = ordered_shift(n, m, vectors=f.vectors, distance=cp.DEFORMED_DISTANCE) if f.vectors is not None \
            else ordered_shift(n, m)
    est = cp.integrate(ctx, f, spec, tol_rel=tol, max_refinements=3)
    return [cp.numeric_row("verify", f"{case} n={n} m={m} rho={args.rho}" + (f" alpha={args.alpha}"
                                                                            if case == "bc" else ""),
                           val.source, val.value, est, tol, exact_a=val.exact_str())]


def _rows_exit(rows) -> int:
    if any(r.failed_convergence for r in rows):
        return EXIT_NONCONVERGENT
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAIL


def _config(args, command: str) -> dict:
    cfg = _quad_config(args)
    out = {"command": command, "seed": args.seed, "quad": cfg.to_json()}
    for k in ("case", "suite", "only", "group", "m", "m1", "m2", "k", "n", "p", "r", "s", "alpha", "beta", "rho",
              "q", "l", "mtilde", "xi", "lam", "mu", "tol"):
        v = getattr(args, k, None)
        if v is not None:
            out[k] = str(v) if isinstance(v, Fraction) else v
    return out


def _emit_rows(args, rows, command: str):
    report = cp.build_report(rows, _config(args, command))
    if args.report:
        with open(args.report, "w", newline="") as fh:
            fh.write(_csv_text(rows) if args.emit == "csv" else cp.dumps(report))
    if args.emit == "json":
        sys.stdout.write(cp.dumps(report))
    elif args.emit == "csv":
        sys.stdout.write(_csv_text(rows))
    else:
        for r in rows:
            print(_row_line(r))
        s = report["summary"]
        print(f"{s['rows'] - s['failed']}/{s['rows']} rows pass")


def _csv_text(rows) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=cp.CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for d in cp.csv_rows(rows):
        w.writerow(d)
    return buf.getvalue()


def _row_line(r) -> str:
    status = "PASS" if r.passed else ("NONCONVERGENT" if r.failed_convergence else "FAIL")
    a = r.exact_a if r.exact_a is not None and r.mode in ("exact", "check") else fmt_complex(r.route_a)
    b = r.exact_b if r.exact_b is not None and r.mode in ("exact", "check") else fmt_complex(r.route_b)
    extra = f" err_est={r.error_est:.3g}" if r.error_est else ""
    return f"[{status}] {r.criterion} {r.case}: {a} vs {b} rel_err={r.rel_err:.3g} tol={r.tol:g}{extra}"


def cmd_verify(args) -> int:
    rows = verify_rows(args)
    _emit_rows(args, rows, "verify")
    return _rows_exit(rows)


# ---------------------------------------------------------------------------
# construct

def cmd_construct(args) -> int:
    from .arrangements import build_coxeter, build_deformed_a, build_deformed_c
    from .baker_akhiezer import check_axioms, construct_berest, phi_to_json, value_at_origin

    g = args.group
    if g is None:
        raise UsageError("missing --group")
    gl = g.lower()
    if gl in ("deformed-a", "a(p)"):
        m, p = _need(args, "m", "p")
        arr, _ = build_deformed_a(m, p)
    elif gl in ("deformed-c", "c(r,s)"):
        m, r, s = _need(args, "m", "r", "s")
        arr, _ = build_deformed_c(m, r, s)
    else:
        mult = _multiplicities(args)
        arr, _ = build_coxeter(g, m=mult)
    budget = args.budget
    phi = construct_berest(arr, term_budget=budget)
    doc = {"version": cp.REPORT_VERSION, "arrangement": arr.name, "phi": phi_to_json(phi),
           "phi00": cp.exact_text(value_at_origin(phi)) or str(value_at_origin(phi))}
    if args.check:
        rep = check_axioms(phi, arr)
        doc["axioms"] = {"ok": rep.ok, "failures": rep.failures}
    text = cp.dumps(doc)
    if args.report:
        with open(args.report, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    if args.check and not doc["axioms"]["ok"]:
        return EXIT_FAIL
    return EXIT_OK


def _multiplicities(args):
    if args.m1 is not None or args.m2 is not None:
        m1, m2 = _need(args, "m1", "m2")
        from .arrangements import _datum as dt, parse_group

        label, rank = parse_group(args.group)
        orbits = dt(label, rank).orbits
        if len(orbits) != 2:
            raise UsageError(f"{args.group} has a single orbit; use --m")
        return {orbits[0]: m1, orbits[1]: m2}
    return _plain(args.m) if args.m is not None else 1


# ---------------------------------------------------------------------------
# acceptance

def cmd_acceptance(args) -> int:
    only = [c.strip().upper() for c in args.only.split(",")] if args.only else None
    t0 = time.perf_counter()

    def progress(cid, rows):
        ok = all(r.passed for r in rows)
        print(f"{cid} {cp.CRITERIA[cid][0]}: {'pass' if ok else 'FAIL'} "
              f"({sum(r.passed for r in rows)}/{len(rows)}) {time.perf_counter() - t0:.1f}s", file=sys.stderr)

    rows = cp.run_acceptance(args.suite, args.seed, _quad_config(args), only, progress)
    _emit_rows(args, rows, "acceptance")
    return _rows_exit(rows)


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    g = common.add_argument_group("parameters")
    g.add_argument("--group", help="Coxeter label such as A2, B2, F4, I2(4)")
    for name in ("m", "m1", "m2", "p", "r", "s", "n", "q", "l", "mtilde"):
        g.add_argument(f"--{name}", type=_number)
    g.add_argument("--k", type=_number, help="Macdonald-Mehta exponent")
    g.add_argument("--alpha", type=_number)
    g.add_argument("--beta", type=_number)
    g.add_argument("--rho", type=_number)
    g.add_argument("--lambda", dest="lam", type=_vector, help="comma-separated vector")
    g.add_argument("--mu", type=_vector, help="comma-separated vector")
    g.add_argument("--xi", type=_vector, help="shift vector, comma-separated")
    o = common.add_argument_group("run control")
    o.add_argument("--quad", help="quadrature config as JSON text or a JSON file")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--tol", type=float)
    o.add_argument("--report", help="write the report to this path")
    o.add_argument("--emit", choices=("json", "csv"), help="machine-readable output on stdout")
    o.add_argument("--as-printed", action="store_true",
                   help="use the uncorrected constants where a correction applies")

    p = argparse.ArgumentParser(prog="bamehta", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("closed-form", parents=[common], help="evaluate a closed-form expression")
    c.add_argument("kind", choices=CLOSED_FORMS)
    c.set_defaults(func=cmd_closed_form)
    v = sub.add_parser("verify", parents=[common], help="cross-check routes for one case")
    v.add_argument("case", help="identity, prop43, xi-independence, branch-factor, two-param, bilinear, "
                                "wronskian, deformed-a, bc, d21, or a criterion id C1..C11")
    v.add_argument("--suite", choices=cp.SUITES, default="fast")
    v.set_defaults(func=cmd_verify)
    k = sub.add_parser("construct", parents=[common], help="build a Baker-Akhiezer function as JSON")
    k.add_argument("--budget", type=int, default=50_000, help="term budget for intermediate polynomials")
    k.add_argument("--check", action="store_true", help="also run the axiom checks")
    k.set_defaults(func=cmd_construct)
    a = sub.add_parser("acceptance", parents=[common], help="run the acceptance suite")
    a.add_argument("--suite", choices=cp.SUITES, default="fast")
    a.add_argument("--only", help="comma-separated criterion ids")
    a.set_defaults(func=cmd_acceptance)
    return p


_VALUE_FLAGS = {"--m", "--m1", "--m2", "--p", "--r", "--s", "--n", "--q", "--l", "--mtilde", "--k", "--alpha",
                "--beta", "--rho", "--lambda", "--mu", "--xi", "--tol", "--seed"}


def _glue_negative_values(argv):
    """``--alpha -3/2`` -> ``--alpha=-3/2``; argparse only accepts plain negative decimals."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and re.match(r"^-[0-9.]", argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_negative_values(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"bamehta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GammaPole as exc:
        print(f"bamehta: error: gamma pole at argument {exc.argument}", file=sys.stderr)
        return EXIT_USAGE
    except NonConvergent as exc:
        print(f"bamehta: non-convergence: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENT
    except TermBudgetExceeded as exc:
        print(f"bamehta: error: {exc}; raise --budget", file=sys.stderr)
        return EXIT_FAIL
    except (BAMehtaError, ValueError, TypeError) as exc:
        print(f"bamehta: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
