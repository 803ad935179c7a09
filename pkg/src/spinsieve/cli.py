"""Command-line surface: experiments and identity suites with CSV/JSON reports.

Exit codes: 0 success, 1 identity violation, 2 usage error.  Reports are
byte-identical across runs and across --threads settings; wall-clock
timing columns are emitted only under --timing so that default output
stays reproducible.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
import time

from . import arith, congruences, decomp, eigen, lattice, sieve, symbols
from .gaussian import GaussianInt, conj, delta, is_primary, is_primitive
from .reports import Report
from .symbols import QUARTIC_ZERO, QuarticValue

_X_MAX = 10**11


def _primary_primitive(bound: int) -> list[GaussianInt]:
    m = math.isqrt(bound)
    out = []
    for r in range(-m - 1, m + 2):
        if r % 2 == 0:
            continue
        for s in range(-m - 1, m + 2):
            z = GaussianInt(r, s)
            if 0 < z.norm() <= bound and is_primary(z) and is_primitive(z):
                out.append(z)
    return sorted(out, key=lambda z: (z.norm(), z.re, z.im))


def _one_mod_two(bound: int) -> list[GaussianInt]:
    m = math.isqrt(bound)
    return sorted(
        (
            GaussianInt(r, s)
            for r in range(-m - 1, m + 2)
            if r % 2
            for s in range(-m - 2, m + 3)
            if s % 2 == 0 and 0 < r * r + s * s <= bound
        ),
        key=lambda z: (z.norm(), z.re, z.im),
    )


# ---------------------------------------------------------------------------
# identity suites


def _suite_multiplier(bound: int, cases: int, rng: random.Random):
    ws = _primary_primitive(bound)
    zs = _one_mod_two(bound)
    checked = violations = 0
    for w in ws:
        for z in zs:
            if w.re * z.re - w.im * z.im == 0:
                continue
            ds = symbols.dirichlet_symbol(z, w)
            rhs = (
                QuarticValue.from_sign(symbols.epsilon_factor(w, z))
                * symbols.jacobi_kubota(w)
                * symbols.jacobi_kubota(z)
                * QuarticValue.from_sign(ds)
                if ds
                else QUARTIC_ZERO
            )
            checked += 1
            if symbols.jacobi_kubota(w * z) != rhs:
                violations += 1
            if w.im and z.re:
                from .symbols import epsilon_factor_sign_form

                if symbols.epsilon_factor(w, z) != epsilon_factor_sign_form(w, z):
                    violations += 1
    return checked, violations


def _suite_reciprocity(bound: int, cases: int, rng: random.Random):
    ws = _primary_primitive(bound)
    checked = violations = 0
    for w in ws:
        for z in ws:
            checked += 1
            if symbols.dirichlet_symbol(z, w) != symbols.dirichlet_symbol(w, z):
                violations += 1
    return checked, violations


def _suite_laws(bound: int, cases: int, rng: random.Random):
    ws = _primary_primitive(bound)
    checked = violations = 0
    # definition equivalence on a z-grid
    for w in ws:
        q = w.norm()
        omega = (-w.im * pow(w.re, -1, q)) % q
        for _ in range(max(1, cases // max(1, len(ws)))):
            z = GaussianInt(rng.randrange(-50, 51), rng.randrange(-50, 51))
            checked += 1
            if symbols.dirichlet_symbol(z, w) != symbols.dirichlet_symbol_via_root(
                z, q, omega
            ):
                violations += 1
    # norm relation and product law on random data
    for _ in range(cases):
        w = rng.choice(ws)
        z = GaussianInt(rng.randrange(-40, 41), rng.randrange(-40, 41))
        if z == GaussianInt(0, 0):
            continue
        q = w.norm()
        checked += 1
        if symbols.dirichlet_symbol(z, w) * symbols.dirichlet_symbol(
            z, conj(w)
        ) != arith.jacobi(z.norm() % q, q):
            violations += 1
        w1, w2 = rng.choice(ws), rng.choice(ws)
        e, cof = symbols.primary_gcd_cofactor(w1, w2)
        d = e.norm()
        checked += 1
        lhs = symbols.dirichlet_symbol(z, w1) * symbols.dirichlet_symbol(z, w2)
        if lhs != arith.jacobi(z.norm() % d, d) * symbols.dirichlet_symbol(z, cof):
            violations += 1
        checked += 1
        if lhs != symbols.dirichlet_symbol(z, e) * symbols.dirichlet_symbol(
            z, conj(e)
        ) * symbols.dirichlet_symbol(z, cof):
            violations += 1
    return checked, violations


def _suite_g0(bound: int, cases: int, rng: random.Random):
    checked = violations = 0
    for z1, z2 in lattice.hypothesis_pairs(bound):
        checked += 1
        if congruences.G0_formula(z1, z2) != congruences.G0_brute(z1, z2):
            violations += 1
    return checked, violations


def _suite_counts(bound: int, cases: int, rng: random.Random):
    checked = violations = 0
    for q in range(1, bound + 1, 2):
        for a in range(1, q + 1):
            if math.gcd(a, q) != 1:
                continue
            checked += 1
            if congruences.N_formula(a, q) != congruences.N_brute(a, q):
                violations += 1
    return checked, violations


def _suite_transform(bound: int, cases: int, rng: random.Random):
    # product of coordinate symbols against the symbol of the determinant
    checked = violations = 0
    for z1, z2 in lattice.hypothesis_pairs(bound):
        if z1.re % 2 == 0 or z2.re % 2 == 0:
            continue
        if not (0 < z1.re * z2.re and (z1.re * z2.re) % 8 == 1):
            continue
        dd = abs(delta(z1, z2))
        t = congruences.rational_residue(z1, z2, dd) if dd > 1 else 1
        lhs = arith.jacobi_extended(t, dd)
        rhs = arith.jacobi(z1.im, abs(z1.re)) * arith.jacobi(z2.im, abs(z2.re))
        checked += 1
        if lhs != rhs:
            violations += 1
    return checked, violations


def _suite_residues(bound: int, cases: int, rng: random.Random):
    checked = violations = 0
    for d in range(1, bound + 1):
        roots = congruences.roots_minus_one(d).roots
        checked += 1
        if len(roots) != congruences.rho(d):
            violations += 1
        for b in range(d):
            checked += 1
            brute = sum(1 for a in range(d) if (a * a + b * b) % d == 0)
            if congruences.rho_b(b, d) != brute:
                violations += 1
    return checked, violations


_SUITES = {
    "multiplier": (_suite_multiplier, 500),
    "reciprocity": (_suite_reciprocity, 500),
    "laws": (_suite_laws, 500),
    "g0": (_suite_g0, 500),
    "counts": (_suite_counts, 300),
    "transform": (_suite_transform, 500),
    "residues": (_suite_residues, 150),
}


# ---------------------------------------------------------------------------
# commands


def cmd_theorem1(x: int, checkpoints: int, threads: int, timing: bool) -> Report:
    xs = [x // 10**k for k in range(checkpoints - 1, -1, -1) if x // 10**k >= 1]
    rows = []
    for xv in xs:
        rep = sieve.theorem1_experiment(xv, workers=threads)
        row = {
            "x": rep.x,
            "observed": rep.observed,
            "predicted": rep.predicted,
            "ratio": rep.ratio,
            "pair_count": rep.pair_count,
        }
        if timing:
            row["runtime_s"] = rep.runtime_seconds
        rows.append(row)
    return Report(
        command="theorem1",
        parameters={"x": x, "checkpoints": checkpoints},
        rows=rows,
        summary={"final_ratio": rows[-1]["ratio"] if rows else 0.0},
    )


def cmd_spin(x: int, checkpoints: int, threads: int, timing: bool) -> Report:
    xs = [x // 10**k for k in range(checkpoints - 1, -1, -1) if x // 10**k >= 2]
    rows = []
    for xv in xs:
        t0 = time.perf_counter()
        total, count = eigen.spin_sum(xv, workers=threads)
        row = {"x": xv, "spin_sum": total, "prime_count": count}
        if timing:
            row["runtime_s"] = time.perf_counter() - t0
        rows.append(row)
    return Report(
        command="spin",
        parameters={"x": x, "checkpoints": checkpoints},
        rows=rows,
        summary={"final_sum": rows[-1]["spin_sum"] if rows else 0},
    )


def cmd_identities(suite: str, bound: int | None, cases: int, seed: int) -> Report:
    names = list(_SUITES) if suite == "all" else [suite]
    rows = []
    total_viol = 0
    for name in names:
        fn, default_bound = _SUITES[name]
        rng = random.Random(seed)
        checked, violations = fn(bound or default_bound, cases, rng)
        total_viol += violations
        rows.append(
            {
                "suite": name,
                "bound": bound or default_bound,
                "cases": checked,
                "violations": violations,
            }
        )
    return Report(
        command="identities",
        parameters={"suite": suite, "bound": bound or 0, "cases": cases, "seed": seed},
        rows=rows,
        summary={"violations": total_viol},
    )


def cmd_remainder(x: int, d_max: int, threads: int) -> Report:
    rows_raw, summary = sieve.remainder_scan(x, d_max, workers=threads)
    rows = [
        {
            "d": r.d,
            "A_d": r.A_d,
            "M_d": r.M_d,
            "g_d": float(r.g_d),
            "r_d": r.r_d,
        }
        for r in rows_raw
    ]
    return Report(
        command="remainder",
        parameters={"x": x, "d_max": d_max},
        rows=rows,
        summary=summary,
    )


def cmd_lattice(M: float, bound: int, cases: int) -> Report:
    rows = []
    exact = 0
    for z1, z2 in lattice.hypothesis_pairs(2500, delta_cap=bound, limit=cases, min_norm=9):
        cd = lattice.C_direct(z1, z2, M)
        cp = lattice.C_param(z1, z2, M)
        c0 = lattice.C0(z1, z2, M)
        eq = cd == cp
        exact += eq
        rows.append(
            {
                "z1_re": z1.re,
                "z1_im": z1.im,
                "z2_re": z2.re,
                "z2_im": z2.im,
                "delta": delta(z1, z2),
                "c_direct": cd,
                "c_param": cp,
                "exact_equal": eq,
                "c0": c0,
            }
        )
    return Report(
        command="lattice",
        parameters={"M": M, "bound": bound, "cases": cases},
        rows=rows,
        summary={"pairs": len(rows), "exact_equal": exact},
    )


def cmd_constants() -> Report:
    rows = [
        {"name": "kappa_quadrature", "value": sieve.kappa()},
        {"name": "kappa_closed_form", "value": sieve.kappa_closed_form()},
        {"name": "four_over_pi", "value": 4.0 / math.pi},
        {"name": "euler_product_1e6", "value": sieve.H_partial(10**6)},
        {"name": "e_gamma_0", "value": lattice.E_gamma(0.0)},
    ]
    return Report(command="constants", parameters={}, rows=rows, summary={})


def cmd_decomp(x: int, r: int, cases: int, seed: int) -> Report:
    rng = random.Random(seed)
    from .decomp import _squarefree_up_to

    support = _squarefree_up_to(x)
    rows = []
    bad = 0
    for trial in range(cases):
        f = {ell: rng.choice((-1, 1)) for ell in support}
        lhs, rhs, eq = decomp.prop_24_2_check(f, x, r)
        bad += not eq
        rows.append(
            {
                "trial": trial,
                "r": r,
                "lhs": float(lhs),
                "rhs": float(rhs),
                "equal": eq,
            }
        )
    vx = min(x, 2000)
    v_bad = 0
    for n in range(1, vx + 1):
        for y in (10, 100):
            t1, t2, t3 = decomp.vaughan_terms(n, y)
            want = arith.von_mangoldt(n) if n > y else 0.0
            if abs(t1 - t2 + t3 - want) > 1e-9:
                v_bad += 1
    return Report(
        command="decomp",
        parameters={"x": x, "r": r, "cases": cases, "seed": seed},
        rows=rows,
        summary={
            "identity_failures": bad,
            "vaughan_checked": vx,
            "vaughan_failures": v_bad,
        },
    )


# ---------------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spinsieve",
        description="Experiments and identity suites for the a^2 + b^4 machinery",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, threads=True):
        sp.add_argument("--format", choices=("csv", "json"), default="csv")
        if threads:
            sp.add_argument("--threads", type=int, default=0,
                            help="worker threads (0 = all cores)")

    sp = sub.add_parser("theorem1", help="Lambda-weighted count of a^2 + b^4 <= x")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--checkpoints", type=int, default=1)
    sp.add_argument("--timing", action="store_true")
    common(sp)

    sp = sub.add_parser("spin", help="spin sum over primes p = 1 (mod 4)")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--checkpoints", type=int, default=1)
    sp.add_argument("--timing", action="store_true")
    common(sp)

    sp = sub.add_parser("identities", help="exhaustive/seeded identity suites")
    sp.add_argument("--suite", choices=tuple(_SUITES) + ("all",), default="all")
    sp.add_argument("--bound", type=int, default=0)
    sp.add_argument("--cases", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    common(sp, threads=False)

    sp = sub.add_parser("remainder", help="sieve remainder scan r_d(x)")
    sp.add_argument("--x", type=float, required=True)
    sp.add_argument("--d-max", type=int, default=0)
    common(sp)

    sp = sub.add_parser("lattice", help="direct vs parameterized ellipse counts")
    sp.add_argument("--m", type=float, default=2500.0)
    sp.add_argument("--bound", type=int, default=200)
    sp.add_argument("--cases", type=int, default=25)
    common(sp, threads=False)

    sp = sub.add_parser("constants", help="kappa, 4/pi, Euler products")
    common(sp, threads=False)

    sp = sub.add_parser("decomp", help="triple-sum and Vaughan identity trials")
    sp.add_argument("--x", type=int, default=2000)
    sp.add_argument("--r", type=int, default=2)
    sp.add_argument("--cases", type=int, default=5)
    sp.add_argument("--seed", type=int, default=0)
    common(sp, threads=False)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    threads = getattr(args, "threads", 1)
    if threads == 0:
        import os

        threads = os.cpu_count() or 1

    try:
        if args.command == "theorem1":
            x = int(args.x)
            if not 1 <= x <= _X_MAX:
                parser.error(f"--x must be in [1, {_X_MAX}]")
            report = cmd_theorem1(x, args.checkpoints, threads, args.timing)
        elif args.command == "spin":
            x = int(args.x)
            if not 1 <= x <= 10**9:
                parser.error("--x must be in [1, 1e9]")
            report = cmd_spin(x, args.checkpoints, threads, args.timing)
        elif args.command == "identities":
            report = cmd_identities(
                args.suite, args.bound or None, args.cases, args.seed
            )
        elif args.command == "remainder":
            x = int(args.x)
            if not 1 <= x <= 10**8:
                parser.error("--x must be in [1, 1e8]")
            d_max = args.d_max or math.isqrt(x)
            if d_max > x:
                parser.error("--d-max must be at most x")
            report = cmd_remainder(x, d_max, threads)
        elif args.command == "lattice":
            if not 0 < args.m <= 10**4:
                parser.error("--m must be in (0, 1e4]")
            report = cmd_lattice(args.m, args.bound, args.cases)
        elif args.command == "constants":
            report = cmd_constants()
        elif args.command == "decomp":
            if args.x < 1 or args.r < 2:
                parser.error("--x >= 1 and --r >= 2 required")
            report = cmd_decomp(args.x, args.r, args.cases, args.seed)
        else:  # pragma: no cover
            parser.error("unknown command")
    except ValueError as exc:
        parser.error(str(exc))

    sys.stdout.write(report.render(args.format))
    violations = report.summary.get("violations", 0)
    violations += report.summary.get("identity_failures", 0)
    violations += report.summary.get("vaughan_failures", 0)
    if report.command == "lattice" and report.summary["exact_equal"] != report.summary["pairs"]:
        violations += 1
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
