"""Command-line verification driver.

Each suite runs one family of checks and emits machine-readable reports
tying every result to the claim it tests.  Exit code 0 means every
claimed identity passed at its tolerance; measured-only entries (values
the source leaves open) never affect the exit code.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

SCHEMA = "siegelz-report/1"

SUITES = (
    "counts",
    "fermat",
    "g-triple",
    "hecke",
    "theta-table",
    "orbits",
    "fz-phi",
    "lfactors",
    "lefschetz",
    "spin",
    "ez",
)


@dataclass
class RunConfig:
    prime_list: list = field(default_factory=lambda: [3, 5, 7, 11, 13])
    series_order: int = 200
    numeric_tol: float = 1e-8
    lattice_radius2: float = 12.0
    sample_points: int = 3
    output_path: str | None = None
    selected_suites: list = field(default_factory=lambda: ["all"])

    def validate(self):
        from .arith import is_prime

        for p in self.prime_list:
            if p % 2 == 0 or not is_prime(p):
                raise ValueError(f"prime list entry {p} is not an odd prime")
            if p > 13:
                raise ValueError(f"prime {p} exceeds the Satake counting cap (13)")
        if self.series_order < 1:
            raise ValueError("series order must be positive")
        if self.numeric_tol <= 0 or self.lattice_radius2 <= 0:
            raise ValueError("tolerances must be positive")
        for s in self.selected_suites:
            if s != "all" and s not in SUITES:
                raise ValueError(f"unknown suite {s!r}")


@dataclass
class VerificationReport:
    suite: str
    claim: str
    status: str           # pass | fail | measured
    residual: float | None = None
    runtime: float = 0.0
    details: dict = field(default_factory=dict)


def _report(suite, claim, ok, residual=None, started=None, **details):
    return VerificationReport(
        suite=suite,
        claim=claim,
        status="pass" if ok else "fail",
        residual=residual,
        runtime=round(time.time() - started, 3) if started else 0.0,
        details=details,
    )


def _measured(suite, claim, started=None, **details):
    return VerificationReport(
        suite=suite,
        claim=claim,
        status="measured",
        runtime=round(time.time() - started, 3) if started else 0.0,
        details=details,
    )


# ---------------------------------------------------------------------------
# suites

def suite_counts(cfg: RunConfig):
    from .cmform import a_p
    from .pointcount import count_variety, verify_birational_map, verify_count_formulas

    out = []
    t0 = time.time()
    f3 = count_variety("FermatSurface", 3)
    out.append(_report("counts", "|F(F_3)| = 16", f3 == 16, abs(f3 - 16), t0, count=f3))
    for p in cfg.prime_list:
        t0 = time.time()
        rep = verify_count_formulas(p, a_p(p))
        res = rep["residuals"]
        keys = ("cone", "satake", "resolution", "u1_complement", "u2_complement",
                "slice_x0_zero", "slice_x3_zero")
        worst = max(abs(res[k]) for k in keys)
        out.append(_report(
            "counts",
            "|Cone| = p|F|+1, |Z| = (p-1)|F|+2p+2, |Ztilde| = (p+1)|F|, complements",
            worst == 0, float(worst), t0, p=p, counts=rep["counts"],
            residuals={k: res[k] for k in keys},
        ))
    for p in (3, 5, 7):
        t0 = time.time()
        naive = count_variety("Zsatake", p, "naive")
        charsum = count_variety("Zsatake", p, "charsum")
        out.append(_report("counts", "naive and character-sum counts agree on Z",
                           naive == charsum, abs(naive - charsum), t0,
                           p=p, naive=naive, charsum=charsum))
    t0 = time.time()
    bij = verify_birational_map(3)
    out.append(_report("counts", "coordinate map is a bijection U1 -> U2",
                       bij["bijective"], None, t0, **bij))
    return out


def suite_fermat(cfg: RunConfig):
    from .cmform import a_p
    from .pointcount import verify_count_formulas

    out = []
    for p in cfg.prime_list:
        t0 = time.time()
        rep = verify_count_formulas(p, a_p(p))
        r = rep["residuals"]["fermat_corrected"]
        out.append(_report(
            "fermat",
            "|F(F_p)| = 1 + p^2 + (9 + 7chi_-1 + 2chi_2 + 2chi_-2)p + a_p",
            r == 0, float(abs(r)), t0, p=p, a_p=a_p(p),
            measured_trace=rep["measured_frobenius_trace"],
        ))
    rep3 = verify_count_formulas(3, a_p(3))
    out.append(_measured(
        "fermat", "Frobenius trace on the transcendental part at p = 3",
        details={"measured": rep3["measured_frobenius_trace"],
                 "note": "the uncorrected closed form would force trace -6 here"},
    ))
    return out


def suite_g_triple(cfg: RunConfig):
    from .cmform import a_p, g_expansion, resolve_gauss_convention
    from .arith import odd_primes

    out = []
    t0 = time.time()
    order = cfg.series_order
    ga = g_expansion("theta_product", order)
    gb = g_expansion("gauss_sum", order)
    gc = g_expansion("hecke_character", order)
    ok = ga.agrees_with(gb, order) and ga.agrees_with(gc, order)
    out.append(_report("g-triple",
                       "theta-product, lattice-sum, and Hecke expansions agree",
                       ok, 0.0 if ok else 1.0, t0, order=order,
                       gauss_convention=resolve_gauss_convention()))
    t0 = time.time()
    cm = all(a_p(p) == 0 for p in odd_primes(200) if p % 4 == 3)
    weil = all(abs(a_p(p)) <= 2 * p for p in odd_primes(200))
    support = all(n % 4 == 1 for n, v in ga.a.items() if v)
    out.append(_report("g-triple", "a_p = 0 at inert primes, |a_p| <= 2p, CM support",
                       cm and weil and support, None, t0))
    return out


def suite_hecke(cfg: RunConfig):
    from .arith import odd_primes
    from .cmform import a_p, hecke_Tp_check

    out = []
    check_order = 24
    for p in odd_primes(50):
        t0 = time.time()
        res = hecke_Tp_check(p, check_order)
        out.append(_report("hecke", "T_p g = a_p g", not res.a,
                           0.0 if not res.a else 1.0, t0, p=p, a_p=a_p(p),
                           order=check_order))
    return out


def suite_theta_table(cfg: RunConfig):
    import itertools

    from .theta import (
        E_GENERATORS,
        apply_moebius,
        character_as_gauss,
        cocycle,
        even_characteristics,
        fz_eval,
        gammaZ_generators,
        pair_character_any_parity,
        random_gamma2_elements,
        random_gamma48_elements,
        siegel_point,
        slash_character_exact,
        table1_char,
        theta_eval,
        verify_igusa_transformation,
    )

    tol = cfg.numeric_tol
    out = []
    evens = even_characteristics(2)
    pts = [siegel_point(2j, 0, 2j), siegel_point(2j, 0.5j, 2j)]

    t0 = time.time()
    worst = 0.0
    for M in random_gamma2_elements(20, seed=1):
        for tau in pts:
            worst = max(worst, verify_igusa_transformation(evens, M, tau, 1e-13))
    out.append(_report("theta-table",
                       "squared transformation law over the level-2 group",
                       worst < tol, worst, t0, matrices=20, points=2))

    t0 = time.time()
    tau = siegel_point(1.9j + 0.2, 0.4j + 0.1, 2.3j - 0.15)
    worst = 0.0
    exact_ok = True
    for i, M in enumerate(E_GENERATORS, start=1):
        mtau = apply_moebius(M, tau)
        detj = complex(np.linalg.det(cocycle(M, tau)))
        th_m = {m: theta_eval(m, mtau, 1e-13) for m in evens}
        th_0 = {m: theta_eval(m, tau, 1e-13) for m in evens}
        for m1, m2 in itertools.combinations(evens, 2):
            chi = table1_char(m1, m2, i).to_complex()
            ratio = th_m[m1] * th_m[m2] / (th_0[m1] * th_0[m2] * detj)
            worst = max(worst, abs(ratio - chi))
            if character_as_gauss(slash_character_exact((m1, m2), M)) != table1_char(m1, m2, i):
                exact_ok = False
    out.append(_report("theta-table",
                       "pair characters on the ten generators (45 even pairs)",
                       worst < tol and exact_ok, worst, t0))

    t0 = time.time()
    allchars = [(a, b, c, d) for a in (0, 1) for b in (0, 1)
                for c in (0, 1) for d in (0, 1)]
    mixed_bad = []
    pure_ok = True
    for i, M in enumerate(E_GENERATORS, start=1):
        for m1, m2 in itertools.combinations(allchars, 2):
            chi3 = character_as_gauss(pair_character_any_parity(m1, m2, M))
            agree = chi3 == table1_char(m1, m2, i)
            parities = {len([v for v in (m1[0]*m1[2]+m1[1]*m1[3],) if v % 2]),
                        len([v for v in (m2[0]*m2[2]+m2[1]*m2[3],) if v % 2])}
            mixed = len(parities) == 2
            if not agree:
                if mixed and i == 5:
                    mixed_bad.append((i, m1, m2))
                else:
                    pure_ok = False
    out.append(_report("theta-table",
                       "pair characters extend to odd characteristics "
                       "(via the genus-3 embedding)",
                       pure_ok, None, t0,
                       mixed_parity_sign_exceptions=len(mixed_bad),
                       note="mixed-parity pairs pick up -1 at the central "
                            "element; equal-parity pairs agree everywhere"))

    t0 = time.time()
    worst = 0.0
    for gamma in gammaZ_generators() + random_gamma48_elements(10, seed=2):
        for tau in pts:
            gtau = apply_moebius(gamma, tau)
            detj = complex(np.linalg.det(cocycle(gamma, tau)))
            r = abs(fz_eval(gtau, 1e-13) / detj ** 3 - fz_eval(tau, 1e-13))
            worst = max(worst, r)
    out.append(_report("theta-table",
                       "six-theta product is fixed by its stabilizer generators "
                       "and the level-(4,8) group",
                       worst < tol, worst, t0))
    return out


def suite_orbits(cfg: RunConfig):
    from .theta import FZ_TUPLE, fz_orbit, orbit_decomposition

    out = []
    t0 = time.time()
    orbits = orbit_decomposition()
    sizes = sorted(len(o) for o in orbits)
    ok = len(orbits) == 3 and sum(sizes) == 210
    orbit = fz_orbit()
    out.append(_report("orbits", "210 six-tuples split into 3 orbits; "
                       "the six-theta orbit has 15 members",
                       ok and len(orbit) == 15, None, t0,
                       orbits=len(orbits), sizes=sizes, fz_orbit_size=len(orbit)))
    t0 = time.time()
    fz = frozenset(FZ_TUPLE)
    exceptions = [
        sorted("".join(map(str, m)) for m in t)
        for t in orbit
        if t != fz and (1, 1, 1, 1) not in t and (1, 0, 0, 1) not in t
    ]
    out.append(_report("orbits",
                       "every other orbit member contains the 1111 or 1001 theta",
                       not exceptions, None, t0, exceptions=exceptions,
                       note="the exceptional member carries first-entry-1 "
                            "characteristics, so its degeneration still vanishes"))
    return out


def suite_fz_phi(cfg: RunConfig):
    from .arith import series_mul, QuarterSeries
    from .theta import (
        FZ_TUPLE,
        G0,
        G2,
        apply_moebius,
        cocycle,
        fz_expansion,
        fz_orbit,
        phi_after_g0,
        six_tuple_expansion,
        theta_expansion,
        theta_eval,
    )

    out = []
    order = cfg.series_order
    t0 = time.time()
    phi = phi_after_g0(fz_expansion(order))
    target = QuarterSeries.one(1, order)
    for m in ((0, 0), (0, 1), (1, 0)):
        t = theta_expansion(m, order)
        target = series_mul(target, series_mul(t, t))
    ok = phi == target
    out.append(_report("fz-phi",
                       "the degeneration of the six-theta product equals "
                       "theta00^2 theta01^2 theta10^2 exactly",
                       ok, 0.0 if ok else 1.0, t0, order=order))

    t0 = time.time()
    killed = []
    for tup in sorted(fz_orbit(), key=sorted):
        if tup == frozenset(FZ_TUPLE):
            continue
        img = phi_after_g0(six_tuple_expansion(tuple(sorted(tup)), 40))
        killed.append(img.is_zero())
    out.append(_report("fz-phi",
                       "the degeneration kills every other orbit member",
                       all(killed), None, t0, members=len(killed)))

    t0 = time.time()
    tau1 = 0.3 + 0.9j
    t_aux = 8.0
    vals = {}
    for name, g in (("g0", G0), ("g2", G2)):
        tau = np.array([[tau1, 0], [0, 1j * t_aux]], dtype=complex)
        gtau = apply_moebius(g, tau)
        detj = complex(np.linalg.det(cocycle(g, tau)))
        vals[name] = detj ** -3 * complex(
            np.prod([theta_eval(m, gtau, 1e-13) for m in FZ_TUPLE])
        )
    ratio = vals["g2"] / vals["g0"]
    out.append(_measured("fz-phi",
                         "relation between the two degeneration twists",
                         t0, ratio=[ratio.real, ratio.imag],
                         note="the two twists agree only up to a level-8 "
                              "substitution; the ratio at the probe point is recorded"))
    return out


def suite_lfactors(cfg: RunConfig):
    from .lfactors import euler_factor, h2_lpoly, trace_h2

    out = []
    for p in cfg.prime_list:
        t0 = time.time()
        h = h2_lpoly(p)
        ok = h.degree() == 21 and h.poly[1] == -trace_h2(p)
        gf = euler_factor("g", p)
        ok = ok and abs(gf.poly[2]) == p * p
        ok = ok and gf.twist(1).poly == gf.poly.substitute_scaled(p)
        out.append(_report("lfactors",
                           "degree-21 local factor with linear coefficient "
                           "-(8 + 7chi_-1 + 2chi_2 + 2chi_-2)p - a_p",
                           ok, None, t0, p=p, trace=trace_h2(p)))
    return out


def suite_lefschetz(cfg: RunConfig):
    from .lfactors import lefschetz_check

    out = []
    for p in cfg.prime_list:
        t0 = time.time()
        r = lefschetz_check(p)
        out.append(_report("lefschetz",
                           "alternating cohomology trace equals the point count "
                           "of the resolved threefold",
                           r == 0, float(abs(r)), t0, p=p))
    return out


def suite_spin(cfg: RunConfig):
    from .arith import odd_primes
    from .lfactors import spin_identity_check

    out = []
    table = []
    worst_ok = True
    t0 = time.time()
    for p in odd_primes(50):
        residual, info = spin_identity_check(p)
        worst_ok = worst_ok and residual.is_zero() and info["delta_matches_nebentypus"]
        table.append({k: info[k] for k in ("p", "lambda1", "lambda2", "delta_inv",
                                           "chi_minus1")})
    out.append(_report("spin",
                       "the degree-4 eigenvalue quartic matches the product of "
                       "the newform factor and its twist, odd p <= 50",
                       worst_ok, None, t0, solved=table))
    return out


def suite_ez(cfg: RunConfig):
    from .soudry import (
        EZ_SAMPLE_POINTS,
        ez_eval,
        ez_phi_match,
        ez_two_form_check,
        resolve_ez_convention,
        two_form_pullback,
    )
    from .theta import gammaZ_generators, random_gamma48_elements

    out = []
    t0 = time.time()
    conv = resolve_ez_convention()
    out.append(_measured("ez", "resolved lattice-sum conventions", t0,
                         pairing=conv.pairing, scale=conv.scale,
                         z2_sign=conv.z2_sign, resolved_by=conv.resolved_by))
    tol = 1e-6
    pts = EZ_SAMPLE_POINTS
    t0 = time.time()
    worst48 = max(
        ez_two_form_check(g, tau, 1e-8)
        for g in random_gamma48_elements(10, seed=3, small_c=True)
        for tau in pts
    )
    out.append(_report("ez", "2-form invariance under the level-(4,8) group",
                       worst48 < tol, worst48, t0, points=len(pts), samples=10))
    names = ("e1e4", "e1e6", "e1e9^2", "e8^2e3", "e2e10^2")
    for name, g in zip(names, gammaZ_generators()):
        t0 = time.time()
        r = max(ez_two_form_check(g, tau, 1e-8) for tau in pts)
        det = {}
        if r >= tol:
            tau = pts[1]
            pulled = two_form_pullback(g, tau, 1e-9)
            h = ez_eval(tau, 1e-9)
            hv = np.array([h.h0, h.h1, h.h2])
            det["residual_against_minus"] = float(np.abs(pulled + hv).max())
        out.append(_report("ez", f"2-form invariance under stabilizer generator {name}",
                           r < tol, r, t0, **det))
    t0 = time.time()
    m = ez_phi_match(max(260, cfg.series_order))  # at least 20 shared terms
    out.append(_report("ez",
                       "the first-component degeneration matches the six-theta "
                       "image up to one scalar",
                       m["residual"] < 1e-8 and m["support_mod8"] == [2]
                       and m["n_exponents"] >= 20,
                       m["residual"], t0,
                       scalar=str(m["scalar"]), terms=m["n_exponents"]))
    return out


SUITE_RUNNERS = {
    "counts": suite_counts,
    "fermat": suite_fermat,
    "g-triple": suite_g_triple,
    "hecke": suite_hecke,
    "theta-table": suite_theta_table,
    "orbits": suite_orbits,
    "fz-phi": suite_fz_phi,
    "lfactors": suite_lfactors,
    "lefschetz": suite_lefschetz,
    "spin": suite_spin,
    "ez": suite_ez,
}


def run(cfg: RunConfig) -> tuple[list[VerificationReport], int]:
    cfg.validate()
    selected = list(SUITES) if "all" in cfg.selected_suites else cfg.selected_suites
    reports = []
    for name in selected:
        reports.extend(SUITE_RUNNERS[name](cfg))
    failed = any(r.status == "fail" for r in reports)
    return reports, (1 if failed else 0)


# ---------------------------------------------------------------------------
# argument handling

def _env(name, default):
    return os.environ.get(f"SIEGELZ_{name.upper()}", default)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="verify",
        description="Run exact and numeric cross-checks for the Siegel "
                    "threefold package; one subcommand per suite.",
    )
    parser.add_argument("suites", nargs="*", default=None,
                        help=f"suites to run: {', '.join(SUITES)}, or 'all'")
    parser.add_argument("--suite", action="append", dest="suite_flags",
                        help="additional suite to run (repeatable)")
    parser.add_argument("--primes", default=_env("primes", "3,5,7,11,13"),
                        help="comma-separated odd primes (default 3,5,7,11,13)")
    parser.add_argument("--order", type=int,
                        default=int(_env("order", "200")),
                        help="series truncation order (default 200)")
    parser.add_argument("--tol", type=float,
                        default=float(_env("tol", "1e-8")),
                        help="numeric tolerance (default 1e-8)")
    parser.add_argument("--radius2", type=float,
                        default=float(_env("radius2", "12")),
                        help="minimum squared lattice radius (default 12)")
    parser.add_argument("--out", default=_env("out", None),
                        help="path for the JSON report")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    suites = list(args.suites or [])
    if args.suite_flags:
        suites.extend(args.suite_flags)
    env_suite = os.environ.get("SIEGELZ_SUITE")
    if not suites and env_suite:
        suites = env_suite.split(",")
    if not suites:
        suites = ["all"]
    try:
        cfg = RunConfig(
            prime_list=[int(p) for p in str(args.primes).split(",") if p],
            series_order=args.order,
            numeric_tol=args.tol,
            lattice_radius2=args.radius2,
            output_path=args.out,
            selected_suites=suites,
        )
        cfg.validate()
    except ValueError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return 2
    reports, code = run(cfg)
    payload = {
        "schema": SCHEMA,
        "config": {
            "primes": cfg.prime_list,
            "order": cfg.series_order,
            "tol": cfg.numeric_tol,
            "radius2": cfg.lattice_radius2,
            "suites": suites,
        },
        "reports": [asdict(r) for r in reports],
    }
    text = json.dumps(payload, indent=2, default=_json_default)
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text + "\n")
    for r in reports:
        mark = {"pass": "ok  ", "fail": "FAIL", "measured": "meas"}[r.status]
        resid = "" if r.residual is None else f"  residual={r.residual:.3g}"
        print(f"[{mark}] {r.suite}: {r.claim}{resid}")
    n_fail = sum(1 for r in reports if r.status == "fail")
    print(f"{len(reports)} checks, {n_fail} failed")
    if cfg.output_path:
        print(f"report written to {cfg.output_path}")
    return code


def _json_default(obj):
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, np.ndarray):
        return obj.tolist()
    return str(obj)


if __name__ == "__main__":
    sys.exit(main())
