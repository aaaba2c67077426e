"""Acceptance suite.

Each test checks one acceptance criterion at its stated tolerance and prints
a single ``criterion N ...: PASS`` or ``FAIL`` line, visible even when pytest
captures output.  Run alone with::

    pytest tests/test_acceptance.py -v

Sampling choices (see the decisions ledger): p ~ U[-10, 10]; the gap
``|q - p**2/4|`` is drawn from U[0.01, 10] so that distinct roots stay more
than one grid cell apart and the nonexistence bound is meaningful.
"""

from __future__ import annotations

import math
import subprocess
import sys
from functools import lru_cache

import numpy as np
import pytest

from vecquad.algebra import CIRCULAR, HYPERBOLIC, QuadraticCoeffs, Vec2, phs
from vecquad.functionals import CATALOG, EUCLIDEAN, parse_functional
from vecquad.oracle import GridSpec, check_laws, grid_search_full, law_algebras, match_roots
from vecquad.solvers import (
    ACCOMPANIED,
    circular_polar,
    solve_circular,
    solve_hyperbolic,
    solve_phs,
)

N_CLOSED = 1000
N_EUCLID = 500
N_PHS = 200
PHS_FUNCTIONALS = ["lp:0.5", "lp:1", "lp:1.5", "lp:3", "max", "wlp:2:2:1"]
MIN_GAP, MAX_GAP = 0.01, 10.0


def verdict(capsys, number: int, title: str, ok: bool, detail: str) -> None:
    with capsys.disabled():
        print(f"\ncriterion {number} {title}: {'PASS' if ok else 'FAIL'} ({detail})")


def hausdorff(a: list[Vec2], b: list[Vec2]) -> float:
    if not a and not b:
        return 0.0
    if not a or not b:
        return math.inf
    return max(
        max(min(x.dist(y) for y in b) for x in a),
        max(min(y.dist(x) for x in a) for y in b),
    )


@lru_cache(maxsize=None)
def accompanied_instances(seed: int = 101) -> tuple[QuadraticCoeffs, ...]:
    """q - p**2/4 > 0; a few p = 0 cases first."""
    rng = np.random.default_rng(seed)
    out = [QuadraticCoeffs(0.0, q) for q in (0.25, 1.0, 4.0, 9.0)]
    while len(out) < N_CLOSED:
        p = float(rng.uniform(-10, 10))
        out.append(QuadraticCoeffs(p, p * p / 4 + float(rng.uniform(MIN_GAP, MAX_GAP))))
    return tuple(out)


@lru_cache(maxsize=None)
def real_instances(seed: int = 202) -> tuple[QuadraticCoeffs, ...]:
    """p**2/4 - q >= 0; a few exact double roots first."""
    rng = np.random.default_rng(seed)
    out = [QuadraticCoeffs(p, p * p / 4) for p in (-6.0, -1.0, 0.5, 3.0)]
    while len(out) < N_CLOSED:
        p = float(rng.uniform(-10, 10))
        out.append(QuadraticCoeffs(p, p * p / 4 - float(rng.uniform(MIN_GAP, MAX_GAP))))
    return tuple(out)


@lru_cache(maxsize=None)
def euclidean_instances(seed: int = 303) -> tuple[QuadraticCoeffs, ...]:
    rng = np.random.default_rng(seed)
    return tuple(
        QuadraticCoeffs(float(rng.uniform(-10, 10)), float(rng.uniform(0.05, 30)))
        for _ in range(N_EUCLID)
    )


@lru_cache(maxsize=None)
def phs_instances(seed: int = 404) -> tuple[tuple[str, QuadraticCoeffs], ...]:
    rng = np.random.default_rng(seed)
    return tuple(
        (name, QuadraticCoeffs(float(rng.uniform(-5, 5)), float(rng.uniform(0.1, 10))))
        for name in PHS_FUNCTIONALS
        for _ in range(N_PHS)
    )


def test_criterion_1_circular_closed_form(capsys):
    failures = []
    worst = 0.0
    for c in accompanied_instances():
        tol = 1e-12 * (1 + abs(c.p) + abs(c.q))
        y = math.sqrt(c.q - c.p * c.p / 4)
        expected = [Vec2(-c.p / 2, y), Vec2(-c.p / 2, -y)]
        rep = solve_circular(c)
        dev = hausdorff(rep.points(), expected)
        res = max(r.residual for r in rep.roots)
        worst = max(worst, res / tol)
        if len(rep.roots) != 2 or dev > tol or res > tol:
            failures.append(c)
    for c in real_instances():
        tol = 1e-12 * (1 + abs(c.p) + abs(c.q))
        s = math.sqrt(c.p * c.p / 4 - c.q)
        expected = [Vec2(-c.p / 2 - s, 0.0), Vec2(-c.p / 2 + s, 0.0)]
        if s == 0.0:
            expected = expected[:1]
        rep = solve_circular(c)
        res = max(r.residual for r in rep.roots)
        worst = max(worst, res / tol)
        if len(rep.roots) != len(expected) or hausdorff(rep.points(), expected) > tol or res > tol:
            failures.append(c)
    ok = not failures
    verdict(capsys, 1, "circular closed form", ok,
            f"{2 * N_CLOSED} instances, {len(failures)} failures, worst residual/tol {worst:.3g}")
    assert ok, failures[:5]


def test_criterion_2_polar_equivalence(capsys):
    failures = []
    checked = 0
    for c in accompanied_instances():
        if not (c.q > c.p * c.p / 4 > 0 or c.p == 0 < c.q):
            continue
        checked += 1
        roots = solve_circular(c).points()
        sols = circular_polar(c)
        r_ok = all(abs(s.r - math.sqrt(c.q)) <= 1e-12 for s in sols)
        map_ok = hausdorff([s.to_vec() for s in sols], roots) <= 1e-12
        if not (r_ok and map_ok and len(sols) == 2):
            failures.append(c)
    ok = not failures and checked == N_CLOSED
    verdict(capsys, 2, "polar equivalence", ok, f"{checked} instances, {len(failures)} failures")
    assert ok, failures[:5]


def test_criterion_3_euclidean_reduction(capsys):
    worst = 0.0
    failures = []
    for c in euclidean_instances():
        d = hausdorff(solve_phs(EUCLIDEAN, c).points(), solve_circular(c).points())
        worst = max(worst, d)
        if d > 1e-10:
            failures.append(c)
    ok = not failures
    verdict(capsys, 3, "euclidean reduction", ok,
            f"{N_EUCLID} instances, worst Hausdorff distance {worst:.3g}")
    assert ok, failures[:5]


def test_criterion_4_generalized_soundness(capsys):
    failures = []
    worst_res = worst_locus = 0.0
    n_roots = 0
    for name, c in phs_instances():
        for root in solve_phs(parse_functional(name), c).roots:
            if root.kind != ACCOMPANIED:
                continue
            n_roots += 1
            worst_res = max(worst_res, root.residual)
            bad = root.residual > 1e-8
            if c.p != 0:
                h = c.q / c.p
                x, y = root.z
                locus = abs((x + h) ** 2 + y * y - h * h) / (h * h)
                worst_locus = max(worst_locus, locus)
                bad = bad or locus > 1e-8
            if bad:
                failures.append((name, c, root))
    ok = not failures
    verdict(capsys, 4, "generalized solver soundness", ok,
            f"{len(phs_instances())} instances, {n_roots} accompanied roots, "
            f"worst residual {worst_res:.3g}, worst locus {worst_locus:.3g}")
    assert ok, failures[:5]


def oracle_cases():
    for c in accompanied_instances() + real_instances():
        yield CIRCULAR, c, solve_circular(c).points()
    for c in euclidean_instances():
        yield phs(EUCLIDEAN), c, solve_phs(EUCLIDEAN, c).points()
    for name, c in phs_instances():
        f = parse_functional(name)
        yield phs(f), c, solve_phs(f, c).points()


def test_criterion_5_oracle_agreement(capsys):
    failures = []
    n = outside = 0
    for alg, c, roots in oracle_cases():
        n += 1
        spec = GridSpec.default_for(c)
        agreement = match_roots(roots, grid_search_full(alg, c, spec).findings, spec)
        outside += len(agreement.out_of_window)
        if not agreement.ok:
            failures.append((str(alg), c, agreement))
    ok = not failures
    verdict(capsys, 5, "oracle agreement", ok,
            f"{n} instances, {len(failures)} disagreements, {outside} roots inside r_min")
    assert ok, failures[:5]


def test_criterion_6_hyperbolic_theorem(capsys):
    rng = np.random.default_rng(606)
    failures = []
    for k in range(N_CLOSED):
        p = float(rng.uniform(-10, 10))
        gap = 0.0 if k < 4 else float(rng.uniform(0, MAX_GAP))
        c = QuadraticCoeffs(p, p * p / 4 - gap)
        tol = 1e-12 * (1 + abs(c.p) + abs(c.q))
        s = math.sqrt(c.p * c.p / 4 - c.q)
        expected = [Vec2(-p / 2 - s, 0), Vec2(-p / 2 + s, 0), Vec2(-p / 2, s), Vec2(-p / 2, -s)]
        rep = solve_hyperbolic(c)
        got = rep.points()
        # the four coincide when the gap is zero and are merged to one root
        if hausdorff(got, expected) > tol or any(r.residual > tol for r in rep.roots):
            failures.append(c)

    min_seen = math.inf
    for _ in range(N_CLOSED):
        p = float(rng.uniform(-10, 10))
        c = QuadraticCoeffs(p, p * p / 4 + float(rng.uniform(MIN_GAP, MAX_GAP)))
        rep = solve_hyperbolic(c)
        m = grid_search_full(HYPERBOLIC, c).min_residual
        min_seen = min(min_seen, m)
        if rep.roots or not rep.no_solution_certified or not m > 1e-3:
            failures.append(c)
    ok = not failures
    verdict(capsys, 6, "hyperbolic theorem", ok,
            f"{2 * N_CLOSED} instances, {len(failures)} failures, "
            f"smallest oracle residual on nonexistence side {min_seen:.6g}")
    assert ok, failures[:5]


def test_criterion_7_algebraic_laws(capsys):
    required = {"commutativity", "associativity", "scaling_nonneg", "zero_product",
                "circle_closure", "unit_circle_closure"}
    failures = []
    worst = 0.0
    for alg in law_algebras():
        report = check_laws(alg, trials=1000, seed=7, tol=1e-12)
        for name, stat in report.laws.items():
            if name in required:
                worst = max(worst, stat.worst if name != "zero_product" else 0.0)
                if not stat.passed:
                    failures.append((str(alg), name, stat))
    ok = not failures
    verdict(capsys, 7, "algebraic laws", ok,
            f"{len(law_algebras())} algebras x 1000 trials, worst deviation {worst:.3g}")
    assert ok, failures


def test_criterion_8_worked_hyperbolic_instance(capsys):
    rep = solve_hyperbolic(QuadraticCoeffs(-4, 3))
    pts = {(r.z.x, r.z.y) for r in rep.roots}
    flags = {(r.z.x, r.z.y): r.hyp_domain_ok for r in rep.roots}
    ok = (
        pts == {(1.0, 0.0), (3.0, 0.0), (2.0, 1.0), (2.0, -1.0)}
        and len(rep.roots) == 4
        and flags[(2.0, 1.0)] is True
        and flags[(2.0, -1.0)] is True
    )
    verdict(capsys, 8, "worked hyperbolic instance", ok, f"roots {sorted(pts)}")
    assert ok


CLI_RUNS = [
    ["solve", "-a", "circular", "-p", "2", "-q", "5"],
    ["solve", "-a", "phs:lp:0.5", "-p", "-3", "-q", "1"],
    ["verify", "-a", "phs:lp:3", "-p", "1", "-q", "1"],
    ["verify", "-a", "hyperbolic", "-p", "0", "-q", "1"],
    ["properties", "-a", "hyperbolic", "--trials", "200", "--seed", "3"],
    ["curve", "-a", "phs:max", "--radius", "2"],
]


def test_criterion_9_cli_determinism(capsys):
    differing = []
    for argv in CLI_RUNS:
        cmd = [sys.executable, "-m", "vecquad", *argv]
        outs = [subprocess.run(cmd, capture_output=True).stdout for _ in range(2)]
        if outs[0] != outs[1] or not outs[0]:
            differing.append(" ".join(argv))
    ok = not differing
    verdict(capsys, 9, "CLI determinism", ok, f"{len(CLI_RUNS)} commands run twice, {len(differing)} differ")
    assert ok, differing
