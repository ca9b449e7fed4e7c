"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
report.  Criterion 10a is known to fail and is kept failing on purpose: it
demands (1,1)-ratio growth ratio(n) >= n on supports n = 2, 3, 4, but on
the c0 unit ball sum|a_ij| <= n * sup holds with equality unattainable for
n >= 3, and exhaustive search shows the true optimum is exactly 2 at each
of these sizes.  The honest measurement is reported instead of a weakened
assertion.
"""

import math
import time

import numpy as np

from mixnorms import (
    ExponentTuple,
    bh_exponents,
    bh_upper_bound,
    bilinear_cotype_certificate,
    certify,
    cotype_bounds,
    cotype_ratio,
    equivalence_demo,
    equivalence_gap,
    extremal_instance,
    growth_witness,
    interpolate,
    littlewood2,
    minkowski_compare,
    mixed_norm,
    optimize_ratio,
    rademacher_average,
    random_sign_form,
    solve_p0,
    sqrt2_baseline,
    sup_norm,
    triple221,
    MultilinearForm,
    admissible,
)

SQRT2 = math.sqrt(2.0)


def report(criterion: str, ok: bool, detail: str) -> None:
    line = f"[criterion {criterion}] {'PASS' if ok else 'FAIL'}: {detail}"
    print(line)
    assert ok, line


def test_criterion_01_catalog_sup_norms():
    lw = sup_norm(littlewood2())
    tr = sup_norm(triple221())
    ok = (
        lw.value == 2.0 and lw.exact and lw.evaluations == 16
        and tr.value == 4.0 and tr.exact and tr.evaluations == 1024
    )
    report(
        "01", ok,
        f"littlewood2 sup={lw.value} ({lw.evaluations} evals, exact={lw.exact}); "
        f"triple221 sup={tr.value} ({tr.evaluations} evals, exact={tr.exact}); tolerance 0",
    )


def test_criterion_02_trilinear_certificate():
    cert = certify(triple221(), ExponentTuple.parse("2,2,1"))
    err = abs(cert.ratio - SQRT2)
    report("02", err <= 1e-12, f"certify(triple221, (2,2,1)).ratio = {cert.ratio!r}, |err| = {err:.2e}")


def test_criterion_03_bilinear_sharpness():
    one_two = certify(littlewood2(), ExponentTuple.parse("1,2")).ratio
    bh = certify(littlewood2(), ExponentTuple.parse("4/3,4/3")).ratio
    ok = (
        abs(one_two - SQRT2) <= 1e-12
        and abs(one_two - sqrt2_baseline(2)) <= 1e-12
        and abs(bh - SQRT2) <= 1e-12
        and abs(bh - bh_upper_bound(2)) <= 1e-12
    )
    report("03", ok, f"(1,2) ratio = {one_two!r}; (4/3,4/3) ratio = {bh!r}; both attain sqrt2")


def test_criterion_04_interpolation_vs_recursion():
    tuples = [ExponentTuple.parse(t) for t in ("1,2,2", "2,1,2", "2,2,1")]
    res = interpolate(tuples, [1 / 3] * 3, [2.0, 2.0, SQRT2])
    exps_ok = all(abs(q - 1.5) <= 1e-12 for q in res.exponents.exponents)
    const_ok = abs(res.constant_bound - 2.0 ** (5 / 6)) <= 1e-12
    rec = bh_upper_bound(3)
    rec_ok = abs(rec - 2.0 ** 0.75) <= 1e-12
    sep_ok = 2.0 ** 0.75 < 2.0 ** (5 / 6)
    report(
        "04", exps_ok and const_ok and rec_ok and sep_ok,
        f"interpolated exponents {res.exponents}, constant {res.constant_bound!r}; "
        f"recursion bound {rec!r}; 2^(3/4) < 2^(5/6): {sep_ok}",
    )


def test_criterion_05_branch_point():
    p0 = solve_p0(1e-8)
    in_window = 1.84741 <= p0 <= 1.84743
    tight = solve_p0(1e-12)
    flat = 2.0 ** (0.5 - 1.0 / tight)
    gamma = SQRT2 * (math.gamma((tight + 1) / 2) / math.sqrt(math.pi)) ** (1.0 / tight)
    agree = abs(flat - gamma)
    report(
        "05", in_window and agree <= 1e-9,
        f"solve_p0(1e-8) = {p0!r} in [1.84741, 1.84743]; |flat - gamma| = {agree:.2e} <= 1e-9",
    )


def test_criterion_06_asymptotic_gap():
    g10, g100, g1000 = (equivalence_gap(m) for m in (10, 100, 1000))
    ok = (
        g10 > g100 > g1000 > 1.0
        and all(1.0 < g <= 1.25 for g in (g10, g100, g1000))
        and g1000 <= 1.001
    )
    report("06", ok, f"gap(10) = {g10:.6f} > gap(100) = {g100:.6f} > gap(1000) = {g1000:.6f} > 1")


def test_criterion_07_lifting_identity():
    rep = equivalence_demo(littlewood2(), 3)
    failures = 0 if rep.holds else 1
    for seed in range(100):
        degree = 2
        dims = tuple(2 + (seed + axis) % 2 for axis in range(degree))  # dims <= (3, 3)
        form = random_sign_form(dims, seed)
        r = equivalence_demo(form, 3)
        if not (r.holds and r.rel_mixed <= 1e-12 and r.rel_sup <= 1e-12):
            failures += 1
    report(
        "07", failures == 0,
        f"littlewood2 lifting identity holds (rel err {rep.rel_mixed:.2e}); "
        f"100 random sign forms, {failures} failures at 1e-12",
    )


def test_criterion_08_cotype_golden_values():
    problems = []
    for r in (1.0, 1.5, 1.84742):
        expected = 2.0 ** (1.0 / r - 0.5)
        inst = extremal_instance(r)
        if abs(inst.ratio - expected) > 1e-12:
            problems.append(f"instance r={r}")
        cert = bilinear_cotype_certificate(littlewood2(), r)
        if abs(cert - expected) > 1e-12:
            problems.append(f"certificate r={r}")
    b1, b2 = cotype_bounds(1.0), cotype_bounds(2.0)
    if abs(b1.lower - SQRT2) > 1e-12 or abs(b1.upper - SQRT2) > 1e-12:
        problems.append("bounds r=1")
    if abs(b2.lower - 1.0) > 1e-12 or abs(b2.upper - 1.0) > 1e-12:
        problems.append("bounds r=2")
    report(
        "08", not problems,
        "extremal ratios and bilinear certificates match 2^(1/r - 1/2) at "
        f"r in (1, 1.5, 1.84742); bounds(1) = (sqrt2, sqrt2), bounds(2) = (1, 1); "
        f"problems: {problems or 'none'}",
    )


def test_criterion_09_property_suite():
    rng = np.random.default_rng(909)
    failures = []

    # exponent monotonicity
    for trial in range(40):
        form = random_sign_form((3, 3), trial)
        qs = rng.uniform(1.0, 3.0, size=2)
        j = int(rng.integers(0, 2))
        bumped = qs.copy()
        bumped[j] += float(rng.uniform(0.0, 1.5))
        if mixed_norm(form, ExponentTuple.unblocked(bumped)) > mixed_norm(
            form, ExponentTuple.unblocked(qs)
        ) + 1e-12:
            failures.append(f"monotonicity trial {trial}")

    # Minkowski ordering
    for trial in range(40):
        form = MultilinearForm(rng.normal(size=(3, 3)))
        p = float(rng.uniform(1.0, 2.5))
        q = float(rng.uniform(p, 3.5))
        v_pq, v_qp = minkowski_compare(form, p, q)
        if v_qp > v_pq + 1e-12:
            failures.append(f"minkowski trial {trial}")

    # homogeneity of the mixed norm
    base = random_sign_form((2, 3), 1)
    exps = ExponentTuple.parse("1,2")
    norm0 = mixed_norm(base, exps)
    for c in (-4.0, 0.5, 12.0):
        scaled = MultilinearForm(c * base.coeffs)
        if abs(mixed_norm(scaled, exps) - abs(c) * norm0) > 1e-9 * abs(c) * norm0:
            failures.append(f"homogeneity c={c}")

    # s-monotonicity of the Rademacher average
    for trial in range(20):
        vectors = rng.normal(size=(int(rng.integers(2, 7)), int(rng.integers(2, 5))))
        r = float(rng.uniform(1.0, 2.0))
        values = [rademacher_average(vectors, r, s) for s in (0.5, 1.0, r, 2.0, 4.0)]
        if any(b < a - 1e-12 for a, b in zip(values, values[1:])):
            failures.append(f"s-monotonicity trial {trial}")

    # no violation of the sharp bound below the branch point
    p0 = solve_p0(1e-10)
    for trial in range(200):
        vectors = rng.normal(size=(int(rng.integers(1, 11)), int(rng.integers(1, 7))))
        r = float(rng.uniform(1.0, p0))
        if cotype_ratio(vectors, r, r) > cotype_bounds(r).upper + 1e-9:
            failures.append(f"sharp bound trial {trial}")

    # admissibility boundary classification
    for m in range(1, 51):
        if not admissible(bh_exponents(m)):
            failures.append(f"bh admissible m={m}")

    report("09", not failures, f"property suite failures: {failures or 'none'}")


def test_criterion_10a_inadmissible_growth():
    # Faithful to the stated target: strictly increasing best ratios with
    # ratio(n) >= n - 1e-9 for the (1,1) tuple on n in (2, 3, 4).  That
    # target is provably unattainable on the c0 ball: sum|a| <= n * sup
    # (Cauchy-Schwarz against the root-mean-square of the vertex values),
    # with equality needing |form| constant over all sign vertices and all
    # |coefficients| equal, which parity rules out for n >= 3; exhaustive
    # search over {-1,0,1} tensors gives best ratio exactly 2 at n = 2, 3, 4
    # (and an LP over all sign patterns shows 2 is optimal over the reals
    # at n = 3).  This test documents the honest measurement.
    rows = growth_witness(ExponentTuple.parse("1,1"), [2, 3, 4], trials=8, seed=0)
    ratios = [ratio for _, ratio in rows]
    increasing = all(b > a for a, b in zip(ratios, ratios[1:]))
    reaches_n = all(ratio >= n - 1e-9 for n, ratio in rows)
    report(
        "10a", increasing and reaches_n,
        f"(1,1) best ratios {[(n, round(r, 6)) for n, r in rows]}; "
        f"strictly increasing: {increasing}; ratio(n) >= n: {reaches_n} "
        "(target unattainable: the true optimum is 2 at each size)",
    )


def test_criterion_10b_admissible_stays_bounded():
    rows = growth_witness(ExponentTuple.parse("1,2"), [2, 3, 4], trials=8, seed=0)
    ok = all(ratio <= SQRT2 + 1e-6 for _, ratio in rows)
    report(
        "10b", ok,
        f"(1,2) best ratios {[(n, round(r, 6)) for n, r in rows]} all <= sqrt2 + 1e-6",
    )


def test_criterion_11_optimizer_recovery():
    start = time.perf_counter()
    hits = 0
    for seed in range(8):
        cert = optimize_ratio((2, 2), ExponentTuple.parse("1,2"), budget=10_000, seed=seed)
        if cert.ratio >= SQRT2 - 1e-9:
            hits += 1
    elapsed = time.perf_counter() - start
    report(
        "11", hits >= 7 and elapsed <= 10.0,
        f"{hits}/8 seeds reached sqrt2 - 1e-9 in {elapsed:.2f}s (limit 10s)",
    )
