"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Tolerances are pinned here and nowhere else; the corpora are fully seeded so
every run checks byte-identical inputs.
"""

import math
import time

import numpy as np

import spectramark as sm
from spectramark.bounds import full_bound_report, si_entries
from spectramark.centrality import walk_expansion_matrix
from spectramark.polynomials import IntPolynomial


def _report(num: int, ok: bool, detail: str) -> None:
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
    assert ok, detail


def test_criterion_1_fixture_polynomial_identity():
    t0 = time.perf_counter()
    ref = sm.benchmark_polynomials()
    total = IntPolynomial((0,))
    for j in range(1, 11):
        total = total + ref[j]
    target = -ref[0].derivative()
    ok = total == target and target.coeffs[0] == -4 and target.coeffs[1] == -54
    elapsed = time.perf_counter() - t0
    _report(1, ok and elapsed < 1.0,
            f"exact coefficient identity, {elapsed * 1e3:.1f} ms")


def test_criterion_2_route_oracles(corpus50):
    t0 = time.perf_counter()
    worst_det = worst_res = worst_walk = 0.0
    for g in corpus50:
        dec = sm.decompose(g)
        y = dec.X**2
        for k in range(1, g.n + 1):
            for j in range(1, g.n + 1):
                v = sm.squared_component_det(g, dec, j, k)
                worst_det = max(worst_det, abs(v - y[j - 1, k - 1]))
                try:
                    r = sm.resolvent_squared(g, dec, j, k)
                except ValueError:
                    r = 0.0
                worst_res = max(worst_res, abs(r - y[j - 1, k - 1]))
        worst_walk = max(worst_walk, float(np.abs(walk_expansion_matrix(g, dec) - y).max()))
    elapsed = time.perf_counter() - t0
    ok = worst_det <= 1e-7 and worst_res <= 1e-6 and worst_walk <= 1e-5 and elapsed < 30
    _report(2, ok,
            f"50 graphs: det {worst_det:.2e} (<=1e-7), resolvent {worst_res:.2e} "
            f"(<=1e-6), walk {worst_walk:.2e} (<=1e-5), {elapsed:.1f}s (<30s)")


def test_criterion_3_squared_eigenvalue_equation(corpus50):
    worst_recon = worst_sum = worst_unity = 0.0
    range_ok = True
    for g in corpus50:
        dec = sm.decompose(g)
        ri = sm.r_decomposition(g, dec)
        d = g.degrees.astype(float)
        lam = dec.eigenvalues
        pred = (1.0 - ri.r) / (lam[None, :] ** 2 / d[:, None] + 1.0)
        worst_recon = max(worst_recon, float(np.abs(pred - dec.X**2).max()))
        range_ok = range_ok and bool(np.all(ri.r >= 0 - 1e-12) and np.all(ri.r <= 1 + 1e-9))
        worst_sum = max(worst_sum, float(np.abs((1 - ri.r).sum(axis=1) - 2).max()))
        worst_unity = max(worst_unity, float(np.abs(pred.sum(axis=1) - 1).max()),
                          float(np.abs(pred.sum(axis=0) - 1).max()))
    ok = worst_recon <= 1e-9 and range_ok and worst_sum <= 1e-7 and worst_unity <= 1e-8
    _report(3, ok,
            f"reconstruction {worst_recon:.2e} (<=1e-9), sum-to-two {worst_sum:.2e} "
            f"(<=1e-7), unity {worst_unity:.2e} (<=1e-8), range ok={range_ok}")


def test_criterion_4_bound_suite(corpus200):
    worst = math.inf
    fails = 0
    for g in corpus200:
        dec = sm.decompose(g)
        prof = sm.weight_profile(g, dec)
        br = full_bound_report(g, dec, prof, ms=(0, 1, 2, 3))
        worst = min(worst, br.worst_slack)
        fails += br.fail_count
    star_ok = all(
        abs(sm.decompose(sm.star(n)).eigenvalues[0] - math.sqrt(n - 1)) <= 1e-9
        for n in (5, 17)
    )
    ok = fails == 0 and star_ok
    _report(4, ok,
            f"200 graphs, 0 expected failures (got {fails}), worst slack {worst:.2e}, "
            f"star spectral radius tight: {star_ok}")


def test_criterion_5_minimum_eigenvalue_theorem(corpus200):
    strict_ok = True
    worst_recon = 0.0
    for g in corpus200:
        dec = sm.decompose(g)
        prof, _ = si_entries(g, dec)
        worst_recon = max(worst_recon, float(prof.reconstruction_residual.max()))
        if prof.connected:
            strict_ok = strict_ok and prof.min_lambda_sq < float(g.degrees.min())
    two = sm.parse_graph("1 2\n3 4\n")
    ptwo = sm.si_profile(two, sm.decompose(two))
    boundary_ok = (
        abs(ptwo.min_lambda_sq - 1.0) <= 1e-12
        and float(two.degrees.min()) == 1.0
        and not ptwo.connected
    )
    ok = strict_ok and worst_recon <= 1e-7 and boundary_ok
    _report(5, ok,
            f"strict bound on connected corpus: {strict_ok}, reconstruction "
            f"{worst_recon:.2e} (<=1e-7), disjoint-edges boundary flagged: {boundary_ok}")


def test_criterion_6_weight_suite(corpus200):
    worst_norm = worst_pair = worst_walks = 0.0
    for g in corpus200[:80]:
        dec = sm.decompose(g)
        prof = sm.weight_profile(g, dec, 6)
        lam = dec.eigenvalues
        d = g.degrees.astype(float)
        worst_norm = max(worst_norm,
                         abs(float(prof.w @ prof.w) - g.n),
                         abs(float(prof.phi @ prof.phi) - g.n))
        worst_pair = max(worst_pair, abs(float(prof.w @ lam) - float(prof.phi @ d)))
        a = g.adj.astype(float)
        dm = np.ones(g.n)
        v = prof.phi.copy()
        for m in range(7):
            ref = float(prof.w @ lam**m)
            worst_pair = max(worst_pair, abs(ref - float(prof.phi @ dm)) / max(1.0, abs(ref)))
            worst_walks = max(
                worst_walks,
                abs(float(prof.phi @ v) - prof.W[m]) / max(1.0, prof.W[m]),
                abs(float(prof.w**2 @ lam**m) - prof.Nw[m]) / max(1.0, prof.Nw[m]),
            )
            dm = a @ dm
            v = a @ v
    reg_ok = True
    for g in (sm.complete(6), sm.cycle(8), sm.complete_bipartite(4, 4)):
        prof = sm.weight_profile(g, sm.decompose(g), 0)
        e1 = np.zeros(g.n)
        e1[0] = math.sqrt(g.n)
        reg_ok = reg_ok and bool(np.abs(prof.w - e1).max() <= 1e-8)
        reg_ok = reg_ok and abs(prof.s_X - math.sqrt(g.n)) <= 1e-8
    ok = worst_norm <= 1e-7 and worst_pair <= 1e-6 and worst_walks <= 1e-6 and reg_ok
    _report(6, ok,
            f"norms {worst_norm:.2e} (<=1e-7), pairings {worst_pair:.2e} (<=1e-6), "
            f"walk identities {worst_walks:.2e} (<=1e-6), regular graphs: {reg_ok}")


def test_criterion_7_spacing(corpus200):
    rng = np.random.default_rng(777)
    sandwich_ok = True
    for _ in range(1000):
        n = int(rng.integers(3, 15))
        a = rng.random(n) * rng.integers(0, 2, n)
        a[int(rng.integers(0, n - 1))] += 0.5
        b = np.sort(rng.normal(size=n) * 10)[::-1]
        try:
            f = sm.generic_spacing_fraction(a, b)
        except ArithmeticError:
            sandwich_ok = False
            break
        gaps = -np.diff(b)
        sandwich_ok = sandwich_ok and gaps.min() - 1e-9 <= f <= gaps.max() + 1e-9
    corpus_ok = True
    for g in corpus200[:80]:
        dec = sm.decompose(g)
        prof = sm.weight_profile(g, dec, 0)
        sp = sm.spacing_bounds(prof, g)
        corpus_ok = corpus_ok and sp.min_ok and sp.max_ok and (sp.degree_ok in (None, True))
    scale_ok = True
    for n in (16, 64, 256):
        g = sm.erdos_renyi(n, 0.3, seed=9000 + n)
        prof = sm.weight_profile(g, sm.decompose(g), 0)
        scale_ok = scale_ok and sm.spacing_bounds(prof, g).f_u <= 4 / math.sqrt(n)
    ok = sandwich_ok and corpus_ok and scale_ok
    _report(7, ok,
            f"1000 random sandwiches: {sandwich_ok}, corpus bounds: {corpus_ok}, "
            f"f_u <= 4/sqrt(N) at 16/64/256: {scale_ok}")


def test_criterion_8_complement_coupling():
    picked = []
    seed = 0
    while len(picked) < 20 and seed < 4000:
        g = sm.erdos_renyi(6 + seed % 9, 0.3, seed=31000 + seed)
        seed += 1
        dec = sm.decompose(g)
        dec_c = sm.decompose(sm.complement(g))
        if dec.all_simple and dec_c.all_simple:
            picked.append((g, dec, dec_c))
    worst_overlap = worst_sum = worst_theta = 0.0
    for g, dec, dec_c in picked:
        coup = sm.complement_coupling(g, dec, dec_c)
        live = coup.overlap_residual[~np.isnan(coup.overlap_residual)]
        if live.size:
            worst_overlap = max(worst_overlap, float(live.max()))
        sums = coup.sum_rule_k[~np.isnan(coup.sum_rule_k)]
        if sums.size:
            worst_sum = max(worst_sum, float(sums.max()))
        worst_theta = max(worst_theta, -coup.theta1_slack)
    ok = (
        len(picked) == 20
        and worst_overlap <= 1e-6
        and worst_sum <= 1e-6
        and worst_theta <= 1e-9
    )
    _report(8, ok,
            f"20 simple-spectrum pairs: overlap {worst_overlap:.2e} (<=1e-6), "
            f"sum rule {worst_sum:.2e} (<=1e-6), theta1 deficit {worst_theta:.2e} (<=1e-9)")


def test_criterion_9_hadamard():
    ok = True
    for k in range(5):
        h = sm.sylvester_hadamard(k)
        n = 2**k
        ok = ok and np.array_equal(h @ h.T, n * np.eye(n, dtype=np.int64))
        ok = ok and np.array_equal(h, h.T) and bool(np.all(h[:, 0] == 1))
    for k in (2, 3, 4):
        chk = sm.hadamard_diagonalizes_complete(k)
        n = 2**k
        want = np.full(n, float(n))
        want[0] = 0.0
        ok = ok and chk.passed
        ok = ok and bool(np.abs(np.sort(chk.laplacian_diag) - np.sort(want)).max() <= 1e-10 * n)
        ok = ok and chk.laplacian_offdiag <= 1e-10 * n
        ok = ok and chk.w_phi_gap <= 1e-10 * n
    _report(9, ok, "orders 1..16: exact orthogonality, symmetric, all-ones first "
                   "column; complete-graph Laplacian diagonalized, w = phi")


def test_criterion_10_redundancy(corpus50):
    p3 = sm.path(3)
    rep3 = sm.centrality_report(p3, sm.decompose(p3))
    p3_ok = list(rep3.redundancy) == [0, 1, 0]
    agree = True
    for g in corpus50[:25]:
        dec = sm.decompose(g)
        lam = dec.eigenvalues
        for k in range(g.n):
            for j in range(g.n):
                y = float(dec.X[j, k] ** 2)
                minor = np.delete(np.delete(g.adj, j, 0), j, 1).astype(float)
                dist = float(np.min(np.abs(np.linalg.eigvalsh(minor) - lam[k])))
                if 1e-10 < y < 1e-4 or 1e-9 < dist < 1e-5:
                    continue  # not decisive at the stated tolerance
                agree = agree and ((y <= 1e-7) == (dist <= 1e-7))
    ok = p3_ok and agree
    _report(10, ok, f"path redundancy (0,1,0): {p3_ok}, zero-component vs "
                    f"spectral-membership agreement: {agree}")
