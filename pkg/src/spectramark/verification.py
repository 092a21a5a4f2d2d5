"""Machine verification of every identity and bound the library implements.

Each check is one CheckResult row: a named residual (or slack) with its
tolerance, a pass flag, and a short anchor describing which identity it
exercises.  Checks whose hypotheses do not apply to the given graph are
skipped with a reason rather than failed.  The CLI `verify` command runs
this over files or seeded corpora.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import bounds as bounds_mod
from . import centrality as cent
from . import weights as weights_mod
from .graphs import Graph, complement, connected, delete_node, parse_graph, to_adjacency_text, to_edge_list_text
from .polynomials import IntPolynomial
from .spectral import (
    SpectralDecomposition,
    char_poly_derivative_at,
    char_poly_exact,
    decompose,
    det_shift,
    walk_counts,
    EXACT_POLY_LIMIT,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    tol: float
    passed: bool
    anchor: str
    skipped: str | None = None


@dataclass
class VerificationReport:
    graph_label: str
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, value: float, tol: float, anchor: str) -> None:
        self.checks.append(CheckResult(name, float(value), tol, bool(value <= tol), anchor))

    def add_flag(self, name: str, ok: bool, anchor: str) -> None:
        self.checks.append(CheckResult(name, 0.0 if ok else 1.0, 0.0, bool(ok), anchor))

    def skip(self, name: str, reason: str, anchor: str) -> None:
        self.checks.append(CheckResult(name, 0.0, 0.0, True, anchor, skipped=reason))

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks if not c.skipped)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.skipped and not c.passed]

    @property
    def skips(self) -> list[CheckResult]:
        return [c for c in self.checks if c.skipped]


def env_threads() -> int:
    try:
        return max(1, int(os.environ.get("SPECTRAMARK_THREADS", "1")))
    except ValueError:
        return 1


def verify_graph(g: Graph, label: str = "graph", m_max: int = 6, corrupt: bool = False) -> VerificationReport:
    """Run the full invariant suite on one graph."""
    rep = VerificationReport(graph_label=label)
    dec = decompose(g)
    _graph_checks(rep, g)
    _spectral_checks(rep, g, dec)
    _centrality_checks(rep, g, dec, corrupt=corrupt)
    _weight_checks(rep, g, dec, m_max)
    _bound_checks(rep, g, dec, m_max)
    return rep


def verify_corpus(graphs: list[Graph], m_max: int = 6, threads: int | None = None) -> list[VerificationReport]:
    """Verify many graphs, optionally with a thread pool (results stay in
    input order; each task is a pure function of its graph)."""
    threads = env_threads() if threads is None else max(1, threads)
    labels = [f"graph[{i}] n={g.n} L={g.num_links}" for i, g in enumerate(graphs)]
    if threads == 1 or len(graphs) <= 1:
        return [verify_graph(g, lab, m_max) for g, lab in zip(graphs, labels)]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futs = [pool.submit(verify_graph, g, lab, m_max) for g, lab in zip(graphs, labels)]
        return [f.result() for f in futs]


# ---------------------------------------------------------------------------


def _graph_checks(rep: VerificationReport, g: Graph) -> None:
    d = g.degrees
    rep.add_flag("degree-handshake", int(d.sum()) == 2 * g.num_links, "degree sum equals twice the links")
    gc = complement(g)
    rep.add_flag(
        "complement-degrees",
        bool(np.all(gc.degrees + d == g.n - 1)),
        "complement degree identity",
    )
    rt = parse_graph(to_adjacency_text(g), "adjacency_matrix")
    rep.add_flag("adjacency-round-trip", bool(np.array_equal(rt.adj, g.adj)), "parse/serialize round trip")
    if g.num_links > 0 and d.min() >= 1:
        rt2 = parse_graph(to_edge_list_text(g), "edge_list")
        rep.add_flag("edge-list-round-trip", bool(np.array_equal(rt2.adj, g.adj)), "parse/serialize round trip")
    else:
        rep.skip("edge-list-round-trip", "isolated-nodes-not-representable", "parse/serialize round trip")


def _spectral_checks(rep: VerificationReport, g: Graph, dec: SpectralDecomposition) -> None:
    lam = dec.eigenvalues
    n = g.n
    rep.add("zero-trace", abs(float(lam.sum())), 1e-8, "eigenvalue sum is the trace")
    rep.add("sum-squares-2L", abs(float((lam**2).sum()) - 2 * g.num_links), 1e-6, "squared eigenvalues count links")
    eye = np.eye(n)
    rep.add("first-orthogonality", float(np.abs(dec.X.T @ dec.X - eye).max()), 1e-10, "double orthogonality")
    rep.add("second-orthogonality", float(np.abs(dec.X @ dec.X.T - eye).max()), 1e-10, "double orthogonality")
    scale = max(1.0, float(np.abs(lam).max()))
    rep.add(
        "eigen-residual",
        float(np.abs(g.adj.astype(float) @ dec.X - dec.X * lam).max()) / scale,
        1e-8,
        "eigenvalue equation residual",
    )

    y = dec.X**2
    rep.add("moment-1-zero", float(np.abs(y @ lam).max()), 1e-7, "first moment of squared components")
    rep.add(
        "moment-2-degree",
        float(np.abs(y @ lam**2 - g.degrees).max()),
        1e-7,
        "second moment of squared components is the degree",
    )

    a = g.adj.astype(float)
    worst = 0.0
    acc = np.eye(n)
    for m in range(4):
        fm = dec.X @ np.diag(lam**m) @ dec.X.T
        worst = max(worst, float(np.abs(fm - acc).max()))
        acc = acc @ a
    rep.add("function-of-matrix", worst, 1e-6, "spectral reconstruction of matrix powers")

    if 2 <= n <= EXACT_POLY_LIMIT:
        cp = char_poly_exact(g)
        total = IntPolynomial((0,))
        for j in range(1, n + 1):
            total = total + char_poly_exact(delete_node(g, j))
        rep.add_flag(
            "deleted-sum-equals-minus-derivative",
            total == -cp.derivative(),
            "node-deleted polynomials sum to minus the derivative",
        )
    else:
        rep.skip("deleted-sum-equals-minus-derivative", "size-outside-exact-range", "polynomial identity")

    if n >= 2:
        worst = 0.0
        checked = False
        for k in range(1, n + 1):
            if not dec.is_simple(k):
                continue
            lam_k = float(lam[k - 1])
            cp = char_poly_derivative_at(dec, k)
            dets = np.array([det_shift(delete_node(g, j), lam_k) for j in range(1, n + 1)])
            live = np.abs(dets) > 1e-9 * max(1.0, float(np.abs(dets).max()))
            if not live.any():
                continue
            checked = True
            signs = np.sign(dets[live])
            ok = bool(np.all(signs == signs[0]) and signs[0] == -np.sign(cp))
            worst = max(worst, 0.0 if ok else 1.0)
        if checked:
            rep.add("deleted-determinant-signs", worst, 0.0, "node-deleted determinants share a sign opposite the derivative")
        else:
            rep.skip("deleted-determinant-signs", "no-simple-frequencies", "sign structure")

        k1 = next((k for k in range(1, n + 1) if dec.is_simple(k)), None)
        if k1 is not None:
            h = 1e-5
            lam_k = float(lam[k1 - 1])
            fd = (det_shift(g, lam_k + h) - det_shift(g, lam_k - h)) / (2 * h)
            cp = char_poly_derivative_at(dec, k1)
            rep.add(
                "derivative-vs-finite-difference",
                abs(fd - cp) / max(1.0, abs(cp)),
                1e-4,
                "product formula for the derivative",
            )


def _centrality_checks(rep: VerificationReport, g: Graph, dec: SpectralDecomposition, corrupt: bool) -> None:
    n = g.n
    lam = dec.eigenvalues
    report = cent.centrality_report(g, dec)
    Y = report.Y.copy()
    if corrupt:
        Y[0, 0] += 0.5  # negative-control hook used by `verify --corrupt`

    rep.add("y-row-sums", float(np.abs(Y.sum(axis=1) - 1.0).max()), 1e-7, "double stochasticity")
    rep.add("y-col-sums", float(np.abs(Y.sum(axis=0) - 1.0).max()), 1e-7, "double stochasticity")
    rep.add_flag(
        "y-entry-range",
        bool(np.all(Y >= -1e-10) and np.all(Y <= 1.0 + 1e-10)),
        "squared components live in the unit interval",
    )
    rep.add(
        "y-annihilates-eigenvalues",
        float(np.abs(Y @ lam).max()) / max(1.0, float(np.abs(lam[0]))),
        1e-6,
        "eigenvalue vector in the null space of the squared-component matrix",
    )

    det_mask = report.method == "determinantal"
    if det_mask.any():
        rep.add("determinantal-vs-eigensolver", float(report.residuals[det_mask].max()), 1e-7, "determinantal route oracle")
    else:
        rep.skip("determinantal-vs-eigensolver", "no-simple-frequencies", "determinantal route oracle")

    simple_cols = [grp[0] for grp in dec.groups if len(grp) == 1]
    if simple_cols:
        worst = 0.0
        for kk in simple_cols:
            for jj in range(n):
                try:
                    v = cent.resolvent_squared(g, dec, jj + 1, kk + 1)
                except ValueError:
                    v = 0.0
                worst = max(worst, abs(v - float(dec.X[jj, kk] ** 2)))
        rep.add("resolvent-vs-eigensolver", worst, 1e-6, "resolvent route oracle")
    else:
        rep.skip("resolvent-vs-eigensolver", "no-simple-frequencies", "resolvent route oracle")

    if dec.all_simple and n <= EXACT_POLY_LIMIT:
        worst = float(np.abs(cent.walk_expansion_matrix(g, dec) - dec.X**2).max())
        rep.add("walk-vs-eigensolver", worst, 1e-5, "walk route oracle")

        W = np.array(walk_counts(g, n - 1)[0], dtype=float)
        sign = -1.0 if n % 2 else 1.0
        worst = 0.0
        for kk in range(n):
            b = cent.walk_expansion_coefficients(g, dec, kk + 1)
            cp = char_poly_derivative_at(dec, kk + 1)
            total = sign * float(W[: n] @ b)
            worst = max(worst, abs(total - cp) / max(1.0, abs(cp)))
        rep.add("closed-walk-derivative", worst, 1e-5, "closed-walk expansion of the derivative")
    else:
        rep.skip("walk-vs-eigensolver", "repeated-eigenvalues-or-size", "walk route oracle")
        rep.skip("closed-walk-derivative", "repeated-eigenvalues-or-size", "closed-walk expansion")

    # ratio identity and zero-component predicate, simple frequencies only
    worst_ratio = 0.0
    pred_ok = True
    any_ratio = False
    for kk in [grp[0] for grp in dec.groups if len(grp) == 1]:
        lam_k = float(lam[kk])
        dets = np.array([1.0 if n == 1 else det_shift(delete_node(g, j), lam_k) for j in range(1, n + 1)])
        ysq = dec.X[:, kk] ** 2
        for jj in range(n):
            for mm in range(n):
                if abs(dets[mm]) > 1e-9 and ysq[mm] > 1e-9:
                    any_ratio = True
                    lhs = ysq[jj] / ysq[mm]
                    rhs = dets[jj] / dets[mm]
                    worst_ratio = max(worst_ratio, abs(lhs - rhs) / max(1.0, abs(rhs)))
        if n >= 2:
            minors = [np.linalg.eigvalsh(np.delete(np.delete(g.adj, j, 0), j, 1).astype(float)) for j in range(n)]
            for jj in range(n):
                dist = float(np.min(np.abs(minors[jj] - lam_k)))
                # compare only where both routes are decisive; values inside
                # the tolerance band cannot be classified by either route
                if 1e-10 < ysq[jj] < 1e-4 or 1e-9 < dist < 1e-5:
                    continue
                zero_by_y = ysq[jj] <= 1e-7
                zero_by_spec = dist <= 1e-7
                pred_ok = pred_ok and (zero_by_y == zero_by_spec)
    if any_ratio:
        rep.add("squared-ratio-identity", worst_ratio, 1e-6, "ratio of node-deleted determinants")
    rep.add_flag("zero-component-predicate", pred_ok, "zero component iff eigenvalue survives node deletion")

    if connected(g):
        rep.add_flag(
            "principal-never-redundant",
            bool(np.all(report.Y[:, 0] > report.zero_tol)),
            "principal components are positive on connected graphs",
        )

    if g.degrees.min() >= 1:
        ri = cent.r_decomposition(g, dec)
        y_eig = dec.X**2
        d = g.degrees.astype(float)
        pred = (1.0 - ri.r) / (lam[None, :] ** 2 / d[:, None] + 1.0)
        rep.add("r-reconstruction", float(np.abs(pred - y_eig).max()), 1e-9, "squared eigenvalue equation")
        rep.add_flag("r-range", bool(np.all(ri.r >= -1e-9) and np.all(ri.r <= 1.0 + 1e-9)), "correction term range")
        rep.add("r-sum-over-freq", float(np.abs((1.0 - ri.r).sum(axis=1) - 2.0).max()), 1e-7, "correction sums to two per node")
        unity = pred.sum(axis=1)
        rep.add("unity-sum-node", float(np.abs(unity - 1.0).max()), 1e-8, "unit mass per node")
        unity_f = pred.sum(axis=0)
        rep.add("unity-sum-frequency", float(np.abs(unity_f - 1.0).max()), 1e-8, "unit mass per frequency")
    else:
        rep.skip("r-reconstruction", "isolated-node", "squared eigenvalue equation")


def _weight_checks(rep: VerificationReport, g: Graph, dec: SpectralDecomposition, m_max: int) -> None:
    profile = weights_mod.weight_profile(g, dec, m_max)
    n = g.n
    for name, resid in weights_mod.identity_suite(g, dec, profile).items():
        rep.add(f"identity:{name}", resid, 1e-6, "weight identity suite")

    phi = profile.phi
    # the norm argument pins the largest magnitude, not the signed maximum;
    # the signed chain can fail in unlucky sign gauges of degenerate spectra
    rep.add_flag(
        "phi-extreme-bounds",
        bool(
            np.abs(phi).max() >= 1.0 - 1e-9
            and np.abs(phi).max() <= np.sqrt(n) + 1e-9
            and phi.min() <= 1.0 + 1e-9
            and phi.max() >= -1.0 - 1e-9
        ),
        "extremes of the dual weights",
    )
    if g.num_links > 0:
        rep.add_flag(
            "phi-mixed-signs",
            bool(phi.min() <= 1e-9 and phi.max() >= -1e-9),
            "dual weights cannot be one-signed",
        )
    rep.add_flag("sx-bounds", bool(abs(profile.s_X) <= n + 1e-9 and abs(profile.s_X2) <= n + 1e-9), "element-sum bounds")
    rep.add_flag(
        "phi-min-abel-step",
        bool(profile.s_X / n >= phi.min() - 1e-9 >= -np.sqrt(n) - 2e-9),
        "mean dual weight dominates the smallest",
    )

    if connected(g) and g.num_links >= 1:
        rep.add("w1-at-least-one", max(0.0, 1.0 - float(profile.w[0])), 1e-9, "principal weight exceeds one")

    if n >= 2:
        sp = weights_mod.spacing_bounds(profile, g)
        rep.add_flag("spacing-min-upper", sp.min_ok, "minimal spacing upper bounds")
        rep.add_flag("spacing-max-lower", sp.max_ok, "maximal spacing lower bound")
        if sp.degree_ok is None:
            rep.skip("spacing-degree-bound", "last-dual-weight-not-negative", "degree-weighted spacing bound")
        else:
            rep.add_flag("spacing-degree-bound", sp.degree_ok, "degree-weighted spacing bound")

    if dec.all_simple:
        state = (g.n * 2654435761 + g.num_links) & ((1 << 64) - 1)
        perm = _seeded_permutation(n, state)
        pg = Graph(g.adj[np.ix_(perm, perm)])
        pdec = decompose(pg)
        pw = weights_mod.weight_profile(pg, pdec, 0)
        # eigenvectors are unique up to sign only; recover the gauge first
        signs = np.sign(np.einsum("jk,jk->k", pdec.X, dec.X[perm, :]))
        rep.add("relabel-w-invariant", float(np.abs(np.abs(pw.w) - np.abs(profile.w)).max()), 1e-8, "weights ignore labels")
        expected_phi = (dec.X[perm, :] * signs).sum(axis=1)
        rep.add(
            "relabel-phi-permutes",
            float(np.abs(pw.phi - expected_phi).max()),
            1e-8,
            "dual weights permute with labels",
        )
    else:
        rep.skip("relabel-w-invariant", "repeated-eigenvalues", "relabeling invariance")

    # identities must survive arbitrary eigenvector sign gauges
    state = (g.n * 40503 + g.num_links * 2654435761 + 7) & ((1 << 64) - 1)
    flips = np.ones(n)
    from .graphs import _splitmix64

    for k in range(n):
        state, u_ = _splitmix64(state)
        if u_ < 0.5:
            flips[k] = -1.0
    xf = dec.X * flips
    xf.setflags(write=False)
    fdec = SpectralDecomposition(dec.eigenvalues, xf, dec.groups, dec.mult_tol)
    fprof = weights_mod.weight_profile(g, fdec, m_max)
    worst = max(weights_mod.identity_suite(g, fdec, fprof).values())
    rep.add("identity-suite-sign-flipped", worst, 1e-6, "identities hold in any sign gauge")

    both_simple = dec.all_simple and decompose(complement(g)).all_simple
    if both_simple and n >= 2:
        import warnings as _w

        with _w.catch_warnings():
            _w.simplefilter("ignore")
            coup = weights_mod.complement_coupling(g, dec)
        live = ~np.isnan(coup.overlap_residual)
        if live.any():
            rep.add("complement-overlap", float(np.nanmax(coup.overlap_residual)), 1e-6, "complement eigenvector coupling")
        sums = coup.sum_rule_k[~np.isnan(coup.sum_rule_k)]
        if sums.size:
            rep.add("complement-sum-rule", float(sums.max()), 1e-6, "weight sum rule across the complement")
        rep.add("theta1-bound", max(0.0, -coup.theta1_slack), 1e-9, "complement spectral radius bound")
        gen_worst = max(coup.generalized_residual.values())
        rep.add("complement-generalized", gen_worst, 1e-6, "higher-power coupling")
    else:
        rep.skip("complement-overlap", "repeated-eigenvalues", "complement eigenvector coupling")


def _seeded_permutation(n: int, state: int) -> np.ndarray:
    from .graphs import _splitmix64

    perm = np.arange(n)
    for i in range(n - 1, 0, -1):
        state, u = _splitmix64(state)
        j = int(u * (i + 1))
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def _bound_checks(rep: VerificationReport, g: Graph, dec: SpectralDecomposition, m_max: int) -> None:
    profile = weights_mod.weight_profile(g, dec, m_max)
    br = bounds_mod.full_bound_report(g, dec, profile)
    rep.add_flag(
        "bound-suite",
        br.all_pass,
        f"{br.pass_count} inequalities pass, {br.skip_count} skipped, worst slack {br.worst_slack:.3g}",
    )
    if g.degrees.min() >= 1:
        prof, _ = bounds_mod.si_entries(g, dec)
        rep.add("si-reconstruction", float(prof.reconstruction_residual.max()), 1e-7, "minimum squared eigenvalue recovery")
        d_min = float(g.degrees.min())
        lam2 = dec.eigenvalues**2
        # the strictness proof needs a gap somewhere among the squared
        # eigenvalues; K_2 (all squares equal) sits outside the theorem
        distinct = np.unique(np.round(lam2, 9)).size >= 2
        if prof.connected and distinct:
            rep.add_flag("min-eigsq-strict", prof.min_lambda_sq < d_min, "strict bound on connected graphs")
        elif prof.connected:
            rep.skip("min-eigsq-strict", "all-squared-eigenvalues-equal", "strict bound on connected graphs")
        if abs(prof.min_lambda_sq - d_min) <= 1e-9 and distinct:
            rep.add_flag("equality-implies-disconnected", not prof.connected, "equality certifies disconnection")
