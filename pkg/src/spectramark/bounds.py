"""Inequality suite over eigenvector components, evaluated as slack reports.

Every inequality instance becomes one entry with its oriented slack
(rhs - lhs), so near-tight bounds are visible rather than hidden behind a
boolean.  Pass means slack >= -(1e-9 absolute + 1e-9 relative on the larger
side); bounds whose hypotheses fail (odd closed-walk counts on bipartite
graphs, isolated nodes) are skipped with a machine-readable reason.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .spectral import SpectralDecomposition, matrix_power_exact, walk_counts
from .centrality import r_decomposition

ABS_TOL = 1e-9
REL_TOL = 1e-9


@dataclass(frozen=True)
class BoundEntry:
    """One inequality instance lhs <= rhs with oriented slack."""

    name: str
    lhs: float
    rhs: float
    cited: str
    node: int | None = None
    freq: int | None = None
    skipped: str | None = None

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def passed(self) -> bool:
        if self.skipped:
            return True
        tol = ABS_TOL + REL_TOL * max(abs(self.lhs), abs(self.rhs))
        return self.slack >= -tol


@dataclass(frozen=True)
class BoundReport:
    entries: tuple[BoundEntry, ...]

    @property
    def checked(self) -> tuple[BoundEntry, ...]:
        return tuple(e for e in self.entries if not e.skipped)

    @property
    def all_pass(self) -> bool:
        return all(e.passed for e in self.checked)

    @property
    def pass_count(self) -> int:
        return sum(1 for e in self.checked if e.passed)

    @property
    def fail_count(self) -> int:
        return sum(1 for e in self.checked if not e.passed)

    @property
    def skip_count(self) -> int:
        return sum(1 for e in self.entries if e.skipped)

    @property
    def worst_slack(self) -> float:
        checked = self.checked
        return min((e.slack for e in checked), default=float("inf"))

    def failures(self) -> list[BoundEntry]:
        return [e for e in self.checked if not e.passed]


def _no_isolated(g: Graph, what: str) -> None:
    if np.any(g.degrees == 0):
        raise ValueError(f"{what} requires every node to have degree >= 1")


def upper_bound_squared(g: Graph, dec: SpectralDecomposition) -> list[BoundEntry]:
    """(x_k)_i^2 <= 1 / (1 + lambda_k^2 / d_i), one entry per (node, frequency)."""
    _no_isolated(g, "squared-component upper bound")
    d = g.degrees.astype(float)
    y = dec.X**2
    lam2 = dec.eigenvalues**2
    out = []
    for i in range(g.n):
        for k in range(g.n):
            out.append(
                BoundEntry(
                    name="squared-component-upper",
                    lhs=float(y[i, k]),
                    rhs=float(1.0 / (1.0 + lam2[k] / d[i])),
                    cited="squared eigenvalue equation, non-negative correction",
                    node=i + 1,
                    freq=k + 1,
                )
            )
    return out


def nikiforov_extended(g: Graph, dec: SpectralDecomposition) -> list[BoundEntry]:
    """Minimum squared component bounded via the minimal square spacing,
    extending the classical principal-eigenvector bound to every frequency."""
    d_min = float(g.degrees.min())
    n = g.n
    lam2 = dec.eigenvalues**2
    out = []
    for k in range(n):
        x = np.sort(dec.X[:, k])
        s_k = float(np.min(np.diff(x)) ** 2) if n > 1 else 0.0
        rhs = (1.0 - 0.5 * d_min * s_k) / (lam2[k] / d_min + n - d_min) if d_min > 0 else 1.0
        if n == 2:
            # a degree-1 node has no distinct neighbor pair, so the spacing
            # term is vacuous; on two nodes the stated bound actually fails
            out.append(
                BoundEntry(
                    name="min-component-spacing-bound",
                    lhs=float(np.min(dec.X[:, k] ** 2)),
                    rhs=float(rhs),
                    cited="minimum component with square spacing",
                    freq=k + 1,
                    skipped="two-node-spacing-vacuous",
                )
            )
            continue
        if d_min == 0:
            # degenerate hypothesis; the bound is vacuous without degrees
            out.append(
                BoundEntry(
                    name="min-component-spacing-bound",
                    lhs=0.0,
                    rhs=1.0,
                    cited="minimum component with square spacing",
                    freq=k + 1,
                    skipped="isolated-node",
                )
            )
            continue
        out.append(
            BoundEntry(
                name="min-component-spacing-bound",
                lhs=float(np.min(dec.X[:, k] ** 2)),
                rhs=float(rhs),
                cited="minimum component with square spacing",
                freq=k + 1,
            )
        )
    return out


def walk_minmax_bounds(g: Graph, dec: SpectralDecomposition, profile, m: int) -> list[BoundEntry]:
    """Walk-count sandwiches for signed components (per frequency) and squared
    components (per node) at hop count m.

    Odd-m closed-walk counts vanish on bipartite graphs; the affected ratio
    entries are skipped with reason "zero-walk-count".
    """
    if m < 0 or m > 16:
        raise ValueError(f"walk bound hop count limited to 0 <= m <= 16, got {m}")
    w = np.asarray(profile.w, dtype=float)
    W, _ = walk_counts(g, m)
    W_m = W[m]
    _, N_all = walk_counts(g, 2 * m)
    N_m = N_all[m]
    N_2m = N_all[2 * m]
    diag_m = np.array([int(v) for v in np.diag(matrix_power_exact(g, m))], dtype=float)
    lam = dec.eigenvalues
    y = dec.X**2
    out = []
    anchor = "walk-count sandwich for components"
    for k in range(g.n):
        ratio = float(lam[k] ** m * w[k] / N_m) if N_m else 0.0
        skip = None if N_m else "zero-walk-count"
        out.append(
            BoundEntry(
                name=f"signed-minmax-m{m}-lower",
                lhs=float(dec.X[:, k].min()),
                rhs=ratio,
                cited=anchor,
                freq=k + 1,
                skipped=skip,
            )
        )
        out.append(
            BoundEntry(
                name=f"signed-minmax-m{m}-upper",
                lhs=ratio,
                rhs=float(dec.X[:, k].max()),
                cited=anchor,
                freq=k + 1,
                skipped=skip,
            )
        )
        skip2 = None if N_2m else "zero-walk-count"
        out.append(
            BoundEntry(
                name=f"max-abs-component-m{m}",
                lhs=float(abs(lam[k]) ** m / np.sqrt(N_2m)) if N_2m else 0.0,
                rhs=float(np.abs(dec.X[:, k]).max()),
                cited="squared walk sandwich for the largest component magnitude",
                freq=k + 1,
                skipped=skip2,
            )
        )
    for j in range(g.n):
        # the per-node ratio sandwich needs a non-negative spectral weight
        # x**m, so odd powers are out whenever a negative eigenvalue exists
        if m % 2 and g.num_links > 0:
            skip = "odd-power-sign-indefinite"
        elif not W_m:
            skip = "zero-walk-count"
        else:
            skip = None
        ratio = float(diag_m[j] / W_m) if (W_m and not skip) else 0.0
        out.append(
            BoundEntry(
                name=f"closed-walk-ratio-m{m}-lower",
                lhs=float(y[j].min()),
                rhs=ratio,
                cited="closed-walk share sandwich per node",
                node=j + 1,
                skipped=skip,
            )
        )
        out.append(
            BoundEntry(
                name=f"closed-walk-ratio-m{m}-upper",
                lhs=ratio,
                rhs=float(y[j].max()),
                cited="closed-walk share sandwich per node",
                node=j + 1,
                skipped=skip,
            )
        )
    return out


def max_component_lb(g: Graph, dec: SpectralDecomposition) -> list[BoundEntry]:
    """4 / (N (3 + (A^4)_ii / d_i^2)) <= max_k (x_k)_i^2, from the variance of
    the correction factors."""
    _no_isolated(g, "max-component lower bound")
    d = g.degrees.astype(float)
    diag4 = np.array([int(v) for v in np.diag(matrix_power_exact(g, 4))], dtype=float)
    y = dec.X**2
    out = []
    for i in range(g.n):
        out.append(
            BoundEntry(
                name="max-component-variance-lb",
                lhs=float(4.0 / (g.n * (3.0 + diag4[i] / d[i] ** 2))),
                rhs=float(y[i].max()),
                cited="variance of correction factors",
                node=i + 1,
            )
        )
    return out


def min_over_k_and_i_bounds(g: Graph, dec: SpectralDecomposition) -> list[BoundEntry]:
    """Harmonic-mean style upper bounds on the minimum squared component,
    taken over frequencies (per node) and over nodes (per frequency)."""
    _no_isolated(g, "harmonic-mean minimum bounds")
    d = g.degrees.astype(float)
    n = g.n
    d_av = 2.0 * g.num_links / n
    d_max = float(d.max())
    lam2 = dec.eigenvalues**2
    min_lam2 = float(lam2.min())
    harm = float(np.mean(1.0 / d))
    y = dec.X**2
    out = []
    for i in range(n):
        rhs = (1.0 / n) * min(1.0 + d_av / d[i], 2.0) / (min_lam2 / d[i] + 1.0)
        out.append(
            BoundEntry(
                name="min-over-freq-harmonic",
                lhs=float(y[i].min()),
                rhs=float(rhs),
                cited="harmonic mean over frequencies",
                node=i + 1,
            )
        )
    for k in range(n):
        rhs = (1.0 / n) * (1.0 + lam2[k] * harm) / (1.0 + lam2[k] / d_max)
        out.append(
            BoundEntry(
                name="min-over-node-harmonic",
                lhs=float(y[:, k].min()),
                rhs=float(rhs),
                cited="harmonic mean of the degree over nodes",
                freq=k + 1,
            )
        )
    return out


# ---------------------------------------------------------------------------
# Abel-summation profile behind the strict minimum-eigenvalue bound.


@dataclass(frozen=True)
class SiProfile:
    """Per-node Abel-summation mass S_i with the reconstruction of the
    smallest squared eigenvalue.

    xi is the footnote statistic d_min - min lambda^2 - algebraic
    connectivity; it is reported, never asserted.
    """

    S: np.ndarray
    min_lambda_sq: float
    reconstruction_residual: np.ndarray
    connected: bool
    algebraic_connectivity: float | None
    xi: float | None


def si_profile(g: Graph, dec: SpectralDecomposition) -> SiProfile:
    _no_isolated(g, "Abel-summation profile")
    from .graphs import connected as is_connected

    d = g.degrees.astype(float)
    lam2 = dec.eigenvalues**2
    order = np.argsort(-lam2, kind="stable")  # descending squares
    lam2_sorted = lam2[order]
    ri = r_decomposition(g, dec)
    one_minus_r = 1.0 - ri.r  # (i, k)
    cum = np.cumsum(one_minus_r[:, order], axis=1)  # partial sums over ranked freqs
    n = g.n
    S = np.zeros(n)
    for i in range(n):
        inv = 1.0 / (lam2_sorted / d[i] + 1.0)
        S[i] = float(np.sum(cum[i, : n - 1] * (inv[1:] - inv[:-1])))
    min_lam2 = float(lam2_sorted[-1])
    recon = d * (1.0 - S) / (1.0 + S)
    denom = max(1.0, min_lam2)
    resid = np.abs(recon - min_lam2) / denom
    conn = is_connected(g)
    mu = None
    xi = None
    if n >= 2:
        lap = np.diag(d) - g.adj.astype(float)
        mu = float(np.sort(np.linalg.eigvalsh(lap))[1])
        xi = float(d.min() - min_lam2 - mu)
    return SiProfile(
        S=S,
        min_lambda_sq=min_lam2,
        reconstruction_residual=resid,
        connected=conn,
        algebraic_connectivity=mu,
        xi=xi,
    )


def si_entries(g: Graph, dec: SpectralDecomposition) -> tuple[SiProfile, list[BoundEntry]]:
    """Bound entries derived from the Abel-summation profile.

    The strict bound min_k lambda_k^2 < d_min is asserted only on connected
    graphs; equality within 1e-9 must coincide with disconnectedness.
    """
    prof = si_profile(g, dec)
    d_min = float(g.degrees.min())
    out = []
    anchor = "Abel summation over ranked squared eigenvalues"
    out.append(
        BoundEntry(
            name="min-eigsq-below-dmin",
            lhs=prof.min_lambda_sq,
            rhs=d_min,
            cited=anchor,
            skipped=None if prof.connected else "disconnected-strictness-not-asserted",
        )
    )
    for i in range(g.n):
        out.append(
            BoundEntry(
                name="si-range",
                lhs=float(prof.S[i]),
                rhs=1.0,
                cited=anchor,
                node=i + 1,
            )
        )
        out.append(
            BoundEntry(
                name="si-nonnegative",
                lhs=0.0,
                rhs=float(prof.S[i]),
                cited=anchor,
                node=i + 1,
            )
        )
    for i in range(g.n):
        for j in range(g.n):
            if g.degrees[i] > g.degrees[j]:
                out.append(
                    BoundEntry(
                        name=f"si-degree-monotone-over-{j + 1}",
                        lhs=float(prof.S[j]),
                        rhs=float(prof.S[i]),
                        cited="mass increases with the degree",
                        node=i + 1,
                    )
                )
    if prof.xi is not None:
        out.append(
            BoundEntry(
                name="xi-statistic",
                lhs=0.0,
                rhs=float(prof.xi),
                cited="reported only: often non-negative, not always",
                skipped="statistic-not-asserted",
            )
        )
    return prof, out


def full_bound_report(
    g: Graph, dec: SpectralDecomposition, profile, ms: tuple[int, ...] = (0, 1, 2, 3)
) -> BoundReport:
    """Every inequality of the suite over one graph, skipping families whose
    hypotheses do not hold."""
    entries: list[BoundEntry] = []
    isolated = bool(np.any(g.degrees == 0))
    if isolated:
        entries.append(
            BoundEntry(
                name="degree-dependent-family",
                lhs=0.0,
                rhs=0.0,
                cited="requires minimum degree >= 1",
                skipped="isolated-node",
            )
        )
    else:
        entries += upper_bound_squared(g, dec)
        entries += max_component_lb(g, dec)
        entries += min_over_k_and_i_bounds(g, dec)
        _, si = si_entries(g, dec)
        entries += si
    entries += nikiforov_extended(g, dec)
    for m in ms:
        entries += walk_minmax_bounds(g, dec, profile, m)
    lam1 = float(dec.eigenvalues[0])
    entries.append(
        BoundEntry(
            name="spectral-radius-vs-dmax",
            lhs=float(np.sqrt(g.degrees.max())),
            rhs=lam1,
            cited="classical lower bound, tight on stars",
        )
    )
    return BoundReport(tuple(entries))
