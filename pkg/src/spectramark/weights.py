"""Fundamental weights, their dual, spacing bounds, complement coupling and
Hadamard constructions.

The fundamental weight vector w collects the column sums of the orthogonal
eigenvector matrix X (w_k = u.x_k); its dual phi collects the row sums.  Both
condense X into N numbers with a rich identity suite: shared norm sqrt(N),
pairing with the eigenvalue and degree vectors, and walk-count generating
properties.  w is invariant under node relabeling while phi permutes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .graphs import Graph, complement
from .spectral import SpectralDecomposition, decompose, exact_det, walk_counts
from .bounds import BoundEntry

IDENTITY_TOL = 1e-6
DENOM_TOL = 1e-8


@dataclass(frozen=True)
class WeightProfile:
    """Spectral condensations of the eigenvector matrix plus walk counts."""

    w: np.ndarray
    phi: np.ndarray
    s_X: float
    s_X2: float
    W: tuple[int, ...]
    Nw: tuple[int, ...]
    m_max: int


def weight_profile(g: Graph, dec: SpectralDecomposition, m_max: int = 6) -> WeightProfile:
    u = np.ones(g.n)
    w = dec.X.T @ u
    phi = dec.X @ u
    W, Nw = walk_counts(g, m_max)
    return WeightProfile(
        w=w,
        phi=phi,
        s_X=float(w.sum()),
        s_X2=float(w @ phi),
        W=W,
        Nw=Nw,
        m_max=m_max,
    )


def _degree_power_vectors(g: Graph, m_max: int) -> list[np.ndarray]:
    """Exact d^(m) = A^m u for m = 0..m_max."""
    v = np.array([1] * g.n, dtype=object)
    a = g.adj.astype(object)
    out = [v.astype(float)]
    for _ in range(m_max):
        v = a @ v
        out.append(v.astype(float))
    return out


def identity_suite(g: Graph, dec: SpectralDecomposition, profile: WeightProfile) -> dict[str, float]:
    """Scaled residuals of the weight identities, keyed by a stable name.

    All residuals are divided by max(1, |reference|), so the pass criterion
    is a flat 1e-6.  Failures are data for the verification runner, not
    exceptions.
    """
    u = np.ones(g.n)
    w, phi = profile.w, profile.phi
    lam = dec.eigenvalues
    d = g.degrees.astype(float)
    out: dict[str, float] = {}

    out["u-from-eigenvector-basis"] = float(np.abs(dec.X @ w - u).max())
    out["u-from-row-basis"] = float(np.abs(dec.X.T @ phi - u).max())
    out["norm-w"] = abs(float(w @ w) - g.n) / max(1.0, g.n)
    out["norm-phi"] = abs(float(phi @ phi) - g.n) / max(1.0, g.n)
    out["element-sum-match"] = abs(float(w.sum() - phi.sum())) / max(1.0, abs(profile.s_X))
    x2 = dec.X @ dec.X
    out["squared-matrix-sum"] = abs(float(u @ x2 @ u) - profile.s_X2) / max(1.0, abs(profile.s_X2))

    ref = float(w @ lam)
    out["eigenvalue-degree-pairing"] = abs(ref - float(phi @ d)) / max(1.0, abs(ref))
    dm = _degree_power_vectors(g, profile.m_max)
    for m in range(profile.m_max + 1):
        ref = float(w @ lam**m)
        out[f"power-pairing-m{m}"] = abs(ref - float(phi @ dm[m])) / max(1.0, abs(ref))

    a = g.adj.astype(float)
    v = phi.copy()
    out["phi-A-phi-zero"] = abs(float(phi @ a @ phi)) / max(1.0, g.n)
    for m in range(1, profile.m_max + 1):
        v = a @ v
        out[f"phi-closed-walks-m{m}"] = abs(float(phi @ v) - profile.W[m]) / max(1.0, abs(profile.W[m]))
    for m in range(profile.m_max + 1):
        out[f"total-walks-moment-m{m}"] = abs(
            float((w**2) @ lam**m) - profile.Nw[m]
        ) / max(1.0, abs(profile.Nw[m]))

    from .graphs import connected as is_connected

    if g.num_links >= 1 and is_connected(g):
        two_l = 2.0 * g.num_links
        cos_lw = abs(float(w @ lam)) / np.sqrt(two_l * g.n)
        cos_dphi = abs(float(phi @ d)) / (np.linalg.norm(d) * np.sqrt(g.n))
        out["angle-correlation-connected"] = max(0.0, cos_dphi - cos_lw)
    return out


def w1_bounds_check(
    dec: SpectralDecomposition, profile: WeightProfile, omega: int
) -> list[BoundEntry]:
    """Lower bounds on the principal fundamental weight and the reciprocal
    sandwich for every weight.

    omega is the clique number, supplied by the caller (>= 2 for any graph
    with at least one link); clique computation is out of scope here.
    """
    if omega < 2:
        raise ValueError(f"clique number must be >= 2, got {omega}")
    w1 = float(profile.w[0])
    lam1 = float(dec.eigenvalues[0])
    out = [
        BoundEntry(name="w1-at-least-one", lhs=1.0, rhs=w1,
                   cited="reciprocal sandwich at the principal frequency"),
        BoundEntry(name="w1-clique-bound", lhs=float(np.sqrt(lam1 / (1.0 - 1.0 / omega))),
                   rhs=w1, cited="clique-number lower bound"),
    ]
    n = dec.n
    for k in range(n):
        x = dec.X[:, k]
        live = np.abs(x) > 1e-12 * max(1.0, float(np.abs(x).max()))
        recip = 1.0 / x[live]
        out.append(
            BoundEntry(name="wk-sandwich-lower", lhs=float(recip.min()), rhs=float(profile.w[k]),
                       cited="reciprocal sandwich over non-zero components", freq=k + 1)
        )
        out.append(
            BoundEntry(name="wk-sandwich-upper", lhs=float(profile.w[k]), rhs=float(recip.max()),
                       cited="reciprocal sandwich over non-zero components", freq=k + 1)
        )
    return out


# ---------------------------------------------------------------------------
# Spacings of ordered vector components.


def generic_spacing_fraction(a: np.ndarray, b: np.ndarray) -> float:
    """Abel-summation fraction bounded between the extreme spacings of b.

    a must be non-negative with some positive mass before the last entry
    (otherwise the denominator vanishes); b must be sorted descending.  The
    returned fraction f always satisfies min spacing <= f <= max spacing.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    n = b.size
    if a.size != n:
        raise ValueError("a and b must have equal length")
    if n < 2:
        raise ValueError("need at least two components for a spacing")
    if np.any(a < 0):
        raise ValueError("a must be elementwise non-negative")
    if not a.any():
        raise ValueError("a must have at least one positive entry")
    if np.any(np.diff(b) > 1e-12 * max(1.0, float(np.abs(b).max()))):
        raise ValueError("b must be sorted descending")
    denom = n * a.sum() - float(np.arange(1, n + 1) @ a)
    if denom <= 0:
        raise ValueError("a needs positive mass before the last entry")
    f = float(a[: n - 1] @ (b[: n - 1] - b[-1])) / denom
    gaps = -np.diff(b)
    tol = 1e-9 * max(1.0, float(np.abs(b).max()))
    if not (gaps.min() - tol <= f <= gaps.max() + tol):
        raise ArithmeticError(f"spacing sandwich violated: f={f}, gaps=[{gaps.min()}, {gaps.max()}]")
    return f


@dataclass(frozen=True)
class SpacingBounds:
    """Spacing bounds for the ordered dual weights phi_(1) >= ... >= phi_(N)."""

    f_e1: float
    f_u: float
    max_spacing_lb: float
    degree_lb: float | None
    observed_min: float
    observed_max: float

    @property
    def min_spacing_ub(self) -> float:
        return min(self.f_e1, self.f_u)

    @property
    def min_ok(self) -> bool:
        return self.observed_min <= self.min_spacing_ub + 1e-9

    @property
    def max_ok(self) -> bool:
        return self.observed_max >= self.max_spacing_lb - 1e-9

    @property
    def degree_ok(self) -> bool | None:
        if self.degree_lb is None:
            return None
        return self.observed_max >= self.degree_lb - 1e-9


def spacing_bounds(profile: WeightProfile, g: Graph | None = None) -> SpacingBounds:
    """Upper bounds on the minimal phi spacing and lower bounds on the maximal
    one.  The degree-weighted lower bound needs the graph and applies only
    when the smallest dual weight is negative."""
    phi = np.sort(profile.phi)[::-1]
    n = phi.size
    if n < 2:
        raise ValueError("spacing bounds need at least two nodes")
    gaps = -np.diff(phi)
    s_x = profile.s_X
    f_e1 = float((phi[0] - phi[-1]) / (n - 1))
    f_u = float((s_x / n - phi[-1]) / ((n - 1) / 2.0))
    cs = float(
        (1.0 - phi[-1] * s_x / n)
        / np.sqrt((n - 1) * (2 * n - 1) / 6.0 * (1.0 - phi[-1] ** 2 / n))
    )
    degree_lb = None
    if g is not None and phi[-1] < 0 and g.num_links > 0:
        order = np.argsort(-profile.phi, kind="stable")
        d_ranked = g.degrees.astype(float)[order]
        ranks = np.arange(1, n + 1, dtype=float)
        degree_lb = float(
            np.sqrt(g.n / (2.0 * g.num_links))
            / (n - float(ranks @ d_ranked) / (2.0 * g.num_links))
        )
    return SpacingBounds(
        f_e1=f_e1,
        f_u=f_u,
        max_spacing_lb=cs,
        degree_lb=degree_lb,
        observed_min=float(gaps.min()),
        observed_max=float(gaps.max()),
    )


# ---------------------------------------------------------------------------
# Coupling with the complement graph.


@dataclass(frozen=True)
class ComplementCoupling:
    """Overlap x_m . z_k between eigenvectors of a graph and its complement,
    checked against the closed form w_m v_k / (theta_k + lambda_m + 1).

    Entries touching degenerate eigenvalues or near-zero denominators are
    skipped (NaN in the residual matrices) and counted in skipped_pairs.
    """

    theta: np.ndarray
    Z: np.ndarray
    v: np.ndarray
    overlap: np.ndarray
    overlap_residual: np.ndarray
    sum_rule_k: np.ndarray
    sum_rule_m: np.ndarray
    generalized_residual: dict[int, float]
    theta1_slack: float
    orthogonality_residual: float
    skipped_pairs: int
    is_regular: bool
    regular_offdiag: float | None


def complement_coupling(
    g: Graph, dec: SpectralDecomposition, dec_c: SpectralDecomposition | None = None
) -> ComplementCoupling:
    if dec_c is None:
        dec_c = decompose(complement(g))
    n = g.n
    u = np.ones(n)
    lam = dec.eigenvalues
    theta = dec_c.eigenvalues
    w = dec.X.T @ u
    v = dec_c.X.T @ u
    overlap = dec.X.T @ dec_c.X

    simple_l = np.zeros(n, dtype=bool)
    for grp in dec.groups:
        if len(grp) == 1:
            simple_l[grp[0]] = True
    simple_t = np.zeros(n, dtype=bool)
    for grp in dec_c.groups:
        if len(grp) == 1:
            simple_t[grp[0]] = True
    if not (simple_l.all() and simple_t.all()):
        warnings.warn(
            "degenerate eigenvalues present; the affected coupling entries are skipped",
            stacklevel=2,
        )

    resid = np.full((n, n), np.nan)
    skipped = 0
    for m in range(n):
        for k in range(n):
            denom = theta[k] + lam[m] + 1.0
            if not (simple_l[m] and simple_t[k]) or abs(denom) <= DENOM_TOL:
                skipped += 1
                continue
            resid[m, k] = abs(overlap[m, k] - w[m] * v[k] / denom)

    sum_k = np.full(n, np.nan)
    for k in range(n):
        denoms = theta[k] + lam + 1.0
        if simple_t[k] and np.all(np.abs(denoms) > DENOM_TOL):
            sum_k[k] = abs(float(np.sum(w**2 / denoms)) - 1.0)
    sum_m = np.full(n, np.nan)
    for m in range(n):
        denoms = theta + lam[m] + 1.0
        if simple_l[m] and np.all(np.abs(denoms) > DENOM_TOL):
            sum_m[m] = abs(float(np.sum(v**2 / denoms)) - 1.0)

    is_reg = bool(np.all(g.degrees == g.degrees[0]))
    # the higher-power closed form needs A u proportional to u, so it only
    # binds on regular graphs; n = 1 is the basic formula and always applies
    gen: dict[int, float] = {}
    for order in (1, 2, 3) if is_reg else (1,):
        worst = 0.0
        for m in range(n):
            for k in range(n):
                if not (simple_l[m] and simple_t[k]):
                    continue
                scale = max(1.0, abs(theta[k]), abs(lam[m] + 1.0)) ** order
                denom = theta[k] ** order - (-1.0) ** order * (lam[m] + 1.0) ** order
                if abs(denom) <= DENOM_TOL * scale:
                    continue
                num = (n - 1.0 - lam[m]) ** order - (-1.0) ** order * (lam[m] + 1.0) ** order
                pred = w[m] * v[k] / n * num / denom
                worst = max(worst, abs(overlap[m, k] - pred))
        gen[order] = worst

    ovl_orth = float(np.abs(overlap @ overlap.T - np.eye(n)).max())
    reg_off = None
    if is_reg:
        # commuting pair: simple eigenvectors of A must also be eigenvectors
        # of the complement, so their columns of X' A^c X are diagonal
        m_mat = dec.X.T @ complement(g).adj.astype(float) @ dec.X
        worst = 0.0
        for k in range(n):
            if simple_l[k]:
                col = np.abs(m_mat[:, k]).copy()
                col[k] = 0.0
                worst = max(worst, float(col.max()))
        reg_off = worst
    return ComplementCoupling(
        theta=theta,
        Z=dec_c.X,
        v=v,
        overlap=overlap,
        overlap_residual=resid,
        sum_rule_k=sum_k,
        sum_rule_m=sum_m,
        generalized_residual=gen,
        theta1_slack=float(theta[0] - (n - 1.0 - lam[0])),
        orthogonality_residual=ovl_orth,
        skipped_pairs=skipped,
        is_regular=is_reg,
        regular_offdiag=reg_off,
    )


# ---------------------------------------------------------------------------
# Hadamard constructions.


def sylvester_hadamard(k: int) -> np.ndarray:
    """Symmetric Hadamard matrix of order 2**k by the doubling construction.

    Entries are +-1 integers, the first column is all ones, and H H' = n I
    holds exactly in integer arithmetic.
    """
    if k < 0:
        raise ValueError("order exponent must be >= 0")
    if 2**k > 1024:
        raise ValueError(f"order limited to 1024, got 2**{k}")
    h2 = np.array([[1, 1], [1, -1]], dtype=np.int64)
    h = np.array([[1]], dtype=np.int64)
    for _ in range(k):
        h = np.kron(h, h2)
    return h


def hadamard_det(k: int) -> int:
    """Exact determinant of the order-2**k construction."""
    return exact_det(sylvester_hadamard(k))


@dataclass(frozen=True)
class HadamardCheck:
    n: int
    symmetric: bool
    first_column_ones: bool
    orthogonality_exact: bool
    laplacian_offdiag: float
    laplacian_diag: np.ndarray
    adjacency_offdiag: float
    adjacency_diag: np.ndarray
    w_phi_gap: float

    @property
    def passed(self) -> bool:
        diag_sorted = np.sort(self.laplacian_diag)
        want = np.full(self.n, float(self.n))
        want[0] = 0.0
        return (
            self.symmetric
            and self.first_column_ones
            and self.orthogonality_exact
            and self.laplacian_offdiag <= 1e-10 * self.n
            and bool(np.all(np.abs(diag_sorted - want) <= 1e-10 * self.n))
            and self.w_phi_gap <= 1e-10 * self.n
        )


def hadamard_diagonalizes_complete(k: int) -> HadamardCheck:
    """Check that X = H / sqrt(n) diagonalizes the complete graph's Laplacian
    n I - J (eigenvalues {0, n, ..., n}) and hence its adjacency matrix, with
    equal fundamental and dual weights (X is symmetric)."""
    n = 2**k
    if n < 4:
        raise ValueError("diagonalization check needs order >= 4")
    h = sylvester_hadamard(k)
    x = h / np.sqrt(n)
    q = n * np.eye(n) - np.ones((n, n))
    mq = x @ q @ x
    ma = x @ (np.ones((n, n)) - np.eye(n)) @ x
    offq = float(np.abs(mq - np.diag(np.diag(mq))).max())
    offa = float(np.abs(ma - np.diag(np.diag(ma))).max())
    u = np.ones(n)
    w = x.T @ u
    phi = x @ u
    return HadamardCheck(
        n=n,
        symmetric=bool(np.array_equal(h, h.T)),
        first_column_ones=bool(np.all(h[:, 0] == 1)),
        orthogonality_exact=bool(np.array_equal(h @ h.T, n * np.eye(n, dtype=np.int64))),
        laplacian_offdiag=offq,
        laplacian_diag=np.diag(mq).copy(),
        adjacency_offdiag=offa,
        adjacency_diag=np.diag(ma).copy(),
        w_phi_gap=float(np.abs(w - phi).max()),
    )
