"""Eigenvector components and their squares along independent routes.

The central quantity is the squared eigenvector component (x_k)_j^2, read as
the impact of removing node j at eigenfrequency lambda_k.  Four routes are
implemented: the determinantal formula over node-deleted submatrices, the
squared-eigenvalue-equation decomposition, a walk expansion, and a resolvent
form.  Each route is checked against the dense eigensolver, never against
the other routes, so agreement is meaningful evidence.

Node and frequency arguments are 1-based; returned arrays use 0-based numpy
indexing (entry [j, k] corresponds to node j+1, frequency k+1).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph, _check_node, delete_node, delete_node_pair
from .polynomials import deflate
from .spectral import (
    SpectralDecomposition,
    _check_freq,
    _int_eye,
    _power_fits_int64,
    char_poly_derivative_at,
    char_poly_exact,
    det_shift,
    second_derivative_at_group,
)

BETA_TOL = 1e-8
DEFAULT_ZERO_TOL = 1e-8


def _require_simple(dec: SpectralDecomposition, k: int, what: str) -> int:
    kk = _check_freq(dec, k)
    if not dec.is_simple(k):
        raise ValueError(
            f"{what} needs a simple eigenvalue; frequency {k} has multiplicity "
            f"{len(dec.group_of(k))} (use squared_component_mult2 for pairs)"
        )
    return kk


def squared_component_det(g: Graph, dec: SpectralDecomposition, j: int, k: int) -> float:
    """(x_k)_j^2 = -det(A with node j deleted - lambda_k I) / d/dx det(A - xI).

    Valid for simple lambda_k only.
    """
    kk = _require_simple(dec, k, "determinantal squared component")
    jj = _check_node(g, j)
    lam = float(dec.eigenvalues[kk])
    minor_det = 1.0 if g.n == 1 else det_shift(delete_node(g, j), lam)
    return -minor_det / char_poly_derivative_at(dec, k)


def squared_component_mult2(
    g: Graph, dec: SpectralDecomposition, j: int, group: tuple[int, ...]
) -> float:
    """Squared component at a multiplicity-2 eigenvalue via pair deletions.

    Returns the basis-invariant value: half the squared-component mass of
    node j over the two-dimensional eigenspace.
    """
    grp = tuple(sorted(_check_freq(dec, k) for k in group))
    matches = [tuple(x) for x in dec.groups]
    if grp not in matches:
        raise ValueError(f"{tuple(group)} is not a multiplicity group of this decomposition")
    if len(grp) != 2:
        raise ValueError(f"expected a group of size 2, got size {len(grp)}")
    if g.n < 3:
        raise ValueError("pair-deletion route needs at least 3 nodes")
    jj = _check_node(g, j)
    lam = float(dec.eigenvalues[list(grp)].mean())
    total = 0.0
    for n in range(1, g.n + 1):
        if n == j:
            continue
        total += det_shift(delete_node_pair(g, j, n), lam)
    return total / second_derivative_at_group(dec, grp)


def component_product(g: Graph, dec: SpectralDecomposition, j: int, m: int, k: int) -> float:
    """(x_k)_j (x_k)_m from the (j, m) minor of the shifted matrix.

    The minor is taken of A - lambda_k I (row j and column m removed), which
    is generally not symmetric.  j = m reduces to the squared component.
    """
    if j == m:
        return squared_component_det(g, dec, j, k)
    kk = _require_simple(dec, k, "component product")
    jj = _check_node(g, j)
    mm = _check_node(g, m, "second node")
    lam = float(dec.eigenvalues[kk])
    shifted = g.adj - lam * np.eye(g.n)
    minor = np.delete(np.delete(shifted, jj, axis=0), mm, axis=1)
    sign = -1.0 if (j + m) % 2 == 0 else 1.0  # (-1)^(j+m+1)
    return sign * float(np.linalg.det(minor)) / char_poly_derivative_at(dec, k)


def _row_replaced_det(g: Graph, lam: float, jj: int, b: np.ndarray) -> float:
    shifted = g.adj - lam * np.eye(g.n)
    shifted[jj, :] = b
    return float(np.linalg.det(shifted))


def _default_b(g: Graph, dec: SpectralDecomposition, kk: int) -> np.ndarray:
    """All-one vector, falling back to the degree vector, then to the basis
    vector at the largest eigenvector component (regular graphs make u fail)."""
    x = dec.X[:, kk]
    u = np.ones(g.n)
    if abs(u @ x) > BETA_TOL:
        return u
    d = g.degrees.astype(float)
    if abs(d @ x) > BETA_TOL:
        return d
    e = np.zeros(g.n)
    e[int(np.argmax(np.abs(x)))] = 1.0
    return e


def signed_components(
    g: Graph, dec: SpectralDecomposition, k: int, b: np.ndarray | None = None
) -> np.ndarray:
    """Full signed eigenvector column from row-replaced determinants.

    Each component is -det((A - lambda_k I) with row j replaced by b)
    divided by beta_k * d/dx det(A - xI), where beta_k = b.x_k must be
    bounded away from zero.
    """
    kk = _require_simple(dec, k, "signed component formula")
    if b is None:
        b = _default_b(g, dec, kk)
    b = np.asarray(b, dtype=float)
    if b.shape != (g.n,):
        raise ValueError(f"b must be a length-{g.n} vector")
    beta = float(b @ dec.X[:, kk])
    if abs(beta) <= BETA_TOL:
        raise ValueError("b is orthogonal to the eigenvector; choose another b")
    lam = float(dec.eigenvalues[kk])
    cprime = char_poly_derivative_at(dec, k)
    out = np.empty(g.n)
    for jj in range(g.n):
        out[jj] = -_row_replaced_det(g, lam, jj, b) / (beta * cprime)
    return out


# ---------------------------------------------------------------------------
# Squared eigenvalue equation.


@dataclass(frozen=True)
class RiDecomposition:
    """Per-(node, frequency) correction terms of the squared eigenvalue equation.

    r[i, k] = non_neighbor_mass[i, k] + neighbor_spread[i, k], with
    (x_k)_i^2 * (lambda_k^2 / d_i + 1) = 1 - r[i, k].
    """

    r: np.ndarray
    non_neighbor_mass: np.ndarray
    neighbor_spread: np.ndarray


def r_decomposition(g: Graph, dec: SpectralDecomposition) -> RiDecomposition:
    """Evaluate both summands of the correction term literally.

    The non-neighbor mass sums squared components outside the closed
    neighborhood; the spread term averages squared differences over neighbor
    pairs.  Degree-zero nodes are rejected (the formula divides by d_i).
    """
    d = g.degrees
    if np.any(d == 0):
        raise ValueError("graph has an isolated node; r-decomposition divides by the degree")
    a = g.adj.astype(float)
    y = dec.X**2
    mask = 1.0 - a
    np.fill_diagonal(mask, 0.0)
    non_neighbor = mask @ y
    spread = np.empty_like(y)
    for kk in range(dec.n):
        x = dec.X[:, kk]
        diff2 = (x[:, None] - x[None, :]) ** 2
        spread[:, kk] = np.einsum("ij,jl,il->i", a, diff2, a)
    spread /= 2.0 * d[:, None]
    return RiDecomposition(non_neighbor + spread, non_neighbor, spread)


# ---------------------------------------------------------------------------
# Walk expansion.


def _diag_powers(g: Graph, r_max: int) -> list[np.ndarray]:
    """Exact diagonals of A^0 .. A^r_max."""
    exact = not _power_fits_int64(g, r_max)
    acc = _int_eye(g.n, exact)
    a = g.adj.astype(object if exact else np.int64)
    out = []
    for r in range(r_max + 1):
        out.append(np.array([int(acc[i, i]) for i in range(g.n)], dtype=float))
        if r < r_max:
            acc = acc @ a
    return out


def walk_expansion_coefficients(g: Graph, dec: SpectralDecomposition, k: int) -> np.ndarray:
    """Coefficients b_r(k) of the deflated characteristic polynomial
    prod_{j != k} (x - lambda_j), lowest power first."""
    kk = _require_simple(dec, k, "walk expansion")
    p = char_poly_exact(g)
    sign = -1 if g.n % 2 else 1
    monic = [sign * c for c in p.coeffs]  # det(xI - A)
    return deflate(monic, float(dec.eigenvalues[kk]))


def walk_expansion_matrix(g: Graph, dec: SpectralDecomposition) -> np.ndarray:
    """All squared components along the walk route, sharing the exact
    characteristic polynomial and walk diagonals across entries.

    The coefficient series cancels catastrophically in double precision once
    walk counts reach ~1e14, so the division and the dot run in extended
    precision; the result is rounded back to double.
    """
    if not dec.all_simple:
        raise ValueError("walk expansion requires all eigenvalues simple")
    n = g.n
    p = char_poly_exact(g)
    sign_i = -1 if n % 2 else 1
    monic = [sign_i * c for c in p.coeffs]
    diags = np.column_stack(_diag_powers(g, n - 1)).astype(np.longdouble)  # (node, power)
    sign = np.longdouble(sign_i)
    out = np.empty((n, n))
    for kk in range(n):
        b = deflate(monic, float(dec.eigenvalues[kk]), dtype=np.longdouble)
        cprime = np.longdouble(char_poly_derivative_at(dec, kk + 1))
        out[:, kk] = (sign * (diags @ b) / cprime).astype(float)
    return out


def walk_expansion_squared(g: Graph, dec: SpectralDecomposition, j: int, k: int) -> float:
    """(x_k)_j^2 as a closed-walk series weighted by b_r(k).

    Requires a globally simple spectrum.
    """
    if not dec.all_simple:
        raise ValueError("walk expansion requires all eigenvalues simple")
    jj = _check_node(g, j)
    _check_freq(dec, k)
    return float(walk_expansion_matrix(g, dec)[jj, k - 1])


# ---------------------------------------------------------------------------
# Resolvent form.


def resolvent_squared(g: Graph, dec: SpectralDecomposition, j: int, k: int) -> float:
    """(x_k)_j^2 = 1 / (1 + a_j' (A_minor - lambda_k I)^-2 a_j) where A_minor
    deletes node j and a_j is node j's adjacency column without entry j.

    Errors out when lambda_k sits in the minor's spectrum: the component is
    then an exact zero and the quadratic form diverges.
    """
    kk = _require_simple(dec, k, "resolvent form")
    jj = _check_node(g, j)
    lam = float(dec.eigenvalues[kk])
    if g.n == 1:
        return 1.0
    minor = np.delete(np.delete(g.adj, jj, axis=0), jj, axis=1).astype(float)
    s, z = np.linalg.eigh(minor)
    scale = max(1.0, float(np.abs(dec.eigenvalues).max()))
    if np.min(np.abs(s - lam)) <= 1e-10 * scale:
        raise ValueError(
            "lambda_k is in the spectrum of the node-deleted graph; "
            "the component is an exact zero"
        )
    aj = np.delete(g.adj[:, jj], jj).astype(float)
    atil = z.T @ aj
    quad = float(np.sum(atil**2 / (s - lam) ** 2))
    return 1.0 / (1.0 + quad)


# ---------------------------------------------------------------------------
# Normalization identities for beta_k = b.x_k.


@dataclass(frozen=True)
class BetaChecks:
    beta: float
    sum_rule_residual: float
    beta_sq_residual: float
    inv_beta_sq_residual: float
    norm_bound_ok: bool
    tol: float = 1e-6

    @property
    def passed(self) -> bool:
        return (
            self.sum_rule_residual <= self.tol
            and self.beta_sq_residual <= self.tol
            and self.inv_beta_sq_residual <= self.tol
            and self.norm_bound_ok
        )


def beta_normalization_check(
    g: Graph, dec: SpectralDecomposition, k: int, b: np.ndarray
) -> BetaChecks:
    """Residuals of the three normalization identities tying beta_k to
    row-replaced and node-deleted determinants.

    Terms whose row-replaced determinant vanishes (node components that are
    exact zeros) contribute nothing in the limit and are skipped.
    """
    kk = _require_simple(dec, k, "normalization identities")
    b = np.asarray(b, dtype=float)
    beta = float(b @ dec.X[:, kk])
    if abs(beta) <= BETA_TOL:
        raise ValueError("b is orthogonal to the eigenvector; choose another b")
    lam = float(dec.eigenvalues[kk])
    cprime = char_poly_derivative_at(dec, k)

    row_dets = np.array([_row_replaced_det(g, lam, jj, b) for jj in range(g.n)])
    minor_dets = np.array(
        [1.0 if g.n == 1 else det_shift(delete_node(g, jj + 1), lam) for jj in range(g.n)]
    )
    live = np.abs(row_dets) > 1e-12 * max(1.0, np.abs(row_dets).max())

    sum_rule = float(np.sum(b[live] * minor_dets[live] / row_dets[live]))
    beta_sq = beta**2 + np.sum(b * row_dets) / cprime
    inv_beta_sq = 1.0 / beta**2 - float(np.sum(minor_dets[live] ** 2 / row_dets[live] ** 2))
    return BetaChecks(
        beta=beta,
        sum_rule_residual=abs(sum_rule - 1.0),
        beta_sq_residual=abs(float(beta_sq)),
        inv_beta_sq_residual=abs(float(inv_beta_sq)),
        norm_bound_ok=beta**2 <= float(b @ b) + 1e-9,
    )


# ---------------------------------------------------------------------------
# Full report.


@dataclass(frozen=True)
class CentralityReport:
    """Matrix of squared components with provenance and deviations.

    Y[j, k] holds the squared component of node j+1 at frequency k+1;
    degenerate frequencies carry the basis-invariant eigenspace mean, so Y
    stays doubly stochastic.  method tags which formula produced each entry;
    residuals holds per-entry deviation from the eigensolver values.
    """

    Y: np.ndarray
    method: np.ndarray
    redundancy: np.ndarray
    residuals: np.ndarray
    zero_tol: float


def redundancy(report: CentralityReport, zero_tol: float | None = None) -> np.ndarray:
    """Per-node count of frequencies with (basis-invariant) zero component."""
    tol = report.zero_tol if zero_tol is None else zero_tol
    return (report.Y <= tol).sum(axis=1).astype(np.int64)


_METHODS = ("determinantal", "eigensolver", "walk", "resolvent")


def centrality_report(
    g: Graph,
    dec: SpectralDecomposition,
    method: str = "determinantal",
    zero_tol: float = DEFAULT_ZERO_TOL,
) -> CentralityReport:
    """Build the full N x N squared-component report with one chosen route.

    Simple frequencies use the requested route.  Size-2 multiplicity groups
    use the pair-deletion value (tag "multiplicity2"); larger groups fall
    back to eigensolver means, the only basis-invariant quantity available.
    """
    if method not in _METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {_METHODS}")
    if method == "walk" and not dec.all_simple:
        raise ValueError("walk expansion requires all eigenvalues simple")
    n = g.n
    y_eig = dec.X**2
    y_mean = np.empty_like(y_eig)
    for grp in dec.groups:
        cols = list(grp)
        y_mean[:, cols] = y_eig[:, cols].mean(axis=1, keepdims=True)

    Y = np.empty((n, n))
    tags = np.empty((n, n), dtype=object)
    walk_all = None
    for grp in dec.groups:
        cols = list(grp)
        k1 = grp[0] + 1
        if len(grp) == 1 and method == "eigensolver":
            Y[:, cols[0]] = y_eig[:, cols[0]]
            tags[:, cols[0]] = "eigensolver"
        elif len(grp) == 1:
            if method == "walk":
                if walk_all is None:
                    walk_all = walk_expansion_matrix(g, dec)
                Y[:, cols[0]] = walk_all[:, cols[0]]
            else:
                for jj in range(n):
                    if method == "determinantal":
                        v = squared_component_det(g, dec, jj + 1, k1)
                    else:
                        try:
                            v = resolvent_squared(g, dec, jj + 1, k1)
                        except ValueError:
                            v = 0.0  # exact zero component
                    Y[jj, cols[0]] = v
            tags[:, cols[0]] = method
        elif len(grp) == 2 and method != "eigensolver" and n >= 3:
            for jj in range(n):
                Y[jj, cols] = squared_component_mult2(g, dec, jj + 1, tuple(c + 1 for c in cols))
            tags[:, cols] = "multiplicity2"
        else:
            Y[:, cols] = y_mean[:, cols]
            tags[:, cols] = "eigensolver"

    residuals = np.abs(Y - y_mean)
    red = (Y <= zero_tol).sum(axis=1).astype(np.int64)
    return CentralityReport(Y=Y, method=tags, redundancy=red, residuals=residuals,
                            zero_tol=zero_tol)
