"""Symmetric eigendecomposition with canonical ordering and signs, shifted
determinants, and exact characteristic polynomials.

The decomposition contract is numerical: double orthogonality to 1e-10 and
eigen-residual to 1e-8 (relative to the spectral radius).  Characteristic
polynomials are exact integer objects computed by the Faddeev-LeVerrier
recurrence, never from floating eigenvalues, so polynomial identities can be
checked coefficient for coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import Graph
from .polynomials import IntPolynomial

EXACT_POLY_LIMIT = 64
ORTHO_TOL = 1e-10
RESIDUAL_TOL = 1e-8
SIGN_TOL = 1e-9


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues sorted descending, sign-canonicalized eigenvector columns.

    groups partitions the 0-based frequency indices into maximal runs of
    numerically equal eigenvalues (gap <= mult_tol between neighbors).
    """

    eigenvalues: np.ndarray
    X: np.ndarray
    groups: tuple[tuple[int, ...], ...]
    mult_tol: float

    @property
    def n(self) -> int:
        return self.eigenvalues.size

    def group_of(self, k: int) -> tuple[int, ...]:
        """Multiplicity group containing 1-based frequency index k (0-based out)."""
        kk = _check_freq(self, k)
        for grp in self.groups:
            if kk in grp:
                return grp
        raise ValueError(f"frequency {k} not covered by any group")

    def is_simple(self, k: int) -> bool:
        return len(self.group_of(k)) == 1

    @property
    def all_simple(self) -> bool:
        return all(len(grp) == 1 for grp in self.groups)

    def vector(self, k: int) -> np.ndarray:
        return self.X[:, _check_freq(self, k)]


def _check_freq(dec: SpectralDecomposition, k: int) -> int:
    if not isinstance(k, (int, np.integer)):
        raise ValueError(f"frequency index must be an integer, got {k!r}")
    if not 1 <= k <= dec.n:
        raise ValueError(f"frequency index {k} out of range 1..{dec.n}")
    return int(k) - 1


def default_mult_tol(eigenvalues: np.ndarray) -> float:
    return 1e-7 * max(1.0, float(np.abs(eigenvalues).max()))


def decompose(g: Graph, mult_tol: float | None = None) -> SpectralDecomposition:
    """Dense symmetric eigendecomposition with deterministic ordering.

    Eigenvalues come out descending (stable tie order by the eigensolver's
    ascending output index).  Each eigenvector column is sign-canonicalized:
    positive component sum; when the sum is negligible, the largest-magnitude
    component is made positive.  Raises ArithmeticError with the residuals if
    the solver output violates the orthogonality/residual contract.
    """
    a = g.adj.astype(float)
    vals, vecs = np.linalg.eigh(a)
    order = np.argsort(-vals, kind="stable")
    lam = vals[order]
    X = vecs[:, order]

    for k in range(g.n):
        w = X[:, k].sum()
        if w < -SIGN_TOL:
            X[:, k] = -X[:, k]
        elif abs(w) <= SIGN_TOL:
            lead = int(np.argmax(np.abs(X[:, k])))
            if X[lead, k] < 0:
                X[:, k] = -X[:, k]

    ortho1 = float(np.abs(X.T @ X - np.eye(g.n)).max())
    ortho2 = float(np.abs(X @ X.T - np.eye(g.n)).max())
    resid = float(np.abs(a @ X - X * lam).max())
    scale = max(1.0, float(np.abs(lam).max()))
    if ortho1 > ORTHO_TOL or ortho2 > ORTHO_TOL or resid > RESIDUAL_TOL * scale:
        raise ArithmeticError(
            "eigendecomposition failed its residual contract: "
            f"|X'X-I|={ortho1:.3g}, |XX'-I|={ortho2:.3g}, |AX-XL|={resid:.3g}"
        )

    if mult_tol is None:
        mult_tol = default_mult_tol(lam)
    groups: list[tuple[int, ...]] = []
    start = 0
    for k in range(1, g.n + 1):
        if k == g.n or lam[k - 1] - lam[k] > mult_tol:
            groups.append(tuple(range(start, k)))
            start = k
    X.setflags(write=False)
    lam.setflags(write=False)
    return SpectralDecomposition(lam, X, tuple(groups), float(mult_tol))


# ---------------------------------------------------------------------------
# Exact characteristic polynomial via Faddeev-LeVerrier over Python integers.


def _int_matmul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n = len(a)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def char_poly_int_matrix(mat) -> IntPolynomial:
    """Exact det(M - xI) for any square integer matrix, lowest power first."""
    a = [[int(v) for v in row] for row in mat]
    n = len(a)
    # Faddeev-LeVerrier for p(x) = det(xI - M); every division below is exact.
    m = [[0] * n for _ in range(n)]
    c = [0] * (n + 1)
    c[n] = 1
    for k in range(1, n + 1):
        m = _int_matmul(a, m)
        for i in range(n):
            m[i][i] += c[n - k + 1]
        t = sum(sum(a[i][s] * m[s][i] for s in range(n)) for i in range(n))
        c[n - k] = -t // k
    sign = -1 if n % 2 else 1
    return IntPolynomial(tuple(sign * v for v in c))


def exact_det(mat) -> int:
    """Exact determinant of an integer matrix (constant term of det(M - xI))."""
    return int(char_poly_int_matrix(mat).coeffs[0])


def char_poly_exact(g: Graph, limit: int = EXACT_POLY_LIMIT) -> IntPolynomial:
    """Exact integer coefficients of det(A - xI), lowest power first."""
    if g.n > limit:
        raise ValueError(f"exact characteristic polynomial limited to n <= {limit}, got {g.n}")
    return char_poly_int_matrix(g.adj)


def det_shift(g: Graph, lam: float) -> float:
    """det(A - lam*I) by LU factorization with partial pivoting."""
    return float(np.linalg.det(g.adj - lam * np.eye(g.n)))


def char_poly_derivative_at(dec: SpectralDecomposition, k: int) -> float:
    """Derivative of det(A - xI) at a simple eigenvalue, via the product of
    eigenvalue gaps.  Errors out on repeated eigenvalues, where it vanishes."""
    kk = _check_freq(dec, k)
    if not dec.is_simple(k):
        raise ValueError(
            f"eigenvalue {dec.eigenvalues[kk]:.6g} has multiplicity > 1: "
            "derivative vanishes; use the multiplicity-2 path"
        )
    lam = dec.eigenvalues
    gaps = np.delete(lam, kk) - lam[kk]
    sign = -1.0 if dec.n % 2 else 1.0
    # (-1)^N * prod(lam_k - lam_j) = sign * prod(-gaps)
    return float(sign * np.prod(-gaps))


def second_derivative_at_group(dec: SpectralDecomposition, group: tuple[int, ...]) -> float:
    """Second derivative of det(A - xI) at a multiplicity-2 eigenvalue."""
    if len(group) != 2:
        raise ValueError(f"expected a multiplicity group of size 2, got size {len(group)}")
    lam = dec.eigenvalues
    mu = float(lam[list(group)].mean())
    rest = np.delete(lam, list(group))
    # det(A - xI) = prod_j (lam_j - x); with a double root the second
    # derivative at mu is 2 * prod over the remaining gaps.
    return float(2.0 * np.prod(rest - mu))


# ---------------------------------------------------------------------------
# Exact integer matrix powers and walk counts.


def _int_eye(n: int, exact: bool) -> np.ndarray:
    if not exact:
        return np.eye(n, dtype=np.int64)
    out = np.zeros((n, n), dtype=object)
    for i in range(n):
        out[i, i] = 1
    return out


def _power_fits_int64(g: Graph, m: int) -> bool:
    # entries of A^m are bounded by (max row sum)^m
    r = float(g.degrees.max()) if g.n else 0.0
    return r <= 1.0 or m * np.log2(r) < 62.0


def matrix_power_exact(g: Graph, m: int) -> np.ndarray:
    """A**m with exact integer entries (object dtype when int64 could overflow)."""
    if m < 0:
        raise ValueError("exponent must be >= 0")
    if m > 32:
        raise ValueError(f"matrix power limited to m <= 32, got {m}")
    exact = not _power_fits_int64(g, m)
    out = _int_eye(g.n, exact)
    base = g.adj.astype(object if exact else np.int64)
    e = m
    while e:
        if e & 1:
            out = out @ base
        e >>= 1
        if e:
            base = base @ base
    return out


def matrix_power_entry(g: Graph, m: int, i: int, j: int) -> int:
    """Exact number of m-hop walks from node i to node j (1-based)."""
    from .graphs import _check_node

    ii = _check_node(g, i)
    jj = _check_node(g, j)
    return int(matrix_power_exact(g, m)[ii, jj])


def walk_counts(g: Graph, m_max: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(W_m, N_m) for m = 0..m_max: closed-walk counts trace(A^m) and total
    walk counts u'A^m u, both as exact integers."""
    if m_max < 0:
        raise ValueError("m_max must be >= 0")
    W = []
    Nw = []
    exact = not _power_fits_int64(g, m_max)
    acc = _int_eye(g.n, exact)
    a = g.adj.astype(object if exact else np.int64)
    for m in range(m_max + 1):
        W.append(int(sum(int(acc[i, i]) for i in range(g.n))))
        Nw.append(int(acc.astype(object).sum()))
        if m < m_max:
            acc = acc @ a
    return tuple(W), tuple(Nw)
