import math

import numpy as np
import pytest

from spectramark import (
    beta_normalization_check,
    centrality_report,
    complete,
    component_product,
    cycle,
    decompose,
    erdos_renyi,
    parse_graph,
    path,
    r_decomposition,
    redundancy,
    resolvent_squared,
    signed_components,
    squared_component_det,
    squared_component_mult2,
    star,
    walk_expansion_matrix,
    walk_expansion_squared,
)
from spectramark.centrality import walk_expansion_coefficients

SQRT2 = math.sqrt(2)


# --- determinantal squared components -------------------------------------


def test_k2_squared_component():
    g = complete(2)
    dec = decompose(g)
    # -det([-1]) / 2 = 1/2
    assert squared_component_det(g, dec, 1, 1) == pytest.approx(0.5)


def test_p3_center_squared_components():
    g = path(3)
    dec = decompose(g)
    # -det(diag(-s2,-s2)) / (-4) = -2 / -4
    assert squared_component_det(g, dec, 2, 1) == pytest.approx(0.5)
    # center is an exact zero at the zero frequency
    assert squared_component_det(g, dec, 2, 2) == pytest.approx(0.0, abs=1e-12)


def test_squared_component_multiplicity_error():
    g = complete(3)
    dec = decompose(g)
    with pytest.raises(ValueError, match="mult"):
        squared_component_det(g, dec, 1, 2)


def test_one_node_graph():
    g = parse_graph("0\n", "adjacency_matrix")
    dec = decompose(g)
    assert squared_component_det(g, dec, 1, 1) == pytest.approx(1.0)
    assert resolvent_squared(g, dec, 1, 1) == pytest.approx(1.0)


def test_oracle_equivalence_on_corpus(corpus50):
    worst = 0.0
    for g in corpus50[:12]:
        dec = decompose(g)
        y = dec.X**2
        for k in range(1, g.n + 1):
            for j in range(1, g.n + 1):
                v = squared_component_det(g, dec, j, k)
                worst = max(worst, abs(v - y[j - 1, k - 1]))
    assert worst <= 1e-7


# --- multiplicity two -------------------------------------------------------


def test_k3_mult2_brute_force_oracle():
    g = complete(3)
    dec = decompose(g)
    grp = tuple(k + 1 for k in dec.groups[1])
    # brute-force 3x3 eigenspace mass: each row sums to 1, principal is 1/3,
    # so the two-dimensional eigenspace holds 2/3 per node; halved = 1/3
    mass = (dec.X[:, list(dec.groups[1])] ** 2).sum(axis=1)
    assert np.allclose(mass, 2 / 3)
    for j in (1, 2, 3):
        assert squared_component_mult2(g, dec, j, grp) == pytest.approx(1 / 3)


def test_c4_mult2_by_symmetry():
    g = cycle(4)
    dec = decompose(g)
    grp = tuple(k + 1 for k in dec.groups[1])
    assert squared_component_mult2(g, dec, 1, grp) == pytest.approx(0.25)


def test_mult2_rejects_simple_spectrum():
    g = path(3)  # the 3-node star; simple spectrum
    dec = decompose(g)
    with pytest.raises(ValueError, match="not a multiplicity group|size 2"):
        squared_component_mult2(g, dec, 1, (1, 2))


# --- component products ------------------------------------------------------


def test_product_reduces_to_square():
    g = path(3)
    dec = decompose(g)
    assert component_product(g, dec, 2, 2, 1) == pytest.approx(0.5)


def test_k2_product_hand_minor():
    g = complete(2)
    dec = decompose(g)
    # minor of (A - I) without row 1 / col 2 is [1]; sign (-1)^(1+2+1) = +1
    assert component_product(g, dec, 1, 2, 1) == pytest.approx(0.5)


def test_p3_product_signs_match_eigensolver():
    g = path(3)
    dec = decompose(g)
    # x_2 = (1,0,-1)/sqrt2 after canon: product of ends is -1/2
    assert component_product(g, dec, 1, 3, 2) == pytest.approx(-0.5)
    x = dec.X
    for k in (1, 2, 3):
        for j in (1, 2, 3):
            for m in (1, 2, 3):
                got = component_product(g, dec, j, m, k)
                assert got == pytest.approx(x[j - 1, k - 1] * x[m - 1, k - 1], abs=1e-9)


def test_product_orthogonality_sum():
    # summing the product formula over frequencies resolves the identity matrix
    g = erdos_renyi(8, 0.45, seed=0)
    dec = decompose(g)
    assert dec.all_simple
    for j, m in ((1, 2), (3, 7), (5, 5)):
        total = sum(component_product(g, dec, j, m, k) for k in range(1, g.n + 1))
        assert total == pytest.approx(1.0 if j == m else 0.0, abs=1e-8)


# --- signed components -------------------------------------------------------


def test_signed_components_p3_all_ones_vector():
    g = path(3)
    dec = decompose(g)
    got = signed_components(g, dec, 1, np.ones(3))
    assert np.allclose(got, [0.5, SQRT2 / 2, 0.5], atol=1e-9)


def test_signed_components_regular_graph_needs_other_b():
    g = cycle(4)
    dec = decompose(g)
    with pytest.raises(ValueError, match="orthogonal"):
        signed_components(g, dec, 4, np.ones(4))  # u is orthogonal to x_4


def test_signed_components_default_b_fallback():
    g = cycle(4)
    dec = decompose(g)
    got = signed_components(g, dec, 4)  # falls back internally
    assert np.allclose(np.abs(got), np.abs(dec.X[:, 3]), atol=1e-8)


def test_signed_components_basis_vector_ratio():
    g = erdos_renyi(7, 0.5, seed=9)
    dec = decompose(g)
    assert dec.all_simple
    k = 2
    x = dec.X[:, k - 1]
    m = int(np.argmax(np.abs(x)))
    e = np.zeros(7)
    e[m] = 1.0
    got = signed_components(g, dec, k, e)
    assert np.allclose(got / got[m], x / x[m], atol=1e-7)


def test_signed_components_self_consistency():
    g = erdos_renyi(9, 0.4, seed=12)
    dec = decompose(g)
    b = g.degrees.astype(float)
    k = 3
    got = signed_components(g, dec, k, b)
    beta = float(b @ dec.X[:, k - 1])
    assert float(b @ got) == pytest.approx(beta, rel=1e-8)


# --- squared eigenvalue equation --------------------------------------------


def test_r_decomposition_k2_equality_case():
    g = complete(2)
    dec = decompose(g)
    ri = r_decomposition(g, dec)
    assert np.allclose(ri.r, 0.0, atol=1e-12)
    assert dec.X[0, 0] ** 2 == pytest.approx(1 / (1 / 1 + 1))


def test_r_decomposition_p3_plugin_oracle():
    g = path(3)
    dec = decompose(g)
    ri = r_decomposition(g, dec)
    # (x_1)_2^2 = 1/2 and lambda_1^2/d_2 + 1 = 2, so r = 1 - 1/2*2 = 0
    assert ri.r[1, 0] == pytest.approx(0.0, abs=1e-12)


def test_r_decomposition_reconstruction_and_sums(corpus50):
    for g in corpus50[:10]:
        dec = decompose(g)
        ri = r_decomposition(g, dec)
        d = g.degrees.astype(float)
        lam = dec.eigenvalues
        pred = (1.0 - ri.r) / (lam[None, :] ** 2 / d[:, None] + 1.0)
        assert np.abs(pred - dec.X**2).max() <= 1e-9
        assert np.all(ri.r >= -1e-9) and np.all(ri.r <= 1 + 1e-9)
        assert np.abs((1 - ri.r).sum(axis=1) - 2).max() <= 1e-7
        assert np.abs(ri.non_neighbor_mass + ri.neighbor_spread - ri.r).max() <= 1e-12


def test_r_decomposition_rejects_isolated():
    g = parse_graph("0 1 0\n1 0 0\n0 0 0\n", "adjacency_matrix")
    with pytest.raises(ValueError, match="isolated"):
        r_decomposition(g, decompose(g))


# --- redundancy ---------------------------------------------------------------


def test_redundancy_p3():
    g = path(3)
    rep = centrality_report(g, decompose(g))
    assert list(rep.redundancy) == [0, 1, 0]


def test_redundancy_k3_group_invariant():
    g = complete(3)
    rep = centrality_report(g, decompose(g))
    assert list(rep.redundancy) == [0, 0, 0]


def test_redundancy_star_center_counts_null_space():
    g = star(5)
    rep = centrality_report(g, decompose(g))
    assert rep.redundancy[0] == 3  # center vanishes on the whole 0-eigenspace
    assert list(rep.redundancy[1:]) == [0, 0, 0, 0]


def test_redundancy_custom_tolerance():
    g = path(3)
    rep = centrality_report(g, decompose(g))
    assert list(redundancy(rep, zero_tol=2.0)) == [3, 3, 3]


# --- walk expansion ------------------------------------------------------------


def test_walk_k2_hand_coefficients():
    g = complete(2)
    dec = decompose(g)
    b = walk_expansion_coefficients(g, dec, 1)
    assert np.allclose(b, [1.0, 1.0])  # x + 1
    assert walk_expansion_squared(g, dec, 1, 1) == pytest.approx(0.5)


def test_walk_p3_zero_component():
    g = path(3)
    dec = decompose(g)
    assert walk_expansion_squared(g, dec, 2, 2) == pytest.approx(0.0, abs=1e-10)


def test_walk_matrix_matches_eigensolver(corpus50):
    for g in corpus50[:8]:
        dec = decompose(g)
        assert np.abs(walk_expansion_matrix(g, dec) - dec.X**2).max() <= 1e-5


def test_walk_rejects_degenerate():
    g = complete(3)
    with pytest.raises(ValueError, match="simple"):
        walk_expansion_squared(g, decompose(g), 1, 1)


# --- resolvent -------------------------------------------------------------------


def test_resolvent_k2_hand_case():
    g = complete(2)
    dec = decompose(g)
    assert resolvent_squared(g, dec, 1, 1) == pytest.approx(0.5)


def test_resolvent_zero_component_error():
    g = path(3)
    dec = decompose(g)
    with pytest.raises(ValueError, match="zero"):
        resolvent_squared(g, dec, 2, 2)


def test_resolvent_matches_determinantal_er12():
    g = erdos_renyi(12, 0.3, seed=501)
    dec = decompose(g)
    assert dec.all_simple
    for k in range(1, 13):
        for j in range(1, 13):
            try:
                v = resolvent_squared(g, dec, j, k)
            except ValueError:
                continue
            assert v == pytest.approx(squared_component_det(g, dec, j, k), abs=1e-6)


# --- normalization identities ------------------------------------------------


def test_beta_checks_all_ones_p3():
    g = path(3)
    dec = decompose(g)
    chk = beta_normalization_check(g, dec, 1, np.ones(3))
    assert chk.beta == pytest.approx(1 + SQRT2 / 2)
    assert chk.passed


def test_beta_basis_vector():
    g = erdos_renyi(8, 0.4, seed=7)
    dec = decompose(g)
    e1 = np.zeros(8)
    e1[0] = 1.0
    chk = beta_normalization_check(g, dec, 2, e1)
    assert chk.beta == pytest.approx(float(dec.X[0, 1]))
    assert chk.passed


def test_beta_eigenvector_itself():
    g = erdos_renyi(9, 0.4, seed=19)
    dec = decompose(g)
    chk = beta_normalization_check(g, dec, 4, dec.X[:, 3])
    assert chk.beta == pytest.approx(1.0)
    assert chk.passed


def test_beta_rejects_orthogonal_b():
    g = cycle(4)  # regular: u is orthogonal to the simple lambda = -2 vector
    dec = decompose(g)
    with pytest.raises(ValueError, match="orthogonal"):
        beta_normalization_check(g, dec, 4, np.ones(4))


# --- full report ----------------------------------------------------------------


def test_report_doubly_stochastic(corpus50):
    for g in corpus50[:8]:
        rep = centrality_report(g, decompose(g))
        assert np.abs(rep.Y.sum(axis=0) - 1).max() <= 1e-7
        assert np.abs(rep.Y.sum(axis=1) - 1).max() <= 1e-7
        assert rep.Y.min() >= -1e-10 and rep.Y.max() <= 1 + 1e-10
        assert rep.residuals.max() <= 1e-7


def test_report_eigenvalue_annihilation():
    g = erdos_renyi(14, 0.35, seed=100)
    dec = decompose(g)
    rep = centrality_report(g, dec)
    assert np.abs(rep.Y @ dec.eigenvalues).max() <= 1e-6 * abs(dec.eigenvalues[0])


def test_report_method_tags():
    g = cycle(4)
    rep = centrality_report(g, decompose(g))
    assert rep.method[0, 0] == "determinantal"
    assert rep.method[0, 1] == "multiplicity2"
    rep2 = centrality_report(g, decompose(g), method="eigensolver")
    assert set(rep2.method.ravel()) == {"eigensolver"}


def test_report_methods_agree():
    g = erdos_renyi(10, 0.4, seed=52)
    dec = decompose(g)
    for method in ("determinantal", "eigensolver", "walk", "resolvent"):
        rep = centrality_report(g, dec, method=method)
        assert rep.residuals.max() <= 1e-5, method


def test_report_walk_requires_simple():
    with pytest.raises(ValueError, match="simple"):
        centrality_report(complete(3), decompose(complete(3)), method="walk")


def test_ratio_identity(corpus50):
    from spectramark import delete_node, det_shift

    g = corpus50[0]
    dec = decompose(g)
    y = dec.X**2
    for k in (1, 2):
        lam = float(dec.eigenvalues[k - 1])
        dets = np.array([det_shift(delete_node(g, j), lam) for j in range(1, g.n + 1)])
        for j in range(g.n):
            for m in range(g.n):
                if abs(dets[m]) > 1e-9 and y[m, k - 1] > 1e-9:
                    assert y[j, k - 1] / y[m, k - 1] == pytest.approx(
                        dets[j] / dets[m], rel=1e-6, abs=1e-6
                    )


def test_upper_bound_equality_condition_disconnected():
    # K_3 plus K_2: bound 1/(1 + lambda_k^2/d_i) is attained at the principal
    # frequency for the K_3 block nodes
    g = parse_graph("1 2\n1 3\n2 3\n4 5\n")
    dec = decompose(g)
    y = dec.X**2
    for i in range(3):
        assert y[i, 0] == pytest.approx(1 / (1 + dec.eigenvalues[0] ** 2 / 2), abs=1e-9)


def test_closed_walk_derivative_identity():
    # the derivative at each eigenvalue equals the b-weighted closed-walk sum
    from spectramark.spectral import char_poly_derivative_at, walk_counts

    g = erdos_renyi(10, 0.4, seed=52)
    dec = decompose(g)
    assert dec.all_simple
    W = np.array(walk_counts(g, g.n - 1)[0], dtype=float)
    sign = -1.0 if g.n % 2 else 1.0
    for k in range(1, g.n + 1):
        b = walk_expansion_coefficients(g, dec, k)
        cp = char_poly_derivative_at(dec, k)
        assert sign * float(W @ b) == pytest.approx(cp, rel=1e-5)
