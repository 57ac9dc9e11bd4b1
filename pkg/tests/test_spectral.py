from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from topoindex.degree_indices import degree_index
from topoindex.generators import complete, cycle, petersen, subdivision
from topoindex.graph import GraphError
from topoindex.spectral import (
    adjacency_spectrum,
    char_poly,
    closed_walk_count,
    closed_walk_moment,
    collatz_sinogowitz,
    eigen_symmetric,
    energy,
    skn_vertex_energy,
    skn_vertex_energy_numeric,
    sombor_matrix,
    sombor_spectrum,
    subdivision_charpoly_check,
    vertex_energies,
)


@given(st.integers(1, 24), st.integers(0, 2**31))
@settings(max_examples=40, deadline=None)
def test_jacobi_matches_lapack(n, seed):
    rng = np.random.default_rng(seed)
    a = rng.normal(size=(n, n))
    a = a + a.T
    s = eigen_symmetric(a)
    assert np.allclose(s.eigenvalues, np.sort(np.linalg.eigvalsh(a))[::-1], atol=1e-10)
    u = s.eigenvectors
    assert np.allclose(u.T @ u, np.eye(n), atol=1e-10)
    assert np.allclose(u @ np.diag(s.eigenvalues) @ u.T, a, atol=1e-9)


def test_jacobi_rejects_nonsymmetric():
    with pytest.raises(GraphError):
        eigen_symmetric(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_known_spectra():
    assert np.allclose(adjacency_spectrum(petersen()).eigenvalues, [3] + [1] * 5 + [-2] * 4)
    assert energy(complete(5)) == pytest.approx(8.0)
    assert energy(cycle(4)) == pytest.approx(4.0)


@given(graphs(max_n=8))
@settings(max_examples=50, deadline=None)
def test_vertex_energies_sum_to_energy(g):
    assert np.sum(vertex_energies(g)) == pytest.approx(energy(g), abs=1e-9)


@given(graphs(max_n=7), st.integers(0, 6))
@settings(max_examples=50, deadline=None)
def test_closed_walks_match_matrix_powers(g, k):
    a = g.adjacency_matrix().astype(np.int64)
    p = np.linalg.matrix_power(a, k)
    for v in range(g.n):
        assert closed_walk_count(g, v, k) == p[v, v]
        assert closed_walk_moment(g, v, k) == pytest.approx(p[v, v], abs=1e-7)


@given(graphs(max_n=9))
@settings(max_examples=50, deadline=None)
def test_char_poly_matches_numpy(g):
    ours = [float(c) for c in char_poly(g)]
    ref = np.poly(g.adjacency_matrix().astype(float)) if g.n else np.array([1.0])
    assert np.allclose(ours, ref, atol=1e-6)


def test_char_poly_small():
    assert [int(c) for c in char_poly(cycle(3))] == [1, 0, -3, -2]


@pytest.mark.parametrize("g", [cycle(5), complete(4), petersen()], ids=["C5", "K4", "Petersen"])
def test_subdivision_charpoly_identity(g):
    assert subdivision_charpoly_check(g).max_deviation <= 1e-6


def test_subdivision_charpoly_requires_regular():
    from topoindex.generators import path

    with pytest.raises(GraphError):
        subdivision_charpoly_check(path(3))


@pytest.mark.parametrize("n", range(2, 9))
def test_skn_closed_forms(n):
    orig, sub = skn_vertex_energy(n)
    e_orig, e_sub = skn_vertex_energy_numeric(n)
    assert np.allclose(e_orig, orig, atol=1e-6) and np.allclose(e_sub, sub, atol=1e-6)
    # independent route: LAPACK eigen-decomposition of the subdivision graph
    a = subdivision(complete(n)).adjacency_matrix().astype(float)
    w, u = np.linalg.eigh(a)
    ve = (u**2) @ np.abs(w)
    assert ve[0] == pytest.approx(orig, abs=1e-9) and ve[-1] == pytest.approx(sub, abs=1e-9)


@given(graphs(max_n=9))
@settings(max_examples=50, deadline=None)
def test_sombor_frobenius_is_twice_forgotten(g):
    s = sombor_matrix(g)
    assert np.allclose(s, s.T)
    assert np.sum(s * s) == pytest.approx(2 * degree_index(g, "F"), rel=1e-9)
    summary = sombor_spectrum(g)
    assert summary.frobenius_norm**2 == pytest.approx(2 * summary.forgotten, rel=1e-9)


def test_collatz_sinogowitz_zero_on_regular():
    assert collatz_sinogowitz(petersen()) == pytest.approx(0.0, abs=1e-10)
    assert math.isclose(collatz_sinogowitz(complete(3)), 0.0, abs_tol=1e-10)
