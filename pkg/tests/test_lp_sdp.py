"""Phase-1 simplex oracle checks, SDP feasibility, and rank reduction."""

import numpy as np
import pytest

from confrigid.catalog import catalog
from confrigid.graphs import circulant, laplacian
from confrigid.lp import phase1_feasibility
from confrigid.sdp import (
    build_sdp_instance,
    rank_one_vector,
    rank_reduce,
    sdp_feasibility,
)
from confrigid.spectra import eigendecompose
from confrigid.symmetry import cayley_translations, find_automorphisms, orbits


def test_phase1_feasible_system():
    # x1 + x2 = 1, x1 - x2 = 0 -> x = (1/2, 1/2)
    A = np.array([[1.0, 1.0], [1.0, -1.0]])
    b = np.array([1.0, 0.0])
    res = phase1_feasibility(A, b)
    assert res.feasible
    assert np.allclose(A @ res.x, b, atol=1e-9)
    assert np.all(res.x >= -1e-12)


def test_phase1_infeasible_system():
    # x1 + x2 = 1 and x1 + x2 = 2 cannot both hold
    A = np.array([[1.0, 1.0], [1.0, 1.0]])
    b = np.array([1.0, 2.0])
    res = phase1_feasibility(A, b)
    assert not res.feasible
    assert res.objective > 0.1


def test_phase1_nonnegativity_binds():
    # x1 - x2 = 1 with x >= 0 is feasible; x1 + x2 = -1 is not
    res = phase1_feasibility(np.array([[1.0, -1.0]]), np.array([1.0]))
    assert res.feasible
    res = phase1_feasibility(np.array([[1.0, 1.0]]), np.array([-1.0]))
    assert not res.feasible


def test_phase1_random_consistent_systems():
    rng = np.random.default_rng(3)
    for _ in range(20):
        m, n = 4, 7
        A = rng.standard_normal((m, n))
        x0 = rng.uniform(0.1, 1.0, size=n)
        b = A @ x0  # feasible by construction
        res = phase1_feasibility(A, b)
        assert res.feasible
        assert np.allclose(A @ res.x, b, atol=1e-8)


def test_sdp_feasible_on_edge_transitive_graph():
    g = catalog("petersen")
    dec = eigendecompose(laplacian(g))
    U = dec.basis_for(dec.eigenvalues[1])
    p = find_automorphisms(g)
    inst = build_sdp_instance(g, U, p)
    res = sdp_feasibility(inst)
    assert res.status == "feasible"
    assert inst.residual(res.X) <= 1e-6
    assert np.min(np.linalg.eigvalsh(res.X)) >= -1e-9


def test_sdp_trivial_group_one_constraint_per_edge():
    g = catalog("cycle_5")
    dec = eigendecompose(laplacian(g))
    U = dec.basis_for(dec.eigenvalues[1])
    inst = build_sdp_instance(g, U)
    assert len(inst.orbit_mats) == g.m
    res = sdp_feasibility(inst)
    assert res.status == "feasible"


def test_rank_reduction_to_rank_one_circulant18():
    g = circulant(18, {1, 5})
    dec = eigendecompose(laplacian(g))
    U = dec.basis_for(dec.eigenvalues[1])
    p = cayley_translations(g.cayley_spec)
    orb = orbits(g, p)
    inst = build_sdp_instance(g, U, p, orb)
    assert len(inst.orbit_mats) == 2  # two edge orbits -> two constraints
    res = sdp_feasibility(inst)
    assert res.status == "feasible"
    X = rank_reduce(res.X, inst)
    a = rank_one_vector(X)
    assert a is not None
    assert inst.residual(np.outer(a, a)) <= 1e-6


def test_rank_one_vector_detection():
    a = np.array([1.0, -2.0, 0.5])
    assert np.allclose(rank_one_vector(np.outer(a, a)), a) or np.allclose(
        rank_one_vector(np.outer(a, a)), -a
    )
    assert rank_one_vector(np.eye(3)) is None
    assert rank_one_vector(np.zeros((2, 2))) is None
