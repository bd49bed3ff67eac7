"""Spectral embeddings: canonical, symmetrized, explicit; edge-isometry and
sphericity diagnostics; orbit-sum vectors; Cayley character vectors; and
Cartesian-product embeddings."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigenvalueError, HypothesisViolatedError
from .graphs import CayleySpec, Graph, cartesian_product, laplacian
from .spectra import EigenspaceDecomposition
from .symmetry import OrbitPartition, PermutationSet, group_closure, orbits

RESIDUAL_TOL = 1e-7
ISO_TOL = 1e-7


@dataclass(frozen=True)
class Embedding:
    """n points in R^k (rows of `points`) attached to one eigenspace."""

    points: np.ndarray
    eigenvalue: float
    source: str

    @property
    def dim(self) -> int:
        return self.points.shape[1]


def make_embedding(
    g: Graph,
    points: np.ndarray,
    eigenvalue: float,
    source: str,
    tol: float = RESIDUAL_TOL,
) -> Embedding:
    """Validate eigenspace residual, centering, and nontriviality."""
    P = np.asarray(points, dtype=float)
    if P.ndim == 1:
        P = P[:, None]
    if P.shape[0] != g.n:
        raise ValueError("points must have one row per vertex")
    scale = float(np.max(np.abs(P)))
    if scale == 0.0:
        raise ValueError("zero embedding")
    L = laplacian(g)
    resid = np.max(np.abs(L @ P - eigenvalue * P))
    if resid > tol * (1.0 + abs(eigenvalue)) * max(scale, 1.0):
        raise EigenvalueError(
            f"columns are not in the eigenspace of {eigenvalue}: residual {resid:.3e}"
        )
    if np.max(np.abs(P.sum(axis=0))) > 1e-6 * max(scale, 1.0) * g.n:
        raise EigenvalueError("embedding is not centered")
    return Embedding(points=P, eigenvalue=float(eigenvalue), source=source)


def canonical_embedding(g: Graph, dec: EigenspaceDecomposition, lam: float) -> Embedding:
    """Rows of an orthonormal eigenspace basis."""
    idx = dec.index_of(lam)
    if abs(dec.eigenvalues[idx]) <= dec.group_tol:
        raise EigenvalueError("canonical embedding needs a positive eigenvalue")
    return Embedding(
        points=dec.bases[idx],
        eigenvalue=float(dec.eigenvalues[idx]),
        source="canonical",
    )


def explicit_embedding(g: Graph, columns: np.ndarray, eigenvalue: float) -> Embedding:
    """Embedding from user-supplied eigenspace columns."""
    return make_embedding(g, columns, eigenvalue, source="explicit")


def rayleigh_eigenvalue(g: Graph, phi: np.ndarray, tol: float = RESIDUAL_TOL) -> float:
    """Eigenvalue of phi, verified by residual; raises if phi is not an
    eigenvector (up to tol)."""
    phi = np.asarray(phi, dtype=float)
    nrm = float(np.linalg.norm(phi))
    if nrm == 0:
        raise ValueError("zero vector")
    L = laplacian(g)
    lam = float(phi @ L @ phi) / (nrm * nrm)
    resid = np.max(np.abs(L @ phi - lam * phi))
    if resid > tol * (1.0 + abs(lam)) * nrm:
        raise EigenvalueError(f"vector is not an eigenvector: residual {resid:.3e}")
    return lam


def symmetrized_embedding(
    g: Graph,
    phi: np.ndarray,
    p: PermutationSet,
    group_cap: int = 10**6,
) -> Embedding:
    """One column per group element sigma, with entry i equal to
    phi[sigma(i)].  The group generated by p.gens is enumerated explicitly."""
    lam = rayleigh_eigenvalue(g, phi)
    if lam <= 0:
        raise EigenvalueError("symmetrized embedding needs a positive eigenvalue")
    elements = group_closure(p, cap=group_cap)
    phi = np.asarray(phi, dtype=float)
    cols = np.stack([phi[np.array(sigma)] for sigma in elements], axis=1)
    return make_embedding(g, cols, lam, source=f"symmetrized[{len(elements)}]")


@dataclass(frozen=True)
class EdgeLengthProfile:
    lengths: np.ndarray
    is_edge_isometric: bool
    c: float
    vertex_norms: np.ndarray
    is_spherical: bool
    radius: float
    tol: float


def edge_length_profile(
    e: Embedding, g: Graph, tol: float = ISO_TOL
) -> EdgeLengthProfile:
    """Per-edge lengths and sphericity diagnostics.

    Edge-isometric requires max-min <= tol*(1+max) and min > tol (zero-length
    edges count as failures since the common length must be positive).
    """
    P = e.points
    lengths = np.array([np.linalg.norm(P[i] - P[j]) for i, j in g.edges])
    norms = np.linalg.norm(P, axis=1)
    if len(lengths):
        iso = bool(
            lengths.max() - lengths.min() <= tol * (1.0 + lengths.max())
            and lengths.min() > tol
        )
        c = float(lengths.mean())
    else:
        iso, c = False, 0.0
    spherical = bool(norms.max() - norms.min() <= tol * (1.0 + norms.max()))
    return EdgeLengthProfile(
        lengths=lengths,
        is_edge_isometric=iso,
        c=c,
        vertex_norms=norms,
        is_spherical=spherical,
        radius=float(norms.mean()),
        tol=tol,
    )


def unit_edge_normalized(e: Embedding, g: Graph, tol: float = ISO_TOL) -> Embedding:
    """Rescale an edge-isometric embedding so all edges have length 1."""
    prof = edge_length_profile(e, g, tol)
    if not prof.is_edge_isometric:
        raise HypothesisViolatedError("embedding is not edge-isometric")
    return Embedding(
        points=e.points / prof.c, eigenvalue=e.eigenvalue, source=e.source
    )


@dataclass(frozen=True)
class OrbitVector:
    """One orbit-summed product per edge orbit, ordered by the orbit's
    lexicographically smallest edge."""

    values: tuple[float, ...]
    representatives: tuple[tuple[int, int], ...]


def pair_sums(phi: np.ndarray, elements: list[tuple[int, ...]]) -> np.ndarray:
    """Matrix M with M[i, j] = sum over sigma of phi[sigma(i)] * phi[sigma(j)]."""
    phi = np.asarray(phi, dtype=float)
    S = np.stack([phi[np.array(sigma)] for sigma in elements], axis=0)
    return S.T @ S


def phi_psi(
    g: Graph,
    phi: np.ndarray,
    p: PermutationSet,
    orb: OrbitPartition | None = None,
    group_cap: int = 10**6,
    well_defined_tol: float = 1e-9,
) -> OrbitVector:
    """Per edge orbit, sum over the group of phi[sigma(i)]*phi[sigma(j)] at the
    orbit representative; the value is asserted equal across orbit members."""
    rayleigh_eigenvalue(g, phi)  # membership check; raises if not an eigenvector
    if orb is None:
        orb = orbits(g, p)
    elements = group_closure(p, cap=group_cap)
    M = pair_sums(phi, elements)
    scale = max(1.0, float(np.max(np.abs(M))))
    values, reps = [], []
    for block in orb.edge_orbits:
        vals = [M[g.edges[k][0], g.edges[k][1]] for k in block]
        if max(vals) - min(vals) > well_defined_tol * scale:
            raise AssertionError("orbit sum varies across an edge orbit")
        rep = g.edges[block[0]]
        values.append(float(M[rep[0], rep[1]]))
        reps.append(rep)
    return OrbitVector(values=tuple(values), representatives=tuple(reps))


def chi_gamma(spec: CayleySpec, k: int, cross_check_tol: float = 1e-9) -> np.ndarray:
    """Vector (sum_g chi(g) * conj(chi(g o s)))_{s in S} for the k-th
    character; equals |Gamma| * conj(chi(s)) by the homomorphism property.
    Both forms are computed and cross-asserted."""
    elems = spec.elements()
    N = spec.size
    if not 0 <= k < N:
        raise ValueError(f"character index {k} out of range")
    kvec = elems[k]
    orders = np.array(spec.orders, dtype=float)
    arr = np.array(elems, dtype=float)
    chi = np.exp(2j * np.pi * (arr @ (np.array(kvec) / orders)))
    out = np.empty(len(spec.gens), dtype=complex)
    for t, s in enumerate(spec.gens):
        shifted = np.array([spec.index_of(spec.add(gel, s)) for gel in elems])
        brute = np.sum(chi * np.conj(chi[shifted]))
        closed = N * np.conj(chi[spec.index_of(s)])
        if abs(brute - closed) > cross_check_tol * N:
            raise AssertionError("character sum disagrees with the closed form")
        out[t] = closed
    return out


def product_embedding(
    gG: Graph,
    eG: Embedding,
    gH: Graph,
    eH: Embedding,
    mode: str,
    tol: float = 1e-8,
) -> tuple[Graph, Embedding]:
    """Edge-isometric embedding of the Cartesian product.

    mode="lambda2": requires equal positive eigenvalues and edge-isometric
    inputs; output columns are [U_G (x) 1 | 1 (x) U_H] after unit-edge
    normalization, at the common eigenvalue.

    mode="lambdamax": requires spherical edge-isometric inputs whose
    unit-edge radii agree (equivalently equal avg-degree / (2 lambda_max));
    output is the row-wise tensor embedding at the sum of eigenvalues, which
    is also spherical.
    """
    profG = edge_length_profile(eG, gG)
    profH = edge_length_profile(eH, gH)
    prod = cartesian_product(gG, gH)
    if mode == "lambda2":
        if abs(eG.eigenvalue - eH.eigenvalue) > tol * (1.0 + abs(eG.eigenvalue)):
            raise HypothesisViolatedError(
                f"eigenvalues differ: {eG.eigenvalue} vs {eH.eigenvalue}"
            )
        if not profG.is_edge_isometric:
            raise HypothesisViolatedError("first factor embedding not edge-isometric")
        if not profH.is_edge_isometric:
            raise HypothesisViolatedError("second factor embedding not edge-isometric")
        UG = eG.points / profG.c
        UH = eH.points / profH.c
        cols = np.hstack(
            [np.kron(UG, np.ones((gH.n, 1))), np.kron(np.ones((gG.n, 1)), UH)]
        )
        emb = make_embedding(prod, cols, eG.eigenvalue, source="product-lambda2")
        return prod, emb
    if mode == "lambdamax":
        for prof, which in ((profG, "first"), (profH, "second")):
            if not prof.is_edge_isometric:
                raise HypothesisViolatedError(f"{which} factor not edge-isometric")
            if not prof.is_spherical:
                raise HypothesisViolatedError(f"{which} factor not spherical")
        rG = profG.radius / profG.c
        rH = profH.radius / profH.c
        if abs(rG - rH) > tol * (1.0 + rG):
            raise HypothesisViolatedError(
                f"unit-edge radii differ: {rG} vs {rH}"
            )
        UG = eG.points / profG.c
        UH = eH.points / profH.c
        cols = np.kron(UG, UH)
        emb = make_embedding(
            prod, cols, eG.eigenvalue + eH.eigenvalue, source="product-lambdamax"
        )
        return prod, emb
    raise ValueError(f"unknown product mode {mode!r}")


def embedding_to_csv(e: Embedding) -> str:
    """CSV export: vertex index followed by coordinates."""
    lines = ["vertex," + ",".join(f"x{k}" for k in range(e.dim))]
    for i, row in enumerate(e.points):
        lines.append(f"{i}," + ",".join(f"{v:.12g}" for v in row))
    return "\n".join(lines) + "\n"
