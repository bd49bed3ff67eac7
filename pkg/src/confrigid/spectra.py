"""Dense symmetric eigendecomposition with eigenvalue grouping, weighted
spectrum endpoints, and closed-form abelian Cayley spectra via characters."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DisconnectedError, EigenvalueError, NotSymmetricError
from .graphs import CayleySpec, Graph, laplacian


def default_group_tol(M: np.ndarray) -> float:
    scale = float(np.max(np.abs(M))) if M.size else 1.0
    return 1e-8 * max(scale, 1.0) * M.shape[0]


@dataclass
class EigenspaceDecomposition:
    """Eigenvalues grouped into eigenspaces under an explicit tolerance.

    eigenvalues are the distinct values, ascending; consecutive values differ
    by more than group_tol.  bases[i] is an n x multiplicities[i] matrix with
    orthonormal columns.  raw_eigenvalues is the full ungrouped spectrum.
    """

    eigenvalues: np.ndarray
    multiplicities: np.ndarray
    bases: list
    group_tol: float
    raw_eigenvalues: np.ndarray

    @property
    def n(self) -> int:
        return int(self.multiplicities.sum())

    def index_of(self, lam: float, tol: float | None = None) -> int:
        tol = self.group_tol if tol is None else tol
        d = np.abs(self.eigenvalues - lam)
        k = int(np.argmin(d))
        if d[k] > tol + 1e-12 * max(1.0, abs(lam)):
            raise EigenvalueError(f"no eigenvalue near {lam}")
        return k

    def basis_for(self, lam: float, tol: float | None = None) -> np.ndarray:
        return self.bases[self.index_of(lam, tol)]


def eigendecompose(M: np.ndarray, group_tol: float | None = None) -> EigenspaceDecomposition:
    """Full decomposition of a symmetric matrix; near-equal eigenvalues are
    merged into one eigenspace whose basis is re-orthonormalized."""
    M = np.asarray(M, dtype=float)
    scale = max(1.0, float(np.max(np.abs(M)))) if M.size else 1.0
    if not np.allclose(M, M.T, rtol=0, atol=1e-12 * scale):
        raise NotSymmetricError("matrix is not symmetric")
    if group_tol is None:
        group_tol = default_group_tol(M)
    if group_tol <= 0:
        raise ValueError("group_tol must be positive")
    vals, vecs = np.linalg.eigh((M + M.T) / 2.0)
    groups: list[list[int]] = [[0]]
    for i in range(1, len(vals)):
        if vals[i] - vals[groups[-1][-1]] <= group_tol:
            groups[-1].append(i)
        else:
            groups.append([i])
    eigenvalues, mults, bases = [], [], []
    for idx in groups:
        eigenvalues.append(float(np.mean(vals[idx])))
        mults.append(len(idx))
        U = vecs[:, idx]
        # eigh output is already orthonormal; QR guards merged blocks
        Q, _ = np.linalg.qr(U)
        bases.append(Q)
    return EigenspaceDecomposition(
        eigenvalues=np.array(eigenvalues),
        multiplicities=np.array(mults, dtype=int),
        bases=bases,
        group_tol=group_tol,
        raw_eigenvalues=vals,
    )


def lambda_ends(g: Graph, w=None) -> tuple[float, float]:
    """Second-smallest and largest eigenvalue of L(w).  No normalization is
    applied to w here."""
    if not g.is_connected():
        raise DisconnectedError("graph is disconnected")
    if g.n < 2:
        raise DisconnectedError("spectrum endpoints need n >= 2")
    vals = np.linalg.eigvalsh(laplacian(g, w))
    return float(vals[1]), float(vals[-1])


@dataclass
class CharacterTable:
    """Characters of an abelian group together with the per-character
    Laplacian eigenvalue of the attached Cayley graph.

    chars[k, g] = exp(2*pi*i * sum_t k_t g_t / n_t), with both the character
    index k and the group element g enumerated in the same mixed-radix order
    as the Cayley graph's vertices.
    """

    spec: CayleySpec
    chars: np.ndarray
    eigenvalues: np.ndarray

    @property
    def size(self) -> int:
        return self.chars.shape[0]

    def character(self, k: int) -> np.ndarray:
        return self.chars[k]


def character_spectrum(spec: CayleySpec) -> CharacterTable:
    """All characters of the group with eigenvalues
    lambda_k = sum over the full symmetric S of (1 - Re chi^k(s))."""
    elems = spec.elements()
    N = spec.size
    arr = np.array(elems, dtype=float)  # N x r
    orders = np.array(spec.orders, dtype=float)
    # phase[k, g] = sum_t k_t * g_t / n_t
    phase = (arr / orders) @ arr.T
    chars = np.exp(2j * np.pi * phase)
    gen_idx = [spec.index_of(s) for s in spec.gens]
    eigenvalues = np.sum(1.0 - chars[:, gen_idx].real, axis=1)
    return CharacterTable(spec=spec, chars=chars, eigenvalues=eigenvalues)


def characters_for_eigenvalue(
    table: CharacterTable, lam: float, tol: float = 1e-8
) -> list[int]:
    """Indices of characters whose eigenvalue matches lam within tol."""
    hits = [k for k in range(table.size) if abs(table.eigenvalues[k] - lam) <= tol]
    if not hits:
        raise EigenvalueError(f"no character eigenvalue near {lam}")
    return hits


def circulant_curve_extremes(n: int) -> tuple[int, int]:
    """Indices attaining min and max nonzero eigenvalue of
    Cay(Z_{3n}, {1, n-1}): (3, 3*floor(n/2)) for n >= 6.

    Verifies that for k not divisible by 3 the eigenvalues lie in [2, 6]
    per the three-curve decomposition, and that full enumeration agrees.
    """
    if n < 6:
        raise ValueError("circulant family extremes need n >= 6")
    N = 3 * n
    k = np.arange(N)
    lam = np.zeros(N)
    for s in (1, n - 1, N - 1, N - (n - 1)):
        lam += 1.0 - np.cos(2 * np.pi * k * s / N)
    off3 = lam[k % 3 != 0]
    if np.any(off3 < 2 - 1e-9) or np.any(off3 > 6 + 1e-9):
        raise AssertionError("off-lattice eigenvalue outside [2, 6]")
    nz = k[1:]
    argmin = int(nz[np.argmin(lam[1:])])
    argmax = int(np.argmin(-lam))
    expect = (3, 3 * (n // 2))
    # ties (odd n has a symmetric pair at the top) resolve to the smaller index
    if abs(lam[argmin] - lam[expect[0]]) > 1e-9 or abs(lam[argmax] - lam[expect[1]]) > 1e-9:
        raise AssertionError("enumerated extremes disagree with the closed form")
    return expect
