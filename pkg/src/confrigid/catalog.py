"""Named catalog graphs.

Parameterized families (paths, cycles, complete, complete bipartite,
hypercubes) are built with a fixed documented vertex ordering; the four
sporadic entries are embedded as graph6 strings so that orbit and
eigenvector examples are bit-exact across runs.
"""

from __future__ import annotations

import re

from .errors import UnknownGraphError
from .graphs import Graph, normalize_edges, parse_graph6

# Petersen: outer cycle 0..4, inner pentagram 5..9 (5+i ~ 5+(i+2 mod 5)),
# spokes i ~ i+5.
_PETERSEN_G6 = "IheA@GUAo"

# Triangular prism C3 box K2, vertex (a, x) -> 2a + x.
_TRIANGULAR_PRISM_G6 = "ErhW"

# Hoffman graph: Godsil-McKay switching of the 4-cube (vertices = 4-bit
# integers, edges = Hamming distance 1) on the set {0, 3, 5, 9}.  4-regular
# bipartite on 16 vertices, Laplacian-cospectral with Q4, 1-walk regular.
_HOFFMAN_G6 = "OaD`SCSYP@O`AGc?_POAJ"

# Complement of the Shrikhande graph Cay(Z4 x Z4, {+-(1,0), +-(0,1),
# +-(1,1)}), vertex (a, b) -> 4a + b.  16 vertices, 72 edges, Laplacian
# eigenvalues {0, 8, 12} with multiplicities {1, 9, 6}.
_SHRIKHANDE_COMPLEMENT_G6 = "OQWsuJu{vr^aNufrX{r^a"


def _path(n: int) -> Graph:
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)), name=f"path_{n}")


def _cycle(n: int) -> Graph:
    if n < 3:
        raise UnknownGraphError(f"cycle needs n >= 3, got {n}")
    edges = normalize_edges(n, [(i, (i + 1) % n) for i in range(n)])
    return Graph(n, edges, name=f"cycle_{n}")


def _complete(n: int) -> Graph:
    edges = tuple((i, j) for i in range(n) for j in range(i + 1, n))
    return Graph(n, edges, name=f"complete_{n}")


def _complete_bipartite(a: int, b: int) -> Graph:
    edges = tuple((i, a + j) for i in range(a) for j in range(b))
    return Graph(a + b, edges, name=f"complete_bipartite_{a}_{b}")


def _hypercube(d: int) -> Graph:
    n = 1 << d
    pairs = [
        (v, v ^ (1 << k)) for v in range(n) for k in range(d) if v < (v ^ (1 << k))
    ]
    return Graph(n, normalize_edges(n, pairs), name=f"hypercube_{d}")


_FIXED = {
    "petersen": _PETERSEN_G6,
    "triangular_prism": _TRIANGULAR_PRISM_G6,
    "hoffman": _HOFFMAN_G6,
    "shrikhande_complement": _SHRIKHANDE_COMPLEMENT_G6,
}


def catalog(name: str) -> Graph:
    """Return the named catalog graph.

    Accepted names: path_n, cycle_n, complete_n, complete_bipartite_a_b,
    hypercube_d, petersen, triangular_prism, hoffman, shrikhande_complement.
    """
    if name in _FIXED:
        g = parse_graph6(_FIXED[name])
        return Graph(g.n, g.edges, name=name)
    m = re.fullmatch(r"path_(\d+)", name)
    if m:
        return _path(int(m.group(1)))
    m = re.fullmatch(r"cycle_(\d+)", name)
    if m:
        return _cycle(int(m.group(1)))
    m = re.fullmatch(r"complete_(\d+)", name)
    if m:
        return _complete(int(m.group(1)))
    m = re.fullmatch(r"complete_bipartite_(\d+)_(\d+)", name)
    if m:
        return _complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"hypercube_(\d+)", name)
    if m:
        return _hypercube(int(m.group(1)))
    raise UnknownGraphError(f"unknown catalog graph: {name!r}")


def catalog_names() -> list[str]:
    """Representative list used by tests; parameterized entries at small sizes."""
    return [
        "path_4",
        "cycle_5",
        "cycle_6",
        "complete_4",
        "complete_5",
        "complete_bipartite_2_3",
        "complete_bipartite_3_3",
        "hypercube_3",
        "hypercube_4",
        "petersen",
        "triangular_prism",
        "hoffman",
        "shrikhande_complement",
    ]
