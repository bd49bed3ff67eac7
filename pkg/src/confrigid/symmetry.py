"""Permutation groups given by generators: orbit computation, transitivity
tests, group closure, and a budgeted backtracking automorphism search."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import GraphTooLargeError, GroupTooLargeError, NotAutomorphismError
from .graphs import CayleySpec, Graph


@dataclass(frozen=True)
class PermutationSet:
    """Degree-n permutations as full image tuples.  `exhausted` marks a
    search that hit its node budget; results then hold for the subgroup
    generated by the returned set."""

    n: int
    gens: tuple[tuple[int, ...], ...]
    exhausted: bool = field(default=False, compare=False)

    def __post_init__(self):
        for p in self.gens:
            if len(p) != self.n or sorted(p) != list(range(self.n)):
                raise ValueError(f"not a permutation of 0..{self.n - 1}: {p}")


def identity_perm(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """(p*q)(i) = p(q(i))."""
    return tuple(p[q[i]] for i in range(len(p)))


def group_closure(p: PermutationSet, cap: int = 10**6) -> list[tuple[int, ...]]:
    """All elements of the group generated by p.gens, by BFS over generators."""
    seen = {identity_perm(p.n)}
    frontier = [identity_perm(p.n)]
    while frontier:
        nxt = []
        for a in frontier:
            for g in p.gens:
                b = compose(g, a)
                if b not in seen:
                    if len(seen) >= cap:
                        raise GroupTooLargeError(f"group order exceeds cap {cap}")
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return sorted(seen)


def group_order(p: PermutationSet, cap: int = 10**6) -> int:
    return len(group_closure(p, cap))


@dataclass(frozen=True)
class OrbitPartition:
    """Vertex and edge orbits; blocks ordered by their smallest member and
    represented by it."""

    vertex_orbits: tuple[tuple[int, ...], ...]
    edge_orbits: tuple[tuple[int, ...], ...]
    vertex_representatives: tuple[int, ...]
    edge_representatives: tuple[int, ...]

    @property
    def num_vertex_orbits(self) -> int:
        return len(self.vertex_orbits)

    @property
    def num_edge_orbits(self) -> int:
        return len(self.edge_orbits)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


def _check_preserves_edges(g: Graph, p: PermutationSet) -> None:
    edge_set = set(g.edges)
    for perm in p.gens:
        for i, j in g.edges:
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            if (a, b) not in edge_set:
                raise NotAutomorphismError(
                    f"generator maps edge ({i},{j}) to non-edge ({a},{b})"
                )


def orbits(g: Graph, p: PermutationSet) -> OrbitPartition:
    """Vertex and edge orbits as connected components of the generator action."""
    if p.n != g.n:
        raise ValueError("permutation degree does not match graph order")
    _check_preserves_edges(g, p)
    uf_v = _UnionFind(g.n)
    for perm in p.gens:
        for i in range(g.n):
            uf_v.union(i, perm[i])
    eidx = g.edge_index()
    uf_e = _UnionFind(g.m)
    for perm in p.gens:
        for k, (i, j) in enumerate(g.edges):
            a, b = perm[i], perm[j]
            if a > b:
                a, b = b, a
            uf_e.union(k, eidx[(a, b)])
    vblocks: dict[int, list[int]] = {}
    for i in range(g.n):
        vblocks.setdefault(uf_v.find(i), []).append(i)
    eblocks: dict[int, list[int]] = {}
    for k in range(g.m):
        eblocks.setdefault(uf_e.find(k), []).append(k)
    vorb = tuple(tuple(b) for b in sorted(vblocks.values(), key=lambda b: b[0]))
    eorb = tuple(tuple(b) for b in sorted(eblocks.values(), key=lambda b: b[0]))
    return OrbitPartition(
        vertex_orbits=vorb,
        edge_orbits=eorb,
        vertex_representatives=tuple(b[0] for b in vorb),
        edge_representatives=tuple(b[0] for b in eorb),
    )


def is_vertex_transitive(g: Graph, p: PermutationSet) -> bool:
    """Transitivity with respect to the supplied subgroup; sufficient for the
    graph property, not necessary."""
    return orbits(g, p).num_vertex_orbits == 1


def is_edge_transitive(g: Graph, p: PermutationSet) -> bool:
    return orbits(g, p).num_edge_orbits == 1


def _refine_colors(A: np.ndarray) -> np.ndarray:
    """Equitable partition by iterated (color, multiset of neighbor colors)."""
    n = A.shape[0]
    deg = A.sum(axis=1)
    _, colors = np.unique(deg, return_inverse=True)
    while True:
        sigs = []
        for v in range(n):
            nbr = tuple(sorted(int(colors[u]) for u in range(n) if A[v, u]))
            sigs.append((int(colors[v]), nbr))
        palette = {s: c for c, s in enumerate(sorted(set(sigs)))}
        new = np.array([palette[s] for s in sigs], dtype=int)
        if np.array_equal(new, colors):
            return colors
        colors = new


def find_automorphisms(
    g: Graph, limit: int = 500_000, max_n: int = 512
) -> PermutationSet:
    """Generating set of Aut(G) by backtracking over an equitable-partition
    refinement.  If the node budget is exhausted, the partial set found so
    far is returned with the Exhausted flag; downstream results then hold for
    the subgroup generated."""
    if g.n > max_n:
        raise GraphTooLargeError(f"automorphism search capped at n = {max_n}")
    n = g.n
    A = g.adjacency()
    colors = _refine_colors(A)
    # order vertices so each new one touches as many assigned ones as possible
    order: list[int] = []
    placed = np.zeros(n, dtype=bool)
    for _ in range(n):
        best, best_key = -1, None
        for v in range(n):
            if placed[v]:
                continue
            key = (int(A[v, placed].sum()), -int((colors == colors[v]).sum()), -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        placed[best] = True

    gens: list[tuple[int, ...]] = []
    closure: set[tuple[int, ...]] = {identity_perm(n)}
    nodes = 0
    exhausted = False

    def extend_closure(new: tuple[int, ...]):
        frontier = [new]
        closure.add(new)
        while frontier:
            nxt = []
            for a in frontier:
                for b in gens + [new]:
                    for c in (compose(a, b), compose(b, a)):
                        if c not in closure:
                            closure.add(c)
                            nxt.append(c)
            frontier = nxt

    image = [-1] * n
    used = [False] * n

    def backtrack(level: int) -> bool:
        """Returns False when the node budget is exhausted."""
        nonlocal nodes, exhausted
        if level == n:
            perm = [0] * n
            for v in order:
                perm[v] = image[v]
            t = tuple(perm)
            if t not in closure:
                gens.append(t)
                extend_closure(t)
            return True
        v = order[level]
        for cand in range(n):
            if used[cand] or colors[cand] != colors[v]:
                continue
            ok = True
            for prev in order[:level]:
                if A[v, prev] != A[cand, image[prev]]:
                    ok = False
                    break
            if not ok:
                continue
            nodes += 1
            if nodes > limit:
                exhausted = True
                return False
            image[v] = cand
            used[cand] = True
            alive = backtrack(level + 1)
            used[cand] = False
            image[v] = -1
            if not alive:
                return False
        return True

    backtrack(0)
    return PermutationSet(n=n, gens=tuple(gens), exhausted=exhausted)


def cayley_translations(spec: CayleySpec) -> PermutationSet:
    """Translation action of the group on itself (one generator per cyclic
    factor), making the Cayley graph vertex-transitive by construction."""
    elems = spec.elements()
    gens = []
    for t in range(len(spec.orders)):
        unit = tuple(1 if i == t else 0 for i in range(len(spec.orders)))
        gens.append(tuple(spec.index_of(spec.add(gel, unit)) for gel in elems))
    return PermutationSet(n=spec.size, gens=tuple(gens))


def parse_generators(text: str, n: int) -> PermutationSet:
    """One permutation per line as images pi(0) ... pi(n-1), separated by
    spaces or commas."""
    gens = []
    for ln in text.splitlines():
        if not ln.strip():
            continue
        images = tuple(int(tok) for tok in ln.replace(",", " ").split())
        if len(images) != n:
            raise ValueError(f"expected {n} images per line, got {len(images)}")
        gens.append(images)
    return PermutationSet(n=n, gens=tuple(gens))
