"""Bidirected parts, tree dearth and odd pairs, and the arc-count bound checks.

All arithmetic is exact (``fractions.Fraction``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator

from .digraph import Digraph, DigraphError, _bits


class Graph:
    """Simple undirected graph on ``0 .. n-1`` with bitmask neighbourhoods."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges=()):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise DigraphError(f"loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u]) if u < v]

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def components(self) -> list[list[int]]:
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(list(_bits(comp)))
        return comps

    def is_forest(self) -> bool:
        return len(self.edges()) == self.n - len(self.components())

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.adj) == (other.n, other.adj)

    def __repr__(self):
        return f"Graph({self.n}, {self.edges()})"


class Tree(Graph):
    """A connected acyclic graph."""

    __slots__ = ()

    def __init__(self, n: int, edges=()):
        if n < 1:
            raise DigraphError("a tree has at least one vertex")
        super().__init__(n, edges)
        if len(self.edges()) != n - 1 or len(self.components()) != 1:
            raise DigraphError("edges do not form a tree")

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * self.n
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for v in frontier:
                for w in _bits(self.adj[v]):
                    if dist[w] < 0:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        return dist


def path_tree(n: int) -> Tree:
    return Tree(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n: int) -> Tree:
    return Tree(n, [(0, i) for i in range(1, n)])


def bidirected_part(d: Digraph) -> Graph:
    return Graph(d.n, d.digons())


def odd_pairs(t: Tree) -> int:
    count = 0
    for u in range(t.n):
        dist = t.distances_from(u)
        count += sum(1 for v in range(u + 1, t.n) if dist[v] > 1 and dist[v] % 2 == 1)
    return count


@dataclass(frozen=True)
class DearthReport:
    v3_term: Fraction
    odd_pairs: int
    dearth: Fraction


def dearth(t: Tree) -> DearthReport:
    v3 = sum((Fraction(t.degree(v) * (t.degree(v) - 1), 6) for v in range(t.n) if t.degree(v) >= 3), Fraction(0))
    op = odd_pairs(t)
    return DearthReport(v3, op, v3 + op)


# -- free trees ---------------------------------------------------------------------


def _rooted_code(t: Tree, root: int, parent: int = -1) -> str:
    kids = sorted(_rooted_code(t, c, root) for c in _bits(t.adj[root]) if c != parent)
    return "(" + "".join(kids) + ")"


def tree_code(t: Tree) -> str:
    """Isomorphism-invariant string: least rooted code over the tree's centres."""
    leaves_removed = 0
    remaining = (1 << t.n) - 1
    deg = [t.degree(v) for v in range(t.n)]
    layer = [v for v in range(t.n) if deg[v] <= 1]
    while t.n - leaves_removed > 2:
        nxt = []
        for v in layer:
            remaining &= ~(1 << v)
            leaves_removed += 1
            for w in _bits(t.adj[v] & remaining):
                deg[w] -= 1
                if deg[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_rooted_code(t, c) for c in _bits(remaining))


def free_trees(n: int) -> list[Tree]:
    """One tree per isomorphism class on ``n`` vertices, grown leaf by leaf."""
    if n < 1:
        return []
    level = {tree_code(Tree(1)): Tree(1)}
    for m in range(2, n + 1):
        nxt: dict[str, Tree] = {}
        for t in level.values():
            for v in range(t.n):
                child = Tree(m, t.edges() + [(v, m - 1)])
                nxt.setdefault(tree_code(child), child)
        level = nxt
    return [level[k] for k in sorted(level)]


def verify_dearth_lower_bound(max_n: int) -> bool:
    """dearth(T) >= n/3 - 1 for every tree with at most ``max_n`` vertices."""
    if max_n > 12:
        raise ValueError("max_n is capped at 12")
    return all(dearth(t).dearth >= Fraction(n, 3) - 1 for n in range(1, max_n + 1) for t in free_trees(n))


# -- path-plus-matching check ------------------------------------------------------------


def matchings(vertices: list[int]) -> Iterator[list[tuple[int, int]]]:
    """Every matching (including the empty one) on ``vertices``."""
    if not vertices:
        yield []
        return
    first, rest = vertices[0], vertices[1:]
    yield from matchings(rest)
    for i, other in enumerate(rest):
        for m in matchings(rest[:i] + rest[i + 1:]):
            yield [(first, other)] + m


def matchpath_witness(matching: list[tuple[int, int]]) -> tuple[int, int, int] | None:
    """A stable 3-set of path-plus-matching missing w1 or w7 (vertices 0..6)."""
    g = Graph(7, set(tuple(sorted(e)) for e in [(i, i + 1) for i in range(6)] + list(matching)))
    for s in combinations(range(7), 3):
        if 0 in s and 6 in s:
            continue
        if all(not g.adj[a] >> b & 1 for a, b in combinations(s, 2)):
            return s
    return None


def verify_matchpath_lemma() -> bool:
    return all(matchpath_witness(m) is not None for m in matchings(list(range(7))))


# -- bound checks on digraphs ----------------------------------------------------------


def check_arc_bound(d: Digraph) -> bool:
    """m(D) <= n(n-1)/2 + 2n/3."""
    n = d.n
    return Fraction(d.size) <= Fraction(n * (n - 1), 2) + Fraction(2 * n, 3)


def check_digon_forest(d: Digraph) -> bool:
    return bidirected_part(d).is_forest()


def is_bidirected_odd_cycle(d: Digraph) -> bool:
    n = d.n
    if n < 3 or n % 2 == 0 or d.size != 2 * n:
        return False
    b = bidirected_part(d)
    return len(b.edges()) == n and all(b.degree(v) == 2 for v in range(n)) and len(b.components()) == 1


def digon_tree_components(d: Digraph) -> list[tuple[list[int], Tree]]:
    """Components of the bidirected part with at least two vertices, as relabelled trees."""
    b = bidirected_part(d)
    if not b.is_forest():
        raise DigraphError("bidirected part is not a forest")
    out = []
    for comp in b.components():
        if len(comp) < 2:
            continue
        pos = {v: i for i, v in enumerate(comp)}
        out.append((comp, Tree(len(comp), [(pos[u], pos[v]) for u, v in b.edges() if u in pos])))
    return out


def non_adjacent_pairs(d: Digraph, vertices: list[int]) -> int:
    return sum(1 for u, v in combinations(vertices, 2) if not (d.has_arc(u, v) or d.has_arc(v, u)))


def check_dearth_inequality(d: Digraph) -> bool:
    """Each bidirected tree of ``d`` spans at least dearth(T) non-adjacent pairs.

    Expected for 3-dicritical digraphs other than bidirected K3 and W3.
    """
    return all(non_adjacent_pairs(d, comp) >= dearth(t).dearth for comp, t in digon_tree_components(d))
