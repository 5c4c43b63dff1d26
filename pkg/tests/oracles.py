"""Brute-force reference implementations, deliberately independent of the library.

Everything here works on plain arc sets and exhaustive enumeration.
"""

from __future__ import annotations

from itertools import combinations, permutations, product


def arc_set(d) -> frozenset:
    return frozenset(d.arcs())


def has_cycle(vertices, arcs) -> bool:
    """Depth-first search for a directed cycle inside ``vertices``."""
    vs = set(vertices)
    succ = {v: [w for (a, w) in arcs if a == v and w in vs] for v in vs}
    state = dict.fromkeys(vs, 0)

    def visit(v) -> bool:
        state[v] = 1
        for w in succ[v]:
            if state[w] == 1 or (state[w] == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in sorted(vs))


def reaches(vertices, arcs, source, target) -> bool:
    vs = set(vertices)
    seen = {source}
    stack = [source]
    while stack:
        v = stack.pop()
        for a, w in arcs:
            if a == v and w in vs and w not in seen:
                seen.add(w)
                stack.append(w)
    return target in seen


def colourings(n: int):
    return product((1, 2), repeat=n)


def two_dicolourable(d) -> bool:
    arcs = arc_set(d)
    for col in colourings(d.n):
        if all(not has_cycle([v for v in range(d.n) if col[v] == c], arcs) for c in (1, 2)):
            return True
    return False


def uv_colourable(d, u: int, v: int) -> bool:
    arcs = arc_set(d) - {(u, v)}
    others = [x for x in range(d.n) if x not in (u, v)]
    for rest in product((1, 2), repeat=len(others)):
        ones = [u, v] + [x for x, c in zip(others, rest) if c == 1]
        twos = [x for x, c in zip(others, rest) if c == 2]
        if has_cycle(ones, arcs) or has_cycle(twos, arcs):
            continue
        if not reaches(ones, arcs, u, v):
            return True
    return False


def three_dicritical(d) -> bool:
    if two_dicolourable(d):
        return False
    return all(two_dicolourable(d.delete_arc(u, v)) for u, v in d.arcs()) and all(
        two_dicolourable(d.delete_vertex(x)) for x in range(d.n)
    )


def contains(host, pattern, induced: bool) -> bool:
    """Try every injective map of pattern vertices into host vertices."""
    h = arc_set(host)
    p = arc_set(pattern)
    for image in permutations(range(host.n), pattern.n):
        if not all((image[a], image[b]) in h for a, b in p):
            continue
        if induced:
            pairs = [(a, b) for a in range(pattern.n) for b in range(pattern.n) if a != b]
            if any((image[a], image[b]) in h and (a, b) not in p for a, b in pairs):
                continue
        return True
    return False


def isomorphic(a, b) -> bool:
    if a.n != b.n or a.size != b.size:
        return False
    target = arc_set(b)
    source = a.arcs()
    return any(all((perm[x], perm[y]) in target for x, y in source) for perm in permutations(range(a.n)))


def max_acyclic_size(d) -> int:
    arcs = arc_set(d)
    for k in range(d.n, -1, -1):
        if any(not has_cycle(s, arcs) for s in combinations(range(d.n), k)):
            return k
    return 0


def acyclic_by_peeling(d) -> bool:
    """Repeatedly remove a vertex of in-degree zero."""
    left = set(range(d.n))
    arcs = arc_set(d)
    while left:
        src = [v for v in left if not any((a, v) in arcs for a in left)]
        if not src:
            return False
        left.discard(src[0])
    return True
