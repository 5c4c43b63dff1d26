"""2-dicolouring solvers: plain 2-dicolourability, uv-colourings, dicriticality."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .digraph import Digraph, DigraphError, _bits, is_acyclic_mask, popcount, reach_within, stays_acyclic

# up to this order the subset sweep is used
SUBSET_SWEEP_MAX_ORDER = 8


@dataclass(frozen=True)
class TwoColouring:
    """Colour of each vertex, 1 or 2; ``colours[v]`` is the colour of vertex ``v``."""

    colours: tuple[int, ...]

    @classmethod
    def from_mask(cls, n: int, class_one: int) -> "TwoColouring":
        return cls(tuple(1 if class_one >> v & 1 else 2 for v in range(n)))

    def mask(self, colour: int) -> int:
        return sum(1 << v for v, c in enumerate(self.colours) if c == colour)

    def is_dicolouring_of(self, d: Digraph) -> bool:
        if len(self.colours) != d.n or set(self.colours) - {1, 2}:
            return False
        return is_acyclic_mask(d.out, self.mask(1)) and is_acyclic_mask(d.out, self.mask(2))


def _degree_order(d: Digraph, skip: int = 0) -> list[int]:
    verts = [v for v in range(d.n) if not skip >> v & 1]
    return sorted(verts, key=lambda v: (-(popcount(d.out[v]) + popcount(d.inn[v])), v))


def two_dicolourable_by_subsets(d: Digraph) -> bool:
    """Sweep every bipartition; the subset-enumeration route."""
    n = d.n
    full = (1 << n) - 1
    out = d.out
    # vertex 0 may be fixed in the second class by symmetry
    for s in range(1 << max(n - 1, 0)):
        if is_acyclic_mask(out, s) and is_acyclic_mask(out, full & ~s):
            return True
    return n == 0


def _two_dicolour_search(d: Digraph) -> Optional[int]:
    """Backtracking with incremental acyclicity; returns a class mask or None."""
    n = d.n
    if n == 0:
        return 0
    out, inn = d.out, d.inn
    order = _degree_order(d)
    first = order[0]

    def go(k: int, a: int, b: int) -> Optional[int]:
        if k == n:
            return a
        x = order[k]
        if stays_acyclic(out, inn, a, x):
            r = go(k + 1, a | 1 << x, b)
            if r is not None:
                return r
        if stays_acyclic(out, inn, b, x):
            return go(k + 1, a, b | 1 << x)
        return None

    return go(1, 1 << first, 0)


def is_two_dicolourable(d: Digraph) -> bool:
    if d.n <= SUBSET_SWEEP_MAX_ORDER:
        return two_dicolourable_by_subsets(d)
    return _two_dicolour_search(d) is not None


def find_two_dicolouring(d: Digraph) -> Optional[TwoColouring]:
    """First valid colouring in lexicographic order of the colour tuple, or None.

    Colours are tried in the order 1 < 2 for vertex 0, then vertex 1, and so on,
    so the all-ones colouring comes first when it is valid.
    """
    n = d.n
    out, inn = d.out, d.inn

    def go(v: int, a: int, b: int) -> Optional[int]:
        if v == n:
            return a
        if stays_acyclic(out, inn, a, v):
            r = go(v + 1, a | 1 << v, b)
            if r is not None:
                return r
        if stays_acyclic(out, inn, b, v):
            return go(v + 1, a, b | 1 << v)
        return None

    mask = go(0, 0, 0)
    return None if mask is None else TwoColouring.from_mask(n, mask)


# -- uv-colourings ---------------------------------------------------------------


def uv_colouring_class(d: Digraph, u: int, v: int, hint: int | None = None) -> Optional[int]:
    """Colour-1 mask of some uv-colouring of ``d`` for the arc ``u -> v``, or None.

    ``hint`` is a previously valid colour-1 mask tried before searching.
    """
    if not d.has_arc(u, v):
        raise DigraphError(f"arc ({u}, {v}) not present")
    out = list(d.out)
    out[u] &= ~(1 << v)
    inn = list(d.inn)
    inn[v] &= ~(1 << u)
    return _uv_search(d.n, out, inn, u, v, hint)


def _uv_valid(n: int, out, a: int, u: int, v: int) -> bool:
    full = (1 << n) - 1
    return (
        a >> u & 1
        and a >> v & 1
        and is_acyclic_mask(out, a)
        and is_acyclic_mask(out, full & ~a)
        and not reach_within(out, u, a) >> v & 1
    )


def _uv_search(n: int, out, inn, u: int, v: int, hint: int | None = None) -> Optional[int]:
    if hint is not None and _uv_valid(n, out, hint, u, v):
        return hint
    a0 = (1 << u) | (1 << v)
    # out has the arc removed, so a digon u<->v leaves only v -> u here
    if not is_acyclic_mask(out, a0):
        return None
    vbit = 1 << v
    order = sorted(
        (x for x in range(n) if x != u and x != v),
        key=lambda x: (-(popcount(out[x]) + popcount(inn[x])), x),
    )
    total = len(order)

    def go(k: int, a: int, b: int) -> Optional[int]:
        if k == total:
            return a
        x = order[k]
        xb = 1 << x
        if stays_acyclic(out, inn, a, x):
            na = a | xb
            if not reach_within(out, u, na) & vbit:
                r = go(k + 1, na, b)
                if r is not None:
                    return r
        if stays_acyclic(out, inn, b, x):
            return go(k + 1, a, b | xb)
        return None

    return go(0, a0, 0)


def has_uv_colouring(d: Digraph, u: int, v: int) -> bool:
    return uv_colouring_class(d, u, v) is not None


def find_uv_colouring(d: Digraph, u: int, v: int) -> Optional[TwoColouring]:
    a = uv_colouring_class(d, u, v)
    return None if a is None else TwoColouring.from_mask(d.n, a)


def every_arc_has_uv_colouring(d: Digraph, hints: Mapping[tuple[int, int], int] | None = None,
                               witnesses: dict | None = None) -> bool:
    """True iff ``d`` admits a uv-colouring for each of its arcs.

    When ``witnesses`` is a dict it receives one colour-1 mask per arc; ``hints``
    supplies masks to try first (from a subdigraph, say).
    """
    n = d.n
    out = list(d.out)
    inn = list(d.inn)
    for u in range(n):
        for v in _bits(d.out[u]):
            out[u] &= ~(1 << v)
            inn[v] &= ~(1 << u)
            hint = hints.get((u, v)) if hints else None
            a = _uv_search(n, out, inn, u, v, hint)
            out[u] |= 1 << v
            inn[v] |= 1 << u
            if a is None:
                return False
            if witnesses is not None:
                witnesses[(u, v)] = a
    return True


# -- criticality -------------------------------------------------------------------


def is_three_dicritical(d: Digraph) -> bool:
    if is_two_dicolourable(d):
        return False
    for u, v in d.arcs():
        if not is_two_dicolourable(d.delete_arc(u, v)):
            return False
    return all(is_two_dicolourable(d.delete_vertex(v)) for v in range(d.n))


def dichromatic_number_at_least_three(d: Digraph) -> bool:
    return not is_two_dicolourable(d)


def max_acyclic_subset_size(d: Digraph) -> int:
    """Order of a largest vertex set inducing an acyclic subdigraph."""
    n = d.n
    out, inn = d.out, d.inn
    order = sorted(range(n), key=lambda v: (popcount(out[v]) + popcount(inn[v]), v))
    best = [0]

    def go(k: int, s: int, size: int) -> None:
        if size + (n - k) <= best[0]:
            return
        if k == n:
            best[0] = size
            return
        x = order[k]
        if stays_acyclic(out, inn, s, x):
            go(k + 1, s | 1 << x, size + 1)
        go(k + 1, s, size)

    go(0, 0, 0)
    return best[0]


def every_arc_in_digon_or_induced_triangle(d: Digraph) -> bool:
    """Each arc lies in a digon or in an induced directed triangle (semi-complete input)."""
    if not d.is_semicomplete():
        raise DigraphError("digraph is not semi-complete")
    out, inn = d.out, d.inn
    for u, v in d.arcs():
        if out[v] >> u & 1:
            continue
        # w with v -> w -> u, and no reverse arcs on the triangle
        cands = out[v] & inn[u] & ~inn[v] & ~out[u]
        if not cands:
            return False
    return True
