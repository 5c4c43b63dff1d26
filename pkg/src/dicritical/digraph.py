"""Small labelled digraphs stored as adjacency bitmasks.

Vertices are ``0 .. n-1``. Row ``i`` of the out-mask tuple has bit ``j`` set
iff the arc ``i -> j`` is present. Everything here is immutable; operations
return new digraphs.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 16


class DigraphError(ValueError):
    """Raised on invalid construction or a violated operation precondition."""


class DmatParseError(DigraphError):
    """Malformed ``.dmat`` text; ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


popcount = int.bit_count


class Digraph:
    """Loopless digraph without parallel arcs on at most 16 vertices."""

    __slots__ = ("n", "out", "inn", "_hash")

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_ORDER:
            raise DigraphError(f"order must lie in [0, {MAX_ORDER}], got {n}")
        out = [0] * n
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n):
                raise DigraphError(f"arc ({u}, {v}) out of range for order {n}")
            if u == v:
                raise DigraphError(f"loop at vertex {u}")
            out[u] |= 1 << v
        self._set(n, tuple(out))

    def _set(self, n: int, out: tuple[int, ...]) -> None:
        inn = [0] * n
        for u in range(n):
            for v in _bits(out[u]):
                inn[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "out", out)
        object.__setattr__(self, "inn", tuple(inn))
        object.__setattr__(self, "_hash", hash((n, out)))

    @classmethod
    def from_masks(cls, out: Sequence[int]) -> "Digraph":
        """Build from out-neighbourhood bitmasks (no validation beyond loops)."""
        n = len(out)
        full = (1 << n) - 1
        for u, row in enumerate(out):
            if row & ~full or (row >> u) & 1:
                raise DigraphError(f"invalid out-mask for vertex {u}")
        d = cls.__new__(cls)
        d._set(n, tuple(out))
        return d

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "Digraph":
        n = len(rows)
        arcs = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise DigraphError(f"row {i} has length {len(row)}, expected {n}")
            arcs.extend((i, j) for j, x in enumerate(row) if x)
        return cls(n, arcs)

    def __setattr__(self, name, value):
        raise AttributeError("Digraph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self.out == other.out

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Digraph({self.n}, {sorted(self.arcs())})"

    def __reduce__(self):
        return (Digraph.from_masks, (self.out,))

    # -- basic queries -------------------------------------------------------

    @property
    def order(self) -> int:
        return self.n

    def arcs(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.out[u])]

    @property
    def size(self) -> int:
        """Number of arcs; a digon counts twice."""
        return sum(popcount(r) for r in self.out)

    def has_arc(self, u: int, v: int) -> bool:
        return bool((self.out[u] >> v) & 1)

    def out_degree(self, v: int) -> int:
        return popcount(self.out[v])

    def in_degree(self, v: int) -> int:
        return popcount(self.inn[v])

    def digons(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.out[u] & self.inn[u]) if u < v]

    def is_semicomplete(self) -> bool:
        full = (1 << self.n) - 1
        return all((self.out[v] | self.inn[v] | (1 << v)) == full for v in range(self.n))

    def is_tournament(self) -> bool:
        return self.is_semicomplete() and not any(self.out[v] & self.inn[v] for v in range(self.n))

    def is_acyclic(self) -> bool:
        return is_acyclic_mask(self.out, (1 << self.n) - 1)

    def contains_directed_path(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(reach_within(self.out, u, (1 << self.n) - 1) >> v & 1)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise DigraphError(f"vertex {v} not in digraph of order {self.n}")

    # -- constructions -------------------------------------------------------

    def add_arcs(self, arcs: Iterable[tuple[int, int]]) -> "Digraph":
        return Digraph(self.n, list(self.arcs()) + list(arcs))

    def delete_arc(self, u: int, v: int) -> "Digraph":
        self._check_vertex(u)
        self._check_vertex(v)
        if not self.has_arc(u, v):
            raise DigraphError(f"arc ({u}, {v}) not present")
        out = list(self.out)
        out[u] &= ~(1 << v)
        return Digraph.from_masks(out)

    def delete_vertex(self, v: int) -> "Digraph":
        self._check_vertex(v)
        return self.induced_subdigraph([x for x in range(self.n) if x != v])

    def induced_subdigraph(self, vertices: Iterable[int]) -> "Digraph":
        """Subdigraph on ``vertices`` relabelled in increasing label order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(keep)}
        return Digraph(len(keep), [(pos[a], pos[b]) for a in keep for b in _bits(self.out[a]) if b in pos])

    def relabel(self, perm: Sequence[int]) -> "Digraph":
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise DigraphError("relabelling must be a permutation")
        return Digraph(self.n, [(perm[u], perm[v]) for u, v in self.arcs()])

    def reverse(self) -> "Digraph":
        return Digraph.from_masks(self.inn)

    def add_vertex(self) -> "Digraph":
        return Digraph.from_masks(self.out + (0,))

    # -- text formats ---------------------------------------------------------

    def to_dmat(self) -> str:
        rows = ["".join("1" if (self.out[i] >> j) & 1 else "0" for j in range(self.n)) for i in range(self.n)]
        return "\n".join([str(self.n)] + rows) + "\n"

    def matrix_rows(self) -> list[str]:
        return self.to_dmat().splitlines()[1:]


# -- mask-level primitives (hot paths take raw masks) -----------------------


def is_acyclic_mask(out: Sequence[int], subset: int) -> bool:
    """True iff the subdigraph induced by ``subset`` has no directed cycle."""
    s = subset
    while s:
        sinks = 0
        m = s
        while m:
            low = m & -m
            if not out[low.bit_length() - 1] & s:
                sinks |= low
            m ^= low
        if not sinks:
            return False
        s &= ~sinks
    return True


def reach_within(out: Sequence[int], source: int, subset: int) -> int:
    """Mask of vertices reachable from ``source`` inside ``subset`` (source included)."""
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= out[low.bit_length() - 1]
            m ^= low
        frontier = nxt & subset & ~seen
        seen |= frontier
    return seen


def stays_acyclic(out: Sequence[int], inn: Sequence[int], acyclic_set: int, x: int) -> bool:
    """Whether ``acyclic_set | {x}`` is acyclic, given ``acyclic_set`` is."""
    s = acyclic_set
    targets = inn[x] & s
    if not targets:
        return True
    frontier = out[x] & s
    seen = frontier
    while frontier:
        if frontier & targets:
            return False
        nxt = 0
        m = frontier
        while m:
            low = m & -m
            nxt |= out[low.bit_length() - 1]
            m ^= low
        frontier = nxt & s & ~seen
        seen |= frontier
    return True


# -- .dmat and Pajek I/O -----------------------------------------------------


def parse_dmat(text: str) -> Digraph:
    blocks = parse_dmat_blocks(text)
    if len(blocks) != 1:
        raise DmatParseError(f"expected exactly one digraph, found {len(blocks)}", 1)
    return blocks[0]


def parse_dmat_blocks(text: str) -> list[Digraph]:
    """Parse consecutive ``.dmat`` blocks; blank lines and ``key=value`` report lines are skipped."""
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    result = []
    i = 0
    while i < len(lines):
        line = lines[i]
        if not line.strip() or "=" in line:
            i += 1
            continue
        if not line.isdigit():
            raise DmatParseError(f"expected vertex count, got {line!r}", i + 1)
        n = int(line)
        if not 1 <= n <= MAX_ORDER:
            raise DmatParseError(f"vertex count {n} outside [1, {MAX_ORDER}]", i + 1)
        out = []
        for r in range(n):
            ln = i + 2 + r
            if i + 1 + r >= len(lines):
                raise DmatParseError("unexpected end of input", ln)
            row = lines[i + 1 + r]
            if len(row) != n or set(row) - {"0", "1"}:
                raise DmatParseError(f"row must be {n} characters of '0'/'1', got {row!r}", ln)
            if row[r] == "1":
                raise DmatParseError(f"loop at vertex {r}", ln)
            out.append(sum(1 << j for j, ch in enumerate(row) if ch == "1"))
        result.append(Digraph.from_masks(out))
        i += n + 1
    return result


def parse_pajek(text: str) -> Digraph:
    """Read the ``*Vertices n`` / ``*Arcs`` / ``u v`` dialect (1-based labels)."""
    n = None
    arcs = []
    section = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        low = line.lower()
        if low.startswith("*vertices"):
            parts = line.split()
            if len(parts) < 2 or not parts[1].isdigit():
                raise DmatParseError("bad *Vertices line", lineno)
            n = int(parts[1])
            section = "vertices"
        elif low.startswith("*arcs"):
            section = "arcs"
        elif low.startswith("*"):
            section = "other"
        elif section == "arcs":
            parts = line.split()
            try:
                u, v = int(parts[0]), int(parts[1])
            except (IndexError, ValueError):
                raise DmatParseError(f"bad arc line {line!r}", lineno) from None
            arcs.append((u - 1, v - 1))
    if n is None:
        raise DmatParseError("missing *Vertices line", 1)
    return Digraph(n, arcs)


def to_pajek(d: Digraph) -> str:
    lines = [f"*Vertices {d.n}"]
    lines += [f'{v + 1} "{v}"' for v in range(d.n)]
    lines.append("*Arcs")
    lines += [f"{u + 1} {v + 1}" for u, v in d.arcs()]
    return "\n".join(lines) + "\n"


# -- subdigraph containment --------------------------------------------------


class PatternQuery:
    """A pattern digraph plus the induced/non-induced flag, compiled for search."""

    __slots__ = ("pattern", "induced", "order", "steps", "min_out", "min_in", "_key")

    def __init__(self, pattern: Digraph, induced: bool = False):
        self.pattern = pattern
        self.induced = induced
        self._key = (pattern, induced)
        p = pattern
        n = p.n
        deg = [popcount(p.out[v] | p.inn[v]) * 2 + popcount(p.out[v]) + popcount(p.inn[v]) for v in range(n)]
        order: list[int] = []
        chosen = 0
        while len(order) < n:
            best = max(
                (v for v in range(n) if not chosen >> v & 1),
                key=lambda v: (popcount((p.out[v] | p.inn[v]) & chosen), deg[v], -v),
            )
            order.append(best)
            chosen |= 1 << best
        self.order = order
        # per step: list of (earlier step index, pattern arc new->old, pattern arc old->new)
        self.steps = []
        for k, v in enumerate(order):
            cons = []
            for j in range(k):
                w = order[j]
                fwd = bool(p.out[v] >> w & 1)
                bwd = bool(p.inn[v] >> w & 1)
                if fwd or bwd or induced:
                    cons.append((j, fwd, bwd))
            self.steps.append(cons)
        self.min_out = [popcount(p.out[v]) for v in order]
        self.min_in = [popcount(p.inn[v]) for v in order]

    def __eq__(self, other):
        return isinstance(other, PatternQuery) and self._key == other._key

    def __hash__(self):
        return hash(self._key)

    def __repr__(self):
        return f"PatternQuery({self.pattern!r}, induced={self.induced})"

    def find(self, host: Digraph, through: int | None = None, degrees=None) -> list[int] | None:
        """Return ``m`` with pattern vertex ``v`` mapped to host vertex ``m[v]``, or None.

        ``through`` restricts the search to embeddings whose image contains that host
        vertex. ``degrees`` may carry precomputed ``host_degrees(host)``.
        """
        hn = host.n
        pn = self.pattern.n
        if pn > hn:
            return None
        hout, hin = host.out, host.inn
        full = (1 << hn) - 1
        outdeg, indeg = degrees or host_degrees(host)
        allowed = []
        cache: dict = {}
        for k in range(pn):
            key = (self.min_out[k], self.min_in[k])
            a = cache.get(key)
            if a is None:
                mo, mi = key
                a = 0
                for h in range(hn):
                    if outdeg[h] >= mo and indeg[h] >= mi:
                        a |= 1 << h
                cache[key] = a
            if not a:
                return None
            allowed.append(a)
        steps = self.steps
        induced = self.induced
        image = [0] * pn

        if through is None:
            if _search(0, 0, pn, steps, allowed, image, hout, hin, induced, full, -1, 0):
                return self._unpermute(image)
            return None
        tbit = 1 << through
        for anchor in range(pn):
            if not allowed[anchor] & tbit:
                continue
            if _search(0, 0, pn, steps, allowed, image, hout, hin, induced, full, anchor, through):
                return self._unpermute(image)
        return None

    def _unpermute(self, image: list[int]) -> list[int]:
        m = [0] * len(image)
        for k, v in enumerate(self.order):
            m[v] = image[k]
        return m


def host_degrees(host: Digraph) -> tuple[list[int], list[int]]:
    return [r.bit_count() for r in host.out], [r.bit_count() for r in host.inn]


def _search(k, used, pn, steps, allowed, image, hout, hin, induced, full, anchor, target):
    if k == pn:
        return True
    cand = allowed[k] & ~used
    for j, fwd, bwd in steps[k]:
        h = image[j]
        if fwd:
            cand &= hin[h]
        elif induced:
            cand &= ~hin[h]
        if bwd:
            cand &= hout[h]
        elif induced:
            cand &= ~hout[h]
        if not cand:
            return False
    if anchor >= 0:
        if k == anchor:
            cand &= 1 << target
        else:
            cand &= ~(1 << target)
    while cand:
        low = cand & -cand
        image[k] = low.bit_length() - 1
        if _search(k + 1, used | low, pn, steps, allowed, image, hout, hin, induced, full, anchor, target):
            return True
        cand ^= low
    return False


@lru_cache(maxsize=256)
def compile_pattern(pattern: Digraph, induced: bool) -> PatternQuery:
    return PatternQuery(pattern, induced)


def contains_pattern(host: Digraph, pattern: Digraph | PatternQuery, induced: bool = False) -> bool:
    q = pattern if isinstance(pattern, PatternQuery) else compile_pattern(pattern, induced)
    if q.pattern.n > host.n:
        raise DigraphError("pattern order exceeds host order")
    return q.find(host) is not None


# -- canonical form ------------------------------------------------------------


def _refine(n: int, out, inn, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by (out, in) neighbour counts per cell until stable."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new_cells = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            sig = {v: tuple((popcount(out[v] & m), popcount(inn[v] & m)) for m in masks) for v in c}
            groups: dict = {}
            for v in c:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                changed = True
                for key in sorted(groups):
                    new_cells.append(groups[key])
            else:
                new_cells.append(c)
        cells = new_cells
        if not changed:
            return cells


def _uniform(out, inn, cells: list[list[int]]) -> bool:
    """True iff every ordering inside each cell yields the same adjacency matrix."""
    masks = [sum(1 << v for v in c) for c in cells]
    for c, cm in zip(cells, masks):
        if len(c) == 1:
            continue
        for m in masks:
            if m == cm:
                # within a cell: all pairs digons, or no arcs at all
                pats = {out[v] & m & ~(1 << v) for v in c}
                if pats != {0} and any((out[v] & m) != (m & ~(1 << v)) for v in c):
                    return False
            else:
                if len({out[v] & m for v in c}) > 1 or len({inn[v] & m for v in c}) > 1:
                    return False
                if {out[v] & m for v in c} - {0, m} or {inn[v] & m for v in c} - {0, m}:
                    return False
    return True


def _encode(out, order: list[int]) -> int:
    pos = {v: i for i, v in enumerate(order)}
    code = 0
    for v in order:
        row = 0
        for w in _bits(out[v]):
            row |= 1 << (len(order) - 1 - pos[w])
        code = (code << len(order)) | row
    return code


def canonical_order(d: Digraph) -> list[int]:
    """A vertex ordering whose adjacency encoding is a class invariant."""
    n, out, inn = d.n, d.out, d.inn
    if n == 0:
        return []
    init: dict = {}
    for v in range(n):
        key = (popcount(out[v] & inn[v]), popcount(out[v]), popcount(inn[v]))
        init.setdefault(key, []).append(v)
    cells = _refine(n, out, inn, [init[k] for k in sorted(init)])
    best: list = [None, None]

    def visit(cells):
        if all(len(c) == 1 for c in cells) or _uniform(out, inn, cells):
            order = [v for c in cells for v in c]
            code = _encode(out, order)
            if best[0] is None or code < best[0]:
                best[0], best[1] = code, order
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        for v in cells[idx]:
            rest = [w for w in cells[idx] if w != v]
            visit(_refine(n, out, inn, cells[:idx] + [[v], rest] + cells[idx + 1:]))

    visit(cells)
    return best[1]


def canonical_code(d: Digraph) -> bytes:
    """Bytes equal for two digraphs iff they are isomorphic."""
    order = canonical_order(d)
    code = _encode(d.out, order)
    nbytes = (d.n * d.n + 7) // 8
    return bytes([d.n]) + code.to_bytes(nbytes, "big")


def canonical_form(d: Digraph) -> Digraph:
    """The representative of ``d``'s class whose labelling follows the canonical order."""
    order = canonical_order(d)
    perm = [0] * d.n
    for i, v in enumerate(order):
        perm[v] = i
    return d.relabel(perm)


def is_isomorphic(a: Digraph, b: Digraph) -> bool:
    return a.n == b.n and a.size == b.size and canonical_code(a) == canonical_code(b)


# -- small named builders used throughout -------------------------------------


def transitive_tournament(n: int) -> Digraph:
    return Digraph(n, [(i, j) for j in range(n) for i in range(j)])


def bidirected_complete(n: int) -> Digraph:
    return Digraph(n, [(i, j) for i in range(n) for j in range(n) if i != j])


def directed_cycle(n: int) -> Digraph:
    return Digraph(n, [(i, (i + 1) % n) for i in range(n)])
