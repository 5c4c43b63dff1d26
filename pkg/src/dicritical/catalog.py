"""Named digraphs: obstructions, the eight dicritical digraphs, T1..T4."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources

from .digraph import (
    Digraph,
    DigraphError,
    bidirected_complete,
    canonical_code,
    directed_cycle,
    parse_dmat,
    transitive_tournament,
)

# F labels: 0..5 = u1..u6 (a TT6), 6, 7, 8 = x1, x2, x3
F_TRIANGLES = ((0, 1, 6), (2, 3, 7), (4, 5, 8))


def directed_join(h1: Digraph, h2: Digraph) -> Digraph:
    """Disjoint union with every arc from the copy of ``h1`` to the copy of ``h2``."""
    a, b = h1.n, h2.n
    arcs = list(h1.arcs()) + [(a + x, a + y) for x, y in h2.arcs()]
    arcs += [(x, a + y) for x in range(a) for y in range(b)]
    return Digraph(a + b, arcs)


def _c3_join_c3() -> Digraph:
    arcs = []
    for i in range(3):
        arcs.append((i, (i + 1) % 3))
        arcs.append((i + 3, (i + 1) % 3 + 3))
        arcs.extend((i, j) for j in range(3, 6))
    return Digraph(6, arcs)


def _c3_join_k2() -> Digraph:
    arcs = []
    for i in range(3):
        arcs.append((i, (i + 1) % 3))
        arcs.extend((i, j) for j in range(3, 5))
    arcs += [(3, 4), (4, 3)]
    return Digraph(5, arcs)


def _k2_join_c3() -> Digraph:
    arcs = []
    for i in range(3):
        arcs.append((i, (i + 1) % 3))
        arcs.extend((j, i) for j in range(3, 5))
    arcs += [(3, 4), (4, 3)]
    return Digraph(5, arcs)


def _k2_join_k2() -> Digraph:
    arcs = []
    for i in range(2):
        arcs.append((i, (i + 1) % 2))
        arcs.append((i + 2, (i + 1) % 2 + 2))
        arcs.extend((i, j) for j in range(2, 4))
    return Digraph(4, arcs)


def _f() -> Digraph:
    arcs = [(j, i) for i in range(6) for j in range(i)]
    arcs += [(6, 0), (1, 6), (7, 2), (3, 7), (8, 4), (5, 8)]
    return Digraph(9, arcs)


def _f_plus() -> Digraph:
    # u0 is vertex 9, dominating the TT6
    return Digraph(10, _f().arcs() + [(9, i) for i in range(6)])


def _f_minus() -> Digraph:
    # u7 is vertex 9, dominated by the TT6
    return Digraph(10, _f().arcs() + [(i, 9) for i in range(6)])


def _o4() -> Digraph:
    arcs = [(0, i) for i in range(1, 4)] + [(i, 3) for i in range(1, 3)] + [(1, 2), (2, 1)]
    return Digraph(4, arcs)


def _o5() -> Digraph:
    arcs = [(0, i) for i in range(1, 5)] + [(i, 4) for i in range(1, 4)] + [(1, 2), (2, 3), (3, 1)]
    return Digraph(5, arcs)


def _s4() -> Digraph:
    return Digraph(4, [a for i in range(1, 4) for a in ((i, 0), (0, i))])


def _w3() -> Digraph:
    # hub 0 in digons with 1, 2, 3; rim 1 -> 2 -> 3 -> 1
    arcs = [a for i in range(1, 4) for a in ((0, i), (i, 0))]
    arcs += [(1, 2), (2, 3), (3, 1)]
    return Digraph(4, arcs)


def _h5() -> Digraph:
    # matrix printed by the maximum-acyclic-set-3 enumeration run
    return Digraph.from_matrix(
        [
            [0, 1, 1, 0, 0],
            [0, 0, 1, 0, 1],
            [0, 0, 0, 1, 1],
            [1, 1, 0, 0, 1],
            [1, 0, 1, 1, 0],
        ]
    )


def h5_from_figure() -> Digraph:
    """H5 read off the drawing: vertices u0..u4 as 0..4."""
    arcs = [(0, 4), (0, 1), (4, 0), (1, 0), (4, 1), (1, 3), (1, 2), (3, 4), (2, 4), (3, 0), (0, 2), (2, 3)]
    return Digraph(5, arcs)


def _p7() -> Digraph:
    return Digraph(7, [(i, (i + s) % 7) for i in range(7) for s in (1, 2, 4)])


def rotative(h1: Digraph, h2: Digraph) -> Digraph:
    """R(H1, H2): hub 0, then H1, then H2, with hub => H1 => H2 => hub."""
    a, b = h1.n, h2.n
    arcs = [(1 + x, 1 + y) for x, y in h1.arcs()]
    arcs += [(1 + a + x, 1 + a + y) for x, y in h2.arcs()]
    arcs += [(0, 1 + x) for x in range(a)]
    arcs += [(1 + x, 1 + a + y) for x in range(a) for y in range(b)]
    arcs += [(1 + a + y, 0) for y in range(b)]
    return Digraph(1 + a + b, arcs)


def _h(name: str) -> Digraph:
    if name in ("K2", "bidirected_K2"):
        return bidirected_complete(2)
    if name == "C3":
        return directed_cycle(3)
    raise DigraphError(f"unknown rotative part {name!r}")


_FIXED = {
    "O4": _o4,
    "O5": _o5,
    "S4_bidirected": _s4,
    "K2_join_K2": _k2_join_k2,
    "K2_join_C3": _k2_join_c3,
    "C3_join_K2": _c3_join_k2,
    "C3_join_C3": _c3_join_c3,
    "F": _f,
    "F_plus": _f_plus,
    "F_minus": _f_minus,
    "W3": _w3,
    "H5": _h5,
    "P7": _p7,
}

_PARAM = re.compile(r"^(TT|bidirected_K)\((\d+)\)$")
_ROT = re.compile(r"^R\((\w+),\s*(\w+)\)$")


@lru_cache(maxsize=None)
def build(name: str) -> Digraph:
    """Digraph by catalogue name, e.g. ``"O5"``, ``"TT(8)"``, ``"R(K2,C3)"``."""
    if name in _FIXED:
        return _FIXED[name]()
    m = _PARAM.match(name)
    if m:
        n = int(m.group(2))
        if n < 1:
            raise DigraphError(f"order must be positive in {name!r}")
        return transitive_tournament(n) if m.group(1) == "TT" else bidirected_complete(n)
    m = _ROT.match(name)
    if m:
        return rotative(_h(m.group(1)), _h(m.group(2)))
    raise DigraphError(f"unknown catalogue name {name!r}")


NAMES = tuple(_FIXED) + ("TT(n)", "bidirected_K(n)", "R(H1,H2)")

# the eight 3-dicritical semi-complete digraphs, with golden-file stems
FIGURE_ONE = (
    ("K3_bidirected", "bidirected_K(3)"),
    ("W3", "W3"),
    ("R_K2_K2", "R(K2,K2)"),
    ("H5", "H5"),
    ("R_K2_C3", "R(K2,C3)"),
    ("R_C3_K2", "R(C3,K2)"),
    ("R_C3_C3", "R(C3,C3)"),
    ("P7", "P7"),
)


def figure_one() -> dict[str, Digraph]:
    return {stem: build(name) for stem, name in FIGURE_ONE}


def load_golden(stem: str) -> Digraph:
    text = resources.files("dicritical").joinpath("data", "golden", f"{stem}.dmat").read_text()
    return parse_dmat(text)


def t_family() -> list[Digraph]:
    """T1..T4 from the bundled golden matrices."""
    return [load_golden(f"T{i}") for i in range(1, 5)]


@lru_cache(maxsize=None)
def reversed_tt8_family() -> tuple[Digraph, ...]:
    """One representative per class of TT8 with a single arc reversed, in arc order."""
    tt8 = transitive_tournament(8)
    seen = set()
    family = []
    for u, v in tt8.arcs():
        rev = tt8.delete_arc(u, v).add_arcs([(v, u)])
        code = canonical_code(rev)
        if code not in seen:
            seen.add(code)
            family.append(rev)
    return tuple(family)


@dataclass(frozen=True)
class ObstructionSet:
    forbidden_subdigraphs: tuple[Digraph, ...] = ()
    forbidden_induced_subdigraphs: tuple[Digraph, ...] = field(default=())

    def __post_init__(self):
        for group in (self.forbidden_subdigraphs, self.forbidden_induced_subdigraphs):
            codes = [canonical_code(d) for d in group]
            if len(set(codes)) != len(codes):
                raise DigraphError("obstruction list contains isomorphic duplicates")


STANDARD_NAMES = ("S4_bidirected", "K2_join_K2", "O4", "O5", "K2_join_C3", "C3_join_K2", "C3_join_C3", "F")


def standard_obstructions(induced: tuple[Digraph, ...] | list[Digraph] = ()) -> ObstructionSet:
    """The eight forbidden subdigraphs, plus caller-supplied induced ones."""
    return ObstructionSet(tuple(build(n) for n in STANDARD_NAMES), tuple(induced))
