"""Exhaustive candidate pipelines: the F-family sweep, the F+ check, digon
completions with their extensions, and the per-maximum-acyclic-set enumeration.

Every pipeline keeps one representative per isomorphism class, relabelled to
canonical form, so listings do not depend on discovery order or worker count.
"""

from __future__ import annotations

import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .catalog import ObstructionSet, build, reversed_tt8_family, standard_obstructions, t_family
from .dicolour import every_arc_has_uv_colouring, is_two_dicolourable, max_acyclic_subset_size
from .digraph import Digraph, canonical_code, canonical_form, compile_pattern, host_degrees, transitive_tournament

log = logging.getLogger(__name__)

# pairs of F left unoriented, in the order their bits are read
F_MISSING_PAIRS = (
    (6, 2), (6, 3), (6, 4), (6, 5), (6, 7), (6, 8), (7, 0), (7, 1),
    (7, 4), (7, 5), (7, 8), (8, 0), (8, 1), (8, 2), (8, 3),
)

# relation of an existing vertex i to the new vertex
TO_NEW, FROM_NEW, DIGON = 0, 1, 2


@dataclass(frozen=True)
class OrientationCode:
    """Base-3 word; digit ``i`` relates existing vertex ``i`` to the new vertex."""

    digits: tuple[int, ...]

    def __post_init__(self):
        if any(x not in (0, 1, 2) for x in self.digits):
            raise ValueError(f"digits must be 0, 1 or 2: {self.digits}")

    @classmethod
    def from_int(cls, k: int, length: int) -> "OrientationCode":
        if not 0 <= k < 3 ** length:
            raise ValueError(f"{k} does not fit in {length} ternary digits")
        digits = []
        for _ in range(length):
            k, r = divmod(k, 3)
            digits.append(r)
        return cls(tuple(reversed(digits)))

    def to_int(self) -> int:
        k = 0
        for x in self.digits:
            k = 3 * k + x
        return k

    def __str__(self):
        return "".join(map(str, self.digits))

    def __len__(self):
        return len(self.digits)

    def extend(self, d: Digraph) -> Digraph:
        if len(self.digits) != d.n:
            raise ValueError(f"code length {len(self.digits)} does not match order {d.n}")
        w = d.n
        arcs = list(d.arcs())
        for i, x in enumerate(self.digits):
            if x != FROM_NEW:
                arcs.append((i, w))
            if x != TO_NEW:
                arcs.append((w, i))
        return Digraph(w + 1, arcs)


def ternary(k: int, n: int) -> str:
    return str(OrientationCode.from_int(k, n))


# -- the filter ---------------------------------------------------------------------


class CandidateFilter:
    """Obstruction-freeness plus a uv-colouring for every arc.

    ``check`` accepts an anchor vertex: when the caller knows that ``d`` minus the
    arcs at some pair containing ``through`` already passed, only pattern copies
    through that vertex can be new. Colour classes found for a parent can be
    passed as ``hints`` and are re-validated before any search.
    """

    def __init__(self, obs: ObstructionSet):
        self.obstructions = obs
        self.subdigraph_queries = [compile_pattern(p, False) for p in obs.forbidden_subdigraphs]
        self.induced_queries = [compile_pattern(p, True) for p in obs.forbidden_induced_subdigraphs]

    def __call__(self, d: Digraph) -> bool:
        return self.check(d)

    def obstruction_free(self, d: Digraph, through: Optional[int] = None) -> bool:
        degrees = host_degrees(d)
        for q in self.subdigraph_queries:
            if q.pattern.n <= d.n and q.find(d, through, degrees) is not None:
                return False
        for q in self.induced_queries:
            if q.pattern.n <= d.n and q.find(d, through, degrees) is not None:
                return False
        return True

    def check(self, d: Digraph, through: Optional[int] = None, hints=None, witnesses=None) -> bool:
        if not self.obstruction_free(d, through):
            return False
        return every_arc_has_uv_colouring(d, hints, witnesses)


def candidate_filter(d: Digraph, obs: ObstructionSet) -> bool:
    return CandidateFilter(obs).check(d)


# -- stores and reports ------------------------------------------------------------


class CandidateStore:
    """Digraphs keyed by canonical code; iteration is in ascending code order."""

    def __init__(self, members: Iterable[Digraph] = ()):
        self._by_code: dict[bytes, Digraph] = {}
        for d in members:
            self.add(d)

    def add(self, d: Digraph, code: Optional[bytes] = None) -> bool:
        code = canonical_code(d) if code is None else code
        if code in self._by_code:
            return False
        self._by_code[code] = canonical_form(d)
        return True

    def __contains__(self, d: Digraph) -> bool:
        return canonical_code(d) in self._by_code

    def __len__(self):
        return len(self._by_code)

    def __iter__(self) -> Iterator[Digraph]:
        return iter(self.members())

    def members(self) -> list[Digraph]:
        return [self._by_code[c] for c in sorted(self._by_code)]

    def codes(self) -> list[bytes]:
        return sorted(self._by_code)


@dataclass
class Generation:
    label: str
    members: list[Digraph]
    # None when the stage does not test dichromatic number
    dicritical: Optional[list[Digraph]] = field(default_factory=list)

    @property
    def count(self) -> int:
        return len(self.members)


@dataclass
class PipelineReport:
    name: str
    generations: list[Generation] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def render(self) -> str:
        out = []
        for g in self.generations:
            head = f"pipeline={self.name} generation={g.label} count={g.count}"
            if g.dicritical is not None:
                head += f" dicritical={len(g.dicritical)}"
            out.append(head)
            out.extend(d.to_dmat().rstrip("\n") for d in g.members)
        out.extend(self.notes)
        return "\n".join(out) + "\n"

    def counts(self) -> list[int]:
        return [g.count for g in self.generations]


# -- progress ----------------------------------------------------------------------


class Progress:
    """Coarse text progress bar on stderr."""

    def __init__(self, total: int, label: str, enabled: bool = True, stream=None):
        self.total = max(total, 1)
        self.label = label
        self.enabled = enabled
        self.stream = stream or sys.stderr
        self._shown = -1

    def update(self, done: int) -> None:
        if not self.enabled:
            return
        filled = 50 * done // self.total
        if filled == self._shown and done != self.total:
            return
        self._shown = filled
        bar = "#" * filled + "-" * (50 - filled)
        end = "\n" if done >= self.total else ""
        self.stream.write(f"\r{self.label}: |{bar}| {100 * done / self.total:.1f}%{end}")
        self.stream.flush()


# -- the 2^15 orientations of F -----------------------------------------


def f_family_member(bits: str) -> Digraph:
    """Tournament containing F whose missing pairs follow ``bits`` ('0' keeps the listed direction)."""
    if len(bits) != len(F_MISSING_PAIRS) or set(bits) - {"0", "1"}:
        raise ValueError("need a 15-character binary string")
    f = build("F")
    arcs = list(f.arcs())
    for (a, b), ch in zip(F_MISSING_PAIRS, bits):
        arcs.append((a, b) if ch == "0" else (b, a))
    return Digraph(9, arcs)


def _c3c3_induced_filter() -> CandidateFilter:
    return CandidateFilter(ObstructionSet((), (build("C3_join_C3"),)))


def sweep_f_family(pruned: bool = True, progress: bool = False) -> list[Digraph]:
    """Members of the F family passing the filter, in increasing code order.

    With ``pruned`` the pairs are oriented one at a time and a branch is cut as
    soon as the partial digraph fails; failure is inherited by every completion,
    so the survivors are the same as checking all 2^15 tournaments.
    """
    flt = _c3c3_induced_filter()
    if not pruned:
        bar = Progress(2 ** 15, "F family", progress)
        found = []
        for i in range(2 ** 15):
            d = f_family_member(format(i, "015b"))
            if flt.check(d):
                found.append(d)
            bar.update(i + 1)
        return found

    found = []
    f = build("F")

    def go(k: int, out: list[int], hints) -> None:
        if k == len(F_MISSING_PAIRS):
            found.append(Digraph.from_masks(out))
            return
        a, b = F_MISSING_PAIRS[k]
        for tail, head in ((a, b), (b, a)):
            out[tail] |= 1 << head
            d = Digraph.from_masks(out)
            wit: dict = {}
            if flt.check(d, through=a, hints=hints, witnesses=wit):
                go(k + 1, out, wit)
            out[tail] &= ~(1 << head)

    base = list(f.out)
    wit0: dict = {}
    if flt.check(f, witnesses=wit0):
        go(0, base, wit0)
    return found


# -- F+ extensions of T1..T4 --------------------------------------------


@dataclass
class FPlusResult:
    examined: int
    survivors: list[Digraph]


def f_plus_candidates(seeds: Optional[Sequence[Digraph]] = None) -> list[Digraph]:
    seeds = list(t_family() if seeds is None else seeds)
    result = []
    for orientation in range(8):
        bits = format(orientation, "03b")
        for t9 in seeds:
            arcs = list(t9.arcs()) + [(9, v) for v in range(6)]
            for v, ch in zip(range(6, 9), bits):
                arcs.append((v, 9) if ch == "0" else (9, v))
            result.append(Digraph(10, arcs))
    return result


def check_f_plus_extensions(seeds: Optional[Sequence[Digraph]] = None) -> FPlusResult:
    flt = _c3c3_induced_filter()
    cands = f_plus_candidates(seeds)
    return FPlusResult(len(cands), [d for d in cands if flt.check(d)])


# -- digon completions and extensions of T1..T4 -------------------------


def completion_obstructions() -> ObstructionSet:
    names = ("S4_bidirected", "K2_join_K2", "O4", "O5", "K2_join_C3", "C3_join_K2", "C3_join_C3")
    return ObstructionSet(tuple(build(n) for n in names), (transitive_tournament(8),))


def digon_completion_levels(seeds: Sequence[Digraph], obs: ObstructionSet) -> list[CandidateStore]:
    """Level k holds the surviving digraphs with k simple arcs turned into digons."""
    flt = CandidateFilter(obs)
    levels = [CandidateStore(seeds)]
    current = [(d, flt.check(d)) for d in levels[0]]
    while current:
        nxt = CandidateStore()
        passed = []
        for d, parent_ok in current:
            hints: dict = {}
            if parent_ok:
                every_arc_has_uv_colouring(d, witnesses=hints)
            for u, v in d.arcs():
                if d.has_arc(v, u):
                    continue
                child = d.add_arcs([(v, u)])
                code = canonical_code(child)
                if code in nxt._by_code:
                    continue
                ok = flt.check(child, through=u if parent_ok else None, hints=hints or None)
                if ok:
                    nxt.add(child, code)
        if not len(nxt):
            break
        levels.append(nxt)
        current = [(d, True) for d in nxt]
    return levels


def digon_completions(seeds: Sequence[Digraph], obs: ObstructionSet) -> CandidateStore:
    """Seeds plus every surviving single-digon refinement, closed under repetition."""
    store = CandidateStore()
    for level in digon_completion_levels(seeds, obs):
        for d in level:
            store.add(d)
    return store


# -- one-vertex extensions ---------------------------------------------------------


def pruned_extensions(base: Digraph, flt: CandidateFilter) -> list[Digraph]:
    """All 1-extensions of ``base`` passing ``flt``, new vertex ``n``.

    The new vertex's relation to old vertex 0, 1, ... is decided in turn, and
    the filter runs on each partial digraph. Forbidden subdigraphs and missing
    uv-colourings persist when arcs are added, and every forbidden induced
    pattern used here is semi-complete, so a copy never uses an undecided pair:
    a failing partial digraph has no passing completion.
    """
    n = base.n + 1
    w = n - 1
    root = base.add_vertex()
    root_hints: dict = {}
    if not flt.check(root, witnesses=root_hints):
        return []
    result = []
    out = list(root.out)

    def go(p: int, hints) -> None:
        if p == w:
            result.append(Digraph.from_masks(out))
            return
        pb, wb = 1 << p, 1 << w
        # fixed branch order: new -> p, p -> new, digon
        for choice in (FROM_NEW, TO_NEW, DIGON):
            if choice != TO_NEW:
                out[w] |= pb
            if choice != FROM_NEW:
                out[p] |= wb
            d = Digraph.from_masks(out)
            wit: dict = {}
            if flt.check(d, through=w, hints=hints, witnesses=wit):
                go(p + 1, wit)
            out[w] &= ~pb
            out[p] &= ~wb

    go(0, root_hints)
    return result


def unpruned_extensions(base: Digraph, flt: CandidateFilter) -> list[Digraph]:
    """Every orientation code built in full, then filtered."""
    result = []
    for k in range(3 ** base.n):
        d = OrientationCode.from_int(k, base.n).extend(base)
        if flt.check(d):
            result.append(d)
    return result


def _extend_chunk(args) -> list[tuple[bytes, Digraph]]:
    bases, obs = args
    flt = CandidateFilter(obs)
    found = {}
    for base in bases:
        for d in pruned_extensions(base, flt):
            code = canonical_code(d)
            if code not in found:
                found[code] = canonical_form(d)
    return list(found.items())


def _chunks(items: list, parts: int) -> list[list]:
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    out, start = [], 0
    for i in range(parts):
        end = start + size + (1 if i < extra else 0)
        out.append(items[start:end])
        start = end
    return out


def one_extensions(
    store: Iterable[Digraph],
    obs: ObstructionSet,
    threads: int = 1,
    progress: bool = False,
    label: str = "extensions",
) -> CandidateStore:
    """Filtered, deduplicated 1-extensions of every member of ``store``."""
    bases = list(store)
    result = CandidateStore()
    if not bases:
        return result
    bar = Progress(len(bases), label, progress)
    if threads <= 1:
        flt = CandidateFilter(obs)
        for i, base in enumerate(bases):
            for d in pruned_extensions(base, flt):
                result.add(d)
            bar.update(i + 1)
        return result
    # many small chunks balance the load; results are merged by code
    chunks = _chunks(bases, threads * 8)
    with ProcessPoolExecutor(max_workers=threads) as pool:
        for i, part in enumerate(pool.map(_extend_chunk, [(c, obs) for c in chunks])):
            for code, d in part:
                if code not in result._by_code:
                    result._by_code[code] = d
            bar.update(i + 1 if i + 1 < len(chunks) else len(bases))
    bar.update(len(bases))
    return result


# -- completion pipeline -------------------------------------------------------------


def f_completion_pipeline(threads: int = 1, progress: bool = False) -> PipelineReport:
    obs = completion_obstructions()
    report = PipelineReport("f-completions")
    completions = digon_completions(t_family(), obs)
    members = completions.members()
    report.generations.append(
        Generation("completions", members, [d for d in members if not is_two_dicolourable(d)])
    )
    current = completions
    for k in (1, 2):
        current = one_extensions(current, obs, threads, progress, f"{k}-extensions")
        members = current.members()
        report.generations.append(
            Generation(f"{k}-extensions", members, [d for d in members if not is_two_dicolourable(d)])
        )
    return report


# -- enumeration by maximum acyclic set size ----------------------------------------------------------


def max_acyclic_obstructions(i: int) -> ObstructionSet:
    if not 1 <= i <= 7:
        raise ValueError(f"maximum acyclic size must lie in [1, 7], got {i}")
    induced = (transitive_tournament(i + 1),) if i < 7 else reversed_tt8_family()
    return standard_obstructions(induced)


@dataclass
class EnumerationResult:
    max_acyclic: int
    report: PipelineReport
    discrepancies: list[tuple[int, Digraph, int]] = field(default_factory=list)

    @property
    def counts(self) -> list[tuple[int, int]]:
        return [(int(g.label), g.count) for g in self.report.generations]

    @property
    def dicritical(self) -> list[Digraph]:
        return [d for g in self.report.generations for d in g.dicritical or ()]


def enumerate_by_max_acyclic(
    i: int,
    threads: int = 1,
    progress: bool = False,
    verify_max_acyclic: bool = False,
) -> EnumerationResult:
    """Grow from TT_i by filtered 1-extensions until a generation is empty."""
    obs = max_acyclic_obstructions(i)
    report = PipelineReport(f"enumerate-{i}")
    result = EnumerationResult(i, report)
    current: Iterable[Digraph] = [transitive_tournament(i)]
    n = i + 1
    while True:
        log.info("max acyclic %d: computing candidates on %d vertices", i, n)
        store = one_extensions(current, obs, threads, progress, f"i={i} n={n}")
        members = store.members()
        dicritical = [d for d in members if not is_two_dicolourable(d)]
        report.generations.append(Generation(str(n), members, dicritical))
        if verify_max_acyclic:
            for d in members:
                size = max_acyclic_subset_size(d)
                if size != i:
                    result.discrepancies.append((n, d, size))
        if not members:
            break
        current = members
        n += 1
    if verify_max_acyclic:
        report.notes.append(f"verify-max-acyclic discrepancies={len(result.discrepancies)}")
    return result


# -- classification -------------------------------------------------------------------

FORCED_NAMES = ("W3", "R(K2,K2)", "R(K2,C3)", "R(C3,K2)", "R(C3,C3)")


@dataclass
class Classification:
    enumerations: list[EnumerationResult]
    forced: list[Digraph]
    classes: list[Digraph]

    @property
    def tournaments(self) -> list[Digraph]:
        return [d for d in self.classes if d.is_tournament()]


def classify(threads: int = 1, progress: bool = False, on_enumeration: Optional[Callable] = None) -> Classification:
    """Union of the enumeration outputs and the structurally forced digraphs."""
    runs = []
    for i in range(1, 8):
        res = enumerate_by_max_acyclic(i, threads, progress)
        runs.append(res)
        if on_enumeration is not None:
            on_enumeration(res)
    forced = [build(n) for n in FORCED_NAMES]
    store = CandidateStore()
    for res in runs:
        for d in res.dicritical:
            store.add(d)
    for d in forced:
        store.add(d)
    return Classification(runs, forced, store.members())
