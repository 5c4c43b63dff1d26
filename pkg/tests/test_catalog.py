from collections import defaultdict

import oracles
import pytest
import reference_values

from dicritical import DigraphError, canonical_code, cli, contains_pattern, is_three_dicritical
from dicritical.catalog import (
    FIGURE_ONE,
    STANDARD_NAMES,
    F_TRIANGLES,
    ObstructionSet,
    build,
    directed_join,
    figure_one,
    h5_from_figure,
    load_golden,
    reversed_tt8_family,
    standard_obstructions,
    t_family,
)
from dicritical.digraph import bidirected_complete, directed_cycle, parse_dmat, transitive_tournament


def test_unknown_name():
    with pytest.raises(DigraphError):
        build("Q9")
    with pytest.raises(DigraphError):
        build("TT(0)")
    with pytest.raises(DigraphError):
        build("R(K2,K4)")


def test_o5_shape():
    o5 = build("O5")
    assert o5.n == 5 and o5.size == 10
    # u -> everything, triangle -> v, u -> v
    assert sorted(o5.out_degree(v) for v in range(5)) == [0, 2, 2, 2, 4]
    assert o5.out_degree(0) == 4
    assert contains_pattern(o5.induced_subdigraph([1, 2, 3]), directed_cycle(3), induced=True)


def test_f_shape():
    f = build("F")
    assert f.n == 9 and f.size == 15 + 6
    assert f.induced_subdigraph(range(6)) == transitive_tournament(6)
    missing = [(u, v) for u in range(9) for v in range(u + 1, 9) if not (f.has_arc(u, v) or f.has_arc(v, u))]
    assert len(missing) == 15
    for tri in F_TRIANGLES:
        assert contains_pattern(f.induced_subdigraph(tri), directed_cycle(3))


def test_tt1():
    d = build("TT(1)")
    assert d.n == 1 and d.size == 0


def test_joins_match_generic_construction():
    k2, c3 = bidirected_complete(2), directed_cycle(3)
    pairs = {"K2_join_K2": (k2, k2), "K2_join_C3": (k2, c3), "C3_join_K2": (c3, k2), "C3_join_C3": (c3, c3)}
    for name, (a, b) in pairs.items():
        assert canonical_code(build(name)) == canonical_code(directed_join(a, b)), name


def test_t_family_matches_printed_matrices():
    assert [d.to_dmat() for d in t_family()] == reference_values.t_matrices()
    assert t_family()[0].to_dmat().splitlines()[1] == "011111011"


def test_t_family_members_extend_f():
    f_arcs = set(build("F").arcs())
    for t in t_family():
        assert f_arcs <= set(t.arcs())
        assert t.is_semicomplete() and t.is_tournament()


def test_printed_dicritical_matrices_are_goldens():
    printed = [parse_dmat(text) for text in reference_values.printed_dicritical()]
    assert printed == [load_golden("K3_bidirected"), load_golden("H5"), load_golden("P7")]


def test_golden_files_match_constructors():
    for stem, name in FIGURE_ONE:
        golden = load_golden(stem)
        assert canonical_code(golden) == canonical_code(build(name)), stem
        assert oracles.isomorphic(golden, build(name)), stem


def test_h5_drawing_matches_matrix():
    assert oracles.isomorphic(h5_from_figure(), build("H5"))


def test_figure_one_is_three_dicritical():
    for stem, d in figure_one().items():
        assert oracles.three_dicritical(d), stem
        assert is_three_dicritical(d), stem


def test_figure_one_pairwise_distinct():
    codes = {canonical_code(d) for d in figure_one().values()}
    assert len(codes) == 8
    tournaments = [stem for stem, d in figure_one().items() if d.is_tournament()]
    assert sorted(tournaments) == ["P7", "R_C3_C3"]


def test_w3_hub_has_three_digons():
    w3 = build("W3")
    assert sorted(w3.digons()) == [(0, 1), (0, 2), (0, 3)]
    rim = w3.induced_subdigraph([1, 2, 3])
    assert oracles.isomorphic(rim, directed_cycle(3))


@pytest.mark.parametrize("h1, h2", [("K2", "K2"), ("K2", "C3"), ("C3", "K2"), ("C3", "C3")])
def test_rotative_domination(h1, h2):
    d = build(f"R({h1},{h2})")
    a = 2 if h1 == "K2" else 3
    b = 2 if h2 == "K2" else 3
    hub, first, second = [0], list(range(1, 1 + a)), list(range(1 + a, 1 + a + b))
    for x_set, y_set in ((hub, first), (first, second), (second, hub)):
        for x in x_set:
            for y in y_set:
                assert d.has_arc(x, y) and not d.has_arc(y, x)
    assert d.is_semicomplete()


def test_f_plus_reverse_is_f_minus():
    assert oracles.isomorphic(build("F_plus").reverse(), build("F_minus"))
    assert canonical_code(build("F_plus").reverse()) == canonical_code(build("F_minus"))


def test_reversed_tt8_family_matches_brute_force():
    tt8 = transitive_tournament(8)
    reversals = [tt8.delete_arc(u, v).add_arcs([(v, u)]) for u, v in tt8.arcs()]
    assert len(reversals) == 28
    # score sequences split the candidates; brute force within each bucket
    buckets = defaultdict(list)
    for r in reversals:
        buckets[tuple(sorted(r.out_degree(v) for v in range(8)))].append(r)
    classes = 0
    for bucket in buckets.values():
        reps = []
        for r in bucket:
            if not any(oracles.isomorphic(r, s) for s in reps):
                reps.append(r)
        classes += len(reps)
    family = reversed_tt8_family()
    assert len(family) == classes
    assert all(d.size == 28 for d in family)
    assert any(oracles.isomorphic(d, tt8) for d in family)


def test_standard_obstructions():
    obs = standard_obstructions()
    assert len(obs.forbidden_subdigraphs) == 8
    codes = {canonical_code(d) for d in obs.forbidden_subdigraphs}
    for name in ("O4", "O5", "F", "S4_bidirected"):
        assert canonical_code(build(name)) in codes
    assert len(STANDARD_NAMES) == 8
    assert standard_obstructions([transitive_tournament(4)]).forbidden_induced_subdigraphs == (transitive_tournament(4),)


def test_obstruction_set_rejects_isomorphic_duplicates():
    c3 = directed_cycle(3)
    with pytest.raises(DigraphError):
        ObstructionSet((c3, c3.relabel([1, 2, 0])))


def test_expected_counts_match_source_log():
    # the bundled expectations drive --strict; check them against the source text
    table = cli.load_expected()
    log = reference_values.enumeration_log()
    for i in range(1, 8):
        row = dict(table[f"enumerate-{i}"])
        assert row.pop("dicritical") == sum(k for _, _, k in log[i])
        assert [(int(n), c) for n, c in row.items()] == [(n, c) for n, c, _ in log[i]]
    assert table["sweep-f"]["survivors"] == reference_values.log_number(r"Number of candidates:\s+(\d+)")
    assert table["f-plus"]["survivors"] == reference_values.log_number(r"containing F\+:\s+(\d+)")
    assert table["f-completions"]["completions"] == reference_values.log_number(r"There are (\d+) possible completions")
    assert table["f-completions"]["1-extensions"] == reference_values.log_number(
        r"Number of\s+1 -extensions up to isomorphism:\s+(\d+)"
    )
