import pytest

import figures
from dyck_heyting.heyting import is_regular, regulars
from dyck_heyting.lattice import enumerate_family, leq
from dyck_heyting.paths import HeightSeqA, MonotonePath, word_to_heights_b

CASES = {
    "A4": (
        lambda: enumerate_family("A", 4),
        {k: HeightSeqA(v) for k, v in figures.A4_NODES.items()},
        figures.A4_HIGHLIGHTED,
        figures.A4_EDGES,
    ),
    "B3": (
        lambda: enumerate_family("B", 3),
        {k: word_to_heights_b(v) for k, v in figures.B3_NODES.items()},
        figures.B3_HIGHLIGHTED,
        figures.B3_EDGES,
    ),
    "M33": (
        lambda: enumerate_family("mono", 3, 3),
        {k: MonotonePath(3, v) for k, v in figures.M33_NODES.items()},
        figures.M33_HIGHLIGHTED,
        figures.M33_EDGES,
    ),
}


@pytest.mark.parametrize("name", CASES)
def test_nodes_are_the_lattice(name):
    build, nodes, _, _ = CASES[name]
    snap = build()
    assert len(nodes) == len(set(nodes.values())) == len(snap)
    assert set(nodes.values()) == set(snap)


@pytest.mark.parametrize("name", CASES)
def test_highlighted_nodes_are_the_regular_elements(name):
    _, nodes, highlighted, _ = CASES[name]
    assert {k for k, p in nodes.items() if is_regular(p)} == highlighted


@pytest.mark.parametrize("name", CASES)
def test_edges_are_the_covers(name):
    build, nodes, _, edges = CASES[name]
    snap = build()
    drawn = set()
    for a, b in edges:
        lo, hi = nodes[a], nodes[b]
        if not leq(lo, hi):
            lo, hi = hi, lo
        drawn.add((snap.id_of(lo), snap.id_of(hi)))
    assert len(drawn) == len(edges)
    assert drawn == set(snap.covers)


def test_constructed_regulars_match_highlighting():
    a4 = {HeightSeqA(figures.A4_NODES[k]) for k in figures.A4_HIGHLIGHTED}
    b3 = {word_to_heights_b(figures.B3_NODES[k]) for k in figures.B3_HIGHLIGHTED}
    assert set(regulars("A", 4)) == a4
    assert set(regulars("B", 3)) == b3
