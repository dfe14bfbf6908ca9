import random

import pytest

from legrep.diagram import (
    DiagramError,
    catalog,
    classical_invariants,
    maslov_potential,
    parse_front,
    rotation_number,
    writhe,
)

from fronts import commute_far_events, random_front
from helpers import KNOTS


def test_unknot_invariants():
    inv = classical_invariants(catalog("unknot"))
    assert (inv.tb, inv.r, inv.writhe, inv.right_cusps) == (-1, 0, 0, 1)


def test_trefoil_invariants():
    inv = classical_invariants(catalog("trefoil"))
    assert (inv.tb, inv.r, inv.writhe) == (1, 0, 3)
    assert sorted(inv.crossing_gradings.values()) == [0, 0, 0]


def test_double_stabilized_unknot():
    inv = classical_invariants(catalog("unknot_s2"))
    assert (inv.tb, inv.r) == (-3, 0)


def test_figure_eight_invariants():
    inv = classical_invariants(catalog("figure8"))
    assert (inv.tb, inv.r) == (-3, 0)
    assert sorted(inv.crossing_gradings.values()) == [-1, -1, 0, 0, 0, 1, 1]


def test_single_stabilization_has_no_potential():
    d = parse_front("L 1\nL 2\nR 1\n* 1\nR 1\n")
    inv = classical_invariants(d)
    assert abs(inv.r) == 1
    assert inv.tb == -2
    assert inv.potential is None and inv.crossing_gradings is None


def test_unknown_catalog_name():
    with pytest.raises(KeyError, match="unknown catalog knot"):
        catalog("nope")


@pytest.mark.parametrize(
    "text,line,message",
    [
        ("L 1\nQ 1\n", 2, "unknown event"),
        ("L 1\nX 2\n* 1\nR 1\n", 2, "invalid position"),
        ("L 1\n* 1\nR x\n", 3, "not an integer"),
        ("L 1\nR 2\n", 2, "invalid position"),
        ("L 1\n* 1\n", None, "unbalanced cusps"),
        ("L 1\nR 1\n", None, "no basepoint"),
        ("L 1\n* 1\n* 2\nR 1\n", None, "multiple basepoints"),
        ("L 1\nL 3\n* 1\nR 3\nR 1\n", None, "multiple components"),
        ("L 1\n* 1\nR 1 2\n", 3, "expected"),
    ],
)
def test_parse_errors(text, line, message):
    with pytest.raises(DiagramError, match=message) as info:
        parse_front(text)
    assert info.value.line == line


def test_compact_tokens_and_comments():
    d = parse_front("# trefoil\nL1\nL1\nX2 # first crossing\nX2\nX2\n*1\nR1\nR1\n")
    assert d == catalog("trefoil")


@pytest.mark.parametrize("name", KNOTS)
def test_round_trip_catalog(name):
    d = catalog(name)
    text = d.serialize()
    assert parse_front(text) == d
    assert parse_front(text).serialize() == text


def test_round_trip_random_fronts():
    rng = random.Random(11)
    for _ in range(100):
        d = random_front(rng)
        assert parse_front(d.serialize()) == d


@pytest.mark.parametrize("name", KNOTS)
def test_potential_on_catalog(name):
    d = catalog(name)
    pot = maslov_potential(d)
    assert pot is not None
    k = d.basepoints()[0]
    assert pot(k, d.events[k].pos) == 0
    for g, width in enumerate(d.widths):
        assert len(pot.values[g]) == width
    # upper strand of a cusp sits one above the lower strand
    for k in d.left_cusps:
        i = d.events[k].pos
        assert pot(k + 1, i) == pot(k + 1, i + 1) + 1
    for k in d.right_cusps:
        i = d.events[k].pos
        assert pot(k, i) == pot(k, i + 1) + 1


def test_potential_exists_iff_rotation_zero():
    rng = random.Random(5)
    for _ in range(150):
        d = random_front(rng)
        assert (maslov_potential(d) is not None) == (rotation_number(d) == 0)


def test_tb_and_r_survive_planar_isotopy():
    rng = random.Random(7)
    moved = 0
    for _ in range(150):
        d = random_front(rng)
        inv = classical_invariants(d)
        for _ in range(5):
            d2 = commute_far_events(d, rng)
            if d2 is None:
                break
            moved += 1
            inv2 = classical_invariants(d2)
            assert (inv2.tb, inv2.r, writhe(d2)) == (inv.tb, inv.r, writhe(d))
            d = d2
    assert moved > 100
