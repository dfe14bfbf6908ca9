import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from legrep import matrix as mx
from legrep.field import make_field
from legrep.laurent import QValue, q_power
from legrep.reps import (
    HomotopyWitness,
    Representation,
    brute_force_reps,
    canonical_key,
    conjugate,
    conjugate_homotopic,
    count_reps,
    enumerate_orbits,
    equivalence_classes,
    expand_orbit,
    extend_unique_rep,
    homotopy_holds,
    is_representation,
    orbit_classes,
    rep_number,
)

from helpers import KNOTS, WITH_REPS, classes, dga, reps

SMALL = [(1, 2), (1, 3), (1, 4), (2, 2)]


# --- examples ----------------------------------------------------------------------


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_unknot_one_dimensional(q):
    (rho,) = reps("unknot", 1, q)
    F = make_field(q)
    assert rho.t == ((F.neg(1),),)
    assert rho.values == ()


def test_trefoil_counts():
    assert [len(reps("trefoil", 1, q)) for q in (2, 3, 4, 5)] == [5, 10, 17, 26]
    assert all(rho.t == ((1,),) for rho in reps("trefoil", 1, 2))


@pytest.mark.parametrize("n,q", SMALL + [(2, 3)])
def test_double_stabilized_unknot_has_none(n, q):
    assert reps("unknot_s2", n, q) == ()
    assert equivalence_classes(dga("unknot_s2"), []) == []


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_figure_eight_one_dimensional(q):
    assert len(reps("figure8", 1, q)) == q
    assert len(classes("figure8", 1, q)) == 1


def test_rep_number_examples():
    for q in (2, 3, 5):
        assert rep_number(dga("unknot"), 1, q) == q_power(q, 1) / (q - 1)
    assert rep_number(dga("trefoil"), 1, 2) == q_power(2, -1) * 5
    assert rep_number(dga("unknot_s2"), 1, 2) == QValue(2, 0)


# --- enumeration against brute force ------------------------------------------


@pytest.mark.parametrize("name,n,q", [(k, n, q) for k in KNOTS for n, q in SMALL])
def test_matches_brute_force(name, n, q):
    assert list(reps(name, n, q)) == brute_force_reps(dga(name), n, q)


@pytest.mark.parametrize("name", WITH_REPS)
@pytest.mark.parametrize("n,q", SMALL + [(2, 3)])
def test_enumeration_well_formed(name, n, q):
    rs = reps(name, n, q)
    keys = [r.key() for r in rs]
    assert keys == sorted(set(keys))
    g = dga(name)
    assert all(is_representation(g, r, all_generators=True) for r in rs)
    assert count_reps(g, n, q) == len(rs)


@pytest.mark.parametrize("name", WITH_REPS)
@pytest.mark.parametrize("n,q", [(2, 2), (2, 3)])
def test_closed_under_conjugation(name, n, q):
    rs = reps(name, n, q)
    keys = {r.key() for r in rs}
    F = make_field(q)
    for M in mx.general_linear(F, n)[:6]:
        assert all(conjugate(r, M).key() in keys for r in rs[:200])


@pytest.mark.parametrize("name", WITH_REPS)
def test_orbits_partition_representations(name):
    g = dga(name)
    orbits = enumerate_orbits(g, 2, 3)
    seen = set()
    for o in orbits:
        members = expand_orbit(o)
        assert o.rep.key() == min(m.key() for m in members)
        keys = {m.key() for m in members}
        assert not keys & seen
        seen |= keys
    assert seen == {r.key() for r in reps(name, 2, 3)}


# --- conjugate homotopy ------------------------------------------------------------


def test_reflexive_witness_is_trivial():
    for rho in reps("trefoil", 1, 3):
        w = conjugate_homotopic(dga("trefoil"), rho, rho)
        assert w == HomotopyWitness(((1,),), ())


def test_distinct_trefoil_reps_not_homotopic():
    g = dga("trefoil")
    rs = reps("trefoil", 1, 2)
    for a, b in itertools.combinations(rs, 2):
        assert conjugate_homotopic(g, a, b) is None
    assert len(classes("trefoil", 1, 2)) == 5


def test_unknot_two_by_two_over_f2_is_one_class():
    assert len(reps("unknot", 2, 2)) == 1
    assert len(classes("unknot", 2, 2)) == 1


@pytest.mark.parametrize("name,n,q", [("figure8", 1, 3), ("figure8", 2, 2), ("trefoil", 2, 2)])
def test_homotopy_is_an_equivalence_relation(name, n, q):
    g = dga(name)
    rs = list(reps(name, n, q))[:40]
    rel = {}
    for a, b in itertools.product(range(len(rs)), repeat=2):
        w = conjugate_homotopic(g, rs[a], rs[b])
        rel[a, b] = w is not None
        if w is not None:
            assert homotopy_holds(g, rs[a], rs[b], w)
    for a in range(len(rs)):
        assert rel[a, a]
    for a, b in rel:
        assert rel[a, b] == rel[b, a]
    for a, b, c in itertools.product(range(len(rs)), repeat=3):
        if rel[a, b] and rel[b, c]:
            assert rel[a, c]


@pytest.mark.parametrize("name,n,q", [("figure8", 1, 2), ("figure8", 1, 3), ("figure8", 2, 2), ("trefoil", 2, 2)])
def test_orbit_and_pairwise_classes_agree(name, n, q):
    g = dga(name)
    rs = list(reps(name, n, q))
    assert equivalence_classes(g, rs, "orbit") == equivalence_classes(g, rs, "pairwise")


@pytest.mark.parametrize("name,n,q", [("figure8", 1, 3), ("figure8", 2, 2), ("trefoil", 2, 2)])
def test_orbit_classes_match_explicit_classes(name, n, q):
    g = dga(name)
    grouped = orbit_classes(g, enumerate_orbits(g, n, q))
    explicit = equivalence_classes(g, list(reps(name, n, q)))
    assert len(grouped) == len(explicit)
    as_sets = sorted(sorted(r.key() for o in c for r in expand_orbit(o)) for c in grouped)
    assert as_sets == sorted(sorted(r.key() for r in c) for c in explicit)


def test_canonical_key_is_orbit_minimum():
    F = make_field(3)
    gl = mx.general_linear(F, 2)
    for rho in list(reps("trefoil", 2, 3))[:50]:
        key = canonical_key(rho, gl)
        assert key == min(conjugate(rho, M).key() for M in gl)
        assert canonical_key(conjugate(rho, gl[7]), gl) == key


def test_unknown_method_rejected():
    with pytest.raises(ValueError):
        equivalence_classes(dga("trefoil"), list(reps("trefoil", 1, 2)), "bogus")


# --- unique extension ------------------------------------------------------------


def test_extension_trivial_cases():
    g = dga("figure8")
    F = make_field(2)
    minus = g.chords_in_grading(-1)
    zero_A = {a: mx.zeros(2) for a in minus}
    for rho in reps("figure8", 2, 2):
        assert extend_unique_rep(g, rho, mx.identity(2), zero_A) == rho
        for M in mx.general_linear(F, 2):
            assert extend_unique_rep(g, rho, M, zero_A) == conjugate(rho, M)


def test_extension_without_minus_one_chords_ignores_values():
    g = dga("trefoil")
    assert g.chords_in_grading(-1) == []
    rho = reps("trefoil", 1, 2)[2]
    assert extend_unique_rep(g, rho, ((1,),), {"a1": ((1,),)}) == rho


def _all_assignments(g, n, q):
    F = make_field(q)
    zero = g.chords_in_grading(0)
    mats = list(mx.all_matrices(F, n))
    for t in mx.general_linear(F, n):
        for combo in itertools.product(mats, repeat=len(zero)):
            yield Representation(n, q, t, tuple(zip(zero, combo)))


@pytest.mark.parametrize("q", [2, 3])
def test_extension_exists_and_is_unique(q):
    # exhaustive: among all assignments, exactly the constructed one is a
    # representation homotopic to rho through (M, A)
    g = dga("figure8")
    F = make_field(q)
    minus = g.chords_in_grading(-1)
    candidates = list(_all_assignments(g, 1, q))
    for rho in reps("figure8", 1, q):
        for M in mx.general_linear(F, 1):
            for vals in itertools.product(range(q), repeat=len(minus)):
                A = {a: ((v,),) for a, v in zip(minus, vals)}
                w = HomotopyWitness(M, tuple((a, A[a]) for a in minus))
                hits = [c for c in candidates if homotopy_holds(g, rho, c, w)]
                assert hits == [extend_unique_rep(g, rho, M, A)]
                assert is_representation(g, hits[0])


@settings(max_examples=60, deadline=None)
@given(st.data())
def test_extension_is_a_homotopic_representation(data):
    g = dga("figure8")
    q = data.draw(st.sampled_from([2, 3]))
    F = make_field(q)
    rs = reps("figure8", 2, q)
    rho = data.draw(st.sampled_from(rs))
    gl = mx.general_linear(F, 2)
    M = data.draw(st.sampled_from(gl))
    entry = st.integers(0, q - 1)
    A = {
        a: tuple(tuple(data.draw(entry) for _ in range(2)) for _ in range(2))
        for a in g.chords_in_grading(-1)
    }
    rho0 = extend_unique_rep(g, rho, M, A)
    assert is_representation(g, rho0, all_generators=True)
    assert homotopy_holds(g, rho, rho0, HomotopyWitness(M, tuple(A.items())))
    assert rho0.key() in {r.key() for r in rs}
