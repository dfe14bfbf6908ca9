import random

import pytest

from legrep import matrix as mx
from legrep import ncpoly
from legrep.field import make_field
from legrep.multicopy import (
    TwistError,
    a_infinity_op_symbolic,
    augmented_differential,
    constant_terms_vanish,
    gen_name,
    multi_copy_dga,
    twisted_differential,
)
from legrep.repcat import a_infinity_op, random_element
from legrep.reps import Representation

from helpers import KNOTS, WITH_REPS, dga, reps


def _rename_single_copy(p):
    out = {}
    for w, c in p.items():
        key = tuple(
            ncpoly.t_letter(None, x[2]) if ncpoly.is_t(x) else x.split("[")[0] for x in w
        )
        out[key] = c
    return out


@pytest.mark.parametrize("name", KNOTS)
def test_one_copy_is_the_original(name):
    g = dga(name)
    mc = multi_copy_dga(g, 1)
    assert mc.names == [gen_name(a, 1, 1) for a in g.names]
    for a in g.names:
        assert _rename_single_copy(mc.differential.get(gen_name(a, 1, 1), {})) == g.differential[a]


def test_y_differentials():
    g = dga("trefoil")
    assert gen_name("y", 1, 2) not in multi_copy_dga(g, 2).differential
    mc3 = multi_copy_dga(g, 3)
    assert mc3.differential[gen_name("y", 1, 3)] == {(gen_name("y", 1, 2), gen_name("y", 2, 3)): 1}


@pytest.mark.parametrize("name", KNOTS)
@pytest.mark.parametrize("k", [2, 3])
def test_multi_copy_d_squared(name, k):
    ok, gen, word = multi_copy_dga(dga(name), k).check()
    assert ok, (gen, word)


@pytest.mark.parametrize("name", ["trefoil", "figure8"])
def test_words_are_paths_between_copies(name):
    # every word of d(x[i,j]) walks i -> ... -> j, t_u sitting at copy u
    mc = multi_copy_dga(dga(name), 3)
    for x, p in mc.differential.items():
        _, i, j = mc.parts[x]
        for w in p:
            at = i
            for y in w:
                if ncpoly.is_t(y):
                    assert y[1] == at
                else:
                    _, u, v = mc.parts[y]
                    assert u == at
                    at = v
            assert at == j


def test_lower_entries_do_occur():
    # Y A - A Y reaches below the diagonal, so d(a[1,2]) is not confined to
    # copies 1 and 2
    mc = multi_copy_dga(dga("trefoil"), 3)
    assert (gen_name("y", 1, 3), gen_name("a1", 3, 2)) in mc.differential[gen_name("a1", 1, 2)]


def test_gradings():
    g = dga("figure8")
    mc = multi_copy_dga(g, 3)
    for x, (base, i, j) in mc.parts.items():
        expected = {"x": 0, "y": -1}.get(base, g.degree.get(base))
        assert mc.degree[x] == expected


# --- twisting ----------------------------------------------------------------


def test_unknot_twist_x_coefficient():
    rho = reps("unknot", 1, 3)[0]
    mc = multi_copy_dga(dga("unknot"), 2)
    terms = twisted_differential(mc, [rho, rho], gen_name("a1", 1, 2))
    coeff = 0
    F = make_field(3)
    for t in terms:
        if t.letters == (gen_name("x", 1, 2),):
            coeff = F.add(coeff, mx.mul(F, t.mats[0], t.mats[1])[0][0])
    assert coeff == F.neg(1)


@pytest.mark.parametrize("name", WITH_REPS)
def test_valid_chains_twist_without_constants(name):
    mc = multi_copy_dga(dga(name), 3)
    rs = reps(name, 1, 3)
    chain = [rs[0], rs[-1], rs[len(rs) // 2]]
    assert constant_terms_vanish(mc, chain)
    assert set(augmented_differential(mc, chain)) == set(mc.names)


def test_invalid_representation_rejected():
    g = dga("unknot")
    mc = multi_copy_dga(g, 2)
    bad = Representation(1, 3, ((1,),), ())  # d(a1) = 1 + t is 2, not 0
    good = reps("unknot", 1, 3)[0]
    with pytest.raises(TwistError):
        augmented_differential(mc, [good, bad])
    with pytest.raises(TwistError):
        augmented_differential(mc, [good])


def test_representation_free_knot_has_nothing_to_twist():
    g = dga("unknot_s2")
    mc = multi_copy_dga(g, 2)
    fake = Representation(1, 2, ((1,),), tuple((a, ((0,),)) for a in g.chords_in_grading(0)))
    assert not constant_terms_vanish(mc, [fake, fake])


# --- two routes to m_k --------------------------------------------------------------


@pytest.mark.parametrize("name", WITH_REPS)
@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("k", [1, 2, 3])
def test_block_and_symbolic_operations_agree(name, q, k):
    g = dga(name)
    F = make_field(q)
    rng = random.Random(hash((name, q, k)) & 0xFFFF)
    rs = reps(name, 1, q)
    mc = multi_copy_dga(g, k + 1)
    for _ in range(12):
        chain = [rng.choice(rs) for _ in range(k + 1)]
        args = [random_element(g, F, 1, rng) for _ in range(k)]
        assert a_infinity_op(g, chain, args) == a_infinity_op_symbolic(g, chain, args, mc)


@pytest.mark.parametrize("name", ["trefoil", "figure8"])
@pytest.mark.parametrize("k", [1, 2])
def test_block_and_symbolic_agree_two_dimensional(name, k):
    g = dga(name)
    F = make_field(2)
    rng = random.Random(k)
    rs = reps(name, 2, 2)
    mc = multi_copy_dga(g, k + 1)
    for _ in range(6):
        chain = [rng.choice(rs) for _ in range(k + 1)]
        args = [random_element(g, F, 2, rng) for _ in range(k)]
        assert a_infinity_op(g, chain, args) == a_infinity_op_symbolic(g, chain, args, mc)
