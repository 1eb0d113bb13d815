import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orzech.errors import DimensionMismatch, IllDefinedHom
from orzech.linsolve import membership
from orzech.modules import (Hom, ModulePresentation, SubmoduleGens, elem_eq, hom_is_well_defined, is_surjective,
                            syzygies)
from orzech.polymat import Matrix, identity
from orzech.rings import ZZ, Zmod

from oracles import FiniteModule, random_matrix


def cols(ring, columns, m):
    return Matrix.from_columns(ring, columns, m)


Z2_mod2 = ModulePresentation.from_relations(ZZ, 2, [[0, 2]])


def test_elem_eq_examples():
    assert elem_eq(Z2_mod2, (5, -7), (5, -7))
    assert elem_eq(Z2_mod2, (1, 3), (1, 1))
    assert not elem_eq(Z2_mod2, (1, 1), (0, 1))
    with pytest.raises(DimensionMismatch):
        elem_eq(Z2_mod2, (1,), (1, 2))


def test_syzygy_examples():
    Z2 = ModulePresentation.free(ZZ, 2)
    assert syzygies(SubmoduleGens(Z2, cols(ZZ, [[2, 0], [0, 1]], 2))).cols == 0
    Z = ModulePresentation.free(ZZ, 1)
    S = syzygies(SubmoduleGens(Z, cols(ZZ, [[2], [3]], 1)))
    assert S.cols == 1 and S.col(0) in ((3, -2), (-3, 2))
    S = syzygies(SubmoduleGens(Z2, cols(ZZ, [[1, 4], [1, 4]], 2)))
    assert S.cols == 1 and S.col(0) in ((1, -1), (-1, 1))


def test_well_defined_examples():
    Z = ModulePresentation.free(ZZ, 1)
    N = SubmoduleGens(Z, cols(ZZ, [[2], [3]], 1))
    assert hom_is_well_defined(Hom(SubmoduleGens.whole(Z2_mod2), Z2_mod2, identity(ZZ, 2)))
    assert hom_is_well_defined(Hom(N, Z, cols(ZZ, [[2], [3]], 1)))
    bad = Hom(N, Z, cols(ZZ, [[1], [1]], 1))
    assert not hom_is_well_defined(bad)
    with pytest.raises(IllDefinedHom):
        is_surjective(bad)


def test_surjectivity_examples():
    Z2 = ModulePresentation.free(ZZ, 2)
    w = is_surjective(Hom(SubmoduleGens.whole(Z2), Z2, identity(ZZ, 2)))
    assert w == identity(ZZ, 2)
    f = Hom(SubmoduleGens(Z2, cols(ZZ, [[2, 0], [0, 1]], 2)), Z2, identity(ZZ, 2))
    assert is_surjective(f) == identity(ZZ, 2)
    Z = ModulePresentation.free(ZZ, 1)
    assert is_surjective(Hom(SubmoduleGens.whole(Z), Z, cols(ZZ, [[2]], 1))) is None


def test_hom_shape_checked():
    with pytest.raises(DimensionMismatch):
        Hom(SubmoduleGens.whole(Z2_mod2), Z2_mod2, identity(ZZ, 3))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.tuples(st.integers(-12, 12), st.integers(-12, 12)), min_size=3, max_size=3),
       st.integers(0, 2))
def test_elem_eq_is_an_equivalence(vs, which):
    P = [Z2_mod2, ModulePresentation.from_relations(ZZ, 2, [[3, 1], [0, 4]]), ModulePresentation.free(ZZ, 2)][which]
    a, b, c = vs
    assert elem_eq(P, a, a)
    assert elem_eq(P, a, b) == elem_eq(P, b, a)
    if elem_eq(P, a, b) and elem_eq(P, b, c):
        assert elem_eq(P, a, c)


def random_finite_setup(rng, n):
    R = Zmod(n)
    m = rng.randint(1, 2)
    rel = random_matrix(rng, R, m, rng.randint(0, 2))
    P = ModulePresentation(R, m, Matrix.from_rows(R, rel, len(rel[0]) if rel and rel[0] else 0)
                           if rel else Matrix.zeros(R, m, 0))
    return R, m, P


@pytest.mark.parametrize("n", [4, 6, 8])
def test_syzygies_sound_and_complete(n):
    rng = random.Random(n)
    for _ in range(15):
        R, m, P = random_finite_setup(rng, n)
        k = rng.randint(1, 3)
        G = Matrix.from_rows(R, random_matrix(rng, R, m, k), k)
        S = syzygies(SubmoduleGens(P, G))
        fm = FiniteModule(m, P.relations.columns(), n)
        for s in S.columns():
            assert membership(G.apply(s), Matrix.zeros(R, m, 0), P.relations) is not None
        span = {(0,) * k}
        frontier = list(span)
        while frontier:
            nxt = []
            for v in frontier:
                for s in S.columns():
                    w = tuple((a + b) % n for a, b in zip(v, s))
                    if w not in span:
                        span.add(w)
                        nxt.append(w)
            frontier = nxt
        for s in itertools.product(range(n), repeat=k):
            if fm.is_zero(G.apply(s)):
                assert s in span


@pytest.mark.parametrize("n", [6, 8, 9])
def test_surjectivity_witnesses_match_enumeration(n):
    rng = random.Random(10 + n)
    checked = 0
    for _ in range(40):
        R, m, P = random_finite_setup(rng, n)
        k = rng.randint(1, 3)
        G = Matrix.from_rows(R, random_matrix(rng, R, m, k), k)
        F = Matrix.from_rows(R, random_matrix(rng, R, m, k), k)
        f = Hom(SubmoduleGens(P, G), P, F)
        if not hom_is_well_defined(f):
            continue
        fm = FiniteModule(m, P.relations.columns(), n)
        image = {fm.cls(F.apply(x)) for x in itertools.product(range(n), repeat=k)}
        w = is_surjective(f)
        assert (w is not None) == (len(image) == fm.size)
        if w is not None:
            for i in range(m):
                e = tuple(int(r == i) for r in range(m))
                assert elem_eq(P, F.apply(w.col(i)), e)
        checked += 1
    assert checked >= 10


@pytest.mark.parametrize("n", [4, 6])
def test_well_defined_matches_enumeration(n):
    rng = random.Random(20 + n)
    verdicts = set()
    for _ in range(40):
        R, m, P = random_finite_setup(rng, n)
        k = rng.randint(1, 2)
        G = Matrix.from_rows(R, random_matrix(rng, R, m, k), k)
        F = Matrix.from_rows(R, random_matrix(rng, R, m, k), k)
        fm = FiniteModule(m, P.relations.columns(), n)
        brute = all(fm.is_zero(F.apply(s)) for s in itertools.product(range(n), repeat=k)
                    if fm.is_zero(G.apply(s)))
        assert hom_is_well_defined(Hom(SubmoduleGens(P, G), P, F)) == brute
        verdicts.add(brute)
    assert verdicts == {True, False}
