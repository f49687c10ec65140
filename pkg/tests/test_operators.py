import itertools

import pytest
from hypothesis import given, settings, strategies as st

from cohadj.computad import all_squiggles
from cohadj.errors import NotComposable
from cohadj.operators import (SimplicialOperator, act, compose, crossing_count, degeneracy, edge,
                              ez_factorize, face, from_interval, generator_word, identity,
                              interval_rep, operators, reduce_word, simplex, vertex)
from cohadj.squiggle import NAMED, compose as hcompose, make, validate
from oracles import act_by_hand, all_reductions, crossings, operator_list, weakly_undulating

A = validate(4, ["-", 2, 1, 4, 1, 3, "-"])


def test_golden_actions():
    assert act(A, degeneracy(0, 4)) == validate(5, ["-", 3, 2, 5, 2, 4, "-"])
    assert act(A, face(4, 4)) == validate(3, ["-", 2, 1, "+", 1, 3, "-"])
    assert act(A, simplex(0, 1, 4, n=4)) == validate(2, ["-", 2, 1, 2, 1, 2, "-"])
    # δ³δ² and δ²δ² give the same face
    assert act(act(A, face(3, 4)), face(2, 3)) == act(act(A, face(2, 4)), face(2, 3))


def test_golden_vertices():
    assert [crossing_count(A, j) for j in range(5)] == [2, 6, 4, 2, 0]
    assert vertex(A, 0) == validate(0, ["-", "+", "-"])
    assert vertex(A, 1) == validate(0, ["-", "+", "-", "+", "-", "+", "-"])
    assert vertex(A, 3) == validate(0, ["-", "+", "-"])
    assert vertex(A, 4) == validate(0, ["-"])


def test_triangle_faces():
    al, be = NAMED["alpha"], NAMED["beta"]
    eta, eps, f, u = NAMED["eta"], NAMED["eps"], NAMED["f"], NAMED["u"]
    assert act(al, face(2, 2)) == validate(1, ["+", 1, "+", "-"])  # ηu
    assert act(al, face(1, 2)) == validate(1, ["+", "-"])
    assert act(al, face(0, 2)) == validate(1, ["+", "-", 1, "-"])  # uε
    assert act(be, face(2, 2)) == validate(1, ["-", "+", 1, "+"])  # fη
    assert act(be, face(1, 2)) == validate(1, ["-", "+"])
    assert act(be, face(0, 2)) == validate(1, ["-", 1, "-", "+"])  # εf
    mu = NAMED["mu"]
    assert act(NAMED["omega"], face(2, 3)) == mu == act(NAMED["tau"], face(2, 3))
    assert eta.dim == eps.dim == 1


def test_alpha_family_face_formulae():
    from cohadj.squiggle import alpha_family, compose_all, whisker
    eta, eps = NAMED["eta"], NAMED["eps"]
    u1 = validate(1, ["+", "-"])
    for r in range(1, 4):
        a = alpha_family(2 * r)
        assert act(a, face(2, 2)) == whisker("right", "u", compose_all([eta] * r))
        assert act(a, face(1, 2)) == u1
        assert act(a, face(0, 2)) == whisker("left", "u", compose_all([eps] * r))
        b = alpha_family(2 * r + 1)
        assert act(b, face(2, 2)) == compose_all([eta] * (r + 1))
        assert act(b, face(1, 2)) == eta
        assert act(b, face(0, 2)) == whisker("left", "u", whisker("right", "f", compose_all([eps] * r)))


def test_interval_rep_clauses():
    for n in range(0, 5):
        for i in range(n + 1):
            assert interval_rep(face(i, n)) == degeneracy(i, n)
        for i in range(n):
            assert interval_rep(degeneracy(i, n - 1)) == face(i + 1, n + 1)


def test_interval_rep_is_contravariant_functor_and_inverts():
    for m, n, p in itertools.product(range(0, 3), repeat=3):
        for a in operators(m, n):
            assert from_interval(interval_rep(a)) == a
            for b in operators(n, p):
                assert interval_rep(compose(b, a)) == compose(interval_rep(a), interval_rep(b))


def test_operator_basics():
    with pytest.raises(NotComposable):
        compose(face(0, 2), face(0, 3))
    for m in range(0, 4):
        for n in range(0, 4):
            for a in operators(m, n):
                s, d = ez_factorize(a)
                assert compose(d, s) == a and s.is_surjective() and d.is_injective()
                w = identity(m)
                for g in generator_word(a):
                    w = compose(g, w)
                assert w == a


def test_simplicial_identities_on_operators():
    for n in range(1, 5):
        for i in range(n + 1):
            for j in range(i + 1, n + 1):
                assert compose(face(j, n), face(i, n - 1)) == compose(face(i, n), face(j - 1, n - 1))
        for i in range(n):
            for j in range(i, n):
                assert compose(degeneracy(j, n - 1), degeneracy(i, n)) == compose(degeneracy(i, n - 1), degeneracy(j + 1, n))


def test_reduce_confluence_small():
    for length in range(1, 8):
        for word in itertools.product(range(4), repeat=length):
            (only,) = all_reductions(word)
            assert reduce_word(word) == only


def test_act_matches_hand_computation():
    for d in range(0, 4):
        for a in all_squiggles(d, 6):
            for m in range(0, 4):
                for vals in operator_list(m, d):
                    got = act(a, SimplicialOperator(m, d, vals))
                    assert (got.dim, got.word) == act_by_hand(d, a.word, vals)


def test_crossings_match_oracle():
    for d in range(0, 4):
        for a in all_squiggles(d, 6):
            assert [crossing_count(a, j) for j in range(d + 1)] == [crossings(a.word, j) for j in range(d + 1)]
            for j in range(d + 1):
                assert vertex(a, j).width == crossing_count(a, j)


def test_edges():
    e = edge(A, 1, 3)
    assert e.dim == 1
    assert vertex(e, 0) == vertex(A, 1) and vertex(e, 1) == vertex(A, 3)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 3), st.data())
def test_act_functorial_property(d, data):
    a = data.draw(st.sampled_from(list(all_squiggles(d, 6))))
    m = data.draw(st.integers(0, 3))
    k = data.draw(st.integers(0, 3))
    al = SimplicialOperator(m, d, data.draw(st.sampled_from(list(operator_list(m, d)))))
    be = SimplicialOperator(k, m, data.draw(st.sampled_from(list(operator_list(k, m)))))
    assert act(act(a, al), be) == act(a, compose(al, be))
    assert act(a, identity(d)) == a


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 3), st.data())
def test_act_preserves_composition_property(d, data):
    xs = list(all_squiggles(d, 4))
    b = data.draw(st.sampled_from(xs))
    a = data.draw(st.sampled_from([x for x in xs if x.cod == b.dom]))
    m = data.draw(st.integers(0, 3))
    al = SimplicialOperator(m, d, data.draw(st.sampled_from(list(operator_list(m, d)))))
    assert act(hcompose(b, a), al) == hcompose(act(b, al), act(a, al))
