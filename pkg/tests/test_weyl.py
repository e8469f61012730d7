import itertools
from math import factorial

import pytest
from hypothesis import given, strategies as st

from weylgarnir.errors import DomainError, ResourceError
from weylgarnir.rootsys import all_subsystems, build_root_system, reflect, subsystem_from_simples
from weylgarnir.suites import group_for
from weylgarnir.weyl import (
    Order,
    bruhat_leq,
    decompose,
    distinguished_reps,
    generate_group,
    order_leq,
    reflection_subgroup,
)

ORDERS = {"A1": 2, "A2": 6, "A3": 24, "B2": 8, "B3": 48, "C3": 48, "D4": 192, "G2": 12,
          "A4": factorial(5), "B4": 2 ** 4 * factorial(4)}


def words(W, *ws):
    return sorted(W.parse_word(w).word_string() for w in ws)


@pytest.mark.parametrize("label, order", sorted(ORDERS.items()))
def test_group_orders(label, order):
    assert len(group_for(label)) == order


def test_safety_cap():
    with pytest.raises(ResourceError):
        generate_group(build_root_system("B3"), max_order=20)


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3", "B3"])
def test_lengths_by_brute_force_action(label):
    W = group_for(label)
    phi = W.phi
    for w in W:
        # act on positive roots through the word's reflections, not the permutation table
        inv = 0
        for a in phi.positives:
            v = a
            for k in reversed(w.word):
                v = reflect(phi.simple_system[k - 1], v)
            inv += not phi.is_positive(v)
        assert inv == w.length == len(w.word)
        assert w.sign == (-1) ** inv


def test_identity_and_generators(G2):
    e = G2.identity
    assert e.length == 0 and e.sign == 1 and e.word_string() == "e"
    t1, t2 = G2.generators
    assert t1.sign == -1 and t1 * t1 == e
    assert G2.parse_word("t2 t1 t2 t1 t2 t1").length == 6
    assert G2.parse_word("t1 t2 t1 t2 t1 t2") == G2.parse_word("t2 t1 t2 t1 t2 t1")


def test_a1_group():
    W = group_for("A1")
    assert [w.word_string() for w in W] == ["e", "t1"]


def test_parse_word_errors(G2):
    with pytest.raises(DomainError):
        G2.parse_word("t3")
    with pytest.raises(DomainError):
        G2.parse_word("x1")
    assert G2.parse_word("t2t1") == G2.parse_word("t2 t1") == G2.parse_word("2 1")


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_group_axioms(label):
    W = group_for(label)
    e = W.identity
    for u in W:
        assert u * u.inverse == e
        for v in W:
            uv = u * v
            assert uv.length <= u.length + v.length
            assert uv.sign == u.sign * v.sign
            # composition agrees with concatenating words
            assert uv == W.from_word(u.word + v.word)


@given(st.data())
def test_associativity_b3(data):
    W = group_for("B3")
    a, b, c = (data.draw(st.sampled_from(W.elements)) for _ in range(3))
    assert (a * b) * c == a * (b * c)


def test_worked_example_reflection_subgroups(G2):
    phi = G2.phi
    r = phi.parse_root
    dJ = reflection_subgroup(G2, [r("-10"), r("32")])
    assert sorted(w.word_string() for w in dJ) == words(
        G2, "e", "t1", "t2 t1 t2 t1 t2", "t2 t1 t2 t1 t2 t1")
    dJp = reflection_subgroup(G2, [r("21")])
    assert sorted(w.word_string() for w in dJp) == words(G2, "e", "t1 t2 t1 t2 t1")
    star = reflection_subgroup(G2, [r("10"), r("21")])
    assert sorted(w.word_string() for w in star) == words(
        G2, "e", "t1", "t1 t2 t1 t2 t1", "t2 t1 t2", "t1 t2 t1 t2", "t2 t1 t2 t1")
    assert list(reflection_subgroup(G2, [])) == [G2.identity]
    with pytest.raises(DomainError):
        reflection_subgroup(G2, [r("10").scale(2)])


@pytest.mark.parametrize("label", ["A2", "G2", "B3"])
def test_conjugated_subgroup(label):
    W = group_for(label)
    for psi in all_subsystems(W.phi):
        sub = reflection_subgroup(W, psi.base)
        for w in W:
            moved = reflection_subgroup(W, [w(j) for j in psi.base])
            assert moved.members == {w * x * w.inverse for x in sub}


def test_distinguished_reps_examples(G2):
    phi = G2.phi
    r = phi.parse_root
    full = subsystem_from_simples(phi, phi.simple_system)
    assert distinguished_reps(G2, full) == [G2.identity]
    assert distinguished_reps(G2, subsystem_from_simples(phi, [])) == G2.elements
    psi = subsystem_from_simples(phi, [r("10"), r("32")])
    assert [d.word_string() for d in distinguished_reps(G2, psi)] == ["e", "t2", "t1 t2"]


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_decompose_against_exhaustive_search(label):
    W = group_for(label)
    for psi in all_subsystems(W.phi):
        D = distinguished_reps(W, psi)
        sub = list(reflection_subgroup(W, psi.base))
        for w in W:
            found = [(d, rho) for d in D for rho in sub if d * rho == w]
            assert len(found) == 1
            assert decompose(W, w, psi) == found[0]
            d = found[0][0]
            assert d.length == min(w2.length for w2 in (w * x for x in sub))


def test_decompose_examples(G2):
    phi = G2.phi
    r = phi.parse_root
    psi_p = subsystem_from_simples(phi, [r("11")])
    e = G2.identity
    assert decompose(G2, e, psi_p) == (e, e)
    t11 = G2.reflection(r("11"))
    assert decompose(G2, t11, psi_p) == (e, t11)
    w = G2.parse_word("t1 t2 t1 t2 t1") * G2.parse_word("t1")
    d, rho = decompose(G2, w, psi_p)
    assert d in distinguished_reps(G2, psi_p) and d * rho == w


def bruhat_oracle(W):
    """Transitive closure of u < ut over reflections t with l(ut) > l(u)."""
    below = {u.index: {u.index} for u in W}
    for v in sorted(W, key=lambda g: g.length):
        for t in W.reflections:
            u = v * t
            if u.length < v.length:
                below[v.index] |= below[u.index]
    return below


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_bruhat_subword_matches_reflection_order(label):
    W = group_for(label)
    below = bruhat_oracle(W)
    for u, v in itertools.product(W, W):
        assert bruhat_leq(u, v) == (u.index in below[v.index])


def test_bruhat_examples(A2):
    t1, t2 = A2.generators
    assert bruhat_leq(t1, t1 * t2)
    assert not bruhat_leq(t1 * t2, t1)
    for v in A2:
        assert bruhat_leq(A2.identity, v) and bruhat_leq(v, v)


def test_orders_differ_somewhere(A2):
    t1, t2 = A2.generators
    assert order_leq(t1, t2, Order.LENGTH)
    assert not order_leq(t1, t2, Order.BRUHAT)
