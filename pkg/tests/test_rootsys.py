import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weylgarnir.errors import ConfigurationError, DomainError
from weylgarnir.rootsys import (
    RootSystem,
    RootVector,
    all_subsystems,
    build_root_system,
    inner,
    orthogonal_subsystem,
    reflect,
    subsystem_from_simples,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def vectors(dim):
    return st.lists(rationals, min_size=dim, max_size=dim).map(lambda c: RootVector(tuple(c)))


def closure_oracle(simple):
    """Reflection closure over all found vectors (not just simple roots), with plain tuples."""

    def refl(a, v):
        aa = sum(x * x for x in a)
        av = sum(x * y for x, y in zip(a, v))
        return tuple(y - 2 * av / aa * x for x, y in zip(a, v))

    found = {tuple(Fraction(x) for x in s.coords) for s in simple}
    while True:
        new = {refl(a, v) for a in found for v in found} - found
        if not new:
            return found
        found |= new


def test_reflect_negates_root():
    a = RootVector.of(1, -1, 0)
    assert reflect(a, a) == -a


def test_reflect_fixes_hyperplane():
    a = RootVector.of(1, -1, 0)
    assert reflect(a, RootVector.of(1, 1, 5)) == RootVector.of(1, 1, 5)


def test_g2_reflection_by_hand():
    # (a1, a2) = -2 - 1 = -3, (a1, a1) = 2, so tau_1(a2) = a2 + 3 a1
    a1, a2 = RootVector.of(1, -1, 0), RootVector.of(-2, 1, 1)
    assert reflect(a1, a2) == RootVector.of(1, -2, 1)
    phi = build_root_system("G2")
    assert phi.coeff_string(reflect(a1, a2)) == "31"


def test_inner_values():
    assert inner(RootVector.of(1, -1, 0), RootVector.of(1, -1, 0)) == 2
    assert inner(RootVector.of(1, -1, 0), RootVector.of(-2, 1, 1)) == -3


def test_domain_errors():
    with pytest.raises(DomainError):
        reflect(RootVector.of(0, 0), RootVector.of(1, 0))
    with pytest.raises(DomainError):
        inner(RootVector.of(1, 0), RootVector.of(1, 0, 0))
    with pytest.raises(DomainError):
        reflect(RootVector.of(1, 0), RootVector.of(1, 0, 0))


@given(vectors(3), vectors(3))
def test_inner_symmetric(u, v):
    assert inner(u, v) == inner(v, u)


@given(vectors(3), vectors(3))
def test_reflection_is_involution(a, v):
    if a.is_zero():
        return
    assert reflect(a, reflect(a, v)) == v
    assert inner(reflect(a, v), reflect(a, v)) == inner(v, v)


@pytest.mark.parametrize(
    "label, n_roots",
    [("A1", 2), ("A2", 6), ("A3", 12), ("A4", 20), ("B2", 8), ("B3", 18), ("B4", 32),
     ("C2", 8), ("C3", 18), ("C4", 32), ("D2", 4), ("D3", 12), ("D4", 24), ("G2", 12)],
)
def test_root_counts_match_closure_oracle(label, n_roots):
    phi = build_root_system(label)
    oracle = closure_oracle(phi.simple_system)
    assert len(oracle) == n_roots
    assert {tuple(v.coords) for v in phi.roots} == oracle
    assert 2 * phi.n_positive == len(phi)


def test_g2_uses_given_coordinates():
    phi = build_root_system("G", 2)
    assert phi.simple_system == (RootVector.of(1, -1, 0), RootVector.of(-2, 1, 1))
    assert [phi.coeff_string(v) for v in phi.positives] == ["10", "01", "11", "21", "31", "32"]


def test_a1_is_plus_minus_alpha():
    phi = build_root_system("A1")
    a = phi.simple_system[0]
    assert set(phi.roots) == {a, -a}


@pytest.mark.parametrize("label", ["E6", "F4", "A5", "G3", "D1", "X2"])
def test_unsupported_systems(label):
    with pytest.raises(ConfigurationError):
        build_root_system(label)


@pytest.mark.parametrize("label", ["A3", "B3", "C4", "D4", "G2"])
def test_root_system_invariants(label):
    phi = build_root_system(label)
    for a in phi.roots:
        assert -a in phi
        assert sorted(phi.index[reflect(a, v)] for v in phi.roots) == list(range(len(phi)))
    for v in phi.positives:
        assert all(c >= 0 for c in phi.coefficients(v))


def test_coefficient_notation_round_trip():
    phi = build_root_system("G2")
    for v in phi.roots:
        assert phi.parse_root(phi.coeff_string(v)) == v
    assert phi.parse_root("-10") == -phi.simple_system[0]
    assert phi.parse_root("−10") == -phi.simple_system[0]
    assert phi.parse_root("-3-2") == phi.parse_root("-32")
    with pytest.raises(DomainError):
        phi.parse_root("12")
    with pytest.raises(DomainError):
        phi.parse_root("1x")


def test_json_round_trip():
    phi = build_root_system("B3")
    data = json.loads(json.dumps(phi.to_json()))
    assert data["roots"][0]["coords"] == [str(c) for c in phi.roots[0].coords]
    again = RootSystem.from_json(data)
    assert again.roots == phi.roots
    assert json.dumps(again.to_json()) == json.dumps(phi.to_json())


def test_worked_example_subsystems():
    phi = build_root_system("G2")
    r = phi.parse_root
    psi = subsystem_from_simples(phi, [r("10"), r("32")])
    assert len(psi) == 4 and psi.diagram_label == "A1+~A1"
    assert psi.components == ((r("10"),), (r("32"),))
    star = subsystem_from_simples(phi, [r("10"), r("21")])
    assert len(star) == 6 and star.diagram_label == "A2"
    # J* = {10, 21} is not the canonical base of its subsystem
    assert star.base == (r("10"), r("11"))
    empty = subsystem_from_simples(phi, [])
    assert len(empty) == 0 and empty.base == ()


def test_subsystem_errors():
    phi = build_root_system("G2")
    r = phi.parse_root
    with pytest.raises(DomainError):
        subsystem_from_simples(phi, [r("-10")])
    with pytest.raises(DomainError):
        subsystem_from_simples(phi, [r("10"), r("11"), r("21")])


@pytest.mark.parametrize("label", ["A2", "B2", "G2", "A3"])
def test_subsystem_idempotent_and_closed(label):
    phi = build_root_system(label)
    for psi in all_subsystems(phi):
        again = subsystem_from_simples(phi, psi.base)
        assert again.roots == psi.roots
        for a in psi.roots:
            for b in psi.roots:
                assert reflect(a, b) in psi.roots
        for i, ci in enumerate(psi.components):
            for cj in psi.components[i + 1:]:
                assert all(inner(a, b) == 0 for a in ci for b in cj)


def test_g2_subsystem_census():
    labels = sorted(p.diagram_label for p in all_subsystems(build_root_system("G2")))
    assert labels == sorted(["0"] + ["A1"] * 3 + ["~A1"] * 3 + ["A1+~A1"] * 3 + ["A2", "~A2", "G2"])


def test_orthogonal_subsystem():
    phi = build_root_system("G2")
    r = phi.parse_root
    full = subsystem_from_simples(phi, phi.simple_system)
    assert len(orthogonal_subsystem(full)) == 0
    empty = subsystem_from_simples(phi, [])
    assert orthogonal_subsystem(empty).roots == frozenset(phi.roots)
    psi = subsystem_from_simples(phi, [r("10"), r("32")])
    perp = orthogonal_subsystem(psi)
    brute = {b for b in phi.roots if all(inner(b, a) == 0 for a in psi.roots)}
    assert perp.roots == brute == frozenset()
    a1 = subsystem_from_simples(phi, [r("10")])
    assert orthogonal_subsystem(a1).roots == {r("32"), -r("32")}


@pytest.mark.parametrize("label", ["A3", "B3", "G2"])
def test_double_perp_contains(label):
    phi = build_root_system(label)
    for psi in all_subsystems(phi):
        assert psi.roots <= orthogonal_subsystem(orthogonal_subsystem(psi)).roots
