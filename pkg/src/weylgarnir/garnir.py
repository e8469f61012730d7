"""
Garnir elements and straightening relations for polytabloids.

A context fixes a pair {J, J'}, a column representative d in D_psi' and an
auxiliary subsystem psi* with simple system J*. The annihilation identity
needs a fixed-point-free involution w -> w rho_w on W(J*)W(dJ') with each
rho_w an odd involution of W(dJ); ``find_pairing`` searches for one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from . import linalg
from .errors import DomainError, InvariantViolation, PreconditionError
from .rootsys import RootVector, Subsystem
from .specht import (
    AlgebraElement,
    ModuleVector,
    SystemPair,
    apply,
    polytabloid,
    standard_polytabloids,
)
from .weyl import GroupElement, WeylGroup, closure, decompose, reflection_subgroup


def product_set(U: Iterable[GroupElement], V: Iterable[GroupElement]) -> list[GroupElement]:
    """{uv : u in U, v in V} without repetition, in group order."""
    V = list(V)
    return sorted({u * v for u in U for v in V}, key=lambda g: g.index)


def is_subgroup(elements: Sequence[GroupElement]) -> bool:
    s = set(elements)
    if not s:
        return False
    first = next(iter(s))
    if first.group.identity not in s:
        return False
    return all(a * b in s for a in s for b in s)


def peel_product(U: Sequence[GroupElement], V: Sequence[GroupElement]) -> tuple[AlgebraElement, AlgebraElement]:
    """Both sides of (sum_U s(u)u)(sum_V s(v)v) = |U cap V| sum_{UV} s(y)y."""
    if not is_subgroup(U) or not is_subgroup(V):
        raise DomainError("peel_product needs two subgroups")
    lhs = AlgebraElement.signed_sum(U) * AlgebraElement.signed_sum(V)
    rhs = AlgebraElement.signed_sum(product_set(U, V)).scale(len(set(U) & set(V)))
    return lhs, rhs


def all_subgroups(W: WeylGroup) -> list[tuple[GroupElement, ...]]:
    """Every subgroup of W, by joining cyclic subgroups until nothing new appears."""
    cyclic = {closure(W, [g]) for g in W}
    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclic:
                if set(c) <= set(h):
                    continue
                j = closure(W, h + c)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=lambda h: (len(h), [g.index for g in h]))


def reflection_subgroups(W: WeylGroup) -> list[tuple[GroupElement, ...]]:
    """Every subgroup generated by a set of reflections."""
    found = {(W.identity,)}
    frontier = [(W.identity,)]
    while frontier:
        nxt = []
        for h in frontier:
            for t in W.reflections:
                if t in h:
                    continue
                j = closure(W, h + (t,))
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=lambda h: (len(h), [g.index for g in h]))


class GarnirContext:
    """The data (pair, d, J*) together with H = W(J*) cap W(dJ') and coset reps C."""

    def __init__(self, pair: SystemPair, d: GroupElement, j_star: Subsystem):
        frame = pair.frame
        if d not in set(frame.col_reps):
            raise DomainError(f"d = {d} is not in D_psi'; reduce w = d rho first")
        if j_star.parent is not pair.W.phi:
            raise DomainError("J* belongs to a different root system")
        self.pair = pair
        self.d = d
        self.j_star = j_star
        W = pair.W
        self.dJ: tuple[RootVector, ...] = tuple(d(v) for v in frame.J)
        self.dJp: tuple[RootVector, ...] = tuple(d(v) for v in frame.Jp)
        self.star_group = reflection_subgroup(W, j_star.simple_system)
        self.row_group = reflection_subgroup(W, self.dJ)
        self.col_group = reflection_subgroup(W, self.dJp)
        self.H: tuple[GroupElement, ...] = tuple(
            g for g in self.star_group if g in self.col_group.members
        )
        self.C: list[GroupElement] = self._coset_reps()

    def _coset_reps(self) -> list[GroupElement]:
        left = set()
        reps = []
        for g in sorted(self.star_group, key=GroupElement.sort_key):
            if g in left:
                continue
            reps.append(g)
            left.update(g * h for h in self.H)
        if len(reps) * len(self.H) != len(self.star_group):
            raise InvariantViolation("cosets of H do not partition W(J*)")
        return reps

    @property
    def W(self) -> WeylGroup:
        return self.pair.W

    @cached_property
    def Y(self) -> list[GroupElement]:
        return product_set(self.star_group, self.col_group)

    @cached_property
    def polytabloid(self) -> ModuleVector:
        return polytabloid(self.d, self.pair)

    def describe(self) -> dict:
        phi = self.W.phi
        return {
            "phi": phi.label,
            "J": self.pair.psi.names(),
            "J'": self.pair.psi_prime.names(),
            "J*": self.j_star.names(),
            "d": self.d.word_string(),
            "dJ": [phi.coeff_string(v) for v in self.dJ],
            "dJ'": [phi.coeff_string(v) for v in self.dJp],
        }


@dataclass(frozen=True)
class Pairing:
    mapping: dict[GroupElement, GroupElement]
    rho: dict[GroupElement, GroupElement]
    global_rho: GroupElement | None = None

    def check(self, ctx: GarnirContext) -> None:
        Y = set(ctx.Y)
        if set(self.mapping) != Y:
            raise InvariantViolation("pairing is not defined on all of W(J*)W(dJ')")
        e = ctx.W.identity
        for w, wp in self.mapping.items():
            r = self.rho[w]
            if r not in ctx.row_group.members or r * r != e or r.sign != -1:
                raise InvariantViolation(f"rho_w = {r} is not an odd involution of W(dJ)")
            if wp != w * r or wp == w or self.mapping.get(wp) != w:
                raise InvariantViolation(f"pairing fails at w = {w}")


def odd_involutions(ctx: GarnirContext) -> list[GroupElement]:
    e = ctx.W.identity
    return [r for r in ctx.row_group if r.sign == -1 and r * r == e]


def find_pairing(ctx: GarnirContext) -> Pairing | None:
    """
    A pairing on Y = W(J*)W(dJ'), or None when none exists.

    A single right multiplier rho stabilising Y is tried first; otherwise a
    perfect matching is searched over edges {w, w rho}.
    """
    Y = ctx.Y
    Yset = set(Y)
    cands = odd_involutions(ctx)
    if len(Y) % 2 or not cands:
        return None
    for r in cands:
        if all(w * r in Yset for w in Y):
            mapping = {w: w * r for w in Y}
            return Pairing(mapping, {w: r for w in Y}, r)

    edges = {w: [(w * r, r) for r in cands if w * r in Yset] for w in Y}
    mapping: dict[GroupElement, GroupElement] = {}
    rho: dict[GroupElement, GroupElement] = {}

    def search() -> bool:
        w = next((x for x in Y if x not in mapping), None)
        if w is None:
            return True
        for v, r in edges[w]:
            if v in mapping:
                continue
            mapping[w], mapping[v] = v, w
            rho[w] = rho[v] = r
            if search():
                return True
            del mapping[w], mapping[v], rho[w], rho[v]
        return False

    if search():
        return Pairing(dict(mapping), dict(rho), None)
    return None


def annihilator_image(ctx: GarnirContext) -> ModuleVector:
    """(sum over W(J*) of s(sigma) sigma) applied to e_{dJ,dJ'}."""
    return apply(AlgebraElement.signed_sum(ctx.star_group), ctx.polytabloid, ctx.pair.frame)


def verify_annihilation(ctx: GarnirContext, pairing: Pairing | None = None) -> bool:
    if pairing is None:
        pairing = find_pairing(ctx)
    if pairing is None:
        raise PreconditionError("no pairing exists; the annihilation hypothesis fails")
    pairing.check(ctx)
    image = annihilator_image(ctx)
    if image:
        raise InvariantViolation(
            f"annihilation failed for {ctx.describe()}: {image.format(ctx.pair.frame)}"
        )
    return True


def garnir_element(ctx: GarnirContext) -> AlgebraElement:
    return AlgebraElement.signed_sum(ctx.C)


def polytabloid_name(w: GroupElement) -> str:
    if w.is_identity:
        return "e(J,J')"
    s = w.word_string()
    return f"e({s} J, {s} J')"


@dataclass
class StraightenReport:
    lhs: ModuleVector
    rhs: ModuleVector
    # (sigma, coefficient -s(sigma), d'' in D_psi', s(rho)) with sigma d = d'' rho
    terms: list[tuple[GroupElement, int, GroupElement, int]]
    reduced: dict[GroupElement, Fraction]
    basis: dict[GroupElement, Fraction] | None = field(default=None)

    def raw_text(self, d: GroupElement) -> str:
        target = polytabloid_name(d)
        parts = []
        for sigma, c, _, _ in self.terms:
            body = f"({sigma.word_string()}) {target}" if sigma.length > 1 else f"{sigma} {target}"
            parts.append((body, Fraction(c)))
        return f"{target} = " + _signed(parts)

    def reduced_text(self, d: GroupElement) -> str:
        items = sorted(self.reduced.items(), key=lambda kv: kv[0].index)
        return f"{polytabloid_name(d)} = " + _signed([(polytabloid_name(g), c) for g, c in items])

    def basis_text(self, d: GroupElement) -> str | None:
        if self.basis is None:
            return None
        items = sorted(self.basis.items(), key=lambda kv: kv[0].index)
        return f"{polytabloid_name(d)} = " + _signed([(polytabloid_name(g), c) for g, c in items])


def _signed(parts: list[tuple[str, Fraction]]) -> str:
    out = []
    for name, c in parts:
        if c == 0:
            continue
        body = name if abs(c) == 1 else f"{abs(c)}*{name}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out) if out else "0"


def straighten(ctx: GarnirContext, pairing: Pairing | None = None) -> StraightenReport:
    """
    Both sides of e_{dJ,dJ'} = -(sum over C minus e of s(sigma) sigma) e_{dJ,dJ'},
    the rewrite of each term as a signed polytabloid indexed by D_psi', and,
    when the standard polytabloids are independent, coordinates in them.
    """
    if pairing is None:
        pairing = find_pairing(ctx)
    if pairing is None:
        raise PreconditionError("no pairing exists; the straightening hypothesis fails")
    pair, frame = ctx.pair, ctx.pair.frame
    lhs = ctx.polytabloid
    others = [c for c in ctx.C if not c.is_identity]
    rhs = -apply(AlgebraElement.signed_sum(others), lhs, frame)

    terms = []
    reduced: dict[GroupElement, Fraction] = {}
    for sigma in others:
        dd, rho = decompose(ctx.W, sigma * ctx.d, pair.psi_prime)
        c = -sigma.sign
        terms.append((sigma, c, dd, rho.sign))
        reduced[dd] = reduced.get(dd, Fraction(0)) + c * rho.sign
    reduced = {g: c for g, c in reduced.items() if c != 0}
    reduced_rhs = ModuleVector({})
    for g, c in reduced.items():
        reduced_rhs = reduced_rhs + polytabloid(g, pair).scale(c)

    if lhs != rhs or rhs != reduced_rhs:
        raise InvariantViolation(f"straightening identity fails for {ctx.describe()}")

    basis = None
    std = standard_polytabloids(pair)
    rows = [v.dense(frame) for v in std]
    if linalg.rank(rows) == len(rows):
        coords = linalg.express(rows, lhs.dense(frame))
        if coords is not None:
            basis = {g: c for g, c in zip(pair.standard_reps, coords) if c != 0}
    return StraightenReport(lhs, rhs, terms, reduced, basis)


def garnir_report(ctx: GarnirContext) -> dict:
    """JSON-ready summary of one context."""
    frame = ctx.pair.frame
    pairing = find_pairing(ctx)
    G = garnir_element(ctx)
    out = {
        "context": ctx.describe(),
        "H": [g.word_string() for g in ctx.H],
        "C": [g.word_string() for g in ctx.C],
        "pairing_found": pairing is not None,
        "global_rho": pairing.global_rho.word_string() if pairing and pairing.global_rho else None,
        "garnir_element": G.format(),
        "garnir_terms": G.to_json(),
        "annihilation_zero": None,
        "straighten_lhs": None,
        "straighten_rhs": None,
        "raw_form": None,
        "reduced_form": None,
        "coset_form": None,
    }
    if pairing is None:
        out["hypothesis"] = "fails"
        return out
    out["hypothesis"] = "holds"
    out["annihilation_zero"] = verify_annihilation(ctx, pairing)
    rep = straighten(ctx, pairing)
    out["straighten_lhs"] = rep.lhs.format(frame)
    out["straighten_rhs"] = rep.rhs.format(frame)
    out["raw_form"] = rep.raw_text(ctx.d)
    out["coset_form"] = rep.reduced_text(ctx.d)
    out["reduced_form"] = rep.basis_text(ctx.d) or out["coset_form"]
    return out
