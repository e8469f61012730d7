"""
The tabloid module M, polytabloids, generalized Specht modules and the
useful / good / very good / perfect classification of a pair {J, J'}.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from . import linalg
from .errors import DomainError, PreconditionError
from .rootsys import RootSystem, RootVector, Subsystem, orthogonal_subsystem, subsystem_from_simples
from .tableaux import Frame, Tabloid, act, tabloid_of_element
from .weyl import GroupElement, Order, WeylGroup, order_leq, reflection_subgroup


class _SparseVector:
    """Immutable sparse rational combination; zero coefficients are dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        acc: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for k, c in items:
            acc[k] = acc.get(k, 0) + Fraction(c)
        self._terms = {k: c for k, c in acc.items() if c != 0}

    def __iter__(self) -> Iterator:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def items(self):
        return self._terms.items()

    def __getitem__(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._terms
        return type(self) is type(other) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other):
        return type(self)(list(self.items()) + list(other.items()))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return type(self)((k, -c) for k, c in self.items())

    def scale(self, c):
        c = Fraction(c)
        return type(self)((k, c * v) for k, v in self.items())

    def __rmul__(self, c):
        return self.scale(c)


class ModuleVector(_SparseVector):
    """An element of M, keyed by tabloids."""

    coeffs = property(lambda self: dict(self._terms))

    def sorted_items(self, frame: Frame) -> list[tuple[Tabloid, Fraction]]:
        return sorted(self.items(), key=lambda kv: frame.position(kv[0]))

    def dense(self, frame: Frame) -> list[Fraction]:
        row = [Fraction(0)] * len(frame.reps)
        for t, c in self.items():
            row[frame.position(t)] = c
        return row

    def format(self, frame: Frame) -> str:
        return _format_terms([(t.display, c) for t, c in self.sorted_items(frame)], "0")

    def to_json(self, frame: Frame) -> list[dict]:
        return [{"tabloid": t.to_json(), "coeff": str(c)} for t, c in self.sorted_items(frame)]


class AlgebraElement(_SparseVector):
    """An element of the rational group algebra, keyed by group elements."""

    terms = property(lambda self: dict(self._terms))

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scale(other)
        out: dict = {}
        for a, x in self.items():
            for b, y in other.items():
                ab = a * b
                out[ab] = out.get(ab, 0) + x * y
        return AlgebraElement(out)

    def sorted_items(self) -> list[tuple[GroupElement, Fraction]]:
        return sorted(self.items(), key=lambda kv: kv[0].index)

    def format(self) -> str:
        return _format_terms([(g.word_string(), c) for g, c in self.sorted_items()], "0")

    def to_json(self) -> list[dict]:
        return [{"word": g.word_string(), "coeff": str(c)} for g, c in self.sorted_items()]

    @classmethod
    def identity(cls, W: WeylGroup) -> "AlgebraElement":
        return cls({W.identity: 1})

    @classmethod
    def signed_sum(cls, elements: Iterable[GroupElement]) -> "AlgebraElement":
        return cls((g, g.sign) for g in elements)


def _format_terms(terms: list[tuple[str, Fraction]], empty: str) -> str:
    out = []
    for name, c in terms:
        mag = abs(c)
        body = name if mag == 1 else f"{mag}*{name}"
        if not out:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out) if out else empty


def basis_vector(t: Tabloid) -> ModuleVector:
    return ModuleVector({t: 1})


def kappa(W: WeylGroup, Jp: Iterable[RootVector]) -> AlgebraElement:
    """Signed sum over the reflection subgroup W(Jp)."""
    return AlgebraElement.signed_sum(reflection_subgroup(W, Jp))


def apply(a: AlgebraElement, m: ModuleVector, frame: Frame) -> ModuleVector:
    out: dict = {}
    for g, x in a.items():
        for t, y in m.items():
            s = act(g, t, frame)
            out[s] = out.get(s, 0) + x * y
    return ModuleVector(out)


class Flag(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class SystemPair:
    """
    A pair {J, J'} of subsystems with psi_prime inside the complement of psi.

    Classification results are computed on first request and cached.
    """

    def __init__(self, W: WeylGroup, psi: Subsystem, psi_prime: Subsystem):
        if psi.roots & psi_prime.roots:
            raise DomainError("psi_prime must lie in the complement of psi")
        self.frame = Frame(W, psi, psi_prime)
        self._flags: dict[str, Flag] = {}

    @classmethod
    def from_names(cls, W: WeylGroup, J: Iterable[str], Jp: Iterable[str]) -> "SystemPair":
        phi = W.phi
        psi = subsystem_from_simples(phi, [phi.parse_root(s) for s in J])
        psi_prime = subsystem_from_simples(phi, [phi.parse_root(s) for s in Jp])
        return cls(W, psi, psi_prime)

    W = property(lambda self: self.frame.W)
    psi = property(lambda self: self.frame.psi)
    psi_prime = property(lambda self: self.frame.psi_prime)

    def __repr__(self) -> str:
        return f"SystemPair(J={self.psi.names()}, J'={self.psi_prime.names()})"

    def flag(self, name: str) -> Flag:
        return self._flags.get(name, Flag.UNKNOWN)

    def _cache(self, name: str, fn) -> bool:
        f = self._flags.get(name)
        if f is None:
            f = Flag.YES if fn() else Flag.NO
            self._flags.setdefault(name, f)
        return f is Flag.YES

    @cached_property
    def reference_polytabloid(self) -> ModuleVector:
        return polytabloid(self.W.identity, self)

    @cached_property
    def standard_reps(self) -> list[GroupElement]:
        """D_psi intersected with D_psi_prime, in D_psi order."""
        cols = set(self.frame.col_reps)
        return [d for d in self.frame.reps if d in cols]


def polytabloid(w: GroupElement, pair: SystemPair) -> ModuleVector:
    """e_{wJ,wJ'} as the signed sum over W(J') of the tabloids {w rho J}."""
    frame = pair.frame
    return ModuleVector((tabloid_of_element(w * rho, frame), rho.sign) for rho in frame.col_group)


def polytabloid_via_kappa(w: GroupElement, pair: SystemPair) -> ModuleVector:
    """e_{wJ,wJ'} computed literally: kappa of the moved column roots applied to {wJ}."""
    frame = pair.frame
    k = kappa(pair.W, [w(v) for v in frame.psi_prime.base])
    return apply(k, basis_vector(tabloid_of_element(w, frame)), frame)


@dataclass(frozen=True)
class SpanResult:
    basis: list[ModuleVector]
    rank: int


def _vectors_from_rows(rows: list[list[int]], frame: Frame) -> list[ModuleVector]:
    return [ModuleVector(zip(frame.tabloids, row)) for row in rows]


def specht_span(W: WeylGroup, pair: SystemPair, sweep: Iterable[GroupElement] | None = None) -> SpanResult:
    """Echelon basis of the span of all polytabloids e_{wJ,wJ'}."""
    frame = pair.frame
    ws = W.elements if sweep is None else list(sweep)
    rows = [polytabloid(w, pair).dense(frame) for w in ws]
    ech, _ = linalg.echelon(rows)
    return SpanResult(_vectors_from_rows(ech, frame), len(ech))


def rank_of(vectors: Iterable[ModuleVector], frame: Frame) -> int:
    return linalg.rank([v.dense(frame) for v in vectors])


def is_useful(pair: SystemPair) -> bool:
    def check() -> bool:
        W = pair.W
        row, col = pair.frame.row_group, pair.frame.col_group
        if len(row.members & col.members) != 1:
            return False
        perp = reflection_subgroup(W, orthogonal_subsystem(pair.psi).base)
        perp_p = reflection_subgroup(W, orthogonal_subsystem(pair.psi_prime).base)
        return len(perp.members & perp_p.members) == 1

    return pair._cache("useful", check)


def good_witnesses(pair: SystemPair) -> list[tuple[GroupElement, Fraction]]:
    """(d, coefficient of {dJ} in e_{J,J'}) for every d in D_psi with d(psi) disjoint from psi_prime."""
    e = pair.reference_polytabloid
    frame = pair.frame
    out = []
    for d, t in zip(frame.reps, frame.tabloids):
        if not any(d(v) in pair.psi_prime.roots for v in pair.psi.roots):
            out.append((d, e[t]))
    return out


def is_good(pair: SystemPair) -> bool:
    if not is_useful(pair):
        raise PreconditionError("is_good requires a useful system")
    return pair._cache("good", lambda: all(c != 0 for _, c in good_witnesses(pair)))


def very_good_violations(pair: SystemPair, order: Order = Order.BRUHAT) -> list[tuple[GroupElement, GroupElement]]:
    """Pairs (d, d') with d' = d sigma rho in D_psi but d not <= d'."""
    frame = pair.frame
    bad = []
    for d in pair.standard_reps:
        for sigma in frame.col_group:
            dp = frame.rep_of(d * sigma)
            if not order_leq(d, dp, order):
                bad.append((d, dp))
    return bad


def is_very_good(pair: SystemPair, order: Order = Order.BRUHAT) -> bool:
    if not is_good(pair):
        raise PreconditionError("is_very_good requires a good system")
    order = Order(order)
    return pair._cache(f"very_good_{order.value}", lambda: not very_good_violations(pair, order))


def standard_polytabloids(pair: SystemPair) -> list[ModuleVector]:
    return [polytabloid(d, pair) for d in pair.standard_reps]


def is_perfect(pair: SystemPair, order: Order = Order.BRUHAT) -> bool:
    if not is_very_good(pair, order):
        raise PreconditionError("is_perfect requires a very good system")

    def check() -> bool:
        std = standard_polytabloids(pair)
        r = rank_of(std, pair.frame)
        return r == len(std) and r == specht_span(pair.W, pair).rank

    return pair._cache("perfect", check)


def classify(pair: SystemPair, order: Order = Order.BRUHAT) -> dict:
    """
    Full classification row; flags below a failed level are None.

    ``perfect`` is decided for pairs that are very good under ``order``.
    """
    phi: RootSystem = pair.W.phi
    row = {
        "phi": phi.label,
        "J": pair.psi.names(),
        "J'": pair.psi_prime.names(),
        "psi": pair.psi.diagram_label,
        "psi'": pair.psi_prime.diagram_label,
        "useful": is_useful(pair),
        "good": None,
        "very_good(bruhat)": None,
        "very_good(length)": None,
        "perfect": None,
        "specht_rank": specht_span(pair.W, pair).rank,
        "n_tabloids": len(pair.frame.reps),
        "n_standard": len(pair.standard_reps),
    }
    if row["useful"]:
        row["good"] = is_good(pair)
        if row["good"]:
            row["very_good(bruhat)"] = is_very_good(pair, Order.BRUHAT)
            row["very_good(length)"] = is_very_good(pair, Order.LENGTH)
            if row[f"very_good({Order(order).value})"]:
                row["perfect"] = is_perfect(pair, order)
    return row


def all_pairs(W: WeylGroup, subsystems: list[Subsystem] | None = None) -> list[SystemPair]:
    """Every pair (psi, psi_prime) of subsystems with disjoint root sets."""
    from .rootsys import all_subsystems

    subs = all_subsystems(W.phi) if subsystems is None else subsystems
    return [SystemPair(W, a, b) for a in subs for b in subs if not (a.roots & b.roots)]
