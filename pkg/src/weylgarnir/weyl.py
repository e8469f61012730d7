"""
Weyl group enumeration, reflection subgroups and distinguished coset
representatives.

Elements are identified by the images of the simple roots. Internally each
element also carries the permutation it induces on the root list, which makes
composition a tuple lookup. Reduced words are the lexicographically greatest
reduced expressions over generator indices 1..n, written left to right as
compositions: ``"t2 t1"`` acts by t1 first.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import ConsistencyError, DomainError, ResourceError
from .rootsys import RootSystem, RootVector, Subsystem, reflect

DEFAULT_MAX_ORDER = 50_000


class Order(enum.Enum):
    """Comparison used for the very-good-system condition."""

    BRUHAT = "bruhat"
    LENGTH = "length"


@dataclass(frozen=True, eq=False)
class GroupElement:
    index: int
    canonical_key: tuple[RootVector, ...]
    word: tuple[int, ...]
    length: int
    group: "WeylGroup" = field(repr=False)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GroupElement)
            and self.group is other.group
            and self.canonical_key == other.canonical_key
        )

    def __hash__(self) -> int:
        return hash(self.canonical_key)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.group.mul(self, other)

    @property
    def sign(self) -> int:
        return -1 if self.length % 2 else 1

    @property
    def inverse(self) -> "GroupElement":
        return self.group.inverse(self)

    @property
    def is_identity(self) -> bool:
        return self.length == 0

    @property
    def perm(self) -> tuple[int, ...]:
        return self.group.perms[self.index]

    def __call__(self, v: RootVector) -> RootVector:
        phi = self.group.phi
        i = phi.index.get(v)
        if i is not None:
            return phi.roots[self.perm[i]]
        for k in reversed(self.word):
            v = reflect(phi.simple_system[k - 1], v)
        return v

    def word_string(self) -> str:
        return " ".join(f"t{k}" for k in self.word) if self.word else "e"

    def __str__(self) -> str:
        return self.word_string()

    def sort_key(self) -> tuple:
        return (self.length, self.canonical_key)


def length(w: GroupElement) -> int:
    return w.length


def sign(w: GroupElement) -> int:
    return w.sign


class WeylGroup:
    """Complete enumeration of W(phi) by breadth-first search over simple reflections."""

    def __init__(self, phi: RootSystem, max_order: int = DEFAULT_MAX_ORDER):
        self.phi = phi
        nroots = len(phi.roots)
        simple_idx = [phi.index[a] for a in phi.simple_system]
        gens = [phi.reflection_table[phi.index[a]] for a in phi.simple_system]

        identity = tuple(range(nroots))
        layer: list[tuple[tuple[int, ...], tuple[int, ...]]] = [(identity, ())]
        seen = {identity}
        found = list(layer)
        order_desc = range(len(gens) - 1, -1, -1)
        while layer:
            nxt = []
            for perm, word in layer:
                for k in order_desc:
                    g = gens[k]
                    new = tuple(perm[g[i]] for i in range(nroots))
                    if new not in seen:
                        seen.add(new)
                        nxt.append((new, word + (k + 1,)))
                        if len(seen) > max_order:
                            raise ResourceError(
                                f"group order exceeds the safety cap of {max_order}"
                            )
            found.extend(nxt)
            layer = nxt

        npos = phi.n_positive
        entries = []
        for perm, word in found:
            key = tuple(phi.roots[perm[i]] for i in simple_idx)
            inversions = sum(1 for i in range(npos) if perm[i] >= npos)
            if inversions != len(word):
                raise ConsistencyError("BFS depth disagrees with the inversion count")
            entries.append((inversions, key, perm, word))
        entries.sort(key=lambda t: (t[0], t[1]))

        self.perms: list[tuple[int, ...]] = []
        self.elements: list[GroupElement] = []
        self._by_perm: dict[tuple[int, ...], int] = {}
        for i, (ln, key, perm, word) in enumerate(entries):
            self.elements.append(GroupElement(i, key, word, ln, self))
            self.perms.append(perm)
            self._by_perm[perm] = i
        self._by_key = {g.canonical_key: g for g in self.elements}
        self._table: list[list[int]] | None = None
        self._inv: list[int] | None = None
        self._bruhat: dict[int, frozenset[int]] = {}
        self._reflections: dict[RootVector, GroupElement] = {}

    def __repr__(self) -> str:
        return f"WeylGroup({self.phi.label}, order={len(self)})"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)

    @property
    def identity(self) -> GroupElement:
        return self.elements[0]

    @cached_property
    def generators(self) -> tuple[GroupElement, ...]:
        return tuple(self.from_word([k]) for k in range(1, self.phi.rank + 1))

    def _build_table(self) -> list[list[int]]:
        if self._table is None:
            n = len(self.perms)
            table = []
            for p in self.perms:
                table.append([self._by_perm[tuple(p[x] for x in q)] for q in self.perms])
            self._table = table
            self._inv = [row.index(0) for row in table]
            if len(self._inv) != n:
                raise ConsistencyError("multiplication table is not square")
        return self._table

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        return self.elements[self._build_table()[a.index][b.index]]

    def inverse(self, a: GroupElement) -> GroupElement:
        self._build_table()
        return self.elements[self._inv[a.index]]

    def by_key(self, key: Sequence[RootVector]) -> GroupElement:
        return self._by_key[tuple(key)]

    def from_word(self, word: Iterable[int]) -> GroupElement:
        g = self.identity
        for k in word:
            if not 1 <= k <= self.phi.rank:
                raise DomainError(f"generator index {k} out of range")
            perm = self.perms[g.index]
            gen = self._generator_perms[k - 1]
            g = self.elements[self._by_perm[tuple(perm[gen[i]] for i in range(len(perm)))]]
        return g

    @cached_property
    def _generator_perms(self) -> list[tuple[int, ...]]:
        phi = self.phi
        return [phi.reflection_table[phi.index[a]] for a in phi.simple_system]

    def parse_word(self, text: str) -> GroupElement:
        """Parse ``"t2 t1 t2"`` (also ``"e"``, ``"t2t1"``, ``"2 1"``)."""
        s = text.strip()
        if s in ("", "e", "id"):
            return self.identity
        toks = re.findall(r"t?(\d+)", s.replace("τ", "t"))
        if not toks or re.sub(r"[t\s,\d]", "", s.replace("τ", "t")):
            raise DomainError(f"malformed word {text!r}")
        return self.from_word(int(t) for t in toks)

    def reflection(self, alpha: RootVector) -> GroupElement:
        """The group element tau_alpha for a root alpha."""
        phi = self.phi
        if alpha not in phi:
            raise DomainError(f"{alpha} is not a root")
        got = self._reflections.get(alpha)
        if got is None:
            perm = phi.reflection_table[phi.index[alpha]]
            got = self._reflections[alpha] = self.elements[self._by_perm[perm]]
        return got

    @cached_property
    def reflections(self) -> tuple[GroupElement, ...]:
        return tuple(self.reflection(a) for a in self.phi.positives)

    def is_positive_image(self, w: GroupElement, v: RootVector) -> bool:
        return self.phi.is_positive(w(v))

    def bruhat_interval(self, v: GroupElement) -> frozenset[int]:
        """Indices of all u <= v, as products of subwords of a reduced word of v."""
        got = self._bruhat.get(v.index)
        if got is None:
            table = self._build_table()
            reach = {0}
            for k in v.word:
                s = self.generators[k - 1].index
                reach |= {table[x][s] for x in reach}
            got = frozenset(reach)
            self._bruhat[v.index] = got
        return got


def generate_group(phi: RootSystem, max_order: int = DEFAULT_MAX_ORDER) -> WeylGroup:
    return WeylGroup(phi, max_order)


@dataclass(frozen=True)
class ReflectionSubgroup:
    generators: tuple[RootVector, ...]
    elements: tuple[GroupElement, ...]

    @cached_property
    def members(self) -> frozenset[GroupElement]:
        return frozenset(self.elements)

    def __contains__(self, w: GroupElement) -> bool:
        return w in self.members

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[GroupElement]:
        return iter(self.elements)


def closure(W: WeylGroup, gens: Iterable[GroupElement]) -> tuple[GroupElement, ...]:
    """The subgroup generated by ``gens``, sorted by (length, canonical key)."""
    gens = list(gens)
    found = {W.identity}
    frontier = [W.identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return tuple(sorted(found, key=lambda g: g.index))


def reflection_subgroup(W: WeylGroup, J: Iterable[RootVector]) -> ReflectionSubgroup:
    """W(J): the subgroup generated by the reflections in the roots of ``J``."""
    J = tuple(J)
    for j in J:
        if j not in W.phi:
            raise DomainError(f"{j} is not a root of {W.phi.label}")
    return ReflectionSubgroup(J, closure(W, (W.reflection(j) for j in J)))


def distinguished_reps(W: WeylGroup, psi: Subsystem) -> list[GroupElement]:
    """D_psi: elements sending every simple root of ``psi`` to a positive root."""
    phi = W.phi
    base = [phi.index[j] for j in psi.base]
    npos = phi.n_positive
    return [w for w in W.elements if all(w.perm[j] < npos for j in base)]


def decompose(W: WeylGroup, w: GroupElement, psi: Subsystem) -> tuple[GroupElement, GroupElement]:
    """
    Split ``w`` as ``d * rho`` with ``d`` in D_psi and ``rho`` in W(psi).

    Right-multiplies by the reflection of any simple root of ``psi`` sent
    negative; each step strictly shortens the element.
    """
    phi = W.phi
    npos = phi.n_positive
    base = [(phi.index[j], W.reflection(j)) for j in psi.base]
    d = w
    rho_inv = W.identity
    for _ in range(w.length + 1):
        for j, t in base:
            if d.perm[j] >= npos:
                d = d * t
                rho_inv = rho_inv * t
                break
        else:
            rho = rho_inv.inverse
            if d * rho != w:
                raise ConsistencyError("decomposition does not recompose")
            return d, rho
    raise ConsistencyError(f"no distinguished representative found for {w}")


def bruhat_leq(u: GroupElement, v: GroupElement) -> bool:
    """Bruhat order by the subword property."""
    if u.group is not v.group:
        raise DomainError("elements of different groups")
    if u.length > v.length:
        return False
    return u.index in v.group.bruhat_interval(v)


def order_leq(u: GroupElement, v: GroupElement, order: Order = Order.BRUHAT) -> bool:
    if Order(order) is Order.BRUHAT:
        return bruhat_leq(u, v)
    return u.length <= v.length


def conjugate(W: WeylGroup, w: GroupElement, roots: Iterable[RootVector]) -> tuple[RootVector, ...]:
    return tuple(w(v) for v in roots)


def element_json(w: GroupElement) -> dict:
    return {
        "word": w.word_string(),
        "length": w.length,
        "sign": w.sign,
        "canonical_key": [v.to_json() for v in w.canonical_key],
    }
