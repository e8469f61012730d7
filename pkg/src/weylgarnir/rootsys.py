"""
Root systems, subsystems and orthogonal complements in exact rational
coordinates.

Classical systems live in the usual epsilon coordinates (A_n in n+1
dimensions, B/C/D in n dimensions). G2 is embedded in three dimensions with
simple roots e1 - e2 and -2e1 + e2 + e3.

Every root is also addressed by its coefficient string over the simple
roots, e.g. ``"32"`` for 3a1 + 2a2 and ``"-10"`` for -a1.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, total_ordering
from typing import Iterable, Iterator, Sequence

from . import linalg
from .errors import ConfigurationError, DomainError

MAX_RANK = 4


@total_ordering
@dataclass(frozen=True)
class RootVector:
    """An exact rational vector of the ambient Euclidean space."""

    coords: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    @classmethod
    def of(cls, *coords) -> "RootVector":
        return cls(tuple(coords))

    @classmethod
    def unit(cls, dim: int, i: int) -> "RootVector":
        return cls(tuple(1 if k == i else 0 for k in range(dim)))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __lt__(self, other: "RootVector") -> bool:
        return self.coords < other.coords

    def _check(self, other: "RootVector") -> None:
        if len(self.coords) != len(other.coords):
            raise DomainError(
                f"dimension mismatch: {len(self.coords)} vs {len(other.coords)}"
            )

    def __add__(self, other: "RootVector") -> "RootVector":
        self._check(other)
        return RootVector(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "RootVector") -> "RootVector":
        self._check(other)
        return RootVector(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "RootVector":
        return RootVector(tuple(-a for a in self.coords))

    def scale(self, c) -> "RootVector":
        c = Fraction(c)
        return RootVector(tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coords]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> "RootVector":
        return cls(tuple(Fraction(x) for x in data))


def inner(u: RootVector, v: RootVector) -> Fraction:
    """Standard Euclidean inner product."""
    u._check(v)
    return sum((a * b for a, b in zip(u.coords, v.coords)), Fraction(0))


def reflect(alpha: RootVector, v: RootVector) -> RootVector:
    """Reflect ``v`` in the hyperplane orthogonal to ``alpha``."""
    alpha._check(v)
    if alpha.is_zero():
        raise DomainError("cannot reflect in the zero vector")
    c = 2 * inner(alpha, v) / inner(alpha, alpha)
    return v - alpha.scale(c)


def proportional(u: RootVector, v: RootVector) -> bool:
    return inner(u, v) ** 2 == inner(u, u) * inner(v, v)


def _standard_simple_roots(label: str, rank: int) -> list[RootVector]:
    if label not in "ABCDG" or len(label) != 1:
        raise ConfigurationError(f"unsupported root system type {label!r}")
    if label == "G":
        if rank != 2:
            raise ConfigurationError("G is only available in rank 2")
        return [RootVector.of(1, -1, 0), RootVector.of(-2, 1, 1)]
    if not 1 <= rank <= MAX_RANK:
        raise ConfigurationError(f"rank {rank} outside 1..{MAX_RANK}")
    if label == "D" and rank < 2:
        raise ConfigurationError("D needs rank at least 2")
    dim = rank + 1 if label == "A" else rank
    e = [RootVector.unit(dim, i) for i in range(dim)]
    simple = [e[i] - e[i + 1] for i in range(rank - 1)]
    if label == "A":
        simple.append(e[rank - 1] - e[rank])
    elif label == "B":
        simple.append(e[rank - 1])
    elif label == "C":
        simple.append(e[rank - 1].scale(2))
    else:
        simple.append(e[rank - 2] + e[rank - 1])
    return simple


def parse_label(text: str, rank: int | None = None) -> tuple[str, int]:
    """Split ``"G2"`` into ``("G", 2)``; a bare letter needs ``rank``."""
    m = re.fullmatch(r"\s*([A-Za-z])\s*(\d*)\s*", text)
    if not m:
        raise ConfigurationError(f"cannot parse root system type {text!r}")
    letter = m.group(1).upper()
    if m.group(2):
        r = int(m.group(2))
        if rank is not None and rank != r:
            raise ConfigurationError(f"type {text!r} conflicts with rank {rank}")
    elif rank is None:
        raise ConfigurationError(f"type {text!r} needs a rank")
    else:
        r = rank
    return letter, r


_COEFF_TOKEN = re.compile(r"-?\d")


class RootSystem:
    """
    A crystallographic root system with a fixed simple system.

    Roots are stored positive-first, each half ordered by height and then by
    decreasing coefficient tuple, so ``roots[i]`` and ``roots[i + n]`` are
    negatives of each other where ``n`` is the number of positive roots.
    """

    def __init__(self, label: str, simple_system: Sequence[RootVector]):
        self.label = label
        self.simple_system: tuple[RootVector, ...] = tuple(simple_system)
        if not self.simple_system:
            raise ConfigurationError("empty simple system")
        self.rank = len(self.simple_system)
        self.ambient_dim = len(self.simple_system[0])
        self._gram = [[inner(a, b) for b in self.simple_system] for a in self.simple_system]
        if linalg.rank(self._gram) != self.rank:
            raise ConfigurationError("simple roots are linearly dependent")

        found = set(self.simple_system)
        frontier = list(self.simple_system)
        while frontier:
            nxt = []
            for v in frontier:
                for a in self.simple_system:
                    w = reflect(a, v)
                    if w not in found:
                        found.add(w)
                        nxt.append(w)
            frontier = nxt

        coeffs = {v: self.coefficients(v) for v in found}
        pos = [v for v in found if all(c >= 0 for c in coeffs[v])]
        pos.sort(key=lambda v: (sum(coeffs[v]), tuple(-c for c in coeffs[v])))
        self.positives: tuple[RootVector, ...] = tuple(pos)
        self.roots: tuple[RootVector, ...] = self.positives + tuple(-v for v in pos)
        self.index: dict[RootVector, int] = {v: i for i, v in enumerate(self.roots)}
        self._coeffs = coeffs
        self._positive_set = frozenset(pos)
        self._check_invariants()

    def _check_invariants(self) -> None:
        if len(self.index) != len(self.roots) or len(self.roots) != len(self._coeffs):
            raise ConfigurationError("roots do not split into positive and negative halves")
        for v in self.roots:
            if v.is_zero():
                raise ConfigurationError("zero root")
            c = self._coeffs[v]
            if not (all(x >= 0 for x in c) or all(x <= 0 for x in c)):
                raise ConfigurationError(f"root {v} is neither positive nor negative")
            if any(x.denominator != 1 for x in c):
                raise ConfigurationError(f"root {v} has non-integral coefficients")
        table = []
        for a in self.roots:
            row = []
            for b in self.roots:
                i = self.index.get(reflect(a, b))
                if i is None:
                    raise ConfigurationError("root set not closed under reflections")
                row.append(i)
            table.append(tuple(row))
        # table[i][j] = index of the reflection of root j in root i
        self.reflection_table: tuple[tuple[int, ...], ...] = tuple(table)

    def __repr__(self) -> str:
        return f"RootSystem({self.label!r})"

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, v: RootVector) -> bool:
        return v in self.index

    @property
    def n_positive(self) -> int:
        return len(self.positives)

    def is_positive(self, v: RootVector) -> bool:
        return v in self._positive_set

    def coefficients(self, v: RootVector) -> tuple[Fraction, ...]:
        """Coordinates of ``v`` over the simple system (DomainError if outside its span)."""
        cached = getattr(self, "_coeffs", {}).get(v)
        if cached is not None:
            return cached
        if len(v) != self.ambient_dim:
            raise DomainError("dimension mismatch")
        rhs = [inner(a, v) for a in self.simple_system]
        c = linalg.solve(self._gram, rhs)
        back = RootVector(tuple(0 for _ in range(self.ambient_dim)))
        for ci, a in zip(c, self.simple_system):
            back = back + a.scale(ci)
        if back != v:
            raise DomainError(f"{v} is not in the span of the simple roots")
        return tuple(c)

    def height(self, v: RootVector) -> Fraction:
        return sum(self.coefficients(v), Fraction(0))

    def coeff_string(self, v: RootVector) -> str:
        """Coefficient notation: ``"32"`` for 3a1 + 2a2, ``"-10"`` for -a1."""
        c = self.coefficients(v)
        if all(x.denominator == 1 and -9 <= x <= 9 for x in c):
            return "".join(str(int(x)) for x in c)
        return "[" + ",".join(str(x) for x in c) + "]"

    def parse_root(self, text: str) -> RootVector:
        """Inverse of :meth:`coeff_string`; the result must be a root."""
        s = text.strip().replace("−", "-")
        if s.startswith("[") and s.endswith("]"):
            c = [Fraction(x) for x in s[1:-1].split(",")]
        else:
            toks = _COEFF_TOKEN.findall(s)
            if "".join(toks) != s:
                raise DomainError(f"malformed root {text!r}")
            c = [Fraction(int(t)) for t in toks]
            if len(c) == self.rank and s.startswith("-") and s.count("-") == 1:
                # "-10" negates the whole root
                c = [c[0]] + [-x for x in c[1:]]
        if len(c) != self.rank:
            raise DomainError(f"root {text!r} needs {self.rank} coefficients")
        v = RootVector(tuple(0 for _ in range(self.ambient_dim)))
        for ci, a in zip(c, self.simple_system):
            v = v + a.scale(ci)
        if v not in self.index:
            raise DomainError(f"{text!r} is not a root of {self.label}")
        return v

    @cached_property
    def has_two_lengths(self) -> bool:
        return len({inner(v, v) for v in self.positives}) > 1

    @cached_property
    def long_length(self) -> Fraction:
        return max(inner(v, v) for v in self.positives)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "ambient_dim": self.ambient_dim,
            "simple_system": [self.coeff_string(a) for a in self.simple_system],
            "roots": [
                {"name": self.coeff_string(v), "coords": v.to_json(), "positive": self.is_positive(v)}
                for v in self.roots
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "RootSystem":
        by_name = {r["name"]: RootVector.from_json(r["coords"]) for r in data["roots"]}
        return cls(data["label"], [by_name[n] for n in data["simple_system"]])


def build_root_system(label: str, rank: int | None = None) -> RootSystem:
    """Construct A_n, B_n, C_n, D_n (n <= 4) or G2; accepts ``("G", 2)`` or ``"G2"``."""
    letter, r = parse_label(label, rank)
    return RootSystem(f"{letter}{r}", _standard_simple_roots(letter, r))


def reflection_closure(phi: RootSystem, generators: Iterable[RootVector]) -> frozenset[RootVector]:
    """Smallest subset of phi containing ``generators`` and closed under its own reflections."""
    table = phi.reflection_table
    found: set[int] = set()
    for g in generators:
        i = phi.index.get(g)
        if i is None:
            raise DomainError(f"{g} is not a root")
        found.add(i)
        found.add(phi.index[-g])
    frontier = list(found)
    while frontier:
        nxt = []
        for a in list(found):
            row = table[a]
            for v in frontier:
                for w in (row[v], table[v][a]):
                    if w not in found:
                        found.add(w)
                        nxt.append(w)
        frontier = nxt
    return frozenset(phi.roots[i] for i in found)


def canonical_base(phi: RootSystem, roots: Iterable[RootVector]) -> tuple[RootVector, ...]:
    """Simple system of a closed root set: positive members not a sum of two positive members."""
    pos = [v for v in phi.positives if v in set(roots)]
    pos_set = set(pos)
    base = []
    for v in pos:
        if not any((v - a) in pos_set for a in pos if a != v):
            base.append(v)
    return tuple(base)


def _components(vectors: Sequence[RootVector]) -> list[list[RootVector]]:
    comps: list[list[RootVector]] = []
    seen: set[int] = set()
    for i in range(len(vectors)):
        if i in seen:
            continue
        comp, stack = [], [i]
        seen.add(i)
        while stack:
            k = stack.pop()
            comp.append(k)
            for j in range(len(vectors)):
                if j not in seen and inner(vectors[k], vectors[j]) != 0:
                    seen.add(j)
                    stack.append(j)
        comps.append([vectors[k] for k in sorted(comp)])
    return comps


def _component_type(base: Sequence[RootVector]) -> str:
    n = len(base)
    lengths = [inner(a, a) for a in base]
    degree = [
        sum(1 for j in range(n) if j != i and inner(base[i], base[j]) != 0) for i in range(n)
    ]
    if max(degree, default=0) > 2:
        return f"D{n}"
    ratio = max(lengths) / min(lengths)
    if ratio == 1:
        return f"A{n}"
    if ratio == 3:
        return "G2"
    if n == 2:
        return "B2"
    short = sum(1 for x in lengths if x == min(lengths))
    return f"B{n}" if short == 1 else f"C{n}"


def diagram_label(phi: RootSystem, base: Sequence[RootVector]) -> str:
    """
    Dynkin label of a subsystem, e.g. ``"A1+~A1"``.

    A tilde marks a simply-laced component made of long roots inside a
    parent with two root lengths.
    """
    if not base:
        return "0"
    if len(base) == phi.rank and len(reflection_closure(phi, base)) == len(phi):
        return phi.label
    parts = []
    for comp in _components(list(base)):
        t = _component_type(comp)
        tilde = (
            phi.has_two_lengths
            and t[0] in "AD"
            and inner(comp[0], comp[0]) == phi.long_length
        )
        parts.append(("~" if tilde else "") + t)
    parts.sort(key=lambda p: (p.startswith("~"), p.lstrip("~")[0], -int(p.lstrip("~")[1:])))
    return "+".join(parts)


@dataclass(frozen=True, eq=False)
class Subsystem:
    """
    A root subsystem with the ordered simple system it was created from.

    ``simple_system`` keeps the caller's order (used for tableaux);
    ``base`` is the canonical simple system of ``roots`` relative to the
    parent positive roots and is what coset computations rely on.
    """

    parent: RootSystem
    roots: frozenset[RootVector]
    simple_system: tuple[RootVector, ...]
    base: tuple[RootVector, ...]
    components: tuple[tuple[RootVector, ...], ...]
    diagram_label: str = field(default="")

    def __eq__(self, other) -> bool:
        return isinstance(other, Subsystem) and self.parent is other.parent and self.roots == other.roots

    def __hash__(self) -> int:
        return hash(self.roots)

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, v: RootVector) -> bool:
        return v in self.roots

    @property
    def rank(self) -> int:
        return len(self.base)

    @cached_property
    def positives(self) -> tuple[RootVector, ...]:
        return tuple(v for v in self.parent.positives if v in self.roots)

    def names(self, vectors: Iterable[RootVector] | None = None) -> list[str]:
        vs = self.simple_system if vectors is None else vectors
        return [self.parent.coeff_string(v) for v in vs]

    def __repr__(self) -> str:
        return f"Subsystem({self.diagram_label}, J={{{','.join(self.names())}}})"

    def to_json(self) -> dict:
        return {
            "label": self.diagram_label,
            "J": self.names(),
            "base": self.names(self.base),
            "roots": sorted(self.parent.coeff_string(v) for v in self.roots),
        }


def subsystem_from_simples(phi: RootSystem, J: Sequence[RootVector]) -> Subsystem:
    """The subsystem generated by the positive roots ``J`` (order preserved)."""
    J = tuple(J)
    for j in J:
        if not phi.is_positive(j):
            raise DomainError(f"{j} is not a positive root of {phi.label}")
    for i in range(len(J)):
        for k in range(i + 1, len(J)):
            if proportional(J[i], J[k]):
                raise DomainError("simple roots must be pairwise non-proportional")
    if linalg.rank([list(j.coords) for j in J]) != len(J):
        raise DomainError("simple roots must be linearly independent")
    roots = reflection_closure(phi, J)
    base = canonical_base(phi, roots)
    comps = tuple(tuple(c) for c in _components(list(J)))
    return Subsystem(phi, roots, J, base, comps, diagram_label(phi, base))


def subsystem_from_roots(phi: RootSystem, roots: Iterable[RootVector]) -> Subsystem:
    """Wrap a reflection-closed root set, using its canonical simple system."""
    roots = frozenset(roots)
    if reflection_closure(phi, roots) != roots:
        raise DomainError("root set is not closed under its reflections")
    return subsystem_from_simples(phi, canonical_base(phi, roots))


def orthogonal_subsystem(psi: Subsystem) -> Subsystem:
    """The largest subsystem of the parent orthogonal to every root of ``psi``."""
    phi = psi.parent
    perp = [b for b in phi.roots if all(inner(b, a) == 0 for a in psi.roots)]
    return subsystem_from_roots(phi, perp)


def all_subsystems(phi: RootSystem) -> list[Subsystem]:
    """Every reflection-closed subset of phi, ordered by size then by root names."""
    seen: dict[frozenset, None] = {frozenset(): None}
    frontier = [frozenset()]
    while frontier:
        nxt = []
        for s in frontier:
            for a in phi.positives:
                if a in s:
                    continue
                t = reflection_closure(phi, list(s) + [a])
                if t not in seen:
                    seen[t] = None
                    nxt.append(t)
        frontier = nxt
    subs = [subsystem_from_roots(phi, s) for s in seen]
    subs.sort(key=lambda p: (len(p.roots), [phi.index[v] for v in p.base]))
    return subs


def root_system_json(phi: RootSystem) -> str:
    return json.dumps(phi.to_json(), indent=2)
