"""
Delta-tableaux, row equivalence and Delta-tabloids.

A tableau is the reference tuple (J; J') moved by a group element. Tabloids
are row-equivalence classes, i.e. left cosets w W(J), and are identified by
their distinguished representative d in D_psi.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import ConsistencyError, DomainError
from .rootsys import RootVector, Subsystem
from .weyl import (
    GroupElement,
    ReflectionSubgroup,
    WeylGroup,
    decompose,
    distinguished_reps,
    reflection_subgroup,
)


class Frame:
    """
    The data every tableau computation shares: W, the row subsystem psi with
    its ordered simple system J, and the column subsystem psi_prime with J'.
    """

    def __init__(self, W: WeylGroup, psi: Subsystem, psi_prime: Subsystem):
        if psi.parent is not W.phi or psi_prime.parent is not W.phi:
            raise DomainError("subsystems belong to a different root system")
        self.W = W
        self.psi = psi
        self.psi_prime = psi_prime

    @property
    def J(self) -> tuple[RootVector, ...]:
        return self.psi.simple_system

    @property
    def Jp(self) -> tuple[RootVector, ...]:
        return self.psi_prime.simple_system

    @cached_property
    def row_group(self) -> ReflectionSubgroup:
        return reflection_subgroup(self.W, self.psi.base)

    @cached_property
    def col_group(self) -> ReflectionSubgroup:
        return reflection_subgroup(self.W, self.psi_prime.base)

    @cached_property
    def reps(self) -> list[GroupElement]:
        """D_psi in (length, canonical key) order."""
        return distinguished_reps(self.W, self.psi)

    @cached_property
    def col_reps(self) -> list[GroupElement]:
        """D_psi_prime in (length, canonical key) order."""
        return distinguished_reps(self.W, self.psi_prime)

    @cached_property
    def _coset_of(self) -> list[int]:
        # element index -> position of its tabloid in self.reps
        out = [-1] * len(self.W)
        for pos, d in enumerate(self.reps):
            for rho in self.row_group:
                out[(d * rho).index] = pos
        if -1 in out:
            raise ConsistencyError("D_psi does not cover W; J is not a simple system")
        return out

    def rep_of(self, w: GroupElement) -> GroupElement:
        return self.reps[self._coset_of[w.index]]

    def position(self, t: "Tabloid") -> int:
        return self._coset_of[t.rep.index]

    @cached_property
    def tabloids(self) -> list["Tabloid"]:
        return [Tabloid(d, make_tableau(d, self).display()) for d in self.reps]


@dataclass(frozen=True)
class Tableau:
    rows: tuple[RootVector, ...]
    cols: tuple[RootVector, ...]
    witness: GroupElement = field(compare=False)

    def display(self) -> str:
        phi = self.witness.group.phi
        r = ",".join(phi.coeff_string(v) for v in self.rows)
        c = ",".join(phi.coeff_string(v) for v in self.cols)
        return "{" + r + ";" + c + "}"

    def __str__(self) -> str:
        return self.display()


@dataclass(frozen=True)
class Tabloid:
    rep: GroupElement
    display: str = field(compare=False)

    def __str__(self) -> str:
        return self.display

    def to_json(self) -> dict:
        return {"canonical_rep": self.rep.word_string(), "display": self.display}


def make_tableau(w: GroupElement, frame: Frame) -> Tableau:
    return Tableau(tuple(w(v) for v in frame.J), tuple(w(v) for v in frame.Jp), w)


def row_equivalent(t1: Tableau, t2: Tableau, frame: Frame) -> bool:
    return (t1.witness.inverse * t2.witness) in frame.row_group


def tabloid_of(t: Tableau, frame: Frame) -> Tabloid:
    return frame.tabloids[frame._coset_of[t.witness.index]]


def tabloid_of_element(w: GroupElement, frame: Frame) -> Tabloid:
    """The tabloid {wJ}."""
    return frame.tabloids[frame._coset_of[w.index]]


def all_tabloids(frame: Frame) -> list[Tabloid]:
    return list(frame.tabloids)


def act(sigma: GroupElement, t: Tabloid, frame: Frame) -> Tabloid:
    return tabloid_of_element(sigma * t.rep, frame)


def check_decomposition(frame: Frame, w: GroupElement) -> GroupElement:
    """Tabloid representative of ``w`` via the descent algorithm; agrees with the coset table."""
    d, _ = decompose(frame.W, w, frame.psi)
    if d != frame.rep_of(w):
        raise ConsistencyError("descent decomposition disagrees with the coset table")
    return d
