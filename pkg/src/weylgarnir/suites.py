"""
Exhaustive verification suites.

Each suite returns a :class:`SuiteResult` with a count of checked cases and
per-case failure messages; nothing here raises on a mathematical failure.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable

from .errors import InvariantViolation, WeylGarnirError
from .garnir import (
    GarnirContext,
    all_subgroups,
    find_pairing,
    garnir_element,
    peel_product,
    product_set,
    straighten,
    verify_annihilation,
)
from .rootsys import all_subsystems, build_root_system, subsystem_from_simples
from .specht import (
    SystemPair,
    all_pairs,
    is_good,
    is_useful,
    is_very_good,
    polytabloid,
    polytabloid_via_kappa,
    rank_of,
    specht_span,
    standard_polytabloids,
)
from .tableaux import act, all_tabloids, make_tableau, row_equivalent, tabloid_of
from .weyl import Order, WeylGroup, decompose, distinguished_reps, generate_group, reflection_subgroup

log = logging.getLogger(__name__)

EXPECTED_ORDERS = {"A1": 2, "A2": 6, "A3": 24, "A4": 120, "B2": 8, "B3": 48, "B4": 384,
                   "C2": 8, "C3": 48, "C4": 384, "D2": 4, "D3": 24, "D4": 192, "G2": 12}


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)
    lines: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checks, {len(self.failures)} failures"


@lru_cache(maxsize=None)
def group_for(label: str) -> WeylGroup:
    return generate_group(build_root_system(label))


@lru_cache(maxsize=None)
def pairs_for(label: str) -> tuple[SystemPair, ...]:
    return tuple(all_pairs(group_for(label)))


def very_good_pairs(label: str, order: Order | None = None) -> list[SystemPair]:
    """Pairs classified very good under ``order`` (under either order when None)."""
    orders = [order] if order is not None else [Order.BRUHAT, Order.LENGTH]
    out = []
    for p in pairs_for(label):
        if is_useful(p) and is_good(p) and any(is_very_good(p, o) for o in orders):
            out.append(p)
    return out


def example_pair(W: WeylGroup) -> SystemPair:
    return SystemPair.from_names(W, ["10", "32"], ["11"])


def structure_suite(label: str) -> SuiteResult:
    """Group order, |D_psi| |W(psi)| = |W|, coset partitions and decomposition for every subsystem."""
    res = SuiteResult(f"structure[{label}]")
    W = group_for(label)
    expected = EXPECTED_ORDERS.get(label)
    res.checked += 1
    if expected is not None and len(W) != expected:
        res.fail(f"|W({label})| = {len(W)}, expected {expected}")
    for psi in all_subsystems(W.phi):
        D = distinguished_reps(W, psi)
        sub = reflection_subgroup(W, psi.base)
        res.checked += 1
        if len(D) * len(sub) != len(W):
            res.fail(f"{psi}: |D|={len(D)} |W(J)|={len(sub)}")
        cosets = [frozenset(d * r for r in sub) for d in D]
        res.checked += 1
        if sum(len(c) for c in cosets) != len(W) or frozenset().union(*cosets) != set(W):
            res.fail(f"{psi}: cosets of W(J) do not partition W")
        Dset = set(D)
        for w in W:
            d, rho = decompose(W, w, psi)
            res.checked += 1
            if d * rho != w or d not in Dset or rho not in sub.members:
                res.fail(f"{psi}: decompose({w}) = ({d}, {rho})")
    return res


def action_suite(label: str, max_pairs: int | None = None) -> SuiteResult:
    """Group-action axioms for tabloids and agreement of tabloid_of with row equivalence."""
    res = SuiteResult(f"action[{label}]")
    W = group_for(label)
    pairs = pairs_for(label)[:max_pairs]
    seen_psi = set()
    for pair in pairs:
        if pair.psi in seen_psi:
            continue
        seen_psi.add(pair.psi)
        frame = pair.frame
        tabs = all_tabloids(frame)
        res.checked += 1
        if len({t.rep for t in tabs}) != len(tabs) or len(tabs) != len(frame.reps):
            res.fail(f"{pair}: tabloid reps not distinct")
        for t in tabs:
            if act(W.identity, t, frame) != t:
                res.fail(f"{pair}: identity moves {t}")
            for s in W:
                st = act(s, t, frame)
                res.checked += 1
                if act(s.inverse, st, frame) != t:
                    res.fail(f"{pair}: inverse axiom fails at {s}, {t}")
                for u in W.generators:
                    if act(u * s, t, frame) != act(u, st, frame):
                        res.fail(f"{pair}: compatibility fails at {u}, {s}, {t}")
        tableaux = [make_tableau(w, frame) for w in W]
        for a in tableaux:
            for b in tableaux:
                res.checked += 1
                same = tabloid_of(a, frame) == tabloid_of(b, frame)
                if same != row_equivalent(a, b, frame):
                    res.fail(f"{pair}: tabloid_of disagrees with row equivalence")
    return res


def sign_suite(label: str) -> SuiteResult:
    """sigma e_{wJ,wJ'} = s(sigma) e_{wJ,wJ'} for sigma in W(wJ'), for every pair and w."""
    res = SuiteResult(f"sign-equivariance[{label}]")
    W = group_for(label)
    from .specht import AlgebraElement, apply

    for pair in pairs_for(label):
        frame = pair.frame
        for w in W:
            e = polytabloid(w, pair)
            res.checked += 1
            if e != polytabloid_via_kappa(w, pair):
                res.fail(f"{pair}: polytabloid routes disagree at w={w}")
            col = reflection_subgroup(W, [w(v) for v in pair.psi_prime.base])
            for s in col:
                res.checked += 1
                if apply(AlgebraElement({s: 1}), e, frame) != e.scale(s.sign):
                    res.fail(f"{pair}: sign-equivariance fails at w={w}, sigma={s}")
    return res


def coset_suite(label: str, pairs: list[SystemPair] | None = None) -> SuiteResult:
    """e_{wJ,wJ'} = s(rho) e_{dJ,dJ'} where w = d rho, d in D_psi', rho in W(J')."""
    res = SuiteResult(f"coset-reduction[{label}]")
    W = group_for(label)
    for pair in pairs if pairs is not None else pairs_for(label):
        cols = set(pair.frame.col_reps)
        for w in W:
            d, rho = decompose(W, w, pair.psi_prime)
            res.checked += 1
            if d not in cols or rho not in pair.frame.col_group:
                res.fail(f"{pair}: bad decomposition of {w}")
            elif polytabloid(w, pair) != polytabloid(d, pair).scale(rho.sign):
                res.fail(f"{pair}: e(wJ) != s(rho) e(dJ) at w={w}")
        sweep_rank = specht_span(W, pair, pair.frame.col_reps).rank
        res.checked += 1
        if sweep_rank != specht_span(W, pair).rank:
            res.fail(f"{pair}: rank over D_psi' differs from rank over W")
    return res


def peel_suite(label: str) -> SuiteResult:
    """Peel's product identity for every ordered pair of subgroups."""
    res = SuiteResult(f"peel[{label}]")
    W = group_for(label)
    subs = all_subgroups(W)
    for U in subs:
        for V in subs:
            lhs, rhs = peel_product(U, V)
            res.checked += 1
            if lhs != rhs:
                res.fail(f"peel identity fails for |U|={len(U)}, |V|={len(V)}")
            if len(product_set(U, V)) * len(set(U) & set(V)) != len(U) * len(V):
                res.fail("|UV| |U cap V| != |U| |V|")
    res.lines.append(f"{len(subs)} subgroups, {len(subs) ** 2} ordered pairs")
    return res


def iter_contexts(label: str, pairs: list[SystemPair] | None = None):
    """(pair, d, psi*) contexts over very good pairs, every d in D_psi', every subsystem psi*."""
    W = group_for(label)
    subs = all_subsystems(W.phi)
    for pair in very_good_pairs(label) if pairs is None else pairs:
        for d in pair.frame.col_reps:
            for star in subs:
                yield GarnirContext(pair, d, star)


def lemma_suite(label: str, pairs: list[SystemPair] | None = None) -> SuiteResult:
    """Annihilation by the signed sum over W(J*) whenever a pairing exists."""
    res = SuiteResult(f"lemma[{label}]")
    found = 0
    for ctx in iter_contexts(label, pairs):
        pairing = find_pairing(ctx)
        if pairing is None:
            continue
        found += 1
        res.checked += 1
        try:
            verify_annihilation(ctx, pairing)
        except WeylGarnirError as exc:
            res.fail(str(exc))
    res.lines.append(f"{found} contexts with a pairing")
    return res


def theorem_suite(label: str, pairs: list[SystemPair] | None = None) -> SuiteResult:
    """Both sides of the straightening identity agree; the reduced side uses D_psi' only."""
    res = SuiteResult(f"theorem[{label}]")
    for ctx in iter_contexts(label, pairs):
        pairing = find_pairing(ctx)
        if pairing is None:
            continue
        res.checked += 1
        try:
            rep = straighten(ctx, pairing)
        except InvariantViolation as exc:
            res.fail(str(exc))
            continue
        cols = set(ctx.pair.frame.col_reps)
        if not set(rep.reduced) <= cols:
            res.fail(f"{ctx.describe()}: reduced form leaves D_psi'")
        G = garnir_element(ctx)
        if len(G) * len(ctx.H) != len(ctx.star_group) or G[ctx.W.identity] != 1:
            res.fail(f"{ctx.describe()}: Garnir element has the wrong shape")
    return res


def independence_suite(label: str) -> SuiteResult:
    """Standard polytabloids of very good pairs are linearly independent, per order."""
    res = SuiteResult(f"independence[{label}]")
    for order in (Order.BRUHAT, Order.LENGTH):
        for pair in very_good_pairs(label, order):
            std = standard_polytabloids(pair)
            res.checked += 1
            if rank_of(std, pair.frame) != len(std):
                res.fail(f"{pair} ({order.value}): {len(std)} standard polytabloids, rank {rank_of(std, pair.frame)}")
    return res


def example34_suite() -> SuiteResult:
    """Byte-exact reproduction of the worked G2 example."""
    from .garnir import garnir_report

    res = SuiteResult("example34")
    W = group_for("G2")
    phi = W.phi
    pair = example_pair(W)
    frame = pair.frame

    def expect(what: str, got, want) -> None:
        res.checked += 1
        if got != want:
            res.fail(f"{what}: got {got!r}, want {want!r}")

    expect("tabloids", [t.display for t in all_tabloids(frame)],
           ["{10,32;11}", "{11,31;10}", "{21,01;-10}"])
    d = W.parse_word("t1")
    expect("d in D_psi'", d in frame.col_reps, True)
    expect("tableau dJ", make_tableau(d, frame).display(), "{-10,32;21}")
    star = subsystem_from_simples(phi, [phi.parse_root("10"), phi.parse_root("21")])
    ctx = GarnirContext(pair, d, star)
    words = lambda gs: sorted(g.word_string() for g in gs)
    expect("W(dJ)", words(ctx.row_group),
           sorted(["e", "t1", "t2 t1 t2 t1 t2", "t2 t1 t2 t1 t2 t1"]))
    expect("W(dJ')", words(ctx.col_group), sorted(["e", "t1 t2 t1 t2 t1"]))
    expect("W(J*)", words(ctx.star_group),
           sorted(["e", "t1", "t1 t2 t1 t2 t1", "t2 t1 t2", "t1 t2 t1 t2", "t2 t1 t2 t1"]))
    expect("W(J*)W(dJ') = W(J*)", set(ctx.Y), set(ctx.star_group))
    expect("C", [g.word_string() for g in ctx.C], ["e", "t1", "t2 t1 t2"])
    report = garnir_report(ctx)
    expect("global rho", report["global_rho"], "t1")
    expect("G", report["garnir_element"], "e - t1 - t2 t1 t2")
    expect("annihilation", report["annihilation_zero"], True)
    expect("raw identity", report["raw_form"],
           "e(t1 J, t1 J') = t1 e(t1 J, t1 J') + (t2 t1 t2) e(t1 J, t1 J')")
    expect("final identity", report["reduced_form"], "e(t1 J, t1 J') = e(J,J') - e(t2 J, t2 J')")
    e_d = polytabloid(d, pair)
    expect("vector identity", e_d,
           polytabloid(W.identity, pair) - polytabloid(W.parse_word("t2"), pair))
    res.lines.append(report["raw_form"])
    res.lines.append(report["reduced_form"])
    return res


SUITES: dict[str, Callable[[str], SuiteResult]] = {
    "structure": structure_suite,
    "action": action_suite,
    "sign": sign_suite,
    "coset": coset_suite,
    "peel": peel_suite,
    "lemma": lemma_suite,
    "theorem": theorem_suite,
    "independence": independence_suite,
}


def run_suites(label: str, names: list[str] | None = None) -> list[SuiteResult]:
    names = names or list(SUITES) + ["example34"]
    out = []
    for name in names:
        if name == "example34":
            if label != "G2":
                continue
            out.append(example34_suite())
        else:
            out.append(SUITES[name](label))
        log.info(out[-1].summary())
    return out
