"""Polynomial-time liveness check.

Some client can visit a final state infinitely often iff a final state is
coverable and some configuration over the coverable states can return to
itself after at least one step. The second condition is decided by a
greatest fixed point over tuples of state sets, one component per seed:

    C = post_C(seeds) & pre_C(seeds)

iterated downwards from the full tuple.
"""
from __future__ import annotations

import time
from collections.abc import Sequence
from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .closures import BACKWARD, FORWARD, SetTuple, from_matrix, saturate
from .coverability import reachable_states
from .model import BroadcastNetwork


@dataclass
class FixedPointTrace:
    """Kleene iterates of the fixed-point computation, largest first."""

    seeds: tuple[int, ...]
    iterates: list[np.ndarray]
    closure_rounds: list[int] = field(default_factory=list)

    @property
    def rounds(self) -> int:
        return len(self.iterates)

    @property
    def fixed_point(self) -> SetTuple:
        return from_matrix(self.iterates[-1])

    def iterate(self, t: int) -> SetTuple:
        return from_matrix(self.iterates[t])


@dataclass
class Verdict:
    answer: bool
    problem: str = "liveness"
    witness: Any = None
    trace: FixedPointTrace | None = None
    seeds: tuple[int, ...] = ()
    stats: dict[str, float] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.answer

    @property
    def label(self) -> str:
        return "YES" if self.answer else "NO"


def _seed_matrix(n_states: int, seeds: Sequence[int]) -> np.ndarray:
    mat = np.zeros((len(seeds), n_states), dtype=bool)
    mat[np.arange(len(seeds)), list(seeds)] = True
    return mat


def kleene_step(net: BroadcastNetwork, constraint: np.ndarray, sigma: np.ndarray) -> tuple[np.ndarray, int]:
    post, r1 = saturate(net, constraint, sigma, FORWARD)
    pre, r2 = saturate(net, constraint, sigma, BACKWARD)
    return post & pre, max(r1, r2)


def gfp_constraint(net: BroadcastNetwork, seeds: Sequence[int]) -> FixedPointTrace:
    seeds = tuple(int(s) for s in seeds)
    if not seeds:
        raise ValueError("seeds must be non-empty")
    if len(set(seeds)) != len(seeds):
        raise ValueError(f"seeds must be pairwise distinct: {seeds}")
    sigma = _seed_matrix(net.n_states, seeds)
    trace = FixedPointTrace(seeds, [])
    current = np.ones_like(sigma)
    while True:
        nxt, rounds = kleene_step(net, current, sigma)
        trace.closure_rounds.append(rounds)
        trace.iterates.append(nxt)
        if len(trace.iterates) > 1 and (nxt == current).all():
            return trace
        current = nxt


def internal_send(net: BroadcastNetwork, apex: np.ndarray):
    """First ``(component, send)`` whose both ends lie in one component, or None."""
    arr = net.arrays
    if not arr["send_src"].size:
        return None
    inside = apex[:, arr["send_src"]] & apex[:, arr["send_dst"]]
    hits = np.argwhere(inside)
    if not hits.size:
        return None
    comp, k = hits[0]
    return int(comp), net.sends[int(k)]


def has_nontrivial_cycle(net: BroadcastNetwork, seeds: Sequence[int]) -> tuple[bool, FixedPointTrace]:
    trace = gfp_constraint(net, seeds)
    return internal_send(net, trace.iterates[-1]) is not None, trace


def check_liveness(net: BroadcastNetwork, *, witness: bool = False) -> Verdict:
    """Decide whether some initialized run visits a final state infinitely often.

    With ``witness=True`` a YES verdict carries a symbolic cycle
    (:class:`~broadcast_liveness.witness.SymbolicWitness`).
    """
    t0 = time.perf_counter()
    reach = reachable_states(net)
    t1 = time.perf_counter()
    stats = {"coverability": t1 - t0}
    if not reach & net.finals:
        stats.update(fixed_point=0.0, iterations=0)
        return Verdict(False, seeds=tuple(sorted(reach)), stats=stats)
    seeds = tuple(sorted(reach))
    answer, trace = has_nontrivial_cycle(net, seeds)
    t2 = time.perf_counter()
    stats.update(fixed_point=t2 - t1, iterations=trace.rounds)
    verdict = Verdict(answer, trace=trace, seeds=seeds, stats=stats)
    if answer and witness:
        from .witness import extract_cycle_from_gfp
        verdict.witness = extract_cycle_from_gfp(net, trace)
        stats["witness"] = time.perf_counter() - t2
    return verdict
