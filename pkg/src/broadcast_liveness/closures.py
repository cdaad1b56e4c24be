"""Constrained post/pre closures over tuples of state sets.

A tuple ``(S_1, ..., S_m)`` is stored as an ``(m, |Q|)`` boolean matrix for the
heavy lifting; the public functions take and return tuples of frozensets.

Under a constraint ``C = (C_1, ..., C_m)`` the forward closure of seeds ``X``
is the least ``R`` containing ``X`` such that, for every component ``i``,

* ``s`` in ``R_i`` and a send ``s !a s'`` inside ``C_i`` puts ``s'`` in ``R_i``;
* ``s`` in ``R_i`` and a receive ``s ?a s'`` inside ``C_i`` puts ``s'`` in
  ``R_i`` provided some component ``R_l`` holds both ends of a send of ``a``.

The backward closure is the same saturation with every transition reversed.
Both are computed as a reachability per component, re-run whenever the set
of messages with a witnessing send grows.
"""
from __future__ import annotations

from collections.abc import Sequence

import numpy as np
from scipy import sparse

from .model import BroadcastNetwork

SetTuple = tuple[frozenset[int], ...]

FORWARD = "post"
BACKWARD = "pre"


class ArityMismatch(ValueError):
    pass


class SeedOutsideConstraint(ValueError):
    pass


def full_tuple(net: BroadcastNetwork, m: int) -> SetTuple:
    return (frozenset(range(net.n_states)),) * m


def singletons(seeds: Sequence[int]) -> SetTuple:
    return tuple(frozenset([s]) for s in seeds)


def to_matrix(sets: Sequence[frozenset[int]], n_states: int) -> np.ndarray:
    mat = np.zeros((len(sets), n_states), dtype=bool)
    for i, comp in enumerate(sets):
        if comp:
            mat[i, list(comp)] = True
    return mat


def from_matrix(mat: np.ndarray) -> SetTuple:
    return tuple(frozenset(np.flatnonzero(row).tolist()) for row in mat)


def leq(left: Sequence[frozenset[int]], right: Sequence[frozenset[int]]) -> bool:
    """Componentwise inclusion."""
    return len(left) == len(right) and all(a <= b for a, b in zip(left, right))


def _available(net: BroadcastNetwork, reached: np.ndarray) -> np.ndarray:
    arr = net.arrays
    avail = np.zeros(net.n_messages, dtype=bool)
    if arr["send_src"].size and reached.size:
        witnessed = (reached[:, arr["send_src"]] & reached[:, arr["send_dst"]]).any(axis=0)
        avail[arr["send_msg"][witnessed]] = True
    return avail


def _step_matrix(net: BroadcastNetwork, avail: np.ndarray, direction: str) -> sparse.csr_matrix:
    """Sparse matrix mapping a row of source states to one-step successors.

    Entry ``[dst, src]`` is set, so ``M @ frontier.T`` propagates.
    """
    arr = net.arrays
    keep = avail[arr["recv_msg"]]
    src = np.concatenate([arr["send_src"], arr["recv_src"][keep]])
    dst = np.concatenate([arr["send_dst"], arr["recv_dst"][keep]])
    if direction == BACKWARD:
        src, dst = dst, src
    n = net.n_states
    data = np.ones(src.size, dtype=np.int32)
    return sparse.csr_matrix((data, (dst, src)), shape=(n, n))


def saturate(net: BroadcastNetwork, constraint: np.ndarray, seeds: np.ndarray,
             direction: str = FORWARD) -> tuple[np.ndarray, int]:
    """Matrix-level closure. Returns ``(result, rounds)``.

    A round saturates every component for the current set of witnessed
    messages; the loop ends after the first round that witnesses no new
    message. Every round but the last adds at least one state.
    """
    if direction not in (FORWARD, BACKWARD):
        raise ValueError(f"unknown direction {direction!r}")
    reached = seeds.copy()
    avail = _available(net, reached)
    rounds = 0
    while True:
        rounds += 1
        step = _step_matrix(net, avail, direction)
        frontier = reached
        while frontier.any():
            nxt = (step @ frontier.T.astype(np.int32)).T > 0
            frontier = nxt & constraint & ~reached
            reached = reached | frontier
        new_avail = _available(net, reached)
        if (new_avail == avail).all():
            return reached, rounds
        avail = new_avail


def _check(net: BroadcastNetwork, constraint, seeds) -> tuple[np.ndarray, np.ndarray]:
    if len(constraint) != len(seeds):
        raise ArityMismatch(f"constraint has arity {len(constraint)}, seeds {len(seeds)}")
    for i, (x, c) in enumerate(zip(seeds, constraint)):
        if not x <= c:
            raise SeedOutsideConstraint(f"component {i}: seeds {sorted(x - c)} outside constraint")
    n = net.n_states
    return to_matrix(constraint, n), to_matrix(seeds, n)


def post_closure(net: BroadcastNetwork, constraint: Sequence[frozenset[int]],
                 seeds: Sequence[frozenset[int]]) -> SetTuple:
    c, x = _check(net, constraint, seeds)
    return from_matrix(saturate(net, c, x, FORWARD)[0])


def pre_closure(net: BroadcastNetwork, constraint: Sequence[frozenset[int]],
                seeds: Sequence[frozenset[int]]) -> SetTuple:
    c, x = _check(net, constraint, seeds)
    return from_matrix(saturate(net, c, x, BACKWARD)[0])
