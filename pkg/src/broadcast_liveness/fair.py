"""Fair liveness: every client that moves infinitely often sees a final state
infinitely often.

The check compiles fairness away. Each client state ``q`` gets two copies,
``q__hat`` and ``q__tilde``. A client that moves lands in the hat copy, may
pass to the tilde copy only from a final state, and returns to the base copy
from the tilde copy. Both phase changes are sends of a fresh message nobody
receives. A cycle over base states in the instrumented network is then a
cycle of the original network in which every mover saw a final state.
"""
from __future__ import annotations

import time
from dataclasses import dataclass

from .coverability import reachable_states
from .liveness import Verdict, has_nontrivial_cycle
from .model import BroadcastNetwork, Transition, send, validate_network

BASE, HAT, TILDE = "base", "hat", "tilde"
FRESH_MESSAGE = "__n"


@dataclass(frozen=True)
class InstrumentedNetwork:
    net_f: BroadcastNetwork
    phase_of: tuple[str, ...]
    base_of: tuple[int, ...]

    def project(self, state: int) -> int:
        return self.base_of[state]


def instrument(net: BroadcastNetwork) -> InstrumentedNetwork:
    n = net.n_states
    hat = lambda q: n + q          # noqa: E731
    tilde = lambda q: 2 * n + q    # noqa: E731
    fresh = net.n_messages

    transitions: list[Transition] = []
    for t in net.transitions:
        q, action, q2 = t
        transitions += [Transition(q, action, hat(q2)),
                        Transition(hat(q), action, hat(q2)),
                        Transition(tilde(q), action, tilde(q2))]
    transitions += [send(hat(q), fresh, tilde(q)) for q in sorted(net.finals)]
    transitions += [send(tilde(q), fresh, q) for q in range(n)]

    net_f = validate_network(dict(
        name=f"{net.name}__fair" if net.name else "",
        messages=[*net.messages, FRESH_MESSAGE],
        states=[*net.states, *(f"{s}__hat" for s in net.states), *(f"{s}__tilde" for s in net.states)],
        initials=[tilde(q) for q in net.initials],
        finals=[q for q in net.finals],
        transitions=transitions,
    ))
    return InstrumentedNetwork(net_f, (BASE,) * n + (HAT,) * n + (TILDE,) * n, tuple(range(n)) * 3)


def check_fair_liveness(net: BroadcastNetwork, *, witness: bool = False) -> Verdict:
    """Decide whether some initialized run is fair (movers-infinitely-often see F infinitely often).

    A YES witness is a symbolic cycle of the instrumented network; its
    components are seeded with base-copy states.
    """
    t0 = time.perf_counter()
    inst = instrument(net)
    net_f = inst.net_f
    reach = reachable_states(net_f)
    seeds = tuple(sorted(q for q in reach if inst.phase_of[q] == BASE))
    t1 = time.perf_counter()
    stats = {"coverability": t1 - t0}
    if not seeds:
        stats.update(fixed_point=0.0, iterations=0)
        return Verdict(False, problem="fair", stats=stats)
    answer, trace = has_nontrivial_cycle(net_f, seeds)
    t2 = time.perf_counter()
    stats.update(fixed_point=t2 - t1, iterations=trace.rounds)
    verdict = Verdict(answer, problem="fair", trace=trace, seeds=seeds, stats=stats)
    if answer and witness:
        from .witness import extract_cycle_from_gfp
        verdict.witness = extract_cycle_from_gfp(net_f, trace)
        stats["witness"] = time.perf_counter() - t2
    return verdict
