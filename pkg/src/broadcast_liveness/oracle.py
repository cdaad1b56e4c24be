"""Explicit-state reference semantics for a fixed number of clients.

Deliberately naive: no symmetry or partial-order reduction. It serves as the
trusted side of differential tests, so a YES here at any client count must be
matched by the polynomial procedures.
"""
from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterator
from dataclasses import dataclass

import networkx as nx

from .model import BroadcastNetwork, CapExceeded, Configuration, Transition

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class StepChoice:
    message: int
    sender: int
    sender_transition: Transition
    receivers: tuple[tuple[int, Transition], ...]

    @property
    def participants(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.receivers) | {self.sender}


def step_choices(net: BroadcastNetwork, config: Configuration) -> Iterator[tuple[StepChoice, Configuration]]:
    """Every legal broadcast step from ``config`` with its successor."""
    k = len(config)
    for sender in range(k):
        for t in net.sends_from.get(config[sender], ()):
            a = t.message
            per_client = []
            for i in range(k):
                if i == sender:
                    per_client.append((None,))
                    continue
                opts = [r for r in net.receives_by_message.get(a, ()) if r.source == config[i]]
                per_client.append((None, *opts))
            for combo in itertools.product(*per_client):
                nxt = list(config)
                nxt[sender] = t.target
                receivers = []
                for i, r in enumerate(combo):
                    if r is not None:
                        nxt[i] = r.target
                        receivers.append((i, r))
                yield StepChoice(a, sender, t, tuple(receivers)), tuple(nxt)


def step_successors(net: BroadcastNetwork, config: Configuration) -> set[tuple[Configuration, frozenset[int]]]:
    """Distinct ``(successor, participants)`` pairs; client indices are 0-based."""
    return {(nxt, choice.participants) for choice, nxt in step_choices(net, config)}


def initial_configs(net: BroadcastNetwork, k: int) -> Iterator[Configuration]:
    return itertools.product(sorted(net.initials), repeat=k)


def _explore(net: BroadcastNetwork, k: int, cap: int) -> nx.DiGraph:
    if k < 1:
        raise ValueError("need at least one client")
    graph = nx.DiGraph()
    queue = deque()
    for c in initial_configs(net, k):
        graph.add_node(c)
        queue.append(c)
    while queue:
        c = queue.popleft()
        for nxt, _ in step_successors(net, c):
            if nxt not in graph:
                if graph.number_of_nodes() >= cap:
                    raise CapExceeded(f"more than {cap} configurations with {k} clients")
                graph.add_node(nxt)
                queue.append(nxt)
            graph.add_edge(c, nxt)
    return graph


def bounded_reach_configs(net: BroadcastNetwork, k: int, cap: int = DEFAULT_CAP) -> set[Configuration]:
    return set(_explore(net, k, cap).nodes)


def oracle_liveness(net: BroadcastNetwork, k: int, cap: int = DEFAULT_CAP) -> bool:
    """Is there a reachable configuration holding a final state that lies on a cycle?"""
    graph = _explore(net, k, cap)
    for scc in nx.strongly_connected_components(graph):
        if len(scc) == 1:
            (c,) = scc
            if not graph.has_edge(c, c):
                continue
        if any(set(c) & net.finals for c in scc):
            return True
    return False


def find_good_cycle(net: BroadcastNetwork, config: Configuration, cap: int = DEFAULT_CAP
                    ) -> list[tuple[StepChoice, Configuration]] | None:
    """Shortest cycle at ``config`` in which every moving client sees a final state.

    Searches triples (configuration, moved clients, clients seen in a final
    state) starting from ``config``.
    """
    def final_positions(c):
        return frozenset(i for i, q in enumerate(c) if q in net.finals)

    start = (config, frozenset(), final_positions(config))
    parent: dict = {start: None}
    queue = deque([start])
    while queue:
        node = queue.popleft()
        c, moved, seen = node
        for choice, nxt in step_choices(net, c):
            succ = (nxt, moved | choice.participants, seen | final_positions(nxt))
            if nxt == config and succ[1] <= succ[2]:
                path = [(choice, nxt)]
                while parent[node] is not None:
                    node, step = parent[node]
                    path.append(step)
                return path[::-1]
            if succ not in parent:
                if len(parent) >= cap:
                    raise CapExceeded(f"more than {cap} search nodes")
                parent[succ] = (node, (choice, nxt))
                queue.append(succ)
    return None


def oracle_fair(net: BroadcastNetwork, k: int, cap: int = DEFAULT_CAP) -> bool:
    """Is there a reachable configuration admitting a good cycle?"""
    graph = _explore(net, k, cap)
    on_cycle = set()
    for scc in nx.strongly_connected_components(graph):
        if len(scc) > 1 or any(graph.has_edge(c, c) for c in scc):
            on_cycle |= scc
    return any(find_good_cycle(net, c, cap) is not None for c in sorted(on_cycle))


def find_cycle_at(net: BroadcastNetwork, config: Configuration, cap: int = DEFAULT_CAP
                  ) -> list[tuple[StepChoice, Configuration]] | None:
    """Shortest non-empty cycle returning to ``config``."""
    parent: dict = {config: None}
    queue = deque([config])
    while queue:
        c = queue.popleft()
        for choice, nxt in step_choices(net, c):
            if nxt == config:
                path = [(choice, nxt)]
                node = c
                while parent[node] is not None:
                    node, step = parent[node]
                    path.append(step)
                return path[::-1]
            if nxt not in parent:
                if len(parent) >= cap:
                    raise CapExceeded(f"more than {cap} configurations")
                parent[nxt] = (c, (choice, nxt))
                queue.append(nxt)
    return None
