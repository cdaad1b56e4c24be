"""Coverable client states.

A state is coverable when some client can occupy it in some run with some
number of clients. Because the number of clients is unbounded and receivers
are optional, the coverable set is the least set containing the initial states
and closed under

* sends: ``q`` coverable and ``q !a q'`` gives ``q'``;
* receives: ``q`` coverable, ``q ?a q'``, and some coverable ``p`` has a
  send ``p !a p''`` gives ``q'``.
"""
from __future__ import annotations

from collections import deque

from .model import BroadcastNetwork


def reachable_states(net: BroadcastNetwork) -> frozenset[int]:
    reached = set(net.initials)
    sendable: set[int] = set()          # messages some reached state can send
    waiting: dict[int, list[int]] = {}  # message -> receive targets blocked on it
    work = deque(sorted(net.initials))
    outgoing: dict[int, list] = {}
    for t in net.transitions:
        outgoing.setdefault(t.source, []).append(t)

    def add(q: int) -> None:
        if q not in reached:
            reached.add(q)
            work.append(q)

    while work:
        q = work.popleft()
        for t in outgoing.get(q, ()):
            a = t.message
            if t.is_send:
                add(t.target)
                if a not in sendable:
                    sendable.add(a)
                    for r in waiting.pop(a, ()):
                        add(r)
            elif a in sendable:
                add(t.target)
            else:
                waiting.setdefault(a, []).append(t.target)
    return frozenset(reached)
