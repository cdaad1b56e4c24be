"""Seeded random networks for tests, demos and benchmarks."""
from __future__ import annotations

import random

from .model import RECEIVE, SEND, BroadcastNetwork, validate_network


def random_network(n_states: int, n_messages: int, n_transitions: int, seed: int | None = None,
                   *, rng: random.Random | None = None, random_marks: bool = False,
                   name: str = "") -> BroadcastNetwork:
    """Random client automaton with states ``q0..q{n-1}`` and messages ``m0..``.

    ``q0`` is initial and the last state final unless ``random_marks`` is set,
    in which case initials (non-empty) and finals (possibly empty) are drawn
    at random. Duplicate draws are dropped, so fewer transitions than asked
    may come out. The first transition is always a send, so any network with
    transitions has at least one.
    """
    if n_states < 1 or n_messages < 1 or n_transitions < 0:
        raise ValueError("need n_states >= 1, n_messages >= 1, n_transitions >= 0")
    rng = rng or random.Random(seed)
    states = [f"q{i}" for i in range(n_states)]
    messages = [f"m{i}" for i in range(n_messages)]
    transitions = []
    for k in range(n_transitions):
        kind = SEND if k == 0 or rng.random() < 0.5 else RECEIVE
        transitions.append((rng.randrange(n_states), kind, rng.randrange(n_messages),
                            rng.randrange(n_states)))
    if random_marks:
        initials = [q for q in range(n_states) if rng.random() < 0.4] or [rng.randrange(n_states)]
        finals = [q for q in range(n_states) if rng.random() < 0.4]
    else:
        initials, finals = [0], [n_states - 1]
    return validate_network(dict(name=name, messages=messages, states=states, initials=initials,
                                 finals=finals, transitions=transitions))


def desk_corpus(count: int = 500, seed: int = 2024, max_states: int = 3, max_messages: int = 2,
                max_transitions: int = 6) -> list[BroadcastNetwork]:
    """Small random networks for exhaustive differential checks."""
    rng = random.Random(seed)
    nets = []
    for _ in range(count):
        n = rng.randint(1, max_states)
        d = rng.randint(1, max_messages)
        t = rng.randint(0, max_transitions)
        nets.append(random_network(n, d, t, rng=rng, random_marks=True))
    return nets
