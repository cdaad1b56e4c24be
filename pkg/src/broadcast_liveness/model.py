"""Immutable data model for broadcast networks.

A broadcast network is a message alphabet plus a single client automaton whose
transitions either send (``!a``) or receive (``?a``) a message. Any number of
identical clients run the automaton. States and messages are interned to dense
integer ids when a network is validated; everything downstream works on ids.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, NamedTuple

import numpy as np

SEND = "send"
RECEIVE = "receive"

_KIND_SIGIL = {SEND: "!", RECEIVE: "?"}


class ModelError(ValueError):
    """Base class for invalid network descriptions.

    ``line`` is filled in by the text parser when the error can be attributed
    to a source line.
    """

    def __init__(self, message: str, *, line: int | None = None):
        self.line = line
        super().__init__(message if line is None else f"line {line}: {message}")


class EmptyInitials(ModelError):
    pass


class DanglingStateRef(ModelError):
    pass


class DanglingMessageRef(ModelError):
    pass


class DuplicateName(ModelError):
    pass


class CapExceeded(RuntimeError):
    """An explicit-state search went past its size budget."""


class Action(NamedTuple):
    kind: str
    message: int

    @property
    def is_send(self) -> bool:
        return self.kind == SEND


class Transition(NamedTuple):
    source: int
    action: Action
    target: int

    @property
    def is_send(self) -> bool:
        return self.action.kind == SEND

    @property
    def message(self) -> int:
        return self.action.message


def send(source: int, message: int, target: int) -> Transition:
    return Transition(source, Action(SEND, message), target)


def receive(source: int, message: int, target: int) -> Transition:
    return Transition(source, Action(RECEIVE, message), target)


Configuration = tuple[int, ...]


@dataclass(frozen=True)
class BroadcastNetwork:
    """A validated broadcast network.

    Construct through :func:`validate_network` (or the text parser); the
    constructor itself performs no checks.
    """

    messages: tuple[str, ...]
    states: tuple[str, ...]
    initials: frozenset[int]
    finals: frozenset[int]
    transitions: tuple[Transition, ...]
    name: str = field(default="", compare=True)

    @property
    def n_states(self) -> int:
        return len(self.states)

    @property
    def n_messages(self) -> int:
        return len(self.messages)

    @cached_property
    def state_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.states)}

    @cached_property
    def message_index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.messages)}

    @cached_property
    def sends(self) -> tuple[Transition, ...]:
        return tuple(t for t in self.transitions if t.is_send)

    @cached_property
    def receives(self) -> tuple[Transition, ...]:
        return tuple(t for t in self.transitions if not t.is_send)

    @cached_property
    def receives_by_message(self) -> dict[int, tuple[Transition, ...]]:
        out: dict[int, list[Transition]] = {}
        for t in self.receives:
            out.setdefault(t.message, []).append(t)
        return {a: tuple(ts) for a, ts in out.items()}

    @cached_property
    def sends_from(self) -> dict[int, tuple[Transition, ...]]:
        out: dict[int, list[Transition]] = {}
        for t in self.sends:
            out.setdefault(t.source, []).append(t)
        return {q: tuple(ts) for q, ts in out.items()}

    @cached_property
    def arrays(self) -> dict[str, np.ndarray]:
        """Transition columns as int arrays, split into sends and receives."""
        def cols(ts):
            return (np.array([t.source for t in ts], dtype=np.intp),
                    np.array([t.message for t in ts], dtype=np.intp),
                    np.array([t.target for t in ts], dtype=np.intp))
        s_src, s_msg, s_dst = cols(self.sends)
        r_src, r_msg, r_dst = cols(self.receives)
        return dict(send_src=s_src, send_msg=s_msg, send_dst=s_dst,
                    recv_src=r_src, recv_msg=r_msg, recv_dst=r_dst)

    def format_transition(self, t: Transition) -> str:
        sigil = _KIND_SIGIL[t.action.kind]
        return f"{self.states[t.source]} {sigil}{self.messages[t.message]} {self.states[t.target]}"

    def with_finals(self, finals: Iterable[int]) -> BroadcastNetwork:
        return validate_network(BroadcastNetwork(
            self.messages, self.states, self.initials, frozenset(finals),
            self.transitions, self.name))


def _check_names(kind: str, names: Iterable[str]) -> tuple[str, ...]:
    seen: set[str] = set()
    out = []
    for n in names:
        if not isinstance(n, str) or not n:
            raise ModelError(f"{kind} names must be non-empty strings, got {n!r}")
        if n in seen:
            raise DuplicateName(f"duplicate {kind} name {n!r}")
        seen.add(n)
        out.append(n)
    return tuple(out)


def _resolve(ref: Any, index: Mapping[str, int], size: int, exc: type[ModelError], kind: str) -> int:
    if isinstance(ref, str):
        if ref not in index:
            raise exc(f"undeclared {kind} {ref!r}")
        return index[ref]
    if isinstance(ref, (int, np.integer)) and not isinstance(ref, bool) and 0 <= ref < size:
        return int(ref)
    raise exc(f"{kind} reference {ref!r} out of range")


def _parse_action(raw: Any) -> tuple[str, Any]:
    if isinstance(raw, Action):
        return raw.kind, raw.message
    if isinstance(raw, str) and raw[:1] in "!?":
        return (SEND if raw[0] == "!" else RECEIVE), raw[1:]
    if isinstance(raw, (tuple, list)) and len(raw) == 2 and raw[0] in (SEND, RECEIVE):
        return raw[0], raw[1]
    raise ModelError(f"cannot read action {raw!r}")


def validate_network(raw: BroadcastNetwork | Mapping[str, Any]) -> BroadcastNetwork:
    """Check and intern a network description.

    ``raw`` is either a :class:`BroadcastNetwork` or a mapping with keys
    ``messages``, ``states``, ``initials``, ``finals`` (names or ids) and
    ``transitions``. A transition is a :class:`Transition`, a triple
    ``(src, "!a", dst)`` or a quadruple ``(src, kind, msg, dst)``.
    Duplicate transitions are dropped, keeping the first occurrence.
    """
    if isinstance(raw, BroadcastNetwork):
        raw = dict(messages=raw.messages, states=raw.states, initials=raw.initials,
                   finals=raw.finals, transitions=raw.transitions, name=raw.name)
    messages = _check_names("message", raw.get("messages", ()))
    states = _check_names("state", raw.get("states", ()))
    s_index = {n: i for i, n in enumerate(states)}
    m_index = {n: i for i, n in enumerate(messages)}

    def state(ref):
        return _resolve(ref, s_index, len(states), DanglingStateRef, "state")

    initials = frozenset(state(r) for r in raw.get("initials", ()))
    finals = frozenset(state(r) for r in raw.get("finals", ()))
    if not initials:
        raise EmptyInitials("network has no initial state")

    transitions: list[Transition] = []
    seen: set[Transition] = set()
    for t in raw.get("transitions", ()):
        if isinstance(t, Transition):
            src, (kind, msg), dst = t
        elif len(t) == 3:
            src, act, dst = t
            kind, msg = _parse_action(act)
        elif len(t) == 4:
            src, kind, msg, dst = t
            kind = {"!": SEND, "?": RECEIVE}.get(kind, kind)
        else:
            raise ModelError(f"cannot read transition {t!r}")
        if kind not in (SEND, RECEIVE):
            raise ModelError(f"unknown action kind {kind!r}")
        tr = Transition(state(src),
                        Action(kind, _resolve(msg, m_index, len(messages), DanglingMessageRef, "message")),
                        state(dst))
        if tr not in seen:
            seen.add(tr)
            transitions.append(tr)

    return BroadcastNetwork(messages, states, initials, finals, tuple(transitions),
                            str(raw.get("name", "") or ""))


def state_set_names(net: BroadcastNetwork, states: Iterable[int]) -> list[str]:
    return [net.states[q] for q in sorted(states)]


# Reference networks used across the test-suite and demos.

def net1() -> BroadcastNetwork:
    return validate_network(dict(
        name="net1", messages=["a", "b"], states=["q0", "qf"], initials=["q0"], finals=["qf"],
        transitions=[("q0", "!a", "qf"), ("qf", "!b", "qf")]))


def net2() -> BroadcastNetwork:
    return validate_network(dict(
        name="net2", messages=["a"], states=["q0", "qf"], initials=["q0"], finals=["qf"],
        transitions=[("q0", "!a", "qf")]))


def net3() -> BroadcastNetwork:
    return validate_network(dict(
        name="net3", messages=["a"], states=["q0", "qf"], initials=["q0"], finals=["qf"],
        transitions=[("q0", "!a", "q0"), ("q0", "?a", "qf")]))


def net4() -> BroadcastNetwork:
    return validate_network(dict(
        name="net4", messages=["a"], states=["q0", "q1"], initials=["q0"], finals=["q1"],
        transitions=[("q0", "!a", "q1"), ("q1", "!a", "q0")]))


FIXTURES = {"net1": net1, "net2": net2, "net3": net3, "net4": net4}
