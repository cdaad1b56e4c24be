"""Line-oriented text format for broadcast networks (``*.bn`` files).

Example::

    network net3
    messages a
    states q0 qf
    initial q0
    final qf
    trans q0 !a q0
    trans q0 ?a qf

``#`` starts a comment. Sections may repeat and may appear in any order.
"""
from __future__ import annotations

import re

from .model import (RECEIVE, SEND, BroadcastNetwork, DanglingMessageRef,
                    DanglingStateRef, DuplicateName, EmptyInitials, ModelError,
                    validate_network)

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class NetworkSyntaxError(ModelError):
    pass


def _idents(words: list[str], lineno: int) -> list[str]:
    for w in words:
        if not IDENT.match(w):
            raise NetworkSyntaxError(f"bad identifier {w!r}", line=lineno)
    return words


def parse_network(src: str) -> BroadcastNetwork:
    name = ""
    messages: list[tuple[str, int]] = []
    states: list[tuple[str, int]] = []
    initials: list[tuple[str, int]] = []
    finals: list[tuple[str, int]] = []
    trans: list[tuple[str, str, str, str, int]] = []

    for lineno, line in enumerate(src.splitlines(), start=1):
        words = line.split("#", 1)[0].split()
        if not words:
            continue
        head, args = words[0], words[1:]
        if head == "network":
            if len(args) != 1:
                raise NetworkSyntaxError("expected 'network <name>'", line=lineno)
            name = _idents(args, lineno)[0]
        elif head in ("messages", "states", "initial"):
            if not args and head != "messages":
                raise NetworkSyntaxError(f"'{head}' needs at least one identifier", line=lineno)
            target = {"messages": messages, "states": states, "initial": initials}[head]
            target.extend((w, lineno) for w in _idents(args, lineno))
        elif head == "final":
            finals.extend((w, lineno) for w in _idents(args, lineno))
        elif head == "trans":
            if len(args) != 3 or args[1][:1] not in ("!", "?"):
                raise NetworkSyntaxError("expected 'trans <state> (!|?)<message> <state>'", line=lineno)
            src_state, op, dst_state = args
            _idents([src_state, op[1:], dst_state], lineno)
            trans.append((src_state, SEND if op[0] == "!" else RECEIVE, op[1:], dst_state, lineno))
        else:
            raise NetworkSyntaxError(f"unknown declaration {head!r}", line=lineno)

    # Reference checks happen here rather than in validate_network so that
    # errors carry the offending line.
    for kind, entries in (("message", messages), ("state", states)):
        seen = set()
        for w, ln in entries:
            if w in seen:
                raise DuplicateName(f"duplicate {kind} name {w!r}", line=ln)
            seen.add(w)
    state_names = {w for w, _ in states}
    message_names = {w for w, _ in messages}
    for w, ln in initials + finals:
        if w not in state_names:
            raise DanglingStateRef(f"undeclared state {w!r}", line=ln)
    for s, _, m, d, ln in trans:
        for w in (s, d):
            if w not in state_names:
                raise DanglingStateRef(f"undeclared state {w!r}", line=ln)
        if m not in message_names:
            raise DanglingMessageRef(f"undeclared message {m!r}", line=ln)
    if not initials:
        raise EmptyInitials("no 'initial' declaration")

    return validate_network(dict(
        name=name,
        messages=[w for w, _ in messages],
        states=[w for w, _ in states],
        initials=[w for w, _ in initials],
        finals=[w for w, _ in finals],
        transitions=[(s, k, m, d) for s, k, m, d, _ in trans],
    ))


def serialize_network(net: BroadcastNetwork) -> str:
    """Canonical text for ``net``; ``parse_network`` inverts it exactly."""
    lines = []
    if net.name:
        lines.append(f"network {net.name}")
    lines.append(" ".join(["messages", *net.messages]))
    lines.append(" ".join(["states", *net.states]))
    lines.append(" ".join(["initial", *(net.states[q] for q in sorted(net.initials))]))
    lines.append(" ".join(["final", *(net.states[q] for q in sorted(net.finals))]))
    lines.extend(f"trans {net.format_transition(t)}" for t in net.transitions)
    return "\n".join(lines) + "\n"


def load_network(path) -> BroadcastNetwork:
    with open(path, encoding="utf-8") as fh:
        return parse_network(fh.read())
