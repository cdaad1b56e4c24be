"""Executable version of the set-tuple graph and the witnesses built on it.

Vertices are tuples ``(S_1, ..., S_m)`` of state sets. An edge mimics one
broadcast step: a sender in some component ``j`` takes ``s !a s'``, and every
component may gain receive targets (``gens``) and lose states whose clients
all received (``kills``). Edges are carried as explicit
:class:`EdgeCertificate` objects so that a third party can re-check them.

This module provides

* the edge checker :func:`is_edge` and an exhaustive cycle search
  :func:`find_cycle_explicit` for small networks;
* :func:`normalize_path`, rewriting any path into grow-then-shrink form;
* :func:`extract_cycle_from_gfp`, which reads a cycle off the fixed point
  computed by :mod:`broadcast_liveness.liveness`;
* :func:`concretize` and :func:`validate_computation`, which turn a symbolic
  cycle into a replayable run of a finite number of clients.
"""
from __future__ import annotations

import itertools
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field, replace
from typing import Any

from .closures import SetTuple, leq, singletons
from .liveness import FixedPointTrace, internal_send
from .model import (BroadcastNetwork, CapExceeded, Configuration, Transition,
                    receive, send)

EMPTY: frozenset[int] = frozenset()


class EdgeRejected(ValueError):
    condition = 0

    def __init__(self, message: str, component: int | None = None):
        self.component = component
        super().__init__(f"condition ({self.condition}) violated: {message}")


class RejectCondition1(EdgeRejected):
    condition = 1


class RejectCondition2(EdgeRejected):
    condition = 2


class RejectCondition3(EdgeRejected):
    condition = 3


class InvalidPath(ValueError):
    pass


class InvalidWitness(ValueError):
    pass


class TrivialFixedPoint(ValueError):
    pass


@dataclass(frozen=True)
class EdgeCertificate:
    message: int
    sender_component: int
    sender_from: int
    sender_to: int
    drop_sender_source: bool
    gens: tuple[frozenset[int], ...]
    kills: tuple[frozenset[int], ...]

    @property
    def arity(self) -> int:
        return len(self.gens)

    @property
    def sender_transition(self) -> Transition:
        return send(self.sender_from, self.message, self.sender_to)

    @classmethod
    def plain(cls, m: int, component: int, t: Transition, *, drop: bool = False,
              gens: dict[int, frozenset[int]] | None = None,
              kills: dict[int, frozenset[int]] | None = None) -> EdgeCertificate:
        gens, kills = gens or {}, kills or {}
        return cls(t.message, component, t.source, t.target, drop,
                   tuple(frozenset(gens.get(i, EMPTY)) for i in range(m)),
                   tuple(frozenset(kills.get(i, EMPTY)) for i in range(m)))


@dataclass
class SymbolicWitness:
    """A cycle through the singleton tuple in grow-then-shrink form.

    ``increasing`` ends with a self-loop at the apex, so the cycle always has
    at least one edge.
    """

    seeds: tuple[int, ...]
    increasing: list[EdgeCertificate]
    decreasing: list[EdgeCertificate]
    apex: SetTuple

    @property
    def path(self) -> list[EdgeCertificate]:
        return self.increasing + self.decreasing

    @property
    def length(self) -> int:
        return len(self.increasing) + len(self.decreasing)


@dataclass(frozen=True)
class Step:
    message: int
    sender: int
    sender_transition: Transition
    receivers: dict[int, Transition] = field(default_factory=dict)

    @property
    def participants(self) -> frozenset[int]:
        return frozenset(self.receivers) | {self.sender}


@dataclass
class ConcreteComputation:
    start: Configuration
    steps: list[Step]

    @property
    def n_clients(self) -> int:
        return len(self.start)


# -- the edge relation ------------------------------------------------------

def post_receives(net: BroadcastNetwork, message: int, states) -> frozenset[int]:
    return frozenset(t.target for t in net.receives_by_message.get(message, ())
                     if t.source in states)


def enabled_receives(net: BroadcastNetwork, message: int, states) -> frozenset[int]:
    return frozenset(t.source for t in net.receives_by_message.get(message, ())
                     if t.source in states)


def is_edge(net: BroadcastNetwork, vertex: Sequence[frozenset[int]], cert: EdgeCertificate) -> SetTuple:
    """Check ``cert`` against ``vertex`` and return the successor vertex."""
    m = len(vertex)
    if cert.arity != m or len(cert.kills) != m:
        raise ValueError(f"certificate arity {cert.arity} does not match vertex arity {m}")
    j = cert.sender_component
    if not 0 <= j < m:
        raise RejectCondition1(f"sender component {j} out of range")
    if cert.sender_transition not in net.sends:
        raise RejectCondition1(f"{cert.sender_transition} is not a send transition", j)
    if cert.sender_from not in vertex[j]:
        raise RejectCondition1(f"sender source {cert.sender_from} not in component {j}", j)
    a = cert.message
    out = []
    for i, (S, gen, kill) in enumerate(zip(vertex, cert.gens, cert.kills)):
        if not gen <= post_receives(net, a, S):
            raise RejectCondition2(f"gens {sorted(gen)} not receive-successors in component {i}", i)
        if not kill <= enabled_receives(net, a, S):
            raise RejectCondition2(f"kills {sorted(kill)} cannot receive in component {i}", i)
        for q in kill:
            if not post_receives(net, a, {q}) & gen:
                raise RejectCondition3(f"killed state {q} has no target among gens in component {i}", i)
        if i == j:
            base = S - {cert.sender_from} if cert.drop_sender_source else S
            out.append(frozenset((base - kill) | gen | {cert.sender_to}))
        else:
            out.append(frozenset((S - kill) | gen))
    return tuple(out)


def replay(net: BroadcastNetwork, start: Sequence[frozenset[int]],
           path: Sequence[EdgeCertificate]) -> list[SetTuple]:
    vertices = [tuple(frozenset(s) for s in start)]
    for cert in path:
        vertices.append(is_edge(net, vertices[-1], cert))
    return vertices


def _subsets(items: frozenset[int]) -> Iterator[frozenset[int]]:
    ordered = sorted(items)
    for r in range(len(ordered) + 1):
        for combo in itertools.combinations(ordered, r):
            yield frozenset(combo)


def _component_options(net, S, a, base, extra, cache) -> dict[frozenset[int], tuple]:
    """Distinct successor sets of one component, each with one (gen, kill)."""
    key = (S, a, base, extra)
    if key in cache:
        return cache[key]
    post = post_receives(net, a, S)
    enabled = enabled_receives(net, a, S)
    targets = {q: post_receives(net, a, {q}) for q in enabled}
    options: dict[frozenset[int], tuple] = {}
    for gen in _subsets(post):
        for kill in _subsets(enabled):
            if all(targets[q] & gen for q in kill):
                options.setdefault(frozenset((base - kill) | gen | extra), (gen, kill))
    cache[key] = options
    return options


def successors(net: BroadcastNetwork, vertex: SetTuple, cache: dict | None = None
               ) -> Iterator[tuple[EdgeCertificate, SetTuple]]:
    """All distinct successor vertices, each with one certificate."""
    cache = {} if cache is None else cache
    seen: set[SetTuple] = set()
    for j, S_j in enumerate(vertex):
        for t in net.sends:
            if t.source not in S_j:
                continue
            a = t.message
            for drop in (False, True):
                opts = []
                for i, S in enumerate(vertex):
                    if i == j:
                        base = S - {t.source} if drop else S
                        opts.append(_component_options(net, S, a, base, frozenset([t.target]), cache))
                    else:
                        opts.append(_component_options(net, S, a, S, EMPTY, cache))
                for combo in itertools.product(*(o.items() for o in opts)):
                    succ = tuple(res for res, _ in combo)
                    if succ in seen:
                        continue
                    seen.add(succ)
                    cert = EdgeCertificate(a, j, t.source, t.target, drop,
                                           tuple(g for _, (g, _k) in combo),
                                           tuple(k for _, (_g, k) in combo))
                    yield cert, succ


def find_cycle_explicit(net: BroadcastNetwork, seeds: Sequence[int], *, max_states: int = 6,
                        max_components: int = 4, max_nodes: int = 1 << 20
                        ) -> list[EdgeCertificate] | None:
    """Breadth-first search for a cycle through the singleton tuple of ``seeds``.

    Exhaustive over the reachable part of the graph, hence only for small
    networks; raises :class:`CapExceeded` outside the caps.
    """
    if net.n_states > max_states or len(seeds) > max_components:
        raise CapExceeded(f"|Q|={net.n_states}, m={len(seeds)} beyond caps "
                          f"({max_states}, {max_components})")
    sigma = singletons(seeds)
    parent: dict[SetTuple, tuple[SetTuple, EdgeCertificate] | None] = {sigma: None}
    queue = deque([sigma])
    cache: dict = {}
    while queue:
        v = queue.popleft()
        for cert, w in successors(net, v, cache):
            if w == sigma:
                path = [cert]
                while parent[v] is not None:
                    v, c = parent[v]
                    path.append(c)
                return path[::-1]
            if w not in parent:
                if len(parent) >= max_nodes:
                    raise CapExceeded(f"more than {max_nodes} vertices explored")
                parent[w] = (v, cert)
                queue.append(w)
    return None


# -- normal form ------------------------------------------------------------

def is_normal_form(vertices: Sequence[SetTuple]) -> bool:
    k = 0
    while k + 1 < len(vertices) and leq(vertices[k], vertices[k + 1]):
        k += 1
    return all(leq(vertices[i + 1], vertices[i]) for i in range(k, len(vertices) - 1))


def normalize_path(net: BroadcastNetwork, path: Sequence[EdgeCertificate],
                   start: Sequence[frozenset[int]]) -> list[EdgeCertificate]:
    """Rewrite ``path`` into a grow-then-shrink path with the same endpoints.

    The growing part replays every edge with kills switched off. The
    shrinking part then removes the surplus, batching states by the position
    of their last occurrence on the original path and deleting the earliest
    batch first, each batch through the edge that originally deleted it.
    """
    try:
        vertices = replay(net, start, path)
    except EdgeRejected as exc:
        raise InvalidPath(str(exc)) from exc
    m = len(vertices[0])
    grown = [replace(c, drop_sender_source=False, kills=(EMPTY,) * m) for c in path]
    top = replay(net, start, grown)[-1]
    end = vertices[-1]

    batches: dict[int, list[tuple[int, int]]] = {}
    for i in range(m):
        for x in top[i] - end[i]:
            last = max(k for k, v in enumerate(vertices) if x in v[i])
            batches.setdefault(last, []).append((x, i))

    shrink = []
    current = top
    for k in sorted(batches):
        cert = path[k]
        batch = batches[k]
        kills = [set() for _ in range(m)]
        drop = False
        for x, i in batch:
            if x in cert.kills[i]:
                kills[i].add(x)
            elif i == cert.sender_component and x == cert.sender_from and cert.drop_sender_source:
                drop = True
            else:
                raise InvalidPath(f"state {x} of component {i} vanished without a cause at edge {k}")
        if cert.drop_sender_source and (cert.sender_from, cert.sender_component) in batch:
            drop = True
        # Gens of the original edge are still present here, so nothing is added.
        new = replace(cert, drop_sender_source=drop, kills=tuple(frozenset(s) for s in kills))
        current = is_edge(net, current, new)
        shrink.append(new)
    if current != end:
        raise InvalidPath("normalized path does not end where the input ends")
    return grown + shrink


# -- witnesses from the fixed point -----------------------------------------

def _traced_closure(net: BroadcastNetwork, constraint: SetTuple, seeds: SetTuple, backward: bool):
    """Closure with provenance: list of ``(component, state, certificate-maker)``."""
    m = len(seeds)
    reached = [set(s) for s in seeds]
    order: list[tuple[int, int, tuple]] = []
    witness_send: dict[int, tuple[int, Transition]] = {}

    def refresh_witnesses():
        for t in net.sends:
            if t.message in witness_send:
                continue
            for ell in range(m):
                if t.source in reached[ell] and t.target in reached[ell]:
                    witness_send[t.message] = (ell, t)
                    break

    changed = True
    while changed:
        changed = False
        for i in range(m):
            C, R = constraint[i], reached[i]
            grew = True
            while grew:
                grew = False
                for t in net.sends:
                    if t.source in C and t.target in C:
                        have, new = (t.target, t.source) if backward else (t.source, t.target)
                        if have in R and new not in R:
                            R.add(new)
                            order.append((i, new, ("send", t)))
                            grew = changed = True
            refresh_witnesses()
            for t in net.receives:
                if t.message in witness_send and t.source in C and t.target in C:
                    have, new = (t.target, t.source) if backward else (t.source, t.target)
                    if have in R and new not in R:
                        R.add(new)
                        order.append((i, new, ("receive", t, *witness_send[t.message])))
                        changed = True
            refresh_witnesses()
    return tuple(frozenset(r) for r in reached), order


def closure_path(net: BroadcastNetwork, constraint: Sequence[frozenset[int]],
                 seeds: Sequence[frozenset[int]], *, backward: bool = False
                 ) -> tuple[SetTuple, list[EdgeCertificate]]:
    """Closure of ``seeds`` under ``constraint`` together with a certified path.

    Forward: a growing path from ``seeds`` to the closure, one edge per added
    state. Backward: a shrinking path from the closure down to ``seeds``,
    deleting states in reverse order of insertion.
    """
    constraint = tuple(frozenset(c) for c in constraint)
    seeds = tuple(frozenset(x) for x in seeds)
    m = len(seeds)
    result, order = _traced_closure(net, constraint, seeds, backward)
    path = []
    if not backward:
        for i, _state, reason in order:
            if reason[0] == "send":
                path.append(EdgeCertificate.plain(m, i, reason[1]))
            else:
                _, t, ell, witness = reason
                path.append(EdgeCertificate.plain(m, ell, witness, gens={i: frozenset([t.target])}))
    else:
        # A state's reason points at states inserted earlier, which are
        # still present when the state itself is deleted.
        for i, _state, reason in reversed(order):
            if reason[0] == "send":
                path.append(EdgeCertificate.plain(m, i, reason[1], drop=True))
            else:
                _, t, ell, witness = reason
                path.append(EdgeCertificate.plain(
                    m, ell, witness, gens={i: frozenset([t.target])}, kills={i: frozenset([t.source])}))
    return result, path


def extract_cycle_from_gfp(net: BroadcastNetwork, trace: FixedPointTrace) -> SymbolicWitness:
    """Build a certified grow-then-shrink cycle from a non-trivial fixed point."""
    loop = internal_send(net, trace.iterates[-1])
    if loop is None:
        raise TrivialFixedPoint("no send transition lies inside a component of the fixed point")
    apex = trace.fixed_point
    sigma = singletons(trace.seeds)

    up_reached, increasing = closure_path(net, apex, sigma)
    down_reached, decreasing = closure_path(net, apex, sigma, backward=True)
    if up_reached != apex or down_reached != apex:
        raise TrivialFixedPoint("trace does not end in a fixed point")
    comp, t = loop
    increasing.append(EdgeCertificate.plain(len(apex), comp, t))

    out = SymbolicWitness(trace.seeds, increasing, decreasing, apex)
    check = replay(net, sigma, out.path)
    if check[len(increasing)] != apex or check[-1] != sigma:
        raise InvalidWitness("extracted cycle does not close")
    return out


def check_witness(net: BroadcastNetwork, witness: SymbolicWitness) -> list[str]:
    """Problems found when auditing ``witness``; empty when it is sound."""
    problems = []
    sigma = singletons(witness.seeds)
    if witness.length < 1:
        problems.append("cycle has no edge")
    try:
        up = replay(net, sigma, witness.increasing)
        down = replay(net, up[-1], witness.decreasing)
    except EdgeRejected as exc:
        return problems + [str(exc)]
    if any(not leq(a, b) for a, b in zip(up, up[1:])):
        problems.append("increasing part shrinks somewhere")
    if any(not leq(b, a) for a, b in zip(down, down[1:])):
        problems.append("decreasing part grows somewhere")
    if up[-1] != tuple(witness.apex):
        problems.append("increasing part does not end at the apex")
    if down[-1] != sigma:
        problems.append("cycle does not return to the seed tuple")
    return problems


# -- concrete computations --------------------------------------------------

def apply_step(net: BroadcastNetwork, config: Configuration, step: Step) -> Configuration:
    """Successor of ``config`` under ``step``; raises ValueError if illegal."""
    t = step.sender_transition
    if not (0 <= step.sender < len(config)):
        raise ValueError(f"sender {step.sender} out of range")
    if t not in net.sends or t.message != step.message or config[step.sender] != t.source:
        raise ValueError(f"sender {step.sender} cannot take {t}")
    out = list(config)
    out[step.sender] = t.target
    for idx, r in step.receivers.items():
        if idx == step.sender or not (0 <= idx < len(config)):
            raise ValueError(f"bad receiver index {idx}")
        if r.is_send or r not in net.receives or r.message != step.message or config[idx] != r.source:
            raise ValueError(f"receiver {idx} cannot take {r}")
        out[idx] = r.target
    return tuple(out)


def run(net: BroadcastNetwork, comp: ConcreteComputation) -> list[Configuration]:
    configs = [tuple(comp.start)]
    for step in comp.steps:
        configs.append(apply_step(net, configs[-1], step))
    return configs


def validate_computation(net: BroadcastNetwork, comp: ConcreteComputation) -> bool:
    try:
        if any(not 0 <= q < net.n_states for q in comp.start):
            return False
        run(net, comp)
    except ValueError:
        return False
    return True


def _edge_plan(net, before: SetTuple, after: SetTuple, cert: EdgeCertificate):
    """Per component, the targets of ``after`` with their source and kind."""
    plan = []
    for i, (S, S2) in enumerate(zip(before, after)):
        entries = []
        for q in sorted(S2):
            if i == cert.sender_component and q == cert.sender_to:
                continue
            if q in cert.gens[i]:
                p = min(t.source for t in net.receives_by_message.get(cert.message, ())
                        if t.target == q and t.source in S)
                entries.append((q, p, receive(p, cert.message, q)))
            else:
                entries.append((q, q, None))
        plan.append(entries)
    return plan


def _demand_sizes(net, vertices, path, plans):
    ell = len(path)
    need = [dict.fromkeys(v_i, 1) for v_i in vertices[ell]]
    amounts = [None] * ell
    for j in range(ell - 1, -1, -1):
        cert = path[j]
        amt = [{q: need[i][q] for q in vertices[j + 1][i]} for i in range(len(need))]
        amounts[j] = amt
        prev = []
        for i, S in enumerate(vertices[j]):
            counts = dict.fromkeys(S, 0)
            for q, p, _ in plans[j][i]:
                counts[p] += amt[i][q]
            if i == cert.sender_component:
                counts[cert.sender_from] += amt[i][cert.sender_to]
            prev.append({p: max(1, c) for p, c in counts.items()})
        need = prev
    return [need[i][min(v_i)] for i, v_i in enumerate(vertices[0])], amounts


def concretize(net: BroadcastNetwork, witness: SymbolicWitness | Sequence[EdgeCertificate],
               seeds: Sequence[int] | None = None, *, cap_clients: int = 100_000,
               sizing: str = "proof") -> ConcreteComputation:
    """Turn a symbolic cycle into a run of finitely many clients returning to its start.

    Clients are split into one block per component. With ``sizing="proof"``
    every block starts with ``|Q|**len`` clients and each edge ``j`` moves
    ``|Q|**(len-j-1)`` clients to every state of the next vertex, which is
    always enough. ``sizing="demand"`` computes the smallest counts this
    construction gets away with by propagating requirements backwards;
    ``"auto"`` picks the proof sizing when it fits under ``cap_clients``.
    """
    if isinstance(witness, SymbolicWitness):
        path, seeds = witness.path, witness.seeds
    else:
        path = list(witness)
    if seeds is None:
        raise InvalidWitness("seeds are required")
    if not path:
        raise InvalidWitness("a cycle needs at least one edge")
    sigma = singletons(seeds)
    try:
        vertices = replay(net, sigma, path)
    except EdgeRejected as exc:
        raise InvalidWitness(str(exc)) from exc
    if vertices[-1] != sigma:
        raise InvalidWitness("path does not return to the seed tuple")

    m, ell, nq = len(seeds), len(path), net.n_states
    plans = [_edge_plan(net, vertices[j], vertices[j + 1], path[j]) for j in range(ell)]
    if sizing == "auto":
        sizing = "proof" if m * nq ** ell <= cap_clients else "demand"
    if sizing == "proof":
        if m * nq ** ell > cap_clients:
            raise CapExceeded(f"{m}*{nq}**{ell} clients exceed cap {cap_clients}")
        block_sizes = [nq ** ell] * m
        amounts = [[dict.fromkeys(vertices[j + 1][i], nq ** (ell - j - 1)) for i in range(m)]
                   for j in range(ell)]
    elif sizing == "demand":
        block_sizes, amounts = _demand_sizes(net, vertices, path, plans)
        if sum(block_sizes) > cap_clients:
            raise CapExceeded(f"{sum(block_sizes)} clients exceed cap {cap_clients}")
    else:
        raise ValueError(f"unknown sizing {sizing!r}")

    block_of = [i for i, size in enumerate(block_sizes) for _ in range(size)]
    start = tuple(seeds[i] for i in block_of)
    config = list(start)
    steps: list[Step] = []

    for j, cert in enumerate(path):
        a, t = cert.message, cert.sender_component
        pools: list[dict[int, list[int]]] = [{} for _ in range(m)]
        for idx in range(len(config) - 1, -1, -1):
            pools[block_of[idx]].setdefault(config[idx], []).append(idx)

        def take(i, p, k):
            pool = pools[i].get(p, [])
            if len(pool) < k:
                raise InvalidWitness(f"edge {j}: block {i} has too few clients in state {p}")
            return [pool.pop() for _ in range(k)]

        sender_t = cert.sender_transition
        n_sends = amounts[j][t][cert.sender_to]
        senders = take(t, cert.sender_from, 1)
        first = Step(a, senders[0], sender_t, {})
        for i in range(m):
            for q, p, r in plans[j][i]:
                moved = take(i, p, amounts[j][i][q])
                if r is not None:
                    first.receivers.update((idx, r) for idx in moved)
        senders += take(t, cert.sender_from, n_sends - 1)
        phase = [first] + [Step(a, idx, sender_t, {}) for idx in senders[1:]]

        cleanup: dict[int, Transition] = {}
        for i in range(m):
            for p in sorted(cert.kills[i]):
                q = min(post_receives(net, a, {p}) & cert.gens[i])
                cleanup.update((idx, receive(p, a, q)) for idx in pools[i].pop(p, []))
        drops = pools[t].pop(cert.sender_from, []) if cert.drop_sender_source else []
        tail = [Step(a, idx, sender_t, {}) for idx in sorted(drops)]
        (tail[0] if tail else phase[-1]).receivers.update(cleanup)

        for step in phase + tail:
            config = list(apply_step(net, tuple(config), step))
            steps.append(step)
        for idx, q in enumerate(config):
            if q not in vertices[j + 1][block_of[idx]]:
                raise InvalidWitness(f"edge {j}: client {idx} left in stray state {q}")

    if tuple(config) != start:
        raise InvalidWitness("computation does not return to its start")
    return ConcreteComputation(start, steps)


def prune_idle(comp: ConcreteComputation) -> ConcreteComputation:
    """Drop clients that never move and renumber the rest."""
    active = sorted(set().union(*(s.participants for s in comp.steps))) if comp.steps else []
    new_index = {old: new for new, old in enumerate(active)}
    steps = [Step(s.message, new_index[s.sender], s.sender_transition,
                  {new_index[k]: v for k, v in s.receivers.items()}) for s in comp.steps]
    return ConcreteComputation(tuple(comp.start[i] for i in active), steps)


# -- JSON -------------------------------------------------------------------

def _names(net, states) -> list[str]:
    return [net.states[q] for q in sorted(states)]


def certificate_to_json(net: BroadcastNetwork, cert: EdgeCertificate) -> dict[str, Any]:
    return {
        "message": net.messages[cert.message],
        "sender_component": cert.sender_component,
        "sender_from": net.states[cert.sender_from],
        "sender_to": net.states[cert.sender_to],
        "drop_sender_source": cert.drop_sender_source,
        "gens": [_names(net, g) for g in cert.gens],
        "kills": [_names(net, k) for k in cert.kills],
    }


def certificate_from_json(net: BroadcastNetwork, doc: dict[str, Any]) -> EdgeCertificate:
    st, msg = net.state_index, net.message_index
    return EdgeCertificate(
        msg[doc["message"]], int(doc["sender_component"]), st[doc["sender_from"]],
        st[doc["sender_to"]], bool(doc["drop_sender_source"]),
        tuple(frozenset(st[q] for q in g) for g in doc["gens"]),
        tuple(frozenset(st[q] for q in k) for k in doc["kills"]))


def witness_to_json(net: BroadcastNetwork, witness: SymbolicWitness,
                    concrete: ConcreteComputation | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "seeds": [net.states[q] for q in witness.seeds],
        "apex": [_names(net, c) for c in witness.apex],
        "increasing": [certificate_to_json(net, c) for c in witness.increasing],
        "decreasing": [certificate_to_json(net, c) for c in witness.decreasing],
    }
    if concrete is not None:
        doc["concrete"] = {
            "start": [net.states[q] for q in concrete.start],
            "steps": [{
                "msg": net.messages[s.message],
                "sender": s.sender,
                "sender_move": [net.states[s.sender_transition.source],
                                net.states[s.sender_transition.target]],
                "receivers": {str(k): [net.states[r.source], net.states[r.target]]
                              for k, r in sorted(s.receivers.items())},
            } for s in concrete.steps],
        }
    return doc


def witness_from_json(net: BroadcastNetwork, doc: dict[str, Any]
                      ) -> tuple[SymbolicWitness, ConcreteComputation | None]:
    st, msg = net.state_index, net.message_index
    witness = SymbolicWitness(
        tuple(st[q] for q in doc["seeds"]),
        [certificate_from_json(net, c) for c in doc["increasing"]],
        [certificate_from_json(net, c) for c in doc["decreasing"]],
        tuple(frozenset(st[q] for q in comp) for comp in doc["apex"]))
    concrete = None
    if "concrete" in doc:
        c = doc["concrete"]
        steps = []
        for s in c["steps"]:
            a = msg[s["msg"]]
            src, dst = s["sender_move"]
            steps.append(Step(a, int(s["sender"]), send(st[src], a, st[dst]),
                              {int(k): receive(st[f], a, st[t]) for k, (f, t) in s["receivers"].items()}))
        concrete = ConcreteComputation(tuple(st[q] for q in c["start"]), steps)
    return witness, concrete
