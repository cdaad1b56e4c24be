import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from broadcast_liveness.closures import (BACKWARD, FORWARD, ArityMismatch, SeedOutsideConstraint,
                                         leq, post_closure, pre_closure, saturate, to_matrix)
from broadcast_liveness.generate import random_network
from broadcast_liveness.witness import closure_path, replay
from reference import reference_closure

Q = frozenset({0, 1})
q0, qf = frozenset({0}), frozenset({1})


# Expected tuples below were produced by reference_closure (tests/reference.py).

def test_post_net3_unconstrained(n3):
    assert post_closure(n3, (Q, Q), (q0, qf)) == (Q, qf)
    assert reference_closure(n3, (Q, Q), (q0, qf)) == (Q, qf)


def test_post_net3_constrained(n3):
    assert post_closure(n3, (q0, Q), (q0, qf)) == (q0, qf)


def test_pre_net3_single(n3):
    assert pre_closure(n3, (Q,), (qf,)) == (qf,)


def test_pre_net3_pair(n3):
    assert pre_closure(n3, (Q, Q), (q0, qf)) == (q0, Q)


def test_empty_seeds(n1, n3):
    for net in (n1, n3):
        empty = (frozenset(), frozenset())
        assert post_closure(net, (Q, Q), empty) == empty
        assert pre_closure(net, (Q, Q), empty) == empty


def test_seeds_equal_constraint(n3):
    assert pre_closure(n3, (Q, q0), (Q, q0)) == (Q, q0)
    assert post_closure(n3, (Q, q0), (Q, q0)) == (Q, q0)


def test_errors(n3):
    with pytest.raises(ArityMismatch):
        post_closure(n3, (Q,), (q0, qf))
    with pytest.raises(SeedOutsideConstraint):
        pre_closure(n3, (q0,), (qf,))


def random_instance(rng, n_states=3, m=3):
    net = random_network(rng.randint(1, n_states), rng.randint(1, 2), rng.randint(0, 7),
                         rng=rng, random_marks=True)
    n = net.n_states
    m = rng.randint(1, m)
    C = tuple(frozenset(q for q in range(n) if rng.random() < 0.7) for _ in range(m))
    X = tuple(frozenset(q for q in c if rng.random() < 0.4) for c in C)
    return net, C, X


@pytest.mark.parametrize("direction", [FORWARD, BACKWARD])
def test_agrees_with_reference(direction):
    rng = random.Random(11)
    fn = post_closure if direction == FORWARD else pre_closure
    for _ in range(600):
        net, C, X = random_instance(rng)
        assert fn(net, C, X) == reference_closure(net, C, X, backward=direction == BACKWARD)


@pytest.mark.parametrize("fn", [post_closure, pre_closure])
def test_bounds_idempotence_monotonicity(fn):
    rng = random.Random(5)
    for _ in range(300):
        net, C, X = random_instance(rng)
        R = fn(net, C, X)
        assert leq(X, R) and leq(R, C)
        assert fn(net, C, R) == R
        # grow the seeds inside C
        X2 = tuple(x | frozenset(q for q in c if rng.random() < 0.3) for x, c in zip(X, C))
        assert leq(R, fn(net, C, X2))
        # grow the constraint
        C2 = tuple(c | frozenset(q for q in range(net.n_states) if rng.random() < 0.3) for c in C)
        assert leq(R, fn(net, C2, X))


def test_round_guard():
    rng = random.Random(3)
    for _ in range(300):
        net, C, X = random_instance(rng)
        m, n = len(C), net.n_states
        for direction in (FORWARD, BACKWARD):
            _, rounds = saturate(net, to_matrix(C, n), to_matrix(X, n), direction)
            assert rounds <= m * n + 1


def test_strategy_independent():
    """Reference enumerator with shuffled component and rule order gives the same tuple."""
    rng = random.Random(8)
    for _ in range(200):
        net, C, X = random_instance(rng)
        perm = list(range(len(C)))
        rng.shuffle(perm)
        permuted = reference_closure(net, tuple(C[p] for p in perm), tuple(X[p] for p in perm))
        direct = post_closure(net, C, X)
        assert tuple(direct[p] for p in perm) == permuted


def test_graph_path_soundness(corpus):
    """post/pre closures are reachable by monotone, certified graph paths inside the constraint."""
    rng = random.Random(17)
    for net in corpus[:250]:
        n = net.n_states
        for m in (1, 2, 3):
            C = tuple(frozenset(q for q in range(n) if rng.random() < 0.8) for _ in range(m))
            X = tuple(frozenset(q for q in c if rng.random() < 0.4) for c in C)
            post, up = closure_path(net, C, X)
            assert post == post_closure(net, C, X)
            vs = replay(net, X, up)
            assert vs[-1] == post
            assert all(leq(a, b) and leq(b, C) for a, b in zip(vs, vs[1:]))

            pre, down = closure_path(net, C, X, backward=True)
            assert pre == pre_closure(net, C, X)
            vs = replay(net, pre, down)
            assert vs[-1] == X
            assert all(leq(b, a) and leq(a, C) for a, b in zip(vs, vs[1:]))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10**6))
def test_matrix_roundtrip(seed):
    rng = random.Random(seed)
    net, C, X = random_instance(rng)
    mat = to_matrix(C, net.n_states)
    assert mat.dtype == np.bool_
    assert tuple(frozenset(np.flatnonzero(r).tolist()) for r in mat) == C


def test_exhaustive_small_net(n3):
    """All seed/constraint pairs over two components of NET-3."""
    subsets = [frozenset(s) for r in range(3) for s in itertools.combinations([0, 1], r)]
    for C in itertools.product(subsets, repeat=2):
        for X in itertools.product(subsets, repeat=2):
            if leq(X, C):
                assert post_closure(n3, C, X) == reference_closure(n3, C, X)
                assert pre_closure(n3, C, X) == reference_closure(n3, C, X, backward=True)
