import json

import jsonschema
import pytest

from broadcast_liveness.closures import leq, singletons
from broadcast_liveness.generate import random_network
from broadcast_liveness.liveness import check_liveness, gfp_constraint
from broadcast_liveness.model import CapExceeded, receive, send
from broadcast_liveness.witness import (ConcreteComputation, EdgeCertificate, InvalidPath,
                                        InvalidWitness, RejectCondition1, RejectCondition2,
                                        RejectCondition3, Step, TrivialFixedPoint, check_witness,
                                        concretize, enabled_receives, extract_cycle_from_gfp,
                                        find_cycle_explicit, is_edge, is_normal_form,
                                        normalize_path, post_receives, prune_idle, replay, run,
                                        successors, validate_computation, witness_from_json,
                                        witness_to_json)

Q0, QF = 0, 1
A, B = 0, 1
S = frozenset


def test_receive_sets(n1, n3):
    assert post_receives(n3, A, {Q0}) == {QF}
    assert enabled_receives(n3, A, {Q0, QF}) == {Q0}
    assert post_receives(n1, A, {Q0, QF}) == S()


def test_edge_with_gen_and_kill(n3):
    t = send(Q0, A, Q0)
    cert = EdgeCertificate.plain(2, 0, t, gens={1: {QF}}, kills={1: {Q0}})
    assert is_edge(n3, (S({Q0}), S({Q0})), cert) == (S({Q0}), S({QF}))


def test_edge_rejections(n3):
    t = send(Q0, A, Q0)
    v = (S({Q0}), S({Q0}))
    with pytest.raises(RejectCondition1):
        is_edge(n3, (S({QF}), S({Q0})), EdgeCertificate.plain(2, 0, t))
    with pytest.raises(RejectCondition1):
        is_edge(n3, v, EdgeCertificate.plain(2, 0, receive(Q0, A, QF)))
    with pytest.raises(RejectCondition2) as exc:
        is_edge(n3, v, EdgeCertificate.plain(2, 0, t, gens={1: {Q0}}))
    assert exc.value.component == 1
    with pytest.raises(RejectCondition3) as exc:
        is_edge(n3, v, EdgeCertificate.plain(2, 0, t, kills={1: {Q0}}))
    assert exc.value.component == 1
    with pytest.raises(ValueError):
        is_edge(n3, v, EdgeCertificate.plain(1, 0, t))


def test_drop_sender_source(n4):
    cert = EdgeCertificate.plain(1, 0, send(Q0, A, QF), drop=True)
    assert is_edge(n4, (S({Q0}),), cert) == (S({QF}),)
    assert is_edge(n4, (S({Q0}),), EdgeCertificate.plain(1, 0, send(Q0, A, QF))) == (S({Q0, QF}),)


def test_edge_image_law():
    """Successors stay between S minus enabled receivers and S plus their targets."""
    for seed in range(40):
        net = random_network(3, 2, 6, seed=seed, random_marks=True)
        for v in [(S({0}), S({1, 2})), (S({0, 1, 2}),), (S({2}), S({0}))]:
            for cert, w in successors(net, v):
                assert is_edge(net, v, cert) == w
                for i, (Si, Wi) in enumerate(zip(v, w)):
                    extra = {cert.sender_to} if i == cert.sender_component else set()
                    lost = {cert.sender_from} if i == cert.sender_component and cert.drop_sender_source else set()
                    assert Wi <= Si | post_receives(net, cert.message, Si) | extra
                    assert Si - enabled_receives(net, cert.message, Si) - lost <= Wi


def test_explicit_cycles(n1, n2, n3):
    path = find_cycle_explicit(n1, [QF])
    assert len(path) == 1 and path[0].sender_transition == send(QF, B, QF)
    assert find_cycle_explicit(n2, [Q0, QF]) is None
    path = find_cycle_explicit(n3, [Q0, QF])
    assert replay(n3, singletons([Q0, QF]), path)[-1] == singletons([Q0, QF])


def test_explicit_caps():
    with pytest.raises(CapExceeded):
        find_cycle_explicit(random_network(7, 1, 3, seed=0), [0])
    with pytest.raises(CapExceeded):
        find_cycle_explicit(random_network(2, 1, 3, seed=0), [0] * 5)


def test_normalize_empty(n1):
    assert normalize_path(n1, [], singletons([Q0])) == []


def test_normalize_already_normal(n1):
    path = find_cycle_explicit(n1, [QF])
    out = normalize_path(n1, path, singletons([QF]))
    assert is_normal_form(replay(n1, singletons([QF]), out))


def test_normalize_swap(n4):
    """q0 -> q1 -> q0 by dropping the sender source is not grow-then-shrink."""
    sigma = singletons([Q0])
    path = [EdgeCertificate.plain(1, 0, send(Q0, A, QF), drop=True),
            EdgeCertificate.plain(1, 0, send(QF, A, Q0), drop=True)]
    assert not is_normal_form(replay(n4, sigma, path))
    out = normalize_path(n4, path, sigma)
    vertices = replay(n4, sigma, out)
    assert is_normal_form(vertices) and vertices[-1] == sigma
    assert max(vertices, key=lambda v: len(v[0]))[0] == {Q0, QF}


def test_normalize_kill_and_regain(n3):
    """Component 1 loses q0 to a receive and the path still closes."""
    sigma = singletons([Q0, Q0])
    t = send(Q0, A, Q0)
    path = [EdgeCertificate.plain(2, 0, t, gens={1: {QF}}),
            EdgeCertificate.plain(2, 0, t, kills={1: {Q0}}, gens={1: {QF}}),
            EdgeCertificate.plain(2, 1, send(Q0, A, Q0), gens={0: {QF}}, kills={0: {Q0}})]
    with pytest.raises(InvalidPath):
        normalize_path(n3, path, sigma)
    good = path[:2]
    out = normalize_path(n3, good, sigma)
    assert replay(n3, sigma, out)[-1] == replay(n3, sigma, good)[-1]


def test_normalize_random_cycles(corpus):
    count = 0
    for net in corpus[:200]:
        seeds = sorted(net.initials)[:2]
        path = find_cycle_explicit(net, seeds)
        if path is None:
            continue
        sigma = singletons(seeds)
        vertices = replay(net, sigma, normalize_path(net, path, sigma))
        assert is_normal_form(vertices) and vertices[-1] == sigma
        count += 1
    assert count > 20


def test_extract(n1, n3, n4):
    for net in (n1, n3, n4):
        witness = check_liveness(net, witness=True).witness
        assert check_witness(net, witness) == []
        vertices = replay(net, singletons(witness.seeds), witness.path)
        assert is_normal_form(vertices)


def test_extract_trivial(n2):
    with pytest.raises(TrivialFixedPoint):
        extract_cycle_from_gfp(n2, gfp_constraint(n2, [Q0, QF]))


def test_check_witness_flags_broken_cycle(n4):
    witness = check_liveness(n4, witness=True).witness
    assert witness.decreasing
    witness.decreasing = witness.decreasing[:-1]
    assert "cycle does not return to the seed tuple" in check_witness(n4, witness)
    witness.increasing, witness.decreasing = [], []
    assert "cycle has no edge" in check_witness(n4, witness)


def test_concretize_single_loop(n1):
    comp = concretize(n1, [EdgeCertificate.plain(1, 0, send(QF, B, QF))], [QF])
    assert comp.start == (QF, QF)
    assert len(comp.steps) == 1 and comp.steps[0].sender == 0
    assert validate_computation(n1, comp) and run(n1, comp)[-1] == comp.start
    assert prune_idle(comp).start == (QF,)


def test_concretize_rejects(n1):
    with pytest.raises(InvalidWitness):
        concretize(n1, [], [QF])
    with pytest.raises(InvalidWitness):
        concretize(n1, [EdgeCertificate.plain(1, 0, send(Q0, A, QF))], [Q0])
    with pytest.raises(CapExceeded):
        concretize(n1, [EdgeCertificate.plain(1, 0, send(QF, B, QF))], [QF], cap_clients=1)


@pytest.mark.parametrize("sizing", ["proof", "demand", "auto"])
def test_concretize_fixtures(sizing, n1, n3, n4):
    for net in (n1, n3, n4):
        witness = check_liveness(net, witness=True).witness
        comp = concretize(net, witness, sizing=sizing, cap_clients=10**6)
        assert validate_computation(net, comp)
        assert run(net, comp)[-1] == comp.start
        assert set(comp.start) == set(witness.seeds)


def test_validate_computation(n3):
    ok = Step(A, 0, send(Q0, A, Q0), {1: receive(Q0, A, QF)})
    assert validate_computation(n3, ConcreteComputation((Q0, Q0), [ok]))
    assert validate_computation(n3, ConcreteComputation((Q0,), []))
    wrong_msg = Step(A, 0, send(Q0, A, Q0), {1: receive(Q0, B, QF)})
    assert not validate_computation(n3, ConcreteComputation((Q0, Q0), [wrong_msg]))
    assert not validate_computation(n3, ConcreteComputation((QF, Q0), [ok]))
    assert not validate_computation(n3, ConcreteComputation((Q0, 7), []))


CERT = {
    "type": "object",
    "required": ["message", "sender_component", "sender_from", "sender_to",
                 "drop_sender_source", "gens", "kills"],
    "properties": {"gens": {"type": "array", "items": {"type": "array", "items": {"type": "string"}}}},
}
SCHEMA = {
    "type": "object",
    "required": ["seeds", "apex", "increasing", "decreasing"],
    "properties": {
        "seeds": {"type": "array", "items": {"type": "string"}, "minItems": 1},
        "increasing": {"type": "array", "items": CERT},
        "decreasing": {"type": "array", "items": CERT},
        "concrete": {
            "type": "object", "required": ["start", "steps"],
            "properties": {"steps": {"type": "array", "items": {
                "type": "object", "required": ["msg", "sender", "receivers"],
                "properties": {"sender": {"type": "integer", "minimum": 0},
                               "receivers": {"type": "object"}}}}},
        },
    },
}


def test_json_round_trip(n3):
    witness = check_liveness(n3, witness=True).witness
    comp = concretize(n3, witness, sizing="auto")
    doc = json.loads(json.dumps(witness_to_json(n3, witness, comp)))
    jsonschema.validate(doc, SCHEMA)
    back, concrete = witness_from_json(n3, doc)
    assert back == witness
    assert concrete == comp
    assert all(leq(a, b) for a, b in zip(singletons(back.seeds), back.apex))
