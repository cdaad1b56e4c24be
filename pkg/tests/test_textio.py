import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from broadcast_liveness.generate import random_network
from broadcast_liveness.model import DanglingMessageRef, EmptyInitials
from broadcast_liveness.textio import NetworkSyntaxError, parse_network, serialize_network

NET1_TEXT = """\
# the first fixture
network net1
messages a b
states q0 qf
initial q0
final qf
trans q0 !a qf   # leaves the initial state
trans qf !b qf
"""


def test_parse_net1(n1):
    net = parse_network(NET1_TEXT)
    assert (net.n_states, net.n_messages, len(net.transitions)) == (2, 2, 2)
    assert net == n1


def test_undeclared_message_reports_line():
    text = "messages a\nstates q0 q1\ninitial q0\ntrans q0 !x q1\n"
    with pytest.raises(DanglingMessageRef) as info:
        parse_network(text)
    assert info.value.line == 4


def test_only_comments_is_empty_initials():
    with pytest.raises(EmptyInitials):
        parse_network("# nothing here\n   # still nothing\n")


@pytest.mark.parametrize("line", ["trans q0 a q1", "trans q0 !a", "bogus x", "states 9x", "network"])
def test_syntax_errors(line):
    text = f"messages a\nstates q0 q1\ninitial q0\n{line}\n"
    with pytest.raises(NetworkSyntaxError) as info:
        parse_network(text)
    assert info.value.line == 4


def test_net2_canonical_body(n2):
    text = serialize_network(n2)
    body = [ln for ln in text.splitlines() if not ln.startswith("network")]
    assert body == ["messages a", "states q0 qf", "initial q0", "final qf", "trans q0 !a qf"]


def test_roundtrip_fixtures(n1, n2, n3, n4):
    for net in (n1, n2, n3, n4):
        assert parse_network(serialize_network(net)) == net


def test_empty_finals_roundtrip(n1):
    net = n1.with_finals([])
    assert parse_network(serialize_network(net)) == net


def test_serialize_deterministic(n3):
    assert serialize_network(n3) == serialize_network(parse_network(serialize_network(n3)))


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 6), st.integers(1, 3), st.integers(0, 12), st.integers(0, 10**6), st.booleans())
def test_roundtrip_random(n, d, t, seed, marks):
    net = random_network(n, d, t, seed, random_marks=marks)
    text = serialize_network(net)
    assert parse_network(text) == net
    assert serialize_network(parse_network(text)) == text
