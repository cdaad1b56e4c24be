"""Liveness and fair-liveness checking for broadcast networks.

Broadcast networks run any number of identical finite-state clients that talk
by broadcasting messages: one client sends, any subset of the others receives.
The checks here are polynomial in the size of the client automaton.
"""
from .closures import post_closure, pre_closure
from .coverability import reachable_states
from .fair import check_fair_liveness, instrument
from .liveness import (FixedPointTrace, Verdict, check_liveness, gfp_constraint,
                       has_nontrivial_cycle)
from .model import (BroadcastNetwork, CapExceeded, ModelError, Transition,
                    validate_network)
from .textio import load_network, parse_network, serialize_network

__all__ = [
    "BroadcastNetwork", "CapExceeded", "FixedPointTrace", "ModelError", "Transition",
    "Verdict", "check_fair_liveness", "check_liveness", "gfp_constraint",
    "has_nontrivial_cycle", "instrument", "load_network", "parse_network",
    "post_closure", "pre_closure", "reachable_states", "serialize_network",
    "validate_network",
]
