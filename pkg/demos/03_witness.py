"""
From a YES verdict to a concrete run
====================================

A YES answer comes with a symbolic cycle: a sequence of broadcast steps
on tuples of state sets that grows and then shrinks back. Unfolding it
yields a run of finitely many clients that returns to where it started,
so it can be repeated forever.
"""
import json
from pathlib import Path

from broadcast_liveness import check_liveness, load_network
from broadcast_liveness.witness import (check_witness, concretize, prune_idle, run,
                                        validate_computation, witness_to_json)

HERE = Path(__file__).parent
net = load_network(HERE / "nets" / "net4.bn")

verdict = check_liveness(net, witness=True)
w = verdict.witness
print("seeds:", [net.states[q] for q in w.seeds])
print("apex:", [sorted(net.states[q] for q in c) for c in w.apex])
print(f"{len(w.increasing)} growing edges, {len(w.decreasing)} shrinking edges")
print("audit:", check_witness(net, w) or "ok")

# Proof sizing gives every component |Q|**len clients. Demand sizing
# computes how many are really needed.
for sizing in ("proof", "demand"):
    comp = concretize(net, w, sizing=sizing)
    print(f"{sizing:>6}: {comp.n_clients} clients, {len(comp.steps)} steps, "
          f"valid={validate_computation(net, comp)}, closes={run(net, comp)[-1] == comp.start}")

comp = prune_idle(concretize(net, w, sizing="demand"))
for config, step in zip(run(net, comp), comp.steps):
    names = " ".join(net.states[q] for q in config)
    recv = ", ".join(f"{i}" for i in sorted(step.receivers)) or "-"
    print(f"  ({names})  client {step.sender} sends {net.messages[step.message]}, receivers: {recv}")

doc = witness_to_json(net, w, comp)
print(json.dumps(doc["increasing"][0], indent=2))
