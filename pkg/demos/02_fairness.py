"""
Fair liveness through instrumentation
=====================================

A run is fair when every client that moves infinitely often also visits a
final state infinitely often. NET-3 is live but not fair: the client that
keeps sending from q0 never reaches qf.
"""
from pathlib import Path

from broadcast_liveness import check_fair_liveness, check_liveness, instrument, load_network
from broadcast_liveness.textio import serialize_network

HERE = Path(__file__).parent

for name in ("net3", "net4"):
    net = load_network(HERE / "nets" / f"{name}.bn")
    print(f"{name}: liveness {check_liveness(net).label}, fair {check_fair_liveness(net).label}")

# The fair check runs the ordinary cycle test on a three-phase copy of the
# client. Each state has a base, a hat and a tilde copy. The fresh message
# __n is never received and only moves a client between phases.
net4 = load_network(HERE / "nets" / "net4.bn")
inst = instrument(net4)
print(serialize_network(inst.net_f))

nf = inst.net_f
print(f"{net4.n_states} states -> {nf.n_states}, "
      f"{len(net4.transitions)} transitions -> {len(nf.transitions)}")
for q in range(nf.n_states):
    print(f"  {nf.states[q]:>10}  phase={inst.phase_of[q]:<5}  base={net4.states[inst.project(q)]}")
