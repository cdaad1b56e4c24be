"""
Deciding liveness of a broadcast network
========================================

Load a network from its text description, ask whether some client can
visit a final state infinitely often, and look at the fixed point that
answers the question.
"""
from pathlib import Path

import numpy as np

from broadcast_liveness import check_liveness, load_network, parse_network

HERE = Path(__file__).parent

# NET-3: q0 keeps broadcasting `a` to itself, and any client still in q0 may
# receive `a` and move to the final state qf.
net = load_network(HERE / "nets" / "net3.bn")
print(net.name, net.states, [net.format_transition(t) for t in net.transitions])

verdict = check_liveness(net)
print("liveness:", verdict.label)

# The verdict carries the Kleene trace. Rows are components, one per seed
# state, and columns are client states.
for t, it in enumerate(verdict.trace.iterates):
    print(f"iterate {t}:")
    print(np.asarray(it, dtype=int))

# A network whose only send is one-shot cannot run forever.
one_shot = parse_network("""
messages a
states q0 qf
initial q0
final qf
trans q0 !a qf
""")
print("one-shot liveness:", check_liveness(one_shot).label)

# Without final states the answer is NO before any fixed point is computed.
print("no finals:", check_liveness(net.with_finals([])).label)
