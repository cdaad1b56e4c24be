"""
Cross-checking against brute force
==================================

The explicit-state oracle fixes the number of clients, builds every
reachable configuration and looks for a cycle. A YES from the oracle at
any client count must be matched by the fixed-point algorithm. The
converse is not checked: some networks need more clients than the oracle
can afford.
"""
import time

from broadcast_liveness import check_fair_liveness, check_liveness
from broadcast_liveness.generate import desk_corpus
from broadcast_liveness.oracle import oracle_fair, oracle_liveness

corpus = desk_corpus(300, seed=7)
t0 = time.perf_counter()
rows = {"liveness": [0, 0, 0], "fair": [0, 0, 0]}
for net in corpus:
    for problem, algo, oracle in (("liveness", check_liveness, oracle_liveness),
                                  ("fair", check_fair_liveness, oracle_fair)):
        answer = algo(net).answer
        seen = any(oracle(net, k) for k in (1, 2, 3))
        rows[problem][0] += answer
        rows[problem][1] += seen
        rows[problem][2] += seen and not answer

print(f"{len(corpus)} networks in {time.perf_counter() - t0:.1f} s")
print(f"{'problem':<10}{'algorithm YES':>15}{'oracle YES':>12}{'violations':>12}")
for problem, (a, o, v) in rows.items():
    print(f"{problem:<10}{a:>15}{o:>12}{v:>12}")
