"""
How the check scales
====================

Random networks with five transitions per state, doubling the number of
states each time. The fixed point is polynomial, so the log-log slope of
runtime against size should stay small.
"""
import statistics
import time

import numpy as np

from broadcast_liveness import check_liveness
from broadcast_liveness.generate import random_network

sizes = [100, 200, 400, 800]
medians = []
for n in sizes:
    times, rounds = [], []
    for k in range(3):
        net = random_network(n, max(2, n // 10), 5 * n, seed=n + k)
        t0 = time.perf_counter()
        verdict = check_liveness(net)
        times.append(time.perf_counter() - t0)
        rounds.append(verdict.stats.get("iterations", 0))
    medians.append(statistics.median(times))
    print(f"|Q|={n:4d}  median {medians[-1] * 1000:8.1f} ms  Kleene steps {rounds}")

slope = np.polyfit(np.log(sizes), np.log(medians), 1)[0]
print(f"log-log slope: {slope:.2f}")
