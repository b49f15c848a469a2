"""Every even cycle length through every edge of a Q_7 shell, plus one Q_15 request."""

import time

from hsk.certify import exhaustive_bipancyclicity, validate_cycle
from hsk.cycles import shell_cycle
from hsk.domination import Shell, construct_hamming_pid

sh = Shell(7, construct_hamming_pid(3).base)
c = shell_cycle(sh, (1, 3), 12)
print("12-cycle through (1, 3):", list(c))
print("verdict:", validate_cycle(sh, list(c), (1, 3), 12))

t = time.perf_counter()
report = exhaustive_bipancyclicity(sh)
print(f"sweep: {report['edges']} edges x {report['lengths_per_edge']} lengths, "
      f"{len(report['failures'])} failures in {time.perf_counter() - t:.1f}s")

big = Shell(15, construct_hamming_pid(4).base)
u = int(big.survivors()[1000])
w = next(u ^ (1 << i) for i in range(15) if big.alive_mask()[u ^ (1 << i)])
t = time.perf_counter()
ham = shell_cycle(big, (u, w), big.survivor_count)
ok = validate_cycle(big, list(ham), (u, w), big.survivor_count).valid
print(f"Q_15 spanning cycle through ({u}, {w}): length {len(ham)}, valid {ok}, "
      f"{time.perf_counter() - t:.2f}s")
