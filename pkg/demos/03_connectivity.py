"""Vertex connectivity of faulty cubes via max flow on the split graph."""

from hsk.connectivity import (
    FlowGraph,
    random_strongly_independent,
    sample_pairs,
    verify_connectivity_at_least,
    vertex_connectivity,
)
from hsk.domination import Shell, construct_hamming_pid, construct_total_pd

sh = Shell(7, construct_hamming_pid(3).base)
print("Q_7 shell connectivity:", vertex_connectivity(sh))

# Asking for more than the truth returns a small separator as a witness.
res = verify_connectivity_at_least(sh, 7)
print("at least 7?", res.ok, "separator:", res.witness["separator"])

# Sparse faults spread far apart cost only one unit of connectivity.
for seed in range(3):
    F = random_strongly_independent(6, 5, seed)
    print("faults", F.members, "-> connectivity", vertex_connectivity(Shell(6, F)))

tpd = Shell(6, construct_total_pd(6))
print("total dominating shell in Q_6:", vertex_connectivity(tpd))

g = FlowGraph(Shell(15, construct_hamming_pid(4).base))
s, t = sample_pairs(g.shell, 1, seed=1)[0]
print(f"Q_15 shell: {g.max_paths(s, t)} disjoint paths between {s} and {t}")
