"""Hamming codes as perfect dominating sets, and the shells they leave behind."""

import numpy as np

from hsk.domination import (
    Shell,
    coset_family,
    construct_hamming_pid,
    is_balanced,
    is_perfect_dominating,
    lift_pid,
)

for m in (2, 3, 4):
    code = construct_hamming_pid(m)
    n = code.base.n
    print(f"m={m}: Q_{n} code with {len(code)} words, perfect dominating: {is_perfect_dominating(code.base)}")

# Lifting the length-3 code gives the length-7 one.
lifted = lift_pid(construct_hamming_pid(2))
print("lifted size:", len(lifted), "first words:", lifted.base.members[:6])

# The n + 1 translates tile the cube, and each is balanced across every coordinate.
fam = coset_family(construct_hamming_pid(3))
hits = np.zeros(1 << 7, dtype=int)
for c in fam:
    hits[c.as_array()] += 1
print("cosets:", len(fam), "cover once:", bool((hits == 1).all()), "balanced:", all(map(is_balanced, fam)))

# Removing a code leaves an (n-1)-regular graph.
sh = Shell(7, fam[0])
print("survivors:", sh.survivor_count, "degrees:", sorted(set(sh.degrees().tolist())))
