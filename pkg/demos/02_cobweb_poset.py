"""
Counting chains in the Fibonacci cobweb poset
=============================================

"""

from fibroman.cobweb import (build, count_chains_from_point, count_chains_root_to_level,
                             enumerate_chains, export_dot, verify_observation3)

P = build(7)
print("level sizes:", P.level_sizes)

# chains from the root up to level n number n_F!
print([count_chains_root_to_level(P, n) for n in range(1, 8)])

# from a fixed point at level k they number F_n F_(n-1) ... F_(k+1)
print("level 3 -> level 6:", count_chains_from_point(P, 3, 6))

# brute-force enumeration agrees with the dynamic program
chains = enumerate_chains(P, 1, 5)
print(len(chains), "chains, first:", chains[0])

# falling factorial / F-factorial is the fibonomial
print(verify_observation3(6, 3))

# graphviz source of the first four levels (pipe into `dot -Tpng`)
print(export_dot(build(4)))
