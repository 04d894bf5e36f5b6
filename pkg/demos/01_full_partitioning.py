#!/usr/bin/env python3
"""End-to-end walkthrough of the full partitioning pipeline.

Two triangles joined by a bridge edge form the classic sanity instance:
the best partition is the two triangles, scoring exactly 5/14. We solve
the relaxation, pick the hyperplane count adaptively, round 200 times,
and compare the certificate bundle against the brute-force optimum.
"""

import numpy as np

from modkit import (
    build_q,
    exact_full,
    modularity,
    parse_edge_list,
    round_full,
    solve_full_sdp,
)

EDGE_LIST = """
# two triangles {0,1,2} and {3,4,5} bridged by 2-3
0 1
1 2
2 0
3 4
4 5
5 3
2 3
"""

graph = parse_edge_list(EDGE_LIST, "undirected")
print(f"graph: n={graph.n}, m={graph.m} ({graph.variant})")

qm = build_q(graph)
print(f"positive coefficient mass q = {qm.q_mass:.6f} (always < 1)")

sol = solve_full_sdp(qm)
print(
    f"relaxation objective = {sol.objective:.9f} "
    f"(iterations={sol.iterations}, converged={sol.converged})"
)
print(f"mass averages: z+ = {sol.z_plus:.6f}, z- = {sol.z_minus:.6f}")

best, report = round_full(qm, sol, trials=200, seed=42)
print(f"\nadaptive hyperplane count k* = {report.k_star}")
print(f"best of 200 rounded partitions: {best.partition.communities()}")
print(f"best score                    = {best.score:.9f}")
print(f"expectation floor (per trial) = {report.expectation_floor:.9f}")
print(f"additive certificate          = {report.additive_certificate:.9f}")

truth = exact_full(qm)
print(f"\nbrute force over {truth.enumerated} partitions: opt = {truth.opt_value:.9f}")
assert abs(best.score - truth.opt_value) < 1e-9
assert np.isclose(modularity(qm, truth.opt_partition), truth.opt_value)
print("rounding recovered the exact optimum, certificate respected")
