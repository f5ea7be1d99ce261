#!/usr/bin/env python3
"""Minimizing subsets, the induction replay, and equality certificates.

Choose X inside -A minimizing K = |A+X|/|X|. Then |A+X+C| <= K |X+C| for
every C, and equality happens exactly when some Q inside C translates X+C
without overlap: X+C = X+Q with A+X and Q independent. The replay below
processes C one element at a time and logs the three per-step conditions that
together force equality.
"""

from sumdiff import (
    GroupSpec,
    GSet,
    brute_force_certificate,
    extract_certificate,
    find_minimizer,
    petridis_inequality,
    replay_trace,
)


def show(A, C):
    mn = find_minimizer(A, A.negate())
    print(f"A = {A}, base -A = {A.negate()}")
    print(f"  minimizer X = {mn.x}, K = {mn.k}, "
          f"strict on proper subsets: {mn.strict_on_proper_subsets}")
    rec = petridis_inequality(A, mn.x, mn.k, C)
    rel = "=" if rec.equality else "<"
    print(f"  |A+X+C| = {rec.lhs} {rel} K|X+C| = {rec.rhs}   (C = {C})")
    tr = replay_trace(A, mn.x, C)
    for st in tr.steps:
        print(f"    step {st.index}: c_k={st.element}  X_k={set(st.x_k) or '{}'}  "
              f"Y_k={set(st.y_k) or '{}'}  conditions={st.conditions}")
    cert = extract_certificate(tr)
    bf = brute_force_certificate(A, mn.x, C)
    print(f"  extracted certificate: {cert.q if cert else None}")
    print(f"  brute-force search:    {bf.q if bf else None}")
    print()


g5 = GroupSpec((5,))
g6 = GroupSpec((6,))

# strict case: the second step covers part of X but not all of it
show(GSet(g5, [0, 1]), GSet(g5, [0, 1]))

# equality case on a subgroup: every step contributes a disjoint block
show(GSet(g6, [0, 3]), GSet(g6, [0, 1]))
