#!/usr/bin/env python3
"""Exhaustive verdict sweeps: the regression oracle in action.

Each claim verifier returns holds / equality-case / violated instead of
raising, so sweeping a whole group both censuses the equality cases and
double-checks the implementation (a single "violated" would flag a bug).
"""

from sumdiff import CLAIM_IDS, GroupSpec, GSet, check_lower_chain, run_claim, subsets, sweep_claim

g = GroupSpec((10,))
print(f"sweeping all {2**g.order - 1} non-empty subsets of {g.label()}:")
for claim in CLAIM_IDS:
    summary = sweep_claim(claim, g)
    print(f"  {claim:5s}  holds={summary.counts['holds']:4d}  "
          f"equality-case={summary.counts['equality-case']:3d}  "
          f"violated={summary.counts['violated']}")

print("\nequality cases are exactly the cosets: 10+5+2+1 = 18 on Z10")

# one verdict in full: the five-link chain
v = check_lower_chain(GSet(GroupSpec((5,)), [0, 1]))
print(f"\nchain for A = 0,1@Z5 (X = {v.details['X']}, K = {v.ratios['K']}):")
for i, link in enumerate(v.details["links"], 1):
    tag = "tight" if link["slack"] == 0 else f"slack {link['slack']}"
    print(f"  link {i}: {link['lhs']} {link['rel']} {link['rhs']}   ({tag})")
print(f"outcome: {v.outcome}")

# verdicts are plain data, ready for JSON
print("\nas JSON-ready dict:")
print(run_claim("thm5", GSet(GroupSpec((8,)), [0, 1]), n=3).to_json_dict())
