"""Factorizations of the Heisenberg group E(27), pair by pair.

E(p^3) is the extraspecial group of order p^3 and exponent p (upper
unitriangular 3x3 matrices over the p-element field).  Its lattice has
p^2 + 2p + 4 subgroups and its 2p^3 + 5p^2 + 5p + 7 factorization pairs
split into five structural families, which this script counts directly
from the enumerated lattice.
"""

import json
from collections import Counter

from facnum import (
    enumerate_subgroups,
    f2_heisenberg_p3,
    frattini_index,
    heisenberg_p3,
    lattice_document,
    list_factorizations,
)


def main():
    p = 3
    G = heisenberg_p3(p)
    lat = enumerate_subgroups(G)
    print(f"{G.label}: order {G.order}, |L| = {len(lat)} (= p^2+2p+4 = {p * p + 2 * p + 4})")

    pairs = list_factorizations(lat)
    print(f"factorization pairs: {len(pairs)} (closed form {f2_heisenberg_p3(p)})")

    phi = frattini_index(lat)
    print(f"Frattini subgroup: member {phi}, order {lat.subgroups[phi].order}")

    full = lat.index_of_full
    buckets = Counter()
    for i, j in pairs:
        oi, oj = lat.subgroups[i].order, lat.subgroups[j].order
        if oi == 1 or oj == 1:
            buckets["(1, G) in both orders"] += 1
        elif i == full and j == full:
            buckets["(G, G)"] += 1
        elif phi in (i, j):
            buckets["(Phi, G) in both orders"] += 1
        elif oi == p or (i == full and oj == p):
            buckets["led by a non-central minimal"] += 1
        else:
            buckets["led by a maximal"] += 1
    print("\ncensus:")
    for name, count in buckets.items():
        print(f"  {count:>3}  {name}")
    print(f"\nexpected: 2 + p(p+1)(p+2) + 2 + (p+1)(p^2+p+2) + 1 = "
          f"{2 + p * (p + 1) * (p + 2) + 2 + (p + 1) * (p * p + p + 2) + 1}")

    print("\nlattice export (JSON, truncated):")
    doc = lattice_document(lat)
    doc["subgroups"] = doc["subgroups"][:4] + ["..."]
    doc["mobius_to_top"] = doc["mobius_to_top"][:4] + ["..."]
    print(json.dumps(doc, indent=2))


if __name__ == "__main__":
    main()
